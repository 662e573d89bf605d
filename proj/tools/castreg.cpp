// SPDX-License-Identifier: Apache-2.0
// castreg: command-line front end.
//
// exit status: 0 ok, 1 a checked property is false, 2 bad input, 3 construction stuck

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "castreg/analyze.hpp"
#include "castreg/bounds.hpp"
#include "castreg/castelnuovo.hpp"
#include "castreg/error.hpp"
#include "castreg/generators.hpp"
#include "castreg/hilbert.hpp"
#include "castreg/io.hpp"
#include "castreg/position.hpp"

using namespace castreg;

namespace {

struct FieldOpts {
  std::uint64_t p = 0;
  unsigned e = 1;
  std::vector<std::uint64_t> modulus;

  void add_to(CLI::App* app) {
    app->add_option("--field", p, "characteristic p")->required();
    app->add_option("--e", e, "extension degree");
    app->add_option("--modulus", modulus, "modulus coefficients m0,...,me")->delimiter(',');
  }

  Field make() const {
    if (modulus.empty()) return Field::make(p, e);
    return Field::make(p, e, modulus);
  }
};

std::string fmt_param(const CurveParam& t) { return t ? std::to_string(t->value) : "inf"; }

CurveParam parse_param(const std::string& s) {
  if (s == "inf") return std::nullopt;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used);
    if (used == s.size()) return Elem{v};
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::BadParams, "bad parameter '" + s + "'");
}

std::map<std::string, std::int64_t> parse_named(const std::vector<std::string>& items) {
  std::map<std::string, std::int64_t> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::BadParams, "expected name=value, got '" + item + "'");
    try {
      out[item.substr(0, eq)] = std::stoll(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw Error(ErrorCode::BadParams, "bad value in '" + item + "'");
    }
  }
  return out;
}

std::optional<std::int64_t> lookup(const std::map<std::string, std::int64_t>& m, const char* key) {
  const auto it = m.find(key);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

void write_out(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::BadParams, "cannot write " + path);
  out << text;
}

PointConfig load(const std::string& path) { return parse_pcfg(read_file(path)); }

const char* yes_no(bool b) { return b ? "true" : "false"; }

int exit_code_for(ErrorCode code) { return code == ErrorCode::ConstructionStuck ? 3 : 2; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Index of regularity of finite point sets, separators and the arithmetic around them"};
  app.require_subcommand(1);
  int status = 0;

  // gen
  auto* gen = app.add_subcommand("gen", "generate a configuration (pcfg on stdout or --out)");
  gen->require_subcommand(1);
  std::string out_path;

  FieldOpts rnc_field;
  std::size_t rnc_n = 0;
  std::vector<std::string> rnc_params;
  auto* gen_rnc_cmd = gen->add_subcommand("rnc", "points on the rational normal curve");
  rnc_field.add_to(gen_rnc_cmd);
  gen_rnc_cmd->add_option("--n", rnc_n, "ambient dimension N")->required();
  gen_rnc_cmd->add_option("--params", rnc_params, "parameters, comma separated; 'inf' for infinity")
      ->required()
      ->delimiter(',');
  gen_rnc_cmd->add_option("--out", out_path);
  gen_rnc_cmd->callback([&] {
    std::vector<CurveParam> params;
    for (const auto& s : rnc_params) params.push_back(parse_param(s));
    write_out(emit_pcfg(gen_rnc(rnc_field.make(), rnc_n, params)), out_path);
  });

  unsigned f2_e = 1;
  std::size_t f2_n = 0, f2_k = 0, f2_budget = kDefaultBudget;
  std::uint64_t f2_seed = 0;
  std::string f2_mode = "projective";
  auto* gen_f2 = gen->add_subcommand("f2linear", "F2-linear sets over GF(2^e)");
  gen_f2->add_option("--e", f2_e)->required();
  gen_f2->add_option("--n", f2_n)->required();
  gen_f2->add_option("--k", f2_k, "F2-dimension (affine mode)");
  gen_f2->add_option("--seed", f2_seed);
  gen_f2->add_option("--budget", f2_budget);
  gen_f2->add_option("--mode", f2_mode)->check(CLI::IsMember({"affine", "projective"}));
  gen_f2->add_option("--out", out_path);
  gen_f2->callback([&] {
    const auto mode = f2_mode == "affine" ? F2Mode::Affine : F2Mode::Projective;
    write_out(emit_pcfg(gen_f2linear(f2_e, f2_n, f2_k, f2_seed, mode, f2_budget)), out_path);
  });

  FieldOpts sec_field;
  std::vector<std::uint64_t> sec_exps, sec_hyp;
  auto* gen_sec = gen->add_subcommand("section", "hyperplane section of a monomial curve");
  sec_field.add_to(gen_sec);
  gen_sec->add_option("--exponents", sec_exps, "a1,...,a(N+1)")->required()->delimiter(',');
  gen_sec->add_option("--hyperplane", sec_hyp, "c0,...,c(N+1)")->required()->delimiter(',');
  gen_sec->add_option("--out", out_path);
  gen_sec->callback([&] {
    std::vector<Elem> h;
    for (auto c : sec_hyp) h.push_back(Elem{c});
    const auto res = gen_monomial_curve_section(sec_field.make(), sec_exps, h);
    std::ostringstream os;
    os << "# roots " << res.roots << " degree " << res.degree << " split " << yes_no(res.split) << "\n# params";
    for (const auto& t : res.params) os << ' ' << fmt_param(t);
    os << '\n' << emit_pcfg(res.config);
    write_out(os.str(), out_path);
  });

  FieldOpts rnd_field;
  std::size_t rnd_n = 0, rnd_d = 0, rnd_budget = kDefaultBudget;
  std::uint64_t rnd_seed = 0;
  auto* gen_rnd = gen->add_subcommand("random", "random spanning points");
  rnd_field.add_to(gen_rnd);
  gen_rnd->add_option("--n", rnd_n)->required();
  gen_rnd->add_option("--d", rnd_d)->required();
  gen_rnd->add_option("--seed", rnd_seed);
  gen_rnd->add_option("--budget", rnd_budget);
  gen_rnd->add_option("--out", out_path);
  gen_rnd->callback([&] {
    write_out(emit_pcfg(gen_random(rnd_field.make(), rnd_n, rnd_d, rnd_seed, rnd_budget)), out_path);
  });

  std::string file;

  // hilbert
  std::optional<std::size_t> tmax;
  auto* hil = app.add_subcommand("hilbert", "Hilbert function and h-vector");
  hil->add_option("file", file)->required();
  hil->add_option("--tmax", tmax);
  hil->callback([&] {
    const auto h = hilbert_function(load(file), tmax);
    std::cout << "H";
    for (auto x : h.values) std::cout << ' ' << x;
    std::cout << "\nh_vector";
    for (auto x : h.h_vector) std::cout << ' ' << x;
    std::cout << "\ni_of_S " << h.index_of_regularity << "\nregularity " << h.regularity() << '\n';
  });

  // regularity
  auto* reg = app.add_subcommand("regularity", "index of regularity with a separator upper bound");
  reg->add_option("file", file)->required();
  reg->callback([&] {
    const auto config = load(file);
    const auto ub = regularity_upper_bound(config);
    const auto bound = ceil_div(static_cast<std::int64_t>(config.size()) - 1,
                                static_cast<std::int64_t>(config.ambient_dim()));
    std::cout << "i_of_S " << ub.index_of_regularity << "\nregularity " << ub.index_of_regularity + 1
              << "\nell_star " << ub.ell_star << "\nmethod " << to_string(ub.method) << "\nbound " << bound << '\n';
  });

  // position
  auto* pos = app.add_subcommand("position", "position classification");
  pos->add_option("file", file)->required();
  pos->callback([&] {
    const auto config = load(file);
    const auto c = classify_position(config);
    std::cout << "semi_uniform " << yes_no(c.semi_uniform) << '\n';
    if (c.semi_uniform) {
      std::cout << "v";
      for (auto x : c.profile.v) std::cout << ' ' << x;
      std::cout << "\ngrowth " << yes_no(growth_check(c.profile)) << '\n';
    } else if (c.profile.witness) {
      const auto& [a, b] = *c.profile.witness;
      std::cout << "witness_dim " << a.dim << "\nwitness_counts " << a.incident_count() << ' ' << b.incident_count()
                << '\n';
    }
    std::cout << "linear_general " << yes_no(c.linear_general) << "\nuniform "
              << (c.uniform ? yes_no(*c.uniform) : "unknown") << "\ndichotomy " << to_string(c.dichotomy) << '\n';
  });

  // separate
  std::size_t sep_point = 0;
  std::string sep_method = "auto";
  std::optional<std::size_t> sep_degree;
  auto* sep = app.add_subcommand("separate", "separator certificate for one point (sepcert)");
  sep->add_option("file", file)->required();
  sep->add_option("--point", sep_point)->required();
  sep->add_option("--method", sep_method)
      ->check(CLI::IsMember({"auto", "linalg", "greedy", "lemma21", "lemma22", "plane"}));
  sep->add_option("--degree", sep_degree, "degree for linalg (default: least that works)");
  sep->add_option("--out", out_path);
  sep->callback([&] {
    const auto config = load(file);
    std::optional<SeparatorCertificate> cert;
    if (sep_method == "linalg") {
      if (sep_degree) {
        cert = separator_linear_algebra(config, sep_point, *sep_degree);
      } else {
        for (std::size_t l = 0; !cert && l < config.size(); ++l) cert = separator_linear_algebra(config, sep_point, l);
      }
      if (!cert) throw Error(ErrorCode::ConstructionStuck, "no separator at the requested degree");
    } else if (sep_method == "greedy") {
      cert = separator_greedy(config, sep_point);
    } else {
      const SeparatorContext ctx(config);
      if (sep_method == "lemma21") cert = separator_lemma_v1ge3(ctx, sep_point);
      else if (sep_method == "lemma22") cert = separator_lemma_v1eq2(ctx, sep_point);
      else if (sep_method == "plane") cert = separator_plane(ctx, sep_point);
      else cert = separator_auto(ctx, sep_point);
    }
    write_out(emit_sepcert(*cert), out_path);
  });

  // verify
  std::string cert_path;
  auto* ver = app.add_subcommand("verify", "check a separator certificate");
  ver->add_option("file", file)->required();
  ver->add_option("--cert", cert_path)->required();
  ver->callback([&] {
    const auto config = load(file);
    const auto cert = parse_sepcert(read_file(cert_path), config.field());
    const auto v = verify_certificate(config, cert);
    std::cout << "ok " << yes_no(v.ok) << "\nreason " << to_string(v.reason) << '\n';
    if (v.point) std::cout << "at " << *v.point << '\n';
    if (!v.ok) status = 1;
  });

  // bound
  auto* bnd = app.add_subcommand("bound", "integer arithmetic of the separator bounds");
  bnd->require_subcommand(1);

  std::string lemma_name;
  std::vector<std::string> named;
  auto* margin = bnd->add_subcommand("margin", "margin of a lemma inequality (>= 0 iff it holds)");
  margin->add_option("--lemma", lemma_name)->required();
  margin->add_option("--params", named, "name=value,... among d v w N k")->required()->delimiter(',');
  margin->callback([&] {
    const auto m = parse_named(named);
    for (const auto& [k, _] : m)
      if (k != "d" && k != "v" && k != "w" && k != "N" && k != "k")
        throw Error(ErrorCode::BadParams, "unknown parameter " + k);
    MarginQuery q{parse_margin_lemma(lemma_name), lookup(m, "d"), lookup(m, "v"), lookup(m, "w"), lookup(m, "N"),
                  lookup(m, "k")};
    const auto value = lemma_margin(q);
    std::cout << "margin " << value << "\nholds " << yes_no(value >= 0) << '\n';
  });

  std::int64_t search_n = 0, search_dmax = 200;
  bool feasibility = false;
  std::string domain = "growth";
  auto* search = bnd->add_subcommand("search", "tuples with negative margin");
  search->add_option("--lemma", lemma_name)->required();
  search->add_option("--n", search_n)->required();
  search->add_option("--dmax", search_dmax);
  search->add_flag("--feasibility", feasibility);
  search->add_option("--domain", domain)->check(CLI::IsMember({"growth", "bounds"}));
  search->callback([&] {
    const auto dom = domain == "bounds" ? ExceptionDomain::Bounds : ExceptionDomain::GrowthConsistent;
    const auto rows = exception_search(parse_margin_lemma(lemma_name), search_n, search_dmax, feasibility, dom);
    std::cout << "# window d <= " << search_dmax << " domain " << domain << "\n# d v w margin feasible\n";
    for (const auto& t : rows)
      std::cout << t.d << ' ' << t.v << ' ' << t.w << ' ' << t.margin << ' ' << yes_no(t.feasible) << '\n';
    std::cout << "count " << rows.size() << '\n';
  });

  BoundQuery bq;
  std::string variant = "a";
  auto* p31 = bnd->add_subcommand("prop31", "regularity bound from degree, codimension and k");
  p31->add_option("--deg", bq.deg)->required();
  p31->add_option("--codim", bq.codim)->required();
  p31->add_option("--dim", bq.dim)->required();
  p31->add_option("--k", bq.k)->required();
  p31->add_option("--variant", variant)->check(CLI::IsMember({"a", "b"}));
  p31->callback([&] {
    bq.variant = variant == "b" ? Prop31Variant::B : Prop31Variant::A;
    std::cout << "bound " << prop31_bound(bq) << '\n';
  });

  std::string context;
  auto* thr = bnd->add_subcommand("threshold", "degree thresholds");
  thr->add_option("--context", context)->required();
  thr->add_option("--params", named)->required()->delimiter(',');
  thr->callback([&] {
    const bool ok = threshold_check(parse_threshold_context(context), parse_named(named));
    std::cout << "holds " << yes_no(ok) << '\n';
    if (!ok) status = 1;
  });

  // rncfit
  auto* fit = app.add_subcommand("rncfit", "does the configuration lie on a rational normal curve");
  fit->add_option("file", file)->required();
  fit->callback([&] {
    const auto m = rnc_membership(load(file));
    std::cout << "member " << yes_no(m.member) << '\n';
    if (m.member) {
      std::cout << "params";
      for (const auto& t : m.params) std::cout << ' ' << fmt_param(t);
      std::cout << '\n';
    }
  });

  // analyze
  auto* ana = app.add_subcommand("analyze", "equality test against the rational normal curve criterion");
  ana->add_option("file", file)->required();
  ana->callback([&] {
    const auto r = analyze(load(file));
    std::cout << emit_report(r);
    if (r.discrepancy) status = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  }
  return status;
}
