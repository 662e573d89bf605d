// Acceptance checks, one line per criterion:
//   PASS|FAIL <n> <name>: <detail> (<seconds>s)
// Usage: acceptance --cli <path-to-castreg> [--allow <n>]...
// Exit status counts failing criteria that were not allowed.

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "castreg/bounds.hpp"
#include "castreg/castelnuovo.hpp"
#include "castreg/error.hpp"
#include "castreg/generators.hpp"
#include "castreg/hilbert.hpp"
#include "castreg/position.hpp"
#include "oracles.hpp"

using namespace castreg;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::size_t bound_of(const PointConfig& c) {
  return static_cast<std::size_t>(
      ceil_div(static_cast<std::int64_t>(c.size()) - 1, static_cast<std::int64_t>(c.ambient_dim())));
}

std::uint64_t next_prime_above(std::uint64_t n) {
  std::uint64_t p = n + 1;
  while (!oracle::trial_prime(p)) ++p;
  return p;
}

std::vector<CurveParam> random_params(const Field& f, std::size_t d, std::mt19937_64& rng, bool allow_inf) {
  std::set<CurveParam> seen;
  std::vector<CurveParam> out;
  while (out.size() < d) {
    CurveParam t;
    if (!(allow_inf && rng() % 8 == 0)) t = Elem{rng() % f.order()};
    if (seen.insert(t).second) out.push_back(t);
  }
  return out;
}

// ---- 1
Outcome rnc_equality() {
  std::size_t checked = 0;
  for (std::size_t n = 2; n <= 5; ++n) {
    for (std::size_t d = n + 2; d <= 40; ++d) {
      const Field f = Field::make(next_prime_above(d));
      std::vector<CurveParam> ps;
      for (std::uint64_t t = 0; t < d; ++t) ps.emplace_back(Elem{t});
      const auto c = gen_rnc(f, n, ps);
      const auto i = index_of_regularity(c);
      if (i != bound_of(c)) {
        return {false, "N=" + std::to_string(n) + " d=" + std::to_string(d) + ": i(S)=" + std::to_string(i) +
                           " but ceil((d-1)/N)=" + std::to_string(bound_of(c))};
      }
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " (N,d) pairs, i(S) = ceil((d-1)/N) in all"};
}

// Configurations from every generator, labelled.
std::vector<std::pair<std::string, PointConfig>> corpus() {
  std::vector<std::pair<std::string, PointConfig>> out;
  std::mt19937_64 rng(20261016);
  for (int i = 0; i < 24; ++i) {
    const std::size_t n = 2 + i % 3;
    const Field f = Field::make(i % 2 ? 101 : 31);
    const std::size_t d = n + 2 + rng() % (20 - n);
    out.emplace_back("rnc#" + std::to_string(i), gen_rnc(f, n, random_params(f, d, rng, true)));
  }
  for (unsigned e : {1u, 2u})
    for (std::size_t n : {2u, 3u, 4u})
      out.emplace_back("pg" + std::to_string(n) + "_e" + std::to_string(e), gen_f2linear(e, n, 0, 0, F2Mode::Projective));
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    out.emplace_back("affine5#" + std::to_string(seed), gen_f2linear(8, 3, 5, seed, F2Mode::Affine));
    out.emplace_back("affine4#" + std::to_string(seed), gen_f2linear(6, 3, 4, seed, F2Mode::Affine));
  }
  for (std::uint64_t seed = 0; seed < 16; ++seed) {
    const std::size_t n = 2 + seed % 2;
    out.emplace_back("random#" + std::to_string(seed), gen_random(Field::make(seed % 4 ? 101 : 7), n, 7 + seed % 9, seed));
  }
  // sections of (1 : t : t^2 : t^4) and (1 : t : t^3) over small fields
  const Field f16 = Field::make(2, 4);
  const Field f27 = Field::make(3, 3);
  int made = 0;
  for (std::uint64_t s = 0; s < 400 && made < 12; ++s) {
    const bool char2 = s % 2 == 0;
    const Field& f = char2 ? f16 : f27;
    const std::vector<std::uint64_t> exps = char2 ? std::vector<std::uint64_t>{1, 2, 4} : std::vector<std::uint64_t>{1, 3};
    std::vector<Elem> h;
    for (std::size_t i = 0; i < exps.size() + 1; ++i) h.push_back(Elem{rng() % f.order()});
    try {
      auto sec = gen_monomial_curve_section(f, exps, h);
      if (sec.config.size() < sec.config.ambient_dim() + 2) continue;
      out.emplace_back("section#" + std::to_string(s), std::move(sec.config));
      ++made;
    } catch (const Error&) {
    }
  }
  return out;
}

// ---- 2
Outcome semi_uniform_bound(const std::vector<std::pair<std::string, PointConfig>>& configs) {
  std::size_t semi = 0;
  for (const auto& [name, c] : configs) {
    const auto prof = position_profile(c);
    if (!prof.semi_uniform) continue;
    ++semi;
    const auto i = index_of_regularity(c);
    if (i > bound_of(c)) return {false, name + ": i(S)=" + std::to_string(i) + " exceeds the bound"};
    if (!growth_check(prof)) return {false, name + ": growth inequality fails"};
  }
  if (semi < 50) return {false, "only " + std::to_string(semi) + " semi-uniform instances"};
  return {true, std::to_string(semi) + " semi-uniform instances of " + std::to_string(configs.size()) +
                    ", bound and growth hold"};
}

// ---- 3
std::string show(const std::vector<ExceptionTuple>& ts) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < ts.size(); ++i) os << (i ? "," : "") << "(" << ts[i].d << "," << ts[i].v << "," << ts[i].w << ")";
  os << "}";
  return os.str();
}

Outcome exception_lists() {
  using T = std::tuple<std::int64_t, std::int64_t, std::int64_t>;
  auto triples = [](const std::vector<ExceptionTuple>& ts) {
    std::vector<T> out;
    for (const auto& t : ts) out.emplace_back(t.d, t.v, t.w);
    return out;
  };
  const std::vector<T> want4{{32, 15, 7}, {33, 15, 7}};
  const std::vector<T> want3{{25, 7, 3}, {25, 8, 3}, {25, 10, 3}, {25, 12, 3}, {28, 7, 3}};
  std::vector<std::string> bad;
  const auto n4 = exception_search(MarginLemma::L21, 4, 200, false);
  if (triples(n4) != want4) bad.push_back("N=4 gives " + show(n4));
  const auto n3 = exception_search(MarginLemma::L21, 3, 200, false);
  if (triples(n3) != want3) bad.push_back("N=3 gives " + show(n3));
  for (std::int64_t n = 3; n <= 6; ++n)
    if (!exception_search(MarginLemma::L21, n, 200, true).empty()) bad.push_back("N=" + std::to_string(n) + " feasible nonempty");
  for (std::int64_t n = 5; n <= 6; ++n)
    if (!exception_search(MarginLemma::L21, n, 200, false).empty()) bad.push_back("N=" + std::to_string(n) + " nonempty");
  if (bad.empty()) return {true, "N=3 five tuples, N=4 two tuples, all infeasible, N=5,6 empty"};
  std::string msg;
  for (const auto& b : bad) msg += (msg.empty() ? "" : "; ") + b;
  bool all_infeasible = true;
  for (const auto& t : n4) all_infeasible = all_infeasible && !t.feasible;
  return {false, msg + " (expected {(32,15,7),(33,15,7)}; extra tuples have negative margin, all infeasible: " +
                     (all_infeasible ? "yes" : "no") + ")"};
}

// ---- 4
Outcome power_of_two_margins() {
  for (std::int64_t k = 3; k <= 30; ++k) {
    const auto m = lemma_margin({MarginLemma::L22N3, {}, {}, {}, {}, k});
    if ((m < 0) != (k == 3 || k == 4)) return {false, "L22_N3 at k=" + std::to_string(k)};
  }
  for (std::int64_t k = 4; k <= 30; ++k)
    if (lemma_margin({MarginLemma::L22N4, {}, {}, {}, {}, k}) < 0) return {false, "L22_N4 at k=" + std::to_string(k)};
  std::size_t equalities = 0;
  for (std::int64_t n = 5; n <= 8; ++n)
    for (std::int64_t k = n; k <= 20; ++k) {
      const auto m = lemma_margin({MarginLemma::L22N5Plus, {}, {}, {}, n, k});
      if (m < 0) return {false, "L22_N5plus fails at N=" + std::to_string(n) + " k=" + std::to_string(k)};
      if (m == 0) {
        if (n != 5 || k != 5) return {false, "unexpected equality at N=" + std::to_string(n) + " k=" + std::to_string(k)};
        ++equalities;
      }
    }
  if (equalities != 1) return {false, "no equality at (5,5)"};
  return {true, "N=3 fails exactly at k=3,4; N=4 holds for 4..30; N>=5 holds, equality only at (5,5)"};
}

// ---- 5
Outcome plane_margins() {
  for (std::int64_t d = 24; d <= 500; ++d)
    if (lemma_margin({MarginLemma::L25, d, {}, {}, {}, {}}) < 0) return {false, "L25 fails at d=" + std::to_string(d)};
  if (lemma_margin({MarginLemma::L25, 23, {}, {}, {}, {}}) >= 0) return {false, "L25 holds at d=23"};
  std::size_t constrained = 0, all = 0;
  for (std::int64_t d = 9; d <= 500; ++d)
    for (std::int64_t v = 4; 2 * v + 1 <= d; ++v) {
      const bool holds = lemma_margin({MarginLemma::L24, d, v, {}, {}, {}}) >= 0;
      ++all;
      // lines through a point of S partition the other d-1 points into groups of v-1
      if ((d - 1) % (v - 1) != 0) {
        if (!holds) return {false, "L24 fails at unconstrained d=" + std::to_string(d) + " v=" + std::to_string(v)};
        continue;
      }
      ++constrained;
      if (!holds) return {false, "L24 fails at d=" + std::to_string(d) + " v=" + std::to_string(v)};
    }
  return {true, "L25 holds on 24..500, fails at 23; L24 holds on " + std::to_string(constrained) +
                    " consistent pairs (and all " + std::to_string(all) + " pairs)"};
}

// ---- 6
Outcome certificate_soundness(const std::vector<std::pair<std::string, PointConfig>>& configs) {
  std::size_t certs = 0;
  for (const auto& [name, c] : configs) {
    if (c.size() > 40) continue;
    const SeparatorContext ctx(c);
    const auto i = index_of_regularity(c);
    std::size_t worst = 0;
    for (std::size_t p = 0; p < c.size(); ++p) {
      // least degree separating p alone
      std::size_t least = 0;
      while (!separator_linear_algebra(c, p, least)) ++least;
      worst = std::max(worst, least);
      std::vector<SeparatorCertificate> list;
      list.push_back(separator_auto(ctx, p));
      try {
        list.push_back(separator_greedy(c, p));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::ConstructionStuck) throw;
      }
      const auto at_i = separator_linear_algebra(c, p, i);
      if (!at_i) return {false, name + ": no linear-algebra separator at i(S) for P=" + std::to_string(p)};
      list.push_back(*at_i);
      for (const auto& cert : list) {
        const auto v = verify_certificate(c, cert);
        if (!v.ok) return {false, name + ": certificate rejected (" + std::string(to_string(v.reason)) + ")"};
        if (cert.degree < least) return {false, name + ": certificate below the least separating degree"};
        ++certs;
      }
    }
    if (worst != i) return {false, name + ": max least separating degree " + std::to_string(worst) + " != i(S)"};
  }
  if (certs < 200) return {false, "only " + std::to_string(certs) + " certificates"};
  return {true, std::to_string(certs) + " certificates verified, all consistent with i(S)"};
}

// ---- 7
Outcome char2_profiles() {
  const auto pg3 = position_profile(gen_f2linear(1, 3, 0, 0, F2Mode::Projective));
  if (pg3.v != std::vector<std::size_t>{1, 3, 7}) return {false, "PG(3,2) profile"};
  const auto pg4c = gen_f2linear(1, 4, 0, 0, F2Mode::Projective);
  if (position_profile(pg4c).v != std::vector<std::size_t>{1, 3, 7, 15}) return {false, "PG(4,2) profile"};
  std::optional<std::uint64_t> seed;
  for (std::uint64_t s = 0; s < kDefaultBudget && !seed; ++s) {
    const auto prof = position_profile(gen_f2linear(8, 3, 5, s, F2Mode::Affine));
    if (prof.semi_uniform && prof.v == std::vector<std::size_t>{1, 2, 4}) seed = s;
  }
  if (!seed) return {false, "no affine seed with profile (1,2,4)"};
  const auto ub = regularity_upper_bound(pg4c);
  for (const auto& c : ub.certificates)
    if (!verify_certificate(pg4c, c).ok) return {false, "PG(4,2) certificate rejected"};
  if (ub.ell_star > 7) return {false, "PG(4,2) ell*=" + std::to_string(ub.ell_star)};
  return {true, "(1,3,7), (1,3,7,15); affine (1,2,4) at seed " + std::to_string(*seed) + "; PG(4,2) ell*=" +
                    std::to_string(ub.ell_star) + " via " + std::string(to_string(ub.method)) + ", i(S)=" +
                    std::to_string(ub.index_of_regularity)};
}

// ---- 8
Outcome rnc_roundtrip() {
  std::mt19937_64 rng(8);
  const Field f = Field::make(101);
  std::size_t members = 0, rejected = 0;
  for (int inst = 0; inst < 100; ++inst) {
    const std::size_t n = 2 + inst % 3;
    const std::size_t d = n + 4 + rng() % 9;
    const auto ps = random_params(f, d, rng, true);
    const auto c = gen_rnc(f, n, ps);
    if (!rnc_membership(c).member) return {false, "instance " + std::to_string(inst) + " not recognized"};
    ++members;

    // every point of the curve, for the off-curve test
    std::set<ProjectivePoint> curve;
    for (std::uint64_t t = 0; t <= f.order(); ++t) {
      std::vector<Elem> x(n + 1, f.zero());
      if (t == f.order()) {
        x[n] = f.one();
      } else {
        for (std::size_t i = 0; i <= n; ++i) x[i] = f.pow(Elem{t}, i);
      }
      curve.insert(normalize_point(f, x));
    }

    std::vector<std::vector<Elem>> raw;
    for (const auto& p : c.points()) raw.push_back(p.coords);
    const std::size_t j = rng() % d;
    while (true) {
      std::vector<Elem> x(n + 1);
      for (auto& e : x) e = Elem{rng() % f.order()};
      if (std::all_of(x.begin(), x.end(), [](Elem e) { return e.is_zero(); })) continue;
      const auto q = normalize_point(f, x);
      if (curve.count(q)) continue;
      raw[j] = q.coords;
      break;
    }
    if (rnc_membership(PointConfig::make(f, n, raw)).member) {
      return {false, "instance " + std::to_string(inst) + " accepted after replacing point " + std::to_string(j)};
    }
    ++rejected;
  }
  return {true, std::to_string(members) + " curve sets recognized, " + std::to_string(rejected) + " perturbed sets rejected"};
}

// ---- 9
Outcome prop31_calculators() {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 1000; ++i) {
    const std::int64_t codim = 1 + static_cast<std::int64_t>(rng() % 20);
    const std::int64_t deg = codim + 1 + static_cast<std::int64_t>(rng() % 500);
    const std::int64_t dim = 1 + static_cast<std::int64_t>(rng() % 10);
    const std::int64_t k = 1 + static_cast<std::int64_t>(rng() % 10);
    std::int64_t c = (deg - 1) / codim;
    if ((deg - 1) % codim) ++c;
    const std::int64_t a = c + k * dim;
    const std::int64_t b = c + k * dim - dim + 1;
    if (prop31_bound({deg, codim, dim, k, Prop31Variant::A}) != a) return {false, "variant a mismatch"};
    if (prop31_bound({deg, codim, dim, k, Prop31Variant::B}) != b) return {false, "variant b mismatch"};
  }
  return {true, "1000 random tuples agree for both variants"};
}

// ---- 10
std::pair<std::string, int> run(const std::string& cmd) {
  std::string out;
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  if (!pipe) return {"", -1};
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  return {out, pclose(pipe)};
}

Outcome cli_determinism(const std::string& cli) {
  if (cli.empty()) return {false, "no --cli given"};
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("castreg_acc_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string q = "'" + cli + "'";
  const std::string rnc = (dir / "rnc.pcfg").string(), pg = (dir / "pg.pcfg").string(),
                    cert = (dir / "cert.txt").string();
  run(q + " gen rnc --field 101 --n 3 --params 0,1,2,3,4,5,6,7,8,9,inf --out " + rnc);
  run(q + " gen f2linear --e 1 --n 4 --out " + pg);
  run(q + " separate " + pg + " --point 4 --out " + cert);
  const std::vector<std::string> cmds{
      q + " gen rnc --field 101 --n 3 --params 0,1,2,3,4,5,6,7,8,9,inf",
      q + " gen f2linear --e 8 --n 3 --k 5 --mode affine --seed 3",
      q + " gen f2linear --e 2 --n 3",
      q + " gen section --field 2 --e 4 --exponents 1,4 --hyperplane 6,1,1",
      q + " gen random --field 101 --n 2 --d 9 --seed 4",
      q + " hilbert " + rnc,
      q + " regularity " + pg,
      q + " position " + pg,
      q + " separate " + pg + " --point 4",
      q + " separate " + rnc + " --point 2 --method linalg",
      q + " separate " + rnc + " --point 2 --method greedy",
      q + " verify " + pg + " --cert " + cert,
      q + " bound margin --lemma L21 --params d=32,v=15,w=7,N=4",
      q + " bound search --lemma L21 --n 4 --dmax 200",
      q + " bound prop31 --deg 10 --codim 2 --dim 1 --k 1 --variant b",
      q + " bound threshold --context theorem23 --params N=4,d=26",
      q + " rncfit " + rnc,
      q + " analyze " + rnc,
      q + " analyze " + pg,
  };
  std::size_t ok = 0;
  std::string failure;
  for (const auto& cmd : cmds) {
    const auto a = run(cmd), b = run(cmd);
    if (a != b) {
      failure = "differs: " + cmd;
      break;
    }
    if (a.second != 0) {
      failure = "exit status " + std::to_string(a.second) + ": " + cmd + "\n" + a.first;
      break;
    }
    ++ok;
  }
  fs::remove_all(dir);
  if (!failure.empty()) return {false, failure};
  return {true, std::to_string(ok) + " commands byte-identical across reruns"};
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  std::set<int> allowed;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--cli" && i + 1 < argc) cli = argv[++i];
    else if (a == "--allow" && i + 1 < argc) allowed.insert(std::stoi(argv[++i]));
  }

  const auto configs = corpus();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"rnc-equality", rnc_equality},
      {"semi-uniform-bound", [&] { return semi_uniform_bound(configs); }},
      {"exception-lists", exception_lists},
      {"power-of-two-arithmetic", power_of_two_margins},
      {"plane-arithmetic", plane_margins},
      {"certificate-soundness", [&] { return certificate_soundness(configs); }},
      {"char2-profiles", char2_profiles},
      {"rnc-fitter-roundtrip", rnc_roundtrip},
      {"regularity-formulas", prop31_calculators},
      {"cli-determinism", [&] { return cli_determinism(cli); }},
  };

  int unexpected = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const int id = static_cast<int>(k + 1);
    std::printf("%s %d %s: %s (%.2fs)%s\n", o.pass ? "PASS" : "FAIL", id, criteria[k].first.c_str(), o.detail.c_str(),
                secs, (!o.pass && allowed.count(id)) ? " [allowed]" : "");
    if (!o.pass && !allowed.count(id)) ++unexpected;
  }
  return unexpected;
}
