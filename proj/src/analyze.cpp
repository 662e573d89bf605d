// SPDX-License-Identifier: Apache-2.0
#include "castreg/analyze.hpp"

#include <sstream>

#include "castreg/bounds.hpp"
#include "castreg/generators.hpp"
#include "castreg/hilbert.hpp"

namespace castreg {

AnalysisReport analyze(const PointConfig& config) {
  AnalysisReport r;
  r.d = config.size();
  r.n = config.ambient_dim();
  r.field = config.field().describe();

  const SeparatorContext ctx(config);
  r.position = classify_position(config, ctx.profile());
  r.i_of_s = index_of_regularity(config);
  r.bound = static_cast<std::size_t>(ceil_div(static_cast<std::int64_t>(r.d) - 1, static_cast<std::int64_t>(r.n)));
  r.equality = r.i_of_s == r.bound;

  const auto ub = regularity_upper_bound(ctx);
  r.ell_star = ub.ell_star;
  r.method = ub.method;

  if (r.d >= r.n + 3) r.rnc_member = rnc_membership(config).member;
  r.threshold = threshold_check(ThresholdContext::Theorem23,
                                {{"N", static_cast<std::int64_t>(r.n)}, {"d", static_cast<std::int64_t>(r.d)}});
  r.discrepancy = r.equality && r.threshold && r.rnc_member == false;
  return r;
}

namespace {

const char* yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string emit_report(const AnalysisReport& r) {
  std::ostringstream os;
  os << "field " << r.field << '\n';
  os << "ambient " << r.n << '\n';
  os << "points " << r.d << '\n';
  const auto& pos = r.position;
  os << "semi_uniform " << yes_no(pos.semi_uniform) << '\n';
  if (pos.semi_uniform) {
    os << "v";
    for (auto x : pos.profile.v) os << ' ' << x;
    os << '\n';
  }
  os << "linear_general " << yes_no(pos.linear_general) << '\n';
  os << "uniform " << (pos.uniform ? yes_no(*pos.uniform) : "unknown") << '\n';
  os << "dichotomy " << to_string(pos.dichotomy) << '\n';
  os << "i_of_S " << r.i_of_s << '\n';
  os << "bound " << r.bound << '\n';
  os << "equality " << yes_no(r.equality) << '\n';
  os << "ell_star " << r.ell_star << '\n';
  os << "method " << to_string(r.method) << '\n';
  os << "rnc_member " << (r.rnc_member ? yes_no(*r.rnc_member) : "n/a") << '\n';
  os << "theorem23_threshold " << yes_no(r.threshold) << '\n';
  if (!r.threshold) os << "note curve criterion inapplicable below d = " << theorem23_threshold(static_cast<std::int64_t>(r.n)) << '\n';
  if (r.discrepancy) os << "DISCREPANCY equality holds above threshold but no rational normal curve fits\n";
  return os.str();
}

}  // namespace castreg
