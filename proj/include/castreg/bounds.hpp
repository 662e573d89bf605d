// SPDX-License-Identifier: Apache-2.0
//
// Integer arithmetic behind the separator-degree inequalities and the regularity
// bound formulas for non-ACM varieties.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace castreg {

/// Exact floor/ceil of a/b for b > 0 (any sign of a).
std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t ceil_div(std::int64_t a, std::int64_t b);

enum class MarginLemma { L21, L22N3, L22N4, L22N5Plus, L24, L25 };

std::string_view to_string(MarginLemma lemma);
/// Accepts "L21", "L22_N3", "L22_N4", "L22_N5plus", "L24", "L25". Throws BadParams.
MarginLemma parse_margin_lemma(std::string_view name);

struct MarginQuery {
  MarginLemma lemma = MarginLemma::L21;
  std::optional<std::int64_t> d, v, w, n, k;
};

/// Left side minus right side of the lemma's required inequality; >= 0 iff it holds.
///   L21        (d, v, w, N):  ceil((d-1)/N) - floor((d-v-1)/(v-w)) - floor((v-2)/(N-1)) - 3
///   L22_N3     (k):           ceil((2^k-1)/3) - 2^(k-3) - ceil(2^(k-1)/3) - 1
///   L22_N4     (k):           ceil((2^k-1)/4) - floor((2^(k-1)+1)/7) - 2^(k-3) - 1
///   L22_N5plus (N, k):        ceil((2^k-1)/N) - (2^(k-N+2) - 1 + ceil((2^(N-1)-1)/(N-1)))
///   L24        (d, v):        ceil((d-1)/2) - floor((d-v-1)/(v-1)) - v + 1
///   L25        (d):           ceil((d-1)/2) - floor((d-4)/6) - ceil((d+3)/4) - 2
/// Throws BadParams on missing or out-of-range parameters.
std::int64_t lemma_margin(const MarginQuery& q);

/// Which (d, v, w) triples the exception search ranges over.
enum class ExceptionDomain {
  /// w >= 2^(N-1) - 1, v >= 2w + 1, max(2v+1, 25) <= d.
  Bounds,
  /// Bounds, plus: some v(1) >= 3 admits a chain 1, v(1), ..., v(N-2) = w, v(N-1) = v
  /// obeying v(i+1) >= (v(1)-1) v(i) + 1.
  GrowthConsistent,
};

struct ExceptionTuple {
  std::int64_t d = 0, v = 0, w = 0;
  std::int64_t margin = 0;
  /// d = v + l1 (v - w) with l1 = floor((d-v-1)/(v-w)) + 1.
  bool feasible = false;

  friend bool operator==(const ExceptionTuple&, const ExceptionTuple&) = default;
};

/// Tuples with negative L21 margin, sorted by (d, v, w). With `feasibility`, only
/// those also passing the feasibility identity. N in 3..6, d_max <= 10000.
std::vector<ExceptionTuple> exception_search(MarginLemma lemma, std::int64_t n, std::int64_t d_max,
                                             bool feasibility,
                                             ExceptionDomain domain = ExceptionDomain::GrowthConsistent);

/// True iff some v1 >= 3 admits the chain described for ExceptionDomain::GrowthConsistent.
bool growth_consistent(std::int64_t n, std::int64_t v, std::int64_t w);

enum class Prop31Variant { A, B };

struct BoundQuery {
  std::int64_t deg = 0, codim = 0, dim = 0;
  std::int64_t k = 0;  // k(X) for variant A, the strong variant for B
  Prop31Variant variant = Prop31Variant::A;
};

/// A: ceil((deg-1)/codim) + k dim.  B: ceil((deg-1)/codim) + k dim - dim + 1.
std::int64_t prop31_bound(const BoundQuery& q);

enum class ThresholdContext { Theorem23, Theorem32Char0, Theorem32CharP, Lemma21, Lemma22, Lemma25 };

std::string_view to_string(ThresholdContext c);
ThresholdContext parse_threshold_context(std::string_view name);

/// Named parameters: theorem23/lemma21/lemma22 take N and d; theorem32_* take codim and deg;
/// lemma25 takes d. Throws BadParams.
bool threshold_check(ThresholdContext context, const std::map<std::string, std::int64_t>& params);

/// max{N^2 + 2N + 2, 25}.
std::int64_t theorem23_threshold(std::int64_t n);

}  // namespace castreg
