// SPDX-License-Identifier: Apache-2.0
#include "castreg/bounds.hpp"

#include <algorithm>
#include <tuple>

#include "castreg/error.hpp"

namespace castreg {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  if (b <= 0) throw Error(ErrorCode::BadParams, "nonpositive divisor");
  std::int64_t q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

std::string_view to_string(MarginLemma lemma) {
  switch (lemma) {
    case MarginLemma::L21: return "L21";
    case MarginLemma::L22N3: return "L22_N3";
    case MarginLemma::L22N4: return "L22_N4";
    case MarginLemma::L22N5Plus: return "L22_N5plus";
    case MarginLemma::L24: return "L24";
    case MarginLemma::L25: return "L25";
  }
  return "?";
}

MarginLemma parse_margin_lemma(std::string_view name) {
  for (auto l : {MarginLemma::L21, MarginLemma::L22N3, MarginLemma::L22N4, MarginLemma::L22N5Plus, MarginLemma::L24,
                 MarginLemma::L25}) {
    if (name == to_string(l)) return l;
  }
  throw Error(ErrorCode::BadParams, "unknown lemma '" + std::string(name) + "'");
}

namespace {

std::int64_t need(const std::optional<std::int64_t>& x, const char* name) {
  if (!x) throw Error(ErrorCode::BadParams, std::string("missing parameter ") + name);
  if (*x <= 0) throw Error(ErrorCode::BadParams, std::string("parameter ") + name + " must be positive");
  return *x;
}

std::int64_t pow2(std::int64_t e) {
  if (e < 0 || e > 61) throw Error(ErrorCode::BadParams, "power of two out of range");
  return std::int64_t{1} << e;
}

}  // namespace

std::int64_t lemma_margin(const MarginQuery& q) {
  switch (q.lemma) {
    case MarginLemma::L21: {
      const auto d = need(q.d, "d"), v = need(q.v, "v"), w = need(q.w, "w"), n = need(q.n, "N");
      if (v <= w) throw Error(ErrorCode::BadParams, "need v > w");
      if (n < 2) throw Error(ErrorCode::BadParams, "need N >= 2");
      return ceil_div(d - 1, n) - floor_div(d - v - 1, v - w) - floor_div(v - 2, n - 1) - 3;
    }
    case MarginLemma::L22N3: {
      const auto k = need(q.k, "k");
      if (k < 3) throw Error(ErrorCode::BadParams, "need k >= 3");
      return ceil_div(pow2(k) - 1, 3) - pow2(k - 3) - ceil_div(pow2(k - 1), 3) - 1;
    }
    case MarginLemma::L22N4: {
      const auto k = need(q.k, "k");
      if (k < 3) throw Error(ErrorCode::BadParams, "need k >= 3");
      return ceil_div(pow2(k) - 1, 4) - floor_div(pow2(k - 1) + 1, 7) - pow2(k - 3) - 1;
    }
    case MarginLemma::L22N5Plus: {
      const auto n = need(q.n, "N"), k = need(q.k, "k");
      if (n < 5) throw Error(ErrorCode::BadParams, "need N >= 5");
      if (k < n - 2) throw Error(ErrorCode::BadParams, "need k >= N - 2");
      return ceil_div(pow2(k) - 1, n) - (pow2(k - n + 2) - 1 + ceil_div(pow2(n - 1) - 1, n - 1));
    }
    case MarginLemma::L24: {
      const auto d = need(q.d, "d"), v = need(q.v, "v");
      if (v <= 1) throw Error(ErrorCode::BadParams, "need v > 1");
      return ceil_div(d - 1, 2) - floor_div(d - v - 1, v - 1) - v + 1;
    }
    case MarginLemma::L25: {
      const auto d = need(q.d, "d");
      return ceil_div(d - 1, 2) - floor_div(d - 4, 6) - ceil_div(d + 3, 4) - 2;
    }
  }
  throw Error(ErrorCode::BadParams, "unknown lemma");
}

bool growth_consistent(std::int64_t n, std::int64_t v, std::int64_t w) {
  if (n < 3) return false;
  for (std::int64_t v1 = 3; v1 <= w; ++v1) {
    // minimal chain value at index n-2 for this v1
    std::int64_t m = v1;
    for (std::int64_t i = 1; i < n - 2 && m <= w; ++i) m = (v1 - 1) * m + 1;
    const bool reaches_w = (n - 2 == 1) ? v1 == w : m <= w;
    if (reaches_w && v >= (v1 - 1) * w + 1) return true;
  }
  return false;
}

std::vector<ExceptionTuple> exception_search(MarginLemma lemma, std::int64_t n, std::int64_t d_max, bool feasibility,
                                             ExceptionDomain domain) {
  if (lemma != MarginLemma::L21) throw Error(ErrorCode::BadParams, "exception search is defined for L21 only");
  if (n < 3 || n > 6) throw Error(ErrorCode::BadParams, "exception search needs 3 <= N <= 6");
  if (d_max < 1 || d_max > 10000) throw Error(ErrorCode::BadParams, "need 1 <= d_max <= 10000");

  std::vector<ExceptionTuple> out;
  for (std::int64_t w = pow2(n - 1) - 1; 4 * w + 3 <= d_max; ++w) {
    for (std::int64_t v = 2 * w + 1; 2 * v + 1 <= d_max; ++v) {
      if (domain == ExceptionDomain::GrowthConsistent && !growth_consistent(n, v, w)) continue;
      for (std::int64_t d = std::max<std::int64_t>(2 * v + 1, 25); d <= d_max; ++d) {
        const auto margin = lemma_margin({MarginLemma::L21, d, v, w, n, std::nullopt});
        if (margin >= 0) continue;
        const auto l1 = floor_div(d - v - 1, v - w) + 1;
        const bool feasible = d == v + l1 * (v - w);
        if (feasibility && !feasible) continue;
        out.push_back({d, v, w, margin, feasible});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const ExceptionTuple& a, const ExceptionTuple& b) {
    return std::tie(a.d, a.v, a.w) < std::tie(b.d, b.v, b.w);
  });
  return out;
}

std::int64_t prop31_bound(const BoundQuery& q) {
  if (q.deg <= 0 || q.codim <= 0 || q.dim <= 0) throw Error(ErrorCode::BadParams, "deg, codim, dim must be positive");
  if (q.k < 0) throw Error(ErrorCode::BadParams, "k must be nonnegative");
  if (q.deg < q.codim + 1) throw Error(ErrorCode::BadParams, "need deg >= codim + 1");
  const auto base = ceil_div(q.deg - 1, q.codim) + q.k * q.dim;
  if (q.variant == Prop31Variant::A) return base;
  if (q.k < 1) throw Error(ErrorCode::BadParams, "variant b needs k >= 1");
  return base - q.dim + 1;
}

std::string_view to_string(ThresholdContext c) {
  switch (c) {
    case ThresholdContext::Theorem23: return "theorem23";
    case ThresholdContext::Theorem32Char0: return "theorem32_char0";
    case ThresholdContext::Theorem32CharP: return "theorem32_charp";
    case ThresholdContext::Lemma21: return "lemma21";
    case ThresholdContext::Lemma22: return "lemma22";
    case ThresholdContext::Lemma25: return "lemma25";
  }
  return "?";
}

ThresholdContext parse_threshold_context(std::string_view name) {
  for (auto c : {ThresholdContext::Theorem23, ThresholdContext::Theorem32Char0, ThresholdContext::Theorem32CharP,
                 ThresholdContext::Lemma21, ThresholdContext::Lemma22, ThresholdContext::Lemma25}) {
    if (name == to_string(c)) return c;
  }
  throw Error(ErrorCode::BadParams, "unknown threshold context '" + std::string(name) + "'");
}

std::int64_t theorem23_threshold(std::int64_t n) { return std::max<std::int64_t>(n * n + 2 * n + 2, 25); }

bool threshold_check(ThresholdContext context, const std::map<std::string, std::int64_t>& params) {
  auto get = [&](const char* name) {
    auto it = params.find(name);
    if (it == params.end()) throw Error(ErrorCode::BadParams, std::string("missing parameter ") + name);
    if (it->second <= 0) throw Error(ErrorCode::BadParams, std::string("parameter ") + name + " must be positive");
    return it->second;
  };
  switch (context) {
    case ThresholdContext::Theorem23: return get("d") >= theorem23_threshold(get("N"));
    case ThresholdContext::Theorem32Char0: {
      const auto c = get("codim");
      return get("deg") >= c * c + 2 * c + 2;
    }
    case ThresholdContext::Theorem32CharP: {
      const auto c = get("codim");
      return get("deg") >= std::max<std::int64_t>(2 * c * c + c + 2, 25);
    }
    case ThresholdContext::Lemma21: return get("N") >= 3 && get("d") >= 25;
    case ThresholdContext::Lemma22: return get("N") >= 3 && get("d") >= 23;
    case ThresholdContext::Lemma25: return get("d") >= 24;
  }
  return false;
}

}  // namespace castreg
