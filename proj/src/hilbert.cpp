// SPDX-License-Identifier: Apache-2.0
#include "castreg/hilbert.hpp"

#include <algorithm>
#include <numeric>

#include "castreg/error.hpp"

namespace castreg {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

void fill_monomials(std::size_t var, std::size_t nvars, std::size_t remaining, Exponents& cur,
                    std::vector<Exponents>& out) {
  if (var + 1 == nvars) {
    cur[var] = static_cast<unsigned>(remaining);
    out.push_back(cur);
    return;
  }
  for (std::size_t a = remaining + 1; a-- > 0;) {
    cur[var] = static_cast<unsigned>(a);
    fill_monomials(var + 1, nvars, remaining - a, cur, out);
  }
}

}  // namespace

std::vector<Exponents> monomial_basis(std::size_t n, std::size_t t) {
  std::vector<Exponents> out;
  out.reserve(binomial(n + t, n));
  Exponents cur(n + 1, 0);
  fill_monomials(0, n + 1, t, cur, out);
  return out;
}

std::size_t monomial_index(std::size_t n, const Exponents& mono) {
  std::size_t remaining = std::accumulate(mono.begin(), mono.end(), std::size_t{0});
  std::size_t index = 0;
  for (std::size_t i = 0; i + 1 < mono.size(); ++i) {
    const std::size_t later_vars = n - i;  // variables i+1..n
    for (std::size_t a = remaining; a > mono[i]; --a) index += binomial(remaining - a + later_vars - 1, later_vars - 1);
    remaining -= mono[i];
  }
  return index;
}

Elem evaluate_monomial(const Field& field, const Exponents& mono, std::span<const Elem> x) {
  Elem acc = field.one();
  for (std::size_t j = 0; j < mono.size(); ++j) {
    if (mono[j] != 0) acc = field.mul(acc, field.pow(x[j], mono[j]));
  }
  return acc;
}

Matrix evaluation_matrix(const PointConfig& config, std::span<const std::size_t> indices, std::size_t t) {
  const Field& field = config.field();
  const std::size_t n = config.ambient_dim();
  const auto monos = monomial_basis(n, t);
  Matrix m(field, indices.size(), monos.size());
  std::vector<std::vector<Elem>> powers(n + 1, std::vector<Elem>(t + 1));
  for (std::size_t r = 0; r < indices.size(); ++r) {
    if (indices[r] >= config.size()) throw Error(ErrorCode::IndexOutOfRange, "point index");
    const auto& x = config.point(indices[r]).coords;
    for (std::size_t j = 0; j <= n; ++j) {
      powers[j][0] = field.one();
      for (std::size_t k = 1; k <= t; ++k) powers[j][k] = field.mul(powers[j][k - 1], x[j]);
    }
    for (std::size_t c = 0; c < monos.size(); ++c) {
      Elem acc = field.one();
      for (std::size_t j = 0; j <= n; ++j) {
        if (monos[c][j] != 0) acc = field.mul(acc, powers[j][monos[c][j]]);
      }
      m.at(r, c) = acc;
    }
  }
  return m;
}

Matrix evaluation_matrix(const PointConfig& config, std::size_t t) {
  std::vector<std::size_t> all(config.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return evaluation_matrix(config, all, t);
}

std::size_t hilbert_value(const PointConfig& config, std::span<const std::size_t> indices, std::size_t t) {
  return rank(evaluation_matrix(config, indices, t));
}

HilbertSummary hilbert_function(const PointConfig& config, std::optional<std::size_t> t_max) {
  const std::size_t d = config.size();
  HilbertSummary s;
  bool found = false;
  for (std::size_t t = 0;; ++t) {
    const bool want_value = t_max ? t <= *t_max : !found;
    if (!want_value && found) break;
    // Past stabilization every value equals d.
    const std::size_t h = found ? d : rank(evaluation_matrix(config, t));
    if (!found && h == d) {
      s.index_of_regularity = t;
      found = true;
    }
    if (want_value) s.values.push_back(h);
  }
  std::int64_t prev = 0;
  for (auto h : s.values) {
    s.h_vector.push_back(static_cast<std::int64_t>(h) - prev);
    prev = static_cast<std::int64_t>(h);
  }
  return s;
}

std::size_t index_of_regularity(const PointConfig& config) {
  for (std::size_t t = 0;; ++t) {
    if (rank(evaluation_matrix(config, t)) == config.size()) return t;
  }
}

UniformPositionResult uniform_position_check(const PointConfig& config, std::size_t cap) {
  const std::size_t d = config.size();
  if (d > cap) {
    throw Error(ErrorCode::TooLarge,
                "uniform position check needs d <= " + std::to_string(cap) + ", got " + std::to_string(d));
  }
  const auto summary = hilbert_function(config);
  const std::size_t top = summary.index_of_regularity;
  std::vector<Matrix> full;
  for (std::size_t t = 0; t <= top; ++t) full.push_back(evaluation_matrix(config, t));

  std::vector<std::size_t> subset;
  for (std::size_t size = 1; size <= d; ++size) {
    std::vector<bool> mask(d, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      subset.clear();
      for (std::size_t i = 0; i < d; ++i)
        if (mask[i]) subset.push_back(i);
      for (std::size_t t = 0; t <= top; ++t) {
        Matrix sub(config.field(), 0, full[t].cols());
        for (auto i : subset) sub.append_row(full[t].row(i));
        if (rank(sub) != std::min(size, summary.values[t])) {
          return {false, UniformityWitness{subset, t}};
        }
      }
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  return {true, std::nullopt};
}

}  // namespace castreg
