// SPDX-License-Identifier: Apache-2.0
//
// Hilbert functions of reduced point sets, computed as ranks of evaluation matrices.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "castreg/geometry.hpp"
#include "castreg/matrix.hpp"

namespace castreg {

using Exponents = std::vector<unsigned>;

/// All degree-t monomials in N+1 variables, graded-lex (x0 > x1 > ... > xN).
std::vector<Exponents> monomial_basis(std::size_t n, std::size_t t);

/// Position of `mono` in monomial_basis(n, degree of mono).
std::size_t monomial_index(std::size_t n, const Exponents& mono);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

Elem evaluate_monomial(const Field& field, const Exponents& mono, std::span<const Elem> x);

/// One row per point (configuration order), one column per monomial.
Matrix evaluation_matrix(const PointConfig& config, std::size_t t);
Matrix evaluation_matrix(const PointConfig& config, std::span<const std::size_t> indices, std::size_t t);

struct HilbertSummary {
  std::vector<std::size_t> values;     // H_S(0), H_S(1), ...
  std::vector<std::int64_t> h_vector;  // first differences, H_S(-1) = 0
  std::size_t index_of_regularity = 0;

  std::size_t regularity() const { return index_of_regularity + 1; }
};

/// Values run to `t_max` when given, otherwise to the first t with H_S(t) = d.
HilbertSummary hilbert_function(const PointConfig& config, std::optional<std::size_t> t_max = std::nullopt);

/// H restricted to a subset of the points.
std::size_t hilbert_value(const PointConfig& config, std::span<const std::size_t> indices, std::size_t t);

/// Least t with H_S(t) = d.
std::size_t index_of_regularity(const PointConfig& config);

struct UniformityWitness {
  std::vector<std::size_t> subset;
  std::size_t degree = 0;
};

struct UniformPositionResult {
  bool uniform = false;
  std::optional<UniformityWitness> witness;
};

/// Brute force over all nonempty subsets Z: H_Z(t) = min(|Z|, H_S(t)) for t <= i(S).
/// Subsets are visited by size, then lexicographically; the first failure is the witness.
/// Throws TooLarge when d exceeds `cap`.
UniformPositionResult uniform_position_check(const PointConfig& config, std::size_t cap = 12);

}  // namespace castreg
