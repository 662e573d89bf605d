// SPDX-License-Identifier: Apache-2.0
//
// Separator certificates: a hypersurface through every point of S except one.
//
// A certificate for point P is a product of hyperplanes and at most one general form;
// it must vanish on S \ {P} and not at P. Existence of a degree-l separator for every
// P is equivalent to H_S(l) = d, so certificates witness upper bounds on i(S).

#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "castreg/geometry.hpp"
#include "castreg/position.hpp"

namespace castreg {

enum class SeparatorMethod { LinearAlgebra, Greedy, Lemma21, Lemma22N3, Lemma22N4, Lemma22N5, Lemma24, Lemma25 };

std::string_view to_string(SeparatorMethod m);

/// A form of the given degree, coefficients over monomial_basis(N, degree).
struct GeneralForm {
  std::size_t degree = 0;
  std::vector<Elem> coeffs;

  friend bool operator==(const GeneralForm&, const GeneralForm&) = default;
};

struct SeparatorCertificate {
  std::size_t point = 0;
  std::size_t degree = 0;
  std::vector<Hyperplane> hyperplanes;
  std::optional<GeneralForm> form;
  SeparatorMethod method = SeparatorMethod::LinearAlgebra;

  friend bool operator==(const SeparatorCertificate&, const SeparatorCertificate&) = default;
};

/// A configuration together with its spanned flats and incidence profile, shared by
/// the constructors below.
class SeparatorContext {
 public:
  explicit SeparatorContext(PointConfig config, const GuardRails& rails = {});

  const PointConfig& config() const { return config_; }
  /// flats()[i] lists the spanned i-planes, 0 <= i <= N-1.
  const std::vector<std::vector<Flat>>& flats() const { return levels_; }
  const PositionProfile& profile() const { return profile_; }

 private:
  PointConfig config_;
  std::vector<std::vector<Flat>> levels_;
  PositionProfile profile_;
};

/// Kernel of the degree-l evaluation matrix of S \ {P}: the first kernel vector (free
/// columns ascending) that is nonzero at P, or nullopt when every one vanishes there.
std::optional<SeparatorCertificate> separator_linear_algebra(const PointConfig& config, std::size_t point,
                                                             std::size_t degree);

/// Hyperplanes through up to N uncovered points each (lowest indices first), avoiding P.
/// Throws ConstructionStuck when a hyperplane search is exhausted over this field.
SeparatorCertificate separator_greedy(const PointConfig& config, std::size_t point);

/// Multisecant case, N >= 3, v(1) >= 3, d >= 25: a hyperplane with v(N-1) points, an
/// (N-2)-plane L inside it, hyperplanes through L each adding v(N-1) - v(N-2) points, and
/// a degree ceil((v-1)/(N-1)) form on the residual hyperplane through L and P.
/// Throws PreconditionFailed or ConstructionStuck (naming the failing step).
SeparatorCertificate separator_lemma_v1ge3(const SeparatorContext& ctx, std::size_t point);
SeparatorCertificate separator_lemma_v1ge3(const PointConfig& config, std::size_t point);

/// v(1) = 2, v(2) >= 4, N >= 3, d = 2^k >= 23. Dispatches on N (3, 4, >= 5).
SeparatorCertificate separator_lemma_v1eq2(const SeparatorContext& ctx, std::size_t point);
SeparatorCertificate separator_lemma_v1eq2(const PointConfig& config, std::size_t point);

/// N = 2 with v(1) >= 4, or v(1) = 3 and d >= 24. Unions of lines.
SeparatorCertificate separator_plane(const SeparatorContext& ctx, std::size_t point);
SeparatorCertificate separator_plane(const PointConfig& config, std::size_t point);

enum class VerifyReason { Ok, VanishesAtP, Uncovered, DegreeMismatch, Malformed };

std::string_view to_string(VerifyReason r);

struct Verification {
  bool ok = false;
  VerifyReason reason = VerifyReason::Malformed;
  std::optional<std::size_t> point;  // offending configuration point, if any
};

Verification verify_certificate(const PointConfig& config, const SeparatorCertificate& cert);

/// The strongest applicable constructor for one point, falling back lemma -> greedy ->
/// linear algebra at the least working degree.
SeparatorCertificate separator_auto(const SeparatorContext& ctx, std::size_t point);

struct UpperBound {
  std::size_t ell_star = 0;
  SeparatorMethod method = SeparatorMethod::LinearAlgebra;  // method of the first certificate reaching ell_star
  std::vector<SeparatorCertificate> certificates;          // one per point
  std::size_t index_of_regularity = 0;
};

/// Strongest applicable constructor per point, falling back lemma -> greedy -> linear
/// algebra; ell_star is the largest certificate degree and is checked against i(S).
UpperBound regularity_upper_bound(const SeparatorContext& ctx);
UpperBound regularity_upper_bound(const PointConfig& config);

}  // namespace castreg
