// SPDX-License-Identifier: Apache-2.0
//
// Point configurations with prescribed geometry: rational normal curves, F2-linear
// sets in characteristic 2, hyperplane sections of monomial curves, random points,
// and a test for lying on a rational normal curve.
//
// Randomness: attempt a of a generator with seed s draws from
// std::mt19937_64(std::seed_seq{lo32(s), hi32(s), a}); a bounded value in [0, n) is
// the first raw 64-bit draw below the largest multiple of n.

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "castreg/geometry.hpp"

namespace castreg {

/// A curve parameter; nullopt is the point at infinity.
using CurveParam = std::optional<Elem>;

/// Points (1 : t : ... : t^N), infinity at (0 : ... : 0 : 1). Throws DuplicateParam,
/// FieldMismatch, Degenerate.
PointConfig gen_rnc(const Field& field, std::size_t n, const std::vector<CurveParam>& params);

enum class F2Mode { Affine, Projective };

std::string_view to_string(F2Mode m);

inline constexpr std::size_t kDefaultBudget = 1000;

/// Projective: the 2^(N+1) - 1 points of P^N with 0/1 coordinates, lexicographic.
/// Affine: the 2^k images of an injective F2-linear map F2^k -> GF(2^e)^N, with
/// leading coordinate 1; image m is the sum of generators g_j over the set bits j of m.
/// Throws FieldTooSmall, RetriesExhausted, BadParams.
PointConfig gen_f2linear(unsigned e, std::size_t n, std::size_t k, std::uint64_t seed, F2Mode mode,
                         std::size_t budget = kDefaultBudget);

struct SectionResult {
  PointConfig config;
  std::vector<CurveParam> params;  // parameter of each emitted point
  std::size_t roots = 0;           // distinct parameters found, infinity included
  std::size_t degree = 0;          // a_{N+1}
  bool split = false;              // roots == degree
};

/// Curve (1 : t^a1 : ... : t^a(N+1)) in P^(N+1) cut by sum c_i x_i = 0 (N+2 coefficients).
/// The hyperplane is identified with P^N by dropping its first nonzero coordinate.
/// Throws BadParams, EmptySection, NotSpanning, TooLarge.
SectionResult gen_monomial_curve_section(const Field& field, const std::vector<std::uint64_t>& exponents,
                                         const std::vector<Elem>& hyperplane);

/// d distinct points sampled uniformly (nonzero vectors, normalized) until the set spans.
/// Throws Degenerate (d <= N), FieldTooSmall, RetriesExhausted.
PointConfig gen_random(const Field& field, std::size_t n, std::size_t d, std::uint64_t seed,
                       std::size_t budget = kDefaultBudget);

struct RncMembership {
  bool member = false;
  /// One parameter per point when member: frame points get b_i, the unit point infinity,
  /// the (N+3)rd point 0.
  std::vector<CurveParam> params;
};

/// Frames on the first N+3 points. Through N+3 points in general position there is
/// exactly one rational normal curve, and any N+3 points of such a curve are in general
/// position, so a failing frame already rules membership out. Throws TooFew.
RncMembership rnc_membership(const PointConfig& config);

/// The generator stream for attempt `attempt` (see file comment).
std::mt19937_64 generator_stream(std::uint64_t seed, std::uint64_t attempt);
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t n);

}  // namespace castreg
