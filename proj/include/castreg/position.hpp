// SPDX-License-Identifier: Apache-2.0
//
// Incidence statistics v(i) and the position classes built on them.

#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "castreg/geometry.hpp"

namespace castreg {

struct PositionProfile {
  bool semi_uniform = false;
  /// v(0..N-1) when semi-uniform.
  std::vector<std::size_t> v;
  /// Two spanned flats of the same dimension with different incidence counts.
  std::optional<std::pair<Flat, Flat>> witness;
};

PositionProfile position_profile(const PointConfig& config, const GuardRails& rails = {});

/// Same, reusing flats from enumerate_flat_levels(config, N-1).
PositionProfile position_profile(const std::vector<std::vector<Flat>>& levels);

/// Which side of the secant dichotomy a semi-uniform, non-linear-general set falls on.
enum class Dichotomy {
  NotApplicable,   // not semi-uniform, or linear general position
  Multisecant,     // v(1) >= 3
  PlaneExtraPoint, // v(1) = 2 and v(2) >= 4
  Neither,
};

std::string_view to_string(Dichotomy d);

struct PositionClass {
  std::optional<bool> uniform;  // nullopt when d exceeds the brute-force cap
  bool linear_general = false;
  bool semi_uniform = false;
  Dichotomy dichotomy = Dichotomy::NotApplicable;
  PositionProfile profile;
};

PositionClass classify_position(const PointConfig& config, std::size_t uniform_cap = 12,
                                const GuardRails& rails = {});
PositionClass classify_position(const PointConfig& config, PositionProfile profile, std::size_t uniform_cap = 12);

/// v(i+1) >= (v(1)-1) v(i) + 1 for 0 <= i <= N-2. Throws NotSemiUniform.
bool growth_check(const PositionProfile& profile);

}  // namespace castreg
