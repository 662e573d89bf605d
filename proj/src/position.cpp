// SPDX-License-Identifier: Apache-2.0
#include "castreg/position.hpp"

#include "castreg/error.hpp"
#include "castreg/hilbert.hpp"

namespace castreg {

std::string_view to_string(Dichotomy d) {
  switch (d) {
    case Dichotomy::NotApplicable: return "none";
    case Dichotomy::Multisecant: return "i";
    case Dichotomy::PlaneExtraPoint: return "ii";
    case Dichotomy::Neither: return "neither";
  }
  return "none";
}

PositionProfile position_profile(const std::vector<std::vector<Flat>>& levels) {
  PositionProfile profile;
  profile.semi_uniform = true;
  for (const auto& level : levels) {
    if (level.empty()) continue;
    const std::size_t count = level.front().incident_count();
    for (const auto& flat : level) {
      if (flat.incident_count() != count) {
        profile.semi_uniform = false;
        profile.v.clear();
        profile.witness.emplace(level.front(), flat);
        return profile;
      }
    }
    profile.v.push_back(count);
  }
  return profile;
}

PositionProfile position_profile(const PointConfig& config, const GuardRails& rails) {
  return position_profile(enumerate_flat_levels(config, config.ambient_dim() - 1, rails));
}

PositionClass classify_position(const PointConfig& config, PositionProfile profile, std::size_t uniform_cap) {
  PositionClass c;
  c.semi_uniform = profile.semi_uniform;
  if (c.semi_uniform) {
    c.linear_general = true;
    for (std::size_t i = 0; i < profile.v.size(); ++i) {
      if (profile.v[i] != i + 1) c.linear_general = false;
    }
    if (!c.linear_general) {
      const auto& v = profile.v;
      if (v.size() > 1 && v[1] >= 3) {
        c.dichotomy = Dichotomy::Multisecant;
      } else if (v.size() > 2 && v[1] == 2 && v[2] >= 4) {
        c.dichotomy = Dichotomy::PlaneExtraPoint;
      } else {
        c.dichotomy = Dichotomy::Neither;
      }
    }
  }
  if (config.size() <= uniform_cap) c.uniform = uniform_position_check(config, uniform_cap).uniform;
  c.profile = std::move(profile);
  return c;
}

PositionClass classify_position(const PointConfig& config, std::size_t uniform_cap, const GuardRails& rails) {
  return classify_position(config, position_profile(config, rails), uniform_cap);
}

bool growth_check(const PositionProfile& profile) {
  if (!profile.semi_uniform) throw Error(ErrorCode::NotSemiUniform, "growth check needs a semi-uniform profile");
  const auto& v = profile.v;
  if (v.size() < 2) return true;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (v[i + 1] < (v[1] - 1) * v[i] + 1) return false;
  }
  return true;
}

}  // namespace castreg
