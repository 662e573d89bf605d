// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <random>
#include <vector>

#include "castreg/geometry.hpp"
#include "oracles.hpp"

namespace testing_support {

inline oracle::OField oracle_field(const castreg::Field& f) {
  oracle::OField o;
  o.p = f.characteristic();
  o.e = f.degree();
  if (o.e > 1) o.modulus = f.modulus();
  return o;
}

inline std::vector<oracle::Vec> oracle_points(const castreg::PointConfig& c) {
  std::vector<oracle::Vec> out;
  for (const auto& p : c.points()) {
    oracle::Vec v;
    for (auto x : p.coords) v.push_back(x.value);
    out.push_back(v);
  }
  return out;
}

inline std::vector<castreg::Elem> elems(std::initializer_list<std::uint64_t> xs) {
  std::vector<castreg::Elem> out;
  for (auto x : xs) out.push_back(castreg::Elem{x});
  return out;
}

inline castreg::PointConfig config_of(const castreg::Field& f, std::size_t n,
                                      std::initializer_list<std::initializer_list<std::uint64_t>> rows) {
  std::vector<std::vector<castreg::Elem>> pts;
  for (auto r : rows) pts.push_back(elems(r));
  return castreg::PointConfig::make(f, n, pts);
}

}  // namespace testing_support
