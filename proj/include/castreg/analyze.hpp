// SPDX-License-Identifier: Apache-2.0
//
// The equality-versus-curve workflow: compare i(S) with ceil((d-1)/N) and test whether
// S lies on a rational normal curve.

#pragma once

#include <optional>
#include <string>

#include "castreg/castelnuovo.hpp"
#include "castreg/position.hpp"

namespace castreg {

struct AnalysisReport {
  std::size_t d = 0, n = 0;
  std::string field;
  PositionClass position;
  std::size_t i_of_s = 0;
  std::size_t bound = 0;  // ceil((d-1)/N)
  bool equality = false;
  std::size_t ell_star = 0;
  SeparatorMethod method = SeparatorMethod::LinearAlgebra;
  std::optional<bool> rnc_member;  // only when d >= N+3
  bool threshold = false;          // d >= max{N^2+2N+2, 25}
  bool discrepancy = false;        // equality and threshold hold, yet not on an RNC
};

AnalysisReport analyze(const PointConfig& config);

/// `key value` lines.
std::string emit_report(const AnalysisReport& report);

}  // namespace castreg
