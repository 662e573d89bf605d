// SPDX-License-Identifier: Apache-2.0
//
// Text formats.
//
//   pcfg 1
//   field <p> <e> [<m0> ... <me>]    modulus required iff e > 1
//   ambient <N>
//   points <d>
//   <N+1 integers>                   d rows, base-p encodings
//
//   sepcert 1
//   # method <name>                  informational
//   point <P>
//   degree <l>
//   hyp <c0> ... <cN>                one per hyperplane
//   form <t> <coeffs...>             optional, graded-lex monomial order
//
// '#' starts a comment anywhere on a line; blank lines are ignored.

#pragma once

#include <string>
#include <string_view>

#include "castreg/castelnuovo.hpp"
#include "castreg/geometry.hpp"

namespace castreg {

/// Throws SyntaxError (with line/column) or SemanticError (field or config rejected).
PointConfig parse_pcfg(std::string_view text);
std::string emit_pcfg(const PointConfig& config);

/// Field elements are range-checked against `field`; the method comment is not read back
/// (the parsed certificate reports LinearAlgebra unless `# method` names another).
SeparatorCertificate parse_sepcert(std::string_view text, const Field& field);
std::string emit_sepcert(const SeparatorCertificate& cert);

std::string read_file(const std::string& path);

}  // namespace castreg
