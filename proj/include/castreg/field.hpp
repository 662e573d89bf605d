// SPDX-License-Identifier: Apache-2.0
//
// Finite fields GF(p^e) with elements encoded as a single base-p integer.
//
// An element of GF(p^e) = GF(p)[x]/(f) is the residue c_0 + c_1 x + ... + c_{e-1} x^{e-1};
// it is stored as value = c_0 + c_1 p + ... + c_{e-1} p^{e-1}. The integer order on
// encodings is the global deterministic order used by every search in the library.

#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace castreg {

struct Elem {
  std::uint64_t value = 0;

  constexpr Elem() = default;
  constexpr explicit Elem(std::uint64_t v) : value(v) {}

  constexpr bool is_zero() const { return value == 0; }
  friend constexpr auto operator<=>(const Elem&, const Elem&) = default;
};

inline std::ostream& operator<<(std::ostream& os, Elem x) { return os << x.value; }

/// Deterministic primality test for 64-bit integers (Miller-Rabin, fixed bases).
bool is_prime(std::uint64_t n);

class Field {
 public:
  /// Builds GF(p^e). When e > 1 and no modulus is given, picks the monic irreducible
  /// polynomial whose non-leading coefficients have the smallest base-p encoding.
  /// `modulus` lists e+1 coefficients, ascending, leading coefficient 1.
  static Field make(std::uint64_t p, unsigned e = 1,
                    std::optional<std::vector<std::uint64_t>> modulus = std::nullopt);

  std::uint64_t characteristic() const;
  unsigned degree() const;
  std::uint64_t order() const;
  /// Empty for prime fields.
  const std::vector<std::uint64_t>& modulus() const;

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  /// Image of an integer in the prime subfield.
  Elem from_int(std::int64_t n) const;
  bool contains(Elem x) const { return x.value < order(); }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  /// Throws DivisionByZero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t n) const;
  Elem frobenius(Elem a) const { return pow(a, characteristic()); }

  std::vector<std::uint64_t> digits(Elem a) const;
  Elem from_digits(std::span<const std::uint64_t> digits) const;

  /// "GF(7)" or "GF(2^3)".
  std::string describe() const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  struct Impl;
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Polynomials over GF(p) as ascending coefficient vectors, used for modulus selection.
namespace gfp_poly {

using Poly = std::vector<std::uint64_t>;

void trim(Poly& a);
Poly mul_mod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p);
Poly pow_mod(const Poly& a, std::uint64_t n, const Poly& f, std::uint64_t p);
Poly gcd(Poly a, Poly b, std::uint64_t p);
/// Rabin-style deterministic test: x^{p^e} = x mod f and gcd(x^{p^{e/r}} - x, f) = 1
/// for every prime r dividing e. `f` must be monic of degree e >= 1.
bool is_irreducible(const Poly& f, std::uint64_t p);

}  // namespace gfp_poly

}  // namespace castreg
