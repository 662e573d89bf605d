// SPDX-License-Identifier: Apache-2.0
#include "castreg/field.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "castreg/error.hpp"

namespace castreg {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kOrderLimit = u64{1} << 63;
// Extension fields up to this order get log/antilog tables.
constexpr u64 kTableLimit = u64{1} << 20;

u64 mul_mod_u64(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod_u64(u64 a, u64 n, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (n > 0) {
    if (n & 1) r = mul_mod_u64(r, a, m);
    a = mul_mod_u64(a, a, m);
    n >>= 1;
  }
  return r;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = pow_mod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace gfp_poly {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

namespace {

Poly reduce(Poly a, const Poly& f, u64 p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const u64 lead_inv = pow_mod_u64(f.back(), p - 2, p);
  while (a.size() > df) {
    const std::size_t shift = a.size() - 1 - df;
    const u64 c = mul_mod_u64(a.back(), lead_inv, p);
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = (a[shift + i] + p - mul_mod_u64(c, f[i], p)) % p;
    }
    trim(a);
  }
  return a;
}

Poly sub(Poly a, const Poly& b, u64 p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

}  // namespace

Poly mul_mod(const Poly& a, const Poly& b, const Poly& f, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + mul_mod_u64(a[i], b[j], p)) % p;
    }
  }
  return reduce(std::move(prod), f, p);
}

Poly pow_mod(const Poly& a, u64 n, const Poly& f, u64 p) {
  Poly result = reduce(Poly{1}, f, p);
  Poly base = reduce(a, f, p);
  while (n > 0) {
    if (n & 1) result = mul_mod(result, base, f, p);
    base = mul_mod(base, base, f, p);
    n >>= 1;
  }
  return result;
}

Poly gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = reduce(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const u64 inv = pow_mod_u64(a.back(), p - 2, p);
    for (auto& c : a) c = mul_mod_u64(c, inv, p);
  }
  return a;
}

bool is_irreducible(const Poly& f, u64 p) {
  const std::size_t e = f.size() - 1;
  if (e == 1) return true;
  const Poly x{0, 1};
  // frob[j] = x^{p^j} mod f
  std::vector<Poly> frob{reduce(x, f, p)};
  for (std::size_t j = 1; j <= e; ++j) frob.push_back(pow_mod(frob.back(), p, f, p));
  if (frob[e] != reduce(x, f, p)) return false;
  for (u64 r : prime_factors(e)) {
    Poly g = gcd(sub(frob[e / r], x, p), f, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace gfp_poly

struct Field::Impl {
  u64 p = 0;
  unsigned e = 1;
  u64 q = 0;
  std::vector<u64> modulus;
  std::vector<u64> powers;  // p^0 .. p^{e-1}
  std::vector<std::uint32_t> log_table;
  std::vector<std::uint32_t> exp_table;  // length 2(q-1)

  std::vector<u64> to_digits(u64 v) const {
    std::vector<u64> d(e, 0);
    for (unsigned i = 0; i < e; ++i) {
      d[i] = v % p;
      v /= p;
    }
    return d;
  }

  u64 from_digits(const std::vector<u64>& d) const {
    u64 v = 0;
    for (unsigned i = e; i-- > 0;) v = v * p + (i < d.size() ? d[i] : 0);
    return v;
  }

  u64 add(u64 a, u64 b) const {
    if (e == 1) {
      const u64 s = a + b;
      return s >= p ? s - p : s;
    }
    if (p == 2) return a ^ b;
    u64 out = 0;
    for (unsigned i = 0; i < e; ++i) {
      const u64 s = (a % p + b % p) % p;
      out += s * powers[i];
      a /= p;
      b /= p;
    }
    return out;
  }

  u64 neg(u64 a) const {
    if (e == 1) return a == 0 ? 0 : p - a;
    if (p == 2) return a;
    u64 out = 0;
    for (unsigned i = 0; i < e; ++i) {
      const u64 c = a % p;
      out += (c == 0 ? 0 : p - c) * powers[i];
      a /= p;
    }
    return out;
  }

  u64 slow_mul(u64 a, u64 b) const {
    auto r = gfp_poly::mul_mod(to_digits(a), to_digits(b), modulus, p);
    return from_digits(r);
  }

  u64 mul(u64 a, u64 b) const {
    if (e == 1) return mul_mod_u64(a, b, p);
    if (a == 0 || b == 0) return 0;
    if (!log_table.empty()) return exp_table[log_table[a] + log_table[b]];
    return slow_mul(a, b);
  }

  u64 pow(u64 a, u64 n) const {
    u64 r = 1;
    while (n > 0) {
      if (n & 1) r = mul(r, a);
      a = mul(a, a);
      n >>= 1;
    }
    return r;
  }

  void build_tables() {
    const u64 group = q - 1;
    const auto factors = prime_factors(group);
    u64 gen = 0;
    for (u64 g = 2; g < q; ++g) {
      bool primitive = true;
      for (u64 r : factors) {
        if (pow(g, group / r) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        gen = g;
        break;
      }
    }
    log_table.assign(q, 0);
    exp_table.assign(2 * group, 0);
    u64 x = 1;
    for (u64 i = 0; i < group; ++i) {
      exp_table[i] = static_cast<std::uint32_t>(x);
      exp_table[i + group] = static_cast<std::uint32_t>(x);
      log_table[x] = static_cast<std::uint32_t>(i);
      x = slow_mul(x, gen);
    }
  }
};

Field Field::make(u64 p, unsigned e, std::optional<std::vector<u64>> modulus) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (e == 0) throw Error(ErrorCode::BadParams, "extension degree must be at least 1");
  u64 q = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (q > (kOrderLimit - 1) / p) {
      throw Error(ErrorCode::OrderOverflow,
                  std::to_string(p) + "^" + std::to_string(e) + " does not fit below 2^63");
    }
    q *= p;
  }

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->e = e;
  impl->q = q;
  impl->powers.resize(e);
  for (unsigned i = 0; i < e; ++i) impl->powers[i] = i == 0 ? 1 : impl->powers[i - 1] * p;

  if (e > 1) {
    if (modulus) {
      auto& m = *modulus;
      if (m.size() != e + 1 || m.back() != 1) {
        throw Error(ErrorCode::BadParams, "modulus must list e+1 coefficients and be monic");
      }
      for (u64 c : m) {
        if (c >= p) throw Error(ErrorCode::BadParams, "modulus coefficient out of range");
      }
      if (!gfp_poly::is_irreducible(m, p)) {
        throw Error(ErrorCode::ReducibleModulus, "modulus is reducible over GF(" + std::to_string(p) + ")");
      }
      impl->modulus = m;
    } else {
      for (u64 code = 0; code < q; ++code) {
        auto m = impl->to_digits(code);
        m.push_back(1);
        if (m[0] == 0) continue;  // divisible by x
        if (gfp_poly::is_irreducible(m, p)) {
          impl->modulus = std::move(m);
          break;
        }
      }
    }
    if (q <= kTableLimit) impl->build_tables();
  } else if (modulus && !modulus->empty()) {
    throw Error(ErrorCode::BadParams, "prime fields take no modulus");
  }
  return Field(std::move(impl));
}

u64 Field::characteristic() const { return impl_->p; }
unsigned Field::degree() const { return impl_->e; }
u64 Field::order() const { return impl_->q; }
const std::vector<u64>& Field::modulus() const { return impl_->modulus; }

Elem Field::from_int(std::int64_t n) const {
  const auto p = static_cast<std::int64_t>(std::min<u64>(impl_->p, std::numeric_limits<std::int64_t>::max()));
  std::int64_t r = n % p;
  if (r < 0) r += p;
  return Elem{static_cast<u64>(r)};
}

Elem Field::add(Elem a, Elem b) const { return Elem{impl_->add(a.value, b.value)}; }
Elem Field::sub(Elem a, Elem b) const { return Elem{impl_->add(a.value, impl_->neg(b.value))}; }
Elem Field::neg(Elem a) const { return Elem{impl_->neg(a.value)}; }
Elem Field::mul(Elem a, Elem b) const { return Elem{impl_->mul(a.value, b.value)}; }

Elem Field::inv(Elem a) const {
  if (a.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  const auto& im = *impl_;
  if (!im.log_table.empty()) return Elem{im.exp_table[(im.q - 1) - im.log_table[a.value]]};
  return Elem{im.pow(a.value, im.q - 2)};
}

Elem Field::pow(Elem a, u64 n) const { return Elem{impl_->pow(a.value, n)}; }

std::vector<u64> Field::digits(Elem a) const { return impl_->to_digits(a.value); }

Elem Field::from_digits(std::span<const u64> d) const {
  std::vector<u64> v(d.begin(), d.end());
  for (auto& c : v) c %= impl_->p;
  return Elem{impl_->from_digits(v)};
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << impl_->p;
  if (impl_->e > 1) os << "^" << impl_->e;
  os << ")";
  return os.str();
}

bool operator==(const Field& a, const Field& b) {
  if (a.impl_ == b.impl_) return true;
  return a.impl_->p == b.impl_->p && a.impl_->e == b.impl_->e && a.impl_->modulus == b.impl_->modulus;
}

}  // namespace castreg
