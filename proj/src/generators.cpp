// SPDX-License-Identifier: Apache-2.0
#include "castreg/generators.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "castreg/error.hpp"
#include "castreg/matrix.hpp"

namespace castreg {

std::string_view to_string(F2Mode m) { return m == F2Mode::Affine ? "affine" : "projective"; }

std::mt19937_64 generator_stream(std::uint64_t seed, std::uint64_t attempt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(attempt), static_cast<std::uint32_t>(attempt >> 32)};
  return std::mt19937_64(seq);
}

std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::BadParams, "empty range");
  const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
  while (true) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % n;
  }
}

PointConfig gen_rnc(const Field& field, std::size_t n, const std::vector<CurveParam>& params) {
  if (n < 1) throw Error(ErrorCode::BadParams, "need N >= 1");
  std::set<CurveParam> seen;
  std::vector<std::vector<Elem>> pts;
  for (const auto& t : params) {
    if (t && !field.contains(*t)) throw Error(ErrorCode::FieldMismatch, "parameter outside " + field.describe());
    if (!seen.insert(t).second) {
      throw Error(ErrorCode::DuplicateParam, "repeated parameter " + (t ? std::to_string(t->value) : "inf"));
    }
    std::vector<Elem> x(n + 1, field.zero());
    if (t) {
      Elem power = field.one();
      for (std::size_t i = 0; i <= n; ++i) {
        x[i] = power;
        power = field.mul(power, *t);
      }
    } else {
      x[n] = field.one();
    }
    pts.push_back(std::move(x));
  }
  return PointConfig::make(field, n, pts);
}

namespace {

// Rank over F2 of bit vectors, each stored as a list of 64-bit words.
bool f2_independent(std::vector<std::vector<std::uint64_t>> rows) {
  const std::size_t words = rows.empty() ? 0 : rows[0].size();
  std::size_t rank = 0;
  for (std::size_t bit = 0; bit < words * 64 && rank < rows.size(); ++bit) {
    const std::size_t w = bit / 64;
    const std::uint64_t mask = std::uint64_t{1} << (bit % 64);
    std::size_t piv = rank;
    while (piv < rows.size() && !(rows[piv][w] & mask)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && (rows[r][w] & mask)) {
        for (std::size_t k = 0; k < words; ++k) rows[r][k] ^= rows[rank][k];
      }
    }
    ++rank;
  }
  return rank == rows.size();
}

}  // namespace

PointConfig gen_f2linear(unsigned e, std::size_t n, std::size_t k, std::uint64_t seed, F2Mode mode,
                         std::size_t budget) {
  if (n < 1) throw Error(ErrorCode::BadParams, "need N >= 1");
  if (e < 1) throw Error(ErrorCode::BadParams, "need e >= 1");
  const Field field = Field::make(2, e);

  if (mode == F2Mode::Projective) {
    if (n > 20) throw Error(ErrorCode::TooLarge, "PG(N,2) with N > 20");
    std::vector<std::vector<Elem>> pts;
    const std::uint64_t count = (std::uint64_t{1} << (n + 1)) - 1;
    for (std::uint64_t m = 1; m <= count; ++m) {
      std::vector<Elem> x(n + 1);
      for (std::size_t j = 0; j <= n; ++j) x[j] = Elem{(m >> (n - j)) & 1};
      pts.push_back(std::move(x));
    }
    return PointConfig::make(field, n, pts);
  }

  if (k <= n) throw Error(ErrorCode::BadParams, "affine mode needs k > N");
  if (k > static_cast<std::size_t>(e) * n) {
    throw Error(ErrorCode::FieldTooSmall, "F2-dimension of GF(2^" + std::to_string(e) + ")^N is below k");
  }
  if (k > 20) throw Error(ErrorCode::TooLarge, "affine mode with k > 20");

  const std::size_t bits = static_cast<std::size_t>(e) * n;
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    auto rng = generator_stream(seed, attempt);
    std::vector<std::vector<Elem>> gens(k, std::vector<Elem>(n));
    std::vector<std::vector<std::uint64_t>> as_bits(k, std::vector<std::uint64_t>((bits + 63) / 64, 0));
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        gens[j][i] = Elem{bounded_draw(rng, field.order())};
        for (unsigned b = 0; b < e; ++b) {
          if ((gens[j][i].value >> b) & 1) {
            const std::size_t pos = i * e + b;
            as_bits[j][pos / 64] |= std::uint64_t{1} << (pos % 64);
          }
        }
      }
    }
    if (!f2_independent(as_bits)) continue;
    std::vector<std::vector<Elem>> pts;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) {
      std::vector<Elem> x(n + 1, field.zero());
      x[0] = field.one();
      for (std::size_t j = 0; j < k; ++j) {
        if (!((m >> j) & 1)) continue;
        for (std::size_t i = 0; i < n; ++i) x[i + 1] = field.add(x[i + 1], gens[j][i]);
      }
      pts.push_back(std::move(x));
    }
    try {
      return PointConfig::make(field, n, pts);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::Degenerate) throw;
    }
  }
  throw Error(ErrorCode::RetriesExhausted, "no spanning F2-linear embedding within " + std::to_string(budget) + " attempts");
}

SectionResult gen_monomial_curve_section(const Field& field, const std::vector<std::uint64_t>& exponents,
                                         const std::vector<Elem>& hyperplane) {
  if (exponents.size() < 2) throw Error(ErrorCode::BadParams, "need at least two exponents");
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0 || (i > 0 && exponents[i] <= exponents[i - 1])) {
      throw Error(ErrorCode::BadParams, "exponents must be positive and strictly increasing");
    }
  }
  const std::size_t n = exponents.size() - 1;
  if (hyperplane.size() != n + 2) {
    throw Error(ErrorCode::BadParams, "hyperplane needs " + std::to_string(n + 2) + " coefficients");
  }
  for (Elem c : hyperplane)
    if (!field.contains(c)) throw Error(ErrorCode::FieldMismatch, "coefficient outside " + field.describe());
  const auto pivot_it = std::find_if(hyperplane.begin(), hyperplane.end(), [](Elem c) { return !c.is_zero(); });
  if (pivot_it == hyperplane.end()) throw Error(ErrorCode::BadParams, "zero hyperplane");
  if (field.order() > (std::uint64_t{1} << 20)) throw Error(ErrorCode::TooLarge, "parameter scan over more than 2^20 elements");
  const auto pivot = static_cast<std::size_t>(pivot_it - hyperplane.begin());

  auto curve_point = [&](const CurveParam& t) {
    std::vector<Elem> x(n + 2, field.zero());
    if (t) {
      x[0] = field.one();
      for (std::size_t i = 0; i <= n; ++i) x[i + 1] = field.pow(*t, exponents[i]);
    } else {
      x[n + 1] = field.one();
    }
    return x;
  };

  SectionResult out{PointConfig::make(field, 1, std::vector<std::vector<Elem>>{{field.one(), field.zero()},
                                                                              {field.zero(), field.one()}}),
                    {}, 0, exponents.back(), false};
  std::set<ProjectivePoint> seen;
  std::vector<std::vector<Elem>> pts;
  auto consider = [&](const CurveParam& t) {
    auto x = curve_point(t);
    Elem s = field.zero();
    for (std::size_t i = 0; i < x.size(); ++i) s = field.add(s, field.mul(hyperplane[i], x[i]));
    if (!s.is_zero()) return;
    ++out.roots;
    x.erase(x.begin() + static_cast<std::ptrdiff_t>(pivot));
    auto p = normalize_point(field, x);
    if (!seen.insert(p).second) return;
    out.params.push_back(t);
    pts.push_back(p.coords);
  };
  for (std::uint64_t v = 0; v < field.order(); ++v) consider(Elem{v});
  consider(std::nullopt);
  if (pts.empty()) throw Error(ErrorCode::EmptySection, "no curve point on the hyperplane over " + field.describe());
  try {
    out.config = PointConfig::make(field, n, pts);
  } catch (const Error& err) {
    if (err.code() == ErrorCode::Degenerate) throw Error(ErrorCode::NotSpanning, err.what());
    throw;
  }
  out.split = out.roots == out.degree;
  return out;
}

PointConfig gen_random(const Field& field, std::size_t n, std::size_t d, std::uint64_t seed, std::size_t budget) {
  if (n < 1) throw Error(ErrorCode::BadParams, "need N >= 1");
  if (d <= n) throw Error(ErrorCode::Degenerate, std::to_string(d) + " points cannot span P^" + std::to_string(n));
  // number of points of P^N, saturating
  std::uint64_t total = 0, power = 1;
  for (std::size_t i = 0; i <= n; ++i) {
    total += power;
    if (power > (std::uint64_t{1} << 40) / field.order()) {
      total = std::numeric_limits<std::uint64_t>::max();
      break;
    }
    power *= field.order();
  }
  if (d > total) throw Error(ErrorCode::FieldTooSmall, "P^" + std::to_string(n) + " over " + field.describe() + " has fewer than d points");

  const std::size_t max_draws = 1000 * d + 100000;
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    auto rng = generator_stream(seed, attempt);
    std::set<ProjectivePoint> seen;
    std::vector<std::vector<Elem>> pts;
    for (std::size_t draw = 0; draw < max_draws && pts.size() < d; ++draw) {
      std::vector<Elem> x(n + 1);
      for (auto& c : x) c = Elem{bounded_draw(rng, field.order())};
      if (std::all_of(x.begin(), x.end(), [](Elem c) { return c.is_zero(); })) continue;
      auto p = normalize_point(field, x);
      if (seen.insert(p).second) pts.push_back(std::move(p.coords));
    }
    if (pts.size() < d) continue;
    try {
      return PointConfig::make(field, n, pts);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::Degenerate) throw;
    }
  }
  throw Error(ErrorCode::RetriesExhausted, "no spanning sample within " + std::to_string(budget) + " attempts");
}

RncMembership rnc_membership(const PointConfig& config) {
  const Field& f = config.field();
  const std::size_t n = config.ambient_dim();
  const std::size_t d = config.size();
  if (d < n + 3) throw Error(ErrorCode::TooFew, "need at least N+3 = " + std::to_string(n + 3) + " points");

  // Columns of b are the first N+1 points.
  Matrix b(f, n + 1, n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t r = 0; r <= n; ++r) b.at(r, i) = config.point(i).coords[r];
  const auto lambda = solve(b, config.point(n + 1).coords);
  RncMembership out;
  if (rank(b) != n + 1 || !lambda) return out;
  if (std::any_of(lambda->begin(), lambda->end(), [](Elem x) { return x.is_zero(); })) return out;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t r = 0; r <= n; ++r) b.at(r, i) = f.mul(b.at(r, i), (*lambda)[i]);

  auto frame_coords = [&](std::size_t j) { return *solve(b, config.point(j).coords); };

  const auto c = frame_coords(n + 2);
  std::vector<Elem> bs(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (c[i].is_zero()) return out;
    bs[i] = f.neg(f.inv(c[i]));
  }
  if (std::set<Elem>(bs.begin(), bs.end()).size() != bs.size()) return out;

  std::vector<CurveParam> params;
  for (std::size_t i = 0; i <= n; ++i) params.emplace_back(bs[i]);
  params.emplace_back(std::nullopt);
  params.emplace_back(f.zero());
  for (std::size_t j = n + 3; j < d; ++j) {
    const auto q = frame_coords(j);
    Matrix sys(f, n + 1, 3);
    for (std::size_t i = 0; i <= n; ++i) {
      sys.at(i, 0) = q[i];
      sys.at(i, 1) = f.neg(f.mul(q[i], bs[i]));
      sys.at(i, 2) = f.neg(f.one());
    }
    const Matrix ker = kernel_basis(sys);
    CurveParam s;
    bool found = false;
    for (std::size_t r = 0; r < ker.rows() && !found; ++r) {
      if (ker.at(r, 1).is_zero() || ker.at(r, 2).is_zero()) continue;
      s = f.div(ker.at(r, 0), ker.at(r, 1));
      found = true;
    }
    if (!found) return out;
    params.push_back(s);
  }
  out.member = true;
  out.params = std::move(params);
  return out;
}

}  // namespace castreg
