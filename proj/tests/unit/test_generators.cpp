#include <doctest.h>

#include "castreg/error.hpp"
#include "castreg/generators.hpp"
#include "castreg/hilbert.hpp"
#include "castreg/position.hpp"
#include "support.hpp"

using namespace castreg;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::SemanticError;
}

// Cross-ratio of four parameters (inf allowed); nullopt when undefined.
std::optional<Elem> cross_ratio(const Field& f, const CurveParam& a, const CurveParam& b, const CurveParam& c,
                                const CurveParam& d) {
  // (a-c)(b-d) / ((a-d)(b-c)), dropping factors that contain infinity
  auto diff = [&](const CurveParam& x, const CurveParam& y) -> std::optional<Elem> {
    if (!x || !y) return std::nullopt;
    return f.sub(*x, *y);
  };
  Elem num = f.one(), den = f.one();
  auto mul_in = [&](Elem& acc, const std::optional<Elem>& x) {
    if (x) acc = f.mul(acc, *x);
  };
  mul_in(num, diff(a, c));
  mul_in(num, diff(b, d));
  mul_in(den, diff(a, d));
  mul_in(den, diff(b, c));
  if (den.is_zero()) return std::nullopt;
  return f.div(num, den);
}

}  // namespace

TEST_CASE("rnc generator") {
  const Field f = Field::make(11);
  const auto c = gen_rnc(f, 2, {Elem{2}, std::nullopt, Elem{0}});
  CHECK(c.point(0).coords == testing_support::elems({1, 2, 4}));
  CHECK(c.point(1).coords == testing_support::elems({0, 0, 1}));
  CHECK(code_of([&] { gen_rnc(f, 2, {Elem{1}, Elem{1}, Elem{2}}); }) == ErrorCode::DuplicateParam);
  CHECK(code_of([&] { gen_rnc(Field::make(3), 3, {Elem{0}, Elem{1}, Elem{2}}); }) == ErrorCode::Degenerate);
  CHECK(code_of([&] { gen_rnc(f, 2, {Elem{11}, Elem{1}, Elem{2}}); }) == ErrorCode::FieldMismatch);
}

TEST_CASE("f2linear profiles") {
  const auto pg3 = gen_f2linear(2, 3, 0, 0, F2Mode::Projective);
  CHECK(pg3.size() == 15);
  CHECK(position_profile(pg3).v == std::vector<std::size_t>{1, 3, 7});
  const auto o = testing_support::oracle_field(pg3.field());
  const auto counts = oracle::incidence_counts(o, testing_support::oracle_points(pg3));
  CHECK(counts[1] == std::set<std::size_t>{3});
  CHECK(counts[2] == std::set<std::size_t>{7});

  bool found = false;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto af = gen_f2linear(8, 3, 5, seed, F2Mode::Affine);
    CHECK(af.size() == 32);
    const Field& f = af.field();
    // the plane through any three points contains their sum
    for (std::size_t a = 0; a < 6; ++a)
      for (std::size_t b = a + 1; b < 6; ++b)
        for (std::size_t c = b + 1; c < 6; ++c) {
          std::vector<Elem> s(4);
          for (std::size_t i = 0; i < 4; ++i)
            s[i] = f.add(f.add(af.point(a).coords[i], af.point(b).coords[i]), af.point(c).coords[i]);
          const std::size_t idx[] = {a, b, c};
          const auto flat = span_flat(af, idx);
          CHECK(in_row_space(rref(flat.basis), s));
        }
    const auto prof = position_profile(af);
    found = found || (prof.semi_uniform && prof.v == std::vector<std::size_t>{1, 2, 4});
  }
  CHECK(found);
  CHECK(gen_f2linear(8, 3, 5, 4, F2Mode::Affine).points() == gen_f2linear(8, 3, 5, 4, F2Mode::Affine).points());
  CHECK(code_of([] { gen_f2linear(1, 3, 5, 0, F2Mode::Affine); }) == ErrorCode::FieldTooSmall);
  CHECK(code_of([] { gen_f2linear(8, 3, 3, 0, F2Mode::Affine); }) == ErrorCode::BadParams);
}

TEST_CASE("monomial curve sections") {
  const Field f9 = Field::make(3, 2);
  // conic (1 : t : t^2) cut by x0 + 2 x1 = 0: t = 1 and the point at infinity
  const auto r = gen_monomial_curve_section(f9, {1, 2}, testing_support::elems({1, 2, 0}));
  CHECK(r.roots == 2);
  CHECK(r.split);
  CHECK(r.params == std::vector<CurveParam>{Elem{1}, std::nullopt});
  CHECK(r.config.ambient_dim() == 1);

  // char 2, exponents (1, 4) over GF(16): roots form a coset of ker(t -> t + t^4)
  const Field f = Field::make(2, 4);
  const Elem r0{2};
  const Elem c0 = f.add(r0, f.pow(r0, 4));
  const auto sec = gen_monomial_curve_section(f, {1, 4}, {c0, f.one(), f.one()});
  std::vector<Elem> kernel;
  for (std::uint64_t t = 0; t < 16; ++t)
    if (f.add(Elem{t}, f.pow(Elem{t}, 4)).is_zero()) kernel.push_back(Elem{t});
  CHECK(kernel.size() == 4);
  CHECK(sec.roots == 4);
  CHECK(sec.split);
  for (const auto& t : sec.params) {
    REQUIRE(t);
    CHECK(std::find(kernel.begin(), kernel.end(), f.sub(*t, r0)) != kernel.end());
  }
  for (auto k : kernel)
    for (auto k2 : kernel) CHECK(std::find(kernel.begin(), kernel.end(), f.add(k, k2)) != kernel.end());

  CHECK(code_of([] { gen_monomial_curve_section(Field::make(7), {1, 2}, testing_support::elems({1, 0, 1})); }) ==
        ErrorCode::EmptySection);
  CHECK(code_of([] { gen_monomial_curve_section(Field::make(7), {2, 1}, testing_support::elems({1, 0, 1})); }) ==
        ErrorCode::BadParams);
  CHECK(code_of([] { gen_monomial_curve_section(Field::make(7), {1, 2}, testing_support::elems({0, 0, 0})); }) ==
        ErrorCode::BadParams);
}

TEST_CASE("random generator") {
  const Field f = Field::make(101);
  const auto a = gen_random(f, 2, 7, 1);
  CHECK(a.points() == gen_random(f, 2, 7, 1).points());
  CHECK(a.points() != gen_random(f, 2, 7, 2).points());
  CHECK(gen_random(Field::make(2), 2, 7, 3).size() == 7);
  CHECK(code_of([] { gen_random(Field::make(2), 2, 8, 0); }) == ErrorCode::FieldTooSmall);
  CHECK(code_of([&] { gen_random(f, 3, 3, 0); }) == ErrorCode::Degenerate);
}

TEST_CASE("rnc membership") {
  const Field f = Field::make(101);
  std::vector<CurveParam> ps{Elem{3}, Elem{17}, std::nullopt, Elem{40}, Elem{0}, Elem{99}, Elem{56}, Elem{5}};
  const auto c = gen_rnc(f, 3, ps);
  const auto m = rnc_membership(c);
  REQUIRE(m.member);
  REQUIRE(m.params.size() == ps.size());
  // recovered parameters differ from the inputs by a Moebius map: cross-ratios agree
  for (std::size_t i = 3; i < ps.size(); ++i) {
    CHECK(cross_ratio(f, ps[0], ps[1], ps[2], ps[i]) == cross_ratio(f, m.params[0], m.params[1], m.params[2], m.params[i]));
  }

  // invariance under a change of coordinates
  std::vector<std::vector<Elem>> moved;
  for (const auto& p : c.points()) {
    const auto& x = p.coords;
    moved.push_back({f.add(x[0], x[1]), f.add(x[1], f.mul(Elem{3}, x[3])), f.add(x[2], x[0]), f.add(x[3], x[2])});
  }
  CHECK(rnc_membership(PointConfig::make(f, 3, moved)).member);

  auto pts = c.points();
  std::vector<std::vector<Elem>> raw;
  for (const auto& p : pts) raw.push_back(p.coords);
  raw[5] = testing_support::elems({1, 2, 3, 5});
  CHECK_FALSE(rnc_membership(PointConfig::make(f, 3, raw)).member);

  CHECK_FALSE(rnc_membership(gen_f2linear(1, 3, 0, 0, F2Mode::Projective)).member);
  CHECK(code_of([&] { rnc_membership(gen_rnc(f, 3, {Elem{1}, Elem{2}, Elem{3}, Elem{4}, Elem{5}})); }) ==
        ErrorCode::TooFew);
}
