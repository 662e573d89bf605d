#include <doctest.h>

#include "castreg/error.hpp"
#include "castreg/generators.hpp"
#include "castreg/position.hpp"
#include "support.hpp"

using namespace castreg;

TEST_CASE("PG(N,2) profiles") {
  const auto pg3 = gen_f2linear(1, 3, 0, 0, F2Mode::Projective);
  const auto c = classify_position(pg3);
  CHECK(c.semi_uniform);
  CHECK(c.profile.v == std::vector<std::size_t>{1, 3, 7});
  CHECK_FALSE(c.linear_general);
  CHECK(c.dichotomy == Dichotomy::Multisecant);
  CHECK(growth_check(c.profile));
}

TEST_CASE("profile agrees with incidence oracle") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Field f = Field::make(seed % 2 ? 3 : 2, 2);
    const auto c = gen_random(f, 2 + seed % 2, 7 + seed, seed);
    const auto o = testing_support::oracle_field(f);
    const auto counts = oracle::incidence_counts(o, testing_support::oracle_points(c));
    bool semi = true;
    for (const auto& s : counts) semi = semi && s.size() == 1;
    const auto prof = position_profile(c);
    CHECK(prof.semi_uniform == semi);
    if (semi) {
      for (std::size_t i = 0; i < counts.size(); ++i) CHECK(prof.v[i] == *counts[i].begin());
    } else {
      REQUIRE(prof.witness);
      CHECK(prof.witness->first.dim == prof.witness->second.dim);
      CHECK(prof.witness->first.incident_count() != prof.witness->second.incident_count());
    }
  }
}

TEST_CASE("dichotomy labels") {
  const Field f = Field::make(101);
  const auto rnc = gen_rnc(f, 3, {Elem{1}, Elem{2}, Elem{3}, Elem{4}, Elem{5}, Elem{6}});
  const auto c = classify_position(rnc);
  CHECK(c.linear_general);
  CHECK(c.dichotomy == Dichotomy::NotApplicable);
  CHECK(to_string(c.dichotomy) == "none");
  CHECK(c.uniform == true);

  const auto af = gen_f2linear(8, 3, 5, 0, F2Mode::Affine);
  const auto a = classify_position(af);
  if (a.semi_uniform && a.profile.v == std::vector<std::size_t>{1, 2, 4}) {
    CHECK(a.dichotomy == Dichotomy::PlaneExtraPoint);
    CHECK(to_string(a.dichotomy) == "ii");
  }
  CHECK_FALSE(a.uniform.has_value());

  // AG(2,3) inside P^3 over GF(3): lines have 3 points but v(2) = 9
  const Field f3 = Field::make(3);
  std::vector<std::vector<Elem>> pts;
  for (std::uint64_t x = 0; x < 3; ++x)
    for (std::uint64_t y = 0; y < 3; ++y) pts.push_back({Elem{1}, Elem{x}, Elem{y}, Elem{0}});
  pts.push_back({Elem{0}, Elem{0}, Elem{0}, Elem{1}});
  const auto mixed = classify_position(PointConfig::make(f3, 3, pts));
  CHECK_FALSE(mixed.semi_uniform);
  CHECK(mixed.dichotomy == Dichotomy::NotApplicable);
}

TEST_CASE("growth check") {
  PositionProfile bad{true, {1, 3, 5}, std::nullopt};
  CHECK_FALSE(growth_check(bad));
  PositionProfile good{true, {1, 3, 7, 15}, std::nullopt};
  CHECK(growth_check(good));
  PositionProfile none{false, {}, std::nullopt};
  CHECK_THROWS_AS(growth_check(none), Error);
}
