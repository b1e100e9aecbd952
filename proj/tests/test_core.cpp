#include "doctest.h"
#include "support.hpp"

using namespace testing;

TEST_CASE("minimalize drops divisible generators") {
  const Ring r2 = Ring::standard(2);
  CHECK(MonomialIdeal(r2, {{2, 0}, {3, 0}, {1, 1}}).gens() == std::vector<ExponentVector>{{1, 1}, {2, 0}});
  CHECK(MonomialIdeal(r2, {}).is_zero());
  const Ring r4 = Ring::standard(4);
  const MonomialIdeal i(r4, {{1, 1, 1, 0}, {1, 0, 0, 1}, {0, 1, 0, 1}, {2, 0, 0, 1}});
  CHECK(i == ideal("x,y,z,w", "x*y*z, x*w, y*w"));
  CHECK(i.size() == 3);
}

TEST_CASE("the unit ideal is rejected") {
  try {
    MonomialIdeal(Ring::standard(2), {{0, 0}, {1, 0}});
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unit_ideal);
  }
}

TEST_CASE("membership") {
  CHECK(contains(ideal("x,y", "x*y"), {2, 1}));
  CHECK_FALSE(contains(MonomialIdeal::zero(Ring::standard(3)), {5, 5, 5}));
  CHECK_FALSE(contains(ideal("x,y,z,w", "x*y*z, x*w, y*w"), {0, 0, 1, 1}));
}

TEST_CASE("colon by a monomial") {
  CHECK(colon_monomial(ideal("x,y", "x^2, x*y"), {1, 0}) == ideal("x,y", "x, y"));
  CHECK_FALSE(colon_monomial(ideal("x,y", "x*y"), {1, 1}).has_value());
  CHECK_FALSE(colon_monomial(ideal("x,y", "x^3, x*y, y^3"), {1, 1}).has_value());
}

TEST_CASE("lcm join") {
  CHECK(lcm_join(ideal("x,y,z,w", "x*y*z, x*w, y*w")) == ExponentVector{1, 1, 1, 1});
  CHECK(lcm_join(ideal("x,y,z,w", "x^2*y*z, x^2*w, y*w")) == ExponentVector{2, 1, 1, 1});
  CHECK(lcm_join(ideal("x,y", "x^3*y")) == ExponentVector{3, 1});
}

TEST_CASE("positive determination") {
  CHECK(is_positively_determined(ideal("x,y,z,w", "x*y*z, x*w, y*w"), ones(4)));
  CHECK_FALSE(is_positively_determined(ideal("x,y,z,w", "x^2*y*z, x^2*w, y*w"), ones(4)));
  CHECK(is_positively_determined(ideal("x,y,z,w", "x^2*y*z, x^2*w, y*w"), {2, 1, 1, 1}));
  CHECK_THROWS_AS(require_determined(ideal("x,y", "x^2"), {1, 1}), Error);
}

TEST_CASE("radical") {
  CHECK(radical(ideal("x,y", "x^2*y")) == ideal("x,y", "x*y"));
  const auto sq = ideal("x,y,z", "x*y, y*z");
  CHECK(radical(sq) == sq);
  CHECK(radical(ideal("x,y", "x^3, x^2*y, y^3")) == ideal("x,y", "x, y"));
}

TEST_CASE("property: minimalize, membership and radical agree with scans") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 4));
    const auto raw = oracle::random_gens(rng, n, 6, 3);
    const MonomialIdeal i = from_gens(raw);
    CHECK(to_gens(i) == oracle::minimal(raw));
    CHECK(MonomialIdeal(i.ring(), i.gens()) == i);
    const ExponentVector top = lcm_join(i);
    for_each_point(ExponentVector(n), top, [&](const ExponentVector& c) {
      CHECK(contains(i, c) == oracle::member(raw, c.coords()));
      CHECK(contains(i, c) == !colon_monomial(i, c).has_value());
    });
    CHECK(radical(radical(i)) == radical(i));
  }
}
