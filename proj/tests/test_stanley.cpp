#include "doctest.h"
#include "slidepol/functors.hpp"
#include "slidepol/stanley.hpp"
#include "support.hpp"

using namespace testing;

namespace {

StanleyDecomposition decomposition(ModuleDesc m, std::vector<StanleySpace> spaces) {
  return {std::move(m), std::move(spaces)};
}

std::uint64_t box_points(const ExponentVector& g) {
  std::uint64_t p = 1;
  for (int x : g) p *= static_cast<std::uint64_t>(x + 1);
  return p;
}

}  // namespace

TEST_CASE("validate_decomposition") {
  const auto sx = quotient(ideal("x,y", "x"));
  CHECK(validate_decomposition(decomposition(sx, {{{0, 0}, {1}}})).valid);

  const auto m = as_ideal(ideal("x,y", "x, y"));
  CHECK(validate_decomposition(decomposition(m, {{{1, 0}, {0}}, {{0, 1}, {1}}, {{1, 1}, {0, 1}}})).valid);

  const auto bad = validate_decomposition(decomposition(sx, {{{0, 0}, {0, 1}}}));
  CHECK_FALSE(bad.valid);
  REQUIRE(bad.witness.has_value());
  CHECK(*bad.witness == ExponentVector{1, 0});
  CHECK(bad.expected == 0);
  CHECK(bad.covered == 1);

  const auto gap = validate_decomposition(decomposition(m, {{{1, 0}, {0}}, {{1, 1}, {0, 1}}}));
  CHECK_FALSE(gap.valid);
  CHECK(*gap.witness == ExponentVector{0, 1});
}

TEST_CASE("exact Stanley depth") {
  const auto whole = sdepth_exact(quotient(MonomialIdeal::zero(Ring::standard(3))));
  CHECK(whole.sdepth == 3);
  CHECK(whole.witness.spaces.size() == 1);
  CHECK(sdepth_exact(as_ideal(ideal("x,y", "x, y"))).sdepth == 1);
  CHECK(sdepth_exact(quotient(ideal("x,y", "x, y"))).sdepth == 0);
  CHECK(sdepth_exact(as_ideal(ideal("x,y,z", "x, y, z"))).sdepth == 2);
  CHECK_THROWS_AS(sdepth_exact(as_ideal(MonomialIdeal::zero(Ring::standard(2)))), Error);
  Limits tight;
  tight.poset = 3;
  CHECK_THROWS_AS(sdepth_exact(quotient(ideal("x,y", "x^3, y^3")), tight), Error);
}

TEST_CASE("property: sdepth matches brute force on tiny posets") {
  std::mt19937_64 rng(43);
  int checked = 0;
  while (checked < 120) {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
    const auto raw = oracle::random_gens(rng, n, 3, 2);
    const auto i = from_gens(raw);
    if (box_points(lcm_join(i)) > 12) continue;
    ++checked;
    for (bool q : {true, false}) {
      const ModuleDesc m{q ? ModuleShape::quotient : ModuleShape::ideal, i};
      const auto r = sdepth_exact(m);
      CHECK(r.sdepth == oracle::sdepth(raw, lcm_join(i).coords(), q));
      CHECK(r.witness.sdepth() == r.sdepth);
      CHECK(validate_decomposition(r.witness).valid);
    }
  }
}

TEST_CASE("property: sdepth is stable under enlarging the box") {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 60; ++t) {
    const auto i = random_ideal(rng, 3, 4, 2);
    ExponentVector g = lcm_join(i);
    for (std::size_t k = 0; k < g.size(); ++k) g[k] += uniform(rng, 0, 1);
    for (bool q : {true, false}) {
      const ModuleDesc m{q ? ModuleShape::quotient : ModuleShape::ideal, i};
      const auto wide = sdepth_exact(m, g);
      CHECK(wide.sdepth == sdepth_exact(m).sdepth);
      CHECK(validate_decomposition(wide.witness).valid);
    }
  }
  CHECK_THROWS_AS(sdepth_exact(quotient(ideal("x,y", "x^2")), ExponentVector{1, 1}), Error);
}

TEST_CASE("push_decomposition") {
  const auto d = decomposition(quotient(ideal("x,y", "x")), {{{0, 0}, {1}}});
  const auto p = push_decomposition(d, 0, 1);
  CHECK(p.module.ideal == ideal("x,y", "x^2"));
  CHECK(p.spaces == std::vector<StanleySpace>{{{0, 0}, {1}}, {{1, 0}, {1}}});
  CHECK(validate_decomposition(p).valid);

  const auto free_axis = decomposition(as_ideal(ideal("x,y", "x")), {{{1, 0}, {0, 1}}});
  const auto q = push_decomposition(free_axis, 0, 1);
  CHECK(q.spaces == std::vector<StanleySpace>{{{2, 0}, {0, 1}}});
  CHECK(validate_decomposition(q).valid);

  const auto invalid = decomposition(quotient(ideal("x,y", "x")), {{{0, 0}, {0, 1}}});
  CHECK_THROWS_AS(push_decomposition(invalid, 0, 1), Error);
}

TEST_CASE("pull_decomposition") {
  const auto d = decomposition(quotient(ideal("x,y", "x^2")), {{{0, 0}, {1}}, {{1, 0}, {1}}});
  const auto p = pull_decomposition(d, 0, 1);
  CHECK(p.module.ideal == ideal("x,y", "x"));
  CHECK(p.spaces == std::vector<StanleySpace>{{{0, 0}, {1}}});
  CHECK(validate_decomposition(p).valid);

  const auto whole = decomposition(quotient(MonomialIdeal::zero(Ring::standard(2))), {{{0, 0}, {0, 1}}});
  CHECK(pull_decomposition(whole, 0, 1).spaces == whole.spaces);
}

TEST_CASE("property: transfers keep validity and Stanley depth") {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 80; ++t) {
    const auto i = random_ideal(rng, 3, 4, 2);
    const ExponentVector a = join(lcm_join(i), ones(i.nvars()));
    const std::size_t axis = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(i.nvars()) - 1));
    const int j = uniform(rng, 1, a[axis] + 1);
    for (bool q : {true, false}) {
      const ModuleDesc m{q ? ModuleShape::quotient : ModuleShape::ideal, i};
      const auto s = sdepth_exact(m);
      const auto pushed = push_decomposition(s.witness, axis, j);
      CHECK(validate_decomposition(pushed).valid);
      CHECK(pushed.sdepth() == s.sdepth);
      const auto back = pull_decomposition(pushed, axis, j);
      CHECK(back.module.ideal == i);
      CHECK(validate_decomposition(back).valid);
      CHECK(back.sdepth() == s.sdepth);
      const ModuleDesc ms{m.shape, slide_ideal(i, axis, j)};
      CHECK(sdepth_exact(ms).sdepth == s.sdepth);
    }
  }
}

TEST_CASE("characteristic poset") {
  const auto p = characteristic_poset(quotient(ideal("x,y", "x^2, x*y, y^2")));
  CHECK(p.g == ExponentVector{2, 2});
  CHECK(p.points == std::vector<ExponentVector>{{0, 0}, {0, 1}, {1, 0}});
}
