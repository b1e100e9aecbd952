#include "doctest.h"
#include "slidepol/duality.hpp"
#include "slidepol/functors.hpp"
#include "support.hpp"

using namespace testing;

namespace {

ExponentVector random_signed(std::mt19937_64& rng, std::size_t n) {
  ExponentVector a(n);
  for (std::size_t k = 0; k < n; ++k) a[k] = uniform(rng, -5, 5);
  return a;
}

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::invalid_argument;
}

}  // namespace

TEST_CASE("point maps") {
  CHECK(point_map(PointMap::tau, {2, 0}, 0, 1) == ExponentVector{3, 0});
  CHECK(point_map(PointMap::tau, {0, 0}, 0, 1) == ExponentVector{0, 0});
  CHECK(point_map(PointMap::sigma, {3, 0}, 0, 1) == ExponentVector{2, 0});
  CHECK(point_map(PointMap::lambda, {0, 4}, 1, 5) == ExponentVector{0, 5});
  CHECK(point_map(PointMap::rho, {0, 5}, 1, 5) == ExponentVector{0, 4});
}

TEST_CASE("property: point-map identities") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 4));
    const ExponentVector a = random_signed(rng, n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto e = unit_vector(n, i);
      for (int j = -3; j <= 3; ++j) {
        const auto t_a = point_map(PointMap::tau, a, i, j);
        CHECK(point_map(PointMap::sigma, t_a, i, j) == a);
        CHECK(-t_a == point_map(PointMap::rho, -a, i, -j));
        CHECK(t_a == point_map(PointMap::rho, a, i, j - 1) + e);
        CHECK(point_map(PointMap::sigma, a, i, j) == point_map(PointMap::lambda, a, i, j) - e);
      }
    }
  }
}

TEST_CASE("tau after sigma is not the identity") {
  const ExponentVector a{1, 0};
  CHECK(point_map(PointMap::tau, point_map(PointMap::sigma, a, 0, 1), 0, 1) != a);
}

TEST_CASE("slide_ideal") {
  CHECK(slide_ideal(ideal("x,y,z,w", "x*y*z, x*w, y*w"), 0, 1) == ideal("x,y,z,w", "x^2*y*z, x^2*w, y*w"));
  const auto twice = slide_ideal(slide_ideal(ideal("x,y", "x^2, x*y, y^2"), 0, 1), 1, 2);
  CHECK(twice == ideal("x,y", "x^3, x^2*y, y^3"));
  const auto i = ideal("x,y", "x^2*y, y^3");
  CHECK(slide_ideal(i, 0, 3) == i);
  CHECK(code_of([&] { slide_ideal(i, 0, 0); }) == Errc::invalid_argument);
  CHECK(code_of([&] { slide_ideal(i, 2, 1); }) == Errc::invalid_argument);
}

TEST_CASE("contract_ideal") {
  CHECK(contract_ideal(ideal("x,y,z,w", "x^2*y*z, x^2*w, y*w"), 0, 1) == ideal("x,y,z,w", "x*y*z, x*w, y*w"));
  CHECK(contract_ideal(ideal("x,y", "x^3, x^2*y, y^3"), 1, 2) == ideal("x,y", "x^3, x^2*y, y^2"));
  CHECK(code_of([] { contract_ideal(ideal("x,y", "x*y"), 0, 1); }) == Errc::precondition);
}

TEST_CASE("compress") {
  const auto i = ideal("x,y", "x^3, x^2*y, y^3");
  const auto c = compress(i);
  CHECK(c.core == ideal("x,y", "x^2, x*y, y^2"));
  CHECK(c.script.size() == 2);
  CHECK(apply_script(c.core, c.script) == i);

  const auto ok = ideal("x,y", "x^2, x*y, y^2");
  CHECK(compress(ok).core == ok);
  CHECK(compress(ok).script.empty());

  const auto x5 = ideal("x", "x^5");
  const auto c5 = compress(x5);
  CHECK(c5.core == ideal("x", "x"));
  CHECK(c5.script.size() == 4);
  CHECK(apply_script(c5.core, c5.script) == x5);
}

TEST_CASE("property: slide and compress invariants") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    const auto i = random_ideal(rng, 4, 5, 4);
    const std::size_t axis = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(i.nvars()) - 1));
    const int j = uniform(rng, 1, 5);
    const auto s = slide_ideal(i, axis, j);
    REQUIRE(s.size() == i.size());
    for (std::size_t g = 0; g < i.size(); ++g)
      for (std::size_t k = 0; k < i.nvars(); ++k)
        if (k != axis) CHECK(s.gens()[g][k] == i.gens()[g][k]);
    CHECK(contract_ideal(s, axis, j) == i);

    const auto c = compress(i);
    CHECK(apply_script(c.core, c.script) == i);
    CHECK(has_consecutive_exponents(c.core));
    for (std::size_t k = 0; k < i.nvars(); ++k) {
      std::set<int> seen;
      for (const auto& g : c.core.gens()) seen.insert(g[k]);
      const int hi = *seen.rbegin();
      if (hi == 0) continue;
      for (int e = 1; e <= hi; ++e) CHECK(seen.count(e) == 1);
    }
  }
}

TEST_CASE("polarize and copolarize") {
  const auto i = ideal("x,y,z,w", "x*y*z, x*w, y*w");
  const auto p = polarize(i, {2, 2, 2, 2});
  const Ring& g = p.ring();
  CHECK(contains(p, parse_monomial(g, "x[1]*y[1]*z[1]")));
  CHECK(p.size() == 3);

  const auto same = polarize(i, ones(4));
  CHECK(same == parse_ideal(Ring::grid(i.ring().names(), {1, 1, 1, 1}), "x[1]*y[1]*z[1], x[1]*w[1], y[1]*w[1]"));

  CHECK(polarize(ideal("x,y", "x^2, y"), {2, 3}) ==
        parse_ideal(Ring::grid({"x", "y"}, {2, 3}), "x[1]*x[2], y[1]"));

  const auto d = ideal("x,y,z,w", "x*y, x*w, y*w, z*w");
  const auto cp = copolarize(d, {2, 2, 2, 2});
  CHECK(contains(cp, parse_monomial(cp.ring(), "x[2]*y[2]")));
  CHECK(copolarize(d, {2, 2, 2, 2}) == reverse_slots(polarize(d, {2, 2, 2, 2})));

  CHECK(polarize_degree({2, 0}, {2, 1}) == ExponentVector{1, 1, 0});
  CHECK(copolarize_degree({1, 1}, {3, 1}) == ExponentVector{0, 0, 1, 1});
  CHECK(code_of([] { polarize(ideal("x,y", "x^3"), {2, 1}); }) == Errc::not_determined);
}

TEST_CASE("depolarize") {
  CHECK(depolarize(parse_ideal(Ring::grid({"x", "y"}, {2, 1}), "x[1]*x[2], y[1]")) == ideal("x,y", "x^2, y"));
  const Ring grid = Ring::grid({"x", "y", "z"}, {2, 3, 3});
  const auto j = parse_ideal(grid,
                             "x[1]*x[2]*y[3], x[1]*x[2]*z[3], x[1]*y[2]*z[3], x[1]*z[2]*z[3], "
                             "y[1]*y[2]*y[3], y[1]*y[2]*z[3], y[1]*z[2]*z[3]");
  CHECK(depolarize(j) == ideal("x,y,z", "x^2*y, x^2*z, x*y*z, x*z^2, y^3, y^2*z, y*z^2"));
}

TEST_CASE("property: polarization round trips") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const auto i = random_ideal(rng);
    ExponentVector a = join(lcm_join(i), ones(i.nvars()));
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += uniform(rng, 0, 1);
    const auto p = polarize(i, a);
    const auto q = copolarize(i, a);
    CHECK(is_squarefree(p));
    CHECK(is_squarefree(q));
    CHECK(p.size() == i.size());
    CHECK(q.size() == i.size());
    CHECK(depolarize(p) == i);
    CHECK(depolarize(q) == i);
    CHECK(reverse_slots(reverse_slots(p)) == p);
  }
}

TEST_CASE("inflate on a plain ring") {
  const auto j = ideal("x,y,z,w", "x*y*z, x*w, y*w");
  const auto inf = inflate(j, 0);
  CHECK(inf == ideal("x,x',y,z,w", "x*x'*y*z, x*x'*w, y*w"));
  const auto unused = ideal("x,y,z", "x*y");
  const auto grown = inflate(unused, 2);
  CHECK(grown.nvars() == 4);
  CHECK(grown == ideal("x,y,z,z'", "x*y"));
  CHECK(code_of([] { inflate(ideal("x,y", "x^2"), 0); }) == Errc::invalid_argument);
}

TEST_CASE("inflate on a grid ring") {
  const auto p = polarize(ideal("x,y", "x*y, y^2"), {2, 2});
  const auto inf = inflate(p, p.ring().cell_index(0, 1));
  CHECK(inf.ring().slots() == std::vector<int>{3, 2});
  CHECK(inf == parse_ideal(inf.ring(), "x[1]*x[2]*y[1], y[1]*y[2]"));
}

TEST_CASE("property: inflation commutes with slot reversal") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 200; ++t) {
    const auto i = random_ideal(rng, 3, 4, 2);
    ExponentVector s = lcm_join(i) + ones(i.nvars());
    const auto p = polarize(i, s);
    const std::size_t axis = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(i.nvars()) - 1));
    const int j = uniform(rng, 1, s[axis]);
    const auto lhs = reverse_slots(inflate(p, p.ring().cell_index(axis, j)));
    const auto rhs = inflate(reverse_slots(p), p.ring().cell_index(axis, s[axis] + 1 - j));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("generalized polarization") {
  const auto i = ideal("x,y,z", "x^2*y, x^2*z, x*y*z, x*z^2, y^3, y^2*z, y*z^2");
  const ExponentVector a{2, 3, 3};
  const Ring grid = Ring::grid({"x", "y", "z"}, a.coords());
  const auto j = parse_ideal(grid,
                             "x[1]*x[2]*y[3], x[1]*x[2]*z[3], x[1]*y[2]*z[3], x[1]*z[2]*z[3], "
                             "y[1]*y[2]*y[3], y[1]*y[2]*z[3], y[1]*z[2]*z[3]");
  CHECK(is_generalized_polarization(i, j, a));
  CHECK(is_generalized_polarization(i, polarize(i, a), a));
  const auto other = ideal("x,y,z", "x^2*y, x*z, y^3");
  CHECK_FALSE(is_generalized_polarization(i, polarize(other, a), a));
}
