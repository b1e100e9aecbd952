#include "doctest.h"
#include "slidepol/bier.hpp"
#include "slidepol/duality.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("Alexander duals of the worked example") {
  const auto i = ideal("x,y,z,w", "x*y*z, x*w, y*w");
  const auto dual = ideal("x,y,z,w", "x*y, x*w, y*w, z*w");
  CHECK(alexander_dual(i, ones(4)) == dual);
  CHECK(alexander_dual(ideal("x,y,z,w", "x^2*y*z, x^2*w, y*w"), {2, 1, 1, 1}) == dual);
  CHECK(alexander_dual(i, {2, 1, 1, 1}) == ideal("x,y,z,w", "x^2*y, x^2*w, y*w, z*w"));
}

TEST_CASE("dual needs a determined ideal") {
  CHECK_THROWS_AS(alexander_dual(ideal("x,y", "x^2"), {1, 1}), Error);
}

TEST_CASE("dual-slide pairing on the worked example") {
  const auto i = ideal("x,y,z,w", "x*y*z, x*w, y*w");
  const auto r = dual_slide_correspondence(i, ones(4), 0, 1);
  CHECK(r.success);
  REQUIRE(r.pairing.size() == 4);
  for (const auto& [from, to] : r.pairing) CHECK(from == to);
}

TEST_CASE("dual-slide pairing for a principal ideal") {
  const auto i = ideal("x", "x");
  CHECK(alexander_dual(i, {1}) == i);
  const auto slid = slide_ideal(i, 0, 1);
  CHECK(slid == ideal("x", "x^2"));
  CHECK(alexander_dual(slid, {2}) == i);
  const auto r = dual_slide_correspondence(i, {1}, 0, 1);
  CHECK(r.success);
  CHECK(r.pairing.at(0).second == ExponentVector{1});
}

TEST_CASE("property: dual agrees with box enumeration and is an involution") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 200; ++t) {
    const auto i = random_ideal(rng);
    ExponentVector a = join(lcm_join(i), ones(i.nvars()));
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += uniform(rng, 0, 1);
    const auto d = alexander_dual(i, a);
    CHECK(to_gens(d) == oracle::alexander_dual(to_gens(i), a.coords()));
    CHECK(alexander_dual(d, a) == i);
    const std::size_t axis = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(a.size()) - 1));
    const int j = uniform(rng, 1, a[axis] + 1);
    CHECK(dual_slide_correspondence(i, a, axis, j).success);
  }
}

TEST_CASE("property: squarefree dual is complements of maximal non-faces") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 2, 5));
    const auto gens = oracle::random_gens(rng, n, 5, 1);
    const auto i = from_gens(gens);
    const auto d = alexander_dual(i, ones(n));
    // Minimal generators of I^v are the complements of the facets of the SR complex of I.
    oracle::Gens expected;
    for (auto f : oracle::sr_facets(gens, n)) {
      oracle::Vec v(n);
      for (std::size_t k = 0; k < n; ++k) v[k] = (f >> k & 1) ? 0 : 1;
      expected.push_back(v);
    }
    CHECK(to_gens(d) == oracle::minimal(expected));
    const auto complex = stanley_reisner_complex(i);
    CHECK(complex.facets().size() == d.size());
  }
}
