#include "doctest.h"
#include "json.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("parsing ideals") {
  const Ring r = parse_vars("x,y,z,w");
  const auto i = parse_ideal(r, "x*y*z, x*w, y*w");
  CHECK(i.gens() == std::vector<ExponentVector>{{0, 1, 0, 1}, {1, 0, 0, 1}, {1, 1, 1, 0}});
  CHECK(parse_ideal(r, " x^2 * y*z,x^2*w , y*w ") == slide_ideal(i, 0, 1));
  CHECK(parse_ideal(r, "").is_zero());
  CHECK(parse_monomial(r, "1") == ExponentVector(4));
  CHECK(parse_monomial(r, "x*x^2") == ExponentVector{3, 0, 0, 0});
  CHECK(parse_vars("a, b', c_2").names() == std::vector<std::string>{"a", "b'", "c_2"});
}

TEST_CASE("parse errors carry a position") {
  const Ring r = parse_vars("x,y");
  try {
    parse_ideal(r, "x*y, q");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 6);
  }
  CHECK_THROWS_AS(parse_ideal(r, "x^0"), ParseError);
  CHECK_THROWS_AS(parse_ideal(r, "x^"), ParseError);
  CHECK_THROWS_AS(parse_ideal(r, "x,,y"), ParseError);
  CHECK_THROWS_AS(parse_vars("x,x"), Error);
  CHECK_THROWS_AS(parse_vars("1x"), Error);
  try {
    parse_ideal(r, "1, x");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unit_ideal);
  }
}

TEST_CASE("rendering") {
  const auto i = ideal("x,y,z,w", "x*y*z, x*w, y*w");
  CHECK(render_ideal(i) == "y*w, x*w, x*y*z");
  CHECK(render_monomial(i.ring(), ExponentVector(4)) == "1");
  CHECK(render_monomial(i.ring(), {2, 0, 0, 3}) == "x^2*w^3");
  const auto p = polarize(i, {2, 1, 1, 1});
  CHECK(render_ideal(p) == "y[1]*w[1], x[1]*w[1], x[1]*y[1]*z[1]");
}

TEST_CASE("property: render and parse are inverse") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 200; ++t) {
    const auto i = random_ideal(rng);
    const std::string text = render_ideal(i);
    CHECK(parse_ideal(i.ring(), text) == i);
    CHECK(render_ideal(parse_ideal(i.ring(), text)) == text);
    const IdealDocument doc{i, join(lcm_join(i), ones(i.nvars()))};
    const std::string json = render_document(doc);
    CHECK(parse_document(json) == doc);
    CHECK(render_document(parse_document(json)) == json);
  }
}

TEST_CASE("ideal documents") {
  const auto doc = parse_document(R"({"vars":["x","y"],"gens":["x^2","x*y"],"a":[2,1]})");
  CHECK(doc.ideal == ideal("x,y", "x^2, x*y"));
  CHECK(doc.a == ExponentVector{2, 1});
  CHECK(parse_document(R"({"vars":["x","y"],"gens":[[1,0],"y^2"]})").ideal == ideal("x,y", "x, y^2"));
  CHECK(parse_document(R"({"vars":["x","y"],"gens":["x"],"exps":[[0,1]]})").ideal == ideal("x,y", "y"));
  const auto grid = parse_document(R"({"vars":["x","y"],"grid":[2,1],"gens":["x[1]*x[2]","y[1]"]})");
  CHECK(grid.ideal.ring().is_grid());
  CHECK(depolarize(grid.ideal) == ideal("x,y", "x^2, y"));
  CHECK_THROWS_AS(parse_document("{\"vars\": [\"x\"],\n \"gens\": [}"), ParseError);
  CHECK_THROWS_AS(parse_document(R"({"vars":["x"],"gens":[[1,2]]})"), Error);
  CHECK_THROWS_AS(parse_document(R"({"vars":["x"],"gens":["x"],"a":[0]})"), Error);
  try {
    parse_document("{\"vars\": [\"x\"],\n  \"gens\": [}");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("decomposition documents") {
  const StanleyDecomposition d{quotient(ideal("x,y", "x^2")), {{{0, 0}, {1}}, {{1, 0}, {1}}}};
  const std::string text = render_decomposition(d);
  const auto back = parse_decomposition(text);
  CHECK(back.module.shape == ModuleShape::quotient);
  CHECK(back.module.ideal == d.module.ideal);
  CHECK(back.spaces == d.spaces);
  const auto j = nlohmann::json::parse(text);
  CHECK(j["spaces"][0]["free"] == nlohmann::json::array({"y"}));
  CHECK_THROWS_AS(parse_decomposition(R"({"module":"sideways","ideal":{"vars":["x"],"gens":["x"]},"spaces":[]})"),
                  Error);
}

TEST_CASE("result JSON shapes") {
  const auto t = nlohmann::json::parse(to_json(multigraded_betti(quotient(ideal("x,y", "x, y")))));
  CHECK(t["projdim"] == 2);
  CHECK(t["entries"].size() == 4);
  const auto dd = nlohmann::json::parse(to_json(depth_dim(quotient(ideal("x,y", "x")))));
  CHECK(dd["depth"] == 1);
  CHECK(dd["dim"] == 1);
  const auto sp = nlohmann::json::parse(to_json(Ring::standard(2), standard_pairs(ideal("x,y", "x^2, x*y"))));
  CHECK(sp["adeg"] == 2);
  const auto lq = nlohmann::json::parse(to_json(ideal("x,y", "x^2, x*y, y^2"),
                                                has_linear_quotients(ideal("x,y", "x^2, x*y, y^2"))));
  CHECK(lq["linear_quotients"] == true);
}
