#include <doctest.h>

#include "fracfield/error.hpp"
#include "fracfield/json_io.hpp"

using namespace fracfield;

TEST_CASE("problem round trip") {
  json j = json::parse(R"({"kind":"poisson","variant":"quantum","alpha":2.0,"theta":0.0,"mu":1.5,
    "nu":0.5,"k":0.0,"f":{"preset":"delta"},"g":{"preset":"zero"},"source":{"preset":"delta_delta"}})");
  ProblemSpec p = problem_from_json(j);
  CHECK(p.kind == Kind::poisson);
  CHECK(p.ord.mu == 1.5);
  CHECK(p.f_hat.preset == BoundaryTransform::Preset::delta);
  CHECK(p.source.preset == SourceSpec::Preset::delta_delta);
  CHECK(problem_from_json(problem_to_json(p)).ord.nu == 0.5);
  json g = json::parse(R"({"kind":"wave","alpha":2,"mu":2,"nu":1,"f":{"preset":"gaussian","width":0.4}})");
  CHECK(problem_from_json(g).f_hat.width == 0.4);
}

TEST_CASE("problem errors") {
  CHECK_THROWS_AS(problem_from_json(json::parse(R"({"alpha":0.5})")), ValidityError);
  CHECK_THROWS_AS(problem_from_json(json::parse(R"({"kind":"heat"})")), ValidityError);
  CHECK_THROWS_AS(problem_from_json(json::parse(R"({"f":{"preset":"box"}})")), ValidityError);
  CHECK_THROWS_AS(problem_from_json(json::parse(R"({"mu":"two"})")), ValidityError);
}

TEST_CASE("grid forms") {
  GridSpec u = grid_from_json(json::parse(R"({"x":{"start":-1,"stop":1,"count":5},"y":{"start":0.5,"stop":1,"count":2}})"));
  CHECK(u.x.size() == 5);
  CHECK(u.x[1] == -0.5);
  GridSpec l = grid_from_json(json::parse(R"({"x_list":[0.1,0.2],"y_list":[1]})"));
  CHECK(l.y.size() == 1);
  CHECK_THROWS_AS(grid_from_json(json::parse(R"({"x_list":[0],"y_list":[0]})")), ValidityError);
}

TEST_CASE("H spec round trip") {
  HFunctionSpec s = ml_as_h(1.5, 1.0);
  json j = hspec_to_json(s);
  CHECK(j["arg_scale"][0] == -1.0);
  HFunctionSpec t = hspec_from_json(j);
  CHECK(t.lower == s.lower);
  CHECK(t.arg_scale == s.arg_scale);
  CHECK_THROWS_AS(hspec_from_json(json::parse(R"({"m":1})")), ValidityError);
}
