#include <doctest.h>

#include "wreathfock/catalog.hpp"
#include "wreathfock/errors.hpp"
#include "wreathfock/io.hpp"
#include "wreathfock/reports.hpp"

using namespace wreathfock;

namespace {
const std::filesystem::path kData = WREATHFOCK_DATA_DIR;
}

TEST_CASE("group definitions") {
  const Json j = Json::parse(R"({"name": "V4", "degree": 4, "generators": [[1,0,3,2],[2,3,0,1]]})");
  const GroupDefinition def = parse_group_definition(j);
  CHECK(to_json(def) == j);
  const GroupPtr g = build_group(def);
  CHECK(g->size() == 4);
  CHECK(g->label() == "V4");
  CHECK_THROWS_AS(parse_group_definition(Json::parse(R"({"name": "x", "degree": 3, "generators": [[0,1]]})")),
                  InputError);
  CHECK_THROWS_AS(parse_group_definition(Json::parse(R"({"name": "x", "degree": 2, "generators": [[0,0]]})")),
                  InputError);
  CHECK_THROWS_AS(parse_group_definition(Json::parse(R"({"degree": 2, "generators": []})")), InputError);
}

TEST_CASE("data files") {
  const GroupPtr d12 = build_group(parse_group_definition(read_json_file(kData / "groups/d12.json")));
  CHECK(d12->size() == 12);
  CHECK(d12->num_classes() == 6);
  const GroupPtr dic = build_group(parse_group_definition(read_json_file(kData / "groups/dic3.json")));
  CHECK(dic->size() == 12);
  CHECK_THROWS_AS(read_json_file(kData / "missing.json"), InputError);

  const Scenario s3s3 = load_scenario(kData / "scenarios/s3s3.json");
  CHECK(s3s3.g->label() == "S3");
  CHECK(s3s3.k->label() == "C2");
  CHECK(s3s3.alpha.image == s3s3.beta.image);
  const Scenario d = load_scenario(kData / "scenarios/d12.json");
  CHECK(d.g->label() == "D12");
  CHECK(d.g->size() == 12);
  CHECK(d.h->label() == "Dic3");
  const PullbackGroup pb = build_pullback(d.alpha, d.beta);
  CHECK(pb.group()->size() == 24);
}

TEST_CASE("group references") {
  GroupResolver r(kData);
  CHECK(r.resolve_name("S3")->size() == 6);
  CHECK(r.resolve_name("groups/dic3.json")->size() == 12);
  CHECK(r.resolve_name("Dic3") == r.resolve_name("groups/dic3.json"));
  CHECK(r.resolve(Json::parse(R"({"name": "C2x", "degree": 2, "generators": [[1,0]]})"))->size() == 2);
  CHECK_THROWS_AS(r.resolve_name("nope"), InputError);
  CHECK_THROWS_AS(r.resolve(Json(3)), InputError);
}

TEST_CASE("homomorphism files") {
  const GroupPtr s3 = catalog_group("S3"), c2 = catalog_group("C2");
  const Homomorphism by_perm =
      parse_homomorphism(Json::parse(R"({"from": "S3", "to": "C2", "generator_images": [[0,1],[1,0]]})"), s3, c2);
  const Homomorphism by_index = parse_homomorphism(Json::parse(R"({"generator_images": [0, 1]})"), s3, c2);
  CHECK(by_perm.image == by_index.image);
  CHECK_THROWS_AS(parse_homomorphism(Json::parse(R"({"from": "S4", "generator_images": [0, 1]})"), s3, c2),
                  InputError);
  CHECK_THROWS_AS(parse_homomorphism(Json::parse(R"({"generator_images": [1, 1]})"), s3, c2), InputError);
  CHECK_THROWS_AS(parse_homomorphism(Json::parse(R"({"generator_images": [0]})"), s3, c2), InputError);
  CHECK_THROWS_AS(parse_homomorphism(Json::parse(R"({"generator_images": [0, 7]})"), s3, c2), InputError);
}

TEST_CASE("class function round trip") {
  const GroupPtr s3 = catalog_group("S3");
  const ClassFunction f(s3, {Rational(1, 2), 0, -3});
  const Json j = to_json(f);
  CHECK(j.dump() == R"({"group":"S3","values":["1/2","0/1","-3/1"]})");
  CHECK(class_function_from_json(j, s3) == f);
  CHECK_THROWS_AS(class_function_from_json(j, catalog_group("C3")), InputError);
  CHECK_THROWS_AS(class_function_from_json(Json::parse(R"({"group":"S3","values":["1"]})"), s3), InputError);
}

TEST_CASE("type matrix round trip") {
  const TypeMatrix t(5, {{3, 3, 1}, {2, 2, 1}});
  const Json j = to_json(t);
  CHECK(j.dump() == R"({"n":5,"entries":[[2,2,1],[3,3,1]]})");
  CHECK(type_matrix_from_json(j) == t);
  CHECK(parse_type_matrix("[[2,2,1],[3,3,1]]") == t);
  CHECK_THROWS_AS(parse_type_matrix("[[2,2]]"), InputError);
  CHECK_THROWS_AS(parse_type_matrix("nonsense"), InputError);
  CHECK_THROWS_AS(type_matrix_from_json(Json::parse(R"({"n":4,"entries":[[2,2,1]]})")), InputError);
}

TEST_CASE("Fock element round trip") {
  const FockAlgebra f(catalog_group("C2"), 3);
  FockElement x{f.base(), {}};
  x.levels.emplace(0, f.unit());
  x.levels.emplace(2, f.delta(2, 1));
  const Json j = to_json(x);
  CHECK(j["group"] == "C2");
  CHECK(j["levels"]["2"]["group"] == "C2wrS2");
  const FockElement y = fock_element_from_json(j, f);
  CHECK(y.levels.size() == 2);
  CHECK(y.levels.at(2) == x.levels.at(2));
  CHECK(to_json(y) == j);
  CHECK_THROWS_AS(fock_product(f, x, x), ResourceError);  // level 4 exceeds the bound
  FockElement one{f.base(), {}};
  one.levels.emplace(1, f.delta(1, 0));
  const FockElement p = fock_product(f, x, one);
  CHECK(p.levels.size() == 2);
  CHECK(p.levels.at(1) == f.delta(1, 0));
  CHECK(p.levels.at(3) == f.product(f.delta(2, 1), f.delta(1, 0)));
}

TEST_CASE("reports are deterministic") {
  CHECK(golden_examples_report().json.dump() == golden_examples_report().json.dump());
  const Report a = decomposition_json(s3_sign_pullback());
  CHECK(a.json.dump() == decomposition_json(s3_sign_pullback()).json.dump());
  CHECK_FALSE(a.passed);
  CHECK(a.json["witness"][0]["G"] == "(0 1 2)");
  CHECK(render_table(Json{{"a", 1}, {"rows", Json::array({Json{{"x", 1}}, Json{{"x", 22}}})}}) ==
        "a: 1\nrows:\n  x\n  1\n  22\n");
}
