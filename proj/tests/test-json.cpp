// subpower - finite semigroups and the subpower membership problem

#include <memory>  // for make_shared

#include "catch_amalgamated.hpp"

#include "subpower/catalog.hpp"
#include "subpower/exception.hpp"
#include "subpower/json_io.hpp"
#include "subpower/rees.hpp"

namespace subpower {

  using Matrix = std::vector<std::vector<std::uint8_t>>;

  TEST_CASE("json 001: semigroup round trip", "[json]") {
    for (auto const& name : {"brandt_b2_1", "full_transformation:3", "z2", "null:3"}) {
      auto S = catalog(name).semigroup;
      auto j = semigroup_to_json(S);
      CHECK(semigroup_from_json(j) == S);
      CHECK(semigroup_from_json(json::parse(j.dump())) == S);
    }
    auto j = semigroup_to_json(catalog("brandt_b2_1").semigroup);
    CHECK(j["identity"] == 5);
    CHECK(j["zero"] == 4);
    CHECK(j["names"][1] == "[1,2]");
    CHECK(semigroup_to_json(catalog("z2").semigroup)["zero"].is_null());
  }

  TEST_CASE("json 002: malformed semigroups", "[json]") {
    CHECK_THROWS_AS(semigroup_from_json(json::parse(R"({"names": ["a"]})")), InputError);
    CHECK_THROWS_AS(semigroup_from_json(json::parse(R"({"table": [[0, 1], [1]]})")),
                    InputError);
    CHECK_THROWS_AS(semigroup_from_json(json::parse(R"({"table": [[2, 0], [0, 0]]})")),
                    InputError);
    // aa = ab = b and ba = bb = a, so (aa)b = a but a(ab) = b.
    CHECK_THROWS_AS(
        semigroup_from_json(json::parse(R"({"table": [[1, 1], [0, 0]]})")),
        InputError);
    CHECK_THROWS_AS(semigroup_from_json(json::parse("[1, 2]")), InputError);
  }

  TEST_CASE("json 003: Rees round trip", "[json]") {
    ReesStructure R({{1, 0}, {1, 1}}, true);
    auto          j = rees_to_json(R);
    CHECK(j["adjoin_identity"] == true);
    CHECK(rees_from_json(j) == R);
    CHECK_THROWS_AS(rees_from_json(json::parse(R"({"matrix": [[1, 2]]})")), InputError);
    CHECK_THROWS_AS(rees_from_json(json::parse(R"({"matrix": [[1], [1, 0]]})")), InputError);
    CHECK_THROWS_AS(rees_from_json(json::parse(R"({"matrix": []})")), InputError);
  }

  TEST_CASE("json 004: ambients", "[json]") {
    auto a = ambient_from_json(json("brandt_b2"));
    CHECK(a.semigroup->size() == 5);
    CHECK(a.rees.has_value());
    auto b = ambient_from_json(json::parse(R"({"matrix": [[1, 0], [0, 1]]})"));
    CHECK(*b.semigroup == *a.semigroup);
    CHECK(b.rees == a.rees);
    auto c = ambient_from_json(semigroup_to_json(*a.semigroup));
    CHECK(*c.semigroup == *a.semigroup);
    CHECK(!c.rees.has_value());
    CHECK_THROWS_AS(ambient_from_json(json("no_such")), InputError);
    CHECK_THROWS_AS(ambient_from_json(json(3)), InputError);
  }

  TEST_CASE("json 005: instance round trip", "[json]") {
    auto        entry = catalog("brandt_b2");
    SmpInstance inst;
    inst.ambient    = std::make_shared<FiniteSemigroup const>(entry.semigroup);
    inst.generators = {PowerTuple{{1, 0}}, PowerTuple{{1, 4}}};
    inst.target     = PowerTuple{{1, 4}};
    auto j          = instance_to_json(inst);
    CHECK(j["n"] == 2);
    CHECK(j["semigroup"].contains("table"));
    auto back = instance_from_json(json::parse(j.dump()));
    CHECK(back == inst);
    CHECK(!back.rees.has_value());

    inst.rees = entry.rees;
    auto jr   = instance_to_json(inst);
    CHECK(jr["semigroup"].contains("matrix"));
    auto backr = instance_from_json(jr);
    CHECK(backr == inst);
    CHECK(backr.rees == entry.rees);

    auto bad = j;
    bad["n"] = 3;
    CHECK_THROWS_AS(instance_from_json(bad), InputError);
    bad      = j;
    bad["target"] = json::array({1, 9});
    CHECK_THROWS_AS(instance_from_json(bad), InputError);
    bad               = j;
    bad["generators"] = json::array();
    CHECK_THROWS_AS(instance_from_json(bad), InputError);
    bad = j;
    bad.erase("target");
    CHECK_THROWS_AS(instance_from_json(bad), InputError);
  }

  TEST_CASE("json 006: results and verdicts", "[json]") {
    ClosureResult r;
    r.member       = true;
    r.witness      = Witness{{0, 2}};
    r.closure_size = 7;
    auto j         = closure_result_to_json(r);
    CHECK(j["member"] == true);
    CHECK(j["witness"] == json::array({0, 2}));
    CHECK(j["closure_size"] == 7);
    CHECK(closure_result_to_json(ClosureResult{})["witness"].is_null());

    auto R = catalog("brandt_b2").rees;
    auto S = catalog("brandt_b2").semigroup;
    auto v = verdict_to_json(S, classify_rees(*R));
    CHECK(v["class"] == "NP_COMPLETE");
    CHECK(v["theorem"] == std::string(basis::rees_not_one_block));
    CHECK(v["evidence"]["s"]["name"] == S.name(*classify_rees(*R).evidence.element("s")));
    CHECK(v["evidence"].contains("violation"));
    auto p = verdict_to_json(build_rees(ReesStructure(Matrix{{1}})),
                             classify_rees(ReesStructure(Matrix{{1}})));
    CHECK(p["class"] == "PTIME");
    CHECK(p["evidence"]["block"]["I"] == json::array({1}));
  }

}  // namespace subpower
