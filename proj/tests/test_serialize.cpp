#include "doctest.h"
#include "sl2/led.hpp"
#include "sl2/path_text.hpp"
#include "sl2/selfcheck.hpp"
#include "sl2/serialize.hpp"

using namespace sl2;

TEST_CASE("trivial configuration serializes to the exact bytes") {
    CHECK(rc_json_string(phi_classical(parse_path("1"))) ==
          R"({"lambda":[1],"rows":[],"vacancy":{}})");
}

TEST_CASE("golden example A json") {
    CHECK(rc_json_string(phi_crystal(parse_path("1111.11.2.1122.1222.1.2.22"))) ==
          R"({"lambda":[4,4,4,2,2,1,1,1],"rows":[[6,1],[2,2],[1,1]],"vacancy":{"1":2,"2":3,"6":1}})");
}

TEST_CASE("both bijection routes serialize to identical bytes") {
    for (const Path& p : exhaustive_paths(3, 2))
        CHECK(rc_json_string(phi_classical(p)) == rc_json_string(phi_crystal(p)));
}

TEST_CASE("led json carries bits and groups") {
    const Path p = parse_path("2.12");
    const LocalEnergyTable t = local_energy_table(p);
    const auto groups = extract_groups_topdown(t);
    const nlohmann::json j = led_to_json(p, t, groups);
    CHECK(j["bits"] == nlohmann::json({{1, 0}, {0, 1}, {0, 0}}));
    REQUIRE(j["groups"].size() == 1);
    CHECK(j["groups"][0]["mu"] == 2);
    CHECK(j["groups"][0]["j"] == 2);
    CHECK(j["groups"][0]["r"] == -2);
    CHECK(j["groups"][0]["cells"] == nlohmann::json({{1, 1}, {2, 2}}));
}
