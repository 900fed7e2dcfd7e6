#include <stdexcept>

#include "doctest.h"
#include "sl2/path_text.hpp"

using namespace sl2;

TEST_CASE("parse golden example A") {
    const Path p = parse_path("1111.11.2.1122.1222.1.2.22");
    REQUIRE(p.size() == 8);
    CHECK(capacities(p) == std::vector<int>{4, 2, 1, 4, 4, 1, 1, 2});
    CHECK(p[3] == RowElement{2, 2});
    CHECK(count_twos(p) == 9);
    CHECK(total_size(p) == 19);
}

TEST_CASE("single factor") {
    const Path p = parse_path("1");
    REQUIRE(p.size() == 1);
    CHECK(p[0] == RowElement{1, 0});
}

TEST_CASE("separators normalize to dots") {
    const Path p = parse_path("11 22,1\t2");
    CHECK(p.size() == 4);
    CHECK(render_path(p) == "11.22.1.2");
    CHECK(render_path(parse_path(render_path(p))) == "11.22.1.2");
}

TEST_CASE("rejects decreasing factors") {
    CHECK_THROWS_WITH_AS(parse_path("21"), "path: decreasing factor (letter 1 after 2) at position 2",
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_path("11.121"), std::invalid_argument);
}

TEST_CASE("rejects illegal characters with their position") {
    CHECK_THROWS_WITH_AS(parse_path("1x2"), "path: illegal character 'x' at position 2",
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_path("103"), std::invalid_argument);
}

TEST_CASE("rejects paths without factors") {
    CHECK_THROWS_AS(parse_path(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_path(" .,"), std::invalid_argument);
}
