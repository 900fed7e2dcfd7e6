#include <random>
#include <stdexcept>

#include "doctest.h"
#include "sl2/kkr.hpp"
#include "sl2/led.hpp"
#include "sl2/path_text.hpp"
#include "sl2/selfcheck.hpp"

using namespace sl2;

namespace {

const char* kExampleA = "1111.11.2.1122.1222.1.2.22";
const char* kExampleB =
    "122.11112.112.22.2.12.22.111112.2.12.2.2.11112.11.122222.1.2222.111122."
    "1122.22.2.122222.12.12222.1122.1122.1.122.112222.1.2.1112.1.12.122.12222."
    "2.1122.122.1";

}  // namespace

TEST_CASE("vacancy numbers") {
    SUBCASE("golden example B") {
        const RiggedConfig rc = phi_classical(parse_path(kExampleB));
        CHECK(vacancy(rc, 1) == 10);
        CHECK(vacancy(rc, 2) == 14);
    }
    SUBCASE("empty configuration") {
        const RiggedConfig rc;
        for (int j = 1; j <= 5; ++j) CHECK(vacancy(rc, j) == 0);
    }
    SUBCASE("direct evaluation") {
        const RiggedConfig rc{{1, 2}, {{2, 0}}};
        CHECK(vacancy(rc, 2) == -1);  // 3 - 2*2
        CHECK(vacancy(rc, 1) == 0);
    }
}

TEST_CASE("singular rows") {
    const RiggedConfig rc{{1}, {{1, -1}}};
    CHECK(vacancy(rc, 1) == -1);
    CHECK(is_singular(rc, 0));

    const RiggedConfig rc2{{1}, {{1, -2}}};
    CHECK_FALSE(is_singular(rc2, 0));

    // equal length and rigging: both singular or both not
    const RiggedConfig rc3{{2, 2}, {{1, -2}, {1, -2}}};
    CHECK(is_singular(rc3, 0) == is_singular(rc3, 1));
}

TEST_CASE("phi_classical on golden example A") {
    const RiggedConfig rc = phi_classical(parse_path(kExampleA));
    CHECK(rc.quantum_space == std::vector<int>{4, 4, 4, 2, 2, 1, 1, 1});
    CHECK(rc.rows == std::vector<RiggedRow>{{6, 1}, {2, 2}, {1, 1}});
}

TEST_CASE("phi_classical on the 40-factor example") {
    const RiggedConfig rc = phi_classical(parse_path(kExampleB));
    const std::vector<RiggedRow> expected = {
        {22, -17}, {7, -3}, {6, 15}, {6, 5}, {4, 14}, {4, 1}, {3, 12}, {3, -2},
        {2, 13},   {2, 13}, {2, 12}, {2, 11}, {1, 3},  {1, 1}, {1, 1}};
    CHECK(rc.rows == expected);
}

TEST_CASE("phi_classical degenerate inputs") {
    SUBCASE("no letter 2 means empty mu") {
        const RiggedConfig rc = phi_classical(parse_path("1.1.11"));
        CHECK(rc.quantum_space == std::vector<int>{2, 1, 1});
        CHECK(rc.rows.empty());
    }
    SUBCASE("single 2") {
        const RiggedConfig rc = phi_classical(parse_path("2"));
        CHECK(rc.quantum_space == std::vector<int>{1});
        CHECK(rc.rows == std::vector<RiggedRow>{{1, -1}});
    }
    SUBCASE("empty path") {
        const RiggedConfig rc = phi_classical(Path{});
        CHECK(rc.quantum_space.empty());
        CHECK(rc.rows.empty());
    }
}

TEST_CASE("phi_inverse examples") {
    SUBCASE("two factors") {
        const RiggedConfig rc{{1, 2}, {{2, -2}}};
        CHECK(render_path(phi_inverse(rc, {1, 2})) == "2.12");
    }
    SUBCASE("no rows gives the all-1 path") {
        const RiggedConfig rc{{2, 3, 1}, {}};
        CHECK(render_path(phi_inverse(rc, {2, 3, 1})) == "11.111.1");
    }
    SUBCASE("round trip of golden example A") {
        const Path p = parse_path(kExampleA);
        CHECK(phi_inverse(phi_classical(p), capacities(p)) == p);
    }
    SUBCASE("round trip of the 40-factor example") {
        const Path p = parse_path(kExampleB);
        CHECK(phi_inverse(phi_classical(p), capacities(p)) == p);
    }
}

TEST_CASE("phi_inverse rejects inconsistent configurations") {
    CHECK_THROWS_AS(phi_inverse(RiggedConfig{{1, 2}, {}}, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(phi_inverse(RiggedConfig{{2}, {{2, -1}}}, {2}), std::invalid_argument);
    CHECK_THROWS_AS(phi_inverse(RiggedConfig{{1}, {{1, -1}, {1, -1}}}, {1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(phi_inverse(RiggedConfig{{2}, {{0, 0}}}, {2}), std::invalid_argument);
}

TEST_CASE("rc_equal is multiset equality of canonical forms") {
    const RiggedConfig a{{1, 2}, {{2, 2}, {1, 1}}};
    const RiggedConfig b{{2, 1}, {{1, 1}, {2, 2}}};
    CHECK(rc_equal(a, b));
    const RiggedConfig c{{1, 2}, {{2, 2}, {1, 0}}};
    CHECK_FALSE(rc_equal(a, c));
}

TEST_CASE("round trip on the exhaustive small corpus") {
    for (const Path& p : exhaustive_paths(3, 3)) CHECK(check_round_trip(p));
}

TEST_CASE("round trip on random larger paths") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) CHECK(check_round_trip(random_path(rng, 40, 6)));
}

TEST_CASE("replacing adjacent factors by their R image fixes the configuration") {
    for (const Path& p : exhaustive_paths(3, 3)) CHECK(check_r_invariance(p));
}

TEST_CASE("prepending 1^pad pads lambda and shifts riggings") {
    CHECK(check_lambda_prepending(parse_path(kExampleA), 19));
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const Path p = random_path(rng, 10, 4);
        CHECK(check_lambda_prepending(p, total_size(p) + 1));
    }
}

TEST_CASE("box counting: |mu| = #2's, |lambda| = all letters") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) CHECK(check_counting(random_path(rng, 12, 5)));
}

TEST_CASE("highest paths have riggings between 0 and the vacancy number") {
    for (const Path& p : exhaustive_paths(3, 3)) CHECK(check_highest_riggings(p));
}
