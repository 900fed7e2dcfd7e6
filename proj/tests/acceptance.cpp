// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.

#include <algorithm>
#include <iostream>
#include <random>
#include <vector>

#include "sl2/bbs.hpp"
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

bool golden_example_a() {
    const Path p = parse_path(kExampleA);
    const std::vector<RiggedRow> rows = {{6, 1}, {2, 2}, {1, 1}};
    const std::vector<int> lambda = {4, 4, 4, 2, 2, 1, 1, 1};

    const RiggedConfig classical = phi_classical(p);
    const RiggedConfig crystal = phi_crystal(p);
    bool ok = classical.rows == rows && classical.quantum_space == lambda;
    ok = ok && crystal.rows == rows && crystal.quantum_space == lambda;

    const LocalEnergyTable t = local_energy_table(p);
    const std::vector<std::vector<int>> bits = {
        {0, 0, 1, 0, 1, 0, 1, 0}, {0, 0, 0, 1, 0, 0, 0, 1}, {0, 0, 0, 1, 0, 0, 0, 0},
        {0, 0, 0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 1},
        {0, 0, 0, 0, 0, 0, 0, 0}};
    ok = ok && t.bits == bits;

    const auto groups = extract_groups_topdown(t);
    ok = ok && groups.size() == 3;
    ok = ok && groups[0].terminal() == std::pair<int, int>{2, 8} &&
         groups[1].terminal() == std::pair<int, int>{1, 5} &&
         groups[2].terminal() == std::pair<int, int>{6, 8};
    return ok;
}

bool golden_example_b() {
    const Path p = parse_path(kExampleB);
    const LocalEnergyTable t = local_energy_table(p);
    const auto groups = extract_groups_topdown(t);
    if (groups.size() != 15) return false;

    const std::vector<std::pair<int, int>> pairs = {
        {2, 13}, {2, 13}, {6, 15}, {2, 12}, {4, 14}, {3, 12}, {2, 11}, {6, 5},
        {1, 3},  {22, -17}, {1, 1}, {4, 1}, {1, 1}, {7, -3}, {3, -2}};
    for (std::size_t i = 0; i < groups.size(); ++i) {
        if (groups[i].length() != pairs[i].first) return false;
        if (rigging(p, t, groups[i]) != pairs[i].second) return false;
    }

    std::vector<std::pair<int, int>> by_start;
    for (const auto& g : groups) by_start.emplace_back(g.cells.front().second, g.length());
    std::sort(by_start.begin(), by_start.end());
    const std::vector<int> want = {3, 7, 1, 4, 1, 22, 1, 6, 2, 3, 4, 2, 6, 2, 2};
    for (std::size_t i = 0; i < want.size(); ++i)
        if (by_start[i].second != want[i]) return false;

    const RiggedConfig rc = phi_crystal(p);
    return vacancy(rc, 22) == -15 && vacancy(rc, 7) == 15 && vacancy(rc, 6) == 19 &&
           vacancy(rc, 4) == 21 && vacancy(rc, 3) == 18 && vacancy(rc, 2) == 14 &&
           vacancy(rc, 1) == 10;
}

bool r_matrix() {
    if (check_r_matrix_exhaustive(6) != 0) return false;
    return energy(RowElement{2, 2}, RowElement{1, 2}) == 2;
}

std::vector<Path> random_corpus() {
    std::mt19937_64 rng(20240613);
    std::vector<Path> out;
    out.reserve(1000);
    for (int i = 0; i < 1000; ++i) out.push_back(random_path(rng, 40, 6));
    return out;
}

bool oracle_equivalence(const std::vector<Path>& exhaustive, const std::vector<Path>& random) {
    for (const Path& p : exhaustive)
        if (!check_method_equivalence(p)) return false;
    for (const Path& p : random)
        if (!check_method_equivalence(p)) return false;
    return true;
}

bool round_trip(const std::vector<Path>& exhaustive) {
    for (const Path& p : exhaustive)
        if (!check_round_trip(p)) return false;
    return true;
}

bool distribution_invariants(const std::vector<Path>& random) {
    for (const Path& p : random) {
        if (!check_table_invariants(p)) return false;      // increments in {0,1}, row sums
        if (!check_non_crossing(p)) return false;
        if (!check_extraction_agreement(p)) return false;
    }
    return true;
}

bool isomorphism_invariance(const std::vector<Path>& exhaustive) {
    for (const Path& p : exhaustive)
        if (!check_r_invariance(p)) return false;
    return true;
}

bool dynamics() {
    std::mt19937_64 rng(424242);
    for (int i = 0; i < 200; ++i)
        if (!check_conservation(random_path(rng, 10, 4), 6, 6)) return false;
    std::uniform_int_distribution<int> fl(1, 6);
    for (int i = 0; i < 500; ++i) {
        const Path p = random_path(rng, 8, 4);
        if (!check_linearization(p, fl(rng), total_size(p) + 1)) return false;
    }
    for (int i = 0; i < 1000; ++i)
        if (!check_cyclic_shift(random_b1_path(rng, 24, true))) return false;
    for (int i = 0; i < 200; ++i)
        if (!check_block_repeat(random_b1_path(rng, 12, true))) return false;
    return true;
}

}  // namespace

int main() {
    const std::vector<Path> exhaustive = exhaustive_paths(4, 3);
    const std::vector<Path> random = random_corpus();

    int failed = 0;
    auto report = [&failed](int idx, const char* name, bool ok) {
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << idx << ". " << name << '\n';
        if (!ok) ++failed;
    };

    report(1, "golden example A: both methods, bit table and terminals (exact)", golden_example_a());
    report(2, "golden example B: 15 groups, riggings and vacancy numbers (exact)", golden_example_b());
    report(3, "R matrix: diagram = piecewise and R^2 = id for k,l <= 6 (exact)", r_matrix());
    report(4, "oracle equivalence on exhaustive <=4 factors, caps <=3 plus 1000 random (exact)",
           oracle_equivalence(exhaustive, random));
    report(5, "round trip phi_inverse . phi_classical = id on the exhaustive corpus (exact)",
           round_trip(exhaustive));
    report(6, "distribution invariants: binary increments, row sums, non-crossing, extraction agreement",
           distribution_invariants(random));
    report(7, "isomorphism invariance at every adjacent position (exhaustive corpus)",
           isomorphism_invariance(exhaustive));
    report(8, "dynamics: conservation, linearization, cyclic shift, repeated blocks", dynamics());

    std::cout << (failed ? "ACCEPTANCE: FAILED" : "ACCEPTANCE: OK") << '\n';
    return failed ? 1 : 0;
}
