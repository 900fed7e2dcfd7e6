#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sl2/crystal.hpp"

namespace sl2 {

// ---- corpora ------------------------------------------------------------

/// Every element of B_1 .. B_max_capacity.
std::vector<RowElement> all_elements(int max_capacity);

/// Every path with 1..max_factors factors over those elements.
std::vector<Path> exhaustive_paths(int max_factors, int max_capacity);

Path random_path(std::mt19937_64& rng, int max_factors, int max_capacity);

/// Random B_1 path; with balanced = true the number of 2's does not exceed
/// the number of 1's.
Path random_b1_path(std::mt19937_64& rng, int max_len, bool balanced);

// ---- per-path invariant checks (true = pass) ------------------------------

bool check_method_equivalence(const Path& path);
bool check_round_trip(const Path& path);
bool check_table_invariants(const Path& path);        // binary bits + row sums vs oracle
bool check_column_correspondence(const Path& path);
bool check_non_crossing(const Path& path);
bool check_extraction_agreement(const Path& path);
bool check_r_invariance(const Path& path);        // every adjacent position
bool check_highest_riggings(const Path& path);    // vacuous for non-highest paths
bool check_counting(const Path& path);
bool check_lambda_prepending(const Path& path, int pad);
bool check_conservation(const Path& path, int k_max, int l_max);
bool check_cyclic_shift(const Path& b1_path);     // periodic T_1 = rotation
bool check_block_repeat(const Path& b1_path);     // table of b^3 repeats blocks 2,3

/// Exhaustive R checks over B_k ⊗ B_l, k,l <= max_capacity: diagram/piecewise
/// agreement, R^2 = id with equal energies, letter conservation, capacity
/// swap, 0 <= H <= min(k,l). Returns the number of failing pairs.
long check_r_matrix_exhaustive(int max_capacity);

// ---- aggregate runner -----------------------------------------------------

struct CheckOptions {
    bool run_exhaustive = true;
    bool run_random = true;
    int max_factors = 3;
    int max_capacity = 3;
    int random_trials = 200;
    int random_max_factors = 12;
    int random_max_capacity = 4;
    std::uint64_t seed = 20240613;
};

struct CheckItem {
    std::string name;
    long trials = 0;
    long failures = 0;
};

struct CheckReport {
    std::vector<CheckItem> items;
    long total_trials() const;
    long total_failures() const;
};

CheckReport run_selfcheck(const CheckOptions& opt);

}  // namespace sl2
