#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sl2/crystal.hpp"
#include "sl2/kkr.hpp"

namespace sl2 {

/// Local energy distribution of a path: bits[l][j] = E_{l,j} - E_{l-1,j} in
/// {0,1}, cum[l][j] = E_{l,j}, row_sums[l] = E_l - E_{l-1}. Rows run from
/// l = 1 up to and including the first all-zero difference row.
struct LocalEnergyTable {
    int width = 0;
    std::vector<std::vector<int>> bits;
    std::vector<std::vector<int>> cum;
    std::vector<int> row_sums;

    int rows() const { return static_cast<int>(bits.size()); }
    // 1-based accessors
    int bit(int l, int j) const { return bits.at(static_cast<std::size_t>(l - 1)).at(static_cast<std::size_t>(j - 1)); }
    int energy_at(int l, int j) const { return cum.at(static_cast<std::size_t>(l - 1)).at(static_cast<std::size_t>(j - 1)); }
};

/// One selected chain of 1's, one cell per row 1..mu; the terminal cell is
/// (mu, j) with j the column of the lastly picked 1.
struct SolitonGroup {
    std::vector<std::pair<int, int>> cells;  // (row l, column), ascending in l

    int length() const { return static_cast<int>(cells.size()); }
    std::pair<int, int> terminal() const { return cells.back(); }
};

/// Carrier sweep per row l with u_l; stops after the first all-zero
/// difference row (hard cap: number of 2's + 1).
LocalEnergyTable local_energy_table(const Path& path);

/// Group extraction starting from the rightmost 1 of row 1, descending to the
/// leftmost remaining 1 weakly right of the current cell. Groups are returned
/// in extraction order and consume every 1 of the table.
std::vector<SolitonGroup> extract_groups_topdown(const LocalEnergyTable& table);

/// Alternative extraction: seed at a deepest remaining 1 (leftmost among
/// ties), ascending to the rightmost 1 weakly left in the row above. Yields
/// the same groups as the top-down extraction up to reordering.
std::vector<SolitonGroup> extract_groups_bottomup(const LocalEnergyTable& table);

/// r_k = sum_{i<j_k} min(mu_k, lambda_i) + E_{mu_k,j_k} - 2 sum_{i<=j_k} E_{mu_k,i}.
int rigging(const Path& path, const LocalEnergyTable& table, const SolitonGroup& group);

/// The bijection computed purely from R and energy data: lambda = factor
/// capacities, one rigged row per extracted group. Canonical form; agrees
/// with phi_classical on every path.
RiggedConfig phi_crystal(const Path& path);

/// Annotated table rendering: header of factor
/// words, one line per l, cells showing the 1-based group index ('.' for 0),
/// terminals marked '*'.
std::string render_table_ascii(const Path& path, const LocalEnergyTable& table,
                               const std::vector<SolitonGroup>& groups);

}  // namespace sl2
