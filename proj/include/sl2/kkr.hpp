#pragma once

#include <cstddef>
#include <vector>

#include "sl2/crystal.hpp"

namespace sl2 {

struct RiggedRow {
    int length = 0;
    int rigging = 0;

    friend bool operator==(const RiggedRow&, const RiggedRow&) = default;
};

/// (Unrestricted) rigged configuration: quantum space lambda plus the rigged
/// rows (mu_i, r_i). Riggings and vacancy numbers may be negative.
struct RiggedConfig {
    std::vector<int> quantum_space;
    std::vector<RiggedRow> rows;
};

/// Vacancy number p_j = Q^(0)_j - 2 Q^(1)_j, with Q^(a)_j the min-truncated
/// box counts of lambda resp. mu at height j.
int vacancy(const RiggedConfig& rc, int j);

/// A row is singular when its rigging equals its vacancy number.
bool is_singular(const RiggedConfig& rc, std::size_t row_index);

/// Canonical form: lambda sorted descending, rows by (length desc, rigging desc).
RiggedConfig canonical(RiggedConfig rc);

/// Multiset equality of canonical forms.
bool rc_equal(const RiggedConfig& a, const RiggedConfig& b);

/// The box-adding bijection from paths to (unrestricted) rigged
/// configurations, computed by the classical combinatorial procedure.
/// Returns the canonical form.
RiggedConfig phi_classical(const Path& path);

/// phi_classical plus, for every factor, the mu-columns of the boxes added
/// while that factor was processed, in processing order.
struct PhiTrace {
    RiggedConfig rc;
    std::vector<std::vector<int>> box_columns;
};
PhiTrace phi_classical_trace(const Path& path);

/// Inverse box-removing map. target_capacities fixes the factor capacities in
/// path order; its multiset must equal rc.quantum_space. Throws
/// std::invalid_argument on an inconsistent configuration.
Path phi_inverse(const RiggedConfig& rc, const std::vector<int>& target_capacities);

}  // namespace sl2
