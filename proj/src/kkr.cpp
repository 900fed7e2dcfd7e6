#include "sl2/kkr.hpp"

#include <algorithm>
#include <stdexcept>

namespace sl2 {

int vacancy(const RiggedConfig& rc, int j) {
    int q0 = 0;
    for (int c : rc.quantum_space) q0 += std::min(j, c);
    int q1 = 0;
    for (const RiggedRow& r : rc.rows) q1 += std::min(j, r.length);
    return q0 - 2 * q1;
}

bool is_singular(const RiggedConfig& rc, std::size_t row_index) {
    const RiggedRow& r = rc.rows.at(row_index);
    return r.rigging == vacancy(rc, r.length);
}

RiggedConfig canonical(RiggedConfig rc) {
    std::sort(rc.quantum_space.begin(), rc.quantum_space.end(), std::greater<int>());
    std::sort(rc.rows.begin(), rc.rows.end(), [](const RiggedRow& a, const RiggedRow& b) {
        if (a.length != b.length) return a.length > b.length;
        return a.rigging > b.rigging;
    });
    return rc;
}

bool rc_equal(const RiggedConfig& a, const RiggedConfig& b) {
    const RiggedConfig ca = canonical(a);
    const RiggedConfig cb = canonical(b);
    return ca.quantum_space == cb.quantum_space && ca.rows == cb.rows;
}

namespace {

// Working state of the box-adding procedure. The quantum space consists of
// the completed factor rows plus the partially grown row of the factor in
// progress; rows are kept in creation order.
struct PhiState {
    std::vector<int> completed;
    int current_width = 0;
    std::vector<RiggedRow> rows;

    int vac(int j) const {
        int q0 = std::min(j, current_width);
        for (int c : completed) q0 += std::min(j, c);
        int q1 = 0;
        for (const RiggedRow& r : rows) q1 += std::min(j, r.length);
        return q0 - 2 * q1;
    }
};

}  // namespace

PhiTrace phi_classical_trace(const Path& path) {
    PhiState st;
    PhiTrace out;
    out.box_columns.resize(path.size());

    for (std::size_t f = 0; f < path.size(); ++f) {
        st.current_width = 0;
        // Letters 2 first: each one grows the quantum-space row and mu together.
        for (int t = 0; t < path[f].twos; ++t) {
            // Longest singular row in the state before this letter's additions;
            // ties go to the most recently created row.
            int pick = -1;
            for (int i = 0; i < static_cast<int>(st.rows.size()); ++i) {
                if (st.rows[i].rigging != st.vac(st.rows[i].length)) continue;
                if (pick < 0 || st.rows[i].length >= st.rows[pick].length) pick = i;
            }
            st.current_width += 1;
            if (pick < 0) {
                st.rows.push_back(RiggedRow{1, 0});
                pick = static_cast<int>(st.rows.size()) - 1;
            } else {
                st.rows[pick].length += 1;
            }
            // The grown row is made singular in the state after both additions.
            st.rows[pick].rigging = st.vac(st.rows[pick].length);
            out.box_columns[f].push_back(st.rows[pick].length);
        }
        // Remaining letters 1 grow the quantum-space row only.
        st.current_width += path[f].ones;
        st.completed.push_back(path[f].capacity());
    }

    out.rc = canonical(RiggedConfig{std::move(st.completed), std::move(st.rows)});
    return out;
}

RiggedConfig phi_classical(const Path& path) { return phi_classical_trace(path).rc; }

Path phi_inverse(const RiggedConfig& rc, const std::vector<int>& target_capacities) {
    {
        std::vector<int> a = rc.quantum_space;
        std::vector<int> b = target_capacities;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b)
            throw std::invalid_argument(
                "phi_inverse: quantum space does not match the factor capacities");
    }
    for (std::size_t i = 0; i < rc.rows.size(); ++i) {
        if (rc.rows[i].length < 1)
            throw std::invalid_argument("phi_inverse: row of non-positive length");
        if (rc.rows[i].rigging > vacancy(rc, rc.rows[i].length))
            throw std::invalid_argument("phi_inverse: rigging exceeds vacancy number");
    }

    std::vector<RiggedRow> rows = rc.rows;
    const int L = static_cast<int>(target_capacities.size());
    Path out(static_cast<std::size_t>(L));

    // Peel factors right to left; letters within a factor come out left to right.
    for (int f = L - 1; f >= 0; --f) {
        const int cap = target_capacities[static_cast<std::size_t>(f)];
        int ones = 0, twos = 0;
        bool seen_two = false;
        for (int t = cap; t >= 1; --t) {
            // Vacancy numbers with the remaining width t split as (t-1) + 1.
            auto vac_split = [&](int j) {
                int q0 = std::min(j, t - 1) + 1;
                for (int i = 0; i < f; ++i) q0 += std::min(j, target_capacities[static_cast<std::size_t>(i)]);
                int q1 = 0;
                for (const RiggedRow& r : rows) q1 += std::min(j, r.length);
                return q0 - 2 * q1;
            };
            int pick = -1;  // shortest singular row
            for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
                if (rows[i].rigging != vac_split(rows[i].length)) continue;
                if (pick < 0 || rows[i].length < rows[pick].length) pick = i;
            }
            if (pick < 0) {
                if (seen_two)
                    throw std::invalid_argument(
                        "phi_inverse: factor is not weakly increasing; "
                        "inconsistent rigged configuration");
                ++ones;
            } else {
                seen_two = true;
                ++twos;
                rows[static_cast<std::size_t>(pick)].length -= 1;
                if (rows[static_cast<std::size_t>(pick)].length == 0) {
                    rows.erase(rows.begin() + pick);
                } else {
                    // Re-rig in the post-removal state, width-1 row discarded.
                    const int j = rows[static_cast<std::size_t>(pick)].length;
                    int q0 = std::min(j, t - 1);
                    for (int i = 0; i < f; ++i) q0 += std::min(j, target_capacities[static_cast<std::size_t>(i)]);
                    int q1 = 0;
                    for (const RiggedRow& r : rows) q1 += std::min(j, r.length);
                    rows[static_cast<std::size_t>(pick)].rigging = q0 - 2 * q1;
                }
            }
        }
        out[static_cast<std::size_t>(f)] = RowElement{ones, twos};
    }

    if (!rows.empty())
        throw std::invalid_argument(
            "phi_inverse: leftover configuration rows; inconsistent rigged configuration");
    return out;
}

}  // namespace sl2
