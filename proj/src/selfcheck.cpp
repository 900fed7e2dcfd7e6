#include "sl2/selfcheck.hpp"

#include <algorithm>
#include <map>

#include "sl2/bbs.hpp"
#include "sl2/kkr.hpp"
#include "sl2/led.hpp"

namespace sl2 {

std::vector<RowElement> all_elements(int max_capacity) {
    std::vector<RowElement> out;
    for (int k = 1; k <= max_capacity; ++k)
        for (int twos = 0; twos <= k; ++twos) out.push_back(RowElement{k - twos, twos});
    return out;
}

std::vector<Path> exhaustive_paths(int max_factors, int max_capacity) {
    const auto elems = all_elements(max_capacity);
    std::vector<Path> out;
    for (int len = 1; len <= max_factors; ++len) {
        std::vector<std::size_t> idx(static_cast<std::size_t>(len), 0);
        for (;;) {
            Path p(static_cast<std::size_t>(len));
            for (int i = 0; i < len; ++i) p[static_cast<std::size_t>(i)] = elems[idx[static_cast<std::size_t>(i)]];
            out.push_back(std::move(p));
            int pos = len - 1;
            while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == elems.size()) {
                idx[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
    }
    return out;
}

Path random_path(std::mt19937_64& rng, int max_factors, int max_capacity) {
    std::uniform_int_distribution<int> flen(1, max_factors);
    std::uniform_int_distribution<int> fcap(1, max_capacity);
    Path p(static_cast<std::size_t>(flen(rng)));
    for (RowElement& e : p) {
        const int c = fcap(rng);
        const int twos = std::uniform_int_distribution<int>(0, c)(rng);
        e = RowElement{c - twos, twos};
    }
    return p;
}

Path random_b1_path(std::mt19937_64& rng, int max_len, bool balanced) {
    std::uniform_int_distribution<int> flen(1, max_len);
    std::uniform_int_distribution<int> bit(0, 1);
    for (;;) {
        Path p(static_cast<std::size_t>(flen(rng)));
        for (RowElement& e : p) e = bit(rng) ? RowElement{0, 1} : RowElement{1, 0};
        if (!balanced || 2 * count_twos(p) <= static_cast<int>(p.size())) return p;
    }
}

bool check_method_equivalence(const Path& path) {
    return rc_equal(phi_crystal(path), phi_classical(path));
}

bool check_round_trip(const Path& path) {
    const RiggedConfig rc = phi_classical(path);
    return phi_inverse(rc, capacities(path)) == path;
}

bool check_table_invariants(const Path& path) {
    // Building the table already rejects increments outside {0,1}.
    const LocalEnergyTable t = local_energy_table(path);
    const RiggedConfig rc = phi_classical(path);
    for (int l = 1; l <= t.rows(); ++l) {
        int expected = 0;
        for (const RiggedRow& r : rc.rows)
            if (r.length >= l) ++expected;
        if (t.row_sums[static_cast<std::size_t>(l - 1)] != expected) return false;
    }
    return true;
}

bool check_column_correspondence(const Path& path) {
    const LocalEnergyTable t = local_energy_table(path);
    const PhiTrace tr = phi_classical_trace(path);
    for (int j = 1; j <= t.width; ++j) {
        std::vector<int> led_rows;
        for (int l = 1; l <= t.rows(); ++l)
            if (t.bit(l, j)) led_rows.push_back(l);
        if (led_rows != tr.box_columns[static_cast<std::size_t>(j - 1)]) return false;
    }
    return true;
}

namespace {

bool groups_non_crossing(const std::vector<SolitonGroup>& groups) {
    for (std::size_t a = 0; a < groups.size(); ++a) {
        for (std::size_t b = a + 1; b < groups.size(); ++b) {
            const int common = std::min(groups[a].length(), groups[b].length());
            int sign = 0;
            for (int l = 1; l <= common; ++l) {
                const int d = groups[a].cells[static_cast<std::size_t>(l - 1)].second -
                              groups[b].cells[static_cast<std::size_t>(l - 1)].second;
                const int s = d > 0 ? 1 : -1;
                if (sign == 0)
                    sign = s;
                else if (sign != s)
                    return false;
            }
        }
    }
    return true;
}

std::vector<std::vector<std::pair<int, int>>> sorted_cell_sets(
    const std::vector<SolitonGroup>& groups) {
    std::vector<std::vector<std::pair<int, int>>> out;
    out.reserve(groups.size());
    for (const SolitonGroup& g : groups) out.push_back(g.cells);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

bool check_non_crossing(const Path& path) {
    return groups_non_crossing(extract_groups_topdown(local_energy_table(path)));
}

bool check_extraction_agreement(const Path& path) {
    const LocalEnergyTable t = local_energy_table(path);
    return sorted_cell_sets(extract_groups_topdown(t)) ==
           sorted_cell_sets(extract_groups_bottomup(t));
}

bool check_r_invariance(const Path& path) {
    const RiggedConfig base = phi_classical(path);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        Path swapped = path;
        const RPair rp = apply_R_diagram(path[i], path[i + 1]);
        swapped[i] = rp.left_out;
        swapped[i + 1] = rp.right_out;
        if (!rc_equal(base, phi_classical(swapped))) return false;
    }
    return true;
}

bool check_highest_riggings(const Path& path) {
    if (!is_highest(path)) return true;
    const RiggedConfig rc = phi_classical(path);
    for (std::size_t i = 0; i < rc.rows.size(); ++i) {
        if (rc.rows[i].rigging < 0) return false;
        if (rc.rows[i].rigging > vacancy(rc, rc.rows[i].length)) return false;
    }
    return true;
}

bool check_counting(const Path& path) {
    const RiggedConfig rc = phi_classical(path);
    int mu_boxes = 0;
    for (const RiggedRow& r : rc.rows) mu_boxes += r.length;
    int lambda_boxes = 0;
    for (int c : rc.quantum_space) lambda_boxes += c;
    return mu_boxes == count_twos(path) && lambda_boxes == total_size(path);
}

bool check_lambda_prepending(const Path& path, int pad) {
    Path prepended(static_cast<std::size_t>(pad), highest_element(1));
    prepended.insert(prepended.end(), path.begin(), path.end());

    RiggedConfig expected = phi_classical(path);
    expected.quantum_space.insert(expected.quantum_space.end(), static_cast<std::size_t>(pad), 1);
    for (RiggedRow& r : expected.rows) r.rigging += pad;

    return rc_equal(expected, phi_classical(prepended));
}

bool check_conservation(const Path& path, int k_max, int l_max) {
    Path padded = path;
    padded.insert(padded.end(), static_cast<std::size_t>(total_size(path) + 1), highest_element(1));
    const std::vector<int> base = energies(padded, l_max);
    for (int k = 1; k <= k_max; ++k)
        if (energies(evolve(padded, k).new_path, l_max) != base) return false;
    return true;
}

bool check_cyclic_shift(const Path& b1_path) {
    Path rotated(b1_path.size());
    for (std::size_t i = 0; i < b1_path.size(); ++i)
        rotated[(i + 1) % b1_path.size()] = b1_path[i];
    return evolve_periodic(b1_path, 1) == rotated;
}

bool check_block_repeat(const Path& b1_path) {
    const std::size_t L = b1_path.size();
    Path triple;
    triple.reserve(3 * L);
    for (int c = 0; c < 3; ++c) triple.insert(triple.end(), b1_path.begin(), b1_path.end());
    const LocalEnergyTable t = local_energy_table(triple);
    for (const auto& row : t.bits)
        for (std::size_t j = 0; j < L; ++j)
            if (row[L + j] != row[2 * L + j]) return false;
    return true;
}

long check_r_matrix_exhaustive(int max_capacity) {
    long failures = 0;
    const auto elems = all_elements(max_capacity);
    for (const RowElement& x : elems) {
        for (const RowElement& y : elems) {
            const RPair d = apply_R_diagram(x, y);
            const RPair p = apply_R_piecewise(x, y);
            bool ok = d == p;
            // R^2 = id, with the same energy on the way back
            const RPair back = apply_R_diagram(d.left_out, d.right_out);
            ok = ok && back.left_out == x && back.right_out == y && back.energy == d.energy;
            // letter conservation and capacity swap
            ok = ok && d.left_out.ones + d.right_out.ones == x.ones + y.ones &&
                 d.left_out.twos + d.right_out.twos == x.twos + y.twos &&
                 d.left_out.capacity() == y.capacity() && d.right_out.capacity() == x.capacity();
            // energy range
            ok = ok && d.energy >= 0 && d.energy <= std::min(x.capacity(), y.capacity());
            // u_k against a 2-free factor has no unwinding pair
            if (x.twos == 0 && y.twos == 0) ok = ok && d.energy == 0;
            if (!ok) ++failures;
        }
    }
    return failures;
}

long CheckReport::total_trials() const {
    long n = 0;
    for (const CheckItem& it : items) n += it.trials;
    return n;
}

long CheckReport::total_failures() const {
    long n = 0;
    for (const CheckItem& it : items) n += it.failures;
    return n;
}

CheckReport run_selfcheck(const CheckOptions& opt) {
    CheckReport rep;
    auto add = [&rep](const std::string& name) -> CheckItem& {
        rep.items.push_back(CheckItem{name, 0, 0});
        return rep.items.back();
    };

    {
        CheckItem& it = add("r_matrix_exhaustive");
        const auto elems = all_elements(6);
        it.trials = static_cast<long>(elems.size() * elems.size());
        it.failures = check_r_matrix_exhaustive(6);
    }

    std::vector<Path> corpus;
    if (opt.run_exhaustive) {
        auto ex = exhaustive_paths(opt.max_factors, opt.max_capacity);
        corpus.insert(corpus.end(), ex.begin(), ex.end());
    }
    std::mt19937_64 rng(opt.seed);
    std::size_t n_exhaustive = corpus.size();
    if (opt.run_random) {
        for (int i = 0; i < opt.random_trials; ++i)
            corpus.push_back(random_path(rng, opt.random_max_factors, opt.random_max_capacity));
    }

    struct Named {
        const char* name;
        bool (*fn)(const Path&);
    };
    const Named path_checks[] = {
        {"method_equivalence", check_method_equivalence},
        {"round_trip", check_round_trip},
        {"table_invariants", check_table_invariants},
        {"column_correspondence", check_column_correspondence},
        {"non_crossing", check_non_crossing},
        {"extraction_agreement", check_extraction_agreement},
        {"r_invariance", check_r_invariance},
        {"highest_riggings", check_highest_riggings},
        {"counting", check_counting},
    };
    for (const Named& nc : path_checks) {
        CheckItem& it = add(nc.name);
        for (const Path& p : corpus) {
            ++it.trials;
            if (!nc.fn(p)) ++it.failures;
        }
    }
    (void)n_exhaustive;

    if (opt.run_random) {
        {
            CheckItem& it = add("lambda_prepending");
            for (int i = 0; i < opt.random_trials; ++i) {
                const Path p = random_path(rng, opt.random_max_factors, opt.random_max_capacity);
                ++it.trials;
                if (!check_lambda_prepending(p, total_size(p) + 1)) ++it.failures;
            }
        }
        {
            CheckItem& it = add("linearization");
            std::uniform_int_distribution<int> fl(1, 6);
            for (int i = 0; i < opt.random_trials; ++i) {
                const Path p = random_path(rng, std::min(opt.random_max_factors, 8), opt.random_max_capacity);
                ++it.trials;
                if (!check_linearization(p, fl(rng), total_size(p) + 1)) ++it.failures;
            }
        }
        {
            CheckItem& it = add("conservation");
            for (int i = 0; i < std::max(1, opt.random_trials / 4); ++i) {
                const Path p = random_path(rng, std::min(opt.random_max_factors, 8), opt.random_max_capacity);
                ++it.trials;
                if (!check_conservation(p, 6, 6)) ++it.failures;
            }
        }
        {
            CheckItem& it = add("periodic_cyclic_shift");
            for (int i = 0; i < opt.random_trials; ++i) {
                ++it.trials;
                if (!check_cyclic_shift(random_b1_path(rng, 16, true))) ++it.failures;
            }
        }
        {
            CheckItem& it = add("periodic_block_repeat");
            for (int i = 0; i < std::max(1, opt.random_trials / 2); ++i) {
                ++it.trials;
                if (!check_block_repeat(random_b1_path(rng, 12, true))) ++it.failures;
            }
        }
    }

    return rep;
}

}  // namespace sl2
