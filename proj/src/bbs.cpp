#include "sl2/bbs.hpp"

#include <algorithm>
#include <stdexcept>

#include "sl2/kkr.hpp"

namespace sl2 {

EvolutionResult sweep_carrier(const Path& path, RowElement carrier) {
    EvolutionResult out;
    out.new_path.reserve(path.size());
    for (const RowElement& b : path) {
        const RPair rp = apply_R_piecewise(carrier, b);
        out.new_path.push_back(rp.left_out);
        carrier = rp.right_out;
        out.total_energy += rp.energy;
    }
    out.carrier_out = carrier;
    return out;
}

EvolutionResult evolve(const Path& path, int l) {
    if (l < 1) throw std::invalid_argument("evolve: l must be positive");
    return sweep_carrier(path, highest_element(l));
}

std::vector<int> energies(const Path& path, int l_max) {
    if (l_max < 1) throw std::invalid_argument("energies: l_max must be positive");
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(l_max));
    for (int l = 1; l <= l_max; ++l) out.push_back(evolve(path, l).total_energy);
    return out;
}

bool check_linearization(const Path& path, int l, int pad) {
    if (pad <= total_size(path))
        throw std::invalid_argument("check_linearization: pad must exceed the path size");
    Path padded = path;
    padded.insert(padded.end(), static_cast<std::size_t>(pad), highest_element(1));

    const EvolutionResult ev = evolve(padded, l);
    const bool carrier_returned = ev.carrier_out == highest_element(l);

    RiggedConfig before = phi_classical(padded);
    for (RiggedRow& r : before.rows) r.rigging += std::min(r.length, l);
    return carrier_returned && rc_equal(before, phi_classical(ev.new_path));
}

namespace {

void require_periodic_input(const Path& path) {
    int ones = 0, twos = 0;
    for (const RowElement& b : path) {
        if (b.capacity() != 1)
            throw std::invalid_argument("periodic operations require a path of B_1 factors");
        ones += b.ones;
        twos += b.twos;
    }
    if (twos > ones)
        throw std::invalid_argument("periodic operations require no more 2's than 1's");
}

}  // namespace

RowElement carrier_v(const Path& path, int l) {
    if (l < 1) throw std::invalid_argument("carrier_v: l must be positive");
    require_periodic_input(path);
    const RowElement v = evolve(path, l).carrier_out;
    if (sweep_carrier(path, v).carrier_out != v)
        throw std::logic_error("carrier_v: fixed point property failed");
    return v;
}

Path evolve_periodic(const Path& path, int l) {
    return sweep_carrier(path, carrier_v(path, l)).new_path;
}

LocalEnergyTable led_periodic(const Path& path) {
    require_periodic_input(path);
    LocalEnergyTable t;
    t.width = static_cast<int>(path.size());
    const int l_max = count_twos(path) + 1;
    std::vector<int> prev(path.size(), 0);
    for (int l = 1; l <= l_max; ++l) {
        RowElement carrier = carrier_v(path, l);
        std::vector<int> cur(path.size());
        for (std::size_t j = 0; j < path.size(); ++j) {
            const RPair rp = apply_R_piecewise(carrier, path[j]);
            cur[j] = rp.energy;
            carrier = rp.right_out;
        }
        std::vector<int> diff(path.size());
        int sum = 0;
        for (std::size_t j = 0; j < path.size(); ++j) {
            diff[j] = cur[j] - prev[j];
            if (diff[j] != 0 && diff[j] != 1)
                throw std::logic_error("periodic local energy increment outside {0,1}");
            sum += diff[j];
        }
        t.bits.push_back(std::move(diff));
        t.cum.push_back(cur);
        t.row_sums.push_back(sum);
        prev = std::move(cur);
        if (sum == 0) break;
    }
    return t;
}

std::vector<SolitonGroup> extract_groups_periodic(const LocalEnergyTable& table) {
    auto bits = table.bits;
    const int rows = static_cast<int>(bits.size());
    const int width = table.width;

    std::vector<SolitonGroup> out;
    for (;;) {
        int dl = -1, dj = -1;
        for (int l = rows - 1; l >= 0 && dl < 0; --l)
            for (int j = 0; j < width; ++j)
                if (bits[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)]) { dl = l; dj = j; break; }
        if (dl < 0) break;

        std::vector<std::pair<int, int>> cells;
        cells.emplace_back(dl + 1, dj + 1);
        bits[static_cast<std::size_t>(dl)][static_cast<std::size_t>(dj)] = 0;
        int cur = dj;
        for (int l = dl - 1; l >= 0; --l) {
            int pick = -1;
            for (int j = cur; j >= 0; --j)
                if (bits[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)]) { pick = j; break; }
            if (pick < 0) {
                // wrap: resume from the right end of the row
                for (int j = width - 1; j > cur; --j)
                    if (bits[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)]) { pick = j; break; }
            }
            if (pick < 0)
                throw std::invalid_argument("extract_groups_periodic: broken chain");
            cells.emplace_back(l + 1, pick + 1);
            bits[static_cast<std::size_t>(l)][static_cast<std::size_t>(pick)] = 0;
            cur = pick;
        }
        std::reverse(cells.begin(), cells.end());
        out.push_back(SolitonGroup{std::move(cells)});
    }
    return out;
}

}  // namespace sl2
