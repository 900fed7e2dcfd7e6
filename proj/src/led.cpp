#include "sl2/led.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sl2 {

LocalEnergyTable local_energy_table(const Path& path) {
    LocalEnergyTable t;
    t.width = static_cast<int>(path.size());
    const int l_max = count_twos(path) + 1;
    std::vector<int> prev(path.size(), 0);
    for (int l = 1; l <= l_max; ++l) {
        RowElement carrier = highest_element(l);
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
                throw std::logic_error("local energy increment outside {0,1}");
            sum += diff[j];
        }
        t.bits.push_back(std::move(diff));
        t.cum.push_back(cur);
        t.row_sums.push_back(sum);
        prev = std::move(cur);
        if (sum == 0) break;  // row sums only decrease from here on
    }
    return t;
}

namespace {

[[noreturn]] void bad_table(const char* what) { throw std::invalid_argument(what); }

}  // namespace

std::vector<SolitonGroup> extract_groups_topdown(const LocalEnergyTable& table) {
    auto bits = table.bits;
    const int rows = static_cast<int>(bits.size());
    const int width = table.width;
    int n = 0;
    if (rows > 0)
        for (int j = 0; j < width; ++j) n += bits[0][static_cast<std::size_t>(j)];

    std::vector<SolitonGroup> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int g = 0; g < n; ++g) {
        int start = -1;
        for (int j = width - 1; j >= 0; --j)
            if (bits[0][static_cast<std::size_t>(j)]) { start = j; break; }
        SolitonGroup grp;
        grp.cells.emplace_back(1, start + 1);
        bits[0][static_cast<std::size_t>(start)] = 0;
        int cur = start;
        for (int l = 1; l < rows; ++l) {
            int pick = -1;
            for (int j = cur; j < width; ++j)
                if (bits[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)]) { pick = j; break; }
            if (pick < 0) break;
            grp.cells.emplace_back(l + 1, pick + 1);
            bits[static_cast<std::size_t>(l)][static_cast<std::size_t>(pick)] = 0;
            cur = pick;
        }
        out.push_back(std::move(grp));
    }
    for (const auto& row : bits)
        for (int v : row)
            if (v) bad_table("extract_groups_topdown: unconsumed 1 after N extractions");
    return out;
}

std::vector<SolitonGroup> extract_groups_bottomup(const LocalEnergyTable& table) {
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
            if (pick < 0) bad_table("extract_groups_bottomup: broken chain");
            cells.emplace_back(l + 1, pick + 1);
            bits[static_cast<std::size_t>(l)][static_cast<std::size_t>(pick)] = 0;
            cur = pick;
        }
        std::reverse(cells.begin(), cells.end());
        out.push_back(SolitonGroup{std::move(cells)});
    }
    return out;
}

int rigging(const Path& path, const LocalEnergyTable& table, const SolitonGroup& group) {
    const int mu = group.length();
    const int jk = group.terminal().second;
    int r = 0;
    for (int i = 0; i < jk - 1; ++i) r += std::min(mu, path[static_cast<std::size_t>(i)].capacity());
    r += table.energy_at(mu, jk);
    for (int i = 1; i <= jk; ++i) r -= 2 * table.energy_at(mu, i);
    return r;
}

RiggedConfig phi_crystal(const Path& path) {
    const LocalEnergyTable t = local_energy_table(path);
    const auto groups = extract_groups_topdown(t);
    RiggedConfig rc;
    rc.quantum_space = capacities(path);
    rc.rows.reserve(groups.size());
    for (const SolitonGroup& g : groups)
        rc.rows.push_back(RiggedRow{g.length(), rigging(path, t, g)});
    return canonical(std::move(rc));
}

std::string render_table_ascii(const Path& path, const LocalEnergyTable& table,
                               const std::vector<SolitonGroup>& groups) {
    const int rows = table.rows();
    const int width = table.width;
    std::vector<std::vector<std::string>> label(
        static_cast<std::size_t>(rows),
        std::vector<std::string>(static_cast<std::size_t>(width), "."));
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        const auto& cells = groups[gi].cells;
        for (std::size_t k = 0; k < cells.size(); ++k) {
            auto [l, c] = cells[k];
            std::string s = std::to_string(gi + 1);
            if (k + 1 == cells.size()) s += '*';
            label[static_cast<std::size_t>(l - 1)][static_cast<std::size_t>(c - 1)] = std::move(s);
        }
    }

    std::vector<std::size_t> colw(static_cast<std::size_t>(width));
    for (int j = 0; j < width; ++j) {
        std::size_t w = path[static_cast<std::size_t>(j)].str().size();
        for (int l = 0; l < rows; ++l)
            w = std::max(w, label[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)].size());
        colw[static_cast<std::size_t>(j)] = w;
    }
    std::size_t headw = 2 + std::to_string(rows).size();  // "l=<n>"

    std::ostringstream os;
    os << std::string(headw, ' ');
    for (int j = 0; j < width; ++j) {
        const std::string s = path[static_cast<std::size_t>(j)].str();
        os << "  " << std::string(colw[static_cast<std::size_t>(j)] - s.size(), ' ') << s;
    }
    os << '\n';
    for (int l = 0; l < rows; ++l) {
        const std::string head = "l=" + std::to_string(l + 1);
        os << head << std::string(headw - head.size(), ' ');
        for (int j = 0; j < width; ++j) {
            const std::string& s = label[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)];
            os << "  " << std::string(colw[static_cast<std::size_t>(j)] - s.size(), ' ') << s;
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace sl2
