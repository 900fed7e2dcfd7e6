#include "sl2/serialize.hpp"

#include <set>

namespace sl2 {

nlohmann::json rc_to_json(const RiggedConfig& rc0) {
    const RiggedConfig rc = canonical(rc0);
    nlohmann::json j;
    j["lambda"] = rc.quantum_space;
    auto rows = nlohmann::json::array();
    for (const RiggedRow& r : rc.rows) rows.push_back({r.length, r.rigging});
    j["rows"] = std::move(rows);
    auto vac = nlohmann::json::object();
    std::set<int> lengths;
    for (const RiggedRow& r : rc.rows) lengths.insert(r.length);
    for (int len : lengths) vac[std::to_string(len)] = vacancy(rc, len);
    j["vacancy"] = std::move(vac);
    return j;
}

std::string rc_json_string(const RiggedConfig& rc) { return rc_to_json(rc).dump(); }

nlohmann::json led_to_json(const Path& path, const LocalEnergyTable& table,
                           const std::vector<SolitonGroup>& groups) {
    nlohmann::json j;
    j["bits"] = table.bits;
    auto gs = nlohmann::json::array();
    for (const SolitonGroup& g : groups) {
        nlohmann::json gj;
        auto cells = nlohmann::json::array();
        for (const auto& [l, c] : g.cells) cells.push_back({l, c});
        gj["cells"] = std::move(cells);
        gj["mu"] = g.length();
        gj["j"] = g.terminal().second;
        gj["r"] = rigging(path, table, g);
        gs.push_back(std::move(gj));
    }
    j["groups"] = std::move(gs);
    return j;
}

std::string led_json_string(const Path& path, const LocalEnergyTable& table,
                            const std::vector<SolitonGroup>& groups) {
    return led_to_json(path, table, groups).dump();
}

}  // namespace sl2
