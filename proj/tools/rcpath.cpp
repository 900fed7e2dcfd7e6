#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sl2/bbs.hpp"
#include "sl2/crystal.hpp"
#include "sl2/kkr.hpp"
#include "sl2/led.hpp"
#include "sl2/path_text.hpp"
#include "sl2/selfcheck.hpp"
#include "sl2/serialize.hpp"

namespace {

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(what) + ": bad integer '" + tok + "'");
        }
    }
    if (out.empty()) throw std::invalid_argument(std::string(what) + ": empty list");
    return out;
}

std::vector<sl2::RiggedRow> parse_rows(const std::string& text) {
    std::vector<sl2::RiggedRow> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        const auto colon = tok.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("rows: expected length:rigging, got '" + tok + "'");
        try {
            out.push_back(sl2::RiggedRow{std::stoi(tok.substr(0, colon)),
                                         std::stoi(tok.substr(colon + 1))});
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("rows: bad entry '" + tok + "'");
        }
    }
    return out;
}

void print_rc(const sl2::RiggedConfig& rc0) {
    const sl2::RiggedConfig rc = sl2::canonical(rc0);
    std::cout << "lambda:";
    for (int c : rc.quantum_space) std::cout << ' ' << c;
    std::cout << '\n';
    for (const sl2::RiggedRow& r : rc.rows)
        std::cout << "row: mu=" << r.length << " r=" << r.rigging
                  << " p=" << sl2::vacancy(rc, r.length) << '\n';
}

int run_kkr(const std::string& path_text, const std::string& method, bool as_json) {
    const sl2::Path path = sl2::parse_path(path_text);
    const sl2::RiggedConfig rc =
        method == "classical" ? sl2::phi_classical(path) : sl2::phi_crystal(path);
    if (as_json)
        std::cout << sl2::rc_json_string(rc) << '\n';
    else
        print_rc(rc);
    return 0;
}

int run_led(const std::string& path_text, bool as_json) {
    const sl2::Path path = sl2::parse_path(path_text);
    const sl2::LocalEnergyTable table = sl2::local_energy_table(path);
    const auto groups = sl2::extract_groups_topdown(table);
    if (as_json) {
        std::cout << sl2::led_json_string(path, table, groups) << '\n';
        return 0;
    }
    std::cout << sl2::render_table_ascii(path, table, groups);
    for (std::size_t i = 0; i < groups.size(); ++i)
        std::cout << "group " << i + 1 << ": mu=" << groups[i].length()
                  << " j=" << groups[i].terminal().second
                  << " r=" << sl2::rigging(path, table, groups[i]) << '\n';
    return 0;
}

int run_evolve(const std::string& path_text, int l, int steps, bool periodic) {
    sl2::Path path = sl2::parse_path(path_text);
    std::cout << sl2::render_path(path) << '\n';
    for (int s = 0; s < steps; ++s) {
        path = periodic ? sl2::evolve_periodic(path, l) : sl2::evolve(path, l).new_path;
        std::cout << sl2::render_path(path) << '\n';
    }
    return 0;
}

int run_energy(const std::string& path_text, int l_max) {
    const sl2::Path path = sl2::parse_path(path_text);
    if (l_max <= 0) l_max = std::max(1, sl2::count_twos(path));
    const std::vector<int> es = sl2::energies(path, l_max);
    for (int l = 1; l <= l_max; ++l)
        std::cout << "E_" << l << " = " << es[static_cast<std::size_t>(l - 1)] << '\n';
    return 0;
}

int run_rc_to_path(const std::string& lambda_text, const std::string& rows_text) {
    const std::vector<int> caps = parse_int_list(lambda_text, "lambda");
    sl2::RiggedConfig rc;
    rc.quantum_space = caps;
    rc.rows = parse_rows(rows_text);
    std::cout << sl2::render_path(sl2::phi_inverse(rc, caps)) << '\n';
    return 0;
}

int run_check(bool exhaustive, int random_trials, std::uint64_t seed, int max_factors,
              int max_capacity) {
    sl2::CheckOptions opt;
    opt.seed = seed;
    if (exhaustive && random_trials <= 0) {
        opt.run_random = false;
        opt.max_factors = max_factors > 0 ? max_factors : 4;
        opt.max_capacity = max_capacity > 0 ? max_capacity : 3;
    } else if (random_trials > 0 && !exhaustive) {
        opt.run_exhaustive = false;
        opt.random_trials = random_trials;
        if (max_factors > 0) opt.random_max_factors = max_factors;
        if (max_capacity > 0) opt.random_max_capacity = max_capacity;
    } else {
        if (max_factors > 0) opt.max_factors = max_factors;
        if (max_capacity > 0) opt.max_capacity = max_capacity;
        if (random_trials > 0) opt.random_trials = random_trials;
    }

    std::cout << "seed: " << opt.seed << '\n';
    const sl2::CheckReport rep = sl2::run_selfcheck(opt);
    for (const sl2::CheckItem& it : rep.items)
        std::cout << it.name << ": " << it.failures << " failures / " << it.trials
                  << " trials\n";
    std::cout << "total: " << rep.total_failures() << " failures / " << rep.total_trials()
              << " trials\n";
    return rep.total_failures() == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sl2 row-crystal paths: rigged configurations, local energy "
                 "distributions and box-ball evolutions"};
    app.require_subcommand(1);

    std::string path_text;
    std::string method = "crystal";
    bool as_json = false;

    auto* kkr = app.add_subcommand("kkr", "rigged configuration of a path");
    kkr->add_option("path", path_text, "path, e.g. 1111.11.2.1122.1222.1.2.22")->required();
    kkr->add_option("--method", method, "classical | crystal (default crystal)")
        ->check(CLI::IsMember({"classical", "crystal"}));
    kkr->add_flag("--json", as_json, "machine-readable output");

    bool led_json = false, led_ascii = false;
    auto* led = app.add_subcommand("led", "annotated local energy distribution");
    led->add_option("path", path_text, "path text")->required();
    led->add_flag("--json", led_json, "machine-readable output");
    led->add_flag("--ascii", led_ascii, "table rendering (default)");

    int l = 1, steps = 1;
    bool periodic = false;
    auto* evolve = app.add_subcommand("evolve", "apply time evolutions T_l");
    evolve->add_option("path", path_text, "path text")->required();
    evolve->add_option("--l", l, "carrier capacity l")->required()->check(CLI::PositiveNumber);
    evolve->add_option("--steps", steps, "number of steps (default 1)")->check(CLI::PositiveNumber);
    evolve->add_flag("--periodic", periodic, "periodic evolution (B_1 paths only)");

    int l_max = 0;
    auto* energy = app.add_subcommand("energy", "conserved quantities E_1..E_M");
    energy->add_option("path", path_text, "path text")->required();
    energy->add_option("--lmax", l_max, "largest l (default: number of 2's)");

    std::string lambda_text, rows_text;
    auto* rc2p = app.add_subcommand("rc-to-path", "invert a rigged configuration");
    rc2p->add_option("--lambda", lambda_text, "factor capacities, e.g. 1,2")->required();
    rc2p->add_option("--rows", rows_text, "rows as length:rigging, e.g. 2:-2,1:0");

    bool exhaustive = false;
    int random_trials = 0;
    std::uint64_t seed = 20240613;
    int max_factors = 0, max_capacity = 0;
    auto* check = app.add_subcommand("check", "run the invariant self-check suite");
    check->add_flag("--exhaustive", exhaustive, "exhaustive corpus only");
    check->add_option("--random", random_trials, "random corpus of N paths");
    check->add_option("--seed", seed, "random seed (printed for reproducibility)");
    check->add_option("--max-factors", max_factors, "path length bound");
    check->add_option("--max-capacity", max_capacity, "factor capacity bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (kkr->parsed()) return run_kkr(path_text, method, as_json);
        if (led->parsed()) return run_led(path_text, led_json && !led_ascii);
        if (evolve->parsed()) return run_evolve(path_text, l, steps, periodic);
        if (energy->parsed()) return run_energy(path_text, l_max);
        if (rc2p->parsed()) return run_rc_to_path(lambda_text, rows_text);
        if (check->parsed())
            return run_check(exhaustive, random_trials, seed, max_factors, max_capacity);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
