#pragma once

#include <vector>

#include "sl2/crystal.hpp"
#include "sl2/led.hpp"

namespace sl2 {

struct EvolutionResult {
    Path new_path;
    RowElement carrier_out;
    int total_energy = 0;
};

/// Send an arbitrary carrier through the path by repeated R.
EvolutionResult sweep_carrier(const Path& path, RowElement carrier);

/// Time evolution T_l: sweep u_l through the path. total_energy is E_l.
EvolutionResult evolve(const Path& path, int l);

/// E_1 .. E_{l_max}.
std::vector<int> energies(const Path& path, int l_max);

/// On the padded path b' = b ⊗ 1^pad (pad > total size): asserts the carrier
/// returns to u_l and that the rigged configuration of T_l(b') equals that of
/// b' with every rigging shifted by min(mu_j, l).
bool check_linearization(const Path& path, int l, int pad);

/// Periodic carrier v_l, defined by u_l ⊗ b ≅ T_l(b) ⊗ v_l for B_1 paths with
/// no more 2's than 1's; validated by re-sweeping (v_l is a fixed point).
RowElement carrier_v(const Path& path, int l);

/// Periodic time evolution: sweep v_l through the path. For l = 1 this is the
/// one-step right cyclic rotation.
Path evolve_periodic(const Path& path, int l);

/// Local energy distribution with initial carrier v_l per row.
LocalEnergyTable led_periodic(const Path& path);

/// Bottom-up extraction with wrap-around: when no 1 lies weakly left in the
/// row above, the search resumes from the right end of that row.
std::vector<SolitonGroup> extract_groups_periodic(const LocalEnergyTable& table);

}  // namespace sl2
