#pragma once

#include <string>
#include <utility>
#include <vector>

namespace sl2 {

/// Element of B_k: the weakly increasing row word 1^{ones} 2^{twos}, k = ones + twos.
struct RowElement {
    int ones = 0;
    int twos = 0;

    int capacity() const { return ones + twos; }
    std::string str() const;

    friend bool operator==(const RowElement&, const RowElement&) = default;
    friend auto operator<=>(const RowElement&, const RowElement&) = default;
};

/// u_l, the all-1 element of B_l.
inline RowElement highest_element(int l) { return RowElement{l, 0}; }

/// A path is a tensor product b_1 ⊗ b_2 ⊗ ... ⊗ b_L of row elements.
using Path = std::vector<RowElement>;

/// b[d] in Aff(B); d is the mode.
struct AffineElement {
    RowElement element;
    int mode = 0;

    friend bool operator==(const AffineElement&, const AffineElement&) = default;
};

/// Image of x ⊗ y under the combinatorial R, written left_out ⊗ right_out,
/// together with the energy H(x ⊗ y) = number of unwinding pairs.
struct RPair {
    RowElement left_out;   // carries the capacity of y
    RowElement right_out;  // carries the capacity of x
    int energy = 0;

    friend bool operator==(const RPair&, const RPair&) = default;
};

/// R by the two-column dot diagram (winding/unwinding pairing).
RPair apply_R_diagram(RowElement x, RowElement y);

/// R by the piecewise linear formula. Agrees with apply_R_diagram everywhere.
RPair apply_R_piecewise(RowElement x, RowElement y);

/// H(x ⊗ y).
int energy(RowElement x, RowElement y);

/// Affine R: a[d1] ⊗ b[d2] maps to b'[d2 - H] ⊗ a'[d1 + H].
std::pair<AffineElement, AffineElement> apply_R_affine(const AffineElement& a,
                                                       const AffineElement& b);

/// True iff the path is killed by the raising operator. Factors are read left
/// to right and each factor's letters right to left (2's before 1's); every
/// prefix of the resulting word needs at least as many 1's as 2's.
bool is_highest(const Path& path);

int count_twos(const Path& path);
int total_size(const Path& path);
std::vector<int> capacities(const Path& path);

}  // namespace sl2
