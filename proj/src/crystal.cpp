#include "sl2/crystal.hpp"

#include <algorithm>

namespace sl2 {

std::string RowElement::str() const {
    std::string s;
    s.reserve(static_cast<std::size_t>(capacity()));
    s.append(static_cast<std::size_t>(ones), '1');
    s.append(static_cast<std::size_t>(twos), '2');
    return s;
}

namespace {

// Dot heights in the two-row diagram: letter 1 sits in the upper row,
// letter 2 in the lower one.
constexpr int kUpper = 2;
constexpr int kLower = 1;

struct Dot {
    int height;
    bool paired = false;
};

std::vector<Dot> dots_of(RowElement e) {
    std::vector<Dot> d;
    d.reserve(static_cast<std::size_t>(e.capacity()));
    for (int i = 0; i < e.ones; ++i) d.push_back({kUpper});
    for (int i = 0; i < e.twos; ++i) d.push_back({kLower});
    return d;
}

}  // namespace

RPair apply_R_diagram(RowElement x, RowElement y) {
    if (x.capacity() >= y.capacity()) {
        auto left = dots_of(x);
        auto right = dots_of(y);
        int h = 0;
        for (const Dot& rd : right) {  // top to bottom
            // nearest unpaired left dot strictly higher: unwinding
            int pick = -1;
            for (int i = 0; i < static_cast<int>(left.size()); ++i) {
                if (left[i].paired || left[i].height <= rd.height) continue;
                if (pick < 0 || left[i].height < left[pick].height) pick = i;
            }
            if (pick >= 0) {
                ++h;
            } else {
                // wrap to the bottom: lowest unpaired left dot (winding)
                for (int i = 0; i < static_cast<int>(left.size()); ++i) {
                    if (left[i].paired) continue;
                    if (pick < 0 || left[i].height < left[pick].height) pick = i;
                }
            }
            left[pick].paired = true;
        }
        // Paired left dots form the new left factor; the unpaired ones move
        // right and join y's dots.
        RPair out;
        out.energy = h;
        out.right_out = y;
        for (const Dot& ld : left) {
            if (ld.paired) {
                (ld.height == kUpper ? out.left_out.ones : out.left_out.twos) += 1;
            } else {
                (ld.height == kUpper ? out.right_out.ones : out.right_out.twos) += 1;
            }
        }
        return out;
    }

    // x.capacity() < y.capacity(): run the pairing in reverse, using R^2 = id.
    // Left dots pick a strictly lower right partner (unwinding) or wrap to the
    // top; unpaired right dots move left.
    auto left = dots_of(x);
    auto right = dots_of(y);
    int h = 0;
    for (auto it = left.rbegin(); it != left.rend(); ++it) {  // bottom to top
        int pick = -1;
        for (int i = 0; i < static_cast<int>(right.size()); ++i) {
            if (right[i].paired || right[i].height >= it->height) continue;
            if (pick < 0 || right[i].height > right[pick].height) pick = i;
        }
        if (pick >= 0) {
            ++h;
        } else {
            for (int i = 0; i < static_cast<int>(right.size()); ++i) {
                if (right[i].paired) continue;
                if (pick < 0 || right[i].height > right[pick].height) pick = i;
            }
        }
        right[pick].paired = true;
    }
    RPair out;
    out.energy = h;
    out.left_out = x;
    for (const Dot& rd : right) {
        if (rd.paired) {
            (rd.height == kUpper ? out.right_out.ones : out.right_out.twos) += 1;
        } else {
            (rd.height == kUpper ? out.left_out.ones : out.left_out.twos) += 1;
        }
    }
    return out;
}

RPair apply_R_piecewise(RowElement x, RowElement y) {
    // Q_i = min(x_{i+1}, y_i), indices mod 2; H = Q_0.
    const int q0 = std::min(x.ones, y.twos);
    const int q1 = std::min(x.twos, y.ones);
    RPair out;
    out.right_out = RowElement{x.ones + q1 - q0, x.twos + q0 - q1};
    out.left_out = RowElement{y.ones + q0 - q1, y.twos + q1 - q0};
    out.energy = q0;
    return out;
}

int energy(RowElement x, RowElement y) { return apply_R_piecewise(x, y).energy; }

std::pair<AffineElement, AffineElement> apply_R_affine(const AffineElement& a,
                                                       const AffineElement& b) {
    const RPair rp = apply_R_diagram(a.element, b.element);
    return {AffineElement{rp.left_out, b.mode - rp.energy},
            AffineElement{rp.right_out, a.mode + rp.energy}};
}

bool is_highest(const Path& path) {
    int balance = 0;  // #1 - #2 read so far; the 2-block of a factor comes first
    for (const RowElement& b : path) {
        balance -= b.twos;
        if (balance < 0) return false;
        balance += b.ones;
    }
    return true;
}

int count_twos(const Path& path) {
    int n = 0;
    for (const RowElement& b : path) n += b.twos;
    return n;
}

int total_size(const Path& path) {
    int n = 0;
    for (const RowElement& b : path) n += b.capacity();
    return n;
}

std::vector<int> capacities(const Path& path) {
    std::vector<int> out;
    out.reserve(path.size());
    for (const RowElement& b : path) out.push_back(b.capacity());
    return out;
}

}  // namespace sl2
