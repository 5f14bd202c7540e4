#pragma once

#include <array>
#include <string>
#include <vector>

#include "cayley/int128.hpp"

namespace cayley {

/// An integer candidate point on the cubic X2X3X4 + X1X3X4 + X1X2X4 + X1X2X3 = 0.
struct CayleyPoint {
    std::array<Int128, 4> x{};

    friend bool operator==(const CayleyPoint& a, const CayleyPoint& b) { return a.x == b.x; }
};

/// One of the nine lines contained in the surface: three of the form
/// X_i + X_j = X_k + X_l = 0 (pair_sum, identified by the partition
/// {i,j}|{k,l}) and six of the form X_i = X_j = 0 (double_zero, identified
/// by the vanishing pair).  Indices are 0-based; labels print them 1-based.
struct LineId {
    enum class Kind { pair_sum, double_zero };

    Kind kind;
    int i;  // i < j, the defining pair ({i,j} vanishing, or x_i + x_j = 0)
    int j;

    std::string label() const;

    friend bool operator==(const LineId& a, const LineId& b) {
        return a.kind == b.kind && a.i == b.i && a.j == b.j;
    }
    friend bool operator<(const LineId& a, const LineId& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

/// All nine lines, pair_sum lines first.
const std::array<LineId, 9>& all_lines();

/// Value of the cubic form at x.
Int128 evaluate_cubic(const CayleyPoint& x);

/// True when the four coordinates have no common factor beyond 1.
bool is_primitive(const CayleyPoint& x);

bool line_contains(const LineId& line, const CayleyPoint& x);

/// Every line containing x; a point may lie on several, or none.
std::vector<LineId> line_membership(const CayleyPoint& x);

/// True when x is a non-zero point of the surface lying on none of the nine
/// lines.  The zero vector is classified off-surface.
bool in_open_subset_u(const CayleyPoint& x);

}  // namespace cayley
