#include "cayley/surface.hpp"

#include "cayley/arith.hpp"

namespace cayley {

std::string LineId::label() const {
    std::string a = std::to_string(i + 1);
    std::string b = std::to_string(j + 1);
    if (kind == Kind::double_zero) return "double_zero:" + a + b;
    // Complementary pair of the partition.
    std::string rest;
    for (int k = 0; k < 4; ++k)
        if (k != i && k != j) rest += std::to_string(k + 1);
    return "pair_sum:" + a + b + "|" + rest;
}

const std::array<LineId, 9>& all_lines() {
    static const std::array<LineId, 9> lines = {{
        {LineId::Kind::pair_sum, 0, 1},
        {LineId::Kind::pair_sum, 0, 2},
        {LineId::Kind::pair_sum, 0, 3},
        {LineId::Kind::double_zero, 0, 1},
        {LineId::Kind::double_zero, 0, 2},
        {LineId::Kind::double_zero, 0, 3},
        {LineId::Kind::double_zero, 1, 2},
        {LineId::Kind::double_zero, 1, 3},
        {LineId::Kind::double_zero, 2, 3},
    }};
    return lines;
}

Int128 evaluate_cubic(const CayleyPoint& p) {
    Int128 total = 0;
    for (int omit = 0; omit < 4; ++omit) {
        Int128 term = 1;
        for (int k = 0; k < 4; ++k)
            if (k != omit) term *= p.x[k];
        total += term;
    }
    return total;
}

bool is_primitive(const CayleyPoint& p) {
    return hcf(std::span<const Int128>(p.x.data(), 4)) == Int128(1);
}

bool line_contains(const LineId& line, const CayleyPoint& p) {
    if (line.kind == LineId::Kind::double_zero)
        return p.x[line.i].is_zero() && p.x[line.j].is_zero();
    int k = -1, l = -1;
    for (int m = 0; m < 4; ++m) {
        if (m == line.i || m == line.j) continue;
        (k < 0 ? k : l) = m;
    }
    return (p.x[line.i] + p.x[line.j]).is_zero() && (p.x[k] + p.x[l]).is_zero();
}

std::vector<LineId> line_membership(const CayleyPoint& p) {
    std::vector<LineId> hits;
    for (const LineId& line : all_lines())
        if (line_contains(line, p)) hits.push_back(line);
    return hits;
}

bool in_open_subset_u(const CayleyPoint& p) {
    bool zero = true;
    for (const Int128& c : p.x) zero = zero && c.is_zero();
    if (zero) return false;
    if (!evaluate_cubic(p).is_zero()) return false;
    return line_membership(p).empty();
}

}  // namespace cayley
