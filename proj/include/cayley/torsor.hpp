#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "cayley/int128.hpp"
#include "cayley/surface.hpp"

#include <json.hpp>

namespace cayley {

/// Six values keyed by the unordered pairs {i,j} of {0,1,2,3}, in the fixed
/// order {0,1},{0,2},{0,3},{1,2},{1,3},{2,3} (labels "12".."34").
class PairTable {
public:
    static constexpr int size = 6;

    static constexpr int index(int i, int j) {
        // Unordered: index(i,j) == index(j,i).
        if (i > j) std::swap(i, j);
        constexpr int base[4] = {0, 3, 5, 0};
        return base[i] + (j - i - 1);
    }
    static constexpr std::array<std::pair<int, int>, 6> pairs() {
        return {{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    }
    static std::string label(int pair_index);

    Int128& at(int i, int j) { return v_[index(i, j)]; }
    const Int128& at(int i, int j) const { return v_[index(i, j)]; }
    Int128& slot(int pair_index) { return v_[pair_index]; }
    const Int128& slot(int pair_index) const { return v_[pair_index]; }

    friend bool operator==(const PairTable& a, const PairTable& b) { return a.v_ == b.v_; }

private:
    std::array<Int128, 6> v_{};
};

/// Coordinates of the reversible change of variables on the open subset U:
/// four signed values y_i and six positive pair values z_{ij}, subject to
///   - the six z are pairwise coprime,
///   - the y are pairwise coprime,
///   - hcf(y_i, z_{ij}) = 1 for every pair,
///   - the linear relation sum_i linear_coeff(i) * y_i = 0,
///   - no two-term partial sum of that relation vanishes.
/// A vector x is recovered as x_i = coord_multiplier(i) * y_j * y_k * y_l.
struct TorsorCoords {
    std::array<Int128, 4> y{};
    PairTable z;

    /// Coefficient of y_i in the linear relation: the product of the three
    /// pair values that avoid index i.
    Int128 linear_coeff(int i) const;

    /// Multiplier reconstructing x_i: the product of the three pair values
    /// that contain index i.
    Int128 coord_multiplier(int i) const;

    /// Product of all six pair values; equals linear_coeff(i) *
    /// coord_multiplier(i) for every i.
    Int128 pair_product() const;

    friend bool operator==(const TorsorCoords& a, const TorsorCoords& b) {
        return a.y == b.y && a.z == b.z;
    }
};

struct Decomposition {
    int sign = 1;  // sign * x_i = coord_multiplier(i) * y_j * y_k * y_l
    TorsorCoords coords;
};

/// Empty when every TorsorCoords constraint holds; otherwise one entry per
/// violated constraint, naming it.
std::vector<std::string> validate(const TorsorCoords& t);

/// Canonical torsor coordinates of a primitive point of U.  Throws
/// std::invalid_argument for points that are not primitive or not in U, and
/// internal_inconsistency if any divisibility step fails (a library bug,
/// never a property of valid input).
Decomposition decompose(const CayleyPoint& x);

/// Inverse of decompose: rebuilds the point from valid coordinates.  Throws
/// std::invalid_argument naming the first violated constraint when t does
/// not validate.
CayleyPoint reconstruct(const TorsorCoords& t);

/// The derived pair values v_{ij} = (z_ik z_il y_j + z_jk z_jl y_i) / z_ij;
/// the division is exact for every valid t, and v_{ij} + v_{kl} = 0 for the
/// three complementary pairings.
PairTable v_matrix(const TorsorCoords& t);

/// Checks v_ij * v_ik == z_il^2 y_j y_k - z_jk^2 y_i y_l for every choice of
/// distinct indices; true for every valid t.
bool check_quadratic_identity(const TorsorCoords& t);

/// JSON object {"sign","y","z","A","B","P","v"} with z and v keyed "12".."34".
nlohmann::json to_json(const Decomposition& d);

}  // namespace cayley
