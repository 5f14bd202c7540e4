#pragma once

#include <array>
#include <cstdint>

#include "cayley/int128.hpp"
#include "cayley/rational.hpp"

namespace cayley {

inline constexpr std::int64_t default_cell_budget = 100'000'000;

/// Query for primitive integer vectors x with v.x = 0 in the closed box
/// |x_i| <= H_i.  v must itself be primitive and non-zero.
struct PlaneBoxQuery {
    std::array<std::int64_t, 3> v{};
    std::array<double, 3> H{};
};

/// Exact count of primitive solutions, enumerating over the two smallest box
/// dimensions and solving for the third.  Throws capacity_error when the
/// enumeration domain exceeds cell_budget cells.
Int128 count_primitive_on_plane(const PlaneBoxQuery& q,
                                std::int64_t cell_budget = default_cell_budget);

/// Closed-form upper bound 4 + 12*pi*H1*H2*H3 / max_i(H_i*|v_i|) for the
/// count above.
double plane_box_bound(const PlaneBoxQuery& q);

/// Integer lattice in the plane, spanned by the two basis columns; the
/// determinant must be non-zero.
struct Lattice2 {
    // basis[r][c]: row r, column c; lattice points are basis * n, n integer.
    std::array<std::array<std::int64_t, 2>, 2> basis{};

    std::int64_t det() const { return basis[0][0] * basis[1][1] - basis[0][1] * basis[1][0]; }
};

/// Origin-centred ellipse q(u) = a*u1^2 + 2*b*u1*u2 + c*u2^2 <= 1 with exact
/// rational coefficients; requires a > 0 and a*c - b^2 > 0.
struct Ellipse {
    Rational a, b, c;

    Rational discriminant() const { return a * c - b * b; }  // positive when valid
    double area() const;                                     // pi / sqrt(ac - b^2)
};

/// Exact number of lattice points (the origin included) inside or on the
/// ellipse.
Int128 count_lattice_in_ellipse(const Lattice2& lattice, const Ellipse& e,
                                std::int64_t cell_budget = default_cell_budget);

/// Closed-form upper bound 4 * (1 + area(E)/|det|) for the count above.
double lattice_ellipse_bound(const Lattice2& lattice, const Ellipse& e);

/// Determinant (index in Z^3) of the sublattice {n : m_i | n_i for i <= 3,
/// m4 | n1 + n2 + n3}, by the closed form (m1*m2*m3*m4) / hcf(m1,m2,m3,m4).
Int128 divisibility_lattice_det(Int128 m1, Int128 m2, Int128 m3, Int128 m4);

/// Number of integers n with lo < n <= hi and n == residue (mod modulus).
Int128 count_in_ap(double lo, double hi, Int128 modulus, Int128 residue);

/// Exact count of triples n_i in (K_i, 2K_i] with n1*n2*n3 == a (mod q), by
/// direct triple loop.  Requires hcf(a, q) = 1 and positive K_i.
Int128 progression_product_count(double k1, double k2, double k3, Int128 a, Int128 q,
                                 std::int64_t cell_budget = default_cell_budget);

/// Outcome of a seeded random sweep of one of the closed-form bounds.
struct BoundTrialReport {
    std::int64_t trials = 0;
    std::int64_t violations = 0;  // count exceeded its bound
    double max_ratio = 0;         // largest count/bound seen
};

/// Seeded sweep of the plane-box bound: primitive vectors with entries up to
/// 20, box bounds up to 10, exact count checked against the closed form.
BoundTrialReport run_plane_box_trials(std::int64_t trials, std::uint64_t seed);

/// Seeded sweep of the lattice-ellipse bound: integer bases with entries up
/// to 10, rational ellipses with area up to 10^3.
BoundTrialReport run_ellipse_trials(std::int64_t trials, std::uint64_t seed);

}  // namespace cayley
