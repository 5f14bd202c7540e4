#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "cayley/arith.hpp"
#include "cayley/lattice.hpp"
#include "cayley/rng.hpp"

using namespace cayley;

namespace {

// Plain triple scan, the independent check for the plane counter.
std::int64_t plane_count_by_scan(const PlaneBoxQuery& q) {
    std::int64_t h0 = static_cast<std::int64_t>(std::floor(q.H[0]));
    std::int64_t h1 = static_cast<std::int64_t>(std::floor(q.H[1]));
    std::int64_t h2 = static_cast<std::int64_t>(std::floor(q.H[2]));
    std::int64_t count = 0;
    for (std::int64_t x0 = -h0; x0 <= h0; ++x0)
        for (std::int64_t x1 = -h1; x1 <= h1; ++x1)
            for (std::int64_t x2 = -h2; x2 <= h2; ++x2) {
                if (q.v[0] * x0 + q.v[1] * x1 + q.v[2] * x2 != 0) continue;
                if (std::gcd(std::gcd(std::llabs(x0), std::llabs(x1)), std::llabs(x2)) != 1)
                    continue;
                ++count;
            }
    return count;
}

// Direct scan over the coordinate box, solving lattice membership exactly.
std::int64_t ellipse_count_by_scan(const Lattice2& lat, const Ellipse& e) {
    double d = e.discriminant().to_double();
    std::int64_t u1max = static_cast<std::int64_t>(std::sqrt(e.c.to_double() / d)) + 1;
    std::int64_t u2max = static_cast<std::int64_t>(std::sqrt(e.a.to_double() / d)) + 1;
    std::int64_t det = lat.det();
    std::int64_t count = 0;
    for (std::int64_t u1 = -u1max; u1 <= u1max; ++u1)
        for (std::int64_t u2 = -u2max; u2 <= u2max; ++u2) {
            // u in the lattice iff adj(basis) * u is divisible by det.
            std::int64_t n1 = lat.basis[1][1] * u1 - lat.basis[0][1] * u2;
            std::int64_t n2 = -lat.basis[1][0] * u1 + lat.basis[0][0] * u2;
            if (n1 % det != 0 || n2 % det != 0) continue;
            Rational q = e.a * Rational(u1 * u1) + Rational(2) * e.b * Rational(u1 * u2) +
                         e.c * Rational(u2 * u2);
            if (q <= Rational(1)) ++count;
        }
    return count;
}

}  // namespace

TEST_CASE("primitive plane-box counts, spot values") {
    CHECK(count_primitive_on_plane({{1, 1, 1}, {2, 2, 2}}) == Int128(12));
    CHECK(count_primitive_on_plane({{1, 0, 0}, {1, 1, 1}}) == Int128(8));
    CHECK(count_primitive_on_plane({{1, 2, 3}, {1, 1, 1}}) == Int128(2));
    CHECK_THROWS_AS(count_primitive_on_plane({{2, 2, 2}, {1, 1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(count_primitive_on_plane({{0, 0, 0}, {1, 1, 1}}), std::invalid_argument);
}

TEST_CASE("plane-box counts match a plain scan") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        PlaneBoxQuery q;
        do {
            for (auto& c : q.v) c = rng.range(-9, 9);
        } while (std::gcd(std::gcd(std::llabs(q.v[0]), std::llabs(q.v[1])), std::llabs(q.v[2])) != 1);
        for (auto& h : q.H) h = static_cast<double>(rng.range(1, 12)) / 2.0;
        CHECK(count_primitive_on_plane(q) == Int128(plane_count_by_scan(q)));
    }
}

TEST_CASE("plane-box bound, spot values and positivity") {
    CHECK(plane_box_bound({{1, 1, 1}, {2, 2, 2}}) ==
          doctest::Approx(4 + 48 * std::numbers::pi).epsilon(1e-12));
    CHECK(plane_box_bound({{1, 0, 0}, {1, 1, 1}}) ==
          doctest::Approx(4 + 12 * std::numbers::pi).epsilon(1e-12));
    SplitMix64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        PlaneBoxQuery q;
        do {
            for (auto& c : q.v) c = rng.range(-20, 20);
        } while (std::gcd(std::gcd(std::llabs(q.v[0]), std::llabs(q.v[1])), std::llabs(q.v[2])) != 1);
        for (auto& h : q.H) h = static_cast<double>(rng.range(1, 20)) / 2.0;
        CHECK(plane_box_bound(q) >= 4.0);
    }
}

TEST_CASE("lattice-ellipse counts, spot values") {
    Lattice2 identity{{{{1, 0}, {0, 1}}}};
    Ellipse disc{Rational(1), Rational(0), Rational(1)};
    CHECK(count_lattice_in_ellipse(identity, disc) == Int128(5));

    Lattice2 coarse{{{{3, 0}, {0, 3}}}};
    CHECK(count_lattice_in_ellipse(coarse, disc) == Int128(1));

    // Radius-10 disc: count close to pi * 100, exact value pinned by scan.
    Ellipse wide{Rational(1, 100), Rational(0), Rational(1, 100)};
    Int128 n = count_lattice_in_ellipse(identity, wide);
    CHECK(n == Int128(ellipse_count_by_scan(identity, wide)));
    CHECK(n.to_int64() > 300);
    CHECK(n.to_int64() < 330);
}

TEST_CASE("lattice-ellipse counts match the direct scan on random inputs") {
    SplitMix64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        Lattice2 lat;
        Ellipse e;
        for (;;) {
            for (auto& row : lat.basis)
                for (auto& c : row) c = rng.range(-4, 4);
            if (lat.det() == 0) continue;
            e.a = Rational(Int128(rng.range(1, 8)), Int128(rng.range(1, 3)));
            e.c = Rational(Int128(rng.range(1, 8)), Int128(rng.range(1, 3)));
            e.b = Rational(Int128(rng.range(-4, 4)), Int128(rng.range(1, 3)));
            if (e.a.sign() > 0 && e.discriminant().sign() > 0) break;
        }
        CHECK(count_lattice_in_ellipse(lat, e) == Int128(ellipse_count_by_scan(lat, e)));
    }
}

TEST_CASE("lattice-ellipse bound, spot values") {
    Lattice2 identity{{{{1, 0}, {0, 1}}}};
    Ellipse disc{Rational(1), Rational(0), Rational(1)};
    CHECK(lattice_ellipse_bound(identity, disc) ==
          doctest::Approx(4 * (1 + std::numbers::pi)).epsilon(1e-12));
    Lattice2 det10{{{{10, 0}, {0, 1}}}};
    CHECK(lattice_ellipse_bound(det10, disc) ==
          doctest::Approx(4 * (1 + std::numbers::pi / 10)).epsilon(1e-12));
    CHECK(lattice_ellipse_bound(det10, disc) >= 4.0);
}

TEST_CASE("divisibility-lattice determinant closed form") {
    CHECK(divisibility_lattice_det(2, 3, 1, 6) == Int128(36));
    for (long long m : {1, 2, 3, 5, 8})
        CHECK(divisibility_lattice_det(m, m, m, m) == Int128(m * m * m));
    CHECK(divisibility_lattice_det(1, 1, 1, 1) == Int128(1));
    CHECK_THROWS_AS(divisibility_lattice_det(0, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("arithmetic-progression interval counts") {
    CHECK(count_in_ap(0, 10, Int128(3), Int128(1)) == Int128(4));
    CHECK(count_in_ap(0, 10, Int128(1), Int128(0)) == Int128(10));
    CHECK(count_in_ap(5, 5, Int128(2), Int128(1)) == Int128(0));
    CHECK(count_in_ap(-3.5, 4.5, Int128(2), Int128(-1)) == Int128(4));  // -3,-1,1,3

    SplitMix64 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
        double lo = static_cast<double>(rng.range(-40, 40)) / 2.0;
        double hi = lo + static_cast<double>(rng.range(0, 60)) / 2.0;
        std::int64_t m = rng.range(1, 9);
        std::int64_t r = rng.range(-10, 10);
        std::int64_t direct = 0;
        for (std::int64_t n = -100; n <= 100; ++n)
            if (n > lo && n <= hi && ((n - r) % m + m) % m == 0) ++direct;
        CHECK(count_in_ap(lo, hi, Int128(m), Int128(r)) == Int128(direct));
    }
}

TEST_CASE("progression product counts") {
    CHECK(progression_product_count(0.5, 0.5, 0.5, Int128(1), Int128(5)) == Int128(1));
    CHECK(progression_product_count(1, 1, 1, Int128(1), Int128(5)) == Int128(0));
    CHECK(progression_product_count(1, 1, 1, Int128(3), Int128(5)) == Int128(1));
    CHECK_THROWS_AS(progression_product_count(1, 1, 1, Int128(5), Int128(10)),
                    std::invalid_argument);

    // Summing over residues coprime to q gives all coprime-product triples.
    for (std::int64_t q = 1; q <= 12; ++q)
        for (double K : {1.0, 2.5, 4.0}) {
            Int128 total = 0;
            for (std::int64_t a = 1; a <= q; ++a)
                if (gcd(Int128(a), Int128(q)) == Int128(1))
                    total += progression_product_count(K, K, K, Int128(a), Int128(q));
            std::int64_t lo = static_cast<std::int64_t>(std::floor(K)) + 1;
            std::int64_t hi = static_cast<std::int64_t>(std::floor(2 * K));
            Int128 expected = 0;
            for (std::int64_t n1 = lo; n1 <= hi; ++n1)
                for (std::int64_t n2 = lo; n2 <= hi; ++n2)
                    for (std::int64_t n3 = lo; n3 <= hi; ++n3)
                        if (std::gcd(n1 * n2 * n3 % q, q) == 1) expected += 1;
            CHECK(total == expected);
        }
}

TEST_CASE("seeded bound sweeps hold and are deterministic") {
    BoundTrialReport plane = run_plane_box_trials(400, 99);
    CHECK(plane.trials == 400);
    CHECK(plane.violations == 0);
    CHECK(plane.max_ratio <= 1.0);
    BoundTrialReport plane2 = run_plane_box_trials(400, 99);
    CHECK(plane.max_ratio == plane2.max_ratio);

    BoundTrialReport ell = run_ellipse_trials(400, 99);
    CHECK(ell.trials == 400);
    CHECK(ell.violations == 0);
    BoundTrialReport ell2 = run_ellipse_trials(400, 99);
    CHECK(ell.max_ratio == ell2.max_ratio);
}
