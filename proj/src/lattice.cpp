#include "cayley/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "cayley/arith.hpp"
#include "cayley/rng.hpp"

namespace cayley {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    // b > 0
    std::int64_t q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

void check_plane_query(const PlaneBoxQuery& q) {
    std::int64_t g = std::gcd(std::gcd(std::llabs(q.v[0]), std::llabs(q.v[1])), std::llabs(q.v[2]));
    if (g != 1) throw std::invalid_argument("plane query vector must be primitive and non-zero");
    for (double h : q.H)
        if (!(h > 0)) throw std::invalid_argument("plane query bounds must be positive");
}

}  // namespace

Int128 count_primitive_on_plane(const PlaneBoxQuery& q, std::int64_t cell_budget) {
    check_plane_query(q);

    // Iterate the two coordinates with the smallest bounds; the equation
    // determines the third.
    std::array<int, 3> idx = {0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return q.H[a] < q.H[b]; });
    int a = idx[0], b = idx[1], m = idx[2];

    std::int64_t ha = static_cast<std::int64_t>(std::floor(q.H[a]));
    std::int64_t hb = static_cast<std::int64_t>(std::floor(q.H[b]));
    std::int64_t hm = static_cast<std::int64_t>(std::floor(q.H[m]));
    __int128 cells = static_cast<__int128>(2 * ha + 1) * (2 * hb + 1);
    if (cells > cell_budget) throw capacity_error("plane-box enumeration exceeds cell budget");

    __int128 count = 0;
    __int128 extra_cells = 0;
    for (std::int64_t xa = -ha; xa <= ha; ++xa) {
        for (std::int64_t xb = -hb; xb <= hb; ++xb) {
            __int128 partial = static_cast<__int128>(q.v[a]) * xa + static_cast<__int128>(q.v[b]) * xb;
            if (q.v[m] != 0) {
                if (partial % q.v[m] != 0) continue;
                __int128 xm = -partial / q.v[m];
                if (xm > hm || xm < -hm) continue;
                std::int64_t xm64 = static_cast<std::int64_t>(xm);
                if (std::gcd(std::gcd(std::llabs(xa), std::llabs(xb)), std::llabs(xm64)) == 1)
                    ++count;
            } else {
                if (partial != 0) continue;
                // The third coordinate is free; count values coprime to
                // gcd(xa, xb).
                std::int64_t g = std::gcd(std::llabs(xa), std::llabs(xb));
                if (g == 1) {
                    count += 2 * hm + 1;
                } else if (g == 0) {
                    if (hm >= 1) count += 2;  // only +-1 make (0,0,xm) primitive
                } else {
                    extra_cells += hm;
                    if (cells + extra_cells > cell_budget)
                        throw capacity_error("plane-box enumeration exceeds cell budget");
                    for (std::int64_t xm = 1; xm <= hm; ++xm)
                        if (std::gcd(xm, g) == 1) count += 2;  // xm and -xm
                }
            }
        }
    }
    return Int128::from_raw(count);
}

double plane_box_bound(const PlaneBoxQuery& q) {
    check_plane_query(q);
    double denom = 0;
    for (int i = 0; i < 3; ++i) denom = std::max(denom, q.H[i] * std::abs(static_cast<double>(q.v[i])));
    return 4.0 + 12.0 * std::numbers::pi * q.H[0] * q.H[1] * q.H[2] / denom;
}

double Ellipse::area() const {
    Rational d = discriminant();
    if (!(a.sign() > 0) || !(d.sign() > 0))
        throw std::invalid_argument("ellipse form must be positive definite");
    return std::numbers::pi / std::sqrt(d.to_double());
}

Int128 count_lattice_in_ellipse(const Lattice2& lattice, const Ellipse& e,
                                std::int64_t cell_budget) {
    std::int64_t det = lattice.det();
    if (det == 0) throw std::invalid_argument("lattice basis must have non-zero determinant");
    Rational disc = e.discriminant();
    if (!(e.a.sign() > 0) || !(disc.sign() > 0))
        throw std::invalid_argument("ellipse form must be positive definite");

    // Points of the ellipse satisfy |u1| <= sqrt(c/disc), |u2| <= sqrt(a/disc).
    double d = disc.to_double();
    double u1max = std::sqrt(e.c.to_double() / d);
    double u2max = std::sqrt(e.a.to_double() / d);

    // n = adj(basis) * u / det bounds the index box.
    double adet = std::abs(static_cast<double>(det));
    double n1max = (std::abs(static_cast<double>(lattice.basis[1][1])) * u1max +
                    std::abs(static_cast<double>(lattice.basis[0][1])) * u2max) /
                       adet +
                   1;
    double n2max = (std::abs(static_cast<double>(lattice.basis[1][0])) * u1max +
                    std::abs(static_cast<double>(lattice.basis[0][0])) * u2max) /
                       adet +
                   1;
    if (n1max > 2e18 || n2max > 2e18 || (2 * n1max + 1) * (2 * n2max + 1) > static_cast<double>(cell_budget))
        throw capacity_error("lattice-ellipse enumeration exceeds cell budget");
    std::int64_t b1 = static_cast<std::int64_t>(n1max);
    std::int64_t b2 = static_cast<std::int64_t>(n2max);

    // Exact membership test with cleared denominators:
    // A*u1^2 + 2*B*u1*u2 + C*u2^2 <= L.
    Int128 qa = e.a.den(), qb = e.b.den(), qc = e.c.den();
    Int128 lcm_ab = qa * (qb / gcd(qa, qb));
    Int128 lcm = lcm_ab * (qc / gcd(lcm_ab, qc));
    __int128 A = (e.a.num() * (lcm / qa)).raw();
    __int128 B = (e.b.num() * (lcm / qb)).raw();
    __int128 C = (e.c.num() * (lcm / qc)).raw();
    __int128 L = lcm.raw();

    // One-time magnitude guard so the raw form evaluation below cannot wrap.
    {
        double coef = std::max({std::abs(static_cast<double>(A)), std::abs(static_cast<double>(B)),
                                std::abs(static_cast<double>(C))});
        double umax =
            (std::abs(static_cast<double>(lattice.basis[0][0])) + std::abs(static_cast<double>(lattice.basis[0][1])) +
             std::abs(static_cast<double>(lattice.basis[1][0])) + std::abs(static_cast<double>(lattice.basis[1][1]))) *
            (n1max + n2max);
        if (coef * umax * umax > 1e37) throw capacity_error("ellipse form evaluation out of range");
    }

    __int128 count = 0;
    for (std::int64_t n1 = -b1; n1 <= b1; ++n1) {
        for (std::int64_t n2 = -b2; n2 <= b2; ++n2) {
            __int128 u1 = static_cast<__int128>(lattice.basis[0][0]) * n1 +
                          static_cast<__int128>(lattice.basis[0][1]) * n2;
            __int128 u2 = static_cast<__int128>(lattice.basis[1][0]) * n1 +
                          static_cast<__int128>(lattice.basis[1][1]) * n2;
            __int128 q = A * u1 * u1 + 2 * B * u1 * u2 + C * u2 * u2;
            if (q <= L) ++count;
        }
    }
    return Int128::from_raw(count);
}

double lattice_ellipse_bound(const Lattice2& lattice, const Ellipse& e) {
    std::int64_t det = lattice.det();
    if (det == 0) throw std::invalid_argument("lattice basis must have non-zero determinant");
    return 4.0 * (1.0 + e.area() / std::abs(static_cast<double>(det)));
}

Int128 divisibility_lattice_det(Int128 m1, Int128 m2, Int128 m3, Int128 m4) {
    for (Int128 m : {m1, m2, m3, m4})
        if (m < Int128(1)) throw std::invalid_argument("divisibility_lattice_det requires m_i >= 1");
    Int128 g = hcf({m1, m2, m3, m4});
    return m1 * m2 * m3 * m4 / g;
}

Int128 count_in_ap(double lo, double hi, Int128 modulus, Int128 residue) {
    if (modulus < Int128(1)) throw std::invalid_argument("count_in_ap requires modulus >= 1");
    if (!(lo <= hi)) return 0;
    if (std::abs(lo) > 9e17 || std::abs(hi) > 9e17)
        throw capacity_error("count_in_ap interval endpoint out of range");
    std::int64_t m = modulus.to_int64();
    std::int64_t r = residue.raw() >= 0 ? static_cast<std::int64_t>(residue.raw() % m)
                                        : static_cast<std::int64_t>((residue.raw() % m + m) % m);
    std::int64_t hi_floor = static_cast<std::int64_t>(std::floor(hi));
    std::int64_t lo_floor = static_cast<std::int64_t>(std::floor(lo));
    return Int128(floor_div(hi_floor - r, m) - floor_div(lo_floor - r, m));
}

BoundTrialReport run_plane_box_trials(std::int64_t trials, std::uint64_t seed) {
    SplitMix64 rng(seed);
    BoundTrialReport report;
    report.trials = trials;
    for (std::int64_t t = 0; t < trials; ++t) {
        PlaneBoxQuery q;
        do {
            for (auto& c : q.v) c = rng.range(-20, 20);
        } while (std::gcd(std::gcd(std::llabs(q.v[0]), std::llabs(q.v[1])), std::llabs(q.v[2])) != 1);
        for (auto& h : q.H) h = static_cast<double>(rng.range(1, 20)) / 2.0;  // 0.5 .. 10
        const double count = count_primitive_on_plane(q).to_double();
        const double bound = plane_box_bound(q);
        if (count > bound) ++report.violations;
        report.max_ratio = std::max(report.max_ratio, count / bound);
    }
    return report;
}

BoundTrialReport run_ellipse_trials(std::int64_t trials, std::uint64_t seed) {
    SplitMix64 rng(seed);
    BoundTrialReport report;
    report.trials = trials;
    for (std::int64_t t = 0; t < trials; ++t) {
        Lattice2 lat;
        Ellipse e;
        for (;;) {
            for (auto& row : lat.basis)
                for (auto& c : row) c = rng.range(-10, 10);
            if (lat.det() == 0) continue;
            e.a = Rational(Int128(rng.range(1, 10)), Int128(rng.range(1, 3)));
            e.c = Rational(Int128(rng.range(1, 10)), Int128(rng.range(1, 3)));
            e.b = Rational(Int128(rng.range(-5, 5)), Int128(rng.range(1, 3)));
            // Occasionally shrink the form to cover large-area ellipses.
            if (rng.below(8) == 0) {
                Int128 s(rng.range(2, 30));
                Rational scale(Int128(1), s * s);
                e.a = e.a * scale;
                e.b = e.b * scale;
                e.c = e.c * scale;
            }
            if (!(e.a.sign() > 0) || !(e.discriminant().sign() > 0)) continue;
            if (e.area() > 1e3) continue;
            // Keep the index box small enough that 10^4 sweeps stay cheap.
            const double d = e.discriminant().to_double();
            const double u1max = std::sqrt(e.c.to_double() / d);
            const double u2max = std::sqrt(e.a.to_double() / d);
            const double adet = std::abs(static_cast<double>(lat.det()));
            const double span = (u1max + u2max) * 22.0 / adet + 2.0;
            if (span * span > 20000) continue;
            break;
        }
        const double count = count_lattice_in_ellipse(lat, e).to_double();
        const double bound = lattice_ellipse_bound(lat, e);
        if (count > bound) ++report.violations;
        report.max_ratio = std::max(report.max_ratio, count / bound);
    }
    return report;
}

Int128 progression_product_count(double k1, double k2, double k3, Int128 a, Int128 q,
                                 std::int64_t cell_budget) {
    if (q < Int128(1)) throw std::invalid_argument("progression_product_count requires q >= 1");
    if (!(k1 > 0 && k2 > 0 && k3 > 0))
        throw std::invalid_argument("progression_product_count requires positive ranges");
    if (gcd(a, q) != Int128(1))
        throw std::invalid_argument("progression_product_count requires hcf(a, q) = 1");
    std::int64_t qq = q.to_int64();
    std::int64_t target = a.raw() >= 0 ? static_cast<std::int64_t>(a.raw() % qq)
                                       : static_cast<std::int64_t>((a.raw() % qq + qq) % qq);
    std::array<std::int64_t, 3> lo, hi;
    const double k[3] = {k1, k2, k3};
    __int128 cells = 1;
    for (int i = 0; i < 3; ++i) {
        lo[i] = static_cast<std::int64_t>(std::floor(k[i])) + 1;
        hi[i] = static_cast<std::int64_t>(std::floor(2 * k[i]));
        cells *= std::max<std::int64_t>(0, hi[i] - lo[i] + 1);
    }
    if (cells > cell_budget) throw capacity_error("progression_product_count exceeds cell budget");

    __int128 count = 0;
    for (std::int64_t n1 = lo[0]; n1 <= hi[0]; ++n1)
        for (std::int64_t n2 = lo[1]; n2 <= hi[1]; ++n2) {
            std::int64_t p12 = static_cast<std::int64_t>(
                static_cast<__int128>(n1) * n2 % qq);
            for (std::int64_t n3 = lo[2]; n3 <= hi[2]; ++n3)
                if (static_cast<__int128>(p12) * n3 % qq == target) ++count;
        }
    return Int128::from_raw(count);
}

}  // namespace cayley
