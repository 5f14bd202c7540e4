#include "cayley/enumeration.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <thread>

#include "cayley/arith.hpp"

namespace cayley {

namespace {

using std::int64_t;
using i128 = __int128;

constexpr int64_t iabs(int64_t v) { return v < 0 ? -v : v; }

int64_t checked_height_limit(double B, int64_t hard_limit, const char* what) {
    if (!(B >= 1)) return 0;
    if (B > static_cast<double>(hard_limit))
        throw capacity_error(std::string(what) + ": height bound exceeds the configured limit");
    return static_cast<int64_t>(std::floor(B));
}

// ---------------------------------------------------------------------------
// Brute-force route.  A solution is determined by its first three
// coordinates: writing s = x1x2 + x1x3 + x2x3, the cubic vanishes exactly
// when s != 0, s | x1x2x3 and x4 = -x1x2x3/s.  Only x1 >= 1 is scanned; the
// sink accounts for the sign pair (x, -x).
// ---------------------------------------------------------------------------
template <class Sink>
void scan_naive(int64_t limit, Sink&& sink) {
    for (int64_t x1 = 1; x1 <= limit; ++x1) {
        for (int64_t x2 = -limit; x2 <= limit; ++x2) {
            if (x2 == 0) continue;
            const int64_t p12 = x1 * x2;
            const int64_t s12 = x1 + x2;
            for (int64_t x3 = -limit; x3 <= limit; ++x3) {
                if (x3 == 0) continue;
                const int64_t s = p12 + s12 * x3;
                if (s == 0) continue;
                const int64_t p = p12 * x3;
                if (p % s != 0) continue;
                const int64_t x4 = -p / s;
                if (x4 == 0 || x4 > limit || x4 < -limit) continue;
                // Lines: coordinates are all non-zero here, so only the
                // pair-sum lines can occur.
                if ((x1 + x2 == 0 && x3 + x4 == 0) || (x1 + x3 == 0 && x2 + x4 == 0) ||
                    (x1 + x4 == 0 && x2 + x3 == 0))
                    continue;
                const int64_t h = std::max({x1, iabs(x2), iabs(x3), iabs(x4)});
                const bool primitive =
                    std::gcd(std::gcd(x1, iabs(x2)), std::gcd(iabs(x3), iabs(x4))) == 1;
                sink(std::array<int64_t, 4>{x1, x2, x3, x4}, primitive, h);
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Torsor route.
//
// Pair-value order zp[0..5] = z12, z13, z14, z23, z24, z34 (0-based pairs
// (0,1),(0,2),(0,3),(1,2),(1,3),(2,3)).  For each admissible tuple the inner
// scan walks y0 >= 1 and signed y1, solves y2 along an arithmetic
// progression from the linear relation mod A3, and recovers y3 exactly.
// Negating all y gives the mirror solution, so each accepted quadruple
// stands for the pair (x, -x).
// ---------------------------------------------------------------------------

struct ZTuple {
    int64_t zp[6];
    int64_t A[4];
    int64_t Bv[4];
};

template <class Fn>
void scan_admissible_z(int64_t limit, Fn&& fn) {
    ZTuple t{};
    int64_t* zp = t.zp;
    for (zp[0] = 1; zp[0] <= limit; ++zp[0]) {
        for (zp[1] = 1; zp[0] * zp[1] <= limit; ++zp[1]) {
            if (std::gcd(zp[0], zp[1]) != 1) continue;
            for (zp[2] = 1; zp[0] * zp[1] * zp[2] <= limit; ++zp[2]) {
                if (std::gcd(zp[2], zp[0]) != 1 || std::gcd(zp[2], zp[1]) != 1) continue;
                const int64_t b0 = zp[0] * zp[1] * zp[2];
                for (zp[3] = 1; zp[0] * zp[3] <= limit && zp[1] * zp[3] <= limit; ++zp[3]) {
                    if (std::gcd(zp[3], zp[0]) != 1 || std::gcd(zp[3], zp[1]) != 1 ||
                        std::gcd(zp[3], zp[2]) != 1)
                        continue;
                    for (zp[4] = 1; zp[0] * zp[3] * zp[4] <= limit && zp[2] * zp[4] <= limit;
                         ++zp[4]) {
                        if (std::gcd(zp[4], zp[0]) != 1 || std::gcd(zp[4], zp[1]) != 1 ||
                            std::gcd(zp[4], zp[2]) != 1 || std::gcd(zp[4], zp[3]) != 1)
                            continue;
                        const int64_t b1 = zp[0] * zp[3] * zp[4];
                        for (zp[5] = 1;
                             zp[1] * zp[3] * zp[5] <= limit && zp[2] * zp[4] * zp[5] <= limit;
                             ++zp[5]) {
                            if (std::gcd(zp[5], zp[0]) != 1 || std::gcd(zp[5], zp[1]) != 1 ||
                                std::gcd(zp[5], zp[2]) != 1 || std::gcd(zp[5], zp[3]) != 1 ||
                                std::gcd(zp[5], zp[4]) != 1)
                                continue;
                            t.Bv[0] = b0;
                            t.Bv[1] = b1;
                            t.Bv[2] = zp[1] * zp[3] * zp[5];
                            t.Bv[3] = zp[2] * zp[4] * zp[5];
                            t.A[0] = zp[3] * zp[4] * zp[5];
                            t.A[1] = zp[1] * zp[2] * zp[5];
                            t.A[2] = zp[0] * zp[2] * zp[4];
                            t.A[3] = zp[0] * zp[1] * zp[3];
                            fn(t);
                        }
                    }
                }
            }
        }
    }
}

int64_t mod_inverse(int64_t a, int64_t m) {
    // m >= 1, gcd(a, m) == 1
    int64_t t = 0, newt = 1, r = m, newr = ((a % m) + m) % m;
    while (newr != 0) {
        int64_t q = r / newr;
        t = std::exchange(newt, t - q * newt);
        r = std::exchange(newr, r - q * newr);
    }
    return t < 0 ? t + m : t;
}

// One accepted quadruple per call: y0 >= 1, sign pair accounted by caller.
template <class Sink>
void scan_y_for_tuple(const ZTuple& zt, int64_t limit, int y_offset, int y_stride, Sink&& sink) {
    const int64_t* A = zt.A;
    const int64_t* Bv = zt.Bv;

    const int64_t y0_cap = limit / std::max({Bv[1], Bv[2], Bv[3]});
    const int64_t y1_ind = limit / std::max({Bv[0], Bv[2], Bv[3]});
    const int64_t y2_ind = limit / std::max({Bv[0], Bv[1], Bv[3]});
    const int64_t g23 = std::gcd(A[2], A[3]);
    const int64_t step = A[3] / g23;
    const int64_t a2r = (A[2] / g23) % step;
    const int64_t inv_a2 = step == 1 ? 0 : mod_inverse(a2r, step);
    const int64_t max23 = std::max(Bv[2], Bv[3]);

    for (int64_t y0 = 1 + y_offset; y0 <= y0_cap; y0 += y_stride) {
        if (std::gcd(y0, Bv[0]) != 1) continue;
        const int64_t y1_cap = std::min(y1_ind, limit / (max23 * y0));
        for (int64_t y1a = 1; y1a <= y1_cap; ++y1a) {
            if (std::gcd(y0, y1a) != 1) continue;
            if (std::gcd(y1a, Bv[1]) != 1) continue;
            const int64_t y2_cap = std::min(
                std::min(y2_ind, limit / (Bv[3] * y0 * y1a)),
                std::min(limit / (Bv[1] * y0), limit / (Bv[0] * y1a)));
            if (y2_cap < 1) continue;
            for (int s1 = 0; s1 < 2; ++s1) {
                const int64_t y1 = s1 == 0 ? y1a : -y1a;
                const int64_t c = A[0] * y0 + A[1] * y1;
                if (c == 0) continue;  // point would lie on a pair-sum line
                if (c % g23 != 0) continue;
                const int64_t cg = c / g23;
                int64_t r = 0;
                if (step > 1) {
                    const int64_t rem = ((-cg) % step + step) % step;
                    r = static_cast<int64_t>(static_cast<i128>(rem) * inv_a2 % step);
                }
                // Smallest progression member >= -y2_cap.
                int64_t y2 = r - step * ((r + y2_cap) / step);
                for (; y2 <= y2_cap; y2 += step) {
                    if (y2 == 0) continue;
                    const int64_t S = c + A[2] * y2;
                    if (S == 0) continue;  // y3 would vanish
                    const int64_t y3 = -S / A[3];
                    const int64_t y3a = iabs(y3);
                    if (static_cast<i128>(Bv[2]) * y0 * y1a * y3a > limit) continue;
                    if (A[0] * y0 + A[2] * y2 == 0) continue;
                    if (A[0] * y0 + A[3] * y3 == 0) continue;
                    const int64_t y2a = iabs(y2);
                    if (std::gcd(y2a, Bv[2]) != 1 || std::gcd(y3a, Bv[3]) != 1) continue;
                    if (std::gcd(y0, y2a) != 1 || std::gcd(y1a, y2a) != 1) continue;
                    if (std::gcd(y0, y3a) != 1 || std::gcd(y1a, y3a) != 1) continue;
                    if (std::gcd(y2a, y3a) != 1) continue;
                    const i128 x0 = static_cast<i128>(Bv[0]) * y1 * y2 * y3;
                    const i128 x1 = static_cast<i128>(Bv[1]) * y0 * y2 * y3;
                    const i128 x2 = static_cast<i128>(Bv[2]) * y0 * y1 * y3;
                    const i128 x3 = static_cast<i128>(Bv[3]) * y0 * y1 * y2;
                    const i128 h128 = std::max({x0 < 0 ? -x0 : x0, x1 < 0 ? -x1 : x1,
                                                x2 < 0 ? -x2 : x2, x3 < 0 ? -x3 : x3});
                    if (h128 > limit) continue;
                    const std::array<int64_t, 4> y{y0, y1, y2, y3};
                    const std::array<int64_t, 4> x{static_cast<int64_t>(x0), static_cast<int64_t>(x1),
                                                   static_cast<int64_t>(x2), static_cast<int64_t>(x3)};
                    sink(y, x, static_cast<int64_t>(h128));
                }
            }
        }
    }
}

std::vector<int64_t> torsor_pass(int64_t limit, int y_offset, int y_stride) {
    std::vector<int64_t> counts(static_cast<std::size_t>(limit) + 1, 0);
    scan_admissible_z(limit, [&](const ZTuple& zt) {
        scan_y_for_tuple(zt, limit, y_offset, y_stride,
                         [&](const std::array<int64_t, 4>&, const std::array<int64_t, 4>&,
                             int64_t h) { counts[static_cast<std::size_t>(h)] += 2; });
    });
    return counts;
}

TorsorCoords make_coords(const std::array<int64_t, 4>& y, const int64_t zp[6]) {
    TorsorCoords t;
    for (int i = 0; i < 4; ++i) t.y[i] = Int128(y[i]);
    for (int k = 0; k < 6; ++k) t.z.slot(k) = Int128(zp[k]);
    return t;
}

}  // namespace

double growth_ratio(double B, Int128 n) {
    if (!(B > 1)) return 0;
    const double l = std::log(B);
    return n.to_double() / (B * l * l * l * l * l * l);
}

Int128 NaiveHeightCounts::primitive_up_to(int64_t height) const {
    height = std::min(height, limit);
    Int128 total = 0;
    for (int64_t h = 1; h <= height; ++h) total += Int128(primitive[static_cast<std::size_t>(h)]);
    return total;
}

Int128 NaiveHeightCounts::all_up_to(int64_t height) const {
    height = std::min(height, limit);
    Int128 total = 0;
    for (int64_t h = 1; h <= height; ++h) total += Int128(all[static_cast<std::size_t>(h)]);
    return total;
}

NaiveHeightCounts naive_height_counts(int64_t limit, const EnumLimits& limits) {
    if (limit > limits.naive_limit)
        throw capacity_error("naive enumeration: height bound exceeds the configured limit");
    NaiveHeightCounts out;
    out.limit = std::max<int64_t>(limit, 0);
    out.primitive.assign(static_cast<std::size_t>(out.limit) + 1, 0);
    out.all.assign(static_cast<std::size_t>(out.limit) + 1, 0);
    if (limit < 1) return out;
    scan_naive(limit, [&](const std::array<int64_t, 4>&, bool primitive, int64_t h) {
        out.all[static_cast<std::size_t>(h)] += 2;
        if (primitive) out.primitive[static_cast<std::size_t>(h)] += 2;
    });
    return out;
}

std::vector<int64_t> torsor_height_counts(int64_t limit, const EnumLimits& limits) {
    if (limit > limits.torsor_limit)
        throw capacity_error("torsor enumeration: height bound exceeds the configured limit");
    if (limit < 1) return std::vector<int64_t>(1, 0);
    const int workers = std::max(1, limits.workers);
    if (workers == 1) return torsor_pass(limit, 0, 1);

    std::vector<std::vector<int64_t>> parts(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] { parts[static_cast<std::size_t>(w)] = torsor_pass(limit, w, workers); });
    for (auto& th : pool) th.join();
    std::vector<int64_t> counts(static_cast<std::size_t>(limit) + 1, 0);
    for (const auto& part : parts)
        for (std::size_t h = 0; h < part.size(); ++h) counts[h] += part[h];
    return counts;
}

CountReport count_naive(double B, const EnumLimits& limits) {
    const auto t0 = std::chrono::steady_clock::now();
    const int64_t limit = checked_height_limit(B, limits.naive_limit, "count_naive");
    const auto counts = naive_height_counts(limit, limits);
    CountReport r;
    r.B = B;
    r.N = counts.primitive_up_to(limit);
    r.method = "naive";
    r.ratio = growth_ratio(B, r.N);
    r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

CountReport count_torsor(double B, const EnumLimits& limits) {
    const auto t0 = std::chrono::steady_clock::now();
    const int64_t limit = checked_height_limit(B, limits.torsor_limit, "count_torsor");
    const auto counts = torsor_height_counts(limit, limits);
    CountReport r;
    r.B = B;
    r.N = 0;
    for (int64_t c : counts) r.N += Int128(c);
    r.method = "torsor";
    r.ratio = growth_ratio(B, r.N);
    r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

Int128 count_star(double B, StarMethod method, const EnumLimits& limits) {
    const int64_t limit = checked_height_limit(B, limits.naive_limit, "count_star");
    if (limit < 1) return 0;
    const auto counts = naive_height_counts(limit, limits);
    if (method == StarMethod::direct) return counts.all_up_to(limit);
    Int128 total = 0;
    for (int64_t h = 1; h <= limit; ++h)
        total += counts.primitive_up_to(static_cast<int64_t>(std::floor(B / static_cast<double>(h))));
    return total;
}

Int128 count_on_lines(double B, const EnumLimits& limits) {
    const int64_t limit = checked_height_limit(B, limits.naive_limit, "count_on_lines");
    if (limit < 1) return 0;
    const i128 cells = static_cast<i128>(2 * limit + 1) * (2 * limit + 1) * 9;
    if (cells > limits.cell_budget) throw capacity_error("count_on_lines exceeds cell budget");

    std::vector<std::array<int64_t, 4>> pts;
    // Two vanishing coordinates: the other two may be anything coprime.
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            int k = -1, l = -1;
            for (int m = 0; m < 4; ++m)
                if (m != i && m != j) (k < 0 ? k : l) = m;
            for (int64_t xk = -limit; xk <= limit; ++xk)
                for (int64_t xl = -limit; xl <= limit; ++xl) {
                    if (std::gcd(iabs(xk), iabs(xl)) != 1) continue;
                    std::array<int64_t, 4> p{};
                    p[k] = xk;
                    p[l] = xl;
                    pts.push_back(p);
                }
        }
    // Pair-sum lines x_i = -x_j, x_k = -x_l.
    constexpr int partner[3] = {1, 2, 3};
    for (int j : partner) {
        int k = -1, l = -1;
        for (int m = 1; m < 4; ++m)
            if (m != j) (k < 0 ? k : l) = m;
        for (int64_t s = -limit; s <= limit; ++s)
            for (int64_t t = -limit; t <= limit; ++t) {
                if (std::gcd(iabs(s), iabs(t)) != 1) continue;
                std::array<int64_t, 4> p{};
                p[0] = s;
                p[j] = -s;
                p[k] = t;
                p[l] = -t;
                pts.push_back(p);
            }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return Int128(static_cast<int64_t>(pts.size()));
}

Int128 count_for_fixed_z(const std::array<Int128, 6>& z, double B) {
    ZTuple zt{};
    for (int k = 0; k < 6; ++k) {
        if (z[k] < Int128(1)) throw std::invalid_argument("count_for_fixed_z: pair values must be positive");
        zt.zp[k] = z[k].to_int64();
    }
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            if (std::gcd(zt.zp[a], zt.zp[b]) != 1)
                throw std::invalid_argument("count_for_fixed_z: pair values must be pairwise coprime");
    const int64_t limit = static_cast<int64_t>(std::floor(B));
    if (limit < 1) return 0;
    zt.Bv[0] = zt.zp[0] * zt.zp[1] * zt.zp[2];
    zt.Bv[1] = zt.zp[0] * zt.zp[3] * zt.zp[4];
    zt.Bv[2] = zt.zp[1] * zt.zp[3] * zt.zp[5];
    zt.Bv[3] = zt.zp[2] * zt.zp[4] * zt.zp[5];
    zt.A[0] = zt.zp[3] * zt.zp[4] * zt.zp[5];
    zt.A[1] = zt.zp[1] * zt.zp[2] * zt.zp[5];
    zt.A[2] = zt.zp[0] * zt.zp[2] * zt.zp[4];
    zt.A[3] = zt.zp[0] * zt.zp[1] * zt.zp[3];
    for (int i = 0; i < 4; ++i)
        if (zt.Bv[i] > limit) return 0;
    int64_t count = 0;
    scan_y_for_tuple(zt, limit, 0, 1,
                     [&](const std::array<int64_t, 4>&, const std::array<int64_t, 4>&, int64_t) {
                         count += 2;
                     });
    return Int128(count);
}

Int128 count_dyadic(const std::array<DyadicRange, 4>& X, const std::array<DyadicRange, 6>& Z,
                    double B, const EnumLimits& limits) {
    for (const auto& r : X)
        if (!(r.base > 0)) throw std::invalid_argument("count_dyadic: ranges must be positive");
    for (const auto& r : Z)
        if (!(r.base > 0)) throw std::invalid_argument("count_dyadic: ranges must be positive");
    double xmax = 0;
    for (const auto& r : X) xmax = std::max(xmax, 2 * r.base);
    const int64_t limit = checked_height_limit(std::min(B, xmax), limits.torsor_limit, "count_dyadic");
    if (limit < 1) return 0;

    std::array<int64_t, 4> xlo, xhi;
    for (int i = 0; i < 4; ++i) {
        xlo[i] = static_cast<int64_t>(std::floor(X[i].base)) + 1;
        xhi[i] = static_cast<int64_t>(std::floor(2 * X[i].base));
    }
    std::array<int64_t, 6> zlo, zhi;
    for (int k = 0; k < 6; ++k) {
        zlo[k] = static_cast<int64_t>(std::floor(Z[k].base)) + 1;
        zhi[k] = static_cast<int64_t>(std::floor(2 * Z[k].base));
    }

    int64_t count = 0;
    scan_admissible_z(limit, [&](const ZTuple& zt) {
        for (int k = 0; k < 6; ++k)
            if (zt.zp[k] < zlo[k] || zt.zp[k] > zhi[k]) return;
        scan_y_for_tuple(zt, limit, 0, 1,
                         [&](const std::array<int64_t, 4>&, const std::array<int64_t, 4>& x,
                             int64_t) {
                             for (int i = 0; i < 4; ++i) {
                                 const int64_t a = iabs(x[i]);
                                 if (a < xlo[i] || a > xhi[i]) return;
                             }
                             count += 2;
                         });
    });
    return Int128(count);
}

void enumerate_points_naive(int64_t limit, const EnumLimits& limits,
                            const std::function<void(const CayleyPoint&)>& fn) {
    if (limit > limits.naive_limit)
        throw capacity_error("naive enumeration: height bound exceeds the configured limit");
    if (limit < 1) return;
    scan_naive(limit, [&](const std::array<int64_t, 4>& x, bool primitive, int64_t) {
        if (!primitive) return;
        CayleyPoint p, q;
        for (int i = 0; i < 4; ++i) {
            p.x[i] = Int128(x[i]);
            q.x[i] = Int128(-x[i]);
        }
        fn(p);
        fn(q);
    });
}

void enumerate_torsor(int64_t limit, const EnumLimits& limits,
                      const std::function<void(const TorsorCoords&, const CayleyPoint&)>& fn) {
    if (limit > limits.torsor_limit)
        throw capacity_error("torsor enumeration: height bound exceeds the configured limit");
    if (limit < 1) return;
    scan_admissible_z(limit, [&](const ZTuple& zt) {
        scan_y_for_tuple(zt, limit, 0, 1,
                         [&](const std::array<int64_t, 4>& y, const std::array<int64_t, 4>& x,
                             int64_t) {
                             TorsorCoords t = make_coords(y, zt.zp);
                             CayleyPoint p;
                             for (int i = 0; i < 4; ++i) p.x[i] = Int128(x[i]);
                             fn(t, p);
                             for (int i = 0; i < 4; ++i) {
                                 t.y[i] = -t.y[i];
                                 p.x[i] = -p.x[i];
                             }
                             fn(t, p);
                         });
    });
}

void for_each_admissible_z(int64_t limit,
                           const std::function<void(const std::array<int64_t, 6>&)>& fn) {
    if (limit < 1) return;
    scan_admissible_z(limit, [&](const ZTuple& zt) {
        fn(std::array<int64_t, 6>{zt.zp[0], zt.zp[1], zt.zp[2], zt.zp[3], zt.zp[4], zt.zp[5]});
    });
}

namespace {

std::string point_str(const CayleyPoint& p) {
    std::string s = "(";
    for (int i = 0; i < 4; ++i) s += p.x[i].str() + (i < 3 ? "," : ")");
    return s;
}

}  // namespace

VerifyReport verify_parametrization(int64_t limit, const EnumLimits& limits) {
    VerifyReport report;
    auto fail = [&](const CayleyPoint& p, const std::string& what) {
        report.failures.push_back(what + " at " + point_str(p));
    };

    enumerate_points_naive(limit, limits, [&](const CayleyPoint& p) {
        ++report.points;
        Decomposition d;
        try {
            d = decompose(p);
        } catch (const std::exception& e) {
            fail(p, std::string("decompose failed: ") + e.what());
            return;
        }
        if (d.sign != 1 && d.sign != -1) fail(p, "decompose sign out of range");
        CayleyPoint back = reconstruct(d.coords);
        CayleyPoint expected;
        for (int i = 0; i < 4; ++i) expected.x[i] = Int128(d.sign) * p.x[i];
        if (!(back == expected)) fail(p, "round trip mismatch");
        if (!validate(d.coords).empty()) fail(p, "decomposition fails validation");
        PairTable v = v_matrix(d.coords);
        if (!(v.at(0, 1) + v.at(2, 3)).is_zero() || !(v.at(0, 2) + v.at(1, 3)).is_zero() ||
            !(v.at(0, 3) + v.at(1, 2)).is_zero())
            fail(p, "complementary pair values do not cancel");
        if (!check_quadratic_identity(d.coords)) fail(p, "quadratic identity fails");
        Int128 pv = d.coords.pair_product();
        for (int i = 0; i < 4; ++i)
            if (d.coords.linear_coeff(i) * d.coords.coord_multiplier(i) != pv)
                fail(p, "pair product does not split as coefficient times multiplier");
    });

    enumerate_torsor(limit, limits, [&](const TorsorCoords& t, const CayleyPoint& p) {
        ++report.tuples;
        try {
            Decomposition d = decompose(p);
            if (d.sign != 1 || !(d.coords == t)) fail(p, "enumerated tuple is not canonical");
        } catch (const std::exception& e) {
            fail(p, std::string("decompose of enumerated point failed: ") + e.what());
        }
    });
    return report;
}

}  // namespace cayley
