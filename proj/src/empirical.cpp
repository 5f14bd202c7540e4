#include "cayley/empirical.hpp"

#include <cmath>
#include <numeric>

#include "cayley/rng.hpp"

namespace cayley {

namespace {

using std::int64_t;
using i128 = __int128;

struct Ranges {
    std::array<int64_t, 7> lo{}, hi{};
    i128 cells6 = 1;  // product of the first six range sizes
};

Ranges make_ranges(const DyadicTuple7& K, int64_t cell_budget) {
    Ranges r;
    for (int i = 0; i < 7; ++i) {
        if (!(K.K[i] > 0)) throw std::invalid_argument("dyadic bases must be positive");
        r.lo[i] = static_cast<int64_t>(std::floor(K.K[i])) + 1;
        r.hi[i] = static_cast<int64_t>(std::floor(2 * K.K[i]));
        if (i < 6) r.cells6 *= std::max<int64_t>(0, r.hi[i] - r.lo[i] + 1);
    }
    const i128 n7 = std::max<int64_t>(0, r.hi[6] - r.lo[6] + 1);
    if (r.cells6 * n7 > cell_budget)
        throw capacity_error("dyadic equation count exceeds cell budget");
    return r;
}

template <class Sink>
void scan_solutions(EqVariant variant, const Ranges& r, Sink&& sink) {
    const bool squared = variant == EqVariant::N3 || variant == EqVariant::N4;
    const bool difference = variant == EqVariant::N2 || variant == EqVariant::N4;
    for (int64_t n1 = r.lo[0]; n1 <= r.hi[0]; ++n1)
        for (int64_t n2 = r.lo[1]; n2 <= r.hi[1]; ++n2)
            for (int64_t n3 = r.lo[2]; n3 <= r.hi[2]; ++n3) {
                const i128 left_plain = static_cast<i128>(n1) * n2 * n3;
                const i128 left = squared ? left_plain * n1 : left_plain;
                for (int64_t n4 = r.lo[3]; n4 <= r.hi[3]; ++n4)
                    for (int64_t n5 = r.lo[4]; n5 <= r.hi[4]; ++n5)
                        for (int64_t n6 = r.lo[5]; n6 <= r.hi[5]; ++n6) {
                            const i128 right_plain = static_cast<i128>(n4) * n5 * n6;
                            if (gcd(Int128::from_raw(left_plain), Int128::from_raw(right_plain)) !=
                                Int128(1))
                                continue;
                            const i128 right = squared ? right_plain * n4 : right_plain;
                            const i128 residual = difference ? left - right : left + right;
                            if (residual <= 0) continue;
                            for (int64_t n7 = r.lo[6]; n7 <= r.hi[6]; ++n7) {
                                if (residual % n7 != 0) continue;
                                sink(std::array<int64_t, 7>{n1, n2, n3, n4, n5, n6, n7},
                                     residual / n7);
                            }
                        }
            }
}

}  // namespace

std::string variant_name(EqVariant v) {
    switch (v) {
        case EqVariant::N1: return "N1";
        case EqVariant::N2: return "N2";
        case EqVariant::N3: return "N3";
        case EqVariant::N4: return "N4";
    }
    return "?";
}

EqVariant variant_from_index(int which) {
    switch (which) {
        case 1: return EqVariant::N1;
        case 2: return EqVariant::N2;
        case 3: return EqVariant::N3;
        case 4: return EqVariant::N4;
    }
    throw std::invalid_argument("variant index must be 1..4");
}

Int128 count_dyadic_equation(EqVariant variant, const DyadicTuple7& K, int64_t cell_budget) {
    const Ranges r = make_ranges(K, cell_budget);
    int64_t count = 0;
    scan_solutions(variant, r, [&](const std::array<int64_t, 7>&, i128) { ++count; });
    return Int128(count);
}

void enumerate_equation_solutions(EqVariant variant, const DyadicTuple7& K,
                                  const std::function<void(const std::array<Int128, 8>&)>& fn,
                                  int64_t cell_budget) {
    const Ranges r = make_ranges(K, cell_budget);
    scan_solutions(variant, r, [&](const std::array<int64_t, 7>& n, i128 n8) {
        std::array<Int128, 8> tuple;
        for (int i = 0; i < 7; ++i) tuple[static_cast<std::size_t>(i)] = Int128(n[static_cast<std::size_t>(i)]);
        tuple[7] = Int128::from_raw(n8);
        fn(tuple);
    });
}

double variant_bound(EqVariant variant, const DyadicTuple7& K) {
    double product = 1;
    for (int i = 0; i < 6; ++i) product *= K.K[i];
    if (variant == EqVariant::N1 || variant == EqVariant::N2) return product;
    const double lhs = K.K[0] * K.K[0] * K.K[1] * K.K[2];
    const double rhs = K.K[3] * K.K[3] * K.K[4] * K.K[5];
    const double imbalance = std::pow(std::max(lhs / rhs, rhs / lhs), 0.25);
    if (variant == EqVariant::N3) return product * imbalance;
    const double tail = std::pow(K.K[1] * K.K[2] * K.K[4] * K.K[5], 1.0 / 3.0);
    return (1.0 + std::log(K.K[0] * K.K[3]) / tail) * product * imbalance;
}

ScanReport ratio_scan(EqVariant variant, int trials, std::uint64_t seed, Int128 budget) {
    if (trials < 0) throw std::invalid_argument("ratio_scan requires trials >= 0");
    if (budget < Int128(1)) throw std::invalid_argument("ratio_scan requires budget >= 1");
    ScanReport report;
    SplitMix64 rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        DyadicTuple7 K;
        // Dyadic bases 2^e with e in [-1, 6], redrawn until the full base
        // product fits the budget.  Powers of two are exact in doubles, so
        // the comparison is deterministic.
        for (;;) {
            double product = 1;
            for (int i = 0; i < 7; ++i) {
                K.K[i] = std::ldexp(1.0, static_cast<int>(rng.range(-1, 6)));
                product *= K.K[i];
            }
            if (product <= budget.to_double()) break;
        }
        ScanRow row;
        row.variant = variant;
        row.K = K;
        row.count = count_dyadic_equation(variant, K);
        row.bound = variant_bound(variant, K);
        row.ratio = row.count.to_double() / row.bound;
        report.max_ratio = std::max(report.max_ratio, row.ratio);
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace cayley
