#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cayley/int128.hpp"

namespace cayley {

/// The four dyadic-box divisor equations, all under the coprimality side
/// condition hcf(n1*n2*n3, n4*n5*n6) = 1 and with n8 unconstrained in size:
///   N1: n1*n2*n3 + n4*n5*n6 = n7*n8
///   N2: n1*n2*n3 = n4*n5*n6 + n7*n8
///   N3: n1^2*n2*n3 + n4^2*n5*n6 = n7*n8
///   N4: n1^2*n2*n3 - n4^2*n5*n6 = n7*n8
enum class EqVariant { N1, N2, N3, N4 };

std::string variant_name(EqVariant v);
EqVariant variant_from_index(int which);  // 1..4

/// Bases of the seven half-open ranges (K_i, 2K_i].
struct DyadicTuple7 {
    std::array<double, 7> K{};
};

/// Exact solution count: n1..n7 run over their ranges and n8 is the unique
/// positive integer completing the equation when the residual divides.
Int128 count_dyadic_equation(EqVariant variant, const DyadicTuple7& K,
                             std::int64_t cell_budget = 100'000'000);

/// Same loop, handing every full solution tuple (n1..n8) to the callback.
void enumerate_equation_solutions(EqVariant variant, const DyadicTuple7& K,
                                  const std::function<void(const std::array<Int128, 8>&)>& fn,
                                  std::int64_t cell_budget = 100'000'000);

/// The closed-form comparison value for each variant: the plain range
/// product for N1/N2, with the quarter-power imbalance factor for N3 and
/// additionally the logarithmic factor for N4.
double variant_bound(EqVariant variant, const DyadicTuple7& K);

struct ScanRow {
    EqVariant variant;
    DyadicTuple7 K;
    Int128 count;
    double bound = 0;
    double ratio = 0;
};

struct ScanReport {
    std::vector<ScanRow> rows;
    double max_ratio = 0;
};

/// Seeded random sweep: draws dyadic K-tuples with bounded range product,
/// counts each, and reports count/bound ratios.  Purely observational; no
/// constant is asserted.  Identical seed, trials and budget give an
/// identical report.
ScanReport ratio_scan(EqVariant variant, int trials, std::uint64_t seed, Int128 budget);

}  // namespace cayley
