#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cayley/int128.hpp"
#include "cayley/torsor.hpp"

namespace cayley {

/// Half-open interval (base, 2*base].
struct DyadicRange {
    double base = 1.0;
};

struct CountReport {
    double B = 0;
    Int128 N = 0;
    std::optional<Int128> Nstar;
    double ratio = 0;  // N / (B * (ln B)^6), defined for B > 1, else 0
    std::string method;
    double elapsed_seconds = 0;
};

struct EnumLimits {
    std::int64_t naive_limit = 300;     // brute-force oracle refuses beyond this height
    std::int64_t torsor_limit = 100000; // parametrized enumerator ditto
    std::int64_t cell_budget = 100'000'000;
    int workers = 1;
};

double growth_ratio(double B, Int128 n);

/// Heights are 1..limit; counts[h] is the number of vectors of height
/// exactly h, so prefix sums give the counting functions.
struct NaiveHeightCounts {
    std::int64_t limit = 0;
    std::vector<std::int64_t> primitive;  // N(B) increments (index 0 unused)
    std::vector<std::int64_t> all;        // N*(B) increments

    Int128 primitive_up_to(std::int64_t height) const;
    Int128 all_up_to(std::int64_t height) const;
};

/// One pass of the brute-force oracle up to the given height: every integer
/// vector of U is found from its first three coordinates, since the cubic is
/// linear in the fourth.
NaiveHeightCounts naive_height_counts(std::int64_t limit, const EnumLimits& limits = {});

/// Height histogram of the torsor-parametrized enumerator; tuple counts, one
/// per accepted (y, z) tuple, which the acceptance suite pins against the
/// oracle above.
std::vector<std::int64_t> torsor_height_counts(std::int64_t limit, const EnumLimits& limits = {});

/// Exact N(B) by brute force.  Counts vectors (x and -x separately).
CountReport count_naive(double B, const EnumLimits& limits = {});

/// Exact N(B) through the torsor parametrization; equals count_naive(B)
/// wherever both run.
CountReport count_torsor(double B, const EnumLimits& limits = {});

enum class StarMethod { direct, convolution };

/// Exact N*(B): all integer U-vectors of height <= B, primitivity not
/// required.  The convolution mode evaluates sum over h <= B of N(B/h).
Int128 count_star(double B, StarMethod method, const EnumLimits& limits = {});

/// Primitive vectors of the surface with height <= B lying on at least one
/// of the nine lines, each vector counted once.
Int128 count_on_lines(double B, const EnumLimits& limits = {});

/// Number of y-quadruples accepted by the torsor enumerator for one fixed
/// pairwise-coprime tuple of six pair values (order z12,z13,z14,z23,z24,z34).
Int128 count_for_fixed_z(const std::array<Int128, 6>& z, double B);

/// Counted vectors with the coordinates and the pair values of their
/// decomposition in prescribed dyadic ranges (X unsorted, no normalization)
/// and height <= B.
Int128 count_dyadic(const std::array<DyadicRange, 4>& X, const std::array<DyadicRange, 6>& Z,
                    double B, const EnumLimits& limits = {});

/// Every primitive U-point of height <= limit, both sign representatives,
/// through the brute-force route.
void enumerate_points_naive(std::int64_t limit, const EnumLimits& limits,
                            const std::function<void(const CayleyPoint&)>& fn);

/// Every accepted torsor tuple of height <= limit together with its point.
void enumerate_torsor(std::int64_t limit, const EnumLimits& limits,
                      const std::function<void(const TorsorCoords&, const CayleyPoint&)>& fn);

/// Every admissible six-tuple of pair values whose coordinate multipliers
/// stay within the height bound.
void for_each_admissible_z(std::int64_t limit,
                           const std::function<void(const std::array<std::int64_t, 6>&)>& fn);

struct VerifyReport {
    std::int64_t points = 0;  // primitive U-points put through decompose
    std::int64_t tuples = 0;  // enumerator tuples checked for canonicality
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

/// Full desk-scale verification for heights up to limit: every brute-force
/// point round-trips through decompose/reconstruct with all identities
/// holding exactly, and every enumerator tuple is the canonical
/// decomposition of its own point.
VerifyReport verify_parametrization(std::int64_t limit, const EnumLimits& limits = {});

}  // namespace cayley
