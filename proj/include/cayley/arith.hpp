#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cayley/int128.hpp"

namespace cayley {

/// Highest common factor of a non-empty list, always non-negative.
/// The hcf of an all-zero list is 0.
Int128 hcf(std::span<const Int128> values);
Int128 hcf(std::initializer_list<Int128> values);

/// Trial-division factorization of n >= 1 into (prime, exponent) pairs.
std::vector<std::pair<Int128, int>> factorize(Int128 n);

/// Moebius function of n >= 1.
int mobius(Int128 n);

/// Euler totient of n >= 1.
Int128 euler_phi(Int128 n);

/// Jacobi symbol (a/n) for odd positive n; 0 exactly when hcf(a, n) > 1.
/// Throws std::invalid_argument for even or non-positive n.
int jacobi(Int128 a, Int128 n);

/// Number of ordered k-tuples of positive integers with product n.
Int128 divisor_count_k(Int128 n, int k);

/// Number of t in [0, q) with t^2*a + b == 0 (mod q), by direct scan.  q >= 1.
Int128 rho(Int128 q, Int128 a, Int128 b);

/// The Moebius-weighted Jacobi-symbol sum over divisors d of q, with the
/// symbol for (-a*b / d) taken as zero for even d.  Defined for every q >= 1;
/// for odd q with hcf(a*b, q) = 1 it equals rho(q, a, b), and for every q it
/// bounds rho(q, a, b)/4 from below when hcf(a, b) = 1.
Int128 rho_jacobi_sum(Int128 q, Int128 a, Int128 b);

/// Identity form of the sum above: requires odd q and refuses even q with
/// std::invalid_argument rather than guessing.
Int128 rho_jacobi(Int128 q, Int128 a, Int128 b);

bool is_prime(std::int64_t n);

}  // namespace cayley
