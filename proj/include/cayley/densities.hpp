#pragma once

#include <cstdint>
#include <vector>

#include "cayley/enumeration.hpp"
#include "cayley/rational.hpp"

namespace cayley {

/// Local solution density at a prime not dividing any pair value:
/// 1 - 6/p^2 + 5/p^3, exact.
Rational local_density_generic(std::int64_t p);

/// Local solution density at a prime dividing one pair value with exponent
/// e >= 1: (1 - 1/p) * (1 - 1/p^2) * p^(-2e), exact.
Rational local_density_special(std::int64_t p, int e);

/// Independent oracle for the generic density: counts residue quadruples
/// mod p with vanishing sum and no two coordinates both divisible by p,
/// divided by p^3.  Refuses p > 31.
Rational brute_force_density_generic(std::int64_t p);

/// Independent oracle for the special density: counts the documented box
/// x1, x2 <= p^2 (coprime to p), x3, x4 <= p, not both divisible by p, with
/// x1 + x2 + p*x3 + p*x4 == 0 mod p^2, divided by p^(2e+4).  The count does
/// not depend on e.  Refuses p > 31.
Rational brute_force_density_special(std::int64_t p, int e);

/// Truncated product of the generic densities over primes p <= p_max.
double singular_product(std::int64_t p_max);

/// Sum over squarefree P <= B^delta of d_6(P) * (B/P) * (phi(P)/P), with the
/// cutoff evaluated exactly from the rational exponent.
double lower_bound_sum(double B, const Rational& delta);

/// One CountReport per rung of the ladder, using the chosen counting method.
std::vector<CountReport> ratio_report(const std::vector<double>& ladder, const std::string& method,
                                      const EnumLimits& limits = {});

}  // namespace cayley
