#include "cayley/densities.hpp"

#include <cmath>

#include "cayley/arith.hpp"

namespace cayley {

namespace {

using std::int64_t;

void require_prime(int64_t p, const char* what) {
    if (!is_prime(p)) throw std::invalid_argument(std::string(what) + " requires a prime p");
}

Int128 pow_int(int64_t base, int exp) {
    Int128 r = 1;
    for (int i = 0; i < exp; ++i) r *= Int128(base);
    return r;
}

}  // namespace

Rational local_density_generic(int64_t p) {
    require_prime(p, "local_density_generic");
    Int128 p3 = pow_int(p, 3);
    return Rational(p3 - Int128(6 * p) + Int128(5), p3);
}

Rational local_density_special(int64_t p, int e) {
    require_prime(p, "local_density_special");
    if (e < 1) throw std::invalid_argument("local_density_special requires e >= 1");
    Rational r(Int128(p - 1), Int128(p));
    r = r * Rational(pow_int(p, 2) - Int128(1), pow_int(p, 2));
    return r / Rational(pow_int(p, 2 * e));
}

Rational brute_force_density_generic(int64_t p) {
    require_prime(p, "brute_force_density_generic");
    if (p > 31) throw capacity_error("brute_force_density_generic refuses p > 31");
    int64_t count = 0;
    for (int64_t x1 = 0; x1 < p; ++x1)
        for (int64_t x2 = 0; x2 < p; ++x2)
            for (int64_t x3 = 0; x3 < p; ++x3) {
                const int64_t x4 = ((-(x1 + x2 + x3)) % p + p) % p;
                int zeros = (x1 == 0) + (x2 == 0) + (x3 == 0) + (x4 == 0);
                if (zeros <= 1) ++count;
            }
    return Rational(Int128(count), pow_int(p, 3));
}

Rational brute_force_density_special(int64_t p, int e) {
    require_prime(p, "brute_force_density_special");
    if (e < 1) throw std::invalid_argument("brute_force_density_special requires e >= 1");
    if (p > 31) throw capacity_error("brute_force_density_special refuses p > 31");
    const int64_t p2 = p * p;
    int64_t count = 0;
    for (int64_t x1 = 1; x1 <= p2; ++x1) {
        if (x1 % p == 0) continue;
        for (int64_t x2 = 1; x2 <= p2; ++x2) {
            if (x2 % p == 0) continue;
            const int64_t s = x1 + x2;
            if (s % p != 0) continue;
            // Need x3 + x4 == -s/p (mod p) with x3, x4 in [1, p], not both
            // equal to p.
            const int64_t t = ((-(s / p)) % p + p) % p;
            for (int64_t x3 = 1; x3 <= p; ++x3) {
                int64_t r = ((t - x3) % p + p) % p;
                const int64_t x4 = r == 0 ? p : r;
                if (x3 == p && x4 == p) continue;
                ++count;
            }
        }
    }
    return Rational(Int128(count), pow_int(p, 2 * e + 4));
}

double singular_product(int64_t p_max) {
    if (p_max < 2) throw std::invalid_argument("singular_product requires p_max >= 2");
    double prod = 1.0;
    for (int64_t p = 2; p <= p_max; ++p)
        if (is_prime(p)) prod *= local_density_generic(p).to_double();
    return prod;
}

double lower_bound_sum(double B, const Rational& delta) {
    if (!(B >= 1)) throw std::invalid_argument("lower_bound_sum requires B >= 1");
    if (!(delta.sign() > 0) || delta > Rational(1))
        throw std::invalid_argument("lower_bound_sum requires 0 < delta <= 1");

    // Cutoff P <= B^delta, decided exactly when B is integral: with
    // delta = n/d, keep P while P^d <= B^n, treating overflow as "greater".
    const double b_floor = std::floor(B);
    const bool integral = B == b_floor && B <= 9e15;
    const int64_t nexp = delta.num().to_int64();
    const int64_t dexp = delta.den().to_int64();
    auto within_cutoff = [&](int64_t P) {
        if (integral) {
            Int128 lhs = 1, rhs = 1;
            try {
                for (int64_t i = 0; i < dexp; ++i) lhs *= Int128(P);
            } catch (const capacity_error&) {
                return false;
            }
            try {
                for (int64_t i = 0; i < nexp; ++i) rhs *= Int128(static_cast<int64_t>(b_floor));
            } catch (const capacity_error&) {
                return true;
            }
            return lhs <= rhs;
        }
        return static_cast<double>(P) <= std::pow(B, delta.to_double());
    };

    double sum = 0;
    for (int64_t P = 1; within_cutoff(P); ++P) {
        if (mobius(Int128(P)) == 0) continue;  // squarefree only
        const double d6 = divisor_count_k(Int128(P), 6).to_double();
        const double phi = euler_phi(Int128(P)).to_double();
        sum += d6 * (B / static_cast<double>(P)) * (phi / static_cast<double>(P));
    }
    return sum;
}

std::vector<CountReport> ratio_report(const std::vector<double>& ladder, const std::string& method,
                                      const EnumLimits& limits) {
    std::vector<CountReport> out;
    out.reserve(ladder.size());
    for (double B : ladder) {
        if (method == "naive")
            out.push_back(count_naive(B, limits));
        else if (method == "torsor")
            out.push_back(count_torsor(B, limits));
        else
            throw std::invalid_argument("ratio_report: unknown method " + method);
    }
    return out;
}

}  // namespace cayley
