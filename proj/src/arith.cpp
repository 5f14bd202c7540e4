#include "cayley/arith.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace cayley {

namespace {

using u128 = unsigned __int128;

u128 uabs(__int128 v) {
    return v < 0 ? -static_cast<u128>(v) : static_cast<u128>(v);
}

u128 ugcd(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

std::string Int128::str() const {
    if (v_ == 0) return "0";
    u128 u = uabs(v_);
    char buf[48];
    int pos = 48;
    while (u != 0) {
        buf[--pos] = static_cast<char>('0' + static_cast<int>(u % 10));
        u /= 10;
    }
    std::string s(buf + pos, 48 - pos);
    return v_ < 0 ? "-" + s : s;
}

Int128 Int128::parse(std::string_view text) {
    std::size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        neg = text[i] == '-';
        ++i;
    }
    if (i == text.size()) throw std::invalid_argument("Int128::parse: no digits");
    u128 limit = (static_cast<u128>(1) << 127) - (neg ? 0 : 1);
    u128 acc = 0;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c < '0' || c > '9') throw std::invalid_argument("Int128::parse: bad digit");
        int d = c - '0';
        if (acc > (limit - d) / 10) throw capacity_error("Int128::parse: out of range");
        acc = acc * 10 + static_cast<u128>(d);
    }
    __int128 raw = neg ? -static_cast<__int128>(acc) : static_cast<__int128>(acc);
    return Int128::from_raw(raw);
}

std::ostream& operator<<(std::ostream& os, Int128 v) { return os << v.str(); }

Int128 gcd(Int128 a, Int128 b) {
    u128 g = ugcd(uabs(a.raw()), uabs(b.raw()));
    if (g > (static_cast<u128>(1) << 127) - 1) throw capacity_error("gcd out of range");
    return Int128::from_raw(static_cast<__int128>(g));
}

Int128 hcf(std::span<const Int128> values) {
    if (values.empty()) throw std::invalid_argument("hcf of an empty list");
    Int128 g = 0;
    for (const Int128& v : values) {
        g = gcd(g, v);
        if (g == Int128(1)) break;
    }
    return g;
}

Int128 hcf(std::initializer_list<Int128> values) {
    return hcf(std::span<const Int128>(values.begin(), values.size()));
}

std::vector<std::pair<Int128, int>> factorize(Int128 n) {
    if (n < Int128(1)) throw std::invalid_argument("factorize requires n >= 1");
    std::vector<std::pair<Int128, int>> out;
    __int128 m = n.raw();
    for (__int128 p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p != 0) continue;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        out.emplace_back(Int128::from_raw(p), e);
    }
    if (m > 1) out.emplace_back(Int128::from_raw(m), 1);
    return out;
}

int mobius(Int128 n) {
    if (n < Int128(1)) throw std::invalid_argument("mobius requires n >= 1");
    auto factors = factorize(n);
    for (const auto& [p, e] : factors)
        if (e > 1) return 0;
    return factors.size() % 2 == 0 ? 1 : -1;
}

Int128 euler_phi(Int128 n) {
    if (n < Int128(1)) throw std::invalid_argument("euler_phi requires n >= 1");
    Int128 result = n;
    for (const auto& [p, e] : factorize(n)) {
        result /= p;
        result *= p - Int128(1);
    }
    return result;
}

int jacobi(Int128 a_in, Int128 n_in) {
    if (n_in < Int128(1) || n_in % Int128(2) == Int128(0))
        throw std::invalid_argument("jacobi requires odd positive n");
    __int128 n = n_in.raw();
    __int128 a = a_in.raw() % n;
    if (a < 0) a += n;
    if (n == 1) return 1;
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            __int128 r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

Int128 divisor_count_k(Int128 n, int k) {
    if (n < Int128(1) || k < 1)
        throw std::invalid_argument("divisor_count_k requires n >= 1, k >= 1");
    // d_k is multiplicative; on p^e it counts weak compositions of e into k
    // parts, i.e. binomial(e + k - 1, k - 1).
    Int128 result = 1;
    for (const auto& [p, e] : factorize(n)) {
        Int128 binom = 1;
        for (int i = 1; i <= k - 1; ++i) {
            binom *= Int128(e + i);
            binom /= Int128(i);
        }
        result *= binom;
    }
    return result;
}

Int128 rho(Int128 q_in, Int128 a_in, Int128 b_in) {
    if (q_in < Int128(1)) throw std::invalid_argument("rho requires q >= 1");
    __int128 q = q_in.raw();
    __int128 a = a_in.raw() % q;
    if (a < 0) a += q;
    __int128 b = b_in.raw() % q;
    if (b < 0) b += q;
    __int128 count = 0;
    for (__int128 t = 0; t < q; ++t) {
        if ((t * t % q * a + b) % q == 0) ++count;
    }
    return Int128::from_raw(count);
}

Int128 rho_jacobi_sum(Int128 q, Int128 a, Int128 b) {
    if (q < Int128(1)) throw std::invalid_argument("rho_jacobi_sum requires q >= 1");
    // Divisors of q from its factorization; only squarefree odd d contribute.
    auto factors = factorize(q);
    std::vector<__int128> divisors{1};
    for (const auto& [p, e] : factors) {
        std::size_t base = divisors.size();
        __int128 pe = 1;
        for (int i = 0; i < e; ++i) {
            pe *= p.raw();
            for (std::size_t j = 0; j < base; ++j) divisors.push_back(divisors[j] * pe);
        }
    }
    Int128 sum = 0;
    for (__int128 d : divisors) {
        if (d % 2 == 0) continue;
        Int128 dd = Int128::from_raw(d);
        if (mobius(dd) == 0) continue;
        // (-ab / d) with the numerator reduced mod d first.
        __int128 m = 0;
        if (d > 1) {
            __int128 ar = a.raw() % d;
            __int128 br = b.raw() % d;
            m = (-(ar * br)) % d;
        }
        sum += Int128(jacobi(Int128::from_raw(m), dd));
    }
    return sum;
}

Int128 rho_jacobi(Int128 q, Int128 a, Int128 b) {
    if (q < Int128(1) || q % Int128(2) == Int128(0))
        throw std::invalid_argument("rho_jacobi requires odd q; use rho_jacobi_sum for the bound form");
    return rho_jacobi_sum(q, a, b);
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

}  // namespace cayley
