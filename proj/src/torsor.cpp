#include "cayley/torsor.hpp"

#include "cayley/arith.hpp"

namespace cayley {

std::string PairTable::label(int pair_index) {
    auto [i, j] = pairs()[pair_index];
    return std::to_string(i + 1) + std::to_string(j + 1);
}

Int128 TorsorCoords::linear_coeff(int i) const {
    Int128 prod = 1;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            if (a != i && b != i) prod *= z.at(a, b);
    return prod;
}

Int128 TorsorCoords::coord_multiplier(int i) const {
    Int128 prod = 1;
    for (int j = 0; j < 4; ++j)
        if (j != i) prod *= z.at(i, j);
    return prod;
}

Int128 TorsorCoords::pair_product() const {
    Int128 prod = 1;
    for (int k = 0; k < PairTable::size; ++k) prod *= z.slot(k);
    return prod;
}

std::vector<std::string> validate(const TorsorCoords& t) {
    std::vector<std::string> violations;
    for (int i = 0; i < 4; ++i)
        if (t.y[i].is_zero()) violations.push_back("y" + std::to_string(i + 1) + " is zero");
    for (int k = 0; k < PairTable::size; ++k)
        if (t.z.slot(k) < Int128(1))
            violations.push_back("z" + PairTable::label(k) + " is not positive");
    if (!violations.empty()) return violations;  // remaining checks assume sane fields

    for (int a = 0; a < PairTable::size; ++a)
        for (int b = a + 1; b < PairTable::size; ++b)
            if (gcd(t.z.slot(a), t.z.slot(b)) != Int128(1))
                violations.push_back("z coprimality fails for z" + PairTable::label(a) +
                                     ", z" + PairTable::label(b));
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (gcd(t.y[i], t.y[j]) != Int128(1))
                violations.push_back("y coprimality fails for y" + std::to_string(i + 1) +
                                     ", y" + std::to_string(j + 1));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (j != i && gcd(t.y[i], t.z.at(i, j)) != Int128(1))
                violations.push_back("y-z coprimality fails for y" + std::to_string(i + 1) +
                                     ", z" + PairTable::label(PairTable::index(i, j)));

    std::array<Int128, 4> coeff;
    for (int i = 0; i < 4; ++i) coeff[i] = t.linear_coeff(i);
    Int128 total = 0;
    for (int i = 0; i < 4; ++i) total += coeff[i] * t.y[i];
    if (!total.is_zero()) violations.push_back("linear relation does not vanish");

    for (int j = 1; j < 4; ++j) {
        Int128 partial = coeff[0] * t.y[0] + coeff[j] * t.y[j];
        if (partial.is_zero())
            violations.push_back("partial sum for indices 1," + std::to_string(j + 1) +
                                 " vanishes (point on a line)");
    }
    return violations;
}

Decomposition decompose(const CayleyPoint& x) {
    if (!is_primitive(x)) throw std::invalid_argument("decompose: point is not primitive");
    if (!in_open_subset_u(x)) throw std::invalid_argument("decompose: point is not in U");

    // |y_i| is the hcf of the other three coordinates; all are >= 1 because
    // no coordinate of a U-point vanishes.
    std::array<Int128, 4> ymag;
    for (int i = 0; i < 4; ++i) {
        std::array<Int128, 3> rest;
        int n = 0;
        for (int j = 0; j < 4; ++j)
            if (j != i) rest[n++] = x.x[j];
        ymag[i] = hcf(std::span<const Int128>(rest.data(), 3));
    }

    // Split off the y-part, leaving the signed cofactors.
    std::array<Int128, 4> cof;
    for (int i = 0; i < 4; ++i) {
        Int128 m = 1;
        for (int j = 0; j < 4; ++j)
            if (j != i) m *= ymag[j];
        if (!(x.x[i] % m).is_zero())
            throw internal_inconsistency("decompose: cofactor division is not exact");
        cof[i] = x.x[i] / m;
    }

    TorsorCoords t;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            t.z.at(i, j) = gcd(cof[i], cof[j]);
            if (t.z.at(i, j) < Int128(1))
                throw internal_inconsistency("decompose: pair value is not positive");
        }

    // Each cofactor must be, up to sign, exactly the product of its three
    // pair values.
    for (int i = 0; i < 4; ++i)
        if (cof[i].abs() != t.coord_multiplier(i))
            throw internal_inconsistency("decompose: cofactor differs from its pair product");

    // Unique sign pattern with global sign +1: s_i = sign(x_1 x_2 x_3 x_4) * sign(x_i).
    int total_sign = 1;
    for (int i = 0; i < 4; ++i) total_sign *= x.x[i].sign();
    for (int i = 0; i < 4; ++i) t.y[i] = Int128(total_sign * x.x[i].sign()) * ymag[i];

    auto violations = validate(t);
    if (!violations.empty())
        throw internal_inconsistency("decompose: produced invalid coordinates: " + violations.front());
    Decomposition d{1, t};
    if (!(reconstruct(t) == x))
        throw internal_inconsistency("decompose: reconstruction mismatch");
    return d;
}

CayleyPoint reconstruct(const TorsorCoords& t) {
    auto violations = validate(t);
    if (!violations.empty())
        throw std::invalid_argument("reconstruct: invalid coordinates: " + violations.front());
    CayleyPoint p;
    for (int i = 0; i < 4; ++i) {
        Int128 v = t.coord_multiplier(i);
        for (int j = 0; j < 4; ++j)
            if (j != i) v *= t.y[j];
        p.x[i] = v;
    }
    return p;
}

PairTable v_matrix(const TorsorCoords& t) {
    PairTable v;
    for (auto [i, j] : PairTable::pairs()) {
        int k = -1, l = -1;
        for (int m = 0; m < 4; ++m) {
            if (m == i || m == j) continue;
            (k < 0 ? k : l) = m;
        }
        Int128 num = t.z.at(i, k) * t.z.at(i, l) * t.y[j] + t.z.at(j, k) * t.z.at(j, l) * t.y[i];
        if (!(num % t.z.at(i, j)).is_zero())
            throw internal_inconsistency("v_matrix: division by z" +
                                         PairTable::label(PairTable::index(i, j)) +
                                         " is not exact");
        v.at(i, j) = num / t.z.at(i, j);
    }
    return v;
}

bool check_quadratic_identity(const TorsorCoords& t) {
    PairTable v = v_matrix(t);
    for (int i = 0; i < 4; ++i) {
        std::array<int, 3> rest;
        int n = 0;
        for (int m = 0; m < 4; ++m)
            if (m != i) rest[n++] = m;
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b) {
                int j = rest[a], k = rest[b];
                int l = rest[3 - a - b];
                Int128 lhs = v.at(i, j) * v.at(i, k);
                Int128 rhs =
                    t.z.at(i, l) * t.z.at(i, l) * t.y[j] * t.y[k] -
                    t.z.at(j, k) * t.z.at(j, k) * t.y[i] * t.y[l];
                if (lhs != rhs) return false;
            }
    }
    return true;
}

namespace {

nlohmann::json json_int(Int128 v) {
    if (v.fits_int64()) return v.to_int64();
    return v.str();  // beyond 64 bits, emit a decimal string
}

}  // namespace

nlohmann::json to_json(const Decomposition& d) {
    nlohmann::json j;
    j["sign"] = d.sign;
    j["y"] = nlohmann::json::array();
    for (int i = 0; i < 4; ++i) j["y"].push_back(json_int(d.coords.y[i]));
    j["z"] = nlohmann::json::object();
    for (int k = 0; k < PairTable::size; ++k)
        j["z"][PairTable::label(k)] = json_int(d.coords.z.slot(k));
    j["A"] = nlohmann::json::array();
    j["B"] = nlohmann::json::array();
    for (int i = 0; i < 4; ++i) {
        j["A"].push_back(json_int(d.coords.linear_coeff(i)));
        j["B"].push_back(json_int(d.coords.coord_multiplier(i)));
    }
    j["P"] = json_int(d.coords.pair_product());
    PairTable v = v_matrix(d.coords);
    j["v"] = nlohmann::json::object();
    for (int k = 0; k < PairTable::size; ++k) j["v"][PairTable::label(k)] = json_int(v.slot(k));
    return j;
}

}  // namespace cayley
