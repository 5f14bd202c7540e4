#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cayley/arith.hpp"
#include "cayley/densities.hpp"
#include "cayley/empirical.hpp"
#include "cayley/enumeration.hpp"
#include "cayley/lattice.hpp"
#include "cayley/surface.hpp"
#include "cayley/torsor.hpp"

namespace py = pybind11;
using namespace cayley;

namespace {

Int128 int_from(py::handle h) { return Int128::parse(py::str(h).cast<std::string>()); }

py::object int_to(Int128 v) {
    if (v.fits_int64()) return py::int_(v.to_int64());
    return py::module_::import("builtins").attr("int")(py::str(v.str()));
}

py::object fraction_to(const Rational& r) {
    static py::object F = py::module_::import("fractions").attr("Fraction");
    return F(int_to(r.num()), int_to(r.den()));
}

Rational rational_from(py::handle h) {
    if (py::isinstance<py::tuple>(h)) {
        auto t = h.cast<py::tuple>();
        return Rational(int_from(t[0]), int_from(t[1]));
    }
    if (py::hasattr(h, "numerator"))
        return Rational(int_from(h.attr("numerator")), int_from(h.attr("denominator")));
    return Rational(int_from(h));
}

CayleyPoint point_from(const py::sequence& seq) {
    if (seq.size() != 4) throw std::invalid_argument("a point needs four coordinates");
    CayleyPoint p;
    for (int i = 0; i < 4; ++i) p.x[i] = int_from(seq[i]);
    return p;
}

py::tuple point_to(const CayleyPoint& p) {
    return py::make_tuple(int_to(p.x[0]), int_to(p.x[1]), int_to(p.x[2]), int_to(p.x[3]));
}

TorsorCoords coords_from(const py::sequence& y, const py::dict& z) {
    TorsorCoords t;
    if (y.size() != 4) throw std::invalid_argument("y needs four entries");
    for (int i = 0; i < 4; ++i) t.y[i] = int_from(y[i]);
    for (int k = 0; k < PairTable::size; ++k) {
        py::str key(PairTable::label(k));
        if (!z.contains(key)) throw std::invalid_argument("z is missing key " + PairTable::label(k));
        t.z.slot(k) = int_from(z[key]);
    }
    return t;
}

py::dict pair_table_to(const PairTable& v) {
    py::dict d;
    for (int k = 0; k < PairTable::size; ++k)
        d[py::str(PairTable::label(k))] = int_to(v.slot(k));
    return d;
}

py::dict decomposition_to(const Decomposition& d) {
    py::dict out;
    out["sign"] = d.sign;
    py::list y, a, b;
    for (int i = 0; i < 4; ++i) {
        y.append(int_to(d.coords.y[i]));
        a.append(int_to(d.coords.linear_coeff(i)));
        b.append(int_to(d.coords.coord_multiplier(i)));
    }
    out["y"] = y;
    out["z"] = pair_table_to(d.coords.z);
    out["A"] = a;
    out["B"] = b;
    out["P"] = int_to(d.coords.pair_product());
    out["v"] = pair_table_to(v_matrix(d.coords));
    return out;
}

py::dict report_to(const CountReport& r) {
    py::dict out;
    out["B"] = r.B;
    out["N"] = int_to(r.N);
    out["Nstar"] = r.Nstar ? int_to(*r.Nstar) : py::object(py::none());
    out["ratio"] = r.ratio;
    out["method"] = r.method;
    out["elapsed_seconds"] = r.elapsed_seconds;
    return out;
}

EnumLimits limits_from(std::int64_t naive_limit, std::int64_t torsor_limit, int workers) {
    EnumLimits l;
    l.naive_limit = naive_limit;
    l.torsor_limit = torsor_limit;
    l.workers = workers;
    return l;
}

EqVariant variant_from_name(const std::string& name) {
    if (name == "N1") return EqVariant::N1;
    if (name == "N2") return EqVariant::N2;
    if (name == "N3") return EqVariant::N3;
    if (name == "N4") return EqVariant::N4;
    throw std::invalid_argument("variant must be one of N1, N2, N3, N4");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact integral point counts on the Cayley cubic surface";
    m.attr("__version__") = "0.1.0";

    py::register_exception<capacity_error>(m, "CapacityError", PyExc_OverflowError);

    // Elementary exact arithmetic.
    m.def("hcf", [](const py::sequence& values) {
        std::vector<Int128> v;
        for (auto h : values) v.push_back(int_from(h));
        return int_to(hcf(std::span<const Int128>(v.data(), v.size())));
    });
    m.def("mobius", [](py::handle n) { return mobius(int_from(n)); });
    m.def("euler_phi", [](py::handle n) { return int_to(euler_phi(int_from(n))); });
    m.def("jacobi", [](py::handle a, py::handle n) { return jacobi(int_from(a), int_from(n)); });
    m.def("divisor_count_k",
          [](py::handle n, int k) { return int_to(divisor_count_k(int_from(n), k)); });
    m.def("rho", [](py::handle q, py::handle a, py::handle b) {
        return int_to(rho(int_from(q), int_from(a), int_from(b)));
    });
    m.def("rho_jacobi", [](py::handle q, py::handle a, py::handle b) {
        return int_to(rho_jacobi(int_from(q), int_from(a), int_from(b)));
    });
    m.def("rho_jacobi_sum", [](py::handle q, py::handle a, py::handle b) {
        return int_to(rho_jacobi_sum(int_from(q), int_from(a), int_from(b)));
    });

    // The surface.
    m.def("evaluate_cubic", [](const py::sequence& x) { return int_to(evaluate_cubic(point_from(x))); });
    m.def("is_primitive", [](const py::sequence& x) { return is_primitive(point_from(x)); });
    m.def("line_membership", [](const py::sequence& x) {
        py::list out;
        for (const LineId& line : line_membership(point_from(x))) out.append(line.label());
        return out;
    });
    m.def("in_open_subset_u", [](const py::sequence& x) { return in_open_subset_u(point_from(x)); });

    // Torsor coordinates.
    m.def("decompose", [](const py::sequence& x) { return decomposition_to(decompose(point_from(x))); });
    m.def("reconstruct", [](const py::sequence& y, const py::dict& z) {
        return point_to(reconstruct(coords_from(y, z)));
    });
    m.def("validate", [](const py::sequence& y, const py::dict& z) {
        return validate(coords_from(y, z));
    });
    m.def("v_matrix", [](const py::sequence& y, const py::dict& z) {
        return pair_table_to(v_matrix(coords_from(y, z)));
    });
    m.def("check_quadratic_identity", [](const py::sequence& y, const py::dict& z) {
        return check_quadratic_identity(coords_from(y, z));
    });

    // Geometry-of-numbers counters.
    m.def("count_primitive_on_plane",
          [](const std::array<std::int64_t, 3>& v, const std::array<double, 3>& H) {
              return int_to(count_primitive_on_plane(PlaneBoxQuery{v, H}));
          });
    m.def("plane_box_bound", [](const std::array<std::int64_t, 3>& v, const std::array<double, 3>& H) {
        return plane_box_bound(PlaneBoxQuery{v, H});
    });
    m.def("count_lattice_in_ellipse",
          [](const std::array<std::array<std::int64_t, 2>, 2>& basis, py::handle a, py::handle b,
             py::handle c) {
              return int_to(count_lattice_in_ellipse(Lattice2{basis},
                                                     Ellipse{rational_from(a), rational_from(b),
                                                             rational_from(c)}));
          });
    m.def("lattice_ellipse_bound",
          [](const std::array<std::array<std::int64_t, 2>, 2>& basis, py::handle a, py::handle b,
             py::handle c) {
              return lattice_ellipse_bound(Lattice2{basis}, Ellipse{rational_from(a), rational_from(b),
                                                                    rational_from(c)});
          });
    m.def("divisibility_lattice_det", [](py::handle m1, py::handle m2, py::handle m3, py::handle m4) {
        return int_to(divisibility_lattice_det(int_from(m1), int_from(m2), int_from(m3), int_from(m4)));
    });
    m.def("count_in_ap", [](double lo, double hi, py::handle modulus, py::handle residue) {
        return int_to(count_in_ap(lo, hi, int_from(modulus), int_from(residue)));
    });
    m.def("progression_product_count",
          [](double k1, double k2, double k3, py::handle a, py::handle q) {
              return int_to(progression_product_count(k1, k2, k3, int_from(a), int_from(q)));
          });
    m.def("run_plane_box_trials", [](std::int64_t trials, std::uint64_t seed) {
        BoundTrialReport r = run_plane_box_trials(trials, seed);
        py::dict out;
        out["trials"] = r.trials;
        out["violations"] = r.violations;
        out["max_ratio"] = r.max_ratio;
        return out;
    });
    m.def("run_ellipse_trials", [](std::int64_t trials, std::uint64_t seed) {
        BoundTrialReport r = run_ellipse_trials(trials, seed);
        py::dict out;
        out["trials"] = r.trials;
        out["violations"] = r.violations;
        out["max_ratio"] = r.max_ratio;
        return out;
    });

    // Counting engines.
    m.def(
        "count_naive",
        [](double B, std::int64_t naive_limit) {
            return report_to(count_naive(B, limits_from(naive_limit, 100000, 1)));
        },
        py::arg("B"), py::arg("naive_limit") = 300);
    m.def(
        "count_torsor",
        [](double B, std::int64_t torsor_limit, int workers) {
            return report_to(count_torsor(B, limits_from(300, torsor_limit, workers)));
        },
        py::arg("B"), py::arg("torsor_limit") = 100000, py::arg("workers") = 1);
    m.def(
        "count_star",
        [](double B, const std::string& method, std::int64_t naive_limit) {
            return int_to(count_star(B, method == "direct" ? StarMethod::direct : StarMethod::convolution,
                                     limits_from(naive_limit, 100000, 1)));
        },
        py::arg("B"), py::arg("method") = "direct", py::arg("naive_limit") = 300);
    m.def(
        "count_on_lines",
        [](double B, std::int64_t naive_limit) {
            return int_to(count_on_lines(B, limits_from(naive_limit, 100000, 1)));
        },
        py::arg("B"), py::arg("naive_limit") = 300);
    m.def("count_for_fixed_z", [](const py::sequence& z, double B) {
        if (z.size() != 6) throw std::invalid_argument("z needs six entries (z12,z13,z14,z23,z24,z34)");
        std::array<Int128, 6> zz;
        for (int k = 0; k < 6; ++k) zz[static_cast<std::size_t>(k)] = int_from(z[static_cast<std::size_t>(k)]);
        return int_to(count_for_fixed_z(zz, B));
    });
    m.def("count_dyadic", [](const std::array<double, 4>& X, const std::array<double, 6>& Z, double B) {
        std::array<DyadicRange, 4> xr;
        std::array<DyadicRange, 6> zr;
        for (int i = 0; i < 4; ++i) xr[static_cast<std::size_t>(i)].base = X[static_cast<std::size_t>(i)];
        for (int k = 0; k < 6; ++k) zr[static_cast<std::size_t>(k)].base = Z[static_cast<std::size_t>(k)];
        return int_to(count_dyadic(xr, zr, B));
    });
    m.def(
        "verify_parametrization",
        [](std::int64_t limit) {
            EnumLimits l = limits_from(std::max<std::int64_t>(300, limit), std::max<std::int64_t>(100000, limit), 1);
            VerifyReport r = verify_parametrization(limit, l);
            py::dict out;
            out["points"] = r.points;
            out["tuples"] = r.tuples;
            out["failures"] = r.failures;
            return out;
        },
        py::arg("limit"));

    // Local densities and the lower-bound sum.
    m.def("local_density_generic", [](std::int64_t p) { return fraction_to(local_density_generic(p)); });
    m.def("local_density_special",
          [](std::int64_t p, int e) { return fraction_to(local_density_special(p, e)); });
    m.def("brute_force_density_generic",
          [](std::int64_t p) { return fraction_to(brute_force_density_generic(p)); });
    m.def("brute_force_density_special",
          [](std::int64_t p, int e) { return fraction_to(brute_force_density_special(p, e)); });
    m.def("singular_product", &singular_product);
    m.def(
        "lower_bound_sum",
        [](double B, py::handle delta) { return lower_bound_sum(B, rational_from(delta)); },
        py::arg("B"), py::arg("delta") = py::make_tuple(1, 84));

    // Dyadic-box divisor equations.
    m.def(
        "count_dyadic_equation",
        [](const std::string& variant, const std::array<double, 7>& K, std::int64_t cell_budget) {
            DyadicTuple7 t;
            t.K = K;
            return int_to(count_dyadic_equation(variant_from_name(variant), t, cell_budget));
        },
        py::arg("variant"), py::arg("K"), py::arg("cell_budget") = 100000000);
    m.def("variant_bound", [](const std::string& variant, const std::array<double, 7>& K) {
        DyadicTuple7 t;
        t.K = K;
        return variant_bound(variant_from_name(variant), t);
    });
    m.def(
        "ratio_scan",
        [](const std::string& variant, int trials, std::uint64_t seed, py::handle budget) {
            ScanReport r = ratio_scan(variant_from_name(variant), trials, seed, int_from(budget));
            py::list rows;
            for (const auto& row : r.rows) {
                py::dict d;
                d["variant"] = variant_name(row.variant);
                d["K"] = row.K.K;
                d["count"] = int_to(row.count);
                d["bound"] = row.bound;
                d["ratio"] = row.ratio;
                rows.append(d);
            }
            py::dict out;
            out["rows"] = rows;
            out["max_ratio"] = r.max_ratio;
            return out;
        },
        py::arg("variant"), py::arg("trials"), py::arg("seed"), py::arg("budget"));
}
