"""Smoke tests for the pybind11 module against frozen desk-scale values."""

from fractions import Fraction

import pytest

cc = pytest.importorskip("cayleycount")


def test_elementary_arithmetic():
    assert cc.hcf([0, 0]) == 0
    assert cc.hcf([-4, 6]) == 2
    assert cc.hcf([3, 6, -1]) == 1
    assert cc.mobius(30) == -1
    assert cc.mobius(12) == 0
    assert cc.euler_phi(10) == 4
    assert cc.jacobi(2, 15) == 1
    assert cc.jacobi(-1, 3) == -1
    assert cc.divisor_count_k(7, 6) == 6
    assert cc.hcf([2**100, 2**101]) == 2**100


def test_rho_identity():
    assert cc.rho(5, 1, -1) == 2
    assert cc.rho(3, 1, 1) == 0
    assert cc.rho(9, 1, -1) == cc.rho_jacobi(9, 1, -1) == 2
    with pytest.raises(ValueError):
        cc.rho_jacobi(8, 1, 1)
    assert cc.rho(8, 1, 1) <= 4 * cc.rho_jacobi_sum(8, 1, 1)


def test_surface_predicates():
    assert cc.evaluate_cubic((1, 1, 1, 1)) == 4
    assert cc.evaluate_cubic((2, 3, 6, -1)) == 0
    assert cc.is_primitive((2, 3, 6, -1))
    assert not cc.is_primitive((2, 2, -2, -2))
    assert cc.in_open_subset_u((2, 3, 6, -1))
    assert not cc.in_open_subset_u((1, 1, -1, -1))
    assert cc.line_membership((0, 0, 3, 5)) == ["double_zero:12"]


def test_torsor_round_trip():
    d = cc.decompose((2, 3, 6, -1))
    assert d["sign"] == 1
    assert d["y"] == [-1, -1, -1, 1]
    assert d["z"] == {"12": 1, "13": 2, "14": 1, "23": 3, "24": 1, "34": 1}
    assert d["B"] == [2, 3, 6, 1]
    assert d["P"] == 6
    assert d["v"]["12"] == -5
    assert cc.reconstruct(d["y"], d["z"]) == (2, 3, 6, -1)
    assert cc.validate(d["y"], d["z"]) == []
    assert cc.check_quadratic_identity(d["y"], d["z"])
    with pytest.raises(ValueError):
        cc.decompose((1, 1, -1, -1))


def test_counts():
    assert cc.count_naive(1)["N"] == 0
    assert cc.count_naive(2)["N"] == 0
    n6 = cc.count_naive(6)["N"]
    assert n6 >= 48
    assert cc.count_torsor(6)["N"] == n6
    assert cc.count_torsor(30)["N"] == cc.count_naive(30)["N"]
    assert cc.count_star(12, "direct") == cc.count_star(12, "convolution")
    assert cc.count_on_lines(1) == 38
    assert cc.count_for_fixed_z([1, 2, 1, 3, 1, 1], 6) == 2
    assert cc.verify_parametrization(20)["failures"] == []


def test_densities_exact():
    assert cc.local_density_generic(3) == Fraction(14, 27)
    assert cc.local_density_generic(3) == cc.brute_force_density_generic(3)
    assert cc.local_density_special(2, 1) == Fraction(3, 32)
    assert cc.local_density_special(2, 1) == cc.brute_force_density_special(2, 1)
    assert cc.lower_bound_sum(16, (1, 2)) == pytest.approx(184 / 3, rel=1e-12)
    assert cc.lower_bound_sum(1e4) == 1e4


def test_lattice_counters():
    assert cc.count_primitive_on_plane([1, 1, 1], [2, 2, 2]) == 12
    assert cc.count_primitive_on_plane([1, 1, 1], [2, 2, 2]) <= cc.plane_box_bound(
        [1, 1, 1], [2, 2, 2]
    )
    basis = [[1, 0], [0, 1]]
    assert cc.count_lattice_in_ellipse(basis, 1, 0, 1) == 5
    assert cc.count_lattice_in_ellipse(basis, Fraction(1, 100), 0, Fraction(1, 100)) > 300
    assert cc.divisibility_lattice_det(2, 3, 1, 6) == 36
    assert cc.count_in_ap(0, 10, 3, 1) == 4
    assert cc.progression_product_count(1, 1, 1, 3, 5) == 1
    report = cc.run_plane_box_trials(200, 1)
    assert report["violations"] == 0


def test_dyadic_equations():
    half = [0.5] * 7
    assert cc.count_dyadic_equation("N1", half) == 1
    assert cc.count_dyadic_equation("N4", half) == 0
    assert cc.variant_bound("N1", half) == pytest.approx(2.0**-6)
    scan = cc.ratio_scan("N1", 10, 0, 10000)
    again = cc.ratio_scan("N1", 10, 0, 10000)
    assert scan == again
    assert len(scan["rows"]) == 10


def test_count_dyadic_cell():
    x = [1, 2, 4, 0.5]
    z = [0.5, 1, 0.5, 2, 0.5, 0.5]
    assert cc.count_dyadic(x, z, 6) == 2
