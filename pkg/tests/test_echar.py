"""Characteristic polynomial construction, degrees, parity, deficiency."""

import pytest

from espectra.echar import (
    UnsupportedDimensionError,
    e_char_poly,
    find_deficit_solution,
    generic_eigen_count,
    is_irregular,
    psi_degree_bound,
)
from espectra.generators import fermat_tensor, random_tensor, tangent_tensor
from espectra.poly_core import (
    GaussianRational,
    MultiPoly,
    SymmetricTensor,
    quadric_form,
)


def gr(re, im=0):
    return GaussianRational.of(re, im)


def test_generic_eigen_count_table():
    # d = 2 reduces to ordinary eigenvalues
    assert generic_eigen_count(1, 2) == 2
    assert generic_eigen_count(2, 2) == 3
    assert generic_eigen_count(4, 2) == 5
    # geometric series ((d-1)^(n+1) - 1)/(d - 2)
    assert generic_eigen_count(1, 3) == 3
    assert generic_eigen_count(2, 3) == 7
    assert generic_eigen_count(2, 4) == 13
    assert generic_eigen_count(1, 5) == 5
    assert generic_eigen_count(3, 3) == 15


def test_psi_degree_bound_parity():
    assert psi_degree_bound(2, 4) == 13
    assert psi_degree_bound(2, 3) == 14  # odd order doubles the degree
    assert psi_degree_bound(1, 3) == 6


def test_binary_cubic_psi_degree_and_parity():
    f = random_tensor(1, 3, seed=2)
    cp = e_char_poly(f)
    assert cp.parity == "odd"
    assert cp.psi.degree == 6
    assert not cp.deficient
    assert cp.psi.even_part_only()
    assert cp.eigen_count == 3


def test_binary_quartic_psi_degree():
    f = random_tensor(1, 4, seed=3)
    cp = e_char_poly(f)
    assert cp.parity == "even"
    assert cp.psi.degree == 4
    assert not cp.deficient


def test_quadric_psi_is_ordinary_charpoly():
    # diagonal quadratic form: eigenvalues are the diagonal entries
    x = [MultiPoly.variable(3, i) for i in range(3)]
    f = SymmetricTensor(x[0] ** 2 * 2 + x[1] ** 2 * 3 + x[2] ** 2 * 5, 2)
    cp = e_char_poly(f)
    assert cp.psi.degree == 3
    for lam in (2, 3, 5):
        assert cp.psi.eval_exact(lam).is_zero()


def test_isotropic_power_psi_identically_zero():
    q = quadric_form(3)
    f = SymmetricTensor(q * q, 4)
    cp = e_char_poly(f)
    assert cp.identically_zero
    assert cp.psi.is_zero()


def test_dimension_gate_on_certificate_operations():
    # the polynomial itself is available in any dimension the matrix
    # budget allows; the certificate machinery is rank-2/3 only
    x = [MultiPoly.variable(4, i) for i in range(4)]
    f = SymmetricTensor(x[0] ** 3 + x[1] ** 3 + x[2] ** 3 + x[3] ** 3, 3)
    cp = e_char_poly(f)
    assert cp.psi.degree == 30
    assert cp.eigen_count == 15
    with pytest.raises(UnsupportedDimensionError):
        is_irregular(f)
    with pytest.raises(UnsupportedDimensionError):
        find_deficit_solution(f)


def test_tangent_binary_is_deficient():
    f = tangent_tensor(1, 4, seed=7)
    cp = e_char_poly(f)
    assert cp.deficient
    assert cp.psi.degree < psi_degree_bound(1, 4)
    cert = find_deficit_solution(f)
    assert cert is not None
    assert cert.residual <= 1e-8
    # the isotropic eigenvector is proportional to (1, i) or (1, -i)
    ratio = cert.x[1] / cert.x[0]
    assert min(abs(ratio - 1j), abs(ratio + 1j)) <= 1e-6


def test_tangent_ternary_is_deficient_not_irregular():
    f = tangent_tensor(2, 3, seed=5)
    assert not is_irregular(f)
    cp = e_char_poly(f)
    assert cp.deficient
    cert = find_deficit_solution(f)
    assert cert is not None
    assert cert.residual <= 1e-8
    # certificate is isotropic: <x,x> = 0
    assert abs(sum(c * c for c in cert.x)) <= 1e-8


def test_random_tensors_are_not_deficient():
    for seed in range(4):
        f = random_tensor(2, 3, seed=seed)
        cp = e_char_poly(f)
        assert not cp.deficient
        assert find_deficit_solution(f) is None


def test_fermat_cubic_psi_has_generic_degree():
    f = fermat_tensor([gr(1), gr(1), gr(1)], 3)
    cp = e_char_poly(f)
    assert cp.psi.degree == 14
    assert cp.psi.even_part_only()
    assert not cp.deficient
