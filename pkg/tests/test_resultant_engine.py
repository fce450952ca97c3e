"""Macaulay and Sylvester resultants, exact determinants, parametric driver."""

import random
from fractions import Fraction

import pytest

from espectra.poly_core import (
    GaussianRational,
    MultiPoly,
    SymmetricTensor,
    UniPoly,
    binary_from_coeffs,
    quadric_form,
)
from espectra.resultant_engine import (
    MacaulaySystem,
    MatrixTooLargeError,
    ParametricSystem,
    exact_determinant,
    macaulay_resultant,
    parametric_resultant,
    sylvester_resultant,
)


def gr(re, im=0):
    return GaussianRational.of(re, im)


def random_binary(rng, deg, force_top=False):
    cs = [gr(rng.randint(-9, 9), rng.randint(-9, 9)) for _ in range(deg + 1)]
    if force_top and not cs[-1]:
        cs[-1] = gr(1)
    return binary_from_coeffs(cs)


def test_exact_determinant_known_values():
    assert exact_determinant([[gr(2)]]) == gr(2)
    m = [[gr(1), gr(2)], [gr(3), gr(4)]]
    assert exact_determinant(m) == gr(-2)
    # a Gaussian-rational 3x3 with fraction entries
    m = [
        [gr(Fraction(1, 2)), gr(0, 1), gr(3)],
        [gr(1), gr(Fraction(-2, 3)), gr(0)],
        [gr(0, -1), gr(5), gr(Fraction(7, 4))],
    ]
    # expand along the first row by hand
    c0 = gr(Fraction(-2, 3)) * gr(Fraction(7, 4)) - gr(0) * gr(5)
    c1 = gr(1) * gr(Fraction(7, 4)) - gr(0) * gr(0, -1)
    c2 = gr(1) * gr(5) - gr(Fraction(-2, 3)) * gr(0, -1)
    expect = gr(Fraction(1, 2)) * c0 - gr(0, 1) * c1 + gr(3) * c2
    assert exact_determinant(m) == expect


def test_determinant_of_singular_matrix_is_zero():
    m = [[gr(1), gr(2), gr(3)], [gr(2), gr(4), gr(6)], [gr(0), gr(1), gr(1)]]
    assert exact_determinant(m).is_zero()


def test_sylvester_matches_product_formula():
    # Res of (x - a y)(x - b y) style factored forms is the product of
    # cross differences; check on split linear factors
    x = MultiPoly.variable(2, 0)
    y = MultiPoly.variable(2, 1)
    p = (x - y * 2) * (x - y * 3)
    q = (x - y * 5) * (x + y)
    expect = gr(1)
    for a in (gr(2), gr(3)):
        for b in (gr(5), gr(-1)):
            expect = expect * (b - a)
    assert sylvester_resultant(p, q) == expect


def test_sylvester_detects_shared_root():
    x = MultiPoly.variable(2, 0)
    y = MultiPoly.variable(2, 1)
    shared = x - y * gr(3, 1)
    assert sylvester_resultant(shared * (x + y), shared * (x - y)).is_zero()


def test_macaulay_agrees_with_sylvester_on_binary_pairs():
    rng = random.Random(42)
    for _ in range(30):
        dp = rng.randint(1, 4)
        dq = rng.randint(1, 4)
        p = random_binary(rng, dp, force_top=True)
        q = random_binary(rng, dq, force_top=True)
        syl = sylvester_resultant(p, q)
        mac = macaulay_resultant(MacaulaySystem([p, q]))
        assert mac == syl


def test_macaulay_fermat_normalization():
    # Res(a1 x1^d1, ..., am xm^dm) = prod ai^(prod of the other degrees)
    x = [MultiPoly.variable(3, i) for i in range(3)]
    a = [gr(2, 1), gr(-3), gr(1, -1)]
    degs = [2, 3, 2]
    forms = [x[i] ** degs[i] * a[i] for i in range(3)]
    res = macaulay_resultant(MacaulaySystem(forms))
    expect = gr(1)
    for i in range(3):
        e = 1
        for j in range(3):
            if j != i:
                e *= degs[j]
        expect = expect * a[i] ** e
    assert res == expect


def test_macaulay_per_argument_homogeneity():
    rng = random.Random(7)
    x = [MultiPoly.variable(3, i) for i in range(3)]

    def random_ternary(deg):
        terms = {}
        for e0 in range(deg + 1):
            for e1 in range(deg + 1 - e0):
                terms[(e0, e1, deg - e0 - e1)] = gr(
                    rng.randint(-5, 5), rng.randint(-5, 5)
                )
        return MultiPoly(3, terms)

    degs = [1, 2, 2]
    forms = [random_ternary(d) for d in degs]
    base = macaulay_resultant(MacaulaySystem(forms))
    assert not base.is_zero()
    for i in range(3):
        c = gr(rng.randint(2, 6), rng.randint(1, 4))
        scaled = list(forms)
        scaled[i] = scaled[i].scale(c)
        res = macaulay_resultant(MacaulaySystem(scaled))
        e = 1
        for j in range(3):
            if j != i:
                e *= degs[j]
        assert res == base * c ** e


def test_macaulay_vanishes_on_shared_projective_zero():
    x = [MultiPoly.variable(3, i) for i in range(3)]
    # all three forms vanish at (1, 1, 1)
    forms = [
        x[0] - x[1],
        (x[1] - x[2]) * (x[0] + x[1] + x[2]),
        (x[0] - x[2]) * (x[0] + x[2] * 2 - x[1] * 3),
    ]
    assert macaulay_resultant(MacaulaySystem(forms)).is_zero()


def test_macaulay_size_guard():
    x = [MultiPoly.variable(3, i) for i in range(3)]
    forms = [xi ** 40 for xi in x]
    with pytest.raises(MatrixTooLargeError):
        macaulay_resultant(MacaulaySystem(forms))


def test_parametric_resultant_interpolates_exactly():
    # forms (x - t y, x - 2 y) with parameter t: Res(x - ay, x - by) = a - b,
    # so the result is t - 2
    x = MultiPoly.variable(2, 0)
    y = MultiPoly.variable(2, 1)
    system = ParametricSystem(
        const_part=[x, x - y * 2],
        linear_part=[-y, MultiPoly.zero(2)],
    )
    psi = parametric_resultant(system, degree_bound=1)
    assert psi == UniPoly([gr(-2), gr(1)])


def test_parametric_resultant_shared_factor_system_is_zero():
    # every form is a multiple of the isotropic conic, so the resultant
    # vanishes at all parameter values; the quotient formula degenerates
    # everywhere and the perturbation fallback must still decide it
    q = quadric_form(3)
    x = [MultiPoly.variable(3, i) for i in range(3)]
    system = ParametricSystem(
        const_part=[q * xi for xi in x],
        linear_part=[MultiPoly.zero(3)] * 3,
    )
    psi = parametric_resultant(system, degree_bound=4)
    assert psi.is_zero()


def test_parametric_degree_bound_validation():
    x = MultiPoly.variable(2, 0)
    y = MultiPoly.variable(2, 1)
    system = ParametricSystem(const_part=[x, y], linear_part=[y, MultiPoly.zero(2)])
    with pytest.raises(ValueError):
        parametric_resultant(system, degree_bound=-1)
