"""Deterministic test-tensor generation.

Three kinds of tensors, all with small Gaussian-integer data and all
reproducible from a seed:

  * random: dense with coefficients drawn uniformly from a small box,
    rejection-sampled (n <= 2) until provably regular and non-deficient,
    so downstream product identities hold without caveats.
  * fermat: diagonal sum a_i x_i^d with nonzero a_i.
  * tangent: built to touch the isotropic quadric at a chosen point, so the
    characteristic polynomial drops degree.  For n = 1 the value at the
    isotropic direction (1, i) is cancelled exactly; for n = 2 the form is
    assembled as line * h + quadric * w with the line tangent to the conic
    at p = (0, i, 1), which forces f(p) = 0 and grad f(p) parallel to p.

Also provides exact rational rotations (products of Pythagorean-triple
Givens rotations, determinant +1) for orthogonal-invariance checks without
floating point error in the coefficient transport.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from itertools import combinations_with_replacement

from .echar import is_irregular
from .poly_core import GaussianRational, MultiPoly, SymmetricTensor, restrict_to_conic
from .spectra import FermatSpec


def _dense_terms(rng: random.Random, n_vars: int, d: int, bound: int, gaussian: bool):
    terms = {}
    for combo in combinations_with_replacement(range(n_vars), d):
        exp = [0] * n_vars
        for i in combo:
            exp[i] += 1
        re = rng.randint(-bound, bound)
        im = rng.randint(-bound, bound) if gaussian else 0
        terms[tuple(exp)] = GaussianRational.of(re, im)
    return terms


def random_tensor(
    n: int,
    d: int,
    seed: int,
    bound: int = 9,
    gaussian: bool = True,
    max_tries: int = 200,
) -> SymmetricTensor:
    """Random dense tensor, certified regular and non-deficient for n <= 2.

    The certificates are exact: for n = 1 the product of the values at the
    two isotropic directions must be nonzero, for n = 2 the tangency proxy
    resultant must be nonzero.  For n >= 3 no certificate is available and
    the raw sample is returned.
    """
    if n < 1 or d < 2:
        raise ValueError("random_tensor needs n >= 1 and d >= 2")
    rng = random.Random(seed)
    for _ in range(max_tries):
        f = SymmetricTensor(
            MultiPoly(n + 1, _dense_terms(rng, n + 1, d, bound, gaussian)), d
        )
        if n > 2:
            return f
        if _certified_generic(f):
            return f
    raise RuntimeError(f"no generic tensor found in {max_tries} tries (seed {seed})")


def _certified_generic(f: SymmetricTensor) -> bool:
    from .invariants import (
        DegenerateRestrictionError,
        binary_q_discriminant,
        ternary_q_discriminant_proxy,
    )

    if f.n == 1:
        return bool(binary_q_discriminant(f).qdisc)
    try:
        return bool(ternary_q_discriminant_proxy(f))
    except DegenerateRestrictionError:
        return False


def fermat_tensor(a, d: int) -> SymmetricTensor:
    """Diagonal tensor sum a_i x_i^d from exact coefficients."""
    coeffs = [c if isinstance(c, GaussianRational) else GaussianRational.of(c) for c in a]
    m = len(coeffs)
    if m < 2:
        raise ValueError("fermat_tensor needs at least two coefficients")
    terms = {}
    for i, c in enumerate(coeffs):
        exp = [0] * m
        exp[i] = d
        terms[tuple(exp)] = c
    return SymmetricTensor(MultiPoly(m, terms), d)


def random_fermat_coeffs(
    n: int, d: int, seed: int, bound: int = 9
) -> list[GaussianRational]:
    """Nonzero Gaussian-integer diagonal coefficients, deterministic in seed."""
    rng = random.Random(seed)
    out = []
    for _ in range(n + 1):
        while True:
            c = GaussianRational.of(rng.randint(-bound, bound), rng.randint(-bound, bound))
            if c:
                out.append(c)
                break
    return out


def fermat_spec(coeffs, d: int) -> FermatSpec:
    """FermatSpec over complex numbers from exact diagonal coefficients."""
    if any(not c for c in coeffs):
        raise ValueError("diagonal coefficients must be nonzero")
    return FermatSpec(a=tuple(complex(c) for c in coeffs), d=d)


def tangent_tensor(n: int, d: int, seed: int, bound: int = 9) -> SymmetricTensor:
    """Tensor tangent to the isotropic quadric, hence spectrally deficient.

    n = 1: random coefficients in the binomial convention except the top
    one, which is solved for so the form vanishes exactly at (1, i).
    n = 2: line * h + quadric * w with the line i*x2 + x3 tangent at
    p = (0, i, 1); a sample is rejected if p would be a singular point of
    the form or the form is irregular or restricts to zero on the conic.
    """
    if d < 3:
        raise ValueError("tangent_tensor needs d >= 3")
    rng = random.Random(seed)
    if n == 1:
        return _tangent_binary(rng, d, bound)
    if n == 2:
        return _tangent_ternary(rng, d, bound)
    raise ValueError("tangent_tensor supports n <= 2 only")


def _tangent_binary(rng: random.Random, d: int, bound: int) -> SymmetricTensor:
    i_unit = GaussianRational.of(0, 1)
    for _ in range(200):
        a = [GaussianRational.of(rng.randint(-bound, bound), rng.randint(-bound, bound))
             for _ in range(d)]
        # value at (1, i) of sum_{j>=1} C(d,j) a_j x^(d-j) y^j, negated
        a0 = GaussianRational()
        for j in range(1, d + 1):
            a0 = a0 - GaussianRational.of(math.comb(d, j)) * a[j - 1] * i_unit**j
        terms = {(d, 0): a0}
        for j in range(1, d + 1):
            terms[(d - j, j)] = GaussianRational.of(math.comb(d, j)) * a[j - 1]
        poly = MultiPoly(2, terms)
        if poly.is_zero():
            continue
        f = SymmetricTensor(poly, d)
        other = f.poly.evaluate_exact(
            (GaussianRational.of(1), GaussianRational.of(0, -1))
        )
        if other:  # tangent at one isotropic direction only
            return f
    raise RuntimeError("no tangent binary form found")


_TANGENT_LINE = MultiPoly(
    3, {(0, 1, 0): GaussianRational.of(0, 1), (0, 0, 1): GaussianRational.of(1)}
)
_TANGENT_POINT = (
    GaussianRational(),
    GaussianRational.of(0, 1),
    GaussianRational.of(1),
)


def _tangent_ternary(rng: random.Random, d: int, bound: int) -> SymmetricTensor:
    from .poly_core import quadric_form

    q = quadric_form(3)
    for _ in range(200):
        h = MultiPoly(3, _dense_terms(rng, 3, d - 1, bound, True))
        w = MultiPoly(3, _dense_terms(rng, 3, d - 2, bound, True))
        f_poly = _TANGENT_LINE * h + q * w
        if f_poly.is_zero():
            continue
        # smooth tangency needs grad f(p) != 0, i.e. h(p) + 2 w(p) != 0
        hp = h.evaluate_exact(_TANGENT_POINT)
        wp = w.evaluate_exact(_TANGENT_POINT)
        if not (hp + wp * 2):
            continue
        f = SymmetricTensor(f_poly, d)
        if restrict_to_conic(f).is_zero():
            continue
        if is_irregular(f):
            continue
        return f
    raise RuntimeError("no tangent ternary form found")


# ---------------------------------------------------------------------------
# exact rotations
# ---------------------------------------------------------------------------

_TRIPLES = [(3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25), (20, 21, 29), (9, 40, 41)]


def random_rotation(m: int, seed: int, steps: int = 2) -> list[list[Fraction]]:
    """Exact rational special-orthogonal matrix of size m.

    Product of `steps` Givens rotations with Pythagorean-triple cosines on
    random coordinate planes.  Few steps keep the entry denominators small,
    which keeps transformed tensors cheap for exact arithmetic.
    """
    if m < 2:
        raise ValueError("random_rotation needs m >= 2")
    rng = random.Random(seed)
    mat = [[Fraction(int(i == j)) for j in range(m)] for i in range(m)]
    for _ in range(steps):
        a, b, c = rng.choice(_TRIPLES)
        if rng.random() < 0.5:
            a, b = b, a
        cos = Fraction(a, c)
        sin = Fraction(b, c) * rng.choice((1, -1))
        i, j = rng.sample(range(m), 2)
        for row in mat:
            vi, vj = row[i], row[j]
            row[i] = cos * vi - sin * vj
            row[j] = sin * vi + cos * vj
    return mat


def apply_rotation(f: SymmetricTensor, mat: list[list[Fraction]]) -> SymmetricTensor:
    """The tensor pulled back through x = mat * y, with exact coefficients."""
    return SymmetricTensor(f.poly.substitute_linear(mat), f.d)
