"""Exact multipolynomial resultants via Sylvester and Macaulay matrices.

The resultant here is the classical normalized one: it is the integer
polynomial in the coefficients of a square system of homogeneous forms that
vanishes exactly when the system has a nontrivial common zero, normalized so
that the diagonal monomial system (x_1^d1, ..., x_m^dm) has resultant 1.

Two construction paths are provided:

  * sylvester_resultant: two binary forms, determinant of the Sylvester matrix.
  * macaulay_resultant: m forms in m variables, the classical quotient
    det(M) / det(M') at the critical degree D = sum(d_i - 1) + 1.  Column
    monomials divisible by x_i^d_i for at least two indices i index the
    denominator minor M'.  When det(M') vanishes for a specific numeric
    system the quotient is undefined and DenominatorSingularError is raised;
    parametric callers skip that sample point.

Determinants are computed by fraction-free Bareiss elimination: rows are
scaled to Gaussian integers first, the elimination divides exactly at every
step, and the row scaling is divided back out at the end.  This keeps all
intermediate growth polynomial instead of the exponential blowup of naive
fraction arithmetic.

parametric_resultant handles systems whose entries are degree <= 1 in an
external parameter: it evaluates the Macaulay quotient at small exact sample
points 0, 1, -1, 2, -2, ... and interpolates, skipping singular samples.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd, lcm
from typing import Iterator, Sequence

from .poly_core import (
    ZERO,
    ONE,
    GaussianRational,
    MultiPoly,
    UniPoly,
    as_scalar,
    binary_coeffs,
)


class ResultantError(RuntimeError):
    pass


class DenominatorSingularError(ResultantError):
    """det(M') = 0 for this specific system; the quotient formula fails here."""


class MatrixTooLargeError(ResultantError):
    """Guardrail against Macaulay matrices beyond desk scale."""


MAX_MACAULAY_SIZE = 3000


# ---------------------------------------------------------------------------
# exact determinants
# ---------------------------------------------------------------------------

def _bareiss_int(rows: list[list[int]]) -> int:
    """Fraction-free determinant of a square integer matrix (in place)."""
    n = len(rows)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for r in range(k + 1, n):
                if rows[r][k] != 0:
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        rowk = rows[k]
        pkk = rowk[k]
        for i in range(k + 1, n):
            rowi = rows[i]
            aik = rowi[k]
            if aik:
                for j in range(k + 1, n):
                    rowi[j] = (pkk * rowi[j] - aik * rowk[j]) // prev
            elif prev == 1:
                for j in range(k + 1, n):
                    rowi[j] = pkk * rowi[j]
            else:
                for j in range(k + 1, n):
                    rowi[j] = (pkk * rowi[j]) // prev
            rowi[k] = 0
        prev = pkk
    return sign * rows[n - 1][n - 1]


def _bareiss_gaussian(re: list[list[int]], im: list[list[int]]) -> tuple[int, int]:
    """Fraction-free determinant over the Gaussian integers (in place).

    Matrices are parallel real/imaginary integer parts.  Every division is
    exact by the Bareiss identity, which holds in any integral domain.
    """
    n = len(re)
    if n == 0:
        return 1, 0
    sign = 1
    pr, pi = 1, 0  # previous pivot
    for k in range(n - 1):
        if re[k][k] == 0 and im[k][k] == 0:
            for r in range(k + 1, n):
                if re[r][k] != 0 or im[r][k] != 0:
                    re[k], re[r] = re[r], re[k]
                    im[k], im[r] = im[r], im[k]
                    sign = -sign
                    break
            else:
                return 0, 0
        rkr, rki = re[k], im[k]
        qr, qi = rkr[k], rki[k]
        nq = pr * pr + pi * pi
        for i in range(k + 1, n):
            rir, rii = re[i], im[i]
            br, bi = rir[k], rii[k]
            if br or bi:
                for j in range(k + 1, n):
                    ar, ai = rir[j], rii[j]
                    cr, ci = rkr[j], rki[j]
                    tr = qr * ar - qi * ai - br * cr + bi * ci
                    ti = qr * ai + qi * ar - br * ci - bi * cr
                    rir[j] = (tr * pr + ti * pi) // nq
                    rii[j] = (ti * pr - tr * pi) // nq
            else:
                for j in range(k + 1, n):
                    ar, ai = rir[j], rii[j]
                    tr = qr * ar - qi * ai
                    ti = qr * ai + qi * ar
                    rir[j] = (tr * pr + ti * pi) // nq
                    rii[j] = (ti * pr - tr * pi) // nq
            rir[k] = 0
            rii[k] = 0
        pr, pi = qr, qi
    last = n - 1
    if sign == 1:
        return re[last][last], im[last][last]
    return -re[last][last], -im[last][last]


def exact_determinant(matrix: Sequence[Sequence[GaussianRational]]) -> GaussianRational:
    """Determinant of a square matrix of Gaussian rationals.

    Rows are cleared to Gaussian integers (and stripped of integer content)
    before elimination; the accumulated rational row factor is divided back
    out exactly at the end.
    """
    n = len(matrix)
    if n == 0:
        return ONE
    re_m: list[list[int]] = []
    im_m: list[list[int]] = []
    scale = Fraction(1)  # det(original) = scale * det(integer matrix)
    any_im = False
    for row in matrix:
        if len(row) != n:
            raise ValueError("determinant needs a square matrix")
        denom = 1
        for c in row:
            denom = lcm(denom, c.re.denominator, c.im.denominator)
        re_row = [int(c.re * denom) for c in row]
        im_row = [int(c.im * denom) for c in row]
        content = 0
        for v in re_row:
            content = gcd(content, v)
        for v in im_row:
            content = gcd(content, v)
        if content > 1:
            re_row = [v // content for v in re_row]
            im_row = [v // content for v in im_row]
        else:
            content = max(content, 1)
        scale *= Fraction(content, denom)
        if not any_im and any(im_row):
            any_im = True
        re_m.append(re_row)
        im_m.append(im_row)
    if any_im:
        dr, di = _bareiss_gaussian(re_m, im_m)
        return GaussianRational(dr * scale, di * scale)
    d = _bareiss_int(re_m)
    return GaussianRational(d * scale)


# ---------------------------------------------------------------------------
# Sylvester resultant of two binary forms
# ---------------------------------------------------------------------------

def sylvester_resultant(p: MultiPoly, q: MultiPoly) -> GaussianRational:
    """Resultant of two nonzero homogeneous binary forms of positive degree."""
    if p.is_zero() or q.is_zero():
        raise ValueError("sylvester_resultant needs nonzero forms")
    pc = binary_coeffs(p)
    qc = binary_coeffs(q)
    m = len(pc) - 1
    k = len(qc) - 1
    if m < 1 or k < 1:
        raise ValueError("sylvester_resultant needs forms of positive degree")
    size = m + k
    rows: list[list[GaussianRational]] = []
    for r in range(k):
        row = [ZERO] * size
        for j, c in enumerate(pc):
            row[r + j] = c
        rows.append(row)
    for r in range(m):
        row = [ZERO] * size
        for j, c in enumerate(qc):
            row[r + j] = c
        rows.append(row)
    return exact_determinant(rows)


# ---------------------------------------------------------------------------
# Macaulay resultant of m forms in m variables
# ---------------------------------------------------------------------------

def _monomials_of_degree(n_vars: int, degree: int) -> list[tuple[int, ...]]:
    """All exponent tuples of the given total degree, descending lex order."""
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int], remaining: int, pos: int):
        if pos == n_vars - 1:
            out.append(tuple(prefix + [remaining]))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + [e], remaining - e, pos + 1)

    rec([], degree, 0)
    return out


@dataclass(frozen=True)
class _MacaulayLayout:
    """Row/column bookkeeping for one (n_vars, degrees) profile."""

    n_vars: int
    degrees: tuple[int, ...]
    crit_degree: int
    monomials: tuple[tuple[int, ...], ...]
    index: dict
    # rows[i] = (form index, multiplier exponent) for column monomial i
    rows: tuple[tuple[int, tuple[int, ...]], ...]
    reduced: tuple[int, ...]


_layout_cache: dict[tuple[int, tuple[int, ...]], _MacaulayLayout] = {}


def _macaulay_layout(n_vars: int, degrees: tuple[int, ...]) -> _MacaulayLayout:
    key = (n_vars, degrees)
    got = _layout_cache.get(key)
    if got is not None:
        return got
    crit = sum(d - 1 for d in degrees) + 1
    size = comb(crit + n_vars - 1, n_vars - 1)
    if size > MAX_MACAULAY_SIZE:
        raise MatrixTooLargeError(
            f"Macaulay matrix would be {size}x{size}; limit is {MAX_MACAULAY_SIZE}"
        )
    monomials = tuple(_monomials_of_degree(n_vars, crit))
    index = {mono: i for i, mono in enumerate(monomials)}
    rows = []
    reduced = []
    for i, mono in enumerate(monomials):
        owner = -1
        count = 0
        for v in range(n_vars):
            if mono[v] >= degrees[v]:
                count += 1
                if owner < 0:
                    owner = v
        # by pigeonhole at the critical degree some exponent reaches d_v
        mult = list(mono)
        mult[owner] -= degrees[owner]
        rows.append((owner, tuple(mult)))
        if count >= 2:
            reduced.append(i)
    layout = _MacaulayLayout(
        n_vars, degrees, crit, monomials, index, tuple(rows), tuple(reduced)
    )
    _layout_cache[key] = layout
    return layout


@dataclass
class MacaulaySystem:
    """A square system of homogeneous forms prepared for the Macaulay quotient.

    forms[i] is paired with variable i: the rows owned by forms[i] are the
    column monomials whose i-th exponent reaches degrees[i] first.
    """

    forms: list[MultiPoly]
    degrees: tuple[int, ...] = field(init=False)
    layout: _MacaulayLayout = field(init=False, repr=False)

    def __post_init__(self):
        if not self.forms:
            raise ValueError("empty system")
        n_vars = self.forms[0].n_vars
        if len(self.forms) != n_vars:
            raise ValueError(
                f"need exactly {n_vars} forms for {n_vars} variables,"
                f" got {len(self.forms)}"
            )
        degs = []
        for f in self.forms:
            if f.is_zero():
                raise ValueError("zero form in resultant system")
            if f.n_vars != n_vars:
                raise ValueError("mixed variable counts in system")
            if not f.is_homogeneous():
                raise ValueError("resultant system forms must be homogeneous")
            d = f.total_degree()
            if d < 1:
                raise ValueError("resultant system forms must have positive degree")
            degs.append(d)
        self.degrees = tuple(degs)
        self.layout = _macaulay_layout(n_vars, self.degrees)

    @property
    def size(self) -> int:
        return len(self.layout.monomials)

    @property
    def crit_degree(self) -> int:
        return self.layout.crit_degree

    @property
    def reduced_columns(self) -> tuple[int, ...]:
        return self.layout.reduced

    def numerator_matrix(self) -> list[list[GaussianRational]]:
        lay = self.layout
        size = self.size
        rows = []
        for owner, mult in lay.rows:
            row = [ZERO] * size
            for e, c in self.forms[owner].terms.items():
                col = lay.index[tuple(a + b for a, b in zip(e, mult))]
                row[col] = c
            rows.append(row)
        return rows

    def denominator_matrix(self) -> list[list[GaussianRational]]:
        lay = self.layout
        keep = lay.reduced
        full = self.numerator_matrix()
        return [[full[r][c] for c in keep] for r in keep]


_diagonal_checked: set[tuple[int, tuple[int, ...]]] = set()


def _check_diagonal_normalization(n_vars: int, degrees: tuple[int, ...]) -> None:
    """Macaulay quotient of (x_1^d1, ..., x_m^dm) must be exactly 1.

    This pins the global sign of the construction for a degree profile: the
    quotient det(M)/det(M') equals sigma * Res identically with sigma = +-1
    fixed by the row and column order, and evaluating on the diagonal system
    shows sigma = +1.  Run once per profile as a cheap self-check of the
    layout bookkeeping.
    """
    key = (n_vars, degrees)
    if key in _diagonal_checked:
        return
    diag = []
    for v in range(n_vars):
        exp = [0] * n_vars
        exp[v] = degrees[v]
        diag.append(MultiPoly.monomial(n_vars, tuple(exp)))
    sys = MacaulaySystem(diag)
    num = exact_determinant(sys.numerator_matrix())
    den = exact_determinant(sys.denominator_matrix())
    if den.is_zero() or (num / den) != ONE:
        raise ResultantError(
            f"Macaulay layout self-check failed for profile {degrees}"
        )
    _diagonal_checked.add(key)


def macaulay_resultant(system: MacaulaySystem) -> GaussianRational:
    """Normalized resultant via the classical quotient det(M) / det(M').

    Raises DenominatorSingularError when det(M') = 0 for this specific
    system; the caller retries after a coordinate shuffle or, in the
    parametric driver, moves to a different sample point.
    """
    _check_diagonal_normalization(system.forms[0].n_vars, system.degrees)
    num = exact_determinant(system.numerator_matrix())
    den = exact_determinant(system.denominator_matrix())
    if den.is_zero():
        raise DenominatorSingularError(
            f"Macaulay denominator minor is singular for profile {system.degrees}"
        )
    return num / den


# ---------------------------------------------------------------------------
# parametric systems and interpolation
# ---------------------------------------------------------------------------

@dataclass
class ParametricSystem:
    """Square system whose forms are affine in one external parameter.

    form_i(lam) = const_part[i] + lam * linear_part[i]; a zero polynomial in
    linear_part marks a parameter-free form.  Every specialization must stay
    homogeneous of fixed degree, which holds when linear_part[i] is zero or
    homogeneous of the same degree as const_part[i].
    """

    const_part: list[MultiPoly]
    linear_part: list[MultiPoly]

    def __post_init__(self):
        if len(self.const_part) != len(self.linear_part):
            raise ValueError("mismatched parametric system parts")
        for a, b in zip(self.const_part, self.linear_part):
            if b.is_zero():
                continue
            if a.is_zero():
                continue
            if not (a.is_homogeneous() and b.is_homogeneous()):
                raise ValueError("parametric system parts must be homogeneous")
            if a.total_degree() != b.total_degree():
                raise ValueError(
                    "constant and parameter parts must share a degree"
                )

    @property
    def n_vars(self) -> int:
        return self.const_part[0].n_vars

    def at(self, lam) -> list[MultiPoly]:
        lam = as_scalar(lam)
        return [
            a + b.scale(lam) if not b.is_zero() else a
            for a, b in zip(self.const_part, self.linear_part)
        ]


def _sample_points() -> Iterator[int]:
    yield 0
    k = 1
    while True:
        yield k
        yield -k
        k += 1


def _thread_count() -> int:
    raw = os.environ.get("ESPECTRA_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _perturbed_quotient_value(forms: list[MultiPoly]) -> GaussianRational:
    """Resultant value of a system whose Macaulay quotient degenerates.

    Perturbs form i by t * x_i^{d_i} and interpolates det(M)(t) and
    det(M')(t) exactly.  Their ratio is the resultant of the perturbed
    system, a polynomial in t, so the value at t = 0 is zero when the
    numerator valuation exceeds the denominator valuation and the ratio of
    the lowest coefficients otherwise.  Both determinants carry a unit
    leading coefficient in t (each row owns a distinct diagonal column),
    hence neither vanishes identically.
    """
    m = forms[0].n_vars
    degs = [f.total_degree() for f in forms]

    def diag_term(i: int, tval: int) -> MultiPoly:
        exp = tuple(degs[i] if j == i else 0 for j in range(m))
        return MultiPoly.monomial(m, exp, tval)

    base = MacaulaySystem(forms)
    n_size = len(base.numerator_matrix())
    nodes: list[int] = []
    num_vals: list[GaussianRational] = []
    den_vals: list[GaussianRational] = []
    for tval in range(1, n_size + 2):
        moved = MacaulaySystem([forms[i] + diag_term(i, tval) for i in range(m)])
        nodes.append(tval)
        num_vals.append(exact_determinant(moved.numerator_matrix()))
        den_vals.append(exact_determinant(moved.denominator_matrix()))
    num = UniPoly.interpolate(nodes, num_vals)
    den = UniPoly.interpolate(nodes, den_vals)
    vn = _valuation(num)
    vd = _valuation(den)
    if vn is None or (vd is not None and vn > vd):
        return ZERO
    if vd is None or vn < vd:
        raise ResultantError(
            "perturbed Macaulay quotient is not polynomial; system outside"
            " the supported profile"
        )
    return num.coeff(vn) / den.coeff(vd)


def _valuation(p: UniPoly) -> int | None:
    for k in range(p.degree + 1):
        if p.coeff(k):
            return k
    return None


def _unimodular_shears(m: int) -> list[list[list[int]]]:
    """Three determinant-one integer matrices used to dodge singular minors."""
    ident = [[int(i == j) for j in range(m)] for i in range(m)]
    upper = [row[:] for row in ident]
    lower = [row[:] for row in ident]
    for i in range(m - 1):
        upper[i][i + 1] = 1
        lower[i + 1][i] = 1
    both = [
        [sum(upper[i][k] * lower[k][j] for k in range(m)) for j in range(m)]
        for i in range(m)
    ]
    return [upper, lower, both]


def parametric_resultant(
    system: ParametricSystem,
    degree_bound: int,
    max_failures: int | None = None,
) -> UniPoly:
    """Resultant of a parameter-affine system as an exact UniPoly.

    Evaluates the Macaulay quotient at degree_bound + 1 exact integer sample
    points (0, 1, -1, 2, -2, ...), skipping points where the denominator
    minor degenerates, then interpolates.  The count of skipped points is
    bounded; exhausting it raises ResultantError.
    """
    if degree_bound < 0:
        raise ValueError("degree_bound must be nonnegative")
    needed = degree_bound + 1
    if max_failures is None:
        max_failures = 3 * needed + 8

    def eval_at(lam: int) -> GaussianRational | None:
        forms = system.at(lam)
        if any(f.is_zero() for f in forms):
            # a form vanished identically at this sample, so every point is
            # a common zero and the resultant value is 0
            return ZERO
        try:
            return macaulay_resultant(MacaulaySystem(forms))
        except DenominatorSingularError:
            pass
        # the quotient formula can degenerate even though the resultant value
        # is perfectly well defined; a determinant-one change of variables
        # leaves that value fixed and usually moves the denominator minor off
        # its zero locus
        for mat in _unimodular_shears(forms[0].n_vars):
            try:
                moved = [f.substitute_linear(mat) for f in forms]
                return macaulay_resultant(MacaulaySystem(moved))
            except DenominatorSingularError:
                continue
        # the degeneration survives every shear, so it is structural (for
        # instance all forms share a factor); fall back to the perturbed
        # quotient, which always produces the exact value
        return _perturbed_quotient_value(forms)

    nodes: list[int] = []
    values: list[GaussianRational] = []
    failures = 0
    points = _sample_points()
    threads = _thread_count()
    while len(nodes) < needed:
        batch = [next(points) for _ in range(min(threads, needed - len(nodes)))]
        if threads > 1 and len(batch) > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                results = list(pool.map(eval_at, batch))
        else:
            results = [eval_at(lam) for lam in batch]
        for lam, val in zip(batch, results):
            if val is None:
                failures += 1
                if failures > max_failures:
                    raise ResultantError(
                        "too many singular sample points while interpolating"
                        f" (profile of {len(system.const_part)} forms)"
                    )
            else:
                nodes.append(lam)
                values.append(val)
    return UniPoly.interpolate(nodes, values)
