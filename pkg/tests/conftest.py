"""Shared generators and independent oracles for the test suite.

The oracles here deliberately avoid the code paths they check: polynomial
equality is probed by exact evaluation at random rational points, the
resultant oracle expands the Sylvester determinant by cofactors, and the
hull oracle verifies the defining properties of a convex hull instead of
re-running the production algorithm.
"""

from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import settings

from kellerkit import (
    AffineFactor,
    BiPoly,
    ElementaryFactor,
    Factorization,
    UniPoly,
    random_tame,
)

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")


# ---------------------------------------------------------------------------
# Random object generators (plain random.Random; hypothesis is used only
# for small structural properties, seeded suites use these).
# ---------------------------------------------------------------------------


def random_unipoly(rng: random.Random, max_deg: int, bound: int, nonzero=False) -> UniPoly:
    deg = rng.randint(0, max_deg)
    coeffs = {k: rng.randint(-bound, bound) for k in range(deg + 1)}
    p = UniPoly(coeffs)
    if nonzero and p.is_zero():
        return UniPoly.constant(1)
    return p


def random_bipoly(rng: random.Random, max_deg: int, bound: int) -> BiPoly:
    terms = {}
    for i in range(max_deg + 1):
        for j in range(max_deg + 1 - i):
            if rng.random() < 0.6:
                terms[(i, j)] = rng.randint(-bound, bound)
    return BiPoly(terms)


def random_fraction(rng: random.Random, bound: int = 6) -> Fraction:
    num = rng.randint(-bound, bound)
    den = rng.randint(1, bound)
    return Fraction(num, den)


def shift_degree_product(word: Factorization) -> int:
    """Upper bound for the composed degree: product of elementary degrees."""
    product = 1
    for factor in word:
        if isinstance(factor, ElementaryFactor):
            d = factor.shift.degree()
            product *= max(1, d if isinstance(d, int) else 1)
    return product


def draw_tame_word(
    rng: random.Random,
    max_factors: int,
    max_shift_degree: int,
    coeff_bound: int,
    degree_cap: int,
    affine_probability: float = 0.25,
) -> Factorization:
    """Redraw until the elementary degree product fits under the cap.

    All draws stay inside the given parameter bounds; the cap only rejects
    words whose composed degree would be too large to handle exactly in
    the suite budgets.
    """
    while True:
        word = random_tame(
            rng.getrandbits(48),
            rng.randint(1, max_factors),
            max_shift_degree,
            coeff_bound,
            affine_probability=affine_probability,
        )
        if shift_degree_product(word) <= degree_cap:
            return word


def random_axis_fixing_word(rng: random.Random, max_factors: int) -> Factorization:
    """Word of factors each fixing {y = 0} pointwise."""
    word = []
    for _ in range(rng.randint(1, max_factors)):
        if rng.random() < 0.5:
            d = 0
            while d == 0:
                d = rng.randint(-3, 3)
            word.append(AffineFactor(1, rng.randint(-3, 3), 0, d))
        else:
            deg = rng.randint(1, 3)
            coeffs = {k: rng.randint(-3, 3) for k in range(1, deg + 1)}
            if not coeffs.get(deg):
                coeffs[deg] = 1
            # No constant term: the shift vanishes at y = 0.
            word.append(ElementaryFactor("first", UniPoly(coeffs)))
    return Factorization(tuple(word))


def random_axis_preserving_affine(rng: random.Random) -> AffineFactor:
    """Affine map carrying the line {y = 0} onto itself as a set."""
    a = 0
    while a == 0:
        a = rng.randint(-3, 3)
    d = 0
    while d == 0:
        d = rng.randint(-3, 3)
    return AffineFactor(a, rng.randint(-3, 3), 0, d, rng.randint(-3, 3), 0)


# ---------------------------------------------------------------------------
# Oracles
# ---------------------------------------------------------------------------


def eval_bipoly_naive(p: BiPoly, a: Fraction, b: Fraction) -> Fraction:
    """Direct term-by-term evaluation, no Horner, no Substitution."""
    total = Fraction(0)
    for (i, j), c in p.terms():
        total += Fraction(c) * a**i * b**j
    return total


def eval_unipoly_naive(p: UniPoly, a: Fraction) -> Fraction:
    total = Fraction(0)
    for k, c in p.terms():
        total += Fraction(c) * a**k
    return total


def assert_bipoly_equal_by_eval(p: BiPoly, q: BiPoly, rng: random.Random, samples=8):
    for _ in range(samples):
        a, b = random_fraction(rng), random_fraction(rng)
        assert eval_bipoly_naive(p, a, b) == eval_bipoly_naive(q, a, b)


def sylvester_matrix(plist: list[UniPoly], qlist: list[UniPoly]) -> list[list[UniPoly]]:
    """Sylvester matrix of two y-coefficient lists (leading first), rows of
    the first argument on top, entries univariate in x."""
    m = len(plist) - 1
    n = len(qlist) - 1
    size = m + n
    zero = UniPoly.zero()
    rows = []
    for shift in range(n):
        rows.append([zero] * shift + plist + [zero] * (n - 1 - shift))
    for shift in range(m):
        rows.append([zero] * shift + qlist + [zero] * (m - 1 - shift))
    assert all(len(r) == size for r in rows)
    return rows


def det_cofactor(matrix: list[list[UniPoly]]) -> UniPoly:
    """Cofactor-expansion determinant over the polynomial ring."""
    size = len(matrix)
    if size == 0:
        return UniPoly.one()
    if size == 1:
        return matrix[0][0]
    total = UniPoly.zero()
    for col in range(size):
        entry = matrix[0][col]
        if entry.is_zero():
            continue
        minor = [row[:col] + row[col + 1 :] for row in matrix[1:]]
        term = entry * det_cofactor(minor)
        total = total + (term if col % 2 == 0 else -term)
    return total


def ydense(p: BiPoly) -> list[UniPoly]:
    """y-coefficient list, leading coefficient first (test-local copy)."""
    d = p.degree_y()
    assert isinstance(d, int) and d >= 0
    rows = [dict() for _ in range(d + 1)]
    for (i, j), c in p.terms():
        rows[d - j][i] = c
    return [UniPoly(r) for r in rows]


def resultant_oracle(p: BiPoly, q: BiPoly) -> UniPoly:
    """Resultant in y via the Sylvester determinant, rows of p first."""
    return det_cofactor(sylvester_matrix(ydense(p), ydense(q)))


def fraction_matrix_det(rows: list[list[Fraction]]) -> Fraction:
    """Exact Gaussian elimination determinant over the rationals."""
    n = len(rows)
    m = [row[:] for row in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if m[r][col]:
                pivot = r
                break
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = Fraction(1) / m[col][col]
        for r in range(col + 1, n):
            if m[r][col]:
                factor = m[r][col] * inv
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return det


@pytest.fixture
def rng():
    return random.Random(20260822)
