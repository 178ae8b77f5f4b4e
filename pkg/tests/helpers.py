"""Shared strategies, fixtures and an independent sympy oracle for the tests."""

from __future__ import annotations

import random
from fractions import Fraction

import sympy
from hypothesis import strategies as st

from sympsharp.correspondence import product_of_lagrangians
from sympsharp.linalg import Matrix, Subspace
from sympsharp.sampling import random_correspondence, random_lagrangian
from sympsharp.symplectic import POINT, LagrangianSubspace, standard_space

M = standard_space(1, "M")
N = standard_space(1, "N")
R4 = standard_space(2, "R4")

X = LagrangianSubspace.span(M, [[1, 0]])
Y = LagrangianSubspace.span(M, [[0, 1]])
XX = product_of_lagrangians(X, X)
YY = product_of_lagrangians(Y, Y)
XY = product_of_lagrangians(X, Y)

SPACES = (POINT, M, R4)


def small_ints(lo=-3, hi=3):
    return st.integers(lo, hi)


@st.composite
def matrices(draw, rows=None, cols=None, max_dim=4, lo=-3, hi=3):
    r = draw(st.integers(0, max_dim)) if rows is None else rows
    c = draw(st.integers(0, max_dim)) if cols is None else cols
    entries = draw(st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c), min_size=r, max_size=r))
    return Matrix.from_rows(entries, c)


@st.composite
def subspace_pairs(draw, max_dim=4):
    n = draw(st.integers(1, max_dim))
    a = draw(matrices(rows=n, cols=draw(st.integers(0, n))))
    b = draw(matrices(rows=n, cols=draw(st.integers(0, n))))
    return Subspace.span(a, n), Subspace.span(b, n)


@st.composite
def rngs(draw):
    return random.Random(draw(st.integers(0, 2 ** 32)))


@st.composite
def correspondences(draw, source=None, target=None, split_probability=0.3):
    rng = draw(rngs())
    a = draw(st.sampled_from(SPACES)) if source is None else source
    b = draw(st.sampled_from(SPACES)) if target is None else target
    return random_correspondence(a, b, rng, split_probability)


@st.composite
def lagrangians(draw, space=None):
    rng = draw(rngs())
    v = draw(st.sampled_from(SPACES)) if space is None else space
    return random_lagrangian(v, rng)


# the oracle ------------------------------------------------------------------

def to_sympy(m: Matrix) -> sympy.Matrix:
    return sympy.Matrix(m.rows, m.cols, [sympy.Rational(x.numerator, x.denominator)
                                         for row in m.entries for x in row])


def from_sympy(m: sympy.Matrix) -> Matrix:
    return Matrix.from_rows([[Fraction(int(x.p), int(x.q)) for x in m.row(i)] for i in range(m.rows)], m.cols)


def oracle_rank(m: Matrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    return to_sympy(m).rank()


def oracle_column_echelon(m: Matrix) -> Matrix:
    """Reduced column-echelon form via sympy's row reduction of the transpose."""
    if m.rows == 0 or m.cols == 0:
        return Matrix.zeros(m.rows, 0)
    r, pivots = to_sympy(m).T.rref()
    return from_sympy(r[:len(pivots), :].T)


def oracle_nullity(m: Matrix) -> int:
    return m.cols - oracle_rank(m)


def oracle_span_equal(a: Matrix, b: Matrix) -> bool:
    ra, rb = oracle_rank(a), oracle_rank(b)
    both = Matrix.hstack(a, b) if a.cols and b.cols else (a if a.cols else b)
    return ra == rb == oracle_rank(both)
