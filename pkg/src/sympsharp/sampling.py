"""Seeded random generators for symplectic matrices, Lagrangians and correspondences."""

from __future__ import annotations

import random
from fractions import Fraction

from sympsharp.category import GeneralizedCorrespondence
from sympsharp.correspondence import LagrangianCorrespondence, product_of_lagrangians
from sympsharp.linalg import Matrix, Subspace
from sympsharp.symplectic import LagrangianSubspace, SymplecticSpace, dual, product, some_lagrangian


def elementary_symplectic(n: int, rng: random.Random) -> Matrix:
    """One upper shear, lower shear or the swap ``J`` for the standard form of size 2n."""
    kind = rng.choice(("upper", "lower", "swap"))
    if kind == "swap":
        i = Matrix.identity(n)
        z = Matrix.zeros(n, n)
        return Matrix.vstack(Matrix.hstack(z, i), Matrix.hstack(-i, z))
    s = [[0] * n for _ in range(n)]
    i, j = rng.randrange(n), rng.randrange(n)
    c = rng.choice((-2, -1, 1, 2))
    s[i][j] = c
    s[j][i] = c
    sym = Matrix.from_rows(s, n)
    one, zero = Matrix.identity(n), Matrix.zeros(n, n)
    if kind == "upper":
        return Matrix.vstack(Matrix.hstack(one, sym), Matrix.hstack(zero, one))
    return Matrix.vstack(Matrix.hstack(one, zero), Matrix.hstack(sym, one))


def random_symplectic_matrix(n: int, rng: random.Random, max_factors: int = 6) -> Matrix:
    """An integer matrix preserving the standard form, a product of at most ``max_factors`` elementary factors."""
    m = Matrix.identity(2 * n)
    for _ in range(rng.randint(1, max_factors)):
        m = elementary_symplectic(n, rng) @ m
    return m


def transvection(v: SymplecticSpace, u, c) -> Matrix:
    """The map ``x -> x + c omega(u, x) u``, a symplectomorphism of ``v`` for every u, c."""
    row = [sum((u[k] * v.form[k, j] for k in range(v.dim)), Fraction(0)) for j in range(v.dim)]
    return Matrix.identity(v.dim) + Matrix.from_rows([[c * u[i] * row[j] for j in range(v.dim)]
                                                      for i in range(v.dim)], v.dim)


def random_lagrangian(v: SymplecticSpace, rng: random.Random, moves: int = 3,
                      entries: tuple = (-1, 0, 0, 1, 2)) -> LagrangianSubspace:
    s = some_lagrangian(v)
    if v.dim:
        for _ in range(rng.randint(0, moves)):
            u = [rng.choice(entries) for _ in range(v.dim)]
            s = Subspace.span(transvection(v, u, rng.choice((-1, 1, 2))) @ s.basis, v.dim)
    return LagrangianSubspace(v, s)


def random_correspondence(source: SymplecticSpace, target: SymplecticSpace, rng: random.Random,
                          split_probability: float = 0.0) -> LagrangianCorrespondence:
    """A random correspondence; with probability ``split_probability`` a product ``L0 x L1``."""
    if rng.random() < split_probability:
        return product_of_lagrangians(random_lagrangian(source, rng), random_lagrangian(target, rng))
    lag = random_lagrangian(product(dual(source), target), rng, moves=5)
    return LagrangianCorrespondence(source, target, lag)


def random_sequence(spaces, rng: random.Random, split_probability: float = 0.25) -> GeneralizedCorrespondence:
    """A random sequence through the given spaces; a single space gives the empty sequence."""
    spaces = list(spaces)
    if len(spaces) == 1:
        return GeneralizedCorrespondence.identity(spaces[0])
    return GeneralizedCorrespondence.of(*(random_correspondence(a, b, rng, split_probability)
                                          for a, b in zip(spaces, spaces[1:])))
