"""
Symplectic vector spaces over Q and Lagrangian predicates.

A space carries an arbitrary antisymmetric nondegenerate form.  Products
are block diagonal and the sign-reversed space ``V-`` negates the form, so
``M^-`` is represented literally rather than by a change of coordinates.
The point is the 0-dimensional space and is allowed everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from sympsharp.errors import AmbientMismatch, NotLagrangian, NotSymplectic, ShapeMismatch
from sympsharp.linalg import Matrix, Subspace, contains, is_subspace_of, kernel, rank, subspace_sum

POINT_NAME = "pt"


@dataclass(frozen=True)
class SymplecticSpace:
    dim: int
    form: Matrix
    name: str

    def __post_init__(self):
        if self.dim % 2:
            raise NotSymplectic("odd dimension %d" % self.dim)
        if self.form.shape != (self.dim, self.dim):
            raise NotSymplectic("form has shape %r for dimension %d" % (self.form.shape, self.dim))
        if self.form.T != -self.form:
            raise NotSymplectic("form of %s is not antisymmetric" % self.name)
        if rank(self.form) != self.dim:
            raise NotSymplectic("form of %s is degenerate" % self.name)

    @property
    def half_dim(self) -> int:
        return self.dim // 2

    @property
    def is_point(self) -> bool:
        return self.dim == 0

    def omega(self, u, v):
        """Evaluate the form on two vectors."""
        return sum((a * b for a, b in zip(u, self.form.apply(v))), 0)

    def __repr__(self):
        return "SymplecticSpace(%s, dim=%d)" % (self.name, self.dim)


def standard_form(n: int) -> Matrix:
    """The block form ``[[0, I], [-I, 0]]`` of size 2n."""
    i = Matrix.identity(n)
    z = Matrix.zeros(n, n)
    return Matrix.vstack(Matrix.hstack(z, i), Matrix.hstack(-i, z))


def standard_space(n: int, name: str) -> SymplecticSpace:
    return SymplecticSpace(2 * n, standard_form(n), name)


POINT = standard_space(0, POINT_NAME)


@lru_cache(maxsize=None)
def dual(v: SymplecticSpace) -> SymplecticSpace:
    """The same space with the form negated; an involution, fixing the point."""
    if v.is_point:
        return v
    name = v.name[:-1] if v.name.endswith("-") else v.name + "-"
    return SymplecticSpace(v.dim, -v.form, name)


@lru_cache(maxsize=None)
def product(a: SymplecticSpace, b: SymplecticSpace) -> SymplecticSpace:
    """``a x b`` with block-diagonal form; a point factor is dropped."""
    if a.is_point:
        return b
    if b.is_point:
        return a
    return SymplecticSpace(a.dim + b.dim, Matrix.block_diag(a.form, b.form),
                           "(%s*%s)" % (a.name, b.name))


def _check(v: SymplecticSpace, s: Subspace):
    if s.ambient_dim != v.dim:
        raise AmbientMismatch("subspace of Q^%d in %s of dimension %d" % (s.ambient_dim, v.name, v.dim))


def restricted_form(v: SymplecticSpace, s: Subspace) -> Matrix:
    _check(v, s)
    return s.basis.T @ v.form @ s.basis


def is_isotropic(v: SymplecticSpace, s: Subspace) -> bool:
    return restricted_form(v, s).is_zero()


def is_lagrangian(v: SymplecticSpace, s: Subspace) -> bool:
    _check(v, s)
    return 2 * s.dim == v.dim and is_isotropic(v, s)


def symplectic_complement(v: SymplecticSpace, s: Subspace) -> Subspace:
    _check(v, s)
    if s.dim == 0:
        return Subspace.full(v.dim)
    return kernel(s.basis.T @ v.form)


def is_coisotropic(v: SymplecticSpace, s: Subspace) -> bool:
    comp = symplectic_complement(v, s)
    return is_subspace_of(comp, s)


def is_linear_symplectomorphism(a: SymplecticSpace, b: SymplecticSpace, psi: Matrix) -> bool:
    if psi.shape != (b.dim, a.dim):
        raise ShapeMismatch("map must be %dx%d, got %dx%d" % (b.dim, a.dim, psi.rows, psi.cols))
    return a.dim == b.dim and psi.T @ b.form @ psi == a.form


@dataclass(frozen=True)
class LagrangianSubspace:
    space: SymplecticSpace
    subspace: Subspace

    def __post_init__(self):
        if not is_lagrangian(self.space, self.subspace):
            raise NotLagrangian("subspace of dimension %d is not Lagrangian in %s"
                                % (self.subspace.dim, self.space.name))

    @classmethod
    def span(cls, space: SymplecticSpace, vectors) -> "LagrangianSubspace":
        return cls(space, Subspace.span(vectors, space.dim))

    @property
    def dim(self) -> int:
        return self.subspace.dim


def some_lagrangian(v: SymplecticSpace) -> Subspace:
    """A deterministic Lagrangian of ``v``, grown greedily inside complements."""
    s = Subspace.zero(v.dim)
    while 2 * s.dim < v.dim:
        comp = symplectic_complement(v, s)
        w = next(w for w in comp.vectors() if not contains(s, w))
        s = subspace_sum(s, Subspace.span([w], v.dim))
    return s
