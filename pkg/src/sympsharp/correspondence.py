"""
Linear Lagrangian correspondences and their geometric composition.

A correspondence from V0 to V1 is a Lagrangian subspace of ``V0- x V1``.
Coordinates of the ambient are the V0 coordinates followed by the V1
coordinates, so a basis matrix splits into a source block and a target
block.
"""

from __future__ import annotations

from dataclasses import dataclass

from sympsharp.errors import AmbientMismatch, EndpointMismatch, NotEmbedded, NotLagrangian, NotSymplectomorphism
from sympsharp.linalg import Matrix, Subspace, intersect, kernel, rank
from sympsharp.symplectic import (
    POINT,
    LagrangianSubspace,
    SymplecticSpace,
    dual,
    is_isotropic,
    is_lagrangian,
    is_linear_symplectomorphism,
    product,
)


@dataclass(frozen=True)
class LagrangianCorrespondence:
    source: SymplecticSpace
    target: SymplecticSpace
    lagrangian: LagrangianSubspace

    def __post_init__(self):
        if self.lagrangian.space != self.ambient:
            raise NotLagrangian("Lagrangian lives in %s, expected %s"
                                % (self.lagrangian.space.name, self.ambient.name))

    @classmethod
    def from_subspace(cls, source, target, subspace: Subspace) -> "LagrangianCorrespondence":
        return cls(source, target, LagrangianSubspace(product(dual(source), target), subspace))

    @classmethod
    def span(cls, source, target, vectors) -> "LagrangianCorrespondence":
        return cls.from_subspace(source, target, Subspace.span(vectors, source.dim + target.dim))

    @property
    def ambient(self) -> SymplecticSpace:
        return product(dual(self.source), self.target)

    @property
    def subspace(self) -> Subspace:
        return self.lagrangian.subspace

    @property
    def basis(self) -> Matrix:
        return self.subspace.basis

    def source_block(self) -> Matrix:
        return self.basis.row_block(0, self.source.dim)

    def target_block(self) -> Matrix:
        return self.basis.row_block(self.source.dim, self.source.dim + self.target.dim)

    def transpose(self) -> "LagrangianCorrespondence":
        return transpose(self)

    def __repr__(self):
        return "LagrangianCorrespondence(%s -> %s, %r)" % (self.source.name, self.target.name,
                                                          self.subspace)


def diagonal(v: SymplecticSpace) -> LagrangianCorrespondence:
    return graph(v, v, Matrix.identity(v.dim))


def graph(a: SymplecticSpace, b: SymplecticSpace, psi: Matrix) -> LagrangianCorrespondence:
    """The graph ``{(x, psi x)}`` of a linear symplectomorphism ``a -> b``."""
    if not is_linear_symplectomorphism(a, b, psi):
        raise NotSymplectomorphism("map does not pull back the form of %s to %s" % (b.name, a.name))
    return LagrangianCorrespondence.from_subspace(
        a, b, Subspace.span(Matrix.vstack(Matrix.identity(a.dim), psi), a.dim + b.dim))


def transpose(l: LagrangianCorrespondence) -> LagrangianCorrespondence:
    b = l.basis
    swapped = Matrix.vstack(l.target_block(), l.source_block()) if b.rows else b
    return LagrangianCorrespondence.from_subspace(
        l.target, l.source, Subspace.span(swapped, b.rows))


def product_of_lagrangians(l0: LagrangianSubspace, l1: LagrangianSubspace) -> LagrangianCorrespondence:
    """The split correspondence ``l0 x l1`` from ``l0.space`` to ``l1.space``.

    A subspace is Lagrangian in V0 exactly when it is Lagrangian in V0-, so
    ``l0`` may be given in either; its space is taken as the source.
    """
    for l in (l0, l1):
        if not isinstance(l, LagrangianSubspace):
            raise NotLagrangian("expected Lagrangian subspaces")
    basis = Matrix.block_diag(l0.subspace.basis, l1.subspace.basis)
    return LagrangianCorrespondence.from_subspace(
        l0.space, l1.space, Subspace.span(basis, l0.space.dim + l1.space.dim))


def from_point(l: LagrangianSubspace) -> LagrangianCorrespondence:
    """A Lagrangian of M viewed as a correspondence ``pt -> M``."""
    return LagrangianCorrespondence.from_subspace(POINT, l.space, l.subspace)


def _check_composable(l01: LagrangianCorrespondence, l12: LagrangianCorrespondence):
    if l01.target != l12.source:
        raise EndpointMismatch("cannot compose %s -> %s with %s -> %s"
                               % (l01.source.name, l01.target.name, l12.source.name, l12.target.name))


def compose_relations(r01: Subspace, r12: Subspace, d0: int, d1: int, d2: int) -> Subspace:
    """Compose linear relations ``r01 in Q^(d0+d1)`` and ``r12 in Q^(d1+d2)``.

    No Lagrangian or transversality condition is needed.
    """
    if r01.ambient_dim != d0 + d1 or r12.ambient_dim != d1 + d2:
        raise AmbientMismatch("relations do not fit dimensions %d, %d, %d" % (d0, d1, d2))
    k = r01.dim
    coeffs = kernel(Matrix.hstack(r01.basis.row_block(d0, d0 + d1),
                                  -r12.basis.row_block(0, d1))).basis
    a = coeffs.row_block(0, k)
    b = coeffs.row_block(k, coeffs.rows)
    vectors = Matrix.vstack(r01.basis.row_block(0, d0) @ a,
                            r12.basis.row_block(d1, d1 + d2) @ b)
    return Subspace.span(vectors, d0 + d2)


def relation_compose(l01: LagrangianCorrespondence, l12: LagrangianCorrespondence) -> Subspace:
    """The set-theoretic composite ``{(x0, x2) : exists x1, (x0,x1) in l01, (x1,x2) in l12}``.

    Defined without any transversality assumption; the result is an
    isotropic subspace of ``V0- x V2``.
    """
    _check_composable(l01, l12)
    return compose_relations(l01.subspace, l12.subspace,
                             l01.source.dim, l01.target.dim, l12.target.dim)


@dataclass(frozen=True)
class CompositionReport:
    """Outcome of a geometric composition attempt; failures are states, not errors."""

    source: SymplecticSpace
    target: SymplecticSpace
    transverse: bool
    fiber: Subspace
    injective: bool
    composed: Subspace
    composed_is_lagrangian: bool

    @property
    def embedded(self) -> bool:
        return self.transverse and self.injective

    def correspondence(self) -> LagrangianCorrespondence:
        if not self.composed_is_lagrangian:
            raise NotLagrangian("composite of dimension %d is not Lagrangian" % self.composed.dim)
        return LagrangianCorrespondence.from_subspace(self.source, self.target, self.composed)


def _middle_diagonal(d0: int, d1: int, d2: int) -> Subspace:
    """``V0 x Delta_1 x V2`` inside ``V0 x V1 x V1 x V2``."""
    n = d0 + 2 * d1 + d2
    cols = []
    for i in range(d0):
        cols.append([1 if r == i else 0 for r in range(n)])
    for j in range(d1):
        cols.append([1 if r in (d0 + j, d0 + d1 + j) else 0 for r in range(n)])
    for l in range(d2):
        cols.append([1 if r == d0 + 2 * d1 + l else 0 for r in range(n)])
    return Subspace.span(cols, n)


def _projection_02(d0: int, d1: int, d2: int) -> Matrix:
    n = d0 + 2 * d1 + d2
    keep = list(range(d0)) + list(range(d0 + 2 * d1, n))
    return Matrix.from_rows([[1 if c == k else 0 for c in range(n)] for k in keep], n)


def geometric_compose(l01: LagrangianCorrespondence, l12: LagrangianCorrespondence) -> CompositionReport:
    _check_composable(l01, l12)
    d0, d1, d2 = l01.source.dim, l01.target.dim, l12.target.dim
    n = d0 + 2 * d1 + d2
    both = Subspace.span(Matrix.block_diag(l01.basis, l12.basis), n)
    fiber = intersect(both, _middle_diagonal(d0, d1, d2))

    middle = Matrix.hstack(l01.target_block(), -l12.source_block())
    transverse = rank(middle) == d1

    projected = _projection_02(d0, d1, d2) @ fiber.basis
    injective = rank(projected) == fiber.dim
    composed = Subspace.span(projected, d0 + d2)
    lagrangian = is_lagrangian(product(dual(l01.source), l12.target), composed)
    assert injective or not transverse, "transverse composition with non-injective projection"
    return CompositionReport(l01.source, l12.target, transverse, fiber, injective, composed, lagrangian)


def is_embedded(l01: LagrangianCorrespondence, l12: LagrangianCorrespondence) -> bool:
    return geometric_compose(l01, l12).embedded


def compose(l01: LagrangianCorrespondence, l12: LagrangianCorrespondence) -> LagrangianCorrespondence:
    """The embedded geometric composite; raises NotEmbedded otherwise."""
    report = geometric_compose(l01, l12)
    if not report.embedded:
        raise NotEmbedded("composition is not embedded (transverse=%s, injective=%s)"
                          % (report.transverse, report.injective), report)
    return report.correspondence()


def is_isotropic_relation(source: SymplecticSpace, target: SymplecticSpace, s: Subspace) -> bool:
    return is_isotropic(product(dual(source), target), s)
