"""
Z_N gradings, degree shifts and the sign rules for composing graded morphisms.

Signs are exponents of -1 evaluated on the canonical representatives
0..N-1 of each degree.  N is always even, so the parity of a product of
degrees does not depend on the representatives chosen.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from sympsharp.category import GeneralizedCorrespondence
from sympsharp.errors import NotComposable


@dataclass(frozen=True)
class GradingContext:
    modulus: int = 2

    def __post_init__(self):
        if self.modulus < 2 or self.modulus % 2:
            raise ValueError("grading modulus must be even and at least 2, got %r" % self.modulus)

    def degree(self, value: int) -> "Degree":
        return Degree(value % self.modulus, self.modulus)


@dataclass(frozen=True)
class Degree:
    value: int
    modulus: int = 2

    def __post_init__(self):
        if self.modulus < 2 or self.modulus % 2:
            raise ValueError("grading modulus must be even and at least 2, got %r" % self.modulus)
        if not 0 <= self.value < self.modulus:
            object.__setattr__(self, "value", self.value % self.modulus)

    def __add__(self, other: "Degree") -> "Degree":
        if self.modulus != other.modulus:
            raise ValueError("degrees in Z_%d and Z_%d" % (self.modulus, other.modulus))
        return Degree((self.value + other.value) % self.modulus, self.modulus)

    def __int__(self):
        return self.value


def _rep(d) -> int:
    return d.value if isinstance(d, Degree) else int(d)


def sign_power(exponent: int) -> int:
    return -1 if exponent % 2 else 1


def half_dimension_sum(s: GeneralizedCorrespondence) -> int:
    """Half the total dimension of every space listed in ``s``, endpoints included."""
    total = sum(n.dim for n in s.spaces)
    assert total % 2 == 0
    return total // 2


def degree_shift(s: GeneralizedCorrespondence, t: GeneralizedCorrespondence) -> int:
    """The shift ``d = (sum dim N_k + sum dim N'_k) / 2`` of the morphism space from s to t."""
    return half_dimension_sum(s) + half_dimension_sum(t)


def koszul_sign(deg_f_prime, deg_g) -> int:
    """``(-1)^(|f'| |g|)`` for the product-category rule (f,g)(f',g') = +-(ff', gg')."""
    return sign_power(_rep(deg_f_prime) * _rep(deg_g))


def gluing_sign_second(deg_x3, half_dims_1: int) -> int:
    """Sign of the gluing to the first incoming end in the associativity argument."""
    return sign_power(_rep(deg_x3) * half_dims_1)


def reorder_sign(half_dims_1: int, half_dims_2: int) -> int:
    """Sign relating the two patch orderings induced by the two gluings."""
    return sign_power(half_dims_1 * half_dims_2)


class EndConfiguration(enum.Enum):
    TWO_OUT = 1
    IN_OUT = 0
    TWO_IN = -1


def strip_shrink_shift(n_patch: int, end_config: EndConfiguration) -> int:
    """Degree shift ``n * d`` picked up when a strip of dimension 2n is shrunk.

    d is +1, 0 or -1 for a strip with two outgoing ends, one of each, or
    two incoming ends.
    """
    return n_patch * EndConfiguration(end_config).value


@dataclass(frozen=True)
class FormalGradedMorphism:
    """A named graded morphism between two objects; only its degree is meaningful here."""

    symbol: str
    degree: Degree
    source: object = None
    target: object = None


def compose_formal(f: FormalGradedMorphism, g: FormalGradedMorphism) -> FormalGradedMorphism:
    """``f`` followed by ``g`` (so ``f: a -> b``, ``g: b -> c``)."""
    if f.target != g.source:
        raise NotComposable("%s ends at %r but %s starts at %r" % (f.symbol, f.target, g.symbol, g.source))
    return FormalGradedMorphism("%s;%s" % (f.symbol, g.symbol), f.degree + g.degree, f.source, g.target)


@dataclass(frozen=True)
class GradedPair:
    """A signed morphism ``sign * (f, g)`` of the product of two graded categories."""

    first: FormalGradedMorphism
    second: FormalGradedMorphism
    sign: int = 1


def product_compose(p: GradedPair, q: GradedPair) -> GradedPair:
    sign = p.sign * q.sign * koszul_sign(q.first.degree, p.second.degree)
    return GradedPair(compose_formal(p.first, q.first), compose_formal(p.second, q.second), sign)
