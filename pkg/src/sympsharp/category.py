"""
Sequences of Lagrangian correspondences and their normalization.

A morphism ``M -> M'`` is a sequence of correspondences through any chain
of intermediate spaces.  Two sequences are identified when one is obtained
from the other by replacing an adjacent pair with its embedded geometric
composite.  :func:`normalize` applies such replacements leftmost-first until
none applies; because confluence of the relation is not known, normal forms
are relative to that strategy and :func:`equivalent` may answer UNKNOWN.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from sympsharp.correspondence import (
    CompositionReport,
    compose_relations,
    LagrangianCorrespondence,
    diagonal,
    geometric_compose,
)
from sympsharp.errors import EndpointMismatch
from sympsharp.linalg import Subspace
from sympsharp.symplectic import SymplecticSpace


@dataclass(frozen=True)
class Admissibility:
    """Analytic hypotheses recorded on a sequence but never checked here."""

    monotone: bool = False
    torsion_fundamental_group: bool = False
    minimal_maslov_at_least_three: bool = False

    def __and__(self, other: "Admissibility") -> "Admissibility":
        return Admissibility(self.monotone and other.monotone,
                             self.torsion_fundamental_group and other.torsion_fundamental_group,
                             self.minimal_maslov_at_least_three and other.minimal_maslov_at_least_three)


@dataclass(frozen=True)
class GeneralizedCorrespondence:
    spaces: tuple[SymplecticSpace, ...]
    steps: tuple[LagrangianCorrespondence, ...]
    admissibility: Admissibility = field(default=Admissibility(), compare=False)

    def __post_init__(self):
        if len(self.spaces) != len(self.steps) + 1:
            raise EndpointMismatch("%d steps need %d spaces, got %d"
                                   % (len(self.steps), len(self.steps) + 1, len(self.spaces)))
        for j, step in enumerate(self.steps):
            if step.source != self.spaces[j] or step.target != self.spaces[j + 1]:
                raise EndpointMismatch("step %d runs %s -> %s, expected %s -> %s"
                                       % (j, step.source.name, step.target.name,
                                          self.spaces[j].name, self.spaces[j + 1].name))

    @classmethod
    def of(cls, *steps: LagrangianCorrespondence, admissibility=Admissibility()) -> "GeneralizedCorrespondence":
        if not steps:
            raise ValueError("use GeneralizedCorrespondence.identity for the empty sequence")
        for a, b in zip(steps, steps[1:]):
            if a.target != b.source:
                raise EndpointMismatch("adjacent steps do not match at %s / %s"
                                       % (a.target.name, b.source.name))
        spaces = (steps[0].source,) + tuple(s.target for s in steps)
        return cls(spaces, tuple(steps), admissibility)

    @classmethod
    def identity(cls, space: SymplecticSpace) -> "GeneralizedCorrespondence":
        """The empty sequence at ``space``, a strict identity for concatenation."""
        return cls((space,), ())

    @property
    def source(self) -> SymplecticSpace:
        return self.spaces[0]

    @property
    def target(self) -> SymplecticSpace:
        return self.spaces[-1]

    @property
    def length(self) -> int:
        return len(self.steps)

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def transpose(self) -> "GeneralizedCorrespondence":
        if not self.steps:
            return self
        return GeneralizedCorrespondence.of(*(s.transpose() for s in reversed(self.steps)),
                                            admissibility=self.admissibility)

    def replace_pair(self, j: int, composed: LagrangianCorrespondence) -> "GeneralizedCorrespondence":
        """Replace steps j, j+1 by ``composed``, dropping the space between them."""
        return GeneralizedCorrespondence(self.spaces[:j + 1] + self.spaces[j + 2:],
                                         self.steps[:j] + (composed,) + self.steps[j + 2:],
                                         self.admissibility)


def as_sequence(x) -> GeneralizedCorrespondence:
    if isinstance(x, GeneralizedCorrespondence):
        return x
    if isinstance(x, LagrangianCorrespondence):
        return GeneralizedCorrespondence.of(x)
    raise TypeError("cannot view %r as a sequence" % (x,))


def concat(s: GeneralizedCorrespondence, t: GeneralizedCorrespondence) -> GeneralizedCorrespondence:
    if s.target != t.source:
        raise EndpointMismatch("sequence ends at %s but the next starts at %s"
                               % (s.target.name, t.source.name))
    return GeneralizedCorrespondence(s.spaces + t.spaces[1:], s.steps + t.steps,
                                     s.admissibility & t.admissibility)


@dataclass(frozen=True)
class ReductionStep:
    index: int
    left: LagrangianCorrespondence
    right: LagrangianCorrespondence
    report: CompositionReport
    result: GeneralizedCorrespondence


@dataclass(frozen=True)
class NormalForm:
    original: GeneralizedCorrespondence
    reduced: GeneralizedCorrespondence
    trace: tuple[ReductionStep, ...]


def _first_reduction(s: GeneralizedCorrespondence):
    for j in range(len(s.steps) - 1):
        report = geometric_compose(s.steps[j], s.steps[j + 1])
        if report.embedded:
            return j, report
    return None


def normalize(s: GeneralizedCorrespondence) -> NormalForm:
    current = s
    trace = []
    while True:
        found = _first_reduction(current)
        if found is None:
            return NormalForm(s, current, tuple(trace))
        j, report = found
        nxt = current.replace_pair(j, report.correspondence())
        trace.append(ReductionStep(j, current.steps[j], current.steps[j + 1], report, nxt))
        current = nxt


def pi_invariant(s: GeneralizedCorrespondence) -> Subspace:
    """The composite relation of all steps, an isotropic subspace of ``N0- x Nr``.

    The empty sequence gives the diagonal of its single space.
    """
    if not s.steps:
        return diagonal(s.source).subspace
    rel = s.steps[0].subspace
    for step in s.steps[1:]:
        rel = compose_relations(rel, step.subspace, s.source.dim, step.source.dim, step.target.dim)
    return rel


class Verdict(enum.Enum):
    EQUIVALENT = "equivalent"
    DISTINCT = "distinct"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class EquivalenceVerdict:
    verdict: Verdict
    pi_left: Subspace
    pi_right: Subspace
    normal_left: NormalForm
    normal_right: NormalForm


def equivalent(s: GeneralizedCorrespondence, t: GeneralizedCorrespondence) -> EquivalenceVerdict:
    if s.source != t.source or s.target != t.target:
        raise EndpointMismatch("sequences %s -> %s and %s -> %s are not parallel"
                               % (s.source.name, s.target.name, t.source.name, t.target.name))
    ps, pt = pi_invariant(s), pi_invariant(t)
    ns, nt = normalize(s), normalize(t)
    if ps != pt:
        verdict = Verdict.DISTINCT
    elif ns.reduced == nt.reduced:
        verdict = Verdict.EQUIVALENT
    else:
        verdict = Verdict.UNKNOWN
    return EquivalenceVerdict(verdict, ps, pt, ns, nt)


@dataclass(frozen=True)
class AxiomFailure:
    law: str
    witness: tuple


@dataclass
class AxiomReport:
    checked: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def _record(self, law: str, passed: bool, witness: tuple):
        self.checked[law] = self.checked.get(law, 0) + 1
        if not passed:
            self.failures.append(AxiomFailure(law, witness))


def check_axioms(samples: Iterable[Sequence[GeneralizedCorrespondence]]) -> AxiomReport:
    """Check the category laws on composable triples ``(a, b, c)``.

    Laws: associativity of concatenation, the empty sequence as a strict
    two-sided identity, and the diagonal as an identity up to normalization.
    The diagonal law is only checked on nonempty sequences: ``(Delta)`` and
    the empty sequence are different normal forms of the same class.
    """
    report = AxiomReport()
    for a, b, c in samples:
        left = concat(concat(a, b), c)
        right = concat(a, concat(b, c))
        report._record("associativity", left == right, (a, b, c))
        for s in (a, b, c):
            report._record("left identity", concat(GeneralizedCorrespondence.identity(s.source), s) == s, (s,))
            report._record("right identity", concat(s, GeneralizedCorrespondence.identity(s.target)) == s, (s,))
            if not s.steps:
                continue
            base = normalize(s).reduced
            with_right = normalize(concat(s, as_sequence(diagonal(s.target)))).reduced
            with_left = normalize(concat(as_sequence(diagonal(s.source)), s)).reduced
            report._record("diagonal right identity", with_right == base, (s,))
            report._record("diagonal left identity", with_left == base, (s,))
    return report
