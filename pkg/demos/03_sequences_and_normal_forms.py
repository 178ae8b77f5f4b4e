"""
Sequences of correspondences
============================

Morphisms are sequences.  Embedded neighbours are merged step by step;
the composite relation is an invariant that can tell sequences apart.
"""

from sympsharp import (
    GeneralizedCorrespondence,
    LagrangianSubspace,
    diagonal,
    equivalent,
    from_point,
    normalize,
    pi_invariant,
    product_of_lagrangians,
    standard_space,
)
from sympsharp.formatting import fmt_correspondence, fmt_sequence, fmt_subspace

M = standard_space(1, "M")
X = LagrangianSubspace.span(M, [[1, 0]])
Y = LagrangianSubspace.span(M, [[0, 1]])
XX, XY, YY = (product_of_lagrangians(a, b) for a, b in [(X, X), (X, Y), (Y, Y)])

s = GeneralizedCorrespondence.of(from_point(X), diagonal(M), from_point(X).transpose())
nf = normalize(s)
print("start:  ", fmt_sequence(s))
for step in nf.trace:
    print("merge %d:" % step.index, fmt_correspondence(step.result.steps[step.index]))
print("reduced:", fmt_sequence(nf.reduced))

# X x X and X x Y have different composite relations
print(equivalent(GeneralizedCorrespondence.of(XX), GeneralizedCorrespondence.of(XY)).verdict)
# (X x X, Y x Y) collapses to X x Y
print(equivalent(GeneralizedCorrespondence.of(XX, YY), GeneralizedCorrespondence.of(XY)).verdict)
# equal invariants but no common normal form
v = equivalent(GeneralizedCorrespondence.of(XX, XX), GeneralizedCorrespondence.of(XX, XX, XX))
print(v.verdict, fmt_subspace(pi_invariant(GeneralizedCorrespondence.of(XX, XX))))
