"""
Degrees, shifts and signs
=========================

Z_N degrees, the shift of a morphism space, and the Koszul sign of the
product category checked on every degree triple in Z_4.
"""

import itertools

from sympsharp import (
    Degree,
    EndConfiguration,
    FormalGradedMorphism,
    GeneralizedCorrespondence,
    GradedPair,
    degree_shift,
    product_compose,
    standard_space,
    strip_shrink_shift,
)

M = standard_space(1, "M")
s = GeneralizedCorrespondence.identity(M)
print("shift between two sequences through M:", degree_shift(s, s))

for config in EndConfiguration:
    print("%-8s shrinking a 2n = 4 strip shifts by %d" % (config.name, strip_shrink_shift(2, config)))


def pair(k, a, b, n=4):
    ends = "abcd"
    return GradedPair(FormalGradedMorphism("f%d" % k, Degree(a, n), ends[k], ends[k + 1]),
                      FormalGradedMorphism("g%d" % k, Degree(b, n), ends[k], ends[k + 1]))


bad = 0
for d in itertools.product(range(4), repeat=6):
    p = [pair(k, d[2 * k], d[2 * k + 1]) for k in range(3)]
    left = product_compose(product_compose(p[0], p[1]), p[2])
    right = product_compose(p[0], product_compose(p[1], p[2]))
    bad += left != right
print("associativity failures over Z_4:", bad)
