"""
Quilted surfaces
================

Glue a cap into a pair of pants, then shrink a strip patch of a
quilted cylinder into a single seam.
"""

from sympsharp import (
    GeneralizedCorrespondence,
    LagrangianSubspace,
    Matrix,
    from_point,
    glue,
    graph,
    isomorphic,
    pair_of_pants,
    quilted_cap,
    quilted_cylinder,
    shrink_strip,
    standard_space,
    validate,
)
from sympsharp.formatting import fmt_correspondence, fmt_sequence

G = GeneralizedCorrespondence
M = standard_space(1, "M")
lx = G.of(from_point(LagrangianSubspace.span(M, [[1, 0]])))
lz = G.of(from_point(LagrangianSubspace.span(M, [[1, 1]])))

cap = quilted_cap(lx)
pants = pair_of_pants(lx, lx, lz)
for e in pants.ends:
    print("pants end %-3s %-3s %s" % (e.id, e.direction.value, fmt_sequence(e.signature)))

# capping one input leaves a cylinder
q = glue(cap, "out", pants, "in1")
print("glued counts (patches, seams, ends):", q.counts(), "valid:", not validate(q))
print("same as a cylinder:", isomorphic(q, quilted_cylinder(lx, lz)))

# a strip M0 | M1 | M2 with graph seams
M0, M1, M2 = (standard_space(1, "M%d" % k) for k in range(3))
L0 = from_point(LagrangianSubspace.span(M0, [[1, 0]]))
L01 = graph(M0, M1, Matrix.from_rows([[1, 1], [0, 1]], 2))
L12 = graph(M1, M2, Matrix.from_rows([[1, 0], [1, 1]], 2))
L2 = from_point(LagrangianSubspace.span(M2, [[0, 1]]))
strip = quilted_cylinder(G.of(L0, L01, L12), G.of(L2))
print("before:", strip.counts())

r = shrink_strip(strip, "Q1_2")
print("after: ", r.quilt.counts(), "shift", r.shift)
print("new seam", r.seam.id, fmt_correspondence(r.seam.label))
