"""
When geometric composition fails
================================

Split correspondences X x Y compose nicely only when the middle
Lagrangians are transverse.  The report says why.
"""

from sympsharp import LagrangianSubspace, geometric_compose, product_of_lagrangians, relation_compose, standard_space
from sympsharp.formatting import fmt_subspace

M = standard_space(1, "M")
X = LagrangianSubspace.span(M, [[1, 0]])
Y = LagrangianSubspace.span(M, [[0, 1]])
XX = product_of_lagrangians(X, X)
YY = product_of_lagrangians(Y, Y)

for name, a, b in [("XX then YY", XX, YY), ("XX then XX", XX, XX)]:
    r = geometric_compose(a, b)
    print(name)
    print("  transverse:", r.transverse, " injective:", r.injective, " fiber dim:", r.fiber.dim)
    print("  composed:", fmt_subspace(r.composed))

# the set-theoretic composite exists either way
print("relation XX o XX:", fmt_subspace(relation_compose(XX, XX)))
