"""
Lagrangian subspaces and graphs
===============================

Build a plane, a few Lagrangian lines, and compose graphs of
symplectic maps exactly over the rationals.
"""

from sympsharp import LagrangianSubspace, Matrix, graph, geometric_compose, is_lagrangian, standard_space
from sympsharp.formatting import fmt_subspace

# the standard plane with coordinates (x, y)
M = standard_space(1, "M")
X = LagrangianSubspace.span(M, [[1, 0]])
print("x-axis:", fmt_subspace(X.subspace))

# every line in a plane is Lagrangian
print("is (1, 3) Lagrangian?", is_lagrangian(M, LagrangianSubspace.span(M, [[1, 3]]).subspace))

# two shears and their graphs
shear = Matrix.from_rows([[1, 1], [0, 1]], 2)
lower = Matrix.from_rows([[1, 0], [1, 1]], 2)
g1 = graph(M, M, shear)
g2 = graph(M, M, lower)

# composing graphs is always embedded and gives the graph of the product
r = geometric_compose(g1, g2)
print("embedded:", r.embedded)
print("composed:", fmt_subspace(r.composed))
print("graph of lower @ shear:", fmt_subspace(graph(M, M, lower @ shear).subspace))
