"""The nine acceptance criteria, each timed against its limit.

Run on its own with ``pytest tests/test_acceptance.py -v``; the PASS/FAIL
lines are printed in the terminal summary.
"""

import io
import random
from pathlib import Path

import sympy

from acceptance_log import criterion
from helpers import to_sympy
from sympsharp.category import GeneralizedCorrespondence as G
from sympsharp.category import Verdict, equivalent, normalize, pi_invariant
from sympsharp.cli import main
from sympsharp.correspondence import (
    compose,
    compose_relations,
    diagonal,
    from_point,
    geometric_compose,
    graph,
    is_isotropic_relation,
    product_of_lagrangians,
    relation_compose,
)
from sympsharp.grading import (
    Degree,
    EndConfiguration,
    FormalGradedMorphism,
    GradedPair,
    degree_shift,
    gluing_sign_second,
    koszul_sign,
    product_compose,
    reorder_sign,
    strip_shrink_shift,
)
from sympsharp.linalg import Matrix
from sympsharp.quilt import (
    glue,
    isomorphic,
    pair_of_pants,
    quilted_cap,
    quilted_cylinder,
    shrink_strip,
    validate,
)
from sympsharp.sampling import random_correspondence, random_sequence, random_symplectic_matrix
from sympsharp.symplectic import POINT, LagrangianSubspace, standard_space

GOLDEN = Path(__file__).parent / "golden"

M = standard_space(1, "M")
R4 = standard_space(2, "R4")
X = LagrangianSubspace.span(M, [[1, 0]])
Y = LagrangianSubspace.span(M, [[0, 1]])


def test_1_graph_functoriality():
    rng = random.Random(101)
    with criterion(1, "graph functoriality", 5):
        count = 0
        for n in (1, 2):
            v0, v1, v2 = (standard_space(n, "V%d" % k) for k in range(3))
            for _ in range(100):
                p01 = random_symplectic_matrix(n, rng)
                p12 = random_symplectic_matrix(n, rng)
                r = geometric_compose(graph(v0, v1, p01), graph(v1, v2, p12))
                assert r.embedded
                assert r.composed == graph(v0, v2, p12 @ p01).subspace
                count += 1
        assert count >= 200


def test_2_diagonal_neutrality():
    rng = random.Random(202)
    spaces = (POINT, M, R4)
    with criterion(2, "diagonal neutrality", 5):
        for _ in range(200):
            a, b = rng.choice(spaces), rng.choice(spaces)
            c = random_correspondence(a, b, rng, split_probability=0.3)
            left = geometric_compose(diagonal(a), c)
            right = geometric_compose(c, diagonal(b))
            assert left.embedded and right.embedded
            assert left.correspondence() == c
            assert right.correspondence() == c


def _oracle_flags(l01, l12):
    """Transversality and a nonzero pi_02 kernel on the fiber, decided by sympy from the two bases."""
    d0, d1 = l01.source.dim, l01.target.dim
    a, b = to_sympy(l01.subspace.basis), to_sympy(l12.subspace.basis)
    a0, a1 = a[:d0, :], a[d0:, :]
    b1, b2 = b[:d1, :], b[d1:, :]
    matching = a1.row_join(-b1)
    transverse = d1 == 0 or matching.rank() == d1
    zero_a = sympy.zeros(a0.rows, b.cols)
    zero_b = sympy.zeros(b2.rows, a.cols)
    stacked = matching.col_join(a0.row_join(zero_a)).col_join(zero_b.row_join(b2))
    kernel_nonzero = stacked.cols > 0 and stacked.rank() < stacked.cols
    return transverse, kernel_nonzero


def test_3_transverse_implies_injective():
    rng = random.Random(303)
    spaces = (POINT, M, R4)
    with criterion(3, "transversality implies injectivity", 10):
        transverse = degenerate = 0
        for _ in range(500):
            a, b, c = (rng.choice(spaces) for _ in range(3))
            l01 = random_correspondence(a, b, rng, split_probability=0.5)
            l12 = random_correspondence(b, c, rng, split_probability=0.5)
            r = geometric_compose(l01, l12)
            t, kernel_nonzero = _oracle_flags(l01, l12)
            assert r.transverse == t
            assert r.injective == (not kernel_nonzero)
            assert not (t and kernel_nonzero)
            transverse += t
            degenerate += not t
        assert transverse >= 50 and degenerate >= 50, (transverse, degenerate)


def test_4_relation_composition():
    rng = random.Random(404)
    spaces = (POINT, M, R4)
    with criterion(4, "relation composition soundness", 10):
        embedded_seen = 0
        for _ in range(200):
            v = [rng.choice(spaces) for _ in range(4)]
            l01, l12, l23 = (random_correspondence(v[k], v[k + 1], rng, split_probability=0.4)
                             for k in range(3))
            d = [s.dim for s in v]
            r01_12 = relation_compose(l01, l12)
            left = compose_relations(r01_12, l23.subspace, d[0], d[2], d[3])
            right = compose_relations(l01.subspace, relation_compose(l12, l23), d[0], d[1], d[3])
            assert left == right
            assert is_isotropic_relation(v[0], v[2], r01_12)
            assert is_isotropic_relation(v[0], v[3], left)
            r = geometric_compose(l01, l12)
            if r.embedded:
                embedded_seen += 1
                assert r.composed == r01_12
                assert 2 * r.composed.dim == d[0] + d[2]
        assert embedded_seen > 0


def test_5_normalizer():
    rng = random.Random(505)
    spaces = (POINT, M, R4)
    xx, xy, yy = product_of_lagrangians(X, X), product_of_lagrangians(X, Y), product_of_lagrangians(Y, Y)
    with criterion(5, "normalizer soundness", 5):
        for _ in range(60):
            path = [rng.choice(spaces) for _ in range(rng.randint(1, 5))]
            s = random_sequence(path, rng)
            nf = normalize(s)
            assert normalize(nf.reduced).reduced == nf.reduced
            assert normalize(nf.reduced).trace == ()
            p = pi_invariant(s)
            for step in nf.trace:
                assert pi_invariant(step.result) == p
        assert equivalent(G.of(xx), G.of(xy)).verdict is Verdict.DISTINCT
        assert equivalent(G.of(xx, yy), G.of(xy)).verdict is Verdict.EQUIVALENT


def test_6_signed_associativity():
    with criterion(6, "signed associativity", 30):
        for n in (2, 4, 8):
            objs = "abcd"
            pairs = [{(a, b): GradedPair(FormalGradedMorphism("f%d" % k, Degree(a, n), objs[k], objs[k + 1]),
                                         FormalGradedMorphism("g%d" % k, Degree(b, n), objs[k], objs[k + 1]))
                      for a in range(n) for b in range(n)} for k in range(3)]
            tail = {(k1, k2): product_compose(p1, p2)
                    for k1, p1 in pairs[1].items() for k2, p2 in pairs[2].items()}
            checked = 0
            for (f0, g0), p0 in pairs[0].items():
                for (f1, g1), p1 in pairs[1].items():
                    head = product_compose(p0, p1)
                    for (f2, g2), p2 in pairs[2].items():
                        left = product_compose(head, p2)
                        right = product_compose(p0, tail[(f1, g1), (f2, g2)])
                        assert left == right
                        # direct expansion of the two Koszul exponents
                        assert left.sign == (-1) ** (f1 * g0 + f2 * (g0 + g1))
                        checked += 1
            assert checked == n ** 6


def test_7_shift_and_sign_tables():
    m, r4 = M, R4
    through_m = G.identity(m)
    through_points = G.identity(POINT)
    through_m_r4 = G.of(random_correspondence(m, r4, random.Random(0)))
    with criterion(7, "shift and sign tables", 1):
        assert degree_shift(through_m, through_m) == 2
        assert degree_shift(through_points, through_points) == 0
        assert degree_shift(through_m_r4, through_m) == 4
        for x3, h, sign in [(0, 1, 1), (1, 1, -1), (2, 1, 1), (2, 7, 1), (3, 2, 1), (3, 3, -1)]:
            assert gluing_sign_second(Degree(x3, 4), h) == sign
        for h1, h2, sign in [(2, 3, 1), (4, 0, 1), (1, 1, -1), (3, 5, -1), (0, 0, 1)]:
            assert reorder_sign(h1, h2) == sign
        for fp, g, sign in [(0, 5, 1), (1, 1, -1), (2, 3, 1)]:
            assert koszul_sign(Degree(fp, 8), Degree(g, 8)) == sign
        table = [(1, EndConfiguration.TWO_OUT, 1), (3, EndConfiguration.IN_OUT, 0),
                 (2, EndConfiguration.TWO_IN, -2), (1, EndConfiguration.IN_OUT, 0),
                 (1, EndConfiguration.TWO_IN, -1), (4, EndConfiguration.TWO_OUT, 4)]
        for n, config, shift in table:
            assert strip_shrink_shift(n, config) == shift
        assert {c.value for c in EndConfiguration} == {1, 0, -1}


def test_8_quilt_calculus():
    m0, m1, m2 = (standard_space(1, "M%d" % k) for k in range(3))
    l0 = from_point(LagrangianSubspace.span(m0, [[1, 0]]))
    l01 = graph(m0, m1, Matrix.from_rows([[1, 1], [0, 1]], 2))
    l12 = graph(m1, m2, Matrix.from_rows([[1, 0], [1, 1]], 2))
    l2 = from_point(LagrangianSubspace.span(m2, [[0, 1]]))
    lx, lz = G.of(from_point(X)), G.of(from_point(LagrangianSubspace.span(M, [[1, 1]])))
    with criterion(8, "quilt calculus", 2):
        strip = quilted_cylinder(G.of(l0, l01, l12), G.of(l2))
        assert validate(strip) == [] and strip.counts() == (3, 2, 2)
        r = shrink_strip(strip, "Q1_2")
        assert validate(r.quilt) == []
        assert r.seam.label == compose(l01, l12)
        assert r.seam.label.subspace == relation_compose(l01, l12)
        assert r.shift == strip_shrink_shift(1, EndConfiguration.IN_OUT) == 0
        assert r.quilt.counts() == (2, 1, 2)
        assert isomorphic(r.quilt, quilted_cylinder(G.of(l0, compose(l01, l12)), G.of(l2)))

        cap, pants = quilted_cap(lx), pair_of_pants(lx, lx, lz)
        glued = glue(cap, "out", pants, "in1")
        assert validate(glued) == []
        assert len(glued.ends) == 2 == len(cap.ends) + len(pants.ends) - 2
        assert isomorphic(glued, quilted_cylinder(lx, lz))


def test_9_cli_golden_files():
    scripts = sorted(GOLDEN.glob("*.sym"))
    with criterion(9, "CLI golden files", 5):
        assert len(scripts) >= 10
        for path in scripts:
            runs = []
            for _ in range(2):
                out = io.StringIO()
                code = main(["--script", str(path), "--format", "machine"], stdout=out, stderr=io.StringIO())
                assert code == 0
                runs.append(out.getvalue())
            assert runs[0] == runs[1] == path.with_suffix(".out").read_text(), path.name


def test_all_criteria_listed():
    names = [n for n in globals() if n.startswith("test_") and n[5].isdigit()]
    assert sorted(int(n.split("_")[1]) for n in names) == list(range(1, 10))


if __name__ == "__main__":
    import sys

    import pytest

    sys.exit(pytest.main([__file__, "-q"]))
