import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import M, R4, lagrangians, subspace_pairs
from sympsharp.errors import AmbientMismatch, NotLagrangian, NotSymplectic, ShapeMismatch
from sympsharp.linalg import Matrix, Subspace, is_subspace_of, rank
from sympsharp.sampling import random_symplectic_matrix
from sympsharp.symplectic import (
    POINT,
    LagrangianSubspace,
    SymplecticSpace,
    dual,
    is_coisotropic,
    is_isotropic,
    is_lagrangian,
    is_linear_symplectomorphism,
    product,
    some_lagrangian,
    standard_space,
    symplectic_complement,
)


def span(*vectors):
    return Subspace.span(list(vectors), len(vectors[0]))


class TestSpaces:
    def test_standard_plane(self):
        assert standard_space(1, "V").form.tolist() == [[0, 1], [-1, 0]]

    def test_point(self):
        p = standard_space(0, "pt")
        assert p.dim == 0 and p.form.shape == (0, 0) and p.is_point

    def test_four_dimensional(self):
        v = standard_space(2, "V")
        assert v.form.T == -v.form and rank(v.form) == 4

    def test_rejects_odd(self):
        with pytest.raises(NotSymplectic):
            SymplecticSpace(1, Matrix.zeros(1, 1), "odd")

    def test_rejects_symmetric(self):
        with pytest.raises(NotSymplectic):
            SymplecticSpace(2, Matrix.identity(2), "sym")

    def test_rejects_degenerate(self):
        with pytest.raises(NotSymplectic):
            SymplecticSpace(2, Matrix.zeros(2, 2), "zero")

    def test_dual_involution(self):
        assert dual(dual(M)).form == M.form
        assert dual(M).form.tolist() == [[0, -1], [1, 0]]
        assert dual(POINT) == POINT
        assert dual(M).name == "M-"

    def test_product(self):
        assert product(M, POINT) == M
        assert product(POINT, M) == M
        p = product(dual(M), M)
        assert p.dim == 4
        assert p.form == Matrix.block_diag(-M.form, M.form)
        assert rank(p.form) == rank(M.form) * 2


class TestLagrangians:
    def test_axis(self):
        assert is_lagrangian(M, span((1, 0)))

    def test_diagonal(self):
        assert is_lagrangian(product(dual(M), M), span((1, 0, 1, 0), (0, 1, 0, 1)))

    def test_wrong_dimension(self):
        assert not is_lagrangian(R4, span((1, 0, 0, 0)))

    def test_ambient_checked(self):
        with pytest.raises(AmbientMismatch):
            is_lagrangian(M, span((1, 0, 0)))

    def test_isotropic(self):
        assert is_isotropic(R4, Subspace.zero(4))
        assert not is_isotropic(R4, Subspace.full(4))
        assert is_isotropic(product(dual(M), M), span((1, 0, 0, 0), (0, 0, 1, 0)))

    def test_complements(self):
        assert symplectic_complement(R4, Subspace.zero(4)) == Subspace.full(4)
        x = span((1, 0, 0, 0))
        c = symplectic_complement(R4, x)
        assert c.dim == 3 and is_subspace_of(x, c)
        assert is_coisotropic(R4, c)
        lag = span((1, 0, 0, 0), (0, 1, 0, 0))
        assert symplectic_complement(R4, lag) == lag

    def test_lagrangian_type(self):
        with pytest.raises(NotLagrangian):
            LagrangianSubspace.span(R4, [[1, 0, 0, 0]])

    def test_some_lagrangian(self):
        for v in (POINT, M, R4, product(dual(R4), M)):
            assert is_lagrangian(v, some_lagrangian(v))

    @given(lagrangians())
    def test_complement_of_lagrangian(self, l):
        assert symplectic_complement(l.space, l.subspace) == l.subspace

    @given(subspace_pairs(max_dim=4))
    def test_lagrangian_iff_self_complementary(self, pair):
        s, _ = pair
        if s.ambient_dim % 2:
            return
        v = standard_space(s.ambient_dim // 2, "V")
        assert is_lagrangian(v, s) == (symplectic_complement(v, s) == s)

    @given(subspace_pairs(max_dim=4))
    def test_complement_dimension(self, pair):
        s, _ = pair
        if s.ambient_dim % 2:
            return
        v = standard_space(s.ambient_dim // 2, "V")
        assert symplectic_complement(v, s).dim == v.dim - s.dim


class TestSymplectomorphisms:
    def test_identity(self):
        assert is_linear_symplectomorphism(M, M, Matrix.identity(2))

    def test_squeeze(self):
        assert is_linear_symplectomorphism(M, M, Matrix.from_rows([[2, 0], [0, Fraction(1, 2)]]))

    def test_dilation(self):
        assert not is_linear_symplectomorphism(M, M, Matrix.from_rows([[2, 0], [0, 2]]))

    def test_shape(self):
        with pytest.raises(ShapeMismatch):
            is_linear_symplectomorphism(M, R4, Matrix.identity(2))

    def test_different_dimensions(self):
        assert not is_linear_symplectomorphism(M, R4, Matrix.zeros(4, 2))

    @given(st.integers(1, 2), st.integers(0, 2 ** 32))
    def test_random_generators(self, n, seed):
        v = standard_space(n, "V")
        m = random_symplectic_matrix(n, random.Random(seed))
        assert is_linear_symplectomorphism(v, v, m)
