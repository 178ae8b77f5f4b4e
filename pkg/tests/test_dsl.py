import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import M, SPACES, X, Y, correspondences, lagrangians
from sympsharp.category import GeneralizedCorrespondence as G
from sympsharp.correspondence import diagonal, from_point, graph
from sympsharp.dsl import (
    Command,
    ScriptSyntaxError,
    TypeMismatch,
    UnknownName,
    dump,
    parse,
)
from sympsharp.linalg import Matrix
from sympsharp.quilt import isomorphic, pair_of_pants, quilted_cap, quilted_cylinder, validate
from sympsharp.sampling import random_sequence
from sympsharp.symplectic import POINT, LagrangianSubspace, SymplecticSpace, standard_space


class TestDeclarations:
    def test_standard_space(self):
        s = parse("space M0 std 1")
        v = s.value("M0")
        assert v.dim == 2
        assert v == standard_space(1, "M0")

    def test_x_axis(self):
        s = parse("space M0 std 1\nlag X in M0 basis [[1],[0]]")
        assert s.value("X") == LagrangianSubspace.span(s.value("M0"), [[1, 0]])

    def test_wrong_dimension(self):
        with pytest.raises(TypeMismatch) as info:
            parse("space M0 std 1\nlag BAD in M0 basis [[1,0],[0,1]]")
        assert (info.value.line, info.value.kind) == (2, "TypeMismatch")

    def test_not_isotropic(self):
        with pytest.raises(TypeMismatch):
            parse("space R std 2\nlag L in R basis [[1,0],[0,0],[0,1],[0,0]]")

    def test_wrong_ambient_for_corr(self):
        with pytest.raises(TypeMismatch):
            parse("space M std 1\ncorr C : M -> M basis [[1],[0]]")

    def test_rationals(self):
        s = parse("space M std 1\nlag L in M basis [[1/2],[3]]")
        assert s.value("L") == LagrangianSubspace.span(s.value("M"), [[1, 6]])

    def test_dual_and_product(self):
        s = parse("space M std 1\nspace Mm dual M\nspace P prod Mm M")
        assert s.value("P").dim == 4
        assert s.value("Mm").form == -s.value("M").form

    def test_corr_forms(self):
        text = "\n".join([
            "space M std 1",
            "space N std 1",
            "lag X in M basis [[1],[0]]",
            "corr G graph M N [[1,1],[0,1]]",
            "corr D diag M",
            "corr P prod X X",
            "corr T transpose G",
            "seq S = X # D # X^t",
            "seq E = empty M",
        ])
        s = parse(text)
        m, n = s.value("M"), s.value("N")
        assert s.value("G") == graph(m, n, Matrix.from_rows([[1, 1], [0, 1]], 2))
        assert s.value("D") == diagonal(m)
        assert s.value("T") == s.value("G").transpose()
        assert len(s.value("S")) == 3
        assert s.value("E") == G.identity(m)

    def test_comments_and_blank_lines(self):
        s = parse("% header\n\nspace M std 1 % trailing\n")
        assert "M" in s.env

    def test_unknown_name(self):
        with pytest.raises(UnknownName) as info:
            parse("lag X in Nowhere basis [[1],[0]]")
        assert info.value.line == 1 and info.value.col > 1

    def test_syntax_error(self):
        with pytest.raises(ScriptSyntaxError) as info:
            parse("space M std")
        assert info.value.kind == "SyntaxError"
        with pytest.raises(ScriptSyntaxError):
            parse("space M std 1\nfrobnicate M")

    def test_redeclaration(self):
        with pytest.raises(TypeMismatch):
            parse("space M std 1\nspace M std 2")

    def test_unclosed_block(self):
        with pytest.raises(ScriptSyntaxError):
            parse("space M std 1\nquilt Q {\n  patch T M arcs a b\n")

    def test_sequence_endpoint_mismatch(self):
        with pytest.raises(TypeMismatch):
            parse("space M std 1\nspace N std 1\ncorr A graph M N [[1,0],[0,1]]\nseq S = A # A")


class TestLenient:
    def test_failed_declaration_poisons_name(self):
        s = parse("space M std 1\nlag BAD in M basis [[1,0],[0,1]]\nnormalize BAD", strict=False)
        assert [d.line for d in s.diagnostics] == [2, 3]
        assert s.diagnostics[1].command == "normalize"
        assert s.commands == []

    def test_syntax_still_raises(self):
        with pytest.raises(ScriptSyntaxError):
            parse("space M", strict=False)


class TestCommands:
    def test_every_command_parses(self):
        text = "\n".join([
            "space M std 1",
            "lag X in M basis [[1],[0]]",
            "corr D diag M",
            "quilt Q = cap X",
            "compose D D",
            "relcompose D D",
            "embedded? D D",
            "normalize (X # D)",
            "pi X",
            "equivalent? D D",
            "shift D D",
            "shift strip 2 two-in",
            "sign koszul 1 1",
            "quilt-validate Q",
            "quilt-glue Q out Q out as R",
            "quilt-shrink R T",
            "check-axioms",
            "show X",
        ])
        s = parse(text)
        names = [c.name for c in s.commands]
        assert names == ["compose", "relcompose", "embedded?", "normalize", "pi", "equivalent?", "shift",
                         "shift", "sign", "quilt-validate", "quilt-glue", "quilt-shrink", "check-axioms", "show"]
        assert all(isinstance(c, Command) for c in s.commands)
        assert s.commands[-2].args == (20,)

    def test_bad_sign_rule(self):
        with pytest.raises(ScriptSyntaxError):
            parse("sign wobble 1 1")

    def test_quilt_ref_must_be_quilt(self):
        with pytest.raises(TypeMismatch):
            parse("space M std 1\nquilt-validate M")


def roundtrip(objects):
    text = dump(objects)
    s = parse(text)
    return {k: s.value(k) for k in objects}


class TestRoundTrip:
    def test_fixed_objects(self):
        w = SymplecticSpace(2, Matrix.from_rows([[0, 2], [-2, 0]], 2), "W")
        objs = {
            "M": M,
            "W": w,
            "X": X,
            "D": diagonal(M),
            "S": G.of(from_point(X), diagonal(M), from_point(Y).transpose()),
            "E": G.identity(M),
        }
        assert roundtrip(objs) == objs

    def test_quilts(self):
        lx = G.of(from_point(X))
        for q in (pair_of_pants(lx, lx, lx), quilted_cap(lx), quilted_cylinder(lx, G.of(from_point(Y)))):
            back = roundtrip({"Q": q})["Q"]
            assert back == q
            assert validate(back) == [] and isomorphic(back, q)

    def test_names_do_not_clash(self):
        lx = G.of(from_point(X))
        objs = {"C": quilted_cap(lx), "S": lx}
        assert roundtrip(objs) == objs

    @settings(max_examples=40, deadline=None)
    @given(correspondences())
    def test_correspondence(self, c):
        assert roundtrip({"C": c}) == {"C": c}

    @settings(max_examples=30, deadline=None)
    @given(lagrangians(space=M))
    def test_lagrangian(self, l):
        assert roundtrip({"L": l}) == {"L": l}

    @settings(max_examples=30, deadline=None)
    @given(st.lists(st.sampled_from(SPACES), min_size=1, max_size=4), st.integers(0, 2 ** 32))
    def test_sequence(self, path, seed):
        s = random_sequence(path, random.Random(seed))
        assert roundtrip({"S": s}) == {"S": s}


def test_point_is_builtin():
    s = parse("space M std 1\ncorr C : pt -> M basis [[1],[0]]")
    assert s.value("C").source == POINT
