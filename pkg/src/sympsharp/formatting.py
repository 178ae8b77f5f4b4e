"""Deterministic one-line renderings of engine values."""

from __future__ import annotations

from sympsharp.category import GeneralizedCorrespondence
from sympsharp.correspondence import LagrangianCorrespondence
from sympsharp.linalg import Matrix, Subspace, format_rows, format_scalar
from sympsharp.symplectic import SymplecticSpace


def fmt_vector(v) -> str:
    return "(" + ",".join(format_scalar(x) for x in v) + ")"


def fmt_subspace(s: Subspace) -> str:
    """Canonical basis vectors, e.g. ``[(1,0,0,0),(0,0,0,1)]``."""
    return "[" + ",".join(fmt_vector(v) for v in s.vectors()) + "]"


def fmt_matrix(m: Matrix) -> str:
    return format_rows(m)


def fmt_space(v: SymplecticSpace) -> str:
    return v.name


def fmt_correspondence(l: LagrangianCorrespondence) -> str:
    return "%s->%s%s" % (l.source.name, l.target.name, fmt_subspace(l.subspace))


def fmt_sequence(s: GeneralizedCorrespondence) -> str:
    if not s.steps:
        return "<%s>" % s.source.name
    return " # ".join(fmt_correspondence(l) for l in s.steps)


def fmt_bool(b: bool) -> str:
    return "true" if b else "false"
