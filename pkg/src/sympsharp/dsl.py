"""
A small line-oriented language for declaring spaces, Lagrangians,
correspondences, sequences and quilts and running engine commands on them.

Declarations::

    space M std 1                     % standard form on Q^2
    space Mm dual M
    space P prod M N
    space W form [[0,1],[-1,0]]       % any antisymmetric nondegenerate form
    lag X in M basis [[1],[0]]        % columns are basis vectors
    corr C : M -> N basis [[1,0],[0,1],[1,0],[0,1]]
    corr G graph M N [[1,1],[0,1]]
    corr D diag M
    corr XY prod X Y
    corr Ct transpose C
    seq S = X # C # D                 % a Lagrangian X of M stands for pt -> M
    seq E = empty M
    quilt Q = pants L L1 L2           % also cap, cylinder, functor
    quilt R {
      patch A M arcs a1 a2 a3 a4 order 0
      seam s (A.a2,B.b4) label C
      boundary A.a4 label S
      end e out at A.a1 B.b1 signature S # T^t
    }

Anywhere a sequence is expected one may write a name, ``name^t`` for the
transpose, or an inline sequence ``(A # B^t)``.  ``%`` starts a comment.
Commands are listed in :data:`COMMANDS`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Any

from sympsharp.category import GeneralizedCorrespondence, concat
from sympsharp.correspondence import (
    LagrangianCorrespondence,
    diagonal,
    from_point,
    graph,
    product_of_lagrangians,
)
from sympsharp.errors import SympError
from sympsharp.linalg import Matrix, Subspace, format_rows, scalar
from sympsharp.quilt import (
    BoundaryLabel,
    Direction,
    End,
    Patch,
    QuiltedSurface,
    Seam,
    functor_quilt,
    pair_of_pants,
    quilted_cap,
    quilted_cylinder,
)
from sympsharp.symplectic import POINT, LagrangianSubspace, SymplecticSpace, standard_space


class ScriptError(Exception):
    kind = "ScriptError"

    def __init__(self, message: str, line: int, col: int):
        super().__init__(message)
        self.message = message
        self.line = line
        self.col = col

    def __str__(self):
        return "%d:%d: %s: %s" % (self.line, self.col, self.kind, self.message)


class ScriptSyntaxError(ScriptError):
    kind = "SyntaxError"


class UnknownName(ScriptError):
    kind = "UnknownName"


class TypeMismatch(ScriptError):
    kind = "TypeMismatch"


# tokens -----------------------------------------------------------------------------

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<comment>%.*)
  | (?P<quoted>`[^`]+`)
  | (?P<num>-?\d+(?:/\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z0-9_']*(?:-[A-Za-z_][A-Za-z0-9_']*)*\??)
  | (?P<sym>->|[\[\](),:#={}.^])
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str  # name, num, sym, end
    text: str
    line: int
    col: int


def tokenize_line(text: str, line: int) -> list[Token]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ScriptSyntaxError("unexpected character %r" % text[pos], line, pos + 1)
        kind = m.lastgroup
        if kind == "quoted":
            out.append(Token("name", m.group()[1:-1], line, pos + 1))
        elif kind not in ("ws", "comment"):
            out.append(Token(kind, m.group(), line, pos + 1))
        pos = m.end()
    out.append(Token("end", "", line, len(text) + 1))
    return out


_PLAIN_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_']*(?:-[A-Za-z_][A-Za-z0-9_']*)*\Z")


def quote_name(name: str) -> str:
    return name if _PLAIN_NAME.match(name) else "`%s`" % name


class _Cursor:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.i = 0

    @property
    def peek(self) -> Token:
        return self.tokens[self.i]

    def next(self) -> Token:
        t = self.tokens[self.i]
        if t.kind != "end":
            self.i += 1
        return t

    def at(self, text: str) -> bool:
        t = self.peek
        return t.kind in ("sym", "name") and t.text == text

    def accept(self, text: str) -> bool:
        if self.at(text):
            self.next()
            return True
        return False

    def expect(self, text: str) -> Token:
        t = self.peek
        if not self.at(text):
            raise ScriptSyntaxError("expected %r, found %s" % (text, _describe(t)), t.line, t.col)
        return self.next()

    def name(self, what: str = "a name") -> Token:
        t = self.peek
        if t.kind != "name":
            raise ScriptSyntaxError("expected %s, found %s" % (what, _describe(t)), t.line, t.col)
        return self.next()

    def integer(self) -> Token:
        t = self.peek
        if t.kind != "num" or "/" in t.text:
            raise ScriptSyntaxError("expected an integer, found %s" % _describe(t), t.line, t.col)
        return self.next()

    def done(self):
        t = self.peek
        if t.kind != "end":
            raise ScriptSyntaxError("unexpected %s" % _describe(t), t.line, t.col)


def _describe(t: Token) -> str:
    return "end of line" if t.kind == "end" else repr(t.text)


# script model ------------------------------------------------------------------------

@dataclass
class Binding:
    kind: str  # space, lag, corr, seq, quilt
    value: Any
    line: int
    error: str | None = None  # set when the declaration failed (lenient parsing)


@dataclass
class Declaration:
    name: str
    kind: str
    line: int
    col: int
    source: str


@dataclass
class Command:
    name: str
    args: tuple
    line: int
    col: int
    source: str
    bind: str | None = None


@dataclass
class Diagnostic:
    kind: str
    message: str
    line: int
    col: int
    source: str = ""
    command: str = "declare"  # the command word, or "declare" for declarations


@dataclass
class Script:
    items: list = field(default_factory=list)
    env: dict = field(default_factory=dict)
    diagnostics: list = field(default_factory=list)

    @property
    def commands(self) -> list[Command]:
        return [i for i in self.items if isinstance(i, Command)]

    @property
    def declarations(self) -> list[Declaration]:
        return [i for i in self.items if isinstance(i, Declaration)]

    def value(self, name: str):
        return self.env[name].value


@dataclass(frozen=True)
class QuiltRef:
    """A quilt argument, looked up when the command runs (it may be produced by an earlier command)."""

    name: str
    line: int
    col: int


COMMANDS = ("compose", "relcompose", "embedded?", "normalize", "equivalent?", "pi", "shift", "sign",
            "quilt-validate", "quilt-glue", "quilt-shrink", "check-axioms", "show")

_BUILTIN = {"pt": Binding("space", POINT, 0)}


class _Parser:
    def __init__(self, strict: bool):
        self.strict = strict
        self.script = Script(env=dict(_BUILTIN))
        self.current = None  # (name token, kind, source) of the declaration being parsed

    def begin(self, cur: _Cursor, kind: str, what: str, source: str) -> Token:
        tok = cur.name(what)
        self.current = (tok, kind, source)
        return tok

    # lookups

    def lookup(self, tok: Token, *kinds: str) -> Binding:
        b = self.script.env.get(tok.text)
        if b is None:
            raise UnknownName("%s is not declared" % tok.text, tok.line, tok.col)
        if kinds and b.kind not in kinds:
            raise TypeMismatch("%s is a %s, expected %s" % (tok.text, b.kind, " or ".join(kinds)),
                               tok.line, tok.col)
        if b.error is not None:
            raise TypeMismatch("%s was not declared successfully: %s" % (tok.text, b.error), tok.line, tok.col)
        return b

    def space(self, cur: _Cursor) -> SymplecticSpace:
        return self.lookup(cur.name("a space"), "space").value

    def matrix(self, cur: _Cursor) -> Matrix:
        start = cur.expect("[")
        rows = []
        if not cur.at("]"):
            while True:
                cur.expect("[")
                row = []
                if not cur.at("]"):
                    while True:
                        t = cur.peek
                        if t.kind != "num":
                            raise ScriptSyntaxError("expected a number, found %s" % _describe(t), t.line, t.col)
                        cur.next()
                        try:
                            row.append(scalar(t.text))
                        except ZeroDivisionError:
                            raise ScriptSyntaxError("zero denominator", t.line, t.col) from None
                        if not cur.accept(","):
                            break
                cur.expect("]")
                rows.append(row)
                if not cur.accept(","):
                    break
        cur.expect("]")
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise TypeMismatch("matrix rows have different lengths", start.line, start.col)
        return Matrix.from_rows(rows)

    def item(self, cur: _Cursor) -> GeneralizedCorrespondence:
        tok = cur.name("a correspondence, Lagrangian or sequence")
        b = self.lookup(tok, "corr", "lag", "seq")
        if b.kind == "corr":
            s = GeneralizedCorrespondence.of(b.value)
        elif b.kind == "lag":
            s = GeneralizedCorrespondence.of(from_point(b.value))
        else:
            s = b.value
        if cur.accept("^"):
            t = cur.name("t")
            if t.text != "t":
                raise ScriptSyntaxError("only ^t is supported", t.line, t.col)
            s = s.transpose()
        return s

    def chain(self, cur: _Cursor) -> GeneralizedCorrespondence:
        s = self.item(cur)
        while cur.accept("#"):
            t = cur.peek
            nxt = self.item(cur)
            if s.target != nxt.source:
                raise TypeMismatch("sequence reaches %s but the next item starts at %s"
                                   % (s.target.name, nxt.source.name), t.line, t.col)
            s = concat(s, nxt)
        return s

    def operand(self, cur: _Cursor) -> GeneralizedCorrespondence:
        if cur.accept("("):
            s = self.chain(cur)
            cur.expect(")")
            return s
        return self.item(cur)

    def corr_operand(self, cur: _Cursor) -> LagrangianCorrespondence:
        t = cur.peek
        s = self.operand(cur)
        if len(s.steps) != 1:
            raise TypeMismatch("expected a single correspondence, got a sequence of length %d" % len(s.steps),
                               t.line, t.col)
        return s.steps[0]

    def slot(self, cur: _Cursor) -> tuple[str, str]:
        p = cur.name("a patch id")
        cur.expect(".")
        a = cur.name("an arc id")
        return (p.text, a.text)

    # declarations

    def declare(self, name_tok: Token, kind: str, build, source: str, cur: _Cursor | None = None):
        if name_tok.text in self.script.env:
            raise TypeMismatch("%s is already declared" % name_tok.text, name_tok.line, name_tok.col)
        try:
            value = build()
            if cur is not None:
                cur.done()
        except TypeMismatch as exc:
            if self.strict:
                raise
            self.script.diagnostics.append(Diagnostic(exc.kind, exc.message, exc.line, exc.col, source))
            self.script.env[name_tok.text] = Binding(kind, None, name_tok.line, exc.message)
        except SympError as exc:
            err = TypeMismatch(str(exc), name_tok.line, name_tok.col)
            if self.strict:
                raise err from exc
            self.script.diagnostics.append(Diagnostic(err.kind, err.message, err.line, err.col, source))
            self.script.env[name_tok.text] = Binding(kind, None, name_tok.line, err.message)
        else:
            self.script.env[name_tok.text] = Binding(kind, value, name_tok.line)
        self.script.items.append(Declaration(name_tok.text, kind, name_tok.line, name_tok.col, source))

    def decl_space(self, cur: _Cursor, source: str):
        name = self.begin(cur, "space", "a space name", source)
        how = cur.name("std, dual, prod or form")

        def build():
            if how.text == "std":
                n = int(cur.integer().text)
                if n < 0:
                    raise TypeMismatch("negative half-dimension", how.line, how.col)
                return standard_space(n, name.text)
            if how.text == "dual":
                v = self.space(cur)
                return SymplecticSpace(v.dim, -v.form, name.text)
            if how.text == "prod":
                a = self.space(cur)
                b = self.space(cur)
                return SymplecticSpace(a.dim + b.dim, Matrix.block_diag(a.form, b.form), name.text)
            if how.text == "form":
                m = self.matrix(cur)
                return SymplecticSpace(m.rows, m, name.text)
            raise ScriptSyntaxError("unknown space constructor %r" % how.text, how.line, how.col)
        self.declare(name, "space", build, source, cur)

    def decl_lag(self, cur: _Cursor, source: str):
        name = self.begin(cur, "lag", "a Lagrangian name", source)
        cur.expect("in")
        v = self.space(cur)
        cur.expect("basis")
        t = cur.peek
        m = self.matrix(cur)

        def build():
            return _lagrangian(v, m, t)
        self.declare(name, "lag", build, source, cur)

    def decl_corr(self, cur: _Cursor, source: str):
        name = self.begin(cur, "corr", "a correspondence name", source)
        if cur.accept(":"):
            src = self.space(cur)
            cur.expect("->")
            tgt = self.space(cur)
            cur.expect("basis")
            t = cur.peek
            m = self.matrix(cur)

            def build():
                lag = _lagrangian(_ambient(src, tgt), m, t)
                return LagrangianCorrespondence.from_subspace(src, tgt, lag.subspace)
            return self.declare(name, "corr", build, source, cur)
        how = cur.name("graph, diag, prod or transpose")
        if how.text == "graph":
            a = self.space(cur)
            b = self.space(cur)
            t = cur.peek
            m = self.matrix(cur)

            def build():
                if m.shape != (b.dim, a.dim):
                    raise TypeMismatch("graph matrix must be %dx%d" % (b.dim, a.dim), t.line, t.col)
                return graph(a, b, m)
        elif how.text == "diag":
            a = self.space(cur)

            def build():
                return diagonal(a)
        elif how.text == "prod":
            x = self.lookup(cur.name("a Lagrangian"), "lag").value
            y = self.lookup(cur.name("a Lagrangian"), "lag").value

            def build():
                return product_of_lagrangians(x, y)
        elif how.text == "transpose":
            c = self.corr_operand(cur)

            def build():
                return c.transpose()
        else:
            raise ScriptSyntaxError("unknown correspondence constructor %r" % how.text, how.line, how.col)
        self.declare(name, "corr", build, source, cur)

    def decl_seq(self, cur: _Cursor, source: str):
        name = self.begin(cur, "seq", "a sequence name", source)
        cur.expect("=")
        if cur.accept("empty"):
            v = self.space(cur)
            return self.declare(name, "seq", lambda: GeneralizedCorrespondence.identity(v), source, cur)
        holder = {}

        def build():
            holder["s"] = self.chain(cur)
            return holder["s"]
        self.declare(name, "seq", build, source, cur)

    def decl_quilt_builder(self, name: Token, cur: _Cursor, source: str):
        how = cur.name("pants, cap, cylinder or functor")
        if how.text == "pants":
            args = [self.operand(cur) for _ in range(3)]
            build = lambda: pair_of_pants(*args)  # noqa: E731
        elif how.text == "cap":
            a = self.operand(cur)
            build = lambda: quilted_cap(a)  # noqa: E731
        elif how.text == "cylinder":
            a, b = self.operand(cur), self.operand(cur)
            build = lambda: quilted_cylinder(a, b)  # noqa: E731
        elif how.text == "functor":
            c = self.corr_operand(cur)
            a, b = self.operand(cur), self.operand(cur)
            build = lambda: functor_quilt(c, a, b)  # noqa: E731
        else:
            raise ScriptSyntaxError("unknown quilt builder %r" % how.text, how.line, how.col)
        self.declare(name, "quilt", build, source, cur)

    def quilt_block(self, name: Token, lines: list[tuple[int, str]], source: str):
        patches, seams, boundary, ends = [], [], [], []

        def build():
            for lineno, text in lines:
                cur = _Cursor(tokenize_line(text, lineno))
                if cur.peek.kind == "end":
                    continue
                head = cur.name("patch, seam, boundary or end")
                if head.text == "patch":
                    pid = cur.name("a patch id").text
                    v = self.space(cur)
                    cur.expect("arcs")
                    arcs = []
                    while cur.peek.kind == "name" and cur.peek.text != "order":
                        arcs.append(cur.next().text)
                    order = len(patches)
                    if cur.accept("order"):
                        order = int(cur.integer().text)
                    patches.append(Patch(pid, v, tuple(arcs), order))
                elif head.text == "seam":
                    sid = cur.name("a seam id").text
                    cur.expect("(")
                    a = self.slot(cur)
                    cur.expect(",")
                    b = self.slot(cur)
                    cur.expect(")")
                    cur.expect("label")
                    seams.append(Seam(sid, (a, b), self.corr_operand(cur)))
                elif head.text == "boundary":
                    slot = self.slot(cur)
                    cur.expect("label")
                    boundary.append(BoundaryLabel(slot, self.chain(cur)))
                elif head.text == "end":
                    eid = cur.name("an end id").text
                    d = cur.name("in or out")
                    if d.text not in ("in", "out"):
                        raise ScriptSyntaxError("end direction must be in or out", d.line, d.col)
                    cur.expect("at")
                    segs = [self.slot(cur)]
                    while cur.peek.kind == "name" and cur.peek.text != "signature":
                        segs.append(self.slot(cur))
                    cur.expect("signature")
                    ends.append(End(eid, Direction(d.text), tuple(segs), self.chain(cur)))
                else:
                    raise ScriptSyntaxError("unknown quilt item %r" % head.text, head.line, head.col)
                cur.done()
            return QuiltedSurface(tuple(patches), tuple(seams), tuple(boundary), tuple(ends))
        self.declare(name, "quilt", build, source)

    # commands

    def command(self, head: Token, cur: _Cursor, source: str):
        c = head.text
        args: tuple
        bind = None
        if c in ("compose", "relcompose", "embedded?"):
            args = (self.corr_operand(cur), self.corr_operand(cur))
        elif c in ("normalize", "pi"):
            args = (self.operand(cur),)
        elif c == "equivalent?":
            args = (self.operand(cur), self.operand(cur))
        elif c == "shift":
            if cur.accept("strip"):
                n = int(cur.integer().text)
                cfg = cur.name("two-out, in-out or two-in")
                if cfg.text not in ("two-out", "in-out", "two-in"):
                    raise ScriptSyntaxError("unknown end configuration %r" % cfg.text, cfg.line, cfg.col)
                args = ("strip", n, cfg.text)
            else:
                args = ("pair", self.operand(cur), self.operand(cur))
        elif c == "sign":
            kind = cur.name("koszul, glue or reorder")
            if kind.text not in ("koszul", "glue", "reorder"):
                raise ScriptSyntaxError("unknown sign rule %r" % kind.text, kind.line, kind.col)
            args = (kind.text, int(cur.integer().text), int(cur.integer().text))
        elif c == "quilt-validate":
            args = (self.quilt_ref(cur),)
        elif c == "quilt-glue":
            args = (self.quilt_ref(cur), cur.name("an end id").text, self.quilt_ref(cur), cur.name("an end id").text)
            bind = self.binding_target(cur)
        elif c == "quilt-shrink":
            args = (self.quilt_ref(cur), cur.name("a patch id").text)
            bind = self.binding_target(cur)
        elif c == "check-axioms":
            args = (int(cur.integer().text),) if cur.peek.kind == "num" else (20,)
        elif c == "show":
            tok = cur.name()
            b = self.lookup(tok)
            args = (tok.text, QuiltRef(tok.text, tok.line, tok.col) if b.kind == "quilt" else b.value, b.kind)
        else:
            raise ScriptSyntaxError("unknown command %r" % c, head.line, head.col)
        cur.done()
        self.script.items.append(Command(c, args, head.line, head.col, source, bind))

    def quilt_ref(self, cur: _Cursor) -> QuiltRef:
        t = cur.name("a quilt name")
        b = self.script.env.get(t.text)
        if b is None:
            raise UnknownName("%s is not declared" % t.text, t.line, t.col)
        if b.kind != "quilt":
            raise TypeMismatch("%s is a %s, expected quilt" % (t.text, b.kind), t.line, t.col)
        return QuiltRef(t.text, t.line, t.col)

    def binding_target(self, cur: _Cursor) -> str | None:
        if not cur.accept("as"):
            return None
        t = cur.name("a result name")
        if t.text in self.script.env:
            raise TypeMismatch("%s is already declared" % t.text, t.line, t.col)
        self.script.env[t.text] = Binding("quilt", None, t.line, None)
        return t.text

    # driver

    def parse(self, text: str) -> Script:
        lines = text.splitlines()
        i = 0
        while i < len(lines):
            lineno, raw = i + 1, lines[i]
            i += 1
            self.current = None
            try:
                cur = _Cursor(tokenize_line(raw, lineno))
                if cur.peek.kind == "end":
                    continue
                head = cur.name("a declaration or command")
                source = raw.split("%")[0].strip()
                if head.text == "space":
                    self.decl_space(cur, source)
                elif head.text == "lag":
                    self.decl_lag(cur, source)
                elif head.text == "corr":
                    self.decl_corr(cur, source)
                elif head.text == "seq":
                    self.decl_seq(cur, source)
                elif head.text == "quilt":
                    name = self.begin(cur, "quilt", "a quilt name", source)
                    if cur.accept("{"):
                        cur.done()
                        body = []
                        while i < len(lines) and lines[i].split("%")[0].strip() != "}":
                            body.append((i + 1, lines[i]))
                            i += 1
                        if i == len(lines):
                            raise ScriptSyntaxError("quilt block is not closed", name.line, name.col)
                        i += 1
                        self.quilt_block(name, body, source)
                    else:
                        cur.expect("=")
                        self.decl_quilt_builder(name, cur, source)
                else:
                    self.command(head, cur, source)
            except TypeMismatch as exc:
                if self.strict:
                    raise
                word = head.text if head.text in COMMANDS else "declare"
                self.script.diagnostics.append(Diagnostic(exc.kind, exc.message, exc.line, exc.col,
                                                          raw.split("%")[0].strip(), word))
                if self.current is not None and self.current[0].text not in self.script.env:
                    tok, kind, source = self.current
                    self.script.env[tok.text] = Binding(kind, None, tok.line, exc.message)
                    self.script.items.append(Declaration(tok.text, kind, tok.line, tok.col, source))
        return self.script


def _ambient(src: SymplecticSpace, tgt: SymplecticSpace) -> SymplecticSpace:
    from sympsharp.symplectic import dual, product
    return product(dual(src), tgt)


def _lagrangian(v: SymplecticSpace, m: Matrix, at: Token) -> LagrangianSubspace:
    if m.rows != v.dim and not (v.dim == 0 and m.rows == 0):
        raise TypeMismatch("basis vectors have length %d but %s has dimension %d" % (m.rows, v.name, v.dim),
                           at.line, at.col)
    s = Subspace.span(m, v.dim)
    if s.dim != m.cols:
        raise TypeMismatch("basis vectors are linearly dependent", at.line, at.col)
    if 2 * s.dim != v.dim:
        raise TypeMismatch("a Lagrangian in %s needs %d basis vectors, got %d" % (v.name, v.dim // 2, s.dim),
                           at.line, at.col)
    try:
        return LagrangianSubspace(v, s)
    except SympError as exc:
        raise TypeMismatch(str(exc), at.line, at.col) from None


def parse(text: str, strict: bool = True) -> Script:
    """Parse a script.

    Raises ScriptSyntaxError, UnknownName or TypeMismatch with line and
    column.  With ``strict=False`` type mismatches are recorded in
    ``Script.diagnostics`` instead and the offending declaration is marked
    as failed, so that later commands can still run.
    """
    return _Parser(strict).parse(text)


# serialization ---------------------------------------------------------------------------

def _columns(s: Subspace) -> str:
    return format_rows(s.basis)


class _Dumper:
    def __init__(self):
        self.lines: list[str] = []
        self.names: dict = {}  # id-ish key -> name
        self.used: set = {"pt"}
        self.reserved: set = set()  # names asked for explicitly, kept away from invented names

    def fresh(self, base: str) -> str:
        k = 1
        name = base
        while name in self.used or name in self.reserved:
            k += 1
            name = "%s_%d" % (base, k)
        self.used.add(name)
        return name

    def space(self, v: SymplecticSpace) -> str:
        if v == POINT:
            return "pt"
        key = ("space", v)
        if key not in self.names:
            if v.name in self.used:
                raise ValueError("two different spaces are named %s" % v.name)
            self.used.add(v.name)
            self.names[key] = v.name
            if v.form == _std(v):
                self.lines.append("space %s std %d" % (quote_name(v.name), v.half_dim))
            else:
                self.lines.append("space %s form %s" % (quote_name(v.name), format_rows(v.form)))
        return quote_name(self.names[key])

    def _claim(self, key, name: str | None, base: str) -> str | None:
        """The name to declare ``key`` under, or None when it is already declared and no name was asked for."""
        if name is None and key in self.names:
            return None
        name = name if name and name not in self.used else self.fresh(name or base)
        self.used.add(name)
        self.names.setdefault(key, name)
        return name

    def lag(self, l: LagrangianSubspace, name: str | None = None) -> str:
        sp = self.space(l.space)
        new = self._claim(("lag", l), name, "X")
        if new is not None:
            self.lines.append("lag %s in %s basis %s" % (quote_name(new), sp, _columns(l.subspace)))
        return quote_name(new or self.names[("lag", l)])

    def corr(self, c: LagrangianCorrespondence, name: str | None = None) -> str:
        a, b = self.space(c.source), self.space(c.target)
        new = self._claim(("corr", c), name, "C")
        if new is not None:
            self.lines.append("corr %s : %s -> %s basis %s" % (quote_name(new), a, b, _columns(c.subspace)))
        return quote_name(new or self.names[("corr", c)])

    def chain(self, s: GeneralizedCorrespondence) -> str:
        if not s.steps:
            return self.seq(s)
        return " # ".join(self.corr(c) for c in s.steps)

    def seq(self, s: GeneralizedCorrespondence, name: str | None = None) -> str:
        body = self.chain(s) if s.steps else "empty " + self.space(s.source)
        new = self._claim(("seq", s), name, "S")
        if new is not None:
            self.lines.append("seq %s = %s" % (quote_name(new), body))
        return quote_name(new or self.names[("seq", s)])

    def quilt(self, q: QuiltedSurface, name: str) -> str:
        body = []
        for p in q.patches:
            body.append("  patch %s %s arcs %s order %d"
                        % (quote_name(p.id), self.space(p.space), " ".join(map(quote_name, p.arcs)), p.order))
        for s in q.seams:
            (pa, aa), (pb, ab) = s.slots
            body.append("  seam %s (%s.%s,%s.%s) label %s" % (quote_name(s.id), quote_name(pa), quote_name(aa),
                                                              quote_name(pb), quote_name(ab), self.corr(s.label)))
        for b in q.boundary:
            body.append("  boundary %s.%s label %s" % (quote_name(b.arc[0]), quote_name(b.arc[1]),
                                                       self.chain(b.label)))
        for e in q.ends:
            segs = " ".join("%s.%s" % (quote_name(p), quote_name(a)) for p, a in e.segments)
            body.append("  end %s %s at %s signature %s" % (quote_name(e.id), e.direction.value, segs,
                                                            self.chain(e.signature)))
        name = name if name not in self.used else self.fresh(name)
        self.used.add(name)
        self.lines.append("quilt %s {" % quote_name(name))
        self.lines.extend(body)
        self.lines.append("}")
        return name


def _std(v: SymplecticSpace) -> Matrix:
    return standard_space(v.half_dim, v.name).form


def dump(objects: dict) -> str:
    """A script declaring every value in ``objects`` under its key, plus whatever it depends on.

    Values may be spaces, Lagrangian subspaces, correspondences, sequences
    or quilts.  Auxiliary names are invented for anonymous dependencies.
    """
    d = _Dumper()
    d.reserved = set(objects)
    for name, obj in objects.items():
        if isinstance(obj, SymplecticSpace):
            if obj.name != name:
                raise ValueError("space %s must be dumped under its own name" % obj.name)
            d.space(obj)
        elif isinstance(obj, LagrangianSubspace):
            d.lag(obj, name)
        elif isinstance(obj, LagrangianCorrespondence):
            d.corr(obj, name)
        elif isinstance(obj, GeneralizedCorrespondence):
            d.seq(obj, name)
        elif isinstance(obj, QuiltedSurface):
            d.quilt(obj, name)
        else:
            raise TypeError("cannot serialize %r" % (obj,))
    return "\n".join(d.lines) + "\n"


def dump_one(name: str, obj) -> str:
    return dump({name: obj})
