"""Execute parsed scripts and render their reports."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

from sympsharp.category import check_axioms, equivalent, normalize, pi_invariant
from sympsharp.correspondence import geometric_compose, is_isotropic_relation, relation_compose
from sympsharp.dsl import Binding, Command, Declaration, QuiltRef, Script, dump_one
from sympsharp.errors import NotEmbedded, SympError
from sympsharp.formatting import fmt_bool, fmt_correspondence, fmt_sequence, fmt_subspace
from sympsharp.grading import (
    EndConfiguration,
    GradingContext,
    degree_shift,
    gluing_sign_second,
    koszul_sign,
    reorder_sign,
    strip_shrink_shift,
)
from sympsharp.quilt import glue, shrink_strip, validate
from sympsharp.sampling import random_sequence
from sympsharp.symplectic import POINT, dual, is_lagrangian, product, standard_space


@dataclass
class Entry:
    line: int
    col: int
    command: str
    source: str
    fields: list = field(default_factory=list)  # ordered (key, value) pairs
    details: list = field(default_factory=list)  # list of lists of (key, value)
    error: tuple | None = None  # (kind, message)
    summary: str = ""

    def add(self, key, value):
        self.fields.append((key, value))
        return self


@dataclass
class Report:
    entries: list = field(default_factory=list)

    @property
    def errors(self) -> list[Entry]:
        return [e for e in self.entries if e.error is not None]

    def to_machine(self) -> str:
        return "".join(_machine_entry(e) for e in self.entries)

    def to_text(self) -> str:
        return "".join(_text_entry(e) for e in self.entries)


def _value(v) -> str:
    if isinstance(v, bool):
        return fmt_bool(v)
    s = str(v)
    if not s or any(c.isspace() or c in '"=' for c in s):
        return json.dumps(s)
    return s


def _machine_entry(e: Entry) -> str:
    head = "line=%d cmd=%s" % (e.line, e.command)
    if e.error is not None:
        return "%s error=%s message=%s\n" % (head, e.error[0], json.dumps(e.error[1]))
    out = [head + "".join(" %s=%s" % (k, _value(v)) for k, v in e.fields)]
    for k, items in enumerate(e.details):
        out.append("%s item=%d%s" % (head, k, "".join(" %s=%s" % (key, _value(v)) for key, v in items)))
    return "\n".join(out) + "\n"


def _text_value(v) -> str:
    return fmt_bool(v) if isinstance(v, bool) else str(v)


def _text_entry(e: Entry) -> str:
    out = ["[line %d] %s" % (e.line, e.source)]
    if e.error is not None:
        out.append("  error (%s): %s" % e.error)
        return "\n".join(out) + "\n"
    if e.summary:
        out.append("  " + e.summary)
    out.extend("  %s: %s" % (k, _text_value(v)) for k, v in e.fields)
    for k, items in enumerate(e.details):
        out.append("  #%d %s" % (k, ", ".join("%s: %s" % (key, _text_value(v)) for key, v in items)))
    return "\n".join(out) + "\n"


def _compact(s) -> str:
    return fmt_sequence(s).replace(" ", "")


class _Runner:
    def __init__(self, script: Script, seed: int, modulus: int):
        self.script = script
        self.env = dict(script.env)
        self.seed = seed
        self.grading = GradingContext(modulus)

    def quilt(self, ref: QuiltRef):
        b = self.env.get(ref.name)
        if b is None or b.value is None:
            why = b.error if b is not None and b.error else "it was never produced"
            raise LookupError("quilt %s is not available: %s" % (ref.name, why))
        return b.value

    def run(self) -> Report:
        report = Report()
        for d in self.script.diagnostics:
            report.entries.append(Entry(d.line, d.col, d.command, d.source, error=(d.kind, d.message)))
        for item in self.script.items:
            if isinstance(item, Declaration):
                continue
            entry = Entry(item.line, item.col, item.name, item.source)
            try:
                getattr(self, "cmd_" + item.name.replace("-", "_").rstrip("?"))(item, entry)
            except (SympError, LookupError, ValueError) as exc:
                entry.fields, entry.details = [], []
                entry.error = (type(exc).__name__, str(exc))
                if item.bind:
                    self.env[item.bind] = _failed(item.bind, item.line, str(exc))
            report.entries.append(entry)
        report.entries.sort(key=lambda e: e.line)
        return report

    # commands

    def cmd_compose(self, c: Command, e: Entry):
        a, b = c.args
        r = geometric_compose(a, b)
        e.add("source", r.source.name).add("target", r.target.name)
        e.add("transverse", r.transverse).add("injective", r.injective).add("embedded", r.embedded)
        e.add("fiber_dim", r.fiber.dim).add("composed_dim", r.composed.dim)
        e.add("lagrangian", r.composed_is_lagrangian).add("composed", fmt_subspace(r.composed))
        e.summary = "embedded" if r.embedded else "not embedded"

    def cmd_relcompose(self, c: Command, e: Entry):
        a, b = c.args
        s = relation_compose(a, b)
        e.add("source", a.source.name).add("target", b.target.name).add("dim", s.dim)
        e.add("isotropic", is_isotropic_relation(a.source, b.target, s))
        e.add("lagrangian", is_lagrangian(product(dual(a.source), b.target), s))
        e.add("relation", fmt_subspace(s))

    def cmd_embedded(self, c: Command, e: Entry):
        r = geometric_compose(*c.args)
        e.add("embedded", r.embedded).add("transverse", r.transverse).add("injective", r.injective)
        e.add("composed_dim", r.composed.dim)
        e.summary = "embedded: %s; composed dim %d" % (fmt_bool(r.embedded), r.composed.dim)

    def cmd_normalize(self, c: Command, e: Entry):
        nf = normalize(c.args[0])
        e.add("length", len(nf.original)).add("reduced_length", len(nf.reduced)).add("steps", len(nf.trace))
        e.add("reduced", _compact(nf.reduced))
        for k, step in enumerate(nf.trace):
            e.details.append([("step", k + 1), ("index", step.index),
                              ("composed", fmt_correspondence(step.result.steps[step.index])),
                              ("length", len(step.result))])
        e.summary = "reduced length %d after %d step(s)" % (len(nf.reduced), len(nf.trace))

    def cmd_equivalent(self, c: Command, e: Entry):
        v = equivalent(*c.args)
        e.add("verdict", v.verdict.value).add("pi_equal", v.pi_left == v.pi_right)
        e.add("normal_equal", v.normal_left.reduced == v.normal_right.reduced)
        e.add("pi_left", fmt_subspace(v.pi_left)).add("pi_right", fmt_subspace(v.pi_right))
        e.summary = v.verdict.value

    def cmd_pi(self, c: Command, e: Entry):
        s = c.args[0]
        p = pi_invariant(s)
        e.add("source", s.source.name).add("target", s.target.name).add("dim", p.dim)
        e.add("lagrangian", is_lagrangian(product(dual(s.source), s.target), p))
        e.add("relation", fmt_subspace(p))

    def cmd_shift(self, c: Command, e: Entry):
        n = self.grading.modulus
        if c.args[0] == "strip":
            _, half, cfg = c.args
            config = {"two-out": EndConfiguration.TWO_OUT, "in-out": EndConfiguration.IN_OUT,
                      "two-in": EndConfiguration.TWO_IN}[cfg]
            d = strip_shrink_shift(half, config)
            e.add("n", half).add("config", cfg).add("factor", config.value)
        else:
            d = degree_shift(c.args[1], c.args[2])
        e.add("d", d).add("modulus", n).add("d_mod", d % n)
        e.summary = "d = %d" % d

    def cmd_sign(self, c: Command, e: Entry):
        kind, a, b = c.args
        g = self.grading
        if kind == "koszul":
            sign = koszul_sign(g.degree(a), g.degree(b))
        elif kind == "glue":
            sign = gluing_sign_second(g.degree(a), b)
        else:
            sign = reorder_sign(a, b)
        e.add("rule", kind).add("a", a).add("b", b).add("modulus", g.modulus).add("sign", sign)
        e.summary = "sign = %+d" % sign

    def cmd_quilt_validate(self, c: Command, e: Entry):
        q = self.quilt(c.args[0])
        problems = validate(q)
        p, s, n = q.counts()
        e.add("valid", not problems).add("violations", len(problems))
        e.add("patches", p).add("seams", s).add("ends", n)
        for msg in problems:
            e.details.append([("violation", msg)])
        e.summary = "valid" if not problems else "%d violation(s)" % len(problems)

    def _bind(self, c: Command, q):
        if c.bind:
            self.env[c.bind] = Binding("quilt", q, c.line)

    def _describe_quilt(self, e: Entry, q):
        p, s, n = q.counts()
        problems = validate(q)
        e.add("patches", p).add("seams", s).add("ends", n).add("valid", not problems)
        for end in q.ends:
            e.details.append([("end", end.id), ("direction", end.direction.value),
                              ("signature", _compact(end.signature))])

    def cmd_quilt_glue(self, c: Command, e: Entry):
        q1, e1, q2, e2 = c.args
        q = glue(self.quilt(q1), e1, self.quilt(q2), e2)
        self._bind(c, q)
        if c.bind:
            e.add("result", c.bind)
        self._describe_quilt(e, q)

    def cmd_quilt_shrink(self, c: Command, e: Entry):
        ref, pid = c.args
        try:
            r = shrink_strip(self.quilt(ref), pid)
        except NotEmbedded as exc:
            rep = exc.report
            raise NotEmbedded("%s (transverse=%s, injective=%s)"
                              % (exc, fmt_bool(rep.transverse), fmt_bool(rep.injective)), rep) from None
        self._bind(c, r.quilt)
        if c.bind:
            e.add("result", c.bind)
        e.add("shift", r.shift).add("config", r.configuration.name.lower().replace("_", "-"))
        e.add("seam", r.seam.id).add("label", fmt_correspondence(r.seam.label))
        self._describe_quilt(e, r.quilt)
        e.summary = "shift %d" % r.shift

    def cmd_check_axioms(self, c: Command, e: Entry):
        count = c.args[0]
        rng = random.Random(self.seed)
        spaces = [POINT, standard_space(1, "V2"), standard_space(2, "V4")]
        samples = []
        for _ in range(count):
            ends = [rng.choice(spaces) for _ in range(4)]
            seqs = []
            for a, b in zip(ends, ends[1:]):
                path = [a] + [rng.choice(spaces[1:]) for _ in range(rng.randint(0, 1))] + [b]
                if a == b and len(path) == 2 and rng.random() < 0.3:
                    path = [a]
                seqs.append(random_sequence(path, rng))
            samples.append(tuple(seqs))
        r = check_axioms(samples)
        e.add("samples", count).add("seed", self.seed).add("ok", r.ok).add("failures", len(r.failures))
        for law in sorted(r.checked):
            e.details.append([("law", law.replace(" ", "-")), ("checked", r.checked[law]),
                              ("failed", sum(1 for f in r.failures if f.law == law))])
        e.summary = "all laws hold" if r.ok else "%d failure(s)" % len(r.failures)

    def cmd_show(self, c: Command, e: Entry):
        name, value, kind = c.args
        if isinstance(value, QuiltRef):
            value = self.quilt(value)
        text = dump_one(name, value)
        e.add("kind", kind).add("name", name)
        for line in text.splitlines():
            e.details.append([("decl", line)])


def _failed(name: str, line: int, why: str):
    return Binding("quilt", None, line, why)


def run(script: Script, seed: int = 0, modulus: int = 2) -> Report:
    """Run every command of ``script`` in order; engine errors become report entries."""
    return _Runner(script, seed, modulus).run()
