"""
Combinatorial quilted surfaces.

A quilt is a set of disk-like patches.  Each patch is labelled by a
symplectic space and has a cyclic sequence of boundary arcs; every arc is
covered by exactly one of

* a seam slot (the arc is glued to an arc of another patch and the seam
  carries a Lagrangian correspondence from the first slot's space to the
  second slot's space),
* a boundary label (a sequence of correspondences starting at the point),
* a segment of a strip-like end.

Ends are crossed patch by patch.  Orientation convention: at an outgoing
end arc, the arc *preceding* it in its patch's cycle is the side the
crossing comes from and the following arc the side it leaves by; at an
incoming end arc the roles are swapped.  With this convention the label
sequence read along an end (its signature) is determined by the quilt, and
gluing an outgoing end to an incoming end with the same signature splices
the patch cycles consistently.

Nothing analytic is modelled: no complex structures, widths or
perturbations.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field, replace
from typing import Sequence

from sympsharp.category import GeneralizedCorrespondence, concat
from sympsharp.correspondence import LagrangianCorrespondence, geometric_compose
from sympsharp.errors import (
    DirectionMismatch,
    EndpointMismatch,
    NotAStrip,
    NotEmbedded,
    QuiltError,
    SignatureMismatch,
)
from sympsharp.formatting import fmt_correspondence, fmt_sequence
from sympsharp.grading import EndConfiguration, strip_shrink_shift
from sympsharp.symplectic import SymplecticSpace

Slot = tuple  # (patch id, arc id)


class Direction(enum.Enum):
    IN = "in"
    OUT = "out"


@dataclass(frozen=True)
class Patch:
    id: str
    space: SymplecticSpace
    arcs: tuple[str, ...]
    order: int = 0


@dataclass(frozen=True)
class Seam:
    id: str
    slots: tuple[Slot, Slot]
    label: LagrangianCorrespondence


@dataclass(frozen=True)
class BoundaryLabel:
    arc: Slot
    label: GeneralizedCorrespondence


@dataclass(frozen=True)
class End:
    id: str
    direction: Direction
    segments: tuple[Slot, ...]
    signature: GeneralizedCorrespondence


@dataclass(frozen=True)
class QuiltedSurface:
    patches: tuple[Patch, ...]
    seams: tuple[Seam, ...] = ()
    boundary: tuple[BoundaryLabel, ...] = ()
    ends: tuple[End, ...] = ()

    def patch(self, pid: str) -> Patch:
        for p in self.patches:
            if p.id == pid:
                return p
        raise KeyError(pid)

    def end(self, eid: str) -> End:
        for e in self.ends:
            if e.id == eid:
                return e
        raise KeyError(eid)

    def counts(self) -> tuple[int, int, int]:
        """(patches, seams, ends)"""
        return len(self.patches), len(self.seams), len(self.ends)


# indexing ---------------------------------------------------------------------

@dataclass
class _Index:
    patches: dict
    owner: dict = field(default_factory=dict)  # arc -> patch id
    cover: dict = field(default_factory=dict)  # arc -> list of (kind, obj, position)


def _index(q: QuiltedSurface) -> _Index:
    idx = _Index({p.id: p for p in q.patches})
    for p in q.patches:
        for a in p.arcs:
            idx.owner.setdefault(a, p.id)
            idx.cover.setdefault(a, [])
    for s in q.seams:
        for k, (_, a) in enumerate(s.slots):
            idx.cover.setdefault(a, []).append(("seam", s, k))
    for b in q.boundary:
        idx.cover.setdefault(b.arc[1], []).append(("boundary", b, 0))
    for e in q.ends:
        for k, (_, a) in enumerate(e.segments):
            idx.cover.setdefault(a, []).append(("end", e, k))
    return idx


def _sides(patch: Patch, arc: str, direction: Direction) -> tuple[str, str]:
    """(entry side, exit side) of a crossing through ``arc``."""
    arcs = patch.arcs
    i = arcs.index(arc)
    before, after = arcs[i - 1], arcs[(i + 1) % len(arcs)]
    return (before, after) if direction is Direction.OUT else (after, before)


def oriented_label(seam: Seam, from_slot: Slot) -> LagrangianCorrespondence:
    """The seam label read from the patch of ``from_slot`` to the other patch."""
    if seam.slots[0] == from_slot:
        return seam.label
    if seam.slots[1] == from_slot:
        return seam.label.transpose()
    raise QuiltError("slot %r is not on seam %s" % (from_slot, seam.id))


def _single_cover(idx: _Index, arc: str):
    covers = idx.cover.get(arc, [])
    if len(covers) != 1:
        raise QuiltError("arc %s is covered %d times" % (arc, len(covers)))
    return covers[0]


def _other_slot(seam: Seam, position: int) -> Slot:
    return seam.slots[1 - position]


def end_signature(q: QuiltedSurface, end: End, idx: _Index | None = None) -> GeneralizedCorrespondence:
    """Read the label sequence crossed by ``end`` off the quilt structure."""
    idx = idx or _index(q)
    if not end.segments:
        raise QuiltError("end %s has no segments" % end.id)
    for pid, arc in end.segments:
        if pid not in idx.patches or arc not in idx.patches[pid].arcs:
            raise QuiltError("end %s crosses unknown arc %s.%s" % (end.id, pid, arc))
    sides = [_sides(idx.patches[p], a, end.direction) for p, a in end.segments]
    first_patch = end.segments[0][0]
    kind, obj, pos = _single_cover(idx, sides[0][0])
    steps = []
    cylindrical = False
    if kind == "boundary":
        steps.extend(obj.label.steps)
    elif kind == "seam":
        last_patch = end.segments[-1][0]
        if _other_slot(obj, pos) != (last_patch, sides[-1][1]):
            raise QuiltError("end %s: entry side of %s is a seam that does not close the end"
                             % (end.id, first_patch))
        cylindrical = True
    else:
        raise QuiltError("end %s: entry side of %s is another end" % (end.id, first_patch))

    for k in range(len(end.segments) - 1):
        here, there = end.segments[k][0], end.segments[k + 1][0]
        exit_arc, entry_arc = sides[k][1], sides[k + 1][0]
        kind, obj, pos = _single_cover(idx, exit_arc)
        if kind != "seam" or _other_slot(obj, pos) != (there, entry_arc):
            raise QuiltError("end %s: no seam from %s.%s to %s.%s"
                             % (end.id, here, exit_arc, there, entry_arc))
        steps.append(oriented_label(obj, (here, exit_arc)))

    last_patch, last_exit = end.segments[-1][0], sides[-1][1]
    kind, obj, pos = _single_cover(idx, last_exit)
    if cylindrical:
        if kind != "seam":
            raise QuiltError("end %s does not close up" % end.id)
        steps.append(oriented_label(obj, (last_patch, last_exit)))
    else:
        if kind != "boundary":
            raise QuiltError("end %s: exit side of %s is not a boundary" % (end.id, last_patch))
        steps.extend(obj.label.transpose().steps)
    if not steps:
        raise QuiltError("end %s crosses no labels" % end.id)
    return GeneralizedCorrespondence.of(*steps)


# validation -------------------------------------------------------------------

def validate(q: QuiltedSurface) -> list[str]:
    """All violations of the labelling rules; an empty list means valid."""
    problems = []
    seen_patches = set()
    owner = {}
    for p in q.patches:
        if p.id in seen_patches:
            problems.append("duplicate patch id %s" % p.id)
        seen_patches.add(p.id)
        if len(p.arcs) < 2:
            problems.append("patch %s has fewer than two arcs" % p.id)
        for a in p.arcs:
            if a in owner:
                problems.append("arc %s appears in %s and %s" % (a, owner[a], p.id))
            owner[a] = p.id
    idx = _index(q)

    def check_slot(what, slot):
        pid, arc = slot
        if pid not in idx.patches:
            problems.append("%s refers to unknown patch %s" % (what, pid))
            return False
        if owner.get(arc) != pid:
            problems.append("%s refers to arc %s not on patch %s" % (what, arc, pid))
            return False
        return True

    for s in q.seams:
        ok = all([check_slot("seam %s" % s.id, slot) for slot in s.slots])
        if ok:
            a, b = (idx.patches[slot[0]].space for slot in s.slots)
            if s.label.source != a or s.label.target != b:
                problems.append("seam %s: label runs %s -> %s but patches are %s, %s"
                                % (s.id, s.label.source.name, s.label.target.name, a.name, b.name))
    for b in q.boundary:
        if check_slot("boundary label", b.arc):
            space = idx.patches[b.arc[0]].space
            if not b.label.source.is_point:
                problems.append("boundary label on %s.%s does not start at the point" % b.arc)
            if b.label.target != space:
                problems.append("boundary label on %s.%s ends at %s, patch space is %s"
                                % (b.arc[0], b.arc[1], b.label.target.name, space.name))
    end_ids = set()
    for e in q.ends:
        if e.id in end_ids:
            problems.append("duplicate end id %s" % e.id)
        end_ids.add(e.id)
        if not all([check_slot("end %s" % e.id, slot) for slot in e.segments]):
            continue
    for arc, pid in owner.items():
        n = len(idx.cover.get(arc, []))
        if n != 1:
            problems.append("arc %s.%s is covered %d times" % (pid, arc, n))
    if problems:
        return problems
    for e in q.ends:
        try:
            sig = end_signature(q, e, idx)
        except QuiltError as exc:
            problems.append(str(exc))
            continue
        if sig != e.signature:
            problems.append("end %s: declared signature %s, quilt reads %s"
                            % (e.id, fmt_sequence(e.signature), fmt_sequence(sig)))
    return problems


def is_valid(q: QuiltedSurface) -> bool:
    return not validate(q)


# moves --------------------------------------------------------------------------

class _Work:
    """Mutable scratch copy of a quilt used while performing a move."""

    def __init__(self, q: QuiltedSurface):
        self.cycles = {p.id: list(p.arcs) for p in q.patches}
        self.space = {p.id: p.space for p in q.patches}
        self.order = {p.id: p.order for p in q.patches}
        self.patch_ids = [p.id for p in q.patches]
        self.seams = {s.id: s for s in q.seams}
        self.boundary = {b.arc[1]: b for b in q.boundary}
        self.ends = {e.id: e for e in q.ends}
        self.end_ids = [e.id for e in q.ends]

    def owner(self, arc):
        for pid, cyc in self.cycles.items():
            if arc in cyc:
                return pid
        raise QuiltError("arc %s has no patch" % arc)

    def remap_patches(self, mapping: dict):
        def slot(s):
            return (mapping.get(s[0], s[0]), s[1])
        self.seams = {k: replace(s, slots=(slot(s.slots[0]), slot(s.slots[1]))) for k, s in self.seams.items()}
        self.boundary = {k: replace(b, arc=slot(b.arc)) for k, b in self.boundary.items()}
        self.ends = {k: replace(e, segments=tuple(slot(x) for x in e.segments)) for k, e in self.ends.items()}

    def seam_on(self, arc):
        for s in self.seams.values():
            for k, (_, a) in enumerate(s.slots):
                if a == arc:
                    return s, k
        return None

    def merge_adjacent(self):
        """Fuse consecutive arcs that carry the same boundary label or the same seam."""
        changed = True
        while changed:
            changed = False
            for pid in list(self.cycles):
                cyc = self.cycles[pid]
                n = len(cyc)
                for i in range(n):
                    x, v = cyc[i], cyc[(i + 1) % n]
                    if x == v or n < 3:
                        continue
                    bx, bv = self.boundary.get(x), self.boundary.get(v)
                    if bx is not None and bv is not None and bx.label == bv.label:
                        cyc.remove(v)
                        del self.boundary[v]
                        changed = True
                        break
                    sx, sv = self.seam_on(x), self.seam_on(v)
                    if sx is None or sv is None or sx[0].id == sv[0].id:
                        continue
                    (ox_p, ox_a), (ov_p, ov_a) = _other_slot(*sx), _other_slot(*sv)
                    if ox_p != ov_p or ox_p == pid:
                        continue
                    other = self.cycles[ox_p]
                    j = other.index(ox_a)
                    if other[j - 1] != ov_a or len(other) < 3:
                        continue
                    if oriented_label(sx[0], (pid, x)) != oriented_label(sv[0], (pid, v)):
                        continue
                    cyc.remove(v)
                    other.remove(ov_a)
                    del self.seams[sv[0].id]
                    changed = True
                    break
                if changed:
                    break

    def freeze(self, renumber: bool = True) -> QuiltedSurface:
        pids = [p for p in self.patch_ids if p in self.cycles]
        ranked = sorted(pids, key=lambda p: (self.order[p], pids.index(p)))
        order = {p: (k if renumber else self.order[p]) for k, p in enumerate(ranked)}
        patches = tuple(Patch(p, self.space[p], tuple(self.cycles[p]), order[p]) for p in pids)
        pre = QuiltedSurface(patches, tuple(self.seams.values()), tuple(self.boundary.values()), ())
        idx = _index(QuiltedSurface(patches, pre.seams, pre.boundary, tuple(self.ends.values())))
        ends = []
        for eid in self.end_ids:
            if eid in self.ends:
                e = self.ends[eid]
                ends.append(replace(e, signature=end_signature(pre, e, idx)))
        return QuiltedSurface(patches, pre.seams, pre.boundary, tuple(ends))


def _rename(q: QuiltedSurface, taken_patches, taken_arcs, taken_seams, taken_ends) -> QuiltedSurface:
    """Rename identifiers of ``q`` that clash with the given sets (by priming)."""
    def fresh(x, taken):
        while x in taken:
            x = x + "'"
        return x
    pmap = {p.id: fresh(p.id, taken_patches) for p in q.patches}
    amap = {a: fresh(a, taken_arcs) for p in q.patches for a in p.arcs}
    smap = {s.id: fresh(s.id, taken_seams) for s in q.seams}
    emap = {e.id: fresh(e.id, taken_ends) for e in q.ends}

    def slot(s):
        return (pmap[s[0]], amap.get(s[1], s[1]))
    return QuiltedSurface(
        tuple(Patch(pmap[p.id], p.space, tuple(amap[a] for a in p.arcs), p.order) for p in q.patches),
        tuple(Seam(smap[s.id], (slot(s.slots[0]), slot(s.slots[1])), s.label) for s in q.seams),
        tuple(BoundaryLabel(slot(b.arc), b.label) for b in q.boundary),
        tuple(End(emap[e.id], e.direction, tuple(slot(x) for x in e.segments), e.signature) for e in q.ends),
    )


def _resolve_end(q: QuiltedSurface, e) -> End:
    if isinstance(e, End):
        e = e.id
    try:
        return q.end(e)
    except KeyError:
        raise QuiltError("no end %r" % (e,)) from None


def glue(q1: QuiltedSurface, e_out, q2: QuiltedSurface, e_in) -> QuiltedSurface:
    """Glue outgoing end ``e_out`` of ``q1`` to incoming end ``e_in`` of ``q2``.

    Patches crossed at the same position are merged; consecutive arcs that
    end up carrying the same label are fused.  Identifiers of ``q2`` that
    clash with ``q1`` are primed.
    """
    out = _resolve_end(q1, e_out)
    inc = _resolve_end(q2, e_in)
    if out.direction is not Direction.OUT or inc.direction is not Direction.IN:
        raise DirectionMismatch("glue needs an outgoing end of the first quilt and an incoming end of the second")
    if out.signature != inc.signature or len(out.segments) != len(inc.segments):
        raise SignatureMismatch("end %s reads %s but end %s reads %s"
                                % (out.id, fmt_sequence(out.signature), inc.id, fmt_sequence(inc.signature)))
    q2r = _rename(q2, {p.id for p in q1.patches}, {a for p in q1.patches for a in p.arcs},
                  {s.id for s in q1.seams}, {e.id for e in q1.ends if e.id != out.id})
    inc = q2r.ends[[e.id for e in q2.ends].index(inc.id)]
    base = len(q1.patches)
    q2r = replace(q2r, patches=tuple(replace(p, order=p.order + base + 1) for p in q2r.patches))
    kept = tuple(e for e in q1.ends if e.id != out.id) + tuple(e for e in q2r.ends if e.id != inc.id)
    w = _Work(QuiltedSurface(q1.patches + q2r.patches, q1.seams + q2r.seams,
                             q1.boundary + q2r.boundary, kept))

    parent = {}

    def find(p):
        while p in parent:
            p = parent[p]
        return p

    for (pa, aa), (pb, ab) in zip(out.segments, inc.segments):
        a, b = find(pa), find(pb)
        if a == b:
            raise QuiltError("gluing would join a patch to itself (non-disk patch)")
        if w.space[a] != w.space[b]:
            raise SignatureMismatch("patches %s and %s carry different spaces" % (a, b))
        ca, cb = w.cycles[a], w.cycles[b]
        i, j = ca.index(aa), cb.index(ab)
        w.cycles[a] = ca[:i] + cb[j + 1:] + cb[:j] + ca[i + 1:]
        del w.cycles[b]
        parent[b] = a
    w.remap_patches({p: find(p) for p in w.space})
    w.merge_adjacent()
    return w.freeze()


@dataclass(frozen=True)
class ShrinkResult:
    quilt: QuiltedSurface
    shift: int
    configuration: EndConfiguration
    seam: Seam


def strip_seams(q: QuiltedSurface, patch_id: str):
    """Classify a strip patch: returns (end arcs, seam arcs) or raises NotAStrip."""
    idx = _index(q)
    try:
        p = idx.patches[patch_id]
    except KeyError:
        raise NotAStrip("no patch %r" % patch_id) from None
    if len(p.arcs) != 4:
        raise NotAStrip("patch %s has %d arcs, a strip has 4" % (patch_id, len(p.arcs)))
    kinds = []
    for a in p.arcs:
        covers = idx.cover.get(a, [])
        if len(covers) != 1:
            raise NotAStrip("arc %s is not covered exactly once" % a)
        kinds.append(covers[0])
    names = [k[0] for k in kinds]
    if names not in (["end", "seam", "end", "seam"], ["seam", "end", "seam", "end"]):
        raise NotAStrip("patch %s is not bounded by seam, end, seam, end" % patch_id)
    for kind, obj, pos in kinds:
        if kind == "seam" and _other_slot(obj, pos)[0] == patch_id:
            raise NotAStrip("patch %s is seamed to itself" % patch_id)
    return p, idx, kinds


def shrink_strip(q: QuiltedSurface, patch_id: str) -> ShrinkResult:
    """Remove a strip patch and join its neighbours by the composed seam.

    The composition of the two seam labels must be embedded.  The returned
    shift is ``n * d`` with ``2n`` the dimension of the removed patch and d
    set by the directions of the two ends crossing it.
    """
    p, idx, kinds = strip_seams(q, patch_id)
    k0 = 0 if kinds[0][0] == "end" else 1
    e1_arc = p.arcs[k0]
    end1 = kinds[k0][1]
    end2 = kinds[(k0 + 2) % 4][1]
    entry, exit_ = _sides(p, e1_arc, end1.direction)
    s01, pos01 = idx.cover[entry][0][1:]
    s12, pos12 = idx.cover[exit_][0][1:]
    slot0, slot2 = _other_slot(s01, pos01), _other_slot(s12, pos12)
    l01 = oriented_label(s01, slot0)
    l12 = oriented_label(s12, (patch_id, exit_))
    report = geometric_compose(l01, l12)
    if not report.embedded:
        raise NotEmbedded("seam labels of %s do not compose embeddedly" % patch_id, report)

    outs = [end1.direction, end2.direction].count(Direction.OUT)
    config = {2: EndConfiguration.TWO_OUT, 1: EndConfiguration.IN_OUT, 0: EndConfiguration.TWO_IN}[outs]
    shift = strip_shrink_shift(p.space.half_dim, config)

    w = _Work(q)
    taken = set(w.seams)
    new_id = "%s_%s" % (s01.id, s12.id)
    while new_id in taken:
        new_id += "'"
    new_seam = Seam(new_id, (slot0, slot2), report.correspondence())
    del w.seams[s01.id]
    del w.seams[s12.id]
    w.seams[new_id] = new_seam
    del w.cycles[patch_id]
    w.ends = {k: replace(e, segments=tuple(s for s in e.segments if s[0] != patch_id))
              for k, e in w.ends.items()}
    return ShrinkResult(w.freeze(renumber=False), shift, config, new_seam)


# builders -------------------------------------------------------------------------

def _check_labels(labels: Sequence[GeneralizedCorrespondence]):
    if not labels:
        raise EndpointMismatch("need at least one label")
    bottom, top = labels[0].source, labels[0].target
    for l in labels:
        if not l.steps:
            raise EndpointMismatch("empty sequences cannot label a side")
        if l.source != bottom or l.target != top:
            raise EndpointMismatch("labels must all run %s -> %s, got %s -> %s"
                                   % (bottom.name, top.name, l.source.name, l.target.name))
    if top.is_point:
        raise EndpointMismatch("labels must end at a non-point space")
    return bottom, top


def quilted_disk(labels: Sequence[GeneralizedCorrespondence],
                 ends: Sequence[tuple[str, Direction]],
                 top_down: bool = True) -> QuiltedSurface:
    """A disk whose sides carry ``labels`` with one end between consecutive sides.

    End i sits between side i-1 and side i (cyclically).  An outgoing end
    reads ``(label[i-1], label[i]^t)``, an incoming one ``(label[i], label[i-1]^t)``.
    Each label ``N_0 -> ... -> N_r`` contributes strip patches for
    ``N_1 .. N_{r-1}`` along its side.  When ``N_0`` is the point the
    innermost label is a boundary condition; otherwise a bottom patch for
    ``N_0`` closes every end into a cylinder.

    Patch orders count from the top patch downwards when ``top_down`` and
    from the bottom upwards otherwise.
    """
    bottom, top = _check_labels(labels)
    k = len(labels)
    if len(ends) != k:
        raise ValueError("need one end per side")
    patches, seams, boundary, end_list = [], [], [], []
    has_bottom = not bottom.is_point
    depth_of = {}

    top_arcs = []
    for i in range(k):
        top_arcs += ["T_e%d" % i, "T_s%d" % i]
    patches.append(("T", top, top_arcs))
    depth_of["T"] = 0
    if has_bottom:
        bottom_arcs = []
        for i in range(k):
            m = (-i) % k
            bottom_arcs += ["B_s%d" % m, "B_e%d" % m]
        patches.append(("B", bottom, bottom_arcs))

    def stack_id(i, j):
        return "Q%d_%d" % (i, j)

    for i, label in enumerate(labels):
        r = len(label.steps)
        for j in range(1, r):
            pid = stack_id(i, j)
            patches.append((pid, label.spaces[j], [pid + "_up", pid + "_a", pid + "_down", pid + "_b"]))
            depth_of[pid] = r - j

        def upper(j):  # (patch, down-facing arc) of the patch labelled N_j
            if j == r:
                return ("T", "T_s%d" % i)
            return (stack_id(i, j), stack_id(i, j) + "_down")

        def lower(j):  # (patch, up-facing arc) of the patch labelled N_j
            if j == 0:
                return ("B", "B_s%d" % i)
            return (stack_id(i, j), stack_id(i, j) + "_up")

        for j in range(1, r + 1):
            step = label.steps[j - 1]
            if j == 1 and not has_bottom:
                boundary.append(BoundaryLabel(upper(1), GeneralizedCorrespondence.of(step)))
            else:
                seams.append(Seam("L%d_%d" % (i, j), (lower(j - 1), upper(j)), step))

    for i, (eid, direction) in enumerate(ends):
        prev = (i - 1) % k
        up_prev = [(stack_id(prev, j), stack_id(prev, j) + "_b") for j in range(1, len(labels[prev].steps))]
        up_here = [(stack_id(i, j), stack_id(i, j) + "_a") for j in range(1, len(labels[i].steps))]
        if direction is Direction.OUT:
            segs = up_prev + [("T", "T_e%d" % i)] + up_here[::-1]
            sig = concat(labels[prev], labels[i].transpose())
        else:
            segs = up_here + [("T", "T_e%d" % i)] + up_prev[::-1]
            sig = concat(labels[i], labels[prev].transpose())
        if has_bottom:
            segs = [("B", "B_e%d" % i)] + segs
        end_list.append(End(eid, direction, tuple(segs), sig))

    max_depth = max(depth_of.values())
    if has_bottom:
        depth_of["B"] = max_depth + 1
        max_depth += 1
    built = []
    for pid, space, arcs in patches:
        d = depth_of[pid]
        order = d if top_down else max_depth - d
        built.append(Patch(pid, space, tuple(arcs), order))
    return QuiltedSurface(tuple(built), tuple(seams), tuple(boundary), tuple(end_list))


def pair_of_pants(l: GeneralizedCorrespondence, l1: GeneralizedCorrespondence,
                  l2: GeneralizedCorrespondence) -> QuiltedSurface:
    """The composition quilt Hom(l, l1) x Hom(l1, l2) -> Hom(l, l2).

    Ends: ``in1`` reads (l, l1^t), ``in2`` reads (l1, l2^t), ``out`` reads
    (l, l2^t).  Patches are ordered from the top down.
    """
    return quilted_disk([l2, l1, l], [("out", Direction.OUT), ("in2", Direction.IN), ("in1", Direction.IN)],
                        top_down=True)


def quilted_cap(l: GeneralizedCorrespondence) -> QuiltedSurface:
    """The identity quilt for ``l``: one outgoing end reading (l, l^t); ordered bottom up."""
    return quilted_disk([l], [("out", Direction.OUT)], top_down=False)


def quilted_cylinder(l: GeneralizedCorrespondence, l1: GeneralizedCorrespondence) -> QuiltedSurface:
    """The strip (or cylinder) carrying Floer trajectories for the pair (l, l1)."""
    return quilted_disk([l1, l], [("out", Direction.OUT), ("in", Direction.IN)])


def functor_quilt(l01: LagrangianCorrespondence, l: GeneralizedCorrespondence,
                  l1: GeneralizedCorrespondence) -> QuiltedSurface:
    """Quilt of the functor of ``l01`` on Hom(l, l1).

    The incoming end reads (l, l1^t); the outgoing end reads
    ((l, l01), (l1, l01)^t): a patch for the target of ``l01`` bulges into
    the outgoing end.
    """
    if l.target != l01.source or l1.target != l01.source:
        raise EndpointMismatch("functor quilt needs generalized Lagrangians of %s" % l01.source.name)
    q = quilted_cylinder(l, l1)
    top = q.patch("T")
    arcs = list(top.arcs)
    i = arcs.index("T_e0")
    arcs[i:i + 1] = ["T_o1", "T_f", "T_o2"]
    bulge = Patch("F", l01.target, ("F_f", "F_e"), max(p.order for p in q.patches) + 1)
    out = q.end("out")
    segs = []
    for s in out.segments:
        segs += [("T", "T_o1"), ("F", "F_e"), ("T", "T_o2")] if s == ("T", "T_e0") else [s]
    ell = GeneralizedCorrespondence.of(l01)
    sig = concat(concat(l, ell), concat(l1, ell).transpose())
    patches = tuple(replace(p, arcs=tuple(arcs)) if p.id == "T" else p for p in q.patches) + (bulge,)
    ends = tuple(End("out", Direction.OUT, tuple(segs), sig) if e.id == "out" else e for e in q.ends)
    seams = q.seams + (Seam("F", (("T", "T_f"), ("F", "F_f")), l01),)
    return QuiltedSurface(patches, seams, q.boundary, ends)


# equality up to renaming ------------------------------------------------------------

def _end_key(e: End) -> tuple:
    return (e.direction.value, fmt_sequence(e.signature))


def _encode(q: QuiltedSurface, idx: _Index, start: End | None) -> tuple:
    patch_num, arc_num, end_num = {}, {}, {}
    rotated = {}
    queue = deque()

    def visit_patch(pid, first_arc):
        if pid in patch_num:
            return
        patch_num[pid] = len(patch_num)
        arcs = idx.patches[pid].arcs
        i = arcs.index(first_arc)
        rotated[pid] = arcs[i:] + arcs[:i]
        for a in rotated[pid]:
            arc_num[a] = len(arc_num)
        queue.append(pid)

    def visit_end(e):
        if e.id in end_num:
            return
        end_num[e.id] = len(end_num)
        for pid, arc in e.segments:
            visit_patch(pid, arc)

    def drain():
        while queue:
            pid = queue.popleft()
            for a in rotated[pid]:
                kind, obj, pos = idx.cover[a][0]
                if kind == "seam":
                    visit_patch(*_other_slot(obj, pos))
                elif kind == "end":
                    visit_end(obj)

    if start is not None:
        visit_end(start)
        drain()
    for e in sorted(q.ends, key=_end_key):
        visit_end(e)
        drain()
    for p in sorted(q.patches, key=lambda p: (p.space.name, len(p.arcs))):
        visit_patch(p.id, p.arcs[0])
        drain()

    patches = []
    for pid in sorted(patch_num, key=patch_num.get):
        descr = []
        for a in rotated[pid]:
            kind, obj, pos = idx.cover[a][0]
            if kind == "seam":
                other = _other_slot(obj, pos)
                descr.append(("seam", arc_num[other[1]], fmt_correspondence(oriented_label(obj, (pid, a)))))
            elif kind == "boundary":
                descr.append(("boundary", fmt_sequence(obj.label)))
            else:
                descr.append(("end", end_num[obj.id], pos))
        patches.append((idx.patches[pid].space.name, tuple(descr)))
    ends = tuple((e.direction.value, fmt_sequence(e.signature), tuple(arc_num[a] for _, a in e.segments))
                 for e in sorted(q.ends, key=lambda e: end_num[e.id]))
    return (tuple(patches), ends)


def canonical_key(q: QuiltedSurface) -> tuple:
    """A key equal for two quilts exactly when they agree up to renaming identifiers.

    Patch orderings are not part of the key.
    """
    idx = _index(q)
    for a, covers in idx.cover.items():
        if len(covers) != 1:
            raise QuiltError("canonical form needs a valid quilt (arc %s)" % a)
    if not q.ends:
        return _encode(q, idx, None)
    least = min(_end_key(e) for e in q.ends)
    return min(_encode(q, idx, e) for e in q.ends if _end_key(e) == least)


def isomorphic(q1: QuiltedSurface, q2: QuiltedSurface) -> bool:
    return canonical_key(q1) == canonical_key(q2)
