"""Planar link diagrams stored as PD codes.

A crossing is a 4-tuple of arc labels listed counterclockwise, starting
from an under-strand ray.  Positions 0 and 2 carry the under-strand,
positions 1 and 3 the over-strand.  Orientation is not stored: a tuple and
its rotation by two positions describe the same crossing, and tuples are
normalized so that the smaller of the two is kept.

Corner ``(c, i)`` of crossing ``c`` is the angle between rays ``i`` and
``i + 1``.  Corners ``1`` and ``3`` are the A-corners (swept when the
over-strand is turned counterclockwise); ``0`` and ``2`` are the
B-corners.  Everything below is purely combinatorial.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from . import kernels

A_PARITY = 1

STRAIGHT = ((0, 2), (1, 3))


class DiagramError(ValueError):
    pass


class MalformedSyntax(DiagramError):
    pass


class ArcUsedNotTwice(DiagramError):
    pass


class DisconnectedDiagram(DiagramError):
    pass


class NonPlanarDiagram(DiagramError):
    pass


class IllegalMove(DiagramError):
    pass


def _rot2(t):
    return (t[2], t[3], t[0], t[1])


def _normalize(crossings: Sequence[Sequence[int]]):
    """Compress labels to 1..E (order preserving) and rotate each tuple so
    that its first entry is smaller than its third."""
    labels = sorted({lab for t in crossings for lab in t})
    rank = {lab: i + 1 for i, lab in enumerate(labels)}
    out = []
    for t in crossings:
        t = tuple(rank[lab] for lab in t)
        out.append(t if t[0] < t[2] else _rot2(t))
    return tuple(out)


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        p = self.parent.setdefault(x, x)
        while p != x:
            gp = self.parent.setdefault(p, p)
            self.parent[x] = gp
            x, p = p, gp
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


@dataclass(frozen=True)
class LinkDiagram:
    """An immutable planar diagram.

    ``loops`` counts crossingless circle components; the unknot is
    ``LinkDiagram((), loops=1)``.  ``tags`` is an optional per-crossing
    annotation carried through every operation but ignored by equality
    and by :func:`canonical_key`.
    """

    crossings: tuple = ()
    loops: int = 0
    marked: int | None = None
    tags: tuple | None = field(default=None, compare=False, repr=False)

    @classmethod
    def make(cls, crossings, loops=0, marked=None, tags=None):
        if not crossings and loops == 0:
            loops = 1
        return cls(_normalize(crossings), loops, marked,
                   tuple(tags) if tags is not None else None)

    # -- basic structure -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.crossings)

    @property
    def arc_count(self) -> int:
        return 2 * len(self.crossings)

    @cached_property
    def slots(self) -> dict:
        """Arc label -> the two (crossing, position) slots where it ends."""
        s: dict[int, list] = {}
        for c, t in enumerate(self.crossings):
            for p, lab in enumerate(t):
                s.setdefault(lab, []).append((c, p))
        return s

    def other_end(self, c: int, p: int):
        a, b = self.slots[self.crossings[c][p]]
        return b if a == (c, p) else a

    @cached_property
    def component_count(self) -> int:
        uf = _UnionFind()
        for t in self.crossings:
            uf.union(t[0], t[2])
            uf.union(t[1], t[3])
        roots = {uf.find(lab) for lab in self.slots}
        return len(roots) + self.loops

    @cached_property
    def projection_connected(self) -> bool:
        if not self.crossings:
            return self.loops == 1
        if self.loops:
            return False
        uf = _UnionFind()
        for lab, ((c1, _), (c2, _)) in self.slots.items():
            uf.union(c1, c2)
        return len({uf.find(c) for c in range(self.n)}) == 1

    @property
    def is_split(self) -> bool:
        """True when the projection is disconnected (a split diagram)."""
        return not self.projection_connected

    # -- faces -----------------------------------------------------------

    @cached_property
    def corner_face(self) -> dict:
        """Map corner (c, i) -> face index, faces numbered by first corner."""
        faces: dict = {}
        nf = 0
        for c in range(self.n):
            for i in range(4):
                if (c, i) in faces:
                    continue
                cur = (c, i)
                while cur not in faces:
                    faces[cur] = nf
                    cc, ci = cur
                    cur = self.other_end(cc, (ci + 1) % 4)
                nf += 1
        return faces

    @cached_property
    def faces(self) -> list:
        if not self.crossings:
            return [[] for _ in range(self.loops + 1)]
        out: list = [[] for _ in range(max(self.corner_face.values()) + 1)]
        for corner, f in sorted(self.corner_face.items()):
            out[f].append(corner)
        return out

    @property
    def face_count(self) -> int:
        return len(self.faces)

    @cached_property
    def shading(self) -> tuple:
        return _shaded_parity(self)

    # -- conveniences ----------------------------------------------------

    def to_pd(self) -> str:
        return " ".join("X[%d,%d,%d,%d]" % t for t in self.crossings)

    def __str__(self):
        if not self.crossings:
            return "unknot" if self.loops == 1 else "unlink(%d)" % self.loops
        extra = " + %d loop(s)" % self.loops if self.loops else ""
        return self.to_pd() + extra

    def with_tags(self, tags) -> "LinkDiagram":
        return LinkDiagram(self.crossings, self.loops, self.marked,
                           tuple(tags) if tags is not None else None)

    def with_marked(self, marked) -> "LinkDiagram":
        return LinkDiagram(self.crossings, self.loops, marked, self.tags)


UNKNOT = LinkDiagram((), 1)

_TERM = re.compile(r"X\[\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\]")


def _strip_comments(text: str) -> str:
    return "\n".join(line.split("#", 1)[0] for line in text.splitlines())


def parse_pd(text: str) -> LinkDiagram:
    """Parse whitespace separated ``X[a,b,c,d]`` terms into a diagram.

    >>> parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").n
    3
    """
    body = _strip_comments(text)
    terms = []
    pos = 0
    for m in _TERM.finditer(body):
        gap = body[pos:m.start()]
        if gap.strip(" \t\r\n,;"):
            raise MalformedSyntax("unexpected text %r" % gap.strip())
        terms.append(tuple(int(g) for g in m.groups()))
        pos = m.end()
    if body[pos:].strip(" \t\r\n,;"):
        raise MalformedSyntax("unexpected text %r" % body[pos:].strip())
    return from_crossings(terms)


def from_crossings(terms: Iterable[Sequence[int]]) -> LinkDiagram:
    terms = [tuple(t) for t in terms]
    if not terms:
        return UNKNOT
    counts: dict[int, int] = {}
    for t in terms:
        if len(t) != 4:
            raise MalformedSyntax("crossing %r does not have four arcs" % (t,))
        for lab in t:
            if lab <= 0:
                raise MalformedSyntax("arc labels must be positive, got %d" % lab)
            counts[lab] = counts.get(lab, 0) + 1
    bad = sorted(lab for lab, k in counts.items() if k != 2)
    if bad:
        raise ArcUsedNotTwice("arc %d used %d time(s)" % (bad[0], counts[bad[0]]))
    for t in terms:
        if t[0] == t[2] or t[1] == t[3]:
            raise NonPlanarDiagram("arc %r joins opposite rays of one crossing" % (t,))
    d = LinkDiagram.make(terms)
    if not d.projection_connected:
        raise DisconnectedDiagram("diagram projection is not connected")
    if d.face_count != d.n + 2:
        raise NonPlanarDiagram("V - E + F = %d, expected 2" % (d.n - 2 * d.n + d.face_count))
    return d


# -- local surgery -------------------------------------------------------


def _remove(d: LinkDiagram, pairings: dict) -> LinkDiagram:
    """Delete crossings, joining their rays according to ``pairings``.

    ``pairings[c]`` lists two position pairs of crossing ``c`` that are
    joined once ``c`` is removed.  Closed strands left without crossings
    become free loops.
    """
    uf = _UnionFind()
    for c, pairs in pairings.items():
        t = d.crossings[c]
        for p, q in pairs:
            uf.union(t[p], t[q])
    kept = [c for c in range(d.n) if c not in pairings]
    new = [tuple(uf.find(lab) for lab in d.crossings[c]) for c in kept]
    present = {lab for t in new for lab in t}
    dropped = {uf.find(d.crossings[c][p]) for c in pairings for p in range(4)}
    loops = d.loops + len(dropped - present)
    marked = None
    if d.marked is not None and d.marked in kept:
        marked = kept.index(d.marked)
    tags = [d.tags[c] for c in kept] if d.tags is not None else None
    return LinkDiagram.make(new, loops, marked, tags)


def smooth_corners(d: LinkDiagram, c: int, merge: int) -> LinkDiagram:
    """Smooth crossing ``c`` so that corners ``merge`` and ``merge + 2`` join."""
    if not 0 <= c < d.n:
        raise IndexError("crossing %d out of range" % c)
    pairs = ((0, 1), (2, 3)) if merge % 2 == 1 else ((1, 2), (3, 0))
    return _remove(d, {c: pairs})


def shaded_parity(d: LinkDiagram) -> tuple:
    """Corner parity shaded at each crossing under the default coloring.

    The default shades the color class with more faces; on a tie, the
    class of the face whose sorted boundary arcs come first.
    """
    return d.shading


def _shaded_parity(d: LinkDiagram) -> tuple:
    if not d.crossings:
        return ()
    if d.is_split:
        raise DisconnectedDiagram("no checkerboard coloring for split diagram")
    # a face's corners share a colour, and colour = corner parity at each
    # crossing, so fixing crossing 0 propagates through the faces
    par: dict[int, int] = {0: 0}
    todo = [0]
    cf = d.corner_face
    face_col: dict[int, int] = {}
    while todo:
        c = todo.pop()
        for i in range(4):
            col = 1 if (i % 2) == par[c] else 0
            f = cf[(c, i)]
            if f in face_col:
                continue
            face_col[f] = col
            for cc, ii in d.faces[f]:
                want = ii % 2 if col else 1 - ii % 2
                if cc not in par:
                    par[cc] = want
                    todo.append(cc)
    shaded = sum(face_col.values())
    flip = 2 * shaded < len(face_col)
    if 2 * shaded == len(face_col):
        # tie: shade the class holding the face with the least sorted list of
        # boundary arcs (arc labels survive mirroring, corner indices do not)
        best = {}
        for f, corners in enumerate(d.faces):
            arcs = tuple(sorted({d.crossings[c][i] for c, i in corners}
                                | {d.crossings[c][(i + 1) % 4] for c, i in corners}))
            col = face_col[f]
            if col not in best or arcs < best[col]:
                best[col] = arcs
        flip = best[0] < best[1]
    if flip:
        return tuple(1 - par[c] for c in range(d.n))
    return tuple(par[c] for c in range(d.n))


def smooth(d: LinkDiagram, c: int, kind: str) -> LinkDiagram:
    """Return ``L_0`` (``kind='zero'``) or ``L_inf`` (``kind='infinity'``).

    The zero smoothing merges the two shaded corners of ``c`` in the
    default checkerboard coloring (contracting the Tait edge); the
    infinity smoothing merges the unshaded ones (deleting it).
    """
    if d.n == 0:
        raise ValueError("cannot smooth a crossingless diagram")
    s = shaded_parity(d)[c]
    if kind in ("zero", "0", "Zero"):
        return smooth_corners(d, c, s)
    if kind in ("infinity", "inf", "Infinity"):
        return smooth_corners(d, c, 1 - s)
    raise ValueError("unknown smoothing kind %r" % kind)


def mirror(d: LinkDiagram) -> LinkDiagram:
    """Swap over and under at every crossing."""
    new = [(t[1], t[2], t[3], t[0]) for t in d.crossings]
    return LinkDiagram.make(new, d.loops, d.marked, d.tags)


def connected_sum(a: LinkDiagram, b: LinkDiagram, arc_a: int | None = None,
                  arc_b: int | None = None, twist: bool = False) -> LinkDiagram:
    """Band ``b`` into ``a`` along one arc of each.

    Arcs default to the highest-numbered arc of each diagram.  ``twist``
    selects the other of the two ways of pairing the cut ends.  Crossings
    of ``a`` come first in the result.
    """
    if a.n == 0 and a.loops == 1:
        return b
    if b.n == 0 and b.loops == 1:
        return a
    if a.n == 0 or b.n == 0:
        raise DiagramError("connected sum with a crossingless unlink")
    arc_a = max(a.slots) if arc_a is None else arc_a
    arc_b = max(b.slots) if arc_b is None else arc_b
    off = max(a.slots)
    ca = [list(t) for t in a.crossings]
    cb = [[lab + off for lab in t] for t in b.crossings]
    y = arc_b + off
    (s1, s2) = a.slots[arc_a]
    (t1, t2) = b.slots[arc_b]
    if twist:
        t1, t2 = t2, t1
    cb[t1[0]][t1[1]] = arc_a
    ca[s2[0]][s2[1]] = y
    tags = None
    if a.tags is not None or b.tags is not None:
        tags = list(a.tags or (None,) * a.n) + list(b.tags or (None,) * b.n)
    return LinkDiagram.make(ca + cb, a.loops + b.loops, a.marked, tags)


# -- simplification ------------------------------------------------------


def _find_r1(d):
    for c, t in enumerate(d.crossings):
        for p in range(4):
            if t[p] == t[(p + 1) % 4]:
                return ("R1", c)
    return None


def _r2_ok(d, c1, i):
    face = d.faces[d.corner_face[(c1, i)]]
    if len(face) != 2:
        return None
    (a, b) = face
    other = b if a == (c1, i) else a
    c2, j = other
    if c2 == c1:
        return None
    if (i + 1) % 2 != j % 2:
        return None
    return c2


def _find_r2(d):
    for c1 in range(d.n):
        for i in range(4):
            c2 = _r2_ok(d, c1, i)
            if c2 is not None:
                return ("R2", min(c1, c2), max(c1, c2))
    return None


def _nugatory_parity(d, c):
    cf = d.corner_face
    for k in (0, 1):
        if cf[(c, k)] == cf[(c, k + 2)]:
            return k
    return None


def _find_nugatory(d):
    for c in range(d.n):
        if _nugatory_parity(d, c) is not None:
            return ("N", c)
    return None


def _r3_triangle(d, c, i):
    """Crossings (A, B, C) with corner indices around the face at corner
    ``(c, i)`` when it is a triangle on three distinct crossings."""
    a = (c, i)
    b = d.other_end(a[0], (a[1] + 1) % 4)
    cc = d.other_end(b[0], (b[1] + 1) % 4)
    if d.other_end(cc[0], (cc[1] + 1) % 4) != a:
        return None
    if len({a[0], b[0], cc[0]}) != 3:
        return None
    return a, b, cc


def _r3_ok(d, c, i) -> bool:
    tri = _r3_triangle(d, c, i)
    if tri is None:
        return False
    (_, ia), (_, ib), _ = tri
    # the side A-B lies on one strand; it must pass over (or under) at both ends
    return (ia + 1) % 2 == ib % 2


def r3_moves(d: LinkDiagram) -> list:
    """All legal third Reidemeister moves, as ``("R3", c, i)``."""
    out = []
    for c in range(d.n):
        for i in range(4):
            if _r3_ok(d, c, i):
                out.append(("R3", c, i))
    return out


def _apply_r3(d, c, i):
    (ca, ia), (cb, ib), (cc, ic) = _r3_triangle(d, c, i)
    ta, tb, tc = d.crossings[ca], d.crossings[cb], d.crossings[cc]
    # external rays: strand AB leaves through A3 and B2, BC through B3 and
    # C2, CA through C3 and A2; the triangle is rebuilt on the far side of C
    a2, a3 = ta[(ia + 2) % 4], ta[(ia + 3) % 4]
    b2, b3 = tb[(ib + 2) % 4], tb[(ib + 3) % 4]
    c2, c3 = tc[(ic + 2) % 4], tc[(ic + 3) % 4]
    top = max(d.slots)
    f1, f2, f3 = top + 1, top + 2, top + 3
    ab_over_a = (ia + 1) % 2 == 1
    ab_over_b = ib % 2 == 1
    ca_over_c = (ic + 1) % 2 == 1
    new_a = (f3, f1, c3, b2) if ab_over_a else (f1, c3, b2, f3)
    new_b = (f2, a3, c2, f1) if ab_over_b else (a3, c2, f1, f2)
    new_c = (b3, a2, f2, f3) if ca_over_c else (a2, f2, f3, b3)
    crossings = list(d.crossings)
    crossings[ca], crossings[cb], crossings[cc] = new_a, new_b, new_c
    return LinkDiagram.make(crossings, d.loops, d.marked, d.tags)


def move_to_str(move) -> str:
    return move[0] + ":" + ",".join(str(x) for x in move[1:])


def move_from_str(text: str):
    kind, _, rest = text.partition(":")
    args = tuple(int(x) for x in rest.split(",") if x != "")
    if kind not in ("R1", "R2", "R3", "N"):
        raise IllegalMove("unknown move %r" % text)
    return (kind,) + args


def apply_move(d: LinkDiagram, move) -> LinkDiagram:
    """Apply one simplifying move, checking that it is legal on ``d``.

    ``R1 c`` removes a kink at ``c``; ``R2 c1 c2`` removes a bigon whose
    two sides pass over and under; ``N c`` untwists a nugatory crossing
    (one whose opposite corners lie on one face) by its non-splitting
    smoothing; ``R3 c i`` slides the side leaving corner ``(c, i)`` of a
    triangular face across the opposite crossing.
    """
    if isinstance(move, str):
        move = move_from_str(move)
    kind = move[0]
    if kind == "R1":
        (c,) = move[1:]
        t = d.crossings[c]
        if not any(t[p] == t[(p + 1) % 4] for p in range(4)):
            raise IllegalMove("no kink at crossing %d" % c)
        return _remove(d, {c: STRAIGHT})
    if kind == "R2":
        c1, c2 = move[1:]
        if c1 == c2 or not any(_r2_ok(d, c1, i) == c2 for i in range(4)):
            raise IllegalMove("no reducing bigon between %d and %d" % (c1, c2))
        return _remove(d, {c1: STRAIGHT, c2: STRAIGHT})
    if kind == "R3":
        c, i = move[1:]
        if not (0 <= c < d.n and 0 <= i < 4 and _r3_ok(d, c, i)):
            raise IllegalMove("no third Reidemeister move at corner (%d, %d)" % (c, i))
        return _apply_r3(d, c, i)
    if kind == "N":
        (c,) = move[1:]
        k = _nugatory_parity(d, c)
        if k is None:
            raise IllegalMove("crossing %d is not nugatory" % c)
        return smooth_corners(d, c, 1 - k)
    raise IllegalMove("unknown move %r" % (move,))


def simplify_with_trace(d: LinkDiagram):
    """Greedy deterministic reduction; returns ``(diagram, moves)``."""
    trace = []
    while d.n:
        move = _find_r1(d) or _find_r2(d) or _find_nugatory(d)
        if move is None:
            break
        d = apply_move(d, move)
        trace.append(move)
    return d, trace


def simplify(d: LinkDiagram) -> LinkDiagram:
    """Remove kinks, reducing bigons and nugatory crossings to a fixpoint."""
    return simplify_with_trace(d)[0]


def unknot_trace(d: LinkDiagram, max_states: int = 5000):
    """Moves reducing ``d`` to the crossingless unknot, or None.

    Greedy simplification first; if that stalls, a breadth-first search
    over third Reidemeister moves (each followed by greedy simplification)
    visiting at most ``max_states`` diagrams.
    """
    start, trace = simplify_with_trace(d)
    if start.n == 0:
        return trace if start.loops == 1 else None
    seen = {canonical_key(start)}
    queue = deque([(start, trace)])
    while queue and len(seen) <= max_states:
        cur, tr = queue.popleft()
        for move in r3_moves(cur):
            nxt, more = simplify_with_trace(apply_move(cur, move))
            path = tr + [move] + more
            if nxt.n == 0:
                return path if nxt.loops == 1 else None
            key = canonical_key(nxt)
            if key not in seen:
                seen.add(key)
                queue.append((nxt, path))
    return None


def replay(d: LinkDiagram, moves) -> LinkDiagram:
    for m in moves:
        d = apply_move(d, m)
    return d


# -- canonical form ------------------------------------------------------


def canonical_form(d: LinkDiagram) -> LinkDiagram:
    """Relabelled, reordered copy minimizing the PD tuple sequence.

    Every start ray is tried: walk the strand from it numbering arcs as
    they are met, continue with the earliest visited crossing that still
    has an unnumbered ray, and list crossings in order of first visit.
    The result is invariant under arc relabelling and crossing reordering.
    """
    if d.n == 0:
        return LinkDiagram((), d.loops)
    flat = [lab for t in d.crossings for lab in t]
    best, order = kernels.best_labelling(flat, d.n, d.arc_count)
    cand = tuple(tuple(best[i:i + 4]) for i in range(0, len(best), 4))
    marked = order.index(d.marked) if d.marked is not None else None
    tags = tuple(d.tags[c] for c in order) if d.tags is not None else None
    return LinkDiagram(cand, d.loops, marked, tags)


def key_of_canonical(cf: LinkDiagram) -> str:
    """Key string of a diagram already in canonical form."""
    if cf.n == 0:
        return "UNKNOT" if cf.loops == 1 else "UNLINK:%d" % cf.loops
    key = cf.to_pd()
    if cf.loops:
        key += " O%d" % cf.loops
    return key


def canonical_key(d: LinkDiagram) -> str:
    """Deterministic string identifying ``d`` up to relabelling."""
    return key_of_canonical(canonical_form(d))


def from_key(key: str) -> LinkDiagram:
    """Inverse of :func:`canonical_key` (returns the canonical form)."""
    if key == "UNKNOT":
        return UNKNOT
    if key.startswith("UNLINK:"):
        return LinkDiagram((), int(key.split(":")[1]))
    loops = 0
    m = re.search(r"\sO(\d+)$", key)
    if m:
        loops = int(m.group(1))
        key = key[:m.start()]
    terms = [tuple(int(g) for g in mm.groups()) for mm in _TERM.finditer(key)]
    return LinkDiagram(_normalize(terms), loops)
