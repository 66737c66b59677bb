"""Quasi-alternating certificates: search, verification, connected sums.

A certificate is a tree.  A leaf says "this diagram has determinant 1 and
the recorded simplification trace reduces it to the crossingless unknot".
A branch names a crossing c of its diagram D with

    det(D) = det(D_0) + det(D_inf),   det(D_0), det(D_inf) >= 1,

where D_0 / D_inf are the zero / infinity smoothings at c, simplified and
put in canonical form; its children certify those two diagrams.  Every
node diagram is the canonical form recorded in its ``key``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .diagram import (DiagramError, LinkDiagram, canonical_form, canonical_key,
                      from_key, key_of_canonical, move_to_str, replay,
                      shaded_parity, simplify, smooth_corners,
                      unknot_trace)
from .tait import goeritz_determinant, smoothing_determinants

DEFAULT_BUDGET = 100_000


class InvalidInputCertificate(ValueError):
    pass


class CertificateFormatError(ValueError):
    pass


@dataclass(frozen=True)
class Leaf:
    key: str
    trace: tuple

    kind = "leaf"
    det = 1

    def to_dict(self):
        return {"kind": "leaf", "key": self.key, "trace": list(self.trace)}


@dataclass(frozen=True)
class Branch:
    key: str
    crossing: int
    det: int
    det0: int
    det_inf: int
    zero: "Leaf | Branch"
    inf: "Leaf | Branch"

    kind = "branch"

    def to_dict(self):
        return {"kind": "branch", "key": self.key, "crossing": self.crossing,
                "det": self.det, "det0": self.det0, "detInf": self.det_inf,
                "zero": self.zero.to_dict(), "inf": self.inf.to_dict()}


QACertificate = Leaf | Branch


def certificate_from_dict(obj) -> QACertificate:
    try:
        if obj["kind"] == "leaf":
            return Leaf(obj["key"], tuple(obj["trace"]))
        if obj["kind"] == "branch":
            return Branch(obj["key"], int(obj["crossing"]), int(obj["det"]),
                          int(obj["det0"]), int(obj["detInf"]),
                          certificate_from_dict(obj["zero"]),
                          certificate_from_dict(obj["inf"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise CertificateFormatError(str(exc)) from None
    raise CertificateFormatError("unknown node kind %r" % obj.get("kind"))


def to_json(cert: QACertificate) -> str:
    return json.dumps(cert.to_dict(), separators=(",", ":")) + "\n"


def from_json(text: str) -> QACertificate:
    return certificate_from_dict(json.loads(text))


def walk(cert: QACertificate):
    yield cert
    if isinstance(cert, Branch):
        yield from walk(cert.zero)
        yield from walk(cert.inf)


def depth(cert: QACertificate) -> int:
    if isinstance(cert, Leaf):
        return 0
    return 1 + max(depth(cert.zero), depth(cert.inf))


@dataclass(frozen=True)
class Certified:
    certificate: QACertificate
    nodes: int = 0

    status = "Certified"


@dataclass(frozen=True)
class NotQA:
    reason: str

    status = "NotQA"


@dataclass(frozen=True)
class Unknown:
    note: str
    nodes: int = 0

    status = "Unknown"


QAResult = Certified | NotQA | Unknown


def child(d: LinkDiagram, c: int, merge: int) -> LinkDiagram:
    """Canonical form of the simplified smoothing merging corners ``merge``."""
    return canonical_form(simplify(smooth_corners(d, c, merge)))


def children(d: LinkDiagram, c: int):
    s = shaded_parity(d)[c]
    return child(d, c, s), child(d, c, 1 - s)


class _OutOfBudget(Exception):
    pass


class _Search:
    def __init__(self, budget: int, use_memo: bool = True):
        self.budget = budget
        self.nodes = 0
        self.use_memo = use_memo
        self.memo: dict = {}
        self.dets: dict = {}

    def det(self, d: LinkDiagram) -> int:
        key = (d.crossings, d.loops)
        v = self.dets.get(key)
        if v is None:
            v = self.dets[key] = goeritz_determinant(d)
        return v

    def leaf(self, d: LinkDiagram, key: str):
        trace = unknot_trace(d)
        if trace is None:
            return None
        return Leaf(key, tuple(move_to_str(m) for m in trace))

    def candidates(self, d: LinkDiagram, det: int):
        """Crossings ordered by |det0 + detInf - det|, then index."""
        dets = smoothing_determinants(d)
        out = [(abs(d0 + di - det), c, d0, di) for c, (d0, di) in enumerate(dets)]
        out.sort()
        return out

    def solve(self, d: LinkDiagram, only: int | None = None):
        """Certificate for the canonical diagram ``d`` or None."""
        key = key_of_canonical(d)
        if self.use_memo and only is None and key in self.memo:
            return self.memo[key]
        self.nodes += 1
        if self.nodes > self.budget:
            raise _OutOfBudget
        det = self.det(d)
        res = None
        if det == 1:
            res = self.leaf(d, key)
        elif det > 1:
            for diff, c, d0, di in self.candidates(d, det):
                if diff:
                    break
                if d0 < 1 or di < 1 or (only is not None and c != only):
                    continue
                x0, xi = children(d, c)
                z = self.solve(x0)
                if z is None:
                    continue
                i = self.solve(xi)
                if i is None:
                    continue
                res = Branch(key, c, det, d0, di, z, i)
                break
        if self.use_memo and only is None:
            self.memo[key] = res
        return res


def _canonical_index(d: LinkDiagram, c: int):
    cf = canonical_form(d.with_tags(range(d.n)))
    return cf, cf.tags.index(c)


def certify(d: LinkDiagram, budget: int = DEFAULT_BUDGET, memo: bool = True,
            crossing: int | None = None) -> QAResult:
    """Search for a quasi-alternating certificate of ``d``.

    ``crossing`` (an index into ``d``) forces the root branch there.  Never
    answers NotQA except for determinant zero; failure to find a
    certificate is Unknown.
    """
    det = goeritz_determinant(d)
    if det == 0:
        return NotQA("det=0")
    if crossing is not None:
        root, idx = _canonical_index(d, crossing)
    else:
        root, idx = canonical_form(d), None
    search = _Search(budget, memo)
    try:
        cert = search.solve(root, only=idx)
    except _OutOfBudget:
        return Unknown("budget of %d nodes exhausted" % budget, search.nodes)
    except RecursionError:
        return Unknown("recursion limit reached", search.nodes)
    if cert is None:
        if crossing is not None:
            return Unknown("no certificate branching at crossing %d" % crossing, search.nodes)
        return Unknown("no certificate found in this diagram (search is incomplete)",
                       search.nodes)
    return Certified(cert, search.nodes)


def verify(cert: QACertificate, d: LinkDiagram) -> bool:
    """Replay ``cert`` against ``d`` with independent determinant checks."""
    try:
        if cert.key != canonical_key(d):
            return False
        return _verify_node(cert, from_key(cert.key), {})
    except (DiagramError, IndexError, ValueError):
        return False


def _verify_node(cert, d: LinkDiagram, seen: dict) -> bool:
    if cert.key in seen and seen[cert.key] is cert:
        return True
    if isinstance(cert, Leaf):
        if goeritz_determinant(d) != 1:
            return False
        end = replay(d, cert.trace)
        ok = end.n == 0 and end.loops == 1
    else:
        if not 0 <= cert.crossing < d.n:
            return False
        det = goeritz_determinant(d)
        if det != cert.det or cert.det0 < 1 or cert.det_inf < 1:
            return False
        if det != cert.det0 + cert.det_inf:
            return False
        x0, xi = children(d, cert.crossing)
        if key_of_canonical(x0) != cert.zero.key or key_of_canonical(xi) != cert.inf.key:
            return False
        if goeritz_determinant(x0) != cert.det0 or goeritz_determinant(xi) != cert.det_inf:
            return False
        ok = _verify_node(cert.zero, x0, seen) and _verify_node(cert.inf, xi, seen)
    if ok:
        seen[cert.key] = cert
    return ok


# -- connected sums ------------------------------------------------------


def _tag_by_canonical(d: LinkDiagram, label):
    """Tag each crossing of ``d`` with (label, its index in canonical_form(d))."""
    cf = canonical_form(d.with_tags(range(d.n)))
    pos = {orig: k for k, orig in enumerate(cf.tags)}
    return d.with_tags([(label, pos[c]) for c in range(d.n)])


class _SumBuilder:
    def __init__(self, cert_b: QACertificate, budget: int):
        self.cert_b = cert_b
        self.search = _Search(budget)
        self.replayed = 0
        self.searched = 0

    def fallback(self, s: LinkDiagram):
        self.searched += 1
        cert = self.search.solve(s.with_tags(None))
        if cert is None:
            raise InvalidInputCertificate("could not complete connected-sum certificate")
        return cert

    def build(self, s: LinkDiagram, node: QACertificate, phase: str):
        """Certificate for canonical ``s`` guided by ``node`` (a node of the
        phase's input certificate whose crossings are tagged in ``s``)."""
        key = key_of_canonical(s)
        det = goeritz_determinant(s)
        if det == 1:
            leaf = self.search.leaf(s, key)
            return leaf if leaf is not None else self.fallback(s)
        if isinstance(node, Leaf):
            if phase == "A":
                return self.build(s, self.cert_b, "B")
            return self.fallback(s)
        k = next((i for i, t in enumerate(s.tags or ())
                  if t == (phase, node.crossing)), None)
        if k is None:
            return self.fallback(s)
        guide = from_key(node.key).with_tags(range(from_key(node.key).n))
        s_par = shaded_parity(s)[k]
        kids = {}
        for merge in (0, 1):
            sx = canonical_form(simplify(smooth_corners(s, k, merge)))
            gx = canonical_form(simplify(smooth_corners(guide, node.crossing, merge)))
            gpos = {t: j for j, t in enumerate(gx.tags or ())}
            retag = []
            for t in sx.tags or ():
                if t is not None and t[0] == phase and t[1] in gpos:
                    retag.append((phase, gpos[t[1]]))
                elif t is not None and t[0] == phase:
                    retag.append(None)
                else:
                    retag.append(t)
            g_par = shaded_parity(guide)[node.crossing]
            sub = node.zero if merge == g_par else node.inf
            kids[merge] = (sx.with_tags(retag), sub)
        (x0, n0), (xi, ni) = kids[s_par], kids[1 - s_par]
        d0, di = goeritz_determinant(x0), goeritz_determinant(xi)
        if d0 < 1 or di < 1 or d0 + di != det:
            return self.fallback(s)
        self.replayed += 1
        return Branch(key, k, det, d0, di, self.build(x0, n0, phase),
                      self.build(xi, ni, phase))


def qa_connected_sum(cert_a: QACertificate, da: LinkDiagram,
                     cert_b: QACertificate, db: LinkDiagram,
                     budget: int = DEFAULT_BUDGET) -> QACertificate:
    """Certificate for ``connected_sum(da, db)`` built from the two inputs.

    Replays the branch tree of ``cert_a`` on the sum (the induction on
    det(da)); when it bottoms out, continues with ``cert_b``.  Nodes where
    simplification has disturbed the correspondence fall back to search.
    """
    from .diagram import connected_sum

    if not verify(cert_a, da) or not verify(cert_b, db):
        raise InvalidInputCertificate("input certificate does not verify")
    if da.n == 0:
        return cert_b
    if db.n == 0:
        return cert_a
    s = connected_sum(_tag_by_canonical(da, "A"), _tag_by_canonical(db, "B"))
    builder = _SumBuilder(cert_b, budget)
    try:
        return builder.build(canonical_form(s), cert_a, "A")
    except _OutOfBudget:
        raise InvalidInputCertificate("budget exhausted while completing certificate") from None
