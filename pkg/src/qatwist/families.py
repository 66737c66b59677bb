"""Pretzel links and (2, k) torus links.

A pretzel spec is a tuple of nonzero integers, one per strand.  The
standard diagram places the strands side by side as vertical columns of
half-twists; entry ``e`` gives ``|e|`` crossings whose handedness is the
sign of ``e``.  Neighbouring columns are joined at the top and bottom and
the last column wraps around to the first.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import count
from math import prod

from .diagram import (LinkDiagram, canonical_key, connected_sum, from_crossings,
                      simplify, smooth_corners)

ALTERNATING = "Alternating"
QA_THM = "QA-Thm3.2(1)"
NOTQA_THM = "NotQA-Thm3.2(2)"
NOTQA_LSPACE = "NotQA-Lspace"
OPEN = "Open"


class PretzelSpec(tuple):
    """Signed twist counts of the strands, e.g. ``PretzelSpec((3, 3, -4))``."""

    def __new__(cls, entries):
        entries = tuple(int(e) for e in entries)
        if not entries or any(e == 0 for e in entries):
            raise ValueError("pretzel entries must be a nonempty list of nonzero integers")
        return super().__new__(cls, entries)

    @classmethod
    def parse(cls, text: str) -> "PretzelSpec":
        try:
            return cls(int(x) for x in text.replace(" ", "").split(",") if x)
        except ValueError as exc:
            raise ValueError("bad pretzel literal %r: %s" % (text, exc)) from None

    @property
    def positives(self):
        return [e for e in self if e > 0]

    @property
    def negatives(self):
        return [-e for e in self if e < 0]

    def reflected(self) -> "PretzelSpec":
        return PretzelSpec(-e for e in self)

    def __str__(self):
        return "P(%s)" % ",".join(str(e) for e in self)


def _column(e: int, top_left: int, top_right: int, bot_left: int, bot_right: int, fresh):
    """Crossings of one twist column with the given boundary arcs."""
    out = []
    nw, ne = top_left, top_right
    for k in range(abs(e)):
        if k == abs(e) - 1:
            sw, se = bot_left, bot_right
        else:
            sw, se = next(fresh), next(fresh)
        if e > 0:
            out.append((se, ne, nw, sw))
        else:
            out.append((sw, se, ne, nw))
        nw, ne = sw, se
    return out


def pretzel_diagram(s) -> LinkDiagram:
    """Standard diagram of the pretzel link ``s``."""
    s = PretzelSpec(s)
    k = len(s)
    fresh = count(1)
    # arcs joining column i's right side to column i+1's left side
    top = [next(fresh) for _ in range(k)]
    bot = [next(fresh) for _ in range(k)]
    crossings = []
    for i, e in enumerate(s):
        crossings += _column(e, top[i - 1], top[i], bot[i - 1], bot[i], fresh)
    return from_crossings(crossings)


def torus2(k: int) -> LinkDiagram:
    """Standard ``|k|``-crossing diagram of the (2, k) torus link.

    This is the pretzel diagram with ``|k|`` one-crossing strands of sign
    ``-sign(k)``: turned sideways, such a row has the handedness of a
    ``k``-crossing strand.  T(2, 3) is the right-handed trefoil.
    """
    if k == 0:
        raise ValueError("k must be nonzero")
    return pretzel_diagram((-1 if k > 0 else 1,) * abs(k))


def pretzel_determinant(s) -> int:
    """|prod p_i prod q_j (sum 1/p_i - sum 1/q_j)|, evaluated exactly."""
    s = PretzelSpec(s)
    total = sum(Fraction(1, e) for e in s)
    value = abs(prod(abs(e) for e in s) * total)
    assert value.denominator == 1
    return int(value)


def _thm32_part1(pos, neg) -> bool:
    return len(neg) == 1 and len(pos) >= 1 and neg[0] > min(pos)


def _lspace(p1: int, p2: int, q: int) -> bool:
    lo, hi = min(p1, p2), max(p1, p2)
    return q >= lo or (q == lo - 1 and hi <= 2 * q + 1)


def classify_pretzel(s) -> str:
    """Family label of ``s`` from the pretzel theorems, by arithmetic alone."""
    s = PretzelSpec(s)
    pos, neg = s.positives, s.negatives
    if not pos or not neg:
        return ALTERNATING
    if len(pos) >= 2 and len(neg) >= 2 and all(abs(e) >= 2 for e in s):
        return NOTQA_THM
    if _thm32_part1(pos, neg) or _thm32_part1(neg, pos):
        return QA_THM
    if len(s) == 3 and all(abs(e) >= 2 for e in s):
        (p1, p2), (q,) = (pos, neg) if len(pos) == 2 else (neg, pos)
        if not _lspace(p1, p2, q):
            return NOTQA_LSPACE
    return OPEN


def certify_pretzel(s, budget: int | None = None):
    """Certify ``s``, answering NotQA for the families the theorems exclude."""
    from .qa import DEFAULT_BUDGET, NotQA, certify

    label = classify_pretzel(s)
    if label == NOTQA_THM:
        return NotQA("Theorem 3.2(2) family")
    if label == NOTQA_LSPACE:
        return NotQA("double branched cover is not an L-space")
    return certify(pretzel_diagram(s), DEFAULT_BUDGET if budget is None else budget)


def theorem31_connected_sum_smoothing(s) -> LinkDiagram:
    """Zero smoothing of the 1-crossing strand of ``(p_1..p_n, 1, -q)``.

    The smoothing that cuts the strand apart (joining the corners above
    and below the crossing) leaves the connected sum of the torus links
    T(2, p_i) and T(2, -q).  Returned simplified.
    """
    s = PretzelSpec(s)
    if len(s) < 2 or s[-2] != 1 or s[-1] >= 0 or any(e < 1 for e in s[:-2]):
        raise ValueError("expected a spec of the form (p_1, ..., p_n, 1, -q)")
    d = pretzel_diagram(s)
    c = sum(abs(e) for e in s[:-2])
    # positive column crossing (SE, NE, NW, SW): corners 1, 3 are N and S
    return simplify(smooth_corners(d, c, 1))


def torus_sum(ks) -> LinkDiagram:
    """Connected sum of ``torus2(k)`` over ``ks``."""
    out = LinkDiagram((), 1)
    for k in ks:
        out = connected_sum(out, torus2(k))
    return out


def same_link_diagram(a: LinkDiagram, b: LinkDiagram) -> bool:
    return canonical_key(simplify(a)) == canonical_key(simplify(b))
