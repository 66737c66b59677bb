"""Rational tangles, crossing slope sign, twisting and tangle replacement.

Geometry of one crossing.  Place its rays at the diagonal directions with
ray 0 = SE, 1 = NE, 2 = NW, 3 = SW.  The over-strand then runs SW-NE, the
A-corners (1 and 3) are N and S, the B-corners (0 and 2) are E and W.
Twisting by ``n > 0`` stacks ``n`` extra crossings of the same kind in a
column between the A-corners; ``n < 0`` puts ``|n|`` of them in a row
between the B-corners.  In a checkerboard coloring that makes the crossing
a positive Tait edge, the first subdivides the edge into a path and the
second adds parallel edges.

The axes used for the slope sign are chosen by corner parity: the
"vertical" corners are the shaded ones of the default coloring unless
``axes`` overrides it.  The slope sign is +1 exactly when the vertical
corners are the A-corners.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import A_PARITY, LinkDiagram, shaded_parity, smooth_corners


class ExtensionViolated(ValueError):
    pass


@dataclass(frozen=True)
class RationalTangle:
    """Conway coefficients (a_1, ..., a_m) of C(a_1, ..., a_m)."""

    coefficients: tuple

    def __post_init__(self):
        if not self.coefficients or any(a == 0 for a in self.coefficients):
            raise ValueError("coefficients must be a nonempty list of nonzero integers")

    @classmethod
    def parse(cls, text: str) -> "RationalTangle":
        try:
            coeffs = tuple(int(x) for x in text.replace(" ", "").split(",") if x)
        except ValueError:
            raise ValueError("bad tangle literal %r" % text) from None
        return cls(coeffs)

    @property
    def crossings(self) -> int:
        return sum(abs(a) for a in self.coefficients)

    def __str__(self):
        return "C(%s)" % ",".join(str(a) for a in self.coefficients)


def epsilon(d: LinkDiagram, c: int, axes: int | None = None) -> int:
    """Slope sign of crossing ``c``: +1 when its vertical corners are A-corners.

    ``axes`` is the corner parity taken as vertical (default: the shaded
    parity of the default coloring, so that the sign equals the sign of
    the crossing's Tait edge).
    """
    if not 0 <= c < d.n:
        raise IndexError("crossing %d out of range" % c)
    if axes is None:
        axes = shaded_parity(d)[c]
    return 1 if axes % 2 == A_PARITY else -1


def twist(d: LinkDiagram, c: int, n: int) -> LinkDiagram:
    """Insert ``|n|`` half-twists at crossing ``c`` (see module docstring).

    The first crossing of the twist keeps index ``c``; the others are
    appended and the last one becomes the marked crossing.
    """
    if not 0 <= c < d.n:
        raise IndexError("crossing %d out of range" % c)
    if n == 0:
        return d
    se, ne, nw, sw = d.crossings[c]
    k = abs(n) + 1
    fresh = iter(range(max(d.slots) + 1, max(d.slots) + 2 * k))
    if n > 0:
        # column X_1 (top) .. X_k (bottom); X_i SW-X_{i+1} NW, X_i SE-X_{i+1} NE
        cols = [dict() for _ in range(k)]
        cols[0]["NE"], cols[0]["NW"] = ne, nw
        cols[-1]["SE"], cols[-1]["SW"] = se, sw
        for i in range(k - 1):
            left, right = next(fresh), next(fresh)
            cols[i]["SW"] = cols[i + 1]["NW"] = left
            cols[i]["SE"] = cols[i + 1]["NE"] = right
    else:
        # row X_1 (left) .. X_k (right); X_i NE-X_{i+1} NW, X_i SE-X_{i+1} SW
        cols = [dict() for _ in range(k)]
        cols[0]["NW"], cols[0]["SW"] = nw, sw
        cols[-1]["NE"], cols[-1]["SE"] = ne, se
        for i in range(k - 1):
            top, bot = next(fresh), next(fresh)
            cols[i]["NE"] = cols[i + 1]["NW"] = top
            cols[i]["SE"] = cols[i + 1]["SW"] = bot
    new = [(x["SE"], x["NE"], x["NW"], x["SW"]) for x in cols]
    crossings = list(d.crossings)
    crossings[c] = new[0]
    crossings.extend(new[1:])
    tags = None
    if d.tags is not None:
        tags = list(d.tags) + [None] * (k - 1)
    return LinkDiagram.make(crossings, d.loops, len(crossings) - 1, tags)


def validate_extension(eps: int, t: RationalTangle):
    """Return None when ``eps * a_i >= 1`` for every i, else the first
    violating (1-based) index."""
    for i, a in enumerate(t.coefficients, start=1):
        if eps * a < 1:
            return i
    return None


def twist_exponents(t: RationalTangle, eps: int) -> list:
    """Exponents of the iterated twists building C(a_1..a_m) from one crossing.

    L' = (((L^(-a_m))^(a_(m-1)))^(-a_(m-2)) ...)^((-1)^m (a_1 - eps)).
    """
    a = t.coefficients
    m = len(a)
    exps = [(-1) ** (m - j + 1) * a[j - 1] for j in range(m, 1, -1)]
    exps.append((-1) ** m * (a[0] - eps))
    return exps


def replace_with_tangle(d: LinkDiagram, c: int, t: RationalTangle,
                        axes: int | None = None) -> LinkDiagram:
    """Replace crossing ``c`` by the alternating rational tangle ``t``.

    ``t`` must extend ``c``.  Each twist is applied at the crossing marked
    by the previous one.
    """
    eps = epsilon(d, c, axes)
    bad = validate_extension(eps, t)
    if bad is not None:
        raise ExtensionViolated("coefficient %d of %s violates eps*a >= 1 (eps=%d)"
                                % (bad, t, eps))
    cur = d.with_marked(c)
    for e in twist_exponents(t, eps):
        if e:
            cur = twist(cur, cur.marked, e)
    return cur


def twisted_profile(d: LinkDiagram, c: int, n: int):
    """Spanning-tree profile of ``twist(d, c, n)``, colored so that ``c``
    and every inserted crossing are positive edges."""
    from .tait import coloring_from_parity, diagram_profile

    par = list(shaded_parity(d))
    if par[c] != A_PARITY:
        par = [1 - p for p in par]
    x = twist(d, c, n)
    return diagram_profile(x, coloring_from_parity(x, par + [A_PARITY] * abs(n)))


def positive_smoothings(d: LinkDiagram, c: int):
    """(L_0, L_inf) in the frame where crossing ``c`` is a positive Tait edge:
    L_0 merges the A-corners, L_inf the B-corners."""
    return smooth_corners(d, c, A_PARITY), smooth_corners(d, c, 1 - A_PARITY)
