"""Kauffman bracket by state sum, Jones polynomial, adequacy, Turaev genus."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .diagram import LinkDiagram

DEFAULT_BRACKET_BUDGET = 16


class BudgetExceeded(RuntimeError):
    pass


class LaurentPolynomial:
    """Exact Laurent polynomial with integer coefficients.

    Exponents may be any hashable numbers (ints for the bracket variable
    A, Fractions for the Jones variable t).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {e: c for e, c in (coeffs or {}).items() if c}

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls({exp: coeff})

    def __add__(self, other):
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out)

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPolynomial({e: c * other for e, c in self.coeffs.items()})
        out: dict = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = LaurentPolynomial({0: 1})
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, LaurentPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def is_zero(self):
        return not self.coeffs

    def map_exponents(self, f):
        out: dict = {}
        for e, c in self.coeffs.items():
            out[f(e)] = out.get(f(e), 0) + c
        return LaurentPolynomial(out)

    def __repr__(self):
        return "LaurentPolynomial(%r)" % dict(sorted(self.coeffs.items()))

    def format(self, var="A"):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                mono = str(abs(c))
            else:
                es = str(e) if not isinstance(e, Fraction) or e.denominator != 1 else str(e.numerator)
                mono = var if e == 1 else "%s^%s" % (var, es if "/" not in es and not es.startswith("-") else "(%s)" % es)
                if abs(c) != 1:
                    mono = "%d*%s" % (abs(c), mono)
            parts.append(("-" if c < 0 else "+", mono))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, mono in parts[1:]:
            s += " %s %s" % (sign, mono)
        return s

    __str__ = format


DELTA = LaurentPolynomial({2: -1, -2: -1})


def _arc_table(d: LinkDiagram):
    return [lab - 1 for t in d.crossings for lab in t]


def kauffman_bracket(d: LinkDiagram, budget: int = DEFAULT_BRACKET_BUDGET) -> LaurentPolynomial:
    """<D> = sum over states of A^(#A - #B) * delta^(circles - 1)."""
    if d.n > budget:
        raise BudgetExceeded("%d crossings exceed bracket budget %d" % (d.n, budget))
    hist = kernels.state_histogram(_arc_table(d), d.arc_count, d.loops)
    n = d.n
    total = LaurentPolynomial()
    powers = [LaurentPolynomial({0: 1})]
    for a, row in enumerate(hist):
        for circles, count in enumerate(row):
            if not count:
                continue
            while len(powers) < circles:
                powers.append(powers[-1] * DELTA)
            total = total + powers[circles - 1] * LaurentPolynomial({2 * a - n: int(count)})
    return total


def orientation(d: LinkDiagram) -> dict:
    """Traversal orientation: maps each slot (c, p) to True if the strand
    leaves crossing c through ray p.  Components start at their smallest arc."""
    out: dict = {}
    for lab in sorted(d.slots):
        start = d.slots[lab][0]
        if start in out:
            continue
        c, p = start
        while (c, p) not in out:
            out[(c, p)] = True
            c2, p2 = d.other_end(c, p)
            out[(c2, p2)] = False
            c, p = c2, (p2 + 2) % 4
    return out


def crossing_signs(d: LinkDiagram) -> list:
    ori = orientation(d)
    signs = []
    for c in range(d.n):
        u_in = 0 if not ori[(c, 0)] else 2
        o_in = 1 if not ori[(c, 1)] else 3
        signs.append(1 if (o_in - u_in) % 4 == 3 else -1)
    return signs


def writhe(d: LinkDiagram) -> int:
    return sum(crossing_signs(d))


def jones_polynomial(d: LinkDiagram, budget: int = DEFAULT_BRACKET_BUDGET) -> LaurentPolynomial:
    """V(t) = (-A^3)^(-w) <D> with t = A^(-4); exponents are Fractions of t."""
    w = writhe(d)
    br = kauffman_bracket(d, budget)
    norm = LaurentPolynomial({-3 * w: -1 if w % 2 else 1})
    return (br * norm).map_exponents(lambda k: Fraction(-k, 4))


def _eval_at_fourth_root_of_minus_one(p: LaurentPolynomial) -> int:
    """|p(A)| where A^4 = -1, for a bracket whose exponents agree mod 4."""
    if p.is_zero():
        return 0
    r = min(p.coeffs) % 4
    total = 0
    for k, c in p.coeffs.items():
        if (k - r) % 4:
            raise ValueError("bracket exponents are not congruent mod 4")
        total += c if ((k - r) // 4) % 2 == 0 else -c
    return abs(total)


def determinant_jones(d: LinkDiagram, budget: int = DEFAULT_BRACKET_BUDGET) -> int:
    """|V_L(-1)|; writhe normalization is unimodular there, so it is skipped."""
    return _eval_at_fourth_root_of_minus_one(kauffman_bracket(d, budget))


@dataclass(frozen=True)
class StateSummary:
    all_A_circles: int
    all_B_circles: int
    plus_adequate: bool
    minus_adequate: bool

    @property
    def adequate(self) -> bool:
        return self.plus_adequate and self.minus_adequate


def _state_circles(d: LinkDiagram, pairs):
    parent = list(range(d.arc_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for t in d.crossings:
        for p, q in pairs:
            a, b = find(t[p] - 1), find(t[q] - 1)
            if a != b:
                parent[a] = b
    roots = {find(x) for x in range(d.arc_count)}
    return len(roots) + d.loops, find


def state_summary(d: LinkDiagram) -> StateSummary:
    sa, fa = _state_circles(d, ((0, 1), (2, 3)))
    sb, fb = _state_circles(d, ((1, 2), (3, 0)))
    # a crossing is A-adequate when its two A-arcs lie on distinct circles
    plus = all(fa(t[0] - 1) != fa(t[2] - 1) for t in d.crossings)
    minus = all(fb(t[1] - 1) != fb(t[3] - 1) for t in d.crossings)
    return StateSummary(sa, sb, plus, minus)


def turaev_genus(d: LinkDiagram) -> int:
    """Genus of the Turaev surface of the diagram, (2 + c - s_A - s_B) / 2."""
    s = state_summary(d)
    twice = 2 + d.n - s.all_A_circles - s.all_B_circles
    if twice % 2 or twice < 0:
        raise ValueError("diagram is not connected")
    return twice // 2
