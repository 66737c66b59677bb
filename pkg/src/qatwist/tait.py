"""Checkerboard colorings, signed Tait graphs and two determinant engines.

An edge of the Tait graph is positive when the shaded corners of its
crossing are the A-corners, i.e. when contracting it is the A-smoothing.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .diagram import (A_PARITY, DisconnectedDiagram, LinkDiagram,
                      shaded_parity, smooth_corners)

DEFAULT_TREE_BUDGET = 10 ** 8


class TooManyTrees(RuntimeError):
    pass


@dataclass(frozen=True)
class Coloring:
    """Shaded faces, plus the shaded corner parity at each crossing."""

    shaded: frozenset
    parity: tuple

    def flipped(self, d: LinkDiagram) -> "Coloring":
        return Coloring(frozenset(range(d.face_count)) - self.shaded,
                        tuple(1 - p for p in self.parity))


@dataclass(frozen=True)
class TaitGraph:
    vertices: int
    edges: tuple  # (u, v, sign, crossing)
    faces: tuple = field(default=(), compare=False)  # vertex -> face index

    @property
    def signs(self):
        return [e[2] for e in self.edges]


@dataclass(frozen=True)
class SpanningTreeProfile:
    counts: dict

    def total(self) -> int:
        return sum(self.counts.values())

    def shifted(self, k: int) -> "SpanningTreeProfile":
        return SpanningTreeProfile({v + k: s for v, s in self.counts.items()})

    def scaled(self, k: int) -> "SpanningTreeProfile":
        return SpanningTreeProfile({v: s * k for v, s in self.counts.items() if s * k})

    def __add__(self, other):
        out = dict(self.counts)
        for v, s in other.counts.items():
            out[v] = out.get(v, 0) + s
        return SpanningTreeProfile({v: s for v, s in out.items() if s})


EMPTY_PROFILE = SpanningTreeProfile({})


def checkerboard(d: LinkDiagram, shade_corner=None, flip: bool = False) -> Coloring:
    """Checkerboard coloring of ``d``.

    By default the color class with more faces is shaded (ties: the class
    of the face whose sorted boundary arcs come first).
    ``shade_corner=(c, i)`` shades the face at that corner instead and
    ``flip`` returns the complementary coloring.
    """
    if d.n == 0:
        if d.loops != 1:
            raise DisconnectedDiagram("no checkerboard coloring for an unlink")
        col = Coloring(frozenset([1]), ())
        return col.flipped(d) if flip else col
    par = shaded_parity(d)
    if shade_corner is not None:
        c, i = shade_corner
        if par[c] != i % 2:
            par = tuple(1 - p for p in par)
    if flip:
        par = tuple(1 - p for p in par)
    cf = d.corner_face
    shaded = frozenset(cf[(c, i)] for c in range(d.n) for i in (par[c], par[c] + 2))
    return Coloring(shaded, par)


def is_valid_coloring(d: LinkDiagram, col: Coloring) -> bool:
    cf = d.corner_face
    for c in range(d.n):
        for i in range(4):
            if (cf[(c, i)] in col.shaded) == (cf[(c, (i + 1) % 4)] in col.shaded):
                return False
    return True


def tait_graph(d: LinkDiagram, col: Coloring | None = None) -> TaitGraph:
    if col is None:
        col = checkerboard(d)
    if d.n == 0:
        return TaitGraph(1, (), tuple(sorted(col.shaded)))
    verts = sorted(col.shaded)
    index = {f: k for k, f in enumerate(verts)}
    cf = d.corner_face
    edges = []
    for c in range(d.n):
        p = col.parity[c]
        u, v = index[cf[(c, p)]], index[cf[(c, p + 2)]]
        sign = 1 if p == A_PARITY else -1
        edges.append((u, v, sign, c))
    return TaitGraph(len(verts), tuple(edges), tuple(verts))


def contract_edge(g: TaitGraph, k: int) -> TaitGraph:
    """G/e for the k-th edge (a loop is simply deleted)."""
    u, v, _, _ = g.edges[k]
    rest = [e for j, e in enumerate(g.edges) if j != k]
    if u == v:
        return TaitGraph(g.vertices, tuple(rest))
    lo, hi = min(u, v), max(u, v)

    def m(x):
        x = lo if x == hi else x
        return x - 1 if x > hi else x

    return TaitGraph(g.vertices - 1, tuple((m(a), m(b), s, c) for a, b, s, c in rest))


def delete_edge(g: TaitGraph, k: int) -> TaitGraph:
    return TaitGraph(g.vertices, tuple(e for j, e in enumerate(g.edges) if j != k))


# -- exact linear algebra ------------------------------------------------


def bareiss_det(m) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    a = [list(row) for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = (rowi[j] * akk - aik * rowk[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def _laplacian_minor(nv, weighted_edges):
    lap = [[0] * nv for _ in range(nv)]
    for u, v, w in weighted_edges:
        if u == v:
            continue
        lap[u][u] += w
        lap[v][v] += w
        lap[u][v] -= w
        lap[v][u] -= w
    return [row[1:] for row in lap[1:]]


def matrix_tree_count(g: TaitGraph) -> int:
    """Number of spanning trees (Kirchhoff), ignoring signs."""
    return bareiss_det(_laplacian_minor(g.vertices, [(u, v, 1) for u, v, _, _ in g.edges]))


# -- spanning tree profile -----------------------------------------------


def _padd(p, q):
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, x in enumerate(q):
        out[i] += x
    return tuple(out)


def _pmul(p, q):
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x:
            for j, y in enumerate(q):
                out[i + j] += x * y
    return tuple(out)


def _tree_poly(nv, edges, memo):
    """Sum over spanning trees of x^(positive edges), as a coefficient tuple.

    ``edges`` maps (u, v) with u < v to a polynomial weight (parallel
    classes already merged).  Deletion/contraction with pendant-vertex
    shortcut and memoization on the (relabelled) minor.
    """
    if nv == 1:
        return (1,)
    if not edges:
        return ()
    key = (nv, tuple(sorted(edges.items())))
    hit = memo.get(key)
    if hit is not None:
        return hit
    deg = [0] * nv
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    if min(deg) == 0:
        memo[key] = ()
        return ()
    # pick the edge at a minimum-degree vertex
    x = min(range(nv), key=lambda i: (deg[i], i))
    (u, v) = min(e for e in edges if x in e)
    w = edges[(u, v)]
    rest = {e: ww for e, ww in edges.items() if e != (u, v)}
    contracted = _contract(nv, rest, u, v)
    res = _pmul(w, _tree_poly(nv - 1, contracted, memo))
    if deg[x] > 1:
        res = _padd(res, _tree_poly(nv, rest, memo))
    memo[key] = res
    return res


def _contract(nv, edges, u, v):
    lo, hi = min(u, v), max(u, v)
    out: dict = {}
    for (a, b), w in edges.items():
        a = lo if a == hi else a
        b = lo if b == hi else b
        if a == b:
            continue
        a = a - 1 if a > hi else a
        b = b - 1 if b > hi else b
        e = (a, b) if a < b else (b, a)
        out[e] = _padd(out[e], w) if e in out else w
    return out


def spanning_tree_profile(g: TaitGraph, budget: int = DEFAULT_TREE_BUDGET) -> SpanningTreeProfile:
    """Counts s_v of spanning trees having exactly v positive edges."""
    total = matrix_tree_count(g)
    if total > budget:
        raise TooManyTrees("%d spanning trees exceed budget %d" % (total, budget))
    edges: dict = {}
    for u, v, s, _ in g.edges:
        if u == v:
            continue
        e = (u, v) if u < v else (v, u)
        w = (0, 1) if s > 0 else (1,)
        edges[e] = _padd(edges[e], w) if e in edges else w
    poly = _tree_poly(g.vertices, edges, {})
    return SpanningTreeProfile({v: s for v, s in enumerate(poly) if s})


def determinant_tree(p: SpanningTreeProfile) -> int:
    return abs(sum(s if v % 2 == 0 else -s for v, s in p.counts.items()))


def diagram_profile(d: LinkDiagram, col: Coloring | None = None, **kw) -> SpanningTreeProfile:
    """Profile of ``d``; split diagrams have no spanning trees."""
    if d.is_split:
        return EMPTY_PROFILE
    return spanning_tree_profile(tait_graph(d, col), **kw)


def coloring_from_parity(d: LinkDiagram, parity) -> Coloring:
    """The coloring shading corner parity ``parity[c]`` at each crossing."""
    parity = tuple(p % 2 for p in parity)
    if d.n == 0:
        return checkerboard(d)
    col = checkerboard(d, shade_corner=(0, parity[0]))
    if col.parity != parity:
        raise ValueError("corner parities do not form a checkerboard coloring")
    return col


def smoothing_profiles(d: LinkDiagram, c: int, _whole=None):
    """Profiles of ``d``, ``L_0`` and ``L_inf`` at ``c``.

    ``d`` is colored so that ``c`` is a positive edge and the smoothings
    inherit that coloring, so ``L_0`` contracts the edge and ``L_inf``
    deletes it.
    """
    par = list(shaded_parity(d))
    if par[c] != A_PARITY:
        par = [1 - p for p in par]
    rest = par[:c] + par[c + 1:]
    whole = _whole.get(par[0]) if _whole is not None else None
    if whole is None:
        whole = diagram_profile(d, coloring_from_parity(d, par))
        if _whole is not None:
            _whole[par[0]] = whole
    out = [whole]
    for merge in (A_PARITY, 1 - A_PARITY):
        x = smooth_corners(d, c, merge)
        out.append(EMPTY_PROFILE if x.is_split else
                   diagram_profile(x, coloring_from_parity(x, rest)))
    return tuple(out)


def all_smoothing_profiles(d: LinkDiagram) -> list:
    """:func:`smoothing_profiles` at every crossing, sharing the two
    whole-diagram profiles."""
    cache: dict = {}
    return [smoothing_profiles(d, c, cache) for c in range(d.n)]


def tree_determinant(d: LinkDiagram) -> int:
    return determinant_tree(diagram_profile(d))


def goeritz_matrix(d: LinkDiagram) -> list:
    """Goeritz matrix on the unshaded regions, last region deleted."""
    col = checkerboard(d)
    cf = d.corner_face
    white = sorted(set(range(d.face_count)) - col.shaded)
    index = {f: k for k, f in enumerate(white)}
    g = [[0] * len(white) for _ in white]
    for c in range(d.n):
        q = 1 - col.parity[c]
        i, j = index[cf[(c, q)]], index[cf[(c, q + 2)]]
        if i == j:
            continue
        eta = 1 if q == A_PARITY else -1
        g[i][j] -= eta
        g[j][i] -= eta
        g[i][i] += eta
        g[j][j] += eta
    return [row[:-1] for row in g[:-1]]


def goeritz_determinant(d: LinkDiagram) -> int:
    """|det| of the Goeritz matrix; 0 for split diagrams, 1 for the unknot."""
    if d.is_split:
        return 0
    if d.n == 0:
        return 1
    return abs(bareiss_det(goeritz_matrix(d)))


def smoothing_determinants(d: LinkDiagram) -> list:
    """``(det L_0, det L_inf)`` at every crossing, from the Goeritz graph of ``d``.

    In the graph on unshaded faces the zero smoothing deletes the edge of
    the crossing and the infinity smoothing contracts it; a loop edge
    (nugatory crossing) gives a split diagram when contracted.
    """
    col = checkerboard(d)
    cf = d.corner_face
    white = sorted(set(range(d.face_count)) - col.shaded)
    index = {f: k for k, f in enumerate(white)}
    edges = []
    for c in range(d.n):
        q = 1 - col.parity[c]
        edges.append((index[cf[(c, q)]], index[cf[(c, q + 2)]],
                      1 if q == A_PARITY else -1))
    nv = len(white)
    whole = abs(bareiss_det(_laplacian_minor(nv, edges)))
    out = []
    for k, (u, v, _) in enumerate(edges):
        rest = edges[:k] + edges[k + 1:]
        if u == v:
            out.append((whole, 0))
            continue
        deleted = abs(bareiss_det(_laplacian_minor(nv, rest)))
        lo, hi = min(u, v), max(u, v)
        merged = []
        for a, b, w in rest:
            a = lo if a == hi else a
            b = lo if b == hi else b
            merged.append((a - (a > hi), b - (b > hi), w))
        contracted = abs(bareiss_det(_laplacian_minor(nv - 1, merged)))
        out.append((deleted, contracted))
    return out


def is_alternating(d: LinkDiagram) -> bool:
    """Over and under alternate along every strand (read off the PD code)."""
    for c, t in enumerate(d.crossings):
        for p in range(4):
            c2, p2 = d.other_end(c, p)
            if p % 2 == p2 % 2:
                return False
    return True
