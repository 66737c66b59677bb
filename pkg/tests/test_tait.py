import networkx as nx
import pytest
from hypothesis import given, strategies as st
from networkx.algorithms.isomorphism import categorical_multiedge_match

from corpus import figure_eight, pretzel_reps, trefoil
from qatwist.diagram import A_PARITY, UNKNOT, mirror, shaded_parity, smooth_corners
from qatwist.families import pretzel_diagram, pretzel_determinant, torus2
from qatwist.tait import (SpanningTreeProfile, TaitGraph, TooManyTrees,
                          bareiss_det, checkerboard, coloring_from_parity,
                          contract_edge, delete_edge, determinant_tree,
                          diagram_profile, goeritz_determinant, is_alternating,
                          is_valid_coloring, smoothing_determinants,
                          smoothing_profiles, spanning_tree_profile, tait_graph,
                          tree_determinant)

specs = st.sampled_from(pretzel_reps(7))


def as_nx(g):
    out = nx.MultiGraph()
    out.add_nodes_from(range(g.vertices))
    for u, v, s, _ in g.edges:
        out.add_edge(u, v, sign=s)
    return out


def same_signed_graph(g, h):
    return nx.is_isomorphic(as_nx(g), as_nx(h),
                            edge_match=categorical_multiedge_match("sign", 0))


def positive_frame(d, c):
    par = list(shaded_parity(d))
    if par[c] != A_PARITY:
        par = [1 - p for p in par]
    return par


class TestTaitGraph:
    def test_trefoil_triangle(self):
        g = tait_graph(trefoil())
        assert g.vertices == 3 and len(g.edges) == 3
        assert len(set(g.signs)) == 1
        assert all(u != v for u, v, _, _ in g.edges)

    def test_trefoil_dual(self):
        d = trefoil()
        g = tait_graph(d, checkerboard(d, flip=True))
        assert g.vertices == 2 and len(set(g.signs)) == 1

    def test_nonalternating_pretzel_signs(self):
        assert len(set(tait_graph(pretzel_diagram((2, 2, -2, -2))).signs)) == 2

    def test_kink(self):
        g = tait_graph(torus2(1))
        assert len(g.edges) == 1

    @given(specs)
    def test_colorings_valid(self, s):
        d = pretzel_diagram(s)
        for flip in (False, True):
            assert is_valid_coloring(d, checkerboard(d, flip=flip))

    def test_coloring_from_parity_rejects_mixed(self):
        d = trefoil()
        par = list(shaded_parity(d))
        par[0] = 1 - par[0]
        with pytest.raises(ValueError):
            coloring_from_parity(d, par)


class TestProfile:
    def test_triangle(self):
        g = TaitGraph(3, ((0, 1, 1, 0), (1, 2, 1, 1), (2, 0, 1, 2)))
        assert spanning_tree_profile(g).counts == {2: 3}

    def test_single_edge(self):
        assert spanning_tree_profile(TaitGraph(2, ((0, 1, 1, 0),))).counts == {1: 1}

    def test_parallel_mixed(self):
        g = TaitGraph(2, ((0, 1, 1, 0), (0, 1, -1, 1)))
        p = spanning_tree_profile(g)
        assert p.counts == {0: 1, 1: 1}
        assert determinant_tree(p) == 0

    def test_determinant_of_profile(self):
        assert determinant_tree(SpanningTreeProfile({2: 3})) == 3

    def test_figure_eight(self):
        assert determinant_tree(diagram_profile(figure_eight())) == 5

    def test_budget(self):
        with pytest.raises(TooManyTrees):
            spanning_tree_profile(tait_graph(torus2(9)), budget=5)

    @given(specs)
    def test_coloring_independence(self, s):
        d = pretzel_diagram(s)
        a = determinant_tree(diagram_profile(d))
        b = determinant_tree(diagram_profile(d, checkerboard(d, flip=True)))
        assert a == b == goeritz_determinant(d)


class TestGoeritz:
    def test_values(self):
        assert goeritz_determinant(trefoil()) == 3
        assert goeritz_determinant(UNKNOT) == 1
        assert goeritz_determinant(pretzel_diagram((2, 3, -7))) == 29

    def test_bareiss(self):
        assert bareiss_det([]) == 1
        assert bareiss_det([[2, 1], [1, 2]]) == 3
        assert bareiss_det([[0, 1], [1, 0]]) == -1
        assert bareiss_det([[1, 2], [2, 4]]) == 0
        big = [[10 ** 30, 1], [1, 10 ** 30]]
        assert bareiss_det(big) == 10 ** 60 - 1

    @given(specs)
    def test_matches_tree_and_formula(self, s):
        d = pretzel_diagram(s)
        assert goeritz_determinant(d) == tree_determinant(d) == pretzel_determinant(s)


class TestSmoothingGraphs:
    @given(specs)
    def test_contraction_and_deletion(self, s):
        d = pretzel_diagram(s)
        for c in range(d.n):
            par = positive_frame(d, c)
            g = tait_graph(d, coloring_from_parity(d, par))
            k = next(j for j, e in enumerate(g.edges) if e[3] == c)
            assert g.edges[k][2] == 1
            rest = par[:c] + par[c + 1:]
            x0 = smooth_corners(d, c, A_PARITY)
            xi = smooth_corners(d, c, 1 - A_PARITY)
            u, v = g.edges[k][:2]
            # a split smoothing is a contracted loop or a deleted bridge
            if x0.is_split:
                assert u == v
            else:
                assert same_signed_graph(tait_graph(x0, coloring_from_parity(x0, rest)),
                                         contract_edge(g, k))
            if xi.is_split:
                assert not nx.is_connected(as_nx(delete_edge(g, k)))
            else:
                assert same_signed_graph(tait_graph(xi, coloring_from_parity(xi, rest)),
                                         delete_edge(g, k))

    @given(specs)
    def test_profile_recurrence(self, s):
        d = pretzel_diagram(s)
        for c in range(d.n):
            whole, zero, inf = smoothing_profiles(d, c)
            assert whole == zero.shifted(1) + inf

    @given(specs)
    def test_smoothing_determinants(self, s):
        d = pretzel_diagram(s)
        par = shaded_parity(d)
        for c, (d0, di) in enumerate(smoothing_determinants(d)):
            assert d0 == goeritz_determinant(smooth_corners(d, c, par[c]))
            assert di == goeritz_determinant(smooth_corners(d, c, 1 - par[c]))


class TestAlternating:
    def test_examples(self):
        assert is_alternating(trefoil()) and is_alternating(figure_eight())
        assert not is_alternating(pretzel_diagram((2, 2, -3)))

    @given(specs)
    def test_equal_signs_iff_alternating(self, s):
        d = pretzel_diagram(s)
        assert (len(set(tait_graph(d).signs)) == 1) == is_alternating(d)
        assert is_alternating(mirror(d)) == is_alternating(d)
