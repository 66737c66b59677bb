import itertools

import pytest
from hypothesis import given, settings, strategies as st

from corpus import compositions, trefoil
from qatwist.diagram import canonical_key, mirror, smooth_corners
from qatwist.families import pretzel_diagram, torus2
from qatwist.qa import certify, verify
from qatwist.statesum import state_summary, turaev_genus
from qatwist.tait import goeritz_determinant, smoothing_profiles
from qatwist.tangle import (ExtensionViolated, RationalTangle, epsilon,
                            positive_smoothings, replace_with_tangle, twist,
                            twist_exponents, twisted_profile, validate_extension)

# small pretzel diagrams together with the crossings where they certify
QA_SPECS = [(2, 2, -3), (3, -2, 3), (1, 1, -2), (2, 3, -4), (2, 1, -3), (3, 3, -4),
            (-2, -2, 3), (4, 1, -2), (2, 2, 1, -3), (3,), (-4,), (2, -3), (2, -5)]


def qa_pairs():
    out = []
    for s in QA_SPECS:
        d = pretzel_diagram(s)
        if goeritz_determinant(d) < 2:
            continue
        for c in range(d.n):
            if certify(d, crossing=c).status == "Certified":
                out.append((s, c))
    return out


QA_PAIRS = qa_pairs()


def extending_tangles(eps, max_len=3, max_sum=6):
    for total in range(1, max_sum + 1):
        for comp in compositions(total):
            if len(comp) <= max_len:
                yield RationalTangle(tuple(eps * a for a in comp))


class TestEpsilon:
    def test_trefoil_uniform(self):
        for d in (trefoil(), torus2(3)):
            assert len({epsilon(d, c) for c in range(3)}) == 1

    def test_mirror_flips(self):
        d = torus2(3)
        assert epsilon(d, 0) == 1 and epsilon(mirror(d), 0) == -1

    def test_pretzel_strands_opposite(self):
        d = pretzel_diagram((1, 1, -1))
        assert epsilon(d, 0) == -epsilon(d, 2)
        assert epsilon(d, 1) == -epsilon(d, 2)

    def test_axes_override(self):
        d = torus2(3)
        assert epsilon(d, 0, axes=0) == -epsilon(d, 0, axes=1)

    @given(st.sampled_from([(2, 2, -3), (3, -4, 1, 2), (1, -1, 2), (5,)]))
    def test_mirror_flips_everywhere(self, s):
        d = pretzel_diagram(s)
        m = mirror(d)
        assert all(epsilon(m, c) == -epsilon(d, c) for c in range(d.n))


class TestTwist:
    def test_zero_is_identity(self):
        d = torus2(3)
        assert twist(d, 1, 0) == d

    def test_right_trefoil(self):
        d = torus2(3)
        five = twist(d, 0, 2)
        assert five.n == 5 and goeritz_determinant(five) == 5
        assert canonical_key(five) == canonical_key(torus2(5))
        assert goeritz_determinant(twist(d, 0, -2)) == 7

    def test_left_trefoil_swaps(self):
        # the smoothing merging the A-corners of a left trefoil is the unknot
        d = trefoil()
        assert goeritz_determinant(twist(d, 0, 2)) == 7
        assert goeritz_determinant(twist(d, 0, -2)) == 5

    def test_marked_is_last(self):
        x = twist(torus2(3), 0, 3)
        assert x.marked == x.n - 1

    @pytest.mark.parametrize("s,c", QA_PAIRS)
    def test_profile_and_det_recurrence(self, s, c):
        d = pretzel_diagram(s)
        _, zero, inf = smoothing_profiles(d, c)
        l0, li = positive_smoothings(d, c)
        d0, di = goeritz_determinant(l0), goeritz_determinant(li)
        assert goeritz_determinant(d) == d0 + di
        prev = None
        for n in range(5):
            assert twisted_profile(d, c, n) == zero.shifted(n + 1) + inf.shifted(n).scaled(n + 1)
            det = goeritz_determinant(twist(d, c, n))
            assert det == d0 + (n + 1) * di
            if prev is not None:
                assert det == prev + di
            prev = det

    @pytest.mark.parametrize("s,c", QA_PAIRS[::4])
    def test_twisted_crossings_quasi_alternating(self, s, c):
        d = pretzel_diagram(s)
        x = twist(d, c, 3)
        assert certify(x, crossing=x.marked).status == "Certified"


class TestExtension:
    def test_validate(self):
        assert validate_extension(1, RationalTangle((5, 3, 2))) is None
        assert validate_extension(1, RationalTangle((2, -1))) == 2
        assert validate_extension(-1, RationalTangle((-1,))) is None

    def test_parse(self):
        assert RationalTangle.parse("5, 3,2").coefficients == (5, 3, 2)
        assert str(RationalTangle((-2, -1))) == "C(-2,-1)"
        with pytest.raises(ValueError):
            RationalTangle.parse("1,x")
        with pytest.raises(ValueError):
            RationalTangle((1, 0))

    def test_c532_exponents(self):
        assert twist_exponents(RationalTangle((5, 3, 2)), 1) == [-2, 3, -4]

    def test_c532_structure(self):
        d = torus2(3)
        t = RationalTangle((5, 3, 2))
        out = replace_with_tangle(d, 0, t)
        steps = d
        cur = 0
        for e in (-2, 3, -4):
            steps = twist(steps, cur, e)
            cur = steps.marked
        assert out == steps
        assert out.n == d.n + t.crossings - 1

    def test_single_crossing_identity(self):
        d = torus2(3)
        assert canonical_key(replace_with_tangle(d, 0, RationalTangle((1,)))) == canonical_key(d)

    def test_three_crossing_tangle(self):
        # C(3) at an eps = +1 crossing is L^(-2): det = 1 + 3 * 2
        out = replace_with_tangle(torus2(3), 0, RationalTangle((3,)))
        assert out.n == 5 and goeritz_determinant(out) == 7

    def test_violation(self):
        with pytest.raises(ExtensionViolated):
            replace_with_tangle(torus2(3), 0, RationalTangle((2, -1)))

    @settings(max_examples=50)
    @given(st.sampled_from(QA_PAIRS), st.data())
    def test_crossing_count(self, pair, data):
        s, c = pair
        d = pretzel_diagram(s)
        eps = epsilon(d, c)
        t = data.draw(st.sampled_from(list(extending_tangles(eps))))
        assert replace_with_tangle(d, c, t).n == d.n + t.crossings - 1

    @pytest.mark.parametrize("s,c", QA_PAIRS[::3])
    def test_replacement_certifies(self, s, c):
        d = pretzel_diagram(s)
        for t in itertools.islice(extending_tangles(epsilon(d, c)), 0, None, 5):
            x = replace_with_tangle(d, c, t)
            res = certify(x)
            assert res.status == "Certified", (s, c, t)
            assert verify(res.certificate, x)

    @pytest.mark.parametrize("s,c", QA_PAIRS[::3])
    def test_turaev_genus_preserved(self, s, c):
        d = pretzel_diagram(s)
        g = turaev_genus(d)
        for t in extending_tangles(epsilon(d, c), max_sum=4):
            assert turaev_genus(replace_with_tangle(d, c, t)) == g

    @pytest.mark.parametrize("s", [(2, 2, -2, -2), (3, 2, -2, -3), (2, 3, -2, -4)])
    def test_adequacy_preserved(self, s):
        d = pretzel_diagram(s)
        for c in range(d.n):
            for t in extending_tangles(epsilon(d, c), max_sum=3):
                assert state_summary(replace_with_tangle(d, c, t)).adequate

    def test_smoothings_frame(self):
        d = torus2(3)
        l0, li = positive_smoothings(d, 0)
        assert goeritz_determinant(l0) == 2 and goeritz_determinant(li) == 1
        assert l0 == smooth_corners(d, 0, 1)
