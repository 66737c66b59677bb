import os
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from corpus import pretzel_reps
from qatwist import _canon_py, _statesum_py, kernels
from qatwist.families import pretzel_diagram

compiled = pytest.mark.skipif(kernels.BACKEND != "cython", reason="extension not built")
specs = st.sampled_from(pretzel_reps(8))


def flat(d):
    return [lab for t in d.crossings for lab in t]


@compiled
@settings(max_examples=60)
@given(specs)
def test_state_histogram_agrees(s):
    d = pretzel_diagram(s)
    arcs = [x - 1 for x in flat(d)]
    fast = kernels.state_histogram(arcs, d.arc_count, d.loops)
    slow = _statesum_py.state_histogram(arcs, d.arc_count, d.loops)
    assert [list(map(int, row)) for row in fast] == [list(map(int, row)) for row in slow]


@compiled
@settings(max_examples=60)
@given(specs)
def test_best_labelling_agrees(s):
    d = pretzel_diagram(s)
    fast = kernels.best_labelling(flat(d), d.n, d.arc_count)
    slow = _canon_py.best_labelling(flat(d), d.n, d.arc_count)
    assert (list(fast[0]), list(fast[1])) == (list(slow[0]), list(slow[1]))


def test_pure_backend_switch():
    env = dict(os.environ, QATWIST_PURE="1")
    code = "from qatwist import kernels; print(kernels.BACKEND)"
    res = subprocess.run([sys.executable, "-c", code], env=env,
                         capture_output=True, text=True, check=True)
    assert res.stdout.strip() == "python"
