import os
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from binomdet import _kernels_py, kernels
from binomdet.combinatorics import Partition

compiled = pytest.importorskip("binomdet._kernels")

pairs = st.integers(1, 5).flatmap(lambda p: st.tuples(
    st.lists(st.integers(0, 4), min_size=p, max_size=p).map(lambda xs: tuple(sorted(xs, reverse=True))),
    st.lists(st.integers(0, 5), min_size=p, max_size=p).map(lambda xs: tuple(sorted(xs, reverse=True)))))


@settings(max_examples=150, deadline=None)
@given(pairs)
def test_compiled_matches_python(pair):
    lam, mu = pair
    assert compiled.determinant_terms(lam, mu) == _kernels_py.determinant_terms(lam, mu)
    assert compiled.coefficient_total(lam, mu) == _kernels_py.coefficient_total(lam, mu)


def test_compiled_falls_back_for_large_entries():
    lam, mu = (70, 1), (30, 0)
    assert compiled.determinant_terms(lam, mu) == _kernels_py.determinant_terms(lam, mu)


def test_sequence_count():
    assert compiled.sequence_count((3, 3, 3)) == 40


def test_backend_selection():
    assert kernels.BACKEND == "cython"
    env = dict(os.environ, BINOMDET_PURE="1")
    out = subprocess.run([sys.executable, "-c", "from binomdet import kernels; print(kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
