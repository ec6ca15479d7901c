from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knotsurgery import _kernels_py, kernels

try:
    from knotsurgery import _kernels
except ImportError:  # extension not built
    _kernels = None

BACKENDS = [_kernels_py] + ([_kernels] if _kernels is not None else [])


def brute_slice(d, m):
    vals = [v for v in range(-m, m + 1) if v != 0]
    return [c for c in product(vals, repeat=d) if sum(c) == d and sum(map(abs, c)) <= m]


def test_compiled_backend_is_selected():
    assert kernels.BACKEND in ("cython", "python")
    if _kernels is not None:
        assert kernels.BACKEND == "cython"


@pytest.mark.parametrize("mod", BACKENDS)
@pytest.mark.parametrize("d,m", [(1, 0), (1, 1), (2, 5), (3, 7), (3, 9), (4, 8)])
def test_enumeration_matches_brute_force(mod, d, m):
    want = brute_slice(d, m)
    got = mod.enumerate_slice(d, m)
    assert got.dtype == np.int32 and got.shape == (len(want), d)
    assert [tuple(r) for r in got.tolist()] == want  # lexicographic order
    assert mod.count_slice(d, m) == len(want)


@pytest.mark.parametrize("mod", BACKENDS)
def test_empty_inputs(mod):
    assert mod.count_slice(0, 5) == 0
    assert mod.count_slice(2, -1) == 0
    assert mod.enumerate_slice(3, 2).shape == (0, 3)
    assert mod.count_compositions(2, 5) == 0


@pytest.mark.skipif(_kernels is None, reason="extension not built")
@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5), st.integers(0, 18))
def test_backends_agree(d, m):
    assert _kernels.count_slice(d, m) == _kernels_py.count_slice(d, m)
    assert np.array_equal(_kernels.enumerate_slice(d, m), _kernels_py.enumerate_slice(d, m))


@pytest.mark.skipif(_kernels is None, reason="extension not built")
@given(st.integers(1, 15), st.integers(1, 8))
def test_compositions_agree(m, p):
    assert _kernels.count_compositions(m, p) == _kernels_py.count_compositions(m, p)


@pytest.mark.parametrize("mod", BACKENDS)
@pytest.mark.parametrize("k", [1, 2, 3])
def test_min_abs_sum_matches_brute_force(mod, k):
    vals = [v for v in range(-9, 10) if v]
    for target in range(-6, 7):
        if k == 1 and target == 0:
            continue  # no single nonzero integer sums to 0
        want = min(sum(map(abs, c)) for c in product(vals, repeat=k) if sum(c) == target)
        assert mod.min_abs_sum(k, target) == want
