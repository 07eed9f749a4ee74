from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from refex import _core, _kernels_py


def brute_min_cover(masks, target):
    for k in range(len(masks) + 1):
        for combo in combinations(range(len(masks)), k):
            acc = 0
            for i in combo:
                acc |= masks[i]
            if acc & target == target:
                return combo
    return None


covers = st.integers(0, 12).flatmap(
    lambda width: st.tuples(
        st.lists(st.integers(0, 2**width - 1), max_size=9),
        st.integers(0, 2**width - 1),
    )
)


@given(covers)
def test_min_cover_matches_brute_force(case):
    masks, target = case
    expected = brute_min_cover(masks, target)
    for name in _core.BACKENDS:
        assert _core.min_cover(masks, target, name) == expected


@given(covers)
def test_backends_agree_on_greedy(case):
    masks, target = case
    results = {name: _core.greedy_cover(masks, target, name) for name in _core.BACKENDS}
    assert len(set(results.values())) == 1
    chosen = results["python"]
    if chosen is None:
        union = 0
        for m in masks:
            union |= m
        assert union & target != target
    else:
        acc = 0
        for i in chosen:
            acc |= masks[i]
        assert acc & target == target


def test_greedy_prefers_lowest_index_on_ties(backend):
    assert _core.greedy_cover([0b01, 0b10, 0b01], 0b11, backend) == (0, 1)


def test_wide_masks_fall_back_to_python(backend):
    target = (1 << 70) - 1
    masks = [(1 << 35) - 1, target & ~((1 << 35) - 1)]
    assert _core.min_cover(masks, target, backend) == (0, 1)
    assert _core.greedy_cover(masks, target, backend) == (0, 1)


def test_empty_target():
    assert _kernels_py.min_cover([], 0) == ()
    assert _kernels_py.greedy_cover([], 0) == ()


@pytest.mark.skipif("cython" not in _core.BACKENDS, reason="compiled kernels not built")
def test_compiled_backend_is_default():
    assert _core.BACKEND == "cython"
