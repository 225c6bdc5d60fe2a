"""The compiled kernels and the pure-Python fallback must be
indistinguishable; everything downstream picks one at import time."""

import pytest
from hypothesis import given, settings, strategies as st

from cleangraphs._kernels import (
    _impl,
    _pykernels,
    backend,
    count_square_roots_of_one,
    count_units,
    square_roots_of_one,
)


def test_backend_reports_a_known_name():
    assert backend() in ("c", "python")


@given(st.integers(min_value=1, max_value=3000))
@settings(max_examples=200)
def test_count_square_roots_matches_pure(n):
    assert count_square_roots_of_one(n) == _pykernels.count_square_roots_of_one(n)


@given(st.integers(min_value=1, max_value=3000))
@settings(max_examples=200)
def test_square_roots_match_pure(n):
    assert list(square_roots_of_one(n)) == list(_pykernels.square_roots_of_one(n))


@given(st.integers(min_value=1, max_value=3000))
@settings(max_examples=200)
def test_count_units_matches_pure(n):
    assert count_units(n) == _pykernels.count_units(n)


def test_known_small_values():
    assert _pykernels.count_units(1) == 0
    assert count_units(12) == 4
    assert list(square_roots_of_one(8)) == [1, 3, 5, 7]
    assert list(square_roots_of_one(9)) == [1, 8]
    assert count_square_roots_of_one(1) == 0
    assert count_square_roots_of_one(2) == 1


@pytest.mark.parametrize("fn", [count_units, count_square_roots_of_one, square_roots_of_one])
def test_rejects_nonpositive(fn):
    with pytest.raises(ValueError):
        fn(0)
    with pytest.raises(ValueError):
        fn(-5)


def test_active_impl_is_consistent_with_backend_name():
    if backend() == "python":
        assert _impl is _pykernels
    else:
        assert _impl is not _pykernels
