from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from multithreshold.theta import (
    BOUNDARY,
    INTERIOR,
    THETA_BY_FAMILY,
    boundary_knx3,
    boundary_knx4,
    boundary_nk3,
    boundary_nk4,
    max_parts_bound,
    theta_knx3,
    theta_knx4,
    theta_nk3,
    theta_nk4,
)


def test_max_parts_bound_closed_forms():
    for m in range(0, 20):
        assert max_parts_bound(m, 3) == m + comb(m, 3)
        assert max_parts_bound(m, 4) == m + comb(m // 2, 3) + comb((m + 1) // 2, 3)
    with pytest.raises(ValueError):
        max_parts_bound(-1, 3)
    with pytest.raises(ValueError):
        max_parts_bound(3, 5)


def test_boundary_sequence_fixtures():
    assert [boundary_nk3(m) for m in range(5)] == [1, 2, 3, 5, 9]
    assert [boundary_knx3(m) for m in range(5)] == [2, 3, 4, 6, 10]
    assert [boundary_nk4(m) for m in range(8)] == [1, 2, 3, 4, 5, 7, 9, 13]
    assert [boundary_knx4(m) for m in range(8)] == [2, 3, 4, 5, 6, 8, 10, 14]


def test_theta_fixtures():
    assert [theta_nk3(n).theta for n in range(1, 6)] == [1, 3, 5, 6, 7]
    assert [theta_knx3(n).theta for n in range(2, 6)] == [2, 4, 6, 7]
    assert [theta_nk4(n).theta for n in (1, 2)] == [1, 3]
    assert [theta_knx4(n).theta for n in (2, 3, 4)] == [2, 4, 6]


def test_regimes_at_fixture_points():
    assert theta_nk3(1).regime == BOUNDARY
    assert theta_nk3(4).regime == INTERIOR
    assert theta_nk3(5) == theta_nk3(5).__class__(7, BOUNDARY, 4)
    assert theta_knx3(2).regime == BOUNDARY
    assert theta_knx3(5).regime == INTERIOR
    assert theta_nk4(5).regime == BOUNDARY and theta_nk4(5).theta == 9
    assert theta_knx4(6).regime == BOUNDARY and theta_knx4(6).theta == 10


def test_domain_errors():
    with pytest.raises(ValueError):
        theta_nk3(0)
    with pytest.raises(ValueError):
        theta_nk4(0)
    with pytest.raises(ValueError):
        theta_knx3(1)
    with pytest.raises(ValueError):
        theta_knx4(1)


def _reference(seq, n, odd_at_boundary):
    """Independent evaluation: scan m linearly from 1."""
    m = 1
    while seq(m) <= n:
        m += 1
    assert seq(m - 1) <= n < seq(m)
    if n == seq(m - 1):
        return (2 * m - 1 if odd_at_boundary else 2 * m), m
    return (2 * m if odd_at_boundary else 2 * m + 1), m


@given(st.integers(min_value=1, max_value=10**6))
@settings(max_examples=300, deadline=None)
def test_nk_families_match_reference(n):
    for theta, seq in ((theta_nk3, boundary_nk3), (theta_nk4, boundary_nk4)):
        res = theta(n)
        want, m = _reference(seq, n, odd_at_boundary=True)
        assert (res.theta, res.m) == (want, m)


@given(st.integers(min_value=2, max_value=10**6))
@settings(max_examples=300, deadline=None)
def test_knx_families_match_reference(n):
    for theta, seq in ((theta_knx3, boundary_knx3), (theta_knx4, boundary_knx4)):
        res = theta(n)
        want, m = _reference(seq, n, odd_at_boundary=False)
        assert (res.theta, res.m) == (want, m)


def test_theta_is_monotone_with_small_steps():
    # between staircase steps theta grows by 0 or 1; a +2 step happens only
    # when two boundary values of n are adjacent, leaving no interior n
    sequences = {"nk3": boundary_nk3, "knx3": boundary_knx3,
                 "nk4": boundary_nk4, "knx4": boundary_knx4}
    for name, theta in THETA_BY_FAMILY.items():
        seq = sequences[name]
        start = 1 if name.startswith("nk") else 2
        prev = theta(start).theta
        for n in range(start + 1, 400):
            res = theta(n)
            assert res.theta in (prev, prev + 1, prev + 2), (name, n)
            if res.theta == prev + 2:
                assert res.regime == BOUNDARY
                assert seq(res.m - 1) == seq(res.m - 2) + 1, (name, n)
            prev = res.theta


def test_complement_families_differ_by_at_most_one():
    for n in range(2, 300):
        assert abs(theta_nk3(n).theta - theta_knx3(n).theta) <= 1
        assert abs(theta_nk4(n).theta - theta_knx4(n).theta) <= 1


def test_family_table():
    assert set(THETA_BY_FAMILY) == {"nk3", "knx3", "nk4", "knx4"}
