import math

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from fdzeta.errors import DomainError
from fdzeta.special_functions import (alternating_hurwitz, gamma_half_integer,
                                      hurwitz_zeta, riemann_zeta)

from conftest import rel, zeta_series_oracle

# zeta(3/2) from zeta_series_oracle(1.5); frozen
ZETA_3_2 = 2.612375348685488


def test_zeta_oracle_reproduces_frozen_value():
    assert rel(zeta_series_oracle(1.5), ZETA_3_2) < 1e-14


@pytest.mark.parametrize("k, expected", [
    (1, math.sqrt(math.pi) / 2),
    (2, 1.0),
    (3, 3 * math.sqrt(math.pi) / 4),
    (4, 2.0),
    (9, math.gamma(5.5)),
])
def test_gamma_half_integer(k, expected):
    assert rel(gamma_half_integer(k), expected) <= 1e-14


@pytest.mark.parametrize("bad", [0, -1, 1.5, "2", True])
def test_gamma_half_integer_rejects(bad):
    with pytest.raises(DomainError):
        gamma_half_integer(bad)


@pytest.mark.parametrize("s, expected", [
    (2, math.pi ** 2 / 6),
    (4, math.pi ** 4 / 90),
    (1.5, ZETA_3_2),
])
def test_riemann_zeta(s, expected):
    assert rel(riemann_zeta(s), expected) <= 1e-13


@pytest.mark.parametrize("s", [1.0, 0.5, -2.0])
def test_riemann_zeta_domain(s):
    with pytest.raises(DomainError):
        riemann_zeta(s)


@pytest.mark.parametrize("s, q", [(1.0, 1.0), (2.0, 0.0), (2.0, -1.0)])
def test_hurwitz_domain(s, q):
    with pytest.raises(DomainError):
        hurwitz_zeta(s, q)
    with pytest.raises(DomainError):
        alternating_hurwitz(s, q)


def test_hurwitz_examples():
    assert rel(hurwitz_zeta(1.5, 1.0), ZETA_3_2) <= 1e-13
    assert rel(hurwitz_zeta(1.5, 2.0), ZETA_3_2 - 1) <= 1e-13
    assert rel(hurwitz_zeta(1.5, 0.5), (2 ** 1.5 - 1) * ZETA_3_2) <= 1e-13


@settings(max_examples=300, deadline=None)
@given(st.floats(1.01, 5.0), st.floats(1e-3, 50.0))
def test_hurwitz_against_mpmath(s, q):
    assert rel(hurwitz_zeta(s, q), float(mpmath.zeta(s, q))) <= 1e-13


def test_alternating_examples():
    eta_15 = (1 - 2 ** -0.5) * ZETA_3_2
    assert rel(alternating_hurwitz(1.5, 1.0), eta_15) <= 1e-13
    assert rel(alternating_hurwitz(1.5, 2.0), 1 - eta_15) <= 1e-12
    assert eta_15 == pytest.approx(0.7651470, abs=1e-7)


def test_alternating_bracketed_by_partial_sums():
    s, q = 2.5, 0.7
    value = alternating_hurwitz(s, q)
    partial = 0.0
    sums = []
    for n in range(60):
        partial += (-1) ** n * (n + q) ** -s
        sums.append(partial)
    for lo_hi in zip(sums[:-1], sums[1:]):
        assert min(lo_hi) <= value <= max(lo_hi)


@settings(max_examples=200, deadline=None)
@given(st.floats(1.1, 4.0), st.floats(0.1, 10.0))
def test_recurrence(s, q):
    z = hurwitz_zeta(s, q)
    assert abs(z - (q ** -s + hurwitz_zeta(s, q + 1))) <= 1e-12 * abs(z)


@settings(max_examples=200, deadline=None)
@given(st.floats(1.1, 4.0), st.floats(0.1, 10.0))
def test_duplication(s, q):
    z = hurwitz_zeta(s, q)
    dup = 2.0 ** -s * (hurwitz_zeta(s, q / 2) + hurwitz_zeta(s, (q + 1) / 2))
    assert abs(z - dup) <= 1e-12 * abs(z)


@settings(max_examples=100, deadline=None)
@given(st.floats(1.1, 4.0), st.floats(0.1, 10.0))
def test_alternating_lies_between_partial_sums(s, q):
    value = alternating_hurwitz(s, q)
    s10 = sum((-1) ** n * (n + q) ** -s for n in range(10))
    s11 = s10 + (-1) ** 10 * (10 + q) ** -s
    assert min(s10, s11) <= value <= max(s10, s11)


@pytest.mark.parametrize("s", [1.5, 2.5, 4.0])
def test_hurwitz_decreasing_in_q(s):
    qs = [0.05 * i for i in range(1, 400)]
    values = [hurwitz_zeta(s, q) for q in qs]
    assert all(a > b for a, b in zip(values, values[1:]))
