import math

import mpmath
import pytest

from fdzeta.errors import ConvergenceError, DomainError
from fdzeta.fd_core import Method, eta_zero_exact
from fdzeta.oracle import (QuadratureConfig, fd_quadrature, fd_series_nondegenerate,
                           tail_bound)

from conftest import rel


def polylog_reference(k, eta):
    # F_{k/2}(eta) = -Gamma(1+k/2) Li_{1+k/2}(-e^eta)
    mpmath.mp.dps = 30
    s = 1 + mpmath.mpf(k) / 2
    return float(mpmath.re(-mpmath.gamma(s) * mpmath.polylog(s, -mpmath.exp(eta))))


# tabulated values carry six significant digits
@pytest.mark.parametrize("eta, expected", [(0.0, 0.678094), (1.0, 1.39638), (-1.0, 0.290501)])
def test_quadrature_table_values(eta, expected):
    assert float(f"{fd_quadrature(1, eta).value:.6g}") == expected


@pytest.mark.parametrize("eta, expected", [(0.0, 0.678094), (-4.0, 0.0161277)])
def test_series_table_values(eta, expected):
    assert float(f"{fd_series_nondegenerate(1, eta).value:.6g}") == expected


def test_series_leading_term():
    for eta in (-20.0, -40.0):
        v = fd_series_nondegenerate(1, eta).value
        assert rel(v, math.gamma(1.5) * math.exp(eta)) < 2 * math.exp(eta)


@pytest.mark.parametrize("k", [1, 2, 3, 9])
def test_series_at_zero_matches_dirichlet_eta(k):
    assert rel(fd_series_nondegenerate(k, 0.0).value, eta_zero_exact(k)) <= 1e-14


@pytest.mark.parametrize("k", [1, 2, 3, 6, 9])
@pytest.mark.parametrize("eta", [-30.0, -6.0, -0.5, -1e-3, 0.0, 0.5, 3.0, 10.0, 60.0])
def test_quadrature_against_polylog(k, eta):
    assert rel(fd_quadrature(k, eta).value, polylog_reference(k, eta)) <= 1e-12


@pytest.mark.parametrize("k", [1, 3, 9])
@pytest.mark.parametrize("eta", [-30.0, -3.0, -0.05, -1e-4, 0.0])
def test_series_against_polylog(k, eta):
    assert rel(fd_series_nondegenerate(k, eta).value, polylog_reference(k, eta)) <= 1e-14


def test_series_rejects_positive_eta():
    with pytest.raises(DomainError):
        fd_series_nondegenerate(1, 0.1)


def test_quadrature_domain():
    with pytest.raises(DomainError):
        fd_quadrature(1, 61.0)
    with pytest.raises(DomainError):
        fd_quadrature(10, 0.0)


def test_quadrature_non_convergence():
    with pytest.raises(ConvergenceError):
        fd_quadrature(1, 0.0, QuadratureConfig(max_subdivisions=1))


@pytest.mark.parametrize("kwargs", [
    {"abs_tol": 0.0}, {"rel_tol": -1.0}, {"max_subdivisions": 0}, {"tail_cutoff_margin": 10.0},
])
def test_config_validation(kwargs):
    with pytest.raises(DomainError):
        QuadratureConfig(**kwargs)


@pytest.mark.parametrize("eta", [-4.0, 0.0, 2.0, 5.0])
def test_tail_doubling(eta):
    base = QuadratureConfig()
    doubled = QuadratureConfig(tail_cutoff_margin=2 * base.tail_cutoff_margin)
    a = fd_quadrature(1, eta, base).value
    b = fd_quadrature(1, eta, doubled).value
    assert abs(a - b) < base.abs_tol * max(1.0, a)


def test_tail_bound_small_at_default_cutoff():
    assert tail_bound(1, 0.0, 40.0) < 1e-14
    assert tail_bound(9, 5.0, 45.0) > 1e-14  # the cutoff must be pushed out here


def test_quadrature_monotone_in_eta_and_k():
    etas = [-6.0 + 0.5 * i for i in range(23)]
    for k in (1, 3):
        vals = [fd_quadrature(k, e).value for e in etas]
        assert all(a < b for a, b in zip(vals, vals[1:]))
    for eta in (-2.0, 0.0, 3.0):
        vals = [fd_quadrature(k, eta).value for k in range(1, 10)]
        assert all(a < b for a, b in zip(vals, vals[1:]))


def test_result_method_tags():
    assert fd_quadrature(1, 0.0).method is Method.QUADRATURE
    assert fd_series_nondegenerate(1, 0.0).method is Method.SERIES
    assert fd_quadrature(1, 5.5).validity_warning
