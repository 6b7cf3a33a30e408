"""Fermi-Dirac integrals F_{k/2}(eta) in closed form via Riemann and Hurwitz zeta."""
from .errors import (ConvergenceError, DegenerateEta, DomainError, FermiDiracError,
                     ModelBreakdown, NumericalFailure)
from .fd_core import EvaluationResult, Method, eta_zero_exact, fd_closed_form, integrand
from .model import (ModelCoefficients, boundary_coefficients, coefficient_c, fit_model,
                    model_f, ratio, solve_xi_m)
from .oracle import QuadratureConfig, fd_quadrature, fd_series_nondegenerate
from .special_functions import (alternating_hurwitz, gamma_half_integer, hurwitz_zeta,
                                riemann_zeta)

__all__ = [
    "ConvergenceError", "DegenerateEta", "DomainError", "FermiDiracError",
    "ModelBreakdown", "NumericalFailure", "EvaluationResult", "Method",
    "eta_zero_exact", "fd_closed_form", "integrand", "ModelCoefficients",
    "boundary_coefficients", "coefficient_c", "fit_model", "model_f", "ratio",
    "solve_xi_m", "QuadratureConfig", "fd_quadrature", "fd_series_nondegenerate",
    "alternating_hurwitz", "gamma_half_integer", "hurwitz_zeta", "riemann_zeta",
]
