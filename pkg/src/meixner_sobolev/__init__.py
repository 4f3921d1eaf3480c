"""Meixner and Delta-Meixner-Sobolev orthogonal polynomials in exact arithmetic."""

from .errors import ConvergenceError, ParameterError, PoleError, RegionError
from .genfun import gf_constants, gm_closed, gm_compare, gm_truncated
from .laguerre import LaguerreSobolevParams, laguerre_poly, laguerre_sobolev_poly
from .meixner import MeixnerParams, meixner_poly, pascal_inner
from .poly_core import Polynomial, forward_difference, parse_rational
from .sobolev import SobolevParams, a_limit, a_sequence, q_sequence, sobolev_inner, sobolev_poly

__all__ = [
    "ConvergenceError",
    "LaguerreSobolevParams",
    "MeixnerParams",
    "ParameterError",
    "PoleError",
    "Polynomial",
    "RegionError",
    "SobolevParams",
    "a_limit",
    "a_sequence",
    "forward_difference",
    "gf_constants",
    "gm_closed",
    "gm_compare",
    "gm_truncated",
    "laguerre_poly",
    "laguerre_sobolev_poly",
    "meixner_poly",
    "parse_rational",
    "pascal_inner",
    "q_sequence",
    "sobolev_inner",
    "sobolev_poly",
]
