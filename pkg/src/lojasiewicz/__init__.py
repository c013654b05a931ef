"""Exact separation Lojasiewicz exponents of real plane curve germs."""
from .algebra import EXACT, ApproxField, BiPoly, GaussianRational, gcd_bipoly, is_reduced
from .config import RunConfig
from .errors import (BudgetExhausted, DoesNotVanishAtOrigin, LojasiewiczError, NotReduced,
                     PolySyntaxError, UnsupportedAlgebraicCoefficient)
from .exponent import ExponentReport, L_separation, effective_bound
from .oracle import estimate_L
from .parser import parse_poly, parse_series
from .polygon import newton_polygon
from .puiseux import PuiseuxSeries
from .sliding import expand_branches, slide_to_root

__all__ = [
    "EXACT", "ApproxField", "BiPoly", "GaussianRational", "gcd_bipoly", "is_reduced",
    "RunConfig", "BudgetExhausted", "DoesNotVanishAtOrigin", "LojasiewiczError", "NotReduced",
    "PolySyntaxError", "UnsupportedAlgebraicCoefficient", "ExponentReport", "L_separation",
    "effective_bound", "estimate_L", "parse_poly", "parse_series", "newton_polygon",
    "PuiseuxSeries", "expand_branches", "slide_to_root",
]
__version__ = "0.1.0"
