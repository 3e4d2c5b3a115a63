"""Exact A-polynomial computation and structural analysis.

Subpackages by role: ``poly`` (exact sparse arithmetic), ``newton``
(Newton polygons and SVG), ``structure`` (cyclotomic and unit-evaluation
analysis), ``surgery`` (surgery-line intersections and the contradiction
replay), ``knots`` (unknot, torus, two-bridge generators), ``db`` (record
ingest and batch verification), ``cli`` (command line).
"""

from .poly import (
    BivarPoly,
    PolyParseError,
    Stripped,
    TriPolyInT,
    UnivarPoly,
    format_poly,
    gcd_univar,
    parse_poly,
    resultant_t,
    squarefree_univar,
)

__version__ = "0.1.0"

__all__ = [
    "BivarPoly",
    "UnivarPoly",
    "TriPolyInT",
    "Stripped",
    "PolyParseError",
    "parse_poly",
    "format_poly",
    "gcd_univar",
    "squarefree_univar",
    "resultant_t",
    "__version__",
]
