"""Nonlinearity of Boolean functions via the integer nonlinearity polynomial.

The package offers four independent routes to the nonlinearity of a
Boolean function (brute force, fast Walsh transform, the nonlinearity
polynomial butterfly, and variety enumeration of Boolean ideals), plus the
transforms they are built from.
"""

from boolnl.bfcore import (
    AnfForm,
    TruthTable,
    affine_tt,
    brute_force_nonlinearity,
    distance,
    tt_from_anf,
    weight,
)
from boolnl.errors import DimensionError, ParseError, SizeLimitError
from boolnl.formats import parse_function, render_function
from boolnl.ideal import nonlinearity_ideal
from boolnl.nlp import (
    OpCounters,
    nlp_butterfly,
    nlp_closed_form,
    nlp_evaluate_all,
    nlp_from_nnf_sum,
    nonlinearity_nlp,
)
from boolnl.transforms import mobius, nonlinearity_fwt, walsh_spectrum

__version__ = "0.1.0"

__all__ = [
    "AnfForm",
    "DimensionError",
    "OpCounters",
    "ParseError",
    "SizeLimitError",
    "TruthTable",
    "affine_tt",
    "brute_force_nonlinearity",
    "distance",
    "mobius",
    "nlp_butterfly",
    "nlp_closed_form",
    "nlp_evaluate_all",
    "nlp_from_nnf_sum",
    "nonlinearity_fwt",
    "nonlinearity_ideal",
    "nonlinearity_nlp",
    "parse_function",
    "render_function",
    "tt_from_anf",
    "walsh_spectrum",
    "weight",
]
