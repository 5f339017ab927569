"""Six-weight cyclic codes C_(p,m,k) over F_p and their weight distributions."""

from .charsum import d_direct, d_fast, d_table, s_distribution, s_value, t_value
from .codes import (
    WeightDist,
    build_code,
    codeword,
    weight_dist_bruteforce,
    weight_dist_charsum,
    weight_dist_closed_form,
    weight_of,
)
from .cycint import CycInt
from .gf import FieldParams, FpPoly, build_field, lambda_power_check, legendre, minimal_poly
from .quadform import build_form, diagonalize, gauss_sum_closed_form, y_summed_gauss

__version__ = "0.1.0"

__all__ = [
    "CycInt",
    "FieldParams",
    "FpPoly",
    "WeightDist",
    "build_code",
    "build_field",
    "build_form",
    "codeword",
    "d_direct",
    "d_fast",
    "d_table",
    "diagonalize",
    "gauss_sum_closed_form",
    "lambda_power_check",
    "legendre",
    "minimal_poly",
    "s_distribution",
    "s_value",
    "t_value",
    "weight_dist_bruteforce",
    "weight_dist_charsum",
    "weight_dist_closed_form",
    "weight_of",
    "y_summed_gauss",
]
