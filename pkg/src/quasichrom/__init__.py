"""Chromatic quasi-polynomials of lists in finitely generated abelian groups."""

from .abelian import (
    CosetMap,
    ElementList,
    FgAbelianGroup,
    GSpec,
    IntMatrix,
    SnfResult,
    hom_count,
    lcm_period,
    multiplicity,
    quotient,
    snf,
    subgroup_rank,
)
from .errors import CapExceededError, InputError, QuasiChromError
from .polynomial import BivariatePolynomial, IntPolynomial
from .quasipoly import QuasiPolynomial, evaluate, has_gcd_property, lift_period, qp_add, qp_scale, qp_sub
from .transforms import (
    CwInstance,
    Lifting,
    bm_to_cw,
    contraction,
    cw_to_bm,
    deletion,
    graph_to_list,
    localization,
    restriction_char_poly,
    torsion_split,
)
from .tutte import (
    chromatic_quasi,
    chromatic_quasi_dc,
    g_char_poly,
    g_tutte,
    minimal_period,
    real_char_poly,
    torsion_vanishing_check,
)
from .oracle import bm_count, cw_count, ktt_count, verify

__version__ = "0.1.0"
