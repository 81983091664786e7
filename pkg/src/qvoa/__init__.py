"""Exact q-series checks for the osp(1|2n) / principal-subspace identity.

The bosonic lattice sum (:func:`lhs_series`), the fermionic Nahm sum
(:func:`rhs_series`) and the quasiparticle count (:func:`qp_character`)
are independent computations of the same series.
"""

__version__ = "0.1.0"

from ._backend import BACKEND, available_backends
from .errors import (IntegralityError, InvalidParameterError, InvariantViolation, NonCanonicalMonomialError,
                     NonInvertibleSeriesError, NotPositiveDefiniteError, QvoaError)
from .lhs import LhsParams, h_weight_crosscheck, lattice_terms, lhs_exponent, lhs_series, make_params, xi
from .nahm import NahmForm, build_nahm_form, enumerate_lattice, nahm_form_for_colors, nahm_series, rhs_series
from .osp import Weight, build_root_system, central_charge, conformal_weight, weyl_dim, weyl_sdim
from .quasiparticle import QPMonomial, charge_type_census, is_admissible, qp_character
from .series import QSeries, euler_power, pochhammer

__all__ = [
    "__version__", "BACKEND", "available_backends",
    "QvoaError", "InvalidParameterError", "InvariantViolation", "IntegralityError",
    "NonInvertibleSeriesError", "NotPositiveDefiniteError", "NonCanonicalMonomialError",
    "QSeries", "pochhammer", "euler_power",
    "NahmForm", "build_nahm_form", "nahm_form_for_colors", "enumerate_lattice", "nahm_series", "rhs_series",
    "LhsParams", "make_params", "xi", "lhs_exponent", "lattice_terms", "lhs_series", "h_weight_crosscheck",
    "Weight", "build_root_system", "weyl_dim", "weyl_sdim", "central_charge", "conformal_weight",
    "QPMonomial", "is_admissible", "qp_character", "charge_type_census",
]
