"""Deformation families of matrix (super)algebras and their reduction checks."""

from .examples import osp_m1n1_generators, sp_n1_generators, sp_n1_relations
from .gl11 import (Gl11Embedding, Gl11Report, PReport, e_weight_cohomology, gl11_checks,
                   gl11_embedding, principal_subalgebra)
from .kernel import (FiberBasis, Residual, check_closure, check_nilpotent_limit, closure_residual,
                     constraint_residual, is_strictly_upper, kernel_at_epsilon, stabilizer_dim,
                     standard_form_change, standard_tensor)
from .polymatrix import NumMatrix, PolyMatrix
from .tensor import QuadTensor, Superspace, build_family, x

__all__ = [
    "Superspace", "QuadTensor", "build_family", "x",
    "PolyMatrix", "NumMatrix",
    "Residual", "constraint_residual", "stabilizer_dim",
    "FiberBasis", "kernel_at_epsilon", "check_closure", "closure_residual",
    "check_nilpotent_limit", "is_strictly_upper", "standard_form_change", "standard_tensor",
    "Gl11Embedding", "Gl11Report", "PReport", "gl11_embedding", "gl11_checks",
    "principal_subalgebra", "e_weight_cohomology",
    "sp_n1_generators", "sp_n1_relations", "osp_m1n1_generators",
]
