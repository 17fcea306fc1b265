"""Tensor polynomial identities ST(lambda) on d x d matrices."""

from .decision import (
    TpiVerdict,
    bett_check,
    hasse_edges,
    is_lambda_minimal,
    is_tpi,
    is_tpi_sequence,
    lambda_dn,
    lattice_dot,
    min_rect_exponent,
    non_tpi_set,
    rect_tpi_table,
    refinement_graph,
)
from .evaluator import (
    JLambda,
    c_d_magnitude,
    determine_c_d_sign,
    j_delta,
    j_delta_central,
    j_lambda,
    phi_of_j,
    swap_tensor_factors,
    trace_pairing,
)
from .oracle import (
    BudgetExceededError,
    certify,
    det_vec,
    eval_group_algebra,
    evaluate_st,
    evaluate_t_wedge,
    random_matrices,
)
from .partitions import Composition, Partition, delta, is_refinement, refinement_witness
from .symmetric import (
    CentralElement,
    DegreeCapError,
    GroupAlgebraElement,
    Permutation,
    mn_character,
    omega,
    phi,
    weingarten,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "CentralElement",
    "Composition",
    "DegreeCapError",
    "GroupAlgebraElement",
    "JLambda",
    "Partition",
    "Permutation",
    "TpiVerdict",
    "bett_check",
    "c_d_magnitude",
    "certify",
    "delta",
    "det_vec",
    "determine_c_d_sign",
    "eval_group_algebra",
    "evaluate_st",
    "evaluate_t_wedge",
    "hasse_edges",
    "is_lambda_minimal",
    "is_refinement",
    "is_tpi",
    "is_tpi_sequence",
    "j_delta",
    "j_delta_central",
    "j_lambda",
    "lambda_dn",
    "lattice_dot",
    "min_rect_exponent",
    "mn_character",
    "non_tpi_set",
    "omega",
    "phi",
    "phi_of_j",
    "random_matrices",
    "rect_tpi_table",
    "refinement_graph",
    "refinement_witness",
    "swap_tensor_factors",
    "trace_pairing",
    "weingarten",
]
