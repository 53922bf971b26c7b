"""Complex differentiation matrices for rational and periodic meromorphic functions.

Thin python layer over the C++ core: node generation, the four matrix
families, interpolation evaluators, special-function oracles, the
smallest-eigenpair solver, and the bundled experiment sweeps.
"""

from ._merodiff import (  # noqa: F401
    DiffMatrix,
    NumericalFailure,
    ValidationError,
    algebraic_matrix,
    build_kummer_operator,
    conservative_nodes_bound,
    elliptic_K,
    elliptic_sweep,
    equispaced_periodic_nodes,
    gauss_trig_eval,
    hyperbolic_matrix,
    jacobi_sn_cn_dn,
    kummer_M,
    kummer_experiment,
    lagrange_eval,
    min_nodes_exact,
    periodic_meromorphic_matrix,
    periodic_meromorphic_power,
    rational_interp_eval,
    rational_matrix,
    rational_power,
    rational_test,
    segment_nodes,
    smallest_eigenpair,
    table1_sweep,
    trigonometric_matrix,
    validate_against_poles,
    weierstrass_p,
)

__all__ = [
    "DiffMatrix",
    "NumericalFailure",
    "ValidationError",
    "algebraic_matrix",
    "build_kummer_operator",
    "conservative_nodes_bound",
    "elliptic_K",
    "elliptic_sweep",
    "equispaced_periodic_nodes",
    "gauss_trig_eval",
    "hyperbolic_matrix",
    "jacobi_sn_cn_dn",
    "kummer_M",
    "kummer_experiment",
    "lagrange_eval",
    "min_nodes_exact",
    "periodic_meromorphic_matrix",
    "periodic_meromorphic_power",
    "rational_interp_eval",
    "rational_matrix",
    "rational_power",
    "rational_test",
    "segment_nodes",
    "smallest_eigenpair",
    "table1_sweep",
    "trigonometric_matrix",
    "validate_against_poles",
    "weierstrass_p",
]
