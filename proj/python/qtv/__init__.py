"""Exact quantum torus operators on bosonic Fock space and the three-leg vertex state."""

from ._qtv import (
    QRatError,
    VertexError,
    arith,
    calibrate,
    central_sign,
    check_commutation,
    check_jacobi,
    check_symmetry,
    hbar_expand,
    max_degree,
    normalize,
    partitions,
    permutation_identity,
    qint,
    run_cli,
    vertex_state,
    vev,
    w_matrix,
)

__all__ = [
    "QRatError",
    "VertexError",
    "arith",
    "calibrate",
    "central_sign",
    "check_commutation",
    "check_jacobi",
    "check_symmetry",
    "hbar_expand",
    "max_degree",
    "normalize",
    "partitions",
    "permutation_identity",
    "qint",
    "run_cli",
    "vertex_state",
    "vev",
    "w_matrix",
]
