"""Exact computations for rank-2 monad bundles on the projective plane,
the loop-group lattice model of the affine Grassmannian, and the Schubert
ring with its degree-divisibility obstruction.

All arithmetic is exact (GMP rationals with on-demand algebraic
extensions). Matrices travel as JSON strings in the same formats the
command-line tool reads and writes.
"""

from ._kpm import (
    MalformedInput,
    SingularInput,
    TruncationTooSmall,
    DegenerateData,
    schubert_product,
    eps_product,
    admissible_degree,
    p3_pullback,
    lattice_index,
    lattice_member,
    splitting_type,
    vg_h0,
    birkhoff_exponent,
    adhm_validate,
    adhm_nondegenerate,
    adhm_fiber,
    splitting_on_line,
    jumping_scan,
    random_adhm,
    act_gl,
    act_cstar,
    gl_equivalent,
    verify_scaling_equivariance,
    pi_map,
    cli,
)

__all__ = [
    "MalformedInput",
    "SingularInput",
    "TruncationTooSmall",
    "DegenerateData",
    "schubert_product",
    "eps_product",
    "admissible_degree",
    "p3_pullback",
    "lattice_index",
    "lattice_member",
    "splitting_type",
    "vg_h0",
    "birkhoff_exponent",
    "adhm_validate",
    "adhm_nondegenerate",
    "adhm_fiber",
    "splitting_on_line",
    "jumping_scan",
    "random_adhm",
    "act_gl",
    "act_cstar",
    "gl_equivalent",
    "verify_scaling_equivariance",
    "pi_map",
    "cli",
]
