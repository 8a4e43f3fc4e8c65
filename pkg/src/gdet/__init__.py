"""Generalized determinant of rectangular real matrices.

Gdet extends the determinant to m x n matrices: its magnitude is the square
root of the sum of squared maximal minors, its sign is that of the first
nonsingular n x n row submatrix, and it is 0 when m < n.
"""
from .apps import CramerSolution, VolumeResult, cramer_solve, generalized_volume, in_subspace, in_variety
from .core import (
    CheckResult,
    ExactGdet,
    GdetResult,
    QRFactors,
    bareiss_det,
    check_cauchy_binet,
    check_left_multiplication,
    check_multiplication,
    gdet,
    gdet_exact_oracle,
    gdet_minor_oracle,
    qr_factor,
    singular_value_magnitude,
)
from .errors import (
    CapacityError,
    DimensionError,
    DomainError,
    GdetError,
    InconsistentSystemError,
    ParseError,
    RankError,
    SingularSystemError,
)
from .matrix import (
    DEFAULT_TOL,
    Permutation,
    ToleranceConfig,
    act,
    as_matrix,
    gram,
    hadamard_bound,
    is_zero,
    parse_matrix,
    permutation_compare,
    rect_identity,
    render_matrix,
    row_select,
)
from .sign_system import associated_square, principal_rows, scan_rows, sigma_max_oracle, sign, sign_oracle

__version__ = "0.1.0"
