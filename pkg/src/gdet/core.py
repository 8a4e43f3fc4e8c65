"""The generalized determinant and its checks.

For an m x n real matrix A,

    Gdet(A) = sign(A) * sqrt(sum of squared n x n minors),   m >= n
    Gdet(A) = 0,                                              m <  n

where the sum runs over row subsets i_1 < ... < i_n. The magnitude equals
sqrt(det(A^T A)) and the product of the singular values; the default path gets
it from the diagonal of R in a QR factorization, which avoids squaring the
condition number.

Paths:

* :func:`gdet` -- QR magnitude, greedy sign. The one to use.
* :func:`gdet_minor_oracle` -- the literal minor sum.
* :func:`gdet_exact_oracle` -- integer matrices, exact arithmetic.
* :func:`singular_value_magnitude` -- product of singular values.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .errors import CapacityError, DimensionError, DomainError, RankError
from .matrix import DEFAULT_TOL, ToleranceConfig, as_matrix, gram, hadamard_bound, is_zero
from .sign_system import scan_rows

__all__ = [
    "GdetResult",
    "QRFactors",
    "ExactGdet",
    "CheckResult",
    "gdet",
    "gdet_minor_oracle",
    "gdet_exact_oracle",
    "bareiss_det",
    "qr_factor",
    "singular_value_magnitude",
    "check_multiplication",
    "check_left_multiplication",
    "check_cauchy_binet",
]

MINOR_ORACLE_MAX_SUBSETS = 10**6
EXACT_ORACLE_MAX_SUBSETS = 10**5
EXACT_ORACLE_MAX_ENTRY = 2**20
CAUCHY_BINET_MAX_SUBSETS = 10**5


@dataclass(frozen=True)
class GdetResult:
    sign: int
    magnitude: float
    principal: tuple[int, ...] = ()
    ill_conditioned: bool = False

    @property
    def value(self) -> float:
        return self.sign * self.magnitude

    def __float__(self):
        return self.value


_ZERO = GdetResult(0, 0.0)


class QRFactors(NamedTuple):
    Q: np.ndarray
    R: np.ndarray


class ExactGdet(NamedTuple):
    sign: int
    magnitude_squared: int


class CheckResult(NamedTuple):
    lhs: float
    rhs: float
    holds: bool
    detail: Optional[dict] = None


def _qr_magnitude(A: np.ndarray) -> float:
    R = np.linalg.qr(A, mode="r")
    return float(np.prod(np.abs(np.diag(R))))


def gdet(A, tol: ToleranceConfig = DEFAULT_TOL) -> GdetResult:
    """Generalized determinant of A.

    >>> round(gdet([[3, 6], [4, 8], [2, 1]]).value, 9)
    -15.0
    """
    A = as_matrix(A)
    m, n = A.shape
    if m < n:
        return _ZERO
    scan = scan_rows(A, tol)
    if scan.sign == 0:
        # rank deficient: magnitude is exactly zero, not rounding noise
        return GdetResult(0, 0.0, (), scan.ill_conditioned)
    return GdetResult(scan.sign, _qr_magnitude(A), scan.principal, scan.ill_conditioned)


def qr_factor(A, tol: ToleranceConfig = DEFAULT_TOL) -> QRFactors:
    """Thin QR factorization with a strictly positive diagonal in R.

    Raises :class:`RankError` unless A has full column rank.
    """
    A = as_matrix(A)
    m, n = A.shape
    if m < n or scan_rows(A, tol).sign == 0:
        raise RankError(f"{m}x{n} matrix is not of full column rank")
    Q, R = np.linalg.qr(A, mode="reduced")
    flip = np.where(np.diag(R) < 0, -1.0, 1.0)
    Q = Q * flip
    R = flip[:, None] * R
    if np.any(np.diag(R) <= 0):
        raise RankError("zero diagonal in R")
    return QRFactors(as_matrix(Q), as_matrix(np.triu(R)))


def singular_value_magnitude(A) -> float:
    """Product of the singular values of A (zero for wide matrices)."""
    A = as_matrix(A)
    m, n = A.shape
    if m < n:
        return 0.0
    return float(np.prod(np.linalg.svd(A, compute_uv=False)))


def gdet_minor_oracle(A, tol: ToleranceConfig = DEFAULT_TOL) -> GdetResult:
    """Gdet straight from the definition: enumerate every maximal minor.

    The sign is that of the first minor, in lexicographic row order, that is
    nonzero relative to its Hadamard bound.
    """
    A = as_matrix(A)
    m, n = A.shape
    if m < n:
        return _ZERO
    count = math.comb(m, n)
    if count > MINOR_ORACLE_MAX_SUBSETS:
        raise CapacityError(f"C({m},{n}) = {count} minors exceeds {MINOR_ORACLE_MAX_SUBSETS}")
    subsets = np.array(list(itertools.combinations(range(m), n)), dtype=np.intp)
    blocks = A[subsets]
    dets = np.linalg.det(blocks)
    bounds = np.prod(np.linalg.norm(blocks, axis=2), axis=1)
    first = None
    for k, (d, b) in enumerate(zip(dets, bounds)):
        if not is_zero(float(d), float(b), tol):
            first = k
            break
    if first is None:
        return _ZERO
    s = 1 if dets[first] > 0 else -1
    magnitude = math.sqrt(math.fsum(float(d) * float(d) for d in dets))
    return GdetResult(s, magnitude, tuple(int(i) + 1 for i in subsets[first]))


def bareiss_det(M: list[list[int]]) -> int:
    """Exact determinant of a square integer matrix by fraction-free elimination."""
    M = [list(row) for row in M]
    n = len(M)
    s = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    s = -s
                    break
            else:
                return 0
        pivot = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * pivot - M[i][k] * M[k][j]) // prev
        prev = pivot
    return s * M[n - 1][n - 1]


def _integer_rows(A) -> list[list[int]]:
    arr = np.asarray(A)
    if arr.ndim == 1:
        arr = arr.reshape(-1, 1)
    if arr.ndim != 2 or arr.size == 0:
        raise DimensionError("expected a nonempty 2-D matrix")
    rows = []
    for row in arr.tolist():
        out = []
        for v in row:
            if isinstance(v, float):
                if not (math.isfinite(v) and v.is_integer()):
                    raise DomainError(f"entry {v!r} is not an integer")
                v = int(v)
            elif not isinstance(v, int):
                raise DomainError(f"entry {v!r} is not an integer")
            if abs(v) > EXACT_ORACLE_MAX_ENTRY:
                raise DomainError(f"entry {v} exceeds 2^20 in magnitude")
            out.append(v)
        rows.append(out)
    return rows


def gdet_exact_oracle(A) -> ExactGdet:
    """Exact (sign, Gdet^2) of an integer matrix.

    >>> gdet_exact_oracle([[3, 6], [4, 8], [2, 1]])
    ExactGdet(sign=-1, magnitude_squared=225)
    """
    rows = _integer_rows(A)
    m, n = len(rows), len(rows[0])
    if m < n:
        return ExactGdet(0, 0)
    count = math.comb(m, n)
    if count > EXACT_ORACLE_MAX_SUBSETS:
        raise CapacityError(f"C({m},{n}) = {count} minors exceeds {EXACT_ORACLE_MAX_SUBSETS}")
    s = 0
    total = 0
    for subset in itertools.combinations(range(m), n):
        d = bareiss_det([rows[i] for i in subset])
        if s == 0 and d != 0:
            s = 1 if d > 0 else -1
        total += d * d
    return ExactGdet(s, total)


def _agree(lhs: float, rhs: float, rtol: float, atol: float) -> bool:
    return abs(lhs - rhs) <= max(atol, rtol * max(abs(lhs), abs(rhs)))


def check_multiplication(A, B, tol: ToleranceConfig = DEFAULT_TOL, rtol: float = 1e-8) -> CheckResult:
    """Compare Gdet(AB) with Gdet(A) Gdet(B) for a square right factor B."""
    A = as_matrix(A)
    B = as_matrix(B)
    n = A.shape[1]
    if B.shape != (n, n):
        raise DimensionError(f"right factor must be {n}x{n}, got {B.shape[0]}x{B.shape[1]}")
    lhs = gdet(A @ B, tol).value
    rhs = gdet(A, tol).value * gdet(B, tol).value
    return CheckResult(lhs, rhs, _agree(lhs, rhs, rtol, tol.abs_zero))


def check_left_multiplication(B, A, tol: ToleranceConfig = DEFAULT_TOL, rtol: float = 1e-8) -> CheckResult:
    """Compare Gdet(BA) with Gdet(B) Gdet(A) for square B on the left.

    No such law holds in general; B = diag(1, 2), A = (1, 0)^T gives 1 vs 2.
    """
    B = as_matrix(B)
    A = as_matrix(A)
    m = A.shape[0]
    if B.shape != (m, m):
        raise DimensionError(f"left factor must be {m}x{m}, got {B.shape[0]}x{B.shape[1]}")
    lhs = gdet(B @ A, tol).value
    rhs = gdet(B, tol).value * gdet(A, tol).value
    return CheckResult(lhs, rhs, _agree(lhs, rhs, rtol, tol.abs_zero))


def check_cauchy_binet(A, k: int, tol: ToleranceConfig = DEFAULT_TOL, rtol: float = 1e-8) -> CheckResult:
    """Compare C(m-n, k-n) det(A^T A) with the sum of Gdet^2 over all k-row submatrices.

    ``detail`` also reports the coefficient read as C(k-n, m-n), which is
    zero whenever k < m.
    """
    A = as_matrix(A)
    m, n = A.shape
    if not n <= k <= m:
        raise DimensionError(f"k={k} outside {n}..{m}")
    count = math.comb(m, k)
    if count > CAUCHY_BINET_MAX_SUBSETS:
        raise CapacityError(f"C({m},{k}) = {count} submatrices exceeds {CAUCHY_BINET_MAX_SUBSETS}")
    coefficient = math.comb(m - n, k - n)
    literal = math.comb(k - n, m - n)
    gram_det = float(np.linalg.det(gram(A)))
    lhs = coefficient * gram_det
    rhs = math.fsum(
        gdet(A[list(rows)], tol).magnitude ** 2 for rows in itertools.combinations(range(m), k)
    )
    scale = coefficient * hadamard_bound(A.T) ** 2
    holds = _agree(lhs, rhs, rtol, tol.threshold(scale))
    detail = {
        "coefficient": coefficient,
        "literal_coefficient": literal,
        "lhs_literal": literal * gram_det,
    }
    return CheckResult(lhs, rhs, holds, detail)
