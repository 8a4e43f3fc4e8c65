"""Sign of a rectangular matrix.

The sign of an m x n matrix (m >= n) is the sign of the determinant of its
principal submatrix: the first nonsingular n x n row submatrix when row
subsets (i_1 < ... < i_n) are taken in lexicographic order. Wide matrices
(m < n) and rank-deficient ones have sign 0.

The fast path finds the principal rows greedily. Independence of row sets is
a matroid, so keeping each row that is independent of the rows already kept
produces exactly the lexicographically first basis. The oracle path instead
maximizes a permutation over the whole symmetric group.
"""
from __future__ import annotations

import itertools
from typing import NamedTuple

import numpy as np

from .errors import CapacityError
from .matrix import (
    DEFAULT_TOL,
    Permutation,
    ToleranceConfig,
    act,
    as_matrix,
    hadamard_bound,
    is_zero,
    rect_identity,
)

__all__ = [
    "RowScan",
    "scan_rows",
    "principal_rows",
    "sign",
    "associated_square",
    "sigma_max_oracle",
    "sign_oracle",
]

SIGMA_ORACLE_MAX_ROWS = 8
# pivots within this factor of the zero threshold make the sign advisory
_AMBIGUITY_FACTOR = 10.0


class RowScan(NamedTuple):
    principal: tuple[int, ...]
    sign: int
    ill_conditioned: bool


def _parity(perm: list[int]) -> int:
    inversions = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
    return -1 if inversions % 2 else 1


def scan_rows(A, tol: ToleranceConfig = DEFAULT_TOL) -> RowScan:
    """Greedy top-to-bottom scan for the principal rows and the sign of their minor.

    Each row is reduced against the rows kept so far by Gaussian elimination.
    It is kept when the Euclidean norm of the remainder is not zero relative
    to the norm of the original row, and its largest remaining entry becomes
    its pivot. The determinant of the kept rows (in increasing order) is then
    the product of pivots times the parity of the pivot columns, so only signs
    are tracked.

    ``ill_conditioned`` is set when some acceptance decision was made with a
    remainder within a factor of 10 of the zero threshold.
    """
    A = as_matrix(A)
    m, n = A.shape
    if m < n:
        return RowScan((), 0, False)
    reduced: list[np.ndarray] = []
    pivots: list[int] = []
    kept: list[int] = []
    det_sign = 1
    ill = False
    for i in range(m):
        r = np.array(A[i])
        for u, p in zip(reduced, pivots):
            if r[p] != 0.0:
                r -= (r[p] / u[p]) * u
            r[p] = 0.0
        thr = tol.threshold(float(np.linalg.norm(A[i])))
        rest = float(np.linalg.norm(r))
        if rest > 0.0 and thr / _AMBIGUITY_FACTOR < rest <= thr * _AMBIGUITY_FACTOR:
            ill = True
        if rest <= thr:
            continue
        p = int(np.argmax(np.abs(r)))
        reduced.append(r)
        pivots.append(p)
        kept.append(i + 1)
        det_sign *= 1 if r[p] > 0 else -1
        if len(kept) == n:
            return RowScan(tuple(kept), det_sign * _parity(pivots), ill)
    return RowScan((), 0, ill)


def principal_rows(A, tol: ToleranceConfig = DEFAULT_TOL) -> tuple[int, ...]:
    """1-based indices of the principal rows; empty without full column rank."""
    return scan_rows(A, tol).principal


def sign(A, tol: ToleranceConfig = DEFAULT_TOL) -> int:
    """Sign of A in {-1, 0, 1}.

    >>> sign([[3, 6], [4, 8], [2, 1]])
    -1
    """
    return scan_rows(A, tol).sign


# -- oracle ------------------------------------------------------------------


def associated_square(A, sigma: Permutation) -> np.ndarray:
    """The n x n matrix P_sigma^T A, with P_sigma = sigma acting on the m x n identity."""
    A = as_matrix(A)
    m, n = A.shape
    P = act(sigma, rect_identity(m, n))
    return as_matrix(P.T @ A)


def _det_is_nonzero(S: np.ndarray, tol: ToleranceConfig) -> tuple[bool, float]:
    d = float(np.linalg.det(S))
    return not is_zero(d, hadamard_bound(S), tol), d


def _descending_permutations(m: int):
    # permutations() of a descending sequence is lexicographically descending,
    # and the order on S_m is lexicographic on (sigma(m), ..., sigma(1))
    for tail_first in itertools.permutations(range(m, 0, -1)):
        yield Permutation(tail_first[::-1])


def sigma_max_oracle(A, tol: ToleranceConfig = DEFAULT_TOL) -> Permutation:
    """Largest sigma in S_m with det(P_sigma^T A) != 0; the identity when there is none.

    Walks S_m from the top of the order down, so the first hit is the maximum.
    Factorial cost; refuses m > 8.
    """
    A = as_matrix(A)
    m, n = A.shape
    if m > SIGMA_ORACLE_MAX_ROWS:
        raise CapacityError(f"sigma oracle enumerates S_m; m={m} exceeds {SIGMA_ORACLE_MAX_ROWS}")
    if m < n:
        return Permutation.identity(m)
    seen: dict[tuple[int, ...], bool] = {}
    for sigma in _descending_permutations(m):
        inv = sigma.inverse().images[:n]
        if inv not in seen:
            seen[inv] = _det_is_nonzero(associated_square(A, sigma), tol)[0]
        if seen[inv]:
            return sigma
    return Permutation.identity(m)


def sign_oracle(A, tol: ToleranceConfig = DEFAULT_TOL) -> int:
    A = as_matrix(A)
    m, n = A.shape
    if m < n:
        return 0
    nonzero, d = _det_is_nonzero(associated_square(A, sigma_max_oracle(A, tol)), tol)
    if not nonzero:
        return 0
    return 1 if d > 0 else -1
