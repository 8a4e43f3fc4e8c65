"""Applications: Cramer's rule for tall consistent systems, subspace and
linear-variety membership, and the oriented volume of a parallelepiped.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import _qr_magnitude, gdet
from .errors import DimensionError, DomainError, InconsistentSystemError, SingularSystemError
from .matrix import DEFAULT_TOL, ToleranceConfig, as_matrix, is_zero

__all__ = [
    "CramerSolution",
    "VolumeResult",
    "cramer_solve",
    "in_subspace",
    "in_variety",
    "generalized_volume",
]


@dataclass(frozen=True)
class CramerSolution:
    x: np.ndarray
    residual_norm: float
    # (Gdet(A_i), Gdet(A)) for each coordinate i
    per_coordinate: tuple[tuple[float, float], ...]


@dataclass(frozen=True)
class VolumeResult:
    volume: float
    orientation: int
    principal: tuple[int, ...]


def _vector(v, length: int, name: str) -> np.ndarray:
    v = np.asarray(v, dtype=np.float64).ravel()
    if v.shape[0] != length:
        raise DimensionError(f"{name} has {v.shape[0]} entries, expected {length}")
    if not np.all(np.isfinite(v)):
        raise ValueError(f"{name} has non-finite entries")
    return v


def _columns(vectors: Sequence) -> np.ndarray:
    cols = [np.asarray(v, dtype=np.float64).ravel() for v in vectors]
    if not cols:
        raise DimensionError("no vectors given")
    if len({c.shape[0] for c in cols}) != 1:
        raise DimensionError("vectors have different lengths")
    return as_matrix(np.column_stack(cols))


def cramer_solve(A, b, tol: ToleranceConfig = DEFAULT_TOL) -> CramerSolution:
    """Solve Ax = b by x_i = Gdet(A_i) / Gdet(A), A_i being A with column i replaced by b.

    A may be tall; b must lie in its column space. Raises
    :class:`SingularSystemError` when Gdet(A) = 0 and
    :class:`InconsistentSystemError` when b is not in the column space.
    """
    A = as_matrix(A)
    m, n = A.shape
    b = _vector(b, m, "right-hand side")
    det_a = gdet(A, tol)
    if det_a.sign == 0:
        raise SingularSystemError("Gdet(A) = 0: the system has no solution or infinitely many")

    x_ls = np.linalg.lstsq(A, b, rcond=None)[0]
    residual = float(np.linalg.norm(A @ x_ls - b))
    bound = tol.threshold(np.linalg.norm(A) * np.linalg.norm(x_ls) + np.linalg.norm(b))
    if residual > bound:
        raise InconsistentSystemError(
            f"right-hand side is not in the column space (residual {residual:.3g})", residual
        )

    x = np.empty(n)
    pairs = []
    for i in range(n):
        Ai = np.array(A)
        Ai[:, i] = b
        det_i = gdet(Ai, tol).value
        x[i] = det_i / det_a.value
        pairs.append((det_i, det_a.value))
    x.flags.writeable = False
    return CramerSolution(x, float(np.linalg.norm(A @ x - b)), tuple(pairs))


def in_subspace(basis: Sequence, x, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    """Whether x lies in the span of ``basis`` (n independent vectors in R^m, n < m).

    Decided by Gdet(basis..., x) = 0. The test is on the ratio
    |Gdet(basis..., x)| / (|Gdet(basis)| |x|), the distance from x to the span
    relative to |x|, so the answer does not change under uniform scaling.
    """
    M = _columns(basis)
    m, n = M.shape
    if n >= m:
        raise DimensionError(f"{n} basis vectors do not span a proper subspace of R^{m}")
    x = _vector(x, m, "point")
    base = gdet(M, tol)
    if base.sign == 0:
        raise DomainError("basis vectors are linearly dependent")
    norm_x = float(np.linalg.norm(x))
    if norm_x == 0.0:
        return True
    extended = _qr_magnitude(np.column_stack([M, x]))
    return is_zero(extended / (base.magnitude * norm_x), 1.0, tol)


def in_variety(basis: Sequence, offset, x, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    """Whether x lies in offset + span(basis)."""
    M = _columns(basis)
    m = M.shape[0]
    return in_subspace(basis, _vector(x, m, "point") - _vector(offset, m, "offset"), tol)


def generalized_volume(generators: Sequence, tol: ToleranceConfig = DEFAULT_TOL) -> VolumeResult:
    """Oriented n-volume of the parallelepiped spanned by n vectors in R^m.

    The orientation is the sign of the projection onto the coordinate subspace
    named by ``principal``.

    >>> v = generalized_volume([(3, 4, 2), (6, 8, 1)])
    >>> round(v.volume, 9), v.orientation, v.principal
    (15.0, -1, (1, 3))
    """
    g = gdet(_columns(generators), tol)
    return VolumeResult(g.magnitude, g.sign, g.principal)
