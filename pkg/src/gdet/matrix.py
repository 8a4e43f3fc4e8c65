"""Dense real matrices, permutations, the numeric-zero policy and matrix text I/O.

Matrices are plain 2-D ``float64`` numpy arrays, copied and marked read-only
on the way in. All index-taking interfaces are 1-based, the way rows are
numbered in the mathematics (row 1 is the top row).
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionError, ParseError

__all__ = [
    "ToleranceConfig",
    "DEFAULT_TOL",
    "Permutation",
    "as_matrix",
    "rect_identity",
    "permutation_compare",
    "act",
    "row_select",
    "gram",
    "is_zero",
    "hadamard_bound",
    "parse_matrix",
    "render_matrix",
]


@dataclass(frozen=True)
class ToleranceConfig:
    """Numeric-zero policy: ``|v|`` counts as zero when ``|v| <= max(abs_zero, rel_zero * scale)``."""

    rel_zero: float = 1e-10
    abs_zero: float = 1e-12

    def __post_init__(self):
        if not (self.rel_zero >= 0 and self.abs_zero >= 0):
            raise ValueError("tolerances must be nonnegative")

    def threshold(self, scale: float) -> float:
        return max(self.abs_zero, self.rel_zero * scale)


DEFAULT_TOL = ToleranceConfig()


def is_zero(value: float, scale: float = 1.0, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    if scale < 0:
        raise ValueError("scale must be nonnegative")
    return abs(value) <= tol.threshold(scale)


def as_matrix(data) -> np.ndarray:
    """Validate ``data`` and return a read-only float64 copy of shape (m, n).

    A 1-D input is taken as a column vector, so ``as_matrix([3, 4, 2])`` is 3x1.
    """
    arr = np.array(data, dtype=np.float64, copy=True)
    if arr.ndim == 1:
        arr = arr.reshape(-1, 1)
    if arr.ndim != 2:
        raise DimensionError(f"expected a 2-D matrix, got {arr.ndim} dimensions")
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise DimensionError(f"empty matrix of shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("matrix entries must be finite")
    arr.flags.writeable = False
    return arr


def rect_identity(m: int, n: int) -> np.ndarray:
    """The m x n matrix (e_1, ..., e_n)."""
    return as_matrix(np.eye(m, n))


@total_ordering
@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..m} given by its images: ``images[i-1] == sigma(i)``.

    Products follow the convention that makes :func:`act` a left action:
    ``(sigma * tau)(i) == tau(sigma(i))``, so
    ``act(sigma * tau, A) == act(sigma, act(tau, A))``.

    Comparison operators implement the total order on S_m in which sigma > tau
    when, at the largest position where they differ, sigma has the larger image.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")

    @classmethod
    def identity(cls, m: int) -> "Permutation":
        return cls(tuple(range(1, m + 1)))

    @classmethod
    def reversal(cls, m: int) -> "Permutation":
        """i -> m - i + 1, the least element of the order."""
        return cls(tuple(range(m, 0, -1)))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for i, s in enumerate(self.images, start=1):
            inv[s - 1] = i
        return Permutation(tuple(inv))

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.size != other.size:
            raise DimensionError("permutations act on different sets")
        return Permutation(tuple(other(s) for s in self.images))

    def __lt__(self, other: "Permutation") -> bool:
        return permutation_compare(self, other) < 0


def permutation_compare(sigma: Permutation, tau: Permutation) -> int:
    """Return -1, 0 or 1 as sigma is less than, equal to or greater than tau."""
    if sigma.size != tau.size:
        raise DimensionError(f"cannot compare S_{sigma.size} with S_{tau.size}")
    for s, t in zip(reversed(sigma.images), reversed(tau.images)):
        if s != t:
            return 1 if s > t else -1
    return 0


def act(sigma: Permutation, A) -> np.ndarray:
    """Row i of the result is row sigma(i) of A."""
    A = as_matrix(A)
    if sigma.size != A.shape[0]:
        raise DimensionError(f"permutation of {sigma.size} cannot act on {A.shape[0]} rows")
    return as_matrix(A[[s - 1 for s in sigma.images]])


def row_select(A, indices: Sequence[int]) -> np.ndarray:
    """Stack rows ``indices`` (1-based, in the given order) of A."""
    A = as_matrix(A)
    m = A.shape[0]
    idx = [int(i) for i in indices]
    if not idx:
        raise DimensionError("no rows selected")
    if len(set(idx)) != len(idx):
        raise DimensionError(f"duplicate row index in {tuple(idx)}")
    bad = [i for i in idx if not 1 <= i <= m]
    if bad:
        raise DimensionError(f"row index {bad[0]} outside 1..{m}")
    return as_matrix(A[[i - 1 for i in idx]])


def gram(A) -> np.ndarray:
    A = as_matrix(A)
    G = A.T @ A
    return as_matrix(0.5 * (G + G.T))


def hadamard_bound(A) -> float:
    """Product of the Euclidean row norms, an upper bound on |det A|."""
    return float(np.prod(np.linalg.norm(np.asarray(A), axis=1)))


# -- text format -----------------------------------------------------------

_DECIMAL = re.compile(r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?\Z")
_NONFINITE = re.compile(r"[+-]?(?:nan|inf|infinity)\Z", re.IGNORECASE)


def _parse_field(field: str, line: int, column: int) -> float:
    if _NONFINITE.match(field):
        raise ParseError(f"non-finite literal {field!r} not allowed", line, column)
    if not _DECIMAL.match(field):
        raise ParseError(f"cannot parse {field!r} as a decimal number", line, column)
    value = float(field)
    if not math.isfinite(value):
        raise ParseError(f"{field!r} overflows a double", line, column)
    return value


def parse_matrix(text: str | Iterable[str], fmt: str = "whitespace") -> np.ndarray:
    """Parse one matrix, one row per line.

    ``fmt`` is ``"whitespace"`` (fields split on runs of spaces/tabs) or
    ``"csv"`` (fields split on commas). Blank lines and ``#`` comments are
    skipped.
    """
    if fmt not in ("whitespace", "csv"):
        raise ValueError(f"unknown format {fmt!r}")
    lines = text.splitlines() if isinstance(text, str) else list(text)
    rows = []
    width = None
    for lineno, raw in enumerate(lines, start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if fmt == "csv":
            fields = [f.strip() for f in stripped.split(",")]
        else:
            fields = stripped.split()
        row = [_parse_field(f, lineno, col) for col, f in enumerate(fields, start=1)]
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ParseError(f"expected {width} fields, found {len(row)}", lineno)
        rows.append(row)
    if not rows:
        raise ParseError("no matrix rows found")
    return as_matrix(rows)


def render_matrix(A, fmt: str = "whitespace") -> str:
    """Inverse of :func:`parse_matrix`; 17 significant digits make the round trip exact."""
    sep = "," if fmt == "csv" else " "
    return "".join(sep.join(format(v, ".17g") for v in row) + "\n" for row in as_matrix(A))
