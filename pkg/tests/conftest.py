import itertools
from fractions import Fraction

import numpy as np
import pytest


def leibniz_det(M):
    """Exact determinant by the permutation expansion. Independent of any elimination."""
    M = [[Fraction(v) for v in row] for row in M]
    n = len(M)
    total = Fraction(0)
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
        term = Fraction(-1 if inversions % 2 else 1)
        for i, j in enumerate(perm):
            term *= M[i][j]
        total += term
    return total


def exact_definition(A):
    """(sign, sum of squared minors, principal rows) straight from the definition, in exact arithmetic."""
    A = [[Fraction(v) for v in row] for row in np.asarray(A).tolist()]
    m, n = len(A), len(A[0])
    if m < n:
        return 0, Fraction(0), ()
    sign, total, rows = 0, Fraction(0), ()
    for subset in itertools.combinations(range(m), n):
        d = leibniz_det([A[i] for i in subset])
        if sign == 0 and d != 0:
            sign, rows = (1 if d > 0 else -1), tuple(i + 1 for i in subset)
        total += d * d
    return sign, total, rows


@pytest.fixture
def rng():
    return np.random.default_rng(20261017)


def random_int_matrix(rng, m, n, lo=-3, hi=3):
    return rng.integers(lo, hi + 1, size=(m, n)).astype(float)


ACCEPTANCE_LINES = []


@pytest.fixture
def report():
    def _report(criterion, ok, detail):
        ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {criterion}: {detail}")
        return ok
    return _report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
