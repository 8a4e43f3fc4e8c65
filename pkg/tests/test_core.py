import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from conftest import exact_definition, leibniz_det, random_int_matrix
from gdet import (
    CapacityError,
    DimensionError,
    DomainError,
    GdetResult,
    RankError,
    bareiss_det,
    check_cauchy_binet,
    check_left_multiplication,
    check_multiplication,
    gdet,
    gdet_exact_oracle,
    gdet_minor_oracle,
    gram,
    qr_factor,
    rect_identity,
    sign,
    singular_value_magnitude,
)

VOLUME_EXAMPLE = [[3, 6], [4, 8], [2, 1]]


def close(a, b, rtol):
    return abs(a - b) <= rtol * max(abs(a), abs(b))


# -- gdet ----------------------------------------------------------------------

def test_gdet_examples():
    g = gdet(VOLUME_EXAMPLE)
    assert g.value == pytest.approx(-15, abs=1e-12)
    assert g.principal == (1, 3)
    assert gdet([[1, 0], [0, 2]]).value == pytest.approx(2)
    assert gdet([[1, 0]]) == GdetResult(0, 0.0)
    g = gdet([3, 4, 2])
    assert g.sign == 1
    assert g.value == pytest.approx(math.sqrt(29), rel=1e-15)
    assert exact_definition([[3], [4], [2]])[:2] == (1, 29)


def test_result_invariants(rng):
    for _ in range(200):
        m = int(rng.integers(1, 6))
        n = int(rng.integers(1, 6))
        g = gdet(random_int_matrix(rng, m, n, -1, 1))
        assert g.value == g.sign * g.magnitude
        assert (g.sign == 0) == (g.magnitude == 0) == (g.principal == ())
        assert float(g) == g.value


def test_rank_deficient_magnitude_is_exactly_zero():
    A = np.array([[1.0, 2.0], [2.0, 4.0], [0.1, 0.2]])
    assert gdet(A) == GdetResult(0, 0.0)


def test_minor_oracle_examples():
    g = gdet_minor_oracle(VOLUME_EXAMPLE)
    assert g.sign == -1
    assert g.magnitude == pytest.approx(15, rel=1e-14)
    assert g.principal == (1, 3)
    for m in range(1, 6):
        for n in range(1, m + 1):
            assert gdet_minor_oracle(rect_identity(m, n)).value == 1
    assert gdet_minor_oracle([[1], [1]]).value == pytest.approx(math.sqrt(2))


def test_minor_oracle_capacity():
    with pytest.raises(CapacityError):
        gdet_minor_oracle(np.ones((30, 10)))


def test_exact_oracle_examples():
    assert gdet_exact_oracle(VOLUME_EXAMPLE) == (-1, 225)
    assert gdet_exact_oracle(np.zeros((3, 2))) == (0, 0)
    assert exact_definition([[1, 0], [0, 1], [1, 1]])[:2] == (1, 3)
    assert gdet_exact_oracle([[1, 0], [0, 1], [1, 1]]) == (1, 3)
    assert gdet_exact_oracle([[1, 0]]) == (0, 0)


def test_exact_oracle_errors():
    with pytest.raises(DomainError):
        gdet_exact_oracle([[0.5, 1]])
    with pytest.raises(DomainError):
        gdet_exact_oracle([[2 ** 21]])
    with pytest.raises(CapacityError):
        gdet_exact_oracle(np.ones((20, 10), dtype=int))


def test_bareiss_matches_leibniz(rng):
    for _ in range(300):
        n = int(rng.integers(1, 6))
        M = rng.integers(-9, 10, size=(n, n)).tolist()
        if rng.random() < 0.3:
            M[int(rng.integers(n))] = [0] * n
        assert bareiss_det(M) == leibniz_det(M)


def test_exact_oracle_matches_definition(rng):
    for _ in range(200):
        m = int(rng.integers(1, 7))
        n = int(rng.integers(1, m + 1))
        A = rng.integers(-5, 6, size=(m, n))
        s, total, _ = exact_definition(A)
        assert gdet_exact_oracle(A) == (s, total)


# -- QR ------------------------------------------------------------------------

def test_qr_examples():
    Q, R = qr_factor([[3], [4]])
    np.testing.assert_allclose(Q, [[0.6], [0.8]], atol=1e-15)
    np.testing.assert_allclose(R, [[5]])
    assert sign(Q) == sign([[3], [4]]) == 1
    Q, R = qr_factor(rect_identity(3, 2))
    np.testing.assert_array_equal(Q, rect_identity(3, 2))
    np.testing.assert_array_equal(R, np.eye(2))
    _, R = qr_factor(VOLUME_EXAMPLE)
    assert np.prod(np.diag(R)) == pytest.approx(15)


def test_qr_rank_error():
    with pytest.raises(RankError):
        qr_factor([[1, 2], [2, 4]])
    with pytest.raises(RankError):
        qr_factor([[1, 0]])


def test_qr_invariants(rng):
    for _ in range(300):
        m = int(rng.integers(1, 8))
        n = int(rng.integers(1, m + 1))
        A = rng.standard_normal((m, n))
        Q, R = qr_factor(A)
        assert np.all(np.diag(R) > 0)
        np.testing.assert_array_equal(R, np.triu(R))
        np.testing.assert_allclose(Q.T @ Q, np.eye(n), atol=1e-12, rtol=0)
        assert np.linalg.norm(Q @ R - A) <= 1e-10 * np.linalg.norm(A)
        assert sign(Q) == sign(A)


# -- singular values -------------------------------------------------------------

def test_singular_value_examples():
    assert singular_value_magnitude(VOLUME_EXAMPLE) == pytest.approx(15)
    assert singular_value_magnitude(rect_identity(5, 3)) == pytest.approx(1)
    assert singular_value_magnitude([[2, 0], [0, 3], [0, 0]]) == pytest.approx(6)
    assert singular_value_magnitude([[1, 2]]) == 0


# -- cross-path agreement ----------------------------------------------------------

def test_three_path_agreement_random(rng):
    for _ in range(500):
        m = int(rng.integers(1, 8))
        n = int(rng.integers(1, m + 1))
        A = rng.standard_normal((m, n))
        g = gdet(A)
        o = gdet_minor_oracle(A)
        assert g.sign == o.sign
        assert close(g.value, o.value, 1e-8)
        assert close(g.magnitude, singular_value_magnitude(A), 1e-8)


def test_integer_agreement_with_exact(rng):
    for _ in range(500):
        m = int(rng.integers(1, 8))
        n = int(rng.integers(1, m + 1))
        A = random_int_matrix(rng, m, n)
        s, mag2 = gdet_exact_oracle(A)
        g = gdet(A)
        assert g.sign == s
        if mag2 == 0:
            assert g.magnitude == 0
        else:
            assert close(g.magnitude ** 2, mag2, 1e-6)


def test_square_matches_lu_determinant(rng):
    for _ in range(300):
        n = int(rng.integers(1, 7))
        A = rng.standard_normal((n, n))
        assert close(gdet(A).value, np.linalg.det(A), 1e-9)


def test_gdet_is_deterministic(rng):
    A = rng.standard_normal((7, 3))
    assert all(gdet(A) == gdet(A) for _ in range(5))
    assert gdet_minor_oracle(A) == gdet_minor_oracle(A)


# -- multilinearity and rank -------------------------------------------------------

@settings(max_examples=200)
@given(st.data())
def test_alternating_multilinear(data):
    m = data.draw(st.integers(2, 6))
    n = data.draw(st.integers(2, m))
    A = data.draw(arrays(np.float64, (m, n), elements=st.floats(-10, 10).map(lambda v: round(v, 3))))
    i, j = data.draw(st.lists(st.integers(0, n - 1), min_size=2, max_size=2, unique=True))
    k = data.draw(st.sampled_from([-2.5, -1.0, 0.0, 0.5, 3.0]))
    base = gdet(A).value

    B = A.copy()
    B[:, i] += k * A[:, j]
    assert close(gdet(B).value, base, 1e-8) or abs(base) < 1e-6

    C = A.copy()
    C[:, i] *= k
    assert close(gdet(C).value, k * base, 1e-8) or abs(base) < 1e-6

    D = A.copy()
    D[:, [i, j]] = D[:, [j, i]]
    if abs(i - j) == 1:
        assert close(gdet(D).value, -base, 1e-8) or abs(base) < 1e-6


def test_identity_is_exactly_one():
    for m in range(1, 11):
        for n in range(1, m + 1):
            assert gdet(rect_identity(m, n)).value == 1.0


def test_nonzero_iff_left_inverse(rng):
    for _ in range(300):
        m = int(rng.integers(1, 6))
        n = int(rng.integers(1, 5))
        A = random_int_matrix(rng, m, n, -1, 1)
        G = gram(A)
        has_left_inverse = abs(round(np.linalg.det(G))) > 0
        assert (gdet(A).sign != 0) == has_left_inverse


# -- multiplication and Cauchy-Binet ------------------------------------------------

def test_multiplication_examples():
    res = check_multiplication([[1], [0]], [[2]])
    assert (res.lhs, res.rhs, res.holds) == (2.0, 2.0, True)
    res = check_multiplication(VOLUME_EXAMPLE, np.eye(2))
    assert res.holds and res.lhs == pytest.approx(-15) and res.rhs == pytest.approx(-15)
    left = check_left_multiplication([[1, 0], [0, 2]], [[1], [0]])
    assert (left.lhs, left.rhs, left.holds) == (1.0, 2.0, False)


def test_multiplication_requires_square_right_factor():
    with pytest.raises(DimensionError):
        check_multiplication(VOLUME_EXAMPLE, np.ones((2, 3)))
    with pytest.raises(DimensionError):
        check_multiplication([[1, 0], [0, 2]], [[1], [0]])


def test_multiplication_random(rng):
    for _ in range(500):
        m = int(rng.integers(1, 7))
        n = int(rng.integers(1, m + 1))
        assert check_multiplication(rng.standard_normal((m, n)), rng.standard_normal((n, n))).holds


def test_wide_multiplication_is_zero():
    res = check_multiplication([[1, 0]], [[1, 0], [0, 2]])
    assert (res.lhs, res.rhs) == (0.0, 0.0)


def test_cauchy_binet_examples():
    res = check_cauchy_binet([1, 2, 3], 2)
    assert res.lhs == pytest.approx(28) and res.rhs == pytest.approx(28) and res.holds
    assert res.detail["coefficient"] == 2
    assert res.detail["literal_coefficient"] == 0
    res = check_cauchy_binet(VOLUME_EXAMPLE, 2)
    assert res.lhs == pytest.approx(225) and res.holds
    res = check_cauchy_binet(VOLUME_EXAMPLE, 3)
    assert res.rhs == pytest.approx(225) and res.holds
    assert res.detail["literal_coefficient"] == 1


def test_cauchy_binet_range():
    with pytest.raises(DimensionError):
        check_cauchy_binet(VOLUME_EXAMPLE, 1)
    with pytest.raises(DimensionError):
        check_cauchy_binet(VOLUME_EXAMPLE, 4)


def test_cauchy_binet_hand_enumeration():
    A = np.array([[1.0], [2.0], [3.0]])
    total = sum(gdet(A[list(r)]).magnitude ** 2 for r in itertools.combinations(range(3), 2))
    assert total == pytest.approx(5 + 10 + 13)
