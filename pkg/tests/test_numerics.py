import math
from fractions import Fraction

import numpy as np
import pytest

from src.errors import InputError, NumericalError
from src.numerics import (
    HermitianMatrix,
    hermitian_eigenvalues,
    invert_rational_matrix,
    q_number,
    rational_gcd,
    rational_lcm,
    rational_matmul,
    recognize_rational,
    to_rational,
)


def test_q_number_examples() -> None:
    assert q_number(1, 0.3) == pytest.approx(1.0)
    assert q_number(3, 0.5) == pytest.approx(5.25)
    assert q_number(4, 1.0) == 4.0
    assert q_number(0, 0.7) == 0.0


def test_q_number_rejects_bad_domain() -> None:
    with pytest.raises(InputError):
        q_number(2, 0.0)
    with pytest.raises(InputError):
        q_number(2, 1.5)
    with pytest.raises(InputError):
        q_number(-1, 0.5)


@pytest.mark.parametrize("q", [0.1, 0.5, 0.9])
def test_q_number_chebyshev_recursion(q: float) -> None:
    for n in range(1, 50):
        lhs = q_number(n + 1, q)
        rhs = (q + 1 / q) * q_number(n, q) - q_number(n - 1, q)
        assert lhs == pytest.approx(rhs, rel=1e-12)


def test_rational_gcd_examples() -> None:
    assert rational_gcd([2, 4, 6]) == 2
    assert rational_gcd([Fraction(1, 2), Fraction(1, 3)]) == Fraction(1, 6)
    assert rational_gcd([5, 10, 15]) == 5
    assert rational_gcd([0, -4, 6]) == 2


def test_rational_gcd_all_zero_is_error() -> None:
    with pytest.raises(InputError):
        rational_gcd([0, Fraction(0)])


def test_rational_gcd_brute_force(rng) -> None:
    for _ in range(50):
        values = [Fraction(int(rng.integers(1, 30)), int(rng.integers(1, 9))) for _ in range(3)]
        g = rational_gcd(values)
        assert all((v / g).denominator == 1 for v in values)
        # no larger common step: the ratios v/g share no common factor
        assert math.gcd(*[int(v / g) for v in values]) == 1


def test_rational_lcm() -> None:
    assert rational_lcm(Fraction(2, 3), Fraction(2, 5)) == 2
    assert rational_lcm(Fraction(1, 2), Fraction(3, 4)) == Fraction(3, 2)
    with pytest.raises(InputError):
        rational_lcm(0, 1)


def test_rational_arithmetic_is_exact(rng) -> None:
    for _ in range(1000):
        a = Fraction(int(rng.integers(-1000, 1000)), int(rng.integers(1, 1000)))
        c = Fraction(int(rng.integers(-1000, 1000)), int(rng.integers(1, 1000)))
        assert (a + c) - c == a


def test_to_rational_parses_strings() -> None:
    assert to_rational("-3/2") == Fraction(-3, 2)
    assert to_rational(" 7 ") == 7
    assert to_rational("2.5") == Fraction(5, 2)
    with pytest.raises(InputError):
        to_rational("three")
    with pytest.raises(InputError):
        to_rational(float("nan"))


def test_recognize_rational_examples() -> None:
    assert recognize_rational(0.6, 100, 1e-9) == Fraction(3, 5)
    assert recognize_rational(math.sqrt(2), 10**6, 1e-12) is None
    assert recognize_rational(1.0, 1, 1e-12) == Fraction(1)
    assert recognize_rational(float("inf")) is None


def test_recognize_rational_validates_arguments() -> None:
    with pytest.raises(InputError):
        recognize_rational(0.5, 0, 1e-9)
    with pytest.raises(InputError):
        recognize_rational(0.5, 10, 0.0)


def test_recognize_rational_round_trips_small_fractions(rng) -> None:
    for _ in range(2000):
        q = int(rng.integers(1, 10**4 + 1))
        p = int(rng.integers(-(10**4), 10**4 + 1))
        expected = Fraction(p, q)
        assert recognize_rational(p / q, q, 1e-12) == expected


def test_invert_rational_matrix_and_product() -> None:
    a = [[2, -1], [-1, 2]]
    inv = invert_rational_matrix(a)
    assert inv == [[Fraction(2, 3), Fraction(1, 3)], [Fraction(1, 3), Fraction(2, 3)]]
    assert rational_matmul(a, inv) == [[1, 0], [0, 1]]


def test_invert_singular_matrix_raises() -> None:
    with pytest.raises(NumericalError):
        invert_rational_matrix([[1, 2], [2, 4]])


def test_invert_rational_matrix_mixed_entries() -> None:
    a = [["1/2", 0, 1], [Fraction(1, 3), 1, 0], [0, "2", 4]]
    inv = invert_rational_matrix(a)
    assert all(isinstance(v, Fraction) for row in inv for v in row)
    assert rational_matmul(inv, a) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    with pytest.raises(InputError):
        invert_rational_matrix([[1, 2, 3], [4, 5, 6]])


def test_hermitian_matrix_rejects_non_hermitian() -> None:
    with pytest.raises(InputError):
        HermitianMatrix.from_array([[1, 2], [0, 1]])
    with pytest.raises(InputError):
        HermitianMatrix.from_array([[1, 2, 3]])


@pytest.mark.parametrize(
    "matrix, expected",
    [
        ([[1, 0], [0, 4]], [1, 4]),
        ([[2, 1], [1, 2]], [1, 3]),
        ([[1, 0, 0], [0, 1, 0], [0, 0, 4]], [1, 1, 4]),
        ([[2, 1j], [-1j, 2]], [1, 3]),
    ],
)
def test_hermitian_eigenvalues_examples(matrix, expected) -> None:
    values = hermitian_eigenvalues(HermitianMatrix.from_array(matrix))
    assert values == pytest.approx(expected, abs=1e-12)


def _random_hermitian(rng, n: int) -> np.ndarray:
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return (a + a.conj().T) / 2


def test_hermitian_eigenvalues_match_numpy_oracle(rng) -> None:
    for n in (1, 2, 3, 5, 8, 16):
        m = _random_hermitian(rng, n)
        ours = hermitian_eigenvalues(HermitianMatrix.from_array(m))
        assert ours == pytest.approx(list(np.linalg.eigvalsh(m)), abs=1e-9)
        assert sum(ours) == pytest.approx(float(np.real(np.trace(m))), abs=1e-9 * max(1.0, np.linalg.norm(m)))


def test_hermitian_eigenvalues_unitary_invariance(rng) -> None:
    for _ in range(10):
        m = _random_hermitian(rng, 6)
        u, _ = np.linalg.qr(rng.normal(size=(6, 6)) + 1j * rng.normal(size=(6, 6)))
        conj = u.conj().T @ m @ u
        before = hermitian_eigenvalues(HermitianMatrix.from_array(m))
        after = hermitian_eigenvalues(HermitianMatrix.from_array((conj + conj.conj().T) / 2))
        assert after == pytest.approx(before, abs=1e-9)


def test_hermitian_eigenvalues_positive_definite(rng) -> None:
    a = rng.normal(size=(5, 5)) + 1j * rng.normal(size=(5, 5))
    values = hermitian_eigenvalues(HermitianMatrix.from_array(a.conj().T @ a + np.eye(5)))
    assert all(v > 0 for v in values)


def test_hermitian_eigenvalues_reports_non_convergence(rng) -> None:
    m = HermitianMatrix.from_array(_random_hermitian(rng, 6))
    with pytest.raises(NumericalError):
        hermitian_eigenvalues(m, max_sweeps=0)
