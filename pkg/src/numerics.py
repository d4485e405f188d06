"""
Exact rational arithmetic helpers, q-numbers, a small Hermitian eigensolver
and rational-relation recognition via continued fractions.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence

import numpy as np
import sympy as sp

from src.errors import InputError, NumericalError

logger = logging.getLogger(__name__)

Rational = Fraction

DEFAULT_REL_TOL = 1e-9
DEFAULT_MAX_DENOMINATOR = 10**6
EIG_THRESHOLD = 1e-13
MAX_SWEEPS = 100
MAX_EIG_DIMENSION = 64
HERMITIAN_TOL = 1e-12


def to_rational(value: object) -> Fraction:
    """Parse ints, Fractions and strings like "7", "-3/2" or "2.5" into a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InputError(f"not a rational number: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational number: {value!r}") from exc
    if isinstance(value, float):
        if not math.isfinite(value):
            raise InputError(f"not a rational number: {value!r}")
        return Fraction(value)
    raise InputError(f"not a rational number: {value!r}")


def format_rational(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


# q-NUMBERS
def q_number(n: int, q: float) -> float:
    """[n]_q = (q^-n - q^n)/(q^-1 - q); the Kac limit q = 1 gives n."""
    if n < 0:
        raise InputError(f"q_number needs n >= 0, got {n}")
    if not 0 < q <= 1:
        raise InputError(f"q_number needs 0 < q <= 1, got {q}")
    if q == 1:
        return float(n)
    return (q ** -n - q ** n) / (1.0 / q - q)


# RATIONAL gcd / lcm
def rational_gcd(values: Iterable[Fraction]) -> Fraction:
    """Positive generator of the additive group sum(v_i * Z)."""
    nonzero = [Fraction(v) for v in values if v != 0]
    if not nonzero:
        raise InputError("rational_gcd needs at least one nonzero value")
    common = math.lcm(*(v.denominator for v in nonzero))
    numerators = [abs(v.numerator) * (common // v.denominator) for v in nonzero]
    return Fraction(math.gcd(*numerators), common)


def rational_lcm(a: Fraction, b: Fraction) -> Fraction:
    """Least positive element of aZ ∩ bZ for nonzero rationals."""
    a, b = abs(Fraction(a)), abs(Fraction(b))
    if a == 0 or b == 0:
        raise InputError("rational_lcm is undefined for zero")
    return Fraction(math.lcm(a.numerator, b.numerator), math.gcd(a.denominator, b.denominator))


# CONTINUED FRACTIONS
def recognize_rational(
    x: float,
    max_denominator: int = DEFAULT_MAX_DENOMINATOR,
    rel_tol: float = DEFAULT_REL_TOL,
) -> Optional[Fraction]:
    """
    Walk the continued-fraction convergents of x and return the first p/q with
    q <= max_denominator and |x - p/q| <= rel_tol * max(1, |x|), or None.
    """
    if max_denominator < 1:
        raise InputError(f"max_denominator must be >= 1, got {max_denominator}")
    if not rel_tol > 0:
        raise InputError(f"rel_tol must be positive, got {rel_tol}")
    if not math.isfinite(x):
        return None

    bound = rel_tol * max(1.0, abs(x))
    a0 = math.floor(x)
    h_prev, h = 1, a0
    k_prev, k = 0, 1
    rem = x - a0
    while k <= max_denominator:
        if abs(x - h / k) <= bound:
            return Fraction(h, k)
        if rem == 0:
            return None
        y = 1.0 / rem
        a = math.floor(y)
        rem = y - a
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
    return None


# EXACT LINEAR ALGEBRA
def _to_sympy(matrix: Sequence[Sequence[object]]) -> sp.Matrix:
    return sp.Matrix([[sp.Rational(f.numerator, f.denominator) for f in map(Fraction, row)] for row in matrix])


def _from_sympy(matrix: sp.Matrix) -> List[List[Fraction]]:
    return [[Fraction(int(v.p), int(v.q)) for v in matrix.row(i)] for i in range(matrix.rows)]


def invert_rational_matrix(matrix: Sequence[Sequence[object]]) -> List[List[Fraction]]:
    """Exact inverse over the rationals; raises on singular input."""
    n = len(matrix)
    if n == 0 or any(len(row) != n for row in matrix):
        raise InputError("invert_rational_matrix needs a nonempty square matrix")
    m = _to_sympy(matrix)
    if m.det() == 0:
        raise NumericalError(f"matrix is singular (rank {m.rank()} < {n})")
    return _from_sympy(m.inv())


def rational_matmul(a: Sequence[Sequence[object]], b: Sequence[Sequence[object]]) -> List[List[Fraction]]:
    return _from_sympy(_to_sympy(a) * _to_sympy(b))


# HERMITIAN EIGENSOLVER
@dataclass(frozen=True)
class HermitianMatrix:
    """Dense Hermitian matrix; the stored entries are the symmetrization (M + M*)/2."""
    entries: np.ndarray

    @classmethod
    def from_array(cls, data: object, tol: float = HERMITIAN_TOL) -> "HermitianMatrix":
        arr = np.array(data, dtype=complex)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
            raise InputError(f"expected a square matrix, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise InputError("matrix has non-finite entries")
        scale = max(1.0, float(np.max(np.abs(arr))))
        if np.max(np.abs(arr - arr.conj().T)) > tol * scale:
            raise InputError("matrix is not Hermitian")
        sym = (arr + arr.conj().T) / 2
        sym.setflags(write=False)
        return cls(entries=sym)

    @property
    def dimension(self) -> int:
        return self.entries.shape[0]


def _rotation(app: float, aqq: float, apq: complex) -> np.ndarray:
    """2x2 unitary U with (U* [[app, apq], [conj(apq), aqq]] U) diagonal."""
    h = abs(apq)
    phase = apq / h
    theta = 0.5 * math.atan2(2.0 * h, aqq - app)
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, s], [-s * np.conj(phase), c * np.conj(phase)]], dtype=complex)


def hermitian_eigenvalues(
    matrix: HermitianMatrix,
    threshold: float = EIG_THRESHOLD,
    max_sweeps: int = MAX_SWEEPS,
) -> List[float]:
    """
    Ascending eigenvalues by cyclic Jacobi with complex rotations. Stops once the
    off-diagonal Frobenius norm drops below threshold * ||M||_F.
    """
    n = matrix.dimension
    if n > MAX_EIG_DIMENSION:
        raise InputError(f"hermitian_eigenvalues supports N <= {MAX_EIG_DIMENSION}, got {n}")

    a = np.array(matrix.entries, dtype=complex)
    norm = float(np.linalg.norm(a))
    stop = threshold * norm

    for sweep in range(max_sweeps + 1):
        off = float(np.linalg.norm(a - np.diag(np.diag(a))))
        if off <= stop:
            logger.debug("hermitian_eigenvalues(): N=%d converged after %d sweeps", n, sweep)
            return sorted(float(v) for v in np.real(np.diag(a)))
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p, q]) <= stop / n:
                    continue
                u = _rotation(a[p, p].real, a[q, q].real, a[p, q])
                idx = [p, q]
                a[:, idx] = a[:, idx] @ u
                a[idx, :] = u.conj().T @ a[idx, :]
                a[p, q] = a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real

    raise NumericalError(f"Jacobi eigensolver did not converge in {max_sweeps} sweeps (N={n})")
