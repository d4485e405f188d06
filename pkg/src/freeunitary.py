"""
Invariants of the free unitary quantum group U_F+ from the spectrum of F*F.

Everything here is driven by rho_alpha = lambda * (F*F)^T with
lambda = sqrt(Tr((F*F)^-1) / Tr(F*F)). A spectrum is either exact (a base
mu in (0,1) and rational exponents, rho_i = mu^e_i) or float (the values as
they come out of the eigensolver).
"""
from __future__ import annotations

import enum
import json
import logging
import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from src.errors import InputError, NumericalError
from src.invariant_config import ResolutionConfig, get_resolution_config
from src.invariant_table import (
    MOD,
    MOD_DUAL,
    T_SIGMA,
    T_SIGMA_AINN,
    T_SIGMA_INN,
    T_TAU,
    T_TAU_AINN,
    T_TAU_INN,
    InvariantTable,
    consistency_report,
)
from src.numerics import (
    HermitianMatrix,
    format_rational,
    hermitian_eigenvalues,
    rational_gcd,
    recognize_rational,
    to_rational,
)
from src.subgroups import RealSubgroup, UnitSymbol, cyclic_intersection_exact, intersect, intersect_all

logger = logging.getLogger(__name__)

SINGULAR_RATIO = 1e-10
BALANCE_TOL = 1e-9
D_A2B_TOL = 1e-12
NORM_ONE_TOL = 1e-10
BISECTION_MAX_STEPS = 200
LOG_FLOAT_MAX = math.log(sys.float_info.max)


def _config(config: Optional[ResolutionConfig]) -> ResolutionConfig:
    return config if config is not None else get_resolution_config()


# F MATRIX
@dataclass(frozen=True)
class FMatrix:
    entries: np.ndarray

    @classmethod
    def from_array(cls, data: object) -> "FMatrix":
        arr = np.array(data, dtype=complex)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise InputError(f"F must be square, got shape {arr.shape}")
        if arr.shape[0] < 2:
            raise InputError(f"F must have dimension N >= 2, got {arr.shape[0]}")
        if not np.all(np.isfinite(arr)):
            raise InputError("F has non-finite entries")
        arr.setflags(write=False)
        return cls(arr)

    @classmethod
    def from_json_dict(cls, data: Dict[str, Any]) -> "FMatrix":
        """{"n": 3, "entries": [[re, im], ...]} in row-major order; bare numbers are real."""
        try:
            n = int(data["n"])
            raw = data["entries"]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"F matrix JSON needs integer 'n' and list 'entries': {exc}") from exc
        if not isinstance(raw, list) or len(raw) != n * n:
            raise InputError(f"F matrix JSON: expected {n * n} entries for n={n}, got "
                             f"{len(raw) if isinstance(raw, list) else type(raw).__name__}")
        values: List[complex] = []
        for k, item in enumerate(raw):
            try:
                if isinstance(item, (list, tuple)):
                    if len(item) != 2:
                        raise ValueError("pair must be [re, im]")
                    values.append(complex(float(item[0]), float(item[1])))
                else:
                    values.append(complex(float(item), 0.0))
            except (TypeError, ValueError) as exc:
                raise InputError(f"F matrix JSON: bad entry #{k}: {item!r}") from exc
        return cls.from_array(np.array(values).reshape(n, n))

    @property
    def dimension(self) -> int:
        return self.entries.shape[0]

    def gram(self) -> HermitianMatrix:
        """F*F."""
        return HermitianMatrix.from_array(self.entries.conj().T @ self.entries)


def load_f_matrix(path: str) -> FMatrix:
    return FMatrix.from_json_dict(_read_json(path))


def _read_json(path: str) -> Dict[str, Any]:
    try:
        with open(Path(path), "r", encoding="utf-8") as f:
            data = json.load(f)
    except OSError as exc:
        raise InputError(f"cannot read {path!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path!r} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise InputError(f"{path!r} must hold a JSON object")
    return data


def gram_eigenvalues(F: FMatrix, config: Optional[ResolutionConfig] = None) -> Tuple[List[float], float]:
    """Ascending eigenvalues x of F*F and lambda = sqrt(sum 1/x / sum x)."""
    cfg = _config(config)
    x = hermitian_eigenvalues(F.gram(), threshold=cfg.eig_threshold, max_sweeps=cfg.max_sweeps)
    if x[0] <= SINGULAR_RATIO * x[-1]:
        raise NumericalError(
            f"F is numerically singular: smallest eigenvalue of F*F {x[0]:.3g} vs largest {x[-1]:.3g}"
        )
    lam = math.sqrt(sum(1.0 / v for v in x) / sum(x))
    return x, lam


# SPECTRA
class SpectrumMode(str, enum.Enum):
    EXACT = "exact"
    FLOAT = "float"


@dataclass(frozen=True)
class RhoSpectrum:
    mode: SpectrumMode
    base: Optional[float] = None
    exponents: Optional[Tuple[Fraction, ...]] = None
    float_values: Optional[Tuple[float, ...]] = None
    lam: Optional[float] = None
    balance_checked: bool = True

    @classmethod
    def exact(cls, base: float, exponents: Sequence[object], check_balance: bool = True) -> "RhoSpectrum":
        if not 0 < base < 1:
            raise InputError(f"exact spectrum base must lie in (0,1), got {base}")
        exps = tuple(to_rational(e) for e in exponents)
        if not exps:
            raise InputError("exact spectrum needs at least one exponent")
        out = cls(SpectrumMode.EXACT, base=float(base), exponents=exps, balance_checked=check_balance)
        if check_balance:
            _check_balance(out.values())
        return out

    @classmethod
    def from_values(cls, values: Sequence[float], lam: Optional[float] = None) -> "RhoSpectrum":
        vals = tuple(float(v) for v in values)
        if not vals:
            raise InputError("spectrum needs at least one value")
        if any(not v > 0 or not math.isfinite(v) for v in vals):
            raise InputError(f"spectrum values must be positive and finite, got {vals}")
        _check_balance(vals)
        return cls(SpectrumMode.FLOAT, float_values=tuple(sorted(vals)), lam=lam)

    @classmethod
    def from_json_dict(cls, data: Dict[str, Any], raw: bool = False) -> "RhoSpectrum":
        """{"base": 0.5, "exponents": ["2", "7", "-8"]} or {"values": [...]}."""
        if "values" in data:
            return cls.from_values(data["values"])
        try:
            base = float(data["base"])
            exponents = list(data["exponents"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"spectrum JSON needs 'base' and 'exponents' (or 'values'): {exc}") from exc
        return cls.exact(base, exponents, check_balance=not raw)

    @property
    def is_exact(self) -> bool:
        return self.mode is SpectrumMode.EXACT

    @property
    def dimension(self) -> int:
        return len(self.exponents) if self.is_exact else len(self.float_values)

    def values(self) -> List[float]:
        if self.is_exact:
            return [self.base ** float(e) for e in self.exponents]
        return list(self.float_values)

    def unit(self) -> UnitSymbol:
        """pi/|log mu| for the exact base."""
        if not self.is_exact:
            raise InputError("float spectra carry no exact unit")
        return UnitSymbol.pi_over_log(self.base, label="mu")

    def as_float(self) -> "RhoSpectrum":
        return self if not self.is_exact else RhoSpectrum.from_values(self.values())

    def is_kac(self, config: Optional[ResolutionConfig] = None) -> bool:
        if self.is_exact:
            return all(e == 0 for e in self.exponents)
        return max(abs(v - 1.0) for v in self.float_values) < _config(config).kac_threshold

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"mode": self.mode.value, "values": self.values()}
        if self.is_exact:
            out["base"] = self.base
            out["exponents"] = [format_rational(e) for e in self.exponents]
            out["balance_checked"] = self.balance_checked
        if self.lam is not None:
            out["lambda"] = self.lam
        return out


def load_spectrum(path: str, raw: bool = False) -> RhoSpectrum:
    return RhoSpectrum.from_json_dict(_read_json(path), raw=raw)


def _check_balance(values: Sequence[float]) -> None:
    # Tr rho = Tr rho^-1
    forward = math.fsum(values)
    backward = math.fsum(1.0 / v for v in values)
    if not math.isclose(forward, backward, rel_tol=BALANCE_TOL):
        raise InputError(f"spectrum is not balanced: sum rho = {forward:.12g}, sum 1/rho = {backward:.12g}")


def rho_spectrum_from_f(F: FMatrix, config: Optional[ResolutionConfig] = None) -> RhoSpectrum:
    x, lam = gram_eigenvalues(F, config)
    logger.debug("rho_spectrum_from_f(): N=%d lambda=%.12g", F.dimension, lam)
    return RhoSpectrum.from_values([lam * v for v in x], lam=lam)


# INVARIANTS
def _nonzero_logs(values: Sequence[float], threshold: float) -> List[float]:
    return [v for v in values if abs(v) > threshold]


def t_tau_family(s: RhoSpectrum, config: Optional[ResolutionConfig] = None) -> RealSubgroup:
    """T_tau = T_tauInn = T_tauAInn of U_F+, from the ratios rho_i / rho_j."""
    cfg = _config(config)
    if s.is_kac(cfg):
        return RealSubgroup.full()
    if s.is_exact:
        diffs = {a - b for a in s.exponents for b in s.exponents if a != b}
        if not diffs:
            # only reachable for unbalanced raw spectra with a single repeated exponent
            return RealSubgroup.full()
        return cyclic_intersection_exact(s.unit(), diffs, coefficient=2)

    vals = s.float_values
    logs = _nonzero_logs(
        [math.log(vals[i] / vals[j]) for i in range(len(vals)) for j in range(i + 1, len(vals))],
        cfg.kac_threshold,
    )
    if not logs:
        return RealSubgroup.full()
    return intersect_all(
        (RealSubgroup.cyclic(2 * math.pi / abs(v)) for v in logs),
        rel_tol=cfg.lattice_rel_tol,
        max_denominator=cfg.lattice_max_denominator,
    )


def mod_dual(s: RhoSpectrum, config: Optional[ResolutionConfig] = None) -> RealSubgroup:
    """Mod of the dual: intersection of (pi/log x) Z over x in Sp(rho_alpha) without 1."""
    cfg = _config(config)
    if s.is_kac(cfg):
        return RealSubgroup.full()
    if s.is_exact:
        ks = [2 * e for e in s.exponents if e != 0]
        return cyclic_intersection_exact(s.unit(), ks, coefficient=2)

    logs = _nonzero_logs([math.log(v) for v in s.float_values], cfg.kac_threshold)
    if not logs:
        return RealSubgroup.full()
    return intersect_all(
        (RealSubgroup.cyclic(math.pi / abs(v)) for v in logs),
        rel_tol=cfg.lattice_rel_tol,
        max_denominator=cfg.lattice_max_denominator,
    )


class FactorKind(str, enum.Enum):
    II1 = "II_1"
    III_MU = "III_mu"
    III1 = "III_1"


@dataclass(frozen=True)
class FactorType:
    kind: FactorKind
    mu: Optional[float] = None
    resolution_limited: bool = False
    max_denominator: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind is FactorKind.III_MU and not (self.mu is not None and 0 < self.mu < 1):
            raise InputError(f"III_mu needs mu in (0,1), got {self.mu!r}")

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"kind": self.kind.value}
        if self.mu is not None:
            out["mu"] = self.mu
        if self.kind is FactorKind.III1:
            out["resolution_limited"] = self.resolution_limited
            if self.max_denominator is not None:
                out["max_denominator"] = self.max_denominator
        return out


def factor_classification(
    s: RhoSpectrum,
    config: Optional[ResolutionConfig] = None,
) -> Tuple[FactorType, RealSubgroup]:
    """Type of L-infinity(U_F+) and Connes' T, read off the group generated by Sp(rho x rho)."""
    cfg = _config(config)
    if s.is_kac(cfg):
        return FactorType(FactorKind.II1), RealSubgroup.full()

    if s.is_exact:
        exps = s.exponents
        sums = [exps[i] + exps[j] for i in range(len(exps)) for j in range(i, len(exps))]
        if all(v == 0 for v in sums):
            raise NumericalError(f"exact exponents {[format_rational(e) for e in exps]} have only zero sums")
        g = rational_gcd(sums)
        mu = s.base ** float(g)
        return FactorType(FactorKind.III_MU, mu=mu), RealSubgroup.cyclic_exact(Fraction(2) / g, s.unit())

    vals = s.float_values
    logs = _nonzero_logs(
        [math.log(vals[i] * vals[j]) for i in range(len(vals)) for j in range(i, len(vals))],
        cfg.kac_threshold,
    )
    if not logs:
        raise NumericalError("non-Kac float spectrum with no nontrivial products rho_i*rho_j")
    v0 = min(logs, key=abs)
    ratios: List[Fraction] = []
    for v in logs:
        r = recognize_rational(v / v0, max_denominator=cfg.lattice_max_denominator, rel_tol=cfg.lattice_rel_tol)
        if r is None:
            logger.debug("factor_classification(): log-ratio %.15g not rational at denominator %d",
                         v / v0, cfg.lattice_max_denominator)
            return (
                FactorType(FactorKind.III1, resolution_limited=True, max_denominator=cfg.lattice_max_denominator),
                RealSubgroup.zero(resolution_limited=True),
            )
        ratios.append(r)
    g = rational_gcd(ratios + [Fraction(1)])
    step = float(g) * abs(v0)
    return FactorType(FactorKind.III_MU, mu=math.exp(-step)), RealSubgroup.cyclic(2 * math.pi / step)


def mod_trichotomy_check(s: RhoSpectrum, config: Optional[ResolutionConfig] = None) -> bool:
    """II_1 -> Mod_dual full; III_mu -> generator pi/|log mu| or 2pi/|log mu|; III_1 -> Mod_dual zero."""
    factor, _ = factor_classification(s, config)
    mod = mod_dual(s, config)
    if factor.kind is FactorKind.II1:
        return mod.is_full
    if factor.kind is FactorKind.III1:
        return mod.is_zero
    if not mod.is_cyclic:
        return False
    base = math.pi / abs(math.log(factor.mu))
    return any(math.isclose(mod.generator, m * base, rel_tol=1e-9) for m in (1, 2))


def invariant_table_ufp(s: RhoSpectrum, config: Optional[ResolutionConfig] = None) -> InvariantTable:
    cfg = _config(config)
    t_tau = t_tau_family(s, cfg)
    _, connes_t = factor_classification(s, cfg)
    entries = {
        T_TAU: t_tau,
        T_TAU_INN: t_tau,
        T_TAU_AINN: t_tau,
        MOD: RealSubgroup.full(),
        MOD_DUAL: mod_dual(s, cfg),
        # T_sigmaInn is Connes' T for the full factor L-infinity(U_F+)
        T_SIGMA_INN: connes_t,
        T_SIGMA_AINN: connes_t,
    }
    entries[T_SIGMA] = intersect(
        t_tau, entries[MOD_DUAL], rel_tol=cfg.lattice_rel_tol, max_denominator=cfg.lattice_max_denominator
    )
    return InvariantTable("U_F+", entries)


def _finite_or_none(value: float) -> Optional[float]:
    return value if math.isfinite(value) else None


# i.c.c. CONSTANTS
@dataclass(frozen=True)
class IccReport:
    n: int
    lam: float
    c: float
    norm_rho_a2b: float
    norm_rho_a2b_sq_minus_one: float
    D_ab: float
    D_ba: float
    D_a2b: float
    D_n: float
    D_n_log: float
    exact_condition_holds: bool
    sufficient_condition_holds: bool

    def to_dict(self) -> Dict[str, Any]:
        # D values past the float range are reported as null; D_n_log stays finite
        return {
            "n": self.n,
            "lambda": self.lam,
            "c": self.c,
            "norm_rho_a2b": self.norm_rho_a2b,
            "norm_rho_a2b_sq_minus_one": self.norm_rho_a2b_sq_minus_one,
            "D_ab": _finite_or_none(self.D_ab),
            "D_ba": _finite_or_none(self.D_ba),
            "D_a2b": _finite_or_none(self.D_a2b),
            "D_n": _finite_or_none(self.D_n),
            "D_n_log": _finite_or_none(self.D_n_log),
            "D_n_overflow": math.isinf(self.D_n),
            "exact_condition_holds": self.exact_condition_holds,
            "sufficient_condition_holds": self.sufficient_condition_holds,
        }


def d_constant_log(norm: float, norm_sq_minus_one: float, n: int) -> float:
    """log D_{x,n}; -inf when D_{x,n} = 0."""
    if norm - 1.0 < NORM_ONE_TOL or norm_sq_minus_one <= 0.0:
        return -math.inf
    log_r2 = 2.0 * math.log(norm)
    top = (n + 1) * log_r2
    # log(r2^(n+1) - 1) without forming r2^(n+1)
    log_geometric = top + math.log1p(-math.exp(-top)) - math.log(math.expm1(log_r2))
    return math.log(norm_sq_minus_one) + log_geometric


def d_constant(norm: float, norm_sq_minus_one: float, n: int) -> float:
    """D_{x,n} = ||rho_x^2 - 1|| (||rho_x||^{2(n+1)} - 1)/(||rho_x||^2 - 1), 0 when rho_x = 1, inf past the float range."""
    if norm - 1.0 < NORM_ONE_TOL:
        return 0.0
    r2 = norm * norm
    if (n + 1) * math.log(r2) > LOG_FLOAT_MAX:
        return math.inf
    return norm_sq_minus_one * (r2 ** (n + 1) - 1.0) / (r2 - 1.0)


def exact_condition(D: float, n: int) -> bool:
    if not D < 1.0 - 1.0 / math.sqrt(2.0):
        return False
    return 2.0 * (7.0 - 4.0 * D) * D / (2.0 * (1.0 - D) ** 2 - 1.0) < 1.0 / math.sqrt(n + 1)


def icc_sufficient_condition(c: float, n: int) -> bool:
    """sqrt(n) (n+1) c (2+c) (1+c)^(4+6n) < 1/72, compared in log space."""
    if c <= 0.0:
        return True
    log_lhs = (
        0.5 * math.log(n)
        + math.log(n + 1)
        + math.log(c)
        + math.log(2.0 + c)
        + (4 + 6 * n) * math.log1p(c)
    )
    return log_lhs < -math.log(72.0)


def icc_constants(F: FMatrix, n: int, config: Optional[ResolutionConfig] = None) -> IccReport:
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")
    x_list, lam = gram_eigenvalues(F, config)
    x = np.array(x_list)
    rho = lam * x
    c = float(max(np.max(np.abs(rho - 1.0)), np.max(np.abs(1.0 / rho - 1.0))))

    # rho_{ab} has spectrum x_i/x_j; rho_{ba} the reciprocals (the same set)
    ratios = np.divide.outer(x, x)
    norm_ab = float(np.max(ratios))
    sq_ab = float(np.max(np.abs(ratios ** 2 - 1.0)))
    norm_ba = float(np.max(1.0 / ratios))
    sq_ba = float(np.max(np.abs(ratios ** -2 - 1.0)))

    # rho_{a^2 b} has spectrum lam * x_i x_j / x_k
    norm_a2b = float(lam * x[-1] ** 2 / x[0])
    triples = lam * np.multiply.outer(np.multiply.outer(x, x), 1.0 / x)
    sq_a2b = float(np.max(np.abs(triples ** 2 - 1.0)))

    D_ab = d_constant(norm_ab, sq_ab, n)
    D_ba = d_constant(norm_ba, sq_ba, n)
    D_a2b = d_constant(norm_a2b, sq_a2b, n)
    D_n = max(D_ab, D_ba, D_a2b)
    logs = [d_constant_log(norm_ab, sq_ab, n), d_constant_log(norm_ba, sq_ba, n), d_constant_log(norm_a2b, sq_a2b, n)]
    D_n_log = max(logs)
    if math.isfinite(D_n):
        if D_n - D_a2b > D_A2B_TOL * max(1.0, D_n):
            raise NumericalError(f"D_n = {D_n!r} exceeds D_a2b = {D_a2b!r}")
    elif D_n_log - logs[2] > D_A2B_TOL:
        raise NumericalError(f"log D_n = {D_n_log!r} exceeds log D_a2b = {logs[2]!r}")

    report = IccReport(
        n=n,
        lam=lam,
        c=c,
        norm_rho_a2b=norm_a2b,
        norm_rho_a2b_sq_minus_one=sq_a2b,
        D_ab=D_ab,
        D_ba=D_ba,
        D_a2b=D_a2b,
        D_n=D_n,
        D_n_log=D_n_log,
        exact_condition_holds=exact_condition(D_n, n),
        sufficient_condition_holds=icc_sufficient_condition(c, n),
    )
    logger.debug("icc_constants(): n=%d c=%.6g D_n=%.6g", n, c, D_n)
    return report


# REPORT
@dataclass(frozen=True)
class UfpReport:
    spectrum: RhoSpectrum
    table: InvariantTable
    factor: FactorType
    connes_t: RealSubgroup
    mod_trichotomy: bool
    consistency: Dict[str, Optional[bool]]
    icc: Optional[IccReport] = None

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "spectrum": self.spectrum.to_dict(),
            "invariants": self.table.to_dict(),
            "symbolic": self.table.symbolic(),
            "factor": self.factor.to_dict(),
            "connes_T": self.connes_t.to_dict(),
            "mod_trichotomy_holds": self.mod_trichotomy,
            "consistency": dict(self.consistency),
        }
        if self.icc is not None:
            out["icc"] = self.icc.to_dict()
        return out


def analyze_spectrum(
    s: RhoSpectrum,
    config: Optional[ResolutionConfig] = None,
    icc: Optional[IccReport] = None,
) -> UfpReport:
    cfg = _config(config)
    table = invariant_table_ufp(s, cfg)
    factor, connes_t = factor_classification(s, cfg)
    return UfpReport(
        spectrum=s,
        table=table,
        factor=factor,
        connes_t=connes_t,
        mod_trichotomy=mod_trichotomy_check(s, cfg),
        consistency=consistency_report(table),
        icc=icc,
    )


def analyze_f(F: FMatrix, n_icc: Optional[int] = None, config: Optional[ResolutionConfig] = None) -> UfpReport:
    cfg = _config(config)
    s = rho_spectrum_from_f(F, cfg)
    icc = icc_constants(F, n_icc, cfg) if n_icc is not None else None
    return analyze_spectrum(s, cfg, icc)


# EXAMPLE FAMILIES
def solve_balanced_base(
    exponents: Sequence[object],
    lo: float = 0.01,
    hi: float = 0.99,
    tol: float = 1e-13,
) -> float:
    """Bisection for mu in (lo, hi) with sum mu^e_i = sum mu^-e_i."""
    exps = [float(to_rational(e)) for e in exponents]

    def balance(mu: float) -> float:
        return math.fsum(mu ** e - mu ** -e for e in exps)

    f_lo, f_hi = balance(lo), balance(hi)
    if f_lo == 0:
        return lo
    if f_hi == 0:
        return hi
    if (f_lo > 0) == (f_hi > 0):
        raise NumericalError(f"no sign change of the balance equation on [{lo}, {hi}] for exponents {exps}")

    for step in range(BISECTION_MAX_STEPS):
        mid = 0.5 * (lo + hi)
        f_mid = balance(mid)
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
        if hi - lo < tol:
            logger.debug("solve_balanced_base(): converged after %d steps", step + 1)
            return 0.5 * (lo + hi)
    raise NumericalError(f"bisection did not reach tolerance {tol} in {BISECTION_MAX_STEPS} steps")


@dataclass(frozen=True)
class ExampleFamily:
    name: str
    spectrum: RhoSpectrum
    F: FMatrix
    mu: Optional[float] = None


def _diagonal_family(name: str, exponents: Sequence[Fraction]) -> ExampleFamily:
    mu = solve_balanced_base(exponents)
    F = FMatrix.from_array(np.diag([mu ** (float(e) / 2) for e in exponents]))
    return ExampleFamily(name, RhoSpectrum.exact(mu, exponents), F, mu)


def example_family_diagonal(n: int) -> ExampleFamily:
    """Sp(rho) = {mu^n, mu^(3n+1), mu^-(3n+2)}, a III_mu factor with Mod of the dual pi/log mu."""
    if n < 2:
        raise InputError(f"the diagonal family needs n >= 2, got {n}")
    return _diagonal_family(f"diagonal n={n}", [Fraction(n), Fraction(3 * n + 1), Fraction(-(3 * n + 2))])


def example_family_half_integer(n: int) -> ExampleFamily:
    """Sp(rho) = {mu^(n+1/2), mu^(3n+5/2), mu^-(3n+7/2)}; Mod of the dual is 2pi/log mu."""
    if n < 1:
        raise InputError(f"the half-integer family needs n >= 1, got {n}")
    half = Fraction(1, 2)
    return _diagonal_family(
        f"half-integer n={n}", [n + half, 3 * n + 5 * half, -(3 * n + 7 * half)]
    )


def example_family_transcendental(x: float) -> ExampleFamily:
    """Sp(rho) = {kappa, kappa, kappa*x} with kappa = sqrt((2 + 1/x)/(2 + x)); III_1 for transcendental x."""
    if not x > 1:
        raise InputError(f"x must be > 1, got {x}")
    kappa = math.sqrt((2.0 + 1.0 / x) / (2.0 + x))
    values = [kappa, kappa, kappa * x]
    F = FMatrix.from_array(np.diag([math.sqrt(v) for v in values]))
    return ExampleFamily(f"transcendental x={x!r}", RhoSpectrum.from_values(values), F)
