"""
Root-system combinatorics for the q-deformations G_q.

Simple roots are numbered the Bourbaki way. Lengths are normalised so that
short roots have squared length 2. From the Cartan matrix A and its exact
inverse C we get the pairing <2rho|w_i> = d_i * sum_j c_ij, whose gcd is the
integer Upsilon that fixes the inner scaling invariants of G_q.
"""
from __future__ import annotations

import logging
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

import pandas as pd

from src.errors import InputError, NumericalError
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
    dual_key,
)
from src.numerics import invert_rational_matrix, rational_matmul
from src.subgroups import RealSubgroup, UnitSymbol, intersect

logger = logging.getLogger(__name__)

FAMILIES = "ABCDEFG"
MAX_CLASSICAL_RANK = 64
_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}
_FIXED_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}
_TYPE_TOKEN = re.compile(r"^([A-G])(\d+)$")


@dataclass(frozen=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise InputError(f"unknown Cartan family {self.family!r}")
        if self.family in _FIXED_RANKS:
            if self.rank not in _FIXED_RANKS[self.family]:
                raise InputError(f"type {self.family}{self.rank} does not exist")
        elif not _MIN_RANK[self.family] <= self.rank <= MAX_CLASSICAL_RANK:
            raise InputError(
                f"type {self.family}{self.rank} needs rank in "
                f"[{_MIN_RANK[self.family]}, {MAX_CLASSICAL_RANK}]"
            )

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class Weight:
    """Integer coefficients in the fundamental-weight basis."""
    coeffs: Tuple[int, ...]

    @classmethod
    def of(cls, *coeffs: int) -> "Weight":
        return cls(tuple(int(c) for c in coeffs))

    def __add__(self, other: "Weight") -> "Weight":
        _same_length(self, other)
        return Weight(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Weight") -> "Weight":
        _same_length(self, other)
        return Weight(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))


def _same_length(a: Weight, b: Weight) -> None:
    if len(a.coeffs) != len(b.coeffs):
        raise InputError(f"weight lengths differ: {len(a.coeffs)} vs {len(b.coeffs)}")


def parse_type_string(text: str) -> List[SimpleType]:
    """'A2xD4xG2' -> [A2, D4, G2]; case-insensitive, 'x' separated."""
    if not text or not text.strip():
        raise InputError("empty root-system type string")
    out: List[SimpleType] = []
    for token in text.strip().upper().split("X"):
        match = _TYPE_TOKEN.match(token.strip())
        if not match:
            raise InputError(f"cannot parse root-system component {token!r} in {text!r}")
        out.append(SimpleType(match.group(1), int(match.group(2))))
    return out


# Dynkin geometry
def _lengths(t: SimpleType) -> List[int]:
    n = t.rank
    if t.family == "B":
        return [4] * (n - 1) + [2]
    if t.family == "C":
        return [2] * (n - 1) + [4]
    if t.family == "F":
        return [4, 4, 2, 2]
    if t.family == "G":
        return [2, 6]
    return [2] * n


def _edges(t: SimpleType) -> List[Tuple[int, int]]:
    """Dynkin edges, 0-based, Bourbaki numbering."""
    n = t.rank
    if t.family == "D":
        return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    if t.family == "E":
        # 1-3-4-5-6-7-8 with 2 hanging off 4
        chain = [0] + list(range(2, n))
        return [(chain[k], chain[k + 1]) for k in range(len(chain) - 1)] + [(1, 3)]
    return [(i, i + 1) for i in range(n - 1)]


def _component_cartan(t: SimpleType) -> List[List[int]]:
    d = _lengths(t)
    n = t.rank
    gram = [[Fraction(d[i]) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    for i, j in _edges(t):
        gram[i][j] = gram[j][i] = Fraction(-max(d[i], d[j]), 2)
    cartan = [[2 * gram[i][j] / d[i] for j in range(n)] for i in range(n)]
    if any(v.denominator != 1 for row in cartan for v in row):
        raise NumericalError(f"non-integer Cartan entry for {t}")
    return [[int(v) for v in row] for row in cartan]


@dataclass(frozen=True)
class RootDatum:
    components: Tuple[SimpleType, ...]
    cartan: Tuple[Tuple[int, ...], ...]
    inv_cartan: Tuple[Tuple[Fraction, ...], ...]
    lengths: Tuple[int, ...]
    pairing: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.lengths)

    @property
    def name(self) -> str:
        return "x".join(str(t) for t in self.components)

    def offsets(self) -> List[int]:
        out, pos = [], 0
        for t in self.components:
            out.append(pos)
            pos += t.rank
        return out


def _pairing_from(inv_cartan: Sequence[Sequence[Fraction]], lengths: Sequence[int]) -> Tuple[int, ...]:
    out: List[int] = []
    for i, row in enumerate(inv_cartan):
        value = lengths[i] * sum(row, Fraction(0))
        if value.denominator != 1 or value <= 0:
            raise NumericalError(f"pairing <2rho|w_{i + 1}> = {value} is not a positive integer")
        out.append(int(value))
    return tuple(out)


def build_datum(components: Sequence[SimpleType]) -> RootDatum:
    if not components:
        raise InputError("build_datum needs at least one simple component")
    components = tuple(components)
    r = sum(t.rank for t in components)
    cartan = [[0] * r for _ in range(r)]
    lengths: List[int] = []
    pos = 0
    for t in components:
        block = _component_cartan(t)
        for i in range(t.rank):
            for j in range(t.rank):
                cartan[pos + i][pos + j] = block[i][j]
        lengths.extend(_lengths(t))
        pos += t.rank

    inv = invert_rational_matrix(cartan)
    identity = rational_matmul(cartan, inv)
    if any(identity[i][j] != int(i == j) for i in range(r) for j in range(r)):
        raise NumericalError(f"A*C != I for {components}")

    datum = RootDatum(
        components=components,
        cartan=tuple(tuple(row) for row in cartan),
        inv_cartan=tuple(tuple(row) for row in inv),
        lengths=tuple(lengths),
        pairing=_pairing_from(inv, lengths),
    )
    logger.debug("build_datum(): %s pairing=%s", datum.name, datum.pairing)
    return datum


@lru_cache(maxsize=None)
def datum_for(type_string: str) -> RootDatum:
    return build_datum(parse_type_string(type_string))


def two_rho_pairing(d: RootDatum) -> Tuple[int, ...]:
    # stored pairing must equal d_i * sum_j c_ij
    pairing = _pairing_from(d.inv_cartan, d.lengths)
    if pairing != d.pairing:
        raise NumericalError(f"stored pairing {d.pairing} disagrees with recomputed {pairing}")
    return pairing


def upsilon(d: RootDatum) -> int:
    pairing = two_rho_pairing(d)
    whole = math.gcd(*pairing)
    per_component = [
        math.gcd(*pairing[start:start + t.rank]) for start, t in zip(d.offsets(), d.components)
    ]
    if math.gcd(*per_component) != whole:
        raise NumericalError(f"gcd over components {per_component} disagrees with {whole} for {d.name}")
    return whole


def upsilon_closed_form(t: SimpleType) -> int:
    """Closed-form Upsilon for a simple type, kept separate from the gcd path."""
    n = t.rank
    if t.family in ("A", "B"):
        return 2 if n % 2 == 0 else 1
    if t.family == "D":
        return 2 if n % 4 in (0, 1) else 1
    if t.family == "E":
        return 1 if n == 7 else 2
    return 2


def _check_weight(d: RootDatum, mu: Weight) -> None:
    if len(mu.coeffs) != d.rank:
        raise InputError(f"weight has {len(mu.coeffs)} coefficients, datum {d.name} has rank {d.rank}")


def weight_pairing(d: RootDatum, mu: Weight) -> int:
    _check_weight(d, mu)
    return sum(c * p for c, p in zip(mu.coeffs, d.pairing))


def weight_in_root_lattice(d: RootDatum, mu: Weight) -> Tuple[Fraction, ...]:
    """Coordinates of mu in the simple-root basis; mu is in Q iff all are integers."""
    _check_weight(d, mu)
    # w_k = sum_i c_{i,k} alpha_i
    return tuple(
        sum((Fraction(mu.coeffs[k]) * d.inv_cartan[i][k] for k in range(d.rank)), Fraction(0))
        for i in range(d.rank)
    )


def tau_sigma_exponents(d: RootDatum, lwt: Weight, rwt: Weight) -> Tuple[int, int]:
    """(sigma, tau) exponents: sigma_t and tau_t act on a coefficient by q^{i*exp*t}."""
    return weight_pairing(d, lwt + rwt), weight_pairing(d, lwt - rwt)


def invariant_table_gq(d: RootDatum, q: float) -> InvariantTable:
    if not 0 < q < 1:
        raise InputError(f"q must lie in (0,1), got {q}")
    unit = UnitSymbol.pi_over_log(q)
    ups = upsilon(d)
    t_tau = RealSubgroup.cyclic_exact(1, unit)
    t_tau_inn = RealSubgroup.cyclic_exact(Fraction(1, ups), unit)
    full = RealSubgroup.full()

    entries: Dict[str, RealSubgroup] = {
        T_TAU: t_tau,
        T_TAU_INN: t_tau_inn,
        T_TAU_AINN: t_tau_inn,
        T_SIGMA_INN: full,
        T_SIGMA_AINN: full,
        MOD: full,
        MOD_DUAL: t_tau_inn,
    }
    entries[T_SIGMA] = intersect(entries[T_TAU], entries[MOD_DUAL])

    # the dual is discrete with matrix-algebra von Neumann algebra
    entries[dual_key(T_TAU)] = t_tau
    for key in (T_TAU_INN, T_TAU_AINN, T_SIGMA_INN, T_SIGMA_AINN):
        entries[dual_key(key)] = full
    entries[dual_key(T_SIGMA)] = intersect(entries[dual_key(T_TAU)], entries[MOD])
    return InvariantTable(f"{d.name}_q", entries)


def valid_simple_types(max_rank: int) -> List[SimpleType]:
    out: List[SimpleType] = []
    for family in "ABCD":
        out.extend(SimpleType(family, n) for n in range(_MIN_RANK[family], max_rank + 1))
    for family, ranks in _FIXED_RANKS.items():
        out.extend(SimpleType(family, n) for n in ranks if n <= max_rank)
    return out


def upsilon_sweep(max_rank: int) -> pd.DataFrame:
    """Upsilon via gcd against the closed form for every simple type up to max_rank."""
    if max_rank < 1:
        raise InputError(f"max_rank must be >= 1, got {max_rank}")
    rows = []
    for t in valid_simple_types(max_rank):
        d = build_datum([t])
        rows.append({
            "type": str(t),
            "rank": t.rank,
            "upsilon": upsilon(d),
            "reference": upsilon_closed_form(t),
            "pairing": " ".join(str(p) for p in d.pairing),
        })
    df = pd.DataFrame(rows, columns=["type", "rank", "upsilon", "reference", "pairing"])
    df["agrees"] = df["upsilon"] == df["reference"]
    return df
