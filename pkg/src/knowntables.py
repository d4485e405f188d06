"""
Closed-form invariant tables for the quantum E(2) group and the three
families of quantum "az+b" groups. These are lookups, each entry carrying
the literature source it rests on.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from src.errors import InputError
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
from src.subgroups import RealSubgroup, UnitSymbol

INNER_KEYS = (T_TAU_INN, T_TAU_AINN, T_SIGMA_INN, T_SIGMA_AINN)


class CaseKind(str, enum.Enum):
    EQ2 = "eq2"
    AZB_ROOT_OF_UNITY = "azb1"
    AZB_REAL = "azb2"
    AZB_COMPLEX = "azb3"


@dataclass(frozen=True)
class KnownCase:
    which: CaseKind
    q: Optional[float] = None
    N: Optional[int] = None

    def __post_init__(self) -> None:
        if self.which in (CaseKind.EQ2, CaseKind.AZB_REAL):
            if self.q is None or not 0 < self.q < 1:
                raise InputError(f"case {self.which.value} needs q in (0,1), got {self.q!r}")
        if self.which is CaseKind.AZB_ROOT_OF_UNITY:
            # q = exp(2 pi i / N)
            if self.N is None or self.N < 6 or self.N % 2:
                raise InputError(f"case azb1 needs an even N >= 6, got {self.N!r}")
        if self.which is CaseKind.AZB_COMPLEX and self.N is not None:
            # Im(rho) = N / 2pi
            if self.N == 0 or self.N % 2:
                raise InputError(f"case azb3 needs a nonzero even N, got {self.N!r}")

    @classmethod
    def parse(cls, name: str, q: Optional[float] = None, N: Optional[int] = None) -> "KnownCase":
        try:
            which = CaseKind(name.strip().lower())
        except ValueError as exc:
            raise InputError(
                f"unknown case {name!r}; expected one of {', '.join(c.value for c in CaseKind)}"
            ) from exc
        if which is CaseKind.AZB_ROOT_OF_UNITY and N is None:
            N = 6
        return cls(which, q=q, N=N)


CITATIONS: Dict[CaseKind, str] = {
    CaseKind.EQ2: (
        "E_q(2): L-infinity is L-infinity(T) tensor B(l2(Z)) with modular operator 1 x 1 x Q^2 (Baaj); "
        "scaling group tau_t(n) = q^{-2it} n and the dual modular element (Jacobs, Prop. 2.8.4)"
    ),
    CaseKind.AZB_ROOT_OF_UNITY: (
        "az+b, q = exp(2 pi i/N): anti-isomorphic to its dual, type I_infinity factor; "
        "Haar measure (Van Daele; Woronowicz)"
    ),
    CaseKind.AZB_REAL: (
        "az+b, 0 < q < 1: anti-isomorphic to its dual, type I_infinity factor; "
        "tau_t(a) = a, tau_t(b) = q^{2it} b"
    ),
    CaseKind.AZB_COMPLEX: (
        "az+b, q = exp(1/rho) with Re rho < 0: anti-isomorphic to its dual, type I_infinity factor; "
        "Haar measure (Woronowicz)"
    ),
}


def _table(name: str, g_side: Dict[str, RealSubgroup], dual_side: Dict[str, RealSubgroup]) -> InvariantTable:
    entries = dict(g_side)
    entries.update({dual_key(k): v for k, v in dual_side.items()})
    return InvariantTable(name, entries)


def _uniform(cyclic: RealSubgroup) -> Dict[str, RealSubgroup]:
    """T_tau = T_sigma = Mod = cyclic, every inner invariant the whole line."""
    full = RealSubgroup.full()
    side = {key: full for key in INNER_KEYS}
    side.update({T_TAU: cyclic, T_SIGMA: cyclic, MOD: cyclic})
    return side


def known_table(c: KnownCase) -> InvariantTable:
    """Both sides in one table: G keys plus their *_dual counterparts (Mod_dual for the dual's Mod)."""
    full = RealSubgroup.full()
    if c.which is CaseKind.EQ2:
        generator = RealSubgroup.cyclic_exact(1, UnitSymbol.pi_over_log(c.q))
        g_side = {
            T_TAU: generator,
            T_TAU_INN: generator,
            T_TAU_AINN: generator,
            T_SIGMA: generator,
            T_SIGMA_INN: full,
            T_SIGMA_AINN: full,
            MOD: full,
        }
        return _table("E_q(2)", g_side, _uniform(generator))

    if c.which is CaseKind.AZB_REAL:
        side = _uniform(RealSubgroup.cyclic_exact(1, UnitSymbol.pi_over_log(c.q)))
        return _table("az+b (0<q<1)", side, side)

    side = _uniform(RealSubgroup.zero())
    label = "az+b (root of unity)" if c.which is CaseKind.AZB_ROOT_OF_UNITY else "az+b (complex q)"
    return _table(label, side, side)


def known_invariants(c: KnownCase) -> Tuple[InvariantTable, InvariantTable]:
    """(table for G, table for the dual), each read with G-side keys."""
    combined = known_table(c)
    return (
        combined.g_side(combined.name),
        combined.dual().g_side(f"dual of {combined.name}"),
    )


def citation(c: KnownCase) -> str:
    return CITATIONS[c.which]
