from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterator, Optional, Tuple

from src.errors import InputError
from src.subgroups import RealSubgroup, equivalent, intersect, is_subgroup_of, scale

logger = logging.getLogger(__name__)

T_TAU = "T_tau"
T_TAU_INN = "T_tauInn"
T_TAU_AINN = "T_tauAInn"
T_SIGMA = "T_sigma"
T_SIGMA_INN = "T_sigmaInn"
T_SIGMA_AINN = "T_sigmaAInn"
MOD = "Mod"
MOD_DUAL = "Mod_dual"

BASE_KEYS: Tuple[str, ...] = (T_TAU, T_TAU_INN, T_TAU_AINN, T_SIGMA, T_SIGMA_INN, T_SIGMA_AINN, MOD)
KNOWN_KEYS = frozenset(BASE_KEYS + (MOD_DUAL,) + tuple(f"{k}_dual" for k in BASE_KEYS if k != MOD))

# invariant families, used to group rows in markdown output
FAMILIES: Dict[str, Tuple[str, ...]] = {
    "scaling": (T_TAU, T_TAU_INN, T_TAU_AINN),
    "modular": (T_SIGMA, T_SIGMA_INN, T_SIGMA_AINN),
    "modular element": (MOD, MOD_DUAL),
}


def dual_key(key: str) -> str:
    """Mod <-> Mod_dual, T_x <-> T_x_dual."""
    if key == MOD:
        return MOD_DUAL
    if key == MOD_DUAL:
        return MOD
    return key[: -len("_dual")] if key.endswith("_dual") else f"{key}_dual"


@dataclass(frozen=True)
class InvariantTable:
    """Named invariants of one quantum group (and optionally its dual side)."""
    name: str
    entries: Dict[str, RealSubgroup] = field(default_factory=dict)

    def __post_init__(self) -> None:
        unknown = sorted(set(self.entries) - KNOWN_KEYS)
        if unknown:
            raise InputError(f"unknown invariant key(s): {', '.join(unknown)}")

    def __getitem__(self, key: str) -> RealSubgroup:
        return self.entries[key]

    def __contains__(self, key: object) -> bool:
        return key in self.entries

    def __iter__(self) -> Iterator[str]:
        return iter(sorted(self.entries))

    def get(self, key: str) -> Optional[RealSubgroup]:
        return self.entries.get(key)

    def dual(self, name: Optional[str] = None) -> "InvariantTable":
        """Swap G-side and dual-side keys, so a dual table reads like a G table."""
        return InvariantTable(name or f"dual of {self.name}", {dual_key(k): v for k, v in self.entries.items()})

    def g_side(self, name: Optional[str] = None) -> "InvariantTable":
        """Only the G-side keys (and Mod_dual)."""
        keep = set(BASE_KEYS) | {MOD_DUAL}
        return InvariantTable(name or self.name, {k: v for k, v in self.entries.items() if k in keep})

    def to_dict(self) -> Dict[str, Any]:
        return {k: self.entries[k].to_dict() for k in sorted(self.entries)}

    def symbolic(self) -> Dict[str, str]:
        return {k: self.entries[k].symbolic() for k in sorted(self.entries)}


# consistency checks (general relations between the invariants)
def check_modular_intersection(table: InvariantTable) -> Optional[bool]:
    """T_sigma == T_tau ∩ Mod_dual; None when the table lacks one of the keys."""
    if not all(k in table for k in (T_SIGMA, T_TAU, MOD_DUAL)):
        return None
    return equivalent(intersect(table[T_TAU], table[MOD_DUAL]), table[T_SIGMA])


def check_inner_intersections(table: InvariantTable) -> Optional[bool]:
    needed = (T_SIGMA_INN, T_TAU_INN, T_SIGMA_AINN, T_TAU_AINN, MOD_DUAL)
    if not all(k in table for k in needed):
        return None
    mod_dual = table[MOD_DUAL]
    inn = equivalent(intersect(table[T_SIGMA_INN], mod_dual), intersect(table[T_TAU_INN], mod_dual))
    ainn = equivalent(intersect(table[T_SIGMA_AINN], mod_dual), intersect(table[T_TAU_AINN], mod_dual))
    return inn and ainn


def check_half_scaling(table: InvariantTable) -> Optional[bool]:
    """Mod ∩ Mod_dual ⊆ (1/2) T_tau."""
    if not all(k in table for k in (MOD, MOD_DUAL, T_TAU)):
        return None
    return is_subgroup_of(intersect(table[MOD], table[MOD_DUAL]), scale(table[T_TAU], Fraction(1, 2)))


def consistency_report(table: InvariantTable) -> Dict[str, Optional[bool]]:
    report = {
        "modular_intersection": check_modular_intersection(table),
        "inner_intersections": check_inner_intersections(table),
        "half_scaling": check_half_scaling(table),
    }
    if False in report.values():
        logger.warning("consistency_report(): table %r fails %s", table.name,
                       [k for k, v in report.items() if v is False])
    return report
