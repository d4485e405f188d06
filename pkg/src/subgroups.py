"""
Closed subgroups of (R, +): the whole line, {0}, or c*Z for some c > 0.

Cyclic subgroups may carry an exact form coefficient * unit where the unit is
pi/|log base| (or a raw real). Two exact subgroups over the same unit are
intersected with rational arithmetic; everything else falls back to float
arithmetic and continued-fraction recognition, in which case a Zero result is
only "Zero at resolution" and is flagged as such.
"""
from __future__ import annotations

import enum
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterable, Optional

from src.errors import InputError
from src.numerics import format_rational, rational_gcd, rational_lcm, recognize_rational

logger = logging.getLogger(__name__)

LATTICE_REL_TOL = 1e-10
LATTICE_MAX_DENOMINATOR = 1000
EXACT_CONSISTENCY_TOL = 1e-12
UNIT_BASE_TOL = 1e-15


class SubgroupKind(str, enum.Enum):
    FULL = "full"
    ZERO = "zero"
    CYCLIC = "cyclic"


class UnitTag(str, enum.Enum):
    PI_OVER_LOG = "pi_over_log"
    RAW = "raw"


@dataclass(frozen=True)
class UnitSymbol:
    tag: UnitTag
    base: Optional[float] = None
    # printing only: the name of the deformation parameter ("q", "mu", ...)
    label: str = field(default="q", compare=False)

    def __post_init__(self) -> None:
        if self.tag is UnitTag.PI_OVER_LOG:
            if self.base is None or not self.base > 0 or self.base == 1 or not math.isfinite(self.base):
                raise InputError(f"pi/log(base) unit needs base in (0,1) or (1,inf), got {self.base!r}")

    @classmethod
    def pi_over_log(cls, base: float, label: str = "q") -> "UnitSymbol":
        return cls(UnitTag.PI_OVER_LOG, float(base), label)

    @classmethod
    def raw(cls) -> "UnitSymbol":
        return cls(UnitTag.RAW, None, "1")

    @property
    def value(self) -> float:
        if self.tag is UnitTag.RAW:
            return 1.0
        return math.pi / abs(math.log(self.base))

    def same_as(self, other: "UnitSymbol") -> bool:
        if self.tag is not other.tag:
            return False
        if self.tag is UnitTag.RAW:
            return True
        return math.isclose(self.base, other.base, rel_tol=UNIT_BASE_TOL, abs_tol=0.0)

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"tag": self.tag.value}
        if self.base is not None:
            out["base"] = self.base
            out["label"] = self.label
        return out


@dataclass(frozen=True)
class ExactForm:
    coefficient: Fraction
    unit: UnitSymbol

    @property
    def value(self) -> float:
        return float(self.coefficient) * self.unit.value

    def symbolic(self) -> str:
        """Symbolic rendering, e.g. "pi/(2*log(q))" or "2*pi/(5*log(mu))"."""
        p, r = self.coefficient.numerator, self.coefficient.denominator
        if self.unit.tag is UnitTag.RAW:
            return format_rational(self.coefficient)
        head = "pi" if p == 1 else f"{p}*pi"
        log_term = f"log({self.unit.label})"
        return f"{head}/{log_term}" if r == 1 else f"{head}/({r}*{log_term})"


@dataclass(frozen=True)
class RealSubgroup:
    kind: SubgroupKind
    generator: Optional[float] = None
    exact: Optional[ExactForm] = None
    resolution_limited: bool = False

    def __post_init__(self) -> None:
        if self.kind is SubgroupKind.CYCLIC:
            if self.generator is None or not self.generator > 0 or not math.isfinite(self.generator):
                raise InputError(f"cyclic subgroup needs a positive finite generator, got {self.generator!r}")
            if self.exact is not None and not math.isclose(
                self.generator, self.exact.value, rel_tol=EXACT_CONSISTENCY_TOL
            ):
                raise InputError(
                    f"generator {self.generator!r} disagrees with exact form {self.exact.symbolic()}"
                )
        elif self.generator is not None or self.exact is not None:
            raise InputError(f"{self.kind.value} subgroup carries no generator")

    # constructors
    @classmethod
    def full(cls) -> "RealSubgroup":
        return cls(SubgroupKind.FULL)

    @classmethod
    def zero(cls, resolution_limited: bool = False) -> "RealSubgroup":
        return cls(SubgroupKind.ZERO, resolution_limited=resolution_limited)

    @classmethod
    def cyclic(cls, generator: float) -> "RealSubgroup":
        """cZ with c stored positive (cZ = (-c)Z)."""
        if generator == 0:
            return cls.zero()
        return cls(SubgroupKind.CYCLIC, abs(float(generator)))

    @classmethod
    def cyclic_exact(cls, coefficient: object, unit: UnitSymbol) -> "RealSubgroup":
        coefficient = abs(Fraction(coefficient))
        if coefficient == 0:
            return cls.zero()
        form = ExactForm(coefficient, unit)
        return cls(SubgroupKind.CYCLIC, form.value, form)

    # predicates
    @property
    def is_full(self) -> bool:
        return self.kind is SubgroupKind.FULL

    @property
    def is_zero(self) -> bool:
        return self.kind is SubgroupKind.ZERO

    @property
    def is_cyclic(self) -> bool:
        return self.kind is SubgroupKind.CYCLIC

    def symbolic(self) -> str:
        if self.is_full:
            return "R"
        if self.is_zero:
            return "{0}"
        body = self.exact.symbolic() if self.exact is not None else repr(self.generator)
        return f"{body}*Z"

    def canonical(self) -> tuple:
        """Hashable key for exact comparisons (exact coefficient when available)."""
        if not self.is_cyclic:
            return (self.kind.value,)
        if self.exact is not None:
            unit = self.exact.unit
            return (self.kind.value, self.exact.coefficient, unit.tag.value, unit.base)
        return (self.kind.value, self.generator)

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"kind": self.kind.value, "resolution_limited": self.resolution_limited}
        if self.generator is not None:
            out["generator"] = self.generator
        if self.exact is not None:
            out["exact"] = {
                "coefficient": format_rational(self.exact.coefficient),
                "unit": self.exact.unit.to_dict(),
            }
        return out

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RealSubgroup":
        try:
            kind = SubgroupKind(data["kind"])
        except (KeyError, ValueError) as exc:
            raise InputError(f"bad subgroup kind in {data!r}") from exc
        flag = bool(data.get("resolution_limited", False))
        if kind is SubgroupKind.FULL:
            return cls.full()
        if kind is SubgroupKind.ZERO:
            return cls.zero(resolution_limited=flag)
        exact = data.get("exact")
        if exact:
            unit_data = exact["unit"]
            tag = UnitTag(unit_data["tag"])
            if tag is UnitTag.RAW:
                unit = UnitSymbol.raw()
            else:
                unit = UnitSymbol(tag, unit_data.get("base"), str(unit_data.get("label", "q")))
            out = cls.cyclic_exact(Fraction(exact["coefficient"]), unit)
        else:
            out = cls.cyclic(float(data["generator"]))
        return out


def equivalent(a: RealSubgroup, b: RealSubgroup, rel_tol: float = 1e-9) -> bool:
    """Same kind and (for cyclic) generators equal within rel_tol."""
    if a.kind is not b.kind:
        return False
    if not a.is_cyclic:
        return True
    if a.exact is not None and b.exact is not None and a.exact.unit.same_as(b.exact.unit):
        return a.exact.coefficient == b.exact.coefficient
    return math.isclose(a.generator, b.generator, rel_tol=rel_tol)


def intersect(
    a: RealSubgroup,
    b: RealSubgroup,
    rel_tol: float = LATTICE_REL_TOL,
    max_denominator: int = LATTICE_MAX_DENOMINATOR,
) -> RealSubgroup:
    """Intersection of two closed subgroups of R."""
    if a.is_full:
        return b
    if b.is_full:
        return a
    if a.is_zero or b.is_zero:
        return RealSubgroup.zero(
            resolution_limited=(a.is_zero and a.resolution_limited) or (b.is_zero and b.resolution_limited)
        )

    if a.exact is not None and b.exact is not None and a.exact.unit.same_as(b.exact.unit):
        coefficient = rational_lcm(a.exact.coefficient, b.exact.coefficient)
        return RealSubgroup.cyclic_exact(coefficient, a.exact.unit)

    ratio = recognize_rational(a.generator / b.generator, max_denominator=max_denominator, rel_tol=rel_tol)
    if ratio is None:
        logger.debug(
            "intersect(): generators %r and %r not commensurable at denominator %d",
            a.generator, b.generator, max_denominator,
        )
        return RealSubgroup.zero(resolution_limited=True)
    # a/b = p/q reduced, so a*q = b*p is the least common positive element
    return RealSubgroup.cyclic(a.generator * ratio.denominator)


def intersect_all(
    groups: Iterable[RealSubgroup],
    rel_tol: float = LATTICE_REL_TOL,
    max_denominator: int = LATTICE_MAX_DENOMINATOR,
) -> RealSubgroup:
    out = RealSubgroup.full()
    for g in groups:
        out = intersect(out, g, rel_tol=rel_tol, max_denominator=max_denominator)
    return out


def cyclic_intersection_exact(
    unit: UnitSymbol,
    multipliers: Iterable[object],
    coefficient: object = 1,
) -> RealSubgroup:
    """
    Intersection over i of (coefficient * unit / m_i) Z, which equals
    (coefficient * unit / g) Z with g = rational_gcd(m_i).
    """
    values = [Fraction(m) for m in multipliers]
    if not values:
        raise InputError("cyclic_intersection_exact needs at least one multiplier")
    if any(m == 0 for m in values):
        raise InputError("cyclic_intersection_exact multipliers must be nonzero")
    g = rational_gcd(values)
    return RealSubgroup.cyclic_exact(Fraction(coefficient) / g, unit)


def contains(g: RealSubgroup, t: float, tol: float = 1e-9) -> bool:
    if not tol > 0:
        raise InputError(f"tol must be positive, got {tol}")
    if g.is_full:
        return True
    if g.is_zero:
        return abs(t) <= tol
    k = round(t / g.generator)
    return abs(t - k * g.generator) <= tol


def scale(g: RealSubgroup, factor: object) -> RealSubgroup:
    """factor * g for a nonzero rational factor (e.g. 1/2 * T_tau)."""
    factor = Fraction(factor)
    if factor == 0:
        raise InputError("scale factor must be nonzero")
    if not g.is_cyclic:
        return g
    if g.exact is not None:
        return RealSubgroup.cyclic_exact(g.exact.coefficient * factor, g.exact.unit)
    return RealSubgroup.cyclic(g.generator * float(factor))


def is_subgroup_of(
    a: RealSubgroup,
    b: RealSubgroup,
    rel_tol: float = LATTICE_REL_TOL,
    max_denominator: int = LATTICE_MAX_DENOMINATOR,
) -> bool:
    """a ⊆ b, decided symbolically (exact) or through recognition (float)."""
    if a.is_zero or b.is_full:
        return True
    if a.is_full or b.is_zero:
        return False
    if a.exact is not None and b.exact is not None and a.exact.unit.same_as(b.exact.unit):
        return (a.exact.coefficient / b.exact.coefficient).denominator == 1
    ratio = recognize_rational(a.generator / b.generator, max_denominator=max_denominator, rel_tol=rel_tol)
    return ratio is not None and ratio.denominator == 1
