"""Canonicalization of a shape to its unit representative (area = semiperimeter).

Every shape C determines a unique scale factor S(C)/A(C); rescaling by it
yields the one shape in C's similarity class whose area equals its
semiperimeter. That common value is the class's fundamental measure, and
indexing the class by multiples of the unit shape makes area differentiate
to perimeter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .curves import Shape, scaled
from .errors import DomainError


@dataclass(frozen=True)
class UnitizationResult:
    tong_inradius_reciprocal: float  # S/A of the input shape, units 1/length
    unit_shape: Shape
    fundamental_measure: float  # common value A = S of the unit shape

    def to_dict(self) -> dict:
        return {
            "tong_inradius_reciprocal": self.tong_inradius_reciprocal,
            "fundamental_measure": self.fundamental_measure,
            "unit_shape": self.unit_shape.to_dict(),
        }


def tong_inradius(shape: Shape) -> float:
    """Area over semiperimeter: the calculus-friendly index of the shape."""
    return shape.area() / shape.semiperimeter()


def unitize(shape: Shape) -> UnitizationResult:
    upsilon = shape.semiperimeter() / shape.area()
    unit = scaled(shape, upsilon)
    measure = 0.5 * (unit.area() + unit.semiperimeter())
    return UnitizationResult(upsilon, unit, measure)


def idempotence_check(shape: Shape, tol: float = 1e-9) -> bool:
    """Unitizing a unit shape must leave scale and measure fixed."""
    first = unitize(shape)
    second = unitize(first.unit_shape)
    scale_fixed = abs(second.tong_inradius_reciprocal - 1.0) <= tol
    measure_fixed = (
        abs(second.fundamental_measure - first.fundamental_measure)
        <= tol * first.fundamental_measure
    )
    return scale_fixed and measure_fixed


@dataclass(frozen=True)
class IndexedFamilyProbe:
    """Sample points for probing the indexing of a unit shape's family."""

    base_unit_shape: Shape
    lambdas: tuple[float, ...]

    def __post_init__(self) -> None:
        a = self.base_unit_shape.area()
        s = self.base_unit_shape.semiperimeter()
        if abs(a - s) > 1e-6 * s:
            raise DomainError(f"probe base is not a unit shape: A={a!r}, S={s!r}")
        if any(lam <= 0.0 for lam in self.lambdas):
            raise DomainError("family indices must be positive")


@dataclass(frozen=True)
class IndexingEntry:
    lam: float
    area_derivative: float  # central finite difference of measured area
    twice_semiperimeter: float  # 2 S(lambda), i.e. the perimeter, measured
    derivative_rel_err: float
    identity_rel_err: float
    ok: bool


@dataclass
class IndexingReport:
    entries: list[IndexingEntry] = field(default_factory=list)
    failures: list[float] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def check_calculus_friendly(
    probe: IndexedFamilyProbe,
    derivative_rel_tol: float = 1e-5,
    identity_rel_tol: float = 1e-12,
) -> IndexingReport:
    """Verify that area differentiates to perimeter along the family index.

    Two independent checks per sampled index lambda:

    * a central finite difference of the kernel-measured area A(lambda), with
      step 1e-5 * lambda, against the kernel-measured perimeter 2 S(lambda);
    * the exact quadratic-growth identity
      A(lambda + d) - A(lambda) = 2 * ((lambda + (lambda + d)) / 2) * d * Pi,
      which holds for any increment. The increment here is lambda / 4, large
      enough that the difference of the two quadratic terms carries no
      cancellation, so the identity must hold to roundoff.
    """
    base = probe.base_unit_shape
    measure = 0.5 * (base.area() + base.semiperimeter())
    report = IndexingReport()
    for lam in probe.lambdas:
        h = 1e-5 * lam
        area_plus = scaled(base, lam + h).area()
        area_minus = scaled(base, lam - h).area()
        derivative = (area_plus - area_minus) / (2.0 * h)
        perimeter = 2.0 * scaled(base, lam).semiperimeter()
        deriv_err = abs(derivative - perimeter) / perimeter

        d = 0.25 * lam
        delta_area = measure * (lam + d) ** 2 - measure * lam**2
        strip = 2.0 * ((lam + (lam + d)) / 2.0) * d * measure
        identity_err = abs(delta_area - strip) / abs(strip)

        ok = deriv_err <= derivative_rel_tol and identity_err <= identity_rel_tol
        report.entries.append(
            IndexingEntry(lam, derivative, perimeter, deriv_err, identity_err, ok)
        )
        if not ok:
            report.failures.append(lam)
    return report


def measure_multiset_match(a: Shape, b: Shape, rel_tol: float = 1e-8) -> bool:
    """Congruence surrogate: equal area, semiperimeter and piece-length multiset."""
    if abs(a.area() - b.area()) > rel_tol * max(a.area(), b.area()):
        return False
    if abs(a.semiperimeter() - b.semiperimeter()) > rel_tol * max(
        a.semiperimeter(), b.semiperimeter()
    ):
        return False
    lengths_a = sorted(p.length() for p in a.pieces)
    lengths_b = sorted(p.length() for p in b.pieces)
    if len(lengths_a) != len(lengths_b):
        return False
    scale = max(lengths_a[-1], lengths_b[-1])
    return all(
        math.isclose(x, y, rel_tol=0.0, abs_tol=rel_tol * scale)
        for x, y in zip(lengths_a, lengths_b)
    )
