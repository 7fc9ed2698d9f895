"""Shape families with closed-form fundamental measures and unit-shape builders.

Each family is a tagged parameter record; ``fundamental_measure`` evaluates
the closed form (quadrature for the ellipse integral) and ``build_unit_shape``
constructs the concrete unit-scale member so the curve kernel can cross-check
the formulas.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, fields
from typing import Union

from .curves import EllipticalArc, Point, Shape, make_polygon
from .errors import DomainError
from .quadrature import adaptive_quadrature


@dataclass(frozen=True)
class RightTriangle:
    """Right triangles indexed by an acute angle."""

    theta: float

    def __post_init__(self) -> None:
        if not 0.0 < self.theta < math.pi / 2.0:
            raise DomainError(f"right-triangle angle must lie in (0, pi/2), got {self.theta}")


@dataclass(frozen=True)
class Triangle:
    """General triangles indexed by the two shorter-to-longest side ratios.

    The pair must satisfy r <= 1, s <= 1 and r + s > 1 (a triangle with its
    longest side normalized exists exactly then).
    """

    r: float
    s: float

    def __post_init__(self) -> None:
        if not (0.0 < self.r <= 1.0 and 0.0 < self.s <= 1.0 and self.r + self.s > 1.0):
            raise DomainError(f"({self.r}, {self.s}) is not a triangle-friendly ratio pair")


@dataclass(frozen=True)
class Rectangle:
    """Rectangles indexed by the height-to-length ratio."""

    r: float

    def __post_init__(self) -> None:
        if not self.r > 0.0:
            raise DomainError(f"rectangle ratio must be positive, got {self.r}")


@dataclass(frozen=True)
class Rhombus:
    """Rhombi indexed by an interior angle."""

    theta: float

    def __post_init__(self) -> None:
        if not 0.0 < self.theta < math.pi:
            raise DomainError(f"rhombus angle must lie in (0, pi), got {self.theta}")


@dataclass(frozen=True)
class Parallelogram:
    """Parallelograms indexed by an interior angle and a side ratio."""

    theta: float
    r: float

    def __post_init__(self) -> None:
        if not 0.0 < self.theta < math.pi:
            raise DomainError(f"parallelogram angle must lie in (0, pi), got {self.theta}")
        if not self.r > 0.0:
            raise DomainError(f"parallelogram ratio must be positive, got {self.r}")


@dataclass(frozen=True)
class Ellipse:
    """Ellipses indexed by the semi-minor to semi-major axis ratio."""

    r: float

    def __post_init__(self) -> None:
        if not 0.0 < self.r < 1.0:
            raise DomainError(f"ellipse axis ratio must lie in (0, 1), got {self.r}")


@dataclass(frozen=True)
class RegularPolygon:
    m: int

    def __post_init__(self) -> None:
        if not (isinstance(self.m, int) and self.m >= 3):
            raise DomainError(f"regular polygon needs an integer m >= 3, got {self.m}")


FamilyParam = Union[
    RightTriangle, Triangle, Rectangle, Rhombus, Parallelogram, Ellipse, RegularPolygon
]

FAMILY_NAMES = {
    RightTriangle: "right_triangle",
    Triangle: "triangle",
    Rectangle: "rectangle",
    Rhombus: "rhombus",
    Parallelogram: "parallelogram",
    Ellipse: "ellipse",
    RegularPolygon: "regular_polygon",
}
FAMILY_BY_NAME = {name: cls for cls, name in FAMILY_NAMES.items()}


def family_to_dict(p: FamilyParam) -> dict:
    d: dict = {"family": FAMILY_NAMES[type(p)]}
    for f in fields(p):
        d[f.name] = getattr(p, f.name)
    return d


def family_from_dict(d: dict) -> FamilyParam:
    name = str(d["family"]).replace("-", "_")
    if name not in FAMILY_BY_NAME:
        raise DomainError(f"unknown family: {d['family']!r}")
    cls = FAMILY_BY_NAME[name]
    kwargs = {f.name: d[f.name] for f in fields(cls)}
    return cls(**kwargs)


def _ellipse_speed_integral(r: float) -> float:
    """int_0^pi sqrt(1 + (r^2 - 1) cos^2 t) dt, the unit-semi-major speed integral."""
    k = r * r - 1.0
    return adaptive_quadrature(
        lambda t: math.sqrt(1.0 + k * math.cos(t) ** 2), 0.0, math.pi, rel_tol=1e-10
    )


def ellipse_semi_minor(r: float) -> float:
    """Semi-minor axis of the unit ellipse with axis ratio r; lies in (2/pi, 1)."""
    if not 0.0 < r < 1.0:
        raise DomainError(f"ellipse axis ratio must lie in (0, 1), got {r}")
    return _ellipse_speed_integral(r) / math.pi


@dataclass(frozen=True)
class EllipseMeanRadius:
    """Axis ratio r paired with the ellipse's mean radius R.

    R is the radius of the circle whose semiperimeter matches the ellipse
    with semi-major axis 1 and semi-minor axis r; it coincides with the unit
    ellipse's semi-minor axis and always lies strictly between 2/pi and 1.
    """

    r: float
    R: float

    def __post_init__(self) -> None:
        if not 0.0 < self.r < 1.0:
            raise DomainError(f"ellipse axis ratio must lie in (0, 1), got {self.r}")
        if not 2.0 / math.pi < self.R < 1.0:
            raise DomainError(f"mean radius must lie in (2/pi, 1), got {self.R}")


def ellipse_mean_radius(r: float) -> EllipseMeanRadius:
    return EllipseMeanRadius(r, ellipse_semi_minor(r))


def rhombus_short_diagonal(theta: float) -> float:
    """Shortest diagonal of the unit rhombus with interior angle theta."""
    if not 0.0 < theta < math.pi:
        raise DomainError(f"rhombus angle must lie in (0, pi), got {theta}")
    side = 2.0 / math.sin(theta)
    return 2.0 * side * min(math.sin(theta / 2.0), math.cos(theta / 2.0))


def fundamental_measure(p: FamilyParam) -> float:
    """Closed-form area (= semiperimeter) of the family's unit shape."""
    if isinstance(p, RightTriangle):
        return (1.0 + 1.0 / math.cos(p.theta)) * (1.0 + 1.0 / math.sin(p.theta))
    if isinstance(p, Triangle):
        r, s = p.r, p.s
        return (r + s + 1.0) ** 1.5 / math.sqrt(
            (-r + s + 1.0) * (r - s + 1.0) * (r + s - 1.0)
        )
    if isinstance(p, Rectangle):
        return (1.0 + p.r) ** 2 / p.r
    if isinstance(p, Rhombus):
        return 4.0 / math.sin(p.theta)
    if isinstance(p, Parallelogram):
        return (1.0 + p.r) ** 2 / (p.r * math.sin(p.theta))
    if isinstance(p, Ellipse):
        return _ellipse_speed_integral(p.r) ** 2 / (math.pi * p.r)
    if isinstance(p, RegularPolygon):
        return p.m * math.tan(math.pi / p.m)
    raise DomainError(f"unsupported family parameter: {p!r}")


def build_unit_shape(p: FamilyParam) -> Shape:
    """Concrete unit-scale member of the family, in a canonical pose."""
    if isinstance(p, RightTriangle):
        base = 1.0 + 1.0 / math.tan(p.theta) + 1.0 / math.sin(p.theta)
        return make_polygon([(0.0, 0.0), (base, 0.0), (base, base * math.tan(p.theta))])
    if isinstance(p, Triangle):
        r, s = p.r, p.s
        c = 2.0 * math.sqrt(
            (r + s + 1.0) / ((-r + s + 1.0) * (r - s + 1.0) * (r + s - 1.0))
        )
        # Longest side on the x-axis, apex located from the two side lengths.
        x3 = (c * c + (s * c) ** 2 - (r * c) ** 2) / (2.0 * c)
        y3 = math.sqrt((s * c) ** 2 - x3 * x3)
        return make_polygon([(0.0, 0.0), (c, 0.0), (x3, y3)])
    if isinstance(p, Rectangle):
        length = (1.0 + p.r) / p.r
        height = 1.0 + p.r
        return make_polygon([(0.0, 0.0), (length, 0.0), (length, height), (0.0, height)])
    if isinstance(p, Rhombus):
        return build_unit_shape(Parallelogram(p.theta, 1.0))
    if isinstance(p, Parallelogram):
        base = (1.0 + p.r) / (p.r * math.sin(p.theta))
        ox = p.r * base * math.cos(p.theta)
        oy = p.r * base * math.sin(p.theta)
        return make_polygon([(0.0, 0.0), (base, 0.0), (base + ox, oy), (ox, oy)])
    if isinstance(p, Ellipse):
        semi_minor = ellipse_semi_minor(p.r)
        semi_major = semi_minor / p.r
        return Shape(
            [EllipticalArc(Point(0.0, 0.0), (semi_major, semi_minor), 0.0, 0.0, 2.0 * math.pi)]
        )
    if isinstance(p, RegularPolygon):
        # Unit apothem: circumradius 1/cos(pi/m), one edge centered below the x-axis.
        m = p.m
        circumradius = 1.0 / math.cos(math.pi / m)
        offset = -math.pi / 2.0 + math.pi / m
        return make_polygon(
            [
                (
                    circumradius * math.cos(offset + 2.0 * math.pi * k / m),
                    circumradius * math.sin(offset + 2.0 * math.pi * k / m),
                )
                for k in range(m)
            ]
        )
    raise DomainError(f"unsupported family parameter: {p!r}")


@dataclass
class ConciliationCheck:
    name: str
    points_tested: int
    worst_rel_err: float
    failures: list[tuple] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass
class ConciliationReport:
    checks: list[ConciliationCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def conciliation_checks(grid_size: int = 400, rel_tol: float = 1e-10) -> ConciliationReport:
    """Cross-check overlapping family formulas on dense parameter grids.

    * a right triangle with acute angle theta is the general triangle with
      side ratios (sin theta, cos theta) against its hypotenuse;
    * a right-angle parallelogram is a rectangle;
    * an equal-sides parallelogram is a rhombus.
    """
    report = ConciliationReport()

    def run(name: str, params, lhs, rhs) -> None:
        check = ConciliationCheck(name, len(params), 0.0)
        for q in params:
            a, b = lhs(q), rhs(q)
            err = abs(a - b) / max(abs(a), abs(b))
            check.worst_rel_err = max(check.worst_rel_err, err)
            if err > rel_tol:
                check.failures.append((q, a, b))
        report.checks.append(check)

    thetas = [
        math.pi / 2.0 * (i + 0.5) / grid_size for i in range(grid_size)
    ]
    run(
        "right_triangle_vs_triangle",
        thetas,
        lambda t: fundamental_measure(RightTriangle(t)),
        lambda t: fundamental_measure(Triangle(math.sin(t), math.cos(t))),
    )

    ratios = [10.0 ** (-2.0 + 4.0 * i / (grid_size - 1)) for i in range(grid_size)]
    run(
        "right_parallelogram_vs_rectangle",
        ratios,
        lambda r: fundamental_measure(Parallelogram(math.pi / 2.0, r)),
        lambda r: fundamental_measure(Rectangle(r)),
    )

    angles = [math.pi * (i + 0.5) / grid_size for i in range(grid_size)]
    run(
        "equilateral_parallelogram_vs_rhombus",
        angles,
        lambda t: fundamental_measure(Parallelogram(t, 1.0)),
        lambda t: fundamental_measure(Rhombus(t)),
    )
    return report
