"""Numerical exercises of the scaling, indexing and isoperimetric claims.

Each check measures concrete shapes through the curve kernel and returns a
VerificationReport; a report passes exactly when it has no counterexamples.
Sampled checks take a seeded RNG so runs are reproducible.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from typing import Sequence

from .catalog import (
    Ellipse,
    FamilyParam,
    Parallelogram,
    Rectangle,
    RegularPolygon,
    Rhombus,
    RightTriangle,
    Triangle,
    build_unit_shape,
    fundamental_measure,
)
from .curves import (
    RigidMotion,
    Shape,
    Similarity,
    make_circle,
    make_polygon,
    make_rational_circle,
    scaled,
)
from .unitize import UnitizationResult, unitize

ISOPERIMETRIC_REL_TOL = 1e-9


@dataclass
class VerificationReport:
    claim: str
    instances_tested: int
    worst_slack: float
    counterexamples: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "instances": self.instances_tested,
            "worst_slack": self.worst_slack,
            "pass": self.passed,
            "counterexamples": self.counterexamples,
            **({"details": self.details} if self.details else {}),
        }

    def to_json_line(self) -> str:
        return json.dumps(self.to_dict())


def check_isoperimetric(shape: Shape, rel_tol: float = ISOPERIMETRIC_REL_TOL) -> VerificationReport:
    """pi * A <= S^2, with slack S^2 - pi A vanishing only for circles."""
    a = shape.area()
    s = shape.semiperimeter()
    slack = s * s - math.pi * a
    report = VerificationReport("isoperimetric_inequality", 1, slack)
    report.details["equality"] = abs(slack) <= rel_tol * s * s
    if slack < -rel_tol * s * s:
        report.counterexamples.append({"area": a, "semiperimeter": s, "slack": slack})
    return report


def check_unit_floor(result: UnitizationResult, tol: float = 1e-9) -> VerificationReport:
    """The fundamental measure of any unit shape is at least pi."""
    measure = result.fundamental_measure
    slack = measure - math.pi
    report = VerificationReport("unit_measure_floor", 1, slack)
    report.details["equality"] = abs(slack) <= tol
    if slack < -tol:
        report.counterexamples.append({"fundamental_measure": measure, "slack": slack})
    return report


def check_scale_equivalence(
    unit_shape: Shape,
    rho: float,
    kappas: Sequence[float],
    rel_tol: float = ISOPERIMETRIC_REL_TOL,
) -> VerificationReport:
    """rho <= Pi holds iff rho * A <= S^2 across every rescaling of a unit shape."""
    measure = 0.5 * (unit_shape.area() + unit_shape.semiperimeter())
    lhs = rho <= measure * (1.0 + rel_tol)
    report = VerificationReport("scale_equivalence", len(kappas), 0.0)
    report.details["rho"] = rho
    report.details["measure_bound_holds"] = lhs
    worst = math.inf
    for kappa in kappas:
        member = scaled(unit_shape, kappa)
        a, s = member.area(), member.semiperimeter()
        rhs = rho * a <= s * s * (1.0 + rel_tol)
        slack = s * s - rho * a
        worst = min(worst, slack)
        if rhs != lhs:
            report.counterexamples.append({"kappa": kappa, "slack": slack, "expected": lhs})
    report.worst_slack = worst
    return report


def regular_mgon_measure(m: int) -> float:
    """Isoperimetric constant for m-gons: m tan(pi/m)."""
    return fundamental_measure(RegularPolygon(m))


def check_mgon_bound(
    m: int, samples: Sequence[Shape], rel_tol: float = ISOPERIMETRIC_REL_TOL
) -> VerificationReport:
    """m tan(pi/m) * A <= S^2 for simple m-gons, tight exactly at regular ones."""
    rho = regular_mgon_measure(m)
    report = VerificationReport(f"{m}-gon_bound", len(samples), math.inf)
    equalities = []
    for i, poly in enumerate(samples):
        a, s = poly.area(), poly.semiperimeter()
        slack = s * s - rho * a
        report.worst_slack = min(report.worst_slack, slack / (s * s))
        if slack < -rel_tol * s * s:
            report.counterexamples.append({"index": i, "slack": slack})
        elif abs(slack) <= rel_tol * s * s:
            equalities.append(i)
    report.details["equality_indices"] = equalities
    return report


def check_blob_pythagoras(
    base: Shape,
    triple: tuple[float, float, float],
    area_rel_tol: float = 1e-9,
    triple_rel_tol: float = 1e-12,
) -> VerificationReport:
    """Areas of the a-, b-, c-scaled copies add exactly when a^2 + b^2 = c^2."""
    a, b, c = triple
    area_a = scaled(base, a).area()
    area_b = scaled(base, b).area()
    area_c = scaled(base, c).area()
    areas_add = abs(area_a + area_b - area_c) <= area_rel_tol * area_c
    is_right_triple = abs(a * a + b * b - c * c) <= triple_rel_tol * c * c
    report = VerificationReport(
        "blob_pythagoras", 1, area_a + area_b - area_c
    )
    report.details.update(
        {"triple": [a, b, c], "areas_add": areas_add, "right_triple": is_right_triple}
    )
    if areas_add != is_right_triple:
        report.counterexamples.append(
            {"triple": [a, b, c], "area_mismatch": area_a + area_b - area_c}
        )
    return report


def check_rational_circle(tol: float = 1e-9) -> VerificationReport:
    """The trig-free rational circle measures A = S = pi by quadrature alone."""
    circle = make_rational_circle()
    a = circle.area()
    s = circle.semiperimeter()
    report = VerificationReport("rational_circle", 1, max(abs(a - math.pi), abs(s - math.pi)))
    report.details.update({"area": a, "semiperimeter": s})
    if abs(a - math.pi) > tol or abs(s - math.pi) > tol:
        report.counterexamples.append({"area": a, "semiperimeter": s})
    return report


def random_simple_mgon(m: int, rng: random.Random) -> Shape:
    """Random simple m-gon: vertices sorted by angle about an interior center.

    Star-shapedness about the center guarantees simplicity. Rejection keeps a
    minimum angular gap (no near-degenerate edges) and a minimum area of 1e-6.
    """
    while True:
        cx = rng.uniform(-5.0, 5.0)
        cy = rng.uniform(-5.0, 5.0)
        angles = sorted(rng.uniform(0.0, 2.0 * math.pi) for _ in range(m))
        gaps = [b - a for a, b in zip(angles, angles[1:])]
        gaps.append(2.0 * math.pi - (angles[-1] - angles[0]))
        if min(gaps) < 1e-3:
            continue
        radii = [rng.uniform(0.2, 3.0) for _ in range(m)]
        vertices = [
            (cx + r * math.cos(t), cy + r * math.sin(t)) for r, t in zip(radii, angles)
        ]
        poly = make_polygon(vertices)
        if poly.area() >= 1e-6:
            return poly


def random_family_param(rng: random.Random) -> FamilyParam:
    """A random member of a random catalog family, away from blow-up boundaries."""
    kind = rng.randrange(7)
    if kind == 0:
        return RightTriangle(rng.uniform(0.15, math.pi / 2.0 - 0.15))
    if kind == 1:
        while True:
            r = rng.uniform(0.3, 1.0)
            s = rng.uniform(0.3, 1.0)
            if r + s > 1.1:
                return Triangle(r, s)
    if kind == 2:
        return Rectangle(rng.uniform(0.1, 10.0))
    if kind == 3:
        return Rhombus(rng.uniform(0.2, math.pi - 0.2))
    if kind == 4:
        return Parallelogram(rng.uniform(0.2, math.pi - 0.2), rng.uniform(0.2, 5.0))
    if kind == 5:
        return Ellipse(rng.uniform(0.05, 0.95))
    return RegularPolygon(rng.randrange(3, 13))


def random_similarity(rng: random.Random) -> Similarity:
    motion = RigidMotion(
        rotation_angle=rng.uniform(0.0, 2.0 * math.pi),
        reflect=rng.random() < 0.5,
        translation=(rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)),
    )
    return Similarity(motion, rng.uniform(0.1, 10.0))


def suite_isoperimetric(
    seed: int = 0, samples: int = 25, tol: float | None = None
) -> list[VerificationReport]:
    rel_tol = ISOPERIMETRIC_REL_TOL if tol is None else tol
    rng = random.Random(seed)
    reports = [check_isoperimetric(make_circle(rng.uniform(0.5, 3.0)), rel_tol)]
    for _ in range(samples):
        shape = build_unit_shape(random_family_param(rng)).transformed(random_similarity(rng))
        reports.append(check_isoperimetric(shape, rel_tol))
    return reports


def suite_unit_floor(
    seed: int = 0, samples: int = 25, tol: float | None = None
) -> list[VerificationReport]:
    floor_tol = 1e-9 if tol is None else tol
    rng = random.Random(seed)
    reports = [check_unit_floor(unitize(make_circle(rng.uniform(0.5, 3.0))), floor_tol)]
    for _ in range(samples):
        shape = build_unit_shape(random_family_param(rng)).transformed(random_similarity(rng))
        reports.append(check_unit_floor(unitize(shape), floor_tol))
    return reports


def suite_scale_equivalence(seed: int = 0, tol: float | None = None) -> list[VerificationReport]:
    rel_tol = ISOPERIMETRIC_REL_TOL if tol is None else tol
    rng = random.Random(seed)
    square = build_unit_shape(Rectangle(1.0))
    circle = make_circle(1.0)
    kappas = [0.5, 1.0, 3.0]
    reports = [
        check_scale_equivalence(square, 4.0, kappas, rel_tol),
        check_scale_equivalence(circle, 3.0, kappas, rel_tol),
        check_scale_equivalence(circle, 3.2, kappas, rel_tol),
    ]
    for _ in range(10):
        unit = unitize(build_unit_shape(random_family_param(rng))).unit_shape
        measure = 0.5 * (unit.area() + unit.semiperimeter())
        for rho in (0.8 * measure, measure, 1.2 * measure):
            reports.append(
                check_scale_equivalence(
                    unit, rho, [rng.uniform(0.2, 4.0) for _ in range(3)], rel_tol
                )
            )
    return reports


def suite_mgon(
    seed: int = 0,
    samples: int = 500,
    ms: Sequence[int] = (3, 4, 5, 6),
    tol: float | None = None,
) -> list[VerificationReport]:
    rel_tol = ISOPERIMETRIC_REL_TOL if tol is None else tol
    rng = random.Random(seed)
    reports = []
    for m in ms:
        polys = [random_simple_mgon(m, rng) for _ in range(samples)]
        reports.append(check_mgon_bound(m, polys, rel_tol))
        regular = build_unit_shape(RegularPolygon(m))
        tight = check_mgon_bound(m, [regular], rel_tol)
        tight.claim = f"{m}-gon_bound_regular_equality"
        if not tight.details["equality_indices"]:
            tight.counterexamples.append({"expected": "equality for the regular m-gon"})
        reports.append(tight)
    return reports


def suite_blob_pythagoras(
    seed: int = 0, cases: int = 20, tol: float | None = None
) -> list[VerificationReport]:
    area_tol = 1e-9 if tol is None else tol
    rng = random.Random(seed)
    reports = []
    for i in range(cases):
        base = build_unit_shape(random_family_param(rng)).transformed(random_similarity(rng))
        a = rng.uniform(0.5, 3.0)
        b = rng.uniform(0.5, 3.0)
        if i % 2 == 0:
            c = math.hypot(a, b)
        else:
            c = math.hypot(a, b) * rng.uniform(1.05, 1.5)
        reports.append(check_blob_pythagoras(base, (a, b, c), area_tol))
    return reports


def suite_rational_circle(seed: int = 0, tol: float | None = None) -> list[VerificationReport]:
    return [check_rational_circle(1e-9 if tol is None else tol)]


SUITES = {
    "isoperimetric": suite_isoperimetric,
    "unit-floor": suite_unit_floor,
    "scale-equivalence": suite_scale_equivalence,
    "mgon": suite_mgon,
    "blob-pythagoras": suite_blob_pythagoras,
    "rational-circle": suite_rational_circle,
}


def run_suite(name: str, seed: int = 0, tol: float | None = None) -> list[VerificationReport]:
    if name == "all":
        reports = []
        for suite in SUITES.values():
            reports.extend(suite(seed=seed, tol=tol))
        return reports
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
    return SUITES[name](seed=seed, tol=tol)
