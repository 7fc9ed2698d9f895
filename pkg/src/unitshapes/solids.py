"""Platonic solids from explicit vertex models; the 3D unit condition V = SA/3.

Volume, surface area and inradius are all computed from the convex hull of
the vertex coordinates (triangle fans and centroid tetrahedra), never from
closed-form solid formulas, so the golden-ratio table is a genuine
cross-check of the vertex models.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.spatial import ConvexHull

from .errors import DomainError

_PHI = (1.0 + math.sqrt(5.0)) / 2.0

# Canonical vertex sets with known edge lengths.
_BASES: dict[str, tuple[list[tuple[float, float, float]], float]] = {
    "tetrahedron": (
        [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)],
        2.0 * math.sqrt(2.0),
    ),
    "cube": (
        [(sx, sy, sz) for sx in (-1, 1) for sy in (-1, 1) for sz in (-1, 1)],
        2.0,
    ),
    "octahedron": (
        [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)],
        math.sqrt(2.0),
    ),
    "dodecahedron": (
        [(sx, sy, sz) for sx in (-1, 1) for sy in (-1, 1) for sz in (-1, 1)]
        + [
            p
            for a in (-1.0 / _PHI, 1.0 / _PHI)
            for b in (-_PHI, _PHI)
            for p in [(0.0, a, b), (a, b, 0.0), (b, 0.0, a)]
        ],
        2.0 / _PHI,
    ),
    "icosahedron": (
        [
            p
            for a in (-1.0, 1.0)
            for b in (-_PHI, _PHI)
            for p in [(0.0, a, b), (a, b, 0.0), (b, 0.0, a)]
        ],
        2.0,
    ),
}

KINDS = tuple(_BASES)


@dataclass(frozen=True)
class PlatonicSolid:
    kind: str
    edge_length: float = 1.0

    def __post_init__(self) -> None:
        if self.kind not in _BASES:
            raise DomainError(f"unknown solid kind {self.kind!r}; choose from {KINDS}")
        if not self.edge_length > 0.0:
            raise DomainError(f"edge length must be positive, got {self.edge_length}")


@dataclass(frozen=True)
class SolidMeasures:
    volume: float
    surface_area: float
    inradius: float
    fundamental_measure: float  # volume rescaled to unit inradius


def vertices(solid: PlatonicSolid) -> np.ndarray:
    base, base_edge = _BASES[solid.kind]
    return np.asarray(base, dtype=float) * (solid.edge_length / base_edge)


def measures(solid: PlatonicSolid) -> SolidMeasures:
    pts = vertices(solid)
    centroid = pts.mean(axis=0)
    hull = ConvexHull(pts, qhull_options="Qt")
    volume = 0.0
    surface_area = 0.0
    inradius = math.inf
    for simplex in hull.simplices:
        a, b, c = pts[simplex] - centroid
        cross = np.cross(b - a, c - a)
        norm = float(np.linalg.norm(cross))
        if norm <= 1e-12 * solid.edge_length**2:
            continue  # sliver from triangulating a coplanar facet
        surface_area += 0.5 * norm
        volume += abs(float(np.dot(a, np.cross(b, c)))) / 6.0
        inradius = min(inradius, abs(float(np.dot(cross / norm, a))))
    return SolidMeasures(volume, surface_area, inradius, volume / inradius**3)


def unitize_solid(solid: PlatonicSolid) -> PlatonicSolid:
    """Rescale so volume equals one-third of surface area (unit insphere)."""
    m = measures(solid)
    factor = m.surface_area / (3.0 * m.volume)
    return PlatonicSolid(solid.kind, solid.edge_length * factor)


_TABLE_EXPRESSIONS = {
    "tetrahedron": "8*sqrt(3)",
    "cube": "8",
    "octahedron": "4*sqrt(3)",
    "dodecahedron": "20*xi/phi^3",
    "icosahedron": "20*sqrt(3)/phi^4",
}


def expected_unit_measures() -> dict[str, float]:
    """Golden-ratio closed forms for the unit-insphere volumes."""
    phi = 2.0 * math.cos(math.pi / 5.0)
    xi = 2.0 * math.sin(math.pi / 5.0)
    return {
        "tetrahedron": 8.0 * math.sqrt(3.0),
        "cube": 8.0,
        "octahedron": 4.0 * math.sqrt(3.0),
        "dodecahedron": 20.0 * xi / phi**3,
        "icosahedron": 20.0 * math.sqrt(3.0) / phi**4,
    }


def table_check(rel_tol: float = 1e-9):
    """Vertex-model volumes of the five unit solids against the closed forms."""
    from .verify import VerificationReport

    expected = expected_unit_measures()
    report = VerificationReport("platonic_unit_volumes", len(KINDS), 0.0)
    residuals = {}
    for kind in KINDS:
        unit = unitize_solid(PlatonicSolid(kind))
        got = measures(unit).volume
        residual = abs(got - expected[kind]) / expected[kind]
        residuals[kind] = residual
        report.worst_slack = max(report.worst_slack, residual)
        if residual > rel_tol:
            report.counterexamples.append(
                {"solid": kind, "measured": got, "expected": expected[kind]}
            )
    report.details["residuals"] = residuals
    return report


def solids_table() -> list[dict]:
    """One row per unit solid, in the traditional tetra-to-icosa order."""
    rows = []
    for kind in KINDS:
        unit = unitize_solid(PlatonicSolid(kind))
        m = measures(unit)
        rows.append(
            {
                "solid": kind,
                "fundamental_measure": m.volume,
                "expression": _TABLE_EXPRESSIONS[kind],
                "surface_area": m.surface_area,
                "inradius": m.inradius,
                "edge_length": unit.edge_length,
            }
        )
    return rows
