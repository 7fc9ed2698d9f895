"""Piecewise-smooth closed plane curves and their measures.

A Shape is an ordered chain of parametric pieces forming a closed curve,
normalized to counterclockwise orientation at construction. Area comes from
the Green's-theorem line integral (1/2) oint (x dy - y dx); perimeter from the
speed integral. Line segments, polylines and circular arcs use closed forms;
the remaining piece kinds fall back to adaptive quadrature.

All types are immutable values; every operation here is pure.
"""

from __future__ import annotations

import json
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Iterable, Sequence

from .quadrature import adaptive_quadrature

JOIN_TOL = 1e-12
QUAD_REL_TOL = 1e-10


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def distance_to(self, other: "Point") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)


@dataclass(frozen=True)
class RigidMotion:
    """Rotation, optional mirror, then translation: T o S^eps o R.

    The mirror S is fixed as reflection across the x-axis; together with the
    rotation angle this parameterizes every rigid motion of the plane.
    """

    rotation_angle: float = 0.0
    reflect: bool = False
    translation: tuple[float, float] = (0.0, 0.0)

    def apply_vector(self, vx: float, vy: float) -> tuple[float, float]:
        """Linear part only (no translation)."""
        c = math.cos(self.rotation_angle)
        s = math.sin(self.rotation_angle)
        x = c * vx - s * vy
        y = s * vx + c * vy
        if self.reflect:
            y = -y
        return x, y

    def apply(self, p: Point) -> Point:
        x, y = self.apply_vector(p.x, p.y)
        return Point(x + self.translation[0], y + self.translation[1])


@dataclass(frozen=True)
class Similarity:
    """A rigid motion followed by a uniform scale lambda > 0."""

    motion: RigidMotion = RigidMotion()
    scale: float = 1.0

    def __post_init__(self) -> None:
        if not (self.scale > 0.0 and math.isfinite(self.scale)):
            raise ValueError(f"similarity scale must be positive, got {self.scale}")

    def apply(self, p: Point) -> Point:
        q = self.motion.apply(p)
        return Point(self.scale * q.x, self.scale * q.y)


def _motion_from_columns(
    e1: tuple[float, float], e2: tuple[float, float], translation: tuple[float, float]
) -> RigidMotion:
    """Recover (angle, reflect) from the orthonormal columns of a linear map."""
    det = e1[0] * e2[1] - e1[1] * e2[0]
    if det > 0.0:
        return RigidMotion(math.atan2(e1[1], e1[0]), False, translation)
    # det < 0: the map is S_x o R(theta), whose first column is (cos, -sin).
    return RigidMotion(math.atan2(-e1[1], e1[0]), True, translation)


def _compose_motion(outer: RigidMotion, inner: RigidMotion) -> RigidMotion:
    e1 = outer.apply_vector(*inner.apply_vector(1.0, 0.0))
    e2 = outer.apply_vector(*inner.apply_vector(0.0, 1.0))
    t = outer.apply(Point(*inner.translation))
    return _motion_from_columns(e1, e2, (t.x, t.y))


class CurvePiece(ABC):
    """One smooth run of a shape boundary.

    Pieces are parameterized over (t_start, t_end); the bounds may appear in
    either order, and reversing a piece swaps them (or the vertex list, for
    polylines). Speed never vanishes on the open parameter interval.
    """

    kind: str
    t_start: float
    t_end: float

    @abstractmethod
    def point(self, t: float) -> Point: ...

    @abstractmethod
    def velocity(self, t: float) -> tuple[float, float]: ...

    @abstractmethod
    def reversed_(self) -> "CurvePiece": ...

    @abstractmethod
    def transformed(self, sim: Similarity) -> "CurvePiece": ...

    @abstractmethod
    def to_dict(self) -> dict: ...

    @property
    def start(self) -> Point:
        return self.point(self.t_start)

    @property
    def end(self) -> Point:
        return self.point(self.t_end)

    def _smooth_spans(self) -> list[tuple[float, float]]:
        """Parameter spans on which the integrands are smooth."""
        return [(self.t_start, self.t_end)]

    def _exact_length(self) -> float | None:
        return None

    def _exact_area_term(self) -> float | None:
        return None

    def length(self, *, force_quadrature: bool = False) -> float:
        if not force_quadrature:
            exact = self._exact_length()
            if exact is not None:
                return exact
        total = 0.0
        for lo, hi in self._smooth_spans():
            speed = lambda t: math.hypot(*self.velocity(t))
            total += abs(adaptive_quadrature(speed, lo, hi, rel_tol=QUAD_REL_TOL))
        return total

    def signed_area_term(self, *, force_quadrature: bool = False) -> float:
        """Contribution of this piece to (1/2) oint (x dy - y dx)."""
        if not force_quadrature:
            exact = self._exact_area_term()
            if exact is not None:
                return exact
        total = 0.0
        for lo, hi in self._smooth_spans():

            def integrand(t: float) -> float:
                p = self.point(t)
                vx, vy = self.velocity(t)
                return 0.5 * (p.x * vy - p.y * vx)

            total += adaptive_quadrature(integrand, lo, hi, rel_tol=QUAD_REL_TOL)
        return total


@dataclass(frozen=True)
class LineSegment(CurvePiece):
    start_point: Point
    end_point: Point

    kind = "line_segment"
    t_start = 0.0
    t_end = 1.0

    def __post_init__(self) -> None:
        if self.start_point.distance_to(self.end_point) == 0.0:
            raise ValueError("degenerate line segment (zero length)")

    def point(self, t: float) -> Point:
        return Point(
            self.start_point.x + t * (self.end_point.x - self.start_point.x),
            self.start_point.y + t * (self.end_point.y - self.start_point.y),
        )

    def velocity(self, t: float) -> tuple[float, float]:
        return (self.end_point.x - self.start_point.x, self.end_point.y - self.start_point.y)

    def reversed_(self) -> "LineSegment":
        return LineSegment(self.end_point, self.start_point)

    def transformed(self, sim: Similarity) -> "LineSegment":
        return LineSegment(sim.apply(self.start_point), sim.apply(self.end_point))

    def _exact_length(self) -> float:
        return self.start_point.distance_to(self.end_point)

    def _exact_area_term(self) -> float:
        return 0.5 * (self.start_point.x * self.end_point.y - self.end_point.x * self.start_point.y)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "start": [self.start_point.x, self.start_point.y],
            "end": [self.end_point.x, self.end_point.y],
        }


@dataclass(frozen=True)
class Polyline(CurvePiece):
    vertices: tuple[Point, ...]

    kind = "polyline"

    def __post_init__(self) -> None:
        if len(self.vertices) < 2:
            raise ValueError("polyline needs at least two vertices")
        for a, b in zip(self.vertices, self.vertices[1:]):
            if a.distance_to(b) == 0.0:
                raise ValueError("degenerate polyline edge (zero length)")

    @property
    def t_start(self) -> float:  # type: ignore[override]
        return 0.0

    @property
    def t_end(self) -> float:  # type: ignore[override]
        return float(len(self.vertices) - 1)

    def _edge(self, t: float) -> int:
        return min(max(int(math.floor(t)), 0), len(self.vertices) - 2)

    def point(self, t: float) -> Point:
        i = self._edge(t)
        a, b = self.vertices[i], self.vertices[i + 1]
        f = t - i
        return Point(a.x + f * (b.x - a.x), a.y + f * (b.y - a.y))

    def velocity(self, t: float) -> tuple[float, float]:
        i = self._edge(t)
        a, b = self.vertices[i], self.vertices[i + 1]
        return (b.x - a.x, b.y - a.y)

    def reversed_(self) -> "Polyline":
        return Polyline(tuple(reversed(self.vertices)))

    def transformed(self, sim: Similarity) -> "Polyline":
        return Polyline(tuple(sim.apply(v) for v in self.vertices))

    def _smooth_spans(self) -> list[tuple[float, float]]:
        return [(float(i), float(i + 1)) for i in range(len(self.vertices) - 1)]

    def _exact_length(self) -> float:
        return sum(a.distance_to(b) for a, b in zip(self.vertices, self.vertices[1:]))

    def _exact_area_term(self) -> float:
        return 0.5 * sum(
            a.x * b.y - b.x * a.y for a, b in zip(self.vertices, self.vertices[1:])
        )

    def to_dict(self) -> dict:
        return {"kind": self.kind, "vertices": [[v.x, v.y] for v in self.vertices]}


@dataclass(frozen=True)
class CircularArc(CurvePiece):
    center: Point
    radius: float
    angle_start: float
    angle_end: float

    kind = "circular_arc"

    def __post_init__(self) -> None:
        if not self.radius > 0.0:
            raise ValueError(f"arc radius must be positive, got {self.radius}")
        if self.angle_start == self.angle_end:
            raise ValueError("degenerate circular arc (zero sweep)")

    @property
    def t_start(self) -> float:  # type: ignore[override]
        return self.angle_start

    @property
    def t_end(self) -> float:  # type: ignore[override]
        return self.angle_end

    def point(self, t: float) -> Point:
        return Point(
            self.center.x + self.radius * math.cos(t),
            self.center.y + self.radius * math.sin(t),
        )

    def velocity(self, t: float) -> tuple[float, float]:
        return (-self.radius * math.sin(t), self.radius * math.cos(t))

    def reversed_(self) -> "CircularArc":
        return CircularArc(self.center, self.radius, self.angle_end, self.angle_start)

    def transformed(self, sim: Similarity) -> "CircularArc":
        center = sim.apply(self.center)
        rot = sim.motion.rotation_angle
        if sim.motion.reflect:
            a0 = -(self.angle_start + rot)
            a1 = -(self.angle_end + rot)
        else:
            a0 = self.angle_start + rot
            a1 = self.angle_end + rot
        return CircularArc(center, sim.scale * self.radius, a0, a1)

    def _exact_length(self) -> float:
        return self.radius * abs(self.angle_end - self.angle_start)

    def _exact_area_term(self) -> float:
        # (1/2) int (x y' - y x') over the sweep, with the center offset terms
        # integrating the tangential component exactly.
        sweep = self.angle_end - self.angle_start
        cx, cy = self.center.x, self.center.y
        r = self.radius
        return 0.5 * (
            r * r * sweep
            + r * cx * (math.sin(self.angle_end) - math.sin(self.angle_start))
            - r * cy * (math.cos(self.angle_end) - math.cos(self.angle_start))
        )

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "center": [self.center.x, self.center.y],
            "radius": self.radius,
            "angle_start": self.angle_start,
            "angle_end": self.angle_end,
        }


@dataclass(frozen=True)
class EllipticalArc(CurvePiece):
    """Arc of an axis pair (a, b) ellipse: center + R(rotation) @ (a cos t, b sin t)."""

    center: Point
    semi_axes: tuple[float, float]
    rotation: float
    t_start: float
    t_end: float

    kind = "elliptical_arc"

    def __post_init__(self) -> None:
        a, b = self.semi_axes
        if not (a > 0.0 and b > 0.0):
            raise ValueError(f"ellipse semi-axes must be positive, got {self.semi_axes}")
        if self.t_start == self.t_end:
            raise ValueError("degenerate elliptical arc (zero sweep)")

    def _local(self, t: float) -> tuple[float, float]:
        a, b = self.semi_axes
        return (a * math.cos(t), b * math.sin(t))

    def point(self, t: float) -> Point:
        x, y = self._local(t)
        c, s = math.cos(self.rotation), math.sin(self.rotation)
        return Point(self.center.x + c * x - s * y, self.center.y + s * x + c * y)

    def velocity(self, t: float) -> tuple[float, float]:
        a, b = self.semi_axes
        vx, vy = (-a * math.sin(t), b * math.cos(t))
        c, s = math.cos(self.rotation), math.sin(self.rotation)
        return (c * vx - s * vy, s * vx + c * vy)

    def reversed_(self) -> "EllipticalArc":
        return EllipticalArc(self.center, self.semi_axes, self.rotation, self.t_end, self.t_start)

    def transformed(self, sim: Similarity) -> "EllipticalArc":
        center = sim.apply(self.center)
        a, b = self.semi_axes
        c, s = math.cos(self.rotation), math.sin(self.rotation)
        e1 = sim.motion.apply_vector(c, s)
        e2 = sim.motion.apply_vector(-s, c)
        det = e1[0] * e2[1] - e1[1] * e2[0]
        rot = math.atan2(e1[1], e1[0])
        if det > 0.0:
            t0, t1 = self.t_start, self.t_end
        else:
            # The composed frame mirrors before rotating, which re-parameterizes
            # the arc by t -> -t while keeping the same point set.
            t0, t1 = -self.t_start, -self.t_end
        return EllipticalArc(center, (sim.scale * a, sim.scale * b), rot, t0, t1)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "center": [self.center.x, self.center.y],
            "semi_axes": [self.semi_axes[0], self.semi_axes[1]],
            "rotation": self.rotation,
            "t_start": self.t_start,
            "t_end": self.t_end,
        }


@dataclass(frozen=True)
class ParabolicArc(CurvePiece):
    """Graph y = alpha x^2 + beta x + gamma in a local frame, placed rigidly."""

    coefficients: tuple[float, float, float]
    x_start: float
    x_end: float
    frame: RigidMotion = RigidMotion()

    kind = "parabolic_arc"

    def __post_init__(self) -> None:
        if self.x_start == self.x_end:
            raise ValueError("degenerate parabolic arc (zero span)")

    @property
    def t_start(self) -> float:  # type: ignore[override]
        return self.x_start

    @property
    def t_end(self) -> float:  # type: ignore[override]
        return self.x_end

    def point(self, t: float) -> Point:
        alpha, beta, gamma = self.coefficients
        return self.frame.apply(Point(t, (alpha * t + beta) * t + gamma))

    def velocity(self, t: float) -> tuple[float, float]:
        alpha, beta, _ = self.coefficients
        return self.frame.apply_vector(1.0, 2.0 * alpha * t + beta)

    def reversed_(self) -> "ParabolicArc":
        return ParabolicArc(self.coefficients, self.x_end, self.x_start, self.frame)

    def transformed(self, sim: Similarity) -> "ParabolicArc":
        # Scaling a graph y = a x^2 + b x + c by lambda keeps it parabolic with
        # coefficients (a/lambda, b, lambda c) in the stretched abscissa.
        lam = sim.scale
        alpha, beta, gamma = self.coefficients
        t = sim.apply(Point(*self.frame.translation))
        e1 = sim.motion.apply_vector(*self.frame.apply_vector(1.0, 0.0))
        e2 = sim.motion.apply_vector(*self.frame.apply_vector(0.0, 1.0))
        frame = _motion_from_columns(e1, e2, (t.x, t.y))
        return ParabolicArc(
            (alpha / lam, beta, lam * gamma), lam * self.x_start, lam * self.x_end, frame
        )

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "coefficients": list(self.coefficients),
            "x_start": self.x_start,
            "x_end": self.x_end,
            "frame": _motion_to_dict(self.frame),
        }


@dataclass(frozen=True)
class RationalPoint(CurvePiece):
    """Unit-circle arc via t -> (2t/(1+t^2), (1-t^2)/(1+t^2)), placed rigidly.

    The parameterization is trig-free: both coordinates and their derivatives
    are rational in t. t in [-1, 1] covers the upper half of the circle.
    """

    t_start: float
    t_end: float
    frame: RigidMotion = RigidMotion()

    kind = "rational_point"

    def __post_init__(self) -> None:
        if self.t_start == self.t_end:
            raise ValueError("degenerate rational arc (zero sweep)")

    def point(self, t: float) -> Point:
        d = 1.0 + t * t
        return self.frame.apply(Point(2.0 * t / d, (1.0 - t * t) / d))

    def velocity(self, t: float) -> tuple[float, float]:
        d = (1.0 + t * t) ** 2
        return self.frame.apply_vector(2.0 * (1.0 - t * t) / d, -4.0 * t / d)

    def reversed_(self) -> "RationalPoint":
        return RationalPoint(self.t_end, self.t_start, self.frame)

    def transformed(self, sim: Similarity) -> CurvePiece:
        if sim.scale == 1.0:
            return RationalPoint(self.t_start, self.t_end, _compose_motion(sim.motion, self.frame))
        # A non-unit scale leaves the unit circle, so the image is returned as
        # the circular arc it is. On the unit circle the parameter t sits at
        # polar angle pi/2 - 2 atan(t), which gives the swept angle exactly.
        center = sim.apply(Point(*self.frame.translation))
        start = sim.apply(self.point(self.t_start))
        angle_start = math.atan2(start.y - center.y, start.x - center.x)
        sweep = 2.0 * (math.atan(self.t_start) - math.atan(self.t_end))
        if self.frame.reflect != sim.motion.reflect:
            sweep = -sweep
        return CircularArc(center, sim.scale, angle_start, angle_start + sweep)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "t_start": self.t_start,
            "t_end": self.t_end,
            "frame": _motion_to_dict(self.frame),
        }


class Shape:
    """A closed counterclockwise chain of curve pieces.

    Consecutive pieces must join within ``join_tol`` (absolute distance) and
    the chain must return to its starting point. Orientation is normalized at
    construction: a clockwise chain is reversed so the signed area is positive.
    Simplicity (no self-intersection) is the caller's responsibility; the
    family builders in this package guarantee it by construction.
    """

    __slots__ = ("pieces", "join_tol", "_cache")

    def __init__(self, pieces: Iterable[CurvePiece], join_tol: float = JOIN_TOL):
        pieces = tuple(pieces)
        if not pieces:
            raise ValueError("a shape needs at least one piece")
        for i, (cur, nxt) in enumerate(zip(pieces, pieces[1:] + pieces[:1])):
            gap = cur.end.distance_to(nxt.start)
            if gap > join_tol:
                raise ValueError(
                    f"open chain: piece {i} ends {gap:.3e} away from the next start"
                )
        raw_area = _signed_area_of(pieces)
        if raw_area == 0.0:
            raise ValueError("degenerate shape (zero enclosed area)")
        if raw_area < 0.0:
            pieces = tuple(p.reversed_() for p in reversed(pieces))
            raw_area = -raw_area
        self.pieces = pieces
        self.join_tol = join_tol
        self._cache: dict[str, float] = {"signed_area": raw_area}

    def _measure(self, key: str, compute) -> float:
        if key not in self._cache:
            self._cache[key] = compute()
        return self._cache[key]

    def signed_area(self, *, force_quadrature: bool = False) -> float:
        if force_quadrature:
            return _signed_area_of(self.pieces, force_quadrature=True)
        return self._measure("signed_area", lambda: _signed_area_of(self.pieces))

    def area(self, *, force_quadrature: bool = False) -> float:
        return abs(self.signed_area(force_quadrature=force_quadrature))

    def perimeter(self, *, force_quadrature: bool = False) -> float:
        if force_quadrature:
            return sum(p.length(force_quadrature=True) for p in self.pieces)
        return self._measure("perimeter", lambda: sum(p.length() for p in self.pieces))

    def semiperimeter(self, *, force_quadrature: bool = False) -> float:
        return 0.5 * self.perimeter(force_quadrature=force_quadrature)

    def transformed(self, sim: Similarity) -> "Shape":
        return Shape((p.transformed(sim) for p in self.pieces), join_tol=self.join_tol)

    def to_dict(self) -> dict:
        return {"pieces": [p.to_dict() for p in self.pieces]}

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    def __repr__(self) -> str:
        kinds = ", ".join(p.kind for p in self.pieces)
        return f"Shape({kinds})"


def _signed_area_of(pieces: Sequence[CurvePiece], *, force_quadrature: bool = False) -> float:
    return sum(p.signed_area_term(force_quadrature=force_quadrature) for p in pieces)


def signed_area(shape: Shape, *, force_quadrature: bool = False) -> float:
    return shape.signed_area(force_quadrature=force_quadrature)


def area(shape: Shape, *, force_quadrature: bool = False) -> float:
    return shape.area(force_quadrature=force_quadrature)


def perimeter(shape: Shape, *, force_quadrature: bool = False) -> float:
    return shape.perimeter(force_quadrature=force_quadrature)


def semiperimeter(shape: Shape, *, force_quadrature: bool = False) -> float:
    return shape.semiperimeter(force_quadrature=force_quadrature)


def apply_similarity(sim: Similarity, shape: Shape) -> Shape:
    """Map every point p of the shape to scale * motion(p)."""
    return shape.transformed(sim)


def scaled(shape: Shape, factor: float) -> Shape:
    """Pure rescaling about the origin."""
    return shape.transformed(Similarity(scale=factor))


def make_circle(radius: float, center: tuple[float, float] = (0.0, 0.0)) -> Shape:
    if not radius > 0.0:
        raise ValueError(f"circle radius must be positive, got {radius}")
    return Shape([CircularArc(Point(*center), radius, 0.0, 2.0 * math.pi)])


def make_polygon(vertices: Sequence[tuple[float, float]]) -> Shape:
    """Closed polygon from a vertex loop (first vertex not repeated)."""
    pts = [Point(x, y) for x, y in vertices]
    return Shape([Polyline(tuple(pts + [pts[0]]))])


def make_rational_circle() -> Shape:
    """The unit circle built from two trig-free rational arcs.

    The upper half runs t: 1 -> -1; the lower half reuses the same formula
    under an x-axis mirror, so no trigonometric function enters the pieces.
    """
    upper = RationalPoint(1.0, -1.0)
    lower = RationalPoint(-1.0, 1.0, RigidMotion(reflect=True))
    return Shape([upper, lower])


def _motion_to_dict(m: RigidMotion) -> dict:
    return {
        "rotation_angle": m.rotation_angle,
        "reflect": m.reflect,
        "translation": [m.translation[0], m.translation[1]],
    }


def _motion_from_dict(d: dict) -> RigidMotion:
    return RigidMotion(
        float(d.get("rotation_angle", 0.0)),
        bool(d.get("reflect", False)),
        (float(d["translation"][0]), float(d["translation"][1])) if "translation" in d else (0.0, 0.0),
    )


def _piece_from_dict(d: dict) -> CurvePiece:
    kind = d["kind"]
    if kind == "line_segment":
        return LineSegment(Point(*map(float, d["start"])), Point(*map(float, d["end"])))
    if kind == "polyline":
        return Polyline(tuple(Point(float(x), float(y)) for x, y in d["vertices"]))
    if kind == "circular_arc":
        return CircularArc(
            Point(*map(float, d["center"])),
            float(d["radius"]),
            float(d["angle_start"]),
            float(d["angle_end"]),
        )
    if kind == "elliptical_arc":
        a, b = d["semi_axes"]
        return EllipticalArc(
            Point(*map(float, d["center"])),
            (float(a), float(b)),
            float(d["rotation"]),
            float(d["t_start"]),
            float(d["t_end"]),
        )
    if kind == "parabolic_arc":
        alpha, beta, gamma = d["coefficients"]
        return ParabolicArc(
            (float(alpha), float(beta), float(gamma)),
            float(d["x_start"]),
            float(d["x_end"]),
            _motion_from_dict(d.get("frame", {})),
        )
    if kind == "rational_point":
        return RationalPoint(
            float(d["t_start"]), float(d["t_end"]), _motion_from_dict(d.get("frame", {}))
        )
    raise ValueError(f"unknown piece kind: {kind!r}")


def shape_from_dict(d: dict) -> Shape:
    return Shape([_piece_from_dict(p) for p in d["pieces"]])


def shape_from_json(text: str) -> Shape:
    return shape_from_dict(json.loads(text))
