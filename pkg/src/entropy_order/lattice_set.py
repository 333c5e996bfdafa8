"""Finite subsets of the square lattice Z^2 with value semantics.

Points are ordered by ``(y, x)``; the canonical representative of a
translation class puts its ``(y, x)``-smallest point on the origin, which is
the "leftmost point of the lowest row" convention used for octogons.
"""
from __future__ import annotations

import json
from typing import Iterable, Iterator, NamedTuple

INT32_MIN = -(2**31)
INT32_MAX = 2**31 - 1


class LatticeError(ValueError):
    """Raised for invalid lattice-set operations."""


class Point(NamedTuple):
    x: int
    y: int


class Vector(NamedTuple):
    dx: int
    dy: int

    def __neg__(self) -> Vector:
        return Vector(-self.dx, -self.dy)


def _key(p) -> tuple[int, int]:
    return (p[1], p[0])


def _check_coord(c: int) -> int:
    if not INT32_MIN <= c <= INT32_MAX:
        raise OverflowError(f"coordinate {c} outside the 32-bit range")
    return c


class LatticeSet:
    """Immutable finite set of lattice points, stored sorted by ``(y, x)``."""

    __slots__ = ("_points", "_frozen", "_hash")

    def __init__(self, points: Iterable = ()):
        pts = {Point(_check_coord(int(p[0])), _check_coord(int(p[1]))) for p in points}
        self._points: tuple[Point, ...] = tuple(sorted(pts, key=_key))
        self._frozen = frozenset(self._points)
        self._hash = hash(self._points)

    # -- container protocol -------------------------------------------------
    @property
    def points(self) -> tuple[Point, ...]:
        return self._points

    def __iter__(self) -> Iterator[Point]:
        return iter(self._points)

    def __len__(self) -> int:
        return len(self._points)

    def __bool__(self) -> bool:
        return bool(self._points)

    def __contains__(self, p) -> bool:
        return Point(p[0], p[1]) in self._frozen

    def __eq__(self, other) -> bool:
        if not isinstance(other, LatticeSet):
            return NotImplemented
        return self._points == other._points

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: LatticeSet) -> bool:
        # deterministic total order: size first, then point sequence
        return (len(self), [_key(p) for p in self]) < (len(other), [_key(p) for p in other])

    def __repr__(self) -> str:
        return f"LatticeSet({[tuple(p) for p in self._points]})"

    def __or__(self, other: LatticeSet) -> LatticeSet:
        return union(self, other)

    def __and__(self, other: LatticeSet) -> LatticeSet:
        return intersection(self, other)

    def __le__(self, other: LatticeSet) -> bool:
        return self._frozen <= other._frozen

    # -- geometry helpers ---------------------------------------------------
    def bbox(self) -> tuple[int, int, int, int]:
        """``(xmin, ymin, xmax, ymax)``; raises for the empty set."""
        if not self._points:
            raise LatticeError("empty set has no bounding box")
        xs = [p.x for p in self._points]
        return min(xs), self._points[0].y, max(xs), self._points[-1].y

    def size(self) -> tuple[int, int]:
        """Width and height of the bounding box."""
        x0, y0, x1, y1 = self.bbox()
        return x1 - x0 + 1, y1 - y0 + 1

    def anchor(self) -> Point:
        """The ``(y, x)``-smallest point."""
        if not self._points:
            raise LatticeError("empty set has no anchor")
        return self._points[0]

    def to_json(self) -> dict:
        return {"points": [[p.x, p.y] for p in self._points]}

    @classmethod
    def from_json(cls, obj) -> LatticeSet:
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(tuple(p) for p in obj["points"])

    def to_grid(self) -> str:
        return to_grid(self)


def union(a: LatticeSet, b: LatticeSet) -> LatticeSet:
    return LatticeSet(a._frozen | b._frozen)


def intersection(a: LatticeSet, b: LatticeSet) -> LatticeSet:
    return LatticeSet(a._frozen & b._frozen)


def translate(s: LatticeSet, v) -> LatticeSet:
    dx, dy = v
    return LatticeSet((p.x + dx, p.y + dy) for p in s)


def measure(s: LatticeSet) -> int:
    return len(s)


def canonicalize(s: LatticeSet) -> tuple[LatticeSet, Vector]:
    """Translate ``s`` so that its ``(y, x)``-minimal point sits at the origin.

    Returns the canonical set and the vector that maps ``s`` onto it.
    """
    if not s:
        raise LatticeError("the empty set has no canonical anchor")
    a = s.anchor()
    v = Vector(-a.x, -a.y)
    if v == (0, 0):
        return s, v
    return translate(s, v), v


def equivalent(a: LatticeSet, b: LatticeSet) -> bool:
    """True iff ``b`` is a translate of ``a``; the empty set is only equivalent to itself."""
    if not a or not b:
        return not a and not b
    if len(a) != len(b):
        return False
    return canonicalize(a)[0] == canonicalize(b)[0]


def minkowski_sum(a: LatticeSet, c: LatticeSet) -> LatticeSet:
    """The convolution ``{p + q : p in a, q in c}``."""
    if not a or not c:
        raise LatticeError("minkowski_sum needs two nonempty operands")
    return LatticeSet((p.x + q.x, p.y + q.y) for p in a for q in c)


def rotate90(s: LatticeSet) -> LatticeSet:
    """Quarter turn counter-clockwise, ``(x, y) -> (-y, x)``, canonicalized."""
    if not s:
        return s
    return canonicalize(LatticeSet((-p.y, p.x) for p in s))[0]


def reflect_diagonal(s: LatticeSet) -> LatticeSet:
    """Mirror in the main diagonal, ``(x, y) -> (y, x)``, canonicalized."""
    if not s:
        return s
    return canonicalize(LatticeSet((p.y, p.x) for p in s))[0]


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(s: LatticeSet) -> list[Point]:
    """Vertices of the convex hull, counter-clockwise, collinear points dropped."""
    pts = sorted(set(s.points))
    if len(pts) <= 2:
        return pts
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def hull_lattice_points(s: LatticeSet) -> LatticeSet:
    """All lattice points inside (or on) the convex hull of ``s``."""
    hull = convex_hull(s)
    x0, y0, x1, y1 = s.bbox()
    if len(hull) == 1:
        return LatticeSet(hull)
    if len(hull) == 2:
        a, b = hull
        return LatticeSet(
            (x, y)
            for y in range(y0, y1 + 1)
            for x in range(x0, x1 + 1)
            if _cross(a, b, (x, y)) == 0
        )
    edges = list(zip(hull, hull[1:] + hull[:1]))
    return LatticeSet(
        (x, y)
        for y in range(y0, y1 + 1)
        for x in range(x0, x1 + 1)
        if all(_cross(a, b, (x, y)) >= 0 for a, b in edges)
    )


def is_lattice_convex(s: LatticeSet) -> bool:
    if not s:
        raise LatticeError("convexity is undefined for the empty set")
    return hull_lattice_points(s) == s


# -- text grid format --------------------------------------------------------
#   '#' point in the set      '.' absent
#   'X' origin, in the set    'x' origin, absent
_IN, _OUT, _ORIGIN_IN, _ORIGIN_OUT = "#", ".", "X", "x"


def to_grid(s: LatticeSet) -> str:
    """Render as rows (top row first) covering the set and the origin."""
    pts = set(s.points) | {Point(0, 0)}
    xs = [p.x for p in pts]
    ys = [p.y for p in pts]
    rows = []
    for y in range(max(ys), min(ys) - 1, -1):
        row = []
        for x in range(min(xs), max(xs) + 1):
            inside = (x, y) in s
            if (x, y) == (0, 0):
                row.append(_ORIGIN_IN if inside else _ORIGIN_OUT)
            else:
                row.append(_IN if inside else _OUT)
        rows.append("".join(row))
    return "\n".join(rows) + "\n"


def from_grid(text: str) -> LatticeSet:
    """Parse the grid format; without an origin marker the lower-left cell is the origin."""
    rows = [r.rstrip() for r in text.strip("\n").splitlines()]
    rows = [r for r in rows if r.strip()]
    if not rows:
        return LatticeSet()
    height = len(rows)
    origin = None
    cells = []
    for i, row in enumerate(rows):
        y = height - 1 - i
        for x, ch in enumerate(row):
            if ch in (_ORIGIN_IN, _ORIGIN_OUT):
                if origin is not None:
                    raise LatticeError("grid has more than one origin marker")
                origin = (x, y)
            if ch in (_IN, _ORIGIN_IN):
                cells.append((x, y))
            elif ch not in (_OUT, _ORIGIN_OUT, " "):
                raise LatticeError(f"unexpected grid character {ch!r}")
    ox, oy = origin if origin is not None else (0, 0)
    return LatticeSet((x - ox, y - oy) for x, y in cells)


_FILES = "abcdefghijklmnopqrstuvwy"


def chess(*names: str) -> LatticeSet:
    """Build a set from chessboard names: file letter is x (``a`` = 0), rank is y + 1.

    ``z`` is the file left of ``a`` and rank ``0`` the row below ``1``, so
    ``chess("z2", "a0")`` is ``{(-1, 1), (0, -1)}``.
    """
    pts = []
    for name in names:
        f, rank = name[0], int(name[1:])
        x = -1 if f == "z" else _FILES.index(f)
        pts.append((x, rank - 1))
    return LatticeSet(pts)


def rectangle(width: int, height: int) -> LatticeSet:
    return LatticeSet((x, y) for y in range(height) for x in range(width))
