"""Boundary calculus for convex octogonal lattice sets.

A set in the family is described by its anchor (leftmost point of the lowest
row) and eight edge lengths ``(m, n, p, q, r, s, t, u)``, read counter-clockwise
from the lower horizontal edge.  The diagonal edges ``n, q, s, u`` count
unit diagonal steps, so their euclidean length carries a factor ``sqrt(2)``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import astuple, dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from .lattice_set import LatticeSet, Point, canonicalize, chess, minkowski_sum, rotate90
from . import order_engine

# unit step of each edge, counter-clockwise from the bottom edge
_DIRS = ((1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1))
_NAMES = ("m", "n", "p", "q", "r", "s", "t", "u")


class NotInO(ValueError):
    """The set is not a convex octogon of the family (or is an oblique rectangle)."""


class OrthogonalObliqueLines(ValueError):
    pass


class DecompositionError(RuntimeError):
    pass


@dataclass(frozen=True, order=False)
class Boundary:
    m: int = 0
    n: int = 0
    p: int = 0
    q: int = 0
    r: int = 0
    s: int = 0
    t: int = 0
    u: int = 0

    def __post_init__(self):
        if any(v < 0 for v in astuple(self)):
            raise ValueError(f"negative edge length in {astuple(self)}")

    @classmethod
    def of(cls, values) -> Boundary:
        values = [int(v) for v in values]
        if len(values) != 8:
            raise ValueError("a boundary has eight entries")
        return cls(*values)

    def __iter__(self) -> Iterator[int]:
        return iter(astuple(self))

    def as_list(self) -> list[int]:
        return list(astuple(self))

    def __add__(self, other: Boundary) -> Boundary:
        return Boundary(*(a + b for a, b in zip(self, other)))

    def __sub__(self, other: Boundary) -> Boundary:
        return Boundary(*(a - b for a, b in zip(self, other)))

    def __mul__(self, k: int) -> Boundary:
        return Boundary(*(k * a for a in self))

    __rmul__ = __mul__

    def closures_hold(self) -> bool:
        m, n, p, q, r, s, t, u = self
        return u + m + n == q + r + s and n + p + q == s + t + u

    def is_zero(self) -> bool:
        return not any(self)

    def is_oblique_rectangle(self) -> bool:
        m, n, p, q, r, s, t, u = self
        return m == p == r == t == 0 and n >= 1 and q >= 1

    def oblique_line_direction(self) -> str | None:
        """``"n"`` for a line along (1,1), ``"q"`` along (-1,1), else ``None``."""
        m, n, p, q, r, s, t, u = self
        if m or p or r or t:
            return None
        if n and not q and not u:
            return "n"
        if q and not n and not s:
            return "q"
        return None

    def in_family(self) -> bool:
        return self.closures_hold() and not self.is_oblique_rectangle()

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self) + ")"


ZERO = Boundary()


def circumference(b: Boundary) -> float:
    return b.m + b.p + b.r + b.t + math.sqrt(2) * (b.n + b.q + b.s + b.u)


def piecewise_shorter(a: Boundary, d: Boundary) -> bool:
    return a != d and all(x <= y for x, y in zip(a, d))


def boundary_add(a: Boundary, b: Boundary) -> Boundary:
    """Componentwise sum; refuses two mutually orthogonal oblique lines."""
    da, db = a.oblique_line_direction(), b.oblique_line_direction()
    if da and db and da != db:
        raise OrthogonalObliqueLines(f"{a} and {b} are orthogonal oblique lines")
    return a + b


def _vertices(anchor, b: Boundary) -> list[tuple[int, int]]:
    x, y = anchor
    out = [(x, y)]
    for (dx, dy), k in zip(_DIRS, b):
        x, y = x + k * dx, y + k * dy
        out.append((x, y))
    return out


def _fill(vertices) -> LatticeSet:
    xs = [v[0] for v in vertices]
    ys = [v[1] for v in vertices]
    sm = [v[0] + v[1] for v in vertices]
    df = [v[0] - v[1] for v in vertices]
    pts = []
    for y in range(min(ys), max(ys) + 1):
        lo = max(min(xs), min(sm) - y, min(df) + y)
        hi = min(max(xs), max(sm) - y, max(df) + y)
        pts.extend((x, y) for x in range(lo, hi + 1))
    return LatticeSet(pts)


def points_of(anchor, b: Boundary) -> LatticeSet:
    """Fill the octogon with the given anchor and boundary."""
    if not b.closures_hold():
        raise ValueError(f"boundary {b} violates the closure relations")
    return _fill(_vertices(anchor, b)[:-1])


def _extent(values) -> int:
    return max(values) - min(values)


def _raw_boundary(s: LatticeSet) -> Boundary:
    pts = s.points
    ys = [p.y for p in pts]
    xs = [p.x for p in pts]
    sm = [p.x + p.y for p in pts]
    df = [p.x - p.y for p in pts]
    y0, y1, x0, x1 = min(ys), max(ys), min(xs), max(xs)
    s0, s1, d0, d1 = min(sm), max(sm), min(df), max(df)
    return Boundary(
        _extent([p.x for p in pts if p.y == y0]),
        _extent([p.y for p in pts if p.x - p.y == d1]),
        _extent([p.y for p in pts if p.x == x1]),
        _extent([p.x for p in pts if p.x + p.y == s1]),
        _extent([p.x for p in pts if p.y == y1]),
        _extent([p.y for p in pts if p.x - p.y == d0]),
        _extent([p.y for p in pts if p.x == x0]),
        _extent([p.x for p in pts if p.x + p.y == s0]),
    )


def boundary_of(s: LatticeSet) -> Boundary:
    if not s:
        raise NotInO("the empty set has no boundary")
    b = _raw_boundary(s)
    if not b.closures_hold() or points_of(s.anchor(), b) != s:
        raise NotInO(f"{s!r} is not a convex octogon")
    if b.is_oblique_rectangle():
        raise NotInO(f"{s!r} is an oblique rectangle")
    return b


def in_family(s: LatticeSet) -> bool:
    try:
        boundary_of(s)
    except NotInO:
        return False
    return True


@dataclass(frozen=True)
class Octogon:
    anchor: Point
    boundary: Boundary

    def __post_init__(self):
        if not self.boundary.in_family():
            raise NotInO(f"boundary {self.boundary} is not in the family")

    @classmethod
    def from_set(cls, s: LatticeSet) -> Octogon:
        return cls(s.anchor(), boundary_of(s))

    @classmethod
    def canonical(cls, b) -> Octogon:
        return cls(Point(0, 0), b if isinstance(b, Boundary) else Boundary.of(b))

    def points(self) -> LatticeSet:
        return points_of(self.anchor, self.boundary)

    def to_json(self) -> dict:
        return {"b": self.boundary.as_list(), "anchor": [self.anchor.x, self.anchor.y]}

    @classmethod
    def from_json(cls, obj) -> Octogon:
        return cls(Point(*obj.get("anchor", (0, 0))), Boundary.of(obj["b"]))


def octogon_order(a: Octogon, d: Octogon) -> bool:
    return piecewise_shorter(a.boundary, d.boundary)


# ---------------------------------------------------------------------------
# molecules

MOLECULE_TYPES = {
    "M1": chess("a1", "a2"),
    "M2": chess("a2", "b1"),
    "M3": chess("a1", "a2", "b1"),
    "M4": chess("a1", "b1", "b2", "c1"),
}


@dataclass(frozen=True)
class Molecule:
    type: str
    rotation: int  # degrees counter-clockwise from the type representative
    boundary: Boundary
    set: LatticeSet


def boundaries_up_to(bound: int) -> Iterator[Boundary]:
    """Boundaries in the family with every entry ``<= bound``."""
    r = range(bound + 1)
    for m, n, p, q, s, t in itertools.product(r, repeat=6):
        u = n + p + q - s - t
        rr = u + m + n - q - s
        if 0 <= u <= bound and 0 <= rr <= bound:
            b = Boundary(m, n, p, q, rr, s, t, u)
            if not b.is_oblique_rectangle():
                yield b


def _classify(s: LatticeSet) -> tuple[str, int]:
    for name, rep in MOLECULE_TYPES.items():
        cur = canonicalize(rep)[0]
        for k in range(4):
            if cur == s:
                return name, 90 * k
            cur = rotate90(cur)
    raise ValueError(f"{s!r} is not a molecule shape")


def find_minimal(bound: int = 2) -> list[Boundary]:
    """Nonzero family boundaries with nothing nonzero strictly below them."""
    cands = [b for b in boundaries_up_to(bound) if not b.is_zero()]
    return [b for b in cands if not any(piecewise_shorter(c, b) for c in cands)]


@lru_cache(maxsize=1)
def molecules() -> tuple[Molecule, ...]:
    out = []
    for b in find_minimal(2):
        s = points_of((0, 0), b)
        name, rot = _classify(s)
        out.append(Molecule(name, rot, b, s))
    out.sort(key=lambda mol: (mol.type, mol.rotation))
    return tuple(out)


# ---------------------------------------------------------------------------
# decomposition into molecule steps


def decompose(a: Boundary, d: Boundary) -> list[Molecule]:
    """Molecules whose successive convolution turns ``a`` into ``d``.

    Every intermediate boundary stays in the family and no step convolves two
    orthogonal oblique lines.  Raises :class:`DecompositionError` if no chain
    exists, which for ``a < d`` would contradict the ordering theorem.
    """
    if not piecewise_shorter(a, d):
        raise ValueError(f"{a} is not piecewise shorter than {d}")
    mols = molecules()
    dead: set[Boundary] = set()

    def search(cur: Boundary) -> list[Molecule] | None:
        if cur == d:
            return []
        if cur in dead:
            return None
        rem = d - cur
        for mol in mols:
            if not all(x <= y for x, y in zip(mol.boundary, rem)):
                continue
            try:
                nxt = boundary_add(cur, mol.boundary)
            except OrthogonalObliqueLines:
                continue
            if nxt.is_oblique_rectangle():
                continue
            rest = search(nxt)
            if rest is not None:
                return [mol] + rest
        dead.add(cur)
        return None

    chain = search(a)
    if chain is None:
        raise DecompositionError(f"no molecule chain from {a} to {d}")
    return chain


def chain_sets(a: Octogon, chain: list[Molecule]) -> list[LatticeSet]:
    """The sets ``A_0 = A, A_{k+1} = A_k * M_k`` of a decomposition."""
    cur = a.points()
    out = [cur]
    for mol in chain:
        cur = minkowski_sum(cur, mol.set)
        out.append(cur)
    return out


# ---------------------------------------------------------------------------
# exhaustive comparison against the order engine


def family_upto(max_circumference: float) -> list[Boundary]:
    """All family boundaries with circumference ``<= max_circumference``."""
    bound = int(max_circumference)
    out = [b for b in boundaries_up_to(bound) if circumference(b) <= max_circumference + 1e-9]
    return sorted(out, key=lambda b: (circumference(b), b.as_list()))


@dataclass
class CrossCheck:
    boundaries: list[Boundary]
    pairs: int
    agree: int
    disagreements: list[tuple[Boundary, Boundary, bool, bool]]
    result: order_engine.SaturationResult

    @property
    def fraction(self) -> float:
        return self.agree / self.pairs if self.pairs else 1.0


def crosscheck(max_circumference: float = 6.0, **universe_kw) -> CrossCheck:
    """Compare piecewise-shorter boundaries with engine-derived facts.

    The universe is every set embeddable in an octogon of the listed
    circumference, so the facts found between octogons are exact.
    """
    bs = family_upto(max_circumference)
    sets = [points_of((0, 0), b) for b in bs]
    hosts = [s for s in sets if len(s) > 1]
    universe = order_engine.Universe.from_sets(hosts or sets, **universe_kw)
    res = order_engine.saturate(universe)
    ids = [res.class_id(s) for s in sets]
    facts = set(res.fact_ids())
    agree, bad = 0, []
    for (i, ba), (j, bd) in itertools.product(enumerate(bs), repeat=2):
        if i == j:
            continue
        engine = (ids[i], ids[j]) in facts
        theory = piecewise_shorter(ba, bd)
        if engine == theory:
            agree += 1
        else:
            bad.append((ba, bd, theory, engine))
    n = len(bs)
    return CrossCheck(bs, n * (n - 1), agree, bad, res)


def random_boundary(rng: np.random.Generator, box: int = 20, max_edge: int = 6) -> Boundary:
    """A random family boundary whose octogon fits a ``box x box`` square."""
    while True:
        m, n, p, q, s, t = (int(v) for v in rng.integers(0, max_edge + 1, size=6))
        u = n + p + q - s - t
        r = u + m + n - q - s
        if u < 0 or r < 0:
            continue
        b = Boundary(m, n, p, q, r, s, t, u)
        if b.is_oblique_rectangle():
            continue
        verts = _vertices((0, 0), b)
        w = max(v[0] for v in verts) - min(v[0] for v in verts) + 1
        h = max(v[1] for v in verts) - min(v[1] for v in verts) + 1
        if w <= box and h <= box:
            return b


def random_below(rng: np.random.Generator, d: Boundary, tries: int = 10000) -> Boundary:
    """A random family boundary piecewise shorter than ``d`` (``ZERO`` as fallback)."""
    for _ in range(tries):
        m, n, p, q, s, t = (int(rng.integers(0, v + 1)) for v in (d.m, d.n, d.p, d.q, d.s, d.t))
        u = n + p + q - s - t
        r = u + m + n - q - s
        if not (0 <= u <= d.u and 0 <= r <= d.r):
            continue
        b = Boundary(m, n, p, q, r, s, t, u)
        if b != d and not b.is_oblique_rectangle():
            return b
    return ZERO
