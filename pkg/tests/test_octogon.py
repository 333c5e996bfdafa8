import itertools
import math

import numpy as np
import pytest

from entropy_order.lattice_set import LatticeSet, chess, minkowski_sum, rectangle, translate
from entropy_order.octogon import (
    ZERO,
    Boundary,
    DecompositionError,
    NotInO,
    Octogon,
    OrthogonalObliqueLines,
    boundary_add,
    boundary_of,
    boundaries_up_to,
    chain_sets,
    circumference,
    crosscheck,
    decompose,
    find_minimal,
    molecules,
    octogon_order,
    piecewise_shorter,
    points_of,
    random_below,
    random_boundary,
)

FIGURE = Boundary(4, 1, 2, 2, 1, 3, 1, 1)


def test_figure_closures():
    m, n, p, q, r, s, t, u = FIGURE
    assert u + m + n == q + r + s == 6
    assert n + p + q == s + t + u == 5


def test_figure_round_trip():
    s = points_of((0, 0), FIGURE)
    assert boundary_of(s) == FIGURE
    assert len(s) == 31
    assert s.size() == (7, 6)


def test_simple_boundaries():
    assert boundary_of(chess("c3")) == ZERO
    assert boundary_of(rectangle(2, 2)) == Boundary(1, 0, 1, 0, 1, 0, 1, 0)
    assert len(points_of((0, 0), Boundary(1, 0, 1, 0, 1, 0, 1, 0))) == 4
    assert points_of((0, 0), ZERO) == chess("a1")


def test_lines_have_two_boundary_pieces():
    assert boundary_of(rectangle(4, 1)) == Boundary(3, 0, 0, 0, 3, 0, 0, 0)
    assert boundary_of(rectangle(1, 3)) == Boundary(0, 0, 2, 0, 0, 0, 2, 0)
    assert boundary_of(chess("a1", "b2", "c3")) == Boundary(0, 2, 0, 0, 0, 2, 0, 0)
    assert boundary_of(chess("c1", "b2", "a3")) == Boundary(0, 0, 0, 2, 0, 0, 0, 2)


def test_not_in_family():
    with pytest.raises(NotInO):
        boundary_of(chess("a1", "c1"))  # not convex
    with pytest.raises(NotInO):
        boundary_of(chess("a1", "b1", "c1", "a2", "c2"))  # a U is not convex
    with pytest.raises(NotInO):
        boundary_of(chess("b1", "a2", "b2", "c2", "b3"))  # the plus is an oblique rectangle
    with pytest.raises(NotInO):
        boundary_of(LatticeSet())


def test_slanted_parallelogram_is_in_family():
    assert boundary_of(chess("a1", "b1", "b2", "c2")) == Boundary(1, 1, 0, 0, 1, 1, 0, 0)


def test_slope_two_edge_rejected():
    # a triangle with an edge of slope 2 is lattice-convex but not an octogon
    with pytest.raises(NotInO):
        boundary_of(chess("a1", "b1", "a2", "a3"))


def test_circumference():
    assert circumference(ZERO) == 0
    assert circumference(Boundary(1, 0, 1, 0, 1, 0, 1, 0)) == 4
    assert math.isclose(circumference(FIGURE), 8 + 7 * math.sqrt(2))


def test_piecewise_shorter_examples():
    b = Boundary(1, 0, 1, 0, 1, 0, 1, 0)
    assert piecewise_shorter(ZERO, b)
    assert not piecewise_shorter(b, b)
    assert piecewise_shorter(2 * b, 3 * b)


def test_piecewise_shorter_is_strict_partial_order():
    bs = list(boundaries_up_to(1))
    for a in bs:
        assert not piecewise_shorter(a, a)
    for a, b, c in itertools.product(bs[:40], repeat=3):
        if piecewise_shorter(a, b) and piecewise_shorter(b, c):
            assert piecewise_shorter(a, c)


def test_octogon_order():
    atom = Octogon.canonical(ZERO)
    fig = Octogon.canonical(FIGURE)
    assert octogon_order(atom, fig)
    assert not octogon_order(fig, fig)


def test_twelve_molecules():
    mols = molecules()
    assert len(mols) == 12
    counts = {t: sum(m.type == t for m in mols) for t in ("M1", "M2", "M3", "M4")}
    assert counts == {"M1": 2, "M2": 2, "M3": 4, "M4": 4}
    assert len({m.set for m in mols}) == 12
    m4 = next(m for m in mols if m.type == "M4" and m.rotation == 0)
    assert m4.set == chess("a1", "b1", "b2", "c1")
    for m in mols:
        assert m.boundary.closures_hold()
        assert boundary_of(m.set) == m.boundary


def test_minimal_set_stable_under_larger_search():
    assert set(find_minimal(3)) == {m.boundary for m in molecules()}


def test_boundary_add_refuses_orthogonal_oblique_lines():
    ne = boundary_of(chess("a1", "b2"))
    nw = boundary_of(chess("b1", "a2"))
    with pytest.raises(OrthogonalObliqueLines):
        boundary_add(ne, nw)
    assert boundary_add(ne, ne) == 2 * ne
    assert boundary_add(FIGURE, ZERO) == FIGURE


def test_convolution_with_horizontal_domino():
    fig = points_of((0, 0), FIGURE)
    got = boundary_of(minkowski_sum(fig, chess("a1", "b1")))
    assert got == FIGURE + Boundary(1, 0, 0, 0, 1, 0, 0, 0)


def test_convolution_adds_boundaries_randomly():
    rng = np.random.default_rng(11)
    mols = molecules()
    for _ in range(200):
        b = random_boundary(rng, box=18, max_edge=5)
        mol = mols[int(rng.integers(len(mols)))]
        a = points_of((int(rng.integers(-5, 5)), int(rng.integers(-5, 5))), b)
        assert boundary_of(minkowski_sum(a, mol.set)) == b + mol.boundary


def test_round_trips():
    for b in boundaries_up_to(2):
        s = points_of((3, -2), b)
        assert boundary_of(s) == b
        assert points_of(s.anchor(), boundary_of(s)) == s


def test_octogon_json():
    o = Octogon(translate(chess("a1"), (2, 5)).anchor(), FIGURE)
    assert Octogon.from_json(o.to_json()) == o
    assert o.to_json() == {"b": [4, 1, 2, 2, 1, 3, 1, 1], "anchor": [2, 5]}


def test_oblique_rectangle_boundary_rejected():
    with pytest.raises(NotInO):
        Octogon.canonical(Boundary(0, 1, 0, 1, 0, 1, 0, 1))


def test_decompose_single_molecule():
    b = Boundary(1, 0, 1, 0, 1, 0, 1, 0)
    mol = next(m for m in molecules() if m.type == "M1" and m.rotation == 90)
    chain = decompose(b, b + mol.boundary)
    assert [m.boundary for m in chain] == [mol.boundary]


def test_decompose_blow_up():
    b = Boundary(1, 1, 1, 1, 1, 1, 1, 1)
    chain = decompose(b, 2 * b)
    total = b
    for m in chain:
        total = total + m.boundary
        assert total.in_family()
    assert total == 2 * b


def test_decompose_figure_from_atom():
    chain = decompose(ZERO, FIGURE)
    assert sum((m.boundary for m in chain), ZERO) == FIGURE
    lengths = [0.0]
    cur = ZERO
    for m in chain:
        cur = cur + m.boundary
        lengths.append(circumference(cur))
    assert all(b > a for a, b in zip(lengths, lengths[1:]))


def test_decompose_chains_are_convolutions():
    rng = np.random.default_rng(5)
    for _ in range(100):
        d = random_boundary(rng, box=16, max_edge=4)
        a = random_below(rng, d)
        chain = decompose(a, d)
        sets = chain_sets(Octogon.canonical(a), chain)
        assert boundary_of(sets[-1]) == d
        for s in sets:
            boundary_of(s)


def test_decompose_requires_order():
    with pytest.raises(ValueError):
        decompose(FIGURE, ZERO)
    assert issubclass(DecompositionError, RuntimeError)


def test_crosscheck_small():
    cc = crosscheck(5.0)
    assert cc.agree == cc.pairs
    assert cc.pairs == len(cc.boundaries) * (len(cc.boundaries) - 1)
