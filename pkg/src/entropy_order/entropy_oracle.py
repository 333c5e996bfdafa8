"""Exact classical Gibbs states on small tori.

Spins live on the sites of a ``W x H`` torus, site ``(x, y)`` has index
``y * W + x``.  A configuration is stored as a bit pattern where bit ``i`` set
means spin ``-1``.  The energy is ``E(x) = sum_A prod_{a in A} x_a`` over the
translation orbit ``G`` of a few base multiplets, and the state is
``p(x) = exp(-beta E(x)) / Z``.

Marginals are computed exactly.  Up to ``ENUMERATION_CAP`` sites a single
Gray-code sweep over all configurations fills an integer table
``counts[y, k]``: how many configurations restrict to ``y`` on the region and
have exactly ``k`` multiplets with product ``-1`` (so ``E = |G| - 2k``).  The
table gives the marginal at every ``beta`` without another sweep and is
independent of how the sweep is chunked.  Larger tori are handled by an exact
tensor contraction of the Boltzmann factors.
"""
from __future__ import annotations

import logging
import math
import os
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

import numba
import numpy as np
import opt_einsum

from .lattice_set import LatticeSet, canonicalize, chess, reflect_diagonal, rotate90, translate
from . import order_engine

log = logging.getLogger(__name__)

if "NUMBA_THREADING_LAYER" not in os.environ:
    # the default probe warns about old TBB builds; workqueue ships with numba
    numba.config.THREADING_LAYER = "workqueue"

ENUMERATION_CAP = 30
LN2 = math.log(2.0)
INEQUALITY_TOL = 1e-10
IDENTITY_TOL = 1e-12


class CapExceeded(ValueError):
    pass


class RegionError(ValueError):
    pass


# ---------------------------------------------------------------------------
# domain types


@dataclass(frozen=True)
class Torus:
    width: int
    height: int

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValueError("torus dimensions must be positive")

    @property
    def sites(self) -> int:
        return self.width * self.height

    def index(self, x: int, y: int) -> int:
        return (y % self.height) * self.width + (x % self.width)

    def indices(self, s: Iterable) -> tuple[int, ...]:
        return tuple(self.index(p[0], p[1]) for p in s)

    def __str__(self) -> str:
        return f"{self.width}x{self.height}"


@dataclass(frozen=True)
class InteractionFamily:
    """Base multiplets, closed under torus translations and optionally rotations/reflections."""

    bases: tuple[LatticeSet, ...]
    rotations: bool = False
    reflections: bool = False

    def __post_init__(self):
        bases = tuple(self.bases)
        if any(not b for b in bases):
            raise ValueError("the empty set is not an interaction multiplet")
        object.__setattr__(self, "bases", bases)

    def shapes(self) -> tuple[LatticeSet, ...]:
        """Canonical shapes generating the orbit, deduplicated."""
        out = []
        for b in self.bases:
            cur = canonicalize(b)[0]
            variants = [cur]
            if self.rotations:
                for _ in range(3):
                    cur = rotate90(cur)
                    variants.append(cur)
            if self.reflections:
                variants += [reflect_diagonal(v) for v in list(variants)]
            for v in variants:
                if v not in out:
                    out.append(v)
        return tuple(out)

    def orbit(self, torus: Torus) -> tuple[tuple[int, ...], ...]:
        """Site-index sets of all multiplets on ``torus``, each stored once."""
        return _orbit(self, torus)

    @classmethod
    def nearest_neighbors(cls) -> InteractionFamily:
        return cls((chess("a1", "b1"),), rotations=True)

    @classmethod
    def diagonal_pairs(cls) -> InteractionFamily:
        return cls((chess("a1", "b2"), chess("a2", "b1")))


@lru_cache(maxsize=256)
def _orbit(family: InteractionFamily, torus: Torus) -> tuple[tuple[int, ...], ...]:
    seen = set()
    for shape in family.shapes():
        if len(set(torus.indices(shape))) != len(shape):
            raise ValueError(f"multiplet {shape!r} does not fit the {torus} torus")
        for dy in range(torus.height):
            for dx in range(torus.width):
                seen.add(tuple(sorted(torus.indices(translate(shape, (dx, dy))))))
    return tuple(sorted(seen))


@dataclass(frozen=True)
class GibbsState:
    torus: Torus
    family: InteractionFamily
    beta: float

    def __post_init__(self):
        if self.beta < 0:
            raise ValueError("beta must be nonnegative")

    def with_beta(self, beta: float) -> GibbsState:
        return GibbsState(self.torus, self.family, beta)


def region(torus: Torus, sites: LatticeSet) -> LatticeSet:
    """Validate that ``sites`` can be placed on ``torus`` without wrap ambiguity."""
    if sites:
        w, h = sites.size()
        if w >= torus.width or h >= torus.height:
            raise RegionError(
                f"region of size {w}x{h} needs a torus larger than {torus}"
            )
    return sites


# ---------------------------------------------------------------------------
# energy and brute-force helpers


def energy(state: GibbsState, x) -> float:
    x = np.asarray(x)
    if x.shape != (state.torus.sites,):
        raise ValueError(f"expected {state.torus.sites} spins")
    return float(sum(np.prod(x[list(a)]) for a in state.family.orbit(state.torus)))


def _threads() -> int:
    env = os.environ.get("ENTROPY_ORDER_THREADS")
    return max(1, int(env)) if env else (os.cpu_count() or 1)


# ---------------------------------------------------------------------------
# enumeration kernel


@numba.njit(cache=True)
def _gray_sweep(start, stop, site_ptr, site_mult, mult_ptr, mult_sites, reg_pos, counts):
    n_mult = mult_ptr.shape[0] - 1
    n_reg = reg_pos.shape[0]
    g = start ^ (start >> 1)
    par = np.zeros(n_mult, np.uint8)
    k = 0
    for a in range(n_mult):
        p = 0
        for j in range(mult_ptr[a], mult_ptr[a + 1]):
            p ^= (g >> mult_sites[j]) & 1
        par[a] = p
        k += p
    ys = np.zeros(n_reg, np.int64)
    for r in range(n_reg):
        for site in range(reg_pos.shape[1]):
            pos = reg_pos[r, site]
            if pos >= 0 and (g >> site) & 1:
                ys[r] |= np.int64(1) << pos
        counts[r, ys[r], k] += 1
    for i in range(start + 1, stop):
        bit = 0
        while not (i >> bit) & 1:
            bit += 1
        for j in range(site_ptr[bit], site_ptr[bit + 1]):
            a = site_mult[j]
            if par[a]:
                k -= 1
            else:
                k += 1
            par[a] ^= 1
        for r in range(n_reg):
            pos = reg_pos[r, bit]
            if pos >= 0:
                ys[r] ^= np.int64(1) << pos
            counts[r, ys[r], k] += 1


@numba.njit(parallel=True, cache=True)
def _sweep_chunks(bounds, site_ptr, site_mult, mult_ptr, mult_sites, reg_pos, out):
    for c in numba.prange(bounds.shape[0] - 1):
        _gray_sweep(bounds[c], bounds[c + 1], site_ptr, site_mult, mult_ptr, mult_sites, reg_pos, out[c])


def _csr(orbit, n_sites):
    mult_ptr = np.zeros(len(orbit) + 1, np.int64)
    mult_ptr[1:] = np.cumsum([len(a) for a in orbit])
    mult_sites = np.array([s for a in orbit for s in a], np.int64)
    by_site = [[] for _ in range(n_sites)]
    for k, a in enumerate(orbit):
        for s in a:
            by_site[s].append(k)
    site_ptr = np.zeros(n_sites + 1, np.int64)
    site_ptr[1:] = np.cumsum([len(b) for b in by_site])
    site_mult = np.array([k for b in by_site for k in b], np.int64)
    return site_ptr, site_mult, mult_ptr, mult_sites


def count_tables(
    torus: Torus,
    family: InteractionFamily,
    regions: Sequence[LatticeSet],
    chunks: int | None = None,
) -> list[np.ndarray]:
    """Integer tables ``counts[y, k]`` for each region, by full enumeration.

    ``y`` is the region configuration (bit ``j`` is the spin of the region's
    ``j``-th point), ``k`` the number of multiplets with product ``-1``.
    """
    n = torus.sites
    if n > ENUMERATION_CAP:
        raise CapExceeded(f"{n} sites exceed the enumeration cap of {ENUMERATION_CAP}")
    orbit = family.orbit(torus)
    regions = [region(torus, r) for r in regions]
    width = max((len(r) for r in regions), default=0)
    reg_pos = np.full((len(regions), n), -1, np.int64)
    for i, r in enumerate(regions):
        for j, site in enumerate(torus.indices(r)):
            reg_pos[i, site] = j
    chunks = chunks or _threads()
    total = 1 << n
    chunks = max(1, min(chunks, total))
    bounds = np.array([total * c // chunks for c in range(chunks + 1)], np.int64)
    out = np.zeros((chunks, len(regions), 1 << width, len(orbit) + 1), np.int64)
    _sweep_chunks(bounds, *_csr(orbit, n), reg_pos, out)
    summed = out.sum(axis=0)
    return [summed[i, : 1 << len(r)] for i, r in enumerate(regions)]


@lru_cache(maxsize=512)
def _cached_table(torus: Torus, family: InteractionFamily, sites: LatticeSet) -> np.ndarray:
    return count_tables(torus, family, [sites])[0]


def _weights(n_mult: int, beta: float) -> np.ndarray:
    k = np.arange(n_mult + 1)
    energies = n_mult - 2 * k
    # shift by the ground energy so that no weight overflows
    return np.exp(-beta * (energies - energies.min()))


def _table_marginal(table: np.ndarray, beta: float) -> np.ndarray:
    w = _weights(table.shape[1] - 1, beta)
    unnorm = table.astype(np.float64) @ w
    return unnorm / math.fsum(unnorm)


# ---------------------------------------------------------------------------
# contraction for tori above the enumeration cap


def _contract_marginal(torus: Torus, family: InteractionFamily, sites: LatticeSet, beta: float) -> np.ndarray:
    orbit = family.orbit(torus)
    spins = np.array([1.0, -1.0])
    operands = []
    for a in orbit:
        prod = spins
        for _ in range(len(a) - 1):
            prod = np.multiply.outer(prod, spins)
        operands += [np.exp(-beta * prod), list(a)]
    out_idx = list(reversed(torus.indices(sites)))
    for site in out_idx:
        # keeps region sites that no multiplet touches in the output
        operands += [np.ones(2), [site]]
    res = opt_einsum.contract(*operands, out_idx, optimize="greedy", memory_limit=2**27)
    flat = np.asarray(res, dtype=np.float64).reshape(-1)
    return flat / math.fsum(flat)


# ---------------------------------------------------------------------------
# public quantities


def marginal(state: GibbsState, sites: LatticeSet, method: str = "auto") -> np.ndarray:
    """Probability vector of the restriction of ``state`` to ``sites``."""
    sites = region(state.torus, sites)
    if method == "auto":
        method = "enumerate" if state.torus.sites <= ENUMERATION_CAP else "contract"
    if method == "enumerate":
        return _table_marginal(_cached_table(state.torus, state.family, sites), state.beta)
    if method == "contract":
        if not sites:
            return np.ones(1)
        return _contract_marginal(state.torus, state.family, sites, state.beta)
    raise ValueError(f"unknown method {method!r}")


def partition_function(state: GibbsState) -> float:
    table = _cached_table(state.torus, state.family, LatticeSet())[0]
    n_mult = table.shape[0] - 1
    k = np.arange(n_mult + 1)
    return math.fsum(table * np.exp(-state.beta * (n_mult - 2 * k)))


def entropy_of(p: np.ndarray) -> float:
    """Shannon entropy in nats, evaluated as ``n ln 2 - KL(p || uniform)``.

    The defect from ``n ln 2`` is summed with ``log1p`` so high-temperature
    states keep full relative accuracy in the small deviation.
    """
    n = int(round(math.log2(p.size)))
    p = p[p > 0]
    ratio = p * (1 << n)
    near = np.abs(ratio - 1.0) < 0.5
    logs = np.where(near, np.log1p(np.where(near, ratio - 1.0, 0.0)), np.log(ratio))
    return n * LN2 - math.fsum((p * logs).tolist())


def marginal_entropy(state: GibbsState, sites: LatticeSet, method: str = "auto") -> float:
    if not sites:
        return 0.0
    return entropy_of(marginal(state, sites, method))


def mean_entropy(state: GibbsState, sites: LatticeSet, method: str = "auto") -> float:
    if not sites:
        raise ValueError("mean entropy needs a nonempty region")
    return marginal_entropy(state, sites, method) / len(sites)


def check_strong_subadditivity(state: GibbsState, a: LatticeSet, b: LatticeSet) -> float:
    """``S(A) + S(B) - S(A & B) - S(A | B)``; nonnegative for every state."""
    return (
        marginal_entropy(state, a)
        + marginal_entropy(state, b)
        - marginal_entropy(state, a & b)
        - marginal_entropy(state, a | b)
    )


def count_multiplets(family: InteractionFamily, sites: LatticeSet) -> int:
    """Number of multiplets (translates of the family's shapes) inside ``sites``."""
    if not sites:
        return 0
    found = set()
    for shape in family.shapes():
        for p in sites:
            moved = translate(shape, p)  # shapes are anchored at the origin
            if moved <= sites:
                found.add(moved)
    return len(found)


def prediction(beta: float, n: int, mu: int) -> float:
    """High-temperature mean entropy through second order."""
    return LN2 - 0.5 * beta * beta * n / mu


# ---------------------------------------------------------------------------
# second-order expansion


@dataclass
class SecondOrderReport:
    region: LatticeSet
    n: int
    mu: int
    betas: list[float]
    errors: list[float]
    ratios: list[float]

    @property
    def passed(self) -> bool:
        tail = self.ratios[-2:] if len(self.ratios) >= 2 else self.ratios
        return bool(tail) and all(4.0 <= r <= 16.0 for r in tail)


def second_order_check(
    torus: Torus, family: InteractionFamily, sites: LatticeSet, betas: Sequence[float]
) -> SecondOrderReport:
    """``err(beta) = |s(D) - prediction|`` and the ratios ``err(2 beta) / err(beta)``.

    ``betas`` should be decreasing with each entry half of the previous one.
    """
    n, mu = count_multiplets(family, sites), len(sites)
    errors = []
    for beta in betas:
        s = mean_entropy(GibbsState(torus, family, beta), sites)
        errors.append(abs(s - prediction(beta, n, mu)))
    ratios = [
        errors[i] / errors[i + 1] if errors[i + 1] > 0 else math.inf
        for i in range(len(errors) - 1)
    ]
    return SecondOrderReport(sites, n, mu, list(betas), errors, ratios)


# ---------------------------------------------------------------------------
# appendix counterexamples

COUNTEREXAMPLE_BETAS = (0.02, 0.05, 0.1)


def strict_margin(beta: float) -> float:
    return 1e-6 * beta * beta


@dataclass
class Comparison:
    """One counterexample pair: the smaller set must have smaller mean entropy."""

    name: str
    smaller: LatticeSet
    larger: LatticeSet
    torus: Torus
    family: InteractionFamily
    betas: tuple[float, ...]
    expected_counts: tuple[int, int, int, int] | None = None
    s_small: list[float] = field(default_factory=list)
    s_large: list[float] = field(default_factory=list)
    counts: tuple[int, int, int, int] = (0, 0, 0, 0)
    engine_orderable: bool | None = None
    method: str = ""

    def evaluate(self) -> Comparison:
        self.method = "enumerate" if self.torus.sites <= ENUMERATION_CAP else "contract"
        self.s_small, self.s_large = [], []
        for beta in self.betas:
            st = GibbsState(self.torus, self.family, beta)
            self.s_small.append(mean_entropy(st, self.smaller))
            self.s_large.append(mean_entropy(st, self.larger))
        self.counts = (
            count_multiplets(self.family, self.smaller),
            len(self.smaller),
            count_multiplets(self.family, self.larger),
            len(self.larger),
        )
        self.engine_orderable = engine_orders(self.smaller, self.larger)
        return self

    @property
    def strict_ok(self) -> list[bool]:
        return [
            b < d - strict_margin(beta)
            for b, d, beta in zip(self.s_small, self.s_large, self.betas)
        ]

    @property
    def counts_ok(self) -> bool:
        return self.expected_counts is None or self.counts == self.expected_counts

    @property
    def passed(self) -> bool:
        return all(self.strict_ok) and self.counts_ok and self.engine_orderable is False

    def to_json(self) -> dict:
        n_b, mu_b, n_d, mu_d = self.counts
        return {
            "case": self.name,
            "smaller": self.smaller.to_json()["points"],
            "larger": self.larger.to_json()["points"],
            "torus": [self.torus.width, self.torus.height],
            "method": self.method,
            "counts": list(self.counts),
            "ratios": [n_b / mu_b, n_d / mu_d],
            "betas": list(self.betas),
            "s_smaller": self.s_small,
            "s_larger": self.s_large,
            "strict": self.strict_ok,
            "engine_orderable": self.engine_orderable,
            "passed": self.passed,
        }


def engine_orders(a: LatticeSet, d: LatticeSet) -> bool:
    """Whether the axioms derive ``a < d`` or ``d < a`` (exact, via a host universe)."""
    hosts = [s for s in (a, d) if len(s) > 1] or [d]
    res = order_engine.saturate(order_engine.Universe.from_sets(hosts))
    return res.has(a, d) or res.has(d, a)


@dataclass
class Chain:
    """Mean entropies of ``D_N`` must strictly increase in ``N``."""

    name: str
    sets: list[LatticeSet]
    torus: Torus
    family: InteractionFamily
    beta: float
    values: list[float] = field(default_factory=list)
    counts: list[tuple[int, int]] = field(default_factory=list)
    method: str = ""

    def evaluate(self) -> Chain:
        self.method = "enumerate" if self.torus.sites <= ENUMERATION_CAP else "contract"
        st = GibbsState(self.torus, self.family, self.beta)
        self.values = [mean_entropy(st, s) for s in self.sets]
        self.counts = [(count_multiplets(self.family, s), len(s)) for s in self.sets]
        return self

    @property
    def passed(self) -> bool:
        m = strict_margin(self.beta)
        return all(b > a + m for a, b in zip(self.values, self.values[1:]))

    def to_json(self) -> dict:
        return {
            "case": self.name,
            "torus": [self.torus.width, self.torus.height],
            "method": self.method,
            "beta": self.beta,
            "counts": [list(c) for c in self.counts],
            "s": self.values,
            "passed": self.passed,
        }


CHAIN_C = chess("a1", "a2", "b3", "c1", "c2")
OBLIQUE_C = chess("a2", "b1", "b2", "b3", "c2")
# the drawn set D is C together with the translate of C by (-1, +1)
OBLIQUE_SHIFT = (-1, 1)


def chain_set(n: int) -> LatticeSet:
    """``D_N = C | C' | ... | C^(N)``, translates of the chain set by steps of two files."""
    out = CHAIN_C
    for k in range(1, n + 1):
        out = out | translate(CHAIN_C, (2 * k, 0))
    return out


def oblique_pair() -> tuple[LatticeSet, LatticeSet]:
    """``(C, D)`` with ``D`` canonical and ``C`` kept at its position inside ``D``."""
    d, v = canonicalize(OBLIQUE_C | translate(OBLIQUE_C, OBLIQUE_SHIFT))
    return translate(OBLIQUE_C, v), d


def counterexamples(betas: Sequence[float] = COUNTEREXAMPLE_BETAS, chain_beta: float = 0.05):
    betas = tuple(betas)
    diag = InteractionFamily.diagonal_pairs()
    triples = InteractionFamily((chess("a1", "b1", "c1"),), rotations=True)
    nn = InteractionFamily.nearest_neighbors()
    oblique_family = InteractionFamily((chess("a1", "b2"),))
    oc, od = oblique_pair()
    d_sets = [chain_set(n) for n in (1, 2, 3)]
    chain_w = max(s.size()[0] for s in d_sets) + 1
    chain_h = max(s.size()[1] for s in d_sets) + 1
    return [
        Comparison("a", chess("a1", "a2", "b1"), chess("a1", "a2", "b1", "c1"),
                   Torus(5, 5), diag, betas, (1, 3, 1, 4)),
        Comparison("b", chess("a1", "b1", "c1"), chess("a1", "a2", "b1", "c1"),
                   Torus(5, 5), triples, betas, (1, 3, 1, 4)),
        Comparison("c", CHAIN_C, chain_set(1), Torus(6, 5), nn, betas, (2, 5, 3, 8)),
        Comparison("d", oc, od, Torus(5, 5), oblique_family, betas, (2, 5, 3, 8)),
        Chain("e", d_sets, Torus(chain_w, chain_h), nn, chain_beta),
    ]


@dataclass
class SuiteReport:
    cases: list

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    def to_json(self) -> dict:
        return {"passed": self.passed, "cases": [c.to_json() for c in self.cases]}


def counterexample_suite(**kw) -> SuiteReport:
    return SuiteReport([c.evaluate() for c in counterexamples(**kw)])


# ---------------------------------------------------------------------------
# monotonicity audit against engine facts


def random_family(rng: np.random.Generator, max_size: int = 3, max_bases: int = 2) -> InteractionFamily:
    bases = []
    cells = [(x, y) for y in range(3) for x in range(3)]
    for _ in range(int(rng.integers(1, max_bases + 1))):
        k = int(rng.integers(1, max_size + 1))
        pick = rng.choice(len(cells), size=k, replace=False)
        bases.append(LatticeSet(cells[i] for i in sorted(pick)))
    return InteractionFamily(
        tuple(bases), rotations=bool(rng.integers(2)), reflections=bool(rng.integers(2))
    )


@dataclass
class AuditReport:
    pairs: int
    violations: list[dict]
    worst_gap: float

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "pairs": self.pairs,
            "violations": len(self.violations),
            "worst_gap": self.worst_gap,
            "details": self.violations,
            "passed": self.passed,
        }


def audit_facts(box: tuple[int, int] = (3, 3)) -> list[order_engine.OrderFact]:
    res = order_engine.saturate(order_engine.Universe.from_box(*box))
    return res.facts


def monotonicity_audit(
    facts: Sequence[order_engine.OrderFact],
    trials: int = 1000,
    seed: int = 0,
    torus: Torus | None = None,
    tol: float = INEQUALITY_TOL,
) -> AuditReport:
    """Check ``s(A) >= s(D) - tol`` for sampled (fact, random state) pairs.

    ``worst_gap`` is the smallest ``s(A) - s(D)`` observed.
    """
    facts = list(facts)
    if not facts:
        raise ValueError("no facts to audit")
    if torus is None:
        w = max(max(f.greater.size()[0] for f in facts), 1) + 1
        h = max(max(f.greater.size()[1] for f in facts), 1) + 1
        torus = Torus(max(w, 3), max(h, 3))
    rng = np.random.default_rng(seed)
    violations, worst = [], math.inf
    for t in range(trials):
        fact = facts[int(rng.integers(len(facts)))]
        family = random_family(rng)
        beta = float(1.0 - rng.random())  # in (0, 1]
        st = GibbsState(torus, family, beta)
        gap = mean_entropy(st, fact.lesser) - mean_entropy(st, fact.greater)
        worst = min(worst, gap)
        if gap < -tol:
            violations.append({
                "trial": t,
                "lesser": fact.lesser.to_json()["points"],
                "greater": fact.greater.to_json()["points"],
                "bases": [b.to_json()["points"] for b in family.bases],
                "beta": beta,
                "gap": gap,
            })
    return AuditReport(trials, violations, worst)


# ---------------------------------------------------------------------------
# experiment specs


@dataclass
class Experiment:
    torus: Torus
    family: InteractionFamily
    betas: list[float]
    regions: dict[str, LatticeSet]

    @classmethod
    def from_json(cls, obj: dict) -> Experiment:
        from .lattice_set import from_grid

        fam = obj.get("family", {})
        return cls(
            Torus(*obj["torus"]),
            InteractionFamily(
                tuple(from_grid(g) for g in fam.get("bases", [])),
                rotations=bool(fam.get("rotations", False)),
                reflections=bool(fam.get("reflections", False)),
            ),
            [float(b) for b in obj["beta"]],
            {name: from_grid(g) for name, g in obj["regions"].items()},
        )

    def rows(self) -> list[dict]:
        out = []
        for name, sites in self.regions.items():
            n, mu = count_multiplets(self.family, sites), len(sites)
            for beta in self.betas:
                st = GibbsState(self.torus, self.family, beta)
                S = marginal_entropy(st, sites)
                s = S / mu
                pred = prediction(beta, n, mu)
                out.append({
                    "region": name, "beta": beta, "S": S, "s": s, "n": n, "mu": mu,
                    "prediction": pred, "error": abs(s - pred),
                })
        return out


CSV_COLUMNS = ("region", "beta", "S", "s", "n", "mu", "prediction", "error")
