"""Quasi-isometry certificates between the plane and the grid.

The three maps of interest: the floor map from the Euclidean plane onto
the grid, the inclusion of the grid back into the plane, and the identity
between two word metrics from different generating sets. All verdicts are
exact: Euclidean distances are compared through their squared rational
values, so a multiplicative constant k enters only as k^2 (which lets the
boundary case k = sqrt(2) be tested exactly).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor
from typing import Iterable, Optional, Sequence, Union

from .exactnum import sqrt_exact
from .lattice import (GeneratingSet, LatticePoint, bfs_distances, word_metric)

PlanePoint = tuple[Fraction, Fraction]

Pair = tuple[tuple, tuple]


def parse_plane_point(text: str) -> PlanePoint:
    x, y = text.split(",")
    return Fraction(x), Fraction(y)


def floor_map(p: PlanePoint) -> LatticePoint:
    """Componentwise floor, the quasi-isometry from the plane to the grid."""
    return (floor(p[0]), floor(p[1]))


def sq_euclidean(p: PlanePoint, q: PlanePoint) -> Fraction:
    dx = p[0] - q[0]
    dy = p[1] - q[1]
    return dx * dx + dy * dy


@dataclass(frozen=True)
class QIParams:
    """Constants (k, c) of a quasi-isometric embedding, k >= 1, c >= 0.

    ``k_sq`` is the authoritative field; pass ``k`` for rational constants
    or use :meth:`from_k_squared` for symbolic square roots.
    """

    k_sq: Fraction
    c: Fraction
    k_label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "k_sq", Fraction(self.k_sq))
        object.__setattr__(self, "c", Fraction(self.c))
        if self.k_sq < 1 or self.c < 0:
            raise ValueError("need k >= 1 and c >= 0")
        if not self.k_label:
            object.__setattr__(self, "k_label", f"sqrt({self.k_sq})")

    @classmethod
    def from_k(cls, k, c) -> "QIParams":
        k = Fraction(k)
        return cls(k * k, Fraction(c), k_label=str(k))

    @classmethod
    def from_k_squared(cls, k_sq, c) -> "QIParams":
        return cls(Fraction(k_sq), Fraction(c))


@dataclass(frozen=True)
class Violation:
    pair: Pair
    side: str  # "upper" or "lower"
    margin: Fraction  # positive amount by which the squared comparison failed


@dataclass
class QIReport:
    map_name: str
    params: QIParams
    pairs_checked: int = 0
    violations: list[Violation] = field(default_factory=list)
    surjectivity_bound: Optional[Fraction] = None

    @property
    def ok(self) -> bool:
        return not self.violations


def _check_graph_target_pair(d_graph: Fraction, sq_plane: Fraction,
                             params: QIParams) -> list[tuple[str, Fraction]]:
    """Exact check of 1/k d_X - c <= d_Y <= k d_X + c with d_Y the rational
    graph distance and d_X = sqrt(sq_plane). Returns (side, margin) per
    failure; margins are in the squared comparison domain."""
    k_sq, c = params.k_sq, params.c
    out = []
    # upper: d_Y - c <= k d_X, squared once the left side is positive
    upper_lhs = d_graph - c
    if upper_lhs > 0 and upper_lhs * upper_lhs > k_sq * sq_plane:
        out.append(("upper", upper_lhs * upper_lhs - k_sq * sq_plane))
    # lower: d_X <= k (d_Y + c), both sides nonnegative
    lower_rhs = d_graph + c
    if sq_plane > k_sq * lower_rhs * lower_rhs:
        out.append(("lower", sq_plane - k_sq * lower_rhs * lower_rhs))
    return out


class FloorMap:
    """f(x, y) = (floor x, floor y) from (R^2, l2) to the grid."""

    name = "floor"

    def check_pair(self, p: PlanePoint, q: PlanePoint,
                   params: QIParams) -> list[Violation]:
        d_graph = Fraction(word_metric(floor_map(p), floor_map(q)))
        sq = sq_euclidean(p, q)
        return [Violation((p, q), side, margin)
                for side, margin in _check_graph_target_pair(d_graph, sq, params)]


class InclusionMap:
    """The inclusion of the grid (word metric) into (R^2, l2)."""

    name = "inclusion"

    def check_pair(self, p: LatticePoint, q: LatticePoint,
                   params: QIParams) -> list[Violation]:
        d_graph = Fraction(word_metric(p, q))
        sq = sq_euclidean(p, q)
        out = []
        k_sq, c = params.k_sq, params.c
        # k is an exact Fraction or quadratic surd, so both inequalities are
        # decided exactly even for irrational constants like sqrt(2)
        k = sqrt_exact(k_sq)
        # upper: sqrt(sq) <= k*d_graph + c
        bound = k * d_graph + c
        if sq > bound * bound:
            out.append(Violation((p, q), "upper", sq - bound * bound))
        # lower: (1/k) d_graph - c <= sqrt(sq), i.e. d_graph - c*k <= k*sqrt(sq)
        lhs = d_graph - c * k
        if lhs > 0 and lhs * lhs > k_sq * sq:
            out.append(Violation((p, q), "lower", lhs * lhs - k_sq * sq))
        return out


class GensetMap:
    """The identity of the grid between two word metrics."""

    def __init__(self, S: GeneratingSet, S2: GeneratingSet,
                 radius_cap: int = 64):
        self.S = S
        self.S2 = S2
        self.radius_cap = radius_cap
        self.name = "genset"
        self._dist_cache: dict[GeneratingSet, dict] = {}

    def _dist(self, S: GeneratingSet, p: LatticePoint, q: LatticePoint) -> int:
        delta = (q[0] - p[0], q[1] - p[1])
        table = self._dist_cache.get(S)
        if table is None or delta not in table:
            table = bfs_distances(S, self.radius_cap)
            self._dist_cache[S] = table
        if delta not in table:
            raise ValueError(f"pair {p}, {q} outside radius cap {self.radius_cap}")
        return table[delta]

    def check_pair(self, p: LatticePoint, q: LatticePoint,
                   params: QIParams) -> list[Violation]:
        dx = Fraction(self._dist(self.S, p, q))
        dy = Fraction(self._dist(self.S2, p, q))
        k_sq, c = params.k_sq, params.c
        out = []
        # both distances rational; compare via squares only for k
        upper_lhs = dy - c
        if upper_lhs > 0 and upper_lhs * upper_lhs > k_sq * dx * dx:
            out.append(Violation((p, q), "upper",
                                 upper_lhs * upper_lhs - k_sq * dx * dx))
        lower_rhs = dy + c
        if dx * dx > k_sq * lower_rhs * lower_rhs:
            out.append(Violation((p, q), "lower",
                                 dx * dx - k_sq * lower_rhs * lower_rhs))
        return out


Map = Union[FloorMap, InclusionMap, GensetMap]


# ---------------------------------------------------------------------------
# sampling


_DENOMINATORS = (1, 2, 3, 4, 5, 7, 8, 16, 32, 64)


def sample_plane_points(box: tuple[Fraction, Fraction], count: int,
                        seed: int) -> list[PlanePoint]:
    """Seeded rational points in [lo, hi]^2 with small denominators."""
    lo, hi = Fraction(box[0]), Fraction(box[1])
    rng = random.Random(seed)
    pts = []
    for _ in range(count):
        den = rng.choice(_DENOMINATORS)
        nlo, nhi = int(lo * den), int(hi * den)
        pts.append((Fraction(rng.randint(nlo, nhi), den),
                    Fraction(rng.randint(nlo, nhi), den)))
    return pts


def sample_plane_pairs(box, count, seed) -> list[tuple[PlanePoint, PlanePoint]]:
    pts = sample_plane_points(box, 2 * count, seed)
    return list(zip(pts[::2], pts[1::2]))


def lattice_ball(radius: int) -> list[LatticePoint]:
    return [(x, y)
            for x in range(-radius, radius + 1)
            for y in range(-radius + abs(x), radius - abs(x) + 1)]


# ---------------------------------------------------------------------------
# operations


def check_embedding(qmap: Map, params: QIParams,
                    pairs: Iterable[Pair]) -> QIReport:
    """Evaluate both quasi-isometry inequalities exactly on every pair."""
    report = QIReport(map_name=qmap.name, params=params)
    for p, q in pairs:
        report.pairs_checked += 1
        report.violations.extend(qmap.check_pair(p, q, params))
    return report


def find_violation(qmap: Map, params: QIParams, strategy: str,
                   budget: int, seed: int = 0,
                   box: tuple[Fraction, Fraction] = (Fraction(-100), Fraction(100))
                   ) -> Optional[Violation]:
    """Search for a witness pair violating one inequality.

    Strategies: ``diagonal-ray`` scans the pairs ((0,0), (n,n)) where the
    violating family for k < sqrt(2) lives; ``grid`` scans half-integer
    points near the origin; ``random`` draws seeded pairs from the box.
    """
    if strategy == "diagonal-ray":
        for n in range(1, budget + 1):
            pair = ((Fraction(0), Fraction(0)), (Fraction(n), Fraction(n)))
            found = qmap.check_pair(*pair, params)
            if found:
                return found[0]
        return None
    if strategy == "grid":
        pts = [(Fraction(i, 2), Fraction(j, 2))
               for i in range(-8, 9) for j in range(-8, 9)]
        checked = 0
        for a in pts:
            for b in pts:
                if checked >= budget:
                    return None
                checked += 1
                found = qmap.check_pair(a, b, params)
                if found:
                    return found[0]
        return None
    if strategy == "random":
        for pair in sample_plane_pairs(box, budget, seed):
            found = qmap.check_pair(*pair, params)
            if found:
                return found[0]
        return None
    raise ValueError(f"unknown strategy {strategy!r}")


@dataclass(frozen=True)
class RoundtripReport:
    max_sq_displacement: Fraction
    argmax: PlanePoint
    samples: int


def roundtrip_displacement(samples: Sequence[PlanePoint]) -> RoundtripReport:
    """Largest squared l2 displacement of inclusion-after-floor on the samples.

    The supremum over the whole plane is 2 (displacement sqrt(2)), never
    attained.
    """
    best = Fraction(0)
    arg = samples[0] if samples else (Fraction(0), Fraction(0))
    for p in samples:
        fp = floor_map(p)
        sq = sq_euclidean(p, (Fraction(fp[0]), Fraction(fp[1])))
        if sq > best:
            best, arg = sq, p
    return RoundtripReport(best, arg, len(samples))


@dataclass(frozen=True)
class SurjectivityReport:
    map_name: str
    bound: Fraction  # certified D
    max_sq_distance: Fraction  # largest observed squared distance to the image
    targets: int


def quasi_surjectivity_bound(qmap: Map,
                             targets: Sequence[tuple]) -> SurjectivityReport:
    """Certify a coarse-density bound D over the probe targets.

    The floor map is onto the grid, and every plane point is within
    sqrt(1/2) of a lattice point, so D = 1 certifies both maps; the report
    carries the exact squared distances observed.
    """
    max_sq = Fraction(0)
    if isinstance(qmap, FloorMap):
        for t in targets:
            # lattice targets are hit exactly: floor of the point itself
            if floor_map((Fraction(t[0]), Fraction(t[1]))) != (t[0], t[1]):
                raise ValueError(f"target {t} is not a lattice point")
    elif isinstance(qmap, InclusionMap):
        for t in targets:
            x, y = Fraction(t[0]), Fraction(t[1])
            cands = [(floor(x) + i, floor(y) + j) for i in (0, 1) for j in (0, 1)]
            sq = min(sq_euclidean((x, y), (Fraction(a), Fraction(b)))
                     for a, b in cands)
            max_sq = max(max_sq, sq)
        if max_sq >= 1:
            raise AssertionError("cell geometry bound exceeded")
    else:
        raise ValueError("surjectivity probing supports floor and inclusion")
    return SurjectivityReport(qmap.name, Fraction(1), max_sq, len(targets))


# ---------------------------------------------------------------------------
# the displayed inequality chains for the floor map


def floor_chain_holds(p: PlanePoint, q: PlanePoint) -> bool:
    """Exact per-pair check of the displayed upper and lower chains:
    d_grid <= 2 max(|dx|, |dy|) + 2 <= 2 d_plane + 2 and
    d_grid >= d_plane - 2 >= (1/2) d_plane - 2."""
    d_grid = word_metric(floor_map(p), floor_map(q))
    adx, ady = abs(p[0] - q[0]), abs(p[1] - q[1])
    mx = max(adx, ady)
    sq = adx * adx + ady * ady
    if d_grid > 2 * mx + 2:
        return False
    if mx * mx > sq:  # 2 max + 2 <= 2 sqrt(sq) + 2
        return False
    # lower: d_grid >= sqrt(sq) - 2, i.e. sqrt(sq) <= d_grid + 2
    lhs = d_grid + 2
    return sq <= lhs * lhs
