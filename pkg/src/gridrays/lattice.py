"""The integer grid as a Cayley graph: metrics, geodesic words, counting.

Vertices are plain ``(x, y)`` integer tuples. Geodesic words are ASCII
digit strings over {0,1,2,3} (east, north, west, south); digit 4 is an
accepted alias for east on input and is normalized to 0 inside words.
Python integers are unbounded, so all arithmetic here is exact.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Optional

LatticePoint = tuple[int, int]

ORIGIN: LatticePoint = (0, 0)

#: displacement of each digit; 0 and 4 both point east
DISPLACEMENTS: dict[int, LatticePoint] = {
    0: (1, 0),
    1: (0, 1),
    2: (-1, 0),
    3: (0, -1),
    4: (1, 0),
}

DEFAULT_GENERATION_RADIUS = 64


class GenerationError(ValueError):
    """The given vectors do not generate the whole grid."""


class BallExceeded(Exception):
    """A BFS search ran past its radius cap before finding its target."""


def parse_point(text: str) -> LatticePoint:
    x, y = text.split(",")
    return int(x), int(y)


def format_point(p: LatticePoint) -> str:
    return f"{p[0]},{p[1]}"


def word_metric(p: LatticePoint, q: LatticePoint) -> int:
    """Graph distance under the standard generators: the l1 distance."""
    return abs(p[0] - q[0]) + abs(p[1] - q[1])


class GeneratingSet:
    """A finite symmetric generating set of the grid.

    The symmetric closure is applied on construction, and the set is
    rejected unless a BFS from the origin reaches both (1,0) and (0,1)
    within ``radius_cap`` steps.
    """

    def __init__(self, generators: Iterable[LatticePoint],
                 radius_cap: int = DEFAULT_GENERATION_RADIUS):
        vecs = set()
        for g in generators:
            v = (int(g[0]), int(g[1]))
            if v == (0, 0):
                raise GenerationError("the zero vector is not a generator")
            vecs.add(v)
            vecs.add((-v[0], -v[1]))
        if not vecs:
            raise GenerationError("empty generating set")
        self.vectors: tuple[LatticePoint, ...] = tuple(sorted(vecs))
        dists = bfs_distances(self, radius_cap, targets={(1, 0), (0, 1)})
        if (1, 0) not in dists or (0, 1) not in dists:
            raise GenerationError(
                f"{self.vectors} does not generate the grid within radius {radius_cap}"
            )

    def __eq__(self, other):
        return isinstance(other, GeneratingSet) and self.vectors == other.vectors

    def __hash__(self):
        return hash(self.vectors)

    def __repr__(self):
        return f"GeneratingSet({list(self.vectors)})"


def standard_generators() -> GeneratingSet:
    return GeneratingSet([(1, 0), (0, 1)])


def bfs_distances(S: GeneratingSet, radius_cap: int,
                  targets: Optional[set[LatticePoint]] = None
                  ) -> dict[LatticePoint, int]:
    """Distances from the origin out to ``radius_cap`` in Cay(Z^2, S).

    If ``targets`` is given, the search stops early once every target has
    been reached.
    """
    if radius_cap < 0:
        raise ValueError("radius_cap must be nonnegative")
    dist: dict[LatticePoint, int] = {ORIGIN: 0}
    queue: deque[LatticePoint] = deque([ORIGIN])
    remaining = set(targets) - {ORIGIN} if targets is not None else None
    while queue:
        p = queue.popleft()
        d = dist[p]
        if d == radius_cap:
            continue
        for (gx, gy) in S.vectors:
            q = (p[0] + gx, p[1] + gy)
            if q not in dist:
                dist[q] = d + 1
                queue.append(q)
                if remaining is not None:
                    remaining.discard(q)
                    if not remaining:
                        return dist
    return dist


def bfs_metric(S: GeneratingSet, p: LatticePoint, q: LatticePoint,
               radius_cap: int) -> Optional[int]:
    """Graph distance from p to q in Cay(Z^2, S), or None if > radius_cap.

    Independent oracle for word metrics under arbitrary generating sets;
    uses translation invariance and searches from the origin.
    """
    if radius_cap < 1:
        raise ValueError("radius_cap must be >= 1")
    target = (q[0] - p[0], q[1] - p[1])
    dist = bfs_distances(S, radius_cap, targets={target})
    return dist.get(target)


def _axis_digits(dx: int, dy: int) -> tuple[str, int, str, int]:
    hdig = "0" if dx >= 0 else "2"
    vdig = "1" if dy >= 0 else "3"
    return hdig, abs(dx), vdig, abs(dy)


def geodesic_count(p: LatticePoint, q: LatticePoint) -> int:
    """Number of monotone staircase words from p to q."""
    dx, dy = abs(p[0] - q[0]), abs(p[1] - q[1])
    return comb(dx + dy, dx)


def normalize_word(word: str) -> str:
    """Canonical word form: digit 4 becomes 0."""
    if not all(c in "01234" for c in word):
        raise ValueError(f"invalid word {word!r}")
    return word.replace("4", "0")


def word_endpoint(word: str, start: LatticePoint = ORIGIN) -> LatticePoint:
    x, y = start
    for c in normalize_word(word):
        dx, dy = DISPLACEMENTS[int(c)]
        x += dx
        y += dy
    return (x, y)


def is_geodesic_word(word: str) -> bool:
    """True iff the word never backtracks: at most one horizontal and one
    vertical digit occur, i.e. its length equals the metric it spans."""
    word = normalize_word(word)
    digits = set(word)
    return not ({"0", "2"} <= digits or {"1", "3"} <= digits)


def enumerate_geodesics(p: LatticePoint, q: LatticePoint,
                        limit: Optional[int] = None) -> list[str]:
    """Distinct geodesic words from p to q in lexicographic digit order."""
    out: list[str] = []
    for w in iter_geodesics(p, q):
        if limit is not None and len(out) >= limit:
            break
        out.append(w)
    return out


def iter_geodesics(p: LatticePoint, q: LatticePoint) -> Iterator[str]:
    hdig, nh, vdig, nv = _axis_digits(q[0] - p[0], q[1] - p[1])
    n = nh + nv
    if n == 0:
        yield ""
        return
    small, nsmall = (hdig, nh) if hdig < vdig else (vdig, nv)
    big = vdig if small == hdig else hdig
    # placing the smaller digit at lexicographically increasing position
    # tuples enumerates the words themselves in lexicographic order
    for positions in combinations(range(n), nsmall):
        chars = [big] * n
        for i in positions:
            chars[i] = small
        yield "".join(chars)


def generating_set_lipschitz(S: GeneratingSet, S2: GeneratingSet,
                             radius_cap: int = DEFAULT_GENERATION_RADIUS
                             ) -> tuple[int, int]:
    """Bi-Lipschitz constants between two word metrics.

    Returns (m, n): m bounds d_{S2} by m*d_S, and n bounds d_S by n*d_{S2},
    where m is the farthest any S-generator sits from the identity in the
    S2-metric and vice versa.
    """
    m = 0
    for s in S.vectors:
        d = bfs_metric(S2, ORIGIN, s, radius_cap)
        if d is None:
            raise BallExceeded(f"generator {s} outside radius {radius_cap} in S2")
        m = max(m, d)
    n = 0
    for s2 in S2.vectors:
        d = bfs_metric(S, ORIGIN, s2, radius_cap)
        if d is None:
            raise BallExceeded(f"generator {s2} outside radius {radius_cap} in S")
        n = max(n, d)
    return m, n
