"""Geodesic rays of the grid as digit streams.

A ray from the origin is an infinite digit string over {0,1,2,3,4}
(east, north, west, south, east) whose digits all lie in {m, m+1} for the
realized minimum digit m; such strings are exactly the unit-speed
geodesic rays. Representable rays have a finite preamble followed by
either a periodic tail or a Sturmian tail generated by digitizing a
straight line of exact (possibly quadratic-irrational) direction. The
class is closed under the splice operation, which is the engine of the
trivial-topology demonstration.

Literal grammar: ``"<preamble>(<period>)"`` for eventually periodic rays,
e.g. ``"01(0011)"`` or ``"(0)"`` for the east ray; ``"slope:<p>/<q>@<k>"``
for a digitized direction with quadrant index k in 1..4.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, lcm
from typing import Optional, Union

from .exactnum import Exact, exact_ceil, exact_sign, is_rational
from .lattice import DISPLACEMENTS, ORIGIN, LatticePoint, word_metric

#: (horizontal digit, vertical digit) for each quadrant window w, whose
#: rays use digits {w, w+1}
WINDOW_DIGITS: dict[int, tuple[int, int]] = {
    0: (0, 1),   # east / north
    1: (2, 1),   # west / north
    2: (2, 3),   # west / south
    3: (4, 3),   # east / south
}

DIVERGENCE_PROBE = 10  # bound used when reporting a divergence witness


class InvalidRay(ValueError):
    """A ray code failed validation."""


class QuadrantMismatch(ValueError):
    """Splice operands do not share a quadrant window."""


def _digit_matches_window(digit: int, w: int) -> bool:
    if digit in (0, 4):
        return w in (0, 3)  # east digits fit the {0,1} and {3,4} windows
    return digit in (w, w + 1)


def digit_windows(digits) -> set[int]:
    """Quadrant windows consistent with every digit of the iterable."""
    ws = {0, 1, 2, 3}
    for d in digits:
        ws = {w for w in ws if _digit_matches_window(d, w)}
        if not ws:
            break
    return ws


def _realize(digit: int, w: int) -> int:
    """Write an east digit as 0 or 4 to fit window w."""
    if digit in (0, 4):
        return 4 if w == 3 else 0
    return digit


# ---------------------------------------------------------------------------
# tails


@dataclass(frozen=True)
class PeriodicTail:
    period: tuple[int, ...]

    def __post_init__(self):
        if not self.period:
            raise ValueError("empty period")


class SturmianTail:
    """Digit stream of the staircase tracking a straight line.

    The line leaves the origin with (reflected, nonnegative) speeds
    ``ax`` horizontally and ``ay`` vertically, with ``ay/ax`` irrational.
    Digits are read off grid-line crossings in order, horizontal before
    vertical on exact lattice hits; ``offset`` digits of the stream have
    already been consumed (splices advance it). ``window`` fixes the
    quadrant and hence the concrete digit pair.
    """

    __slots__ = ("ux", "uy", "window", "offset", "_stream")

    def __init__(self, ax: Exact, ay: Exact, window: int, offset: int = 0):
        if window not in WINDOW_DIGITS:
            raise ValueError("window must be in 0..3")
        if offset < 0:
            raise ValueError("offset must be nonnegative")
        if exact_sign(ax) <= 0 or exact_sign(ay) <= 0:
            raise ValueError("Sturmian directions must have positive components")
        ratio = ay / ax
        if is_rational(ratio):
            raise ValueError("rational direction; use a periodic tail")
        total = ax + ay
        self.ux = ax / total  # l1-normalized direction magnitudes
        self.uy = ay / total
        self.window = window
        self.offset = offset
        self._stream: list[bool] = []  # True = horizontal step

    def _stream_step(self, n: int) -> bool:
        """nth step (1-based) of the un-offset stream; True if horizontal."""
        stream = self._stream
        if n > len(stream):
            i = 1 + sum(stream)
            j = 1 + len(stream) - (i - 1)
            while len(stream) < n:
                # next horizontal event at i/ux vs vertical at j/uy
                if i * self.uy <= j * self.ux:
                    stream.append(True)
                    i += 1
                else:
                    stream.append(False)
                    j += 1
        return stream[n - 1]

    def digit(self, k: int) -> int:
        h, v = WINDOW_DIGITS[self.window]
        return h if self._stream_step(self.offset + k) else v

    def advanced(self, steps: int) -> "SturmianTail":
        t = SturmianTail.__new__(SturmianTail)
        t.ux, t.uy, t.window = self.ux, self.uy, self.window
        t.offset = self.offset + steps
        t._stream = self._stream  # shared prefix cache
        return t

    def __eq__(self, other):
        return (isinstance(other, SturmianTail)
                and (self.ux, self.uy) == (other.ux, other.uy)
                and (self.window, self.offset) == (other.window, other.offset))

    def __hash__(self):
        return hash((self.ux, self.uy, self.window, self.offset))

    def __repr__(self):
        return (f"SturmianTail(ux={self.ux!r}, uy={self.uy!r}, "
                f"window={self.window}, offset={self.offset})")


Tail = Union[PeriodicTail, SturmianTail]


# ---------------------------------------------------------------------------
# ray codes


class RayCode:
    """A finite preamble plus an infinite tail of geodesic digits.

    Stores exactly what it is given; use :func:`validate` to check the
    canonical-form rules and :meth:`canonical` to normalize. Operations in
    this module always emit canonical codes.
    """

    __slots__ = ("preamble", "tail", "_points")

    def __init__(self, preamble, tail: Tail):
        self.preamble = tuple(int(d) for d in preamble)
        for d in self.preamble:
            if d not in DISPLACEMENTS:
                raise ValueError(f"invalid digit {d}")
        if isinstance(tail, PeriodicTail):
            for d in tail.period:
                if d not in DISPLACEMENTS:
                    raise ValueError(f"invalid digit {d}")
        elif not isinstance(tail, SturmianTail):
            raise TypeError("tail must be PeriodicTail or SturmianTail")
        self.tail = tail
        self._points: list[LatticePoint] = [ORIGIN]

    # -- digits ----------------------------------------------------------

    def digit_at(self, n: int) -> int:
        """The nth digit, 1-indexed."""
        if n < 1:
            raise ValueError("digit positions start at 1")
        pre = self.preamble
        if n <= len(pre):
            return pre[n - 1]
        k = n - len(pre)
        if isinstance(self.tail, PeriodicTail):
            per = self.tail.period
            return per[(k - 1) % len(per)]
        return self.tail.digit(k)

    def digits(self, n: int) -> tuple[int, ...]:
        return tuple(self.digit_at(i) for i in range(1, n + 1))

    def realized_digits(self) -> set[int]:
        s = set(self.preamble)
        if isinstance(self.tail, PeriodicTail):
            s |= set(self.tail.period)
        else:
            s |= set(WINDOW_DIGITS[self.tail.window])
        return s

    def m(self) -> int:
        """The minimum digit occurring in the stream."""
        return min(self.realized_digits())

    # -- geometry --------------------------------------------------------

    def point_at(self, t: int) -> LatticePoint:
        """Position after t unit-speed steps; t=0 is the origin."""
        if t < 0:
            raise ValueError("time must be nonnegative")
        pts = self._points
        while len(pts) <= t:
            x, y = pts[-1]
            dx, dy = DISPLACEMENTS[self.digit_at(len(pts))]
            pts.append((x + dx, y + dy))
        return pts[t]

    def points(self, t: int) -> list[LatticePoint]:
        self.point_at(t)
        return self._points[: t + 1]

    def direction(self) -> tuple[Exact, Exact]:
        """Limiting l1-normalized direction vector, exact."""
        if isinstance(self.tail, PeriodicTail):
            per = self.tail.period
            dx = sum(DISPLACEMENTS[d][0] for d in per)
            dy = sum(DISPLACEMENTS[d][1] for d in per)
            return Fraction(dx, len(per)), Fraction(dy, len(per))
        t = self.tail
        h, v = WINDOW_DIGITS[t.window]
        sx = DISPLACEMENTS[h][0]
        sy = DISPLACEMENTS[v][1]
        return sx * t.ux, sy * t.uy

    # -- canonical form --------------------------------------------------

    def canonical(self) -> "RayCode":
        if isinstance(self.tail, SturmianTail):
            w = self.tail.window
            pre = tuple(_realize(d, w) for d in self.preamble)
            if pre == self.preamble:
                return self
            return RayCode(pre, self.tail)
        pre, per = _canonical_periodic(self.preamble, self.tail.period)
        if pre == self.preamble and per == self.tail.period:
            return self
        return RayCode(pre, PeriodicTail(per))

    def literal(self) -> str:
        if isinstance(self.tail, PeriodicTail):
            pre = "".join(map(str, self.preamble))
            per = "".join(map(str, self.tail.period))
            return f"{pre}({per})"
        t = self.tail
        pre = "".join(map(str, self.preamble))
        head = f"{pre}+" if pre else ""
        off = f"+{t.offset}" if t.offset else ""
        return f"{head}slope[{t.ux}:{t.uy}]@{t.window + 1}{off}"

    def __eq__(self, other):
        return (isinstance(other, RayCode)
                and self.preamble == other.preamble
                and self.tail == other.tail)

    def __hash__(self):
        return hash((self.preamble, self.tail))

    def __repr__(self):
        return f"RayCode({self.literal()!r})"


def _primitive(per: tuple[int, ...]) -> tuple[int, ...]:
    n = len(per)
    for k in range(1, n):
        if n % k == 0 and per == per[:k] * (n // k):
            return per[:k]
    return per


def _canonical_periodic(pre, per) -> tuple[tuple[int, ...], tuple[int, ...]]:
    pre, per = tuple(pre), tuple(per)
    realized = set(pre) | set(per)
    if 3 not in realized:
        pre = tuple(0 if d == 4 else d for d in pre)
        per = tuple(0 if d == 4 else d for d in per)
    if set(pre) | set(per) <= {0, 4}:
        return (), (0,)  # the east ray
    per = _primitive(per)
    pre = list(pre)
    per = list(per)
    while pre and pre[-1] == per[-1]:
        pre.pop()
        per = [per[-1]] + per[:-1]
    return tuple(pre), tuple(per)


# -- constructors -----------------------------------------------------------


def periodic_ray(preamble, period) -> RayCode:
    """Canonical eventually periodic ray from digit sequences."""
    pre, per = _canonical_periodic(tuple(int(d) for d in preamble),
                                   tuple(int(d) for d in period))
    return RayCode(pre, PeriodicTail(per))


def east_ray() -> RayCode:
    return RayCode((), PeriodicTail((0,)))


def axis_ray(digit: int) -> RayCode:
    """The axis ray repeating one digit, in canonical form."""
    if digit in (0, 4):
        return east_ray()
    return RayCode((), PeriodicTail((int(digit),)))


_LITERAL = re.compile(r"^([0-4]*)\(([0-4]+)\)$")
_SLOPE = re.compile(r"^slope:(\d+)/(\d+)@([1-4])$")


def parse_ray(text: str) -> RayCode:
    """Parse a ray literal, keeping exactly the digits given (not canonicalized)."""
    text = text.strip()
    m = _LITERAL.match(text)
    if m:
        pre = tuple(int(c) for c in m.group(1))
        per = tuple(int(c) for c in m.group(2))
        return RayCode(pre, PeriodicTail(per))
    m = _SLOPE.match(text)
    if m:
        p, q, quad = int(m.group(1)), int(m.group(2)), int(m.group(3))
        w = quad - 1
        h, v = WINDOW_DIGITS[w]
        sx = DISPLACEMENTS[h][0]
        sy = DISPLACEMENTS[v][1]
        return digitize(sx * p, sy * q)
    raise ValueError(f"cannot parse ray literal {text!r}")


# ---------------------------------------------------------------------------
# validation


def validate(ray: RayCode, horizon: int = 64) -> bool:
    """Check the quadrant digit constraint and the canonical-form rules."""
    realized = ray.realized_digits()
    if not digit_windows(realized):
        return False
    if 4 in realized and 3 not in realized:
        return False  # east digits must be written 0 outside quadrant IV
    if 0 in realized and 3 in realized:
        return False  # east digits must be written 4 inside quadrant IV
    if isinstance(ray.tail, PeriodicTail):
        pre, per = _canonical_periodic(ray.preamble, ray.tail.period)
        if (pre, per) != (ray.preamble, ray.tail.period):
            return False
    else:
        t = ray.tail
        if not digit_windows(realized | set(WINDOW_DIGITS[t.window])):
            return False
    # geodesic spot check (implied by the window constraint; kept cheap)
    for t, p in enumerate(ray.points(min(horizon, 64))):
        if word_metric(ORIGIN, p) != t:
            return False
    return True


def _require_valid(ray: RayCode) -> None:
    if not validate(ray):
        raise InvalidRay(f"invalid ray code {ray.literal()!r}")


# ---------------------------------------------------------------------------
# the B and N maps


def b_map(preamble, period) -> Fraction:
    """Value of an eventually periodic binary expansion 0.d1 d2 d3 ...

    Computed exactly via the geometric series over the period.
    """
    pre = tuple(int(d) for d in preamble)
    per = tuple(int(d) for d in period)
    if not per:
        raise ValueError("empty period")
    if any(d not in (0, 1) for d in pre + per):
        raise ValueError("binary digits required")
    p, q = len(pre), len(per)
    pval = sum(d << (p - 1 - i) for i, d in enumerate(pre))
    qval = sum(d << (q - 1 - i) for i, d in enumerate(per))
    return Fraction(pval, 1 << p) + Fraction(qval, ((1 << q) - 1) << p)


@dataclass(frozen=True)
class Enclosure:
    """A certified rational interval [lo, hi] containing a real value."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("empty enclosure")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def midpoint_float(self) -> float:
        return float((self.lo + self.hi) / 2)


def n_map(ray: RayCode, width: Fraction = Fraction(1, 1 << 64)
          ) -> Union[Fraction, Enclosure]:
    """The boundary-point value m + B(digits - m) in [0, 4).

    Exact for periodic tails; a certified enclosure of at most the given
    width for Sturmian tails.
    """
    _require_valid(ray)
    m = ray.m()
    if isinstance(ray.tail, PeriodicTail):
        pre = tuple(d - m for d in ray.preamble)
        per = tuple(d - m for d in ray.tail.period)
        return m + b_map(pre, per)
    k = len(ray.preamble)
    while Fraction(1, 1 << k) > width:
        k += 1
    bits = tuple(d - m for d in ray.digits(k))
    lo = Fraction(sum(b << (k - 1 - i) for i, b in enumerate(bits)), 1 << k)
    return Enclosure(m + lo, m + lo + Fraction(1, 1 << k))


# ---------------------------------------------------------------------------
# digitization


def _rational_period(p: int, q: int) -> tuple[int, ...]:
    """Reflected staircase digits (horizontal=0, vertical=1) of direction
    (p, q), p, q > 0 coprime; one full period of p+q steps."""
    out = []
    i = j = 1
    while len(out) < p + q:
        if i * q <= j * p:  # i/p <= j/q: horizontal crossing first (ties horizontal)
            out.append(0)
            i += 1
        else:
            out.append(1)
            j += 1
    return tuple(out)


def _window_of_signs(sx: int, sy: int) -> int:
    if sx >= 0 and sy >= 0:
        return 0
    if sx < 0 <= sy:
        return 1
    if sx < 0 and sy < 0:
        return 2
    return 3


def digitize(dx: Exact, dy: Exact) -> RayCode:
    """The staircase ray tracking the straight line of direction (dx, dy).

    Grid-line crossings are emitted in order along the line, horizontal
    step before vertical step on exact lattice hits. Rational directions
    yield a periodic code with |p|+|q| digits per period (before
    canonicalization); irrational quadratic directions yield a Sturmian
    tail.
    """
    sgx, sgy = exact_sign(dx), exact_sign(dy)
    if sgx == 0 and sgy == 0:
        raise ValueError("zero direction")
    w = _window_of_signs(sgx, sgy)
    h, v = WINDOW_DIGITS[w]
    ax, ay = abs(dx), abs(dy)
    if sgy == 0:
        return axis_ray(h)
    if sgx == 0:
        return axis_ray(v)
    if is_rational(ax):
        ax = Fraction(ax)
    if is_rational(ay):
        ay = Fraction(ay)
    ratio = ay / ax
    if is_rational(ratio):
        ratio = Fraction(ratio)
        p, q = ratio.denominator, ratio.numerator
        if p + q > 100_000:
            raise ValueError(
                f"rational direction {q}/{p} has period {p + q}; "
                "reduce the fraction or pass an exact irrational")
        steps = _rational_period(p, q)
        per = tuple(h if s == 0 else v for s in steps)
        return periodic_ray((), per)
    return RayCode((), SturmianTail(ax, ay, w))


def direction_of(ray: RayCode) -> tuple[Exact, Exact]:
    """l1-normalized limiting direction of a valid ray."""
    _require_valid(ray)
    return ray.direction()


# ---------------------------------------------------------------------------
# asymptotic classification


@dataclass(frozen=True)
class Asymptotic:
    """Certified verdict: d(f(t), g(t)) <= bound for all t."""

    bound: int
    attained: bool = False


@dataclass(frozen=True)
class Divergent:
    """Witness that distances exceed DIVERGENCE_PROBE (they grow linearly)."""

    witness_t: int
    distance: int


@dataclass(frozen=True)
class Unknown:
    horizon: int


Verdict = Union[Asymptotic, Divergent, Unknown]


def divergence_time(f: RayCode, g: RayCode, M: int,
                    horizon: int) -> Optional[int]:
    """Smallest t <= horizon with d(f(t), g(t)) > M, or None."""
    _require_valid(f)
    _require_valid(g)
    pf = f.points(horizon)
    pg = g.points(horizon)
    for t in range(horizon + 1):
        if word_metric(pf[t], pg[t]) > M:
            return t
    return None


def _divergence_witness(f: RayCode, g: RayCode) -> tuple[int, int]:
    horizon = 64
    while True:
        t = divergence_time(f, g, DIVERGENCE_PROBE, horizon)
        if t is not None:
            return t, word_metric(f.point_at(t), g.point_at(t))
        horizon *= 4


def _sturmian_line_bound(ray: RayCode) -> Exact:
    """Exact c with |ray(t) - t*u|_1 <= c for all t, u the direction."""
    t = ray.tail
    ux, uy = ray.direction()
    p = len(ray.preamble)
    o = t.offset
    # anchor error: ray(t) = A + S(o+t-p) - S(o) with S(n) within 2 of n*u
    ax_, ay_ = ray.point_at(p)
    h, v = WINDOW_DIGITS[t.window]
    sx = DISPLACEMENTS[h][0]
    sy = DISPLACEMENTS[v][1]
    # S(o): the pure stream's lattice point after o steps
    hsteps = sum(1 for n in range(1, o + 1) if t._stream_step(n))
    sox, soy = sx * hsteps, sy * (o - hsteps)
    cx = ax_ - sox + (o - p) * ux
    cy = ay_ - soy + (o - p) * uy
    bound = abs(cx) + abs(cy) + 2
    for tt in range(p + 1):
        x, y = ray.point_at(tt)
        dev = abs(x - tt * ux) + abs(y - tt * uy)
        if dev > bound:
            bound = dev
    return bound


def are_asymptotic(f: RayCode, g: RayCode) -> Verdict:
    """Classify a pair of valid rays as asymptotic or divergent.

    Equal-direction periodic pairs get the exact supremum of the
    (eventually periodic) distance sequence. Equal-direction Sturmian
    pairs get the certified bound from each staircase's bounded deviation
    from the common line. Distinct directions diverge linearly; a witness
    time for distance > DIVERGENCE_PROBE is reported.
    """
    _require_valid(f)
    _require_valid(g)
    if f.direction() != g.direction():
        t, d = _divergence_witness(f, g)
        return Divergent(t, d)
    if isinstance(f.tail, PeriodicTail) and isinstance(g.tail, PeriodicTail):
        transient = max(len(f.preamble), len(g.preamble))
        L = lcm(len(f.tail.period), len(g.tail.period))
        horizon = transient + L
        pf = f.points(horizon)
        pg = g.points(horizon)
        M = max(word_metric(pf[t], pg[t]) for t in range(horizon + 1))
        return Asymptotic(M, attained=True)
    if isinstance(f.tail, SturmianTail) and isinstance(g.tail, SturmianTail):
        c = _sturmian_line_bound(f) + _sturmian_line_bound(g)
        return Asymptotic(exact_ceil(c), attained=False)
    # mixed periodic/Sturmian with equal direction cannot occur: equal
    # directions force equal rationality, and rational Sturmian input is
    # rejected at construction
    raise AssertionError("unreachable: mixed tails with equal direction")


# ---------------------------------------------------------------------------
# splice and the basis balls


def splice(f: RayCode, g: RayCode, s: int) -> RayCode:
    """The ray following f for s steps and g's displacements afterwards.

    Digits 1..s come from f, digits s+1.. from g; both rays must share a
    quadrant window. The result is canonical, agrees with f up to time s,
    and is asymptotic to g.
    """
    if s < 0:
        raise ValueError("splice time must be nonnegative")
    _require_valid(f)
    _require_valid(g)
    prefix = f.digits(s)
    common = digit_windows(prefix) & digit_windows(g.realized_digits())
    if not common:
        raise QuadrantMismatch(
            f"{f.literal()!r} and {g.literal()!r} do not share a quadrant window"
        )
    if isinstance(g.tail, PeriodicTail):
        w = min(common)
        pre = [_realize(d, w) for d in prefix]
        gp = len(g.preamble)
        per = [_realize(d, w) for d in g.tail.period]
        if s < gp:
            pre += [_realize(d, w) for d in g.preamble[s:]]
        else:
            shift = (s - gp) % len(per)
            per = per[shift:] + per[:shift]
        return periodic_ray(pre, per)
    w = g.tail.window
    pre = [_realize(d, w) for d in prefix]
    gp = len(g.preamble)
    if s < gp:
        pre += [_realize(d, w) for d in g.preamble[s:]]
        tail = g.tail
    else:
        tail = g.tail.advanced(s - gp)
    return RayCode(tuple(pre), tail).canonical()


@dataclass(frozen=True)
class BallQuery:
    """A basis neighborhood: compact window [a, b] and radius epsilon."""

    a: Fraction
    b: Fraction
    epsilon: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        object.__setattr__(self, "epsilon", Fraction(self.epsilon))
        if self.a < 0 or self.b < self.a or self.epsilon <= 0:
            raise ValueError("need 0 <= a <= b and epsilon > 0")


def ball_contains(center: RayCode, candidate: RayCode, q: BallQuery) -> bool:
    """Whether the candidate ray lies in the basis ball around the center.

    Distances are evaluated at the integer times inside [a, b]; between
    integers the graph distance is piecewise linear with breakpoints at
    integers, so this generates the same topology.
    """
    _require_valid(center)
    _require_valid(candidate)
    lo, hi = ceil(q.a), floor(q.b)
    for t in range(lo, hi + 1):
        if word_metric(center.point_at(t), candidate.point_at(t)) >= q.epsilon:
            return False
    return True


# ---------------------------------------------------------------------------
# the trivial-topology construction


@dataclass(frozen=True)
class ChainLink:
    center: RayCode
    axis: RayCode
    spliced: RayCode
    contained: bool
    verdict: Verdict


@dataclass(frozen=True)
class TopologyDemo:
    f: RayCode
    g: RayCode
    query: BallQuery
    s: int
    g_s: RayCode
    contained: bool
    verdict: Verdict
    chain: tuple[ChainLink, ...]

    @property
    def ok(self) -> bool:
        return (self.contained
                and isinstance(self.verdict, Asymptotic)
                and all(link.contained
                        and isinstance(link.verdict, Asymptotic)
                        for link in self.chain))


def trivial_topology_demo(f: RayCode, g: RayCode, q: BallQuery) -> TopologyDemo:
    """Run the splice construction showing every ray meets every basis ball.

    Splices g into the ball around f at s = ceil(b), then hops across all
    four quadrant axis rays, splicing each into the previous neighborhood.
    """
    s = ceil(q.b)
    g_s = splice(f, g, s)
    contained = ball_contains(f, g_s, q)
    verdict = are_asymptotic(g_s, g)
    chain = []
    current = f
    m = f.m()
    for k in range(1, 5):
        axis = axis_ray((m + k) % 4)
        spliced = splice(current, axis, s)
        chain.append(ChainLink(
            center=current,
            axis=axis,
            spliced=spliced,
            contained=ball_contains(current, spliced, q),
            verdict=are_asymptotic(spliced, axis),
        ))
        current = axis
    return TopologyDemo(f=f, g=g, query=q, s=s, g_s=g_s,
                        contained=contained, verdict=verdict,
                        chain=tuple(chain))
