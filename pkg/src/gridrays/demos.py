"""Self-checking demonstration scenarios exposed by the CLI.

Each demo returns a report whose assertions were evaluated exactly; the
CLI turns a failed assertion into a nonzero exit code.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import mpmath

from . import rays
from .rays import (BallQuery, Enclosure, RayCode, n_map, parse_ray,
                   trivial_topology_demo, validate)

PRECISION_ENV = "LATTICE_HORIZON_PRECISION"
DEFAULT_PRECISION_BITS = 64


@dataclass(frozen=True)
class Assertion:
    name: str
    expected: str
    actual: str
    passed: bool


@dataclass
class DemoReport:
    scenario: str
    inputs: dict
    assertions: list[Assertion] = field(default_factory=list)
    artifacts: list[str] = field(default_factory=list)

    def check(self, name: str, expected, actual) -> None:
        self.assertions.append(
            Assertion(name, str(expected), str(actual), expected == actual))

    @property
    def ok(self) -> bool:
        return all(a.passed for a in self.assertions)


def _mpf_to_fraction(x) -> Fraction:
    sign, man, exp, _ = mpmath.mpf(x)._mpf_
    val = Fraction(-man if sign else man)
    if exp >= 0:
        return val * (1 << exp)
    return val / (1 << -exp)


def _iv_to_enclosure(ival) -> Enclosure:
    return Enclosure(_mpf_to_fraction(ival.a), _mpf_to_fraction(ival.b))


def precision_bits() -> int:
    raw = os.environ.get(PRECISION_ENV)
    if raw:
        bits = int(raw)
        if bits < 8:
            raise ValueError(f"{PRECISION_ENV} must be at least 8")
        return bits
    return DEFAULT_PRECISION_BITS


@dataclass(frozen=True)
class ConeLengths:
    """The two candidate extensions past the cone point: the segment pair
    through it (length 2*sqrt(26)*eps) versus the horizontal circle arc
    around it (length pi*eps)."""

    epsilon: Fraction
    through_cone: Enclosure
    around_cone: Enclosure
    extendable: bool


def cone_lengths(epsilon: Fraction,
                 bits: Optional[int] = None) -> ConeLengths:
    """Certified enclosures showing the cone geodesic cannot be extended."""
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    bits = bits if bits is not None else precision_bits()
    iv = mpmath.iv
    old = iv.prec
    try:
        iv.prec = bits + 16
        eps_iv = iv.mpf(epsilon.numerator) / iv.mpf(epsilon.denominator)
        through = _iv_to_enclosure(2 * iv.sqrt(26) * eps_iv)
        around = _iv_to_enclosure(iv.pi * eps_iv)
    finally:
        iv.prec = old
    if through.lo > around.hi:
        extendable = False
    elif through.hi < around.lo:
        extendable = True
    else:
        raise ValueError("enclosures overlap; raise the precision")
    return ConeLengths(epsilon, through, around, extendable)


def demo_cone(epsilon: Fraction, bits: Optional[int] = None) -> DemoReport:
    result = cone_lengths(epsilon, bits)
    report = DemoReport("cone", {"epsilon": str(epsilon)})
    report.check("through_longer_than_around", True,
                 result.through_cone.lo > result.around_cone.hi)
    report.check("extendable", False, result.extendable)
    ratio_lo = result.through_cone.lo / result.around_cone.hi
    report.check("ratio_exceeds_3", True, ratio_lo > 3)
    report.inputs["through"] = [str(result.through_cone.lo),
                                str(result.through_cone.hi)]
    report.inputs["around"] = [str(result.around_cone.lo),
                               str(result.around_cone.hi)]
    return report


@dataclass(frozen=True)
class CardinalityRow:
    literal: str
    m: int
    value: str  # exact rational, or an interval for Sturmian tails
    collides_with: Optional[str] = None


def demo_cardinality(literals: Sequence[str]) -> tuple[DemoReport, list[CardinalityRow]]:
    """Tabulate the boundary-value map over ray literals, flagging the
    dyadic-twin collisions."""
    report = DemoReport("cardinality", {"rays": list(literals)})
    rows: list[CardinalityRow] = []
    values: dict[Fraction, str] = {}
    for lit in literals:
        ray = parse_ray(lit).canonical()
        if not validate(ray):
            raise rays.InvalidRay(f"invalid ray literal {lit!r}")
        val = n_map(ray)
        if isinstance(val, Enclosure):
            rows.append(CardinalityRow(lit, ray.m(),
                                       f"[{val.lo}, {val.hi}]"))
            continue
        twin = values.get(val)
        rows.append(CardinalityRow(lit, ray.m(), str(val), twin))
        if twin is None:
            values[val] = lit
    report.check("all_values_in_range", True,
                 all(isinstance(r.m, int) and 0 <= r.m <= 3 for r in rows))
    return report, rows


def demo_trivial_topology(f: RayCode, g: RayCode,
                          query: BallQuery) -> tuple[DemoReport, "rays.TopologyDemo"]:
    demo = trivial_topology_demo(f, g, query)
    report = DemoReport("trivial-topology", {
        "f": f.literal(), "g": g.literal(),
        "K": [str(query.a), str(query.b)], "epsilon": str(query.epsilon),
    })
    report.check("g_s_in_ball", True, demo.contained)
    report.check("g_s_asymptotic_to_g", True,
                 isinstance(demo.verdict, rays.Asymptotic))
    for i, link in enumerate(demo.chain):
        report.check(f"chain_{i}_contained", True, link.contained)
        report.check(f"chain_{i}_asymptotic", True,
                     isinstance(link.verdict, rays.Asymptotic))
    axes = {link.axis.literal() for link in demo.chain}
    report.check("chain_covers_four_axes", 4, len(axes))
    return report, demo
