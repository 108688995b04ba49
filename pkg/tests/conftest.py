"""Shared seeded generators for rays and polylines.

These build inputs only through public constructors, so the tests can use
them as an independent exercise of the validation layer.
"""

from __future__ import annotations

import random
from fractions import Fraction

from gridrays import rays
from gridrays.ell1 import Polyline
from gridrays.rays import WINDOW_DIGITS, RayCode, periodic_ray


def make_periodic_ray(rng: random.Random) -> RayCode:
    """A random valid eventually periodic ray."""
    w = rng.randrange(4)
    alphabet = list(set(WINDOW_DIGITS[w]))
    while True:
        pre = [rng.choice(alphabet) for _ in range(rng.randrange(0, 5))]
        per = [rng.choice(alphabet) for _ in range(rng.randrange(1, 5))]
        ray = periodic_ray(pre, per)
        if rays.validate(ray):
            return ray


def make_same_window_pair(rng: random.Random) -> tuple[RayCode, RayCode]:
    """Two valid rays sharing a quadrant window (splice-compatible)."""
    while True:
        f = make_periodic_ray(rng)
        g = make_periodic_ray(rng)
        if rays.digit_windows(f.realized_digits()) & \
                rays.digit_windows(g.realized_digits()):
            return f, g


def _rand_frac(rng: random.Random, lo: int, hi: int) -> Fraction:
    den = rng.choice((1, 2, 3, 4, 8))
    return Fraction(rng.randint(lo * den, hi * den), den)


def make_monotone_polyline(rng: random.Random, with_direction: bool = False
                           ) -> Polyline:
    """A geodesic polyline from the origin into a random closed quadrant."""
    sx = rng.choice((1, -1))
    sy = rng.choice((1, -1))
    x = y = Fraction(0)
    verts = [(x, y)]
    for _ in range(rng.randrange(1, 6)):
        dx = _rand_frac(rng, 0, 3)
        dy = _rand_frac(rng, 0, 3)
        if dx == 0 and dy == 0:
            dx = Fraction(1)
        x += sx * dx
        y += sy * dy
        verts.append((x, y))
    direction = None
    if with_direction:
        direction = (sx * rng.randint(0, 3), sy * rng.randint(0, 3))
        if direction == (0, 0):
            direction = (sx, 0)
    return Polyline(verts, direction)


def make_backtracking_polyline(rng: random.Random
                               ) -> tuple[Polyline, Fraction]:
    """A path that enters an open quadrant and then retreats.

    Returns the path and the parameter at which the forbidden move begins.
    """
    sx = rng.choice((1, -1))
    sy = rng.choice((1, -1))
    x = y = Fraction(0)
    verts = [(x, y)]
    # move strictly inside the quadrant so commitment is unambiguous
    x += sx * _rand_frac(rng, 1, 3)
    y += sy * _rand_frac(rng, 1, 3)
    verts.append((x, y))
    for _ in range(rng.randrange(0, 3)):
        x += sx * _rand_frac(rng, 0, 2)
        y += sy * _rand_frac(rng, 0, 2)
        if (x, y) != verts[-1]:
            verts.append((x, y))
    t_violation = sum(abs(b[0] - a[0]) + abs(b[1] - a[1])
                      for a, b in zip(verts, verts[1:]))
    # the retreat: move against the committed quadrant
    if rng.random() < 0.5:
        bad = (x - sx * _rand_frac(rng, 1, 2), y)
    else:
        bad = (x, y - sy * _rand_frac(rng, 1, 2))
    verts.append(bad)
    return Polyline(verts), Fraction(t_violation)
