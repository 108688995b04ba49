"""Word metrics, geodesic counting/enumeration, generating sets."""

import itertools
import random
from collections import deque

import pytest
from hypothesis import given, strategies as st

from gridrays import lattice
from gridrays.lattice import (BallExceeded, GeneratingSet, GenerationError,
                              bfs_metric, enumerate_geodesics,
                              generating_set_lipschitz, geodesic_count,
                              is_geodesic_word, iter_geodesics,
                              standard_generators, word_endpoint, word_metric)

coords = st.integers(min_value=-200, max_value=200)
points = st.tuples(coords, coords)


def _oracle_bfs(vectors, start, goal, cap):
    """Plain dict/deque BFS written independently of the library's."""
    seen = {start: 0}
    dq = deque([start])
    while dq:
        p = dq.popleft()
        if p == goal:
            return seen[p]
        if seen[p] >= cap:
            continue
        for vx, vy in vectors:
            for sx, sy in ((1, 1), (-1, -1)):
                q = (p[0] + sx * vx, p[1] + sy * vy)
                if q not in seen:
                    seen[q] = seen[p] + 1
                    dq.append(q)
    return None


@given(points, points, points)
def test_word_metric_axioms(p, q, r):
    assert word_metric(p, q) == word_metric(q, p) >= 0
    assert (word_metric(p, q) == 0) == (p == q)
    assert word_metric(p, r) <= word_metric(p, q) + word_metric(q, r)


@given(points, points, points)
def test_word_metric_translation_invariant(p, q, t):
    p2 = (p[0] + t[0], p[1] + t[1])
    q2 = (q[0] + t[0], q[1] + t[1])
    assert word_metric(p, q) == word_metric(p2, q2)


def test_bfs_metric_standard_matches_l1():
    rng = random.Random(7)
    S = standard_generators()
    for _ in range(50):
        p = (rng.randint(-10, 10), rng.randint(-10, 10))
        q = (rng.randint(-10, 10), rng.randint(-10, 10))
        assert bfs_metric(S, p, q, 64) == word_metric(p, q)


def test_bfs_metric_against_independent_oracle():
    rng = random.Random(11)
    gens = [(1, 0), (1, 1)]
    S = GeneratingSet(gens)
    for _ in range(40):
        q = (rng.randint(-8, 8), rng.randint(-8, 8))
        assert bfs_metric(S, (0, 0), q, 32) == \
            _oracle_bfs(gens, (0, 0), q, 32)


def test_bfs_metric_exceeded_is_none():
    S = standard_generators()
    assert bfs_metric(S, (0, 0), (10, 10), 5) is None


def test_generating_set_rejects_non_generating():
    with pytest.raises(GenerationError):
        GeneratingSet([(2, 0), (0, 2)])


def test_geodesic_count_values():
    assert geodesic_count((0, 0), (3, 3)) == 20  # [PAPER]
    assert geodesic_count((0, 0), (0, 0)) == 1
    assert geodesic_count((0, 0), (5, 0)) == 1
    assert geodesic_count((1, 1), (3, 2)) == 3  # [DERIVED] C(3,2)


def _oracle_geodesics(dx, dy):
    """Brute force: all words over the step alphabet reaching (dx, dy)
    with length |dx|+|dy|."""
    hd = "0" if dx >= 0 else "2"
    vd = "1" if dy >= 0 else "3"
    n = abs(dx) + abs(dy)
    out = set()
    for w in itertools.product(hd + vd, repeat=n):
        word = "".join(w)
        if word_endpoint(word) == (dx, dy):
            out.add(word)
    return sorted(out)


def test_enumeration_matches_brute_force():
    for dx, dy in [(2, 1), (-2, 1), (3, -2), (-1, -3), (0, 2), (2, 0), (0, 0)]:
        got = enumerate_geodesics((0, 0), (dx, dy))
        assert got == _oracle_geodesics(dx, dy)


def test_enumeration_lex_order_and_endpoints():
    words = enumerate_geodesics((1, -1), (4, 2))
    assert words == sorted(words)
    assert len(words) == len(set(words)) == geodesic_count((1, -1), (4, 2))
    for w in words:
        assert is_geodesic_word(w)
        assert word_endpoint(w, (1, -1)) == (4, 2)
        assert len(w) == word_metric((1, -1), (4, 2))


def test_enumeration_limit():
    assert len(enumerate_geodesics((0, 0), (5, 5), limit=7)) == 7


def test_is_geodesic_word():
    assert is_geodesic_word("0011")
    assert is_geodesic_word("")
    assert not is_geodesic_word("02")  # east then west
    assert not is_geodesic_word("13")
    assert is_geodesic_word("04")  # 4 is east again
    assert not is_geodesic_word("42")


def test_generating_set_lipschitz_values():
    S = standard_generators()
    S2 = GeneratingSet([(1, 0), (1, 1)])
    m, n = generating_set_lipschitz(S, S2)
    # both standard generators are one S2-step away... (0,1) = (1,1)-(1,0)
    # needs two; each S2 generator is at most two S-steps from the origin
    assert (m, n) == (2, 2)  # [DERIVED] BFS oracle below confirms
    for s in S.vectors:
        assert _oracle_bfs([(1, 0), (1, 1)], (0, 0), s, 8) <= m
    for s2 in S2.vectors:
        assert word_metric((0, 0), s2) <= n


def test_generating_set_lipschitz_cap():
    S = standard_generators()
    S2 = GeneratingSet([(1, 0), (0, 1), (40, 0)])
    with pytest.raises(BallExceeded):
        generating_set_lipschitz(S2, S, radius_cap=5)


def test_iter_geodesics_lazy():
    it = iter_geodesics((0, 0), (10, 10))
    assert next(it) == "0" * 10 + "1" * 10
