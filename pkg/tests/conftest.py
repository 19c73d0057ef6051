"""Shared fixtures: named posets, rings, random generators, and the
exhaustive corpus of connected posets on at most five elements."""

from fractions import Fraction
from itertools import combinations, permutations

import pytest

from incalg.poset import Preorder, build_preorder
from incalg.rings import RingElem, parse_ring


@pytest.fixture(scope="session")
def QQ():
    return parse_ring("Q")


@pytest.fixture(scope="session")
def F5():
    return parse_ring("Zmod:5")


@pytest.fixture(scope="session")
def F7():
    return parse_ring("Zmod:7")


@pytest.fixture(scope="session")
def Z12():
    return parse_ring("Zmod:12")


@pytest.fixture(scope="session")
def M2Q():
    return parse_ring("Mat:2:Q")


@pytest.fixture
def chain3():
    return build_preorder(3, [(0, 1), (1, 2)])


@pytest.fixture
def square():
    # the crown on four points: 0, 1 below 2, 3, no other relations
    return build_preorder(4, [(0, 2), (0, 3), (1, 2), (1, 3)])


@pytest.fixture
def diamond():
    return build_preorder(4, [(0, 1), (0, 2), (1, 3), (2, 3)])


@pytest.fixture
def antichain3():
    return build_preorder(3, [])


@pytest.fixture
def preorder_with_class():
    # 0 ~ 1 (mutually comparable) below 2
    return build_preorder(3, [(0, 1), (1, 0), (1, 2)])


def _connected_posets(n):
    """All connected posets on n labeled-by-linear-extension elements,
    one representative per isomorphism class."""
    allpairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    seen, out = set(), []
    for r in range(len(allpairs) + 1):
        for sub in combinations(allpairs, r):
            s = set(sub)
            if not all((a, c) in s
                       for (a, b) in s for (b2, c) in s if b2 == b):
                continue
            adj = {i: set() for i in range(n)}
            for a, b in s:
                adj[a].add(b)
                adj[b].add(a)
            reach, stack = {0}, [0]
            while stack:
                v = stack.pop()
                for w in adj[v]:
                    if w not in reach:
                        reach.add(w)
                        stack.append(w)
            if len(reach) != n:
                continue
            key = min(tuple(sorted((perm[a], perm[b]) for a, b in s))
                      for perm in permutations(range(n)))
            if key not in seen:
                seen.add(key)
                out.append(build_preorder(n, sub))
    return out


@pytest.fixture(scope="session")
def corpus():
    """Connected posets on <= 5 elements, exhaustive up to isomorphism."""
    posets = []
    for n in range(1, 6):
        posets.extend(_connected_posets(n))
    return posets


def random_preorder(rng, n):
    pairs = [(rng.randrange(n), rng.randrange(n))
             for _ in range(rng.randrange(2 * n))]
    return build_preorder(n, pairs)


def random_scalar(rng, spec, nonzero=False):
    if spec.kind == "Q":
        num = rng.randrange(1, 7) if nonzero else rng.randrange(-6, 7)
        return RingElem.scalar(spec, Fraction(num, rng.randrange(1, 5)))
    lo = 1 if nonzero else 0
    return RingElem.scalar(spec, rng.randrange(lo, spec.modulus))


def random_invertible(rng, p: Preorder, spec):
    """Random function whose class-diagonal blocks are triangular with unit
    diagonal, hence invertible."""
    from incalg.poset import quotient
    q = quotient(p)
    vals = {}
    for (s, t) in p.pairs():
        if s == t:
            vals[(s, t)] = random_scalar(rng, spec, nonzero=True)
        elif q.class_of[s] == q.class_of[t]:
            if s < t:  # keep the block triangular in member order
                vals[(s, t)] = random_scalar(rng, spec)
        else:
            vals[(s, t)] = random_scalar(rng, spec)
    from incalg.algebra import IncFunction
    return IncFunction.make(p, spec, vals)


def random_function(rng, p: Preorder, spec):
    from incalg.algebra import IncFunction
    vals = {(s, t): random_scalar(rng, spec) for (s, t) in p.pairs()}
    return IncFunction.make(p, spec, vals)
