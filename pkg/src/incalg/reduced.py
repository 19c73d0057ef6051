"""Reduced incidence algebras: functions constant on interval types.

Intervals of a finite poset are grouped either by poset isomorphism (the
standard reduction) or by a user partition validated for order compatibility.
Convolution descends to the type level through incidence coefficients
[t; r s] = #{z in a type-t interval [x, y] : [x, z] has type r, [z, y] has
type s}, and the reduced algebra embeds back by assigning each type's value
to all of its intervals.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import IncFunction
from .errors import (IntervalTooLarge, Mismatch, NotAPartition,
                     NotConstantOnTypes, RepresentativeDisagreement)
from .poset import QuotientPoset
from .rings import RingElem, RingSpec

__all__ = [
    "IntervalType",
    "Reduction",
    "CoefTable",
    "ReducedElem",
    "standard_types",
    "check_order_compatible",
    "coefficients",
    "reduced_convolve",
    "reduced_delta",
    "reduced_zeta",
    "lift",
    "project",
]

MAX_INTERVAL = 12


@dataclass(frozen=True)
class IntervalType:
    id: int
    cls: str  # "T0" for point intervals, "T1" for the rest
    certificate: tuple  # (size, frozenset of local lt pairs) of the representative
    representative: tuple  # (x, y) of the first member
    members: tuple  # all (x, y) of this type, lexicographic


@dataclass(frozen=True)
class Reduction:
    """A validated partition of the intervals of a poset into types."""

    poset: QuotientPoset
    types: tuple  # IntervalType, point types first
    assignment: tuple  # sorted ((x, y), type id) items

    def type_of(self, x: int, y: int) -> int:
        for pair, t in self.assignment:
            if pair == (x, y):
                return t
        raise Mismatch(f"({x}, {y}) is not an interval of the poset")

    def as_dict(self):
        return dict(self.assignment)


@dataclass(frozen=True)
class CoefTable:
    reduction: Reduction
    entries: tuple  # sorted ((t, r, s), count) items, zero counts stripped

    def at(self, t: int, r: int, s: int) -> int:
        return dict(self.entries).get((t, r, s), 0)


@dataclass(frozen=True)
class ReducedElem:
    """One ring value per type, indexed by type id."""

    ring: RingSpec
    values: tuple  # RingElem per type, position = type id


def _all_intervals(q: QuotientPoset):
    return sorted((x, y) for x in range(q.k) for y in range(q.k)
                  if q.leq_class(x, y))


def _interval_poset(q: QuotientPoset, x: int, y: int):
    """The induced subposet on [x, y] as (size, local lt pairs)."""
    members = sorted(q.class_interval(x, y))
    if len(members) > MAX_INTERVAL:
        raise IntervalTooLarge(
            f"interval [{x}, {y}] has {len(members)} elements (max {MAX_INTERVAL})")
    local = {z: i for i, z in enumerate(members)}
    lt = frozenset((local[a], local[b]) for a in members for b in members
                   if q.lt_pair(a, b))
    return len(members), lt


def _isomorphic(a, b) -> bool:
    """Poset isomorphism by backtracking with degree-signature pruning."""
    (na, lta), (nb, ltb) = a, b
    if na != nb or len(lta) != len(ltb):
        return False
    up_a = [sum(1 for e in lta if e[0] == v) for v in range(na)]
    dn_a = [sum(1 for e in lta if e[1] == v) for v in range(na)]
    up_b = [sum(1 for e in ltb if e[0] == v) for v in range(nb)]
    dn_b = [sum(1 for e in ltb if e[1] == v) for v in range(nb)]
    if sorted(zip(up_a, dn_a)) != sorted(zip(up_b, dn_b)):
        return False

    def extend(perm, used):
        v = len(perm)
        if v == na:
            return True
        for w in range(nb):
            if used[w] or (up_a[v], dn_a[v]) != (up_b[w], dn_b[w]):
                continue
            if all(((u, v) in lta) == ((perm[u], w) in ltb) and
                   ((v, u) in lta) == ((w, perm[u]) in ltb)
                   for u in range(v)):
                perm.append(w)
                used[w] = True
                if extend(perm, used):
                    return True
                perm.pop()
                used[w] = False
        return False

    return extend([], [False] * nb)


def standard_types(q: QuotientPoset) -> Reduction:
    """Group intervals by isomorphism type of the induced subposet."""
    if not q.is_poset():
        raise Mismatch("interval types require singleton classes")
    groups = []  # (certificate, [pairs])
    for pair in _all_intervals(q):
        cert = _interval_poset(q, *pair)
        for gcert, members in groups:
            if _isomorphic(cert, gcert):
                members.append(pair)
                break
        else:
            groups.append((cert, [pair]))
    groups.sort(key=lambda g: (g[0][0] > 1, g[1][0]))
    types = tuple(
        IntervalType(i, "T0" if cert[0] == 1 else "T1", cert,
                     members[0], tuple(members))
        for i, (cert, members) in enumerate(groups))
    assignment = {pair: t.id for t in types for pair in t.members}
    return Reduction(q, types, tuple(sorted(assignment.items())))


def check_order_compatible(q: QuotientPoset, partition):
    """Whether a partition of the intervals admits compatible bijections.

    Two equivalent intervals [x, y] and [s, t] need a bijection eps between
    them with [x, z] equivalent to [s, eps(z)] and [z, y] equivalent to
    [eps(z), t] for every z.  Returns (True, None) or (False, offending pair).
    """
    universe = _all_intervals(q)
    seen = [pair for block in partition for pair in block]
    if sorted(seen) != universe or len(seen) != len(set(seen)):
        raise NotAPartition("blocks must cover every interval exactly once")
    block_of = {pair: i for i, block in enumerate(partition)
                for pair in block}

    def compatible(ia, ib):
        xa, ya = ia
        xb, yb = ib
        za = sorted(q.class_interval(xa, ya))
        zb = sorted(q.class_interval(xb, yb))
        if len(za) != len(zb):
            return False

        def extend(perm, used):
            i = len(perm)
            if i == len(za):
                return True
            z = za[i]
            for j, w in enumerate(zb):
                if used[j]:
                    continue
                if block_of[(xa, z)] == block_of[(xb, w)] and \
                   block_of[(z, ya)] == block_of[(w, yb)]:
                    perm.append(w)
                    used[j] = True
                    if extend(perm, used):
                        return True
                    perm.pop()
                    used[j] = False
            return False

        return extend([], [False] * len(zb))

    for block in partition:
        block = sorted(block)
        for i, ia in enumerate(block):
            for ib in block[i + 1:]:
                if not (compatible(ia, ib) and compatible(ib, ia)):
                    return False, (ia, ib)
    return True, None


def coefficients(red: Reduction) -> CoefTable:
    """[t; r s] counted on every member of t; members must agree."""
    q = red.poset
    assign = red.as_dict()
    entries = {}
    for t in red.types:
        per_member = []
        for (x, y) in t.members:
            counts = {}
            for z in q.class_interval(x, y):
                key = (t.id, assign[(x, z)], assign[(z, y)])
                counts[key] = counts.get(key, 0) + 1
            per_member.append(counts)
        if any(c != per_member[0] for c in per_member[1:]):
            raise RepresentativeDisagreement(
                f"members of type {t.id} give different coefficient counts")
        entries.update(per_member[0])
    return CoefTable(red, tuple(sorted(entries.items())))


def reduced_convolve(a: ReducedElem, b: ReducedElem, table: CoefTable) -> ReducedElem:
    """h_t = sum over (r, s) of [t; r s] a_r b_s."""
    ntypes = len(table.reduction.types)
    if a.ring != b.ring or len(a.values) != ntypes or len(b.values) != ntypes:
        raise Mismatch("operands do not match the reduction or each other")
    out = [RingElem.zero(a.ring)] * ntypes
    for (t, r, s), count in table.entries:
        term = a.values[r] * b.values[s]
        for _ in range(count):
            out[t] = out[t] + term
    return ReducedElem(a.ring, tuple(out))


def reduced_delta(red: Reduction, ring: RingSpec) -> ReducedElem:
    """1 on point types, 0 elsewhere: the identity of the reduced algebra."""
    return ReducedElem(ring, tuple(
        RingElem.one(ring) if t.cls == "T0" else RingElem.zero(ring)
        for t in red.types))


def reduced_zeta(red: Reduction, ring: RingSpec) -> ReducedElem:
    return ReducedElem(ring, tuple(RingElem.one(ring) for _ in red.types))


def lift(a: ReducedElem, red: Reduction) -> IncFunction:
    """Assign a_t to every interval of type t."""
    q = red.poset
    p = q.preorder
    vals = {}
    for (x, y), t in red.assignment:
        v = a.values[t]
        if not v.is_zero():
            vals[(q.repr_of(x), q.repr_of(y))] = v
    return IncFunction.make(p, a.ring, vals)


def project(f: IncFunction, red: Reduction) -> ReducedElem:
    """Inverse of lift; fails with a witness if f is not constant on a type."""
    q = red.poset
    out = []
    for t in red.types:
        x0, y0 = t.members[0]
        v0 = f.at(q.repr_of(x0), q.repr_of(y0))
        for (x, y) in t.members[1:]:
            if f.at(q.repr_of(x), q.repr_of(y)) != v0:
                raise NotConstantOnTypes(
                    f"intervals {t.members[0]} and {(x, y)} share type {t.id} "
                    f"but carry different values")
        out.append(v0)
    return ReducedElem(f.ring, tuple(out))
