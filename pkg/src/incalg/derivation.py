"""Derivations of I(X, R) acting diagonally on blocks, encoded as additive
central-valued cocycles on the quotient poset.

This is the additive mirror of the multiplicative story: cocycles satisfy
c_xy = c_xz + c_zy on triangles, potentials q give c_xy = q(y) - q(x), the
inner ones are exactly those with zero weight around every fundamental cycle,
and the dimensions of the whole space, the inner subspace, and the quotient
are read off the rank of the triangular-cycle matrix.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .algebra import IncFunction, convolve
from .errors import (CenterNotField, CocycleViolation, Disconnected, Mismatch,
                     MissingEdge, NotASemipath, NotCentral)
from .linalg import GF, QQ, nullspace, rank
from .poset import QuotientPoset, comparability, spanning_forest, triangles
from .rings import RingElem, RingSpec, center_field, is_central

__all__ = [
    "AddCocycle",
    "TriCycleMatrix",
    "DerivSpaceReport",
    "add_cocycle",
    "potential_cocycle",
    "apply_deriv",
    "additive_path_weight",
    "additive_cycle_weight",
    "decompose_add",
    "inner_generator",
    "triangle_matrix",
    "derivation_space",
]


@dataclass(frozen=True)
class AddCocycle:
    """Central elements c_xy on strict comparable class pairs with
    c_xy = c_xz + c_zy on every triangle."""

    poset: QuotientPoset
    ring: RingSpec
    c: tuple  # sorted ((x, y), RingElem) items, one per strict pair

    def at(self, x: int, y: int) -> RingElem:
        for pair, v in self.c:
            if pair == (x, y):
                return v
        raise MissingEdge(f"no cocycle value on class pair ({x}, {y})")

    def as_dict(self):
        return dict(self.c)

    def __add__(self, other: "AddCocycle") -> "AddCocycle":
        if other.poset != self.poset or other.ring != self.ring:
            raise Mismatch("cocycles live on different posets or rings")
        od = other.as_dict()
        return AddCocycle(self.poset, self.ring, tuple(sorted(
            (pair, v + od[pair]) for pair, v in self.c)))

    def __sub__(self, other: "AddCocycle") -> "AddCocycle":
        od = {pair: -v for pair, v in other.c}
        return self + AddCocycle(other.poset, other.ring,
                                 tuple(sorted(od.items())))


def _check_central(v: RingElem):
    if not is_central(v):
        raise NotCentral(f"cocycle value {v.payload!r} is not central")


def _validate_add(q: QuotientPoset, c: dict):
    for tri in triangles(q):
        if c[(tri.x, tri.y)] != c[(tri.x, tri.z)] + c[(tri.z, tri.y)]:
            raise CocycleViolation(
                f"c[{tri.x},{tri.y}] != c[{tri.x},{tri.z}] + c[{tri.z},{tri.y}]",
                triangle=(tri.x, tri.z, tri.y))


def add_cocycle(q: QuotientPoset, ring: RingSpec, assignment: dict,
                mode: str = "full") -> AddCocycle:
    """Build an additive cocycle from values on all strict pairs ("full")
    or on the canonical spanning forest's tree edges only ("tree")."""
    g = comparability(q)
    for v in assignment.values():
        _check_central(v)
    if mode == "full":
        missing = [e for e in g.edges if e not in assignment]
        if missing:
            raise MissingEdge(f"no value for strict pairs {missing}")
        c = {e: assignment[e] for e in g.edges}
        _validate_add(q, c)
    elif mode == "tree":
        forest = spanning_forest(g)
        missing = [e for e in forest.tree_edges if e not in assignment]
        if missing:
            raise MissingEdge(f"no value for tree edges {missing}")
        extra = [e for e in assignment if e not in set(forest.tree_edges)]
        if extra:
            raise MissingEdge(f"values on non-tree pairs {extra}")
        c = dict(assignment)
        for x, y in g.edges:
            if (x, y) not in c:
                path = forest.tree_path(x, y)
                c[(x, y)] = _walk_sum(ring, c, path)
        _validate_add(q, c)
    else:
        raise Mismatch(f"unknown cocycle mode {mode!r}")
    return AddCocycle(q, ring, tuple(sorted(c.items())))


def potential_cocycle(q: QuotientPoset, ring: RingSpec, potential: dict) -> AddCocycle:
    """c_xy = potential[y] - potential[x]; always a valid cocycle."""
    for x in range(q.k):
        if x not in potential:
            raise MissingEdge(f"no potential for class {x}")
        _check_central(potential[x])
    c = {(x, y): potential[y] - potential[x] for x, y in sorted(q.lt)}
    return AddCocycle(q, ring, tuple(sorted(c.items())))


def _walk_sum(ring: RingSpec, cdict: dict, walk):
    """Forward edges add c_xy, backward edges subtract c_yx."""
    acc = RingElem.zero(ring)
    for u, v in zip(walk, walk[1:]):
        if (u, v) in cdict:
            acc = acc + cdict[(u, v)]
        elif (v, u) in cdict:
            acc = acc - cdict[(v, u)]
        else:
            raise NotASemipath(f"({u}, {v}) is not an edge in either direction")
    return acc


def additive_path_weight(c: AddCocycle, walk) -> RingElem:
    return _walk_sum(c.ring, c.as_dict(), list(walk))


def additive_cycle_weight(c: AddCocycle, cycle) -> RingElem:
    """Chord value minus the tree semipath sum."""
    return c.at(*cycle.chord) - _walk_sum(c.ring, c.as_dict(), list(cycle.path))


def apply_deriv(c: AddCocycle, f: IncFunction) -> IncFunction:
    """The derivation attached to c: scale each off-class value by its
    class-pair element, kill the class-diagonal part."""
    q = c.poset
    if f.preorder != q.preorder or f.ring != c.ring:
        raise Mismatch("cocycle and function live on different posets or rings")
    cd = c.as_dict()
    out = {}
    for (s, t), v in f.values:
        cs, ct = q.class_of[s], q.class_of[t]
        if cs != ct:
            out[(s, t)] = cd[(cs, ct)] * v
    return IncFunction.make(f.preorder, f.ring, out)


def inner_generator(c_potential: dict, q: QuotientPoset, ring: RingSpec) -> IncFunction:
    """The diagonal g with ad(g) = the derivation of the potential cocycle.

    ad(g)(f) = f g - g f scales the (x, y) block by potential[y] - potential[x].
    """
    p = q.preorder
    out = {}
    for x, members in enumerate(q.classes):
        for s in members:
            out[(s, s)] = c_potential[x]
    return IncFunction.make(p, ring, out)


def adjoint(g: IncFunction, f: IncFunction) -> IncFunction:
    """ad(g)(f) = fg - gf."""
    return convolve(f, g) - convolve(g, f)


def decompose_add(c: AddCocycle):
    """Split a cocycle as (potential part) + (tree-trivial residue).

    Returns (potential, residue, is_inner, witness_or_cycle): the potential
    comes from the root walk (root value 0), the residue vanishes on tree
    edges, and the cocycle is inner iff every fundamental cycle sums to zero.
    """
    q = c.poset
    g = comparability(q)
    if not g.is_connected():
        raise Disconnected("cocycle decomposition needs a connected quotient")
    forest = spanning_forest(g)
    cd = c.as_dict()

    pot = {0: RingElem.zero(c.ring)}
    pending = list(forest.tree_edges)
    while pending:
        progressed = False
        for x, y in list(pending):
            if x in pot:
                pot[y] = pot[x] + cd[(x, y)]
            elif y in pot:
                pot[x] = pot[y] - cd[(x, y)]
            else:
                continue
            pending.remove((x, y))
            progressed = True
        if not progressed:
            raise Disconnected("spanning forest does not reach every class")

    frac = potential_cocycle(q, c.ring, pot)
    residue = c - frac

    for cyc in forest.fundamental_cycles:
        w = additive_cycle_weight(c, cyc)
        if not w.is_zero():
            return pot, residue, False, (cyc, w)
    return pot, residue, True, pot


# -- triangular-cycle matrix and dimensions ----------------------------------

@dataclass(frozen=True)
class TriCycleMatrix:
    """One row per triangle x < z < y over the edge columns:
    +1 at (x, y), -1 at (x, z) and (z, y)."""

    edges: tuple
    triangles: tuple  # (x, z, y) triples in row order
    rows: tuple  # tuple of int tuples


def triangle_matrix(q: QuotientPoset) -> TriCycleMatrix:
    g = comparability(q)
    tris = triangles(q)
    rows = []
    for t in tris:
        row = [0] * g.m
        row[t.i_xy] += 1
        row[t.i_xz] -= 1
        row[t.i_zy] -= 1
        rows.append(tuple(row))
    return TriCycleMatrix(g.edges, tuple((t.x, t.z, t.y) for t in tris),
                          tuple(rows))


@dataclass(frozen=True)
class DerivSpaceReport:
    """Dimension report for the cocycle space over a field."""

    edges: tuple
    n_edges: int  # m
    cyclomatic: int  # lambda
    tri_rank: int  # rank of the triangular-cycle matrix
    dim_cocycles: int  # m - rank
    dim_potentials: int  # m - lambda
    dim_outer: int  # lambda - rank
    all_inner: bool
    kernel_basis: tuple  # cocycle-space basis as edge-coordinate vectors


def _field_of(spec: RingSpec):
    try:
        f = center_field(spec)
    except ValueError as exc:
        raise CenterNotField(str(exc)) from exc
    return QQ if f.kind == "Q" else GF(f.modulus)


def derivation_space(q: QuotientPoset, spec: RingSpec) -> DerivSpaceReport:
    """Solve the triangle equations over the center of the coefficient ring.

    Every cocycle is a potential one exactly when the matrix rank equals the
    cyclomatic number of the comparability graph.
    """
    field = _field_of(spec)
    if field.p == 2:
        warnings.warn("rank over a 2-element field: +1 and -1 coincide, "
                      "so the sign pattern of the triangle rows is lost")
    g = comparability(q)
    tm = triangle_matrix(q)
    rows = [list(r) for r in tm.rows]
    r = rank(rows, field)
    kernel = nullspace(rows, g.m, field)
    lam = g.cyclomatic
    return DerivSpaceReport(
        edges=g.edges,
        n_edges=g.m,
        cyclomatic=lam,
        tri_rank=r,
        dim_cocycles=g.m - r,
        dim_potentials=g.m - lam,
        dim_outer=lam - r,
        all_inner=(r == lam),
        kernel_basis=tuple(tuple(v) for v in kernel))
