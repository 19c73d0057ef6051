"""Multiplicative automorphisms as central-unit cocycles on the quotient
poset, their spanning-tree factorization into a tree-trivial part times a
fractional (inner) part, cycle-weight innerness tests, ordinal automorphisms,
and the diagonalization / full decomposition pipeline for automorphisms given
by basis-image tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import IncFunction, convolve, delta, e_class, e_unit, invert, split
from .errors import (CocycleViolation, Disconnected, Mismatch, MissingEdge,
                     NotASemipath, NotAutomorphism, NotCentralUnit,
                     NotClassPreserving, NotMultiplicativeResidue,
                     ShapeMismatch)
from .poset import (CompGraph, Preorder, QuotientPoset, comparability,
                    poset_automorphisms, quotient, spanning_forest, triangles)
from .rings import RingElem, RingSpec, invert_unit, is_central

__all__ = [
    "MultCocycle",
    "AutDecomposition",
    "BasisTable",
    "mult_cocycle",
    "fractional_cocycle",
    "apply_mult",
    "path_weight",
    "cycle_weight",
    "decompose_mult",
    "ordinal",
    "identity_table",
    "verify_automorphism",
    "induced_map",
    "diagonalize",
    "full_decompose",
    "recompose",
    "conjugation_table",
]


@dataclass(frozen=True)
class MultCocycle:
    """Central units c_xy on strict comparable class pairs with
    c_xy = c_xz * c_zy on every triangle."""

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


def _check_central_unit(v: RingElem):
    if not is_central(v):
        raise NotCentralUnit(f"cocycle value {v.payload!r} is not central")
    try:
        invert_unit(v)
    except Exception as exc:
        raise NotCentralUnit(f"cocycle value {v.payload!r} is not a unit") from exc


def _validate_cocycle(q: QuotientPoset, c: dict):
    for tri in triangles(q):
        lhs = c[(tri.x, tri.y)]
        rhs = c[(tri.x, tri.z)] * c[(tri.z, tri.y)]
        if lhs != rhs:
            raise CocycleViolation(
                f"c[{tri.x},{tri.y}] != c[{tri.x},{tri.z}] * c[{tri.z},{tri.y}]",
                triangle=(tri.x, tri.z, tri.y))


def mult_cocycle(q: QuotientPoset, ring: RingSpec, assignment: dict,
                 mode: str = "full") -> MultCocycle:
    """Build a multiplicative cocycle.

    mode "full": a central unit for every strict comparable class pair; the
    triangle law is validated.  mode "tree": values on the canonical spanning
    forest's tree edges only; every remaining pair gets the weight of the
    unique tree semipath between its endpoints (which always satisfies the
    triangle law).
    """
    g = comparability(q)
    for v in assignment.values():
        _check_central_unit(v)
    if mode == "full":
        missing = [e for e in g.edges if e not in assignment]
        if missing:
            raise MissingEdge(f"no value for strict pairs {missing}")
        c = {e: assignment[e] for e in g.edges}
        _validate_cocycle(q, c)
    elif mode == "tree":
        forest = spanning_forest(g)
        missing = [e for e in forest.tree_edges if e not in assignment]
        if missing:
            raise MissingEdge(f"no value for tree edges {missing}")
        extra = [e for e in assignment if e not in set(forest.tree_edges)]
        if extra:
            raise MissingEdge(f"values on non-tree pairs {extra}")
        c = dict(assignment)
        partial = MultCocycle(q, ring, tuple(sorted(c.items())))
        for x, y in g.edges:
            if (x, y) not in c:
                path = forest.tree_path(x, y)
                c[(x, y)] = _walk_weight(partial, path, set(c))
        _validate_cocycle(q, c)
    else:
        raise Mismatch(f"unknown cocycle mode {mode!r}")
    return MultCocycle(q, ring, tuple(sorted(c.items())))


def fractional_cocycle(q: QuotientPoset, ring: RingSpec, units: dict) -> MultCocycle:
    """c_xy = units[x]^{-1} * units[y]; always a valid cocycle."""
    for x in range(q.k):
        if x not in units:
            raise MissingEdge(f"no vertex unit for class {x}")
        _check_central_unit(units[x])
    c = {(x, y): invert_unit(units[x]) * units[y] for x, y in sorted(q.lt)}
    return MultCocycle(q, ring, tuple(sorted(c.items())))


def _walk_weight(c: MultCocycle, walk, edge_set=None):
    """Weight of a semipath: forward edges contribute c_xy, backward c_yx^{-1}."""
    if edge_set is None:
        edge_set = {pair for pair, _ in c.c}
    acc = RingElem.one(c.ring)
    for u, v in zip(walk, walk[1:]):
        if (u, v) in edge_set:
            acc = acc * dict(c.c)[(u, v)]
        elif (v, u) in edge_set:
            acc = acc * invert_unit(dict(c.c)[(v, u)])
        else:
            raise NotASemipath(f"({u}, {v}) is not an edge in either direction")
    return acc


def path_weight(c: MultCocycle, walk) -> RingElem:
    """Weight of a vertex walk whose consecutive pairs are comparability edges."""
    return _walk_weight(c, list(walk))


def cycle_weight(c: MultCocycle, cycle) -> RingElem:
    """Weight of a fundamental cycle: the chord forward, then the tree
    semipath traversed backwards."""
    w = _walk_weight(c, list(cycle.path))
    return c.at(*cycle.chord) * invert_unit(w)


def apply_mult(c: MultCocycle, f: IncFunction) -> IncFunction:
    """Hadamard action: scale each off-class value by its class-pair unit."""
    q = c.poset
    if f.preorder != q.preorder or f.ring != c.ring:
        raise Mismatch("cocycle and function live on different posets or rings")
    cd = c.as_dict()
    out = {}
    for (s, t), v in f.values:
        cs, ct = q.class_of[s], q.class_of[t]
        out[(s, t)] = v if cs == ct else cd[(cs, ct)] * v
    return IncFunction.make(f.preorder, f.ring, out)


def decompose_mult(c: MultCocycle):
    """Factor a cocycle as (fractional from vertex units) x (tree-trivial residue).

    Returns (vertex_units, residue, is_inner, witness_or_cycle): the vertex
    units come from the root walk (root unit 1, extended along tree edges);
    the residue is 1 on every tree edge; innerness holds iff every fundamental
    cycle has weight 1, and the witness is then the vertex-unit map, otherwise
    a failing cycle together with its weight.
    """
    q = c.poset
    g = comparability(q)
    if not g.is_connected():
        raise Disconnected("cocycle decomposition needs a connected quotient")
    forest = spanning_forest(g)
    cd = c.as_dict()

    units = {0: RingElem.one(c.ring)}
    pending = list(forest.tree_edges)
    while pending:
        progressed = False
        for x, y in list(pending):
            if x in units:
                units[y] = units[x] * cd[(x, y)]
            elif y in units:
                units[x] = units[y] * invert_unit(cd[(x, y)])
            else:
                continue
            pending.remove((x, y))
            progressed = True
        if not progressed:
            raise Disconnected("spanning forest does not reach every class")

    frac = fractional_cocycle(q, c.ring, units)
    fd = frac.as_dict()
    residue = {pair: cd[pair] * invert_unit(fd[pair]) for pair in cd}
    res = MultCocycle(q, c.ring, tuple(sorted(residue.items())))

    for cyc in forest.fundamental_cycles:
        w = cycle_weight(c, cyc)
        if not w.is_one():
            return units, res, False, (cyc, w)
    return units, res, True, units


# -- basis-image tables ------------------------------------------------------

@dataclass(frozen=True)
class BasisTable:
    """An algebra map I(Y, R) -> I(X, R) given by images of basis functions.

    Keys are ("e", x) for a class idempotent of the source and ("e", x, y)
    for a matrix-unit analogue; both posets must have singleton classes.
    """

    source: Preorder
    target: Preorder
    ring: RingSpec
    images: tuple  # sorted (key, IncFunction) items

    def image(self, key) -> IncFunction:
        for k, v in self.images:
            if k == key:
                return v
        raise ShapeMismatch(f"no image for basis element {key!r}")

    def as_dict(self):
        return dict(self.images)


def _basis_keys(q: QuotientPoset):
    keys = [("e", x) for x in range(q.k)]
    keys += [("e", x, y) for x, y in sorted(q.lt)]
    return keys


def _basis_fn(p: Preorder, ring: RingSpec, q: QuotientPoset, key) -> IncFunction:
    if len(key) == 2:
        return e_class(p, ring, key[1], q)
    return e_unit(p, ring, key[1], key[2], q)


def make_table(source: Preorder, target: Preorder, ring: RingSpec,
               images: dict) -> BasisTable:
    return BasisTable(source, target, ring,
                      tuple(sorted(images.items(), key=lambda kv: kv[0])))


def identity_table(p: Preorder, ring: RingSpec) -> BasisTable:
    q = quotient(p)
    return make_table(p, p, ring, {
        key: _basis_fn(p, ring, q, key) for key in _basis_keys(q)})


def ordinal(tau, p: Preorder, ring: RingSpec) -> BasisTable:
    """The pullback automorphism of a poset automorphism tau.

    Sends e_x to e_{tau^{-1}(x)} and e_xy to e_{tau^{-1}(x) tau^{-1}(y)}.
    """
    q = quotient(p)
    if not q.is_poset():
        raise NotAutomorphism("ordinal tables require singleton classes")
    if tuple(tau) not in {tuple(s) for s in poset_automorphisms(q)}:
        raise NotAutomorphism(f"{tau} is not an order automorphism")
    inv = [0] * q.k
    for i, v in enumerate(tau):
        inv[v] = i
    images = {}
    for key in _basis_keys(q):
        if len(key) == 2:
            images[key] = e_class(p, ring, inv[key[1]], q)
        else:
            images[key] = e_unit(p, ring, inv[key[1]], inv[key[2]], q)
    return make_table(p, p, ring, images)


def conjugation_table(u: IncFunction) -> BasisTable:
    """The inner automorphism a -> u^{-1} a u as a basis table."""
    p, ring = u.preorder, u.ring
    q = quotient(p)
    uinv = invert(u)
    images = {key: convolve(convolve(uinv, _basis_fn(p, ring, q, key)), u)
              for key in _basis_keys(q)}
    return make_table(p, p, ring, images)


def _pair_list(p: Preorder):
    return list(p.pairs())


def _table_matrix(t: BasisTable):
    """Images in pair coordinates, one column per source basis element."""
    qs = quotient(t.source)
    keys = _basis_keys(qs)
    tpairs = _pair_list(t.target)
    idx = {pair: i for i, pair in enumerate(tpairs)}
    cols = []
    for key in keys:
        img = t.image(key)
        col = [RingElem.zero(t.ring)] * len(tpairs)
        for pair, v in img.values:
            col[idx[pair]] = v
        cols.append(col)
    return keys, tpairs, cols


def verify_automorphism(t: BasisTable) -> bool:
    """True iff the table extends to an algebra isomorphism.

    Checks unitality (images of the idempotents sum to the identity),
    multiplicativity on every basis pair, and invertibility of the linear
    extension.  Commutative coefficient rings only.
    """
    if not t.ring.commutative:
        raise ShapeMismatch("automorphism verification needs a commutative ring")
    qs, qt = quotient(t.source), quotient(t.target)
    if not (qs.is_poset() and qt.is_poset()):
        raise ShapeMismatch("basis tables require singleton classes")
    spairs, tpairs = _pair_list(t.source), _pair_list(t.target)
    if len(spairs) != len(tpairs):
        raise ShapeMismatch("source and target algebras have different dimension")
    keys = _basis_keys(qs)
    imgs = t.as_dict()
    for key in keys:
        if key not in imgs:
            raise ShapeMismatch(f"missing image for {key!r}")
        img = imgs[key]
        if img.preorder != t.target or img.ring != t.ring:
            raise ShapeMismatch(f"image of {key!r} lives on the wrong algebra")

    total = IncFunction.zero(t.target, t.ring)
    for x in range(qs.k):
        total = total + imgs[("e", x)]
    if total != delta(t.target, t.ring):
        return False

    def key_pair(key):
        if len(key) == 2:
            return (key[1], key[1])
        return (key[1], key[2])

    pair_to_key = {key_pair(k): k for k in keys}
    for ka in keys:
        xa, ya = key_pair(ka)
        for kb in keys:
            xb, yb = key_pair(kb)
            prod = convolve(imgs[ka], imgs[kb])
            if ya == xb:
                want = imgs[pair_to_key[(xa, yb)]]
            else:
                want = IncFunction.zero(t.target, t.ring)
            if prod != want:
                return False

    _, _, cols = _table_matrix(t)
    return _unit_determinant(cols, t.ring)


def _unit_determinant(cols, ring: RingSpec) -> bool:
    """Whether the column matrix is invertible over the commutative ring."""
    n = len(cols)
    if ring.kind == "Q":
        m = [[cols[j][i].payload for j in range(n)] for i in range(n)]
        from .rings import _fraction_det
        return _fraction_det(m) != 0
    mod = ring.modulus
    m = [[Fraction(int(cols[j][i].payload)) for j in range(n)] for i in range(n)]
    from .rings import _egcd, _fraction_det
    det = int(_fraction_det(m)) % mod
    return _egcd(det, mod)[0] == 1


def induced_map(t: BasisTable):
    """The class bijection tau with diagonal part of image(e_y) equal to e_tau(y)."""
    qs, qt = quotient(t.source), quotient(t.target)
    tau = []
    for y in range(qs.k):
        lpart, _ = split(t.image(("e", y)), qt)
        match = None
        for x in range(qt.k):
            if lpart == e_class(t.target, t.ring, x, qt):
                match = x
                break
        if match is None:
            raise NotClassPreserving(
                f"diagonal part of the image of e_{y} is not a class idempotent")
        tau.append(match)
    if len(set(tau)) != len(tau):
        raise NotClassPreserving("induced class map is not a bijection")
    for a in range(qs.k):
        for b in range(qs.k):
            if qs.lt_pair(a, b) != qt.lt_pair(tau[a], tau[b]):
                raise NotClassPreserving("induced class map is not an order isomorphism")
    return tau


def diagonalize(t: BasisTable):
    """Strip the inner-by-(1+d) part: returns (v, tau, diagonal table).

    v(s, t) is the (s, t) value of the image of the idempotent mapped onto
    class [t]; conjugating the table by v yields a diagonal table sending
    e_z to e_tau(z).
    """
    tau = induced_map(t)
    qt = quotient(t.target)
    inv_tau = [0] * len(tau)
    for i, x in enumerate(tau):
        inv_tau[x] = i
    vvals = {}
    for (s, u) in t.target.pairs():
        cu = qt.class_of[u]
        img = t.image(("e", inv_tau[cu]))
        val = img.at(s, u)
        if not val.is_zero():
            vvals[(s, u)] = val
    v = IncFunction.make(t.target, t.ring, vvals)
    vinv = invert(v)
    gamma = {key: convolve(convolve(vinv, img), v) for key, img in t.images}
    qs = quotient(t.source)
    for z in range(qs.k):
        if gamma[("e", z)] != e_class(t.target, t.ring, tau[z], qt):
            raise NotClassPreserving(
                f"conjugated image of e_{z} is not the idempotent of class {tau[z]}")
    return v, tau, make_table(t.source, t.target, t.ring, gamma)


@dataclass(frozen=True)
class AutDecomposition:
    """Inner x multiplicative x ordinal factorization of an automorphism."""

    tau: tuple  # induced class bijection
    inner_delta: IncFunction  # d with v = delta + d, d in M
    vertex_units: tuple  # sorted (class, RingElem) items
    residue: MultCocycle  # trivial on the canonical spanning tree
    is_inner: bool
    witness_or_cycle: object


def full_decompose(t: BasisTable) -> AutDecomposition:
    """Decompose a verified automorphism of I(X, R), X a poset, R commutative."""
    if t.source != t.target:
        raise ShapeMismatch("full decomposition applies to automorphisms only")
    p, ring = t.source, t.ring
    q = quotient(p)
    v, tau, gamma = diagonalize(t)
    gdict = gamma.as_dict()
    cvals = {}
    for x, y in sorted(q.lt):
        # Gamma'(e_xy) = Gamma(e_{tau^-1 x, tau^-1 y}) must be c * e_xy
        inv_tau = [0] * len(tau)
        for i, z in enumerate(tau):
            inv_tau[z] = i
        img = gdict[("e", inv_tau[x], inv_tau[y])]
        s, u = q.repr_of(x), q.repr_of(y)
        cval = img.at(s, u)
        if img != e_unit(p, ring, x, y, q).scale(cval):
            raise NotMultiplicativeResidue(
                f"diagonal table does not act by scaling on the ({x}, {y}) block")
        _check_central_unit(cval)
        cvals[(x, y)] = cval
    cocycle = MultCocycle(q, ring, tuple(sorted(cvals.items())))
    _validate_cocycle(q, cocycle.as_dict())
    units, residue, inner, witness = decompose_mult(cocycle)
    return AutDecomposition(
        tau=tuple(tau),
        inner_delta=v - delta(p, ring),
        vertex_units=tuple(sorted(units.items())),
        residue=residue,
        is_inner=inner,
        witness_or_cycle=witness)


def recompose(dec: AutDecomposition, p: Preorder, ring: RingSpec) -> BasisTable:
    """Rebuild the basis table from a decomposition (round-trip check)."""
    q = quotient(p)
    units = dict(dec.vertex_units)
    frac = fractional_cocycle(q, ring, units)
    total = MultCocycle(q, ring, tuple(sorted(
        (pair, frac.as_dict()[pair] * dec.residue.as_dict()[pair])
        for pair in frac.as_dict())))
    v = delta(p, ring) + dec.inner_delta
    vinv = invert(v)
    images = {}
    for key in _basis_keys(q):
        if len(key) == 2:
            b = e_class(p, ring, dec.tau[key[1]], q)
        else:
            b = e_unit(p, ring, dec.tau[key[1]], dec.tau[key[2]], q)
        scaled = apply_mult(total, b)
        images[key] = convolve(convolve(v, scaled), vinv)
    return make_table(p, p, ring, images)
