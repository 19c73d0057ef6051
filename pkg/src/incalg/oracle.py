"""Brute-force derivation solver for small algebras I(X, F), X a poset.

Independent of the cocycle machinery: a derivation is an unknown linear map
on the pair basis, the Leibniz rule on every basis product gives a sparse
linear system, and its kernel is the derivation space.  The inner dimension
comes from dim K - dim Z(K), with the center solved the same way.  This is
the cross-check for the triangular-cycle-matrix dimension formulas.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import IncFunction, convolve, split
from .derivation import AddCocycle, adjoint
from .errors import CenterNotField, GammaNonzero, Mismatch, TooLarge
from .linalg import GF, QQ, Field
from .poset import Preorder, QuotientPoset, quotient
from .rings import RingElem, RingSpec, center_field

__all__ = [
    "DerivTable",
    "brute_derivations",
    "center_dimension",
    "triangularize_derivation",
    "diagonalize_derivation",
    "cocycle_of_diagonal",
]


@dataclass(frozen=True)
class DerivTable:
    """A linear map on I(X, F) given by images of the pair basis."""

    preorder: Preorder
    ring: RingSpec
    images: tuple  # sorted (key, IncFunction) items, keys ("e", x) / ("e", x, y)

    def image(self, key) -> IncFunction:
        for k, v in self.images:
            if k == key:
                return v
        raise Mismatch(f"no image for basis element {key!r}")

    def as_dict(self):
        return dict(self.images)


def _field_of(spec: RingSpec) -> Field:
    try:
        f = center_field(spec)
    except ValueError as exc:
        raise CenterNotField(str(exc)) from exc
    if f != spec:
        raise CenterNotField("the brute-force solver works over Q or a prime field")
    return QQ if f.kind == "Q" else GF(f.modulus)


def _pair_basis(q: QuotientPoset):
    """Diagonal pairs in class order, then strict pairs lexicographically."""
    if not q.is_poset():
        raise Mismatch("the pair basis requires singleton classes")
    diag = [(q.repr_of(x), q.repr_of(x)) for x in range(q.k)]
    strict = sorted((q.repr_of(x), q.repr_of(y)) for x, y in q.lt)
    return diag + strict


def _sparse_rref(rows, field: Field):
    """Incremental reduced echelon form of sparse rows (dicts col -> value)."""
    echelon = {}
    for row in rows:
        row = {c: v for c, v in row.items() if v != field.zero()}
        while True:
            hit = next((c for c in row if c in echelon), None)
            if hit is None:
                break
            f = row.pop(hit)
            for c2, v2 in echelon[hit].items():
                if c2 == hit:
                    continue
                nv = field.sub(row.get(c2, field.zero()), field.mul(f, v2))
                if nv == field.zero():
                    row.pop(c2, None)
                else:
                    row[c2] = nv
        if not row:
            continue
        piv = min(row)
        inv = field.inv(row[piv])
        row = {c: field.mul(inv, v) for c, v in row.items()}
        for r2 in echelon.values():
            if piv in r2:
                f = r2.pop(piv)
                for c2, v2 in row.items():
                    if c2 == piv:
                        continue
                    nv = field.sub(r2.get(c2, field.zero()), field.mul(f, v2))
                    if nv == field.zero():
                        r2.pop(c2, None)
                    else:
                        r2[c2] = nv
        echelon[piv] = row
    return echelon


def _sparse_kernel(echelon, ncols, field: Field):
    free = [c for c in range(ncols) if c not in echelon]
    basis = []
    for fc in free:
        vec = [field.zero()] * ncols
        vec[fc] = field.one()
        for piv, row in echelon.items():
            if fc in row:
                vec[piv] = field.neg(row[fc])
        basis.append(vec)
    return basis


def brute_derivations(p: Preorder, spec: RingSpec, bound: int = 6):
    """Solve the Leibniz system directly.

    Returns (dim_der, dim_inn, tables): the derivation-space dimension, the
    inner dimension dim K - dim Z(K), and one DerivTable per kernel basis
    vector.  Restricted to posets with at most ``bound`` elements.
    """
    field = _field_of(spec)
    q = quotient(p)
    if p.n > bound:
        raise TooLarge(f"{p.n} elements exceeds the oracle bound {bound}")
    pairs = _pair_basis(q)
    dim = len(pairs)
    idx = {pair: i for i, pair in enumerate(pairs)}
    one, neg_one = field.one(), field.neg(field.one())

    def unknown(j, i):
        # coefficient of basis pair i in the image of basis pair j
        return j * dim + i

    rows = []
    for a, (xa, ya) in enumerate(pairs):
        for b, (xb, yb) in enumerate(pairs):
            c = idx[(xa, yb)] if ya == xb else None
            for e, (xe, ye) in enumerate(pairs):
                row = {}
                if c is not None:
                    row[unknown(c, e)] = one
                if ye == yb and (xe, xb) in idx:
                    k = unknown(a, idx[(xe, xb)])
                    row[k] = field.add(row.get(k, field.zero()), neg_one)
                if xe == xa and (ya, ye) in idx:
                    k = unknown(b, idx[(ya, ye)])
                    row[k] = field.add(row.get(k, field.zero()), neg_one)
                if row:
                    rows.append(row)

    echelon = _sparse_rref(rows, field)
    kernel = _sparse_kernel(echelon, dim * dim, field)
    dim_inn = dim - center_dimension(p, spec)

    tables = []
    for vec in kernel:
        images = {}
        for j, (xj, yj) in enumerate(pairs):
            key = ("e", q.class_of[xj]) if xj == yj else \
                ("e", q.class_of[xj], q.class_of[yj])
            vals = {}
            for i, pair in enumerate(pairs):
                v = vec[unknown(j, i)]
                if v != field.zero():
                    vals[pair] = RingElem.scalar(spec, v)
            images[key] = IncFunction.make(p, spec, vals)
        tables.append(DerivTable(p, spec, tuple(sorted(images.items(),
                                                       key=lambda kv: kv[0]))))
    return len(kernel), dim_inn, tables


def center_dimension(p: Preorder, spec: RingSpec) -> int:
    """dim Z(I(X, F)) by solving zb - bz = 0 for every basis pair b."""
    field = _field_of(spec)
    q = quotient(p)
    pairs = _pair_basis(q)
    idx = {pair: i for i, pair in enumerate(pairs)}
    one, neg_one = field.one(), field.neg(field.one())
    rows = []
    for xb, yb in pairs:
        for e, (xe, ye) in enumerate(pairs):
            row = {}
            if ye == yb and (xe, xb) in idx:
                row[idx[(xe, xb)]] = one
            if xe == xb and (yb, ye) in idx:
                k = idx[(yb, ye)]
                row[k] = field.add(row.get(k, field.zero()), neg_one)
            if row:
                rows.append(row)
    echelon = _sparse_rref(rows, field)
    return len(pairs) - len(echelon)


def triangularize_derivation(t: DerivTable):
    """Split a derivation table along K = L (+) M.

    Returns {"alpha": ..., "delta": ..., "beta": ...}: the L- and M-parts of
    the idempotent images (alpha is always zero for a derivation) and the
    strict-pair images.  A nonzero L-part on a strict-pair image means the
    table is not a derivation.
    """
    q = quotient(t.preorder)
    alpha, dlt, beta = {}, {}, {}
    for key, img in t.images:
        lpart, mpart = split(img, q)
        if len(key) == 2:
            if not lpart.is_zero():
                raise GammaNonzero(
                    f"image of {key!r} has a class-diagonal part")
            alpha[key] = lpart
            dlt[key] = mpart
        else:
            if not lpart.is_zero():
                raise GammaNonzero(
                    f"image of {key!r} has a class-diagonal part")
            beta[key] = mpart
    return {"alpha": alpha, "delta": dlt, "beta": beta}


def diagonalize_derivation(t: DerivTable):
    """Correct by an inner derivation so every idempotent maps to zero.

    g(s, u) = D(e_[u])(s, u) off the diagonal; then D + ad(g) kills the
    idempotents.  Returns (g, diagonal table).
    """
    p, spec = t.preorder, t.ring
    q = quotient(p)
    gvals = {}
    for s, u in p.pairs():
        if s == u:
            continue
        v = t.image(("e", q.class_of[u])).at(s, u)
        if not v.is_zero():
            gvals[(s, u)] = v
    g = IncFunction.make(p, spec, gvals)
    images = {}
    for key, img in t.images:
        if len(key) == 2:
            base = _idempotent(p, spec, q, key[1])
        else:
            base = _unit_fn(p, spec, q, key[1], key[2])
        images[key] = img + adjoint(g, base)
    for x in range(q.k):
        if not images[("e", x)].is_zero():
            raise GammaNonzero(f"diagonalization left e_{x} with a nonzero image")
    return g, DerivTable(p, spec, tuple(sorted(images.items(),
                                               key=lambda kv: kv[0])))


def _idempotent(p, spec, q, x):
    return IncFunction.make(p, spec, {(q.repr_of(x), q.repr_of(x)):
                                      RingElem.one(spec)})


def _unit_fn(p, spec, q, x, y):
    return IncFunction.make(p, spec, {(q.repr_of(x), q.repr_of(y)):
                                      RingElem.one(spec)})


def cocycle_of_diagonal(t: DerivTable) -> AddCocycle:
    """Read off c_xy from a diagonalized table with D(e_xy) = c_xy e_xy."""
    p, spec = t.preorder, t.ring
    q = quotient(p)
    cvals = {}
    for key, img in t.images:
        if len(key) == 2:
            continue
        x, y = key[1], key[2]
        cval = img.at(q.repr_of(x), q.repr_of(y))
        if img != _unit_fn(p, spec, q, x, y).scale(cval):
            raise GammaNonzero(
                f"diagonal table does not act by scaling on the ({x}, {y}) block")
        cvals[(x, y)] = cval
    return AddCocycle(q, spec, tuple(sorted(cvals.items())))
