"""Elements of the incidence algebra I(X, R) and its operations.

An :class:`IncFunction` is a sparse map from comparable pairs of the ground
preorder to exact ring elements.  Convolution, Hadamard product, the
L (+) M splitting, the filtration level, constructive inversion, the Mobius
function, radical membership, and the structural-matrix export all live here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import Mismatch, NotInM, NotInvertible, NotSingletonClass
from .poset import Preorder, QuotientPoset, quotient
from .rings import RingElem, RingSpec, in_radical, scalar_matrix_inverse

__all__ = [
    "IncFunction",
    "delta",
    "zeta",
    "e_class",
    "e_unit",
    "basis_function",
    "convolve",
    "hadamard",
    "split",
    "filtration_level",
    "invert",
    "mobius",
    "in_radical_fn",
    "to_structural",
]

INFINITY = float("inf")


@dataclass(frozen=True)
class IncFunction:
    """A function on comparable pairs of a preorder, valued in an exact ring."""

    preorder: Preorder
    ring: RingSpec
    values: tuple  # sorted ((s, t), RingElem) items, zero entries stripped

    @staticmethod
    def make(preorder: Preorder, ring: RingSpec, mapping) -> "IncFunction":
        items = []
        for (s, t), v in mapping.items():
            if not preorder.leq(s, t):
                raise Mismatch(f"support pair ({s}, {t}) is not comparable")
            if v.spec != ring:
                raise Mismatch("entry ring differs from function ring")
            if not v.is_zero():
                items.append(((s, t), v))
        items.sort(key=lambda kv: kv[0])
        return IncFunction(preorder, ring, tuple(items))

    @staticmethod
    def zero(preorder: Preorder, ring: RingSpec) -> "IncFunction":
        return IncFunction(preorder, ring, ())

    def at(self, s: int, t: int) -> RingElem:
        for (a, b), v in self.values:
            if (a, b) == (s, t):
                return v
        return RingElem.zero(self.ring)

    def as_dict(self):
        return dict(self.values)

    def is_zero(self) -> bool:
        return not self.values

    def _check(self, other: "IncFunction"):
        if self.preorder != other.preorder or self.ring != other.ring:
            raise Mismatch("functions live on different preorders or rings")

    def __add__(self, other):
        self._check(other)
        out = self.as_dict()
        for pair, v in other.values:
            out[pair] = out.get(pair, RingElem.zero(self.ring)) + v
        return IncFunction.make(self.preorder, self.ring, out)

    def __neg__(self):
        return IncFunction.make(self.preorder, self.ring,
                                {pair: -v for pair, v in self.values})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        """Convolution."""
        return convolve(self, other)

    def scale(self, c: RingElem) -> "IncFunction":
        """Left multiplication of every value by the ring element c."""
        return IncFunction.make(self.preorder, self.ring,
                                {pair: c * v for pair, v in self.values})


# -- special functions -------------------------------------------------------

def delta(p: Preorder, ring: RingSpec) -> IncFunction:
    """The convolution identity: 1 on the diagonal."""
    one = RingElem.one(ring)
    return IncFunction.make(p, ring, {(i, i): one for i in range(p.n)})


def zeta(p: Preorder, ring: RingSpec) -> IncFunction:
    """1 on every comparable pair."""
    one = RingElem.one(ring)
    return IncFunction.make(p, ring, {pair: one for pair in p.pairs()})


def e_class(p: Preorder, ring: RingSpec, x: int, q: QuotientPoset | None = None) -> IncFunction:
    """The idempotent of the class containing (or indexed by) x.

    ``x`` is a class index of the quotient poset.
    """
    if q is None:
        q = quotient(p)
    one = RingElem.one(ring)
    return IncFunction.make(p, ring, {(t, t): one for t in q.classes[x]})


def e_unit(p: Preorder, ring: RingSpec, x: int, y: int,
           q: QuotientPoset | None = None) -> IncFunction:
    """The matrix-unit analogue e_xy for singleton classes x < y."""
    if q is None:
        q = quotient(p)
    if q.class_size(x) != 1 or q.class_size(y) != 1:
        raise NotSingletonClass(
            f"e_unit requires singleton classes, got sizes "
            f"{q.class_size(x)} and {q.class_size(y)}")
    if not q.lt_pair(x, y):
        raise Mismatch(f"classes {x} and {y} are not strictly comparable")
    s, t = q.repr_of(x), q.repr_of(y)
    return IncFunction.make(p, ring, {(s, t): RingElem.one(ring)})


def basis_function(kind, p: Preorder, ring: RingSpec,
                   q: QuotientPoset | None = None) -> IncFunction:
    """Dispatch on ("delta",), ("zeta",), ("e", x), or ("e", x, y)."""
    if kind == ("delta",) or kind == "delta":
        return delta(p, ring)
    if kind == ("zeta",) or kind == "zeta":
        return zeta(p, ring)
    if kind[0] == "e" and len(kind) == 2:
        return e_class(p, ring, kind[1], q)
    if kind[0] == "e" and len(kind) == 3:
        return e_unit(p, ring, kind[1], kind[2], q)
    raise Mismatch(f"unknown basis function kind {kind!r}")


# -- algebra operations ------------------------------------------------------

def convolve(f: IncFunction, g: IncFunction) -> IncFunction:
    """(fg)(x, y) = sum over x <= z <= y of f(x, z) g(z, y)."""
    f._check(g)
    p, ring = f.preorder, f.ring
    out = {}
    gd = g.as_dict()
    for (x, z), fv in f.values:
        row = p.rows[z]
        for (z2, y), gv in gd.items():
            if z2 == z and row >> y & 1:
                pair = (x, y)
                prod = fv * gv
                out[pair] = out.get(pair, RingElem.zero(ring)) + prod
    return IncFunction.make(p, ring, out)


def hadamard(f: IncFunction, g: IncFunction) -> IncFunction:
    """Pointwise product."""
    f._check(g)
    gd = g.as_dict()
    out = {pair: v * gd[pair] for pair, v in f.values if pair in gd}
    return IncFunction.make(f.preorder, f.ring, out)


def split(f: IncFunction, q: QuotientPoset | None = None):
    """K = L (+) M: class-diagonal part and off-class part, f = fL + fM."""
    if q is None:
        q = quotient(f.preorder)
    ldict, mdict = {}, {}
    for (s, t), v in f.values:
        if q.class_of[s] == q.class_of[t]:
            ldict[(s, t)] = v
        else:
            mdict[(s, t)] = v
    return (IncFunction.make(f.preorder, f.ring, ldict),
            IncFunction.make(f.preorder, f.ring, mdict))


def filtration_level(fm: IncFunction, q: QuotientPoset | None = None):
    """Largest k with fm in V_k; infinity for the zero function.

    V_k collects the blocks M_xy whose quotient interval has length >= k.
    """
    if q is None:
        q = quotient(fm.preorder)
    if fm.is_zero():
        return INFINITY
    level = None
    for (s, t), _ in fm.values:
        cs, ct = q.class_of[s], q.class_of[t]
        if cs == ct:
            raise NotInM(f"value at ({s}, {t}) lies in a diagonal class block")
        length = q.interval_length(cs, ct)
        level = length if level is None else min(level, length)
    return level


def _invert_diagonal(fl: IncFunction, q: QuotientPoset) -> IncFunction:
    """Invert the class-diagonal part blockwise.

    Each class block is an n_x by n_x matrix over R; matrix coefficient rings
    are flattened to their commutative scalar base before elimination.
    """
    p, ring = fl.preorder, fl.ring
    base = ring.scalar
    k = ring.order if ring.kind == "Mat" else 1
    out = {}
    for members in q.classes:
        nx = len(members)
        big = [[None] * (nx * k) for _ in range(nx * k)]
        for a, s in enumerate(members):
            for b, t in enumerate(members):
                v = fl.at(s, t)
                if ring.kind == "Mat":
                    for i in range(k):
                        for j in range(k):
                            big[a * k + i][b * k + j] = v.payload[i][j]
                else:
                    big[a][b] = v.payload
        try:
            inv = scalar_matrix_inverse(big, base)
        except Exception as exc:
            raise NotInvertible(
                f"diagonal block of class {members} is not a unit: {exc}") from exc
        for a, s in enumerate(members):
            for b, t in enumerate(members):
                if ring.kind == "Mat":
                    payload = tuple(tuple(inv[a * k + i][b * k + j]
                                          for j in range(k)) for i in range(k))
                else:
                    payload = inv[a][b]
                out[(s, t)] = RingElem(ring, payload)
    return IncFunction.make(p, ring, out)


def invert(f: IncFunction) -> IncFunction:
    """Two-sided convolution inverse.

    Diagonal blocks are inverted as matrices; the off-class part is handled
    by the finite alternating Neumann sum truncated at the maximum interval
    length of the quotient poset.
    """
    p, ring = f.preorder, f.ring
    q = quotient(p)
    fl, fm = split(f, q)
    inv_fl = _invert_diagonal(fl, q)
    if fm.is_zero():
        return inv_fl
    m = convolve(inv_fl, fm)
    depth = q.max_interval_length()
    one = delta(p, ring)
    acc = one
    power = one
    for _ in range(depth):
        power = convolve(-power, m)
        if power.is_zero():
            break
        acc = acc + power
    return convolve(acc, inv_fl)


def mobius(p: Preorder, ring: RingSpec) -> IncFunction:
    """mu = zeta^{-1}."""
    return invert(zeta(p, ring))


def in_radical_fn(f: IncFunction, q: QuotientPoset | None = None) -> bool:
    """Jacobson radical membership: values on equivalent pairs lie in J(R)."""
    if q is None:
        q = quotient(f.preorder)
    return all(in_radical(v) for (s, t), v in f.values
               if q.class_of[s] == q.class_of[t])


def to_structural(f: IncFunction):
    """Dense matrix form plus the Boolean pattern and triangularizing permutation.

    Returns (matrix, pattern, order) where matrix[i][j] = f(i, j), pattern is
    the comparability Boolean matrix, and order lists the elements in a
    topological class order: permuting rows and columns by it makes the
    pattern block upper triangular.
    """
    p = f.preorder
    q = quotient(p)
    n = p.n
    zero = RingElem.zero(f.ring)
    matrix = [[zero] * n for _ in range(n)]
    for (s, t), v in f.values:
        matrix[s][t] = v
    pattern = [[p.leq(i, j) for j in range(n)] for i in range(n)]
    order = []
    for cls in q.topological_order():
        order.extend(q.classes[cls])
    return matrix, pattern, order
