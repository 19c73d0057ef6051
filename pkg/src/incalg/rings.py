"""Exact coefficient rings: the rationals, integers mod n, and square matrix
rings over either.

A :class:`RingSpec` names the ring; a :class:`RingElem` couples a spec with an
exact payload (``Fraction``, reduced residue, or a tuple-of-tuples matrix of
base payloads).  Unit inversion, centrality, and Jacobson-radical membership
are all decidable for the supported rings, which is why no others are allowed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, NotUnit

__all__ = [
    "RingSpec",
    "RingElem",
    "parse_ring",
    "parse_elem",
    "format_elem",
    "invert_unit",
    "is_central",
    "in_radical",
    "center_field",
]


@dataclass(frozen=True)
class RingSpec:
    """One of Q, Z/n, or M(k, base) with a non-matrix base."""

    kind: str  # "Q" | "Zmod" | "Mat"
    modulus: int | None = None
    order: int | None = None
    base: "RingSpec | None" = None

    def __post_init__(self):
        if self.kind == "Q":
            pass
        elif self.kind == "Zmod":
            if self.modulus is None or self.modulus < 2:
                raise InputError("Zmod modulus must be >= 2")
        elif self.kind == "Mat":
            if self.order is None or self.order < 1:
                raise InputError("matrix order must be >= 1")
            if self.base is None or self.base.kind == "Mat":
                raise InputError("matrix base must be Q or Zmod")
        else:
            raise InputError(f"unknown ring kind {self.kind!r}")

    @property
    def scalar(self) -> "RingSpec":
        """The commutative scalar ring underneath (self unless a matrix ring)."""
        return self.base if self.kind == "Mat" else self

    @property
    def commutative(self) -> bool:
        return self.kind != "Mat" or self.order == 1

    def __str__(self):
        if self.kind == "Q":
            return "Q"
        if self.kind == "Zmod":
            return f"Zmod:{self.modulus}"
        return f"Mat:{self.order}:{self.base}"


def parse_ring(text: str) -> RingSpec:
    """Parse a ring spec string: "Q", "Zmod:<n>", "Mat:<k>:Q", "Mat:<k>:Zmod:<n>"."""
    parts = text.strip().split(":")
    try:
        if parts == ["Q"]:
            return RingSpec("Q")
        if parts[0] == "Zmod" and len(parts) == 2:
            return RingSpec("Zmod", modulus=int(parts[1]))
        if parts[0] == "Mat" and len(parts) >= 3:
            return RingSpec("Mat", order=int(parts[1]),
                            base=parse_ring(":".join(parts[2:])))
    except (ValueError, InputError) as exc:
        raise InputError(f"bad ring spec {text!r}: {exc}") from exc
    raise InputError(f"bad ring spec {text!r}")


# -- scalar payload arithmetic (Q and Zmod only) -----------------------------

def _szero(spec):
    return Fraction(0) if spec.kind == "Q" else 0


def _sone(spec):
    return Fraction(1) if spec.kind == "Q" else 1 % spec.modulus


def _sadd(spec, a, b):
    return a + b if spec.kind == "Q" else (a + b) % spec.modulus


def _smul(spec, a, b):
    return a * b if spec.kind == "Q" else (a * b) % spec.modulus


def _sneg(spec, a):
    return -a if spec.kind == "Q" else (-a) % spec.modulus


@dataclass(frozen=True)
class RingElem:
    """An exact element of a supported ring.

    Payloads: ``Fraction`` for Q, reduced nonnegative int for Zmod, and a
    tuple of row tuples of base payloads for matrix rings.
    """

    spec: RingSpec
    payload: object

    # construction -----------------------------------------------------------

    @staticmethod
    def zero(spec: RingSpec) -> "RingElem":
        if spec.kind == "Mat":
            k, z = spec.order, _szero(spec.base)
            return RingElem(spec, tuple(tuple(z for _ in range(k)) for _ in range(k)))
        return RingElem(spec, _szero(spec))

    @staticmethod
    def one(spec: RingSpec) -> "RingElem":
        if spec.kind == "Mat":
            k = spec.order
            z, o = _szero(spec.base), _sone(spec.base)
            return RingElem(spec, tuple(
                tuple(o if i == j else z for j in range(k)) for i in range(k)))
        return RingElem(spec, _sone(spec))

    @staticmethod
    def scalar(spec: RingSpec, value) -> "RingElem":
        """Embed an integer (or Fraction for Q-based specs) as value * 1."""
        one = RingElem.one(spec)
        base = spec.scalar
        if base.kind == "Q":
            v = Fraction(value)
        else:
            v = int(value) % base.modulus
        if spec.kind == "Mat":
            return RingElem(spec, tuple(
                tuple(_smul(base, v, e) for e in row) for row in one.payload))
        return RingElem(spec, _smul(base, v, one.payload))

    # arithmetic -------------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, RingElem) or other.spec != self.spec:
            raise InputError("ring element spec mismatch")

    def __add__(self, other):
        self._check(other)
        s = self.spec
        if s.kind == "Mat":
            b = s.base
            return RingElem(s, tuple(
                tuple(_sadd(b, x, y) for x, y in zip(r1, r2))
                for r1, r2 in zip(self.payload, other.payload)))
        return RingElem(s, _sadd(s, self.payload, other.payload))

    def __neg__(self):
        s = self.spec
        if s.kind == "Mat":
            b = s.base
            return RingElem(s, tuple(
                tuple(_sneg(b, x) for x in row) for row in self.payload))
        return RingElem(s, _sneg(s, self.payload))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        s = self.spec
        if s.kind == "Mat":
            b, k = s.base, s.order
            a, c = self.payload, other.payload
            rows = []
            for i in range(k):
                row = []
                for j in range(k):
                    acc = _szero(b)
                    for t in range(k):
                        acc = _sadd(b, acc, _smul(b, a[i][t], c[t][j]))
                    row.append(acc)
                rows.append(tuple(row))
            return RingElem(s, tuple(rows))
        return RingElem(s, _smul(s, self.payload, other.payload))

    def is_zero(self) -> bool:
        return self == RingElem.zero(self.spec)

    def is_one(self) -> bool:
        return self == RingElem.one(self.spec)


# -- literals ----------------------------------------------------------------

def parse_elem(spec: RingSpec, literal) -> RingElem:
    """Parse an element literal: "p/q" for Q, "r" for residues, row-major
    nested lists for matrices."""
    if spec.kind == "Q":
        try:
            return RingElem(spec, Fraction(str(literal)))
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad rational literal {literal!r}") from exc
    if spec.kind == "Zmod":
        try:
            return RingElem(spec, int(str(literal)) % spec.modulus)
        except ValueError as exc:
            raise InputError(f"bad residue literal {literal!r}") from exc
    k = spec.order
    if not isinstance(literal, (list, tuple)) or len(literal) != k:
        raise InputError(f"matrix literal must be a {k}x{k} row-major array")
    rows = []
    for row in literal:
        if not isinstance(row, (list, tuple)) or len(row) != k:
            raise InputError(f"matrix literal must be a {k}x{k} row-major array")
        rows.append(tuple(parse_elem(spec.base, e).payload for e in row))
    return RingElem(spec, tuple(rows))


def format_elem(a: RingElem):
    """Serialize an element: strings for scalars, nested lists for matrices."""
    s = a.spec
    if s.kind == "Q":
        f = a.payload
        return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
    if s.kind == "Zmod":
        return str(a.payload)
    return [[format_elem(RingElem(s.base, e)) for e in row] for row in a.payload]


# -- matrix inversion over the commutative scalar base -----------------------

def scalar_matrix_inverse(rows, base: RingSpec):
    """Invert a square matrix of scalar payloads over Q or Z/n.

    Over Q: straight Gaussian elimination with Fractions.  Over Z/n the
    integer determinant and adjugate are computed exactly (via a rational
    inverse) and reduced mod n; the determinant must be a unit mod n.

    Raises NotUnit when no inverse exists.
    """
    k = len(rows)
    if base.kind == "Q":
        return _fraction_inverse([[Fraction(e) for e in row] for row in rows])
    n = base.modulus
    lifted = [[Fraction(int(e)) for e in row] for row in rows]
    det = _fraction_det([row[:] for row in lifted])
    d = int(det) % n
    g, inv_d, _ = _egcd(d, n)
    if g != 1:
        raise NotUnit(f"matrix determinant {d} is not a unit mod {n}")
    inv_q = _fraction_inverse(lifted)
    adj = [[int(det * inv_q[i][j]) % n for j in range(k)] for i in range(k)]
    return tuple(tuple((adj[i][j] * inv_d) % n for j in range(k)) for i in range(k))


def _fraction_det(m):
    k = len(m)
    det = Fraction(1)
    for col in range(k):
        piv = next((r for r in range(col, k) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, k):
            factor = m[r][col] * inv
            if factor:
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return det


def _fraction_inverse(m):
    k = len(m)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(k)]
           for i, row in enumerate(m)]
    for col in range(k):
        piv = next((r for r in range(col, k) if aug[r][col] != 0), None)
        if piv is None:
            raise NotUnit("singular matrix over Q")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [a * inv for a in aug[col]]
        for r in range(k):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return tuple(tuple(row[k:]) for row in aug)


def _egcd(a, b):
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b)."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    return old_r, old_x, old_y


# -- the three decidable predicates -----------------------------------------

def invert_unit(a: RingElem) -> RingElem:
    """Return the two-sided inverse of a, or raise NotUnit."""
    s = a.spec
    if s.kind == "Q":
        if a.payload == 0:
            raise NotUnit("0 is not a unit in Q")
        return RingElem(s, 1 / a.payload)
    if s.kind == "Zmod":
        g, x, _ = _egcd(a.payload, s.modulus)
        if g != 1:
            raise NotUnit(f"{a.payload} is not a unit mod {s.modulus}")
        return RingElem(s, x % s.modulus)
    return RingElem(s, scalar_matrix_inverse(a.payload, s.base))


def is_central(a: RingElem) -> bool:
    """True iff a commutes with the whole ring (scalar matrix, if a matrix)."""
    s = a.spec
    if s.kind != "Mat":
        return True
    k, b = s.order, s.base
    diag = a.payload[0][0]
    for i in range(k):
        for j in range(k):
            want = diag if i == j else _szero(b)
            if a.payload[i][j] != want:
                return False
    return True


def _radical_of(n: int) -> int:
    """Product of the distinct primes dividing n."""
    rad, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            rad *= p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        rad *= m
    return rad


def in_radical(a: RingElem) -> bool:
    """Membership in the Jacobson radical J(R)."""
    s = a.spec
    if s.kind == "Q":
        return a.payload == 0
    if s.kind == "Zmod":
        return a.payload % _radical_of(s.modulus) == 0
    return all(in_radical(RingElem(s.base, e)) for row in a.payload for e in row)


def center_field(spec: RingSpec):
    """The center of the ring, when it is a field.

    Returns the scalar RingSpec of the center (Q or Zmod prime); raises
    ValueError otherwise.  Callers wanting a domain error wrap this.
    """
    base = spec.scalar
    if base.kind == "Q":
        return base
    n = base.modulus
    if n >= 2 and _radical_of(n) == n and all(n % p for p in range(2, n) if p * p <= n):
        return base
    raise ValueError(f"center Z/{n} is not a field")
