"""Split octonion arithmetic in the vector-matrix form, and the 27-dim
Jordan algebra's symmetrized product and determinant.

Scalars live in F_p for an odd prime p <= 13, or in the exact rationals.
The octonion is stored as two scalars and a vector/covector pair; the
cross products are taken through the standard volume trivialization.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ConsistencyError, UsageError

_ODD_PRIMES = (3, 5, 7, 11, 13)


@dataclass(frozen=True)
class ScalarRing:
    """F_p (odd p <= 13) when p > 0, otherwise the rationals."""

    p: int

    def __post_init__(self):
        if self.p and self.p not in _ODD_PRIMES:
            raise UsageError(f"scalars live in F_p for odd p <= 13 or Q, not p = {self.p}")

    def coerce(self, x):
        if self.p:
            return int(x) % self.p
        return Fraction(x)

    def add(self, x, y):
        return (x + y) % self.p if self.p else x + y

    def sub(self, x, y):
        return (x - y) % self.p if self.p else x - y

    def mul(self, x, y):
        return (x * y) % self.p if self.p else x * y

    def neg(self, x):
        return (-x) % self.p if self.p else -x

    def half(self, x):
        if self.p:
            return x * pow(2, -1, self.p) % self.p
        return x / 2

    @property
    def zero(self):
        return 0 if self.p else Fraction(0)

    @property
    def one(self):
        return 1 if self.p else Fraction(1)


def _vadd(R, u, v):
    return tuple(R.add(a, b) for a, b in zip(u, v))


def _vsub(R, u, v):
    return tuple(R.sub(a, b) for a, b in zip(u, v))


def _vneg(R, u):
    return tuple(R.neg(a) for a in u)


def _vscale(R, c, u):
    return tuple(R.mul(c, a) for a in u)


def _pair(R, v, w):
    out = R.zero
    for a, b in zip(v, w):
        out = R.add(out, R.mul(a, b))
    return out


def _cross(R, u, v):
    return (
        R.sub(R.mul(u[1], v[2]), R.mul(u[2], v[1])),
        R.sub(R.mul(u[2], v[0]), R.mul(u[0], v[2])),
        R.sub(R.mul(u[0], v[1]), R.mul(u[1], v[0])),
    )


@dataclass(frozen=True)
class SplitOctonion:
    """(a, v; w, b) with a, b scalars, v a vector, w a covector."""

    ring: ScalarRing
    a: object
    v: tuple
    w: tuple
    b: object

    @classmethod
    def make(cls, ring, a, v, w, b):
        return cls(
            ring,
            ring.coerce(a),
            tuple(ring.coerce(t) for t in v),
            tuple(ring.coerce(t) for t in w),
            ring.coerce(b),
        )

    @classmethod
    def scalar(cls, ring, s):
        z = (0, 0, 0)
        return cls.make(ring, s, z, z, s)

    @classmethod
    def basis(cls, ring):
        """The 8 standard basis elements: two diagonal, three v, three w."""
        z3 = (0, 0, 0)
        out = [cls.make(ring, 1, z3, z3, 0), cls.make(ring, 0, z3, z3, 1)]
        for i in range(3):
            e = tuple(1 if j == i else 0 for j in range(3))
            out.append(cls.make(ring, 0, e, z3, 0))
        for i in range(3):
            e = tuple(1 if j == i else 0 for j in range(3))
            out.append(cls.make(ring, 0, z3, e, 0))
        return out

    def _check(self, other):
        if self.ring != other.ring:
            raise UsageError("octonions over different scalar rings")

    def __add__(self, other):
        self._check(other)
        R = self.ring
        return SplitOctonion(
            R, R.add(self.a, other.a), _vadd(R, self.v, other.v),
            _vadd(R, self.w, other.w), R.add(self.b, other.b),
        )

    def __sub__(self, other):
        self._check(other)
        R = self.ring
        return SplitOctonion(
            R, R.sub(self.a, other.a), _vsub(R, self.v, other.v),
            _vsub(R, self.w, other.w), R.sub(self.b, other.b),
        )

    def __neg__(self):
        R = self.ring
        return SplitOctonion(R, R.neg(self.a), _vneg(R, self.v), _vneg(R, self.w), R.neg(self.b))

    def scale(self, c):
        R = self.ring
        c = R.coerce(c)
        return SplitOctonion(R, R.mul(c, self.a), _vscale(R, c, self.v), _vscale(R, c, self.w), R.mul(c, self.b))

    def __mul__(self, other):
        self._check(other)
        R = self.ring
        a, v, w, b = self.a, self.v, self.w, self.b
        a2, v2, w2, b2 = other.a, other.v, other.w, other.b
        return SplitOctonion(
            R,
            R.add(R.mul(a, a2), _pair(R, v, w2)),
            _vsub(R, _vadd(R, _vscale(R, a, v2), _vscale(R, b2, v)), _cross(R, w, w2)),
            _vadd(R, _vadd(R, _vscale(R, a2, w), _vscale(R, b, w2)), _cross(R, v, v2)),
            R.add(R.mul(b, b2), _pair(R, v2, w)),
        )

    def conjugate(self) -> "SplitOctonion":
        R = self.ring
        return SplitOctonion(R, self.b, _vneg(R, self.v), _vneg(R, self.w), self.a)

    def trace(self):
        return self.ring.add(self.a, self.b)

    def norm(self):
        return self.ring.sub(self.ring.mul(self.a, self.b), _pair(self.ring, self.v, self.w))

    def is_scalar(self) -> bool:
        z = self.ring.zero
        return self.a == self.b and all(t == z for t in self.v) and all(t == z for t in self.w)


def oct_multiply(o1: SplitOctonion, o2: SplitOctonion) -> SplitOctonion:
    return o1 * o2


def oct_norm_trace_conj(o: SplitOctonion):
    """(Nm(x), tr(x), conjugate); x x-bar is the central scalar Nm(x)."""
    prod = o * o.conjugate()
    if not prod.is_scalar() or prod.a != o.norm():
        raise ConsistencyError("x x-bar is not the norm scalar")
    return o.norm(), o.trace(), o.conjugate()


@dataclass(frozen=True)
class JordanElement:
    """Hermitian 3x3 element (a, z, y-bar / z-bar, b, x / y, x-bar, c)."""

    a: object
    b: object
    c: object
    x: SplitOctonion
    y: SplitOctonion
    z: SplitOctonion

    @classmethod
    def make(cls, ring, a, b, c, x, y, z):
        return cls(ring.coerce(a), ring.coerce(b), ring.coerce(c), x, y, z)

    @classmethod
    def identity(cls, ring):
        o = SplitOctonion.scalar(ring, 0)
        return cls.make(ring, 1, 1, 1, o, o, o)

    @property
    def ring(self):
        return self.x.ring

    def matrix(self):
        R = self.ring
        sc = lambda s: SplitOctonion.scalar(R, s)
        return (
            (sc(self.a), self.z, self.y.conjugate()),
            (self.z.conjugate(), sc(self.b), self.x),
            (self.y, self.x.conjugate(), sc(self.c)),
        )

    def cyclic(self) -> "JordanElement":
        """(a, b, c; x, y, z) -> (b, c, a; y, z, x)."""
        return JordanElement(self.b, self.c, self.a, self.y, self.z, self.x)


def _oct_matmul(A, B):
    n = 3
    out = []
    for r in range(n):
        row = []
        for c in range(n):
            acc = None
            for k in range(n):
                term = A[r][k] * B[k][c]
                acc = term if acc is None else acc + term
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def jordan_product(A: JordanElement, B: JordanElement) -> JordanElement:
    """A o B = (AB + BA) / 2, read back off the hermitian shape."""
    R = A.ring
    if R != B.ring:
        raise UsageError("elements over different scalar rings")
    if R.p == 2:
        raise UsageError("the symmetrized product needs characteristic != 2")
    MA, MB = A.matrix(), B.matrix()
    P1 = _oct_matmul(MA, MB)
    P2 = _oct_matmul(MB, MA)
    M = tuple(
        tuple((P1[r][c] + P2[r][c]).scale(R.half(R.one)) for c in range(3))
        for r in range(3)
    )
    for i in range(3):
        if not M[i][i].is_scalar():
            raise ConsistencyError("symmetrized product has a non-scalar diagonal")
    for r in range(3):
        for c in range(r + 1, 3):
            if M[r][c] != M[c][r].conjugate():
                raise ConsistencyError("symmetrized product is not hermitian")
    return JordanElement(M[0][0].a, M[1][1].a, M[2][2].a, M[1][2], M[2][0], M[0][1])


def jordan_det(A: JordanElement):
    """abc + tr((x y) z) - a Nm(x) - b Nm(y) - c Nm(z)."""
    R = A.ring
    out = R.mul(R.mul(A.a, A.b), A.c)
    out = R.add(out, ((A.x * A.y) * A.z).trace())
    out = R.sub(out, R.mul(A.a, A.x.norm()))
    out = R.sub(out, R.mul(A.b, A.y.norm()))
    out = R.sub(out, R.mul(A.c, A.z.norm()))
    return out


def random_octonion(ring: ScalarRing, rng) -> SplitOctonion:
    if ring.p:
        pick = lambda: rng.randrange(ring.p)
    else:
        pick = lambda: Fraction(rng.randrange(-9, 10), rng.randrange(1, 7))
    return SplitOctonion.make(
        ring, pick(), (pick(), pick(), pick()), (pick(), pick(), pick()), pick()
    )


def random_jordan(ring: ScalarRing, rng) -> JordanElement:
    if ring.p:
        pick = lambda: rng.randrange(ring.p)
    else:
        pick = lambda: Fraction(rng.randrange(-9, 10), rng.randrange(1, 7))
    return JordanElement.make(
        ring, pick(), pick(), pick(),
        random_octonion(ring, rng), random_octonion(ring, rng), random_octonion(ring, rng),
    )


def composition_identity_sweep(p: int, samples: int, seed: int = 0xA11B) -> int:
    """Check Nm(xy) = Nm(x)Nm(y) on random pairs; returns the pair count."""
    import random as _random

    ring = ScalarRing(p)
    rng = _random.Random(seed)
    for _ in range(samples):
        x = random_octonion(ring, rng)
        y = random_octonion(ring, rng)
        lhs = (x * y).norm()
        rhs = ring.mul(x.norm(), y.norm())
        if lhs != rhs:
            raise ConsistencyError(f"composition identity fails at {x}, {y}")
    return samples
