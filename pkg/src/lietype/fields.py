"""Exact arithmetic in small finite fields F_{p^k}, q <= 2^16.

Elements are stored as integers 0..q-1 encoding coefficient vectors base p
(little-endian) relative to the power basis of a fixed defining polynomial.
Multiplication runs through precomputed exp/log tables for the canonical
generator, so every operation is exact integer work.

Defining polynomials come from a vendored table of Conway polynomials for
p <= 7, k <= 6; outside the table the lexicographically least primitive
polynomial (by the base-p integer code of its coefficient vector) is used.
Every polynomial, vendored or found, is checked primitive at construction.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .errors import ConsistencyError, UsageError

# Conway polynomials, coefficients low-to-high, monic. p <= 7, k <= 6.
_CONWAY = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 6): (2, 2, 1, 0, 2, 0, 1),
    (5, 1): (3, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (5, 4): (2, 4, 4, 0, 1),
    (5, 5): (3, 4, 0, 0, 0, 1),
    (5, 6): (2, 0, 1, 4, 1, 0, 1),
    (7, 1): (4, 1),
    (7, 2): (3, 6, 1),
    (7, 3): (4, 0, 6, 1),
    (7, 4): (3, 4, 5, 0, 1),
    (7, 5): (4, 1, 0, 0, 0, 1),
    (7, 6): (3, 6, 4, 5, 1, 0, 1),
}

_Q_MAX = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factor_int(n: int) -> dict:
    """Prime factorization by trial division; fine for n <= 2^32."""
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def factor_prime_power(q: int):
    """Split q into (p, k) with q = p^k, or raise UsageError."""
    if q < 2:
        raise UsageError(f"{q} is not a prime power")
    f = factor_int(q)
    if len(f) != 1:
        raise UsageError(f"{q} is not a prime power")
    ((p, k),) = f.items()
    return p, k


@dataclass(frozen=True)
class PrimePower:
    """A validated prime power q = p^k with q <= 2^16."""

    p: int
    k: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise UsageError(f"{self.p} is not prime")
        if self.k < 1:
            raise UsageError("exponent must be >= 1")
        if self.q > _Q_MAX:
            raise UsageError(f"q = {self.q} exceeds the supported bound 2^16")

    @property
    def q(self) -> int:
        return self.p**self.k

    @classmethod
    def of(cls, q: int) -> "PrimePower":
        p, k = factor_prime_power(q)
        return cls(p, k)


# ---------------------------------------------------------------------------
# polynomial scratch arithmetic mod p (coefficient tuples, low-to-high)


def _pmod_mul(a, b, f, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    # reduce by monic f
    deg_f = len(f) - 1
    for i in range(len(out) - 1, deg_f - 1, -1):
        c = out[i]
        if c:
            out[i] = 0
            for j in range(deg_f):
                out[i - deg_f + j] = (out[i - deg_f + j] - c * f[j]) % p
    return tuple(out[:deg_f])


def _pmod_pow_x(e, f, p):
    """x^e modulo monic f over F_p."""
    deg_f = len(f) - 1
    result = (1,) + (0,) * (deg_f - 1)
    base = tuple(1 if i == 1 else 0 for i in range(deg_f)) if deg_f > 1 else (
        (-f[0]) % p,
    )
    while e:
        if e & 1:
            result = _pmod_mul(result, base, f, p)
        base = _pmod_mul(base, base, f, p)
        e >>= 1
    return result


def _is_primitive_poly(f, p):
    """True when x generates the unit group of F_p[x]/(f); implies f irreducible."""
    k = len(f) - 1
    if f[0] == 0:
        return False
    q1 = p**k - 1
    one = (1,) + (0,) * (k - 1)
    if _pmod_pow_x(q1, f, p) != one:
        return False
    for r in factor_int(q1):
        if _pmod_pow_x(q1 // r, f, p) == one:
            return False
    return True


def _least_primitive_poly(p, k):
    """Lexicographically least monic primitive polynomial of degree k over F_p.

    Ordered by the base-p integer code of the non-leading coefficients.
    """
    if k == 1:
        for r in range(2, p):
            if _int_order(r, p) == p - 1:
                return ((-r) % p, 1)
        return (p - 1, 1)  # p = 2: x + 1
    for code in range(1, p**k):
        coeffs = []
        c = code
        for _ in range(k):
            coeffs.append(c % p)
            c //= p
        if coeffs[0] == 0:
            continue
        f = tuple(coeffs) + (1,)
        if _is_primitive_poly(f, p):
            return f
    raise ConsistencyError(f"no primitive polynomial of degree {k} over F_{p}")


def _int_order(a, p):
    v, n = a % p, 1
    while v != 1:
        v = v * a % p
        n += 1
    return n


# ---------------------------------------------------------------------------


class FiniteField:
    """The field with q = p^k elements. Use GF(q) to get the cached instance."""

    def __init__(self, p: int, k: int):
        self.pp = PrimePower(p, k)
        self.p = p
        self.k = k
        self.q = p**k
        key = (p, k)
        if key in _CONWAY:
            self.defining = _CONWAY[key]
            self.conway = True
        else:
            self.defining = _least_primitive_poly(p, k)
            self.conway = False
        if not _is_primitive_poly(self.defining, p):
            raise ConsistencyError(
                f"defining polynomial for F_{self.q} is not primitive: {self.defining}"
            )
        self._build_tables()
        self._embed_factor = {}  # (sub_p, sub_k) -> generator exponent multiplier

    def _build_tables(self):
        p, k, q = self.p, self.k, self.q
        # digits[e] = coefficient tuple of element code e
        self.digits = []
        for e in range(q):
            d, c = [], e
            for _ in range(k):
                d.append(c % p)
                c //= p
            self.digits.append(tuple(d))
        if k == 1:
            g = (-self.defining[0]) % p  # root of the linear defining polynomial
            exp = [1]
            for _ in range(q - 2):
                exp.append(exp[-1] * g % p)
        else:
            # generator is the class of x; multiply-by-x is shift-and-reduce
            f = self.defining
            exp = [1]
            cur_code = 1
            for _ in range(q - 1):
                d = self.digits[cur_code]
                shifted = [0] + list(d[:-1])
                top = d[-1]
                if top:
                    for j in range(k):
                        shifted[j] = (shifted[j] - top * f[j]) % p
                cur_code = 0
                for j in range(k - 1, -1, -1):
                    cur_code = cur_code * p + shifted[j]
                exp.append(cur_code)
            exp = exp[: q - 1]
        if len(set(exp)) != q - 1:
            raise ConsistencyError(f"generator of F_{q} does not have full order")
        self.exp = exp
        self.log = [-1] * q
        for i, e in enumerate(exp):
            self.log[e] = i
        self.generator_code = exp[1] if q > 2 else 1

    # -- raw code arithmetic (codes are ints 0..q-1) -------------------

    def add_code(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        p = self.p
        da, db = self.digits[a], self.digits[b]
        out = 0
        for j in range(self.k - 1, -1, -1):
            out = out * p + (da[j] + db[j]) % p
        return out

    def neg_code(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        p = self.p
        d = self.digits[a]
        out = 0
        for j in range(self.k - 1, -1, -1):
            out = out * p + (-d[j]) % p
        return out

    def mul_code(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]

    def inv_code(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.exp[(-self.log[a]) % (self.q - 1)]

    def pow_code(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("inverse of zero")
            return 0 if e else 1
        return self.exp[(self.log[a] * e) % (self.q - 1)]

    # -- elements -------------------------------------------------------

    def __call__(self, code) -> "FieldElement":
        """Element from an integer code (coefficient vector base p)."""
        if isinstance(code, FieldElement):
            if code.field is not self:
                raise UsageError("element belongs to a different field")
            return code
        code = int(code)
        if self.k == 1:
            code %= self.p
        elif not 0 <= code < self.q:
            raise UsageError(f"element code {code} out of range for F_{self.q}")
        return FieldElement(self, code)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def generator(self) -> "FieldElement":
        """Canonical multiplicative generator (class of x, or least primitive root)."""
        return FieldElement(self, self.generator_code)

    def from_coeffs(self, coeffs) -> "FieldElement":
        code = 0
        cs = list(coeffs) + [0] * (self.k - len(coeffs))
        for c in reversed(cs[: self.k]):
            code = code * self.p + c % self.p
        return FieldElement(self, code)

    def elements(self):
        return [FieldElement(self, e) for e in range(self.q)]

    def units(self):
        return [FieldElement(self, self.exp[i]) for i in range(self.q - 1)]

    def poly_str(self) -> str:
        terms = []
        for i in range(self.k, -1, -1):
            c = self.defining[i] if i < len(self.defining) else 0
            if i == self.k:
                c = 1
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append("x" if c == 1 else f"{c}*x")
            else:
                terms.append(f"x^{i}" if c == 1 else f"{c}*x^{i}")
        return " + ".join(terms)

    def __repr__(self):
        return f"GF({self.q})"

    # -- subfield plumbing ------------------------------------------------

    def embed_exponent_factor(self, sub: "FiniteField") -> int:
        """j such that the embedding of sub sends g_sub to g_self^(R*j).

        R = (q-1)/(q_sub-1). For Conway-compatible pairs j = 1; otherwise the
        least j coprime to q_sub-1 making g_self^(R*j) a root of sub's
        defining polynomial.
        """
        key = (sub.p, sub.k)
        if key in self._embed_factor:
            return self._embed_factor[key]
        if sub.p != self.p or self.k % sub.k != 0:
            raise UsageError(f"F_{sub.q} is not a subfield of F_{self.q}")
        ratio = (self.q - 1) // (sub.q - 1)
        import math

        for j in range(1, sub.q):
            if math.gcd(j, sub.q - 1) != 1:
                continue
            z = self.exp[(ratio * j) % (self.q - 1)]
            # evaluate sub's defining polynomial at z inside self
            acc = 0
            for c in reversed(sub.defining):
                acc = self.add_code(self.mul_code(acc, z), c % self.p)
            if acc == 0:
                self._embed_factor[key] = j
                return j
        raise ConsistencyError(f"no embedding root of F_{sub.q} found in F_{self.q}")


_FIELD_CACHE: dict = {}


def GF(q: int) -> FiniteField:
    """Cached field with q elements."""
    p, k = factor_prime_power(q)
    key = (p, k)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = FiniteField(p, k)
    return _FIELD_CACHE[key]


class FieldElement:
    """An element of a FiniteField; immutable, hashable, exact."""

    __slots__ = ("field", "code")

    def __init__(self, field: FiniteField, code: int):
        self.field = field
        self.code = code

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise UsageError("mixed-field arithmetic")
            return other.code
        if isinstance(other, int):
            return self.field(other % self.field.p if self.field.k > 1 else other).code
        return None

    def __add__(self, other):
        oc = self._coerce(other)
        if oc is None:
            return NotImplemented
        return FieldElement(self.field, self.field.add_code(self.code, oc))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, self.field.neg_code(self.code))

    def __sub__(self, other):
        oc = self._coerce(other)
        if oc is None:
            return NotImplemented
        return FieldElement(self.field, self.field.add_code(self.code, self.field.neg_code(oc)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        oc = self._coerce(other)
        if oc is None:
            return NotImplemented
        return FieldElement(self.field, self.field.mul_code(self.code, oc))

    __rmul__ = __mul__

    def __truediv__(self, other):
        oc = self._coerce(other)
        if oc is None:
            return NotImplemented
        return FieldElement(self.field, self.field.mul_code(self.code, self.field.inv_code(oc)))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow_code(self.code, e))

    def inverse(self):
        return FieldElement(self.field, self.field.inv_code(self.code))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field is other.field and self.code == other.code
        if isinstance(other, int):
            return self.code == self.field(other).code
        return NotImplemented

    def __hash__(self):
        return hash((id(self.field), self.code))

    def __bool__(self):
        return self.code != 0

    @property
    def coeffs(self):
        return self.field.digits[self.code]

    def dlog(self) -> int:
        if self.code == 0:
            raise UsageError("discrete log of zero")
        return self.field.log[self.code]

    def __repr__(self):
        f = self.field
        if f.k == 1:
            return f"{self.code}"
        if self.code == 0:
            return "0"
        return f"g^{f.log[self.code]}"


# ---------------------------------------------------------------------------
# the operations layer


def frobenius(x: FieldElement, base_q: int) -> FieldElement:
    """x -> x^base_q, the generator of Gal(F_q / F_{base_q})."""
    f = x.field
    bp, bk = factor_prime_power(base_q)
    if bp != f.p or f.k % bk != 0:
        raise UsageError(f"F_{base_q} is not a subfield of F_{f.q}")
    return x**base_q


def frobenius_orbit(x: FieldElement, base_q: int):
    """Orbit of x under repeated base_q-power Frobenius."""
    orbit = [x]
    y = frobenius(x, base_q)
    while y != x:
        orbit.append(y)
        y = frobenius(y, base_q)
    return orbit


def subfield_embed(x: FieldElement, into: FiniteField) -> FieldElement:
    """Canonical embedding F_{q_sub} -> F_q along discrete logs."""
    sub = x.field
    if sub is into:
        return x
    j = into.embed_exponent_factor(sub)
    if x.code == 0:
        return into.zero
    ratio = (into.q - 1) // (sub.q - 1)
    return FieldElement(into, into.exp[(ratio * j * sub.log[x.code]) % (into.q - 1)])


def _section(y: FieldElement, sub: FiniteField) -> FieldElement:
    """Inverse of subfield_embed on its image."""
    big = y.field
    if big is sub:
        return y
    if y.code == 0:
        return sub.zero
    j = big.embed_exponent_factor(sub)
    ratio = (big.q - 1) // (sub.q - 1)
    t = big.log[y.code]
    if t % ratio != 0:
        raise ConsistencyError("element is not in the requested subfield")
    e = (t // ratio) * pow(j, -1, sub.q - 1) % (sub.q - 1)
    return FieldElement(sub, sub.exp[e])


def norm_trace(x: FieldElement, sub: FiniteField):
    """(norm, trace) of x relative to the subfield extension F_q / F_{q_sub}."""
    big = x.field
    if big.p != sub.p or big.k % sub.k != 0:
        raise UsageError(f"F_{sub.q} is not a subfield of F_{big.q}")
    n = big.k // sub.k
    Q = sub.q
    if x.code == 0:
        nrm = sub.zero
    else:
        e = big.log[x.code] * ((big.q - 1) // (Q - 1)) % (big.q - 1)
        nrm = _section(FieldElement(big, big.exp[e]), sub)
    t = big.zero
    y = x
    for _ in range(n):
        t = t + y
        y = y**Q
    tr = _section(t, sub)
    return nrm, tr


def norm(x: FieldElement, sub: FiniteField) -> FieldElement:
    return norm_trace(x, sub)[0]


def trace(x: FieldElement, sub: FiniteField) -> FieldElement:
    return norm_trace(x, sub)[1]


@dataclass(frozen=True)
class MultiplicativeCharacter:
    """Character x -> exp(2*pi*i * exponent * dlog(x) / modulus) of F_q^x.

    modulus must be q - 1 of the field the character will be evaluated on.
    """

    modulus: int
    exponent: int

    def __post_init__(self):
        if self.modulus < 1:
            raise UsageError("modulus must be positive")
        object.__setattr__(self, "exponent", self.exponent % self.modulus)

    @property
    def is_trivial(self) -> bool:
        return self.exponent == 0

    def __call__(self, x: FieldElement) -> complex:
        return char_eval(self, x)

    def conj(self) -> "MultiplicativeCharacter":
        return MultiplicativeCharacter(self.modulus, -self.exponent)

    def norm_inflate(self, big_modulus: int) -> "MultiplicativeCharacter":
        """Compose with the norm map down to this character's field."""
        if big_modulus % self.modulus != 0:
            raise UsageError("norm inflation needs modulus | big_modulus")
        return MultiplicativeCharacter(
            big_modulus, self.exponent * (big_modulus // self.modulus)
        )


def char_eval(chi: MultiplicativeCharacter, x: FieldElement) -> complex:
    if x.field.q - 1 != chi.modulus:
        raise UsageError(
            f"character modulus {chi.modulus} does not match field F_{x.field.q}"
        )
    if x.code == 0:
        raise UsageError("multiplicative character evaluated at zero")
    e = x.field.log[x.code]
    return cmath.exp(2j * cmath.pi * ((chi.exponent * e) % chi.modulus) / chi.modulus)


def is_regular_character(chi: MultiplicativeCharacter, n: int, q: int) -> bool:
    """True when chi on F_{q^n}^x is fixed by no nontrivial power of Frobenius."""
    m = q**n - 1
    if chi.modulus != m:
        raise UsageError(f"character modulus must be q^n - 1 = {m}")
    e = chi.exponent
    for i in range(1, n):
        if (e * pow(q, i, m)) % m == e:
            return False
    return True


def regular_exponents(n: int, q: int):
    """All exponents of regular characters of F_{q^n}^x."""
    m = q**n - 1
    return [
        e
        for e in range(m)
        if is_regular_character(MultiplicativeCharacter(m, e), n, q)
    ]


def regular_orbit_reps(n: int, q: int):
    """One exponent per Frobenius orbit of regular characters (least member)."""
    m = q**n - 1
    seen = set()
    reps = []
    for e in regular_exponents(n, q):
        if e in seen:
            continue
        orb = {(e * pow(q, i, m)) % m for i in range(n)}
        seen |= orb
        reps.append(e)
    return reps
