"""Exact dense polynomials with integer coefficients.

Order formulas of the big exceptional groups need degrees into the hundreds
(E8 gives degree 248 in q), so everything here is plain Python ints: no
overflow, no floats anywhere.
"""

from __future__ import annotations

from .errors import ConsistencyError


def _trim(coeffs):
    i = len(coeffs)
    while i > 0 and coeffs[i - 1] == 0:
        i -= 1
    return tuple(coeffs[:i])


class IntPolynomial:
    """Polynomial in one variable over Z, coefficients stored low-to-high."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _trim(tuple(int(c) for c in coeffs))

    # -- constructors ------------------------------------------------

    @classmethod
    def const(cls, c):
        return cls((c,))

    @classmethod
    def x_power(cls, k, c=1):
        return cls((0,) * k + (c,))

    # -- basic structure ---------------------------------------------

    @property
    def degree(self):
        """Degree, with the zero polynomial reported as -1."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.const(other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                term = f"{mag}q" if k == 1 else f"{mag}q^{k}"
            if not parts:
                parts.append(term if c > 0 else "-" + term)
            else:
                parts.append(("+ " if c > 0 else "- ") + term)
        return " ".join(parts)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.const(other)
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return IntPolynomial(
            tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))
        )

    def __neg__(self):
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.const(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.const(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return IntPolynomial(out)

    __rmul__ = __mul__
    __radd__ = __add__

    def divexact(self, other):
        """Exact division; raises if the remainder is nonzero."""
        if isinstance(other, int):
            other = IntPolynomial.const(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            if any(rem):
                raise ConsistencyError("inexact polynomial division")
            return IntPolynomial()
        out = [0] * (dq + 1)
        for k in range(dq, -1, -1):
            c = rem[k + other.degree]
            if c % lead != 0:
                raise ConsistencyError("inexact polynomial division")
            f = c // lead
            out[k] = f
            if f:
                for j, oc in enumerate(other.coeffs):
                    rem[k + j] -= f * oc
        if any(rem):
            raise ConsistencyError("inexact polynomial division")
        return IntPolynomial(out)

    def __call__(self, q):
        """Evaluate at an integer by Horner's rule."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def substitute_negated(self):
        """Return p(-q): negate every odd-degree coefficient."""
        return IntPolynomial(
            tuple(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs))
        )

    def content_sign(self):
        """Sign of the leading coefficient (0 for the zero polynomial)."""
        if not self.coeffs:
            return 0
        return 1 if self.coeffs[-1] > 0 else -1


ONE = IntPolynomial((1,))
Q = IntPolynomial((0, 1))


def q_pow_minus_one(k):
    """q^k - 1."""
    return IntPolynomial((-1,) + (0,) * (k - 1) + (1,))


def q_pow_plus_one(k):
    """q^k + 1."""
    return IntPolynomial((1,) + (0,) * (k - 1) + (1,))
