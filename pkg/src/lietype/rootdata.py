"""Invariant-degree tables and order polynomials for the simple types.

Everything is exact: orders are IntPolynomials in q, evaluated only on
demand. The q -> 1 limit and the p-part split are derived from the same
polynomial, so the three views can never drift apart.
"""

from __future__ import annotations

from .errors import UsageError
from .fields import factor_prime_power
from .intpoly import IntPolynomial, q_pow_minus_one

_EXCEPTIONAL_DEGREES = {
    ("G", 2): (2, 6),
    ("F", 4): (2, 6, 8, 12),
    ("E", 6): (2, 5, 6, 8, 9, 12),
    ("E", 7): (2, 6, 8, 10, 12, 14, 18),
    ("E", 8): (2, 8, 12, 14, 18, 20, 24, 30),
}

# A concrete sample hitting every family; used by the verification sweep.
TABULATED_TYPES = (
    ("A", 1), ("A", 2), ("A", 3), ("A", 4),
    ("B", 2), ("B", 3),
    ("C", 2), ("C", 3),
    ("D", 4),
    ("G", 2), ("F", 4),
    ("E", 6), ("E", 7), ("E", 8),
)


def degrees(family: str, rank: int):
    """Degrees of the basic invariants of the Weyl group."""
    family = family.upper()
    if family == "A":
        if rank < 1:
            raise UsageError("type A needs rank >= 1")
        return tuple(range(2, rank + 2))
    if family in ("B", "C"):
        if rank < 2:
            raise UsageError(f"type {family} needs rank >= 2")
        return tuple(range(2, 2 * rank + 1, 2))
    if family == "D":
        if rank < 3:
            raise UsageError("type D needs rank >= 3")
        return tuple(range(2, 2 * rank - 1, 2)) + (rank,)
    key = (family, rank)
    if key in _EXCEPTIONAL_DEGREES:
        return _EXCEPTIONAL_DEGREES[key]
    raise UsageError(f"unknown type {family}_{rank}")


def weyl_order(family: str, rank: int) -> int:
    """|W|, the product of the invariant degrees."""
    out = 1
    for d in degrees(family, rank):
        out *= d
    return out


def positive_roots(family: str, rank: int) -> int:
    """N = number of positive roots = sum of (d_i - 1)."""
    return sum(d - 1 for d in degrees(family, rank))


def order_polynomial(family: str, rank: int) -> IntPolynomial:
    """|G(F_q)| = q^N * prod(q^{d_i} - 1) as an exact polynomial in q."""
    ds = degrees(family, rank)
    out = IntPolynomial.x_power(sum(d - 1 for d in ds))
    for d in ds:
        out = out * q_pow_minus_one(d)
    return out


def gl_order_polynomial(n: int) -> IntPolynomial:
    """|GL_n(F_q)| = q^{n(n-1)/2} * prod_{i=1}^{n} (q^i - 1)."""
    if n < 1:
        raise UsageError("GL needs n >= 1")
    out = IntPolynomial.x_power(n * (n - 1) // 2)
    for i in range(1, n + 1):
        out = out * q_pow_minus_one(i)
    return out


def sl_order_polynomial(n: int) -> IntPolynomial:
    if n < 2:
        raise UsageError("SL needs n >= 2")
    return gl_order_polynomial(n).divexact(q_pow_minus_one(1))


def ennola_unitary_order(gl_poly: IntPolynomial) -> IntPolynomial:
    """Order of the unitary twin: substitute q -> -q, normalize the sign."""
    out = gl_poly.substitute_negated()
    if out.content_sign() < 0:
        out = -out
    return out


def u_order_polynomial(n: int) -> IntPolynomial:
    """|U_n(F_q)| (matrices over F_{q^2} fixing a hermitian form)."""
    return ennola_unitary_order(gl_order_polynomial(n))


def sp_order_polynomial(n: int) -> IntPolynomial:
    """|Sp_n(F_q)| for even n (type C_{n/2})."""
    if n < 2 or n % 2:
        raise UsageError("Sp needs even n >= 2")
    return order_polynomial("C", n // 2) if n > 2 else order_polynomial("A", 1)


def group_order_polynomial(family: str, n: int) -> IntPolynomial:
    """Order polynomial for a concrete matrix family: GL, SL, U, SP."""
    family = family.upper()
    if family == "GL":
        return gl_order_polynomial(n)
    if family == "SL":
        return sl_order_polynomial(n)
    if family == "U":
        return u_order_polynomial(n)
    if family == "SP":
        return sp_order_polynomial(n)
    raise UsageError(f"unknown matrix family {family!r}")


def q_to_one_limit(family: str, rank: int) -> int:
    """Limit of |G(F_q)| / (q-1)^rank * q^{-N} as q -> 1; equals |W|."""
    ds = degrees(family, rank)
    poly = IntPolynomial((1,))
    for d in ds:
        poly = poly * q_pow_minus_one(d)
    for _ in range(len(ds)):
        poly = poly.divexact(q_pow_minus_one(1))
    return poly(1)


def p_part_split(order_poly: IntPolynomial, q: int):
    """Split |G(F_q)| as (p-part, p'-part), both positive ints."""
    p, _ = factor_prime_power(q)
    total = order_poly(q)
    if total <= 0:
        raise UsageError("order polynomial must be positive at q")
    p_part = 1
    while total % p == 0:
        total //= p
        p_part *= p
    return p_part, total
