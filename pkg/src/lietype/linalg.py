"""Small exact matrix and polynomial routines over a FiniteField.

Matrices are tuples of tuples of element codes; the field travels alongside
as an explicit argument. Everything here targets n <= 6, which covers every
matrix group the package builds.
"""

from __future__ import annotations

from itertools import permutations

from .errors import ConsistencyError, UsageError
from .fields import FieldElement, FiniteField, subfield_embed


def mat_identity(n: int):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(F: FiniteField, A, B):
    n, m, r = len(A), len(B), len(B[0])
    out = []
    for i in range(n):
        row = []
        Ai = A[i]
        for j in range(r):
            acc = 0
            for k in range(m):
                if Ai[k]:
                    acc = F.add_code(acc, F.mul_code(Ai[k], B[k][j]))
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_vec(F: FiniteField, A, v):
    return tuple(
        _dot(F, A[i], v) for i in range(len(A))
    )


def _dot(F, row, v):
    acc = 0
    for a, b in zip(row, v):
        if a and b:
            acc = F.add_code(acc, F.mul_code(a, b))
    return acc


def mat_transpose(A):
    return tuple(zip(*A))


def mat_scalar(F: FiniteField, c, A):
    return tuple(tuple(F.mul_code(c, x) for x in row) for row in A)


def mat_add(F: FiniteField, A, B):
    return tuple(
        tuple(F.add_code(a, b) for a, b in zip(ra, rb)) for ra, rb in zip(A, B)
    )


def mat_conj_transpose(F: FiniteField, A, base_q: int):
    """Transpose composed with entrywise x -> x^base_q."""
    return tuple(
        tuple(F.pow_code(A[j][i], base_q) for j in range(len(A)))
        for i in range(len(A[0]))
    )


def mat_inv(F: FiniteField, A):
    n = len(A)
    aug = [list(A[i]) + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise UsageError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = F.inv_code(aug[col][col])
        aug[col] = [F.mul_code(inv, x) for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [
                    F.add_code(x, F.neg_code(F.mul_code(f, y)))
                    for x, y in zip(aug[r], aug[col])
                ]
    return tuple(tuple(row[n:]) for row in aug)


def mat_rank(F: FiniteField, A):
    rows = [list(r) for r in A]
    n, m = len(rows), len(rows[0])
    rank, col = 0, 0
    while rank < n and col < m:
        piv = next((r for r in range(rank, n) if rows[r][col]), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = F.inv_code(rows[rank][col])
        rows[rank] = [F.mul_code(inv, x) for x in rows[rank]]
        for r in range(n):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [
                    F.add_code(x, F.neg_code(F.mul_code(f, y)))
                    for x, y in zip(rows[r], rows[rank])
                ]
        rank += 1
        col += 1
    return rank


def mat_det(F: FiniteField, A):
    n = len(A)
    rows = [list(r) for r in A]
    det = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col]), None)
        if piv is None:
            return 0
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = F.neg_code(det)
        det = F.mul_code(det, rows[col][col])
        inv = F.inv_code(rows[col][col])
        for r in range(col + 1, n):
            if rows[r][col]:
                f = F.mul_code(rows[r][col], inv)
                rows[r] = [
                    F.add_code(x, F.neg_code(F.mul_code(f, y)))
                    for x, y in zip(rows[r], rows[col])
                ]
    return det


# ---------------------------------------------------------------------------
# dense polynomials over F (tuples of codes, low-to-high)


def pol_trim(c):
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def pol_add(F, a, b):
    n = max(len(a), len(b))
    return pol_trim(
        tuple(
            F.add_code(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0)
            for i in range(n)
        )
    )


def pol_neg(F, a):
    return tuple(F.neg_code(x) for x in a)


def pol_mul(F, a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = F.add_code(out[i + j], F.mul_code(ai, bj))
    return pol_trim(out)


def pol_divmod(F, a, b):
    b = pol_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    quo = [0] * max(len(a) - len(b) + 1, 0)
    inv_lead = F.inv_code(b[-1])
    for k in range(len(rem) - len(b), -1, -1):
        c = F.mul_code(rem[k + len(b) - 1], inv_lead)
        quo[k] = c
        if c:
            for j, bj in enumerate(b):
                rem[k + j] = F.add_code(rem[k + j], F.neg_code(F.mul_code(c, bj)))
    return pol_trim(quo), pol_trim(rem)


def pol_eval(F, a, x_code: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = F.add_code(F.mul_code(acc, x_code), c)
    return acc


def pol_monic(F, a):
    a = pol_trim(a)
    if not a:
        return a
    inv = F.inv_code(a[-1])
    return tuple(F.mul_code(inv, c) for c in a)


def charpoly(F: FiniteField, A):
    """Characteristic polynomial det(xI - A) by permutation expansion, n <= 6."""
    n = len(A)
    if n > 6:
        raise UsageError("charpoly supports n <= 6")
    # entries of xI - A as degree-<=1 polynomials
    ent = [
        [
            ((F.neg_code(A[i][j]), 1) if i == j else (F.neg_code(A[i][j]),))
            for j in range(n)
        ]
        for i in range(n)
    ]
    total = ()
    for perm in permutations(range(n)):
        sign = _perm_sign(perm)
        term = (1,)
        for i in range(n):
            term = pol_mul(F, term, ent[i][perm[i]])
        if sign < 0:
            term = pol_neg(F, term)
        total = pol_add(F, total, term)
    total = total + (0,) * (n + 1 - len(total))
    return tuple(total[: n + 1])


def _perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, clen = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            clen += 1
        if clen % 2 == 0:
            sign = -sign
    return sign


def monic_irreducibles(F: FiniteField, degree: int):
    """All monic irreducible polynomials of the given degree (degree <= 2)."""
    q = F.q
    if degree == 1:
        return [(F.neg_code(a), 1) for a in range(q)]
    if degree == 2:
        out = []
        for c0 in range(q):
            for c1 in range(q):
                f = (c0, c1, 1)
                if all(pol_eval(F, f, x) for x in range(q)):
                    out.append(f)
        return out
    raise UsageError("only degrees 1 and 2 are enumerated")


def factor_poly(F: FiniteField, f):
    """Factor a monic polynomial of degree <= 4 into monic irreducibles.

    Returns a list of (factor, multiplicity), factors sorted by (degree, coeffs).
    Degree 1 and 2 factors are removed by direct trial division; whatever
    remains of degree 3 or 4 is then irreducible (its quadratic and linear
    factors are already gone).
    """
    f = pol_monic(F, f)
    if len(f) - 1 > 4:
        raise UsageError("factor_poly supports degree <= 4")
    factors = {}
    for d in (1, 2):
        for p in monic_irreducibles(F, d):
            while len(f) >= len(p):
                quo, rem = pol_divmod(F, f, p)
                if rem:
                    break
                factors[p] = factors.get(p, 0) + 1
                f = quo
    if len(f) > 1:
        factors[f] = factors.get(f, 0) + 1
    out = sorted(factors.items(), key=lambda kv: (len(kv[0]), kv[0]))
    return out


def root_in_extension(F: FiniteField, f, big: FiniteField) -> FieldElement:
    """Some root of the F-polynomial f inside the extension field big."""
    coeffs_big = [subfield_embed(FieldElement(F, c), big).code for c in f]
    for z in range(big.q):
        acc = 0
        for c in reversed(coeffs_big):
            acc = big.add_code(big.mul_code(acc, z), c)
        if acc == 0:
            return FieldElement(big, z)
    raise ConsistencyError("polynomial has no root in the requested extension")
