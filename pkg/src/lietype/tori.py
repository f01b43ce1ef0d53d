"""Classification data for maximal tori of the small classical groups.

Everything here is combinatorial: torus classes are labeled by partitions
(GL, and via the sign-flip bijection also U) or by signed cycle types
(Sp_4), with exact order polynomials. The weyl_order field is the order of
the finite Weyl group W(T)^F acting on the torus class — the number used
by inner-product formulas — which at degenerate small q can differ from
the set-theoretic normalizer quotient of the finite point group.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .errors import DomainError, UsageError
from .intpoly import IntPolynomial, q_pow_minus_one, q_pow_plus_one


@dataclass(frozen=True)
class TorusClass:
    family: str  # 'GL', 'U', 'SP'
    n: int  # matrix size of the ambient group
    tag: str
    datum: tuple  # ('s', a) split factors / ('n', a) norm factors
    order_poly: IntPolynomial
    split_rank: int
    weyl_order: int
    anisotropic: bool  # modulo the center for GL

    def order(self, q: int) -> int:
        return self.order_poly(q)

    def __repr__(self):
        return f"<torus {self.family}{self.n} {self.tag}: |T| = {self.order_poly}>"


def partitions(n: int):
    """All partitions of n, parts descending, in reverse-lex order."""
    if n == 0:
        return [()]
    out = []

    def rec(rest, maxpart, cur):
        if rest == 0:
            out.append(tuple(cur))
            return
        for a in range(min(rest, maxpart), 0, -1):
            rec(rest - a, a, cur + [a])

    rec(n, n, [])
    return out


def _z_lambda(parts) -> int:
    """Order of the centralizer of a permutation of cycle type parts."""
    out = 1
    mult = {}
    for a in parts:
        out *= a
        mult[a] = mult.get(a, 0) + 1
    for m in mult.values():
        out *= factorial(m)
    return out


def gl_torus_classes(n: int):
    """Maximal torus classes of GL_n <-> partitions of n."""
    if n < 1:
        raise UsageError("need n >= 1")
    out = []
    for lam in partitions(n):
        poly = IntPolynomial((1,))
        for a in lam:
            poly = poly * q_pow_minus_one(a)
        out.append(
            TorusClass(
                family="GL",
                n=n,
                tag="(" + ",".join(map(str, lam)) + ")",
                datum=tuple(("s", a) for a in lam),
                order_poly=poly,
                split_rank=len(lam),
                weyl_order=_z_lambda(lam),
                anisotropic=(len(lam) == 1),
            )
        )
    return out


def u_torus_classes(n: int):
    """Maximal torus classes of U_n: partitions again, with parity twists.

    An even part a contributes a factor q^a - 1 carrying one split rank; an
    odd part a contributes q^a + 1 and no split rank.
    """
    if n < 1:
        raise UsageError("need n >= 1")
    out = []
    for lam in partitions(n):
        poly = IntPolynomial((1,))
        datum = []
        rank = 0
        for a in lam:
            if a % 2 == 0:
                poly = poly * q_pow_minus_one(a)
                datum.append(("s", a))
                rank += 1
            else:
                poly = poly * q_pow_plus_one(a)
                datum.append(("n", a))
        out.append(
            TorusClass(
                family="U",
                n=n,
                tag="(" + ",".join(map(str, lam)) + ")",
                datum=tuple(datum),
                order_poly=poly,
                split_rank=rank,
                weyl_order=_z_lambda(lam),
                anisotropic=(rank == 0),
            )
        )
    return out


_SP4_DATA = (
    # tag, datum, factor list, split rank, W(T)^F order
    ("(1,1)", (("s", 1), ("s", 1)), 2, 8),
    ("(1,-1)", (("s", 1), ("n", 1)), 1, 4),
    ("(-1,-1)", (("n", 1), ("n", 1)), 0, 8),
    ("(2)", (("s", 2),), 1, 4),
    ("(-2)", (("n", 2),), 0, 4),
)


def sp4_torus_classes():
    """The five maximal torus classes of Sp_4 (signed cycle types of W(C_2))."""
    out = []
    for tag, datum, rank, weyl in _SP4_DATA:
        poly = IntPolynomial((1,))
        for kind, a in datum:
            poly = poly * (q_pow_minus_one(a) if kind == "s" else q_pow_plus_one(a))
        out.append(
            TorusClass(
                family="SP",
                n=4,
                tag=tag,
                datum=datum,
                order_poly=poly,
                split_rank=rank,
                weyl_order=weyl,
                anisotropic=(rank == 0),
            )
        )
    return out


def classical_torus_classes(family: str, n: int):
    family = family.upper()
    if family == "GL":
        return gl_torus_classes(n)
    if family == "U":
        return u_torus_classes(n)
    if family == "SP":
        if n != 4:
            raise UsageError("only Sp_4 has a torus table")
        return sp4_torus_classes()
    raise UsageError(f"no torus classification for family {family!r}")


def torus_order(tc: TorusClass, q: int) -> int:
    return tc.order_poly(q)


def torus_weyl_group(tc: TorusClass) -> int:
    """|W(T)^F| for the class — the count entering inner-product formulas."""
    return tc.weyl_order


def parts_of(tc: TorusClass):
    """The partition underlying a GL/U torus class."""
    return tuple(a for _, a in tc.datum)


def unit_torus_scan(max_rank: int, q_values):
    """All (family, n, tag, q) whose torus has exactly one rational point."""
    hits = []
    for q in q_values:
        for n in range(1, max_rank + 1):
            for tc in gl_torus_classes(n):
                if tc.order(q) == 1:
                    hits.append(("GL", n, tc.tag, q))
            if n <= 3:
                for tc in u_torus_classes(n):
                    if tc.order(q) == 1:
                        hits.append(("U", n, tc.tag, q))
        for tc in sp4_torus_classes():
            if tc.order(q) == 1:
                hits.append(("SP", 4, tc.tag, q))
    return hits


def torus_count_check(family: str, n: int, q: int, group_order: int, n_pos: int) -> bool:
    """Sum over classes of |G| / (|T| |W(T)^F|) == q^(2N)  (count of maximal tori)."""
    from fractions import Fraction

    total = Fraction(0)
    for tc in classical_torus_classes(family, n):
        total += Fraction(group_order, tc.order(q) * tc.weyl_order)
    return total == q ** (2 * n_pos)
