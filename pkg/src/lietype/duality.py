"""Alternating sums over standard parabolics: duality and Steinberg.

The duality operator sends a class function f to

    D(f) = sum over standard parabolics P  of  (-1)^l(P) Ind_P(infl jac_P(f)),

where jac_P averages over the unipotent radical and infl pulls a Levi
class function back to P through the block-diagonal projection. D is an
isometric involution on virtual characters and sends the trivial
character to the Steinberg character.
"""

from __future__ import annotations

from .chars import ClassFunction, induce, jacquet, snap_int, trivial_character
from .errors import DomainError, UsageError
from .groups import GroupTable, ParabolicDatum, standard_parabolics
from .linalg import charpoly, factor_poly


def _levi_projection(pd: ParabolicDatum, gid: int):
    """Block-diagonal part of an element of P, as a compact matrix."""
    G = pd.P.parent
    mat = G.mat(gid)
    comp = pd.composition
    blk = []
    start = 0
    bounds = []
    for d in comp:
        bounds.append((start, start + d))
        start += d
    zero = G.entry_field.zero.code
    n = G.n
    out = []
    for r in range(n):
        row = []
        for c in range(n):
            keep = any(a <= r < b and a <= c < b for a, b in bounds)
            row.append(mat[r][c] if keep else zero)
        out.append(tuple(row))
    return tuple(out)


def inflate_from_levi(pd: ParabolicDatum, phi: ClassFunction) -> ClassFunction:
    """Pull a class function on the Levi back to P via the block projection."""
    if phi.group is not pd.M.table:
        raise UsageError("function does not live on the Levi of this parabolic")
    pcc = pd.P.table.conjugacy_classes()
    mcc = pd.M.table.conjugacy_classes()
    vals = []
    for c in range(pcc.n_classes):
        gid = pd.P.global_id(pcc.reps[c])
        m_mat = _levi_projection(pd, gid)
        m_gid = pd.P.parent.id_of_matrix(m_mat)
        m_lid = pd.M.local_id(m_gid)
        vals.append(phi.values[int(mcc.class_of[m_lid])])
    return ClassFunction(pd.P.table, vals)


def dualize(f: ClassFunction) -> ClassFunction:
    """The duality involution on class functions of a finite matrix group."""
    G = f.group
    total = None
    for pd in standard_parabolics(G):
        phi = jacquet(f, pd)
        term = induce(inflate_from_levi(pd, phi), pd.P)
        if pd.length % 2:
            term = -term
        total = term if total is None else total + term
    return total


_ST_CACHE: dict = {}


def steinberg(G: GroupTable) -> ClassFunction:
    """The Steinberg character, as the dual of the trivial character."""
    key = id(G)
    if key not in _ST_CACHE:
        _ST_CACHE[key] = dualize(trivial_character(G))
    return _ST_CACHE[key]


def steinberg_values(G: GroupTable):
    """Closed-form Steinberg values for a GL group, one per class.

    At a semisimple class with characteristic polynomial factoring into
    irreducibles of degree d_i with multiplicity m_i, the value is

        (-1)^(n - sum m_i) * prod_i q^(d_i m_i (m_i - 1) / 2),

    and the character vanishes on every non-semisimple class.
    """
    if G.family != "GL":
        raise DomainError("closed-form Steinberg values cover the GL family only")
    F = G.entry_field
    q = G.q
    cc = G.conjugacy_classes()
    ss = cc.semisimple_flags()
    out = []
    for c in range(cc.n_classes):
        if not ss[c]:
            out.append(0)
            continue
        f = charpoly(F, G.mat(cc.reps[c]))
        sum_m = 0
        p_part = 1
        for fac, mult in factor_poly(F, f):
            d = len(fac) - 1
            sum_m += mult
            p_part *= q ** (d * mult * (mult - 1) // 2)
        sign = -1 if (G.n - sum_m) % 2 else 1
        out.append(sign * p_part)
    return tuple(out)


def duality_signs(table) -> tuple:
    """For each irreducible, the index of its dual and the sign, as (j, s)."""
    out = []
    for chi in table.rows:
        d = dualize(chi)
        hit = None
        for j, other in enumerate(table.rows):
            if d.close_to(other):
                hit = (j, 1)
                break
            if (-d).close_to(other):
                hit = (j, -1)
                break
        if hit is None:
            raise DomainError("dual of an irreducible is not plus/minus irreducible")
        out.append(hit)
    return tuple(out)
