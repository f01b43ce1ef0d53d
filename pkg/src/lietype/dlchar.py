"""Virtual characters attached to pairs (maximal torus, character).

The constructions are concrete: principal-series induction for split
data, the explicit cuspidal value formula on Coxeter tori, parabolic
assembly for mixed partitions, and pinned unipotent combinations for the
unitary group. Every constructed character is cross-checked against the
numerical table oracle, so a formula drift raises instead of silently
producing a wrong virtual character.
"""

from __future__ import annotations

from itertools import permutations
from math import lcm

from .chars import (
    ClassFunction,
    DEFAULT_SEED,
    TOL,
    induce,
    inner_product,
    jacquet,
    snap_int,
    table_of,
    trivial_character,
)
from .duality import inflate_from_levi, steinberg
from .errors import ConsistencyError, DomainError, ResourceError, UsageError
from .fields import (
    GF,
    MultiplicativeCharacter,
    char_eval,
    is_regular_character,
    subfield_embed,
)
from .groups import GroupTable, build_group, embed_gl_torus, standard_parabolics
from .linalg import charpoly, factor_poly, mat_det, mat_rank, root_in_extension
from .rootdata import group_order_polynomial, p_part_split
from .tori import TorusClass, parts_of


def ambient_split_rank(family: str, n: int) -> int:
    """The split rank of the ambient group, i.e. the sign exponent."""
    family = family.upper()
    if family in ("GL", "SL"):
        return n if family == "GL" else n - 1
    if family in ("U", "SP"):
        return n // 2
    raise UsageError(f"unknown family {family!r}")


def epsilon_signs(tc: TorusClass):
    """(sign of the ambient group, sign of the torus)."""
    eps_g = -1 if ambient_split_rank(tc.family, tc.n) % 2 else 1
    eps_t = -1 if tc.split_rank % 2 else 1
    return eps_g, eps_t


def dl_dimension(tc: TorusClass, q: int) -> int:
    """Signed dimension: eps_G eps_T |G|_p' / |T|, exactly."""
    po = group_order_polynomial(tc.family, tc.n)
    _, coprime = p_part_split(po, q)
    t = tc.order(q)
    if coprime % t:
        raise ConsistencyError(f"|T| = {t} does not divide |G|_p' = {coprime}")
    eps_g, eps_t = epsilon_signs(tc)
    return eps_g * eps_t * (coprime // t)


# -- cuspidal value formula ---------------------------------------------------


def _minus_identity(F, A):
    """A - 1 as a code matrix."""
    one = F.one.code
    n = len(A)
    return tuple(
        tuple(
            F.add_code(A[r][c], F.neg_code(one)) if r == c else A[r][c]
            for c in range(n)
        )
        for r in range(n)
    )


def cuspidality_check(f: ClassFunction, tol: float = TOL) -> bool:
    """True when every proper-parabolic average of f vanishes."""
    G = f.group
    for pd in standard_parabolics(G):
        if pd.N.order == 1:
            continue
        if any(abs(v) > tol for v in jacquet(f, pd).values):
            return False
    return True


def green_cuspidal(
    n: int, q: int, exponent: int, seed: int = DEFAULT_SEED, verify: bool = True
) -> ClassFunction:
    """The cuspidal character of GL_n(F_q) attached to a regular exponent.

    The value at a class with Jordan pair (s, u) is zero unless the
    characteristic polynomial of s is a power of a single irreducible f
    of degree d; writing dim ker(u - 1) = (t + 1) d it is then

        (-1)^(n-1) * prod_{i=1..t} (1 - q^(i d)) * sum_{j<d} chi(alpha^(q^j))

    for any root alpha of f.
    """
    big = GF(q**n)
    chi = MultiplicativeCharacter(q**n - 1, exponent % (q**n - 1))
    if not is_regular_character(chi, n, q):
        raise UsageError(f"exponent {exponent} is not regular for n = {n}, q = {q}")
    G = build_group("GL", n, q)
    F = G.entry_field
    cc = G.conjugacy_classes()
    sign = -1 if (n - 1) % 2 else 1
    vals = []
    for c in range(cc.n_classes):
        s, u = G.jordan_decompose(cc.reps[c])
        facs = factor_poly(F, charpoly(F, G.mat(s)))
        if len(facs) != 1:
            vals.append(0j)
            continue
        fac, mult = facs[0]
        d = len(fac) - 1
        kerdim = n - mat_rank(F, _minus_identity(F, G.mat(u)))
        if kerdim % d:
            raise ConsistencyError("kernel dimension not divisible by the degree")
        t = kerdim // d - 1
        alpha = root_in_extension(F, fac, GF(q**d))
        a_big = subfield_embed(alpha, big)
        total = 0j
        conj = a_big
        for _ in range(d):
            total += char_eval(chi, conj)
            conj = conj**q
        prod = 1
        for i in range(1, t + 1):
            prod *= 1 - q ** (i * d)
        vals.append(sign * prod * total)
    ch = ClassFunction(G, vals)
    if verify:
        _verify_green(ch, n, q, seed)
    return ch


def _verify_green(ch: ClassFunction, n: int, q: int, seed: int):
    deg = 1
    for i in range(1, n):
        deg *= q**i - 1
    if snap_int(ch.degree) != deg:
        raise ConsistencyError(f"cuspidal degree {ch.degree} != {deg}")
    if snap_int(inner_product(ch, ch)) != 1:
        raise ConsistencyError("cuspidal character has norm != 1")
    if not cuspidality_check(ch):
        raise ConsistencyError("cuspidal character has a nonzero parabolic average")
    table = table_of(ch.group, seed)
    hits = [row for row in table.rows if ch.close_to(row)]
    if len(hits) != 1:
        raise ConsistencyError("cuspidal character does not match a table row")


# -- principal series and parabolic assembly ---------------------------------


def _find_parabolic(G: GroupTable, composition):
    composition = tuple(composition)
    for pd in standard_parabolics(G):
        if pd.composition == composition:
            return pd
    raise UsageError(f"no standard parabolic of type {composition} in {G.label}")


def _levi_class_function(pd, block_fns) -> ClassFunction:
    """Product-over-blocks class function on the Levi of pd."""
    G = pd.P.parent
    mcc = pd.M.table.conjugacy_classes()
    vals = []
    for c in range(mcc.n_classes):
        mat = G.mat(pd.M.global_id(mcc.reps[c]))
        v = 1 + 0j
        start = 0
        for size, fn in block_fns:
            sub = tuple(
                tuple(mat[r][k] for k in range(start, start + size))
                for r in range(start, start + size)
            )
            v *= fn(sub)
            start += size
        vals.append(v)
    return ClassFunction(pd.M.table, vals)


def ps_character(
    q: int, exp_a: int, exp_b: int, seed: int = DEFAULT_SEED, verify: bool = True
) -> ClassFunction:
    """Principal-series character Ind_B(chi_a x chi_b) of GL_2(F_q)."""
    G = build_group("GL", 2, q)
    F = G.entry_field
    chi_a = MultiplicativeCharacter(q - 1, exp_a % (q - 1))
    chi_b = MultiplicativeCharacter(q - 1, exp_b % (q - 1))
    pd = _find_parabolic(G, (1, 1))
    phi = _levi_class_function(
        pd,
        [
            (1, lambda sub: char_eval(chi_a, F(sub[0][0]))),
            (1, lambda sub: char_eval(chi_b, F(sub[0][0]))),
        ],
    )
    ch = induce(inflate_from_levi(pd, phi), pd.P)
    if verify:
        want = 1 if (exp_a - exp_b) % (q - 1) else 2
        got = snap_int(inner_product(ch, ch))
        if got != want:
            raise ConsistencyError(f"principal series norm {got}, expected {want}")
    return ch


def _det_character(G: GroupTable, exponent: int) -> ClassFunction:
    """chi_exponent composed with det, as a class function."""
    F = G.entry_field
    chi = MultiplicativeCharacter(G.q - 1, exponent % (G.q - 1))
    cc = G.conjugacy_classes()
    vals = [
        char_eval(chi, F(mat_det(F, G.mat(cc.reps[c])))) for c in range(cc.n_classes)
    ]
    return ClassFunction(G, vals)


def _gl3_twodim_unipotent(G: GroupTable, seed: int) -> ClassFunction:
    """The multiplicity-two constituent of the full principal series of GL_3."""
    from .chars import decompose

    pd = _find_parabolic(G, (1, 1, 1))
    ind = induce(
        ClassFunction(pd.P.table, [1] * pd.P.table.conjugacy_classes().n_classes), pd.P
    )
    table = table_of(G, seed)
    mults = decompose(ind, table)
    hits = [i for i, m in enumerate(mults) if m == 2]
    if len(hits) != 1:
        raise ConsistencyError("expected exactly one multiplicity-two constituent")
    return table.rows[hits[0]]


def _coxeter_trivial_combo(G: GroupTable, seed: int) -> ClassFunction:
    """R on the irreducible-polynomial torus at the trivial character (GL)."""
    one = trivial_character(G)
    st = steinberg(G)
    if G.n == 2:
        return one - st
    if G.n == 3:
        return one + st - _gl3_twodim_unipotent(G, seed)
    raise DomainError(f"no assembled construction for GL_{G.n} on the Coxeter torus")


def u3_cuspidal_unipotent(G: GroupTable, seed: int = DEFAULT_SEED) -> ClassFunction:
    """The real-valued cuspidal character of degree q(q-1) of U_3(F_q)."""
    q = G.q
    want = q * (q - 1)
    table = table_of(G, seed)
    cands = []
    for row in table.rows:
        if snap_int(row.degree) != want:
            continue
        if any(abs(v.imag) > TOL for v in row.values):
            continue
        if cuspidality_check(row):
            cands.append(row)
    if len(cands) != 1:
        raise ConsistencyError(
            f"expected one real cuspidal character of degree {want}, found {len(cands)}"
        )
    return cands[0]


def _norm_theta(parts, theta, q):
    if theta is None:
        theta = (0,) * len(parts)
    if isinstance(theta, int):
        theta = (theta,)
    theta = tuple(int(e) for e in theta)
    if len(theta) != len(parts):
        raise UsageError(f"need {len(parts)} exponents for torus type {parts}")
    return tuple(e % (q**a - 1) for e, a in zip(theta, parts))


def _single_block_character(a: int, q: int, exponent: int, seed: int) -> ClassFunction:
    """R on the degree-a irreducible-polynomial torus of GL_a(F_q), signed."""
    Ga = build_group("GL", a, q)
    e = exponent % (q**a - 1)
    chi = MultiplicativeCharacter(q**a - 1, e)
    # eps_G eps_T for the Coxeter torus of GL_a
    sign = 1 if (a - 1) % 2 == 0 else -1
    if is_regular_character(chi, a, q):
        green = green_cuspidal(a, q, e, seed)
        return green if sign == 1 else -green
    norm_index = (q**a - 1) // (q - 1)
    if e % norm_index:
        raise DomainError(
            "non-regular exponent does not factor through the determinant norm"
        )
    base = _coxeter_trivial_combo(Ga, seed)
    c = e // norm_index
    if c % (q - 1) == 0:
        return base
    return base * _det_character(Ga, c)


def dl_virtual_character(
    tc: TorusClass, theta, q: int, seed: int = DEFAULT_SEED
) -> ClassFunction:
    """The virtual character attached to (T, theta), as a class function.

    GL: theta is a tuple of exponents, one per part a (taken mod q^a - 1).
    U_3: only the trivial theta is constructed.
    """
    if tc.family == "GL":
        parts = parts_of(tc)
        theta = _norm_theta(parts, theta, q)
        n = tc.n
        G = build_group("GL", n, q)
        F = G.entry_field
        if len(parts) == 1:
            ch = _single_block_character(n, q, theta[0], seed)
        else:
            pd = _find_parabolic(G, parts)
            block_fns = []
            for a, e in zip(parts, theta):
                if a == 1:
                    chi = MultiplicativeCharacter(q - 1, e)
                    block_fns.append(
                        (1, lambda sub, chi=chi: char_eval(chi, F(sub[0][0])))
                    )
                else:
                    Ra = _single_block_character(a, q, e, seed)
                    Ga = Ra.group
                    gacc = Ga.conjugacy_classes()

                    def fn(sub, Ra=Ra, Ga=Ga, gacc=gacc):
                        gid = Ga.id_of_matrix(sub)
                        return Ra.values[int(gacc.class_of[gid])]

                    block_fns.append((a, fn))
            phi = _levi_class_function(pd, block_fns)
            ch = induce(inflate_from_levi(pd, phi), pd.P)
    elif tc.family == "U":
        if tc.n != 3:
            raise DomainError("unitary construction covers U_3 only")
        theta = _norm_theta(parts_of(tc), theta, q)
        if any(theta):
            raise DomainError("unitary construction covers the trivial character only")
        G = build_group("U", 3, q)
        one = trivial_character(G)
        st = steinberg(G)
        parts = parts_of(tc)
        if parts == (2, 1):
            ch = one + st
        elif parts == (1, 1, 1):
            pi = u3_cuspidal_unipotent(G, seed)
            ch = one - st + pi + pi
        elif parts == (3,):
            pi = u3_cuspidal_unipotent(G, seed)
            ch = one - st - pi
        else:
            raise DomainError(f"unknown U_3 torus type {parts}")
    else:
        raise DomainError(f"no construction for family {tc.family!r}")

    want = dl_dimension(tc, q)
    got = snap_int(ch.degree)
    if got != want:
        raise ConsistencyError(
            f"constructed dimension {got} != predicted {want} for {tc.tag}"
        )
    return ch


# -- inner products and geometric conjugacy -----------------------------------


def _size_preserving_perms(parts):
    """Permutations of part indices that map each part to an equal one."""
    groups = {}
    for i, a in enumerate(parts):
        groups.setdefault(a, []).append(i)
    keys = sorted(groups)
    pools = [list(permutations(groups[a])) for a in keys]

    def rec(k, cur):
        if k == len(keys):
            yield dict(cur)
            return
        src = groups[keys[k]]
        for perm in pools[k]:
            nxt = dict(cur)
            for s, dd in zip(src, perm):
                nxt[s] = dd
            yield from rec(k + 1, nxt)

    for mapping in rec(0, {}):
        yield tuple(mapping[i] for i in range(len(parts)))


def dl_inner_product(tc1: TorusClass, theta1, tc2: TorusClass, theta2, q: int) -> int:
    """<R_(T,theta), R_(T',theta')> counted inside the Weyl group.

    Zero across distinct torus classes; within a class it is the number
    of elements of W(T)^F carrying theta to theta'.
    """
    if tc1.family != tc2.family or tc1.n != tc2.n:
        raise UsageError("characters live on different groups")
    if tc1.family == "GL":
        p1, p2 = parts_of(tc1), parts_of(tc2)
        theta1 = _norm_theta(p1, theta1, q)
        theta2 = _norm_theta(p2, theta2, q)
        if p1 != p2:
            return 0
        count = 0
        for perm in _size_preserving_perms(p1):
            # w = (perm, frobenius shifts): (w theta)_i = theta_{perm[i]} q^j
            prod = 1
            for i, a in enumerate(p1):
                mod = q**a - 1
                src = theta1[perm[i]]
                tgt = theta2[i]
                matches = sum(1 for j in range(a) if (src * q**j - tgt) % mod == 0)
                prod *= matches
                if not prod:
                    break
            count += prod
        return count
    theta1 = _norm_theta(parts_of(tc1), theta1, q)
    theta2 = _norm_theta(parts_of(tc2), theta2, q)
    if any(theta1) or any(theta2):
        raise DomainError("only trivial characters are paired outside GL")
    if tc1.datum != tc2.datum:
        return 0
    return tc1.weyl_order


def geometric_conjugacy_test(
    tc1: TorusClass, theta1, tc2: TorusClass, theta2, q: int
) -> bool:
    """Same semisimple class test: compare inflated exponent multisets."""
    if tc1.family != "GL" or tc2.family != "GL":
        raise DomainError("geometric conjugacy is implemented for GL only")
    if tc1.n != tc2.n:
        raise UsageError("characters live on different groups")
    p1, p2 = parts_of(tc1), parts_of(tc2)
    theta1 = _norm_theta(p1, theta1, q)
    theta2 = _norm_theta(p2, theta2, q)
    big = lcm(*(p1 + p2))
    mod = q**big - 1

    def multiset(parts, theta):
        out = []
        for a, e in zip(parts, theta):
            inflated = e * (mod // (q**a - 1))
            out.extend(inflated * q**j % mod for j in range(a))
        return sorted(out)

    return multiset(p1, theta1) == multiset(p2, theta2)


# -- signed irreducibles -------------------------------------------------------


def _torus_labels(G: GroupTable, T, parts):
    """Map torus member ids to tuples of field codes, one per part.

    The torus is block diagonal with block i the multiplication matrix of
    an element of the degree-a_i extension written on its power basis, so
    the first column of each block is the element's coefficient vector.
    """
    if G.entry_field.k != 1:
        raise DomainError("torus labels need a prime base field")
    fields = [GF(G.q**a) for a in parts]
    out = {}
    for gid in T.ids:
        mat = G.mat(int(gid))
        start = 0
        label = []
        for a, Fa in zip(parts, fields):
            coeffs = [mat[start + j][start] for j in range(a)]
            label.append(Fa.from_coeffs(coeffs))
            start += a
        out[int(gid)] = tuple(label)
    return out


def macdonald_character(
    tc: TorusClass, theta, q: int, seed: int = DEFAULT_SEED
) -> ClassFunction:
    """The sign-corrected character eps_G eps_T R_(T,theta), with checks.

    Verifies the positive dimension, vanishing on regular semisimple
    classes not meeting T, and the summed torus values at regular
    elements of T.
    """
    if tc.family != "GL":
        raise DomainError("the sign-corrected form is implemented for GL only")
    parts = parts_of(tc)
    theta = _norm_theta(parts, theta, q)
    R = dl_virtual_character(tc, theta, q, seed)
    eps_g, eps_t = epsilon_signs(tc)
    pi = R if eps_g * eps_t == 1 else -R
    G = R.group
    F = G.entry_field
    cc = G.conjugacy_classes()

    want = abs(dl_dimension(tc, q))
    if snap_int(pi.degree) != want:
        raise ConsistencyError("sign-corrected dimension is not |G|_p' / |T|")

    T = embed_gl_torus(G, parts)
    torus_classes = {int(cc.class_of[int(gid)]) for gid in T.ids}
    chis = [MultiplicativeCharacter(q**a - 1, e) for a, e in zip(parts, theta)]
    labels = _torus_labels(G, T, parts)

    ss = cc.semisimple_flags()
    for c in range(cc.n_classes):
        if not ss[c]:
            continue
        f = charpoly(F, G.mat(cc.reps[c]))
        if any(m > 1 for _, m in factor_poly(F, f)):
            continue  # not regular
        if c not in torus_classes:
            if abs(pi.values[c]) > TOL:
                raise ConsistencyError(
                    "nonzero value at a regular class missing the torus"
                )
            continue
        total = 0j
        for gid in T.ids:
            if int(cc.class_of[int(gid)]) != c:
                continue
            v = 1 + 0j
            for chi, y in zip(chis, labels[int(gid)]):
                v *= char_eval(chi, y)
            total += v
        if abs(R.values[c] - total) > 1e-6:
            raise ConsistencyError("torus value does not match the summed character")
    return pi


# -- the unitary decomposition and numerical identities ------------------------


def u3_unipotent_decomposition(q: int = 2, seed: int = DEFAULT_SEED) -> dict:
    """Structure of the anisotropic-torus virtual character of U_3(F_q)."""
    from .tori import u_torus_classes

    classes = {parts_of(tc): tc for tc in u_torus_classes(3)}
    G = build_group("U", 3, q)
    pi = u3_cuspidal_unipotent(G, seed)
    R = dl_virtual_character(classes[(1, 1, 1)], None, q, seed)
    ps = dl_virtual_character(classes[(2, 1)], None, q, seed)
    return {
        "q": q,
        "dimension": snap_int(R.degree),
        "norm_squared": snap_int(inner_product(R, R)),
        "pi_degree": snap_int(pi.degree),
        "pi_cuspidal": cuspidality_check(pi),
        "orthogonal_to_split_series": snap_int(inner_product(R, ps)) == 0,
        "constituents": ((1, 1), (snap_int(steinberg(G).degree), -1), (snap_int(pi.degree), 2)),
    }


def st2_id2_dimensions(m: int, q: int):
    """The half-sum/half-difference dimension pair at rank m, exactly."""
    P = 1
    for i in range(1, 2 * m + 1):
        P *= q**i - 1
    den = (q**m - 1) ** 2
    if P % den:
        raise ConsistencyError("product is not divisible by the square factor")
    P //= den
    D = 1
    for i in range(1, 2 * m):
        D *= q**i - 1
    if (P + D) % 2 or (P - D) % 2:
        raise ConsistencyError("dimension pair is not integral")
    return (P + D) // 2, (P - D) // 2


def jordan_dimension_scale(n: int, m: int, q: int) -> int:
    """|GL_nm(F_q)|_p' / |GL_n(F_q^m)|_p', the degree scale factor."""
    from .rootdata import gl_order_polynomial

    _, big = p_part_split(gl_order_polynomial(n * m), q)
    _, small = p_part_split(gl_order_polynomial(n), q**m)
    if big % small:
        raise ConsistencyError("order ratio is not integral")
    return big // small


def _drinfeld_solutions(q: int, d: int):
    """All (x, y) in F_{q^d}^2 with x y^q - x^q y = 1, as code pairs."""
    if q ** (2 * d) > 10**7:
        raise ResourceError(
            f"coordinate space has q^(2d) = {q ** (2 * d)} points, over the 10^7 enumeration bound"
        )
    F = GF(q**d)
    elems = list(F.elements())
    powers = [e**q for e in elems]
    sols = []
    for x, xq in zip(elems, powers):
        for y, yq in zip(elems, powers):
            if x * yq - xq * y == F.one:
                sols.append((x.code, y.code))
    return F, sols


def drinfeld_count(q: int, d: int) -> int:
    """Points of x y^q - x^q y = 1 with coordinates in the degree-d extension."""
    return len(_drinfeld_solutions(q, d)[1])


def drinfeld_orbit_check(q: int, d: int) -> dict:
    """Verify the free matrix action on the curve's degree-d points.

    A determinant-one matrix over F_q sends (x, y) to (ax+by, cx+dy) and
    scales x y^q - x^q y by the determinant, so it permutes the solutions.
    Checks closure, freeness (only the identity has a fixed point), and
    that the orbits partition the solutions into full-size cells.
    """
    F, sols = _drinfeld_solutions(q, d)
    base = GF(q)
    lift = {e.code: subfield_embed(e, F) for e in base.elements()}
    one = F.one.code

    mats = []
    for a in base.elements():
        for b in base.elements():
            for c in base.elements():
                for e in base.elements():
                    if a * e - b * c == base.one:
                        mats.append((lift[a.code], lift[b.code], lift[c.code], lift[e.code]))
    group_order = len(mats)
    if group_order != q * (q * q - 1):
        raise ConsistencyError("determinant-one matrix count is off")

    sol_set = set(sols)
    free = True
    orbit_sizes = []
    seen = set()
    for start in sols:
        if start in seen:
            continue
        seen.add(start)
        cell = {start}
        stack = [start]
        while stack:
            cur = stack.pop()
            x, y = F(cur[0]), F(cur[1])
            for a, b, c, e in mats:
                img = ((a * x + b * y).code, (c * x + e * y).code)
                if img not in sol_set:
                    raise ConsistencyError("the action does not preserve the curve")
                is_id = b.code == 0 and c.code == 0 and a.code == one and e.code == one
                if img == cur and not is_id:
                    free = False
                if img not in cell:
                    cell.add(img)
                    seen.add(img)
                    stack.append(img)
        orbit_sizes.append(len(cell))
    if free and any(sz != group_order for sz in orbit_sizes):
        raise ConsistencyError("free action with an orbit smaller than the group")
    return {
        "q": q,
        "ext": d,
        "count": len(sols),
        "group_order": group_order,
        "free": free,
        "orbits": len(orbit_sizes),
        "orbit_sizes": sorted(orbit_sizes),
    }
