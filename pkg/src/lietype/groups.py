"""Fully enumerated matrix groups over small finite fields.

Every group element is stored twice:

* compact: an n x n matrix of entry-field codes (what callers see);
* expanded: an nk x nk matrix over the prime field, obtained by replacing
  each entry with the k x k matrix of multiplication by that entry in the
  power basis.

The expansion turns field-matrix products into integer matrix products
mod p, so products, conjugation sweeps and coset sums all run as batched
numpy work. Groups are enumerated once by breadth-first closure over a
generating set and cached.
"""

from __future__ import annotations

import numpy as np

from .errors import ConsistencyError, ResourceError, UsageError
from .fields import GF, FieldElement, FiniteField, subfield_embed
from . import linalg
from .rootdata import group_order_polynomial

ENUMERATION_LIMIT = 500_000


# ---------------------------------------------------------------------------
# field expansion helpers


def _rep_table(field: FiniteField) -> np.ndarray:
    """(q, k, k) table: code -> multiplication matrix over F_p, power basis."""
    q, k, p = field.q, field.k, field.p
    out = np.zeros((q, k, k), dtype=np.uint8)
    for e in range(q):
        for j in range(k):
            col = field.digits[field.mul_code(e, p**j)]
            for i in range(k):
                out[e, i, j] = col[i]
    return out


def _expand(field: FiniteField, mat, rep) -> np.ndarray:
    n = len(mat)
    k = field.k
    out = np.zeros((n * k, n * k), dtype=np.uint8)
    for a in range(n):
        for b in range(n):
            out[a * k : (a + 1) * k, b * k : (b + 1) * k] = rep[mat[a][b]]
    return out


def _tower_basis_matrix(big: FiniteField, base: FiniteField) -> np.ndarray:
    """Change of basis from {x_big^i * embed(base power basis)} to F_p digits."""
    if big.p != base.p or big.k % base.k != 0:
        raise UsageError("not a field extension")
    d = big.k // base.k
    cols = []
    for i in range(d):
        xi = big.exp[i] if i > 0 else 1
        for j in range(base.k):
            bj = subfield_embed(FieldElement(base, base.p**j if base.k > 1 else 1), big)
            prod = big.mul_code(xi, bj.code)
            cols.append(big.digits[prod])
    return np.array(cols, dtype=np.int64).T  # (big.k, big.k), columns = basis digits


def tower_coords(big: FiniteField, base: FiniteField):
    """Return a function: big-field code -> tuple of base-field codes (length d).

    Coordinates are taken in the basis x_big^i (i < d) over the embedded base
    field, so multiplication-by-y matrices over the base field come out of
    consecutive coordinate vectors.
    """
    d = big.k // base.k
    M = _tower_basis_matrix(big, base) % big.p
    Minv = _mat_inv_mod_p(M, big.p)

    def coords(code: int):
        digits = np.array(big.digits[code], dtype=np.int64)
        c = (Minv @ digits) % big.p
        out = []
        for i in range(d):
            chunk = c[i * base.k : (i + 1) * base.k]
            val = 0
            for cc in reversed(chunk):
                val = val * base.p + int(cc)
            out.append(val)
        return tuple(out)

    return coords


def _mat_inv_mod_p(M: np.ndarray, p: int) -> np.ndarray:
    n = M.shape[0]
    A = M.copy() % p
    I = np.eye(n, dtype=np.int64)
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r, col] % p), None)
        if piv is None:
            raise ConsistencyError("singular basis matrix")
        A[[col, piv]] = A[[piv, col]]
        I[[col, piv]] = I[[piv, col]]
        inv = pow(int(A[col, col]), -1, p)
        A[col] = A[col] * inv % p
        I[col] = I[col] * inv % p
        for r in range(n):
            if r != col and A[r, col] % p:
                f = int(A[r, col])
                A[r] = (A[r] - f * A[col]) % p
                I[r] = (I[r] - f * I[col]) % p
    return I % p


def mult_matrix(big: FiniteField, base: FiniteField, y_code: int, coords=None):
    """Matrix (over base) of multiplication by y on big, in the tower basis."""
    d = big.k // base.k
    if coords is None:
        coords = tower_coords(big, base)
    cols = []
    for i in range(d):
        xi = big.exp[i] if i > 0 else 1
        cols.append(coords(big.mul_code(y_code, xi)))
    return tuple(tuple(cols[j][i] for j in range(d)) for i in range(d))


# ---------------------------------------------------------------------------


class GroupTable:
    """A fully enumerated matrix group with fast product/lookup machinery."""

    def __init__(self, label, family, n, q, entry_field, expanded, inv_ids, index):
        self.label = label
        self.family = family
        self.n = n
        self.q = q
        self.entry_field = entry_field
        self.p = entry_field.p
        self.k = entry_field.k
        self.nk = n * entry_field.k
        self.expanded = expanded  # (N, nk, nk) uint8
        self.inv_ids = inv_ids  # (N,) int32
        self._index = index  # bytes -> id
        self.order = expanded.shape[0]
        self._compact = None
        self._classes = None
        self._rep = _rep_table(entry_field)

    # -- basic access ---------------------------------------------------

    def lookup(self, exp_mat: np.ndarray) -> int:
        b = np.ascontiguousarray(exp_mat % self.p, dtype=np.uint8).tobytes()
        i = self._index.get(b)
        if i is None:
            raise UsageError("matrix is not an element of the group")
        return i

    def contains_expanded(self, exp_mat: np.ndarray) -> bool:
        b = np.ascontiguousarray(exp_mat % self.p, dtype=np.uint8).tobytes()
        return b in self._index

    def id_of_matrix(self, mat) -> int:
        """Id of an element given as field-code rows."""
        return self.lookup(_expand(self.entry_field, mat, self._rep))

    @property
    def compact(self) -> np.ndarray:
        """(N, n, n) entry-field codes for every element."""
        if self._compact is None:
            N, n, k, p = self.order, self.n, self.k, self.p
            blocks = self.expanded.reshape(N, n, k, n, k)
            first_cols = blocks[:, :, :, :, 0].astype(np.int64)  # (N, n, k, n)
            weights = np.array([p**j for j in range(k)], dtype=np.int64)
            codes = np.einsum("nakb,k->nab", first_cols, weights)
            self._compact = codes.astype(np.uint8 if self.entry_field.q <= 255 else np.int16)
        return self._compact

    def mat(self, i: int):
        """Element i as field-code rows."""
        c = self.compact[i]
        return tuple(tuple(int(x) for x in row) for row in c)

    def mul(self, i: int, j: int) -> int:
        prod = (
            self.expanded[i].astype(np.int32) @ self.expanded[j].astype(np.int32)
        ) % self.p
        return self.lookup(prod)

    def inv(self, i: int) -> int:
        return int(self.inv_ids[i])

    @property
    def identity(self) -> int:
        return 0

    def element_order(self, i: int) -> int:
        g = self.expanded[i].astype(np.int32)
        cur = g.copy()
        n = 1
        ident = np.eye(self.nk, dtype=np.int32)
        while not np.array_equal(cur % self.p, ident):
            cur = (cur @ g) % self.p
            n += 1
            if n > self.order:
                raise ConsistencyError("element order exceeded group order")
        return n

    # -- batched products -------------------------------------------------

    def _mm(self, A, B):
        return (np.matmul(A.astype(np.int32), B.astype(np.int32))) % self.p

    def right_multiply_all(self, ids: np.ndarray, j: int) -> np.ndarray:
        """ids * j elementwise, as an id array."""
        prods = self._mm(self.expanded[ids], self.expanded[j])
        return self.lookup_rows(prods)

    def lookup_rows(self, prods: np.ndarray) -> np.ndarray:
        out = np.empty(prods.shape[0], dtype=np.int64)
        idx = self._index
        arr = np.ascontiguousarray(prods, dtype=np.uint8)
        for t in range(arr.shape[0]):
            out[t] = idx[arr[t].tobytes()]
        return out

    def conjugate_by_all(self, i: int) -> np.ndarray:
        """Ids of x g x^{-1} for every x, aligned with x's id."""
        g = self.expanded[i]
        left = self._mm(self.expanded, g)
        full = self._mm(left, self.expanded[self.inv_ids])
        return self.lookup_rows(full)

    def conjugate_into(self, i: int) -> np.ndarray:
        """Ids of x^{-1} g x for every x, aligned with x's id."""
        g = self.expanded[i]
        left = self._mm(self.expanded[self.inv_ids], g)
        full = self._mm(left, self.expanded)
        return self.lookup_rows(full)

    # -- conjugacy classes -------------------------------------------------

    def conjugacy_classes(self) -> "ConjugacyData":
        if self._classes is None:
            N = self.order
            class_of = np.full(N, -1, dtype=np.int64)
            reps, sizes = [], []
            for i in range(N):
                if class_of[i] >= 0:
                    continue
                orbit = self.conjugate_by_all(i)
                members = np.unique(orbit)
                cid = len(reps)
                class_of[members] = cid
                reps.append(i)
                sizes.append(len(members))
            orders = [self.element_order(r) for r in reps]
            self._classes = ConjugacyData(
                self, class_of, tuple(reps), tuple(sizes), tuple(orders)
            )
        return self._classes

    def jordan_decompose(self, i: int):
        """(semisimple id, unipotent id) with g = s u = u s."""
        m = self.element_order(i)
        p = self.p
        pa = 1
        while m % p == 0:
            m //= p
            pa *= p
        mp = m  # p' part of the order
        if pa == 1:
            return i, self.identity
        if mp == 1:
            return self.identity, i
        # exponents: alpha = 1 mod mp, 0 mod pa; beta = 1 mod pa, 0 mod mp
        alpha = pa * pow(pa, -1, mp)
        beta = mp * pow(mp, -1, pa)
        s = self.power(i, alpha)
        u = self.power(i, beta)
        if self.mul(s, u) != i or self.mul(u, s) != i:
            raise ConsistencyError("commuting factorization failed")
        return s, u

    def power(self, i: int, e: int) -> int:
        if e < 0:
            return self.power(self.inv(i), -e)
        acc = self.identity
        base = i
        while e:
            if e & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            e >>= 1
        return acc

    def is_semisimple(self, i: int) -> bool:
        return self.element_order(i) % self.p != 0

    def is_unipotent(self, i: int) -> bool:
        m = self.element_order(i)
        while m % self.p == 0:
            m //= self.p
        return m == 1

    # -- subgroups ----------------------------------------------------------

    def subgroup(self, ids, tag: str) -> "Subgroup":
        return Subgroup(self, np.array(sorted(int(x) for x in ids), dtype=np.int64), tag)

    def elements_matching(self, predicate) -> list:
        """Ids whose compact matrix satisfies predicate(mat)."""
        return [i for i in range(self.order) if predicate(self.mat(i))]

    def zero_pattern_ids(self, must_zero, must_one=(), diag_one=False) -> np.ndarray:
        """Ids of elements vanishing at given (row, col) positions.

        must_one lists positions forced to 1; diag_one forces the whole
        diagonal to 1.
        """
        c = self.compact
        mask = np.ones(self.order, dtype=bool)
        for (r, cc) in must_zero:
            mask &= c[:, r, cc] == 0
        for (r, cc) in must_one:
            mask &= c[:, r, cc] == 1
        if diag_one:
            for r in range(self.n):
                mask &= c[:, r, r] == 1
        return np.nonzero(mask)[0]

    def __repr__(self):
        return f"<{self.label}: order {self.order}>"


class ConjugacyData:
    """Conjugacy classes of a GroupTable, identity class first."""

    def __init__(self, group, class_of, reps, sizes, orders):
        self.group = group
        self.class_of = class_of
        self.reps = reps
        self.sizes = sizes
        self.element_orders = orders
        self.n_classes = len(reps)

    def centralizer_order(self, c: int) -> int:
        return self.group.order // self.sizes[c]

    def members(self, c: int) -> np.ndarray:
        return np.nonzero(self.class_of == c)[0]

    def semisimple_flags(self):
        p = self.group.p
        return tuple(o % p != 0 for o in self.element_orders)

    def unipotent_flags(self):
        out = []
        for o in self.element_orders:
            m = o
            while m % self.group.p == 0:
                m //= self.group.p
            out.append(m == 1)
        return tuple(out)


class Subgroup:
    """A subgroup presented as a sorted id array inside a parent GroupTable."""

    def __init__(self, parent: GroupTable, ids: np.ndarray, tag: str):
        self.parent = parent
        self.ids = ids
        self.tag = tag
        self.order = len(ids)
        self._member = np.zeros(parent.order, dtype=bool)
        self._member[ids] = True
        self._table = None
        self._local = None

    def contains(self, gid: int) -> bool:
        return bool(self._member[gid])

    def member_mask(self) -> np.ndarray:
        return self._member

    @property
    def table(self) -> GroupTable:
        """The subgroup as a standalone GroupTable (ids re-indexed)."""
        if self._table is None:
            par = self.parent
            ids = self.ids
            local = {int(g): li for li, g in enumerate(ids)}
            if ids[0] != par.identity:
                raise ConsistencyError("subgroup does not contain the identity")
            exp = par.expanded[ids].copy()
            index = {exp[li].tobytes(): li for li in range(len(ids))}
            inv_local = np.empty(len(ids), dtype=np.int64)
            for li, g in enumerate(ids):
                gi = par.inv(int(g))
                if gi not in local:
                    raise ConsistencyError("subgroup is not inverse-closed")
                inv_local[li] = local[gi]
            t = GroupTable(
                f"{par.label}:{self.tag}",
                par.family,
                par.n,
                par.q,
                par.entry_field,
                exp,
                inv_local,
                index,
            )
            _assert_closed(t)
            self._table = t
            self._local = local
        return self._table

    def local_id(self, gid: int) -> int:
        if self._local is None:
            _ = self.table
        return self._local[int(gid)]

    def global_id(self, lid: int) -> int:
        return int(self.ids[lid])

    def __repr__(self):
        return f"<{self.tag} <= {self.parent.label}: order {self.order}>"


def _assert_closed(t: GroupTable, samples: int = 400):
    """Sanity check that the element set is product-closed."""
    N = t.order
    if N <= 400:
        for i in range(N):
            prods = t._mm(t.expanded[i], t.expanded)
            arr = np.ascontiguousarray(prods, dtype=np.uint8)
            for row in range(N):
                if arr[row].tobytes() not in t._index:
                    raise ConsistencyError(f"{t.label}: not closed under products")
    else:
        rng = np.random.default_rng(0xC105ED)
        ii = rng.integers(0, N, size=samples)
        jj = rng.integers(0, N, size=samples)
        for a, b in zip(ii, jj):
            prod = t._mm(t.expanded[int(a)], t.expanded[int(b)])
            if not t.contains_expanded(prod):
                raise ConsistencyError(f"{t.label}: not closed under products")


class ParabolicDatum:
    """A standard parabolic P = M N together with its Levi length."""

    def __init__(self, tag, composition, length, P, M, N):
        self.tag = tag
        self.composition = composition
        self.length = length
        self.P = P
        self.M = M
        self.N = N

    def __repr__(self):
        return f"<parabolic {self.tag}: |P|={self.P.order} |M|={self.M.order} |N|={self.N.order} l={self.length}>"


# ---------------------------------------------------------------------------
# construction


def _compositions(n: int):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest


def _unitriangular_candidates(field: FiniteField, n: int, upper: bool):
    """All unitriangular matrices over the entry field, as code rows."""
    positions = [
        (i, j) for i in range(n) for j in range(n) if (j > i if upper else j < i)
    ]
    q = field.q
    out = []
    total = q ** len(positions)
    for code in range(total):
        m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        c = code
        for (i, j) in positions:
            m[i][j] = c % q
            c //= q
        out.append(tuple(tuple(r) for r in m))
    return out


def _diagonal_candidates(field: FiniteField, n: int):
    units = [u.code for u in field.units()]
    out = []

    def rec(i, cur):
        if i == n:
            out.append(tuple(tuple(cur[r] if r == c else 0 for c in range(n)) for r in range(n)))
            return
        for u in units:
            rec(i + 1, cur + [u])

    rec(0, [])
    return out


def _signed_permutation_candidates(field: FiniteField, n: int):
    from itertools import permutations, product

    signs = [1, field.neg_code(1)]
    out = []
    for perm in permutations(range(n)):
        for sg in product(signs, repeat=n):
            m = [[0] * n for _ in range(n)]
            for i in range(n):
                m[i][perm[i]] = sg[i]
            out.append(tuple(tuple(r) for r in m))
    return out


def _u_form_matrix(n: int):
    return tuple(tuple(1 if i + j == n - 1 else 0 for j in range(n)) for i in range(n))


def _sp4_form_matrix(field: FiniteField):
    m1 = field.neg_code(1)
    return (
        (0, 0, 0, 1),
        (0, 0, 1, 0),
        (0, m1, 0, 0),
        (m1, 0, 0, 0),
    )


def _is_unitary(field: FiniteField, q: int, J, A) -> bool:
    As = linalg.mat_conj_transpose(field, A, q)
    return linalg.mat_mul(field, linalg.mat_mul(field, As, J), A) == J


def _is_symplectic(field: FiniteField, J, A) -> bool:
    At = linalg.mat_transpose(A)
    return linalg.mat_mul(field, linalg.mat_mul(field, At, J), A) == J


def _generators(family: str, n: int, q: int):
    if family == "GL" or family == "SL":
        field = GF(q)
        pred = (lambda A: True) if family == "GL" else (
            lambda A: linalg.mat_det(field, A) == 1
        )
    elif family == "U":
        field = GF(q * q)
        J = _u_form_matrix(n)
        pred = lambda A: _is_unitary(field, q, J, A)
    elif family == "SP":
        if n != 4:
            raise UsageError("only Sp_4 is supported")
        field = GF(q)
        J = _sp4_form_matrix(field)
        pred = lambda A: _is_symplectic(field, J, A)
    else:
        raise UsageError(f"unknown family {family!r}")

    cands = []
    cands += _unitriangular_candidates(field, n, upper=True)
    cands += _unitriangular_candidates(field, n, upper=False)
    cands += _diagonal_candidates(field, n)
    cands += _signed_permutation_candidates(field, n)
    gens = []
    seen = set()
    for A in cands:
        if A in seen:
            continue
        seen.add(A)
        if pred(A) and linalg.mat_det(field, A) != 0:
            gens.append(A)
    return field, gens


_GROUP_CACHE: dict = {}


def build_group(family: str, n: int, q: int) -> GroupTable:
    """Enumerate GL_n / SL_n / U_n (F_q) or Sp_4(F_q); cached."""
    family = family.upper()
    key = (family, n, q)
    if key in _GROUP_CACHE:
        return _GROUP_CACHE[key]
    if n < 1 or n > 4:
        raise UsageError("supported matrix sizes are 1 <= n <= 4")
    expected = group_order_polynomial(family, n)(q)
    if expected > ENUMERATION_LIMIT:
        raise ResourceError(
            f"{family}_{n}(F_{q}) has order {expected} > {ENUMERATION_LIMIT}"
        )
    field, gens = _generators(family, n, q)
    rep = _rep_table(field)
    nk = n * field.k
    p = field.p

    gen_exp = [_expand(field, A, rep) for A in gens]
    gen_inv_exp = [_expand(field, linalg.mat_inv(field, A), rep) for A in gens]

    ident = np.eye(nk, dtype=np.uint8)
    index = {ident.tobytes(): 0}
    elems = [ident]
    invs = [ident]
    frontier = [0]
    while frontier:
        F_arr = np.stack([elems[i] for i in frontier]).astype(np.int32)
        Finv_arr = np.stack([invs[i] for i in frontier]).astype(np.int32)
        next_frontier = []
        for g, ginv in zip(gen_exp, gen_inv_exp):
            prods = (F_arr @ g.astype(np.int32)) % p
            invprods = (ginv.astype(np.int32) @ Finv_arr) % p
            pu = prods.astype(np.uint8)
            iu = invprods.astype(np.uint8)
            for t in range(pu.shape[0]):
                b = pu[t].tobytes()
                if b not in index:
                    nid = len(elems)
                    index[b] = nid
                    elems.append(pu[t])
                    invs.append(iu[t])
                    next_frontier.append(nid)
                    if nid >= ENUMERATION_LIMIT:
                        raise ResourceError("enumeration limit hit")
        frontier = next_frontier

    if len(elems) != expected:
        raise ConsistencyError(
            f"{family}_{n}(F_{q}): enumerated {len(elems)}, expected {expected}"
        )
    expanded = np.stack(elems)
    inv_ids = np.empty(len(elems), dtype=np.int64)
    for i, m in enumerate(invs):
        inv_ids[i] = index[m.tobytes()]
    label = f"{family}{n}(F{q})"
    t = GroupTable(label, family, n, q, field, expanded, inv_ids, index)
    _GROUP_CACHE[key] = t
    return t


# ---------------------------------------------------------------------------
# parabolic subgroups


def _block_of(composition, r):
    acc = 0
    for b, d in enumerate(composition):
        acc += d
        if r < acc:
            return b
    raise IndexError


def _parabolic_masks(n, composition):
    blk = [_block_of(composition, r) for r in range(n)]
    p_zero = [(r, c) for r in range(n) for c in range(n) if blk[r] > blk[c]]
    m_zero = [(r, c) for r in range(n) for c in range(n) if blk[r] != blk[c]]
    # unipotent radical: identity on the blocks, free strictly above them
    n_zero = p_zero + [
        (r, c) for r in range(n) for c in range(n) if blk[r] == blk[c] and r != c
    ]
    return p_zero, m_zero, n_zero


def _make_parabolic(G: GroupTable, tag, composition, length) -> ParabolicDatum:
    p_zero, m_zero, n_zero = _parabolic_masks(G.n, composition)
    P_ids = G.zero_pattern_ids(p_zero)
    M_ids = G.zero_pattern_ids(m_zero)
    N_ids = G.zero_pattern_ids(n_zero, diag_one=True)
    P = G.subgroup(P_ids, f"P{tag}")
    M = G.subgroup(M_ids, f"M{tag}")
    Nsub = G.subgroup(N_ids, f"N{tag}")
    if P.order != M.order * Nsub.order:
        raise ConsistencyError(f"parabolic {tag}: |P| != |M||N|")
    return ParabolicDatum(tag, composition, length, P, M, Nsub)


def standard_parabolics(G: GroupTable):
    """All standard parabolics P >= B_0 (G itself included), with Levi data."""
    out = []
    if G.family in ("GL", "SL"):
        for comp in sorted(_compositions(G.n), key=lambda c: (len(c), c), reverse=True):
            length = sum(d - 1 for d in comp)
            tag = "(" + ",".join(str(d) for d in comp) + ")"
            out.append(_make_parabolic(G, tag, comp, length))
    elif G.family == "U" and G.n == 3:
        out.append(_make_parabolic(G, "B0", (1, 1, 1), 0))
        out.append(_make_parabolic(G, "G", (3,), 1))
    elif G.family == "U" and G.n == 2:
        out.append(_make_parabolic(G, "B0", (1, 1), 0))
        out.append(_make_parabolic(G, "G", (2,), 1))
    elif G.family == "SP":
        out.append(_make_parabolic(G, "B", (1, 1, 1, 1), 0))
        out.append(_make_parabolic(G, "Klingen", (1, 2, 1), 1))
        out.append(_make_parabolic(G, "Siegel", (2, 2), 1))
        out.append(_make_parabolic(G, "G", (4,), 2))
    else:
        raise UsageError(f"no parabolic table for {G.label}")
    return out


# ---------------------------------------------------------------------------
# torus embeddings


def embed_gl_torus(G: GroupTable, partition) -> Subgroup:
    """Maximal torus of GL_n(F_q) of type a partition of n (block norm tori)."""
    if G.family not in ("GL",):
        raise UsageError("embed_gl_torus needs a GL group")
    if sum(partition) != G.n:
        raise UsageError("partition must sum to n")
    q = G.q
    base = G.entry_field
    blocks = []
    for d in partition:
        if d == 1:
            blocks.append([((u.code,),) for u in base.units()])
        else:
            big = GF(q**d)
            coords = tower_coords(big, base)
            blocks.append(
                [mult_matrix(big, base, big.exp[e], coords) for e in range(big.q - 1)]
            )
    ids = []

    def rec(bi, diag):
        if bi == len(blocks):
            n = G.n
            m = [[0] * n for _ in range(n)]
            r0 = 0
            for bmat in diag:
                d = len(bmat)
                for i in range(d):
                    for j in range(d):
                        m[r0 + i][r0 + j] = bmat[i][j]
                r0 += d
            ids.append(G.id_of_matrix(tuple(tuple(r) for r in m)))
            return
        for bmat in blocks[bi]:
            rec(bi + 1, diag + [bmat])

    rec(0, [])
    tag = "T(" + ",".join(str(d) for d in partition) + ")"
    sub = G.subgroup(ids, tag)
    return sub


def _gram_entry_u(field, q, gram, x, y):
    """y* . gram . x with conjugation c -> c^q, over code vectors."""
    acc = 0
    for a in range(len(x)):
        ya = field.pow_code(y[a], q)
        if not ya:
            continue
        for b in range(len(x)):
            if gram[a][b] and x[b]:
                acc = field.add_code(acc, field.mul_code(field.mul_code(ya, gram[a][b]), x[b]))
    return acc


def _all_vectors(field, n):
    out = [[]]
    for _ in range(n):
        out = [v + [c] for v in out for c in range(field.q)]
    return [tuple(v) for v in out if any(v)]


def _u3_transport(field: FiniteField, q: int, gram):
    """Basis C with C* gram C = antidiag(1,1,1), found by small search."""
    vecs = _all_vectors(field, 3)
    h = lambda x, y: _gram_entry_u(field, q, gram, x, y)
    for v0 in vecs:
        if h(v0, v0) != 0:
            continue
        for v2 in vecs:
            if h(v2, v2) != 0 or h(v2, v0) != 1:
                continue
            # orthogonal complement line: v1 with pairings 0,0 and h(v1,v1)=1
            for v1 in vecs:
                if (
                    h(v1, v0) == 0
                    and h(v0, v1) == 0
                    and h(v1, v2) == 0
                    and h(v2, v1) == 0
                    and h(v1, v1) == 1
                ):
                    C = tuple(
                        tuple((v0[i], v1[i], v2[i])[j] for j in range(3))
                        for i in range(3)
                    )
                    return C
    raise ConsistencyError("no hermitian basis transport found")


def embed_u3_torus(G: GroupTable, kind) -> Subgroup:
    """Maximal torus of U_3(F_q): kind is (2,1), (1,1,1) or (3,)."""
    if G.family != "U" or G.n != 3:
        raise UsageError("embed_u3_torus needs a U_3 group")
    q = G.q
    E = G.entry_field  # F_{q^2}
    kind = tuple(kind)
    norm_one = [E.exp[i * (q - 1)] for i in range(q + 1)]  # mu with mu^{q+1} = 1
    if kind == (2, 1):
        ids = []
        for a in E.units():
            c = (a.code, E.pow_code(E.inv_code(a.code), q))
            for b in norm_one:
                m = ((a.code, 0, 0), (0, b, 0), (0, 0, c[1]))
                ids.append(G.id_of_matrix(m))
        return G.subgroup(ids, "T(2,1)")
    if kind == (1, 1, 1):
        # three orthogonal norm-one lines; transport diag(1,1,1) gram to J
        gram = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
        C = _u3_transport(E, q, gram)
        Ci = linalg.mat_inv(E, C)
        ids = []
        for a in norm_one:
            for b in norm_one:
                for c in norm_one:
                    D = ((a, 0, 0), (0, b, 0), (0, 0, c))
                    X = linalg.mat_mul(E, linalg.mat_mul(E, Ci, D), C)
                    ids.append(G.id_of_matrix(X))
        return G.subgroup(ids, "T(1,1,1)")
    if kind == (3,):
        big = GF(q**6)
        coords = tower_coords(big, E)
        d = 3
        basis = [big.exp[i] if i > 0 else 1 for i in range(d)]
        # hermitian gram of h(u, v) = Tr_{big/E}(u * v^{q^3}) on the tower basis
        gram = []
        for bu in basis:
            row = []
            for bv in basis:
                w = big.mul_code(bu, big.pow_code(bv, q**3))
                t = 0
                for e in range(d):
                    t = big.add_code(t, big.pow_code(w, (q * q) ** e))
                # t lies in E; section via tower coords (constant coordinate)
                cs = coords(t)
                if any(cs[1:]):
                    raise ConsistencyError("trace landed outside the base field")
                row.append(cs[0])
            gram.append(tuple(row))
        gram = tuple(gram)
        C = _u3_transport(E, q, gram)
        Ci = linalg.mat_inv(E, C)
        ids = []
        step = q**3 - 1  # generator of the order q^3+1 subgroup: g^(q^3-1)
        for t in range(q**3 + 1):
            mu = big.exp[(step * t) % (big.q - 1)]
            M = mult_matrix(big, E, mu, coords)
            X = linalg.mat_mul(E, linalg.mat_mul(E, Ci, M), C)
            ids.append(G.id_of_matrix(X))
        return G.subgroup(ids, "T(3)")
    raise UsageError(f"unknown U_3 torus kind {kind!r}")


def _sp4_gram_entry(field, gram, x, y):
    """x^T . gram . y over code vectors (no conjugation)."""
    acc = 0
    for a in range(len(x)):
        if not x[a]:
            continue
        for b in range(len(y)):
            if gram[a][b] and y[b]:
                acc = field.add_code(acc, field.mul_code(field.mul_code(x[a], gram[a][b]), y[b]))
    return acc


def _sp4_transport(field: FiniteField, gram):
    """Basis C with C^T gram C = the standard antidiagonal symplectic form."""
    vecs = _all_vectors(field, 4)
    s = lambda x, y: _sp4_gram_entry(field, gram, x, y)
    m1 = field.neg_code(1)
    for b0 in vecs:
        for b3 in vecs:
            if s(b0, b3) != 1:
                continue
            perp = [
                v
                for v in vecs
                if s(b0, v) == 0 and s(b3, v) == 0 and s(v, b0) == 0 and s(v, b3) == 0
            ]
            for b1 in perp:
                for b2 in perp:
                    if s(b1, b2) == 1:
                        C = tuple(
                            tuple((b0[i], b1[i], b2[i], b3[i])[j] for j in range(4))
                            for i in range(4)
                        )
                        return C
    raise ConsistencyError("no symplectic basis transport found")


def embed_sp4_torus(G: GroupTable, tag: str) -> Subgroup:
    """Maximal torus of Sp_4(F_q); tag in {'(1,1)','(1,-1)','(-1,-1)','(2)','(-2)'}."""
    if G.family != "SP":
        raise UsageError("embed_sp4_torus needs Sp_4")
    q = G.q
    F = G.entry_field
    E2 = GF(q * q)
    coords2 = tower_coords(E2, F)
    norm_one2 = [E2.exp[i * (q - 1)] for i in range(q + 1)]
    units = [u.code for u in F.units()]

    def place(blocks):
        """blocks: list of (positions, 2x2 or 1x1 matrices) -> group id."""
        m = [[0] * 4 for _ in range(4)]
        for pos, B in blocks:
            for bi, r in enumerate(pos):
                for bj, c in enumerate(pos):
                    m[r][c] = B[bi][bj]
        return G.id_of_matrix(tuple(tuple(r) for r in m))

    ids = []
    if tag == "(1,1)":
        for a in units:
            for b in units:
                ids.append(
                    place(
                        [
                            ((0,), ((a,),)),
                            ((1,), ((b,),)),
                            ((2,), ((F.inv_code(b),),)),
                            ((3,), ((F.inv_code(a),),)),
                        ]
                    )
                )
    elif tag == "(1,-1)":
        for a in units:
            for mu in norm_one2:
                M = mult_matrix(E2, F, mu, coords2)
                ids.append(
                    place([((0,), ((a,),)), ((3,), ((F.inv_code(a),),)), ((1, 2), M)])
                )
    elif tag == "(-1,-1)":
        for mu in norm_one2:
            for nu in norm_one2:
                M1 = mult_matrix(E2, F, mu, coords2)
                M2 = mult_matrix(E2, F, nu, coords2)
                ids.append(place([((0, 3), M1), ((1, 2), M2)]))
    elif tag == "(2)":
        # GL_1(F_{q^2}) on a Lagrangian plane, dual action on the complement
        K = ((0, 1), (1, 0))
        for e in range(E2.q - 1):
            A = mult_matrix(E2, F, E2.exp[e], coords2)
            Ait = linalg.mat_transpose(linalg.mat_inv(F, A))
            D = linalg.mat_mul(F, linalg.mat_mul(F, K, Ait), K)
            ids.append(place([((0, 1), A), ((2, 3), D)]))
    elif tag == "(-2)":
        big = GF(q**4)
        coords4 = tower_coords(big, F)
        # alternating form s(u,v) = Tr(lambda*(u v^{q^2} - u^{q^2} v)), lambda
        # scanned until nondegenerate
        basis = [big.exp[i] if i > 0 else 1 for i in range(4)]
        gram = None
        for lam_e in range(big.q - 1):
            lam = big.exp[lam_e]
            g = []
            for bu in basis:
                row = []
                for bv in basis:
                    w1 = big.mul_code(bu, big.pow_code(bv, q * q))
                    w2 = big.mul_code(big.pow_code(bu, q * q), bv)
                    w = big.add_code(w1, big.neg_code(w2))
                    w = big.mul_code(lam, w)
                    t = 0
                    for e2 in range(4):
                        t = big.add_code(t, big.pow_code(w, q**e2))
                    cs = coords4(t)
                    if any(cs[1:]):
                        raise ConsistencyError("trace landed outside the base field")
                    row.append(cs[0])
                g.append(tuple(row))
            g = tuple(g)
            det = linalg.mat_det(F, g)
            if det:
                gram = g
                break
        if gram is None:
            raise ConsistencyError("no nondegenerate invariant form found")
        C = _sp4_transport(F, gram)
        Ci = linalg.mat_inv(F, C)
        step = q * q - 1
        for t in range(q * q + 1):
            mu = big.exp[(step * t) % (big.q - 1)]
            M = mult_matrix(big, F, mu, coords4)
            X = linalg.mat_mul(F, linalg.mat_mul(F, Ci, M), C)
            ids.append(G.id_of_matrix(X))
    else:
        raise UsageError(f"unknown Sp_4 torus tag {tag!r}")
    return G.subgroup(ids, f"T{tag}")


# ---------------------------------------------------------------------------


def normalizer_weyl(G: GroupTable, T: Subgroup):
    """(|N_G(T)/T|, permutations of T induced by coset representatives)."""
    mask = np.ones(G.order, dtype=bool)
    t_set = set(int(i) for i in T.ids)
    conj_rows = {}
    for t in T.ids:
        row = G.conjugate_by_all(int(t))
        conj_rows[int(t)] = row
        mask &= np.isin(row, T.ids)
    normalizer = np.nonzero(mask)[0]
    if len(normalizer) % T.order != 0:
        raise ConsistencyError("normalizer size not divisible by torus size")
    w_order = len(normalizer) // T.order
    # coset representatives and induced permutations of T
    perms = []
    seen = set()
    t_list = [int(t) for t in T.ids]
    t_pos = {t: i for i, t in enumerate(t_list)}
    for x in normalizer:
        x = int(x)
        if x in seen:
            continue
        # mark the whole coset xT
        prods = G._mm(G.expanded[x], G.expanded[T.ids])
        ids = G.lookup_rows(prods)
        seen.update(int(i) for i in ids)
        perm = tuple(t_pos[int(conj_rows[t][x])] for t in t_list)
        perms.append(perm)
    if len(perms) != w_order:
        raise ConsistencyError("coset count mismatch in normalizer")
    return w_order, perms
