"""Class functions and the numerical character-table oracle.

The oracle diagonalizes a random linear combination of the class
multiplication matrices (exact integer data), reads each irreducible
character off the common eigenvectors, and then verifies orthonormality
before returning. Randomness is a seeded numpy generator, so tables are
bit-for-bit reproducible; on an eigenvalue collision the seed is bumped
deterministically and the combination redrawn.
"""

from __future__ import annotations

import numpy as np

from .errors import ConsistencyError, NumericalError, UsageError
from .groups import GroupTable, ParabolicDatum, Subgroup

DEFAULT_SEED = 0x5EED
TOL = 1e-6


def snap_int(x, tol=TOL):
    """Nearest integer, raising if x is not within tol of one."""
    if isinstance(x, complex):
        if abs(x.imag) > tol:
            raise ConsistencyError(f"value {x} is not real")
        x = x.real
    n = round(x)
    if abs(x - n) > tol:
        raise ConsistencyError(f"value {x} is not integral")
    return int(n)


class ClassFunction:
    """A complex-valued class function on a GroupTable."""

    __slots__ = ("group", "values")

    def __init__(self, group: GroupTable, values):
        values = tuple(complex(v) for v in values)
        if len(values) != group.conjugacy_classes().n_classes:
            raise UsageError("value count does not match class count")
        self.group = group
        self.values = values

    @property
    def degree(self):
        return self.values[0]  # class 0 is the identity class

    def at_class(self, c: int) -> complex:
        return self.values[c]

    def at_element(self, gid: int) -> complex:
        cc = self.group.conjugacy_classes()
        return self.values[int(cc.class_of[gid])]

    def conj(self) -> "ClassFunction":
        return ClassFunction(self.group, tuple(v.conjugate() for v in self.values))

    def __add__(self, other):
        self._check(other)
        return ClassFunction(
            self.group, tuple(a + b for a, b in zip(self.values, other.values))
        )

    def __sub__(self, other):
        self._check(other)
        return ClassFunction(
            self.group, tuple(a - b for a, b in zip(self.values, other.values))
        )

    def __neg__(self):
        return ClassFunction(self.group, tuple(-a for a in self.values))

    def __mul__(self, other):
        if isinstance(other, (int, float, complex)):
            return ClassFunction(self.group, tuple(other * a for a in self.values))
        self._check(other)  # pointwise product (tensor of characters)
        return ClassFunction(
            self.group, tuple(a * b for a, b in zip(self.values, other.values))
        )

    __rmul__ = __mul__

    def _check(self, other):
        if not isinstance(other, ClassFunction) or other.group is not self.group:
            raise UsageError("class functions live on different groups")

    def close_to(self, other, tol=TOL) -> bool:
        return all(abs(a - b) <= tol for a, b in zip(self.values, other.values))

    def __repr__(self):
        vals = ", ".join(_fmt(v) for v in self.values)
        return f"ClassFunction[{self.group.label}]({vals})"


def _fmt(v: complex) -> str:
    if abs(v.imag) < 1e-9:
        r = v.real
        if abs(r - round(r)) < 1e-9:
            return str(int(round(r)))
        return f"{r:.4f}"
    re = 0.0 if abs(v.real) < 1e-9 else v.real  # avoid "-0.0000" noise
    return f"{re:.4f}{v.imag:+.4f}i"


def trivial_character(G: GroupTable) -> ClassFunction:
    return ClassFunction(G, (1,) * G.conjugacy_classes().n_classes)


def inner_product(f: ClassFunction, g: ClassFunction) -> complex:
    if f.group is not g.group:
        raise UsageError("class functions live on different groups")
    cc = f.group.conjugacy_classes()
    total = 0j
    for c in range(cc.n_classes):
        total += cc.sizes[c] * f.values[c] * g.values[c].conjugate()
    return total / f.group.order


class CharacterTable:
    """Irreducible characters of a GroupTable, sorted by degree."""

    def __init__(self, group: GroupTable, rows):
        self.group = group
        self.rows = tuple(rows)
        self.degrees = tuple(snap_int(r.degree) for r in self.rows)

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def __getitem__(self, i):
        return self.rows[i]

    def by_degree(self, d: int):
        return [r for r in self.rows if snap_int(r.degree) == d]


def _class_matrices(G: GroupTable):
    """Integer class-algebra multiplication data.

    M[i][k, j] = #{x in C_i : x^{-1} z_k in C_j}, z_k the class-k
    representative; the matrix of multiplication by the class sum c_i on
    the center is read off these counts.
    """
    cc = G.conjugacy_classes()
    n_c = cc.n_classes
    mats = [np.zeros((n_c, n_c), dtype=np.int64) for _ in range(n_c)]
    members = [cc.members(i) for i in range(n_c)]
    for i in range(n_c):
        Xinv = G.expanded[G.inv_ids[members[i]]]
        for k in range(n_c):
            zk = G.expanded[cc.reps[k]]
            prods = G._mm(Xinv, zk)
            ids = G.lookup_rows(prods)
            js = cc.class_of[ids]
            counts = np.bincount(js, minlength=n_c)
            mats[i][k, :] = counts
    return mats


def irreducible_table(G: GroupTable, seed: int = DEFAULT_SEED) -> CharacterTable:
    """All irreducible characters, computed from the class algebra."""
    cc = G.conjugacy_classes()
    n_c = cc.n_classes
    mats = _class_matrices(G)
    sizes = np.array(cc.sizes, dtype=np.float64)
    for attempt in range(10):
        rng = np.random.default_rng(seed + attempt)
        coeffs = rng.uniform(1.0, 2.0, size=n_c)
        N = np.zeros((n_c, n_c), dtype=np.float64)
        for i in range(n_c):
            N += coeffs[i] * mats[i]
        # central characters are left eigenvectors of the class algebra
        vals, vecs = np.linalg.eig(N.T)
        scale = 1.0 + np.max(np.abs(vals))
        sep = min(
            abs(vals[a] - vals[b])
            for a in range(n_c)
            for b in range(a + 1, n_c)
        ) if n_c > 1 else 1.0
        if sep < 1e-8 * scale:
            continue
        rows = []
        for m in range(n_c):
            v = vecs[:, m]
            if abs(v[0]) < 1e-12:
                raise NumericalError("eigenvector vanishes at the identity class")
            v = v / v[0]
            u = v / sizes  # u_j = chi(g_j) / chi(1)
            s = float(np.sum(sizes * np.abs(u) ** 2).real)
            d = (G.order / s) ** 0.5
            di = round(d)
            if abs(d - di) > 1e-4 * max(1.0, d):
                raise NumericalError("non-integral character degree")
            chi = ClassFunction(G, tuple(di * u[j] for j in range(n_c)))
            rows.append(chi)
        rows.sort(key=lambda r: (round(r.degree.real), _row_key(r)))
        table = CharacterTable(G, rows)
        _verify_table(table)
        return table
    raise NumericalError("eigenvalues failed to separate after 10 reseeds")


def _row_key(r: ClassFunction):
    return tuple((round(v.real, 6), round(v.imag, 6)) for v in r.values)


def _verify_table(table: CharacterTable):
    G = table.group
    n = len(table.rows)
    cc = G.conjugacy_classes()
    if n != cc.n_classes:
        raise ConsistencyError("row count != class count")
    if sum(d * d for d in table.degrees) != G.order:
        raise ConsistencyError("sum of squared degrees != group order")
    for a in range(n):
        for b in range(n):
            ip = inner_product(table.rows[a], table.rows[b])
            want = 1.0 if a == b else 0.0
            if abs(ip - want) > TOL:
                raise ConsistencyError(
                    f"orthonormality failure at rows {a},{b}: {ip}"
                )


_TABLE_CACHE: dict = {}


def table_of(G: GroupTable, seed: int = DEFAULT_SEED) -> CharacterTable:
    key = (id(G), seed)
    if key not in _TABLE_CACHE:
        _TABLE_CACHE[key] = irreducible_table(G, seed)
    return _TABLE_CACHE[key]


# ---------------------------------------------------------------------------
# induction / restriction / Jacquet


def induce(f: ClassFunction, H: Subgroup) -> ClassFunction:
    """Induction from a subgroup H (f lives on H.table) to the parent."""
    G = H.parent
    if f.group is not H.table:
        raise UsageError("function does not live on the given subgroup")
    hcc = H.table.conjugacy_classes()
    # value of f at every parent id in H, 0 outside
    vals = np.zeros(G.order, dtype=np.complex128)
    for li in range(H.order):
        vals[H.global_id(li)] = f.values[int(hcc.class_of[li])]
    mask = H.member_mask()
    cc = G.conjugacy_classes()
    out = []
    for c in range(cc.n_classes):
        ids = G.conjugate_into(cc.reps[c])  # x^{-1} g x over all x
        total = vals[ids][mask[ids]].sum()
        out.append(total / H.order)
    return ClassFunction(G, out)


def restrict(f: ClassFunction, H: Subgroup) -> ClassFunction:
    """Restriction of a parent class function to the subgroup H."""
    G = H.parent
    if f.group is not G:
        raise UsageError("function does not live on the parent group")
    gcc = G.conjugacy_classes()
    hcc = H.table.conjugacy_classes()
    out = []
    for c in range(hcc.n_classes):
        gid = H.global_id(hcc.reps[c])
        out.append(f.values[int(gcc.class_of[gid])])
    return ClassFunction(H.table, out)


def jacquet(f: ClassFunction, pd: ParabolicDatum) -> ClassFunction:
    """Average f over the unipotent radical: m -> (1/|N|) sum_u f(m u)."""
    G = pd.P.parent
    if f.group is not G:
        raise UsageError("function does not live on the ambient group")
    gcc = G.conjugacy_classes()
    mcc = pd.M.table.conjugacy_classes()
    n_ids = pd.N.ids
    out = []
    for c in range(mcc.n_classes):
        gm = pd.M.global_id(mcc.reps[c])
        prods = G._mm(G.expanded[gm], G.expanded[n_ids])
        ids = G.lookup_rows(prods)
        total = sum(f.values[int(gcc.class_of[i])] for i in ids)
        out.append(total / pd.N.order)
    return ClassFunction(pd.M.table, out)


def decompose(f: ClassFunction, table: CharacterTable):
    """Multiplicities of f against a character table; must be integral."""
    if f.group is not table.group:
        raise UsageError("function and table live on different groups")
    mults = []
    for chi in table.rows:
        mults.append(snap_int(inner_product(f, chi)))
    # reconstruction check
    recon = [0j] * len(f.values)
    for m, chi in zip(mults, table.rows):
        for c in range(len(recon)):
            recon[c] += m * chi.values[c]
    for a, b in zip(recon, f.values):
        if abs(a - b) > TOL:
            raise ConsistencyError("decomposition does not reconstruct the function")
    return tuple(mults)


def from_multiplicities(table: CharacterTable, mults) -> ClassFunction:
    vals = [0j] * len(table.rows[0].values)
    for m, chi in zip(mults, table.rows):
        for c in range(len(vals)):
            vals[c] += m * chi.values[c]
    return ClassFunction(table.group, vals)
