"""The thirteen-point verification suite.

Each check re-derives its expected values through a route independent of
the code under test (brute-force enumeration, the numerical table
oracle, or closed-form integer arithmetic) and raises on the first
mismatch.  The CLI `verify` subcommand and the acceptance tests both run
these, so a regression shows up identically in either entry point.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations
from math import prod

import numpy as np

from .chars import (
    DEFAULT_SEED,
    TOL,
    decompose,
    induce,
    inner_product,
    restrict,
    snap_int,
    table_of,
    trivial_character,
)
from .dlchar import (
    cuspidality_check,
    dl_dimension,
    dl_inner_product,
    dl_virtual_character,
    drinfeld_orbit_check,
    geometric_conjugacy_test,
    green_cuspidal,
    jordan_dimension_scale,
    ps_character,
    st2_id2_dimensions,
    u3_unipotent_decomposition,
)
from .duality import duality_signs, dualize, steinberg, steinberg_values
from .errors import ConsistencyError
from .fields import regular_orbit_reps
from .groups import build_group, standard_parabolics
from .linalg import mat_det
from .octonion import (
    JordanElement,
    ScalarRing,
    SplitOctonion,
    composition_identity_sweep,
    jordan_det,
)
from .rootdata import (
    TABULATED_TYPES,
    degrees,
    gl_order_polynomial,
    group_order_polynomial,
    p_part_split,
    positive_roots,
    q_to_one_limit,
    weyl_order,
)
from .tori import (
    classical_torus_classes,
    gl_torus_classes,
    parts_of,
    sp4_torus_classes,
    u_torus_classes,
    unit_torus_scan,
)


@dataclass(frozen=True)
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float


def _need(cond: bool, msg: str):
    if not cond:
        raise ConsistencyError(msg)


# Every group the suite enumerates; orders are checked against the
# polynomial in check 1 and the table oracle is audited in check 3.
BUILT_GROUPS = (
    ("GL", 2, 2), ("GL", 2, 3), ("GL", 2, 4), ("GL", 2, 5),
    ("GL", 3, 2), ("GL", 3, 3),
    ("SL", 2, 2), ("SL", 2, 3), ("SL", 2, 4), ("SL", 2, 5),
    ("U", 2, 2), ("U", 3, 2),
    ("SP", 4, 2),
)


def _borel(G):
    return min(standard_parabolics(G), key=lambda pd: pd.P.order)


def _constituent_degrees(f, table):
    """Degrees of the constituents of f, with multiplicity, sorted."""
    out = []
    for m, chi in zip(decompose(f, table), table.rows):
        _need(m >= 0, "a genuine character decomposed with a negative multiplicity")
        out.extend([snap_int(chi.degree)] * m)
    return sorted(out)


# -- the thirteen checks -------------------------------------------------------


def check_orders(seed: int) -> str:
    biggest = ("", 0)
    for family, n, q in BUILT_GROUPS:
        G = build_group(family, n, q)
        want = group_order_polynomial(family, n)(q)
        _need(G.order == want, f"{G.label}: enumerated {G.order} != polynomial {want}")
        if G.order > biggest[1]:
            biggest = (G.label, G.order)
    return f"{len(BUILT_GROUPS)} groups enumerate to their polynomial orders (largest {biggest[0]} = {biggest[1]})"


def check_exponents(seed: int) -> str:
    for family, rank in TABULATED_TYPES:
        ds = degrees(family, rank)
        w = weyl_order(family, rank)
        _need(prod(ds) == w, f"{family}_{rank}: prod of degrees != |W|")
        _need(sum(d - 1 for d in ds) == positive_roots(family, rank),
              f"{family}_{rank}: sum of exponents != N")
        _need(q_to_one_limit(family, rank) == w, f"{family}_{rank}: q->1 limit != |W|")
    return f"{len(TABULATED_TYPES)} types: prod(d_i) = |W|, sum(d_i - 1) = N, q->1 limit = |W|"


def check_oracle_soundness(seed: int) -> str:
    worst = 0.0
    for family, n, q in BUILT_GROUPS:
        G = build_group(family, n, q)
        tab = table_of(G, seed)
        cc = G.conjugacy_classes()
        _need(len(tab.rows) == cc.n_classes, f"{G.label}: #irreducibles != #classes")
        _need(sum(d * d for d in tab.degrees) == G.order,
              f"{G.label}: sum of squared degrees != |G|")
        for i, chi in enumerate(tab.rows):
            for j in range(i, len(tab.rows)):
                r = abs(inner_product(chi, tab.rows[j]) - (1 if i == j else 0))
                worst = max(worst, r)
        _need(worst <= 1e-6, f"{G.label}: orthogonality residual {worst:.2e} > 1e-6")
    return f"{len(BUILT_GROUPS)} tables orthonormal (residual {worst:.1e}), degrees square-sum to |G|"


def check_green(seed: int) -> str:
    total = 0
    for n, q in ((2, 2), (2, 3), (2, 5), (3, 2)):
        reps = regular_orbit_reps(n, q)
        if n == 2:
            _need(len(reps) == (q * q - q) // 2, f"n=2, q={q}: orbit count != (q^2-q)/2")
        else:
            _need(len(reps) == (q**3 - q) // 3, f"n=3, q={q}: orbit count != (q^3-q)/3")
        want_dim = prod(q**i - 1 for i in range(1, n))
        seen = set()
        for e in reps:
            ch = green_cuspidal(n, q, e, seed=seed, verify=True)
            _need(snap_int(ch.degree) == want_dim,
                  f"n={n}, q={q}, orbit {e}: degree != prod(q^i - 1)")
            key = tuple(round(v.real, 6) + 1j * round(v.imag, 6) for v in ch.values)
            seen.add(key)
            total += 1
        _need(len(seen) == len(reps), f"n={n}, q={q}: orbits collide onto one row")
    return f"{total} regular orbits match distinct oracle rows; counts and dimensions exact"


def check_dimensions(seed: int) -> str:
    checked = 0
    for n, q in ((2, 3), (2, 5), (3, 2)):
        for tc in gl_torus_classes(n):
            parts = parts_of(tc)
            thetas = {tuple(0 for _ in parts)}
            # one character in general position when the part sizes allow it
            thetas.add(tuple(1 if i == 0 else 0 for i in range(len(parts))))
            for th in sorted(thetas):
                R = dl_virtual_character(tc, th, q, seed)
                _need(snap_int(R.degree) == dl_dimension(tc, q),
                      f"GL_{n}(F_{q}) torus {tc.tag}, theta {th}: identity value != signed dimension")
                checked += 1
    for tc in u_torus_classes(3):
        R = dl_virtual_character(tc, None, 2, seed)
        _need(snap_int(R.degree) == dl_dimension(tc, 2),
              f"U_3(F_2) torus {tc.tag}: identity value != signed dimension")
        checked += 1
    return f"{checked} constructed characters hit the signed dimension at the identity"


def _pair_entries(q: int, seed: int):
    entries = []
    for tc in gl_torus_classes(2):
        if len(parts_of(tc)) == 2:
            thetas = [(a, b) for a in range(q - 1) for b in range(q - 1)]
        else:
            thetas = [(e,) for e in range(q * q - 1)]
        for th in thetas:
            entries.append((tc, th, dl_virtual_character(tc, th, q, seed)))
    return entries


def check_orthogonality(seed: int) -> str:
    pairings = 0
    for q in (3, 5):
        entries = _pair_entries(q, seed)
        tab = table_of(build_group("GL", 2, q), seed)
        supports = [
            frozenset(i for i, m in enumerate(decompose(R, tab)) if m)
            for _, _, R in entries
        ]
        for i in range(len(entries)):
            tci, thi, Ri = entries[i]
            for j in range(i, len(entries)):
                tcj, thj, Rj = entries[j]
                got = snap_int(inner_product(Ri, Rj))
                want = dl_inner_product(tci, thi, tcj, thj, q)
                _need(got == want,
                      f"q={q}: <{tci.tag}{thi}, {tcj.tag}{thj}> oracle {got} != count {want}")
                disjoint = not (supports[i] & supports[j])
                conj = geometric_conjugacy_test(tci, thi, tcj, thj, q)
                _need(disjoint == (not conj),
                      f"q={q}: {tci.tag}{thi} vs {tcj.tag}{thj}: disjointness != non-conjugacy")
                pairings += 1
    return f"{pairings} pairings match the permutation count; constituents disjoint <=> non-conjugate"


def check_u3(seed: int) -> str:
    d = u3_unipotent_decomposition(2, seed)
    _need(d["dimension"] == -3, "anisotropic-torus character of U_3(F_2) is not -3 at 1")
    _need(d["constituents"] == ((1, 1), (8, -1), (2, 2)),
          "constituent pattern is not 1 - St + 2 pi")
    _need(d["pi_degree"] == 2, "pi degree != q(q-1)")
    _need(d["pi_cuspidal"], "pi is not cuspidal")
    _need(d["norm_squared"] == 6, "<R,R> != 6")
    _need(d["orthogonal_to_split_series"], "R is not orthogonal to the quasi-split series")
    return "R = 1 - St + 2pi (sign pinned by the dimension identity, logged); <R,R>=6, pi cuspidal of degree 2"


def check_duality(seed: int) -> str:
    for family, n, q, n_pos in (("GL", 2, 3, 1), ("GL", 3, 2, 3), ("U", 3, 2, 3), ("SP", 4, 2, 4)):
        G = build_group(family, n, q)
        st = steinberg(G)
        _need(snap_int(st.degree) == q**n_pos, f"{G.label}: dim St != q^N")
    for family, n, q in (("GL", 2, 3), ("GL", 3, 2)):
        G = build_group(family, n, q)
        st = steinberg(G)
        closed = steinberg_values(G)
        ss = G.conjugacy_classes().semisimple_flags()
        for c, (v, w) in enumerate(zip(st.values, closed)):
            _need(snap_int(v) == w, f"{G.label} class {c}: St value != closed form")
            _need(ss[c] or w == 0, f"{G.label} class {c}: nonzero St value off semisimple")
    for family, n, q in (("GL", 2, 3), ("GL", 3, 2), ("U", 3, 2)):
        G = build_group(family, n, q)
        tab = table_of(G, seed)
        signs = duality_signs(tab)  # raises unless D(irr) = +-irr
        for i, (j, s) in enumerate(signs):
            jj, ss2 = signs[j]
            _need(jj == i and ss2 == s, f"{G.label}: duality is not an involution at row {i}")
        duals = [dualize(chi) for chi in tab.rows]
        for i in range(len(duals)):
            for j in range(i, len(duals)):
                want = 1 if i == j else 0
                _need(abs(inner_product(duals[i], duals[j]) - want) <= TOL,
                      f"{G.label}: duality is not an isometry at ({i},{j})")
        triv = tab.rows.index(next(r for r in tab.rows if all(abs(v - 1) < TOL for v in r.values)))
        _need(duals[triv].close_to(steinberg(G)), f"{G.label}: dual of 1 != St")
        _need(dualize(steinberg(G)).close_to(tab.rows[triv]), f"{G.label}: dual of St != 1")
    return "dim St = q^N on 4 groups; closed-form values match; D an involutive isometry with D(1) = St"


def check_dimension_pairs(seed: int) -> str:
    for m in range(1, 5):
        for q in (2, 3, 4, 5):
            a, b = st2_id2_dimensions(m, q)
            _need(a > 0 and b > 0, f"m={m}, q={q}: half-dimensions are not positive")
            _need(a == b * q**m, f"m={m}, q={q}: ratio != q^m")
    G = build_group("GL", 2, 3)
    tab = table_of(G, seed)
    ps = ps_character(3, 1, 1, seed)
    parts = [(m, snap_int(chi.degree)) for m, chi in zip(decompose(ps, tab), tab.rows) if m]
    _need(sorted(m for m, _ in parts) == [1, 1], "repeated-character series is not multiplicity-free")
    _need(sorted(d for _, d in parts) == sorted(st2_id2_dimensions(1, 3)),
          "m=1 constituent degrees != the half-sum pair")
    return "16 (m,q) pairs: both halves positive integers with ratio q^m; m=1 matches the oracle decomposition {3,1}"


def check_jordan_scaling(seed: int) -> str:
    scale = jordan_dimension_scale(2, 2, 2)
    _need(scale == 7, "degree scale for n=2, m=2, q=2 != 7")
    inner = st2_id2_dimensions(1, 4)
    scaled = sorted(scale * d for d in inner)
    _need(scaled == sorted(st2_id2_dimensions(2, 2)) == [7, 28],
          "scaled degrees != {7, 28}")
    _, big = p_part_split(gl_order_polynomial(4), 2)
    _need(big % 9 == 0 and sum(scaled) == big // 9, "7 + 28 != |GL_4(F_2)|_p' / 9")
    return "scale 7 carries {1,4} to {7,28}; total 35 = |GL_4(F_2)|_p' / 9 exactly"


def check_curve_counts(seed: int) -> str:
    r2 = drinfeld_orbit_check(2, 2)
    _need(r2["count"] == 6, "q=2 count over the quadratic extension != 6")
    _need(r2["free"] and r2["orbit_sizes"] == [6], "q=2 action is not one free orbit")
    r3 = drinfeld_orbit_check(3, 2)
    _need(r3["count"] % 24 == 0, "q=3 quadratic count is not a multiple of 24")
    _need(r3["free"], "q=3 quadratic action is not free")
    r33 = drinfeld_orbit_check(3, 3)  # nonempty witness for the q=3 action
    _need(r33["count"] == 24 and r33["free"] and r33["orbit_sizes"] == [24],
          "q=3 cubic points are not one free orbit of size 24")
    return (f"counts {r2['count']} (q=2) and {r3['count']} (q=3, a multiple of 24, logged) over the "
            f"quadratic extensions; free action verified, nonempty at (3,3)")


def check_octonions(seed: int) -> str:
    for p in (5, 7):
        composition_identity_sweep(p, 10_000, seed=seed)
    ring = ScalarRing(5)
    basis = SplitOctonion.basis(ring)
    witness = None
    for i, j, k in combinations(range(8), 3):
        if (basis[i] * basis[j]) * basis[k] != basis[i] * (basis[j] * basis[k]):
            witness = (i, j, k)
            break
    _need(witness is not None, "no non-associating basis triple exists")
    one = jordan_det(JordanElement.identity(ring))
    _need(one == ring.one, "determinant of the identity element != 1")
    return f"composition identity on 2 x 10^4 pairs (F_5, F_7); basis triple {witness} non-associative; det(I) = 1"


def check_worked_examples(seed: int) -> str:
    # unit-order tori: only the split ones at q = 2
    hits = set(unit_torus_scan(4, (2, 3, 4, 5)))
    expected = {("SP", 4, "(1,1)", 2)}
    for n in range(1, 5):
        split = next(tc for tc in gl_torus_classes(n) if len(parts_of(tc)) == n)
        expected.add(("GL", n, split.tag, 2))
    _need(hits == expected, f"unit-order tori {sorted(hits)} != split/q=2 set")

    # restriction of the two-parameter series to the determinant-one subgroup
    for q in (3, 5):
        G = build_group("GL", 2, q)
        F = G.entry_field
        ids = np.array([i for i in range(G.order) if mat_det(F, G.mat(i)) == 1], dtype=np.int64)
        S = G.subgroup(ids, "det-one")
        _need(S.order == q * (q * q - 1), f"q={q}: determinant-one subgroup has wrong order")
        for ea in range(q - 1):
            for eb in range(ea + 1, q - 1):
                r = restrict(ps_character(q, ea, eb, seed), S)
                parts_count = snap_int(inner_product(r, r))
                want = 2 if (eb - ea) % (q - 1) == (q - 1) // 2 else 1
                _need(parts_count == want,
                      f"q={q}, exponents ({ea},{eb}): restriction splits into {parts_count}, expected {want}")

    # the unique cuspidal of the 6-element group has degree 1 (resolution logged)
    G2 = build_group("GL", 2, 2)
    tab2 = table_of(G2, seed)
    cusp = green_cuspidal(2, 2, 1, seed=seed, verify=True)
    _need(snap_int(cusp.degree) == 1, "cuspidal degree != q - 1 = 1")
    _need(cuspidality_check(cusp), "constructed cuspidal has a surviving parabolic average")
    _need(len(regular_orbit_reps(2, 2)) == 1, "cuspidal count != (q^2 - q)/2 = 1")
    two_dim = next(r for r in tab2.rows if snap_int(r.degree) == 2)
    _need(not cuspidality_check(two_dim), "the two-dimensional character wrongly passes the cuspidality test")
    b2 = _borel(G2)
    ind2 = induce(trivial_character(b2.P.table), b2.P)
    _need(_constituent_degrees(ind2, tab2) == [1, 2],
          "flag-space character of the 6-element group != 1 + the two-dimensional")

    # flag-space decompositions
    G3 = build_group("GL", 3, 2)
    b3 = _borel(G3)
    degs3 = _constituent_degrees(induce(trivial_character(b3.P.table), b3.P), table_of(G3, seed))
    _need(degs3 == [1, 6, 6, 8], f"GL_3(F_2) flag-space degrees {degs3} != [1, 6, 6, 8]")
    GU = build_group("U", 3, 2)
    bu = _borel(GU)
    degsu = _constituent_degrees(induce(trivial_character(bu.P.table), bu.P), table_of(GU, seed))
    _need(degsu == [1, 8], f"U_3(F_2) flag-space degrees {degsu} != [1, 8]")
    return ("unit tori only split/q=2; series restriction splits exactly at ratio order 2 (q=3,5); "
            "degree-1 cuspidal at q=2 (logged); flag degrees {1,6,6,8} and {1,8}")


CHECKS = (
    (1, "group-orders-vs-polynomials", check_orders),
    (2, "weyl-exponent-identities", check_exponents),
    (3, "table-oracle-soundness", check_oracle_soundness),
    (4, "cuspidal-value-formula", check_green),
    (5, "signed-dimension-formula", check_dimensions),
    (6, "pairing-orthogonality", check_orthogonality),
    (7, "unitary-anisotropic-decomposition", check_u3),
    (8, "steinberg-and-duality", check_duality),
    (9, "half-sum-dimension-pairs", check_dimension_pairs),
    (10, "extension-degree-scaling", check_jordan_scaling),
    (11, "curve-point-counts", check_curve_counts),
    (12, "octonion-identities", check_octonions),
    (13, "worked-example-sweep", check_worked_examples),
)


def run_check(number: int, seed: int = DEFAULT_SEED) -> CheckResult:
    for num, name, fn in CHECKS:
        if num == number:
            t0 = time.perf_counter()
            try:
                detail = fn(seed)
                passed = True
            except Exception as exc:  # noqa: BLE001 - a failing check must report, not crash
                detail = f"{type(exc).__name__}: {exc}"
                passed = False
            return CheckResult(num, name, passed, detail, time.perf_counter() - t0)
    raise ConsistencyError(f"no acceptance check numbered {number}")


def run_suite(numbers=None, seed: int = DEFAULT_SEED):
    wanted = tuple(num for num, _, _ in CHECKS) if numbers is None else tuple(numbers)
    return tuple(run_check(num, seed) for num in wanted)


def format_result(r: CheckResult) -> str:
    flag = "PASS" if r.passed else "FAIL"
    return f"[{flag}] {r.number:2d} {r.name} ({r.seconds:.1f}s): {r.detail}"


def suite_ok(results) -> bool:
    return all(r.passed for r in results)
