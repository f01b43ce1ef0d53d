"""Enumerated matrix groups: orders, classes, parabolics, embedded tori."""

import numpy as np
import pytest

from lietype.errors import ResourceError, UsageError
from lietype.groups import (
    build_group,
    embed_gl_torus,
    embed_sp4_torus,
    embed_u3_torus,
    normalizer_weyl,
    standard_parabolics,
)
from lietype.tori import gl_torus_classes


def test_orders_and_class_counts_frozen():
    table = [
        ("gl", 2, 2, 6, 3),
        ("gl", 2, 3, 48, 8),
        ("gl", 2, 4, 180, 15),
        ("gl", 2, 5, 480, 24),
        ("gl", 3, 2, 168, 6),
        ("gl", 3, 3, 11232, 24),
        ("sl", 2, 2, 6, 3),
        ("sl", 2, 3, 24, 7),
        ("sl", 2, 4, 60, 5),
        ("sl", 2, 5, 120, 9),
        ("u", 2, 2, 18, 9),
        ("u", 3, 2, 648, 24),
        ("sp", 4, 2, 720, 11),
    ]
    for fam, n, q, order, n_classes in table:
        G = build_group(fam, n, q)
        cd = G.conjugacy_classes()
        assert G.order == order
        assert len(cd.reps) == n_classes
        assert sum(cd.sizes) == order


def test_group_table_is_a_group():
    G = build_group("gl", 2, 3)
    e = G.identity
    for i in range(G.order):
        assert G.mul(i, G.inv(i)) == e
        assert G.mul(e, i) == i
    # associativity spot-check
    rng = np.random.default_rng(7)
    for _ in range(200):
        a, b, c = rng.integers(0, G.order, 3)
        assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))


def test_element_orders_divide_group_order():
    G = build_group("sl", 2, 5)
    for i in range(G.order):
        assert G.order % G.element_order(i) == 0


def test_jordan_decomposition():
    G = build_group("gl", 2, 3)
    for i in range(G.order):
        s, u = G.jordan_decompose(i)
        assert G.is_semisimple(s)
        assert G.is_unipotent(u)
        assert G.mul(s, u) == i
        assert G.mul(u, s) == i


def test_semisimple_and_unipotent_flags_gl2f3():
    G = build_group("gl", 2, 3)
    cd = G.conjugacy_classes()
    assert list(cd.sizes) == [1, 8, 12, 1, 6, 8, 6, 6]
    assert list(cd.semisimple_flags()) == [True, False, True, True, True, False, True, True]
    assert list(cd.unipotent_flags()) == [True, True, False, False, False, False, False, False]


def test_parabolic_factorization():
    # |P| = |M| |N| and the Borel has the smallest order
    frozen = {
        ("gl", 3, 2): {"(1,1,1)": (8, 1, 8), "(2,1)": (24, 6, 4), "(1,2)": (24, 6, 4), "(3)": (168, 168, 1)},
        ("sp", 4, 2): {"B": (16, 1, 16), "Klingen": (48, 6, 8), "Siegel": (48, 6, 8), "G": (720, 720, 1)},
    }
    for (fam, n, q), expect in frozen.items():
        G = build_group(fam, n, q)
        pds = standard_parabolics(G)
        assert {pd.tag for pd in pds} == set(expect)
        for pd in pds:
            p, m, nn = expect[pd.tag]
            assert (pd.P.order, pd.M.order, pd.N.order) == (p, m, nn)
            assert pd.P.order == pd.M.order * pd.N.order
            assert G.order % pd.P.order == 0
        borel = min(pds, key=lambda pd: pd.P.order)
        assert borel.length == 0


def test_embedded_gl_tori_orders():
    G = build_group("gl", 2, 3)
    assert embed_gl_torus(G, (1, 1)).order == 4  # (q-1)^2
    assert embed_gl_torus(G, (2,)).order == 8  # q^2-1
    G = build_group("gl", 3, 2)
    assert embed_gl_torus(G, (3,)).order == 7
    assert embed_gl_torus(G, (1, 1, 1)).order == 1  # degenerate at q = 2
    with pytest.raises(UsageError):
        embed_gl_torus(G, (2, 2))
    with pytest.raises(UsageError):
        embed_gl_torus(build_group("sp", 4, 2), (2, 2))


def test_normalizer_weyl_matches_torus_table():
    # q large enough that distinct torus classes stay non-degenerate
    for part in [(1, 1), (2,)]:
        for q in (3, 5):
            G = build_group("gl", 2, q)
            w, perms = normalizer_weyl(G, embed_gl_torus(G, part))
            assert w == 2 and len(perms) == 2
    G = build_group("gl", 3, 3)
    table = {tc.tag: tc.weyl_order for tc in gl_torus_classes(3)}
    for part in [(1, 1, 1), (2, 1), (3,)]:
        T = embed_gl_torus(G, part)
        w, perms = normalizer_weyl(G, T)
        tag = "(" + ",".join(str(d) for d in part) + ")"
        assert w == table[tag]
        assert len(perms) == w
        # each coset representative permutes the torus
        for perm in perms:
            assert sorted(perm) == list(range(T.order))


def test_embedded_u3_and_sp4_tori_orders():
    U = build_group("u", 3, 2)
    assert embed_u3_torus(U, (1, 1, 1)).order == 27  # (q+1)^3
    assert embed_u3_torus(U, (2, 1)).order == 9  # (q^2-1)(q+1)
    assert embed_u3_torus(U, (3,)).order == 9  # q^2-q+1 times ... = (q^3+1)/(q+1)*(q+1)
    S = build_group("sp", 4, 2)
    orders = {"(1,1)": 1, "(1,-1)": 3, "(-1,-1)": 9, "(2)": 3, "(-2)": 5}
    for tag, t_order in orders.items():
        assert embed_sp4_torus(S, tag).order == t_order


def test_subgroup_id_translation():
    G = build_group("gl", 2, 3)
    T = embed_gl_torus(G, (2,))
    H = T.table
    assert H.order == 8
    for lid in range(H.order):
        gid = T.global_id(lid)
        assert T.contains(gid)
        assert T.local_id(gid) == lid
    # torus is abelian, so every element is its own class
    assert len(H.conjugacy_classes().reps) == 8


def test_builder_guards():
    with pytest.raises(UsageError):
        build_group("gl", 5, 2)
    with pytest.raises(ResourceError):
        build_group("gl", 4, 3)
    with pytest.raises(UsageError):
        build_group("sp", 2, 3)
