"""Maximal-torus classification tables and counting identities."""

import pytest

from lietype.errors import UsageError
from lietype.groups import build_group, embed_gl_torus, embed_sp4_torus, embed_u3_torus
from lietype.tori import (
    classical_torus_classes,
    gl_torus_classes,
    partitions,
    parts_of,
    sp4_torus_classes,
    torus_count_check,
    torus_order,
    torus_weyl_group,
    u_torus_classes,
    unit_torus_scan,
)


def test_partitions():
    assert partitions(1) == [(1,)]
    assert partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(partitions(7)) == 15


def test_gl_torus_classes_frozen():
    two = {tc.tag: tc for tc in gl_torus_classes(2)}
    assert set(two) == {"(2)", "(1,1)"}
    assert two["(2)"].weyl_order == 2 and two["(2)"].anisotropic
    assert two["(1,1)"].weyl_order == 2 and not two["(1,1)"].anisotropic
    assert two["(1,1)"].split_rank == 2
    assert torus_order(two["(2)"], 5) == 24
    assert torus_order(two["(1,1)"], 5) == 16
    # centralizer-of-cycle-type orders in S_4
    four = {tc.tag: tc.weyl_order for tc in gl_torus_classes(4)}
    assert four == {"(4)": 4, "(3,1)": 3, "(2,2)": 8, "(2,1,1)": 4, "(1,1,1,1)": 24}


def test_u_and_sp_torus_classes_frozen():
    u3 = {tc.tag: (tc.weyl_order, tc.anisotropic) for tc in u_torus_classes(3)}
    assert u3 == {"(3)": (3, True), "(2,1)": (2, False), "(1,1,1)": (6, True)}
    sp = {tc.tag: (tc.weyl_order, torus_order(tc, 3)) for tc in sp4_torus_classes()}
    assert sp == {
        "(1,1)": (8, 4),
        "(1,-1)": (4, 8),
        "(-1,-1)": (8, 16),
        "(2)": (4, 8),
        "(-2)": (4, 10),
    }
    assert sum(tc.weyl_order for tc in sp4_torus_classes()) > 0
    with pytest.raises(UsageError):
        classical_torus_classes("E", 8)


def test_torus_weyl_group_helper():
    for tc in gl_torus_classes(3):
        assert torus_weyl_group(tc) == tc.weyl_order
        assert sum(parts_of(tc)) == 3


def test_torus_count_identity():
    # sum over classes of |G| / (|T| |W|) equals q^(2 * #positive roots)
    cases = [
        ("GL", 2, 3, 48, 1),
        ("GL", 2, 5, 480, 1),
        ("GL", 3, 2, 168, 3),
        ("GL", 3, 3, 11232, 3),
        ("U", 3, 2, 648, 3),
        ("SP", 4, 2, 720, 4),
    ]
    for family, n, q, order, n_pos in cases:
        assert torus_count_check(family, n, q, order, n_pos)


def test_unit_torus_scan_frozen():
    hits = set(unit_torus_scan(4, (2, 3, 4, 5)))
    expected = {("SP", 4, "(1,1)", 2)}
    for n in range(1, 5):
        tag = "(" + ",".join("1" * n) + ")"
        expected.add(("GL", n, tag, 2))
    assert hits == expected


def test_embedded_orders_match_polynomials():
    G = build_group("gl", 2, 5)
    for tc in gl_torus_classes(2):
        part = parts_of(tc)
        assert embed_gl_torus(G, part).order == tc.order(5)
    U = build_group("u", 3, 2)
    for tc in u_torus_classes(3):
        assert embed_u3_torus(U, parts_of(tc)).order == tc.order(2)
    S = build_group("sp", 4, 2)
    for tc in sp4_torus_classes():
        assert embed_sp4_torus(S, tc.tag).order == tc.order(2)
