"""Alternating-sum duality and the Steinberg character."""

import pytest

from lietype.chars import inner_product, snap_int, table_of, trivial_character
from lietype.duality import dualize, duality_signs, steinberg, steinberg_values
from lietype.errors import DomainError
from lietype.groups import build_group


def test_steinberg_degree_is_q_to_the_positive_roots():
    for fam, n, q, dim in [("gl", 2, 3, 3), ("gl", 3, 2, 8), ("u", 3, 2, 8), ("sp", 4, 2, 16)]:
        G = build_group(fam, n, q)
        st = steinberg(G)
        assert snap_int(st.degree) == dim
        assert abs(inner_product(st, st) - 1) < 1e-8  # irreducible


def test_steinberg_closed_form_and_vanishing():
    for fam, n, q in [("gl", 2, 3), ("gl", 3, 2)]:
        G = build_group(fam, n, q)
        st = steinberg(G)
        closed = steinberg_values(G)
        ss = G.conjugacy_classes().semisimple_flags()
        for c, w in enumerate(closed):
            assert snap_int(st.at_class(c)) == w
            if not ss[c]:
                assert w == 0
    with pytest.raises(DomainError):
        steinberg_values(build_group("sp", 4, 2))


def test_duality_signs_gl3f2_frozen():
    G = build_group("gl", 3, 2)
    table = table_of(G)
    assert duality_signs(table) == ((5, 1), (1, 1), (2, 1), (3, 1), (4, -1), (0, 1))


def test_duality_involution_and_isometry():
    for fam, n, q in [("gl", 2, 3), ("u", 3, 2)]:
        G = build_group(fam, n, q)
        table = table_of(G)
        signs = duality_signs(table)
        for i, (j, s) in enumerate(signs):
            assert signs[j] == (i, s)
        duals = [dualize(r) for r in table]
        for i in range(len(duals)):
            for j in range(len(duals)):
                want = 1 if i == j else 0
                assert abs(inner_product(duals[i], duals[j]) - want) < 1e-8


def test_duality_swaps_trivial_and_steinberg():
    for fam, n, q in [("gl", 2, 3), ("gl", 3, 2), ("sl", 2, 5)]:
        G = build_group(fam, n, q)
        one = trivial_character(G)
        st = steinberg(G)
        assert dualize(one).close_to(st)
        assert dualize(st).close_to(one)


def test_sp4_steinberg_norm_one():
    G = build_group("sp", 4, 2)
    st = steinberg(G)
    table = table_of(G)
    assert any(r.close_to(st) for r in table)
