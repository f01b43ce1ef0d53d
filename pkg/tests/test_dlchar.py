"""Virtual characters from torus data: values, pairings, dimensions, curves."""

import cmath

import pytest

from lietype.chars import inner_product, snap_int, table_of, trivial_character
from lietype.dlchar import (
    ambient_split_rank,
    cuspidality_check,
    dl_dimension,
    dl_inner_product,
    dl_virtual_character,
    drinfeld_count,
    drinfeld_orbit_check,
    epsilon_signs,
    geometric_conjugacy_test,
    green_cuspidal,
    jordan_dimension_scale,
    macdonald_character,
    ps_character,
    st2_id2_dimensions,
    u3_unipotent_decomposition,
)
from lietype.duality import steinberg
from lietype.errors import ResourceError, UsageError
from lietype.groups import build_group
from lietype.tori import gl_torus_classes, parts_of


def _gl_tori(n):
    return {tc.tag: tc for tc in gl_torus_classes(n)}


def test_epsilon_signs_and_split_rank():
    two = _gl_tori(2)
    assert ambient_split_rank("GL", 2) == 2
    assert ambient_split_rank("U", 3) == 1
    assert ambient_split_rank("SP", 4) == 2
    assert epsilon_signs(two["(1,1)"]) == (1, 1)
    assert epsilon_signs(two["(2)"]) == (1, -1)
    three = _gl_tori(3)
    assert epsilon_signs(three["(3)"]) == (-1, -1)


def test_signed_dimensions_frozen():
    two = _gl_tori(2)
    assert dl_dimension(two["(2)"], 5) == -4  # -(q-1)
    assert dl_dimension(two["(1,1)"], 5) == 6  # q+1
    three = _gl_tori(3)
    assert dl_dimension(three["(1,1,1)"], 2) == 21
    assert dl_dimension(three["(2,1)"], 2) == -7
    assert dl_dimension(three["(3)"], 2) == 3


def test_green_values_gl3f2_frozen():
    ch = green_cuspidal(3, 2, 1)
    root7 = cmath.sqrt(-7)
    expected = [3, -1, 1, 0, (-1 + root7) / 2, (-1 - root7) / 2]
    assert len(ch.values) == len(expected)
    for got, want in zip(ch.values, expected):
        assert abs(got - want) < 1e-8
    assert cuspidality_check(ch)


def test_green_values_gl2f3_frozen():
    ch = green_cuspidal(2, 3, 1)
    root2 = 1.4142135623730951j
    expected = [2, -1, 0, -2, 0, 1, -root2, root2]
    for got, want in zip(ch.values, expected):
        assert abs(got - want) < 1e-8
    assert cuspidality_check(ch)
    # it is an actual irreducible: appears in the table with multiplicity one
    table = table_of(ch.group)
    assert any(r.close_to(ch) for r in table)


def test_green_degree_and_regularity_guard():
    ch = green_cuspidal(2, 5, 1)
    assert snap_int(ch.degree) == 4  # q - 1
    with pytest.raises(UsageError):
        green_cuspidal(2, 3, 4)  # fixed by the q-power map
    with pytest.raises(UsageError):
        green_cuspidal(2, 3, 0)


def test_virtual_characters_from_the_two_gl2_tori():
    two = _gl_tori(2)
    for q in (3, 5):
        G = build_group("gl", 2, q)
        one = trivial_character(G)
        st = steinberg(G)
        r_split = dl_virtual_character(two["(1,1)"], (0, 0), q)
        r_ell = dl_virtual_character(two["(2)"], (0,), q)
        assert r_split.close_to(one + st)
        assert r_ell.close_to(one - st)
        assert snap_int(inner_product(r_split, one)) == 1
        assert snap_int(inner_product(r_ell, one)) == 1


def test_pairing_counts():
    two = _gl_tori(2)
    q = 5
    assert dl_inner_product(two["(1,1)"], (0, 0), two["(1,1)"], (0, 0), q) == 2
    assert dl_inner_product(two["(1,1)"], (1, 0), two["(1,1)"], (1, 0), q) == 1
    assert dl_inner_product(two["(1,1)"], (1, 0), two["(1,1)"], (0, 1), q) == 1
    assert dl_inner_product(two["(2)"], (1,), two["(2)"], (1,), q) == 1
    assert dl_inner_product(two["(1,1)"], (0, 0), two["(2)"], (0,), q) == 0


def test_conjugate_but_orthogonal_pair():
    # (c, c) on the split torus and c(q+1) on the anisotropic one inflate to
    # the same semisimple datum, yet the virtual characters never pair.
    two = _gl_tori(2)
    q = 5
    assert geometric_conjugacy_test(two["(1,1)"], (1, 1), two["(2)"], (6,), q)
    assert dl_inner_product(two["(1,1)"], (1, 1), two["(2)"], (6,), q) == 0
    assert not geometric_conjugacy_test(two["(1,1)"], (1, 0), two["(2)"], (6,), q)


def test_principal_series_norms_and_constituents():
    from lietype.chars import decompose

    ps_irr = ps_character(5, 1, 0)
    assert snap_int(inner_product(ps_irr, ps_irr)) == 1
    ps_red = ps_character(5, 0, 0)
    assert snap_int(ps_red.degree) == 6
    assert snap_int(inner_product(ps_red, ps_red)) == 2
    twisted = ps_character(3, 1, 1)
    table = table_of(twisted.group)
    mults = decompose(twisted, table)
    degs = sorted(snap_int(table[i].degree) for i, m in enumerate(mults) if m)
    assert all(m in (0, 1) for m in mults)
    assert tuple(reversed(degs)) == st2_id2_dimensions(1, 3)


def test_sign_corrected_character_is_irreducible():
    two = _gl_tori(2)
    pi = macdonald_character(two["(2)"], (1,), 3)
    assert snap_int(pi.degree) == 2
    assert snap_int(inner_product(pi, pi)) == 1


def test_u3_anisotropic_decomposition_frozen():
    assert u3_unipotent_decomposition(2) == {
        "q": 2,
        "dimension": -3,
        "norm_squared": 6,
        "pi_degree": 2,
        "pi_cuspidal": True,
        "orthogonal_to_split_series": True,
        "constituents": ((1, 1), (8, -1), (2, 2)),
    }


def test_dimension_pairs_and_scaling():
    assert st2_id2_dimensions(1, 3) == (3, 1)
    assert st2_id2_dimensions(1, 4) == (4, 1)
    assert st2_id2_dimensions(2, 2) == (28, 7)
    assert jordan_dimension_scale(2, 2, 2) == 7
    assert jordan_dimension_scale(1, 2, 3) == 2
    a, b = st2_id2_dimensions(1, 4)
    assert (7 * a, 7 * b) == st2_id2_dimensions(2, 2)


def test_curve_point_counts_frozen():
    assert drinfeld_count(2, 1) == 0
    assert drinfeld_count(2, 2) == 6
    assert drinfeld_count(2, 3) == 6
    assert drinfeld_count(3, 2) == 0
    assert drinfeld_count(3, 3) == 24
    assert drinfeld_count(5, 2) == 0
    with pytest.raises(ResourceError):
        drinfeld_count(7, 5)


def test_curve_group_action():
    check = drinfeld_orbit_check(2, 2)
    assert check == {
        "q": 2, "ext": 2, "count": 6, "group_order": 6,
        "free": True, "orbits": 1, "orbit_sizes": [6],
    }
    check = drinfeld_orbit_check(3, 3)
    assert check["free"] and check["orbits"] == 1
    assert check["orbit_sizes"] == [24] and check["group_order"] == 24
