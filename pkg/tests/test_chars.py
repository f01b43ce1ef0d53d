"""Character tables, induction/restriction, decomposition."""

import pytest

from lietype.chars import (
    ClassFunction,
    decompose,
    from_multiplicities,
    induce,
    inner_product,
    restrict,
    snap_int,
    table_of,
    trivial_character,
)
from lietype.errors import ConsistencyError, UsageError
from lietype.groups import build_group, standard_parabolics


def test_snap_int():
    assert snap_int(3.0000000001) == 3
    assert snap_int(-2.0) == -2
    assert snap_int(0j) == 0
    with pytest.raises(ConsistencyError):
        snap_int(0.5)
    with pytest.raises(ConsistencyError):
        snap_int(1 + 0.1j)


def test_degrees_frozen():
    expected = {
        ("gl", 2, 2): [1, 1, 2],
        ("gl", 2, 3): [1, 1, 2, 2, 2, 3, 3, 4],
        ("gl", 3, 2): [1, 3, 3, 6, 7, 8],
        ("sl", 2, 3): [1, 1, 1, 2, 2, 2, 3],
        ("sl", 2, 5): [1, 2, 2, 3, 3, 4, 4, 5, 6],
        ("sp", 4, 2): [1, 1, 5, 5, 5, 5, 9, 9, 10, 10, 16],
    }
    for (fam, n, q), degrees in expected.items():
        G = build_group(fam, n, q)
        table = table_of(G)
        assert sorted(snap_int(r.degree) for r in table) == degrees
        assert sum(snap_int(r.degree) ** 2 for r in table) == G.order


def test_first_orthogonality():
    G = build_group("sl", 2, 3)
    table = table_of(G)
    for i, r in enumerate(table):
        for j, s in enumerate(table):
            ip = inner_product(r, s)
            want = 1 if i == j else 0
            assert abs(ip - want) < 1e-8


def test_conjugate_row_stays_in_table():
    G = build_group("sl", 2, 5)
    table = table_of(G)
    for r in table:
        mults = decompose(r.conj(), table)
        assert sorted(mults) == [0] * (len(table) - 1) + [1]


def test_frobenius_reciprocity():
    G = build_group("gl", 2, 3)
    table = table_of(G)
    borel = min(standard_parabolics(G), key=lambda pd: pd.P.order)
    B = borel.P
    ind = induce(trivial_character(B.table), B)
    assert ind.degree == G.order // B.order
    one_b = trivial_character(B.table)
    for r in table:
        lhs = inner_product(ind, r)
        rhs = inner_product(one_b, restrict(r, B))
        assert abs(lhs - rhs) < 1e-8


def test_decompose_roundtrip():
    G = build_group("gl", 2, 3)
    table = table_of(G)
    f = table[0] + table[3] + table[3] - table[5]
    mults = decompose(f, table)
    back = from_multiplicities(table, mults)
    assert back.close_to(f)
    assert mults[0] == 1 and mults[3] == 2 and mults[5] == -1


def test_class_function_arithmetic():
    G = build_group("gl", 2, 2)
    table = table_of(G)
    one = trivial_character(G)
    assert snap_int((one + one).degree) == 2
    assert snap_int((one - one).degree) == 0
    assert snap_int((2 * table[-1]).degree) == 2 * snap_int(table[-1].degree)
    assert snap_int((-one).degree) == -1
    with pytest.raises(UsageError):
        one + trivial_character(build_group("gl", 2, 3))


def test_table_deterministic_per_seed():
    G = build_group("sl", 2, 3)
    a = table_of(G, seed=11)
    b = table_of(G, seed=11)
    for r, s in zip(a, b):
        assert r.close_to(s)
