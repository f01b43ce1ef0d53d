import pytest

from lietype.errors import UsageError
from lietype.intpoly import IntPolynomial
from lietype.rootdata import (
    TABULATED_TYPES,
    degrees,
    gl_order_polynomial,
    group_order_polynomial,
    order_polynomial,
    p_part_split,
    positive_roots,
    q_to_one_limit,
    sl_order_polynomial,
    u_order_polynomial,
    weyl_order,
)

E8_AT_2 = 337804753143634806261388190614085595079991692242467651576160959909068800000


def test_intpoly_basics():
    x = IntPolynomial.x_power(1)
    p = (x + 1) * (x + 1)
    assert p == IntPolynomial((1, 2, 1))
    assert p(10) == 121
    assert IntPolynomial(()).degree == -1
    assert IntPolynomial.const(5) == 5
    assert (x * x * x - x).coeffs == (0, -1, 0, 1)
    assert str(x * x - 1) == "q^2 - 1"


def test_degree_tables():
    assert degrees("A", 3) == (2, 3, 4)
    assert degrees("B", 3) == (2, 4, 6)
    assert degrees("C", 2) == (2, 4)
    assert degrees("D", 4) == (2, 4, 6, 4)
    assert degrees("G", 2) == (2, 6)
    assert degrees("E", 8) == (2, 8, 12, 14, 18, 20, 24, 30)
    with pytest.raises(UsageError):
        degrees("E", 5)
    with pytest.raises(UsageError):
        degrees("D", 2)


def test_weyl_orders_frozen():
    expected = {
        ("A", 4): 120,
        ("B", 3): 48,
        ("C", 3): 48,
        ("D", 4): 192,
        ("G", 2): 12,
        ("F", 4): 1152,
        ("E", 6): 51840,
        ("E", 7): 2903040,
        ("E", 8): 696729600,
    }
    for (fam, rank), w in expected.items():
        assert weyl_order(fam, rank) == w


def test_exponent_identities_all_types():
    for fam, rank in TABULATED_TYPES:
        ds = degrees(fam, rank)
        prod = 1
        for d in ds:
            prod *= d
        assert prod == weyl_order(fam, rank)
        assert sum(d - 1 for d in ds) == positive_roots(fam, rank)
        assert q_to_one_limit(fam, rank) == weyl_order(fam, rank)


def test_order_polynomial_values():
    assert order_polynomial("A", 1)(4) == 60
    assert order_polynomial("G", 2)(2) == 12096
    assert order_polynomial("E", 8)(2) == E8_AT_2
    assert order_polynomial("E", 8).degree == 248


def test_classical_group_orders():
    cases = [
        ("GL", 2, 2, 6), ("GL", 2, 3, 48), ("GL", 2, 4, 180), ("GL", 2, 5, 480),
        ("GL", 3, 2, 168), ("GL", 3, 3, 11232),
        ("SL", 2, 2, 6), ("SL", 2, 3, 24), ("SL", 2, 4, 60), ("SL", 2, 5, 120),
        ("U", 2, 2, 18), ("U", 3, 2, 648),
        ("SP", 4, 2, 720), ("SP", 4, 3, 51840),
    ]
    for fam, n, q, want in cases:
        assert group_order_polynomial(fam, n)(q) == want, (fam, n, q)


def test_unitary_is_the_sign_flip_of_linear():
    for n in (2, 3):
        for q in (2, 3, 4, 5):
            assert u_order_polynomial(n)(q) == abs(gl_order_polynomial(n)(-q))


def test_sl_order_is_gl_over_scalars():
    for n in (2, 3):
        for q in (2, 3, 5):
            assert sl_order_polynomial(n)(q) * (q - 1) == gl_order_polynomial(n)(q)


def test_p_part_split():
    for fam, n, q in (("GL", 2, 3), ("GL", 3, 2), ("U", 3, 2), ("SP", 4, 3)):
        poly = group_order_polynomial(fam, n)
        ppart, pprime = p_part_split(poly, q)
        assert ppart * pprime == poly(q)
        p = 2 if q in (2, 4) else q
        assert pprime % p != 0
        # the p-part is a full power of p
        while ppart % p == 0:
            ppart //= p
        assert ppart == 1
