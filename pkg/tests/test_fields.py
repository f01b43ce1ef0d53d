import cmath

import pytest

from lietype.errors import UsageError
from lietype.fields import (
    GF,
    MultiplicativeCharacter,
    factor_prime_power,
    frobenius,
    frobenius_orbit,
    is_prime,
    norm,
    regular_exponents,
    regular_orbit_reps,
    subfield_embed,
    trace,
)


def test_prime_power_factoring():
    assert factor_prime_power(8) == (2, 3)
    assert factor_prime_power(49) == (7, 2)
    assert factor_prime_power(5) == (5, 1)
    for bad in (1, 6, 12, 100):
        with pytest.raises(UsageError):
            factor_prime_power(bad)
    assert is_prime(2) and is_prime(97) and not is_prime(91)


def test_field_cache_and_defining_polys():
    assert GF(4) is GF(4)
    assert GF(4).defining == (1, 1, 1)
    assert GF(8).defining == (1, 1, 0, 1)
    assert GF(9).defining == (2, 2, 1)
    assert GF(7).k == 1 and GF(7).defining == (4, 1)  # x - 3, the least primitive root


def test_field_axioms_exhaustive():
    # full distributivity / associativity sweep on the two smallest
    # non-prime fields; they are tiny enough to do every triple
    for q in (4, 8):
        F = GF(q)
        els = list(F.elements())
        for a in els:
            for b in els:
                assert a + b == b + a
                assert a * b == b * a
                for c in els:
                    assert (a + b) * c == a * c + b * c
                    assert (a * b) * c == a * (b * c)
        for a in els:
            assert a ** q == a  # the field is fixed by x -> x^q
            if a.code:
                assert a * a.inverse() == F.one


def test_inverse_and_pow_consistency():
    F = GF(9)
    for a in F.elements():
        if a.code == 0:
            continue
        assert a ** (F.q - 1) == F.one
        assert a.inverse() == a ** (F.q - 2)


def test_dlog_is_a_bijection_via_characters():
    # the full character chi(x) = zeta^dlog(x) must enumerate all
    # (q-1)-th roots of unity exactly once
    for q in (5, 8, 9):
        F = GF(q)
        chi = MultiplicativeCharacter(q - 1, 1)
        seen = set()
        for a in F.elements():
            if a.code == 0:
                continue
            v = chi(a)
            assert abs(abs(v) - 1) < 1e-9
            seen.add(round(cmath.phase(v) / (2 * cmath.pi) % 1.0, 9))
        assert len(seen) == q - 1


def test_trivial_character_and_conjugate():
    chi = MultiplicativeCharacter(7, 0)
    assert chi.is_trivial
    F = GF(8)
    chi1 = MultiplicativeCharacter(7, 2)
    for a in F.elements():
        if a.code:
            assert abs(chi1.conj()(a) - chi1(a).conjugate()) < 1e-12


def test_norm_inflation_matches_norm_composition():
    # chi on F_2^x inflated to F_4^x must agree with chi(N(x))
    F4, F2 = GF(4), GF(2)
    chi = MultiplicativeCharacter(1, 0)
    big = chi.norm_inflate(3)
    assert big.modulus == 3 and big.is_trivial
    chi9 = MultiplicativeCharacter(8, 3)
    big9 = chi9.norm_inflate(80)
    F81, F9 = GF(81), GF(9)
    for a in F81.elements():
        if not a.code:
            continue
        n = norm(a, F9)
        assert abs(big9(a) - chi9(n)) < 1e-9


def test_frobenius_and_subfield_embedding():
    F2, F4, F16 = GF(2), GF(4), GF(16)
    for a in F4.elements():
        img = subfield_embed(a, F16)
        assert img ** 4 == img  # lands in the fixed field of x -> x^4
        assert subfield_embed(a, F4) == a
    # embedding is a ring homomorphism
    els = list(F4.elements())
    for a in els:
        for b in els:
            assert subfield_embed(a * b, F16) == subfield_embed(a, F16) * subfield_embed(b, F16)
            assert subfield_embed(a + b, F16) == subfield_embed(a, F16) + subfield_embed(b, F16)
    for a in F16.elements():
        orbit = frobenius_orbit(a, 2)
        assert len(orbit) in (1, 2, 4)
        assert frobenius(a, 2) == a ** 2


def test_norm_and_trace_against_brute_force():
    F9, F3 = GF(9), GF(3)
    for a in F9.elements():
        prod = a * a ** 3
        tot = a + a ** 3
        assert subfield_embed(norm(a, F3), F9) == prod
        assert subfield_embed(trace(a, F3), F9) == tot


def test_regular_exponents_frozen():
    # n = 2, q = 3: everything but the (q+1)-divisible exponents
    assert sorted(regular_exponents(2, 3)) == [1, 2, 3, 5, 6, 7]
    assert regular_orbit_reps(2, 3) == [1, 2, 5]
    assert regular_orbit_reps(2, 2) == [1]
    assert len(regular_orbit_reps(2, 5)) == 10
    assert len(regular_orbit_reps(3, 2)) == 2
