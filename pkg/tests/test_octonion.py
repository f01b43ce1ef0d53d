"""Split octonions and the 27-dimensional cubic Jordan structure."""

import random
from fractions import Fraction

import pytest

from lietype.errors import UsageError
from lietype.octonion import (
    JordanElement,
    ScalarRing,
    SplitOctonion,
    composition_identity_sweep,
    jordan_det,
    jordan_product,
    random_jordan,
    random_octonion,
)


def test_scalar_ring_guard():
    assert ScalarRing(0).one == Fraction(1)
    assert ScalarRing(7).half(1) == 4
    for bad in (2, 4, 15, 17):
        with pytest.raises(UsageError):
            ScalarRing(bad)


def test_basis_multiplication_facts():
    R = ScalarRing(11)
    e11, e22, v1, v2, v3, w1, w2, w3 = SplitOctonion.basis(R)
    assert e11 * e11 == e11
    assert e22 * e22 == e22
    assert (e11 * e22).norm() == R.zero and (e11 * e22).trace() == R.zero
    assert e11 + e22 == SplitOctonion.scalar(R, 1)
    assert e11 * v1 == v1 and v1 * e22 == v1
    assert (v1 * v1).trace() == R.zero
    # the two vector triples pair into the diagonal
    prod = v1 * w1
    assert prod.is_scalar() or prod.trace() != R.zero


def test_conjugation_is_an_anti_automorphism():
    R = ScalarRing(7)
    rng = random.Random(5)
    for _ in range(60):
        x = random_octonion(R, rng)
        y = random_octonion(R, rng)
        assert (x * y).conjugate() == y.conjugate() * x.conjugate()
        assert x.conjugate().conjugate() == x
        assert (x * x.conjugate()).is_scalar()


def test_norm_composition_and_trace_forms():
    for p in (0, 3, 5, 7, 13):
        assert composition_identity_sweep(p, 150, seed=0xBEE) == 150
    R = ScalarRing(5)
    rng = random.Random(9)
    for _ in range(60):
        x = random_octonion(R, rng)
        y = random_octonion(R, rng)
        z = random_octonion(R, rng)
        # trace is associative and symmetric even though the product is not
        assert ((x * y) * z).trace() == (x * (y * z)).trace()
        assert (x * y).trace() == (y * x).trace()


def test_octonions_are_not_associative():
    R = ScalarRing(5)
    b = SplitOctonion.basis(R)
    assert any(
        (b[i] * b[j]) * b[k] != b[i] * (b[j] * b[k])
        for i in range(8) for j in range(8) for k in range(8)
    )


def test_jordan_product_and_identity():
    R = ScalarRing(7)
    rng = random.Random(3)
    I = JordanElement.identity(R)
    for _ in range(25):
        A = random_jordan(R, rng)
        B = random_jordan(R, rng)
        assert jordan_product(A, I) == A
        assert jordan_product(A, B) == jordan_product(B, A)
    # the characterizing identity (A.B).(A.A) = A.(B.(A.A))
    for _ in range(25):
        A = random_jordan(R, rng)
        B = random_jordan(R, rng)
        A2 = jordan_product(A, A)
        assert jordan_product(jordan_product(A, B), A2) == jordan_product(
            A, jordan_product(B, A2)
        )


def test_jordan_det_rules():
    for p in (0, 5, 11):
        R = ScalarRing(p)
        I = JordanElement.identity(R)
        assert jordan_det(I) == R.one
        o = SplitOctonion.scalar(R, 0)
        diag = JordanElement.make(R, 2, 3, 4, o, o, o)
        assert jordan_det(diag) == R.coerce(24)
        rng = random.Random(p + 1)
        for _ in range(40):
            A = random_jordan(R, rng)
            assert jordan_det(A.cyclic()) == jordan_det(A)


def test_rational_scalars_exact():
    R = ScalarRing(0)
    x = SplitOctonion.make(R, Fraction(1, 2), (1, 0, 0), (0, Fraction(2, 3), 0), 3)
    y = SplitOctonion.make(R, 2, (0, 1, 0), (Fraction(1, 5), 0, 0), Fraction(-1, 2))
    assert (x * y).norm() == x.norm() * y.norm()
    assert isinstance((x * y).norm(), Fraction)


def test_sweep_returns_sample_count():
    assert composition_identity_sweep(3, 0) == 0
    assert composition_identity_sweep(13, 25, seed=1) == 25
