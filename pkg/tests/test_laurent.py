"""Exact Laurent-polynomial and rational-function arithmetic."""

import pytest
from hypothesis import given, strategies as st

from hallcanon import gfp
from hallcanon.errors import NotDivisible, PositiveDegree
from hallcanon.laurent import (LaurentPoly, RationalFunc, quantum_binomial,
                               quantum_factorial, quantum_int, rf_series_head)

V = LaurentPoly.v_power

laurents = st.dictionaries(
    st.integers(min_value=-6, max_value=6),
    st.integers(min_value=-9, max_value=9),
    max_size=5,
).map(LaurentPoly)


class TestArithmetic:
    def test_zero_one(self):
        assert LaurentPoly.zero().is_zero()
        assert LaurentPoly.one().is_one()
        assert not LaurentPoly.one().is_zero()
        assert LaurentPoly.from_int(0).is_zero()
        assert LaurentPoly.from_int(7) == 7

    def test_evaluate_is_a_ring_map(self):
        a = V(2) + V(-1, 3)
        b = V(0, 2) - V(1)
        assert (a * b).evaluate(2) == a.evaluate(2) * b.evaluate(2)
        assert (a + b).evaluate(3) == a.evaluate(3) + b.evaluate(3)

    @given(laurents, laurents, laurents)
    def test_distributive(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(laurents, laurents)
    def test_bar_is_multiplicative(self, a, b):
        assert (a * b).bar() == a.bar() * b.bar()
        assert a.bar().bar() == a

    def test_bar_flips_exponents(self):
        assert (V(3) + V(-1, 2)).bar() == V(-3) + V(1, 2)

    @given(laurents, laurents)
    def test_div_exact_roundtrip(self, a, b):
        if b.is_zero():
            return
        assert (a * b).div_exact(b) == a
        assert b.divides(a * b)

    def test_div_exact_failure(self):
        with pytest.raises(NotDivisible):
            (V(-5, 3)).div_exact(quantum_int(2))
        assert not quantum_int(2).divides(V(-5, 3))

    def test_shift_and_ranges(self):
        a = V(-2) + V(1, 4)
        assert a.min_exp() == -2 and a.max_exp() == 1
        assert a.shift(3) == V(1) + V(4, 4)

    def test_in_v_inverse(self):
        assert (V(-1) + V(-4, 2)).in_v_inverse(strict=True)
        assert not (V(0) + V(-1)).in_v_inverse(strict=True)
        assert (V(0) + V(-1)).in_v_inverse(strict=False)

    def test_triples_roundtrip(self):
        a = V(5, -2) + V(-3, 7)
        assert LaurentPoly.from_triples(a.to_triples()) == a

    def test_subs_q_for_v_squared(self):
        # 3q + 1, read with exponent = q-degree, becomes 3v^2 + 1.
        assert (V(1, 3) + V(0, 1)).subs_q_for_v_squared() == V(2, 3) + V(0, 1)


class TestQuantumIntegers:
    def test_small_values(self):
        assert quantum_int(1) == LaurentPoly.one()
        assert quantum_int(2) == V(1) + V(-1)
        assert quantum_int(3) == V(2) + V(0) + V(-2)
        assert quantum_int(0).is_zero()
        assert quantum_int(-3) == -quantum_int(3)

    def test_bar_symmetry(self):
        for n in range(1, 8):
            assert quantum_int(n).bar() == quantum_int(n)
            assert quantum_binomial(n, n // 2).bar() == \
                quantum_binomial(n, n // 2)

    def test_defining_identity(self):
        # (v - v^-1) [n] = v^n - v^-n
        for n in range(1, 8):
            assert (V(1) - V(-1)) * quantum_int(n) == V(n) - V(-n)

    def test_factorial_product(self):
        acc = LaurentPoly.one()
        for k in range(1, 6):
            acc = acc * quantum_int(k)
            assert quantum_factorial(k) == acc

    def test_binomial_recurrence(self):
        # [n k] = v^k [n-1 k] + v^{k-n} [n-1 k-1]
        for n in range(1, 8):
            for k in range(0, n + 1):
                rhs = quantum_binomial(n - 1, k) * V(k) + \
                    quantum_binomial(n - 1, k - 1) * V(k - n)
                assert quantum_binomial(n, k) == rhs

    def test_binomial_counts_subspaces(self):
        # v^{k(n-k)} [n k] is a polynomial in v^2 = q counting k-dimensional
        # subspaces of F_q^n.
        for n in range(0, 5):
            for k in range(0, n + 1):
                val = quantum_binomial(n, k) * V(k * (n - k))
                assert all(e % 2 == 0 and e >= 0 for e, _ in val.items())
                for q in (2, 3):
                    assert val.evaluate(1) != 0
                    got = sum(c * q ** (e // 2) for e, c in val.items())
                    assert got == gfp.count_subspaces(n, k, q)


class TestRationalFunc:
    def test_series_head_geometric(self):
        # 1/(1 - v^-2) = 1 + v^-2 + v^-4 + ...
        f = RationalFunc(LaurentPoly.one(), V(0) - V(-2))
        assert f.series_head(6) == {0: 1, -2: 1, -4: 1, -6: 1}
        assert rf_series_head(f, 3) == {0: 1, -2: 1}

    def test_series_head_of_polynomial(self):
        f = RationalFunc.from_laurent(V(0, 2) + V(-3, 5))
        assert f.series_head(4) == {0: 2, -3: 5}

    def test_as_laurent_roundtrip(self):
        a = V(2) + V(-3, 5)
        f = RationalFunc(a * quantum_int(3), quantum_int(3))
        assert f.as_laurent() == a

    def test_positive_degree_guard(self):
        f = RationalFunc(V(1), V(0) - V(-2))
        with pytest.raises(PositiveDegree):
            f.series_head(4)

    def test_field_identities(self):
        f = RationalFunc(quantum_int(2), quantum_int(4))
        g = RationalFunc(V(-1) + V(-3), quantum_int(3))
        assert (f + g) - g == f
        assert (f * g) / g == f
        assert (f - f).is_zero()

    def test_bar_involution(self):
        f = RationalFunc(quantum_int(2) + V(3), quantum_int(4))
        assert f.bar().bar() == f
        # a bar-symmetric quotient is bar-invariant
        g = RationalFunc(quantum_int(2), quantum_int(4))
        assert g.bar() == g
