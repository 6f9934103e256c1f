"""
Scalar layer tests

Covers:
- Canonical form of Q(t) elements and exact evaluation
- Exponent lattice construction and off-lattice exponents
- q-numbers and the [mu, m; q] brackets
- Field axioms on random elements (hypothesis)
"""
import pytest
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from errors import LatticeError, ParameterError, PoleError
from scalars import ONE, ZERO, FieldElem, formal_lattice, lattice_build, qbracket_mu, qnum


def laurent(*pairs):
    return FieldElem.from_laurent({e: Fraction(c) for e, c in pairs})


elements = st.builds(
    lambda c, k, d: FieldElem.const(c) * FieldElem.t_power(k) + FieldElem.const(d),
    st.fractions(min_value=-5, max_value=5, max_denominator=7),
    st.integers(min_value=-4, max_value=4),
    st.fractions(min_value=-5, max_value=5, max_denominator=7),
)


class TestCanonicalForm:
    """Structural equality is field equality."""

    def test_cancellation(self):
        """(t^2 - 1)/(t - 1) normalizes to t + 1."""
        quotient = laurent((2, 1), (0, -1)) / laurent((1, 1), (0, -1))
        assert quotient == laurent((1, 1), (0, 1))
        assert quotient.is_laurent

    def test_t_powers(self):
        """t / t^2 is t^-1."""
        assert FieldElem.t_power(1) / FieldElem.t_power(2) == FieldElem.t_power(-1)

    def test_constants(self):
        """Integers and fractions coerce to constants."""
        assert FieldElem.const(3) / 3 == ONE
        assert FieldElem.const(Fraction(1, 2)) + Fraction(1, 2) == 1
        assert ZERO.is_zero

    def test_zero_string(self):
        """Zero prints as 0."""
        assert str(ZERO) == "0"

    def test_inverse_of_zero(self):
        """Division by zero is a PoleError."""
        with pytest.raises(PoleError):
            ZERO.inverse()

    def test_hash_consistent(self):
        """Equal elements hash equally."""
        a = laurent((2, 1), (0, -1)) / laurent((1, 1), (0, -1))
        assert hash(a) == hash(laurent((1, 1), (0, 1)))


class TestEvaluation:
    """Exact evaluation at rational points."""

    def test_evaluate(self):
        """(t + 1)/t at t = 2 is 3/2."""
        value = laurent((1, 1), (0, 1)) / FieldElem.t_power(1)
        assert value.evaluate(2) == Fraction(3, 2)

    def test_pole(self):
        """1/(t - 1) has a pole at t = 1."""
        with pytest.raises(PoleError):
            laurent((1, 1), (0, -1)).inverse().evaluate(1)

    def test_negative_shift_at_zero(self):
        """t^-1 has a pole at t = 0."""
        with pytest.raises(PoleError):
            FieldElem.t_power(-1).evaluate(0)


class TestLattice:
    """Exponent lattice q = t^L."""

    def test_half_integer_mu(self, lat3):
        """mu = 1/2 gives L = 8 and gamma = 1."""
        assert lat3.L == 8
        assert lat3.gamma == (1, 1, 1)

    def test_mixed_mu(self, lat4):
        """L is four times the lcm of the denominators."""
        assert lat4.L == 8
        assert lat4.gamma_of([1, 2]) == Fraction(5, 2)

    def test_third_mu(self):
        """mu = 1/3 gives L = 12."""
        assert lattice_build(["1/3"]).L == 12

    def test_off_lattice(self, lat3):
        """q^(1/3) is not representable when L = 8."""
        with pytest.raises(LatticeError):
            lat3.qpow(Fraction(1, 3))

    def test_non_positive_mu(self):
        """mu must be positive."""
        with pytest.raises(ParameterError):
            lattice_build([Fraction(1, 2), 0])

    def test_empty_mu(self):
        """mu must be non-empty."""
        with pytest.raises(ParameterError):
            lattice_build([])

    def test_formal_lattice(self):
        """The formal lattice has q = t."""
        lat = formal_lattice()
        assert lat.qpow(1) == FieldElem.t_power(1)


class TestQNumbers:
    """[a]_q and [mu, m; q]."""

    def test_small_values(self, lat3):
        """[0] = 0, [1] = 1, [2] = q + q^-1."""
        q = lat3.qpow
        assert qnum(0, lat3) == ZERO
        assert qnum(1, lat3) == ONE
        assert qnum(2, lat3) == q(1) + q(-1)

    def test_odd(self, lat3):
        """[-a] = -[a]."""
        assert qnum(Fraction(-3, 2), lat3) == -qnum(Fraction(3, 2), lat3)

    def test_bracket_zero(self, lat3):
        """[mu, 0; q] vanishes."""
        assert qbracket_mu(Fraction(1, 2), 0, lat3) == ZERO

    def test_bracket_negative(self, lat3):
        """m must be non-negative."""
        with pytest.raises(ParameterError):
            qbracket_mu(Fraction(1, 2), -1, lat3)

    @pytest.mark.parametrize("a", [1, 2, 3, 4, 5])
    def test_bracket_classical_limit(self, lat4, a):
        """[mu, a; q] at t = 1 is a + mu(1 - (-1)^a)."""
        for mu in (Fraction(1, 2), Fraction(3, 2), Fraction(2)):
            value = qbracket_mu(mu, a, lat4).evaluate(1)
            assert value == a + mu * (1 - (-1) ** a)


class TestFieldAxioms:
    """Random elements obey the field axioms."""

    @settings(max_examples=40, deadline=None)
    @given(elements, elements, elements)
    def test_distributive(self, a, b, c):
        """(a + b) c = a c + b c."""
        assert (a + b) * c == a * c + b * c

    @settings(max_examples=40, deadline=None)
    @given(elements, elements)
    def test_commutative(self, a, b):
        """Addition and multiplication commute."""
        assert a + b == b + a
        assert a * b == b * a

    @settings(max_examples=40, deadline=None)
    @given(elements)
    def test_inverse(self, a):
        """a * a^-1 = 1 for nonzero a."""
        if a.is_zero:
            with pytest.raises(PoleError):
                a.inverse()
        else:
            assert a * a.inverse() == ONE
