"""
q-Dirac-Dunkl model tests

Covers:
- Polynomials, monomial enumeration and the primitive operators
- Realization of tensors as operators and its error paths
- Inner product, adjoints, monomial norms and positivity
- Model checks at low degree: generators, Casimirs, symmetries, commutation lemma
- Linearity of composed operators (hypothesis)
"""
import pytest
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from dunkl_model import MultiPoly, build_model, format_exponents, monomials
from errors import ArityError, DomainError, ParameterError
from pbw import TensorElement
from scalars import qbracket_mu

HALF = Fraction(1, 2)
DEGREE = 2

small_polys = st.dictionaries(
    st.tuples(*(st.integers(min_value=0, max_value=2) for _ in range(3))),
    st.integers(min_value=-3, max_value=3),
    max_size=4,
)


class TestPolynomials:
    """Sparse polynomials in x_1..x_n."""

    def test_variable(self):
        """x_2 in three variables."""
        assert MultiPoly.variable(3, 2) == MultiPoly.monomial(3, (0, 1, 0))

    def test_bad_exponents(self):
        """Exponent vectors need n non-negative entries."""
        with pytest.raises(ParameterError):
            MultiPoly.monomial(3, (1, 0))
        with pytest.raises(ParameterError):
            MultiPoly.monomial(2, (1, -1))

    def test_homogeneous(self, model3):
        """x1 x2 + x3^2 is homogeneous of degree 2."""
        p = model3.poly({(1, 1, 0): 1, (0, 0, 2): 1})
        assert p.is_homogeneous(2)
        assert not (p + MultiPoly.variable(3, 1)).is_homogeneous(2)

    def test_monomial_count(self):
        """C(k+n-1, n-1) monomials of exact degree k."""
        assert len(monomials(3, 2, exact=True)) == 6
        assert len(monomials(3, 2)) == 10

    def test_format(self):
        """Exponent vectors print compactly."""
        assert format_exponents((1, 0, 2)) == "x1*x3^2"
        assert format_exponents((0, 0, 0)) == "1"


class TestPrimitives:
    """x_i, D_i, reflections and shifts."""

    def test_dunkl_on_power(self, model3, lat3):
        """D_1 x_1^3 = [mu_1, 3; q] x_1^2."""
        image = model3.apply_dunkl(1, MultiPoly.variable(3, 1, 3))
        assert image == MultiPoly.variable(3, 1, 2).scale(qbracket_mu(HALF, 3, lat3))

    def test_dunkl_kills_constants(self, model3):
        """D_i 1 = 0."""
        one = MultiPoly.monomial(3, (0, 0, 0))
        assert model3.apply_dunkl(2, one).is_zero

    def test_reflection(self, model3):
        """r_2 flips the sign of odd powers of x_2."""
        p = model3.poly({(0, 1, 0): 1, (0, 2, 0): 1})
        assert model3.reflection(2)(p) == model3.poly({(0, 1, 0): -1, (0, 2, 0): 1})

    def test_index_out_of_range(self, model3):
        """Variable indices lie in [1, n]."""
        with pytest.raises(ParameterError):
            model3.dunkl(4)

    def test_position_on_one(self, model3, lat3):
        """X_[3] 1 = q x1 + x2 + q^-1 x3 when every mu_i = 1/2."""
        q = lat3.qpow
        one = MultiPoly.monomial(3, (0, 0, 0))
        expected = model3.poly({(1, 0, 0): q(1), (0, 1, 0): 1, (0, 0, 1): q(-1)})
        assert model3.position()(one) == expected

    @settings(max_examples=20, deadline=None)
    @given(small_polys, small_polys)
    def test_linear(self, model3, p_terms, r_terms):
        """D_[3] X_[3] is linear."""
        op = model3.dirac() * model3.position()
        p, r = model3.poly(p_terms), model3.poly(r_terms)
        assert op(p + r) == op(p) + op(r)


class TestRealization:
    """Tensors acting on polynomials."""

    def test_parity(self, model3):
        """P (x) P (x) P sends x1 x2^2 to -x1 x2^2."""
        osp = model3.core.osp
        parity = TensorElement.pure((osp, osp, osp), [(0, 0, 0, 1)] * 3)
        p = MultiPoly.monomial(3, (1, 2, 0))
        assert model3.realize(parity)(p) == p.scale(-1)

    def test_arity_mismatch(self, model3):
        """A twofold tensor does not act on three variables."""
        osp = model3.core.osp
        with pytest.raises(ArityError):
            model3.realize(TensorElement.scalar(1, (osp, osp)))

    def test_unfinalized(self, model3):
        """A coideal slot has no action on polynomials."""
        core = model3.core
        with pytest.raises(DomainError):
            model3.realize(TensorElement.scalar(1, (core.osp, core.osp, core.I)))

    def test_singleton_casimir(self, model3, lat3):
        """Gamma_{i} acts as the scalar [mu_i]_q."""
        p = MultiPoly.monomial(3, (1, 1, 0))
        image = model3.gamma_realized((2,))(p)
        assert image == model3.gamma_model((2,))(p)


class TestInnerProduct:
    """Fischer inner product."""

    def test_linear_norm(self, model3, lat3):
        """<x1, x1> = [mu_1, 1; q]."""
        x1 = MultiPoly.variable(3, 1)
        assert model3.inner_product(x1, x1) == qbracket_mu(HALF, 1, lat3)

    def test_orthogonal_monomials(self, model3):
        """Distinct monomials are orthogonal."""
        assert model3.inner_product(MultiPoly.variable(3, 1), MultiPoly.variable(3, 2)).is_zero

    def test_adjoints(self, model3):
        """x_i and D_i are adjoint; norms match the closed form."""
        report = model3.check_adjoint_primitives(DEGREE)
        assert report.status == "pass", report.witness

    def test_positivity(self, model4):
        """Norms are positive at t = 2 and t = 3/2."""
        report = model4.check_positivity(3)
        assert report.status == "pass", report.witness


class TestModelChecks:
    """Structural identities of the model up to degree 2."""

    def test_dunkl_action(self, model4):
        """Coefficients and their classical limit."""
        report = model4.check_dunkl_action(5)
        assert report.status == "pass", report.witness

    def test_dunkl_commute(self, model3):
        """[D_i, D_j] = 0."""
        report = model3.check_dunkl_commute(DEGREE)
        assert report.status == "pass", report.witness

    def test_generators(self, model3):
        """Realized A_+- on every interval are X and D."""
        report = model3.check_generators(DEGREE)
        assert report.status == "pass", report.witness

    def test_smaller_sets(self, model3):
        """D_[j] from D_[n]."""
        report = model3.check_smaller_sets(DEGREE)
        assert report.status == "pass", report.witness

    @pytest.mark.parametrize("A", [(1, 2), (2, 3), (1, 2, 3), (1, 3)])
    def test_gamma_constructions(self, model3, A):
        """Explicit Gamma_A agrees with the realized extension."""
        report = model3.check_gamma_constructions(A, DEGREE)
        assert report.status == "pass", report.witness

    @pytest.mark.parametrize("A", [(1, 2), (1, 3)])
    def test_symmetry(self, model3, A):
        """Gamma_A commutes with D_[3] and X_[3]."""
        report = model3.check_symmetry(A, DEGREE)
        assert report.status == "pass", report.witness

    def test_self_adjoint(self, model3):
        """Gamma_[1;2] is self-adjoint."""
        report = model3.check_self_adjoint(1, 2, DEGREE)
        assert report.status == "pass", report.witness

    def test_realized_relations(self, model3):
        """osp relations among the model generators of [1;3]."""
        report = model3.check_realized_relations(1, 3, DEGREE)
        assert report.status == "pass", report.witness

    @pytest.mark.parametrize("power", [1, 2, 3])
    def test_commutation_lemma(self, model3, power):
        """D with X^power in shift form."""
        report = model3.check_commutation_lemma(power, DEGREE)
        assert report.status == "pass", report.witness

    def test_commutation_lemma_zero_power(self, model3):
        """Power zero has no commutator form."""
        with pytest.raises(ParameterError):
            model3.commutation_lemma_sides(0)

    def test_build_model(self):
        """build_model parses mu values."""
        model = build_model(["1/2", "1"])
        assert model.n == 2
        assert model.lat.L == 8
