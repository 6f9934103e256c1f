"""
PBW plumbing and osp_q(1|2) tests

Covers:
- Normal-form products, parsing and formatting of monomials
- Defining relations of osp_q(1|2) and centrality of Gamma
- Hopf maps, the coideal I and the closed form of the coproduct of Gamma
- Associativity on random monomials (hypothesis)
"""
import pytest
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from errors import ArityError, ParameterError
from pbw import TensorElement, commutator, tensor_mul
from scalars import ONE, qnum
from suites import check_osp_hopf

HALF = Fraction(1, 2)


def kappa(lat):
    return (lat.qpow(HALF) - lat.qpow(-HALF)).inverse()


osp_monomials = st.tuples(
    st.integers(min_value=0, max_value=2),
    st.integers(min_value=0, max_value=2),
    st.integers(min_value=-2, max_value=2),
    st.integers(min_value=0, max_value=1),
)


class TestNormalForm:
    """Products land in A_-^a A_+^b K^c P^e order."""

    def test_parse_and_format(self, osp):
        """Text form round-trips for a mixed monomial."""
        mon = osp.parse_monomial("A-^2A+K^-1P")
        assert mon == (2, 1, -1, 1)
        assert osp.format_monomial(mon) == "A-^2A+K^-1P"

    def test_parse_rejects_disorder(self, osp):
        """Monomials must be written in normal order."""
        with pytest.raises(ParameterError):
            osp.parse_monomial("A+A-")

    def test_ordered_product_is_monomial(self, osp):
        """A_- times A_+ is already ordered."""
        assert osp.gen("A-") * osp.gen("A+") == osp.monomial((1, 1, 0, 0))

    def test_unit(self, osp):
        """The unit is neutral."""
        x = osp.gen("A-A+K")
        assert osp.one() * x == x
        assert x * osp.one() == x


class TestOspRelations:
    """Defining relations of osp_q(1|2)."""

    def test_k_conjugation(self, osp, lat3):
        """K A_+ K^-1 = q^1/2 A_+ and K A_- K^-1 = q^-1/2 A_-."""
        K, Ki = osp.gen("K"), osp.gen("K^-1")
        assert K * osp.gen("A+") * Ki == osp.gen("A+").scale(lat3.qpow(HALF))
        assert K * osp.gen("A-") * Ki == osp.gen("A-").scale(lat3.qpow(-HALF))

    def test_anticommutator(self, osp, lat3):
        """{A_+, A_-} = (K^2 - K^-2)/(q^1/2 - q^-1/2)."""
        a_plus, a_minus = osp.gen("A+"), osp.gen("A-")
        expected = (osp.gen("K^2") - osp.gen("K^-2")).scale(kappa(lat3))
        assert a_plus * a_minus + a_minus * a_plus == expected

    def test_grade_involution(self, osp):
        """P^2 = 1, P anticommutes with A_+- and commutes with K."""
        P = osp.gen("P")
        assert P * P == osp.one()
        for s in ("A+", "A-"):
            x = osp.gen(s)
            assert (P * x + x * P).is_zero
        assert commutator(P, osp.gen("K")).is_zero

    def test_gamma_central(self, core3, osp):
        """Gamma commutes with every generator."""
        gamma = core3.casimir_gamma()
        for s in ("A+", "A-", "K", "P"):
            assert commutator(gamma, osp.gen(s)).is_zero

    def test_scasimir_anticommutes(self, core3, osp):
        """S = Gamma P anticommutes with A_+-."""
        s = core3.scasimir()
        for g in ("A+", "A-"):
            x = osp.gen(g)
            assert (s * x + x * s).is_zero

    def test_empty_value(self, core3, lat3):
        """The counit of Gamma is -[1/2]_q."""
        assert core3.counit(core3.casimir_gamma()) == -qnum(HALF, lat3)
        assert core3.empty_value() == -qnum(HALF, lat3)

    @settings(max_examples=25, deadline=None)
    @given(osp_monomials, osp_monomials, osp_monomials)
    def test_associative(self, osp, m1, m2, m3):
        """(xy)z = x(yz) on normal-ordered monomials."""
        x, y, z = osp.monomial(m1), osp.monomial(m2), osp.monomial(m3)
        assert (x * y) * z == x * (y * z)


class TestHopfStructure:
    """Coproduct, counit, antipode and the coideal I."""

    def test_coproduct_k(self, core3, osp):
        """K is grouplike."""
        assert core3.coproduct(osp.gen("K")) == TensorElement.pure((osp, osp), [(0, 0, 1, 0), (0, 0, 1, 0)])

    def test_coproduct_multiplicative(self, core3, osp):
        """Delta(xy) = Delta(x) Delta(y)."""
        x, y = osp.gen("A+"), osp.gen("A-K")
        assert core3.coproduct(x * y) == core3.coproduct(x) * core3.coproduct(y)

    def test_counit(self, core3, osp):
        """A_+- have counit zero, K and P counit one."""
        assert core3.counit(osp.gen("A+")).is_zero
        assert core3.counit(osp.gen("K^2P")) == ONE

    def test_delta_gamma_closed_form(self, core3):
        """Coproduct of Gamma matches its five-term expression."""
        assert core3.coproduct(core3.casimir_gamma()) == core3.delta_gamma_expression()

    def test_coideal_embedding(self, core3, osp):
        """g4 embeds as Gamma, g3 as K^2 P."""
        assert core3.i_expand(core3.i_gen(4)) == core3.casimir_gamma()
        assert core3.i_expand(core3.i_gen(3)) == osp.gen("K^2P")

    def test_coideal_lands_in_base_tensor_coideal(self, core3, osp):
        """Delta on I takes values in osp (x) I."""
        image = core3.delta_on_I(core3.i_gen(1))
        assert image.slots == (osp, core3.I)

    def test_hopf_check_passes(self, core3):
        """All Hopf and coaction axioms hold on generators."""
        report = check_osp_hopf(core3)
        assert report.status == "pass", report.witness


class TestLayouts:
    """Mismatched layouts are rejected."""

    def test_mixed_slot_sum(self, core3, osp):
        """A pure and a mixed two-slot tensor cannot be added."""
        pure = TensorElement.scalar(1, (osp, osp))
        mixed = TensorElement.scalar(1, (osp, core3.I))
        with pytest.raises(ArityError):
            pure + mixed

    def test_slot_element(self, osp):
        """Only one-slot tensors convert back to elements."""
        with pytest.raises(ArityError):
            TensorElement.scalar(1, (osp, osp)).slot_element()


class TestTensorProduct:
    """Slotwise products of tensors."""

    def test_grade_involutions(self, osp):
        """(P (x) 1)(1 (x) P) = P (x) P."""
        p, one = (0, 0, 0, 1), osp.unit
        left = TensorElement.pure((osp, osp), [p, one])
        right = TensorElement.pure((osp, osp), [one, p])
        assert tensor_mul(left, right) == TensorElement.pure((osp, osp), [p, p])

    def test_renormalized_slots(self, osp, lat3):
        """(A_+ (x) K)(K^-1 (x) A_+) = A_+K^-1 (x) q^1/2 A_+K."""
        left = TensorElement.pure((osp, osp), [(0, 1, 0, 0), (0, 0, 1, 0)])
        right = TensorElement.pure((osp, osp), [(0, 0, -1, 0), (0, 1, 0, 0)])
        expected = TensorElement.pure((osp, osp), [(0, 1, -1, 0), (0, 1, 1, 0)], lat3.qpow(HALF))
        assert tensor_mul(left, right) == expected

    def test_single_site_casimirs_commute(self, bi3):
        """Gamma_{1} and Gamma_{2} commute."""
        g1, g2 = bi3.gamma(1), bi3.gamma(2)
        assert tensor_mul(g1, g2) == tensor_mul(g2, g1)

    def test_arity_mismatch(self, osp):
        """Operands of different arity are rejected."""
        with pytest.raises(ArityError):
            tensor_mul(TensorElement.scalar(1, (osp, osp)), TensorElement.scalar(1, (osp,)))
