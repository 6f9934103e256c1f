"""
Askey-Wilson tests

Covers:
- U_Q(sl2) relations, centrality of Lambda, Hopf and coaction axioms
- Lambda_A for the empty set and singletons
- Q-commutator relations, Omega_m and the tridiagonal relations
- Lambda_{1,3} from the coaction, nested commutation
"""
import pytest

from aw_algebra import check_uq_hopf
from errors import ParameterError
from pbw import commutator


class TestUqCore:
    """U_Q(sl2) and its Casimir."""

    def test_k_conjugation(self, uq):
        """K E K^-1 = Q^2 E."""
        K, Ki, E = uq.gen("K"), uq.gen("K^-1"), uq.gen("E")
        assert K * E * Ki == E.scale(uq.lat.qpow(2))

    def test_lambda_central(self, uq):
        """Lambda commutes with E, F and K."""
        lam = uq.casimir_lambda()
        for s in ("E", "F", "K"):
            assert commutator(lam, uq.gen(s)).is_zero

    def test_empty_value(self, uq):
        """The counit of Lambda is Q + Q^-1."""
        q = uq.lat.qpow
        assert uq.counit(uq.casimir_lambda()) == q(1) + q(-1)
        assert uq.empty_value() == q(1) + q(-1)

    def test_hopf_check(self, uq):
        """Hopf axioms and the coaction on J hold."""
        report = check_uq_hopf(uq)
        assert report.status == "pass", report.witness


class TestLambdaSets:
    """Lambda_A in the threefold product."""

    def test_empty_set(self, aw3, uq):
        """Lambda of the empty set is Q + Q^-1."""
        assert aw3.extend(()) == aw3.scalar(uq.empty_value())

    def test_singleton(self, aw3, uq):
        """Lambda_{2} is Lambda in the middle slot."""
        lam = uq.casimir_lambda().to_tensor()
        alg = uq.uq
        assert aw3.extend((2,)) == lam.pad(1, 1, alg)

    def test_alias(self, aw3):
        """extend_lambda is extend."""
        assert aw3.extend_lambda((1, 2)) == aw3.extend((1, 2))


class TestAWRelations:
    """Q-commutator relations and the Casimir Omega_m."""

    def test_rank_one(self, aw3):
        """All three cyclic relations hold for ({1,2},{2,3})."""
        report = aw3.check_aw_relation((1, 2), (2, 3))
        assert report.status == "pass", report.witness

    def test_unclaimed_skipped(self, aw3):
        """{1,3} is not consecutive."""
        report = aw3.check_aw_relation((1, 3), (2, 3))
        assert report.status == "skipped"

    @pytest.mark.parametrize("A,B", [((1, 2), (2, 3, 4)), ((1, 2, 3), (2, 3, 4))])
    def test_rank_two(self, aw4, A, B):
        """Matching interval pairs at n = 4."""
        report = aw4.check_aw_relation(A, B)
        assert report.status == "pass", report.witness

    def test_omega(self, aw3):
        """Omega_2 commutes with its generators; tridiagonal relations hold."""
        report = aw3.casimir_omega(2)
        assert report.status == "pass", report.witness

    def test_omega_out_of_range(self, aw3):
        """m must satisfy 2 <= m <= n - 1."""
        with pytest.raises(ParameterError):
            aw3.casimir_omega(3)

    def test_lambda_13(self, aw3):
        """Lambda_{1,3} from the coaction matches the solved relation."""
        report = aw3.check_lambda_13()
        assert report.status == "pass", report.witness

    def test_lambda_13_needs_n3(self, aw4):
        """The solved form only exists for n = 3."""
        with pytest.raises(ParameterError):
            aw4.check_lambda_13()

    @pytest.mark.parametrize("inner,outer", [((1, 2), (1, 2, 3)), ((2, 3), (1, 2, 3))])
    def test_nested(self, aw3, inner, outer):
        """Nested intervals commute."""
        report = aw3.check_nested_commutation(inner, outer)
        assert report.status == "pass", report.witness

    def test_nested_unclaimed(self, aw3):
        """{1,3} is not an interval."""
        assert aw3.check_nested_commutation((1, 3), (1, 2, 3)).status == "skipped"
