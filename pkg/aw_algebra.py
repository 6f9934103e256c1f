"""
U_Q(sl2) and the Askey-Wilson algebra AW(n)_Q inside its n-fold tensor power.

Q is the formal variable itself (lattice with L = 1); no fractional powers
of Q are needed here.
"""
import logging
from functools import lru_cache
from typing import Dict, Optional

from checks import first_mismatch, is_zero_witness, run_check
from errors import NotClaimedError, ParameterError
from pbw import (
    CoidealAlgebra,
    Element,
    HopfContext,
    PBWAlgebra,
    TensorElement,
    add_term,
    apply_coproduct_at,
    apply_counit_at,
    apply_tau_at,
    commutator,
    multiply_slots,
)
from scalars import ONE, ZERO, ExponentLattice, FieldElem, formal_lattice
from schemas import CheckReport
from tensor_ext import SubsetSpec, TensorExtension

logger = logging.getLogger(__name__)

LAMBDA_SEED = (0, 0, 0, 1)  # h4 in J

# J generators as U_Q(sl2) monomials F^a E^b K^c
H1_MON = (0, 1, -1)  # E K^-1
H2_MON = (1, 0, 0)   # F
H3_MON = (0, 0, -1)  # K^-1


class UqAlgebra(PBWAlgebra):
    """U_Q(sl2) in the basis F^a E^b K^c with KE = Q^2 EK, KF = Q^-2 FK."""

    name = "Uq"
    symbols = ("F", "E", "K")
    inverse_symbols = (None, None, "Ki")

    def __init__(self, lat: ExponentLattice):
        super().__init__(lat)
        q = lat.qpow
        self._kappa = (q(1) - q(-1)).inverse()

    def left_generator(self, g, mon):
        a, b, c = mon
        q = self.lat.qpow
        if g == "F":
            return {(a + 1, b, c): ONE}
        if g == "K":
            return {(a, b, c + 1): q(2 * (b - a))}
        if g == "Ki":
            return {(a, b, c - 1): q(2 * (a - b))}
        # E F^a = F^a E + sum_i F^(a-1) (Q^-2(a-1-i) K - Q^2(a-1-i) K^-1)/(Q - Q^-1)
        out = {(a, b + 1, c): ONE}
        for i in range(a):
            add_term(out, (a - 1, b, c + 1), self._kappa * q(2 * b - 2 * (a - 1 - i)))
            add_term(out, (a - 1, b, c - 1), -self._kappa * q(2 * (a - 1 - i) - 2 * b))
        return out


class UqCore(HopfContext):
    """U_Q(sl2) Hopf data and the coideal J generated by EK^-1, F, K^-1 and Lambda."""

    def __init__(self, lat: Optional[ExponentLattice] = None):
        lat = lat or formal_lattice()
        self.lat = lat
        self.uq = UqAlgebra(lat)
        q = lat.qpow
        self.Q = q(1)
        self._q_minus = q(1) - q(-1)
        self.J = CoidealAlgebra(
            lat,
            "J",
            alpha=q(-2),
            beta=q(2),
            gamma=q(-2),
            delta=self._q_minus.inverse(),
        )
        self._lambda = self._build_lambda()
        super().__init__(lat, self.uq, self.J, LAMBDA_SEED)

    # === U_Q(sl2) ===

    def gen(self, text: str) -> Element:
        return self.uq.gen(text)

    def uq_mul(self, x: Element, y: Element) -> Element:
        return x * y

    def _build_lambda(self) -> Element:
        q = self.lat.qpow
        uq = self.uq
        qm = self._q_minus
        return (uq.gen("E") * uq.gen("F")).scale(qm * qm) + uq.gen("K").scale(q(-1)) + uq.gen("K^-1").scale(q(1))

    def casimir_lambda(self) -> Element:
        """Lambda = (Q - Q^-1)^2 EF + Q^-1 K + Q K^-1."""
        return self._lambda

    def empty_value(self) -> FieldElem:
        return self.Q + self.Q.inverse()

    def counit_monomial(self, mon) -> FieldElem:
        a, b, _ = mon
        return ONE if a == 0 and b == 0 else ZERO

    def _antipode_generator(self, g: str) -> Element:
        q = self.lat.qpow
        uq = self.uq
        if g == "E":
            return uq.monomial((0, 1, -1), -q(-2))  # -K^-1 E
        if g == "F":
            return uq.monomial((1, 0, 1), -ONE)  # -F K
        if g == "K":
            return uq.monomial((0, 0, -1))
        return uq.monomial((0, 0, 1))

    def _coproduct_generator(self, g: str) -> TensorElement:
        uq = self.uq
        slots = (uq, uq)
        one, k, k_inv = (0, 0, 0), (0, 0, 1), (0, 0, -1)
        if g == "E":
            return TensorElement(slots, {((0, 1, 0), one): ONE, (k, (0, 1, 0)): ONE})
        if g == "F":
            return TensorElement(slots, {((1, 0, 0), k_inv): ONE, (one, (1, 0, 0)): ONE})
        if g == "K":
            return TensorElement.pure(slots, [k, k])
        return TensorElement.pure(slots, [k_inv, k_inv])

    # === coideal J ===

    def j_gen(self, index: int) -> Element:
        mon = [0, 0, 0, 0]
        mon[index - 1] = 1
        return self.J.monomial(tuple(mon))

    def _expand_generator(self, pos: int) -> Element:
        if pos == 3:
            return self._lambda
        return self.uq.monomial((H1_MON, H2_MON, H3_MON)[pos])

    def _delta_coideal_table(self):
        q = self.lat.qpow
        h1, h2, h3, h4 = (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)
        one, k, k_inv = (0, 0, 0), (0, 0, 1), (0, 0, -1)
        qm2 = self._q_minus * self._q_minus
        # Delta(Lambda) = (Q-Q^-1)^2 (EF (x) K^-1 + E (x) F + KF (x) EK^-1) + K (x) (Lambda - Q K^-1) + Q K^-1 (x) K^-1
        # with EF = FE + (K - K^-1)/(Q - Q^-1) and KF = Q^-2 FK
        return (
            self.mixed({(H1_MON, h3): ONE, (one, h1): ONE}),
            self.mixed({(H2_MON, h3): ONE, (one, h2): ONE}),
            self.mixed({(k_inv, h3): ONE}),
            self.mixed({
                ((1, 1, 0), h3): qm2,
                ((0, 1, 0), h2): qm2,
                ((1, 0, 1), h1): qm2 * q(-2),
                (k, h4): ONE,
                (k, h3): -q(-1),
                (k_inv, h3): q(-1),
            }),
        )

    def _tau_table(self):
        q = self.lat.qpow
        h1, h2, h3, h4 = (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)
        one = (0, 0, 0)
        qm2 = self._q_minus * self._q_minus
        return (
            self.mixed({((0, 0, -1), h1): ONE}),
            self.mixed({
                ((0, 0, 1), h2): ONE,
                ((2, 0, 1), h1): -q(-3) * qm2,
                ((1, 0, 1), h3): q(-1) * (q(1) + q(-1)),
                ((1, 0, 1), h4): -q(-1),
            }),
            self.mixed({(one, h3): ONE, ((1, 0, 0), h1): -q(-1) * qm2}),
            self.mixed({(one, h4): ONE}),
        )

    def aw_tau(self, x: Element) -> TensorElement:
        return self.tau_on_coideal(x)

    def delta_on_J(self, x: Element) -> TensorElement:
        return self.delta_on_coideal(x)

    def j_expand(self, x: Element) -> Element:
        return self.expand(x)


@lru_cache(maxsize=None)
def uq_core() -> UqCore:
    logger.debug("building U_Q(sl2) core")
    return UqCore()


# === AW(n)_Q ===

class AskeyWilsonTensors(TensorExtension):
    """Lambda_A for A in [n], with the Q-commutator relations and Omega_m."""

    def __init__(self, n: int, core: Optional[UqCore] = None):
        core = core or uq_core()
        super().__init__(core, n)
        self.core = core
        q = core.lat.qpow
        self.Q = q(1)
        self._q2_minus = q(2) - q(-2)
        self._q_plus = q(1) + q(-1)

    def extend_lambda(self, A) -> TensorElement:
        return self.extend(A)

    def q_commutator(self, x: TensorElement, y: TensorElement) -> TensorElement:
        """[x, y]_Q = Q x y - Q^-1 y x."""
        return (x * y).scale(self.Q) - (y * x).scale(self.Q.inverse())

    def relation_sides(self, A: SubsetSpec, B: SubsetSpec):
        C = A ^ B
        g = self.extend
        d_inv = self._q2_minus.inverse()
        p_inv = self._q_plus.inverse()
        out = []
        for X, Y, Z in ((A, B, C), (B, C, A), (C, A, B)):
            lhs = self.q_commutator(g(X), g(Y)).scale(d_inv) + g(Z)
            rhs = (g(X & Y) * g(X | Y) + g(X - Y) * g(Y - X)).scale(p_inv)
            out.append((f"[L{X.label()},L{Y.label()}]_Q", lhs, rhs))
        return out

    def lambda_13_expression(self) -> TensorElement:
        """Lambda_{1,3} solved from the first relation at n = 3."""
        if self.n != 3:
            raise ParameterError({"error": "Lambda_{1,3} expression lives in the threefold product", "n": self.n})
        g = self.extend
        qm = self.Q - self.Q.inverse()
        bracket = self.q_commutator(g((1, 2)), g((2, 3))).scale(qm.inverse())
        return (g((1,)) * g((3,)) + g((2,)) * g((1, 2, 3)) - bracket).scale(self._q_plus.inverse())

    def _check_m(self, m: int):
        if not 2 <= m <= self.n - 1:
            raise ParameterError({"error": "m out of range", "m": m, "n": self.n})

    def casimir_omega_element(self, m: int) -> TensorElement:
        self._check_m(m)
        Q = self.Q
        Qi = Q.inverse()
        g = self.extend
        pair = g((m, m + 1))
        prime = g(list(range(1, m)) + [m + 1])
        head = g(range(1, m + 1))
        single_m, single_m1 = g((m,)), g((m + 1,))
        below, above = g(range(1, m)), g(range(1, m + 2))
        body = (
            (pair * prime * head).scale(Q)
            + (pair * pair).scale(Q * Q)
            + (prime * prime).scale(Qi * Qi)
            + (head * head).scale(Q * Q)
            - ((single_m * single_m1 + below * above) * pair).scale(Q)
            - ((single_m * below + single_m1 * above) * head).scale(Q)
            - ((single_m1 * below + single_m * above) * prime).scale(Qi)
        )
        return body.scale((self._q2_minus * self._q2_minus).inverse())

    def tridiagonal_sides(self, m: int):
        self._check_m(m)
        a = self.extend(range(1, m + 1))
        a_star = self.extend((m, m + 1))
        beta = self.Q ** 2 + self.Q ** -2
        rho = -(self._q2_minus * self._q2_minus)
        tri_1 = commutator(a, a * a * a_star + a_star * a * a - (a * a_star * a).scale(beta) - a_star.scale(rho))
        tri_2 = commutator(a_star, a_star * a_star * a + a * a_star * a_star - (a_star * a * a_star).scale(beta) - a.scale(rho))
        return tri_1, tri_2

    # --- checks ---

    def check_aw_relation(self, A, B, claim_only: bool = True) -> CheckReport:
        A, B = self.subset(A), self.subset(B)
        params = {"n": self.n, "A": list(A.A), "B": list(B.A), "C": list((A ^ B).A)}

        def body():
            if claim_only and not (A.is_interval and A.matches(B)):
                raise NotClaimedError("A is not consecutive or does not match B")
            return first_mismatch(self.relation_sides(A, B))

        return run_check("aw_algebra.aw_relation", "Q-commutator relations of AW(n)_Q", params, body)

    def casimir_omega(self, m: int) -> CheckReport:
        self._check_m(m)

        def body():
            omega = self.casimir_omega_element(m)
            generators = (
                ("Lambda[m]", self.extend(range(1, m + 1))),
                ("Lambda{m,m+1}", self.extend((m, m + 1))),
                ("Lambda'", self.extend(list(range(1, m)) + [m + 1])),
            )
            for label, gen in generators:
                witness = is_zero_witness(f"[Omega_m,{label}]", commutator(omega, gen))
                if witness:
                    return witness
            tri_1, tri_2 = self.tridiagonal_sides(m)
            return is_zero_witness("tridiagonal A", tri_1) or is_zero_witness("tridiagonal A*", tri_2)

        return run_check("aw_algebra.casimir_omega", "Casimir Omega_m and tridiagonal relations", {"n": self.n, "m": m}, body)

    def check_lambda_13(self) -> CheckReport:
        return run_check(
            "aw_algebra.lambda_13",
            "Lambda_{1,3} from the coaction",
            {"n": self.n},
            lambda: first_mismatch([("L{1,3}", self.extend((1, 3)), self.lambda_13_expression())]),
        )

    def check_nested_commutation(self, inner, outer) -> CheckReport:
        inner, outer = self.subset(inner), self.subset(outer)
        params = {"n": self.n, "A": list(inner.A), "B": list(outer.A)}

        def body():
            if not (inner.is_interval and outer.is_interval and inner.issubset(outer)):
                raise NotClaimedError("sets are not nested intervals")
            return is_zero_witness("[LA,LB]", commutator(self.extend(inner), self.extend(outer)))

        return run_check("aw_algebra.commutation", "commutation of nested consecutive sets", params, body)


# === Hopf checks ===

def hopf_axiom_pairs(ctx: HopfContext, generators: Dict[str, Element]):
    """(label, left, right) for counit, coassociativity and antipode on each generator."""
    pairs = []
    for name, x in generators.items():
        delta = ctx.coproduct(x)
        single = x.to_tensor()
        pairs.append((f"(e*1)D({name})", apply_counit_at(ctx, delta, 0), single))
        pairs.append((f"(1*e)D({name})", apply_counit_at(ctx, delta, 1), single))
        pairs.append((f"coassoc({name})", apply_coproduct_at(ctx, delta, 1), apply_coproduct_at(ctx, delta, 0)))
        unit = ctx.base.one().scale(ctx.counit(x))
        pairs.append((f"m(S*1)D({name})", multiply_slots(ctx, delta, 0), unit))
        pairs.append((f"m(1*S)D({name})", multiply_slots(ctx, delta, 1), unit))
    return pairs


def coaction_axiom_pairs(ctx: HopfContext, generators: Dict[str, Element]):
    """(1*tau)tau = (Delta*1)tau and (eps*1)tau = id on coideal elements."""
    pairs = []
    for name, x in generators.items():
        tau = ctx.tau_on_coideal(x)
        pairs.append((f"(1*t)t({name})", apply_tau_at(ctx, tau, 1), apply_coproduct_at(ctx, tau, 0)))
        pairs.append((f"(e*1)t({name})", apply_counit_at(ctx, tau, 0), x.to_tensor()))
    return pairs


def check_uq_hopf(core: Optional[UqCore] = None) -> CheckReport:
    core = core or uq_core()

    def body():
        gens = {s: core.gen(s) for s in ("E", "F", "K", "K^-1")}
        gens["Lambda"] = core.casimir_lambda()
        coideal = {f"h{i}": core.j_gen(i) for i in range(1, 5)}
        central = [(f"[Lambda,{s}]", commutator(core.casimir_lambda(), core.gen(s)), core.uq.element({})) for s in ("E", "F", "K")]
        return first_mismatch(hopf_axiom_pairs(core, gens) + coaction_axiom_pairs(core, coideal) + central)

    return run_check("aw_algebra.hopf", "Hopf structure of U_Q(sl2) and coaction on J", {}, body)
