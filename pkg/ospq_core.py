"""
osp_q(1|2) in PBW normal form A_-^a A_+^b K^c P^e, its Casimir, the Hopf maps
and the left coideal subalgebra I generated by A_-K, A_+K, K^2P and Gamma.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict

from pbw import CoidealAlgebra, Element, HopfContext, PBWAlgebra, TensorElement, add_term
from scalars import ONE, ZERO, ExponentLattice, FieldElem, qnum

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)

# I generators as osp monomials
G1_MON = (1, 0, 1, 0)   # A_- K
G2_MON = (0, 1, 1, 0)   # A_+ K
G3_MON = (0, 0, 2, 1)   # K^2 P
GAMMA_SEED = (0, 0, 0, 1)  # g4 in I


class OspAlgebra(PBWAlgebra):
    """osp_q(1|2) with K A_+- K^-1 = q^{+-1/2} A_+-, {A_+, A_-} = (K^2 - K^-2)/(q^1/2 - q^-1/2)."""

    name = "osp"
    symbols = ("A-", "A+", "K", "P")
    inverse_symbols = (None, None, "Ki", None)

    def __init__(self, lat: ExponentLattice):
        super().__init__(lat)
        self._kappa = (lat.qpow(HALF) - lat.qpow(-HALF)).inverse()
        self._sums: Dict[int, tuple] = {}

    def _anticommutator_sums(self, a: int):
        """(sum_i (-1)^i q^-(a-1-i), sum_i (-1)^i q^(a-1-i)) over i < a."""
        cached = self._sums.get(a)
        if cached is None:
            plus, minus = ZERO, ZERO
            for i in range(a):
                sign = 1 if i % 2 == 0 else -1
                plus = plus + sign * self.lat.qpow(-(a - 1 - i))
                minus = minus + sign * self.lat.qpow(a - 1 - i)
            cached = self._sums.setdefault(a, (plus, minus))
        return cached

    def left_generator(self, g, mon):
        a, b, c, e = mon
        lat = self.lat
        if g == "A-":
            return {(a + 1, b, c, e): ONE}
        if g == "K":
            return {(a, b, c + 1, e): lat.qpow(Fraction(b - a, 2))}
        if g == "Ki":
            return {(a, b, c - 1, e): lat.qpow(Fraction(a - b, 2))}
        if g == "P":
            return {(a, b, c, 1 - e): ONE if (a + b) % 2 == 0 else -ONE}
        # A+ moves through A_-^a picking up K^{+-2} corrections
        out = {(a, b + 1, c, e): ONE if a % 2 == 0 else -ONE}
        if a:
            plus, minus = self._anticommutator_sums(a)
            add_term(out, (a - 1, b, c + 2, e), self._kappa * plus * lat.qpow(b))
            add_term(out, (a - 1, b, c - 2, e), -self._kappa * minus * lat.qpow(-b))
        return out


class OspQCore(HopfContext):
    """
    Hopf and coideal data of osp_q(1|2) over one exponent lattice.

    All per-monomial images (coproduct, antipode, coaction, embedding of I)
    are cached on the instance; use ``for_lattice`` to share one instance.
    """

    def __init__(self, lat: ExponentLattice):
        self.lat = lat
        self.osp = OspAlgebra(lat)
        q = lat.qpow
        self.I = CoidealAlgebra(
            lat,
            "I",
            alpha=-q(-1),
            beta=-q(1),
            gamma=-q(-1),
            delta=q(-HALF) / (q(HALF) - q(-HALF)),
        )
        self.half = qnum(HALF, lat)
        self._q_minus = q(1) - q(-1)
        self._gamma = self._build_gamma()
        super().__init__(lat, self.osp, self.I, GAMMA_SEED)

    @classmethod
    def for_lattice(cls, lat: ExponentLattice) -> "OspQCore":
        return _core_for(lat)

    # === osp_q(1|2) ===

    def gen(self, text: str) -> Element:
        return self.osp.gen(text)

    def osp_mul(self, x: Element, y: Element) -> Element:
        return x * y

    def _build_gamma(self) -> Element:
        q = self.lat.qpow
        osp = self.osp
        k_part = (osp.gen("K^2").scale(q(-HALF)) - osp.gen("K^-2").scale(q(HALF))).scale(
            (q(1) - q(-1)).inverse()
        )
        s_casimir = -(osp.gen("A+") * osp.gen("A-")) + k_part
        return s_casimir * osp.gen("P")

    def casimir_gamma(self) -> Element:
        return self._gamma

    def scasimir(self) -> Element:
        """Gamma * P, the bracket that anticommutes with A_+-."""
        return self._gamma * self.osp.gen("P")

    def empty_value(self) -> FieldElem:
        """Gamma for the empty index set: -[1/2]_q."""
        return -self.half

    # === Hopf structure ===

    def counit_monomial(self, mon) -> FieldElem:
        a, b, _, _ = mon
        return ONE if a == 0 and b == 0 else ZERO

    def _antipode_generator(self, g: str) -> Element:
        q = self.lat.qpow
        osp = self.osp
        if g == "A+":
            return osp.monomial((0, 1, 0, 1), -q(HALF))
        if g == "A-":
            return osp.monomial((1, 0, 0, 1), -q(-HALF))
        if g == "K":
            return osp.monomial((0, 0, -1, 0))
        if g == "Ki":
            return osp.monomial((0, 0, 1, 0))
        return osp.monomial((0, 0, 0, 1))

    def _coproduct_generator(self, g: str) -> TensorElement:
        osp = self.osp
        slots = (osp, osp)
        if g in ("A+", "A-"):
            gen = (0, 1, 0, 0) if g == "A+" else (1, 0, 0, 0)
            return TensorElement(slots, {
                (gen, (0, 0, 1, 1)): ONE,
                ((0, 0, -1, 0), gen): ONE,
            })
        if g == "K":
            return TensorElement.pure(slots, [(0, 0, 1, 0), (0, 0, 1, 0)])
        if g == "Ki":
            return TensorElement.pure(slots, [(0, 0, -1, 0), (0, 0, -1, 0)])
        return TensorElement.pure(slots, [(0, 0, 0, 1), (0, 0, 0, 1)])

    def delta_gamma_expression(self) -> TensorElement:
        """Five-term closed form of the coproduct of Gamma."""
        q = self.lat.qpow
        osp = self.osp
        gamma = self._gamma.to_tensor()
        k2p = TensorElement.pure((osp,), [G3_MON])
        km2p = TensorElement.pure((osp,), [(0, 0, -2, 1)])
        out = TensorElement((osp, osp), {
            ((1, 0, -1, 1), G2_MON): -q(HALF),
            ((0, 1, -1, 1), G1_MON): q(-HALF),
            ((0, 0, -2, 1), G3_MON): self.half,
        })
        return out + gamma.tensor(k2p) + km2p.tensor(gamma)

    # === coideal I ===

    def i_mul(self, x: Element, y: Element) -> Element:
        return x * y

    def i_gen(self, index: int) -> Element:
        mon = [0, 0, 0, 0]
        mon[index - 1] = 1
        return self.I.monomial(tuple(mon))

    def _expand_generator(self, pos: int) -> Element:
        if pos == 3:
            return self._gamma
        return self.osp.monomial((G1_MON, G2_MON, G3_MON)[pos])

    def i_expand(self, x: Element) -> Element:
        return self.expand(x)

    def _delta_coideal_table(self):
        q = self.lat.qpow
        g1, g2, g3, g4 = (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)
        one = self.osp.unit
        gamma_g3 = {(m, g3): c for m, c in self._gamma.terms.items()}
        delta_g4 = self.mixed(gamma_g3) + self.mixed({
            ((1, 0, -1, 1), g2): -q(HALF),
            ((0, 1, -1, 1), g1): q(-HALF),
            ((0, 0, -2, 1), g3): self.half,
            ((0, 0, -2, 1), g4): ONE,
        })
        return (
            self.mixed({(G1_MON, g3): ONE, (one, g1): ONE}),
            self.mixed({(G2_MON, g3): ONE, (one, g2): ONE}),
            self.mixed({(G3_MON, g3): ONE}),
            delta_g4,
        )

    def _tau_table(self):
        q = self.lat.qpow
        g1, g2, g3, g4 = (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)
        one = self.osp.unit
        qm = self._q_minus
        return (
            self.mixed({(G3_MON, g1): ONE}),
            self.mixed({
                ((0, 0, -2, 1), g2): ONE,
                ((0, 2, 0, 1), g1): q(-HALF) * qm,
                ((0, 1, -1, 1), g3): q(-HALF) * (q(HALF) - q(-HALF)),
                ((0, 1, -1, 1), g4): q(-HALF) * qm,
            }),
            self.mixed({(one, g3): ONE, (G2_MON, g1): -qm}),
            self.mixed({(one, g4): ONE}),
        )

    def delta_on_I(self, x: Element) -> TensorElement:
        return self.delta_on_coideal(x)

    def tau_on_I(self, x: Element) -> TensorElement:
        return self.tau_on_coideal(x)


@lru_cache(maxsize=None)
def _core_for(lat: ExponentLattice) -> OspQCore:
    logger.debug("building osp core for L=%d", lat.L)
    return OspQCore(lat)
