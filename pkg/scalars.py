"""
Exact coefficient arithmetic.

All coefficients live in Q(t), with t a formal root of the deformation
parameter: q = t^L for the lattice order L. Polynomial arithmetic and gcds
come from sympy's sparse ring ``QQ[t]``; this module adds the Laurent shift,
the canonical form and the q-number helpers on top of it.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Dict, Iterable, Tuple, Union

from sympy.polys.domains import QQ
from sympy.polys.rings import ring

from errors import LatticeError, ParameterError, PoleError

logger = logging.getLogger(__name__)

POLY_RING, T = ring("t", QQ)

Rational = Fraction
LaurentPoly = Dict[int, Fraction]


# === Ring helpers ===

def _to_fraction(c) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


def _from_fraction(c: Fraction):
    return QQ(c.numerator, c.denominator)


def _strip_t(p) -> Tuple[int, object]:
    """Split p = t^k * p' with p'(0) != 0."""
    k = p.tail_degree()
    if k == 0:
        return 0, p
    return k, POLY_RING.from_dict({(e - k,): c for (e,), c in p.items()})


def _times_t(p, k: int):
    if k == 0:
        return p
    return p.mul_monom((k,))


def _eval_poly(p, t0: Fraction) -> Fraction:
    total = Fraction(0)
    for (e,), c in p.items():
        total += _to_fraction(c) * t0 ** e
    return total


def _format_laurent(terms: LaurentPoly) -> str:
    if not terms:
        return "0"
    parts = []
    for e in sorted(terms, reverse=True):
        c = terms[e]
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            power = "t" if e == 1 else f"t^{e}"
            body = power if mag == 1 else f"{mag}*{power}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# === Field elements ===

class FieldElem:
    """
    Element t^shift * num / den of Q(t) in canonical form.

    num and den are sympy polynomials with nonzero constant term, den is
    monic and gcd(num, den) = 1. Zero is stored as shift 0, num 0, den 1.
    """

    __slots__ = ("shift", "num", "den", "_hash")

    def __init__(self, shift: int, num, den):
        self.shift = shift
        self.num = num
        self.den = den
        self._hash = None

    # --- constructors ---

    @classmethod
    def const(cls, c: Union[int, Fraction]) -> "FieldElem":
        c = Fraction(c)
        if c == 0:
            return ZERO
        return cls(0, POLY_RING.ground_new(_from_fraction(c)), POLY_RING.one)

    @classmethod
    def t_power(cls, k: int) -> "FieldElem":
        return cls(k, POLY_RING.one, POLY_RING.one)

    @classmethod
    def from_laurent(cls, num: LaurentPoly, den: LaurentPoly = None) -> "FieldElem":
        """Build from exponent->coefficient maps, normalizing."""
        den = den if den is not None else {0: Fraction(1)}
        num_poly, num_low = _laurent_to_poly(num)
        den_poly, den_low = _laurent_to_poly(den)
        return field_normalize(num_poly, den_poly, num_low - den_low)

    # --- predicates ---

    @property
    def is_zero(self) -> bool:
        return not self.num

    @property
    def is_laurent(self) -> bool:
        return self.den == POLY_RING.one

    # --- arithmetic ---

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self.num:
            return other
        if not other.num:
            return self
        low = min(self.shift, other.shift)
        a = _times_t(self.num, self.shift - low)
        b = _times_t(other.num, other.shift - low)
        if self.den == other.den:
            return field_normalize(a + b, self.den, low)
        return field_normalize(a * other.den + b * self.den, self.den * other.den, low)

    __radd__ = __add__

    def __neg__(self):
        if not self.num:
            return self
        return FieldElem(self.shift, -self.num, self.den)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self.num or not other.num:
            return ZERO
        shift = self.shift + other.shift
        if self.den == POLY_RING.one and other.den == POLY_RING.one:
            return FieldElem(shift, self.num * other.num, POLY_RING.one)
        return field_normalize(self.num * other.num, self.den * other.den, shift)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElem":
        if not self.num:
            raise PoleError("division by zero in Q(t)")
        return field_normalize(self.den, self.num, -self.shift)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # --- comparison ---

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return False
        return self.shift == other.shift and self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.shift, frozenset(self.num.items()), frozenset(self.den.items())))
        return self._hash

    # --- views ---

    def num_terms(self) -> LaurentPoly:
        return {e + self.shift: _to_fraction(c) for (e,), c in self.num.items()}

    def den_terms(self) -> LaurentPoly:
        return {e: _to_fraction(c) for (e,), c in self.den.items()}

    def evaluate(self, t0) -> Fraction:
        return field_eval(self, t0)

    def __str__(self):
        num = _format_laurent(self.num_terms())
        if self.is_laurent:
            return num
        den = _format_laurent(self.den_terms())
        return f"({num})/({den})"

    def __repr__(self):
        return f"FieldElem({self})"


def _laurent_to_poly(terms: LaurentPoly):
    terms = {e: Fraction(c) for e, c in terms.items() if c != 0}
    if not terms:
        return POLY_RING.zero, 0
    low = min(terms)
    return POLY_RING.from_dict({(e - low,): _from_fraction(c) for e, c in terms.items()}), low


def _coerce(x):
    if isinstance(x, FieldElem):
        return x
    if isinstance(x, (int, Fraction)):
        return FieldElem.const(x)
    return NotImplemented


def field_normalize(num, den, shift: int = 0) -> FieldElem:
    """Canonical form of t^shift * num / den for sympy polynomials num, den."""
    if not den:
        raise PoleError("zero denominator")
    if not num:
        return ZERO
    k_num, num = _strip_t(num)
    k_den, den = _strip_t(den)
    shift += k_num - k_den
    if den.degree() == 0:
        lc = den.LC
        if lc != 1:
            num = num.quo_ground(lc)
        return FieldElem(shift, num, POLY_RING.one)
    _, num, den = num.cofactors(den)
    lc = den.LC
    if lc != 1:
        num = num.quo_ground(lc)
        den = den.monic()
    return FieldElem(shift, num, den)


def field_eval(e: FieldElem, t0) -> Fraction:
    """Exact value of e at t = t0; raises PoleError at a pole."""
    t0 = Fraction(t0)
    if e.is_zero:
        return Fraction(0)
    den = _eval_poly(e.den, t0)
    if den == 0 or (t0 == 0 and e.shift < 0):
        raise PoleError({"error": "pole", "at": str(t0), "value": str(e)})
    return t0 ** e.shift * _eval_poly(e.num, t0) / den


ZERO = FieldElem(0, POLY_RING.zero, POLY_RING.one)
ONE = FieldElem(0, POLY_RING.one, POLY_RING.one)


# === Exponent lattice ===

@dataclass(frozen=True)
class ExponentLattice:
    """
    q = t^L together with the model parameters mu_i and gamma_i = mu_i + 1/2.

    Every power q^e is built through ``qpow``, which refuses exponents with
    L*e not an integer.
    """
    L: int
    mu: Tuple[Fraction, ...] = ()
    gamma: Tuple[Fraction, ...] = ()

    @property
    def n(self) -> int:
        return len(self.mu)

    def exponent(self, e) -> int:
        scaled = Fraction(e) * self.L
        if scaled.denominator != 1:
            raise LatticeError({"error": "exponent off lattice", "exponent": str(e), "L": self.L})
        return int(scaled)

    def qpow(self, e) -> FieldElem:
        return FieldElem.t_power(self.exponent(e))

    def gamma_of(self, A: Iterable[int]) -> Fraction:
        return sum((self.gamma[i - 1] for i in A), Fraction(0))

    def mu_of(self, i: int) -> Fraction:
        return self.mu[i - 1]


def lattice_build(mu: Iterable) -> ExponentLattice:
    mu = tuple(Fraction(m) for m in mu)
    if not mu:
        raise ParameterError("mu must be non-empty")
    bad = [str(m) for m in mu if m <= 0]
    if bad:
        raise ParameterError({"error": "mu_i must be positive", "values": bad})
    L = 4 * lcm(*(m.denominator for m in mu))
    gamma = tuple(m + Fraction(1, 2) for m in mu)
    logger.debug("lattice L=%d mu=%s", L, [str(m) for m in mu])
    return ExponentLattice(L=L, mu=mu, gamma=gamma)


def formal_lattice() -> ExponentLattice:
    """Lattice with q = t and no model parameters, for integer Q-powers only."""
    return ExponentLattice(L=1)


# === q-numbers ===

def qnum(a, lat: ExponentLattice) -> FieldElem:
    """[a]_q = (q^a - q^-a)/(q - q^-1)."""
    a = Fraction(a)
    lat.exponent(a)
    if a == 0:
        return ZERO
    return (lat.qpow(a) - lat.qpow(-a)) / (lat.qpow(1) - lat.qpow(-1))


def qbracket_mu(mu, m: int, lat: ExponentLattice) -> FieldElem:
    """[mu, m; q] = [mu + m]_q - (-1)^m [mu]_q."""
    if m < 0:
        raise ParameterError({"error": "m must be non-negative", "m": m})
    sign = 1 if m % 2 == 0 else -1
    return qnum(Fraction(mu) + m, lat) - sign * qnum(mu, lat)
