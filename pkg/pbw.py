"""
Shared plumbing for PBW normal-form algebras and their tensor powers.

An algebra here is a rewriting context: it knows its monomial type (a tuple
of exponents in a fixed generator order), how a single generator acts from
the left on a normal-ordered monomial, and nothing else. Products of
monomials are obtained by feeding the generator word of the left factor,
right to left, into that left action. Results are cached per algebra;
caches are filled with setdefault so concurrent checks share one value.
"""
import itertools
import logging
import re
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Tuple, Union

from errors import ArityError, ParameterError
from scalars import ONE, ZERO, ExponentLattice, FieldElem

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]
Terms = Dict[Monomial, FieldElem]
Scalar = Union[FieldElem, int, Fraction]


def add_term(terms: dict, key, coeff: FieldElem) -> None:
    """Accumulate coeff at key, dropping the entry when it cancels."""
    if coeff.is_zero:
        return
    current = terms.get(key)
    if current is None:
        terms[key] = coeff
        return
    total = current + coeff
    if total.is_zero:
        del terms[key]
    else:
        terms[key] = total


def _as_field(c: Scalar) -> FieldElem:
    return c if isinstance(c, FieldElem) else FieldElem.const(c)


# === Algebras ===

class PBWAlgebra:
    """Base class for a normal-form algebra over Q(t)."""

    name = "pbw"
    symbols: Tuple[str, ...] = ()
    # generator symbol for each monomial position when the exponent is negative
    inverse_symbols: Tuple[Optional[str], ...] = ()

    def __init__(self, lat: ExponentLattice):
        self.lat = lat
        self._mul_cache: Dict[Tuple[Monomial, Monomial], Terms] = {}
        self._token = re.compile(
            "(" + "|".join(re.escape(s) for s in sorted(self.symbols, key=len, reverse=True)) + r")(?:\^(-?\d+))?"
        )

    # --- identity ---

    def _key(self):
        return (type(self), self.name, self.lat)

    def __eq__(self, other):
        return isinstance(other, PBWAlgebra) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"<{type(self).__name__} {self.name} L={self.lat.L}>"

    # --- to be provided by subclasses ---

    def word(self, mon: Monomial) -> List[str]:
        """Generator symbols whose ordered product is mon."""
        out: List[str] = []
        for pos, e in enumerate(mon):
            if e >= 0:
                out.extend([self.symbols[pos]] * e)
            else:
                out.extend([self.inverse_symbols[pos]] * (-e))
        return out

    def split_first(self, mon: Monomial) -> Tuple[Optional[str], Monomial]:
        """(g, rest) with mon = g * rest; g is None for the unit."""
        for pos, e in enumerate(mon):
            if e:
                rest = list(mon)
                rest[pos] -= 1 if e > 0 else -1
                return (self.symbols[pos] if e > 0 else self.inverse_symbols[pos]), tuple(rest)
        return None, mon

    def left_generator(self, g: str, mon: Monomial) -> Terms:
        raise NotImplementedError

    # --- products ---

    @property
    def unit(self) -> Monomial:
        return (0,) * len(self.symbols)

    def mul_monomials(self, m1: Monomial, m2: Monomial) -> Terms:
        key = (m1, m2)
        cached = self._mul_cache.get(key)
        if cached is not None:
            return cached
        result = {m2: ONE}
        for g in reversed(self.word(m1)):
            result = self._apply_generator(g, result)
        return self._mul_cache.setdefault(key, result)

    def _apply_generator(self, g: str, terms: Terms) -> Terms:
        out: Terms = {}
        for mon, c in terms.items():
            for m, c2 in self.left_generator(g, mon).items():
                add_term(out, m, c * c2)
        return out

    # --- element constructors ---

    def element(self, terms: Terms) -> "Element":
        return Element(self, terms)

    def monomial(self, mon: Monomial, coeff: Scalar = 1) -> "Element":
        return Element(self, {tuple(mon): _as_field(coeff)})

    def one(self) -> "Element":
        return self.monomial(self.unit)

    def gen(self, text: str) -> "Element":
        return self.monomial(self.parse_monomial(text))

    # --- text form ---

    def format_monomial(self, mon: Monomial) -> str:
        parts = []
        for sym, e in zip(self.symbols, mon):
            if e == 0:
                continue
            parts.append(sym if e == 1 else f"{sym}^{e}")
        return "".join(parts) or "1"

    def parse_monomial(self, text: str) -> Monomial:
        text = text.replace(" ", "")
        exps = [0] * len(self.symbols)
        if text in ("", "1"):
            return tuple(exps)
        pos, last = 0, -1
        while pos < len(text):
            match = self._token.match(text, pos)
            if match is None:
                raise ParameterError({"error": "cannot parse monomial", "text": text, "at": pos})
            idx = self.symbols.index(match.group(1))
            if idx < last:
                raise ParameterError({"error": "monomial not in normal order", "text": text})
            exps[idx] += int(match.group(2)) if match.group(2) else 1
            last = idx
            pos = match.end()
        return tuple(exps)


class CoidealAlgebra(PBWAlgebra):
    """
    Four generators g1..g4 with g3 g1 = alpha g1 g3, g3 g2 = beta g2 g3,
    g2 g1 = gamma g1 g2 + delta (g3^2 - 1) and g4 central.

    Both coideal subalgebras used by the engine have this shape; they differ
    only in the four structure constants.
    """

    symbols = ("g1", "g2", "g3", "g4")

    def __init__(self, lat, name, alpha, beta, gamma, delta):
        self.name = name
        super().__init__(lat)
        self.alpha = alpha
        self.beta = beta
        self.gamma = gamma
        self.delta = delta

    def left_generator(self, g, mon):
        a, b, c, d = mon
        if g == "g1":
            return {(a + 1, b, c, d): ONE}
        if g == "g3":
            return {(a, b, c + 1, d): self.alpha ** a * self.beta ** b}
        if g == "g4":
            return {(a, b, c, d + 1): ONE}
        out: Terms = {(a, b + 1, c, d): self.gamma ** a}
        if a:
            beta_2b = self.beta ** (2 * b)
            for i in range(a):
                w = self.delta * self.gamma ** i
                add_term(out, (a - 1, b, c + 2, d), w * self.alpha ** (2 * (a - 1 - i)) * beta_2b)
                add_term(out, (a - 1, b, c, d), -w)
        return out


# === Linear combinations ===

class _Combination:
    """Finite sum of basis keys with FieldElem coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict):
        self.terms = {k: v for k, v in terms.items() if not v.is_zero}

    # subclasses: _layout(), _with(terms), _product(other)

    def _check(self, other):
        if type(other) is not type(self) or other._layout() != self._layout():
            raise ArityError({
                "error": "operand layout mismatch",
                "left": self._layout_name(),
                "right": other._layout_name() if isinstance(other, _Combination) else type(other).__name__,
            })

    def __len__(self):
        return len(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        if isinstance(other, (FieldElem, int, Fraction)):
            other = self.scalar_like(other)
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            add_term(out, k, c)
        return self._with(out)

    __radd__ = __add__

    def __neg__(self):
        return self._with({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (FieldElem, int, Fraction)):
            other = self.scalar_like(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Scalar):
        c = _as_field(c)
        if c.is_zero:
            return self._with({})
        return self._with({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (FieldElem, int, Fraction)):
            return self.scale(other)
        self._check(other)
        return self._product(other)

    def __rmul__(self, other):
        if isinstance(other, (FieldElem, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ParameterError("negative powers of algebra elements are not supported")
        result = self.scalar_like(1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, (FieldElem, int, Fraction)):
            other = self.scalar_like(other)
        if type(other) is not type(self) or other._layout() != self._layout():
            return False
        return self.terms == other.terms

    __hash__ = None

    def coefficient(self, key) -> FieldElem:
        return self.terms.get(key, ZERO)

    def evaluate(self, t0) -> Dict:
        """Coefficients evaluated at t = t0 (zero values dropped)."""
        out = {}
        for k, c in self.terms.items():
            v = c.evaluate(t0)
            if v != 0:
                out[k] = v
        return out

    def first_difference(self, other) -> Optional[dict]:
        """Witness for the smallest key whose coefficients differ, or None."""
        self._check(other)
        for key in sorted(set(self.terms) | set(other.terms)):
            left, right = self.coefficient(key), other.coefficient(key)
            if left != right:
                return {"term": self.format_key(key), "left": str(left), "right": str(right)}
        return None

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{self.format_key(k)}" for k, c in sorted(self.terms.items()))

    __repr__ = __str__


class Element(_Combination):
    """Element of a single PBWAlgebra."""

    __slots__ = ("algebra",)

    def __init__(self, algebra: PBWAlgebra, terms: Terms):
        super().__init__(terms)
        self.algebra = algebra

    def _layout(self):
        return self.algebra

    def _layout_name(self):
        return repr(self.algebra)

    def _with(self, terms):
        return Element(self.algebra, terms)

    def scalar_like(self, c: Scalar) -> "Element":
        return self.algebra.monomial(self.algebra.unit, c)

    def format_key(self, key) -> str:
        return self.algebra.format_monomial(key)

    def _product(self, other):
        out: Terms = {}
        mul = self.algebra.mul_monomials
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c12 = c1 * c2
                for m, c in mul(m1, m2).items():
                    add_term(out, m, c12 * c)
        return Element(self.algebra, out)

    def map_linear(self, fn: Callable[[Monomial], "Element"], target: Optional[PBWAlgebra] = None) -> "Element":
        """Extend a per-monomial map linearly."""
        out: Terms = {}
        for mon, c in self.terms.items():
            for m, c2 in fn(mon).terms.items():
                add_term(out, m, c * c2)
        return Element(target or self.algebra, out)

    def to_tensor(self) -> "TensorElement":
        return TensorElement((self.algebra,), {(m,): c for m, c in self.terms.items()})


SlotKey = Tuple[Monomial, ...]


class TensorElement(_Combination):
    """
    Sum of pure tensors of slot monomials, multiplied slotwise.

    ``slots`` names the algebra of every position, so a mixed state whose
    last slot still lives in a coideal is a distinct layout from the pure one.
    """

    __slots__ = ("slots",)

    def __init__(self, slots: Tuple[PBWAlgebra, ...], terms: Dict[SlotKey, FieldElem]):
        super().__init__(terms)
        self.slots = tuple(slots)

    @classmethod
    def scalar(cls, c: Scalar, slots: Tuple[PBWAlgebra, ...]) -> "TensorElement":
        return cls(slots, {tuple(a.unit for a in slots): _as_field(c)})

    @classmethod
    def pure(cls, slots, monomials: Iterable[Monomial], coeff: Scalar = 1) -> "TensorElement":
        return cls(slots, {tuple(tuple(m) for m in monomials): _as_field(coeff)})

    @property
    def arity(self) -> int:
        return len(self.slots)

    def _layout(self):
        return self.slots

    def _layout_name(self):
        return "|".join(a.name for a in self.slots)

    def _with(self, terms):
        return TensorElement(self.slots, terms)

    def scalar_like(self, c: Scalar) -> "TensorElement":
        return TensorElement.scalar(c, self.slots)

    def format_key(self, key: SlotKey) -> str:
        return "|".join(a.format_monomial(m) for a, m in zip(self.slots, key))

    def _product(self, other):
        out: Dict[SlotKey, FieldElem] = {}
        slots = self.slots
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                factors = []
                for alg, m1, m2 in zip(slots, k1, k2):
                    factors.append(list(alg.mul_monomials(m1, m2).items()))
                c12 = c1 * c2
                for combo in itertools.product(*factors):
                    coeff = c12
                    for _, c in combo:
                        coeff = coeff * c
                    add_term(out, tuple(m for m, _ in combo), coeff)
        return TensorElement(slots, out)

    # --- layout changes ---

    def tensor(self, other: "TensorElement") -> "TensorElement":
        """Concatenate slots: self (x) other."""
        out: Dict[SlotKey, FieldElem] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                add_term(out, k1 + k2, c1 * c2)
        return TensorElement(self.slots + other.slots, out)

    def pad(self, before: int, after: int, algebra: PBWAlgebra) -> "TensorElement":
        pre = (algebra.unit,) * before
        post = (algebra.unit,) * after
        return TensorElement(
            (algebra,) * before + self.slots + (algebra,) * after,
            {pre + k + post: c for k, c in self.terms.items()},
        )

    def expand_slot(
        self,
        pos: int,
        fn: Callable[[Monomial], Dict[SlotKey, FieldElem]],
        new_slots: Tuple[PBWAlgebra, ...],
    ) -> "TensorElement":
        """Replace slot ``pos`` by ``new_slots`` through a per-monomial map."""
        if not 0 <= pos < self.arity:
            raise ArityError({"error": "slot out of range", "pos": pos, "arity": self.arity})
        out: Dict[SlotKey, FieldElem] = {}
        image_cache: Dict[Monomial, Dict[SlotKey, FieldElem]] = {}
        for key, c in self.terms.items():
            mon = key[pos]
            image = image_cache.get(mon)
            if image is None:
                image = image_cache[mon] = fn(mon)
            head, tail = key[:pos], key[pos + 1:]
            for sub, c2 in image.items():
                add_term(out, head + sub + tail, c * c2)
        return TensorElement(self.slots[:pos] + tuple(new_slots) + self.slots[pos + 1:], out)

    def slot_element(self) -> Element:
        """View a one-slot tensor as an Element."""
        if self.arity != 1:
            raise ArityError({"error": "not a one-slot tensor", "arity": self.arity})
        return Element(self.slots[0], {k[0]: c for k, c in self.terms.items()})


def tensor_mul(x: TensorElement, y: TensorElement) -> TensorElement:
    """Slotwise product in PBW form; both operands must share a slot layout."""
    if not isinstance(x, TensorElement) or not isinstance(y, TensorElement):
        raise ArityError({"error": "tensor_mul needs two tensors"})
    return x * y


def commutator(x, y):
    return x * y - y * x


# === Slot maps over a Hopf context ===
# A context exposes ``base``, ``coideal`` and per-monomial images
# ``coproduct_terms``, ``counit_monomial``, ``tau_terms``,
# ``delta_coideal_terms``, ``expand_terms`` and ``antipode_monomial``.

def apply_coproduct_at(ctx, t: TensorElement, pos: int) -> TensorElement:
    """(1 (x) .. (x) Delta (x) .. (x) 1) on slot ``pos``."""
    return t.expand_slot(pos, ctx.coproduct_terms, (ctx.base, ctx.base))


def apply_counit_at(ctx, t: TensorElement, pos: int) -> TensorElement:
    return t.expand_slot(pos, lambda m: {(): ctx.counit_monomial(m)}, ())


def apply_tau_at(ctx, t: TensorElement, pos: int) -> TensorElement:
    return t.expand_slot(pos, ctx.tau_terms, (ctx.base, ctx.coideal))


def apply_delta_coideal_at(ctx, t: TensorElement, pos: int) -> TensorElement:
    return t.expand_slot(pos, ctx.delta_coideal_terms, (ctx.base, ctx.coideal))


def apply_expand_at(ctx, t: TensorElement, pos: int) -> TensorElement:
    return t.expand_slot(pos, ctx.expand_terms, (ctx.base,))


def multiply_slots(ctx, t: TensorElement, antipode_pos: int) -> Element:
    """m(S (x) 1) or m(1 (x) S) on a two-slot tensor over the base algebra."""
    out: Terms = {}
    base = ctx.base
    for (m1, m2), c in t.terms.items():
        left = ctx.antipode_monomial(m1) if antipode_pos == 0 else base.monomial(m1)
        right = ctx.antipode_monomial(m2) if antipode_pos == 1 else base.monomial(m2)
        for m, c2 in (left * right).terms.items():
            add_term(out, m, c * c2)
    return Element(base, out)


class HopfContext:
    """
    A Hopf algebra ``base`` with a left coideal subalgebra ``coideal``.

    Subclasses give the images of single generators; products are handled
    here, recursively over the generator word and cached per monomial.
    The coideal keeps its own PBW type, and ``expand`` embeds it into the base.
    """

    def __init__(self, lat: ExponentLattice, base: PBWAlgebra, coideal: PBWAlgebra, seed: Monomial):
        self.lat = lat
        self.base = base
        self.coideal = coideal
        self.seed = seed
        self._coproduct_cache: Dict[Monomial, Dict[SlotKey, FieldElem]] = {}
        self._antipode_cache: Dict[Monomial, Element] = {}
        self._expand_cache: Dict[Monomial, Element] = {}
        self._delta_c_cache: Dict[Monomial, TensorElement] = {}
        self._tau_cache: Dict[Monomial, TensorElement] = {}
        self._delta_c_gens = self._delta_coideal_table()
        self._tau_gens = self._tau_table()

    # --- to be provided by subclasses ---

    def counit_monomial(self, mon: Monomial) -> FieldElem:
        raise NotImplementedError

    def empty_value(self) -> FieldElem:
        raise NotImplementedError

    def _coproduct_generator(self, g: str) -> TensorElement:
        raise NotImplementedError

    def _antipode_generator(self, g: str) -> Element:
        raise NotImplementedError

    def _expand_generator(self, pos: int) -> Element:
        raise NotImplementedError

    def _delta_coideal_table(self) -> Tuple[TensorElement, ...]:
        raise NotImplementedError

    def _tau_table(self) -> Tuple[TensorElement, ...]:
        raise NotImplementedError

    # --- Hopf maps ---

    def counit(self, x: Element) -> FieldElem:
        total = ZERO
        for mon, c in x.terms.items():
            total = total + c * self.counit_monomial(mon)
        return total

    def antipode_monomial(self, mon: Monomial) -> Element:
        """S is an anti-homomorphism: S(g1 g2 .. gk) = S(gk) .. S(g1)."""
        cached = self._antipode_cache.get(mon)
        if cached is None:
            result = self.base.one()
            for g in self.base.word(mon):
                result = self._antipode_generator(g) * result
            cached = self._antipode_cache.setdefault(mon, result)
        return cached

    def antipode(self, x: Element) -> Element:
        return x.map_linear(self.antipode_monomial)

    def coproduct_terms(self, mon: Monomial) -> Dict[SlotKey, FieldElem]:
        cached = self._coproduct_cache.get(mon)
        if cached is None:
            g, rest = self.base.split_first(mon)
            if g is None:
                cached = {(self.base.unit, self.base.unit): ONE}
            else:
                tail = TensorElement((self.base, self.base), self.coproduct_terms(rest))
                cached = (self._coproduct_generator(g) * tail).terms
            cached = self._coproduct_cache.setdefault(mon, cached)
        return cached

    def coproduct(self, x: Element) -> TensorElement:
        out: Dict[SlotKey, FieldElem] = {}
        for mon, c in x.terms.items():
            for key, c2 in self.coproduct_terms(mon).items():
                add_term(out, key, c * c2)
        return TensorElement((self.base, self.base), out)

    # --- coideal ---

    def expand_monomial(self, mon: Monomial) -> Element:
        cached = self._expand_cache.get(mon)
        if cached is None:
            pos = next((i for i, e in enumerate(mon) if e), None)
            if pos is None:
                cached = self.base.one()
            else:
                rest = list(mon)
                rest[pos] -= 1
                cached = self._expand_generator(pos) * self.expand_monomial(tuple(rest))
            cached = self._expand_cache.setdefault(mon, cached)
        return cached

    def expand_terms(self, mon: Monomial) -> Dict[SlotKey, FieldElem]:
        return {(m,): c for m, c in self.expand_monomial(mon).terms.items()}

    def expand(self, x: Element) -> Element:
        return x.map_linear(self.expand_monomial, self.base)

    def mixed(self, terms: Dict[SlotKey, FieldElem]) -> TensorElement:
        """Two-slot tensor with the coideal in the second slot."""
        return TensorElement((self.base, self.coideal), terms)

    def _multiplicative(self, mon: Monomial, table, cache) -> TensorElement:
        cached = cache.get(mon)
        if cached is None:
            pos = next((i for i, e in enumerate(mon) if e), None)
            if pos is None:
                cached = TensorElement.scalar(1, (self.base, self.coideal))
            else:
                rest = list(mon)
                rest[pos] -= 1
                cached = table[pos] * self._multiplicative(tuple(rest), table, cache)
            cached = cache.setdefault(mon, cached)
        return cached

    def delta_coideal_terms(self, mon: Monomial) -> Dict[SlotKey, FieldElem]:
        return self._multiplicative(mon, self._delta_c_gens, self._delta_c_cache).terms

    def tau_terms(self, mon: Monomial) -> Dict[SlotKey, FieldElem]:
        return self._multiplicative(mon, self._tau_gens, self._tau_cache).terms

    def _linear_mixed(self, x: Element, fn) -> TensorElement:
        out: Dict[SlotKey, FieldElem] = {}
        for mon, c in x.terms.items():
            for key, c2 in fn(mon).items():
                add_term(out, key, c * c2)
        return self.mixed(out)

    def delta_on_coideal(self, x: Element) -> TensorElement:
        return self._linear_mixed(x, self.delta_coideal_terms)

    def tau_on_coideal(self, x: Element) -> TensorElement:
        return self._linear_mixed(x, self.tau_terms)
