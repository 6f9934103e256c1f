"""
The Z_2^n q-Dirac-Dunkl model.

Polynomials are sparse maps from exponent vectors to Q(t) coefficients.
Operators are closures over the primitives (multiplication by x_i, half
q-shifts, reflections, q-Dunkl operators, scalars) combined by sums and
composition; every operator caches its image of each monomial it has seen.
Two operators are compared on all monomials up to a given degree.
"""
import itertools
import logging
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from checks import first_mismatch, run_check, scalar_witness
from errors import ArityError, DomainError, ParameterError
from ospq_core import OspQCore
from pbw import TensorElement, _Combination, add_term
from schemas import CheckReport
from scalars import ONE, ZERO, ExponentLattice, FieldElem, lattice_build, qbracket_mu, qnum
from tensor_ext import BannaiItoTensors, SubsetSpec, as_subset

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)
POSITIVITY_POINTS = (Fraction(2), Fraction(3, 2))

Exponents = Tuple[int, ...]
Image = Dict[Exponents, FieldElem]


# === Polynomials ===

class MultiPoly(_Combination):
    """Polynomial in x_1..x_n with Q(t) coefficients."""

    __slots__ = ("n",)

    def __init__(self, n: int, terms: Image):
        super().__init__(terms)
        self.n = n

    @classmethod
    def zero(cls, n: int) -> "MultiPoly":
        return cls(n, {})

    @classmethod
    def monomial(cls, n: int, exps: Sequence[int], coeff=1) -> "MultiPoly":
        exps = tuple(exps)
        if len(exps) != n or min(exps, default=0) < 0:
            raise ParameterError({"error": "bad exponent vector", "n": n, "exponents": list(exps)})
        c = coeff if isinstance(coeff, FieldElem) else FieldElem.const(coeff)
        return cls(n, {exps: c})

    @classmethod
    def variable(cls, n: int, i: int, power: int = 1) -> "MultiPoly":
        exps = [0] * n
        exps[i - 1] = power
        return cls.monomial(n, exps)

    def _layout(self):
        return self.n

    def _layout_name(self):
        return f"P(R^{self.n})"

    def _with(self, terms):
        return MultiPoly(self.n, terms)

    def scalar_like(self, c) -> "MultiPoly":
        return MultiPoly.monomial(self.n, (0,) * self.n, c)

    def format_key(self, key: Exponents) -> str:
        return format_exponents(key)

    def _product(self, other):
        out: Image = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                add_term(out, tuple(a + b for a, b in zip(e1, e2)), c1 * c2)
        return MultiPoly(self.n, out)

    # --- degrees ---

    def degrees(self) -> set:
        return {sum(e) for e in self.terms}

    def is_homogeneous(self, k: int) -> bool:
        """True for the zero polynomial and for polynomials of pure degree k."""
        return all(sum(e) == k for e in self.terms)

    def homogeneous_part(self, k: int) -> "MultiPoly":
        return MultiPoly(self.n, {e: c for e, c in self.terms.items() if sum(e) == k})

    def last_variable(self) -> int:
        """Largest index i with x_i present (0 for constants and zero)."""
        top = 0
        for e in self.terms:
            for i in range(len(e), 0, -1):
                if e[i - 1]:
                    top = max(top, i)
                    break
        return top

    def restrict(self, i: int) -> "MultiPoly":
        """Evaluation at x_i = 0."""
        return MultiPoly(self.n, {e: c for e, c in self.terms.items() if e[i - 1] == 0})

    def cache_key(self):
        return frozenset(self.terms.items())


def format_exponents(exps: Exponents) -> str:
    parts = [f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(exps, start=1) if e]
    return "*".join(parts) or "1"


def monomials(n: int, degree: int, exact: bool = False) -> List[Exponents]:
    """Exponent vectors of total degree <= degree (== degree when exact)."""
    low = degree if exact else 0
    out = [e for e in itertools.product(range(degree + 1), repeat=n) if low <= sum(e) <= degree]
    return sorted(out, key=lambda e: (sum(e), tuple(-a for a in e)))


# === Operators ===

class ModelOperator:
    """Linear operator on polynomials, evaluated monomial by monomial."""

    __slots__ = ("n", "label", "_action", "_cache")

    def __init__(self, n: int, action: Callable[[Exponents], Image], label: str = "op"):
        self.n = n
        self.label = label
        self._action = action
        self._cache: Dict[Exponents, Image] = {}

    @classmethod
    def scalar(cls, n: int, c) -> "ModelOperator":
        c = c if isinstance(c, FieldElem) else FieldElem.const(c)
        if c.is_zero:
            return cls(n, lambda exps: {}, "0")
        return cls(n, lambda exps: {exps: c}, str(c))

    def on_monomial(self, exps: Exponents) -> Image:
        image = self._cache.get(exps)
        if image is None:
            image = self._cache.setdefault(exps, self._action(exps))
        return image

    def __call__(self, p: MultiPoly) -> MultiPoly:
        if p.n != self.n:
            raise ArityError({"error": "polynomial has the wrong number of variables", "operator": self.n, "poly": p.n})
        out: Image = {}
        for exps, c in p.terms.items():
            for e2, c2 in self.on_monomial(exps).items():
                add_term(out, e2, c * c2)
        return MultiPoly(self.n, out)

    def named(self, label: str) -> "ModelOperator":
        self.label = label
        return self

    def _coerce(self, other) -> "ModelOperator":
        if isinstance(other, (FieldElem, int, Fraction)):
            return ModelOperator.scalar(self.n, other)
        if not isinstance(other, ModelOperator) or other.n != self.n:
            raise ArityError({"error": "operator layout mismatch", "left": self.n, "right": getattr(other, "n", None)})
        return other

    def __add__(self, other):
        other = self._coerce(other)
        left = self

        def action(exps):
            out = dict(left.on_monomial(exps))
            for e2, c2 in other.on_monomial(exps).items():
                add_term(out, e2, c2)
            return out

        return ModelOperator(self.n, action)

    __radd__ = __add__

    def scale(self, c) -> "ModelOperator":
        c = c if isinstance(c, FieldElem) else FieldElem.const(c)
        if c.is_zero:
            return ModelOperator.scalar(self.n, 0)
        inner = self
        return ModelOperator(self.n, lambda exps: {e: v * c for e, v in inner.on_monomial(exps).items()})

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        """Composition: (A * B)(p) = A(B(p))."""
        if isinstance(other, (FieldElem, int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        outer = self

        def action(exps):
            out: Image = {}
            for e2, c2 in other.on_monomial(exps).items():
                for e3, c3 in outer.on_monomial(e2).items():
                    add_term(out, e3, c2 * c3)
            return out

        return ModelOperator(self.n, action)

    def __rmul__(self, other):
        if isinstance(other, (FieldElem, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ParameterError("negative operator powers are not supported")
        result = ModelOperator.scalar(self.n, 1)
        for _ in range(k):
            result = self * result
        return result

    def matrix(self, degree: int) -> Dict[Exponents, MultiPoly]:
        return {e: MultiPoly(self.n, self.on_monomial(e)) for e in monomials(self.n, degree)}

    def preserves_degree(self, degree: int) -> bool:
        return all(MultiPoly(self.n, self.on_monomial(e)).is_homogeneous(sum(e)) for e in monomials(self.n, degree))


def commutator(x: ModelOperator, y: ModelOperator) -> ModelOperator:
    return x * y - y * x


def anticommutator(x: ModelOperator, y: ModelOperator) -> ModelOperator:
    return x * y + y * x


def operator_difference(label: str, left: ModelOperator, right: ModelOperator, degree: int) -> Optional[dict]:
    """Witness of the first monomial of degree <= degree where the operators differ."""
    for exps in monomials(left.n, degree):
        a = MultiPoly(left.n, left.on_monomial(exps))
        b = MultiPoly(right.n, right.on_monomial(exps))
        witness = a.first_difference(b)
        if witness is not None:
            witness["term"] = f"{label} on {format_exponents(exps)}: {witness['term']}"
            return witness
    return None


def operator_is_zero(label: str, op: ModelOperator, degree: int) -> Optional[dict]:
    return operator_difference(label, op, ModelOperator.scalar(op.n, 0), degree)


# === The model ===

class DunklModel:
    """
    Operator calculus of the q-Dirac-Dunkl model for one parameter vector mu.

    q = t^L with L a multiple of 4, so half-shifts T^{1/2} and the K-images
    q^{gamma_i/2} T_i^{1/2} stay on the lattice.
    """

    def __init__(self, lat: ExponentLattice):
        if lat.n < 1:
            raise ParameterError("the model needs at least one variable")
        self.lat = lat
        self.n = lat.n
        self.core = OspQCore.for_lattice(lat)
        self.tensors = BannaiItoTensors(self.core, self.n)
        q = lat.qpow
        self.qh = q(HALF)
        self.qmh = q(-HALF)
        self.d_inv = (q(1) - q(-1)).inverse()
        self._brackets: Dict[Tuple[int, int], FieldElem] = {}
        self._slot_cache: Dict[tuple, Optional[Tuple[int, FieldElem]]] = {}
        self._dx: Dict[Tuple[int, int], Tuple[ModelOperator, ModelOperator]] = {}
        self._gammas: Dict[Tuple[int, ...], ModelOperator] = {}

    def _check_index(self, i: int):
        if not 1 <= i <= self.n:
            raise ParameterError({"error": "variable index out of range", "i": i, "n": self.n})

    def poly(self, terms: Dict[Sequence[int], object]) -> MultiPoly:
        out: Image = {}
        for exps, c in terms.items():
            add_term(out, tuple(exps), c if isinstance(c, FieldElem) else FieldElem.const(c))
        return MultiPoly(self.n, out)

    def bracket(self, i: int, a: int) -> FieldElem:
        """[mu_i, a; q]."""
        key = (i, a)
        value = self._brackets.get(key)
        if value is None:
            value = self._brackets[key] = qbracket_mu(self.lat.mu_of(i), a, self.lat)
        return value

    # --- primitives ---

    def scalar(self, c) -> ModelOperator:
        return ModelOperator.scalar(self.n, c)

    def identity(self) -> ModelOperator:
        return self.scalar(1).named("1")

    def multiply(self, i: int) -> ModelOperator:
        self._check_index(i)

        def action(exps):
            e = list(exps)
            e[i - 1] += 1
            return {tuple(e): ONE}

        return ModelOperator(self.n, action, f"x{i}")

    def half_shift(self, i: int, c: int) -> ModelOperator:
        """T_{q,i}^{c/2}: x_i^a -> q^{ca/2} x_i^a."""
        self._check_index(i)
        qpow = self.lat.qpow
        return ModelOperator(self.n, lambda exps: {exps: qpow(Fraction(c * exps[i - 1], 2))}, f"T{i}^({c}/2)")

    def reflection(self, i: int) -> ModelOperator:
        self._check_index(i)
        return ModelOperator(self.n, lambda exps: {exps: ONE if exps[i - 1] % 2 == 0 else -ONE}, f"r{i}")

    def dunkl_coefficient(self, i: int, a: int) -> FieldElem:
        """Coefficient of D_i^q x_i^a from the difference-operator definition."""
        if a == 0:
            return ZERO
        q = self.lat.qpow
        mu = self.lat.mu_of(i)
        sign = 1 if a % 2 == 0 else -1
        return (q(mu) * (q(a) - sign) - q(-mu) * (q(-a) - sign)) * self.d_inv

    def dunkl(self, i: int) -> ModelOperator:
        self._check_index(i)

        def action(exps):
            a = exps[i - 1]
            if a == 0:
                return {}
            e = list(exps)
            e[i - 1] = a - 1
            return {tuple(e): self.dunkl_coefficient(i, a)}

        return ModelOperator(self.n, action, f"D{i}")

    def k_image(self, i: int, c: int) -> ModelOperator:
        """Image of K^c in slot i: q^{c gamma_i/2} T_i^{c/2}."""
        return self.half_shift(i, c).scale(self.lat.qpow(Fraction(c) * self.lat.gamma[i - 1] / 2))

    def interval_shift(self, i: int, j: int, c: int) -> ModelOperator:
        """T_{q,[i;j]}^c = prod_{k in [i;j]} T_{q,k}^c."""
        op = self.identity()
        for k in range(i, j + 1):
            op = self.half_shift(k, 2 * c) * op
        return op

    def interval_reflection(self, i: int, j: int) -> ModelOperator:
        op = self.identity()
        for k in range(i, j + 1):
            op = self.reflection(k) * op
        return op

    def total_shift(self, c: int) -> ModelOperator:
        return self.interval_shift(1, self.n, c)

    def apply_dunkl(self, i: int, p: MultiPoly) -> MultiPoly:
        return self.dunkl(i)(p)

    # --- D and X on intervals ---

    def r_factor(self, i: int, j: int, k: int) -> ModelOperator:
        """R_{[i;j],k}: K^-1 images left of k, K P images right of k up to j, reflections after j."""
        op = self.identity()
        for l in range(i, k):
            op = self.k_image(l, -1) * op
        for l in range(k + 1, j + 1):
            op = self.k_image(l, 1) * self.reflection(l) * op
        for l in range(j + 1, self.n + 1):
            op = self.reflection(l) * op
        return op.named(f"R[{i};{j}],{k}")

    def build_DX(self, i: int, j: int) -> Tuple[ModelOperator, ModelOperator]:
        SubsetSpec.interval(self.n, i, j)
        cached = self._dx.get((i, j))
        if cached is None:
            D = X = None
            for k in range(i, j + 1):
                R = self.r_factor(i, j, k)
                d_term, x_term = self.dunkl(k) * R, self.multiply(k) * R
                D = d_term if D is None else D + d_term
                X = x_term if X is None else X + x_term
            cached = self._dx[(i, j)] = (D.named(f"D[{i};{j}]"), X.named(f"X[{i};{j}]"))
        return cached

    def dirac(self, j: Optional[int] = None) -> ModelOperator:
        return self.build_DX(1, j or self.n)[0]

    def position(self, j: Optional[int] = None) -> ModelOperator:
        return self.build_DX(1, j or self.n)[1]

    def dirac_from_full(self, j: int) -> ModelOperator:
        """D_[j] recovered from D_[n] by removing the tail and undoing the K images."""
        if not 1 <= j <= self.n:
            raise ParameterError({"error": "j out of range", "j": j, "n": self.n})
        op = self.dirac()
        for i in range(j + 1, self.n + 1):
            op = op - self.dunkl(i) * self.r_factor(1, self.n, i)
        tail = self.identity()
        for m in range(j + 1, self.n + 1):
            tail = self.k_image(m, -1) * tail
        return op * tail

    # --- realization ---

    def _slot_action(self, i: int, mon, p: int) -> Optional[Tuple[int, FieldElem]]:
        """A_-^a A_+^b K^c P^e in slot i acting on x_i^p."""
        key = (i, mon, p)
        if key in self._slot_cache:
            return self._slot_cache[key]
        a, b, c, e = mon
        coeff = ONE
        if e % 2 and p % 2:
            coeff = -coeff
        if c:
            coeff = coeff * self.lat.qpow(Fraction(c) * (self.lat.gamma[i - 1] + p) / 2)
        p += b
        result: Optional[Tuple[int, FieldElem]] = None
        for _ in range(a):
            if p == 0:
                break
            coeff = coeff * self.bracket(i, p)
            p -= 1
        else:
            result = (p, coeff)
        self._slot_cache[key] = result
        return result

    def realize(self, x: TensorElement) -> ModelOperator:
        if x.arity != self.n:
            raise ArityError({"error": "realization needs one slot per variable", "arity": x.arity, "n": self.n})
        if any(alg != self.core.osp for alg in x.slots):
            raise DomainError({"error": "element is not finalized", "layout": x._layout_name()})
        terms = list(x.terms.items())

        def action(exps):
            out: Image = {}
            for key, coeff in terms:
                target = []
                c = coeff
                for i, (mon, p) in enumerate(zip(key, exps), start=1):
                    step = self._slot_action(i, mon, p)
                    if step is None:
                        break
                    target.append(step[0])
                    c = c * step[1]
                else:
                    add_term(out, tuple(target), c)
            return out

        return ModelOperator(self.n, action, "realized")

    # --- Gamma in the model ---

    def gamma_interval(self, i: int, j: int) -> ModelOperator:
        """Explicit x/D expression of Gamma_[i;j]."""
        SubsetSpec.interval(self.n, i, j)
        q = self.lat.qpow
        R = {k: self.r_factor(i, j, k) for k in range(i, j + 1)}
        total = self.scalar(0)
        for k in range(i, j + 1):
            for l in range(k + 1, j + 1):
                mixed = (self.multiply(k) * self.dunkl(l)).scale(self.qmh) - (self.multiply(l) * self.dunkl(k)).scale(self.qh)
                total = total + mixed * R[k] * R[l]
            mu = self.lat.mu_of(k)
            local = (
                self.reflection(k).scale(qnum(mu, self.lat))
                - self.half_shift(k, 2).scale(q(mu) * self.d_inv)
                + self.half_shift(k, -2).scale(q(-mu) * self.d_inv)
            )
            total = total + local * R[k] * R[k]
        g = self.lat.gamma_of(range(i, j + 1)) - HALF
        total = (
            total
            + self.interval_shift(i, j, 1).scale(q(g) * self.d_inv)
            - self.interval_shift(i, j, -1).scale(q(-g) * self.d_inv)
        )
        return (total * self.interval_reflection(i, j)).named(f"G[{i};{j}]")

    def gamma_model(self, A) -> ModelOperator:
        spec = as_subset(self.n, A)
        cached = self._gammas.get(spec.A)
        if cached is not None:
            return cached
        if spec.is_empty:
            op = self.scalar(-qnum(HALF, self.lat))
        elif len(spec) == 1:
            op = self.scalar(qnum(self.lat.mu_of(spec.lo), self.lat))
        elif spec.is_interval:
            op = self.gamma_interval(spec.lo, spec.hi)
        else:
            op = self._gamma_recursion(spec)
        op = op.named(f"G{spec.label()}")
        self._gammas[spec.A] = op
        return op

    def _gamma_recursion(self, spec: SubsetSpec) -> ModelOperator:
        """Holes through the q-anticommutator of two interval-rooted sets."""
        parts = spec.intervals()
        (i1, j1), (i2, j2) = parts[0], parts[1]
        B = SubsetSpec.interval(self.n, i1, i2 - 1)
        C = SubsetSpec.of(self.n, list(range(j1 + 1, j2 + 1)) + [a for i, j in parts[2:] for a in range(i, j + 1)])
        g = self.gamma_model
        kappa = self.qh + self.qmh
        return (
            (g(B) * g(C)).scale(self.qh)
            + (g(C) * g(B)).scale(self.qmh)
            - (g(B & C) * g(B | C) + g(B - C) * g(C - B)).scale(kappa)
        )

    def gamma_realized(self, A) -> ModelOperator:
        return self.realize(self.tensors.extend(A))

    # --- inner product ---

    def inner_product(self, p: MultiPoly, r: MultiPoly) -> FieldElem:
        """(p(D_1, .., D_n) r) at x = 0; conjugation acts trivially on Q(t)."""
        constant = (0,) * self.n
        total = ZERO
        for alpha, c in p.terms.items():
            image = r
            for i, a in enumerate(alpha, start=1):
                for _ in range(a):
                    image = self.apply_dunkl(i, image)
            total = total + c * image.coefficient(constant)
        return total

    def monomial_norm(self, alpha: Sequence[int]) -> FieldElem:
        """<x^alpha, x^alpha> = prod_i prod_{j <= alpha_i} [mu_i, j; q]."""
        value = ONE
        for i, a in enumerate(alpha, start=1):
            for j in range(1, a + 1):
                value = value * self.bracket(i, j)
        return value

    # --- checks ---

    def _params(self, **extra) -> dict:
        return {"n": self.n, "mu": [str(m) for m in self.lat.mu], **extra}

    def check_dunkl_action(self, degree: int) -> CheckReport:
        """Difference-operator coefficients against [mu_i, a; q] and their classical limit."""

        def body():
            for i in range(1, self.n + 1):
                mu = self.lat.mu_of(i)
                for a in range(0, degree + 1):
                    image = self.apply_dunkl(i, MultiPoly.variable(self.n, i, a))
                    expected = MultiPoly.variable(self.n, i, a - 1).scale(self.bracket(i, a)) if a else MultiPoly.zero(self.n)
                    witness = first_mismatch([(f"D{i} x{i}^{a}", image, expected)])
                    if witness:
                        return witness
                    classical = self.bracket(i, a).evaluate(1) if a else Fraction(0)
                    limit = a + mu * (1 - (-1) ** a) if a else Fraction(0)
                    witness = scalar_witness(f"q->1 D{i} x{i}^{a}", classical, limit)
                    if witness:
                        return witness
            return None

        return run_check("dunkl_model.dunkl_action", "q-Dunkl operator and its q -> 1 limit", self._params(d=degree), body)

    def check_dunkl_commute(self, degree: int) -> CheckReport:
        def body():
            for i in range(1, self.n + 1):
                for j in range(i + 1, self.n + 1):
                    witness = operator_is_zero(f"[D{i},D{j}]", commutator(self.dunkl(i), self.dunkl(j)), degree)
                    if witness:
                        return witness
            return None

        return run_check("dunkl_model.dunkl_commute", "q-Dunkl operators mutually commute", self._params(d=degree), body)

    def check_generators(self, degree: int) -> CheckReport:
        """Realized A_-^[i;j], A_+^[i;j] against D_[i;j], X_[i;j] for every interval."""

        def body():
            for i in range(1, self.n + 1):
                for j in range(i, self.n + 1):
                    a_plus, a_minus, _, _, _ = self.tensors.build_interval_generators(i, j)
                    D, X = self.build_DX(i, j)
                    witness = operator_difference(f"A-[{i};{j}]", self.realize(a_minus), D, degree) or operator_difference(
                        f"A+[{i};{j}]", self.realize(a_plus), X, degree
                    )
                    if witness:
                        return witness
            return None

        return run_check("dunkl_model.generators", "realization of the extended generators", self._params(d=degree), body)

    def check_smaller_sets(self, degree: int) -> CheckReport:
        def body():
            for j in range(1, self.n):
                witness = operator_difference(f"D[{j}]", self.dirac_from_full(j), self.dirac(j), degree)
                if witness:
                    return witness
            return None

        return run_check("dunkl_model.smaller_sets", "Dirac-Dunkl operators of initial segments", self._params(d=degree), body)

    def check_gamma_constructions(self, A, degree: int) -> CheckReport:
        """gamma_model against the realized tensor extension (and the generator form on intervals)."""
        spec = as_subset(self.n, A)

        def body():
            model = self.gamma_model(spec)
            witness = operator_difference(f"G{spec.label()}", model, self.gamma_realized(spec), degree)
            if witness is None and spec.is_interval:
                via_generators = self.realize(self.tensors.gamma_from_interval_generators(spec.lo, spec.hi))
                witness = operator_difference(f"G{spec.label()} generators", model, via_generators, degree)
            if witness is None and not model.preserves_degree(degree):
                witness = {"term": f"G{spec.label()} degree", "left": "not homogeneous", "right": "homogeneous"}
            return witness

        return run_check("dunkl_model.gamma", "Casimirs realized in the model", self._params(A=list(spec.A), d=degree), body)

    def check_symmetry(self, A, degree: int) -> CheckReport:
        spec = as_subset(self.n, A)

        def body():
            gamma = self.gamma_realized(spec)
            tops = [self.n] + ([spec.hi] if spec.A and spec.hi < self.n else [])
            for j in tops:
                D, X = self.build_DX(1, j)
                witness = operator_is_zero(f"[D[{j}],G{spec.label()}]", commutator(D, gamma), degree) or operator_is_zero(
                    f"[X[{j}],G{spec.label()}]", commutator(X, gamma), degree
                )
                if witness:
                    return witness
            return None

        return run_check("dunkl_model.symmetry", "joint symmetries of the Dirac-Dunkl pair", self._params(A=list(spec.A), d=degree), body)

    def check_self_adjoint(self, i: int, j: int, degree: int) -> CheckReport:
        def body():
            gamma = self.gamma_model(SubsetSpec.interval(self.n, i, j))
            basis = monomials(self.n, degree)
            for alpha in basis:
                left_poly = gamma(MultiPoly.monomial(self.n, alpha))
                for beta in basis:
                    if sum(alpha) != sum(beta):
                        continue
                    x_beta = MultiPoly.monomial(self.n, beta)
                    left = self.inner_product(left_poly, x_beta)
                    right = self.inner_product(MultiPoly.monomial(self.n, alpha), gamma(x_beta))
                    witness = scalar_witness(f"<G x^{format_exponents(alpha)}, x^{format_exponents(beta)}>", left, right)
                    if witness:
                        return witness
            return None

        return run_check("dunkl_model.self_adjoint", "self-adjointness of consecutive Casimirs", self._params(i=i, j=j, d=degree), body)

    def check_adjoint_primitives(self, degree: int) -> CheckReport:
        """<x_i p, r> = <p, D_i r> and the closed-form monomial norms."""

        def body():
            basis = monomials(self.n, degree)
            for alpha in basis:
                x_alpha = MultiPoly.monomial(self.n, alpha)
                witness = scalar_witness(
                    f"<x^{format_exponents(alpha)}, x^{format_exponents(alpha)}>",
                    self.inner_product(x_alpha, x_alpha),
                    self.monomial_norm(alpha),
                )
                if witness:
                    return witness
                for beta in basis:
                    x_beta = MultiPoly.monomial(self.n, beta)
                    for i in range(1, self.n + 1):
                        left = self.inner_product(self.multiply(i)(x_alpha), x_beta)
                        right = self.inner_product(x_alpha, self.apply_dunkl(i, x_beta))
                        witness = scalar_witness(f"<x{i} x^{format_exponents(alpha)}, x^{format_exponents(beta)}>", left, right)
                        if witness:
                            return witness
            return None

        return run_check("dunkl_model.adjoints", "adjoints of x_i and D_i", self._params(d=degree), body)

    def check_positivity(self, degree: int, points: Iterable = POSITIVITY_POINTS) -> CheckReport:
        points = tuple(Fraction(t0) for t0 in points)

        def body():
            for alpha in monomials(self.n, degree):
                for t0 in points:
                    value = self.monomial_norm(alpha).evaluate(t0)
                    if value <= 0:
                        return {"term": f"<x^{format_exponents(alpha)}, x^{format_exponents(alpha)}> at t={t0}", "left": str(value), "right": "> 0"}
            return None

        return run_check("dunkl_model.positivity", "inner product positivity for real q > 0", self._params(d=degree), body)

    def check_realized_relations(self, i: int, j: int, degree: int) -> CheckReport:
        def body():
            for label, lhs, rhs in self.tensors.interval_generator_relations(i, j):
                witness = operator_difference(label, self.realize(lhs), self.realize(rhs), degree)
                if witness:
                    return witness
            return None

        return run_check("dunkl_model.realized_relations", "osp relations for the model generators", self._params(i=i, j=j, d=degree), body)

    def commutation_lemma_sides(self, power: int) -> Tuple[ModelOperator, ModelOperator]:
        """[D, X^power] (power even) or {D, X^power} (power odd) and its shift form."""
        if power < 0:
            raise ParameterError({"error": "power must be non-negative", "power": power})
        q = self.lat.qpow
        D, X = self.build_DX(1, self.n)
        g = self.lat.gamma_of(range(1, self.n + 1)) - HALF
        x_power = X ** power
        if power % 2 == 0:
            if power == 0:
                raise ParameterError("the commutator form needs a positive even power")
            lhs = commutator(D, x_power)
            up, down = q(power) - 1, q(-power) - 1
        else:
            lhs = anticommutator(D, x_power)
            up, down = q(power) + 1, q(-power) + 1
        rhs = (X ** (power - 1)) * (
            self.total_shift(1).scale(q(g) * up * self.d_inv) - self.total_shift(-1).scale(q(-g) * down * self.d_inv)
        )
        return lhs, rhs

    def check_commutation_lemma(self, power: int, degree: int) -> CheckReport:
        def body():
            lhs, rhs = self.commutation_lemma_sides(power)
            return operator_difference(f"D with X^{power}", lhs, rhs, degree)

        return run_check("dunkl_model.commutation_lemma", "commutation of D with powers of X", self._params(power=power, d=degree), body)


def build_model(mu: Iterable) -> DunklModel:
    return DunklModel(lattice_build(mu))
