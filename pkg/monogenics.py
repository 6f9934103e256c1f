"""
q-Dunkl monogenics: CK extension, Fischer decomposition, the psi_j basis of
M_k and the action of the Casimirs on it.
"""
import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from checks import first_mismatch, run_check, scalar_witness
from dunkl_model import DunklModel, ModelOperator, MultiPoly, format_exponents, monomials
from errors import DomainError, ParameterError, PoleError
from schemas import CheckReport, WalkReport, WalkStep
from scalars import ONE, ZERO, FieldElem, qnum

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


# === Index vectors ===

@dataclass(frozen=True, order=True)
class IndexVector:
    """j = (j_1, .., j_{n-1}) labelling psi_j."""
    j: Tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "j", tuple(int(a) for a in self.j))

    @classmethod
    def of(cls, *entries: int) -> "IndexVector":
        return cls(tuple(entries))

    @property
    def k(self) -> int:
        return sum(self.j)

    def __len__(self):
        return len(self.j)

    def __getitem__(self, pos: int) -> int:
        """1-based entry j_pos."""
        return self.j[pos - 1]

    def is_allowable(self, k: Optional[int] = None) -> bool:
        return all(a >= 0 for a in self.j) and (k is None or self.k == k)

    def partial(self, l: int) -> int:
        """|j_l| = j_1 + .. + j_l."""
        return sum(self.j[:max(l, 0)])

    def hop(self, m: int, direction: int = 1) -> "IndexVector":
        """j + direction * h_m, with h_m = +1 at position m-1 and -1 at position m."""
        if not 2 <= m <= len(self.j):
            raise ParameterError({"error": "m out of range", "m": m, "length": len(self.j)})
        out = list(self.j)
        out[m - 2] += direction
        out[m - 1] -= direction
        return IndexVector(tuple(out))

    def as_list(self) -> List[int]:
        return list(self.j)

    def label(self) -> str:
        return "(" + ",".join(str(a) for a in self.j) + ")"


def allowable_vectors(n: int, k: int) -> List[IndexVector]:
    """All k-allowable j in N^{n-1}, lexicographically descending."""
    if n < 2 or k < 0:
        raise ParameterError({"error": "need n >= 2 and k >= 0", "n": n, "k": k})
    out = [IndexVector(e) for e in itertools.product(range(k + 1), repeat=n - 1) if sum(e) == k]
    return sorted(out, reverse=True)


@dataclass(frozen=True)
class BasisElement:
    index: IndexVector
    poly: MultiPoly = field(compare=False)


# === Monogenics ===

class Monogenics:
    """
    Null solutions of D_[n] built from one DunklModel.

    Fischer decompositions, basis elements and Casimir images are cached;
    all of them are exact and deterministic, so concurrent readers only ever
    see identical values.
    """

    def __init__(self, model: DunklModel):
        if model.n < 2:
            raise ParameterError({"error": "monogenics need n >= 2", "n": model.n})
        self.model = model
        self.lat = model.lat
        self.n = model.n
        q = self.lat.qpow
        self.qh = q(HALF)
        self.qmh = q(-HALF)
        self.kappa = self.qh + self.qmh
        self.d_inv = (q(1) - q(-1)).inverse()
        self._fischer: Dict[tuple, List[Tuple[int, MultiPoly]]] = {}
        self._basis: Dict[int, List[BasisElement]] = {}
        self._x_powers: Dict[Tuple[int, int], ModelOperator] = {}
        self._casimir_ops: Dict[int, ModelOperator] = {}

    # --- helpers ---

    def _x_power(self, dim: int, power: int) -> ModelOperator:
        key = (dim, power)
        op = self._x_powers.get(key)
        if op is None:
            op = self._x_powers[key] = self.model.position(dim) ** power
        return op

    def _require(self, p: MultiPoly, k: int, dim: int, what: str):
        if p.n != self.n:
            raise DomainError({"error": f"{what}: wrong number of variables", "n": p.n})
        if not p.is_homogeneous(k):
            raise DomainError({"error": f"{what}: input is not homogeneous", "k": k, "degrees": sorted(p.degrees())})
        if p.last_variable() > dim:
            raise DomainError({"error": f"{what}: input uses variables beyond x{dim}", "last": p.last_variable()})

    def is_monogenic(self, p: MultiPoly, dim: Optional[int] = None) -> bool:
        return self.model.dirac(dim or self.n)(p).is_zero

    def gamma_prefix(self, dim: int) -> Fraction:
        return self.lat.gamma_of(range(1, dim + 1))

    # --- CK extension ---

    def ck_extend(self, j: int, p: MultiPoly, k: int) -> MultiPoly:
        """CK_{x_j}: P_k(R^{j-1}) -> M_k(R^j)."""
        if not 2 <= j <= self.n:
            raise ParameterError({"error": "CK extension needs 2 <= j <= n", "j": j, "n": self.n})
        self._require(p, k, j - 1, "ck_extend")
        q = self.lat.qpow
        D = self.model.dirac(j - 1)
        g = self.gamma_prefix(j)
        result, current, denominator = p, p, ONE
        for alpha in range(1, k + 1):
            current = D(current)
            if current.is_zero:
                break
            denominator = denominator * self.model.bracket(j, alpha)
            sign = -1 if (alpha * (alpha + 1) // 2) % 2 else 1
            coeff = q(Fraction(alpha) * (g + k - 1) / 2) * sign / denominator
            result = result + MultiPoly.variable(self.n, j, alpha) * current.scale(coeff)
        return result

    # --- Fischer decomposition ---

    def alpha_coefficient(self, K: int, m: int, dim: Optional[int] = None) -> FieldElem:
        """Scalar with D X^m chi = alpha X^{m-1} chi for chi in M_{K-m}."""
        if m < 1:
            raise ParameterError({"error": "m must be positive", "m": m})
        q = self.lat.qpow
        e = self.gamma_prefix(dim or self.n) + K - 1 - m + HALF
        sign = 1 if m % 2 == 0 else -1
        return (q(e) * (q(m) - sign) - q(-e) * (q(-m) - sign)) * self.d_inv

    def fischer_split(self, psi: MultiPoly, k: int, dim: Optional[int] = None) -> Tuple[MultiPoly, MultiPoly]:
        """psi = monogenic + X * remainder with monogenic in M_k."""
        dim = dim or self.n
        if k < 1:
            raise ParameterError({"error": "fischer_split needs k >= 1", "k": k})
        if psi.is_zero:
            raise DomainError("fischer_split of the zero polynomial")
        self._require(psi, k, dim, "fischer_split")
        return self._split(psi, k, dim)

    def _split(self, psi: MultiPoly, k: int, dim: int) -> Tuple[MultiPoly, MultiPoly]:
        D = self.model.dirac(dim)
        remainder = MultiPoly.zero(self.n)
        for i, xi in self._decompose(D(psi), k - 1, dim):
            if not xi.is_zero:
                remainder = remainder + self._x_power(dim, i)(xi).scale(self.alpha_coefficient(k, i + 1, dim).inverse())
        monogenic = psi - self._x_power(dim, 1)(remainder)
        return monogenic, remainder

    def fischer_decompose(self, p: MultiPoly, k: int, dim: Optional[int] = None) -> List[Tuple[int, MultiPoly]]:
        """[(i, phi_i)] with p = sum X^i phi_i and phi_i in M_{k-i}."""
        dim = dim or self.n
        if k < 0:
            raise ParameterError({"error": "k must be non-negative", "k": k})
        self._require(p, k, dim, "fischer_decompose")
        return self._decompose(p, k, dim)

    def _decompose(self, p: MultiPoly, k: int, dim: int) -> List[Tuple[int, MultiPoly]]:
        key = (dim, k, p.cache_key())
        cached = self._fischer.get(key)
        if cached is not None:
            return cached
        if p.is_zero:
            parts = [(i, MultiPoly.zero(self.n)) for i in range(k + 1)]
        elif k == 0:
            parts = [(0, p)]
        else:
            monogenic, remainder = self._split(p, k, dim)
            parts = [(0, monogenic)] + [(i + 1, phi) for i, phi in self._decompose(remainder, k - 1, dim)]
        self._fischer[key] = parts
        return parts

    def reassemble(self, parts: Sequence[Tuple[int, MultiPoly]], dim: Optional[int] = None) -> MultiPoly:
        dim = dim or self.n
        total = MultiPoly.zero(self.n)
        for i, phi in parts:
            total = total + self._x_power(dim, i)(phi)
        return total

    # --- basis ---

    def tower(self, j: IndexVector) -> MultiPoly:
        """CK_n[X_[n-1]^{j_{n-1}} CK_{n-1}[.. X_[2]^{j_2} CK_2(x_1^{j_1})]]."""
        if len(j) != self.n - 1 or not j.is_allowable():
            raise ParameterError({"error": "index vector must be non-negative of length n-1", "j": j.as_list()})
        psi = MultiPoly.variable(self.n, 1, j[1])
        degree = j[1]
        for l in range(2, self.n + 1):
            psi = self.ck_extend(l, psi, degree)
            if l < self.n:
                psi = self._x_power(l, j[l])(psi)
                degree += j[l]
        return psi

    def basis_element(self, j: IndexVector) -> BasisElement:
        for element in self.build_basis(j.k):
            if element.index == j:
                return element
        raise ParameterError({"error": "index vector is not allowable", "j": j.as_list()})

    def psi(self, j: IndexVector) -> MultiPoly:
        return self.basis_element(j).poly

    def build_basis(self, k: int) -> List[BasisElement]:
        cached = self._basis.get(k)
        if cached is not None:
            return cached
        basis = []
        for j in allowable_vectors(self.n, k):
            poly = self.tower(j)
            if not poly.is_homogeneous(k) or not self.is_monogenic(poly):
                raise DomainError({"error": "basis element is not a monogenic", "j": j.as_list()})
            basis.append(BasisElement(j, poly))
        logger.debug("basis for M_%d at n=%d: %d elements", k, self.n, len(basis))
        self._basis[k] = basis
        return basis

    def dimension(self, k: int) -> int:
        return comb(k + self.n - 2, self.n - 2)

    def expand_in_basis(self, Psi: MultiPoly, k: int) -> Dict[IndexVector, FieldElem]:
        """Coordinates of Psi in M_k through restriction and Fischer decomposition."""
        self._require(Psi, k, self.n, "expand_in_basis")
        if not self.is_monogenic(Psi):
            raise DomainError("expand_in_basis needs a monogenic input")
        return {IndexVector(key): c for key, c in self._expand(Psi, self.n, k).items()}

    def _expand(self, P: MultiPoly, dim: int, k: int) -> Dict[Tuple[int, ...], FieldElem]:
        restricted = P.restrict(dim)
        out: Dict[Tuple[int, ...], FieldElem] = {}
        if dim == 2:
            c = restricted.coefficient((k,) + (0,) * (self.n - 1))
            if not c.is_zero:
                out[(k,)] = c
            return out
        for i, phi in self._decompose(restricted, k, dim - 1):
            if phi.is_zero:
                continue
            for prefix, c in self._expand(phi, dim - 1, k - i).items():
                key = prefix + (i,)
                total = out.get(key, ZERO) + c
                if total.is_zero:
                    out.pop(key, None)
                else:
                    out[key] = total
        return out

    # --- eigenvalues ---

    def eigenvalue(self, ell: int, j: IndexVector) -> FieldElem:
        """lambda_ell(j) = (-1)^{|j_{ell-1}|} [|j_{ell-1}| + gamma_[ell] - 1/2]_q."""
        if not 1 <= ell <= self.n:
            raise ParameterError({"error": "ell out of range", "ell": ell, "n": self.n})
        s = j.partial(ell - 1)
        value = qnum(s + self.gamma_prefix(ell) - HALF, self.lat)
        return -value if s % 2 else value

    def gamma_op(self, items) -> ModelOperator:
        return self.model.gamma_model(items)

    def pair_gamma(self, m: int) -> ModelOperator:
        return self.gamma_op((m, m + 1))

    def _check_m(self, m: int):
        if not 2 <= m <= self.n - 1:
            raise ParameterError({"error": "m out of range", "m": m, "n": self.n})

    def _check_index(self, j: IndexVector):
        if len(j) != self.n - 1 or not j.is_allowable():
            raise ParameterError({"error": "index vector is not allowable", "j": j.as_list(), "n": self.n})

    # --- tridiagonal action ---

    def tridiag_extract(self, m: int, j: IndexVector) -> Tuple[FieldElem, FieldElem, FieldElem]:
        """(B_j, A_j, C_j) read off from Gamma_{m,m+1} psi_j."""
        self._check_m(m)
        self._check_index(j)
        coords = self.expand_in_basis(self.pair_gamma(m)(self.psi(j)), j.k)
        return coords.get(j.hop(m, -1), ZERO), coords.get(j, ZERO), coords.get(j.hop(m, 1), ZERO)

    def tridiagonal_support(self, m: int, j: IndexVector) -> Dict[IndexVector, FieldElem]:
        self._check_m(m)
        self._check_index(j)
        return self.expand_in_basis(self.pair_gamma(m)(self.psi(j)), j.k)

    def _coefficients(self, m: int, j: IndexVector):
        """Eigenvalues and mu-brackets around m for index j."""
        lam = {ell: self.eigenvalue(ell, j) for ell in (m - 1, m, m + 1)}
        mu_m = qnum(self.lat.mu_of(m), self.lat)
        mu_m1 = qnum(self.lat.mu_of(m + 1), self.lat)
        return lam, mu_m, mu_m1

    def alpha_m(self, m: int, j: IndexVector) -> FieldElem:
        lam, mu_m, mu_m1 = self._coefficients(m, j)
        s = self.kappa
        return s * (lam[m - 1] * lam[m + 1] + mu_m * mu_m1) + s * s * (mu_m * lam[m + 1] + mu_m1 * lam[m - 1]) * lam[m]

    def closed_form_A(self, m: int, j: IndexVector) -> FieldElem:
        q = self.lat.qpow
        lam = self.eigenvalue(m, j)
        denominator = (2 + q(1) + q(-1)) * lam * lam - 1
        if denominator.is_zero:
            raise PoleError({"error": "degenerate A_j denominator", "m": m, "j": j.as_list()})
        return self.alpha_m(m, j) / denominator

    def abcd(self, m: int, j: IndexVector) -> Tuple[FieldElem, FieldElem, FieldElem, FieldElem]:
        q = self.lat.qpow
        g = self.lat.gamma
        gm, gm1 = g[m - 1], g[m]
        pair = j[m - 1] + j[m]
        sign = -1 if (pair + 1) % 2 else 1
        a = q(gm + gm1 - HALF)
        b = q(-(pair + gm + gm1 - HALF)) * sign
        c = q(j.partial(m - 2) + j.partial(m) + self.gamma_prefix(m - 1) + self.gamma_prefix(m + 1) - HALF) * sign
        d = q(gm - gm1 + HALF)
        return a, b, c, d

    def _neg_q(self, e: int) -> FieldElem:
        value = self.lat.qpow(e)
        return -value if e % 2 else value

    def s_factor(self, m: int, j: IndexVector) -> FieldElem:
        a, b, c, d = self.abcd(m, j)
        J = j[m - 1]
        w = a * b * c * d
        nq = self._neg_q
        q = self.lat.qpow
        num = (1 + nq(J) * a * b) * (1 - nq(J) * a * c) * (1 - nq(J) * a * d) * (1 - nq(J - 1) * w)
        den = a * (1 + q(2 * J - 1) * w) * (1 - q(2 * J) * w)
        return -(num / den)

    def t_factor(self, m: int, j: IndexVector) -> FieldElem:
        a, b, c, d = self.abcd(m, j)
        J = j[m - 1]
        w = a * b * c * d
        nq = self._neg_q
        q = self.lat.qpow
        num = a * (1 - nq(J)) * (1 - nq(J - 1) * b * c) * (1 - nq(J - 1) * b * d) * (1 + nq(J - 1) * c * d)
        den = (1 - q(2 * J - 2) * w) * (1 + q(2 * J - 1) * w)
        return num / den

    def closed_form_product(self, m: int, j: IndexVector) -> FieldElem:
        """B_j C_{j-h} = S_{j-h} T_j / (q - q^-1)^2."""
        q = self.lat.qpow
        d = q(1) - q(-1)
        return self.s_factor(m, j.hop(m, -1)) * self.t_factor(m, j) / (d * d)

    def casimir_operator(self, m: int) -> ModelOperator:
        op = self._casimir_ops.get(m)
        if op is None:
            defining, _ = self.model.tensors.casimir_Cm(m)
            op = self._casimir_ops[m] = self.model.realize(defining).named(f"C{m}")
        return op

    def casimir_eigenvalue(self, m: int, j: IndexVector) -> FieldElem:
        q = self.lat.qpow
        lam, mu_m, mu_m1 = self._coefficients(m, j)
        d = q(1) - q(-1)
        return (
            lam[m - 1] * lam[m - 1] + lam[m + 1] * lam[m + 1] + mu_m * mu_m + mu_m1 * mu_m1
            - d * d * mu_m * mu_m1 * lam[m - 1] * lam[m + 1]
            - q(1) / ((1 + q(1)) * (1 + q(1)))
        )

    def _e_term(self, m: int, j: IndexVector, A: FieldElem) -> FieldElem:
        q = self.lat.qpow
        lam, mu_m, mu_m1 = self._coefficients(m, j)
        s = self.kappa
        y = A * lam[m] - mu_m * lam[m + 1] - mu_m1 * lam[m - 1]
        c1 = q(-HALF) - q(Fraction(3, 2))
        c2 = q(HALF) - q(Fraction(-3, 2))
        return (
            q(1) * A * A
            + q(-1) * s * s * y * y
            + q(1) * lam[m] * lam[m]
            - c1 * (mu_m * mu_m1 + lam[m - 1] * lam[m + 1]) * A
            - c1 * (mu_m * lam[m - 1] + mu_m1 * lam[m + 1]) * lam[m]
            - c2 * s * y * (mu_m1 * lam[m - 1] + mu_m * lam[m + 1] + q(1) * lam[m] * A)
        )

    def _neighbour_product(self, m: int, j: IndexVector, direction: int) -> FieldElem:
        """B_j C_{j-h} (direction -1) or B_{j+h} C_j (direction +1), extracted."""
        other = j.hop(m, direction)
        if not other.is_allowable(j.k):
            return ZERO
        if direction < 0:
            return self.tridiag_extract(m, j)[0] * self.tridiag_extract(m, other)[2]
        return self.tridiag_extract(m, other)[0] * self.tridiag_extract(m, j)[2]

    def closed_form_sides(self, m: int, j: IndexVector) -> List[Tuple[str, FieldElem, FieldElem]]:
        """Scalar identities tying the extracted coefficients to their closed forms."""
        q = self.lat.qpow
        B, A, C = self.tridiag_extract(m, j)
        lam, mu_m, mu_m1 = self._coefficients(m, j)
        s = self.kappa
        up, down = j.hop(m, 1), j.hop(m, -1)
        lam_up, lam_down = self.eigenvalue(m, up), self.eigenvalue(m, down)
        below = self._neighbour_product(m, j, -1)
        above = self._neighbour_product(m, j, 1)

        first_lhs = (2 * lam[m] + (q(1) + q(-1)) * lam_up) * above + (2 * lam[m] + (q(1) + q(-1)) * lam_down) * below
        first_rhs = (
            lam[m]
            + s * (mu_m * lam[m - 1] + mu_m1 * lam[m + 1])
            + s * s * (mu_m * lam[m + 1] + mu_m1 * lam[m - 1]) * A
            - (2 + q(1) + q(-1)) * lam[m] * A * A
        )
        e = j.partial(m - 1) + self.gamma_prefix(m)
        second_lhs = (q(2 * e) + q(-1)) * above + (q(-2 * e + 2) + q(-1)) * below
        second_rhs = self.casimir_eigenvalue(m, j) - self._e_term(m, j, A)
        return [
            ("B_j C_{j-h}", below, self.closed_form_product(m, j)),
            ("A_j", A, self.closed_form_A(m, j)),
            ("first recurrence", first_lhs, first_rhs),
            ("second recurrence", second_lhs, second_rhs),
        ]

    def gamma_prime_sides(self, m: int, j: IndexVector) -> Tuple[MultiPoly, MultiPoly]:
        """Gamma_{[1;m-1] + {m+1}} psi_j against its three-term form."""
        B, A, C = self.tridiag_extract(m, j)
        lam, mu_m, mu_m1 = self._coefficients(m, j)
        qh, qmh = self.qh, self.qmh
        op = self.gamma_op(list(range(1, m)) + [m + 1])
        lhs = op(self.psi(j))
        rhs = self.psi(j).scale(self.kappa * (A * lam[m] - mu_m * lam[m + 1] - mu_m1 * lam[m - 1]))
        down, up = j.hop(m, -1), j.hop(m, 1)
        if down.is_allowable(j.k):
            rhs = rhs + self.psi(down).scale((qh * self.eigenvalue(m, down) + qmh * lam[m]) * B)
        if up.is_allowable(j.k):
            rhs = rhs + self.psi(up).scale((qh * self.eigenvalue(m, up) + qmh * lam[m]) * C)
        return lhs, rhs

    # --- projectors and the walk ---

    def projector(self, m: int, j: IndexVector, direction: int) -> ModelOperator:
        G = self.gamma_op(range(1, m + 1))
        other = self.eigenvalue(m, j.hop(m, -direction))
        return (G - self.eigenvalue(m, j)) * (G - other)

    def projector_apply(self, m: int, j: IndexVector, direction: int, psi: MultiPoly) -> MultiPoly:
        self._check_m(m)
        self._check_index(j)
        if direction not in (1, -1):
            raise ParameterError({"error": "direction must be +1 or -1", "direction": direction})
        target = j.hop(m, direction)
        if not target.is_allowable(j.k):
            raise DomainError({"error": "target index is not allowable", "j": j.as_list(), "target": target.as_list()})
        return self.projector(m, j, direction)(self.pair_gamma(m)(psi))

    def projector_scalar(self, m: int, j: IndexVector, direction: int) -> FieldElem:
        """beta_m(j-h) or gamma_m(j+h) from the extracted B_j, C_j."""
        B, _, C = self.tridiag_extract(m, j)
        lam = self.eigenvalue(m, j)
        target = self.eigenvalue(m, j.hop(m, direction))
        far = self.eigenvalue(m, j.hop(m, -direction))
        return (target - lam) * (target - far) * (B if direction < 0 else C)

    def _walk_route(self, start: IndexVector, end: IndexVector) -> List[Tuple[int, int]]:
        """(m, direction) steps fixing j_1, j_2, .. in turn."""
        current = list(start.j)
        steps = []
        for pos in range(self.n - 2):
            while current[pos] > end.j[pos]:
                steps.append((pos + 2, -1))
                current[pos] -= 1
                current[pos + 1] += 1
            while current[pos] < end.j[pos]:
                # pull one unit down from the nearest nonempty later slot
                src = next(r for r in range(pos + 1, self.n - 1) if current[r] > 0)
                for r in range(src, pos, -1):
                    steps.append((r + 1, 1))
                    current[r] -= 1
                    current[r - 1] += 1
        return steps

    def irreducibility_walk(self, j_start: IndexVector, j_end: IndexVector) -> WalkReport:
        self._check_index(j_start)
        self._check_index(j_end)
        if j_start.k != j_end.k:
            raise ParameterError({"error": "indices have different degrees", "start": j_start.as_list(), "end": j_end.as_list()})
        k = j_start.k
        current, psi, total = j_start, self.psi(j_start), ONE
        steps: List[WalkStep] = []
        nonzero = True
        for m, direction in self._walk_route(j_start, j_end):
            target = current.hop(m, direction)
            image = self.projector_apply(m, current, direction, psi)
            coords = self.expand_in_basis(image, k)
            factor = coords.get(target, ZERO)
            if set(coords) - {target} or factor.is_zero:
                logger.warning("walk step %s -> %s left the target line", current.label(), target.label())
                nonzero = False
            steps.append(WalkStep(m=m, direction=direction, source=current.as_list(), target=target.as_list(), scalar=str(factor)))
            total = total * factor
            if not nonzero:
                break
            current, psi = target, self.psi(target)
        return WalkReport(start=j_start.as_list(), end=j_end.as_list(), steps=steps, scalar=str(total), nonzero=nonzero and not total.is_zero)

    # --- checks ---

    def _params(self, **extra) -> dict:
        return {"n": self.n, "mu": [str(m) for m in self.lat.mu], **extra}

    def check_ck(self, j: int, degree: int) -> CheckReport:
        """CK_{x_j} lands in M_k(R^j) and restriction at x_j = 0 inverts it."""

        def body():
            D = self.model.dirac(j)
            for k in range(degree + 1):
                for exps in monomials(j - 1, k, exact=True):
                    p = MultiPoly.monomial(self.n, tuple(exps) + (0,) * (self.n - j + 1))
                    image = self.ck_extend(j, p, k)
                    label = f"CK{j} {format_exponents(exps)}"
                    witness = first_mismatch([
                        (f"{label} restricted", image.restrict(j), p),
                        (f"D[{j}] {label}", D(image), MultiPoly.zero(self.n)),
                        (f"{label} again", self.ck_extend(j, image.restrict(j), k), image),
                    ])
                    if witness:
                        return witness
            return None

        return run_check("monogenics.ck", "CK isomorphism", self._params(j=j, d=degree), body)

    def check_fischer(self, k: int) -> CheckReport:
        def body():
            D = self.model.dirac()
            for exps in monomials(self.n, k, exact=True):
                p = MultiPoly.monomial(self.n, exps)
                parts = self.fischer_decompose(p, k)
                label = format_exponents(exps)
                witness = first_mismatch([(f"reassembly {label}", self.reassemble(parts), p)])
                if witness:
                    return witness
                for i, phi in parts:
                    if not phi.is_homogeneous(k - i):
                        return {"term": f"{label} part {i}", "left": "inhomogeneous", "right": f"degree {k - i}"}
                    witness = first_mismatch([(f"D phi_{i} of {label}", D(phi), MultiPoly.zero(self.n))])
                    if witness:
                        return witness
                    if i == 0 or phi.is_zero:
                        continue
                    again = self.fischer_decompose(phi, k - i)
                    witness = first_mismatch([(f"monogenic part {i} of {label} re-split", again[0][1], phi)])
                    if witness:
                        return witness
            return None

        return run_check("monogenics.fischer", "Fischer decomposition", self._params(k=k), body)

    def check_lowering(self, k: int, max_power: int = 2) -> CheckReport:
        """D X^m chi = alpha_{k+m,m} X^{m-1} chi on the basis of M_k."""

        def body():
            D = self.model.dirac()
            for element in self.build_basis(k):
                for m in range(1, max_power + 1):
                    lhs = D(self._x_power(self.n, m)(element.poly))
                    rhs = self._x_power(self.n, m - 1)(element.poly).scale(self.alpha_coefficient(k + m, m))
                    witness = first_mismatch([(f"D X^{m} psi{element.index.label()}", lhs, rhs)])
                    if witness:
                        return witness
            return None

        return run_check("monogenics.lowering", "D on powers of X applied to monogenics", self._params(k=k), body)

    def check_basis(self, k: int) -> CheckReport:
        def body():
            basis = self.build_basis(k)
            witness = scalar_witness("dim M_k", len(basis), self.dimension(k))
            if witness:
                return witness
            for element in basis:
                coords = self.expand_in_basis(element.poly, k)
                if coords != {element.index: ONE}:
                    return {"term": f"expand psi{element.index.label()}", "left": str({v.label(): str(c) for v, c in coords.items()}), "right": "unit vector"}
            return None

        return run_check("monogenics.basis", "basis of M_k from the CK tower", self._params(k=k), body)

    def eigen_check(self, ell: int, k: int) -> CheckReport:
        def body():
            G = self.gamma_op(range(1, ell + 1))
            for element in self.build_basis(k):
                lam = self.eigenvalue(ell, element.index)
                witness = first_mismatch([(f"G[{ell}] psi{element.index.label()}", G(element.poly), element.poly.scale(lam))])
                if witness:
                    return witness
            return None

        return run_check("monogenics.eigen", "spherical q-Dirac-Dunkl equation", self._params(ell=ell, k=k), body)

    def check_separation(self, k: int) -> CheckReport:
        def body():
            seen: Dict[tuple, IndexVector] = {}
            for j in allowable_vectors(self.n, k):
                key = tuple(self.eigenvalue(ell, j) for ell in range(2, self.n))
                if key in seen:
                    return {"term": "eigenvalue tuple", "left": seen[key].label(), "right": j.label()}
                seen[key] = j
            return None

        return run_check("monogenics.separation", "eigenvalues determine the index vector", self._params(k=k), body)

    def check_tridiagonal_support(self, m: int, k: int) -> CheckReport:
        def body():
            for j in allowable_vectors(self.n, k):
                allowed = {j, j.hop(m, 1), j.hop(m, -1)}
                extra = set(self.tridiagonal_support(m, j)) - allowed
                if extra:
                    return {"term": f"G{{{m},{m + 1}}} psi{j.label()}", "left": ",".join(v.label() for v in sorted(extra)), "right": "j, j+h, j-h"}
                B, _, C = self.tridiag_extract(m, j)
                for label, coeff, other in (("B", B, j.hop(m, -1)), ("C", C, j.hop(m, 1))):
                    if coeff.is_zero == other.is_allowable(k):
                        return {"term": f"{label}_{j.label()}", "left": str(coeff), "right": "nonzero iff target allowable"}
            return None

        return run_check("monogenics.tridiagonal", "three-term action of Gamma_{m,m+1}", self._params(m=m, k=k), body)

    def closed_form_check(self, m: int, j: IndexVector) -> CheckReport:
        self._check_m(m)
        self._check_index(j)
        if not j.hop(m, -1).is_allowable(j.k):
            raise ParameterError({"error": "j - h_m is not allowable", "j": j.as_list(), "m": m})

        def body():
            try:
                sides = self.closed_form_sides(m, j)
            except PoleError as exc:
                return {"term": "degenerate denominator", "left": str(exc.detail), "right": "nonzero"}
            for label, left, right in sides:
                witness = scalar_witness(label, left, right)
                if witness:
                    return witness
            psi = self.psi(j)
            witness = first_mismatch([
                (f"C{m} psi{j.label()}", self.casimir_operator(m)(psi), psi.scale(self.casimir_eigenvalue(m, j))),
                ("Gamma' three-term form", *self.gamma_prime_sides(m, j)),
            ])
            return witness

        return run_check("monogenics.closed_form", "closed forms of the recurrence coefficients", self._params(m=m, j=j.as_list()), body)

    def check_projector(self, m: int, j: IndexVector, direction: int) -> CheckReport:
        def body():
            target = j.hop(m, direction)
            image = self.projector_apply(m, j, direction, self.psi(j))
            scalar = self.projector_scalar(m, j, direction)
            if scalar.is_zero:
                return {"term": f"projector scalar {j.label()} -> {target.label()}", "left": "0", "right": "nonzero"}
            return first_mismatch([(f"P G psi{j.label()}", image, self.psi(target).scale(scalar))])

        return run_check("monogenics.projector", "projectors onto neighbouring basis vectors", self._params(m=m, j=j.as_list(), direction=direction), body)

    def check_ck_commutes(self, ell: int, j: int, degree: int) -> CheckReport:
        """[Gamma_[ell], CK_{x_j}] = 0 on P_k(R^{j-1}) for ell < j."""
        if not 1 <= ell < j <= self.n:
            raise ParameterError({"error": "need 1 <= ell < j <= n", "ell": ell, "j": j})

        def body():
            G = self.gamma_op(range(1, ell + 1))
            for k in range(degree + 1):
                for exps in monomials(j - 1, k, exact=True):
                    p = MultiPoly.monomial(self.n, tuple(exps) + (0,) * (self.n - j + 1))
                    witness = first_mismatch([
                        (f"[G[{ell}],CK{j}] {format_exponents(exps)}", G(self.ck_extend(j, p, k)), self.ck_extend(j, G(p), k)),
                    ])
                    if witness:
                        return witness
            return None

        return run_check("monogenics.ck_commutes", "Casimirs of initial segments commute with CK", self._params(ell=ell, j=j, d=degree), body)

    def check_abelian_action(self, k: int) -> CheckReport:
        """Gamma_[2] .. Gamma_[n-1] are diagonal on psi_j and commute on M_k."""

        def body():
            ops = [self.gamma_op(range(1, ell + 1)) for ell in range(2, self.n)]
            for element in self.build_basis(k):
                for a in range(len(ops)):
                    for b in range(a + 1, len(ops)):
                        witness = first_mismatch([(
                            f"[G[{a + 2}],G[{b + 2}]] psi{element.index.label()}",
                            ops[a](ops[b](element.poly)),
                            ops[b](ops[a](element.poly)),
                        )])
                        if witness:
                            return witness
            return None

        return run_check("monogenics.abelian", "abelian subalgebra acting on M_k", self._params(k=k), body)

    def check_walk(self, j_start: IndexVector, j_end: IndexVector) -> CheckReport:
        def body():
            report = self.irreducibility_walk(j_start, j_end)
            if not report.nonzero:
                return {"term": f"walk {j_start.label()} -> {j_end.label()}", "left": report.scalar, "right": "nonzero"}
            return None

        return run_check("monogenics.walk", "irreducibility of the action on M_k", self._params(start=j_start.as_list(), end=j_end.as_list()), body)
