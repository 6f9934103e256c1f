"""
Check registry: the checks each suite runs for one RunConfig.

Every suite builder returns a list of zero-argument callables producing a
CheckReport. ``run_suite`` executes them (optionally on a thread pool) and
returns the reports in registry order.
"""
import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from functools import cached_property
from typing import Callable, Dict, List, Tuple

from aw_algebra import AskeyWilsonTensors, check_uq_hopf, coaction_axiom_pairs, hopf_axiom_pairs, uq_core
from checks import first_mismatch, run_check
from dunkl_model import DunklModel
from monogenics import Monogenics, allowable_vectors
from ospq_core import OspQCore
from pbw import commutator
from scalars import ExponentLattice, lattice_build
from schemas import CheckReport, RunConfig
from tensor_ext import APPENDIX_SETS, BannaiItoTensors, SubsetSpec, relation_pairs

logger = logging.getLogger(__name__)

Task = Callable[[], CheckReport]

EVALUATION_POINT = 2
HOLE_SETS_N4 = ((1, 3), (1, 4), (2, 4), (1, 2, 4), (1, 3, 4))
COMMUTATION_LEMMA_POWERS = (1, 2, 3)
SUITE_OBJECTS: Dict[str, Tuple[str, ...]] = {
    "hopf": ("core",),
    "relations": ("tensors",),
    "commutation": ("tensors",),
    "casimir": ("tensors",),
    "tridiagonal": ("tensors",),
    "appendix": ("tensors",),
    "aw": ("aw",),
    "model": ("model",),
    "monogenics": ("monogenics",),
}


class SuiteContext:
    """Lazily built algebraic objects shared by the checks of one run."""

    def __init__(self, config: RunConfig):
        self.config = config
        self.n = config.n
        self.degree = config.max_degree

    @cached_property
    def lat(self) -> ExponentLattice:
        return lattice_build(self.config.mu_values())

    @cached_property
    def core(self) -> OspQCore:
        return OspQCore.for_lattice(self.lat)

    @cached_property
    def tensors(self) -> BannaiItoTensors:
        return BannaiItoTensors(self.core, self.n)

    @cached_property
    def aw(self) -> AskeyWilsonTensors:
        return AskeyWilsonTensors(self.n)

    @cached_property
    def model(self) -> DunklModel:
        return DunklModel(self.lat)

    @cached_property
    def monogenics(self) -> Monogenics:
        return Monogenics(self.model)

    def intervals(self) -> List[Tuple[int, int]]:
        return [(i, j) for i in range(1, self.n + 1) for j in range(i, self.n + 1)]

    def construction_sets(self) -> List[Tuple[int, ...]]:
        """All nonempty subsets at n = 3; intervals plus the sets with holes beyond."""
        if self.n == 3:
            return [c for r in range(1, 4) for c in itertools.combinations(range(1, 4), r)]
        sets = [tuple(range(i, j + 1)) for i, j in self.intervals()]
        if self.n == 4:
            sets.extend(HOLE_SETS_N4)
        return sets

    def prepare(self, suite: str):
        """Build the shared objects of ``suite`` up front, before worker threads read them."""
        for attr in SUITE_OBJECTS[suite]:
            getattr(self, attr)


def check_osp_hopf(core: OspQCore) -> CheckReport:
    def body():
        gens = {s: core.gen(s) for s in ("A+", "A-", "K", "K^-1", "P")}
        gens["Gamma"] = core.casimir_gamma()
        coideal = {f"g{i}": core.i_gen(i) for i in range(1, 5)}
        scasimir = core.scasimir()
        extra = [("D(Gamma)", core.coproduct(core.casimir_gamma()), core.delta_gamma_expression())]
        for s in ("A+", "A-"):
            x = core.gen(s)
            extra.append((f"[Gamma,{s}]", commutator(core.casimir_gamma(), x), core.osp.element({})))
            extra.append((f"{{S,{s}}}", scasimir * x + x * scasimir, core.osp.element({})))
        return first_mismatch(hopf_axiom_pairs(core, gens) + coaction_axiom_pairs(core, coideal) + extra)

    return run_check("ospq_core.hopf", "Hopf structure of osp_q(1|2) and coaction on I", {"L": core.lat.L}, body)


def check_empty_set(ctx: SuiteContext) -> CheckReport:
    """Gamma of the empty set is the scalar -[1/2]_q."""
    t = ctx.tensors
    return run_check(
        "tensor_ext.empty_set",
        "Casimir of the empty set",
        {"n": ctx.n},
        lambda: first_mismatch([("G()", t.extend(SubsetSpec.of(ctx.n, ())), t.scalar(ctx.core.empty_value()))]),
    )


# === Suite builders ===

def hopf_tasks(ctx: SuiteContext) -> List[Task]:
    core = ctx.core
    return [lambda: check_osp_hopf(core), lambda: check_uq_hopf(uq_core())]


def relations_tasks(ctx: SuiteContext) -> List[Task]:
    t = ctx.tensors
    tasks: List[Task] = [lambda A=A, B=B: t.check_bi_relation(A, B) for A, B in relation_pairs(ctx.n)]
    A, B = relation_pairs(ctx.n)[0]
    tasks.append(lambda: t.check_evaluation(A, B, EVALUATION_POINT))
    tasks.extend(lambda i=i, j=j: t.check_interval_generators(i, j) for i, j in ctx.intervals())
    tasks.append(lambda: check_empty_set(ctx))
    return tasks


def commutation_tasks(ctx: SuiteContext) -> List[Task]:
    t = ctx.tensors
    spans = ctx.intervals()
    tasks: List[Task] = []
    for (a, b), (c, d) in itertools.combinations(spans, 2):
        nested = (c <= a and b <= d) or (a <= c and d <= b)
        if nested or b < c or d < a:
            A, B = tuple(range(a, b + 1)), tuple(range(c, d + 1))
            tasks.append(lambda A=A, B=B: t.check_commutation(A, B))
    tasks.append(t.check_abelian_chain)
    return tasks


def casimir_tasks(ctx: SuiteContext) -> List[Task]:
    t = ctx.tensors
    tasks: List[Task] = [lambda m=m: t.check_casimir(m) for m in range(2, ctx.n)]
    if ctx.n == 4:
        tasks.append(t.check_alternative_expressions)
    tasks.extend(
        lambda j=j, k=k: t.check_one_hole_lemma(j, k)
        for k in range(2, ctx.n - 1)
        for j in range(2, k + 1)
    )
    return tasks


def tridiagonal_tasks(ctx: SuiteContext) -> List[Task]:
    t = ctx.tensors
    return [lambda m=m: t.check_tridiagonal_identities(m) for m in range(2, ctx.n)]


def appendix_tasks(ctx: SuiteContext) -> List[Task]:
    t = ctx.tensors
    tasks: List[Task] = [lambda A=A: t.check_constructions(A) for A in ctx.construction_sets()]
    if ctx.n == 4:
        tasks.extend(lambda A=A: t.check_appendix(A) for A in APPENDIX_SETS)
    return tasks


def aw_tasks(ctx: SuiteContext) -> List[Task]:
    aw = ctx.aw
    tasks: List[Task] = [lambda A=A, B=B: aw.check_aw_relation(A, B) for A, B in relation_pairs(ctx.n)]
    tasks.extend(lambda m=m: aw.casimir_omega(m) for m in range(2, ctx.n))
    if ctx.n == 3:
        tasks.append(aw.check_lambda_13)
    nested = (((1, 2), (1, 2, 3)), ((2, 3), tuple(range(1, ctx.n + 1))))
    tasks.extend(lambda A=A, B=B: aw.check_nested_commutation(A, B) for A, B in nested)
    return tasks


def model_tasks(ctx: SuiteContext) -> List[Task]:
    model, d = ctx.model, ctx.degree
    tasks: List[Task] = [
        lambda: model.check_dunkl_action(max(d, 5)),
        lambda: model.check_dunkl_commute(d),
        lambda: model.check_generators(d),
        lambda: model.check_smaller_sets(d),
        lambda: model.check_adjoint_primitives(d),
        lambda: model.check_positivity(d),
    ]
    for A in ctx.construction_sets():
        tasks.append(lambda A=A: model.check_gamma_constructions(A, d))
        tasks.append(lambda A=A: model.check_symmetry(A, d))
    for i, j in ctx.intervals():
        tasks.append(lambda i=i, j=j: model.check_self_adjoint(i, j, d))
        tasks.append(lambda i=i, j=j: model.check_realized_relations(i, j, d))
    tasks.extend(lambda p=p: model.check_commutation_lemma(p, d) for p in COMMUTATION_LEMMA_POWERS)
    return tasks


def monogenics_tasks(ctx: SuiteContext) -> List[Task]:
    mono, n, d = ctx.monogenics, ctx.n, ctx.degree
    tasks: List[Task] = [lambda j=j: mono.check_ck(j, d) for j in range(2, n + 1)]
    tasks.extend(lambda ell=ell, j=j: mono.check_ck_commutes(ell, j, d) for j in range(2, n + 1) for ell in range(1, j))
    for k in range(d + 1):
        tasks.append(lambda k=k: mono.check_basis(k))
        if k:
            tasks.append(lambda k=k: mono.check_fischer(k))
        tasks.extend(lambda ell=ell, k=k: mono.eigen_check(ell, k) for ell in range(1, n + 1))
        tasks.append(lambda k=k: mono.check_separation(k))
        tasks.append(lambda k=k: mono.check_abelian_action(k))
        if k <= 2:
            tasks.append(lambda k=k: mono.check_lowering(k))
        for m in range(2, n):
            tasks.append(lambda m=m, k=k: mono.check_tridiagonal_support(m, k))
            for j in allowable_vectors(n, k):
                if j.hop(m, -1).is_allowable(k):
                    tasks.append(lambda m=m, j=j: mono.closed_form_check(m, j))
                for direction in (-1, 1):
                    if j.hop(m, direction).is_allowable(k):
                        tasks.append(lambda m=m, j=j, s=direction: mono.check_projector(m, j, s))
        tasks.extend(
            lambda a=a, b=b: mono.check_walk(a, b)
            for a, b in itertools.permutations(allowable_vectors(n, k), 2)
        )
    return tasks


SUITE_BUILDERS: Dict[str, Callable[[SuiteContext], List[Task]]] = {
    "hopf": hopf_tasks,
    "relations": relations_tasks,
    "commutation": commutation_tasks,
    "casimir": casimir_tasks,
    "tridiagonal": tridiagonal_tasks,
    "appendix": appendix_tasks,
    "aw": aw_tasks,
    "model": model_tasks,
    "monogenics": monogenics_tasks,
}


def run_suite(name: str, ctx: SuiteContext, jobs: int = 1) -> List[CheckReport]:
    tasks = SUITE_BUILDERS[name](ctx)
    logger.info("suite %s: %d checks", name, len(tasks))
    if jobs > 1 and len(tasks) > 1:
        ctx.prepare(name)
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(lambda task: task(), tasks))
    else:
        reports = [task() for task in tasks]
    failed = sum(1 for r in reports if r.status == "fail")
    logger.info("suite %s finished: %d checks, %d failed", name, len(reports), failed)
    return reports

