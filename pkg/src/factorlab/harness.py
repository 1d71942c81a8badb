"""Batch verification over graph corpora.

Corpus specs:

``exhaustive:v<=5`` (or ``exhaustive:v≤5``, ``exhaustive:5``)
    every labelled graph on 1..5 vertices
``exhaustive:v=4``
    every labelled graph on exactly 4 vertices
``random:COUNT,SIZE,P,SEED`` (``SEED`` may be written ``seed=SEED``)
    seeded G(SIZE, P) samples, see :mod:`factorlab.corpus`
``gen:FAMILY:N:LO-HI``
    one of the constructions for parameters LO..HI (``m`` for
    bipartite-sharp, odd ``k`` for clique-independent; apex-cliques takes
    ``gen:apex-cliques:LO-HI`` over ``n``)
anything else
    a file of graph6 lines
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterator

from factorlab import criteria
from factorlab.corpus import EXHAUSTIVE_CAP, iterate_labeled_graphs, labeled_graphs, sample_gnp
from factorlab.decomposition import (
    FAIL, SKIPPED, CheckResult, decompose, delta_by_formula, verify_component_criticality,
    verify_interval_lemma, verify_no_cd_edges, verify_vertex_removal,
)
from factorlab.graph import Graph, parse_graph6, to_graph6
from factorlab.optimizer import Budget, BudgetError, solve
from factorlab.prescriptions import Prescription, h_n_star, parse_degree_set


class CorpusError(ValueError):
    pass


@dataclass(frozen=True)
class Instance:
    index: int
    graph: Graph
    family: str | None = None
    param: int | None = None
    n: int | None = None


_EXH = re.compile(r"^exhaustive:(?:v\s*(<=|≤|=)\s*)?(\d+)$")
_RND = re.compile(r"^random:(\d+),(\d+),([0-9.]+)(?:,(?:seed=)?(\d+))?$")
_GEN = re.compile(r"^gen:(apex-cliques|bipartite-sharp|clique-independent):(?:(\d+):)?(\d+)(?:-(\d+))?$")


def parse_corpus(spec: str, seed: int | None = None,
                 exhaustive_cap: int = EXHAUSTIVE_CAP) -> Iterator[Instance]:
    spec = spec.strip()
    m = _EXH.match(spec)
    if m:
        op, v = m.group(1), int(m.group(2))
        if v > exhaustive_cap:
            raise CorpusError(f"exhaustive corpus above {exhaustive_cap} vertices; raise --max-vertices")
        graphs = labeled_graphs(v) if op == "=" else iterate_labeled_graphs(v, cap=exhaustive_cap)
        return (Instance(i, g) for i, g in enumerate(graphs))
    m = _RND.match(spec)
    if m:
        count, size, p = int(m.group(1)), int(m.group(2)), float(m.group(3))
        s = int(m.group(4)) if m.group(4) is not None else seed
        if s is None:
            raise CorpusError("random corpus needs a seed")
        if not 0 <= p <= 1:
            raise CorpusError("p must lie in [0, 1]")
        return (Instance(i, g) for i, g in enumerate(sample_gnp(count, size, p, s)))
    m = _GEN.match(spec)
    if m:
        return _gen_corpus(m.group(1), m.group(2), int(m.group(3)), m.group(4))
    if spec.startswith(("exhaustive:", "random:", "gen:")):
        raise CorpusError(f"malformed corpus spec {spec!r}")
    try:
        with open(spec) as fh:
            lines = [ln.strip() for ln in fh if ln.strip() and not ln.startswith("#")]
    except OSError as exc:
        raise CorpusError(f"cannot read corpus file {spec!r}: {exc}") from None
    return (Instance(i, parse_graph6(ln)) for i, ln in enumerate(lines))


def _gen_corpus(family: str, n_text: str | None, lo: int, hi_text: str | None) -> Iterator[Instance]:
    hi = int(hi_text) if hi_text else lo
    out = []
    if family == "apex-cliques":
        if n_text is not None:
            raise CorpusError("apex-cliques takes gen:apex-cliques:LO-HI over n")
        for n in range(lo, hi + 1):
            out.append((criteria.gen_apex_cliques(n), n, n))
    else:
        if n_text is None:
            raise CorpusError(f"{family} needs gen:{family}:N:LO-HI")
        n = int(n_text)
        for param in range(lo, hi + 1):
            if family == "bipartite-sharp":
                out.append((criteria.gen_bipartite_sharp(n, param), n, param))
            elif param % 2:
                out.append((criteria.gen_clique_independent(n, param), n, param))
    return (Instance(i, g, family, param, n) for i, (g, n, param) in enumerate(out))


# --------------------------------------------------------------------------
# properties
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Context:
    n: int
    budget: Budget
    prescription: str | None = None

    def lemma_prescription(self, G: Graph) -> Prescription:
        D = parse_degree_set(self.prescription) if self.prescription else h_n_star(self.n)
        return Prescription.uniform(D, G.order)


def _lemma(check: Callable) -> Callable[[Instance, Context], CheckResult]:
    def run(inst: Instance, ctx: Context) -> CheckResult:
        P = ctx.lemma_prescription(inst.graph)
        D = decompose(inst.graph, P, ctx.budget)
        return check(inst.graph, P, D, ctx.budget)
    return run


def _delta_formula(G: Graph, P: Prescription, D, budget: Budget) -> CheckResult:
    search = solve(G, P, budget, count=False).delta
    formula = delta_by_formula(G, P, D)
    if search == formula:
        return CheckResult("delta-formula", "pass", witness={"delta": search})
    return CheckResult("delta-formula", FAIL, f"search {search} != formula {formula}",
                       {"search": search, "formula": formula})


def _sharpness(inst: Instance, ctx: Context) -> CheckResult:
    if inst.family is None:
        return CheckResult("sharpness", SKIPPED, "not a generated construction")
    return criteria.verify_sharpness(inst.graph, inst.family, inst.n, inst.param, ctx.budget)


PROPERTIES: dict[str, Callable[[Instance, Context], CheckResult]] = {
    "cd": _lemma(lambda G, P, D, b: verify_no_cd_edges(G, D)),
    "interval": _lemma(lambda G, P, D, b: verify_interval_lemma(D)),
    "criticality": _lemma(verify_component_criticality),
    "vertex-removal": _lemma(verify_vertex_removal),
    "delta-formula": _lemma(_delta_formula),
    "certificate": lambda i, c: criteria.verify_certificate(i.graph, c.n, c.budget),
    "corollary-ck": lambda i, c: criteria.verify_corollary_ck(i.graph, c.n, c.budget),
    "amahashi": lambda i, c: criteria.verify_amahashi(i.graph, c.n, c.budget),
    "las-vergnas": lambda i, c: criteria.verify_las_vergnas(i.graph, c.n, c.budget),
    "neighborhood": lambda i, c: criteria.verify_neighborhood_theorem(i.graph, c.n, c.budget),
    "odd-order": lambda i, c: criteria.verify_odd_order_theorem(i.graph, c.n, c.budget),
    "g-minus-v": lambda i, c: criteria.verify_g_minus_v_theorem(i.graph, c.n, c.budget),
    "sharpness": _sharpness,
}


@dataclass
class VerificationSummary:
    counters: dict[str, Counter] = field(default_factory=dict)
    failures: list[dict] = field(default_factory=list)
    instances: int = 0

    def record(self, inst: Instance, result: CheckResult) -> None:
        self.counters.setdefault(result.name, Counter())[result.status] += 1
        if result.status == FAIL:
            self.failures.append({
                "index": inst.index,
                "graph6": to_graph6(inst.graph),
                "property": result.name,
                "detail": result.detail,
                "data": result.witness,
            })

    @property
    def failed(self) -> bool:
        return bool(self.failures)

    def to_json(self) -> dict:
        return {
            "instances": self.instances,
            "properties": {
                name: {k: c.get(k, 0) for k in ("pass", "vacuous", "fail", "skipped")}
                for name, c in self.counters.items()
            },
            "failures": self.failures,
        }

    def render(self) -> str:
        lines = [f"instances: {self.instances}"]
        for name, c in self.counters.items():
            lines.append(
                f"  {name:<16} pass {c['pass']:>7}  vacuous {c['vacuous']:>7}  "
                f"fail {c['fail']:>5}  skipped {c['skipped']:>7}")
        for f in self.failures[:20]:
            lines.append(f"FAIL {f['property']} #{f['index']} {f['graph6']}: {f['detail']}")
        return "\n".join(lines)


def run_verify(instances: Iterator[Instance], properties: list[str], n: int,
               budget: Budget | None = None, prescription: str | None = None) -> VerificationSummary:
    unknown = [p for p in properties if p not in PROPERTIES]
    if unknown:
        raise CorpusError(f"unknown properties: {', '.join(unknown)}")
    ctx = Context(n, budget or Budget(), prescription)
    summary = VerificationSummary()
    for inst in instances:
        summary.instances += 1
        for name in properties:
            try:
                result = PROPERTIES[name](inst, ctx)
            except BudgetError as exc:
                result = CheckResult(name, SKIPPED, str(exc))
            summary.record(inst, CheckResult(name, result.status, result.detail, result.witness))
    return summary
