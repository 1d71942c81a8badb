"""Command-line front end.

Exit statuses:

* ``solve``: 0 a factor exists, 1 none exists
* ``check``: 0 the condition holds, 1 it is violated
* ``certify``: 0 valid certificate, 3 a self-check failed (a theorem violation)
* ``verify``: 0 no failures, 1 at least one failure
* every command: 2 on bad input, an unmet precondition or an exhausted budget
"""

from __future__ import annotations

import json
import sys

import click

from factorlab import criteria
from factorlab.corpus import EXHAUSTIVE_CAP
from factorlab.decomposition import decompose, delta_by_formula
from factorlab.graph import Graph, GraphFormatError, parse_graphs, to_edge_list, to_graph6
from factorlab.harness import PROPERTIES, CorpusError, parse_corpus, run_verify
from factorlab.optimizer import Budget, BudgetError, solve
from factorlab.prescriptions import build_prescription, parse_overrides

EXIT_ERROR = 2
EXIT_VIOLATION = 3


def _budget(max_vertices, max_edges, max_millis) -> Budget:
    return Budget(max_edges=max_edges, max_vertices=max_vertices, max_millis=max_millis)


def budget_options(f):
    f = click.option("--max-millis", type=click.IntRange(min=1), default=None,
                     help="Search time limit (FACTORLAB_MAX_MILLIS overrides).")(f)
    f = click.option("--max-edges", type=click.IntRange(min=1), default=25, show_default=True)(f)
    f = click.option("--max-vertices", type=click.IntRange(min=1), default=20, show_default=True)(f)
    return f


def graph_option(f):
    return click.option("--graph", "graph_path", required=True,
                        help="graph6 or edge-list file ('-' for stdin).")(f)


def _load(path: str) -> Graph:
    text = sys.stdin.read() if path == "-" else open(path).read()
    graphs = parse_graphs(text)
    if not graphs:
        raise GraphFormatError(f"{path}: no graph found")
    return graphs[0]


def _emit(data, as_json: bool, human: str) -> None:
    click.echo(json.dumps(data) if as_json else human)


def _fail(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(EXIT_ERROR)


class _Guard:
    """Maps library errors to exit status 2."""

    def __enter__(self):
        return self

    def __exit__(self, typ, exc, tb):
        if isinstance(exc, (GraphFormatError, BudgetError, CorpusError, ValueError, OSError)):
            _fail(str(exc))
        return False


@click.group()
def main():
    """Exact H-factor solver and H_n-factor verification harness."""


@main.command("solve")
@graph_option
@click.option("--prescription", default="Hn:1", show_default=True,
              help="Hn:N, Ho:N, Hn*:N or an explicit set like {1,3,4}.")
@click.option("--overrides", type=click.Path(exists=True), default=None,
              help="File of per-vertex 'v: {...}' lines.")
@budget_options
@click.option("--json", "as_json", is_flag=True)
def cmd_solve(graph_path, prescription, overrides, max_vertices, max_edges, max_millis, as_json):
    """Minimum deviation, an optimal subgraph and the optimal degree sets."""
    with _Guard():
        G = _load(graph_path)
        extra = parse_overrides(open(overrides).read()) if overrides else None
        P = build_prescription(G, prescription, extra)
        report = solve(G, P, _budget(max_vertices, max_edges, max_millis))
    human = "\n".join([
        f"delta: {report.delta}",
        f"factor: {'yes' if report.delta == 0 else 'no'}",
        f"witness: {' '.join(f'{u}-{v}' for u, v in report.witness.edges) or '(empty)'}",
        f"optimum_count: {report.optimum_count}",
    ] + [f"I({v}) = {sorted(s)}" for v, s in enumerate(report.degree_sets)])
    _emit(report.to_json(), as_json, human)
    sys.exit(0 if report.delta == 0 else 1)


@main.command("decompose")
@graph_option
@click.option("--n", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--prescription", default=None, help="Defaults to Hn*:N.")
@budget_options
@click.option("--json", "as_json", is_flag=True)
def cmd_decompose(graph_path, n, prescription, max_vertices, max_edges, max_millis, as_json):
    """The (A, B, C, D) decomposition with delta from search and formula."""
    with _Guard():
        G = _load(graph_path)
        P = build_prescription(G, prescription or f"Hn*:{n}")
        budget = _budget(max_vertices, max_edges, max_millis)
        D = decompose(G, P, budget)
        search = solve(G, P, budget, count=False).delta
        formula = delta_by_formula(G, P, D)
    data = D.to_json(search, formula)
    human = "\n".join(f"{k}: {data[k]}" for k in ("A", "B", "C", "D", "delta_search", "delta_formula"))
    _emit(data, as_json, human)


@main.command("certify")
@graph_option
@click.option("--n", type=click.IntRange(min=1), default=1, show_default=True)
@budget_options
@click.option("--json", "as_json", is_flag=True)
def cmd_certify(graph_path, n, max_vertices, max_edges, max_millis, as_json):
    """A set S leaving at least 2n|S|+1 factorless odd components."""
    with _Guard():
        G = _load(graph_path)
        cert = criteria.extract_certificate(G, n, _budget(max_vertices, max_edges, max_millis))
    human = "\n".join([
        f"S: {list(cert.s_set)}",
        f"odd components ({len(cert.odd_comps)} >= {cert.inequality_rhs}): "
        + ", ".join(str(list(c)) for c in cert.odd_comps),
    ] + [f"VIOLATION: {v}" for v in cert.violations])
    _emit(cert.to_json(), as_json, human)
    sys.exit(0 if cert.valid else EXIT_VIOLATION)


_CHECKS = {
    "ck": criteria.check_cui_kano,
    "ck-nonempty": criteria.check_cui_kano_nonempty,
    "amahashi": criteria.check_amahashi,
    "las-vergnas": criteria.check_las_vergnas,
    "neighborhood": criteria.check_neighborhood_condition,
}


@main.command("check")
@click.argument("kind", type=click.Choice(sorted(_CHECKS)))
@graph_option
@click.option("--n", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--max-vertices", type=click.IntRange(min=1), default=20, show_default=True)
@click.option("--json", "as_json", is_flag=True)
def cmd_check(kind, graph_path, n, max_vertices, as_json):
    """Evaluate one Tutte-type condition and report the first violator."""
    with _Guard():
        G = _load(graph_path)
        if kind == "neighborhood":
            report = criteria.check_neighborhood_condition(G, n)
        else:
            report = _CHECKS[kind](G, n, max_vertices=max_vertices)
    data = report.to_json()
    if report.holds:
        human = f"{kind}: holds"
    else:
        human = f"{kind}: violated at S = {data['violator']}: {data['lhs']} > {data['rhs']}"
        if kind == "neighborhood":
            human = (f"{kind}: violated at u, v = {data['violator']}: "
                     f"{data['lhs']} <= {data['rhs']}")
    _emit(data, as_json, human)
    sys.exit(0 if report.holds else 1)


@main.command("gen")
@click.argument("family", type=click.Choice(["apex-cliques", "bipartite-sharp", "clique-independent"]))
@click.option("--n", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--m", type=click.IntRange(min=1), default=1, show_default=True,
              help="Small side of bipartite-sharp.")
@click.option("--k", type=click.IntRange(min=1), default=1, show_default=True,
              help="Clique size of clique-independent (odd).")
@click.option("--format", "fmt", type=click.Choice(["graph6", "edgelist"]), default="graph6")
def cmd_gen(family, n, m, k, fmt):
    """Print one of the extremal constructions."""
    with _Guard():
        if family == "apex-cliques":
            G = criteria.gen_apex_cliques(n)
        elif family == "bipartite-sharp":
            G = criteria.gen_bipartite_sharp(n, m)
        else:
            G = criteria.gen_clique_independent(n, k)
    click.echo(to_graph6(G) if fmt == "graph6" else to_edge_list(G), nl=fmt == "graph6")


@main.command("verify")
@click.option("--corpus", required=True, help="exhaustive:v<=5 | random:C,S,P,SEED | gen:... | FILE")
@click.option("--properties", default="all", show_default=True,
              help=f"Comma list from: {', '.join(PROPERTIES)}.")
@click.option("--n", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--prescription", default=None, help="Prescription for the lemma checks (default Hn*:N).")
@click.option("--seed", type=int, default=None, help="Seed for random corpora without one.")
@click.option("--max-vertices", type=click.IntRange(min=1), default=EXHAUSTIVE_CAP, show_default=True,
              help="Cap for exhaustive corpora.")
@click.option("--max-edges", type=click.IntRange(min=1), default=25, show_default=True)
@click.option("--max-millis", type=click.IntRange(min=1), default=None)
@click.option("--json", "as_json", is_flag=True)
def cmd_verify(corpus, properties, n, prescription, seed, max_vertices, max_edges, max_millis, as_json):
    """Run property checks over a corpus; exit 1 if any fail."""
    props = list(PROPERTIES) if properties == "all" else [p.strip() for p in properties.split(",")]
    with _Guard():
        instances = parse_corpus(corpus, seed, exhaustive_cap=max_vertices)
        summary = run_verify(instances, props, n,
                             Budget(max_edges=max_edges, max_vertices=max(20, max_vertices),
                                    max_millis=max_millis),
                             prescription)
    _emit(summary.to_json(), as_json, summary.render())
    sys.exit(1 if summary.failed else 0)


if __name__ == "__main__":
    main()
