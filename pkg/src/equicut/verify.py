"""Verification suites: every proven statement the package relies on, checked
by independent computation.

The `paper` suite is the full gate (nine checks); `formulas` covers the
closed-form boundary counts alone and `solvers` the exhaustive/branch-and-
bound agreement corpus. Each check returns a CheckResult so the CLI and the
test suite share one implementation.
"""

from __future__ import annotations

import random
import tempfile
import time
from dataclasses import dataclass, field
from pathlib import Path

from .errors import DisconnectedGraphError
from .formulas import (
    block_cut_value,
    boundary_count_closed_form,
    boundary_count_direct,
    kang_upper_bound,
)
from .graphs import Graph, graph_from_edges, make_circulant, make_complete, make_cycle, make_cycle_power
from .parity import (
    Equicut,
    ParityLabeling,
    SignedGraph,
    equicut_size,
    is_balanced,
    is_parity_signed,
    negative_edge_count,
    signature_from_labeling,
    switch_vertices,
)
from .solver import SolveResult, SolverConfig, rna_branch_and_bound, rna_exhaustive
from .sweep import run_sweep, write_sweep_outputs

DEFAULT_SEED = 20260801


@dataclass
class CheckResult:
    criterion: str
    passed: bool
    detail: str
    elapsed_ms: float = 0.0
    failures: list[str] = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "criterion": self.criterion,
            "passed": self.passed,
            "detail": self.detail,
            "elapsed_ms": round(self.elapsed_ms, 1),
            "failures": self.failures,
        }


def _finish(criterion: str, failures: list[str], detail: str, start: float) -> CheckResult:
    elapsed = (time.perf_counter() - start) * 1000.0
    if failures:
        detail = f"{detail}; {len(failures)} failure(s)"
    return CheckResult(criterion, not failures, detail, elapsed, failures[:20])


# ---------------------------------------------------------------------------
# random corpora


def random_connected_graph(rng: random.Random, n: int, extra_edge_prob: float = 0.3) -> Graph:
    """Random connected graph: a random tree plus independent extra edges."""
    order = list(range(n))
    rng.shuffle(order)
    edges = set()
    for i in range(1, n):
        u = order[i]
        v = order[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < extra_edge_prob:
                edges.add((u, v))
    return graph_from_edges(n, sorted(edges))


def random_circulant(rng: random.Random, n: int) -> Graph:
    """Random connected circulant on n vertices (jump sets resampled until connected)."""
    candidates = list(range(1, n // 2 + 1))
    while True:
        size = rng.randint(1, len(candidates))
        jumps = tuple(sorted(rng.sample(candidates, size)))
        try:
            return make_circulant(n, jumps)
        except DisconnectedGraphError:
            continue


def solver_corpus(
    rng: random.Random,
    n_max: int = 14,
    circulants: int = 50,
    random_graphs: int = 110,
    random_n_max: int = 12,
) -> list[tuple[str, Graph]]:
    """The agreement corpus: all cycle powers up to n_max, then seeded randoms."""
    corpus: list[tuple[str, Graph]] = []
    for n in range(3, n_max + 1):
        for d in range(1, n // 2 + 1):
            corpus.append((f"cycle_power n={n} d={d}", make_cycle_power(n, d)))
    for i in range(circulants):
        n = rng.randint(5, n_max)
        g = random_circulant(rng, n)
        corpus.append((f"circulant #{i} n={n}", g))
    for i in range(random_graphs):
        n = rng.randint(4, random_n_max)
        g = random_connected_graph(rng, n)
        corpus.append((f"random #{i} n={n} m={g.m}", g))
    return corpus


# ---------------------------------------------------------------------------
# shared solve table for the cycle-power checks


def solve_cycle_power_table(
    n_max: int = 22, cfg: SolverConfig | None = None
) -> dict[tuple[int, int], SolveResult]:
    """Exact values of every cycle power with 5 <= n <= n_max, 2 <= d < floor(n/2)."""
    cfg = cfg or SolverConfig()
    table: dict[tuple[int, int], SolveResult] = {}
    for n in range(5, n_max + 1):
        for d in range(2, n // 2):
            table[(n, d)] = rna_exhaustive(make_cycle_power(n, d), cfg)
    return table


# ---------------------------------------------------------------------------
# the nine checks


def check_known_values() -> CheckResult:
    start = time.perf_counter()
    failures = []
    for n in range(4, 21):
        got = rna_exhaustive(make_cycle(n)).value
        if got != 2:
            failures.append(f"cycle n={n}: got {got}, want 2")
    for n in range(2, 15):
        want = (n // 2) * ((n + 1) // 2)
        got = rna_exhaustive(make_complete(n)).value
        if got != want:
            failures.append(f"complete n={n}: got {got}, want {want}")
    return _finish(
        "1-known-values", failures, "cycles n=4..20 and complete graphs n=2..14", start
    )


def check_square_powers(table: dict[tuple[int, int], SolveResult]) -> CheckResult:
    start = time.perf_counter()
    failures = []
    for n in range(6, 23):
        got = table[(n, 2)].value
        if got != 6:
            failures.append(f"n={n} d=2: got {got}, want 6")
    return _finish("2-square-powers", failures, "second powers n=6..22 all equal 6", start)


def check_cube_powers(table: dict[tuple[int, int], SolveResult]) -> CheckResult:
    start = time.perf_counter()
    failures = []
    for n in range(8, 23):
        got = table[(n, 3)].value
        if got != 12:
            failures.append(f"n={n} d=3: got {got}, want 12")
    return _finish("3-cube-powers", failures, "third powers n=8..22 all equal 12", start)


def check_sandwich(table: dict[tuple[int, int], SolveResult]) -> CheckResult:
    start = time.perf_counter()
    failures = []
    count = 0
    for (n, d), result in sorted(table.items()):
        count += 1
        if not 2 * d <= result.value <= d * (d + 1):
            failures.append(
                f"n={n} d={d}: value {result.value} outside [{2 * d}, {d * (d + 1)}]"
            )
    return _finish(
        "4-sandwich-bounds", failures, f"2d <= value <= d(d+1) on {count} instances", start
    )


def check_formula_identities(n_max: int = 60) -> CheckResult:
    start = time.perf_counter()
    failures = []
    instances = 0
    for n in range(5, n_max + 1):
        b = n // 2
        for d in range(2, b):
            instances += 1
            near = (b - 1) // 2 if b % 2 == 1 else b // 2 - 1
            for j in range(near + 1):
                cf = boundary_count_closed_form(n, d, j)
                direct = boundary_count_direct(n, d, 0, j)
                if cf != direct:
                    failures.append(f"n={n} d={d} j={j}: closed {cf} vs direct {direct}")
            g = make_cycle_power(n, d)
            assembled = 0
            if b % 2 == 1:
                k = (b - 1) // 2
                assembled = 2 * sum(
                    boundary_count_closed_form(n, d, j) for j in range(k)
                ) + boundary_count_closed_form(n, d, k)
            else:
                k = b // 2
                assembled = 2 * sum(boundary_count_closed_form(n, d, j) for j in range(k))
            direct_cut = equicut_size(g, Equicut(n, tuple(range(b))))
            want = block_cut_value(n, d)
            if not assembled == direct_cut == want:
                failures.append(
                    f"n={n} d={d}: assembled {assembled}, direct {direct_cut}, want {want}"
                )
            if want > kang_upper_bound(n, g.m):
                failures.append(f"n={n} d={d}: d(d+1) above the general (2m+n)/4 bound")
    return _finish(
        "5-formula-identities",
        failures,
        f"boundary tables and block sums on {instances} (n, d) pairs, n <= {n_max}",
        start,
    )


def check_solver_agreement(
    seed: int = DEFAULT_SEED,
    n_max: int = 14,
    circulants: int = 50,
    random_graphs: int = 110,
) -> CheckResult:
    start = time.perf_counter()
    failures = []
    rng = random.Random(seed)
    corpus = solver_corpus(rng, n_max, circulants, random_graphs)
    for name, g in corpus:
        ex = rna_exhaustive(g)
        bb = rna_branch_and_bound(g)
        if ex.value != bb.value:
            failures.append(f"{name}: exhaustive {ex.value} vs branch-and-bound {bb.value}")
        if equicut_size(g, bb.certificate) != bb.value:
            failures.append(f"{name}: branch-and-bound certificate does not match its value")
    return _finish(
        "6-solver-agreement", failures, f"both exact methods on {len(corpus)} instances", start
    )


def check_parity_machinery(pairs: int = 1000, seed: int = DEFAULT_SEED) -> CheckResult:
    start = time.perf_counter()
    failures = []
    rng = random.Random(seed)
    for i in range(pairs):
        n = rng.randint(3, 12)
        g = random_connected_graph(rng, n)
        labels = list(range(1, n + 1))
        rng.shuffle(labels)
        labeling = ParityLabeling(labels)
        sg = signature_from_labeling(g, labeling)
        cut = Equicut(n, labeling.even_vertices())
        if negative_edge_count(sg) != equicut_size(g, cut):
            failures.append(f"pair {i}: negative count differs from the even-side cut size")
        if not is_balanced(sg):
            failures.append(f"pair {i}: induced signature not balanced")
        ok, witness = is_parity_signed(sg)
        if not ok:
            failures.append(f"pair {i}: induced signature not recognized")
        elif switch_vertices(SignedGraph(g), witness.vertices).neg != sg.neg:
            failures.append(f"pair {i}: witness does not reproduce the negative edges")
    return _finish(
        "7-parity-machinery", failures, f"{pairs} random (graph, labeling) pairs", start
    )


def check_conjecture_sweep(out_dir: str | Path | None = None, seed: int = DEFAULT_SEED) -> CheckResult:
    start = time.perf_counter()
    failures = []
    if out_dir is None:
        out_dir = Path(tempfile.mkdtemp(prefix="equicut-sweep-"))
    out_dir = Path(out_dir)
    cfg = SolverConfig(rng_seed=seed)
    rows = run_sweep((10, 18), (4, 4), cfg) + run_sweep((12, 18), (5, 5), cfg)
    sidecars = write_sweep_outputs(rows, out_dir / "conjecture_sweep.csv")
    holds = sum(1 for r in rows if r.conjecture_match == "holds")
    fails = [r for r in rows if r.conjecture_match == "fails"]
    for row in rows:
        if row.exact is None:
            failures.append(f"n={row.n} d={row.d}: no exact value recorded")
        if row.conjecture_match not in ("holds", "fails"):
            failures.append(f"n={row.n} d={row.d}: match is {row.conjecture_match}")
    if len(sidecars) != len(fails):
        failures.append(f"{len(fails)} fails rows but {len(sidecars)} sidecar files")
    detail = (
        f"{len(rows)} rows (d=4 n=10..18, d=5 n=12..18): "
        f"{holds} holds, {len(fails)} fails; outputs in {out_dir}"
    )
    return _finish("8-conjecture-sweep", failures, detail, start)


def check_worker_determinism() -> CheckResult:
    start = time.perf_counter()
    failures = []
    single = {}
    quad = {}
    for n in range(6, 23):
        g = make_cycle_power(n, 2)
        single[n] = rna_exhaustive(g, SolverConfig(parallelism=1))
        quad[n] = rna_exhaustive(g, SolverConfig(parallelism=4))
    for n in range(6, 23):
        a, b = single[n], quad[n]
        if a.value != b.value or a.certificate != b.certificate:
            failures.append(
                f"n={n}: workers=1 gave ({a.value}, {a.certificate.vertices}), "
                f"workers=4 gave ({b.value}, {b.certificate.vertices})"
            )
    return _finish(
        "9-worker-determinism",
        failures,
        "second-power runs with 1 and 4 workers give identical results",
        start,
    )


# ---------------------------------------------------------------------------
# suites


def run_paper_suite(seed: int = DEFAULT_SEED, out_dir: str | Path | None = None) -> list[CheckResult]:
    """All nine checks; the square/cube/sandwich checks share one solve table."""
    results = [check_known_values()]
    table_start = time.perf_counter()
    table = solve_cycle_power_table(22)
    table_ms = (time.perf_counter() - table_start) * 1000.0
    square = check_square_powers(table)
    square.elapsed_ms += table_ms  # the shared solves are charged to the first consumer
    results.append(square)
    results.append(check_cube_powers(table))
    results.append(check_sandwich(table))
    results.append(check_formula_identities(60))
    results.append(check_solver_agreement(seed))
    results.append(check_parity_machinery(1000, seed))
    results.append(check_conjecture_sweep(out_dir, seed))
    results.append(check_worker_determinism())
    return results


def run_formulas_suite(n_max: int = 60) -> list[CheckResult]:
    return [check_formula_identities(n_max)]


def run_solvers_suite(seed: int = DEFAULT_SEED, n_max: int = 14) -> list[CheckResult]:
    return [check_solver_agreement(seed, n_max)]
