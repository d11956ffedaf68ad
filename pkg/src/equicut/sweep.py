"""Cycle-power sweep: solve a grid of (n, d) instances and record findings.

For 2 <= d < floor(n/2) the consecutive-block construction cuts d(d+1)
edges; for d in {2, 3} that is proven optimal, for d >= 4 it is conjectured.
The sweep records exact values next to the construction value and classifies
each row as holds / fails / unsolved, never asserting the conjecture. A
"fails" row (exact below d(d+1)) would be a genuine discovery, so its
certificate is preserved in a sidecar JSON.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, replace
from multiprocessing import Pool
from pathlib import Path

from .errors import InvalidInputError
from .formulas import block_cut_value, known_rna
from .graphs import GraphFamilySpec, make_cycle_power
from .solver import (
    SolveResult,
    SolverConfig,
    rna_branch_and_bound,
    rna_exhaustive,
    rna_local_search,
    rna_lower_bound,
)

CSV_COLUMNS = [
    "family",
    "n",
    "d",
    "lower_bound",
    "construction",
    "exact",
    "method",
    "conjecture_match",
    "elapsed_ms",
]

SWEEP_METHODS = ("auto", "exhaustive", "branch_and_bound", "local_search")


@dataclass
class SweepRow:
    family: str
    n: int
    d: int
    lower_bound: int
    construction: int
    exact: int | None
    method: str
    conjecture_match: str
    elapsed_ms: int
    certificate: tuple[int, ...] = ()
    result: SolveResult | None = None

    def csv_record(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "d": self.d,
            "lower_bound": self.lower_bound,
            "construction": self.construction,
            "exact": "" if self.exact is None else self.exact,
            "method": self.method,
            "conjecture_match": self.conjecture_match,
            "elapsed_ms": self.elapsed_ms,
        }


def _spanning_known_bound(n: int, d: int) -> int | None:
    """Best proven value among lower powers: they are spanning subgraphs."""
    best = None
    for lower_d in (1, 2, 3):
        if lower_d >= d:
            break
        val = known_rna(GraphFamilySpec("cycle_power", n, d=lower_d))
        if val is not None:
            best = val if best is None else max(best, val)
    return best


def compute_sweep_row(n: int, d: int, method: str, cfg: SolverConfig) -> SweepRow:
    if not 2 <= d < n // 2:
        raise InvalidInputError(f"sweep rows need 2 <= d < floor(n/2); got n={n}, d={d}")
    g = make_cycle_power(n, d)
    construction = block_cut_value(n, d)
    lower = rna_lower_bound(g, _spanning_known_bound(n, d))

    chosen = method
    if chosen == "auto":
        chosen = "exhaustive" if n <= cfg.exhaustive_cap else "branch_and_bound"
    if chosen == "exhaustive":
        result = rna_exhaustive(g, cfg)
    elif chosen == "branch_and_bound":
        result = rna_branch_and_bound(g, replace(cfg, initial_upper_bound=construction))
    elif chosen == "local_search":
        result = rna_local_search(g, cfg)
    else:
        raise InvalidInputError(f"unknown sweep method {method!r}")

    exact = result.value if result.exact else None
    if exact is None:
        match = "unsolved"
    elif exact == construction:
        match = "holds"
    elif exact < construction:
        match = "fails"
    else:
        raise RuntimeError(
            f"exact value {exact} above the block construction {construction} "
            f"for n={n}, d={d}; the construction is a proven upper bound"
        )
    return SweepRow(
        family="cycle_power",
        n=n,
        d=d,
        lower_bound=lower,
        construction=construction,
        exact=exact,
        method=result.method,
        conjecture_match=match,
        elapsed_ms=round(result.elapsed * 1000),
        certificate=result.certificate.vertices,
        result=result,
    )


def _row_task(args: tuple[int, int, str, SolverConfig]) -> SweepRow:
    return compute_sweep_row(*args)


def run_sweep(
    n_range: tuple[int, int],
    d_range: tuple[int, int],
    cfg: SolverConfig | None = None,
    method: str = "auto",
    workers: int = 1,
) -> list[SweepRow]:
    """Solve every (n, d) in the ranges with 2 <= d < floor(n/2), sorted by (n, d)."""
    if method not in SWEEP_METHODS:
        raise InvalidInputError(f"sweep method must be one of {SWEEP_METHODS}")
    cfg = cfg or SolverConfig()
    grid = [
        (n, d, method, replace(cfg, parallelism=1))
        for n in range(n_range[0], n_range[1] + 1)
        for d in range(d_range[0], d_range[1] + 1)
        if 2 <= d < n // 2
    ]
    if workers > 1 and len(grid) > 1:
        with Pool(min(workers, len(grid))) as pool:
            rows = pool.map(_row_task, grid)
    else:
        rows = [_row_task(item) for item in grid]
    return rows


def write_sweep_outputs(rows: list[SweepRow], out_path: str | Path) -> list[Path]:
    """Write the CSV (plus one certificate sidecar per `fails` row).

    Output is byte-identical across reruns except for the elapsed_ms column.
    """
    out_path = Path(out_path)
    with out_path.open("w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for row in sorted(rows, key=lambda r: (r.n, r.d)):
            writer.writerow(row.csv_record())
    sidecars = []
    for row in rows:
        if row.conjecture_match != "fails":
            continue
        sidecar = out_path.with_name(f"{out_path.stem}.counterexample-n{row.n}-d{row.d}.json")
        payload = {
            "family": row.family,
            "n": row.n,
            "d": row.d,
            "construction": row.construction,
            "exact": row.exact,
            "certificate": list(row.certificate),
        }
        if row.result is not None:
            payload["solve"] = row.result.to_json_dict()
        sidecar.write_text(json.dumps(payload, indent=2) + "\n")
        sidecars.append(sidecar)
    return sidecars
