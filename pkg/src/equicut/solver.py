"""Exact and heuristic minimum-equicut solvers.

The minimum equicut size of a connected graph equals the least number of
negative edges over its parity signed graphs, so one quantity is computed
for both views. Three methods are provided:

* exhaustive - walks every floor(n/2)-subset in revolving-door order,
  updating the cut size incrementally (two popcounts per step);
* branch_and_bound - assigns vertices to sides with running capacities and
  an admissible greedy completion bound;
* local_search - seeded multi-restart best-improvement pair swaps; returns
  an upper bound, never below the optimum.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, replace
from multiprocessing import Pool

from .bitset import iter_bits, revolving_door_swaps, subset_precedes, vertices_from_mask
from .errors import EnumerationCapError, InvalidInputError
from .graphs import Graph, is_rotation_symmetric
from .parity import Equicut

DEFAULT_ENUMERATION_CAP = 30
_SEED_STRIDE = 1_000_003


@dataclass
class SolverConfig:
    """Knobs shared by the solvers.

    symmetry_reduction=None means "decide from the graph": reduction is used
    when the adjacency is rotation-invariant (circulants, cycle powers).
    """

    symmetry_reduction: bool | None = None
    restarts: int = 100
    rng_seed: int = 0
    parallelism: int = 1
    initial_upper_bound: int | None = None
    first_improvement: bool = False
    exhaustive_cap: int = DEFAULT_ENUMERATION_CAP

    def __post_init__(self):
        if self.restarts < 1:
            raise InvalidInputError("restarts must be >= 1")
        if self.parallelism < 1:
            raise InvalidInputError("parallelism must be >= 1")


@dataclass
class SolveResult:
    value: int
    certificate: Equicut
    method: str
    lower_bound_used: int
    upper_bound_used: int
    elapsed: float
    exact: bool

    def to_json_dict(self) -> dict:
        return {
            "value": self.value,
            "certificate": list(self.certificate.vertices),
            "method": self.method,
            "lower_bound": self.lower_bound_used,
            "upper_bound": self.upper_bound_used,
            "exact": self.exact,
            "elapsed_ms": round(self.elapsed * 1000.0, 3),
        }


def _cut_size_mask(g: Graph, mask: int) -> int:
    outside = g.full_mask & ~mask
    return sum((g.adj[v] & outside).bit_count() for v in iter_bits(mask))


def _merge(best: tuple[int, int] | None, cand: tuple[int, int]) -> tuple[int, int]:
    if best is None:
        return cand
    if cand[0] < best[0] or (cand[0] == best[0] and subset_precedes(cand[1], best[1])):
        return cand
    return best


def _min_equicut_block(g: Graph, pinned: int, lo: int, k: int) -> tuple[int, int]:
    """Best (cut, mask) over subsets X = pinned + (k - |pinned|) vertices >= lo.

    Ties break toward the smaller sorted-vertex tuple, so merging block
    results is order-independent.
    """
    adj = g.adj
    extra = k - pinned.bit_count()
    universe = g.n - lo
    if extra < 0 or extra > universe:
        raise InvalidInputError("infeasible enumeration block")
    mask = pinned
    for i in range(extra):
        mask |= 1 << (lo + i)
    cut = _cut_size_mask(g, mask)
    best_cut, best_mask = cut, mask
    for enter, leave in revolving_door_swaps(universe, extra):
        v_in, v_out = lo + enter, lo + leave
        row_out = adj[v_out]
        cut += 2 * (row_out & mask).bit_count() - row_out.bit_count()
        mask ^= 1 << v_out
        row_in = adj[v_in]
        cut += row_in.bit_count() - 2 * (row_in & mask).bit_count()
        mask |= 1 << v_in
        if cut < best_cut or (cut == best_cut and subset_precedes(mask, best_mask)):
            best_cut, best_mask = cut, mask
    return best_cut, best_mask


def _block_task(args: tuple[Graph, int, int, int]) -> tuple[int, int]:
    return _min_equicut_block(*args)


def _use_symmetry(g: Graph, cfg: SolverConfig) -> bool:
    if cfg.symmetry_reduction is None:
        return is_rotation_symmetric(g)
    return cfg.symmetry_reduction


def rna_exhaustive(g: Graph, cfg: SolverConfig | None = None) -> SolveResult:
    """Minimum equicut by complete enumeration; certificate is the
    lexicographically smallest minimizer (sorted-vertex-tuple order).

    When n is even the subset and its complement cut the same edges, so
    vertex 0 is pinned inside X. Under rotation symmetry the same pinning is
    valid for odd n: every rotation class of subsets, including the one
    holding the lexicographically smallest minimizer, has a member
    containing vertex 0. Results are identical for any worker count.
    """
    cfg = cfg or SolverConfig()
    if g.n < 2:
        raise InvalidInputError("exhaustive solving needs n >= 2")
    if g.n > cfg.exhaustive_cap:
        raise EnumerationCapError(
            f"n={g.n} exceeds the enumeration cap {cfg.exhaustive_cap}; "
            "use branch_and_bound or raise the cap"
        )
    start = time.perf_counter()
    k = g.n // 2
    pin_zero = (g.n % 2 == 0) or _use_symmetry(g, cfg)

    tasks: list[tuple[Graph, int, int, int]]
    if cfg.parallelism > 1 and k >= 2:
        if pin_zero:
            tasks = [(g, 1 | (1 << s), s + 1, k) for s in range(1, g.n - k + 2)]
        else:
            tasks = [(g, 1 << s, s + 1, k) for s in range(0, g.n - k + 1)]
        with Pool(min(cfg.parallelism, len(tasks))) as pool:
            results = pool.map(_block_task, tasks)
        best = None
        for cand in results:
            best = _merge(best, cand)
    else:
        if pin_zero:
            best = _min_equicut_block(g, 1, 1, k)
        else:
            best = _min_equicut_block(g, 0, 0, k)

    value, mask = best
    elapsed = time.perf_counter() - start
    lower = rna_lower_bound(g)
    return SolveResult(
        value=value,
        certificate=Equicut(g.n, vertices_from_mask(mask)),
        method="exhaustive",
        lower_bound_used=lower,
        upper_bound_used=value,
        elapsed=elapsed,
        exact=True,
    )


def _local_search_run(g: Graph, k: int, rng: random.Random, first_improvement: bool) -> tuple[int, int]:
    adj = g.adj
    degs = [row.bit_count() for row in adj]
    mask = 0
    for v in rng.sample(range(g.n), k):
        mask |= 1 << v
    cut = _cut_size_mask(g, mask)
    while True:
        best_delta = 0
        best_swap = None
        outside = g.full_mask & ~mask
        for u in iter_bits(mask):
            row_u = adj[u]
            gain_u = 2 * (row_u & mask).bit_count() - degs[u]
            for v in iter_bits(outside):
                row_v = adj[v]
                delta = gain_u + degs[v] - 2 * (row_v & mask).bit_count()
                if (row_u >> v) & 1:
                    delta += 2
                if delta < best_delta:
                    best_delta = delta
                    best_swap = (u, v)
                    if first_improvement:
                        break
            if first_improvement and best_swap is not None:
                break
        if best_swap is None:
            return cut, mask
        u, v = best_swap
        cut += best_delta
        mask = (mask ^ (1 << u)) | (1 << v)


def _restart_seed(base: int, index: int) -> int:
    return base * _SEED_STRIDE + index


def _local_search_chunk(args: tuple[Graph, int, int, int, int, bool]) -> tuple[int, int]:
    g, k, seed_base, first, count, first_improvement = args
    best = None
    for r in range(first, first + count):
        rng = random.Random(_restart_seed(seed_base, r))
        best = _merge(best, _local_search_run(g, k, rng, first_improvement))
    return best


def _local_search_best(g: Graph, cfg: SolverConfig) -> tuple[int, int]:
    k = g.n // 2
    if k == 0:
        return 0, 0
    restarts = cfg.restarts
    if cfg.parallelism > 1 and restarts > 1:
        workers = min(cfg.parallelism, restarts)
        chunk = (restarts + workers - 1) // workers
        tasks = []
        first = 0
        while first < restarts:
            count = min(chunk, restarts - first)
            tasks.append((g, k, cfg.rng_seed, first, count, cfg.first_improvement))
            first += count
        with Pool(len(tasks)) as pool:
            results = pool.map(_local_search_chunk, tasks)
        best = None
        for cand in results:
            best = _merge(best, cand)
        return best
    return _local_search_chunk((g, k, cfg.rng_seed, 0, restarts, cfg.first_improvement))


def rna_local_search(g: Graph, cfg: SolverConfig | None = None) -> SolveResult:
    """Heuristic upper bound: repeated best-improvement cross-pair swaps from
    seeded random starts. The returned value is always >= the exact optimum."""
    cfg = cfg or SolverConfig()
    if g.n < 2:
        raise InvalidInputError("local search needs n >= 2")
    start = time.perf_counter()
    value, mask = _local_search_best(g, cfg)
    elapsed = time.perf_counter() - start
    return SolveResult(
        value=value,
        certificate=Equicut(g.n, vertices_from_mask(mask)),
        method="local_search",
        lower_bound_used=rna_lower_bound(g),
        upper_bound_used=value,
        elapsed=elapsed,
        exact=False,
    )


def rna_branch_and_bound(g: Graph, cfg: SolverConfig | None = None) -> SolveResult:
    """Exact minimum equicut by depth-first side assignment.

    Vertices 0..n-1 are assigned in order to side A (capacity floor(n/2)) or
    side B (capacity ceil(n/2)). A branch is pruned when the crossing edges
    already fixed plus an admissible completion bound cannot beat the
    incumbent. The completion bound assigns each unassigned vertex greedily:
    every vertex charges its edges into the opposite assigned side, and the
    cheapest capacity-feasible split of the unassigned vertices is taken.

    The incumbent comes from cfg.initial_upper_bound when given (the caller
    promises it is a true upper bound, e.g. a known construction value),
    otherwise from a short local search. Search runs single-threaded so
    results do not depend on cfg.parallelism.
    """
    cfg = cfg or SolverConfig()
    start = time.perf_counter()
    n = g.n
    k = n // 2
    lam = rna_lower_bound(g)

    if n == 1:
        return SolveResult(0, Equicut(1, ()), "branch_and_bound", 0, 0, 0.0, True)

    if cfg.initial_upper_bound is not None:
        ub_used = cfg.initial_upper_bound
        best_val: int | None = None
        best_mask = 0
        limit = ub_used + 1
    else:
        seed_cfg = replace(cfg, restarts=min(cfg.restarts, 12), parallelism=1)
        ls_val, ls_mask = _local_search_best(g, seed_cfg)
        ub_used = ls_val
        best_val, best_mask = ls_val, ls_mask
        limit = ls_val

    if best_val is not None and best_val <= lam:
        elapsed = time.perf_counter() - start
        return SolveResult(
            best_val,
            Equicut(n, vertices_from_mask(best_mask)),
            "branch_and_bound",
            lam,
            ub_used,
            elapsed,
            True,
        )

    adj = g.adj
    pin_zero = (n % 2 == 0) or _use_symmetry(g, cfg)
    cap_a, cap_b = k, n - k
    state = {"limit": limit, "best_val": best_val, "best_mask": best_mask}

    def completion_bound(t: int, amask: int, bmask: int, slots_b: int) -> int:
        total_b = 0
        diffs = []
        for v in range(t, n):
            a = (adj[v] & amask).bit_count()
            b = (adj[v] & bmask).bit_count()
            total_b += b
            diffs.append(a - b)
        if slots_b:
            diffs.sort()
            total_b += sum(diffs[:slots_b])
        return total_b

    def dfs(t: int, amask: int, bmask: int, ca: int, cb: int, cur: int) -> None:
        if cur + completion_bound(t, amask, bmask, cap_b - cb) >= state["limit"]:
            return
        if t == n:
            state["limit"] = cur
            state["best_val"] = cur
            state["best_mask"] = amask
            return
        v = t
        cost_a = (adj[v] & bmask).bit_count()
        cost_b = (adj[v] & amask).bit_count()
        branches = []
        if ca < cap_a:
            branches.append(("A", cost_a))
        if cb < cap_b and not (t == 0 and pin_zero):
            branches.append(("B", cost_b))
        branches.sort(key=lambda x: x[1])
        for side, cost in branches:
            if side == "A":
                dfs(t + 1, amask | (1 << v), bmask, ca + 1, cb, cur + cost)
            else:
                dfs(t + 1, amask, bmask | (1 << v), ca, cb + 1, cur + cost)

    dfs(0, 0, 0, 0, 0, 0)

    if state["best_val"] is None:
        raise InvalidInputError(
            "initial_upper_bound is below the true optimum; no equicut found within it"
        )
    elapsed = time.perf_counter() - start
    return SolveResult(
        value=state["best_val"],
        certificate=Equicut(n, vertices_from_mask(state["best_mask"])),
        method="branch_and_bound",
        lower_bound_used=lam,
        upper_bound_used=ub_used,
        elapsed=elapsed,
        exact=True,
    )


def edge_connectivity(g: Graph) -> int:
    """Edge connectivity via n-1 unit-capacity max-flow runs from vertex 0.

    Connected vertex-transitive graphs attain their minimum degree here.
    Returns 0 for a single vertex (nothing to disconnect).
    """
    n = g.n
    if n == 1:
        return 0
    best = min(g.degree(v) for v in range(n))
    for target in range(1, n):
        flow = _max_flow_unit(g, 0, target, best)
        if flow < best:
            best = flow
    return best


def _max_flow_unit(g: Graph, s: int, t: int, stop_at: int) -> int:
    n = g.n
    residual = [[0] * n for _ in range(n)]
    for u in range(n):
        for v in iter_bits(g.adj[u]):
            residual[u][v] = 1
    flow = 0
    while flow < stop_at:
        parent = [-1] * n
        parent[s] = s
        queue = [s]
        qi = 0
        while qi < len(queue) and parent[t] == -1:
            u = queue[qi]
            qi += 1
            row = residual[u]
            for v in range(n):
                if row[v] > 0 and parent[v] == -1:
                    parent[v] = u
                    queue.append(v)
        if parent[t] == -1:
            break
        v = t
        while v != s:
            u = parent[v]
            residual[u][v] -= 1
            residual[v][u] += 1
            v = u
        flow += 1
    return flow


def rna_lower_bound(g: Graph, spanning_bound: int | None = None) -> int:
    """Best known lower bound on the minimum equicut size.

    Edge connectivity is always a lower bound (removing the cut disconnects
    the graph). A caller holding the exact value of a spanning subgraph may
    pass it in: every equicut of g contains an equicut of the subgraph.
    """
    lam = edge_connectivity(g)
    if spanning_bound is None:
        return lam
    return max(lam, spanning_bound)
