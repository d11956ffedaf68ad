"""Graph construction and queries for cycles, cycle powers, circulants and complete graphs.

Vertices are dense integers 0..n-1. Adjacency is kept as one bitmask row per
vertex so cut sizes reduce to popcounts.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .bitset import iter_bits, rotate_mask
from .errors import DisconnectedGraphError, InvalidInputError

MAX_VERTICES = 512

FAMILIES = ("cycle", "cycle_power", "circulant", "complete")


class Graph:
    """Undirected, simple, connected graph. Immutable after construction."""

    __slots__ = ("n", "adj", "m", "full_mask")

    def __init__(self, n: int, adj: Sequence[int]):
        if not 1 <= n <= MAX_VERTICES:
            raise InvalidInputError(f"vertex count {n} outside 1..{MAX_VERTICES}")
        if len(adj) != n:
            raise InvalidInputError("adjacency must have one row per vertex")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise InvalidInputError(f"adjacency row {v} references vertices >= {n}")
            if (row >> v) & 1:
                raise InvalidInputError(f"self-loop at vertex {v}")
        for v, row in enumerate(adj):
            for u in iter_bits(row):
                if not (adj[u] >> v) & 1:
                    raise InvalidInputError(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self.adj = tuple(adj)
        self.full_mask = full
        self.m = sum(row.bit_count() for row in adj) // 2
        if not self._reachable_from_zero() == full:
            raise DisconnectedGraphError("graph is not connected")

    def _reachable_from_zero(self) -> int:
        reached = 1
        frontier = 1
        while frontier:
            grow = 0
            for v in iter_bits(frontier):
                grow |= self.adj[v]
            frontier = grow & ~reached
            reached |= frontier
        return reached

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(iter_bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, in lexicographic order."""
        out = []
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1)
            for off in iter_bits(rest):
                out.append((u, u + 1 + off))
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def graph_from_edges(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph from an edge list, rejecting loops, duplicates and disconnection."""
    if not 1 <= n <= MAX_VERTICES:
        raise InvalidInputError(f"vertex count {n} outside 1..{MAX_VERTICES}")
    rows = [0] * n
    for e in edges:
        try:
            u, v = int(e[0]), int(e[1])
        except (TypeError, ValueError, IndexError):
            raise InvalidInputError(f"malformed edge entry {e!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidInputError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise InvalidInputError(f"self-loop at vertex {u}")
        if (rows[u] >> v) & 1:
            raise InvalidInputError(f"duplicate edge ({u}, {v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def make_cycle(n: int) -> Graph:
    """Cycle u_0 u_1 ... u_{n-1} u_0."""
    if n < 3:
        raise InvalidInputError(f"cycle needs n >= 3, got {n}")
    rows = [0] * n
    for i in range(n):
        rows[i] = (1 << ((i + 1) % n)) | (1 << ((i - 1) % n))
    return Graph(n, rows)


def make_complete(n: int) -> Graph:
    if n < 1:
        raise InvalidInputError(f"complete graph needs n >= 1, got {n}")
    full = (1 << n) - 1
    return Graph(n, [full ^ (1 << i) for i in range(n)])


def make_cycle_power(n: int, d: int) -> Graph:
    """d-th power of the n-cycle: u_i ~ u_j iff circular distance is in 1..d.

    Collapses to the complete graph whenever d >= floor(n/2), since no pair of
    cycle vertices is further apart than that.
    """
    if n < 3:
        raise InvalidInputError(f"cycle power needs n >= 3, got {n}")
    if d < 1:
        raise InvalidInputError(f"cycle power needs d >= 1, got {d}")
    if d >= n // 2:
        return make_complete(n)
    rows = [0] * n
    for i in range(n):
        row = 0
        for t in range(1, d + 1):
            row |= 1 << ((i + t) % n)
            row |= 1 << ((i - t) % n)
        rows[i] = row
    return Graph(n, rows)


def make_circulant(n: int, jumps: Iterable[int]) -> Graph:
    """Circulant graph: u_i adjacent to u_{i +/- a} for each jump a.

    Jumps must be strictly increasing positive integers, all below (n+1)/2
    except that a final jump of exactly n/2 is allowed (it contributes degree 1
    instead of 2). Jump sets sharing a common factor with n yield a
    disconnected graph and are rejected.
    """
    if n < 3:
        raise InvalidInputError(f"circulant needs n >= 3, got {n}")
    js = tuple(jumps)
    if not js:
        raise InvalidInputError("circulant needs a nonempty jump set")
    prev = 0
    for a in js:
        if a <= prev:
            raise InvalidInputError(f"jumps must be strictly increasing positive, got {js}")
        if 2 * a > n:
            raise InvalidInputError(f"jump {a} exceeds n/2 for n={n}")
        prev = a
    rows = [0] * n
    for i in range(n):
        row = 0
        for a in js:
            row |= 1 << ((i + a) % n)
            row |= 1 << ((i - a) % n)
        rows[i] = row
    return Graph(n, rows)


def circular_distance(n: int, i: int, j: int) -> int:
    """Distance between u_i and u_j along the n-cycle; never exceeds floor(n/2)."""
    if not (0 <= i < n and 0 <= j < n):
        raise InvalidInputError(f"vertices ({i}, {j}) out of range for n={n}")
    diff = abs(i - j)
    return min(diff, n - diff)


def is_rotation_symmetric(g: Graph) -> bool:
    """True when adjacency is invariant under the rotation v -> v + 1 (mod n)."""
    row0 = g.adj[0]
    return all(g.adj[i] == rotate_mask(row0, g.n, i) for i in range(1, g.n))


@dataclass(frozen=True)
class GraphFamilySpec:
    """Parameters naming one member of the supported graph families."""

    family: str
    n: int
    d: int | None = None
    jumps: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidInputError(f"unknown family {self.family!r}, expected one of {FAMILIES}")
        if self.family == "cycle" and self.n < 3:
            raise InvalidInputError("cycle needs n >= 3")
        if self.family == "cycle_power":
            if self.d is None:
                raise InvalidInputError("cycle_power needs d")
            if self.n < 3 or self.d < 1:
                raise InvalidInputError("cycle_power needs n >= 3 and d >= 1")
        if self.family == "circulant" and not self.jumps:
            raise InvalidInputError("circulant needs a jump set")
        if self.family == "complete" and self.n < 1:
            raise InvalidInputError("complete needs n >= 1")

    def build(self) -> Graph:
        if self.family == "cycle":
            return make_cycle(self.n)
        if self.family == "cycle_power":
            return make_cycle_power(self.n, self.d)
        if self.family == "circulant":
            return make_circulant(self.n, self.jumps)
        return make_complete(self.n)

    def describe(self) -> str:
        if self.family == "cycle":
            return f"cycle n={self.n}"
        if self.family == "cycle_power":
            return f"cycle_power n={self.n} d={self.d}"
        if self.family == "circulant":
            return f"circulant n={self.n} jumps={{{','.join(map(str, self.jumps))}}}"
        return f"complete n={self.n}"


def graph_to_json_dict(g: Graph) -> dict:
    return {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}


def graph_from_json_dict(data: object) -> Graph:
    if not isinstance(data, dict):
        raise InvalidInputError("graph JSON must be an object")
    try:
        n = int(data["n"])
        edges = data["edges"]
    except (KeyError, TypeError, ValueError):
        raise InvalidInputError('graph JSON needs integer "n" and list "edges"') from None
    if not isinstance(edges, list):
        raise InvalidInputError('"edges" must be a list of [i, j] pairs')
    return graph_from_edges(n, edges)


def load_graph(path: str | Path) -> Graph:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"{path}: not valid JSON ({exc})") from None
    return graph_from_json_dict(data)


def save_graph(g: Graph, path: str | Path) -> None:
    Path(path).write_text(json.dumps(graph_to_json_dict(g)) + "\n")
