"""Independent brute-force oracles the production code never touches.

Everything here works from plain edge lists and itertools enumeration, so a
bug in the bitmask machinery cannot hide in both code paths at once.
"""

from itertools import combinations


def cut_size_edges(edges, side):
    side = set(side)
    return sum(1 for u, v in edges if (u in side) != (v in side))


def min_equicut_naive(n, edges):
    """(value, lexicographically smallest minimizer) over all floor(n/2)-subsets."""
    k = n // 2
    best_val = None
    best_set = None
    for subset in combinations(range(n), k):
        c = cut_size_edges(edges, subset)
        if best_val is None or c < best_val:
            best_val, best_set = c, subset
    return best_val, best_set


def edge_connectivity_naive(n, edges):
    """Minimum boundary over all proper subsets containing vertex 0."""
    if n == 1:
        return 0
    best = None
    for bits in range(1 << (n - 1)):
        side = {0} | {v + 1 for v in range(n - 1) if (bits >> v) & 1}
        if len(side) == n:
            continue
        c = cut_size_edges(edges, side)
        if best is None or c < best:
            best = c
    return best
