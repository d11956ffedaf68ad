"""Integer-backed vertex-set helpers and minimal-change subset enumeration."""

from __future__ import annotations

from typing import Iterable, Iterator


def mask_from_vertices(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def vertices_from_mask(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def rotate_mask(mask: int, n: int, shift: int) -> int:
    """Cyclically shift a width-n bitmask so bit v moves to bit (v + shift) mod n."""
    shift %= n
    if shift == 0:
        return mask
    full = (1 << n) - 1
    return ((mask << shift) | (mask >> (n - shift))) & full


def subset_precedes(a: int, b: int) -> bool:
    """Order equal-size vertex sets by their sorted tuples: a < b.

    For |A| = |B| the sorted tuples compare lexicographically exactly when the
    smallest element of the symmetric difference lies in A.
    """
    diff = a ^ b
    if not diff:
        return False
    return bool(a & (diff & -diff))


def revolving_door_swaps(n: int, k: int) -> Iterator[tuple[int, int]]:
    """Yield (enter, leave) steps walking every k-subset of range(n).

    The walk starts at {0, ..., k-1} and each step exchanges exactly one
    element, so a cut size can be maintained incrementally. The sequence is
    the classic revolving-door order: the first block recursively covers the
    subsets avoiding n-1, the second block covers subsets containing n-1 in
    reverse.
    """
    if k <= 0 or k >= n:
        return
    yield from revolving_door_swaps(n - 1, k)
    if k >= 2:
        yield (n - 1, k - 2)
    else:
        yield (n - 1, n - 2)
    yield from _reversed_swaps(n - 1, k - 1)


def _reversed_swaps(n: int, k: int) -> Iterator[tuple[int, int]]:
    # Swap steps of the reversed revolving-door sequence, entered at
    # {0,...,k-2} | {n-1} (the last subset of the forward walk over (n, k)).
    if k <= 0 or k >= n:
        return
    yield from revolving_door_swaps(n - 1, k - 1)
    if k >= 2:
        yield (k - 2, n - 1)
    else:
        yield (n - 2, n - 1)
    yield from _reversed_swaps(n - 1, k)
