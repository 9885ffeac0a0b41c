"""Independent brute-force oracles used to freeze expected test values.

These deliberately share no code with the package: maximum matchings come
from exhaustive search over edge subsets and perfect-matching counts from a
textbook recursion on the lowest uncovered vertex.  They are only usable on
small graphs, which is the point - package results on small inputs must agree
with these, and frozen constants in the test-suite were produced by them.
"""

from __future__ import annotations

from functools import lru_cache


def brute_force_maximum_matching_size(n: int, edges: list[tuple[int, int]]) -> int:
    """Exact maximum matching size by branching on the first usable edge."""

    edges = sorted(set((min(u, v), max(u, v)) for u, v in edges))

    def best(idx: int, used: int) -> int:
        while idx < len(edges) and (used >> edges[idx][0] & 1 or used >> edges[idx][1] & 1):
            idx += 1
        if idx == len(edges):
            return 0
        u, v = edges[idx]
        take = 1 + best(idx + 1, used | 1 << u | 1 << v)
        skip = best(idx + 1, used)
        return max(take, skip)

    return best(0, 0)


def count_perfect_matchings(n: int, adj: list[list[int]]) -> int:
    """Count perfect matchings by pairing the lowest uncovered vertex."""

    neighbour_mask = [0] * n
    for v in range(n):
        for w in adj[v]:
            neighbour_mask[v] |= 1 << w

    full = (1 << n) - 1

    @lru_cache(maxsize=None)
    def count(covered: int) -> int:
        if covered == full:
            return 1
        missing = covered ^ full
        v = (missing & -missing).bit_length() - 1  # lowest uncovered vertex
        total = 0
        free = neighbour_mask[v] & ~covered
        w = 0
        while free:
            low = free & -free
            w = low.bit_length() - 1
            total += count(covered | 1 << v | 1 << w)
            free ^= low
        return total

    result = count(0)
    count.cache_clear()
    return result


def count_disjoint_hexagon_sets(hexagon_vertex_sets: list[frozenset[int]], k: int) -> int:
    """Number of k-element sets of pairwise vertex-disjoint hexagons."""

    from itertools import combinations

    total = 0
    for combo in combinations(hexagon_vertex_sets, k):
        ok = True
        for i in range(k):
            for j in range(i + 1, k):
                if combo[i] & combo[j]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            total += 1
    return total
