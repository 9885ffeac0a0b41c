"""Resonance analysis: which disjoint hexagon sets support alternating matchings.

A set H of pairwise vertex-disjoint hexagons is *resonant* when some perfect
matching makes every hexagon of H alternating - equivalently, when the graph
minus V(H) still has a perfect matching (each hexagon can then be closed with
three of its own boundary edges).  Everything in this module builds on that
equivalence: the sextet polynomial counts resonant sets by size, the Clar
number is its degree, k-resonance asks that all disjoint k-sets be resonant,
and the resonance order is the largest such k (with "ALL" when every size is
exhausted vacuously).

Results per hexagon set are memoised on the graph, so computing the sextet
polynomial, the resonance order, and spot checks in one process shares work.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Union

from .errors import GraphError
from .matching import (
    Matching,
    alternating_faces,
    enumerate_perfect_matchings,
    is_central,
    maximum_matching,
)
from .plane_graph import FullereneGraph, delete_vertices, is_bipartite

ALL = "ALL"


@dataclass(frozen=True)
class ResonantPattern:
    """A resonant hexagon set with its certifying perfect matching."""

    hexagons: tuple[int, ...]
    matching: Matching


@dataclass(frozen=True)
class SextetPolynomial:
    """Counts of resonant hexagon sets by size; coefficients[i] is the i-count."""

    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def sigma(self, i: int) -> int:
        return self.coefficients[i] if 0 <= i < len(self.coefficients) else 0

    def __call__(self, x: float) -> float:
        total = 0.0
        for c in reversed(self.coefficients):
            total = total * x + c
        return total

    def descending(self) -> tuple[int, ...]:
        """Coefficients from the leading term down; the serialised order."""
        return tuple(reversed(self.coefficients))


@dataclass(frozen=True)
class OrderReport:
    """Resonance order plus the smallest failing set when the order is finite.

    ``order`` is either an int k (all disjoint sets of size <= k resonant,
    some (k+1)-set is not) or the string "ALL" when no failing set of any
    size exists.  ``failing`` is the size-then-lex first non-resonant set.
    ``capped`` marks an early stop at a caller-imposed maximum, in which case
    ``order`` is a lower bound.
    """

    order: Union[int, str]
    failing: tuple[int, ...] | None
    capped: bool = False


@dataclass(frozen=True)
class GStarWitness:
    """Three disjoint hexagons jointly covering a vertex's whole neighbourhood.

    Removing them isolates the vertex, so the set can never be resonant.
    """

    vertex: int
    hexagons: tuple[int, int, int]


@dataclass(frozen=True)
class HexagonReport:
    """Resonance and bipartiteness data for one hexagon's deletion."""

    face_id: int
    resonant: bool
    deletion_bipartite: bool
    odd_cycle: tuple[int, ...] | None


def _hexagon_conflicts(f: FullereneGraph) -> dict[int, frozenset[int]]:
    """For each hexagon, the hexagons sharing at least one vertex with it."""
    cache = f._memo.get("hex_conflicts")
    if cache is None:
        cache = {}
        hexes = f.hexagon_ids
        for i, a in enumerate(hexes):
            av = f.faces[a].vertices
            bad = [b for b in hexes if b != a and av & f.faces[b].vertices]
            cache[a] = frozenset(bad)
        f._memo["hex_conflicts"] = cache
    return cache


def _check_hexagon_set(f: FullereneGraph, hexagon_ids: Iterable[int]) -> tuple[int, ...]:
    ids = tuple(sorted(set(hexagon_ids)))
    for h in ids:
        if not 0 <= h < len(f.faces):
            raise GraphError(f"face id {h} outside 0..{len(f.faces) - 1}")
        if not f.is_hexagon(h):
            raise GraphError(f"face {h} is a pentagon; resonant sets contain hexagons only")
    for i in range(len(ids)):
        vi = f.faces[ids[i]].vertices
        for j in range(i + 1, len(ids)):
            if vi & f.faces[ids[j]].vertices:
                raise GraphError(
                    f"hexagons {ids[i]} and {ids[j]} share vertices; the set must be disjoint"
                )
    return ids


def _resonant(f: FullereneGraph, ids: tuple[int, ...]) -> bool:
    """Memoised resonance decision for a validated disjoint hexagon set."""
    memo = f._memo.setdefault("resonant", {})
    key = frozenset(ids)
    hit = memo.get(key)
    if hit is None:
        hit = is_central(f, ids)
        memo[key] = hit
    return hit


def is_resonant_pattern(
    f: FullereneGraph, hexagon_ids: Iterable[int]
) -> ResonantPattern | None:
    """Decide resonance of a disjoint hexagon set; certificate on success.

    The certificate is a perfect matching of the whole graph that alternates
    on every hexagon of the set: a perfect matching of the rest, completed
    with three boundary edges in each deleted hexagon.

    Raises:
        GraphError: if a face id is not a hexagon or two hexagons intersect.
    """
    ids = _check_hexagon_set(f, hexagon_ids)
    if not _resonant(f, ids):
        return None
    dropped = [v for h in ids for v in f.faces[h].vertices]
    sub = delete_vertices(f, dropped)
    rest = maximum_matching(sub)
    assert 2 * rest.size == sub.n
    edges = {
        (a, b) if a < b else (b, a)
        for u, v in rest.edges
        for a, b in [(sub.to_parent(u), sub.to_parent(v))]
    }
    for h in ids:
        b = f.faces[h].boundary
        for i in (0, 2, 4):
            u, v = b[i], b[i + 1]
            edges.add((u, v) if u < v else (v, u))
    cert = Matching(frozenset(edges), f)
    assert set(ids) <= set(alternating_faces(f, cert))
    return ResonantPattern(ids, cert)


def disjoint_hexagon_sets(f: FullereneGraph, k: int) -> Iterator[tuple[int, ...]]:
    """All k-sets of pairwise vertex-disjoint hexagons, lexicographically."""
    if k < 0:
        raise GraphError(f"set size must be non-negative, got {k}")
    conflicts = _hexagon_conflicts(f)
    hexes = f.hexagon_ids

    def extend(prefix: list[int], banned: frozenset[int], start: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == k:
            yield tuple(prefix)
            return
        remaining = k - len(prefix)
        for idx in range(start, len(hexes) - remaining + 1):
            h = hexes[idx]
            if h in banned:
                continue
            prefix.append(h)
            yield from extend(prefix, banned | conflicts[h], idx + 1)
            prefix.pop()

    yield from extend([], frozenset(), 0)


def sextet(f: FullereneGraph) -> SextetPolynomial:
    """The polynomial whose i-th coefficient counts resonant i-sets.

    Each candidate set is tested individually; sizes are swept upward until
    one contributes nothing (a resonant set's subsets are resonant, so all
    larger sizes are then empty too).
    """
    coeffs = [1]  # the empty set: fullerene graphs always have a perfect matching
    assert _resonant(f, ())
    k = 1
    while True:
        count = 0
        for ids in disjoint_hexagon_sets(f, k):
            if _resonant(f, ids):
                count += 1
        if count == 0:
            break
        coeffs.append(count)
        k += 1
    return SextetPolynomial(tuple(coeffs))


def clar(f: FullereneGraph) -> int:
    """Largest size of a resonant hexagon set (the sextet polynomial's degree)."""
    return sextet(f).degree


def fries(f: FullereneGraph, cap: int | None = None) -> int:
    """Largest number of alternating hexagons over all perfect matchings.

    Raises:
        GuardExceeded: if the matching count exceeds the enumeration cap.
    """
    best = 0
    for m in enumerate_perfect_matchings(f, cap):
        best = max(best, len(alternating_faces(f, m)))
    return best


def resonance_order(f: FullereneGraph, max_k: int | None = None) -> OrderReport:
    """Largest k such that every disjoint k-set of hexagons is resonant.

    Sizes are swept upward.  A size with no disjoint sets at all ends the
    sweep with order "ALL" (every later size is empty too).  The first
    non-resonant set encountered - smallest size, lexicographically first -
    is reported as the failing witness.
    """
    k = 1
    while True:
        if max_k is not None and k > max_k:
            return OrderReport(max_k, None, capped=True)
        any_set = False
        for ids in disjoint_hexagon_sets(f, k):
            any_set = True
            if not _resonant(f, ids):
                return OrderReport(k - 1, ids)
        if not any_set:
            return OrderReport(ALL, None)
        k += 1


def find_g_star(f: FullereneGraph) -> GStarWitness | None:
    """Scan for a vertex whose three opposite faces are disjoint hexagons.

    The face "opposite" a neighbour w of v is the one containing w but not v.
    If all three are hexagons and pairwise vertex-disjoint, removing them
    isolates v, so they witness a non-resonant 3-set.  Vertices are scanned
    in ascending order; the first hit is returned.
    """
    for v in range(f.n):
        opposite = []
        ok = True
        for w in f.graph.neighbors(v):
            fid = _face_avoiding(f, w, v)
            if fid is None or not f.is_hexagon(fid):
                ok = False
                break
            opposite.append(fid)
        if not ok:
            continue
        a, b, c = (f.faces[x].vertices for x in opposite)
        if a & b or a & c or b & c:
            continue
        witness = GStarWitness(v, tuple(sorted(opposite)))
        ids = _check_hexagon_set(f, witness.hexagons)
        assert not _resonant(f, ids)
        return witness
    return None


def _face_avoiding(f: FullereneGraph, at: int, avoid: int) -> int | None:
    """The unique face incident with ``at`` that misses ``avoid``."""
    found = None
    for fid in f.faces.faces_at(at):
        if avoid not in f.faces[fid].vertices:
            assert found is None
            found = fid
    return found


def hexagon_dichotomy_report(f: FullereneGraph) -> tuple[HexagonReport, ...]:
    """Per-hexagon record: is it resonant, and is the graph minus it bipartite?

    For fullerene graphs the expected pattern is resonant=True with a
    non-bipartite remainder (witnessed by an odd cycle).
    """
    out = []
    for h in f.hexagon_ids:
        resonant = _resonant(f, (h,))
        sub = delete_vertices(f, f.faces[h].vertices)
        bip, cycle = is_bipartite(sub)
        out.append(HexagonReport(h, resonant, bip, cycle))
    return tuple(out)
