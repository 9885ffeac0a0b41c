"""Plane cubic graphs as rotation systems.

A graph is given by listing, for every vertex, its three neighbours in
clockwise order.  That is enough to recover the whole embedding: faces are
traced arc by arc, where the successor of the directed edge (u, v) is (v, w)
with w the neighbour immediately following u in the clockwise rotation at v.
Under this convention each face keeps its interior on the right of its
directed boundary, and the traced faces partition the 3V arcs; V - E + F = 2
then certifies a sphere embedding.

The module provides parsing/serialisation of the ``.rot`` text format,
face tracing, fullerene validation, vertex deletion (induced subgraphs),
bipartiteness with an odd-cycle witness, a canonical code deciding
plane-isomorphism (reflections included), and a brute-force cyclic
edge-connectivity check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import GraphError, GuardExceeded, NotFullereneError
from . import kernels

Arc = tuple[int, int]
Edge = tuple[int, int]


# ---------------------------------------------------------------------------
# core types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EmbeddedGraph:
    """A connected plane cubic simple graph, stored as a rotation system.

    ``rotation[v]`` lists the three neighbours of v in clockwise order.
    Instances are produced by :func:`parse_graph` (or trusted internal
    constructions) and are immutable.
    """

    rotation: tuple[tuple[int, int, int], ...]

    @property
    def n(self) -> int:
        return len(self.rotation)

    def neighbors(self, v: int) -> tuple[int, int, int]:
        return self.rotation[v]

    def edges(self) -> list[Edge]:
        """All undirected edges as (u, v) pairs with u < v, sorted."""
        return sorted(
            (v, w) if v < w else (w, v)
            for v in range(self.n)
            for w in self.rotation[v]
            if v < w
        )

    def arcs(self) -> list[Arc]:
        """All 3V directed edges, sorted."""
        return sorted((v, w) for v in range(self.n) for w in self.rotation[v])

    def cw_next(self, u: int, v: int) -> int:
        """The neighbour of v immediately following u in clockwise order."""
        ring = self.rotation[v]
        return ring[(ring.index(u) + 1) % 3]

    def cw_prev(self, u: int, v: int) -> int:
        """The neighbour of v immediately preceding u in clockwise order."""
        ring = self.rotation[v]
        return ring[(ring.index(u) - 1) % 3]

    def next_arc(self, arc: Arc) -> Arc:
        """Face-tracing successor of ``arc``; the face stays on the right."""
        u, v = arc
        return (v, self.cw_next(u, v))

    def prev_arc(self, arc: Arc) -> Arc:
        """Face-tracing predecessor of ``arc``."""
        u, v = arc
        return (self.cw_prev(v, u), u)


@dataclass(frozen=True)
class Face:
    """One traced face: its boundary vertex cycle, starting at the least arc."""

    index: int
    boundary: tuple[int, ...]
    vertices: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.boundary)

    def boundary_edges(self) -> tuple[Edge, ...]:
        """The boundary's undirected edges, in cycle order."""
        b = self.boundary
        return tuple(
            (b[i], b[(i + 1) % len(b)]) if b[i] < b[(i + 1) % len(b)]
            else (b[(i + 1) % len(b)], b[i])
            for i in range(len(b))
        )

    def boundary_arcs(self) -> tuple[Arc, ...]:
        b = self.boundary
        return tuple((b[i], b[(i + 1) % len(b)]) for i in range(len(b)))


@dataclass(frozen=True, eq=False)
class FaceSet:
    """All faces of an embedding, indexed by their least boundary arc.

    Face ids are assigned in increasing order of each face's
    lexicographically least boundary arc, which makes them stable across
    runs for identical input.
    """

    faces: tuple[Face, ...]
    _arc_face: dict[Arc, int] = field(repr=False)
    _vertex_faces: tuple[tuple[int, ...], ...] = field(repr=False)

    def __len__(self) -> int:
        return len(self.faces)

    def __iter__(self) -> Iterator[Face]:
        return iter(self.faces)

    def __getitem__(self, face_id: int) -> Face:
        return self.faces[face_id]

    def face_of_arc(self, arc: Arc) -> int:
        """Id of the unique face whose boundary uses the directed edge."""
        return self._arc_face[arc]

    def faces_at(self, v: int) -> tuple[int, ...]:
        """Ids of the three faces incident with vertex v, ascending."""
        return self._vertex_faces[v]

    def sizes(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for f in self.faces:
            out[f.size] = out.get(f.size, 0) + 1
        return out


@dataclass(frozen=True, eq=False)
class FullereneGraph:
    """A validated fullerene graph: cubic, plane, 12 pentagons, rest hexagons."""

    graph: EmbeddedGraph
    faces: FaceSet
    pentagon_ids: tuple[int, ...]
    hexagon_ids: tuple[int, ...]
    _memo: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def n(self) -> int:
        return self.graph.n

    def face(self, face_id: int) -> Face:
        return self.faces[face_id]

    def is_hexagon(self, face_id: int) -> bool:
        return self.faces[face_id].size == 6


@dataclass(frozen=True, eq=False)
class Subgraph:
    """An induced subgraph, remembering its parent and original vertex ids.

    ``vertices[i]`` is the parent id of local vertex i; ``adj[i]`` lists local
    neighbour indices in the order inherited from the parent rotation.
    """

    parent: object
    vertices: tuple[int, ...]
    adj: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.vertices)

    def to_parent(self, local: int) -> int:
        return self.vertices[local]

    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2


# ---------------------------------------------------------------------------
# parsing and serialisation (.rot format)
# ---------------------------------------------------------------------------


def parse_graph(text: str) -> EmbeddedGraph:
    """Parse the ``.rot`` format into a validated plane cubic graph.

    Format: optional ``#`` comment lines; the first data line holds the vertex
    count n; then n lines ``i: a b c`` giving vertex i's neighbours in
    clockwise order (0-based, listed in ascending i).

    Raises:
        GraphError: on malformed text, a non-cubic vertex, asymmetric
            adjacency, loops or repeated neighbours (multi-edges), a
            disconnected graph, or an arc partition failing Euler's formula
            (not a sphere embedding).
    """
    lines: list[str] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise GraphError("empty input: expected a vertex count line")
    try:
        n = int(lines[0])
    except ValueError:
        raise GraphError(f"first data line must be the vertex count, got {lines[0]!r}") from None
    if n < 4:
        raise GraphError(f"vertex count {n} too small for a cubic graph")
    if len(lines) - 1 != n:
        raise GraphError(f"expected {n} vertex lines, found {len(lines) - 1}")

    rotation: list[tuple[int, int, int]] = []
    for i, line in enumerate(lines[1:]):
        head, _, tail = line.partition(":")
        if not _:
            raise GraphError(f"vertex line {line!r} lacks the 'i:' prefix")
        try:
            idx = int(head)
            nbrs = [int(tok) for tok in tail.split()]
        except ValueError:
            raise GraphError(f"unparseable vertex line {line!r}") from None
        if idx != i:
            raise GraphError(f"vertex lines out of order: expected {i}, got {idx}")
        if len(nbrs) != 3:
            raise GraphError(f"vertex {i} lists {len(nbrs)} neighbours; the graph must be cubic")
        for w in nbrs:
            if not 0 <= w < n:
                raise GraphError(f"vertex {i} lists neighbour {w} outside 0..{n - 1}")
            if w == i:
                raise GraphError(f"vertex {i} lists itself (loops are not allowed)")
        if len(set(nbrs)) != 3:
            raise GraphError(f"vertex {i} repeats a neighbour (multi-edges are not allowed)")
        rotation.append((nbrs[0], nbrs[1], nbrs[2]))

    for v in range(n):
        for w in rotation[v]:
            if v not in rotation[w]:
                raise GraphError(f"asymmetric adjacency: {v} lists {w} but {w} does not list {v}")

    g = EmbeddedGraph(tuple(rotation))
    _check_connected(g)
    _check_euler(g)
    return g


def emit_graph(g: EmbeddedGraph, comments: Sequence[str] = ()) -> str:
    """Serialise to the ``.rot`` format (inverse of :func:`parse_graph`)."""
    out = [f"# {c}" for c in comments]
    out.append(str(g.n))
    for v in range(g.n):
        a, b, c = g.rotation[v]
        out.append(f"{v}: {a} {b} {c}")
    return "\n".join(out) + "\n"


def _check_connected(g: EmbeddedGraph) -> None:
    seen = [False] * g.n
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        v = stack.pop()
        for w in g.rotation[v]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    if count != g.n:
        raise GraphError(f"graph is disconnected ({count} of {g.n} vertices reachable)")


def _check_euler(g: EmbeddedGraph) -> None:
    n_faces = len(_trace_face_cycles(g))
    v, e = g.n, 3 * g.n // 2
    chi = v - e + n_faces
    if chi != 2:
        raise GraphError(
            f"rotation system is not a sphere embedding: V-E+F = {v}-{e}+{n_faces} = {chi}"
        )


# ---------------------------------------------------------------------------
# face tracing
# ---------------------------------------------------------------------------


def _trace_face_cycles(g: EmbeddedGraph) -> list[tuple[Arc, ...]]:
    """Partition all arcs into face cycles, each rotated to start at its least arc."""
    seen: set[Arc] = set()
    cycles: list[tuple[Arc, ...]] = []
    for start in g.arcs():
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        arc = g.next_arc(start)
        while arc != start:
            cycle.append(arc)
            seen.add(arc)
            arc = g.next_arc(arc)
        k = cycle.index(min(cycle))
        cycles.append(tuple(cycle[k:] + cycle[:k]))
    cycles.sort(key=lambda c: c[0])
    return cycles


def faces(g: EmbeddedGraph) -> FaceSet:
    """Trace all faces of the embedding.

    Face ids follow the order of each face's least boundary arc.
    """
    cycles = _trace_face_cycles(g)
    built: list[Face] = []
    arc_face: dict[Arc, int] = {}
    at_vertex: list[set[int]] = [set() for _ in range(g.n)]
    for idx, cycle in enumerate(cycles):
        boundary = tuple(a[0] for a in cycle)
        built.append(Face(idx, boundary, frozenset(boundary)))
        for a in cycle:
            arc_face[a] = idx
            at_vertex[a[0]].add(idx)
    return FaceSet(tuple(built), arc_face, tuple(tuple(sorted(s)) for s in at_vertex))


def validate_fullerene(g: EmbeddedGraph) -> FullereneGraph:
    """Check the fullerene face condition and wrap the graph.

    Raises:
        NotFullereneError: if any face is not a pentagon or hexagon, or the
            pentagon count differs from 12.
    """
    fs = faces(g)
    for f in fs:
        if f.size not in (5, 6):
            raise NotFullereneError(
                f"face {f.index} has size {f.size}; fullerene faces are pentagons and hexagons"
            )
    pentagons = tuple(f.index for f in fs if f.size == 5)
    hexagons = tuple(f.index for f in fs if f.size == 6)
    if len(pentagons) != 12:
        raise NotFullereneError(f"found {len(pentagons)} pentagonal faces; a fullerene has exactly 12")
    # Implied by Euler's formula once all faces are 5s and 6s:
    assert len(hexagons) == g.n // 2 - 10
    assert g.n >= 20 and g.n % 2 == 0
    return FullereneGraph(g, fs, pentagons, hexagons)


# ---------------------------------------------------------------------------
# induced subgraphs
# ---------------------------------------------------------------------------


def delete_vertices(g: EmbeddedGraph | FullereneGraph, drop: Iterable[int]) -> Subgraph:
    """Induced subgraph on the complement of ``drop`` (parent ids).

    Neighbour order is inherited from the parent rotation. Deleting nothing
    yields a subgraph with the full vertex set and identical adjacency.
    """
    base = g.graph if isinstance(g, FullereneGraph) else g
    dropped = set(drop)
    for v in dropped:
        if not 0 <= v < base.n:
            raise GraphError(f"cannot delete vertex {v}: outside 0..{base.n - 1}")
    kept = tuple(v for v in range(base.n) if v not in dropped)
    local = {v: i for i, v in enumerate(kept)}
    adj = tuple(
        tuple(local[w] for w in base.rotation[v] if w not in dropped) for v in kept
    )
    return Subgraph(g, kept, adj)


def is_bipartite(s: Subgraph | EmbeddedGraph) -> tuple[bool, tuple[int, ...] | None]:
    """Two-colourability plus an odd-cycle witness.

    Returns ``(True, None)`` or ``(False, cycle)`` where ``cycle`` is an
    odd vertex cycle in parent ids (for subgraphs) or the graph's own ids.
    """
    if isinstance(s, EmbeddedGraph):
        n, adj, labels = s.n, [list(s.rotation[v]) for v in range(s.n)], tuple(range(s.n))
    else:
        n, adj, labels = s.n, [list(a) for a in s.adj], s.vertices
    color = [-1] * n
    parent = [-1] * n
    for root in range(n):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = [root]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for w in adj[v]:
                if color[w] < 0:
                    color[w] = color[v] ^ 1
                    parent[w] = v
                    queue.append(w)
                elif color[w] == color[v]:
                    cycle = _odd_cycle(v, w, parent)
                    return False, tuple(labels[x] for x in cycle)
    return True, None


def _odd_cycle(v: int, w: int, parent: list[int]) -> list[int]:
    seen_at = {}
    x = v
    while x != -1:
        seen_at[x] = True
        x = parent[x]
    x = w
    while x not in seen_at:
        x = parent[x]
    meet = x
    path_v = []
    x = v
    while x != meet:
        path_v.append(x)
        x = parent[x]
    path_w = []
    x = w
    while x != meet:
        path_w.append(x)
        x = parent[x]
    cycle = path_v + [meet] + list(reversed(path_w))
    assert len(cycle) % 2 == 1
    return cycle


# ---------------------------------------------------------------------------
# canonical code
# ---------------------------------------------------------------------------


def canonical_code(g: EmbeddedGraph | FullereneGraph) -> bytes:
    """A canonical byte string deciding plane-isomorphism, reflections included.

    For every directed start arc and both rotation orientations, vertices are
    labelled breadth-first in discovery order; each vertex contributes its
    three neighbour labels listed from its entry arc onward in the chosen
    orientation. The code is the lexicographic minimum over all starts. Two
    graphs get equal codes iff some sphere homeomorphism (orientation
    preserving or reversing) maps one embedding onto the other.
    """
    base = g.graph if isinstance(g, FullereneGraph) else g
    n = base.n
    if n > 255:
        raise GuardExceeded(f"canonical code supports at most 255 vertices, got {n}")
    rotation = base.rotation
    best: bytes | None = None
    for u in range(n):
        for v in rotation[u]:
            for direction in (1, -1):
                code = _code_from(rotation, n, u, v, direction)
                if best is None or code < best:
                    best = code
    assert best is not None
    return bytes([n]) + best


def _code_from(
    rotation: tuple[tuple[int, int, int], ...], n: int, u: int, v: int, direction: int
) -> bytes:
    label = [-1] * n
    entry = [-1] * n
    order = [u]
    label[u] = 0
    entry[u] = v
    out = bytearray()
    i = 0
    while i < len(order):
        w = order[i]
        i += 1
        ring = rotation[w]
        k = ring.index(entry[w])
        for j in range(3):
            x = ring[(k + direction * j) % 3]
            if label[x] < 0:
                label[x] = len(order)
                entry[x] = w
                order.append(x)
            out.append(label[x])
    return bytes(out)


# ---------------------------------------------------------------------------
# cyclic edge connectivity
# ---------------------------------------------------------------------------


def verify_cyclic_edge_connectivity(g: EmbeddedGraph | FullereneGraph, k: int = 4) -> bool:
    """Brute-force check that no edge cut of size < k separates two cycles.

    True iff the graph is cyclically k-edge connected: removing any fewer than
    k edges never leaves two components that each contain a cycle. Desk-scale
    only.

    Raises:
        GuardExceeded: if the graph has more than 100 vertices or k > 4.
    """
    base = g.graph if isinstance(g, FullereneGraph) else g
    if base.n > 100:
        raise GuardExceeded(f"cyclic connectivity guard: {base.n} vertices exceeds the 100-vertex cap")
    if k > 4:
        raise GuardExceeded(f"cyclic connectivity guard: k={k} exceeds the brute-force bound 4")
    if k <= 1:
        return True
    return not kernels.has_small_cyclic_cut(base.n, base.edges(), k - 1)
