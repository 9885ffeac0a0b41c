"""Face-spiral winding: build a plane cubic graph from a list of face sizes.

Faces are attached one at a time around a growing disk patch.  The patch
boundary is kept as a doubly linked cyclic list of vertices, each of current
degree 2 or 3.  Every new face glues onto the "pocket" at the current
position: the attachment path starts at the nearest degree-2 vertex at or
behind the growth point, runs forward through the following run of degree-3
vertices, and ends at the next degree-2 vertex.  The face contributes
``size - len(path)`` fresh vertices.  The last face must close the remaining
boundary exactly.

Each edge ends up traversed once in each direction over all recorded face
cycles, so a rotation system can be synthesised from the local constraint
"in the cycle ... a -> b -> d ..., d follows a in the rotation at b".  The
synthesised embedding is re-verified (single 3-cycle per vertex, connected,
Euler formula) before being returned.

``wind`` returns None whenever the sequence does not wind to a valid sphere
embedding; callers treat that as "this spiral does not exist", which is the
right semantics both for parameterised constructions (where the sequence is
known good) and for exhaustive isomer searches (where most sequences fail).
"""

from __future__ import annotations

from typing import Sequence

from .errors import GraphError
from .plane_graph import EmbeddedGraph, _check_connected, _check_euler


def wind(sequence: Sequence[int]) -> EmbeddedGraph | None:
    """Wind a spiral of face sizes into an embedded graph, or return None."""
    sizes = list(sequence)
    n_faces = len(sizes)
    if n_faces < 4 or any(s < 3 for s in sizes):
        return None
    n_expected = 2 * n_faces - 4
    if sum(sizes) != 3 * n_expected:
        return None

    # --- first face -------------------------------------------------------
    m0 = sizes[0]
    nv = m0
    deg = [2] * m0
    nxt: dict[int, int] = {}
    prv: dict[int, int] = {}
    edges: set[tuple[int, int]] = set()
    first = list(range(m0))
    face_cycles = [first]
    for i in range(m0):
        a, b = first[i], first[(i + 1) % m0]
        # the face consumed arc (a, b); the opposite arc stays free
        nxt[b] = a
        prv[a] = b
        edges.add((a, b) if a < b else (b, a))
    blen = m0
    cur = 0

    # --- middle faces -----------------------------------------------------
    for fi in range(1, n_faces - 1):
        m = sizes[fi]

        start = cur
        steps = 0
        while deg[start] == 3:
            start = prv[start]
            steps += 1
            if steps > blen:
                return None  # boundary saturated before the last face

        path = [start]
        x = nxt[start]
        while deg[x] == 3:
            path.append(x)
            x = nxt[x]
            if x == start:
                return None  # single degree-2 vertex left: cannot glue
        path.append(x)

        k = len(path)
        fresh = m - k
        if fresh < 0:
            return None  # face smaller than the pocket it must cover
        v1, vk = path[0], path[-1]
        if fresh == 0:
            e = (v1, vk) if v1 < vk else (vk, v1)
            if v1 == vk or e in edges:
                return None
            edges.add(e)
        else:
            newvs = list(range(nv, nv + fresh))
            nv += fresh
            deg.extend([2] * fresh)
            chain = [vk] + newvs + [v1]
            for i in range(len(chain) - 1):
                a, b = chain[i], chain[i + 1]
                edges.add((a, b) if a < b else (b, a))

        cycle = path + (newvs if fresh else [])
        face_cycles.append(cycle)

        deg[v1] += 1
        deg[vk] += 1

        # relink the boundary: v1 -> w_last -> ... -> w_1 -> vk
        for p in path[1:-1]:
            del nxt[p], prv[p]
        if fresh:
            seq = [v1] + list(reversed(newvs)) + [vk]
        else:
            seq = [v1, vk]
        for i in range(len(seq) - 1):
            nxt[seq[i]] = seq[i + 1]
            prv[seq[i + 1]] = seq[i]
        blen += fresh - (k - 2)
        cur = vk

    # --- closing face -----------------------------------------------------
    m = sizes[-1]
    if blen != m or nv != n_expected:
        return None
    cycle = [cur]
    x = nxt[cur]
    while x != cur:
        cycle.append(x)
        x = nxt[x]
    if len(cycle) != m or any(deg[v] != 3 for v in cycle):
        return None
    face_cycles.append(cycle)

    return _assemble(nv, face_cycles)


def _assemble(nv: int, face_cycles: list[list[int]]) -> EmbeddedGraph | None:
    """Synthesise rotations from oriented face cycles and re-verify."""
    cw: list[dict[int, int]] = [{} for _ in range(nv)]
    for cyc in face_cycles:
        size = len(cyc)
        for i in range(size):
            a, b, d = cyc[i - 1], cyc[i], cyc[(i + 1) % size]
            if a in cw[b]:
                return None
            cw[b][a] = d
    rotation = []
    for v in range(nv):
        ring = cw[v]
        if len(ring) != 3:
            return None
        a0 = min(ring)
        a1 = ring[a0]
        a2 = ring[a1]
        if len({a0, a1, a2}) != 3 or ring[a2] != a0:
            return None
        rotation.append((a0, a1, a2))
    g = EmbeddedGraph(tuple(rotation))
    try:
        _check_connected(g)
        _check_euler(g)
    except GraphError:
        return None
    return g
