"""Graph distance, direction of half-edges, and extremal geodesics.

Distances are measured on vertices along edges.  A half-edge points
toward a vertex v when its head is strictly closer to v than its tail,
away when strictly farther, and is parallel otherwise.

A leftmost (rightmost) geodesic greedily extends a walk by the first
distance-decreasing dart encountered while turning clockwise
(counterclockwise) around the current vertex, starting the scan just
past the dart that was arrived on, or sweeping the sector of a corner
when the walk starts in one.
"""

from __future__ import annotations

from collections import deque

from .maps import PlaneMap


def distances(m: PlaneMap, v: int) -> tuple[int, ...]:
    """BFS distance from vertex index v to every vertex."""
    dist = [-1] * m.n_vertices
    dist[v] = 0
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for d in m.vertex_darts(u):
            w = m.head_of(d)
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return tuple(dist)


def classify_dart(m: PlaneMap, d: int, v: int, dist=None) -> str:
    """'toward', 'away' or 'parallel' relative to vertex index v."""
    if dist is None:
        dist = distances(m, v)
    a = dist[m.vertex_of(d)]
    b = dist[m.head_of(d)]
    if b < a:
        return "toward"
    if b > a:
        return "away"
    return "parallel"


def _walk(m, start_candidates, step, target, dist):
    path = []
    cands = start_candidates
    while True:
        cur = m.vertex_of(cands[0])
        if dist[cur] == 0:
            return tuple(path)
        for u in cands:
            if dist[m.head_of(u)] == dist[cur] - 1:
                path.append(u)
                cands = step(u)
                break
        else:
            raise AssertionError("no distance-decreasing dart found")


def _clockwise_from(m, d):
    """All darts at the origin of d: d itself last, scanning clockwise."""
    out = [m.sigma(d)]
    while out[-1] != d:
        out.append(m.sigma(out[-1]))
    return out


def _counterclockwise_from(m, d):
    out = [m.sigma_inv(d)]
    while out[-1] != d:
        out.append(m.sigma_inv(out[-1]))
    return out


def leftmost_geodesic(
    m: PlaneMap, target: int, *, from_dart=None, from_corner=None
) -> tuple[int, ...]:
    """Leftmost geodesic to vertex index target.

    Exactly one of from_dart (continue past that dart) and from_corner
    (start inside the corner before that dart) must be given.  Returns
    the darts of the walk, empty when already at the target.
    """
    dist = distances(m, target)
    step = lambda u: _clockwise_from(m, m.twin[u])
    if (from_dart is None) == (from_corner is None):
        raise TypeError("need exactly one of from_dart and from_corner")
    if from_dart is not None:
        cands = step(from_dart)
    else:
        d = from_corner
        cands = [d] + _clockwise_from(m, d)[:-1]
    return _walk(m, cands, step, target, dist)


def rightmost_geodesic(
    m: PlaneMap, target: int, *, from_dart=None, from_corner=None
) -> tuple[int, ...]:
    """Rightmost geodesic to vertex index target, mirror of leftmost."""
    dist = distances(m, target)
    step = lambda u: _counterclockwise_from(m, m.twin[u])
    if (from_dart is None) == (from_corner is None):
        raise TypeError("need exactly one of from_dart and from_corner")
    if from_dart is not None:
        cands = step(from_dart)
    else:
        cands = _counterclockwise_from(m, from_corner)
    return _walk(m, cands, step, target, dist)


def edge_id(m: PlaneMap, d: int) -> int:
    return min(d, m.twin[d])


def simple_cycles(m: PlaneMap) -> list[tuple[int, ...]]:
    """All vertex-simple cycles as dart walks, one orientation each."""
    found: dict[frozenset, tuple[int, ...]] = {}
    for s in range(m.n_vertices):

        def dfs(v, path, visited, used):
            for d in m.vertex_darts(v):
                eid = edge_id(m, d)
                if eid in used:
                    continue
                h = m.head_of(d)
                if h == s:
                    found.setdefault(frozenset(used | {eid}), tuple(path) + (d,))
                elif h not in visited:
                    dfs(h, path + [d], visited | {h}, used | {eid})

        dfs(s, [], {s}, frozenset())
    return list(found.values())


def cycle_separates(m: PlaneMap, cycle: tuple[int, ...], fa: int, fb: int) -> bool:
    """Whether faces fa and fb lie on opposite sides of the cycle."""
    on_cycle = {edge_id(m, d) for d in cycle}
    parent = list(range(m.n_faces + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for d in range(m.n_darts):
        if edge_id(m, d) not in on_cycle:
            a, b = find(m.face[d]), find(m.face[m.twin[d]])
            if a != b:
                parent[a] = b
    sides = {find(i) for i in range(1, m.n_faces + 1)}
    assert len(sides) == 2, "a simple cycle must cut the sphere in two"
    return find(fa) != find(fb)


def classification_violations(m: PlaneMap) -> list[str]:
    """Check the direction statistics implied by the parity class.

    Bipartite maps: around any vertex v, every face sees half of its
    contour darts toward v, half away, none parallel.  Quasibipartite
    maps: each odd face contributes one parallel dart per vertex and
    splits the rest evenly, each even face has zero or two parallel
    darts, and a simple cycle has odd length exactly when it separates
    the two odd faces.  Returns human-readable violations, empty when
    the map conforms.
    """
    out = []
    odd = [i for i in range(1, m.n_faces + 1) if m.degree(i) % 2]
    for v in range(m.n_vertices):
        dist = distances(m, v)
        for i in range(1, m.n_faces + 1):
            toward = away = par = 0
            for d in m.contour(i):
                c = classify_dart(m, d, v, dist)
                toward += c == "toward"
                away += c == "away"
                par += c == "parallel"
            a = m.degree(i)
            if i in odd:
                want = ((a - 1) // 2, (a - 1) // 2, 1)
                if (toward, away, par) != want:
                    out.append(
                        f"odd face {i} at vertex {v}: "
                        f"({toward}, {away}, {par}) != {want}"
                    )
            else:
                if par not in ((0,) if not odd else (0, 2)) or toward != away:
                    out.append(
                        f"even face {i} at vertex {v}: "
                        f"({toward}, {away}, {par})"
                    )
    if len(odd) == 2:
        fa, fb = odd
        for cycle in simple_cycles(m):
            sep = cycle_separates(m, cycle, fa, fb)
            if sep != bool(len(cycle) % 2):
                out.append(
                    f"cycle of length {len(cycle)} "
                    f"{'separates' if sep else 'does not separate'} "
                    f"the odd faces"
                )
    return out
