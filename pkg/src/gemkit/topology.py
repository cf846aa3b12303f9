"""Topological invariants of the complex represented by a colored graph.

A 4-colored graph encodes a 3-dimensional complex with one tetrahedron per
vertex, one face gluing per edge, one edge class per bicolored cycle and one
vertex class per residue.  Each residue is a 3-colored graph encoding the
closed surface linking that vertex class; the represented compact
3-manifold is the complex minus open cones over the non-sphere links, so
those links are exactly the boundary components.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from gemkit.errors import NotConnectedError
from gemkit.graphs import (
    COLOR_PAIRS,
    COLORS,
    BicoloredCycle,
    ColoredGraph,
    Residue,
    bicolored_cycles,
    bipartition,
    is_connected,
    residues,
)
from gemkit.homology import HomologyGroup, group_from_relations


@dataclass(frozen=True)
class SurfaceType:
    """A closed surface, classified by orientability and Euler characteristic."""

    orientable: bool
    euler: int

    def __post_init__(self):
        if self.euler > 2:
            raise ValueError("no closed surface has Euler characteristic > 2")
        if self.orientable and self.euler % 2:
            raise ValueError("orientable closed surfaces have even Euler characteristic")

    @property
    def genus(self) -> int:
        """Orientable genus, or crosscap number when non-orientable."""
        if self.orientable:
            return (2 - self.euler) // 2
        return 2 - self.euler

    @property
    def is_sphere(self) -> bool:
        return self.euler == 2

    @property
    def is_torus(self) -> bool:
        return self.orientable and self.euler == 0

    def describe(self) -> str:
        if self.is_sphere:
            return "sphere"
        if self.is_torus:
            return "torus"
        kind = "orientable" if self.orientable else "non-orientable"
        return "%s genus-%d surface" % (kind, self.genus)

    def as_dict(self) -> dict:
        return {"orientable": self.orientable, "euler": self.euler, "genus": self.genus}


@dataclass(frozen=True)
class BoundaryProfile:
    """The non-sphere vertex links, one per boundary component."""

    components: tuple[SurfaceType, ...]

    @property
    def closed(self) -> bool:
        return not self.components

    @property
    def all_torus(self) -> bool:
        return all(s.is_torus for s in self.components)

    def __len__(self) -> int:
        return len(self.components)


def surface_type(involutions: Sequence[Sequence[int]]) -> SurfaceType:
    """Classify the closed surface encoded by a connected 3-colored graph.

    With m triangles (graph vertices), 3m/2 edge gluings and one surface
    vertex per bicolored cycle, the Euler characteristic is F - m/2 where F
    counts the bicolored cycles over the three color pairs; the surface is
    orientable exactly when the graph is bipartite.
    """
    maps = tuple(tuple(int(x) for x in m) for m in involutions)
    if len(maps) != 3:
        raise ValueError("expected 3 involutions, got %d" % len(maps))
    m = len(maps[0])
    if m % 2 or m == 0:
        raise ValueError("3-colored graphs have positive even order")
    for mp in maps:
        if len(mp) != m or any(mp[mp[v]] != v or mp[v] == v for v in range(m)):
            raise ValueError("maps must be fixed-point-free involutions")
    # connectivity and bipartiteness in one sweep
    side = [-1] * m
    side[0] = 0
    stack = [0]
    count = 1
    orientable = True
    while stack:
        v = stack.pop()
        s = side[v] ^ 1
        for mp in maps:
            w = mp[v]
            if side[w] < 0:
                side[w] = s
                count += 1
                stack.append(w)
            elif side[w] != s:
                orientable = False
    if count != m:
        raise ValueError("the 3-colored graph must be connected")
    cycles = 0
    for a in range(3):
        for b in range(a + 1, 3):
            seen = [False] * m
            for v0 in range(m):
                if seen[v0]:
                    continue
                cycles += 1
                v, mp, other = v0, maps[a], maps[b]
                while True:
                    seen[v] = True
                    v = mp[v]
                    mp, other = other, mp
                    if v == v0:
                        break
    euler = cycles - m // 2
    return SurfaceType(orientable, euler)


def link_surface(residue: Residue) -> SurfaceType:
    """The closed surface encoded by one residue (a vertex link)."""
    return surface_type(residue.induced_involutions())


def boundary_profile(g: ColoredGraph) -> BoundaryProfile:
    """All non-sphere vertex links, in a deterministic order.

    Empty exactly when the represented manifold is closed.
    """
    if not is_connected(g):
        raise NotConnectedError("boundary_profile requires a connected graph")
    comps = []
    for c in COLORS:
        for r in residues(g, c):
            s = link_surface(r)
            if not s.is_sphere:
                comps.append(s)
    comps.sort(key=lambda s: (not s.orientable, -s.euler))
    return BoundaryProfile(tuple(comps))


def is_closed(g: ColoredGraph) -> bool:
    """True when every vertex link is a sphere."""
    return boundary_profile(g).closed


# ---------------------------------------------------------------------------
# first homology via the dual 2-complex
# ---------------------------------------------------------------------------


def edge_framework(g: ColoredGraph):
    """Deterministic edge bookkeeping shared by homology and voltages.

    Returns ``(edges, tail, tree, free)``: the ordered edge list, the chosen
    tail endpoint of each edge, the breadth-first spanning tree edge set
    (rooted at vertex 0, colors ascending), and the ordered non-tree edges.
    Bipartite graphs are oriented from the side-0 class; otherwise each edge
    runs from its lower endpoint.  Any consistent choice yields the same
    invariants, so only determinism matters here.
    """
    edges = g.edges()
    side = bipartition(g)
    tail = {}
    for e in edges:
        c, u, w = e
        if side is not None and side[u] != 0:
            tail[e] = w
        else:
            tail[e] = u
    seen = [False] * g.order
    seen[0] = True
    queue = [0]
    tree = set()
    for v in queue:
        for c in COLORS:
            w = g.inv[c][v]
            if not seen[w]:
                seen[w] = True
                tree.add((c, v, w) if v < w else (c, w, v))
                queue.append(w)
    free = tuple(e for e in edges if e not in tree)
    return edges, tail, tree, free


def cycle_relation_rows(g: ColoredGraph):
    """Boundary rows of the bicolored-cycle 2-cells over the non-tree edges.

    Each bicolored cycle is traversed once; every crossing of a non-tree
    edge contributes +1 with the edge's orientation and -1 against it (the
    signs alternate around a cycle in the bipartite case).  Collapsing the
    spanning tree makes these rows a presentation of the fundamental
    group's abelianization, with one generator per non-tree edge.

    Returns ``(rows, free)`` with ``free`` the ordered non-tree edges.
    """
    _, tail, _, free = edge_framework(g)
    index = {e: k for k, e in enumerate(free)}
    rows = []
    for pair in COLOR_PAIRS:
        for cyc in bicolored_cycles(g, pair):
            row = [0] * len(free)
            c1, c2 = cyc.colors
            col = c1
            for u in cyc.vertices:
                w = g.inv[col][u]
                e = (col, u, w) if u < w else (col, w, u)
                k = index.get(e)
                if k is not None:
                    row[k] += 1 if u == tail[e] else -1
                col = c1 + c2 - col
            rows.append(row)
    return rows, free


def first_homology(g: ColoredGraph) -> HomologyGroup:
    """First integral homology of the represented compact 3-manifold.

    Computed from the dual 2-complex (a spine of the manifold): one 0-cell
    per graph vertex, one 1-cell per edge, one 2-cell per bicolored cycle.
    After collapsing a spanning tree this leaves order+1 generators modulo
    the cycle relation rows; the Smith normal form reads off rank and
    invariant factors exactly.
    """
    if not is_connected(g):
        raise NotConnectedError("first_homology requires a connected graph")
    rows, free = cycle_relation_rows(g)
    return group_from_relations(len(free), rows)


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------


def is_six_regular(g: ColoredGraph) -> bool:
    """True when every bicolored cycle has length exactly six.

    Such graphs triangulate their manifold with every edge class meeting six
    tetrahedra, the combinatorial shadow of gluings by regular ideal
    tetrahedra; the order must then be divisible by 6.
    """
    if not is_connected(g):
        raise NotConnectedError("is_six_regular requires a connected graph")
    return all(
        len(cyc) == 6 for pair in COLOR_PAIRS for cyc in bicolored_cycles(g, pair)
    )


@dataclass(frozen=True)
class GemComplexityReport:
    """Graph-size complexity data: exact for closed manifolds, a bound otherwise."""

    order: int
    closed: bool
    gem_complexity: Optional[int]
    upper_bound: int


def gem_complexity_report(g: ColoredGraph) -> GemComplexityReport:
    """Order-based complexity report.

    A closed manifold represented by a graph on 2k+2 vertices has graph
    complexity at most k; for bounded manifolds the order itself is the
    upper bound on the minimal representing order.
    """
    closed = is_closed(g)
    k = (g.order - 2) // 2 if closed else None
    return GemComplexityReport(g.order, closed, k, g.order)


def euler_characteristic(g: ColoredGraph) -> int:
    """Euler characteristic of the represented 3-complex.

    Counts residues minus bicolored cycles plus faces minus tetrahedra;
    zero for every closed orientable case.
    """
    r = sum(len(residues(g, c)) for c in COLORS)
    cyc = sum(len(bicolored_cycles(g, pair)) for pair in COLOR_PAIRS)
    return r - cyc + 2 * g.order - g.order


def invariant_report(
    g: ColoredGraph, name: Optional[str] = None, code: Optional[str] = None
) -> dict:
    """The JSON-ready invariant record for one connected graph."""
    profile = boundary_profile(g)
    h1 = first_homology(g)
    return {
        "name": name,
        "code": code,
        "order": g.order,
        "bipartite": bipartition(g) is not None,
        "closed": profile.closed,
        "boundary": [s.as_dict() for s in profile.components],
        "h1": {"rank": h1.rank, "torsion": list(h1.torsion)},
        "six_regular": is_six_regular(g),
    }
