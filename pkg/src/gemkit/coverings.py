"""Cyclic-group voltage assignments, derived graphs and covering maps.

A voltage assignment over Z_n labels each oriented edge of a base graph
with a group element, opposite orientations getting opposite elements.  The
derived graph has one fiber of n vertices over each base vertex; traversing
the color-c edge from ``(v, i)`` lands on ``(inv[c][v], i + volt(v, c))``.
A covering is *admissible* when it restricts to a bijection on every
bicolored cycle, which for derived graphs means every cycle has trivial
holonomy; admissible coverings of a graph whose manifold glues tetrahedra
face-to-face are unbranched on the interior and on all vertex links.
"""

from __future__ import annotations

from itertools import product
from math import gcd
from typing import Mapping, Optional, Sequence

from gemkit.errors import (
    NoAdmissibleCoveringError,
    NonUniformFiberError,
    NotAdjacencyPreservingError,
    NotConnectedError,
)
from gemkit.graphs import (
    COLOR_PAIRS,
    COLORS,
    BicoloredCycle,
    ColoredGraph,
    bicolored_cycles,
    is_connected,
)
from gemkit.homology import snf_with_column_transform
from gemkit.topology import cycle_relation_rows, edge_framework


class VoltageAssignment:
    """Z_n edge voltages on a base graph.

    ``volt[v][c]`` is the element picked up when leaving ``v`` along its
    color-c edge; the reverse traversal picks up the negative, which the
    constructor enforces.
    """

    __slots__ = ("base", "n", "volt")

    def __init__(self, base: ColoredGraph, n: int, volt: Sequence[Sequence[int]]):
        if n < 1:
            raise ValueError("the voltage group Z_n needs n >= 1")
        table = tuple(tuple(int(x) % n for x in row) for row in volt)
        if len(table) != base.order or any(len(row) != 4 for row in table):
            raise ValueError("volt must be an order x 4 table")
        for v in range(base.order):
            for c in COLORS:
                w = base.inv[c][v]
                if (table[v][c] + table[w][c]) % n:
                    raise ValueError(
                        "voltages on the color-%d edge at %d are not antisymmetric"
                        % (c, v)
                    )
        self.base = base
        self.n = n
        self.volt = table

    @classmethod
    def from_edge_values(
        cls,
        base: ColoredGraph,
        n: int,
        values: Mapping[tuple[int, int, int], int],
        tail: Mapping[tuple[int, int, int], int],
    ) -> "VoltageAssignment":
        """Build a full table from per-edge values read tail-to-head.

        ``values`` maps ``(color, u, w)`` edges (``u < w``) to the element
        picked up from ``tail[edge]`` toward the other endpoint; edges not
        listed carry 0.
        """
        volt = [[0] * 4 for _ in range(base.order)]
        for edge, val in values.items():
            c, u, w = edge
            if base.inv[c][u] != w:
                raise ValueError("%r is not an edge of the base graph" % (edge,))
            t = tail[edge]
            h = w if t == u else u
            volt[t][c] = val % n
            volt[h][c] = -val % n
        return cls(base, n, volt)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, VoltageAssignment)
            and self.base == other.base
            and self.n == other.n
            and self.volt == other.volt
        )

    def __hash__(self) -> int:
        return hash((self.base, self.n, self.volt))

    def __repr__(self) -> str:
        return "VoltageAssignment(order=%d, n=%d)" % (self.base.order, self.n)


class CoveringMap:
    """A vertex projection from a total graph onto a base graph."""

    __slots__ = ("total", "base", "f")

    def __init__(self, total: ColoredGraph, base: ColoredGraph, f: Sequence[int]):
        self.total = total
        self.base = base
        self.f = tuple(int(x) for x in f)
        if len(self.f) != total.order:
            raise ValueError("f must assign a base vertex to every total vertex")
        if any(not 0 <= x < base.order for x in self.f):
            raise ValueError("f maps outside the base vertex set")

    @property
    def degree(self) -> int:
        return self.total.order // self.base.order

    def __repr__(self) -> str:
        return "CoveringMap(%d -> %d)" % (self.total.order, self.base.order)


def derived_graph(va: VoltageAssignment) -> tuple[ColoredGraph, CoveringMap]:
    """The voltage construction: n copies of each vertex, shifted gluings.

    Vertex ``(v, i)`` is stored at index ``v*n + i``.  The projection onto
    the first coordinate is always a covering map of degree n.
    """
    base, n = va.base, va.n
    big = base.order * n
    maps = []
    for c in COLORS:
        m = [0] * big
        for v in range(base.order):
            w = base.inv[c][v]
            shift = va.volt[v][c]
            vn = v * n
            wn = w * n
            for i in range(n):
                m[vn + i] = wn + (i + shift) % n
        maps.append(m)
    total = ColoredGraph(maps)
    f = tuple(x // n for x in range(big))
    return total, CoveringMap(total, base, f)


def verify_covering(cm: CoveringMap) -> int:
    """Check a projection is a genuine covering; returns its degree.

    The map must commute with all four involutions and every fiber must
    have the same size.
    """
    total, base, f = cm.total, cm.base, cm.f
    for c in COLORS:
        ti, bi = total.inv[c], base.inv[c]
        for x in range(total.order):
            if f[ti[x]] != bi[f[x]]:
                raise NotAdjacencyPreservingError(
                    "color-%d edge at total vertex %d maps to a non-edge" % (c, x)
                )
    sizes = [0] * base.order
    for v in f:
        sizes[v] += 1
    if len(set(sizes)) != 1:
        raise NonUniformFiberError(
            "fiber sizes range over %s" % sorted(set(sizes))
        )
    return sizes[0]


def is_admissible(cm: CoveringMap) -> bool:
    """Whether the covering is bijective on every bicolored cycle.

    Equivalently, each cycle upstairs has exactly the length of the cycle
    it covers.  Raises if ``cm`` is not a covering at all.
    """
    verify_covering(cm)
    for pair in COLOR_PAIRS:
        base_len = {}
        for cyc in bicolored_cycles(cm.base, pair):
            for v in cyc.vertices:
                base_len[v] = len(cyc)
        for cyc in bicolored_cycles(cm.total, pair):
            if len(cyc) != base_len[cm.f[cyc.vertices[0]]]:
                return False
    return True


def holonomy(va: VoltageAssignment, cycle: BicoloredCycle) -> int:
    """Net voltage around a bicolored cycle of the base graph.

    Starting vertex and direction change it only by sign, so vanishing is
    well defined; the derived cycles over this one have length multiplied
    by the order of the holonomy in Z_n.
    """
    c1, c2 = cycle.colors
    col = c1
    total = 0
    for u in cycle.vertices:
        if not 0 <= u < va.base.order:
            raise ValueError("cycle vertex %d outside the base graph" % u)
        total += va.volt[u][col]
        col = c1 + c2 - col
    return total % va.n


def find_admissible_cyclic_coverings(
    base: ColoredGraph, n: int, limit: Optional[int] = 1
) -> list[VoltageAssignment]:
    """Voltage assignments over Z_n with connected, admissible derived graphs.

    Gauge freedom is removed by forcing zero voltage on a fixed spanning
    tree, so distinct results are genuinely distinct coverings.  The zero-
    holonomy conditions on all bicolored cycles form an integer linear
    system in the non-tree voltages, solved exactly through the Smith
    normal form; solutions are enumerated in lexicographic order of the
    solver's free coordinates and filtered for connectivity (their values
    must generate Z_n).  Returns at most ``limit`` assignments (all of them
    when ``limit`` is None); an empty list means no admissible connected
    covering of this degree exists.
    """
    if n < 1:
        raise ValueError("the covering degree must be at least 1")
    if not is_connected(base):
        raise NotConnectedError("voltage solving requires a connected base")
    rows, free = cycle_relation_rows(base)
    m = len(free)
    factors, rank, V = snf_with_column_transform(rows)
    counts = [gcd(d, n) for d in factors] + [n] * (m - rank)
    steps = [n // g for g in counts[:rank]] + [1] * (m - rank)
    _, tail, _, _ = edge_framework(base)
    out: list[VoltageAssignment] = []
    for combo in product(*(range(cnt) for cnt in counts)):
        y = [t * s for t, s in zip(combo, steps)]
        x = [sum(V[i][k] * y[k] for k in range(m)) % n for i in range(m)]
        g = n
        for val in x:
            g = gcd(g, val)
        if g != 1:
            continue
        values = {free[k]: x[k] for k in range(m)}
        out.append(VoltageAssignment.from_edge_values(base, n, values, tail))
        if limit is not None and len(out) >= limit:
            break
    return out


class ComplexityBounds:
    """Two-sided bounds on the graph complexity of a derived manifold."""

    __slots__ = ("lower", "upper")

    def __init__(self, lower: int, upper: int):
        self.lower = lower
        self.upper = upper

    def __eq__(self, other):
        return (
            isinstance(other, ComplexityBounds)
            and (self.lower, self.upper) == (other.lower, other.upper)
        )

    def __repr__(self):
        return "ComplexityBounds(lower=%d, upper=%d)" % (self.lower, self.upper)


def complexity_bounds_report(
    base: ColoredGraph, tetrahedra: int, n: int
) -> ComplexityBounds:
    """Bounds for the degree-n admissible cyclic covers of ``base``.

    ``tetrahedra`` is the number of ideal tetrahedra in a triangulation of
    the base manifold; an admissible degree-n covering glues n times as
    many, while the derived graph has n times the base order, giving
    ``n * tetrahedra <= complexity <= n * base.order``.  Existence of such a
    covering is checked by construction before reporting.
    """
    if tetrahedra < 1:
        raise ValueError("tetrahedra must be positive")
    if not find_admissible_cyclic_coverings(base, n, limit=1):
        raise NoAdmissibleCoveringError(
            "no connected admissible Z_%d covering of this base" % n
        )
    return ComplexityBounds(n * tetrahedra, n * base.order)
