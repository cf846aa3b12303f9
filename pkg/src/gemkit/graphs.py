"""4-regular properly edge-colored multigraphs and their code strings.

A graph is stored as four fixed-point-free involutions on the vertex set
``0..order-1``, one per color.  The color-c edge at vertex ``v`` joins it to
``inv[c][v]``.  Loops are forbidden; multiple edges (the same pair joined by
several colors) are allowed.  Because every color is a perfect matching the
edge coloring is automatically proper.

Bipartite graphs admit a compact string encoding: with the vertex classes
labeled ``-1..-p`` and ``+1..+p`` so that color 0 joins ``-i`` to ``+i``,
the code lists, for each color ``c`` in 1..3 as a block of ``p`` characters,
the positive label of the color-c neighbor of ``-i``.  Capital letters name
positive labels (``A`` is 1), small letters negative ones.  Graphs with more
than 26 vertex pairs use the numeric variant: the same 3p entries, written
as comma-separated integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Optional, Sequence

from gemkit.errors import (
    BadCharError,
    BadLengthError,
    InvalidLabelingError,
    NotBipartiteError,
    NotConnectedError,
    NotInvolutionError,
)

#: The fixed palette.  Every graph uses exactly these four colors.
COLORS = (0, 1, 2, 3)

#: The six unordered color pairs, in lexicographic order.
COLOR_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))

#: Largest number of vertex pairs the letter codec can address.
MAX_LETTER_PAIRS = 26


class ColoredGraph:
    """A 4-regular multigraph with a proper edge coloring by {0,1,2,3}.

    Instances are immutable once constructed and safe to share across
    workers; all operations in this package treat them as values.
    """

    __slots__ = ("order", "inv")

    def __init__(self, involutions: Sequence[Sequence[int]]):
        inv = tuple(tuple(int(w) for w in m) for m in involutions)
        if len(inv) != 4:
            raise ValueError("expected 4 involutions, got %d" % len(inv))
        n = len(inv[0])
        if n < 2 or n % 2:
            raise ValueError("order must be a positive even integer, got %d" % n)
        for c, m in enumerate(inv):
            if len(m) != n:
                raise ValueError(
                    "color %d involution has length %d, expected %d" % (c, len(m), n)
                )
            for v, w in enumerate(m):
                if not 0 <= w < n:
                    raise ValueError("color %d maps vertex %d out of range" % (c, v))
                if w == v:
                    raise ValueError("color %d has a fixed point at vertex %d" % (c, v))
                if m[w] != v:
                    raise ValueError("color %d map is not an involution at %d" % (c, v))
        self.order = n
        self.inv = inv

    @classmethod
    def from_blocks(cls, blocks: Sequence[Sequence[int]]) -> "ColoredGraph":
        """Build the bipartite graph given by three permutation blocks.

        Vertices ``0..p-1`` form the negative class and ``p..2p-1`` the
        positive class; color 0 joins ``i`` to ``p+i`` and color ``c`` joins
        ``i`` to ``p + blocks[c-1][i] - 1`` (block values are 1-based).
        """
        b1, b2, b3 = blocks
        p = len(b1)
        maps = [tuple(range(p, 2 * p)) + tuple(range(p))]
        for block in (b1, b2, b3):
            m = [-1] * (2 * p)
            for i, j in enumerate(block):
                m[i] = p + j - 1
                m[p + j - 1] = i
            maps.append(m)
        return cls(maps)

    def neighbor(self, v: int, c: int) -> int:
        """The vertex joined to ``v`` by the color-``c`` edge."""
        return self.inv[c][v]

    def edges(self) -> list[tuple[int, int, int]]:
        """All ``2*order`` edges as ``(color, u, w)`` with ``u < w``.

        The listing is deterministic: colors ascending, then lower endpoint.
        """
        out = []
        for c in COLORS:
            m = self.inv[c]
            for u, w in enumerate(m):
                if u < w:
                    out.append((c, u, w))
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ColoredGraph) and self.inv == other.inv

    def __hash__(self) -> int:
        return hash(self.inv)

    def __repr__(self) -> str:
        return "ColoredGraph(order=%d)" % self.order


@dataclass(frozen=True)
class BicoloredCycle:
    """A connected component of the subgraph spanned by two colors.

    ``vertices`` lists the cycle in traversal order starting at its smallest
    vertex, first step along the lower color.  The length is always even.
    """

    colors: tuple[int, int]
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class Residue:
    """A connected component of the subgraph missing one color.

    Residues of a graph encoding a 3-dimensional complex are 3-colored
    graphs encoding the links of its vertices.
    """

    graph: ColoredGraph
    missing_color: int
    vertices: tuple[int, ...]

    @property
    def colors(self) -> tuple[int, int, int]:
        return tuple(c for c in COLORS if c != self.missing_color)

    @property
    def order(self) -> int:
        return len(self.vertices)

    def induced_involutions(self) -> tuple[tuple[int, ...], ...]:
        """The three involutions restricted to the residue, reindexed 0..m-1."""
        index = {v: k for k, v in enumerate(self.vertices)}
        out = []
        for c in self.colors:
            out.append(tuple(index[self.graph.inv[c][v]] for v in self.vertices))
        return tuple(out)


# ---------------------------------------------------------------------------
# structure queries
# ---------------------------------------------------------------------------


def bipartition(g: ColoredGraph) -> Optional[tuple[int, ...]]:
    """Two-color the vertices across all edges.

    Returns the per-vertex side array (the first vertex reached in every
    component sits on side 0), or ``None`` when some cycle is odd.
    """
    side = [-1] * g.order
    for root in range(g.order):
        if side[root] >= 0:
            continue
        side[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            s = side[v] ^ 1
            for c in COLORS:
                w = g.inv[c][v]
                if side[w] < 0:
                    side[w] = s
                    stack.append(w)
                elif side[w] != s:
                    return None
    return tuple(side)


def is_bipartite(g: ColoredGraph) -> bool:
    """True when no closed walk has odd length (the orientable case)."""
    return bipartition(g) is not None


def is_connected(g: ColoredGraph) -> bool:
    """True when every vertex is reachable from vertex 0."""
    seen = [False] * g.order
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        v = stack.pop()
        for c in COLORS:
            w = g.inv[c][v]
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == g.order


def bicolored_cycles(g: ColoredGraph, colors: Iterable[int]) -> list[BicoloredCycle]:
    """The cycles spanned by a pair of colors, partitioning the vertex set.

    Each component of the 2-regular subgraph on the two colors is a cycle of
    even length alternating between them (length 2 means a double edge).
    """
    c1, c2 = sorted(colors)
    if c1 == c2 or c1 not in COLORS or c2 not in COLORS:
        raise ValueError("need two distinct colors from %r" % (COLORS,))
    seen = [False] * g.order
    cycles = []
    for v0 in range(g.order):
        if seen[v0]:
            continue
        verts = []
        v, c = v0, c1
        while True:
            verts.append(v)
            seen[v] = True
            v = g.inv[c][v]
            c = c1 + c2 - c
            if v == v0:
                break
        cycles.append(BicoloredCycle((c1, c2), tuple(verts)))
    return cycles


def residues(g: ColoredGraph, missing_color: int) -> list[Residue]:
    """Connected components after deleting all edges of one color."""
    if missing_color not in COLORS:
        raise ValueError("missing_color must be one of %r" % (COLORS,))
    keep = [c for c in COLORS if c != missing_color]
    seen = [False] * g.order
    out = []
    for root in range(g.order):
        if seen[root]:
            continue
        seen[root] = True
        stack = [root]
        comp = [root]
        while stack:
            v = stack.pop()
            for c in keep:
                w = g.inv[c][v]
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comp.sort()
        out.append(Residue(g, missing_color, tuple(comp)))
    return out


# ---------------------------------------------------------------------------
# code strings
# ---------------------------------------------------------------------------


def _decode_entries(text: str) -> list[int]:
    """Turn a code string into signed 1-based entries, one per character/token."""
    if "," in text:
        entries = []
        for token in text.split(","):
            token = token.strip()
            try:
                entries.append(int(token))
            except ValueError:
                raise BadCharError("token %r is not an integer" % token) from None
        return entries
    entries = []
    for ch in text:
        o = ord(ch)
        if ord("A") <= o <= ord("Z"):
            entries.append(o - ord("A") + 1)
        elif ord("a") <= o <= ord("z"):
            entries.append(-(o - ord("a") + 1))
        else:
            raise BadCharError("character %r is not a letter" % ch)
    return entries


def _serialize_entries(entries: Sequence[int], p: int, numeric: bool) -> str:
    if numeric:
        return ",".join(str(j) for j in entries)
    return "".join(chr(ord("A") + j - 1) for j in entries)


def parse_code(text: str) -> ColoredGraph:
    """Decode a code string into its bipartite :class:`ColoredGraph`.

    Vertices ``-1..-p`` become indices ``0..p-1`` and ``+1..+p`` become
    ``p..2p-1``, so the three blocks read directly as permutations.
    """
    if not isinstance(text, str):
        raise BadLengthError("code must be a string")
    if not text:
        raise BadLengthError("empty code")
    entries = _decode_entries(text)
    if len(entries) % 3:
        raise BadLengthError("code has %d entries, not divisible by 3" % len(entries))
    p = len(entries) // 3
    if "," not in text and p > MAX_LETTER_PAIRS:
        raise BadLengthError(
            "letter codes address at most %d vertex pairs, got %d"
            % (MAX_LETTER_PAIRS, p)
        )
    for e in entries:
        if e == 0 or abs(e) > p:
            raise BadCharError("entry %d outside the first %d labels" % (e, p))
    n = 2 * p
    maps = [list(range(p, n)) + list(range(p))]
    for b in range(3):
        m: list[int] = [-1] * n
        for i in range(p):
            e = entries[b * p + i]
            w = p + e - 1 if e > 0 else -e - 1
            if w == i:
                raise NotInvolutionError(
                    "block %d pairs vertex -%d with itself" % (b + 1, i + 1)
                )
            if m[i] not in (-1, w) or m[w] not in (-1, i):
                raise NotInvolutionError(
                    "block %d does not define an involution" % (b + 1)
                )
            m[i] = w
            m[w] = i
        if -1 in m:
            raise NotInvolutionError(
                "block %d leaves %d vertices unmatched" % (b + 1, m.count(-1))
            )
        maps.append(m)
    return ColoredGraph(maps)


def identity_labeling(order: int) -> tuple[int, ...]:
    """The labeling produced by :func:`parse_code`: ``-1..-p`` then ``+1..+p``."""
    p = order // 2
    return tuple(-(i + 1) for i in range(p)) + tuple(i + 1 for i in range(p))


def emit_code(
    g: ColoredGraph,
    labels: Sequence[int],
    numeric: Optional[bool] = None,
) -> str:
    """Encode a bipartite graph under a vertex labeling by ``±1..±p``.

    The labeling must put all negative labels on one bipartition class and
    must give the color-0 partner of the vertex labeled ``-i`` the label
    ``+i``.  By default letters are used when they suffice (p <= 26) and the
    comma-separated numeric form otherwise; pass ``numeric`` to force one.
    """
    side = bipartition(g)
    if side is None:
        raise NotBipartiteError("only bipartite graphs have code strings")
    n = g.order
    p = n // 2
    if len(labels) != n:
        raise InvalidLabelingError("labeling has %d entries for order %d" % (len(labels), n))
    neg_vertex = [-1] * (p + 1)
    pos_label = [0] * n
    for v, lab in enumerate(labels):
        if not isinstance(lab, int) or lab == 0 or abs(lab) > p:
            raise InvalidLabelingError("label %r out of range at vertex %d" % (lab, v))
        if lab < 0:
            if neg_vertex[-lab] >= 0:
                raise InvalidLabelingError("label %d used twice" % lab)
            neg_vertex[-lab] = v
        else:
            if pos_label[v]:
                raise InvalidLabelingError("vertex %d labeled twice" % v)
            pos_label[v] = lab
    if any(v < 0 for v in neg_vertex[1:]):
        raise InvalidLabelingError("labeling is not a bijection onto ±1..±%d" % p)
    seen_pos = sorted(l for l in pos_label if l)
    if seen_pos != list(range(1, p + 1)):
        raise InvalidLabelingError("labeling is not a bijection onto ±1..±%d" % p)
    neg_side = side[neg_vertex[1]]
    for i in range(1, p + 1):
        v = neg_vertex[i]
        if side[v] != neg_side:
            raise InvalidLabelingError("negative labels span both bipartition classes")
        if pos_label[g.inv[0][v]] != i:
            raise InvalidLabelingError(
                "color-0 partner of label -%d is not labeled +%d" % (i, i)
            )
    entries = []
    for c in (1, 2, 3):
        m = g.inv[c]
        for i in range(1, p + 1):
            entries.append(pos_label[m[neg_vertex[i]]])
    if numeric is None:
        numeric = p > MAX_LETTER_PAIRS
    elif not numeric and p > MAX_LETTER_PAIRS:
        raise BadLengthError(
            "letter codes address at most %d vertex pairs" % MAX_LETTER_PAIRS
        )
    return _serialize_entries(entries, p, numeric)


# ---------------------------------------------------------------------------
# canonical form and isomorphism
# ---------------------------------------------------------------------------


def _traversal_entries(invs, start: int, p: int) -> list[int]:
    """Code entries of the breadth-first relabeling rooted at ``start``.

    Negative labels are handed out in discovery order while scanning the
    root pair first, then each labeled pair's color-1, color-2, color-3
    neighbors.  The result depends only on the colored graph and ``start``,
    never on the input vertex numbering, which is what makes the minimum
    over all starts and color permutations a canonical form.
    """
    inv0, inv1, inv2, inv3 = invs
    pos_label = [0] * (2 * p)
    neg_vertex = [0] * (p + 1)
    neg_vertex[1] = start
    pos_label[inv0[start]] = 1
    out = [0] * (3 * p)
    count = 1
    p2 = 2 * p
    for i in range(1, p + 1):
        u = neg_vertex[i]
        base = i - 1
        for off, invc in ((0, inv1), (p, inv2), (p2, inv3)):
            w = invc[u]
            j = pos_label[w]
            if not j:
                count += 1
                j = count
                pos_label[w] = j
                neg_vertex[j] = inv0[w]
            out[base + off] = j
    return out


def _candidate_entry_lists(g: ColoredGraph):
    """Yield the traversal entries for every (color permutation, start)."""
    p = g.order // 2
    for sigma in permutations(COLORS):
        invs = tuple(g.inv[c] for c in sigma)
        for start in range(g.order):
            yield _traversal_entries(invs, start, p)


def canonical_entries(g: ColoredGraph) -> list[int]:
    """The minimal traversal entry list; see :func:`canonical_code`."""
    best = None
    for cand in _candidate_entry_lists(g):
        if best is None or cand < best:
            best = cand
    return best


def beats_entries(g: ColoredGraph, ceiling: Sequence[int]) -> bool:
    """True when some traversal entry list sorts strictly below ``ceiling``.

    Used by the census search to reject non-canonical codes without
    computing the full minimum.
    """
    ceiling = list(ceiling)
    for cand in _candidate_entry_lists(g):
        if cand < ceiling:
            return True
    return False


def canonical_code(g: ColoredGraph) -> str:
    """The lexicographically minimal code over all reachable encodings.

    Minimizes over the breadth-first relabelings from every start vertex
    combined with all 24 color permutations.  Two connected bipartite
    graphs are color-isomorphic exactly when their canonical codes agree.
    """
    if not is_connected(g):
        raise NotConnectedError("canonical_code requires a connected graph")
    if bipartition(g) is None:
        raise NotBipartiteError("canonical_code requires a bipartite graph")
    p = g.order // 2
    return _serialize_entries(canonical_entries(g), p, numeric=p > MAX_LETTER_PAIRS)


def are_isomorphic(g1: ColoredGraph, g2: ColoredGraph) -> bool:
    """Whether some vertex bijection plus color permutation carries g1 to g2.

    Works for non-bipartite graphs as well; both inputs must be connected.
    On connected bipartite inputs this agrees with canonical-code equality.
    """
    if not is_connected(g1) or not is_connected(g2):
        raise NotConnectedError("isomorphism testing requires connected graphs")
    if g1.order != g2.order:
        return False
    n = g1.order
    for sigma in permutations(COLORS):
        target = tuple(g2.inv[c] for c in sigma)
        for w0 in range(n):
            phi = [-1] * n
            used = [False] * n
            phi[0] = w0
            used[w0] = True
            stack = [0]
            ok = True
            while stack and ok:
                x = stack.pop()
                fx = phi[x]
                for c in COLORS:
                    y = g1.inv[c][x]
                    z = target[c][fx]
                    fy = phi[y]
                    if fy < 0:
                        if used[z]:
                            ok = False
                            break
                        phi[y] = z
                        used[z] = True
                        stack.append(y)
                    elif fy != z:
                        ok = False
                        break
            if ok:
                return True
    return False


def relabeled(g: ColoredGraph, perm: Sequence[int]) -> ColoredGraph:
    """The same colored graph with vertex ``v`` renamed ``perm[v]``."""
    n = g.order
    if sorted(perm) != list(range(n)):
        raise ValueError("perm must be a permutation of 0..%d" % (n - 1))
    maps = []
    for c in COLORS:
        m = [0] * n
        for v in range(n):
            m[perm[v]] = perm[g.inv[c][v]]
        maps.append(m)
    return ColoredGraph(maps)


def recolored(g: ColoredGraph, sigma: Sequence[int]) -> ColoredGraph:
    """The same graph with new color ``c`` drawn from old color ``sigma[c]``."""
    if sorted(sigma) != list(COLORS):
        raise ValueError("sigma must be a permutation of %r" % (COLORS,))
    return ColoredGraph([g.inv[sigma[c]] for c in COLORS])
