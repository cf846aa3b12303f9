"""Shared test utilities: frozen fixtures, random builders and independent
oracles that reimplement key predicates by a different route than the
package (union-find components, fraction-arithmetic linear algebra, naive
isomorphism bucketing).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations
from math import gcd

from gemkit import (
    COVERING_BASE_CODES,
    TABLE1,
    ColoredGraph,
    canonical_code,
    is_connected,
)

TABLE_CODES = tuple(row.code for row in TABLE1)
ALL_BUNDLED_CODES = TABLE_CODES + COVERING_BASE_CODES

#: Connected but not bipartite: vertices 0,1,3 form an odd closed walk
#: (0-1 on color 0, 1-3 on color 2, 3-0 on color 3).
NON_BIPARTITE_INVS = ((1, 0, 3, 2), (1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0))

#: Connected order-6 graph whose twelve bicolored cycles are all hexagons
#: (found by exhausting involution quadruples; it is not bipartite).
SIX_REGULAR_INVS = (
    (1, 0, 3, 2, 5, 4),
    (2, 4, 0, 5, 1, 3),
    (3, 5, 4, 0, 2, 1),
    (4, 3, 5, 1, 0, 2),
)

#: Order-8 census code of a closed manifold with first homology Z/2.
ORDER8_Z2_CODE = "BADCCDABDCBA"


# ---------------------------------------------------------------------------
# random builders (callers pass a seeded random.Random)
# ---------------------------------------------------------------------------


def random_ffi_involution(rng, n):
    """A uniformly random fixed-point-free involution on 0..n-1."""
    verts = list(range(n))
    rng.shuffle(verts)
    m = [0] * n
    for a, b in zip(verts[::2], verts[1::2]):
        m[a] = b
        m[b] = a
    return m


def random_colored_graph(rng, n):
    """Four independent random involutions; usually not bipartite."""
    return ColoredGraph([random_ffi_involution(rng, n) for _ in range(4)])


def random_bipartite_graph(rng, p):
    """Random permutation blocks; always bipartite, maybe disconnected."""
    blocks = []
    for _ in range(3):
        b = list(range(1, p + 1))
        rng.shuffle(b)
        blocks.append(b)
    return ColoredGraph.from_blocks(blocks)


def random_vertex_permutation(rng, n):
    perm = list(range(n))
    rng.shuffle(perm)
    return perm


def random_color_permutation(rng):
    sigma = [0, 1, 2, 3]
    rng.shuffle(sigma)
    return sigma


# ---------------------------------------------------------------------------
# independent component counting (union-find, no graph traversal)
# ---------------------------------------------------------------------------


def component_count(n, edges):
    """Number of connected components of the graph on 0..n-1 with ``edges``."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = n
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            comps -= 1
    return comps


# ---------------------------------------------------------------------------
# exact linear algebra oracles over Fraction arithmetic
# ---------------------------------------------------------------------------


def exact_determinant(mat):
    """Determinant of a square integer matrix, by fraction-free-safe
    Gaussian elimination over Fraction (exact)."""
    n = len(mat)
    a = [[Fraction(x) for x in row] for row in mat]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] * inv
            if f:
                for c in range(col, n):
                    a[r][c] -= f * a[col][c]
    assert det.denominator == 1
    return int(det)


def rational_rank(mat):
    """Rank of an integer matrix over the rationals (row reduction)."""
    rows = [[Fraction(x) for x in row] for row in mat]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = 1 / rows[rank][col]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col] * inv
                for c in range(col, ncols):
                    rows[r][c] -= f * rows[rank][c]
        rank += 1
    return rank


def minors_gcd(mat, k):
    """gcd of all k-by-k minors (0 when every minor vanishes).

    The product of the first k invariant factors of an integer matrix
    equals this gcd, which gives an implementation-independent oracle
    for the Smith normal form.
    """
    nr = len(mat)
    nc = len(mat[0]) if nr else 0
    g = 0
    for rows_idx in combinations(range(nr), k):
        for cols_idx in combinations(range(nc), k):
            sub = [[mat[r][c] for c in cols_idx] for r in rows_idx]
            g = gcd(g, exact_determinant(sub))
    return g


def matmul(a, b):
    """Plain integer matrix product."""
    return [
        [sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def surjective_hom_count(rank, n):
    """Number of surjective homomorphisms from Z^rank onto Z_n.

    Inclusion-exclusion over divisors: sum of mu(d) * (n/d)^rank.  Connected
    degree-n cyclic coverings correspond exactly to these, which makes the
    count an oracle for the covering solver.
    """

    def mobius(m):
        out, d = 1, 2
        while d * d <= m:
            if m % d == 0:
                m //= d
                if m % d == 0:
                    return 0
                out = -out
            d += 1
        if m > 1:
            out = -out
        return out

    return sum(mobius(d) * (n // d) ** rank for d in range(1, n + 1) if n % d == 0)


# ---------------------------------------------------------------------------
# naive census oracle
# ---------------------------------------------------------------------------


def naive_census(order):
    """Canonical codes of all connected graphs of one order, by brute force.

    Every bipartite graph on p vertex pairs arises from a triple of
    permutation blocks, so bucketing all (p!)^3 triples by canonical code
    is an exhaustive (if slow) census to compare the pruned generator
    against.
    """
    p = order // 2
    perms = list(permutations(range(1, p + 1)))
    seen = set()
    for b1 in perms:
        for b2 in perms:
            for b3 in perms:
                g = ColoredGraph.from_blocks((b1, b2, b3))
                if is_connected(g):
                    seen.add(canonical_code(g))
    return seen
