"""Exact Smith normal form over the integers and finitely generated
abelian groups presented by their invariant factors.

All arithmetic uses Python integers, so there is no overflow at any size.
Pivots are chosen by minimal absolute value, which keeps intermediate
entries small on the sparse relation matrices this package produces.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence


@dataclass(frozen=True)
class HomologyGroup:
    """A finitely generated abelian group Z^rank + Z/d1 + ... + Z/dk.

    The torsion coefficients are the invariant factors: each is at least 2
    and divides the next.
    """

    rank: int
    torsion: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be non-negative")
        object.__setattr__(self, "torsion", tuple(int(d) for d in self.torsion))
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError("torsion coefficients must form a divisibility chain")
        if any(d < 2 for d in self.torsion):
            raise ValueError("torsion coefficients must be at least 2")

    @property
    def trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank:
            parts.append("Z^%d" % self.rank)
        parts.extend("Z/%d" % d for d in self.torsion)
        return " + ".join(parts) if parts else "0"


def _snf(mat: Sequence[Sequence[int]], want_transform: bool):
    """Diagonalize an integer matrix by unimodular row/column operations.

    Returns ``(factors, rank, V)`` where the factors are the positive
    diagonal entries in divisibility order and ``V`` is the accumulated
    column transform (``None`` unless requested) with ``U * mat * V``
    diagonal for some unimodular ``U``.
    """
    A = [[int(x) for x in row] for row in mat]
    nrows = len(A)
    ncols = len(A[0]) if nrows else 0
    for row in A:
        if len(row) != ncols:
            raise ValueError("matrix rows have unequal lengths")
    V = None
    if want_transform:
        V = [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    factors = []
    t = 0
    while t < nrows and t < ncols:
        # locate a minimal-magnitude nonzero entry in the working submatrix
        best = None
        pi = pj = -1
        for i in range(t, nrows):
            row = A[i]
            for j in range(t, ncols):
                a = row[j]
                if a and (best is None or -best < a < best):
                    best = abs(a)
                    pi, pj = i, j
            if best == 1:
                break
        if best is None:
            break
        if pi != t:
            A[t], A[pi] = A[pi], A[t]
        if pj != t:
            for row in A:
                row[t], row[pj] = row[pj], row[t]
            if V is not None:
                for row in V:
                    row[t], row[pj] = row[pj], row[t]
        while True:
            if A[t][t] < 0:
                A[t] = [-x for x in A[t]]
            piv = A[t][t]
            # clear the pivot column; a nonzero remainder becomes the new,
            # strictly smaller pivot
            col_clean = True
            for i in range(t + 1, nrows):
                if A[i][t]:
                    q = A[i][t] // piv
                    if q:
                        Ai, At = A[i], A[t]
                        for j in range(t, ncols):
                            Ai[j] -= q * At[j]
                    if A[i][t]:
                        A[t], A[i] = A[i], A[t]
                        col_clean = False
                        break
            if not col_clean:
                continue
            # clear the pivot row the same way
            row_clean = True
            for j in range(t + 1, ncols):
                if A[t][j]:
                    q = A[t][j] // piv
                    if q:
                        for i in range(t, nrows):
                            A[i][j] -= q * A[i][t]
                        if V is not None:
                            for row in V:
                                row[j] -= q * row[t]
                    if A[t][j]:
                        for row in A:
                            row[t], row[j] = row[j], row[t]
                        if V is not None:
                            for row in V:
                                row[t], row[j] = row[j], row[t]
                        row_clean = False
                        break
            if not row_clean:
                continue
            # force the divisibility chain: fold any offending row into the
            # pivot row and keep reducing
            piv = A[t][t]
            offender = -1
            for i in range(t + 1, nrows):
                Ai = A[i]
                for j in range(t + 1, ncols):
                    if Ai[j] % piv:
                        offender = i
                        break
                if offender >= 0:
                    break
            if offender < 0:
                break
            At, Ao = A[t], A[offender]
            for j in range(t, ncols):
                At[j] += Ao[j]
        factors.append(A[t][t])
        t += 1
    return tuple(factors), len(factors), V


def smith_normal_form(mat: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], int]:
    """Invariant factors and rank of an integer matrix.

    The factors are positive, each divides the next, and their product for a
    nonsingular square matrix equals the absolute determinant.
    """
    factors, rank, _ = _snf(mat, want_transform=False)
    return factors, rank


def snf_with_column_transform(mat: Sequence[Sequence[int]]):
    """Like :func:`smith_normal_form` but also returns the column transform.

    The returned unimodular ``V`` satisfies ``U * mat * V = D`` for some
    unimodular ``U``, so ``x = V y`` converts solutions of the diagonal
    system back to the original variables (also modulo any n).
    """
    return _snf(mat, want_transform=True)


def group_from_relations(num_generators: int, rows: Sequence[Sequence[int]]) -> HomologyGroup:
    """The abelian group on ``num_generators`` generators modulo the rows."""
    if any(len(r) != num_generators for r in rows):
        raise ValueError("relation rows must match the generator count")
    factors, rank = smith_normal_form(rows)
    torsion = tuple(d for d in factors if d > 1)
    return HomologyGroup(num_generators - rank, torsion)
