"""Enumeration of connected bipartite graphs up to color isomorphism,
classification, and verification of the bundled order-14 table.

The generator walks code entries in discovery order (vertex pair by vertex
pair, colors 1..3) and only extends prefixes that a breadth-first
relabeling could actually produce: a new positive label may appear only
when it is the smallest unused one, every pair must be discovered before
its row is read, and each block stays a partial permutation.  Every
canonical code is such a traversal code, so finishing with a reject of
anything that some other start vertex or color permutation beats leaves
exactly one representative per isomorphism class.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from typing import IO, Iterable, Iterator, Optional

from gemkit.data import CENSUS_FORMAT, TABLE1, Table1Row
from gemkit.errors import CapExceededError, GemError
from gemkit.graphs import (
    ColoredGraph,
    MAX_LETTER_PAIRS,
    beats_entries,
    bipartition,
    canonical_code,
    is_connected,
    parse_code,
    _serialize_entries,
)
from gemkit.homology import HomologyGroup
from gemkit.topology import boundary_profile, first_homology, invariant_report

#: Largest order the exhaustive search is allowed to attempt.
ENUMERATION_CAP = 12


@dataclass(frozen=True)
class CensusEntry:
    """One isomorphism class: its canonical code, order and invariants."""

    canonical: str
    order: int
    invariants: Optional[dict] = None


def enumerate_gems(
    order: int, *, bipartite: bool = True, connected: bool = True
) -> Iterator[CensusEntry]:
    """Yield one entry per color-isomorphism class of the given order.

    Only the connected bipartite census is supported; entries appear in
    search order (sort by canonical code for the file format).
    """
    if not bipartite or not connected:
        raise ValueError("only the connected bipartite census is supported")
    if order < 2 or order % 2:
        raise ValueError("order must be a positive even integer")
    p = order // 2
    entries = [0] * (3 * p)
    used = [[False] * (p + 2) for _ in range(3)]

    def extend(t: int, maxseen: int) -> Iterator[CensusEntry]:
        if t == 3 * p:
            blocks = [entries[c::3] for c in range(3)]
            g = ColoredGraph.from_blocks(blocks)
            cand = blocks[0] + blocks[1] + blocks[2]
            if not beats_entries(g, cand):
                code = _serialize_entries(cand, p, numeric=p > MAX_LETTER_PAIRS)
                yield CensusEntry(code, order)
            return
        i, c = divmod(t, 3)
        if c == 0 and i and maxseen < i + 1:
            return  # pair i+1 was never discovered: the graph is disconnected
        top = maxseen + 1 if maxseen < p else p
        block = used[c]
        for j in range(1, top + 1):
            if block[j]:
                continue
            block[j] = True
            entries[t] = j
            yield from extend(t + 1, maxseen if j <= maxseen else j)
            block[j] = False

    return extend(0, 1)


def classify(entry: CensusEntry) -> CensusEntry:
    """Attach the invariant record to a census entry."""
    g = parse_code(entry.canonical)
    return replace(
        entry, invariants=invariant_report(g, name=None, code=entry.canonical)
    )


def build_census(order: int, *, classify_entries: bool = True) -> list[CensusEntry]:
    """The full census of one order, sorted by canonical code."""
    if order > ENUMERATION_CAP:
        raise CapExceededError(
            "order %d exceeds the enumeration cap %d" % (order, ENUMERATION_CAP)
        )
    entries = sorted(enumerate_gems(order), key=lambda e: e.canonical)
    if classify_entries:
        entries = [classify(e) for e in entries]
    return entries


def write_census(
    fh: IO[str], entries: Iterable[CensusEntry], order: int, opts: str = "bipartite,connected"
) -> None:
    """Write the census file format: hash-prefixed header, then one
    ``canonical<TAB>invariant-JSON`` line per entry."""
    fh.write("#%s\n" % CENSUS_FORMAT)
    fh.write("#order=%d\n" % order)
    fh.write("#opts=%s\n" % opts)
    for e in entries:
        fh.write("%s\t%s\n" % (e.canonical, json.dumps(e.invariants, separators=(",", ":"))))


def minimality_probe(
    max_order: int,
    *,
    closed: Optional[bool] = None,
    h1: Optional[HomologyGroup] = None,
    boundary_count: Optional[int] = None,
    all_torus: Optional[bool] = None,
) -> Optional[int]:
    """Smallest order whose census matches the given invariants, or None.

    Scans exhaustive censuses of increasing order, so a hit is a certified
    minimum over connected bipartite graphs.
    """
    if max_order > ENUMERATION_CAP:
        raise CapExceededError(
            "max_order %d exceeds the enumeration cap %d" % (max_order, ENUMERATION_CAP)
        )
    for order in range(2, max_order + 1, 2):
        for entry in enumerate_gems(order):
            g = parse_code(entry.canonical)
            profile = boundary_profile(g)
            if closed is not None and profile.closed != closed:
                continue
            if boundary_count is not None and len(profile) != boundary_count:
                continue
            if all_torus is not None and profile.all_torus != all_torus:
                continue
            if h1 is not None and first_homology(g) != h1:
                continue
            return order
    return None


# ---------------------------------------------------------------------------
# bundled-table verification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RowCheck:
    """Outcome of the checks for one bundled table row."""

    name: str
    ok: bool
    problems: tuple[str, ...]
    report: Optional[dict]


@dataclass(frozen=True)
class Table1Report:
    rows: tuple[RowCheck, ...]
    distinct_canonical: bool

    @property
    def ok(self) -> bool:
        return self.distinct_canonical and all(r.ok for r in self.rows)


def verify_table1(rows: Iterable[Table1Row] = TABLE1) -> Table1Report:
    """Re-derive and check the bundled table's claims.

    Every row must parse to a connected bipartite order-14 graph whose
    boundary is exactly ``boundary_count`` tori; link-complement rows must
    in addition have free first homology of that rank.  All canonical codes
    must be pairwise distinct.
    """
    checks = []
    canonicals = []
    for row in rows:
        problems = []
        report = None
        try:
            g = parse_code(row.code)
        except GemError as exc:
            checks.append(RowCheck(row.name, False, ("parse: %s" % exc,), None))
            continue
        if g.order != 14:
            problems.append("order %d != 14" % g.order)
        if bipartition(g) is None:
            problems.append("not bipartite")
        if not is_connected(g):
            problems.append("not connected")
        if not problems:
            report = invariant_report(g, name=row.name, code=row.code)
            profile = boundary_profile(g)
            if len(profile) != row.boundary_count:
                problems.append(
                    "%d boundary components, expected %d"
                    % (len(profile), row.boundary_count)
                )
            if not profile.all_torus:
                problems.append("boundary contains a non-torus component")
            if row.link_complement:
                h1 = report["h1"]
                if h1["torsion"] or h1["rank"] != row.boundary_count:
                    problems.append(
                        "H1 is not free of rank %d: %r" % (row.boundary_count, h1)
                    )
            canonicals.append(canonical_code(g))
        checks.append(RowCheck(row.name, not problems, tuple(problems), report))
    distinct = len(canonicals) == len(set(canonicals))
    return Table1Report(tuple(checks), distinct)
