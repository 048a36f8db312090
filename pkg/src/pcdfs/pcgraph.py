"""Partially complemented digraph representation.

A digraph G on vertices 1..n is stored as a *pc-digraph*: every vertex
carries a sorted list of vertex ids plus a one-bit flag.  For an
uncomplemented vertex the list holds its out-neighbors; for a complemented
vertex it holds its out-non-neighbors.  When out-neighborhoods are dense
the complemented form is much smaller than the adjacency of G, and the
DFS in :mod:`pcdfs.dfs` runs in time linear in this representation rather
than in the size of G.

Every per-vertex list is a doubly-linked list, sorted strictly ascending,
and terminated by a sentinel cell holding the fictitious vertex ``n + 1``.
Cells live in preallocated index-addressed arrays (one cell per stored
entry plus one sentinel per vertex), so next/prev/remove are O(1) with no
per-cell allocation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

VertexId = int

#: Null cell handle (cell arrays are indexed from 0).
NIL = -1


class PcGraphError(ValueError):
    """Invalid input to pc-digraph construction."""


class PcDigraph:
    """A pc-digraph over vertices ``1..n``.

    Instances are immutable after construction and safe to share between
    readers.  The DFS mutates list linkage, so each run operates on a
    private :meth:`working_copy`.

    Attributes:
        n: vertex count.
        m_tilde: number of real (non-sentinel) list entries over all
            vertices; the size of the representation.
        complemented: per-vertex flag, indexed 1..n (index 0 unused).
        cell_vertex: vertex id stored in each cell (``n + 1`` in sentinels).
        cell_next / cell_prev: cell linkage, ``NIL`` at the ends.
        list_head: first cell handle of each vertex's list, indexed 1..n.
        build_steps: elementary steps spent by construction (used by the
            linearity tests).
    """

    __slots__ = (
        "n",
        "m_tilde",
        "complemented",
        "cell_vertex",
        "cell_next",
        "cell_prev",
        "list_head",
        "build_steps",
    )

    def __init__(self, n, m_tilde, complemented, cell_vertex, cell_next,
                 cell_prev, list_head, build_steps=0):
        self.n = n
        self.m_tilde = m_tilde
        self.complemented = complemented
        self.cell_vertex = cell_vertex
        self.cell_next = cell_next
        self.cell_prev = cell_prev
        self.list_head = list_head
        self.build_steps = build_steps

    @property
    def sentinel(self) -> int:
        """The fictitious vertex number terminating every list."""
        return self.n + 1

    def entries(self, v: VertexId) -> list[int]:
        """Real (non-sentinel) entries of vertex ``v``'s list, ascending."""
        out = []
        c = self.list_head[v]
        sentinel = self.n + 1
        vert = self.cell_vertex
        nxt = self.cell_next
        while vert[c] != sentinel:
            out.append(vert[c])
            c = nxt[c]
        return out

    def entry_lists(self) -> list[list[int]]:
        """All per-vertex entry lists, indexed 1..n (index 0 empty)."""
        return [[]] + [self.entries(v) for v in range(1, self.n + 1)]

    def working_copy(self) -> "PcDigraph":
        """Private copy whose linkage the DFS may destroy.

        Cell contents and complement flags are never mutated by any
        operation, so they are shared; only the linkage arrays and list
        heads are copied.
        """
        return PcDigraph(
            self.n,
            self.m_tilde,
            self.complemented,
            self.cell_vertex,
            self.cell_next.copy(),
            self.cell_prev.copy(),
            self.list_head.copy(),
            self.build_steps,
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, PcDigraph):
            return NotImplemented
        return (
            self.n == other.n
            and self.m_tilde == other.m_tilde
            and self.complemented == other.complemented
            and self.entry_lists() == other.entry_lists()
        )

    __hash__ = None  # unhashable; semantic equality only

    def __repr__(self):
        return f"PcDigraph(n={self.n}, m_tilde={self.m_tilde})"


@dataclass
class ArcList:
    """Materialized adjacency of G: per-vertex ascending out-neighbor lists.

    ``out`` is indexed 1..n (index 0 is an empty placeholder).  Building
    this is Theta(n^2) for complemented vertices and exists to support the
    brute-force oracle, never the fast path.
    """

    n: int
    out: list[list[int]]


def build_pc_lists(n: int, entries: Iterable[tuple[int, int]],
                   complemented: Sequence[bool]) -> PcDigraph:
    """Construct a pc-digraph from unsorted ``(v, w)`` list entries.

    The pairs are grouped by ``v`` and ordered by ``w`` with a two-pass
    counting sort (primary key ``v``, secondary key ``w``), then laid out
    as doubly-linked cells, one sentinel per vertex.  Total work is
    proportional to ``n`` plus the number of pairs; the exact step count
    is recorded in ``build_steps``.

    Args:
        n: vertex count, at least 1.
        entries: pairs ``(v, w)`` meaning ``w`` appears in ``v``'s list.
            Order is irrelevant; duplicates and self-entries are rejected.
        complemented: length-``n`` sequence; ``complemented[v - 1]`` is
            vertex ``v``'s flag.

    Raises:
        PcGraphError: on out-of-range ids, self-entries, duplicate pairs,
            or a flag sequence of the wrong length.
    """
    if n < 1:
        raise PcGraphError(f"n must be >= 1, got {n}")
    flags = list(complemented)
    if len(flags) != n:
        raise PcGraphError(
            f"expected {n} complement flags, got {len(flags)}")
    pairs = list(entries)
    m = len(pairs)
    steps = 0

    for v, w in pairs:
        if not (1 <= v <= n and 1 <= w <= n):
            raise PcGraphError(f"entry out of range: ({v}, {w})")
        if v == w:
            raise PcGraphError(f"self-entry forbidden: ({v}, {w})")
    steps += m

    # Counting sort by secondary key w, then stable counting sort by
    # primary key v; the result is grouped by v, ascending in w.
    count = [0] * (n + 2)
    for _, w in pairs:
        count[w] += 1
    steps += m
    for i in range(1, n + 2):
        count[i] += count[i - 1]
    steps += n + 1
    by_w: list[tuple[int, int]] = [(0, 0)] * m
    for pair in reversed(pairs):
        count[pair[1]] -= 1
        by_w[count[pair[1]]] = pair
    steps += m

    count = [0] * (n + 2)
    for v, _ in by_w:
        count[v] += 1
    steps += m
    deg = count.copy()
    for i in range(1, n + 2):
        count[i] += count[i - 1]
    steps += n + 1
    ordered: list[tuple[int, int]] = [(0, 0)] * m
    for pair in reversed(by_w):
        count[pair[0]] -= 1
        ordered[count[pair[0]]] = pair
    steps += m

    for i in range(1, m):
        if ordered[i] == ordered[i - 1]:
            raise PcGraphError(f"duplicate entry: {ordered[i]}")
    steps += m

    # Lay out cells: for each vertex its entries then its sentinel, chained
    # contiguously.  Handle of vertex v's block start is list_head[v].
    sentinel = n + 1
    num_cells = m + n
    cell_vertex = [0] * num_cells
    cell_next = [0] * num_cells
    cell_prev = [0] * num_cells
    list_head = [0] * (n + 1)

    c = 0
    k = 0  # index into ordered
    for v in range(1, n + 1):
        list_head[v] = c
        first = c
        for _ in range(deg[v]):
            cell_vertex[c] = ordered[k][1]
            cell_next[c] = c + 1
            cell_prev[c] = c - 1
            c += 1
            k += 1
        cell_vertex[c] = sentinel
        cell_next[c] = NIL
        cell_prev[c] = c - 1
        c += 1
        cell_prev[first] = NIL
    steps += m + n

    # Flags are stored 1-indexed so vertex v lives at index v.
    return PcDigraph(n, m, [False] + flags, cell_vertex, cell_next,
                     cell_prev, list_head, build_steps=steps)


def materialize(g: PcDigraph) -> ArcList:
    """Adjacency of G implied by the pc-digraph.

    For an uncomplemented vertex the out-list is its stored entries; for a
    complemented vertex it is ``{1..n} \\ ({v} u entries)``.  Self-loops
    never appear.  Theta(n^2) for complemented vertices; oracle use only.
    """
    n = g.n
    out: list[list[int]] = [[]]
    for v in range(1, n + 1):
        stored = g.entries(v)
        if not g.complemented[v]:
            out.append(stored)
        else:
            row = []
            it = iter(stored + [n + 1])
            nxt = next(it)
            for w in range(1, n + 1):
                while nxt < w:
                    nxt = next(it)
                if w != v and w != nxt:
                    row.append(w)
            out.append(row)
    return ArcList(n, out)


def complement_vertex(g: PcDigraph, v: VertexId) -> PcDigraph:
    """Copy of ``g`` with vertex ``v``'s complement flag toggled.

    The stored list of ``v`` is unchanged; only its interpretation flips,
    so the materialization of the result differs from ``g``'s exactly at
    ``out(v)``, complemented with respect to ``V \\ {v}``.
    """
    if not (1 <= v <= g.n):
        raise PcGraphError(f"vertex out of range: {v}")
    flags = g.complemented.copy()
    flags[v] = not flags[v]
    return PcDigraph(g.n, g.m_tilde, flags, g.cell_vertex, g.cell_next,
                     g.cell_prev, g.list_head, g.build_steps)
