"""DFS on G given only its partially complemented representation.

The traversal visits the digraph G that a :class:`~pcdfs.pcgraph.PcDigraph`
represents without ever materializing G.  For an uncomplemented vertex the
stored list is the real adjacency and the scan is ordinary DFS.  For a
complemented vertex the stored list holds the *non*-neighbors, and the
activation walks that list and the global undiscovered list in parallel,
merge-style, always advancing the cursor at the smaller vertex number:

* equal cursors: the vertex is a non-neighbor, skip it in both lists;
* list cursor behind: that entry was discovered elsewhere, unlink its cell;
* undiscovered cursor behind: the vertex is a neighbor, recurse on it,
  then run the restart step (:func:`restart_cursor`) to reposition the
  undiscovered cursor past everything the recursion consumed.

Unlinked cells are never traversed again, which is what makes the whole
run O(n + m) in the size m of the stored representation: every backward
step of a restart except the last is paid for by the cell it deletes.
The sentinel entry ``n + 1`` at the end of every stored list guarantees
the undiscovered cursor, not the list cursor, runs out first.

Recursion is realized as an explicit stack of :class:`DfsFrame` values so
that activation depth up to n (for example a single path, or the complete
digraph given as all-complemented empty lists) cannot overflow the
interpreter stack.
"""

from __future__ import annotations

from dataclasses import dataclass

from .pcgraph import NIL, PcDigraph


class InvariantViolation(RuntimeError):
    """A debug-mode invariant check failed during the traversal."""

    def __init__(self, vertex: int, offender: int, message: str):
        super().__init__(
            f"activation of vertex {vertex}: {message} "
            f"(offending vertex {offender})")
        self.vertex = vertex
        self.offender = offender


@dataclass(slots=True)
class OpCounters:
    """Elementary-step tallies certifying the linear time bound.

    ``calls`` counts activations, ``fwd_steps`` forward cursor advances on
    either list, ``back_steps`` backward steps taken by restarts,
    ``deletions`` cells unlinked from stored lists, ``u_removals`` removals
    from the undiscovered list, and ``restarts`` restart-step executions.
    """

    calls: int = 0
    fwd_steps: int = 0
    back_steps: int = 0
    deletions: int = 0
    u_removals: int = 0
    restarts: int = 0

    def total(self) -> int:
        """Combined step total bounded by a constant times n + m + 1."""
        return (self.calls + self.fwd_steps + self.back_steps
                + self.deletions + self.u_removals)

    def ratio(self, n: int, m_tilde: int) -> float:
        """Step total per unit of input size, ``total / (n + m_tilde + 1)``."""
        return self.total() / (n + m_tilde + 1)


@dataclass(slots=True)
class DfsFrame:
    """One activation of the traversal.

    ``u_cursor`` is the current vertex in the undiscovered list (0 once
    past the end), ``n_cursor`` the current cell handle in ``v``'s stored
    list, and ``w_probe`` the cell handle the restart walk is inspecting.
    For an uncomplemented vertex only ``n_cursor`` is used.
    """

    v: int
    u_cursor: int = 0
    n_cursor: int = NIL
    w_probe: int = NIL
    complemented: bool = False
    awaiting_restart: bool = False


class UndiscoveredList:
    """Ascending doubly-linked list of the vertices not yet entered.

    Intrusive over vertex numbers: ``succ[v]`` / ``pred[v]`` link vertex v
    directly and 0 marks either end, so head, next, prev, removal, and the
    membership test are all O(1).  There is deliberately no insert: a
    removed vertex never comes back.
    """

    __slots__ = ("n", "head", "succ", "pred", "present")

    def __init__(self, n: int):
        self.n = n
        self.head = 1 if n >= 1 else 0
        succ = list(range(1, n + 2))
        succ[0] = 0
        if n >= 1:
            succ[n] = 0
        self.succ = succ
        pred = list(range(-1, n))
        pred[0] = 0
        self.pred = pred
        self.present = [False] + [True] * n

    def remove(self, v: int) -> None:
        # caller guarantees v is currently present
        p = self.pred[v]
        q = self.succ[v]
        if p:
            self.succ[p] = q
        else:
            self.head = q
        if q:
            self.pred[q] = p
        self.present[v] = False

    def __contains__(self, v: int) -> bool:
        return self.present[v]

    def next(self, v: int) -> int:
        return self.succ[v]

    def prev(self, v: int) -> int:
        return self.pred[v]

    def to_list(self) -> list[int]:
        out = []
        v = self.head
        while v:
            out.append(v)
            v = self.succ[v]
        return out


@dataclass
class DfsForest:
    """Result of a full traversal.

    ``parent``, ``pre`` and ``post`` are indexed 1..n (index 0 unused);
    ``parent[v] == 0`` marks a root.  ``pre`` and ``post`` are each a
    permutation of 1..n drawn from separate counters: discovery order and
    finish order.
    """

    n: int
    parent: list[int]
    pre: list[int]
    post: list[int]
    roots: list[int]


def restart_cursor(frame: DfsFrame, g: PcDigraph, u: UndiscoveredList,
                   ops: OpCounters | None = None,
                   debug_checks: bool = False) -> DfsFrame:
    """Reposition the undiscovered cursor after a recursive call returns.

    Walks backward from the predecessor of ``frame.n_cursor``, unlinking
    every cell whose vertex has been discovered (it can never be recursed
    on again, so dropping it is safe), and stops at the first cell still
    undiscovered or at the list front.  The new ``u_cursor`` is that
    vertex's successor in the undiscovered list, or its head if the walk
    hit the front.  Deleting the sentinel is structurally impossible: the
    walk starts strictly before ``n_cursor``.

    Mutates ``frame`` (and ``g``'s linkage) in place and returns ``frame``.
    """
    vert = g.cell_vertex
    nxt = g.cell_next
    prv = g.cell_prev
    present = u.present
    back = 1
    deletions = 0
    w = prv[frame.n_cursor]
    frame.w_probe = w
    while w != NIL and not present[vert[w]]:
        # loop guard is the deletion invariant: only discovered vertices go
        dead = w
        w = prv[dead]
        frame.w_probe = w
        back += 1
        q = nxt[dead]
        if w != NIL:
            nxt[w] = q
        else:
            g.list_head[frame.v] = q
        prv[q] = w
        deletions += 1
    if w == NIL:
        frame.u_cursor = u.head
    else:
        frame.u_cursor = u.succ[vert[w]]
        if ops is not None:
            ops.fwd_steps += 1
    if ops is not None:
        ops.restarts += 1
        ops.back_steps += back
        ops.deletions += deletions
    if debug_checks:
        _assert_undiscovered_prefix_stored(g, u, frame)
    return frame


def _assert_undiscovered_prefix_stored(g: PcDigraph, u: UndiscoveredList,
                                       frame: DfsFrame) -> None:
    """Debug walk: every undiscovered vertex strictly before the cursor
    must still appear in the activation's stored list (hence be a
    non-neighbor that is correctly skipped).  O(prefix length)."""
    vert = g.cell_vertex
    nxt = g.cell_next
    succ = u.succ
    c = g.list_head[frame.v]
    stop = frame.u_cursor
    x = u.head
    while x and x != stop:
        while vert[c] < x:
            c = nxt[c]
        if vert[c] != x:
            raise InvariantViolation(
                frame.v, x,
                "undiscovered vertex precedes the cursor but is missing "
                "from the stored list")
        x = succ[x]


def pc_dfs_forest(g: PcDigraph, instrument: bool = True,
                  debug_checks: bool = False) -> tuple[DfsForest, OpCounters]:
    """Full DFS forest of the digraph that ``g`` represents.

    Roots are taken in ascending vertex order, and within an activation
    candidates are considered in ascending vertex order (forced by the
    sorted lists), so the result is field-for-field identical to textbook
    DFS on the materialized graph.  The input is never mutated: the run
    destroys a private working copy of the list linkage.

    With ``instrument`` the returned :class:`OpCounters` carries the true
    tallies (otherwise it is all zeros).  With ``debug_checks`` the
    deletion and cursor-prefix invariants are verified at every mutation
    site; the prefix walk is O(prefix) per advance and changes the
    asymptotic cost, so it is strictly a test-mode flag.
    """
    n = g.n
    work = g.working_copy()
    u = UndiscoveredList(n)
    vert = work.cell_vertex
    nxt = work.cell_next
    prv = work.cell_prev
    head = work.list_head
    succ = u.succ
    present = u.present
    flags = g.complemented
    sentinel = n + 1

    parent = [0] * (n + 1)
    pre = [0] * (n + 1)
    post = [0] * (n + 1)
    roots: list[int] = []
    pre_t = 1
    post_t = 1

    ops = OpCounters()
    hot_ops = ops if instrument else None
    calls = fwd = deletions = u_removals = 0

    stack: list[DfsFrame] = []
    for root in range(1, n + 1):
        if not present[root]:
            continue
        roots.append(root)
        u.remove(root)
        calls += 1
        u_removals += 1
        pre[root] = pre_t
        pre_t += 1
        f = DfsFrame(root, n_cursor=head[root])
        if flags[root]:
            f.complemented = True
            f.u_cursor = u.head
            if debug_checks:
                _assert_undiscovered_prefix_stored(work, u, f)
        stack.append(f)

        while stack:
            f = stack[-1]
            child = 0
            if f.complemented:
                if f.awaiting_restart:
                    f.awaiting_restart = False
                    restart_cursor(f, work, u, ops=hot_ops,
                                   debug_checks=debug_checks)
                uc = f.u_cursor
                while uc:
                    nc = f.n_cursor
                    wv = vert[nc]
                    if uc == wv:
                        # non-neighbor: skip it in both lists
                        uc = succ[uc]
                        f.u_cursor = uc
                        f.n_cursor = nxt[nc]
                        fwd += 2
                        if debug_checks:
                            _assert_undiscovered_prefix_stored(work, u, f)
                    elif uc > wv:
                        # entry already discovered: unlink its cell
                        if debug_checks and present[wv]:
                            raise InvariantViolation(
                                f.v, wv,
                                "attempted to delete an undiscovered entry")
                        nc2 = nxt[nc]
                        f.n_cursor = nc2
                        fwd += 1
                        p = prv[nc]
                        if p != NIL:
                            nxt[p] = nc2
                        else:
                            head[f.v] = nc2
                        prv[nc2] = p
                        deletions += 1
                    else:
                        # undiscovered vertex absent from the list: neighbor
                        child = uc
                        f.awaiting_restart = True
                        break
            else:
                nc = f.n_cursor
                while True:
                    wv = vert[nc]
                    if wv == sentinel:
                        break
                    nc = nxt[nc]
                    fwd += 1
                    if present[wv]:
                        child = wv
                        break
                f.n_cursor = nc

            if child:
                parent[child] = f.v
                u.remove(child)
                calls += 1
                u_removals += 1
                pre[child] = pre_t
                pre_t += 1
                cf = DfsFrame(child, n_cursor=head[child])
                if flags[child]:
                    cf.complemented = True
                    cf.u_cursor = u.head
                    if debug_checks:
                        _assert_undiscovered_prefix_stored(work, u, cf)
                stack.append(cf)
            else:
                post[f.v] = post_t
                post_t += 1
                stack.pop()

    if instrument:
        ops.calls = calls
        ops.u_removals = u_removals
        ops.fwd_steps += fwd
        ops.deletions += deletions
    return DfsForest(n, parent, pre, post, roots), ops


def undirected_components(g: PcDigraph) -> list[int]:
    """Label each vertex with the root of its DFS tree.

    When ``g`` materializes to a symmetric digraph the labels are exactly
    the connected components of G.  For asymmetric inputs they are still
    the forest roots but carry no component meaning.  Returns a list
    indexed 1..n (index 0 is 0).
    """
    forest, _ = pc_dfs_forest(g, instrument=False)
    n = g.n
    by_pre = [0] * (n + 1)
    for v in range(1, n + 1):
        by_pre[forest.pre[v]] = v
    label = [0] * (n + 1)
    for t in range(1, n + 1):
        v = by_pre[t]
        p = forest.parent[v]
        label[v] = label[p] if p else v
    return label
