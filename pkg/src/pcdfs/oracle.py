"""Ground truth and reproducible instances.

Everything here is deliberately boring: a textbook DFS over materialized
adjacency, an exact forest comparator, and seeded instance generators.
The fast traversal in :mod:`pcdfs.dfs` is tested against these, never the
other way around.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dfs import DfsForest
from .pcgraph import ArcList, PcDigraph, build_pc_lists

_MASK64 = (1 << 64) - 1

GENERATOR_KINDS = (
    "random",
    "path",
    "star",
    "complete-complement",
    "matching-complement",
)


class SplitMix64:
    """The splitmix64 generator; fixed so instances reproduce anywhere.

    state advances by 0x9E3779B97F4A7C15 per draw; output mixes the state
    with xor-shifts by 30/27/31 and multiplies by 0xBF58476D1CE4E5B9 and
    0x94D049BB133111EB.  ``below`` maps draws to a bounded range by
    rejecting values in the final partial block, ``unit`` takes the top 53
    bits as a float in [0, 1).
    """

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound)."""
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        limit = _MASK64 + 1 - ((_MASK64 + 1) % bound)
        while True:
            r = self.next_u64()
            if r < limit:
                return r % bound

    def unit(self) -> float:
        """Uniform float in [0, 1) with 53 bits of precision."""
        return (self.next_u64() >> 11) / (1 << 53)


@dataclass(frozen=True)
class GeneratorSpec:
    """Deterministic description of a test instance.

    ``kind`` selects the family; ``arc_count`` or ``density`` (at most one)
    sizes the ``random`` family; ``complement_probability`` is the chance
    each vertex of a ``random`` instance is complemented.  The named shapes
    ignore the sizing fields.  Identical specs, seed included, generate
    identical digraphs.
    """

    kind: str
    n: int
    arc_count: int | None = None
    density: float | None = None
    complement_probability: float = 0.0
    seed: int = 0


def generate(spec: GeneratorSpec) -> PcDigraph:
    """Build the instance a :class:`GeneratorSpec` describes.

    ``random``: ``arc_count`` distinct (v, w) entries drawn by rejection
    against a presence set, then each vertex flagged complemented with
    probability ``complement_probability`` (draw order: all arcs, then
    flags for v = 1..n).  ``path``: entries v -> v+1, uncomplemented.
    ``star``: entries 1 -> w for all w > 1, uncomplemented.
    ``complete-complement``: every vertex complemented, empty lists (the
    implicit complete digraph).  ``matching-complement``: every vertex
    complemented, lists pairing 2k-1 <-> 2k (the complement of a perfect
    matching, symmetric).
    """
    if spec.kind not in GENERATOR_KINDS:
        raise ValueError(f"unknown generator kind: {spec.kind!r}")
    n = spec.n
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")

    if spec.kind == "random":
        return _generate_random(spec)
    if spec.arc_count is not None or spec.density is not None:
        raise ValueError(
            f"kind {spec.kind!r} does not take arc_count or density")

    if spec.kind == "path":
        entries = [(v, v + 1) for v in range(1, n)]
        flags = [False] * n
    elif spec.kind == "star":
        entries = [(1, w) for w in range(2, n + 1)]
        flags = [False] * n
    elif spec.kind == "complete-complement":
        entries = []
        flags = [True] * n
    else:  # matching-complement
        if n % 2 != 0:
            raise ValueError(
                f"matching-complement needs an even n, got {n}")
        entries = []
        for k in range(1, n // 2 + 1):
            entries.append((2 * k - 1, 2 * k))
            entries.append((2 * k, 2 * k - 1))
        flags = [True] * n
    return build_pc_lists(n, entries, flags)


def _generate_random(spec: GeneratorSpec) -> PcDigraph:
    n = spec.n
    possible = n * (n - 1)
    if spec.arc_count is not None and spec.density is not None:
        raise ValueError("give arc_count or density, not both")
    if spec.density is not None:
        if not 0.0 <= spec.density <= 1.0:
            raise ValueError(f"density must be in [0, 1], got {spec.density}")
        arc_count = int(spec.density * possible + 0.5)
    else:
        arc_count = spec.arc_count if spec.arc_count is not None else 0
    if arc_count < 0 or arc_count > possible:
        raise ValueError(
            f"arc_count {arc_count} out of range 0..{possible} for n={n}")
    p = spec.complement_probability
    if not 0.0 <= p <= 1.0:
        raise ValueError(
            f"complement_probability must be in [0, 1], got {p}")

    rng = SplitMix64(spec.seed)
    seen = set()
    entries = []
    while len(entries) < arc_count:
        v = 1 + rng.below(n)
        w = 1 + rng.below(n)
        if v == w or (v, w) in seen:
            continue
        seen.add((v, w))
        entries.append((v, w))
    flags = [rng.unit() < p for _ in range(n)]
    return build_pc_lists(n, entries, flags)


def trial_specs(master_seed: int, trials: int, max_n: int,
                complement_probability: float) -> list[GeneratorSpec]:
    """Specs for randomized equivalence trials.

    Each trial draws, from one splitmix64 master stream: n uniform in
    1..max_n, an entry count uniform in 0..n(n-1)/2, and a child seed.
    """
    rng = SplitMix64(master_seed)
    specs = []
    for _ in range(trials):
        n = 1 + rng.below(max_n)
        m = rng.below(n * (n - 1) // 2 + 1)
        child_seed = rng.next_u64()
        specs.append(GeneratorSpec(
            kind="random", n=n, arc_count=m,
            complement_probability=complement_probability, seed=child_seed))
    return specs


def standard_dfs(adj: ArcList) -> DfsForest:
    """Textbook DFS over explicit adjacency; the reference semantics.

    Roots ascend, neighbors are scanned in stored (ascending) order, and
    the forest encoding matches :func:`pcdfs.dfs.pc_dfs_forest`.  Uses an
    explicit stack so deep instances cannot overflow the interpreter.
    """
    n = adj.n
    out = adj.out
    parent = [0] * (n + 1)
    pre = [0] * (n + 1)
    post = [0] * (n + 1)
    roots = []
    pre_t = 1
    post_t = 1
    stack_v: list[int] = []
    stack_i: list[int] = []
    for root in range(1, n + 1):
        if pre[root]:
            continue
        roots.append(root)
        pre[root] = pre_t
        pre_t += 1
        stack_v.append(root)
        stack_i.append(0)
        while stack_v:
            v = stack_v[-1]
            row = out[v]
            i = stack_i[-1]
            child = 0
            while i < len(row):
                w = row[i]
                i += 1
                if not pre[w]:
                    child = w
                    break
            stack_i[-1] = i
            if child:
                parent[child] = v
                pre[child] = pre_t
                pre_t += 1
                stack_v.append(child)
                stack_i.append(0)
            else:
                post[v] = post_t
                post_t += 1
                stack_v.pop()
                stack_i.pop()
    return DfsForest(n, parent, pre, post, roots)


def forests_equal(a: DfsForest, b: DfsForest) -> tuple[bool, str]:
    """Exact comparison; on mismatch names the smallest differing vertex.

    Returns ``(True, "")`` or ``(False, diagnostic)``.
    """
    if a.n != b.n:
        return False, f"vertex counts differ: {a.n} vs {b.n}"
    for v in range(1, a.n + 1):
        for name in ("parent", "pre", "post"):
            x = getattr(a, name)[v]
            y = getattr(b, name)[v]
            if x != y:
                return False, (
                    f"vertex {v}: {name} differs ({x} vs {y})")
    if a.roots != b.roots:
        return False, f"root sets differ: {a.roots} vs {b.roots}"
    return True, ""
