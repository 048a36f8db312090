from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import pc_inputs
from pcdfs.dfs import DfsForest
from pcdfs.oracle import (
    GeneratorSpec,
    SplitMix64,
    forests_equal,
    generate,
    standard_dfs,
    trial_specs,
)
from pcdfs.pcdg import serialize
from pcdfs.pcgraph import ArcList


def recursive_reference(adj):
    """Plain recursive DFS, kept independent of the explicit-stack one.

    Only safe for tiny instances; exists to cross-check standard_dfs.
    """
    n = adj.n
    parent = [0] * (n + 1)
    pre = [0] * (n + 1)
    post = [0] * (n + 1)
    roots = []
    clock = {"pre": 1, "post": 1}

    def visit(v):
        pre[v] = clock["pre"]
        clock["pre"] += 1
        for w in adj.out[v]:
            if not pre[w]:
                parent[w] = v
                visit(w)
        post[v] = clock["post"]
        clock["post"] += 1

    for v in range(1, n + 1):
        if not pre[v]:
            roots.append(v)
            visit(v)
    return DfsForest(n, parent, pre, post, roots)


def arc_list(n, pairs):
    out = [[] for _ in range(n + 1)]
    for v, w in sorted(pairs):
        out[v].append(w)
    return ArcList(n, out)


def test_standard_dfs_edgeless():
    forest = standard_dfs(arc_list(3, []))
    assert forest.roots == [1, 2, 3]
    assert forest.pre[1:] == [1, 2, 3]
    assert forest.post[1:] == [1, 2, 3]
    assert forest.parent[1:] == [0, 0, 0]


def test_standard_dfs_complete():
    n = 4
    pairs = [(v, w) for v in range(1, n + 1)
             for w in range(1, n + 1) if v != w]
    forest = standard_dfs(arc_list(n, pairs))
    assert forest.roots == [1]
    assert forest.parent[1:] == [0, 1, 2, 3]


def test_standard_dfs_two_trees():
    forest = standard_dfs(arc_list(4, [(1, 2), (1, 4), (2, 1), (4, 2)]))
    assert forest.pre[1:] == [1, 2, 4, 3]
    assert forest.roots == [1, 3]
    assert forest == recursive_reference(
        arc_list(4, [(1, 2), (1, 4), (2, 1), (4, 2)]))


def test_exhaustive_tiny_digraphs_match_recursive():
    for n in (1, 2, 3):
        pairs = [(v, w) for v in range(1, n + 1)
                 for w in range(1, n + 1) if v != w]
        for r in range(len(pairs) + 1):
            for chosen in combinations(pairs, r):
                adj = arc_list(n, chosen)
                assert standard_dfs(adj) == recursive_reference(adj)


@given(pc_inputs(max_n=8))
def test_explicit_stack_matches_recursive(inp):
    n, entries, _ = inp
    adj = arc_list(n, entries)
    assert standard_dfs(adj) == recursive_reference(adj)


def test_forests_equal_identical():
    forest = standard_dfs(arc_list(3, [(1, 2)]))
    assert forests_equal(forest, forest) == (True, "")


def test_forests_equal_reports_first_difference():
    a = standard_dfs(arc_list(3, [(1, 2)]))
    b = standard_dfs(arc_list(3, [(1, 2)]))
    b.post[2] += 1
    ok, diagnostic = forests_equal(a, b)
    assert not ok
    assert "vertex 2" in diagnostic and "post" in diagnostic


def test_forests_equal_size_mismatch():
    a = standard_dfs(arc_list(2, []))
    b = standard_dfs(arc_list(3, []))
    ok, diagnostic = forests_equal(a, b)
    assert not ok and "counts" in diagnostic


def test_generate_is_deterministic():
    spec = GeneratorSpec(kind="random", n=20, arc_count=50,
                         complement_probability=0.5, seed=99)
    a, b = generate(spec), generate(spec)
    assert a == b
    assert serialize(a) == serialize(b)
    other = generate(GeneratorSpec(kind="random", n=20, arc_count=50,
                                   complement_probability=0.5, seed=100))
    assert serialize(other) != serialize(a)


def test_generate_complete_complement():
    g = generate(GeneratorSpec(kind="complete-complement", n=5))
    assert g.m_tilde == 0
    assert all(g.complemented[1:])


def test_generate_path():
    g = generate(GeneratorSpec(kind="path", n=3))
    assert g.entry_lists() == [[], [2], [3], []]
    assert not any(g.complemented[1:])


def test_generate_star():
    g = generate(GeneratorSpec(kind="star", n=4))
    assert g.entry_lists() == [[], [2, 3, 4], [], [], []]


def test_generate_matching_complement():
    g = generate(GeneratorSpec(kind="matching-complement", n=4))
    assert g.entry_lists() == [[], [2], [1], [4], [3]]
    assert all(g.complemented[1:])


def test_generate_rejects_bad_parameters():
    with pytest.raises(ValueError, match="even"):
        generate(GeneratorSpec(kind="matching-complement", n=5))
    with pytest.raises(ValueError, match="arc_count"):
        generate(GeneratorSpec(kind="random", n=3, arc_count=7))
    with pytest.raises(ValueError, match="not both"):
        generate(GeneratorSpec(kind="random", n=3, arc_count=1, density=0.5))
    with pytest.raises(ValueError, match="kind"):
        generate(GeneratorSpec(kind="cycle", n=3))
    with pytest.raises(ValueError, match="n must be"):
        generate(GeneratorSpec(kind="path", n=0))
    with pytest.raises(ValueError, match="density"):
        generate(GeneratorSpec(kind="random", n=3, density=1.5))
    with pytest.raises(ValueError, match="does not take"):
        generate(GeneratorSpec(kind="path", n=3, arc_count=2))


@given(st.integers(min_value=1, max_value=12), st.data())
def test_generate_random_counts_and_flags(n, data):
    possible = n * (n - 1)
    m = data.draw(st.integers(min_value=0, max_value=possible))
    seed = data.draw(st.integers(min_value=0, max_value=2**64 - 1))
    g = generate(GeneratorSpec(kind="random", n=n, arc_count=m, seed=seed))
    assert g.m_tilde == m
    assert not any(g.complemented[1:])
    g_all = generate(GeneratorSpec(kind="random", n=n, arc_count=m,
                                   complement_probability=1.0, seed=seed))
    assert all(g_all.complemented[1:])


def test_generate_density_sizing():
    g = generate(GeneratorSpec(kind="random", n=10, density=0.5, seed=3))
    assert g.m_tilde == 45  # round(0.5 * 10 * 9)


def test_splitmix_reference_stream():
    # first outputs for seed 0; frozen so any reimplementation can check
    rng = SplitMix64(0)
    assert [rng.next_u64() for _ in range(3)] == [
        16294208416658607535,
        7960286522194355700,
        487617019471545679,
    ]


def test_splitmix_bounded_draws():
    rng = SplitMix64(42)
    draws = [rng.below(10) for _ in range(1000)]
    assert set(draws) <= set(range(10))
    assert len(set(draws)) == 10
    units = [rng.unit() for _ in range(100)]
    assert all(0.0 <= x < 1.0 for x in units)
    with pytest.raises(ValueError):
        rng.below(0)


def test_trial_specs_deterministic_and_in_range():
    a = trial_specs(7, 50, 16, 0.5)
    b = trial_specs(7, 50, 16, 0.5)
    assert a == b
    for spec in a:
        assert 1 <= spec.n <= 16
        assert 0 <= spec.arc_count <= spec.n * (spec.n - 1) // 2
