import hypothesis
from hypothesis import strategies as st

from pcdfs.pcgraph import build_pc_lists

hypothesis.settings.register_profile("pcdfs", deadline=None)
hypothesis.settings.load_profile("pcdfs")


@st.composite
def pc_inputs(draw, max_n=10):
    """(n, entries, flags) construction inputs over small vertex counts."""
    n = draw(st.integers(min_value=1, max_value=max_n))
    possible = [(v, w)
                for v in range(1, n + 1)
                for w in range(1, n + 1) if v != w]
    if possible:
        entries = draw(st.lists(st.sampled_from(possible), unique=True,
                                max_size=len(possible)))
    else:
        entries = []
    flags = draw(st.lists(st.booleans(), min_size=n, max_size=n))
    return n, entries, flags


@st.composite
def pc_digraphs(draw, max_n=10):
    n, entries, flags = draw(pc_inputs(max_n=max_n))
    return build_pc_lists(n, entries, flags)


@st.composite
def symmetric_pc_digraphs(draw, max_n=8):
    """Instances whose materialization is symmetric: a symmetric entry set
    with either every vertex complemented or none."""
    n = draw(st.integers(min_value=1, max_value=max_n))
    undirected = [(v, w)
                  for v in range(1, n + 1)
                  for w in range(v + 1, n + 1)]
    if undirected:
        chosen = draw(st.lists(st.sampled_from(undirected), unique=True,
                               max_size=len(undirected)))
    else:
        chosen = []
    entries = [(v, w) for v, w in chosen] + [(w, v) for v, w in chosen]
    flag = draw(st.booleans())
    return build_pc_lists(n, entries, [flag] * n)
