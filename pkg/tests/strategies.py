from __future__ import annotations

from hypothesis import strategies as st

from adhc_lab import OrientedGraph


@st.composite
def oriented_graphs(draw, min_n: int = 0, max_n: int = 9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    choice = draw(st.lists(st.integers(0, 2), min_size=len(pairs), max_size=len(pairs)))
    arcs = []
    for (i, j), c in zip(pairs, choice):
        if c == 1:
            arcs.append((i, j))
        elif c == 2:
            arcs.append((j, i))
    return OrientedGraph.from_arcs(n, arcs)


@st.composite
def graph_and_perm(draw, min_n: int = 0, max_n: int = 9):
    g = draw(oriented_graphs(min_n, max_n))
    perm = draw(st.permutations(list(range(g.n))))
    return g, list(perm)


@st.composite
def graph_with_partition(draw, min_n: int = 4, max_n: int = 12):
    g = draw(oriented_graphs(min_n, max_n))
    labels = draw(st.lists(st.integers(0, 3), min_size=g.n, max_size=g.n))
    parts = [[v for v in range(g.n) if labels[v] == k] for k in range(4)]
    return g, parts
