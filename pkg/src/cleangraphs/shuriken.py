"""Shuriken graphs and the shuriken operation on a graph.

Two constructions share the (t, n) parameter shape.  The standalone
family Sh(t, n) lives on 3n vertices a_i, b_i, c_i.  The operation
Shu(g, t, n) takes n copies of g plus a per-copy hub and wires the
copies together; the first t copies are completed and the remaining
n - t copies are joined in mirrored pairs.  Index i always mirrors to
n + t + 1 - i.
"""

from __future__ import annotations

from .graph import Graph


def is_null(g: Graph) -> bool:
    """True when g has no edges (vertices are allowed)."""
    return g.num_edges == 0


def build_sh(t: int, n: int) -> Graph:
    """The standalone shuriken graph on vertices a1..an, b1..bn, c1..cn.

    Requires t a power of two dividing n with n - t even.  Edges: the
    complete bipartite a x b core, straight spokes a_i c_i and b_i c_i
    for i <= t, crossed spokes a_i and b_i to c at the mirror index for
    i > t, and mirror matchings within each of the a, b, c rows.
    """
    if t < 1 or t & (t - 1):
        raise ValueError(f"t must be a power of two, got {t}")
    if n < t or n % t:
        raise ValueError(f"n must be a multiple of t with n >= t, got t={t} n={n}")
    if (n - t) % 2:
        raise ValueError(f"n - t must be even, got t={t} n={n}")

    g = Graph(
        [f"a{i}" for i in range(1, n + 1)]
        + [f"b{i}" for i in range(1, n + 1)]
        + [f"c{i}" for i in range(1, n + 1)]
    )
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            g.add_edge(f"a{i}", f"b{j}")
    for i in range(1, t + 1):
        g.add_edge(f"a{i}", f"c{i}")
        g.add_edge(f"b{i}", f"c{i}")
    for i in range(t + 1, n + 1):
        m = n + t + 1 - i
        g.add_edge(f"a{i}", f"c{m}")
        g.add_edge(f"b{i}", f"c{m}")
    for i in range(t + 1, (n + t) // 2 + 1):
        m = n + t + 1 - i
        g.add_edge(f"a{i}", f"a{m}")
        g.add_edge(f"b{i}", f"b{m}")
        g.add_edge(f"c{i}", f"c{m}")
    return g


def copy_label(v: str, i: int) -> str:
    """Label of vertex v inside copy i of the shuriken operation."""
    return f"{v}@{i}"


def hub_label(i: int) -> str:
    return f"z@{i}"


def build_shu(g: Graph, t: int, n: int) -> Graph:
    """The (t, n)-shuriken graph of g.

    Takes n copies of g with a fresh hub vertex z per copy.  Edges: each
    g-edge uv lifts to u@i -- v@j for every pair of copies (same copy
    included); copies 1..t are completed into cliques (hub included);
    copies i and n + t + 1 - i are completely joined for
    t < i <= (n + t) / 2.  Hypotheses: n >= t >= 1 and n - t even.
    """
    if t < 1 or n < t:
        raise ValueError(f"need n >= t >= 1, got t={t} n={n}")
    if (n - t) % 2:
        raise ValueError(f"n - t must be even, got t={t} n={n}")
    if g.has_vertex("z"):
        raise ValueError('input graph must not use the reserved label "z"')

    base = list(g.vertices)
    out = Graph(
        copy_label(v, i) for i in range(1, n + 1) for v in base + ["z"]
    )
    for u, v in g.edges():
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                out.add_edge(copy_label(u, i), copy_label(v, j))
    full = base + ["z"]
    for i in range(1, t + 1):
        for x in range(len(full)):
            for y in range(x + 1, len(full)):
                out.add_edge(copy_label(full[x], i), copy_label(full[y], i))
    for i in range(t + 1, (n + t) // 2 + 1):
        m = n + t + 1 - i
        for x in full:
            for y in full:
                out.add_edge(copy_label(x, i), copy_label(y, m))
    return out
