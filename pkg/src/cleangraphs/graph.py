"""Small simple-graph toolkit: construction, components, isomorphism search,
deterministic export.

Vertices are string labels.  Graphs are undirected, loop-free and
unweighted; that is all the ring constructions need.  The isomorphism
searcher is independent of any structure theorem so it can serve as a
neutral cross-check for constructive witnesses.
"""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Literal, Mapping

# exact canonicalization is factorial in component size; above this we
# fall back to invariant comparison
MAX_CANON_VERTICES = 8

DEFAULT_SEARCH_BUDGET = 10_000_000


def _norm(a: str, b: str) -> tuple[str, str]:
    return (a, b) if a <= b else (b, a)


class Graph:
    """Mutable simple graph with ordered vertex storage."""

    __slots__ = ("_order", "_adj")

    def __init__(
        self,
        vertices: Iterable[str] = (),
        edges: Iterable[tuple[str, str]] = (),
    ) -> None:
        self._order: list[str] = []
        self._adj: dict[str, set[str]] = {}
        for v in vertices:
            self.add_vertex(v)
        for a, b in edges:
            self.add_edge(a, b)

    # -- mutation ------------------------------------------------------------

    def add_vertex(self, v: str) -> None:
        if not isinstance(v, str):
            raise TypeError(f"vertex labels must be str, got {type(v).__name__}")
        if v not in self._adj:
            self._order.append(v)
            self._adj[v] = set()

    def add_edge(self, a: str, b: str) -> None:
        if a == b:
            raise ValueError(f"self-loop at {a!r} not allowed")
        self.add_vertex(a)
        self.add_vertex(b)
        self._adj[a].add(b)
        self._adj[b].add(a)

    # -- inspection ------------------------------------------------------------

    @property
    def vertices(self) -> tuple[str, ...]:
        return tuple(self._order)

    @property
    def num_vertices(self) -> int:
        return len(self._order)

    @property
    def num_edges(self) -> int:
        return sum(len(s) for s in self._adj.values()) // 2

    def edges(self) -> tuple[tuple[str, str], ...]:
        """All edges as normalized pairs, sorted."""
        seen = {_norm(a, b) for a, nbrs in self._adj.items() for b in nbrs}
        return tuple(sorted(seen))

    def has_vertex(self, v: str) -> bool:
        return v in self._adj

    def has_edge(self, a: str, b: str) -> bool:
        return a in self._adj and b in self._adj[a]

    def neighbors(self, v: str) -> frozenset[str]:
        return frozenset(self._adj[v])

    def degree(self, v: str) -> int:
        return len(self._adj[v])

    def degree_sequence(self) -> tuple[int, ...]:
        """Degrees in non-increasing order."""
        return tuple(sorted((len(s) for s in self._adj.values()), reverse=True))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return set(self._order) == set(other._order) and self.edges() == other.edges()

    def __hash__(self):
        raise TypeError("Graph is mutable and unhashable")

    def __repr__(self) -> str:
        return f"Graph({self.num_vertices} vertices, {self.num_edges} edges)"

    # -- derived graphs ------------------------------------------------------

    def induced_subgraph(self, keep: Iterable[str]) -> "Graph":
        keep_set = set(keep)
        missing = keep_set - set(self._adj)
        if missing:
            raise ValueError(f"not vertices of this graph: {sorted(missing)}")
        g = Graph(v for v in self._order if v in keep_set)
        for a, b in self.edges():
            if a in keep_set and b in keep_set:
                g.add_edge(a, b)
        return g

    def relabel(self, mapping: Mapping[str, str]) -> "Graph":
        """Injectively rename every vertex."""
        if set(mapping) != set(self._adj):
            raise ValueError("mapping must cover exactly the vertex set")
        if len(set(mapping.values())) != len(mapping):
            raise ValueError("mapping must be injective")
        g = Graph(mapping[v] for v in self._order)
        for a, b in self.edges():
            g.add_edge(mapping[a], mapping[b])
        return g

    def connected_components(self) -> list["Graph"]:
        """Induced component subgraphs, largest first, ties by vertex labels."""
        seen: set[str] = set()
        comps: list[Graph] = []
        for start in self._order:
            if start in seen:
                continue
            stack = [start]
            part = {start}
            while stack:
                v = stack.pop()
                for w in self._adj[v]:
                    if w not in part:
                        part.add(w)
                        stack.append(w)
            seen |= part
            comps.append(self.induced_subgraph(part))
        comps.sort(key=lambda c: (-c.num_vertices, c.vertices))
        return comps

    def is_connected(self) -> bool:
        if not self._order:
            return True
        return len(self.connected_components()) == 1


# -- stock constructions -------------------------------------------------------


def _labels(k: int) -> list[str]:
    if k < 0:
        raise ValueError("vertex count must be >= 0")
    return [f"v{i}" for i in range(1, k + 1)]


def complete_graph(k: int) -> Graph:
    g = Graph(_labels(k))
    vs = g.vertices
    for i in range(k):
        for j in range(i + 1, k):
            g.add_edge(vs[i], vs[j])
    return g


def empty_graph(k: int) -> Graph:
    return Graph(_labels(k))


def path_graph(k: int) -> Graph:
    g = Graph(_labels(k))
    vs = g.vertices
    for i in range(k - 1):
        g.add_edge(vs[i], vs[i + 1])
    return g


def disjoint_union(graphs: Iterable[Graph]) -> Graph:
    """Disjoint union; vertex v of the i-th input becomes ``p{i}_{v}``."""
    out = Graph()
    for i, g in enumerate(graphs):
        for v in g.vertices:
            out.add_vertex(f"p{i}_{v}")
        for a, b in g.edges():
            out.add_edge(f"p{i}_{a}", f"p{i}_{b}")
    return out


# -- canonical forms and component summaries -----------------------------------


def canonical_form(g: Graph) -> tuple[int, int] | None:
    """(k, code) minimal over all vertex orderings, or None above the cap.

    ``code`` packs the upper triangle of the permuted adjacency matrix
    into an int, so equal forms mean isomorphic graphs (exactly).
    """
    k = g.num_vertices
    if k > MAX_CANON_VERTICES:
        return None
    vs = g.vertices
    idx = {v: i for i, v in enumerate(vs)}
    nbrs = [frozenset(idx[w] for w in g.neighbors(v)) for v in vs]
    best: int | None = None
    for perm in permutations(range(k)):
        code = 0
        for i in range(k):
            pi = perm[i]
            row = nbrs[pi]
            for j in range(i + 1, k):
                code = code << 1 | (perm[j] in row)
        if best is None or code < best:
            best = code
    return (k, best if best is not None else 0)


@dataclass(frozen=True)
class ComponentSummary:
    """Multiset of per-component keys, exact for small components.

    Each key is (vertices, edges, degree sequence, canonical form or
    None).  Two graphs with equal summaries have matching component
    structure; when every component fits under the canonicalization cap
    the match is exact isomorphism type by type.
    """

    counts: tuple[tuple[tuple, int], ...]

    @classmethod
    def of(cls, g: Graph) -> "ComponentSummary":
        keys = Counter(
            (c.num_vertices, c.num_edges, c.degree_sequence(), canonical_form(c))
            for c in g.connected_components()
        )
        return cls(tuple(sorted(keys.items())))

    def describe(self) -> str:
        parts = []
        for (nv, ne, _, _), mult in self.counts:
            parts.append(f"{mult} x ({nv}v,{ne}e)")
        return " + ".join(parts) if parts else "empty"


# -- isomorphism -----------------------------------------------------------


@dataclass(frozen=True)
class IsoWitness:
    """Vertex bijection presented as sorted (source, target) pairs."""

    pairs: tuple[tuple[str, str], ...]

    @classmethod
    def from_dict(cls, mapping: Mapping[str, str]) -> "IsoWitness":
        return cls(tuple(sorted(mapping.items())))

    def as_dict(self) -> dict[str, str]:
        return dict(self.pairs)


@dataclass(frozen=True)
class IsoResult:
    status: Literal["isomorphic", "not_isomorphic", "inconclusive"]
    witness: IsoWitness | None
    nodes_expanded: int

    @property
    def decided(self) -> bool:
        return self.status != "inconclusive"


def verify_mapping(g: Graph, h: Graph, mapping: Mapping[str, str] | IsoWitness) -> bool:
    """Check that mapping is a graph isomorphism from g onto h.

    Bijectivity plus edge counts reduce the work to mapping each g-edge
    onto some h-edge: injective vertex images make the induced edge map
    injective, and equal edge counts then force surjectivity, so
    non-edges are preserved automatically.
    """
    if isinstance(mapping, IsoWitness):
        mapping = mapping.as_dict()
    if set(mapping) != set(g.vertices):
        return False
    images = set(mapping.values())
    if len(images) != len(mapping) or images != set(h.vertices):
        return False
    if g.num_edges != h.num_edges:
        return False
    return all(h.has_edge(mapping[a], mapping[b]) for a, b in g.edges())


def _joint_refinement(
    g: Graph, h: Graph
) -> tuple[dict[str, int], dict[str, int]] | None:
    """Degree-seeded color refinement run over both graphs at once.

    Returns stable colorings sharing one palette, or None as soon as the
    color histograms split (which certifies non-isomorphism).
    """
    cg = {v: g.degree(v) for v in g.vertices}
    ch = {v: h.degree(v) for v in h.vertices}
    while True:
        if Counter(cg.values()) != Counter(ch.values()):
            return None
        palette: dict[tuple, int] = {}

        def recolor(graph: Graph, colors: dict[str, int]) -> dict[str, int]:
            out = {}
            for v in graph.vertices:
                sig = (colors[v], tuple(sorted(colors[w] for w in graph.neighbors(v))))
                out[v] = palette.setdefault(sig, len(palette))
            return out

        ng, nh = recolor(g, cg), recolor(h, ch)
        stable = len(set(ng.values())) == len(set(cg.values()))
        cg, ch = ng, nh
        if stable:
            if Counter(cg.values()) != Counter(ch.values()):
                return None
            return cg, ch


def _search_order(g: Graph, colors: dict[str, int]) -> list[str]:
    """Vertex order for the backtracker: stay adjacent to the mapped
    prefix, prefer rare colors and high degree."""
    class_size = Counter(colors.values())
    order: list[str] = []
    placed: set[str] = set()
    remaining = set(g.vertices)
    while remaining:
        v = min(
            remaining,
            key=lambda u: (
                -sum(1 for w in g.neighbors(u) if w in placed),
                class_size[colors[u]],
                -g.degree(u),
                u,
            ),
        )
        order.append(v)
        placed.add(v)
        remaining.remove(v)
    return order


def find_isomorphism(
    g: Graph, h: Graph, budget: int = DEFAULT_SEARCH_BUDGET
) -> IsoResult:
    """Decide whether g and h are isomorphic, within a node budget.

    Pipeline: cheap invariants, then joint color refinement, then
    color-respecting backtracking.  Exhausting the search space proves
    non-isomorphism; exceeding ``budget`` node expansions yields
    ``inconclusive`` instead of a wrong verdict.
    """
    if g.num_vertices != h.num_vertices or g.num_edges != h.num_edges:
        return IsoResult("not_isomorphic", None, 0)
    if g.degree_sequence() != h.degree_sequence():
        return IsoResult("not_isomorphic", None, 0)
    if g.num_vertices == 0:
        return IsoResult("isomorphic", IsoWitness(()), 0)

    refined = _joint_refinement(g, h)
    if refined is None:
        return IsoResult("not_isomorphic", None, 0)
    cg, ch = refined

    order = _search_order(g, cg)
    k = len(order)
    by_color: dict[int, list[str]] = {}
    for v in h.vertices:
        by_color.setdefault(ch[v], []).append(v)
    for vs in by_color.values():
        vs.sort()

    g_nbrs = {v: g.neighbors(v) for v in g.vertices}
    h_nbrs = {v: h.neighbors(v) for v in h.vertices}
    # earlier order positions adjacent to order[d], precomputed per depth
    back_adj: list[list[int]] = []
    pos = {v: i for i, v in enumerate(order)}
    for d, v in enumerate(order):
        back_adj.append([pos[w] for w in g_nbrs[v] if pos[w] < d])

    mapping: list[str | None] = [None] * k
    used: set[str] = set()
    cand_iters: list[Iterable[str]] = [iter(by_color.get(cg[order[0]], []))]
    depth = 0
    expanded = 0

    while depth >= 0:
        advanced = False
        for cand in cand_iters[depth]:
            if cand in used:
                continue
            expanded += 1
            if expanded > budget:
                return IsoResult("inconclusive", None, expanded)
            # exact consistency with the mapped prefix: neighbors of the
            # current vertex must map onto neighbors of cand, and the
            # adjacency counts below make non-edges match too
            want = back_adj[depth]
            cn = h_nbrs[cand]
            if any(mapping[i] not in cn for i in want):
                continue
            if sum(1 for i in range(depth) if mapping[i] in cn) != len(want):
                continue
            mapping[depth] = cand
            used.add(cand)
            depth += 1
            if depth == k:
                witness = IsoWitness.from_dict(
                    {order[i]: mapping[i] for i in range(k)}  # type: ignore[misc]
                )
                assert verify_mapping(g, h, witness)
                return IsoResult("isomorphic", witness, expanded)
            cand_iters.append(iter(by_color.get(cg[order[depth]], [])))
            advanced = True
            break
        if not advanced:
            cand_iters.pop()
            depth -= 1
            if depth >= 0 and mapping[depth] is not None:
                used.discard(mapping[depth])  # type: ignore[arg-type]
                mapping[depth] = None
    return IsoResult("not_isomorphic", None, expanded)


# -- serialization -----------------------------------------------------------

EXPORT_FORMATS = ("dot", "json", "edgelist", "incidence")


def _check_exportable(g: Graph) -> None:
    for v in g.vertices:
        if any(ch.isspace() for ch in v) or '"' in v:
            raise ValueError(f"label {v!r} contains whitespace or quotes")


def export(g: Graph, fmt: str) -> str:
    """Render g in one of EXPORT_FORMATS.  Output is deterministic:
    vertices in stored order, edges sorted."""
    if fmt not in EXPORT_FORMATS:
        raise ValueError(f"unknown format {fmt!r}, expected one of {EXPORT_FORMATS}")
    _check_exportable(g)
    if fmt == "dot":
        lines = ["graph {"]
        lines += [f'  "{v}";' for v in g.vertices]
        lines += [f'  "{a}" -- "{b}";' for a, b in g.edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"
    if fmt == "json":
        doc = {
            "vertices": list(g.vertices),
            "edges": [list(e) for e in g.edges()],
        }
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "edgelist":
        lines = [f"# {g.num_vertices} vertices, {g.num_edges} edges"]
        lines += [f"v {v}" for v in g.vertices]
        lines += [f"e {a} {b}" for a, b in g.edges()]
        return "\n".join(lines) + "\n"
    # incidence: rows follow vertex storage order, columns the sorted edges
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    es = g.edges()
    writer.writerow(["vertex"] + [f"{a}--{b}" for a, b in es])
    for v in g.vertices:
        writer.writerow([v] + [1 if v in e else 0 for e in es])
    return buf.getvalue()


def parse_edgelist(text: str) -> Graph:
    """Inverse of export(..., "edgelist"); comments and blanks ignored.

    Vertices referenced only by ``e`` lines are added implicitly, so
    plain two-column edge files load too.
    """
    g = Graph()
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if fields[0] == "v" and len(fields) == 2:
            g.add_vertex(fields[1])
        elif fields[0] == "e" and len(fields) == 3:
            g.add_edge(fields[1], fields[2])
        else:
            raise ValueError(f"line {ln}: cannot parse {raw!r}")
    return g
