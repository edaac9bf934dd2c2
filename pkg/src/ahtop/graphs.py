"""Finite simple graphs, pointed graphs, and graph maps.

Vertices are dense integer indices 0..n-1; labels are cosmetic only and
never participate in equality.  Edges are kept in canonical form -- each
pair stored as (min, max) and the whole tuple sorted -- so two Graph
values compare equal iff they are the same labelled graph.  All values
are immutable; every operation here is a pure function.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from functools import cached_property


def _canonical_edges(vertex_count: int, edges) -> tuple[tuple[int, int], ...]:
    canon = set()
    for e in edges:
        u, v = e
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise ValueError(f"edge {(u, v)} out of range for {vertex_count} vertices")
        if u == v:
            raise ValueError(f"self-loop at vertex {u} not allowed in a simple graph")
        canon.add((u, v) if u < v else (v, u))
    return tuple(sorted(canon))


@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph on vertices 0..vertex_count-1."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        object.__setattr__(self, "edges", _canonical_edges(self.vertex_count, self.edges))
        if self.labels is not None:
            labels = tuple(self.labels)
            if len(labels) != self.vertex_count:
                raise ValueError("labels must have one entry per vertex")
            object.__setattr__(self, "labels", labels)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(s) for s in adj)

    @cached_property
    def closed_neighborhoods(self) -> tuple[tuple[int, ...], ...]:
        """Sorted N[v] = {v} | N(v) per vertex; the one-step move sets."""
        return tuple(tuple(sorted(self.adjacency[v] | {v})) for v in range(self.vertex_count))

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def label_of(self, v: int) -> str:
        if self.labels is not None:
            return self.labels[v]
        return str(v)


@dataclass(frozen=True)
class PointedGraph:
    """A graph together with a distinguished base vertex."""

    graph: Graph
    base: int = 0

    def __post_init__(self):
        if not (0 <= self.base < self.graph.vertex_count):
            raise ValueError(f"base vertex {self.base} out of range")

    @property
    def vertex_count(self) -> int:
        return self.graph.vertex_count

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self.graph.edges


def is_graph_map(domain: Graph, codomain: Graph, assignment,
                 pointed: bool = False, domain_base: int = 0,
                 codomain_base: int = 0):
    """Check the edge condition; return (ok, first_violation).

    The violation is ("edge", u1, u2) for the first edge (in canonical
    order) whose endpoints map to distinct non-adjacent vertices, or
    ("base", domain_base) when base preservation fails.  Raises on a
    non-total or out-of-range assignment.
    """
    assignment = tuple(assignment)
    if len(assignment) != domain.vertex_count:
        raise ValueError(
            f"assignment has {len(assignment)} entries for {domain.vertex_count} vertices")
    for v in assignment:
        if not (0 <= v < codomain.vertex_count):
            raise ValueError(f"assignment value {v} out of range in codomain")
    if pointed and assignment[domain_base] != codomain_base:
        return False, ("base", domain_base)
    adj = codomain.adjacency
    for u1, u2 in domain.edges:
        a, b = assignment[u1], assignment[u2]
        if a != b and b not in adj[a]:
            return False, ("edge", u1, u2)
    return True, None


@dataclass(frozen=True)
class GraphMap:
    """A vertex assignment satisfying the edge condition.

    When ``pointed`` is set the assignment must also carry the domain
    base to the codomain base.  Construction validates; invalid
    assignments raise ValueError naming the violation.
    """

    domain: PointedGraph
    codomain: PointedGraph
    assignment: tuple[int, ...]
    pointed: bool = False

    def __post_init__(self):
        object.__setattr__(self, "assignment", tuple(self.assignment))
        ok, violation = is_graph_map(
            self.domain.graph, self.codomain.graph, self.assignment,
            self.pointed, self.domain.base, self.codomain.base)
        if not ok:
            raise ValueError(f"not a graph map: violation {violation}")

    def __call__(self, v: int) -> int:
        return self.assignment[v]

    def unpointed(self) -> GraphMap:
        return replace(self, pointed=False)


def identity_map(pg: PointedGraph, pointed: bool = True) -> GraphMap:
    return GraphMap(pg, pg, tuple(range(pg.vertex_count)), pointed)


def constant_map(domain: PointedGraph, codomain: PointedGraph,
                 value: int | None = None, pointed: bool = True) -> GraphMap:
    """The constant map; defaults to the constant at the codomain base."""
    if value is None:
        value = codomain.base
    if pointed and value != codomain.base:
        raise ValueError("pointed constant map must hit the codomain base")
    return GraphMap(domain, codomain, (value,) * domain.vertex_count, pointed)


def compose(g: GraphMap, f: GraphMap) -> GraphMap:
    """g after f.  Pointedness survives only if both maps carry it."""
    if f.codomain != g.domain:
        raise ValueError("maps not composable: codomain/domain mismatch")
    assignment = tuple(g.assignment[v] for v in f.assignment)
    return GraphMap(f.domain, g.codomain, assignment, f.pointed and g.pointed)


# ---------------------------------------------------------------------------
# standard families

def make_standard(family: str, size: int, base: int = 0) -> PointedGraph:
    """Build I_m, C_n, K_n or Q_n, pointed at vertex ``base`` (default 0).

    I_m is the path on m+1 vertices 0..m with edges i(i+1).  Q_n is the
    n-fold box power of I_1 (the n-cube).
    """
    fam = family.strip().upper().split("_")[0]
    if fam == "I":
        if size < 0:
            raise ValueError("I_m requires size >= 0")
        g = Graph(size + 1, tuple((i, i + 1) for i in range(size)))
    elif fam == "C":
        if size < 3:
            raise ValueError("C_n requires size >= 3")
        g = Graph(size, tuple((i, (i + 1) % size) for i in range(size)))
    elif fam == "K":
        if size < 1:
            raise ValueError("K_n requires size >= 1")
        g = Graph(size, tuple((i, j) for i in range(size) for j in range(i + 1, size)))
    elif fam == "Q":
        if size < 1:
            raise ValueError("Q_n requires size >= 1")
        g = Graph(2, ((0, 1),))
        for _ in range(size - 1):
            g = box_product(g, Graph(2, ((0, 1),)))
    else:
        raise ValueError(f"unknown family {family!r}; expected one of I, C, K, Q")
    return PointedGraph(g, base)


# ---------------------------------------------------------------------------
# graph operations

def box_product(g: Graph, h: Graph) -> Graph:
    """Cartesian (box) product: one coordinate fixed, the other moves.

    Vertex (u, v) gets index u * |V_h| + v (row-major).
    """
    nh = h.vertex_count
    edges = []
    for u in range(g.vertex_count):
        off = u * nh
        for v1, v2 in h.edges:
            edges.append((off + v1, off + v2))
    for u1, u2 in g.edges:
        for v in range(nh):
            edges.append((u1 * nh + v, u2 * nh + v))
    return Graph(g.vertex_count * nh, tuple(edges))


def pair_index(u: int, v: int, h_count: int) -> int:
    """Index of (u, v) in a row-major box product with |V_h| = h_count."""
    return u * h_count + v


def unpair_index(i: int, h_count: int) -> tuple[int, int]:
    return divmod(i, h_count)


def induced_subgraph(g: Graph, vertices) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced on ``vertices``; returns (graph, old->new index map)."""
    vs = sorted(set(vertices))
    for v in vs:
        if not (0 <= v < g.vertex_count):
            raise ValueError(f"vertex {v} out of range")
    remap = {old: new for new, old in enumerate(vs)}
    edges = tuple((remap[u], remap[v]) for u, v in g.edges if u in remap and v in remap)
    return Graph(len(vs), edges), remap


def quotient_contract(g: Graph, blocks) -> tuple[Graph, tuple[int, ...]]:
    """Contract each block to a single vertex; unlisted vertices are singletons.

    Loops created by contraction are dropped and parallel edges merged, so
    the result stays simple.  Returns (graph, projection old->new), with
    new indices ordered by each block's smallest member.
    """
    seen: dict[int, int] = {}
    block_list = []
    for b in blocks:
        b = sorted(set(b))
        if not b:
            continue
        for v in b:
            if not (0 <= v < g.vertex_count):
                raise ValueError(f"vertex {v} out of range")
            if v in seen:
                raise ValueError(f"overlapping blocks at vertex {v}")
            seen[v] = len(block_list)
        block_list.append(b)
    for v in range(g.vertex_count):
        if v not in seen:
            seen[v] = len(block_list)
            block_list.append([v])
    order = sorted(range(len(block_list)), key=lambda i: block_list[i][0])
    rank = {old: new for new, old in enumerate(order)}
    projection = tuple(rank[seen[v]] for v in range(g.vertex_count))
    edges = tuple((projection[u], projection[v]) for u, v in g.edges
                  if projection[u] != projection[v])
    return Graph(len(block_list), edges), projection


def apply_relabeling(g: Graph, perm) -> Graph:
    """Relabel vertices by a permutation perm[old] = new."""
    perm = tuple(perm)
    if sorted(perm) != list(range(g.vertex_count)):
        raise ValueError("not a permutation of the vertex set")
    return Graph(g.vertex_count, tuple((perm[u], perm[v]) for u, v in g.edges))


def isomorphic_by(g: Graph, h: Graph, perm) -> bool:
    """Check that the explicit relabeling perm carries g onto h."""
    return g.vertex_count == h.vertex_count and apply_relabeling(g, perm) == Graph(
        h.vertex_count, h.edges)


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Components as sorted vertex tuples, ordered by smallest member."""
    seen = [False] * g.vertex_count
    comps = []
    for start in range(g.vertex_count):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(tuple(sorted(comp)))
    return comps


def component_of(g: Graph, start: int) -> frozenset[int]:
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in g.adjacency[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return frozenset(seen)


def eccentricity(g: Graph, v: int) -> int:
    """Max BFS distance from v within its component."""
    dist = {v: 0}
    frontier = [v]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for w in g.adjacency[u]:
                if w not in dist:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return max(dist.values())


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Distances from source; unreachable vertices get -1."""
    dist = [-1] * g.vertex_count
    dist[source] = 0
    frontier = [source]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for w in g.adjacency[u]:
                if dist[w] < 0:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist


# ---------------------------------------------------------------------------
# serialization

def canonical_json(obj) -> str:
    """Deterministic JSON text: sorted keys, 2-space indent, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def graph_to_obj(g: Graph, base: int | None = None) -> dict:
    obj: dict = {"vertices": g.vertex_count, "edges": [list(e) for e in g.edges]}
    if base is not None:
        obj["base"] = base
    if g.labels is not None:
        obj["labels"] = list(g.labels)
    return obj


def pointed_graph_to_json(pg: PointedGraph) -> str:
    return canonical_json(graph_to_obj(pg.graph, pg.base))


def graph_from_obj(obj: dict) -> PointedGraph:
    try:
        n = obj["vertices"]
        edges = tuple(tuple(e) for e in obj["edges"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"graph object missing required field: {exc}") from exc
    labels = tuple(obj["labels"]) if "labels" in obj else None
    return PointedGraph(Graph(n, edges, labels), obj.get("base", 0))


def pointed_graph_from_json(text: str) -> PointedGraph:
    return graph_from_obj(json.loads(text))


def map_to_obj(f: GraphMap) -> dict:
    return {
        "domain": graph_to_obj(f.domain.graph, f.domain.base),
        "codomain": graph_to_obj(f.codomain.graph, f.codomain.base),
        "assignment": list(f.assignment),
        "pointed": f.pointed,
    }


def map_from_obj(obj: dict) -> GraphMap:
    try:
        dom = graph_from_obj(obj["domain"])
        cod = graph_from_obj(obj["codomain"])
        assignment = tuple(obj["assignment"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"map object missing required field: {exc}") from exc
    return GraphMap(dom, cod, assignment, bool(obj.get("pointed", False)))


def graph_to_dot(g: Graph, base: int | None = None, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.vertex_count):
        attrs = [f'label="{g.label_of(v)}"']
        if base is not None and v == base:
            attrs.append("shape=doublecircle")
        lines.append(f"  {v} [{', '.join(attrs)}];")
    for u, v in g.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
