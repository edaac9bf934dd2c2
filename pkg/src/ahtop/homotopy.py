"""Hom graphs, one-step homotopy, homotopy decision, and currying.

The vertices of a hom graph are graph maps K -> G (pointed maps when the
pointed flag is set); two maps are adjacent iff they differ and are
pointwise equal-or-adjacent.  That criterion is exactly adjacency of the
corresponding levels inside a map from K box I_1, so chains of one-step
moves are the same thing as homotopies; the witness validator rebuilds
the box-product map explicitly and checks it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .caps import DEFAULT_ENUMERATION_CAP, EnumerationCapError
from .graphs import (Graph, GraphMap, PointedGraph, box_product, canonical_json,
                     constant_map, make_standard)


def one_step_adjacent(a, b, codomain: Graph) -> bool:
    """Pointwise equal-or-adjacent and not identical."""
    if a == b:
        return False
    adj = codomain.adjacency
    for x, y in zip(a, b):
        if x != y and y not in adj[x]:
            return False
    return True


def _prefix_edges(domain: Graph) -> tuple[tuple[int, ...], ...]:
    """For each vertex u, its neighbors with smaller index (for pruning)."""
    out = [[] for _ in range(domain.vertex_count)]
    for u, v in domain.edges:
        out[v].append(u)  # u < v in canonical form
    return tuple(tuple(sorted(x)) for x in out)


def enumerate_graph_maps(domain: PointedGraph, codomain: PointedGraph,
                         pointed: bool = False,
                         cap: int = DEFAULT_ENUMERATION_CAP) -> list[tuple[int, ...]]:
    """All (pointed) graph maps domain -> codomain, lexicographically.

    The assignment space |V_cod| ** |V_dom| must stay under ``cap``.
    """
    n = domain.vertex_count
    m = codomain.vertex_count
    if m == 0 or n == 0:
        if n == 0:
            return [()]
        return []
    space = m ** n
    if space > cap:
        raise EnumerationCapError("graph map enumeration", space, cap)
    prefix = _prefix_edges(domain.graph)
    cod_adj = codomain.graph.adjacency
    out: list[tuple[int, ...]] = []
    chosen = [0] * n

    def extend(u: int):
        if u == n:
            out.append(tuple(chosen))
            return
        if pointed and u == domain.base:
            candidates = (codomain.base,)
        else:
            candidates = range(m)
        for val in candidates:
            ok = True
            for w in prefix[u]:
                cw = chosen[w]
                if cw != val and val not in cod_adj[cw]:
                    ok = False
                    break
            if ok:
                chosen[u] = val
                extend(u + 1)

    extend(0)
    return out


def map_neighbors(assignment, domain: PointedGraph, codomain: PointedGraph,
                  pointed: bool = False):
    """Yield the hom-graph neighbors of ``assignment`` in lex order.

    A neighbor moves each vertex within its image's closed neighborhood
    and must itself satisfy the edge condition (checked incrementally).
    """
    n = domain.vertex_count
    prefix = _prefix_edges(domain.graph)
    cod_adj = codomain.graph.adjacency
    closed = codomain.graph.closed_neighborhoods
    base = domain.base
    chosen = [0] * n

    def extend(u: int):
        if u == n:
            t = tuple(chosen)
            if t != assignment:
                yield t
            return
        if pointed and u == base:
            candidates = (assignment[u],)
        else:
            candidates = closed[assignment[u]]
        for val in candidates:
            ok = True
            for w in prefix[u]:
                cw = chosen[w]
                if cw != val and val not in cod_adj[cw]:
                    ok = False
                    break
            if ok:
                chosen[u] = val
                yield from extend(u + 1)

    yield from extend(0)


@dataclass(frozen=True)
class HomGraph:
    """The graph of graph maps domain -> codomain with one-step edges."""

    domain: PointedGraph
    codomain: PointedGraph
    pointed: bool
    maps: tuple[tuple[int, ...], ...]
    graph: PointedGraph

    @property
    def index(self) -> dict[tuple[int, ...], int]:
        if not hasattr(self, "_index"):
            object.__setattr__(self, "_index", {m: i for i, m in enumerate(self.maps)})
        return self._index

    def map_at(self, i: int) -> GraphMap:
        return GraphMap(self.domain, self.codomain, self.maps[i], self.pointed)


def build_hom_graph(domain: PointedGraph, codomain: PointedGraph,
                    pointed: bool = False,
                    cap: int = DEFAULT_ENUMERATION_CAP) -> HomGraph:
    """Materialize the hom graph; base vertex is the constant-to-base map."""
    maps = enumerate_graph_maps(domain, codomain, pointed, cap)
    index = {m: i for i, m in enumerate(maps)}
    edges = []
    for i, a in enumerate(maps):
        for b in map_neighbors(a, domain, codomain, pointed):
            j = index.get(b)
            if j is not None and j > i:
                edges.append((i, j))
    const = (codomain.base,) * domain.vertex_count
    if const not in index:
        raise ValueError("hom graph is missing the constant-to-base map")
    hg = HomGraph(domain, codomain, pointed, tuple(maps),
                  PointedGraph(Graph(len(maps), tuple(edges)), index[const]))
    object.__setattr__(hg, "_index", index)
    return hg


# ---------------------------------------------------------------------------
# homotopy decision

@dataclass(frozen=True)
class HomotopyWitness:
    """A chain f = h_0, h_1, ..., h_m = g of one-step adjacent maps."""

    steps: tuple[GraphMap, ...]

    @property
    def length(self) -> int:
        return len(self.steps) - 1

    def as_box_map(self) -> GraphMap:
        """Assemble F(u, t) = h_t(u) on domain box I_m and validate it."""
        dom = self.steps[0].domain
        cod = self.steps[0].codomain
        m = self.length
        interval = make_standard("I", m)
        prod = box_product(dom.graph, interval.graph)
        width = m + 1
        assignment = [0] * prod.vertex_count
        for u in range(dom.vertex_count):
            for t, h in enumerate(self.steps):
                assignment[u * width + t] = h.assignment[u]
        base = dom.base * width  # (u0, 0)
        return GraphMap(PointedGraph(prod, base), cod, tuple(assignment), False)

    def validate(self) -> bool:
        """Strict check: valid steps, endpoints aside, box map is a graph map."""
        dom = self.steps[0].domain
        cod = self.steps[0].codomain
        for h in self.steps:
            if h.domain != dom or h.codomain != cod:
                return False
        for a, b in zip(self.steps, self.steps[1:]):
            if not one_step_adjacent(a.assignment, b.assignment, cod.graph):
                return False
        if self.steps[0].pointed:
            if any(h.assignment[dom.base] != cod.base for h in self.steps):
                return False
        self.as_box_map()  # raises if the assembled homotopy fails
        return True

    def reversed(self) -> HomotopyWitness:
        return HomotopyWitness(tuple(reversed(self.steps)))

    def to_obj(self) -> list[list[int]]:
        return [list(h.assignment) for h in self.steps]


@dataclass(frozen=True)
class HomotopyResult:
    """Outcome of a homotopy search.

    homotopic is True (with distance and witness), False (with the fully
    explored component as certificate), or None when a distance budget
    cut the search off before the component was exhausted.
    """

    homotopic: bool | None
    distance: int | None = None
    witness: HomotopyWitness | None = None
    component: frozenset[tuple[int, ...]] | None = None
    explored: int = 0


def are_homotopic(f: GraphMap, g: GraphMap, pointed: bool = False,
                  cap: int = DEFAULT_ENUMERATION_CAP,
                  max_distance: int | None = None) -> HomotopyResult:
    """Decide f ~ g by BFS over the implicit hom graph.

    Runs breadth-first from f without materializing the map space; the
    cap bounds explored states, not the ambient |V|**|V| space.  A
    negative answer therefore comes with f's entire component as its
    certificate.
    """
    if f.domain != g.domain or f.codomain != g.codomain:
        raise ValueError("maps must share domain and codomain")
    dom, cod = f.domain, f.codomain
    if pointed:
        if f.assignment[dom.base] != cod.base or g.assignment[dom.base] != cod.base:
            raise ValueError("pointed homotopy requires pointed maps")
    start, goal = f.assignment, g.assignment

    def result_from(parents, dist):
        chain = [goal]
        while chain[-1] != start:
            chain.append(parents[chain[-1]])
        chain.reverse()
        steps = tuple(GraphMap(dom, cod, a, pointed) for a in chain)
        return HomotopyResult(True, dist, HomotopyWitness(steps),
                              explored=len(parents))

    if start == goal:
        return HomotopyResult(True, 0, HomotopyWitness((f,)), explored=1)
    parents: dict[tuple[int, ...], tuple[int, ...] | None] = {start: None}
    frontier = deque([start])
    dist = 0
    while frontier:
        dist += 1
        if max_distance is not None and dist > max_distance:
            return HomotopyResult(None, explored=len(parents))
        for _ in range(len(frontier)):
            current = frontier.popleft()
            for nb in map_neighbors(current, dom, cod, pointed):
                if nb in parents:
                    continue
                parents[nb] = current
                if nb == goal:
                    return result_from(parents, dist)
                if len(parents) > cap:
                    raise EnumerationCapError("homotopy search", len(parents), cap)
                frontier.append(nb)
    return HomotopyResult(False, component=frozenset(parents), explored=len(parents))


# ---------------------------------------------------------------------------
# homotopy class tables

@dataclass(frozen=True)
class ClassTable:
    """Partition of [K, G] into connected components of the hom graph.

    Classes are numbered by discovery order over lexicographically sorted
    maps, so the representative of each class is its least member.
    """

    probe: PointedGraph
    target: PointedGraph
    pointed: bool
    classes: tuple[tuple[tuple[int, ...], ...], ...]
    base_class: int

    @property
    def index(self) -> dict[tuple[int, ...], int]:
        if not hasattr(self, "_index"):
            idx = {}
            for c, members in enumerate(self.classes):
                for m in members:
                    idx[m] = c
            object.__setattr__(self, "_index", idx)
        return self._index

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def representative(self, c: int) -> tuple[int, ...]:
        return self.classes[c][0]

    def class_of(self, f: GraphMap | tuple[int, ...]) -> int:
        key = f.assignment if isinstance(f, GraphMap) else tuple(f)
        return self.index[key]

    def to_obj(self) -> dict:
        return {
            "probe": {"vertices": self.probe.vertex_count, "base": self.probe.base},
            "target": {"vertices": self.target.vertex_count, "base": self.target.base},
            "pointed": self.pointed,
            "classes": [{"representative": list(ms[0]), "size": len(ms)}
                        for ms in self.classes],
            "base_class": self.base_class,
        }

    def to_json(self) -> str:
        return canonical_json(self.to_obj())


def homotopy_classes(probe: PointedGraph, target: PointedGraph,
                     pointed: bool = False,
                     cap: int = DEFAULT_ENUMERATION_CAP) -> ClassTable:
    """Connected components of the (implicit) hom graph [probe, target]."""
    maps = enumerate_graph_maps(probe, target, pointed, cap)
    universe = set(maps)
    assigned: dict[tuple[int, ...], int] = {}
    classes: list[tuple[tuple[int, ...], ...]] = []
    for m in maps:
        if m in assigned:
            continue
        cid = len(classes)
        members = [m]
        assigned[m] = cid
        queue = deque([m])
        while queue:
            cur = queue.popleft()
            for nb in map_neighbors(cur, probe, target, pointed):
                if nb in universe and nb not in assigned:
                    assigned[nb] = cid
                    members.append(nb)
                    queue.append(nb)
        classes.append(tuple(sorted(members)))
    const = (target.base,) * probe.vertex_count
    if const not in assigned:
        raise ValueError("class table is missing the constant-to-base map")
    table = ClassTable(probe, target, pointed, tuple(classes), assigned[const])
    object.__setattr__(table, "_index", assigned)
    return table


def induced_on_classes(f: GraphMap, src: ClassTable, dst: ClassTable) -> tuple[int, ...]:
    """Postcomposition by f as a function on class ids.

    Well-definedness on classes is the congruence property of homotopy;
    the value at each class is computed from its representative.
    """
    if src.probe != dst.probe or src.pointed != dst.pointed:
        raise ValueError("class tables must share probe and pointedness")
    if f.domain != src.target or f.codomain != dst.target:
        raise ValueError("map does not connect the two tables' targets")
    out = []
    for c in range(src.class_count):
        rep = src.representative(c)
        composed = tuple(f.assignment[v] for v in rep)
        out.append(dst.class_of(composed))
    return tuple(out)


# ---------------------------------------------------------------------------
# currying and the evaluation map

def evaluation_map(hom: HomGraph) -> GraphMap:
    """e : hom.graph box domain -> codomain, e(w, v) = w(v)."""
    dom_g = hom.domain
    prod = box_product(hom.graph.graph, dom_g.graph)
    width = dom_g.vertex_count
    assignment = []
    for m in hom.maps:
        assignment.extend(m)
    base = hom.graph.base * width + dom_g.base
    return GraphMap(PointedGraph(prod, base), hom.codomain, tuple(assignment),
                    hom.pointed)


def curry(phi: GraphMap, outer: PointedGraph, hom: HomGraph) -> GraphMap:
    """Transpose phi : outer box hom.domain -> hom.codomain to outer -> hom.graph.

    phi's domain must be the row-major box product of outer with
    hom.domain (as built by box_product), pointed at the pair of bases.
    Each slice phi(w, -) must be a vertex of ``hom``.
    """
    inner = hom.domain
    expected = box_product(outer.graph, inner.graph)
    if phi.domain.graph != expected:
        raise ValueError("phi's domain is not the expected box product")
    if phi.domain.base != outer.base * inner.vertex_count + inner.base:
        raise ValueError("phi's base vertex is not the product base")
    if phi.codomain != hom.codomain:
        raise ValueError("phi's codomain does not match the hom graph")
    width = inner.vertex_count
    slices = []
    for w in range(outer.vertex_count):
        s = tuple(phi.assignment[w * width + v] for v in range(width))
        if s not in hom.index:
            raise ValueError(f"slice at vertex {w} is not a vertex of the hom graph")
        slices.append(hom.index[s])
    # The transpose is pointed only when the slice at the outer base is the
    # constant-to-base map, which is stronger than phi being pointed.
    pointed = hom.pointed and slices[outer.base] == hom.graph.base
    return GraphMap(outer, hom.graph, tuple(slices), pointed)


def uncurry(psi: GraphMap, outer: PointedGraph, hom: HomGraph) -> GraphMap:
    """Inverse transpose: psi : outer -> hom.graph to outer box hom.domain -> codomain."""
    if psi.codomain != hom.graph:
        raise ValueError("psi's codomain is not the hom graph")
    inner = hom.domain
    width = inner.vertex_count
    prod = box_product(outer.graph, inner.graph)
    assignment = []
    for w in range(outer.vertex_count):
        assignment.extend(hom.maps[psi.assignment[w]])
    base = outer.base * width + inner.base
    pointed = psi.pointed and hom.pointed
    return GraphMap(PointedGraph(prod, base), hom.codomain, tuple(assignment), pointed)
