"""Materialized FDSC_n / DSC_n graphs and the queries the verification
suite and the brute-force oracle run against them.

Graphs are adjacency lists indexed by label value.  Materialization is
capped at n <= 16 (65,536 vertices); larger dimensions are served by the
label-level operations only.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field

from .errors import ParameterError, ResourceCapError
from .labels import (
    DSC,
    FDSC,
    Dim,
    ModuleAddress,
    VertexLabel,
    complement_address,
    concat_halves,
    format_label,
    module_address,
    neighbor_labels,
    neighbor_set,
)

MAX_BUILD_BITS = 16


@dataclass
class Graph:
    dim: Dim
    variant: str
    adj: list[list[int]]

    @property
    def vertex_count(self) -> int:
        return len(self.adj)

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj) // 2

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def edges(self):
        """All edges as (u, v) with u < v, ascending."""
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]


@dataclass
class ComponentCensus:
    component_count: int
    component_sizes: list[int]  # descending
    smallest_component_members: list[int]  # capped

    @property
    def surviving(self) -> int:
        return sum(self.component_sizes)


def build_graph(dim: Dim, variant: str = FDSC) -> Graph:
    """Materialize the adjacency of FDSC_n or DSC_n from the label rules."""
    if dim.n > MAX_BUILD_BITS:
        raise ResourceCapError(
            f"materialization is capped at n <= {MAX_BUILD_BITS}; n={dim.n} "
            f"has 2^{dim.n} vertices (use the label-level operations instead)"
        )
    size = 1 << dim.n
    adj = [sorted(neighbor_labels(u, dim, variant)) for u in range(size)]
    return Graph(dim=dim, variant=variant, adj=adj)


def components_after_removal(
    g: Graph, removed, member_cap: int = 16
) -> ComponentCensus:
    """Census of the subgraph induced by the vertices outside ``removed``."""
    alive = bytearray([1]) * g.vertex_count
    for u in removed:
        alive[u] = 0
    seen = bytearray(g.vertex_count)
    comps: list[tuple[int, int]] = []  # (size, representative = smallest member)
    smallest: tuple[int, list[int]] | None = None
    adj = g.adj
    for start in range(g.vertex_count):
        if not alive[start] or seen[start]:
            continue
        seen[start] = 1
        queue = deque([start])
        members = [start]
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if alive[v] and not seen[v]:
                    seen[v] = 1
                    members.append(v)
                    queue.append(v)
        comps.append((len(members), start))
        if smallest is None or len(members) < smallest[0]:
            smallest = (len(members), sorted(members)[:member_cap])
    sizes = sorted((s for s, _ in comps), reverse=True)
    return ComponentCensus(
        component_count=len(comps),
        component_sizes=sizes,
        smallest_component_members=smallest[1] if smallest else [],
    )


def is_connected(g: Graph) -> bool:
    return components_after_removal(g, ()).component_count == 1


def _min_vertex_cut_size(g: Graph, s: int, t: int) -> int:
    """Maximum number of internally vertex-disjoint s-t paths (s, t not
    adjacent), via unit-capacity flow on the split digraph.

    Nodes 2v (in) and 2v+1 (out); v_in->v_out carries capacity 1, edges
    u_out->v_in are uncapped.  Augment with BFS until no path remains.
    """
    n = g.vertex_count
    cap: dict[tuple[int, int], int] = {}
    arcs: list[list[int]] = [[] for _ in range(2 * n)]

    def add_arc(a: int, b: int, c: int) -> None:
        if (a, b) not in cap:
            arcs[a].append(b)
            arcs[b].append(a)
            cap[(a, b)] = 0
            cap[(b, a)] = 0
        cap[(a, b)] += c

    big = g.vertex_count  # effectively infinite for unit vertex capacities
    for v in range(n):
        add_arc(2 * v, 2 * v + 1, 1)
    for u, v in g.edges():
        add_arc(2 * u + 1, 2 * v, big)
        add_arc(2 * v + 1, 2 * u, big)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b in arcs[a]:
                if b not in parent and cap[(a, b)] > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            return flow
        b = sink
        while b != source:
            a = parent[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1


def vertex_connectivity(g: Graph) -> int:
    """Exact minimum vertex-cut size.

    Fix a minimum-degree vertex v0.  The minimum over (a) flow values from
    v0 to every non-neighbor and (b) flow values between every non-adjacent
    pair of v0's neighbors is exact: a minimum cut either misses v0 (case a
    sees it from v0 to any vertex the cut separates) or contains v0 (it
    then separates two of v0's neighbors, case b).  deg(v0) itself is a cut
    whenever any non-neighbor exists; for complete graphs the candidate
    list is empty and the answer is |V| - 1.

    Returns 0 for a disconnected graph.
    """
    if not is_connected(g):
        return 0
    if g.vertex_count == 1:
        return 0
    v0 = min(range(g.vertex_count), key=g.degree)
    nbrs = g.adj[v0]
    nbr_set = set(nbrs)
    non_neighbors = [t for t in range(g.vertex_count) if t != v0 and t not in nbr_set]
    if not non_neighbors:
        return g.vertex_count - 1
    best = g.degree(v0)
    for t in non_neighbors:
        best = min(best, _min_vertex_cut_size(g, v0, t))
    for x, y in itertools.combinations(nbrs, 2):
        if not g.has_edge(x, y):
            best = min(best, _min_vertex_cut_size(g, x, y))
    return best


def girth(g: Graph) -> tuple[int, list[int]] | None:
    """Length of a shortest cycle plus one witness cycle; None if acyclic.

    BFS from every vertex; a non-tree edge closing at depths (a, b) proves
    a cycle of length a + b + 1 through the root.  The minimum over all
    roots is the girth, and each BFS is cut off at half the best bound.
    """
    best: int | None = None
    witness: list[int] = []
    adj = g.adj
    for root in range(g.vertex_count):
        if best == 3:
            break
        dist = {root: 0}
        parent = {root: root}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            # A cycle shorter than `best` through this root closes with a
            # non-tree edge scanned from depth <= (best-2)//2.
            if best is not None and dist[u] > (best - 2) // 2:
                continue
            for v in adj[u]:
                if v == parent[u]:
                    continue
                if v not in dist:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                else:
                    cycle_len = dist[u] + dist[v] + 1
                    if best is None or cycle_len < best:
                        best = cycle_len
                        left = []
                        a = u
                        while a != root:
                            left.append(a)
                            a = parent[a]
                        right = []
                        b = v
                        while b != root:
                            right.append(b)
                            b = parent[b]
                        witness = [root] + left[::-1] + right
                        if best == 3:  # simple graphs have no shorter cycle
                            return best, witness
    if best is None:
        return None
    return best, witness


@dataclass
class QuotientCensus:
    """Result of contracting every module to a super vertex."""

    module_count: int
    pair_count: int  # unordered module pairs joined by >= 1 cross edge
    min_multiplicity: int
    max_multiplicity: int
    multiplicities: dict[tuple[int, int], int] = field(repr=False)

    def is_complete(self) -> bool:
        return self.pair_count == self.module_count * (self.module_count - 1) // 2

    def complement_rule_holds(self, dim: Dim) -> bool:
        """Multiplicity 2 exactly for complementary address pairs, else 1."""
        for (bi, bj), mult in self.multiplicities.items():
            expected = 2 if bj == complement_address(bi, dim) else 1
            if mult != expected:
                return False
        return True


def quotient_census(g: Graph) -> QuotientCensus:
    """Count cross edges per unordered module pair (FDSC, n >= 4)."""
    if g.variant != FDSC:
        raise ParameterError("quotient census is defined for the fdsc variant")
    if g.dim.n < 4:
        raise ParameterError("quotient census needs n >= 4")
    dim = g.dim
    mult: dict[tuple[int, int], int] = {}
    for u, v in g.edges():
        bu, bv = module_address(u, dim), module_address(v, dim)
        if bu == bv:
            continue
        key = (bu, bv) if bu < bv else (bv, bu)
        mult[key] = mult.get(key, 0) + 1
    values = mult.values()
    return QuotientCensus(
        module_count=1 << dim.half,
        pair_count=len(mult),
        min_multiplicity=min(values),
        max_multiplicity=max(values),
        multiplicities=mult,
    )


def cross_edges(
    bi: ModuleAddress, bj: ModuleAddress, dim: Dim
) -> list[tuple[VertexLabel, VertexLabel]]:
    """The cross edges joining modules bi and bj, from the label rules.

    Complementary addresses are joined by two edges (bi.bi, bj.bj) and
    (bj.bi, bi.bj); any other pair by the single edge (bj.bi, bi.bj).
    Each returned pair is re-checked against ``neighbor_set`` adjacency.
    """
    if bi == bj:
        raise ParameterError("cross edges need two distinct module addresses")
    for b in (bi, bj):
        if not 0 <= b <= dim.module_mask:
            raise ParameterError(f"module address {b} out of range for n={dim.n}")
    edges = []
    if bj == complement_address(bi, dim):
        edges.append((concat_halves(bi, bi, dim), concat_halves(bj, bj, dim)))
    edges.append((concat_halves(bj, bi, dim), concat_halves(bi, bj, dim)))
    for u, v in edges:
        if v not in neighbor_labels(u, dim, FDSC):
            raise AssertionError(
                f"cross-edge rule produced a non-edge ({u}, {v}) for n={dim.n}"
            )
    return edges


def export_edges(g: Graph) -> bytes:
    """Deterministic edge list: header, then one edge per line, smaller
    label first, lines ascending."""
    dim = g.dim
    lines = [f"# fdsc d={dim.d} n={dim.n} variant={g.variant}"]
    for u, v in g.edges():
        lines.append(f"{format_label(u, dim)} {format_label(v, dim)}")
    return ("\n".join(lines) + "\n").encode()


def export_dot(g: Graph) -> bytes:
    dim = g.dim
    lines = [f"graph {g.variant}_{dim.n} {{"]
    for u, v in g.edges():
        lines.append(f'  "{format_label(u, dim)}" -- "{format_label(v, dim)}";')
    lines.append("}")
    return ("\n".join(lines) + "\n").encode()


def export(g: Graph, fmt: str) -> bytes:
    if fmt == "edges":
        return export_edges(g)
    if fmt == "dot":
        return export_dot(g)
    raise ParameterError(f"unknown export format {fmt!r} (expected edges|dot)")
