"""Fast exact connectivity of FDSC_n minus a small vertex set.

Checking ``G - S`` by whole-graph search costs O(2^n) per query, which is
the bottleneck of the exhaustive family searches.  This checker exploits
the module decomposition instead: FDSC_n splits into 2^(n/2) modules, each
an isomorphic copy of FDSC_(n/2), every vertex has exactly one cross edge,
and every pair of modules is joined by at least one cross edge.

For a removal S touching at most a few modules:

* every module with no removed vertex ("intact") survives whole, and all
  intact modules form one connected core (each is internally connected and
  any two are joined by a cross edge whose endpoints are both intact);
* each touched module decomposes into components of (module - S), found
  by search inside a 2^(n/2)-vertex template and memoized by removed mask;
* a touched-module component joins the core as soon as any member's cross
  edge lands in an intact module, and joins another touched component via
  cross edges between touched modules.  Since the cross-edge map is an
  involution, scanning every touched survivor sees each such edge from
  both ends, so a component's scan may stop at its first core contact.

The facts this argument leans on are not assumed: the constructor verifies
them computationally for the exact dimension in use (interior adjacency of
every module equals the mapped template adjacency, every vertex has exactly
one cross edge, the module quotient is complete, the template is connected)
and raises if any fails.  Given those, ``connected`` is exact whenever at
least one module is intact; otherwise it returns None and the caller must
fall back to a plain component search.
"""

from __future__ import annotations

from .errors import ParameterError
from .graph import Graph, build_graph, is_connected
from .labels import FDSC, Dim, external_neighbor, make_dim, neighbor_labels

_CACHE_SOFT_CAP = 200_000


class ModularChecker:
    def __init__(self, dim: Dim):
        if dim.n < 8:
            raise ParameterError("module-decomposition checker needs n >= 8")
        self.dim = dim
        self.half = dim.half
        self.module_mask = dim.module_mask
        self.module_count = 1 << dim.half
        half_dim = make_dim(dim.d - 1)
        self.template: Graph = build_graph(half_dim, FDSC)
        size = 1 << dim.n
        self.ext_module = [0] * size
        self.ext_inner = [0] * size
        for v in range(size):
            e = external_neighbor(v, dim)
            self.ext_module[v] = e & self.module_mask
            self.ext_inner[v] = e >> self.half
        self._verify_decomposition()
        # removed-inner-mask -> tuple of components (tuples of inner labels)
        self._comp_cache: dict[int, tuple[tuple[int, ...], ...]] = {}

    def _verify_decomposition(self) -> None:
        dim, half, mask = self.dim, self.half, self.module_mask
        template_adj = self.template.adj
        if not is_connected(self.template):
            raise AssertionError("module template graph is not connected")
        for b in range(self.module_count):
            targets = set()
            for x in range(self.module_count):
                v = (x << half) | b
                interior = set()
                external = []
                for w in neighbor_labels(v, dim, FDSC):
                    if w & mask == b:
                        interior.add(w >> half)
                    else:
                        external.append(w)
                if interior != set(template_adj[x]):
                    raise AssertionError(
                        f"module {b:#x}: interior adjacency of inner vertex "
                        f"{x:#x} does not match the template"
                    )
                if len(external) != 1:
                    raise AssertionError(
                        f"module {b:#x}: vertex {v:#x} has {len(external)} "
                        f"cross edges, expected exactly 1"
                    )
                targets.add(external[0] & mask)
            if b in targets or len(targets) != self.module_count - 1:
                raise AssertionError(
                    f"module {b:#x}: cross edges do not reach every other module"
                )

    def _components(self, removed_mask: int) -> tuple[tuple[int, ...], ...]:
        comps = self._comp_cache.get(removed_mask)
        if comps is not None:
            return comps
        adj = self.template.adj
        size = self.module_count
        seen = 0  # bitmask over inner labels, removed marked seen
        out = []
        for start in range(size):
            if (removed_mask >> start) & 1 or (seen >> start) & 1:
                continue
            stack = [start]
            seen |= 1 << start
            members = []
            while stack:
                x = stack.pop()
                members.append(x)
                for y in adj[x]:
                    if not ((removed_mask >> y) & 1 or (seen >> y) & 1):
                        seen |= 1 << y
                        stack.append(y)
            out.append(tuple(members))
        comps = tuple(out)
        if len(self._comp_cache) > _CACHE_SOFT_CAP:
            self._comp_cache.clear()
        self._comp_cache[removed_mask] = comps
        return comps

    def connected(self, removed) -> bool | None:
        """Exact connectivity of the graph minus ``removed`` (labels).

        Returns None when no module is intact (caller must fall back).
        """
        touched: dict[int, int] = {}
        half, mask = self.half, self.module_mask
        for v in removed:
            b = v & mask
            touched[b] = touched.get(b, 0) | (1 << (v >> half))
        return self.connected_grouped(touched)

    def connected_grouped(self, touched: dict[int, int]) -> bool | None:
        """Connectivity given removals pre-grouped as module -> inner mask."""
        if len(touched) >= self.module_count:
            return None
        half = self.half
        ext_module = self.ext_module
        ext_inner = self.ext_inner
        components = self._components

        # Node 0 is the intact core; allocate nodes for every touched
        # component first so cross links can union in either direction.
        parent = [0]
        node_of: dict[int, tuple[tuple[int, ...], int]] = {}
        for b, removed_mask in touched.items():
            comps = components(removed_mask)
            node_of[b] = (comps, len(parent))
            for _ in comps:
                parent.append(len(parent))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for b, (comps, first_id) in node_of.items():
            base = b
            for offset, members in enumerate(comps):
                node = first_id + offset
                for x in members:
                    v = (x << half) | base
                    e_mod = ext_module[v]
                    other = touched.get(e_mod)
                    if other is None:
                        # Cross edge into an intact module: this component
                        # reaches the core; any link it has to another
                        # touched component is seen from that component's
                        # own scan (the cross-edge map is an involution),
                        # or is redundant once both sides touch the core.
                        ra, rb = find(node), 0
                        if ra != rb:
                            parent[ra] = rb
                        break
                    e_in = ext_inner[v]
                    if (other >> e_in) & 1:
                        continue  # partner vertex was removed
                    o_comps, o_first = node_of[e_mod]
                    for o_offset, o_members in enumerate(o_comps):
                        if e_in in o_members:
                            ra, rb = find(node), find(o_first + o_offset)
                            if ra != rb:
                                parent[ra] = rb
                            break
        root = find(0)
        return all(find(i) == root for i in range(1, len(parent)))
