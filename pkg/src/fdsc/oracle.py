"""Brute-force ground truth for star-pattern connectivity.

``exact_structure_connectivity`` searches family sizes t = 1, 2, ... over
all t-subsets of the candidate stars, in lexicographic candidate order,
and returns the first disconnecting family found; a completed size-t sweep
with no hit is an exhaustive proof that no t-element family disconnects.

Two sound prunes keep the big sweeps tractable, and both are recorded in
the result so a reviewer can audit the exhaustiveness argument:

* subsets whose removed-vertex union is smaller than the graph's exact
  vertex connectivity (computed by flow, independently of this search)
  cannot disconnect anything and are skipped;
* connectivity of the survivor graph is decided by the module
  decomposition checker (``modcheck``) whose preconditions are verified
  computationally at construction; any subset it cannot decide falls back
  to a plain component search.

Neither prune can skip a subset that actually disconnects, so certificates
and exact values are identical to the unpruned search.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass, field

from .cuts import (
    STRUCTURE,
    SUBSTRUCTURE,
    FaultFamily,
    Star,
    apply_cut,
    family_to_json,
)
from .errors import ParameterError
from .graph import Graph, components_after_removal, vertex_connectivity
from .labels import FDSC, format_label
from .modcheck import ModularChecker

GENERATOR_ID = "python-random-mt19937"


def reference_value(d: int, m: int, mode: str) -> int | None:
    """Published exact star-pattern connectivity of FDSC_n, where known.

    K_1 patterns: d+2.  Single edges: 2 for d in {1,2}, d+1 beyond.  Stars
    with 2 <= m <= d+1 leaves: floor(d/2)+1 (both modes); substructure
    additionally keeps that value at m = d+2.  Returns None outside the
    known range.
    """
    if m == 0:
        return d + 2
    if m == 1:
        return 2 if d <= 2 else d + 1
    if 2 <= m <= d + 1:
        return d // 2 + 1
    if m == d + 2 and mode == SUBSTRUCTURE:
        return d // 2 + 1
    return None


def enumerate_candidates(g: Graph, m: int, mode: str) -> list[Star]:
    """Every candidate star of pattern order m, deduplicated by vertex set.

    Structure mode: all stars with exactly m leaves (every center, every
    m-subset of its sorted neighbor list).  Substructure mode: all stars
    with 0..m leaves.  Order is deterministic: centers ascending, leaf
    counts ascending, leaf combinations lexicographic; the first star with
    a given vertex set is kept.
    """
    if m < 0:
        raise ParameterError(f"pattern order must be >= 0, got {m}")
    if mode not in (STRUCTURE, SUBSTRUCTURE):
        raise ParameterError(f"mode must be structure|substructure, got {mode!r}")
    sizes = (m,) if mode == STRUCTURE else tuple(range(m + 1))
    seen: set[frozenset[int]] = set()
    out: list[Star] = []
    for center in range(g.vertex_count):
        nbrs = g.adj[center]
        for j in sizes:
            for combo in itertools.combinations(nbrs, j):
                key = frozenset(combo) | {center}
                if key in seen:
                    continue
                seen.add(key)
                out.append(Star(center=center, leaves=frozenset(combo)))
    return out


@dataclass
class OracleResult:
    dim_d: int
    dim_n: int
    variant: str
    pattern_m: int
    mode: str
    size_budget: int
    value: int | None
    proven_lower_bound: int
    certificate: FaultFamily | None
    candidates: int
    examined: int
    pruned: int
    connectivity_checks: int
    elapsed_ms: int
    seed: int | None = None
    notes: dict = field(default_factory=dict)

    def to_json(self, dim) -> dict:
        return {
            "n": self.dim_n,
            "d": self.dim_d,
            "m": self.pattern_m,
            "mode": self.mode,
            "value": self.value,
            "lower_bound": self.proven_lower_bound,
            "certificate": (
                family_to_json(self.certificate, dim) if self.certificate else None
            ),
            "candidates": self.candidates,
            "examined": self.examined,
            "pruned": self.pruned,
            "connectivity_checks": self.connectivity_checks,
            "seed": self.seed,
            "elapsed_ms": self.elapsed_ms,
            "notes": self.notes,
        }


class _FamilySearch:
    """Shared sweep over subsets of removal elements.

    Elements are given by their vertex tuples; the sweep iterates subsets
    of a fixed size in lexicographic index order and reports the first
    whose removal disconnects the graph (or leaves <= 1 vertex).
    """

    def __init__(self, g: Graph, vertex_sets: list[tuple[int, ...]], use_modular=None):
        self.g = g
        self.vertex_sets = vertex_sets
        self.masks = [self._mask(vs) for vs in vertex_sets]
        self.kappa = vertex_connectivity(g)
        if use_modular is None:
            use_modular = g.variant == FDSC and g.dim.n >= 8
        self.checker = ModularChecker(g.dim) if use_modular else None
        if self.checker is not None:
            half = g.dim.half
            mask = g.dim.module_mask
            self.grouped = [
                tuple((v & mask, 1 << (v >> half)) for v in vs) for vs in vertex_sets
            ]
        self.examined = 0
        self.pruned = 0
        self.checks = 0

    @staticmethod
    def _mask(vs: tuple[int, ...]) -> int:
        m = 0
        for v in vs:
            m |= 1 << v
        return m

    def _disconnects(self, combo: tuple[int, ...], union_size: int) -> bool:
        self.checks += 1
        if self.g.vertex_count - union_size <= 1:
            return True
        if self.checker is not None:
            touched: dict[int, int] = {}
            grouped = self.grouped
            for i in combo:
                for mod, bit in grouped[i]:
                    prev = touched.get(mod)
                    touched[mod] = bit if prev is None else prev | bit
            verdict = self.checker.connected_grouped(touched)
            if verdict is not None:
                return not verdict
        removed: set[int] = set()
        for i in combo:
            removed.update(self.vertex_sets[i])
        census = components_after_removal(self.g, removed)
        return census.component_count >= 2 or census.surviving <= 1

    def sweep(self, t: int) -> tuple[int, ...] | None:
        """First size-t subset (by index order) that disconnects, or None."""
        masks = self.masks
        count = len(masks)
        kappa = self.kappa
        examined = 0
        pruned = 0
        if t == 0 or count < t:
            return None
        for combo in itertools.combinations(range(count), t):
            examined += 1
            union = 0
            for i in combo:
                union |= masks[i]
            size = union.bit_count()
            if size < kappa:
                pruned += 1
                continue
            if self._disconnects(combo, size):
                self.examined += examined
                self.pruned += pruned
                return combo
        self.examined += examined
        self.pruned += pruned
        return None

    def notes(self) -> dict:
        return {
            "prune_rule": (
                "subsets with removed-vertex union smaller than the exact "
                f"vertex connectivity ({self.kappa}, computed by flow) cannot "
                "disconnect and are skipped"
            ),
            "connectivity_method": (
                "module-decomposition checker (preconditions verified at "
                "construction), plain search fallback"
                if self.checker is not None
                else "plain component search"
            ),
        }


def exact_structure_connectivity(
    g: Graph, m: int, mode: str, size_budget: int, use_modular=None
) -> OracleResult:
    """Exact pattern connectivity by exhaustive family search.

    Searches t = 1..size_budget; when a disconnecting family is found the
    exact value is t and the family is returned as certificate (re-checked
    with a plain component census).  Otherwise every subset within budget
    is exhausted and size_budget + 1 is a proven lower bound.
    """
    if size_budget < 1:
        raise ParameterError(f"size budget must be >= 1, got {size_budget}")
    start = time.perf_counter()
    candidates = enumerate_candidates(g, m, mode)
    search = _FamilySearch(g, [tuple(sorted(c.vertices)) for c in candidates], use_modular)
    value = None
    certificate = None
    lower = 1
    for t in range(1, size_budget + 1):
        hit = search.sweep(t)
        if hit is not None:
            family = FaultFamily(
                elements=[candidates[i] for i in hit], pattern_m=m, mode=mode
            )
            report = apply_cut(g, family)
            if not report.is_cut:
                raise AssertionError(
                    "search returned a family the plain census rejects; "
                    "connectivity routes disagree"
                )
            value = t
            certificate = family
            lower = t
            break
        lower = t + 1
    elapsed_ms = int((time.perf_counter() - start) * 1000)
    notes = search.notes()
    if value is None:
        notes["budget_exhausted"] = True
    return OracleResult(
        dim_d=g.dim.d,
        dim_n=g.dim.n,
        variant=g.variant,
        pattern_m=m,
        mode=mode,
        size_budget=size_budget,
        value=value,
        proven_lower_bound=lower,
        certificate=certificate,
        candidates=len(candidates),
        examined=search.examined,
        pruned=search.pruned,
        connectivity_checks=search.checks,
        elapsed_ms=elapsed_ms,
        notes=notes,
    )


@dataclass(frozen=True)
class RemovalSpec:
    """A mixed removal: whole vertices plus both endpoints of edges."""

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def removed(self) -> set[int]:
        out = set(self.vertices)
        for u, v in self.edges:
            out.add(u)
            out.add(v)
        return out

    def to_json(self, dim) -> dict:
        return {
            "vertices": [format_label(v, dim) for v in self.vertices],
            "edges": [
                [format_label(u, dim), format_label(v, dim)] for u, v in self.edges
            ],
        }


@dataclass
class RemovalCheckReport:
    dim_d: int
    dim_n: int
    budget: int
    mode: str
    checked: int
    pruned: int
    disconnections: list[RemovalSpec]
    seed: int | None
    generator: str | None
    elapsed_ms: int
    notes: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return not self.disconnections

    def to_json(self, dim) -> dict:
        return {
            "n": self.dim_n,
            "d": self.dim_d,
            "budget": self.budget,
            "mode": self.mode,
            "checked": self.checked,
            "pruned": self.pruned,
            "disconnections": [s.to_json(dim) for s in self.disconnections],
            "holds": self.holds,
            "seed": self.seed,
            "generator": self.generator,
            "elapsed_ms": self.elapsed_ms,
            "notes": self.notes,
        }


def check_vertex_edge_removals(
    g: Graph,
    budget_mode: str = "exhaustive",
    sample_count: int = 0,
    seed: int = 0,
    budget: int | None = None,
) -> RemovalCheckReport:
    """Assert the graph stays connected after removing any mix of up to
    ``budget`` elements, each a single vertex or both endpoints of an edge.

    Default budget is d.  Exhaustive mode enumerates every such mix;
    sample mode draws ``sample_count`` mixes of exactly ``budget`` elements
    with a seeded generator.  Disconnecting mixes are reported verbatim.
    """
    if g.variant != FDSC:
        raise ParameterError("removal check is defined for the fdsc variant")
    if g.dim.d < 3:
        raise ParameterError("removal check needs d >= 3")
    if budget is None:
        budget = g.dim.d
    start = time.perf_counter()
    edge_list = list(g.edges())
    disconnections: list[RemovalSpec] = []

    if budget_mode == "exhaustive":
        elements: list[RemovalSpec] = [
            RemovalSpec((v,), ()) for v in range(g.vertex_count)
        ]
        elements += [RemovalSpec((), (e,)) for e in edge_list]
        search = _FamilySearch(g, [tuple(sorted(s.removed())) for s in elements])
        for t in range(1, budget + 1):
            hit = search.sweep(t)
            if hit is not None:
                disconnections.append(
                    RemovalSpec(
                        vertices=tuple(v for i in hit for v in elements[i].vertices),
                        edges=tuple(e for i in hit for e in elements[i].edges),
                    )
                )
                break  # one verbatim counterexample is the finding
        report = RemovalCheckReport(
            dim_d=g.dim.d,
            dim_n=g.dim.n,
            budget=budget,
            mode="exhaustive",
            checked=search.examined,
            pruned=search.pruned,
            disconnections=disconnections,
            seed=None,
            generator=None,
            elapsed_ms=int((time.perf_counter() - start) * 1000),
            notes=search.notes(),
        )
        return report

    if budget_mode != "sample":
        raise ParameterError(f"budget_mode must be exhaustive|sample, got {budget_mode!r}")
    if sample_count < 1:
        raise ParameterError("sample mode needs sample_count >= 1")
    rng = random.Random(seed)
    checker = ModularChecker(g.dim) if g.dim.n >= 8 else None
    checked = 0
    for _ in range(sample_count):
        vertex_count = rng.randint(0, budget)
        edge_count = budget - vertex_count
        vertices = tuple(sorted(rng.sample(range(g.vertex_count), vertex_count)))
        edges = tuple(sorted(edge_list[i] for i in rng.sample(range(len(edge_list)), edge_count)))
        spec = RemovalSpec(vertices, edges)
        removed = spec.removed()
        checked += 1
        verdict = checker.connected(removed) if checker is not None else None
        if verdict is None:
            census = components_after_removal(g, removed)
            verdict = census.component_count == 1 and census.surviving > 1
        if not verdict:
            disconnections.append(spec)
    return RemovalCheckReport(
        dim_d=g.dim.d,
        dim_n=g.dim.n,
        budget=budget,
        mode="sample",
        checked=checked,
        pruned=0,
        disconnections=disconnections,
        seed=seed,
        generator=GENERATOR_ID,
        elapsed_ms=int((time.perf_counter() - start) * 1000),
        notes={
            "sampling": (
                "element count fixed at the budget; vertex/edge split and "
                "members drawn uniformly with the seeded generator"
            ),
            "connectivity_method": (
                "module-decomposition checker (preconditions verified at "
                "construction), plain search fallback"
                if checker is not None
                else "plain component search"
            ),
        },
    )


@dataclass
class SuperCutProbeReport:
    dim_d: int
    dim_n: int
    removal_size: int
    mode: str
    checked: int
    violations: list[tuple[int, ...]]
    seed: int | None
    generator: str | None
    elapsed_ms: int

    @property
    def holds(self) -> bool:
        return not self.violations

    def to_json(self, dim) -> dict:
        return {
            "n": self.dim_n,
            "d": self.dim_d,
            "removal_size": self.removal_size,
            "mode": self.mode,
            "checked": self.checked,
            "violations": [
                [format_label(v, dim) for v in vs] for vs in self.violations
            ],
            "holds": self.holds,
            "seed": self.seed,
            "generator": self.generator,
            "elapsed_ms": self.elapsed_ms,
        }


_PROBE_EXHAUSTIVE_LIMIT = 10_000_000


def super_cut_probe(
    g: Graph, budget_mode: str = "exhaustive", sample_count: int = 0, seed: int = 0
) -> SuperCutProbeReport:
    """Probe: removing fewer than 2d vertices never disconnects the graph
    without isolating a vertex.

    Exhaustive mode checks every vertex subset of size <= 2d-1 (feasible at
    n = 4 only); sample mode draws subsets of size exactly 2d-1.  A
    disconnection whose smallest component has >= 2 vertices is a
    violation and is reported.
    """
    start = time.perf_counter()
    limit = 2 * g.dim.d - 1
    violations: list[tuple[int, ...]] = []
    checked = 0

    def violates(removed: tuple[int, ...]) -> bool:
        census = components_after_removal(g, removed)
        if census.component_count <= 1:
            return False
        return census.component_sizes[-1] >= 2

    if budget_mode == "exhaustive":
        total = sum(math.comb(g.vertex_count, size) for size in range(1, limit + 1))
        if total > _PROBE_EXHAUSTIVE_LIMIT:
            raise ParameterError(
                f"exhaustive probe would visit {total} subsets; use sample mode"
            )
        for size in range(1, limit + 1):
            for removed in itertools.combinations(range(g.vertex_count), size):
                checked += 1
                if violates(removed):
                    violations.append(removed)
        return SuperCutProbeReport(
            dim_d=g.dim.d,
            dim_n=g.dim.n,
            removal_size=limit,
            mode="exhaustive",
            checked=checked,
            violations=violations,
            seed=None,
            generator=None,
            elapsed_ms=int((time.perf_counter() - start) * 1000),
        )

    if budget_mode != "sample":
        raise ParameterError(f"budget_mode must be exhaustive|sample, got {budget_mode!r}")
    if sample_count < 1:
        raise ParameterError("sample mode needs sample_count >= 1")
    rng = random.Random(seed)
    checker = ModularChecker(g.dim) if g.dim.n >= 8 else None
    for _ in range(sample_count):
        removed = tuple(sorted(rng.sample(range(g.vertex_count), limit)))
        checked += 1
        if checker is not None:
            verdict = checker.connected(removed)
            if verdict:  # connected: cannot violate
                continue
        if violates(removed):
            violations.append(removed)
    return SuperCutProbeReport(
        dim_d=g.dim.d,
        dim_n=g.dim.n,
        removal_size=limit,
        mode="sample",
        checked=checked,
        violations=violations,
        seed=seed,
        generator=GENERATOR_ID,
        elapsed_ms=int((time.perf_counter() - start) * 1000),
    )
