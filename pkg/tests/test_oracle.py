import pytest

from fdsc import (
    ParameterError,
    apply_cut,
    check_vertex_edge_removals,
    enumerate_candidates,
    exact_structure_connectivity,
    make_dim,
    reference_value,
    super_cut_probe,
)
from fdsc.cuts import STRUCTURE, SUBSTRUCTURE
from fdsc.graph import components_after_removal

D2, D3 = make_dim(2), make_dim(3)


class TestEnumerate:
    def test_edge_candidates_n2(self, fdsc2):
        cands = enumerate_candidates(fdsc2, 1, STRUCTURE)
        assert len(cands) == 6  # the edges of the complete graph on 4 vertices
        assert all(len(c.leaves) == 1 for c in cands)

    def test_singletons_n4(self, fdsc4):
        assert len(enumerate_candidates(fdsc4, 0, STRUCTURE)) == 16

    def test_dedup_count_n4_m2_frozen(self, fdsc4):
        # 16 centers x C(4,2) = 96 raw stars; vertex-set dedup regression value
        assert len(enumerate_candidates(fdsc4, 2, STRUCTURE)) == 64

    def test_dedup_count_n8_m5_substructure_frozen(self, fdsc8):
        # 256 centers x sum_j C(5,j) = 8192 raw; dedup regression value
        assert len(enumerate_candidates(fdsc8, 5, SUBSTRUCTURE)) == 6848

    def test_dedup_by_vertex_set(self, fdsc4):
        cands = enumerate_candidates(fdsc4, 2, SUBSTRUCTURE)
        seen = {frozenset(c.vertices) for c in cands}
        assert len(seen) == len(cands)

    def test_deterministic_order(self, fdsc4):
        a = enumerate_candidates(fdsc4, 2, SUBSTRUCTURE)
        b = enumerate_candidates(fdsc4, 2, SUBSTRUCTURE)
        assert a == b

    def test_substructure_includes_smaller(self, fdsc4):
        cands = enumerate_candidates(fdsc4, 2, SUBSTRUCTURE)
        sizes = {len(c.leaves) for c in cands}
        assert sizes == {0, 1, 2}

    def test_bad_mode(self, fdsc4):
        with pytest.raises(ParameterError):
            enumerate_candidates(fdsc4, 1, "induced")


EXACT_SMALL = [
    # (d, m, mode, value)
    (1, 1, STRUCTURE, 2),
    (1, 2, STRUCTURE, 1),
    (2, 1, STRUCTURE, 2),
    (2, 1, SUBSTRUCTURE, 2),
    (2, 2, STRUCTURE, 2),
    (2, 2, SUBSTRUCTURE, 2),
    (2, 3, STRUCTURE, 2),
    (2, 3, SUBSTRUCTURE, 2),
    (2, 4, SUBSTRUCTURE, 2),
]


class TestExactValues:
    @pytest.mark.parametrize("d,m,mode,value", EXACT_SMALL)
    def test_small_exact(self, d, m, mode, value, fdsc2, fdsc4):
        g = fdsc2 if d == 1 else fdsc4
        result = exact_structure_connectivity(g, m, mode, size_budget=3)
        assert result.value == value
        assert result.proven_lower_bound == value

    def test_certificate_soundness(self, fdsc4):
        result = exact_structure_connectivity(fdsc4, 2, STRUCTURE, 3)
        assert result.certificate is not None
        assert len(result.certificate) == result.value
        assert apply_cut(fdsc4, result.certificate).is_cut

    def test_exhaustive_examined_counts(self, fdsc2):
        # a completed sweep covers the full subset space of each size
        result = exact_structure_connectivity(fdsc2, 1, STRUCTURE, 1)
        assert result.value is None
        assert result.proven_lower_bound == 2
        assert result.examined == 6  # C(6,1)
        assert result.notes.get("budget_exhausted")

    def test_exhausted_space_recount_n8(self, fdsc8):
        # no-cut verdicts must have swept exactly C(candidates, t) per size
        import math

        result = exact_structure_connectivity(fdsc8, 1, STRUCTURE, 2)
        assert result.value is None
        c = result.candidates
        assert c == 640  # the edge count
        assert result.examined == math.comb(c, 1) + math.comb(c, 2)

    def test_modular_and_plain_routes_agree(self, fdsc8):
        fast = exact_structure_connectivity(fdsc8, 2, STRUCTURE, 2)
        slow = exact_structure_connectivity(fdsc8, 2, STRUCTURE, 2, use_modular=False)
        assert fast.value == slow.value == 2
        assert fast.certificate.elements == slow.certificate.elements
        assert fast.examined == slow.examined

    def test_determinism(self, fdsc4):
        a = exact_structure_connectivity(fdsc4, 2, SUBSTRUCTURE, 3)
        b = exact_structure_connectivity(fdsc4, 2, SUBSTRUCTURE, 3)
        assert a.value == b.value
        assert a.certificate.elements == b.certificate.elements
        assert (a.examined, a.pruned) == (b.examined, b.pruned)

    def test_budget_validation(self, fdsc2):
        with pytest.raises(ParameterError):
            exact_structure_connectivity(fdsc2, 1, STRUCTURE, 0)


class TestRelations:
    def test_substructure_never_above_structure(self, fdsc2, fdsc4):
        for g, max_m in ((fdsc2, 2), (fdsc4, 3)):
            for m in range(1, max_m + 1):
                ks = exact_structure_connectivity(g, m, SUBSTRUCTURE, 3).value
                k = exact_structure_connectivity(g, m, STRUCTURE, 3).value
                assert ks is not None and k is not None
                assert ks <= k

    def test_m_independence_n4(self, fdsc4):
        values = {
            exact_structure_connectivity(fdsc4, m, STRUCTURE, 3).value for m in (2, 3)
        }
        assert values == {2}

    def test_m_independence_n8(self, fdsc8):
        # the exact value does not move with the pattern order
        values = {
            exact_structure_connectivity(fdsc8, m, STRUCTURE, 2).value
            for m in (2, 3, 4)
        }
        assert values == {2}

    def test_pattern_nesting_n4(self, fdsc4):
        values = [
            exact_structure_connectivity(fdsc4, m, SUBSTRUCTURE, 3).value
            for m in (1, 2, 3, 4)
        ]
        assert all(b <= a for a, b in zip(values, values[1:]))


class TestReferenceValues:
    def test_table(self):
        assert reference_value(3, 0, STRUCTURE) == 5
        assert reference_value(1, 1, STRUCTURE) == 2
        assert reference_value(2, 1, SUBSTRUCTURE) == 2
        assert reference_value(3, 1, STRUCTURE) == 4
        assert reference_value(6, 1, STRUCTURE) == 7
        assert reference_value(3, 2, STRUCTURE) == 2
        assert reference_value(6, 7, STRUCTURE) == 4
        assert reference_value(3, 5, SUBSTRUCTURE) == 2
        assert reference_value(3, 5, STRUCTURE) is None
        assert reference_value(3, 9, SUBSTRUCTURE) is None


class TestRemovalCheck:
    def test_small_exhaustive_holds(self, fdsc8):
        report = check_vertex_edge_removals(fdsc8, "exhaustive", budget=2)
        assert report.holds
        assert report.disconnections == []
        # C(896,1) + C(896,2) mixed vertex/edge elements
        assert report.checked == 896 + 896 * 895 // 2

    def test_sample_holds_and_deterministic(self, fdsc8):
        a = check_vertex_edge_removals(fdsc8, "sample", sample_count=2000, seed=42)
        b = check_vertex_edge_removals(fdsc8, "sample", sample_count=2000, seed=42)
        assert a.holds and b.holds
        assert a.checked == b.checked == 2000
        assert a.seed == 42 and a.generator

    def test_small_d_rejected(self, fdsc4):
        with pytest.raises(ParameterError):
            check_vertex_edge_removals(fdsc4)

    def test_plain_variant_rejected(self, dsc8):
        with pytest.raises(ParameterError):
            check_vertex_edge_removals(dsc8)


class TestSuperCutProbe:
    def test_exhaustive_n4(self, fdsc4):
        report = super_cut_probe(fdsc4, "exhaustive")
        assert report.holds
        assert report.checked == 696  # C(16,1) + C(16,2) + C(16,3)

    def test_sample_n8(self, fdsc8):
        report = super_cut_probe(fdsc8, "sample", sample_count=2000, seed=0)
        assert report.holds
        assert report.removal_size == 5

    def test_neighborhood_removal_isolates_not_violates(self, fdsc4):
        # removing a full neighborhood disconnects, but with an isolated
        # vertex, which the probe predicate permits
        removed = tuple(fdsc4.adj[0])
        census = components_after_removal(fdsc4, removed)
        assert census.component_count == 2
        assert census.component_sizes[-1] == 1
        report = super_cut_probe(fdsc4, "exhaustive")
        assert report.holds

    def test_exhaustive_cap(self, fdsc8):
        with pytest.raises(ParameterError):
            super_cut_probe(fdsc8, "exhaustive")

    def test_bad_mode(self, fdsc4):
        with pytest.raises(ParameterError):
            super_cut_probe(fdsc4, "adaptive")
