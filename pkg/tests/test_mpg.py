import pytest
from hypothesis import given, settings

from mpgc.coloring import three_color, validate
from mpgc.errors import GraphInputError, PreconditionError, TheoremCheckFailure
from mpgc.families import complete_graph, cycle_graph, petersen_graph
from mpgc.graph import complement, from_edges, is_cycle
from mpgc.mpg import (
    check_cycle_lemma,
    check_mpg,
    check_mpgc,
    check_structure,
    duplicate_vertex,
    find_blocker,
    five_cycle_cover,
    mpg_uncovered_edges,
    simple_cycles,
)
from oracles import (
    brute_cycles,
    brute_has_triangle,
    brute_is_mpgc,
    brute_three_colorable,
    cycle_edges,
    edge_set,
)
from strategies import graphs

C4, C5, C6 = cycle_graph(4), cycle_graph(5), cycle_graph(6)
PETERSEN = petersen_graph()
TWIN_C5 = duplicate_vertex(C5, 0)


class TestCheckMpgc:
    def test_c5(self):
        # every chord of C5 closes a triangle
        for u, v in C5.non_edges():
            assert brute_has_triangle(5, edge_set(C5) | {(u, v)})
        assert check_mpgc(C5).is_mpgc

    def test_petersen(self):
        assert check_mpgc(PETERSEN).is_mpgc

    def test_c4_complement_disconnected(self):
        report = check_mpgc(C4)
        assert not report.is_mpgc
        assert not report.complement_connected

    def test_c6_not_maximal_on_long_diagonal(self):
        report = check_mpgc(C6)
        assert not report.maximal and not report.is_mpgc
        assert report.violating_pair == (0, 3)
        grown = edge_set(C6) | {(0, 3)}
        assert not brute_has_triangle(6, grown)
        assert brute_three_colorable(6, grown)

    def test_order_below_two_rejected(self):
        with pytest.raises(GraphInputError):
            check_mpgc(from_edges(1, []))

    def test_triangle_witness_reported(self):
        report = check_mpgc(complete_graph(4))
        assert not report.triangle_free and report.triangle == (0, 1, 2)
        assert not report.three_colorable and report.coloring is None

    @settings(max_examples=150, deadline=None)
    @given(graphs(min_order=2, max_order=7))
    def test_agrees_with_definition_oracle(self, h):
        report = check_mpgc(h)
        assert report.is_mpgc == brute_is_mpgc(h.order, edge_set(h))
        assert report.is_mpgc == (
            report.complement_connected and report.triangle_free and report.three_colorable and report.maximal
        )
        if report.triangle is not None:
            a, b, c = report.triangle
            assert h.has_edge(a, b) and h.has_edge(b, c) and h.has_edge(a, c)
        if report.coloring is not None:
            assert validate(h, report.coloring)
        if report.violating_pair is not None:
            u, v = report.violating_pair
            assert not h.has_edge(u, v)
            grown = edge_set(h) | {(u, v)}
            assert not brute_has_triangle(h.order, grown)
            assert brute_three_colorable(h.order, grown)


class TestCheckMpg:
    def test_examples(self):
        assert check_mpg(complement(C5)).is_mpgc
        assert check_mpg(complement(PETERSEN)).is_mpgc
        k2 = check_mpg(complete_graph(2))
        assert not k2.is_mpgc and not k2.maximal
        assert k2.role == "mpg"

    @settings(max_examples=150, deadline=None)
    @given(graphs(min_order=2, max_order=8))
    def test_definitional_consistency(self, h):
        assert check_mpgc(h).is_mpgc == check_mpg(complement(h)).is_mpgc


class TestFindBlocker:
    COLORING = (0, 1, 0, 1, 2)

    def test_examples(self):
        assert find_blocker(C5, self.COLORING, 0, 3) == 4
        assert find_blocker(C5, self.COLORING, 1, 4) == 0

    def test_same_colour_is_precondition_error(self):
        with pytest.raises(PreconditionError):
            find_blocker(C5, self.COLORING, 0, 2)

    def test_edge_rejected(self):
        with pytest.raises(GraphInputError):
            find_blocker(C5, self.COLORING, 0, 1)

    def test_missing_blocker_is_theorem_failure(self):
        # C6 is not an MPGC; its long diagonal has no common neighbour
        with pytest.raises(TheoremCheckFailure):
            find_blocker(C6, (0, 1, 0, 1, 0, 1), 0, 3)

    def test_every_pair_blocked_in_petersen(self):
        c = three_color(PETERSEN)
        for u, v in PETERSEN.non_edges():
            if c[u] != c[v]:
                w = find_blocker(PETERSEN, c, u, v)
                assert PETERSEN.has_edge(w, u) and PETERSEN.has_edge(w, v)


class TestFiveCycleCover:
    def test_c5(self):
        cover = five_cycle_cover(C5)
        assert not cover.uncovered
        assert all(set(w) == set(range(5)) for w in cover.covered.values())

    def test_petersen(self):
        cover = five_cycle_cover(PETERSEN, all_witnesses=True)
        assert len(cover.covered) == 15 and not cover.uncovered
        assert all(len(ws) == 4 for ws in cover.all_witnesses.values())

    def test_c4(self):
        assert five_cycle_cover(C4).uncovered == C4.edges()

    @given(graphs(max_order=8))
    def test_partition_and_validity(self, g):
        cover = five_cycle_cover(g)
        assert sorted(list(cover.covered) + cover.uncovered) == g.edges()
        for e, w in cover.covered.items():
            assert is_cycle(g, w) and len(w) == 5 and e in cycle_edges(w)


class TestStructure:
    def test_c5(self):
        s = check_structure(C5)
        assert s.ok and s.diameter == 2

    def test_petersen(self):
        assert check_structure(PETERSEN).ok

    def test_c4(self):
        s = check_structure(C4)
        assert not s.has_induced_c5 and s.failures() == ["induced_c5"]


class TestCycleLemma:
    def test_c5_has_no_four_cycles(self):
        report = check_cycle_lemma(C5, 4)
        assert report.cycles == 0 and report.ok

    def test_petersen_six_cycles(self):
        report = check_cycle_lemma(PETERSEN, 6)
        assert report.cycles == len(brute_cycles(PETERSEN, 6)) > 0
        assert report.ok

    def test_twin_c5_four_cycles(self):
        report = check_cycle_lemma(TWIN_C5, 4)
        assert report.cycles > 0 and report.ok

    def test_seven_cycle_tags(self):
        report = check_cycle_lemma(PETERSEN, 7)
        assert len(report.precondition_tags) == report.cycles
        assert report.to_dict()["each_color_twice"] + report.to_dict()["precondition_failed"] == report.cycles

    def test_bad_length(self):
        with pytest.raises(GraphInputError):
            check_cycle_lemma(C5, 5)

    def test_violation_reported_on_non_mpgc(self):
        assert not check_cycle_lemma(C4, 4).ok

    @settings(deadline=None)
    @given(graphs(min_order=3, max_order=7))
    def test_simple_cycles_match_oracle(self, g):
        for k in range(3, g.order + 1):
            assert set(simple_cycles(g, k)) == brute_cycles(g, k)


class TestDuplication:
    def test_c5(self):
        assert TWIN_C5.order == 6
        assert TWIN_C5.neighbors(5) == [1, 4]
        assert TWIN_C5.degrees() == [2, 3, 2, 2, 3, 2]
        assert check_mpgc(TWIN_C5).is_mpgc

    def test_twice(self):
        g = duplicate_vertex(TWIN_C5, 0)
        assert g.order == 7
        assert not g.has_edge(0, 5) and not g.has_edge(0, 6) and not g.has_edge(5, 6)
        assert g.neighbors(0) == g.neighbors(5) == g.neighbors(6) == [1, 4]

    def test_out_of_range(self):
        with pytest.raises(GraphInputError):
            duplicate_vertex(C5, 5)


class TestMpgUncovered:
    def test_twin_duplicated_c5(self):
        assert mpg_uncovered_edges(TWIN_C5) == [(0, 5)]
        mpg = complement(TWIN_C5)
        pentagons = brute_cycles(mpg, 5)
        assert not any((0, 5) in cycle_edges(c) for c in pentagons)
        covered = set().union(*(cycle_edges(c) for c in pentagons))
        assert edge_set(mpg) - covered == {(0, 5)}

    def test_c5(self):
        assert mpg_uncovered_edges(C5) == []

    def test_petersen(self):
        mpg = complement(PETERSEN)
        covered = set().union(*(cycle_edges(c) for c in brute_cycles(mpg, 5)))
        expected = sorted(edge_set(mpg) - covered)
        assert mpg_uncovered_edges(PETERSEN) == expected == []
