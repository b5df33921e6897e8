"""Structure, validation, and ordering of single graphs."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qbag import (
    CyclicGraph,
    DanglingEndpoint,
    DuplicateArgument,
    InvalidArgumentId,
    RelationOverlap,
    StrengthOutOfRange,
    UnknownArgument,
    attackers,
    build_qbag,
    is_acyclic,
    is_sub_qbag,
    reaches,
    restrict,
    supporters,
    topological_order,
)

from .cases import dialogue_step1, dialogue_step2, dialogue_step3, sweep_base
from .strategies import acyclic_qbags, arbitrary_qbags


class TestBuild:
    def test_builds_support_only_graph(self):
        g = dialogue_step1()
        assert g.args == {"a", "b", "c"}
        assert g.tau == {"a": 0.5, "b": 0.7, "c": 0.2}
        assert g.att == frozenset()
        assert g.supp == {("c", "a")}

    def test_empty_graph(self):
        g = build_qbag([], attacks=[], supports=[])
        assert g.args == frozenset()
        assert is_acyclic(g)

    def test_duplicate_argument_rejected(self):
        with pytest.raises(DuplicateArgument):
            build_qbag([("a", 0.5), ("a", 0.5)])

    def test_dangling_endpoint_rejected(self):
        with pytest.raises(DanglingEndpoint):
            build_qbag([("a", 0.5)], attacks=[("a", "z")])

    def test_relation_overlap_rejected(self):
        with pytest.raises(RelationOverlap):
            build_qbag([("a", 0.5)], attacks=[("a", "a")], supports=[("a", "a")])

    def test_strength_out_of_range_rejected(self):
        with pytest.raises(StrengthOutOfRange):
            build_qbag([("a", 1.5)])
        with pytest.raises(StrengthOutOfRange):
            build_qbag([("a", -0.1)])

    def test_bad_ids_rejected(self):
        for bad in ("", "a b", "a,b", None, 3):
            with pytest.raises(InvalidArgumentId):
                build_qbag([(bad, 0.5)])

    def test_self_loop_allowed_structurally(self):
        g = build_qbag([("a", 0.5)], attacks=[("a", "a")])
        assert not is_acyclic(g)


class TestNeighbors:
    def test_attackers_of_a_in_expanded_graph(self):
        assert attackers(dialogue_step2(), "a") == {"d"}

    def test_no_attackers_in_seed_graph(self):
        assert attackers(dialogue_step1(), "a") == set()

    def test_attackers_of_d_in_final_graph(self):
        assert attackers(dialogue_step3(), "d") == {"e"}

    def test_supporters(self):
        assert supporters(dialogue_step1(), "a") == {"c"}
        assert supporters(dialogue_step1(), "c") == set()
        assert supporters(sweep_base(), "e") == {"f"}

    def test_unknown_argument(self):
        with pytest.raises(UnknownArgument):
            attackers(dialogue_step1(), "z")
        with pytest.raises(UnknownArgument):
            supporters(dialogue_step1(), "z")


class TestReaches:
    def test_two_hop_path(self):
        assert reaches(dialogue_step3(), "e", "a")  # e -> d -> a

    def test_no_outgoing_edges(self):
        assert not reaches(dialogue_step1(), "a", "c")

    def test_self_reach_needs_cycle(self):
        assert not reaches(dialogue_step3(), "c", "c")

    def test_unknown_argument(self):
        with pytest.raises(UnknownArgument):
            reaches(dialogue_step1(), "a", "z")

    @given(arbitrary_qbags())
    def test_matches_transitive_closure_oracle(self, g):
        names = sorted(g.args)
        index = {x: i for i, x in enumerate(names)}
        n = len(names)
        closure = [[False] * n for _ in range(n)]
        for s, t in g.att | g.supp:
            closure[index[s]][index[t]] = True
        for k in range(n):
            for i in range(n):
                for j in range(n):
                    closure[i][j] = closure[i][j] or (
                        closure[i][k] and closure[k][j]
                    )
        for x in names:
            for y in names:
                assert reaches(g, x, y) == closure[index[x]][index[y]]


class TestAcyclicity:
    def test_final_dialogue_graph_is_acyclic(self):
        assert is_acyclic(dialogue_step3())

    def test_two_cycle(self):
        g = build_qbag([("a", 0.5), ("b", 0.5)], attacks=[("a", "b")], supports=[("b", "a")])
        assert not is_acyclic(g)

    def test_empty(self):
        assert is_acyclic(build_qbag([]))


class TestRestrict:
    def test_dropping_the_last_arrival_recovers_previous_step(self):
        g = restrict(dialogue_step3(), {"a", "b", "c", "d"})
        assert g == dialogue_step2()

    def test_identity(self):
        g = dialogue_step3()
        assert restrict(g, g.args) == g

    def test_empty_restriction(self):
        g = restrict(dialogue_step3(), set())
        assert g == build_qbag([])

    def test_unknown_argument(self):
        with pytest.raises(UnknownArgument):
            restrict(dialogue_step1(), {"z"})

    @given(acyclic_qbags(), st.data())
    def test_restriction_is_sub_qbag(self, g, data):
        keep = data.draw(
            st.sets(st.sampled_from(sorted(g.args)), max_size=len(g.args))
            if g.args
            else st.just(set())
        )
        assert is_sub_qbag(restrict(g, keep), g)


class TestSubQbag:
    def test_dialogue_steps_nest(self):
        assert is_sub_qbag(dialogue_step1(), dialogue_step2())
        assert is_sub_qbag(dialogue_step2(), dialogue_step3())
        assert not is_sub_qbag(dialogue_step2(), dialogue_step1())

    def test_reflexive(self):
        g = dialogue_step2()
        assert is_sub_qbag(g, g)

    def test_strength_disagreement_breaks_containment(self):
        g = build_qbag([("a", 0.5)])
        h = build_qbag([("a", 0.6)])
        assert not is_sub_qbag(g, h)

    @given(arbitrary_qbags())
    def test_reflexive_on_random_graphs(self, g):
        assert is_sub_qbag(g, g)

    @given(acyclic_qbags(), st.data())
    def test_transitive_via_nested_restrictions(self, g, data):
        if not g.args:
            return
        outer = data.draw(st.sets(st.sampled_from(sorted(g.args)), max_size=len(g.args)))
        inner = data.draw(
            st.sets(st.sampled_from(sorted(outer)), max_size=len(outer))
            if outer
            else st.just(set())
        )
        small, mid = restrict(g, inner), restrict(g, outer)
        assert is_sub_qbag(small, mid)
        assert is_sub_qbag(mid, g)
        assert is_sub_qbag(small, g)


class TestTopologicalOrder:
    def test_seed_graph_order(self):
        assert topological_order(dialogue_step1()) == ["c", "b", "a"]

    def test_single_argument(self):
        assert topological_order(build_qbag([("x", 0.3)])) == ["x"]

    def test_two_cycle_raises(self):
        g = build_qbag(
            [("a", 0.5), ("b", 0.5)], attacks=[("a", "b")], supports=[("b", "a")]
        )
        with pytest.raises(CyclicGraph):
            topological_order(g)

    @given(arbitrary_qbags())
    def test_succeeds_iff_acyclic_and_respects_edges(self, g):
        if is_acyclic(g):
            order = topological_order(g)
            assert sorted(order) == sorted(g.args)
            position = {x: i for i, x in enumerate(order)}
            for s, t in g.att | g.supp:
                assert position[s] < position[t]
        else:
            with pytest.raises(CyclicGraph):
                topological_order(g)

    @given(acyclic_qbags())
    def test_deterministic(self, g):
        assert topological_order(g) == topological_order(g)
