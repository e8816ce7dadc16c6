from __future__ import annotations

import itertools

import pytest
from hypothesis import given

from conftest import graphs, letters
from twinwidth.generators import complete, cycle, disjoint_union, path
from twinwidth.graph import (
    Graph,
    Partition,
    Trigraph,
    complement,
    component_vertex_sets,
    components,
    contract,
    max_red_degree,
    partition_of,
    quotient,
)
from twinwidth.iso import enumerate_nonisomorphic


def named_edges(t: Trigraph, pairs):
    """Edges as pairs of label sets, to compare with merged-vertex names."""
    return {frozenset({t.label(u), t.label(v)}) for u, v in pairs}


def lab(s: str) -> frozenset[int]:
    return frozenset(ord(c) - 97 for c in s)


class TestGraph:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError, match="self-loop"):
            Graph.from_edges(2, [(0, 0)])

    def test_rejects_asymmetric_rows(self):
        with pytest.raises(ValueError, match="asymmetric"):
            Graph(2, (0b10, 0))

    def test_needs_a_vertex(self):
        with pytest.raises(ValueError):
            Graph(0, ())

    def test_edges_and_degrees(self):
        g = path(4)
        assert g.edges() == [(0, 1), (1, 2), (2, 3)]
        assert g.degrees() == [1, 2, 2, 1]
        assert g.edge_count == 3

    def test_relabel_roundtrip(self):
        g = path(4)
        perm = [2, 0, 3, 1]
        inv = [perm.index(i) for i in range(4)]
        assert g.relabel(perm).relabel(inv) == g


class TestContract:
    def test_worked_first_merge(self, worked_graph):
        t = contract(Trigraph.from_graph(worked_graph), 4, 5)
        assert named_edges(t, t.red_edges()) == {frozenset({lab("a"), lab("ef")}), frozenset({lab("d"), lab("ef")})}
        ef_black = {e for e in named_edges(t, t.black_edges()) if lab("ef") in e}
        assert ef_black == {frozenset({lab(x), lab("ef")}) for x in "bcg"}
        untouched = {frozenset({lab(x), lab(y)}) for x, y in ["ab", "ad", "bc", "bd"]}
        assert untouched <= named_edges(t, t.black_edges())

    def test_true_twins(self):
        t = contract(Trigraph.from_graph(complete(3)), 0, 1)
        assert t.black_edges() == [(0, 2)]
        assert t.red_edges() == []

    def test_false_twins(self):
        t = contract(Trigraph.from_graph(path(3)), 0, 2)
        assert t.black_edges() == [(0, 1)]
        assert t.red_edges() == []
        assert t.label(0) == {0, 2}

    def test_pure(self, worked_graph):
        t = Trigraph.from_graph(worked_graph)
        contract(t, 4, 5)
        assert t == Trigraph.from_graph(worked_graph)

    @pytest.mark.parametrize("u, v", [(0, 0), (0, 9), (-1, 2)])
    def test_bad_vertices(self, u, v):
        with pytest.raises(ValueError):
            contract(Trigraph.from_graph(path(3)), u, v)

    def test_dead_vertex(self):
        t = contract(Trigraph.from_graph(path(3)), 0, 2)
        with pytest.raises(ValueError, match="not live"):
            contract(t, 1, 2)

    @given(graphs(min_n=2, max_n=7))
    def test_invariants_along_a_sequence(self, g):
        t = Trigraph.from_graph(g)
        while t.order > 1:
            u, v = t.vertices()[:2]
            before = t.order
            t = contract(t, v, u)
            assert t.order == before - 1
            for x in t.vertices():
                assert not t.black[x] & t.red[x]
                assert not t.black[x] >> x & 1 and not t.red[x] >> x & 1
            blocks = [t.labels[x] for x in t.vertices()]
            assert sum(b.bit_count() for b in blocks) == g.n
            Partition(g.n, tuple(blocks))


class TestMaxRedDegree:
    def test_worked_frames(self, worked_graph):
        t = Trigraph.from_graph(worked_graph)
        assert max_red_degree(t) == 0
        t = contract(t, 4, 5)  # ef
        assert max_red_degree(t) == 2
        t = contract(t, 0, 3)  # ad
        t = contract(t, 1, 4)  # bef
        assert sorted(map(sorted, map(t.label, t.vertices()))) == [[0, 3], [1, 4, 5], [2], [6]]
        # b is not adjacent to g but ef is, so bef-g is red alongside ad-bef;
        # the hand-drawn frame shows bef-g black.
        assert named_edges(t, t.red_edges()) == {
            frozenset({lab("ad"), lab("bef")}),
            frozenset({lab("bef"), lab("g")}),
        }
        assert max_red_degree(t) == 2

    def test_plain_graph(self):
        assert max_red_degree(Trigraph.from_graph(cycle(6))) == 0


class TestQuotient:
    def test_matches_worked_second_frame(self, worked_graph):
        p = Partition.from_sets(7, [{0}, {1}, {2}, {3}, {4, 5}, {6}])
        assert quotient(worked_graph, p) == contract(Trigraph.from_graph(worked_graph), 4, 5)

    def test_identity_partition(self, worked_graph):
        q = quotient(worked_graph, Partition.singletons(7))
        assert q.black == worked_graph.adj
        assert q.red_edges() == []

    def test_rejects_wrong_size(self):
        with pytest.raises(ValueError):
            quotient(path(3), Partition.singletons(4))

    @pytest.mark.parametrize("blocks", [[{0, 1}, {1, 2}], [{0}, {1}], [{0, 1, 2}, set()]])
    def test_invalid_partitions(self, blocks):
        with pytest.raises(ValueError):
            Partition.from_sets(3, blocks)

    def test_key_is_order_independent(self):
        a = Partition.from_sets(4, [{2, 3}, {0}, {1}])
        b = Partition.from_sets(4, [{1}, {3, 2}, {0}])
        assert a.key() == b.key()


def _check_all_prefixes(g: Graph) -> int:
    checked = 0

    def walk(t: Trigraph):
        nonlocal checked
        assert quotient(g, partition_of(t)) == t
        checked += 1
        for u, v in itertools.combinations(t.vertices(), 2):
            walk(contract(t, u, v))

    walk(Trigraph.from_graph(g))
    return checked


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_quotient_equals_sequential_contraction(n):
    """Every prefix of every contraction order, every graph class up to n = 5."""
    for g in enumerate_nonisomorphic(n):
        _check_all_prefixes(g)


@given(graphs(max_n=5))
def test_quotient_equals_sequential_contraction_labeled(g):
    _check_all_prefixes(g)


class TestComplement:
    def test_complete(self):
        assert complement(complete(4)) == Graph.empty(4)

    def test_c5_self_complementary(self):
        # 0-2-4-1-3-0 is the complement cycle
        assert complement(cycle(5)) == Graph.from_edges(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)])

    @pytest.mark.parametrize("n", range(1, 7))
    def test_involution(self, n):
        for g in enumerate_nonisomorphic(n):
            assert complement(complement(g)) == g
            assert g.edge_count + complement(g).edge_count == n * (n - 1) // 2


class TestComponents:
    def test_disjoint_union(self):
        g = disjoint_union(complete(3), complete(2))
        assert components(g) == [complete(3), complete(2)]

    def test_connected(self):
        assert components(cycle(5)) == [cycle(5)]

    def test_graph4_of_five_vertex_list(self):
        g = Graph.from_edges(5, letters("ae cd"))
        assert sorted(c.n for c in components(g)) == [1, 2, 2]
        assert component_vertex_sets(g) == [(0, 4), (1,), (2, 3)]

    @given(graphs())
    def test_blocks_partition_vertices(self, g):
        sets = component_vertex_sets(g)
        assert sorted(v for s in sets for v in s) == list(range(g.n))
        assert sum(c.edge_count for c in components(g)) == g.edge_count
