from __future__ import annotations

import pytest

from conftest import letters
from oracles import naive_isomorphic
from twinwidth.fixtures import fixture_text
from twinwidth.formats import FormatError
from twinwidth.generators import complete
from twinwidth.graph import Graph
from twinwidth.planar import (
    EmbeddingError,
    NonSimpleDual,
    RotationSystem,
    dual_graph,
    emit_rotation_system,
    euler_characteristic,
    parse_rotation_system,
    trace_faces,
)


@pytest.fixture
def prism_rs() -> RotationSystem:
    return parse_rotation_system(fixture_text("prism_rotation.txt"))


def mirrored(r: RotationSystem) -> RotationSystem:
    return RotationSystem(r.graph, tuple(tuple(reversed(rot)) for rot in r.rotations))


def cycles_as_sets(r):
    return sorted("".join(sorted(chr(97 + v) for v in cyc)) for cyc in trace_faces(r).vertex_cycles())


# planar K4: vertex 3 in the middle of triangle 0 1 2
K4_ROT = [[1, 3, 2], [2, 3, 0], [0, 3, 1], [0, 1, 2]]


class TestTraceFaces:
    def test_prism_faces(self, prism_rs):
        assert cycles_as_sets(prism_rs) == sorted(["def", "bcef", "acdf", "abde", "abc"])

    def test_prism_graph_matches_fixture(self, prism_rs, prism):
        assert prism_rs.graph == prism

    def test_triangle(self):
        r = RotationSystem.from_rotations([[1, 2], [2, 0], [0, 1]])
        assert len(trace_faces(r).faces) == 2
        assert euler_characteristic(r) == 2

    def test_k4(self):
        r = RotationSystem.from_rotations(K4_ROT)
        faces = trace_faces(r).faces
        assert len(faces) == 4 and all(len(f) == 3 for f in faces)

    def test_darts_used_once(self, prism_rs):
        faces = trace_faces(prism_rs).faces
        darts = [d for f in faces for d in f]
        assert len(darts) == len(set(darts)) == 2 * prism_rs.graph.edge_count

    def test_disconnected(self):
        with pytest.raises(EmbeddingError):
            trace_faces(RotationSystem.from_rotations([[1], [0], [3], [2]]))

    def test_malformed_rotation(self):
        with pytest.raises(EmbeddingError):
            RotationSystem(complete(3), ((1,), (0, 2), (0, 1)))
        with pytest.raises(EmbeddingError, match="missing"):
            RotationSystem.from_rotations([[1, 2], [0], [1]])


class TestDual:
    def test_prism_dual_matches_drawing(self, prism_rs):
        # r1..r5 as a..e: triangle r2 r3 r4, r1 and r5 each joined to all of it
        gstar = Graph.from_edges(5, letters("cd db bc ec ed eb ab ac ad"))
        assert naive_isomorphic(dual_graph(prism_rs), gstar)

    def test_prism_dual_edges_by_face_name(self, prism_rs):
        names = {"def": "r1", "bcef": "r2", "acdf": "r3", "abde": "r4", "abc": "r5"}
        faces = ["".join(sorted(chr(97 + v) for v in c)) for c in trace_faces(prism_rs).vertex_cycles()]
        dual = dual_graph(prism_rs)
        got = {frozenset({names[faces[u]], names[faces[v]]}) for u, v in dual.edges()}
        want = {frozenset(p.split("-")) for p in "r3-r4 r4-r2 r2-r3 r5-r2 r5-r3 r5-r4 r1-r2 r1-r3 r1-r4".split()}
        assert got == want

    def test_mirror_gives_same_dual(self, prism_rs):
        assert naive_isomorphic(dual_graph(prism_rs), dual_graph(mirrored(prism_rs)))

    def test_triangle_is_not_simple(self):
        r = RotationSystem.from_rotations([[1, 2], [2, 0], [0, 1]])
        with pytest.raises(NonSimpleDual) as info:
            dual_graph(r)
        assert sorted(info.value.face_pairs.values()) == [3]

    def test_bridge_gives_loop(self):
        r = RotationSystem.from_rotations([[1], [0]])
        with pytest.raises(NonSimpleDual) as info:
            dual_graph(r)
        (a, b), = info.value.face_pairs
        assert a == b

    def test_k4_self_dual(self):
        r = RotationSystem.from_rotations(K4_ROT)
        assert dual_graph(r) == complete(4)

    def test_nonplanar_rotation(self):
        # K4 with one rotation flipped lands on the torus
        rot = [list(x) for x in K4_ROT]
        rot[3] = [0, 2, 1]
        r = RotationSystem.from_rotations(rot)
        assert euler_characteristic(r) != 2
        with pytest.raises(EmbeddingError, match="not planar"):
            dual_graph(r)


class TestRotationFormat:
    def test_roundtrip(self, prism_rs):
        assert parse_rotation_system(emit_rotation_system(prism_rs)) == prism_rs

    def test_numeric_names(self):
        r = parse_rotation_system("0: 1 2\n1: 2 0\n2: 0 1\n")
        assert r.graph == complete(3)

    @pytest.mark.parametrize("text", ["", "a b c\n", "a: b\na: b\n", "a: c\nc: a\n"])
    def test_bad_input(self, text):
        with pytest.raises(FormatError):
            parse_rotation_system(text)
