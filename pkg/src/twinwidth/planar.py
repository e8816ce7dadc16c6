"""Face tracing and planar duals from rotation systems.

A rotation system lists, for each vertex, its neighbours in cyclic order.
Faces are traced with the successor rule: after arriving at ``v`` along
``u -> v``, leave along ``v -> w`` where ``w`` follows ``u`` in the rotation
at ``v``.  Mirrored rotations give mirrored faces and the same dual.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .formats import FormatError, parse_vertex
from .graph import Graph, bits_of, is_connected, vertex_name

Dart = tuple[int, int]


class EmbeddingError(ValueError):
    pass


class NonSimpleDual(Exception):
    """The dual multigraph has a loop or parallel edges.

    ``face_pairs`` counts, for every edge of the primal graph, the pair of
    faces on its two sides (a loop shows up as ``(f, f)``).
    """

    def __init__(self, face_pairs: Counter):
        self.face_pairs = face_pairs
        loops = sum(c for (a, b), c in face_pairs.items() if a == b)
        parallel = sum(c - 1 for (a, b), c in face_pairs.items() if a != b and c > 1)
        super().__init__(f"dual is not simple: {loops} loop(s), {parallel} parallel edge(s)")


@dataclass(frozen=True)
class RotationSystem:
    graph: Graph
    rotations: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.rotations) != self.graph.n:
            raise EmbeddingError(f"need one rotation per vertex, got {len(self.rotations)}")
        for v, rot in enumerate(self.rotations):
            if len(set(rot)) != len(rot) or bits_of(rot) != self.graph.adj[v]:
                raise EmbeddingError(f"rotation at {v} is not a permutation of its neighbours")

    @classmethod
    def from_rotations(cls, rotations: list[list[int]]) -> RotationSystem:
        """Build the graph from the rotations; every edge must appear at both ends."""
        n = len(rotations)
        edges = set()
        for v, rot in enumerate(rotations):
            for u in rot:
                if not 0 <= u < n:
                    raise EmbeddingError(f"vertex {v} lists unknown neighbour {u}")
                if u == v:
                    raise EmbeddingError(f"self-loop at {v}")
                if v not in rotations[u]:
                    raise EmbeddingError(f"edge {v}-{u} missing from the rotation at {u}")
                edges.add((min(u, v), max(u, v)))
        return cls(Graph.from_edges(n, sorted(edges)), tuple(tuple(r) for r in rotations))

    def successor(self, v: int, u: int) -> int:
        rot = self.rotations[v]
        return rot[(rot.index(u) + 1) % len(rot)]


@dataclass(frozen=True)
class FaceSet:
    faces: tuple[tuple[Dart, ...], ...]

    def face_of(self) -> dict[Dart, int]:
        return {dart: i for i, face in enumerate(self.faces) for dart in face}

    def vertex_cycles(self) -> list[tuple[int, ...]]:
        return [tuple(u for u, _ in face) for face in self.faces]


def trace_faces(r: RotationSystem) -> FaceSet:
    g = r.graph
    if not is_connected(g):
        raise EmbeddingError("face tracing needs a connected graph")
    darts = sorted((u, v) for u in range(g.n) for v in g.neighbors(u))
    if not darts:
        return FaceSet(((),))
    seen: set[Dart] = set()
    faces = []
    for start in darts:
        if start in seen:
            continue
        face = []
        dart = start
        while dart not in seen:
            seen.add(dart)
            face.append(dart)
            u, v = dart
            dart = (v, r.successor(v, u))
        if dart != start:
            raise EmbeddingError("malformed rotation system: face walk did not close")
        faces.append(tuple(face))
    return FaceSet(tuple(faces))


def euler_characteristic(r: RotationSystem, faces: FaceSet | None = None) -> int:
    faces = faces or trace_faces(r)
    return r.graph.n - r.graph.edge_count + len(faces.faces)


def dual_graph(r: RotationSystem) -> Graph:
    """Simple dual with one vertex per traced face (in :func:`trace_faces` order).

    Raises :class:`EmbeddingError` for non-planar rotations and
    :class:`NonSimpleDual` when a bridge or a pair of faces sharing more than
    one edge would need a loop or parallel edges.
    """
    faces = trace_faces(r)
    chi = euler_characteristic(r, faces)
    if chi != 2:
        raise EmbeddingError(f"embedding is not planar: V - E + F = {chi}")
    face_of = faces.face_of()
    pairs: Counter = Counter()
    for u, v in r.graph.edges():
        a, b = face_of[(u, v)], face_of[(v, u)]
        pairs[(min(a, b), max(a, b))] += 1
    if any(a == b or c > 1 for (a, b), c in pairs.items()):
        raise NonSimpleDual(pairs)
    return Graph.from_edges(len(faces.faces), pairs)


def parse_rotation_system(text: str) -> RotationSystem:
    """Lines ``v: n1 n2 n3 ...`` giving each vertex's neighbours in cyclic order."""
    entries: dict[int, list[int]] = {}
    for lineno, ln in enumerate(text.splitlines(), 1):
        ln = ln.split("#", 1)[0].strip()
        if not ln:
            continue
        head, sep, tail = ln.partition(":")
        if not sep:
            raise FormatError(f"line {lineno}: expected 'v: neighbours', got {ln!r}")
        v = parse_vertex(head.strip())
        if v in entries:
            raise FormatError(f"line {lineno}: vertex {head.strip()!r} listed twice")
        entries[v] = [parse_vertex(tok) for tok in tail.split()]
    if not entries:
        raise FormatError("rotation system is empty")
    n = max(entries) + 1
    missing = [v for v in range(n) if v not in entries]
    if missing:
        raise FormatError(f"no rotation given for vertex {missing[0]}")
    return RotationSystem.from_rotations([entries[v] for v in range(n)])


def emit_rotation_system(r: RotationSystem) -> str:
    n = r.graph.n
    return "".join(
        f"{vertex_name(v, n)}: {' '.join(vertex_name(u, n) for u in rot)}\n" for v, rot in enumerate(r.rotations)
    )
