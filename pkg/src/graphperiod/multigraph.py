"""Finite multigraph data model: parsing, validation, genus.

A graph is stored with an ordered vertex list and an ordered edge list; the
stored (tail, head) pair of every edge fixes its reference orientation, and
all chain-level computations elsewhere in the package use that orientation
consistently.

Validation enforces the shape needed for the dual graph of a totally
degenerate stable curve: no self-loops, connected, and minimum degree 3
(every rational component of a stable curve carries at least three nodes).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property

MIN_DEGREE = 3


class GraphError(ValueError):
    """Base class for input-validation failures."""


class MalformedInput(GraphError):
    """The document is not valid graph JSON of the documented shape."""


class DuplicateId(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class Disconnected(GraphError):
    pass


class DegreeTooLow(GraphError):
    def __init__(self, vertex: str, degree: int):
        super().__init__(
            f"vertex {vertex!r} has degree {degree}, need at least {MIN_DEGREE}"
        )
        self.vertex = vertex
        self.degree = degree


@dataclass(frozen=True)
class Edge:
    id: str
    tail: str
    head: str

    def ends(self) -> tuple[str, str]:
        return (self.tail, self.head)


@dataclass(frozen=True)
class Multigraph:
    """Immutable multigraph; safe for concurrent reads after construction."""

    name: str
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise DuplicateId(f"duplicate vertex id in {self.name!r}")
        if len({e.id for e in self.edges}) != len(self.edges):
            raise DuplicateId(f"duplicate edge id in {self.name!r}")
        vs = set(self.vertices)
        for e in self.edges:
            if e.tail == e.head:
                raise SelfLoop(f"edge {e.id!r} is a self-loop at {e.tail!r}")
            if e.tail not in vs or e.head not in vs:
                raise MalformedInput(f"edge {e.id!r} has an unknown endpoint")
        degrees = {v: 0 for v in self.vertices}
        for e in self.edges:
            degrees[e.tail] += 1
            degrees[e.head] += 1
        for v in self.vertices:
            if degrees[v] < MIN_DEGREE:
                raise DegreeTooLow(v, degrees[v])
        self._check_connected()

    def _check_connected(self):
        if not self.vertices:
            raise MalformedInput("graph has no vertices")
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        adj: dict[str, list[str]] = {v: [] for v in self.vertices}
        for e in self.edges:
            adj[e.tail].append(e.head)
            adj[e.head].append(e.tail)
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != len(self.vertices):
            missing = sorted(set(self.vertices) - seen)[0]
            raise Disconnected(f"vertex {missing!r} is not reachable")

    # --- indexed views -------------------------------------------------

    @cached_property
    def vertex_index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def edge_index(self) -> dict[str, int]:
        return {e.id: i for i, e in enumerate(self.edges)}

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """For each vertex index, the indices of its incident edges."""
        inc: list[list[int]] = [[] for _ in self.vertices]
        vi = self.vertex_index
        for k, e in enumerate(self.edges):
            inc[vi[e.tail]].append(k)
            inc[vi[e.head]].append(k)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def edge_ends_idx(self) -> tuple[tuple[int, int], ...]:
        vi = self.vertex_index
        return tuple((vi[e.tail], vi[e.head]) for e in self.edges)

    @cached_property
    def parallel_classes(self) -> dict[tuple[int, int], tuple[int, ...]]:
        """Edge indices grouped by unordered endpoint pair, id-sorted."""
        classes: dict[tuple[int, int], list[int]] = {}
        for k, (t, h) in enumerate(self.edge_ends_idx):
            classes.setdefault((min(t, h), max(t, h)), []).append(k)
        return {
            pair: tuple(sorted(ks, key=lambda k: self.edges[k].id))
            for pair, ks in classes.items()
        }

    def degree(self, v: str) -> int:
        return len(self.incidence[self.vertex_index[v]])

    def other_end(self, edge_idx: int, vertex_idx: int) -> int:
        t, h = self.edge_ends_idx[edge_idx]
        return h if vertex_idx == t else t

    # --- serialization -------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "vertices": list(self.vertices),
            "edges": [{"id": e.id, "ends": [e.tail, e.head]} for e in self.edges],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)


def genus(g: Multigraph) -> int:
    """First Betti number |E| - |V| + 1 of a connected graph.

    Equals the arithmetic genus of the stable curve the graph encodes.
    """
    return len(g.edges) - len(g.vertices) + 1


def from_data(name: str, vertices: list[str], edges: list[tuple[str, str, str]]) -> Multigraph:
    """Build and validate a graph from (edge id, tail, head) triples."""
    return Multigraph(
        name=name,
        vertices=tuple(vertices),
        edges=tuple(Edge(i, t, h) for i, t, h in edges),
    )


def parse_graph(text: str) -> Multigraph:
    """Parse the documented graph-JSON format.

    {"name": str, "vertices": [str, ...],
     "edges": [{"id": str, "ends": [tail, head]}, ...]}

    Unknown fields are rejected.  Raises a GraphError subclass on any
    malformed or invalid input.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise MalformedInput("top level must be an object")
    extra = set(doc) - {"name", "vertices", "edges"}
    if extra:
        raise MalformedInput(f"unknown fields: {sorted(extra)}")
    for key in ("name", "vertices", "edges"):
        if key not in doc:
            raise MalformedInput(f"missing field {key!r}")
    name = doc["name"]
    if not isinstance(name, str):
        raise MalformedInput("name must be a string")
    if not isinstance(doc["vertices"], list) or not all(
        isinstance(v, str) for v in doc["vertices"]
    ):
        raise MalformedInput("vertices must be a list of strings")
    edges = []
    if not isinstance(doc["edges"], list):
        raise MalformedInput("edges must be a list")
    for rec in doc["edges"]:
        if not isinstance(rec, dict):
            raise MalformedInput("each edge must be an object")
        if set(rec) != {"id", "ends"}:
            raise MalformedInput(f"edge record must have exactly id/ends: {rec}")
        if not isinstance(rec["id"], str):
            raise MalformedInput("edge id must be a string")
        ends = rec["ends"]
        if (
            not isinstance(ends, list)
            or len(ends) != 2
            or not all(isinstance(x, str) for x in ends)
        ):
            raise MalformedInput(f"edge {rec['id']!r}: ends must be [tail, head]")
        edges.append((rec["id"], ends[0], ends[1]))
    return from_data(name, doc["vertices"], edges)


def serialize(g: Multigraph) -> str:
    return g.to_json()
