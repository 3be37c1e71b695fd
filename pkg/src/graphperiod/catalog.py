"""Built-in graphs used as regression fixtures.

All constructions are purely combinatorial (the truncated icosahedron is
assembled from icosahedron flags, no coordinates involved) so the whole
package stays inside exact integer arithmetic.
"""

from __future__ import annotations

from .multigraph import GraphError, Multigraph, from_data


class UnknownName(GraphError):
    pass


def doubled_cycle(g: int) -> Multigraph:
    """Cycle on g-1 vertices with every cycle edge doubled; genus g."""
    if g < 3:
        raise ValueError("need g >= 3")
    n = g - 1
    vertices = [f"v{i + 1}" for i in range(n)]
    edges = []
    for i in range(n):
        a, b = vertices[i], vertices[(i + 1) % n]
        edges.append((f"e{i + 1}", a, b))
        edges.append((f"f{i + 1}", a, b))
    return from_data(f"doubled-cycle-g{g}", vertices, edges)


def complete_graph_5() -> Multigraph:
    vertices = [f"v{i}" for i in range(1, 6)]
    edges = [
        (f"e{i}{j}", f"v{i}", f"v{j}")
        for i in range(1, 6)
        for j in range(i + 1, 6)
    ]
    return from_data("k5", vertices, edges)


def complete_bipartite_34() -> Multigraph:
    vertices = [f"a{i}" for i in range(1, 4)] + [f"b{j}" for j in range(1, 5)]
    edges = [
        (f"e{i}{j}", f"a{i}", f"b{j}")
        for i in range(1, 4)
        for j in range(1, 5)
    ]
    return from_data("k34", vertices, edges)


def doubled_k4() -> Multigraph:
    """K4 with the four edges of the cycle v1 v2 v3 v4 doubled; genus 7."""
    vertices = [f"v{i}" for i in range(1, 5)]
    edges = []
    for i in range(4):
        a, b = vertices[i], vertices[(i + 1) % 4]
        edges.append((f"e{i + 1}a", a, b))
        edges.append((f"e{i + 1}b", a, b))
    edges.append(("d13", "v1", "v3"))
    edges.append(("d24", "v2", "v4"))
    return from_data("doubled-k4", vertices, edges)


def hybrid() -> Multigraph:
    """Doubled 4-cycle on v1..v4 plus w1..w4, each w joined by doubled
    edges to two cyclically adjacent v's; 24 edges, genus 17."""
    vs = [f"v{i}" for i in range(1, 5)]
    ws = [f"w{i}" for i in range(1, 5)]
    edges = []
    for i in range(4):
        a, b = vs[i], vs[(i + 1) % 4]
        edges.append((f"e{i + 1}", a, b))
        edges.append((f"f{i + 1}", a, b))
    for i in range(4):
        w = ws[i]
        for which, v in (("g", vs[i]), ("h", vs[(i + 1) % 4])):
            edges.append((f"{which}{i + 1}a", v, w))
            edges.append((f"{which}{i + 1}b", v, w))
    return from_data("hybrid", vs + ws, edges)


def _icosahedron_faces() -> tuple[list[int], list[tuple[int, int, int]]]:
    """Combinatorial icosahedron: vertex 0 = top, 1..5 upper ring,
    6..10 lower ring, 11 = bottom.  Returns (vertices, triangular faces)."""
    up = [1 + i for i in range(5)]
    lo = [6 + i for i in range(5)]
    faces = []
    for i in range(5):
        j = (i + 1) % 5
        faces.append((0, up[i], up[j]))
        faces.append((11, lo[i], lo[j]))
        faces.append((up[i], up[j], lo[i]))
        faces.append((lo[i], lo[j], up[j]))
    return list(range(12)), faces


def soccer_doubled() -> Multigraph:
    """Truncated icosahedron with every hexagon-hexagon edge doubled.

    Vertices are the flags (v, w) over directed icosahedron edges; the
    pentagon around an icosahedron vertex v links (v, w) and (v, w') when
    {v, w, w'} is a face, and the hexagon-hexagon edge links (v, w) with
    (w, v).  120 edges, 60 vertices, genus 61, every vertex of degree 4.
    """
    _, faces = _icosahedron_faces()
    face_set = {frozenset(f) for f in faces}
    adj: dict[int, list[int]] = {v: [] for v in range(12)}
    for f in faces:
        for a in f:
            for b in f:
                if a != b and b not in adj[a]:
                    adj[a].append(b)

    def flag(v: int, w: int) -> str:
        return f"t{v:02d}{w:02d}"

    vertices = sorted(flag(v, w) for v in range(12) for w in adj[v])
    edges = []
    for v in range(12):
        for w in adj[v]:
            for x in adj[v]:
                if w < x and frozenset((v, w, x)) in face_set:
                    edges.append((f"p{v:02d}{w:02d}{x:02d}", flag(v, w), flag(v, x)))
    for v in range(12):
        for w in adj[v]:
            if v < w:
                edges.append((f"h{v:02d}{w:02d}a", flag(v, w), flag(w, v)))
                edges.append((f"h{v:02d}{w:02d}b", flag(v, w), flag(w, v)))
    edges.sort(key=lambda t: t[0])
    return from_data("soccer-doubled", vertices, edges)


_BUILDERS = {
    "k5": complete_graph_5,
    "k34": complete_bipartite_34,
    "doubled-k4": doubled_k4,
    "hybrid": hybrid,
    "soccer-doubled": soccer_doubled,
}
for _g in range(3, 9):
    _BUILDERS[f"doubled-cycle-g{_g}"] = (lambda gg: (lambda: doubled_cycle(gg)))(_g)

BUILTIN_NAMES = tuple(sorted(_BUILDERS))

# name -> (genus, expected period bounds, expected index bounds); intervals
# are (lower, upper).  Used by the CLI listing and the regression suite.
EXPECTED = {
    "k5": (6, (5, 5), (5, 5)),
    "k34": (6, (1, 1), (1, 1)),
    "doubled-k4": (7, (2, 2), (2, 2)),
    "hybrid": (17, (4, 4), (4, 4)),
    "soccer-doubled": (61, (30, 60), (30, 60)),
}
for _g in range(3, 9):
    EXPECTED[f"doubled-cycle-g{_g}"] = (_g, (_g - 1, _g - 1), (_g - 1, _g - 1))


def builtin(name: str) -> Multigraph:
    """Return a built-in graph by name; raises UnknownName otherwise."""
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise UnknownName(
            f"unknown builtin {name!r}; choices: {', '.join(BUILTIN_NAMES)}"
        ) from None
    return builder()
