"""Automorphisms of a multigraph: compatible vertex+edge permutation pairs.

Generators come from two sources: vertex automorphisms of the
multiplicity-labeled simple quotient graph, found by a backtracking search
with iterated partition refinement and lifted to one edge map each, plus
one transposition per adjacent pair of parallel edges.  Every multigraph
automorphism factors as (lifted quotient automorphism) * (permutation
inside parallel classes), so this generating set is complete.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

from . import permgroup
from .multigraph import Multigraph
from .permgroup import Perm, PermutationGroup


@dataclass(frozen=True)
class GraphAutomorphism:
    """A pair of vertex and edge permutations preserving incidence.

    vperm and eperm are image tuples over vertex / edge indices of the
    graph's stored orderings.
    """

    graph: Multigraph
    vperm: tuple[int, ...]
    eperm: tuple[int, ...]

    def __post_init__(self):
        g = self.graph
        for k, (t, h) in enumerate(g.edge_ends_idx):
            it, ih = g.edge_ends_idx[self.eperm[k]]
            if {self.vperm[t], self.vperm[h]} != {it, ih}:
                raise ValueError(
                    f"edge {g.edges[k].id!r} image does not match vertex images"
                )

    @cached_property
    def combined(self) -> Perm:
        """Permutation of the point set: vertices first, then edges."""
        nv = len(self.graph.vertices)
        return tuple(self.vperm) + tuple(nv + x for x in self.eperm)

    def edge_sign(self, edge_idx: int) -> int:
        """+1 if the reference orientation is preserved (tail maps to tail)."""
        t, _ = self.graph.edge_ends_idx[edge_idx]
        it, _ = self.graph.edge_ends_idx[self.eperm[edge_idx]]
        return 1 if self.vperm[t] == it else -1

    def compose(self, other: "GraphAutomorphism") -> "GraphAutomorphism":
        """self after other (left action)."""
        return GraphAutomorphism(
            self.graph,
            tuple(self.vperm[x] for x in other.vperm),
            tuple(self.eperm[x] for x in other.eperm),
        )

    def inverse(self) -> "GraphAutomorphism":
        vinv = [0] * len(self.vperm)
        einv = [0] * len(self.eperm)
        for i, x in enumerate(self.vperm):
            vinv[x] = i
        for i, x in enumerate(self.eperm):
            einv[x] = i
        return GraphAutomorphism(self.graph, tuple(vinv), tuple(einv))

    def order(self) -> int:
        return permgroup.element_order(self.combined)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.combined))

    def to_json_dict(self) -> dict:
        g = self.graph
        return {
            "vertex_map": {v: g.vertices[self.vperm[i]] for i, v in enumerate(g.vertices)},
            "edge_map": {e.id: g.edges[self.eperm[i]].id for i, e in enumerate(g.edges)},
        }


def identity_automorphism(g: Multigraph) -> GraphAutomorphism:
    return GraphAutomorphism(
        g, tuple(range(len(g.vertices))), tuple(range(len(g.edges)))
    )


def from_combined(g: Multigraph, p: Perm) -> GraphAutomorphism:
    nv = len(g.vertices)
    return GraphAutomorphism(
        g, tuple(p[:nv]), tuple(x - nv for x in p[nv:])
    )


def from_json_dict(g: Multigraph, d: dict) -> GraphAutomorphism:
    vi, ei = g.vertex_index, g.edge_index
    vperm = [0] * len(g.vertices)
    for v, w in d["vertex_map"].items():
        vperm[vi[v]] = vi[w]
    eperm = [0] * len(g.edges)
    for a, b in d["edge_map"].items():
        eperm[ei[a]] = ei[b]
    return GraphAutomorphism(g, tuple(vperm), tuple(eperm))


# --- quotient vertex automorphisms by individualization-refinement --------


def _multiplicity_table(g: Multigraph) -> list[dict[int, int]]:
    n = len(g.vertices)
    mult: list[dict[int, int]] = [{} for _ in range(n)]
    for t, h in g.edge_ends_idx:
        mult[t][h] = mult[t].get(h, 0) + 1
        mult[h][t] = mult[h].get(t, 0) + 1
    return mult


def _refine(mult, colors: list, n: int) -> list[int]:
    """Iterate neighborhood refinement to a fixed point; colors are
    canonicalized to small ints ordered by signature each round."""
    while True:
        sigs = [
            (colors[v], tuple(sorted((colors[w], m) for w, m in mult[v].items())))
            for v in range(n)
        ]
        table = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [table[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def quotient_vertex_automorphisms(g: Multigraph) -> list[tuple[int, ...]]:
    """All vertex permutations preserving adjacency with multiplicities."""
    n = len(g.vertices)
    mult = _multiplicity_table(g)
    base = _refine(mult, [0] * n, n)
    found: list[tuple[int, ...]] = []

    def consistent(cd: list[int], ci: list[int]) -> bool:
        return sorted(cd) == sorted(ci)

    def rec(cd: list[int], ci: list[int], tag: int):
        cells: dict[int, list[int]] = {}
        for v in range(n):
            cells.setdefault(cd[v], []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = c
                break
        if target is None:
            image = [0] * n
            by_color = {}
            for v in range(n):
                by_color[ci[v]] = v
            for v in range(n):
                image[v] = by_color[cd[v]]
            for v in range(n):
                for w, m in mult[v].items():
                    if mult[image[v]].get(image[w], 0) != m:
                        return
            found.append(tuple(image))
            return
        a = cells[target][0]
        candidates = [v for v in range(n) if ci[v] == target]
        for b in candidates:
            nd, ni = list(cd), list(ci)
            nd[a] = tag
            ni[b] = tag
            nd = _refine(mult, nd, n)
            ni = _refine(mult, ni, n)
            if consistent(nd, ni):
                rec(nd, ni, tag + 1)

    rec(list(base), list(base), n + 1)
    return sorted(found)


def _lift_edge_map(g: Multigraph, vperm: tuple[int, ...]) -> tuple[int, ...]:
    """The canonical edge map over a vertex map: parallel classes are
    matched in edge-id order."""
    eperm = [0] * len(g.edges)
    classes = g.parallel_classes
    for (a, b), ks in classes.items():
        ia, ib = vperm[a], vperm[b]
        image = classes[(min(ia, ib), max(ia, ib))]
        for k, ik in zip(ks, image):
            eperm[k] = ik
    return tuple(eperm)


def automorphism_generators(g: Multigraph) -> list[GraphAutomorphism]:
    """A generating set for Aut(g): lifted quotient automorphisms plus one
    swap per adjacent pair inside each parallel class.  Deterministic."""
    out = []
    for vperm in quotient_vertex_automorphisms(g):
        auto = GraphAutomorphism(g, vperm, _lift_edge_map(g, vperm))
        if not auto.is_identity():
            out.append(auto)
    ident_v = tuple(range(len(g.vertices)))
    for ks in g.parallel_classes.values():
        for i in range(len(ks) - 1):
            eperm = list(range(len(g.edges)))
            eperm[ks[i]], eperm[ks[i + 1]] = ks[i + 1], ks[i]
            out.append(GraphAutomorphism(g, ident_v, tuple(eperm)))
    return out


def automorphism_group(g: Multigraph, gens: list[GraphAutomorphism] | None = None) -> PermutationGroup:
    if gens is None:
        gens = automorphism_generators(g)
    degree = len(g.vertices) + len(g.edges)
    return PermutationGroup(degree, [a.combined for a in gens])


def count_automorphisms_bruteforce(g: Multigraph) -> int:
    """|Aut(g)| by exhausting vertex bijections; the edge maps over a fixed
    compatible vertex map are exactly the products of within-class
    bijections, so each contributes prod(mult!) to the count."""
    import itertools

    n = len(g.vertices)
    mult = _multiplicity_table(g)
    class_factor = 1
    for ks in g.parallel_classes.values():
        class_factor *= math.factorial(len(ks))
    count = 0
    for perm in itertools.permutations(range(n)):
        ok = True
        for v in range(n):
            for w, m in mult[v].items():
                if mult[perm[v]].get(perm[w], 0) != m:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            count += class_factor
    return count
