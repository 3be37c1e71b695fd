"""The obstruction 2-cocycle of a graph and the order of its class in
second group cohomology.

For a base vertex v0 (the canonical tree root) and any automorphism s, let
P_s be the tree path from v0 to s(v0), so its boundary is s(v0) - v0.  The
combination

    c(s, t) = P_s + s . P_t - P_{st}

is closed, hence lands in the cycle lattice M, and is a normalized
2-cocycle for the coboundary convention (d f)(s, t) = s.f(t) - f(st) + f(s).
The order of its class in H^2 restricted to a subgroup H is the least n
with n*c a coboundary; for cyclic H = <s> of order m there is a closed
form: H^2(<s>, M) = M^s / N M with N = 1 + s + ... + s^(m-1), and the
class corresponds to the invariant cycle N . P_s.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .autgroup import GraphAutomorphism, from_combined, identity_automorphism
from .homology import Chain, CycleLattice, chain_action, chain_add
from .intlinalg import (
    LatticeSolver,
    Matrix,
    NoneUpTo,
    minimal_multiple_in_image,
)
from .multigraph import Multigraph
from .permgroup import (
    Infeasible,
    Overflow,
    PermutationGroup,
    element_order,
    p_part,
    sylow_subgroup,
)


@dataclass(frozen=True)
class Unknown:
    """Exact class order not reachable under the caps; carries the proven
    divisibility window: lower | order | upper."""

    lower: int
    upper: int


class PathCocycle:
    """Lazy 2-cocycle c(s, t) in cycle-lattice coordinates.

    Values depend on group elements only through their action and their
    image of the base vertex, so evaluation needs no group bookkeeping.
    Instances are immutable and safe to share.
    """

    def __init__(self, graph: Multigraph, lattice: CycleLattice, group: PermutationGroup):
        self.graph = graph
        self.lattice = lattice
        self.group = group
        self.base_vertex = lattice.root

    def path_chain(self, sigma: GraphAutomorphism) -> Chain:
        """Tree path from v0 to sigma(v0); boundary sigma(v0) - v0."""
        return self.lattice.root_path(sigma.vperm[self.base_vertex])

    def value_chain(self, s: GraphAutomorphism, t: GraphAutomorphism) -> Chain:
        v0 = self.base_vertex
        first = self.lattice.root_path(s.vperm[v0])
        middle = chain_action(s, self.lattice.root_path(t.vperm[v0]))
        last = self.lattice.root_path(s.vperm[t.vperm[v0]])
        return chain_add(chain_add(first, middle), last, -1)

    def value(self, s: GraphAutomorphism, t: GraphAutomorphism) -> list[int]:
        return self.lattice.coordinates(self.value_chain(s, t))


def build_path_cocycle(
    g: Multigraph, lattice: CycleLattice, group: PermutationGroup
) -> PathCocycle:
    return PathCocycle(g, lattice, group)


@dataclass
class CocycleTable:
    """Values of a 2-cocycle on a finite (sub)group, together with the
    action matrices needed to assemble coboundaries over it.

    elements[0] must be the identity; prod[(i, j)] gives the index of
    elements[i] * elements[j].
    """

    rank: int
    size: int
    prod: dict[tuple[int, int], int]
    values: dict[tuple[int, int], tuple[int, ...]]
    actions: list[Matrix]

    def value(self, i: int, j: int) -> tuple[int, ...]:
        return self.values[(i, j)]


def close_subgroup(elements: list[GraphAutomorphism]) -> list[GraphAutomorphism]:
    """Close a list of automorphisms under composition (identity first,
    deterministic discovery order)."""
    ident = identity_automorphism(elements[0].graph) if elements else None
    seen = {ident.combined: ident}
    out = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for b in elements:
                c = b.compose(a)
                if c.combined not in seen:
                    seen[c.combined] = c
                    out.append(c)
                    nxt.append(c)
        frontier = nxt
    return out


def cyclic_group_elements(sigma: GraphAutomorphism) -> list[GraphAutomorphism]:
    out = [identity_automorphism(sigma.graph)]
    cur = sigma
    while not cur.is_identity():
        out.append(cur)
        cur = sigma.compose(cur)
    return out


def restrict(cocycle: PathCocycle, elements: list[GraphAutomorphism]) -> CocycleTable:
    """Tabulate the cocycle on a subgroup given by its full element list."""
    index = {a.combined: i for i, a in enumerate(elements)}
    if not elements or not elements[0].is_identity():
        raise ValueError("subgroup element list must start with the identity")
    prod: dict[tuple[int, int], int] = {}
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            key = a.compose(b).combined
            if key not in index:
                raise ValueError("element list is not closed under composition")
            prod[(i, j)] = index[key]
    values = {
        (i, j): tuple(cocycle.value(a, b))
        for i, a in enumerate(elements)
        for j, b in enumerate(elements)
    }
    actions = [cocycle.lattice.action_matrix(a) for a in elements]
    return CocycleTable(
        rank=cocycle.lattice.rank,
        size=len(elements),
        prod=prod,
        values=values,
        actions=actions,
    )


def subtable(table: CocycleTable, indices: list[int]) -> CocycleTable:
    """Restriction of a table to a subset of element indices that forms a
    subgroup (index 0 must stay the identity)."""
    pos = {old: new for new, old in enumerate(indices)}
    prod = {}
    for a, i in pos.items():
        for b, j in pos.items():
            prod[(i, j)] = pos[table.prod[(a, b)]]
    return CocycleTable(
        rank=table.rank,
        size=len(indices),
        prod=prod,
        values={
            (pos[a], pos[b]): table.values[(a, b)]
            for a in indices
            for b in indices
        },
        actions=[table.actions[a] for a in indices],
    )


def coboundary_matrix(table: CocycleTable) -> Matrix:
    """Matrix of d^1: C^1(H, M) -> C^2(H, M) for the inhomogeneous bar
    complex, (d f)(s, t) = s.f(t) - f(st) + f(s).  Rows are indexed by
    (pair (s, t), lattice coordinate), columns by (group element, basis
    vector)."""
    n, g = table.size, table.rank
    rows = n * n * g
    cols = n * g

    def row_base(i: int, j: int) -> int:
        return (i * n + j) * g

    d = [[0] * cols for _ in range(rows)]
    for h in range(n):
        for b in range(g):
            col = h * g + b
            for s in range(n):
                # s . f(t) at t = h
                base = row_base(s, h)
                act = table.actions[s]
                for r in range(g):
                    if act[r][b]:
                        d[base + r][col] += act[r][b]
            for s in range(n):
                # - f(st) whenever s * t = h
                for t in range(n):
                    if table.prod[(s, t)] == h:
                        d[row_base(s, t) + b][col] -= 1
                # + f(s) at s = h
                d[row_base(h, s) + b][col] += 1
    return d


def table_vector(table: CocycleTable) -> list[int]:
    n, g = table.size, table.rank
    out = [0] * (n * n * g)
    for (i, j), val in table.values.items():
        base = (i * n + j) * g
        for r in range(g):
            out[base + r] = val[r]
    return out


def class_order_bar(table: CocycleTable, cap: int = 32) -> int | Infeasible:
    """Order of the class of the tabulated cocycle in H^2, computed against
    the bar complex: least n with n*c in the image of d^1.  |H| annihilates
    H^2, so |H| is a valid search bound."""
    if table.size > cap:
        return Infeasible(f"group of order {table.size} exceeds bar cap {cap}")
    d = coboundary_matrix(table)
    c = table_vector(table)
    result = minimal_multiple_in_image(d, c, bound=table.size)
    if isinstance(result, NoneUpTo):  # pragma: no cover - annihilation bound
        raise AssertionError("cocycle order exceeded |H|; not a cocycle?")
    return result[0]


def class_order_cyclic(cocycle: PathCocycle, sigma: GraphAutomorphism) -> int:
    """Order of the class restricted to <sigma>, by the closed form
    H^2(<sigma>, M) = M^sigma / N M: the least n with n * (N . P_sigma) in
    N M, where N = sum of the powers of the action."""
    m = element_order(sigma.combined)
    if m == 1:
        return 1
    lattice = cocycle.lattice

    def norm_chain(chain: Chain) -> Chain:
        total = dict(chain)
        cur = chain
        for _ in range(m - 1):
            cur = chain_action(sigma, cur)
            total = chain_add(total, cur)
        return total

    target = lattice.coordinates(norm_chain(cocycle.path_chain(sigma)))
    if all(x == 0 for x in target):
        return 1
    solver = LatticeSolver(lattice.rank)
    for z in lattice.basis:
        solver.add_generator({
            i: x for i, x in enumerate(lattice.coordinates(norm_chain(z))) if x
        })
    for n in range(1, m + 1):
        if solver.contains([n * x for x in target]):
            return n
    raise AssertionError("restricted class order exceeded |<sigma>|")  # pragma: no cover


@dataclass(frozen=True)
class SylowOrder:
    prime: int
    subgroup_order: int
    class_order: int


def class_order_exact(
    cocycle: PathCocycle,
    group: PermutationGroup,
    enum_cap: int = 10**6,
    bar_cap: int = 32,
    seed: int = 0,
    scan_on_unknown: bool = True,
) -> tuple[int, list[SylowOrder]] | Unknown:
    """Exact order of the class in H^2(G, M) as the lcm of its restrictions
    to one Sylow subgroup per prime (restriction is injective on p-primary
    parts since corestriction . restriction = index).

    Needs |G| within the enumeration cap and every Sylow subgroup within
    the bar cap; otherwise returns Unknown(lower, |G|) where lower is the
    lcm of cyclic restriction orders from a seeded scan (skippable when the
    caller runs its own scan).
    """
    order = group.order()
    if order == 1:
        return 1, []
    if order > enum_cap or _small_prime_parts(order, bar_cap) is None:
        lower = (
            _cyclic_lower_bound(cocycle, group, enum_cap, seed)
            if scan_on_unknown
            else 1
        )
        return Unknown(lower, order)
    primes = _small_prime_parts(order, bar_cap)
    total = 1
    parts = []
    for p, pk in primes:
        sub = sylow_subgroup(group, p, cap=enum_cap, seed=seed)
        if isinstance(sub, Infeasible):  # pragma: no cover - gated above
            return Unknown(1, order)
        elements = sub.enumerate_elements(pk)
        assert not isinstance(elements, Overflow)
        autos = [from_combined(cocycle.graph, perm) for perm in elements]
        table = restrict(cocycle, autos)
        n = class_order_bar(table, cap=bar_cap)
        assert isinstance(n, int)
        parts.append(SylowOrder(prime=p, subgroup_order=pk, class_order=n))
        total = math.lcm(total, n)
    return total, parts


def _cyclic_lower_bound(
    cocycle: PathCocycle, group: PermutationGroup, enum_cap: int, seed: int
) -> int:
    """lcm of restriction orders over a (possibly sampled) cyclic-subgroup
    scan; every restriction order divides the class order, so this is a
    proven lower bound."""
    from .permgroup import cyclic_subgroups

    pairs, _complete = cyclic_subgroups(group, cap=enum_cap, seed=seed)
    lower = 1
    for perm, order in sorted(pairs, key=lambda t: (-t[1], t[0])):
        if order == 1:
            continue
        sigma = from_combined(cocycle.graph, perm)
        lower = math.lcm(lower, class_order_cyclic(cocycle, sigma))
    return lower


def _small_prime_parts(order: int, bar_cap: int) -> list[tuple[int, int]] | None:
    """(p, p-part) for every prime divisor, or None if some p-part exceeds
    the bar cap (primes above the cap can never fit)."""
    out = []
    rest = order
    for p in range(2, bar_cap + 1):
        if rest % p == 0:
            pk = p_part(order, p)
            if pk > bar_cap:
                return None
            out.append((p, pk))
            while rest % p == 0:
                rest //= p
    if rest > 1:
        return None
    return out
