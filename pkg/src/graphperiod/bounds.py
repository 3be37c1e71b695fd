"""Divisor intervals for the period and index of a graph's Brauer class,
assembled from certified divisibility rules.

Every bound carries a certificate that can be re-verified from its witness
alone.  Lower bounds on the period come from cyclic restrictions of the
obstruction cocycle and from the loop-summand rule; upper bounds come from
the genus, invariant-subgraph orbit counts, the group order, exact Sylow
computation when feasible, and propagation from invariant subgraphs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import cohomology, homology
from .autgroup import (
    GraphAutomorphism,
    automorphism_generators,
    automorphism_group,
    from_json_dict,
)
from .cohomology import PathCocycle, Unknown
from .config import Config
from .homology import Chain, CycleLattice, boundary, chain_action, chain_add
from .multigraph import GraphError, Multigraph, genus
from .permgroup import PermutationGroup, cyclic_subgroups, element_order, orbits

RULES = (
    "GenusIndex",
    "OrbitSubgraph",
    "AutOrder",
    "LoopSummand",
    "CyclicRestriction",
    "SylowExact",
    "SubgraphPropagation",
    "PeriodDividesIndex",
)


class SoundnessError(AssertionError):
    """A produced bound violated lower | upper; this is a bug, never a result."""


class NotAClosedChain(ValueError):
    pass


@dataclass(frozen=True)
class NotApplicable:
    """A rule's hypotheses failed; carries the failed hypothesis."""

    reason: str


@dataclass
class DivisorInterval:
    """lower: an lcm of proven divisors of the quantity; upper: a gcd of
    proven (quantity divides ...) constraints."""

    lower: int = 1
    upper: int = 0  # 0 = no constraint yet (gcd identity)

    @property
    def resolved(self) -> bool:
        return self.upper != 0 and self.lower == self.upper

    def add_lower(self, d: int):
        self.lower = math.lcm(self.lower, d)

    def add_upper(self, d: int):
        self.upper = math.gcd(self.upper, d)

    def check(self, what: str):
        if self.upper and self.upper % self.lower:
            raise SoundnessError(
                f"{what}: lower bound {self.lower} does not divide upper {self.upper}"
            )

    def to_json_dict(self) -> dict:
        return {
            "lower": _json_int(self.lower),
            "upper": _json_int(self.upper),
            "resolved": self.resolved,
        }


@dataclass(frozen=True)
class Certificate:
    rule: str
    target: str      # "period" | "index"
    direction: str   # "lower" | "upper"
    divisor: int
    witness: dict

    def __post_init__(self):
        if self.rule not in RULES:
            raise ValueError(f"unknown certificate rule {self.rule!r}")
        if self.target not in ("period", "index") or self.direction not in ("lower", "upper"):
            raise ValueError("bad certificate target/direction")
        if self.divisor < 1:
            raise ValueError("certificate divisor must be positive")

    def to_json_dict(self) -> dict:
        return {
            "rule": self.rule,
            "target": self.target,
            "direction": self.direction,
            "divisor": _json_int(self.divisor),
            "witness": self.witness,
        }


@dataclass
class BoundsReport:
    graph: Multigraph
    genus: int
    aut_order: int
    period: DivisorInterval
    index: DivisorInterval
    certificates: list[Certificate]
    status: list[str] = field(default_factory=list)

    def to_json_dict(self) -> dict:
        certs = sorted(self.certificates, key=lambda c: (c.rule, c.divisor))
        return {
            "graph": self.graph.name,
            "genus": self.genus,
            "aut_order": str(self.aut_order),
            "period": self.period.to_json_dict(),
            "index": self.index.to_json_dict(),
            "certificates": [c.to_json_dict() for c in certs],
            "status": list(self.status),
        }


def _json_int(x: int):
    # JSON numbers round-trip exactly only inside the double mantissa;
    # larger values are emitted as decimal strings.
    return x if abs(x) <= 2**53 else str(x)


# --- loops -----------------------------------------------------------------


def chain_from_vertex_cycle(g: Multigraph, vertex_ids: list[str]) -> Chain:
    """The loop through the given vertices in order, taking the smallest-id
    edge between consecutive ones."""
    vi = g.vertex_index
    chain: Chain = {}
    for a, b in zip(vertex_ids, vertex_ids[1:] + vertex_ids[:1]):
        ia, ib = vi[a], vi[b]
        ks = g.parallel_classes.get((min(ia, ib), max(ia, ib)))
        if not ks:
            raise ValueError(f"no edge between {a!r} and {b!r}")
        k = ks[0]
        t, _ = g.edge_ends_idx[k]
        chain = chain_add(chain, {k: 1 if t == ia else -1})
    return chain


def _loop_steps(g: Multigraph, chain: Chain) -> list[tuple[int, int]] | None:
    """If the chain is a simple closed cycle, its traversal as a list of
    (vertex, outgoing edge) steps following the chain's orientation;
    otherwise None."""
    if any(abs(x) != 1 for x in chain.values()):
        return None
    out_edge: dict[int, int] = {}
    for k, sign in chain.items():
        t, h = g.edge_ends_idx[k]
        start = t if sign == 1 else h
        if start in out_edge:
            return None
        out_edge[start] = k
    if not out_edge:
        return None
    first = min(out_edge)
    steps = []
    v = first
    for _ in range(len(out_edge)):
        k = out_edge.get(v)
        if k is None:
            return None
        steps.append((v, k))
        v = g.other_end(k, v)
    if v != first or len(steps) != len(chain):
        return None
    return steps


def period_lower_loop_summand(
    lattice: CycleLattice, sigma: GraphAutomorphism, loop: Chain
) -> int | NotApplicable:
    """order(sigma) divides the period when all hypotheses hold: the loop is
    a simple cycle, its class is fixed by sigma, it is tiled by the sigma
    translates of a segment from some vertex v to sigma(v), and its class
    generates a direct summand of the lattice as a module over <sigma>."""
    g = lattice.graph
    if boundary(g, loop):
        raise NotAClosedChain("the chain has nonzero boundary")
    steps = _loop_steps(g, loop)
    if steps is None:
        return NotApplicable("loop is not a simple cycle")
    m = element_order(sigma.combined)
    if chain_action(sigma, loop) != loop:
        return NotApplicable("loop class is not fixed by the automorphism")
    if m == 1:
        return 1
    positions = {v: i for i, (v, _) in enumerate(steps)}
    length = len(steps)
    tiled = False
    for v, start in positions.items():
        w = sigma.vperm[v]
        if w not in positions:
            return NotApplicable("automorphism does not preserve the loop")
        span = (positions[w] - start) % length
        if span == 0 or (span * m) != length:
            continue
        segment: Chain = {}
        for i in range(span):
            vv, k = steps[(start + i) % length]
            t, _ = g.edge_ends_idx[k]
            segment = chain_add(segment, {k: 1 if t == vv else -1})
        total: Chain = dict(segment)
        cur = segment
        for _ in range(m - 1):
            cur = chain_action(sigma, cur)
            total = chain_add(total, cur)
        if total == loop:
            tiled = True
            break
    if not tiled:
        return NotApplicable("loop is not tiled by translates of a v -> sigma(v) segment")
    coords = lattice.coordinates(loop)
    if not homology.coinvariant_primitive(lattice, sigma, coords):
        return NotApplicable("loop class does not generate a direct summand")
    return m


# --- orbit-based index divisors --------------------------------------------


def _edge_orbits(g: Multigraph, group: PermutationGroup) -> list[list[int]]:
    nv = len(g.vertices)
    raw = orbits(group.degree, list(group.generators), list(range(nv, group.degree)))
    return [[k - nv for k in orbit] for orbit in raw]


def _vertex_orbits(g: Multigraph, group: PermutationGroup) -> list[list[int]]:
    return orbits(group.degree, list(group.generators), list(range(len(g.vertices))))


def _incident_vertices(g: Multigraph, edge_set: list[int]) -> set[int]:
    out = set()
    for k in edge_set:
        t, h = g.edge_ends_idx[k]
        out.add(t)
        out.add(h)
    return out


def index_upper_divisors(
    g: Multigraph, group: PermutationGroup, union_cap: int = 4096
) -> tuple[list[Certificate], list[str]]:
    """Certified divisors of the index: g-1, each edge-orbit size, twice
    each vertex-orbit size, and edge count / twice vertex count of every
    union of edge orbits (an invariant subgraph), enumerated while
    2^#orbits stays within the cap."""
    certs = []
    status = []
    gen = genus(g)
    certs.append(
        Certificate(
            rule="GenusIndex",
            target="index",
            direction="upper",
            divisor=gen - 1,
            witness={"genus": gen},
        )
    )
    eorbits = _edge_orbits(g, group)
    vorbits = _vertex_orbits(g, group)
    seen: set[tuple[str, int]] = set()

    def orbit_cert(divisor: int, witness: dict):
        key = (witness["kind"], divisor)
        if divisor >= 1 and key not in seen:
            seen.add(key)
            certs.append(
                Certificate(
                    rule="OrbitSubgraph",
                    target="index",
                    direction="upper",
                    divisor=divisor,
                    witness=witness,
                )
            )

    for orbit in eorbits:
        orbit_cert(
            len(orbit),
            {
                "kind": "edge-orbit",
                "edges": [g.edges[k].id for k in orbit],
            },
        )
    for orbit in vorbits:
        orbit_cert(
            2 * len(orbit),
            {
                "kind": "vertex-orbit-doubled",
                "vertices": [g.vertices[v] for v in orbit],
            },
        )
    if 2 ** len(eorbits) <= union_cap:
        import itertools

        for r in range(1, len(eorbits) + 1):
            for combo in itertools.combinations(range(len(eorbits)), r):
                edges = [k for i in combo for k in eorbits[i]]
                v0 = len(_incident_vertices(g, edges))
                witness = {
                    "kind": "orbit-union",
                    "orbits": list(combo),
                    "edge_count": len(edges),
                    "vertex_count": v0,
                }
                orbit_cert(len(edges), {**witness, "kind": "orbit-union-edges"})
                orbit_cert(2 * v0, {**witness, "kind": "orbit-union-vertices"})
    else:
        status.append(
            f"orbit unions not enumerated (2^{len(eorbits)} exceeds cap {union_cap})"
        )
    return certs, status


# --- invariant subgraphs -----------------------------------------------------


def invariant_subgraphs(
    g: Multigraph, group: PermutationGroup, union_cap: int = 4096
) -> list[Multigraph]:
    """Proper invariant subgraphs (unions of edge orbits with their incident
    vertices) that are connected and keep every vertex at degree >= 4, the
    shape required for propagating bounds from a subgraph."""
    eorbits = _edge_orbits(g, group)
    if 2 ** len(eorbits) > union_cap:
        return []
    import itertools

    out = []
    for r in range(1, len(eorbits) + 1):
        for combo in itertools.combinations(range(len(eorbits)), r):
            edges = sorted(k for i in combo for k in eorbits[i])
            if len(edges) == len(g.edges):
                continue
            vset = _incident_vertices(g, edges)
            degree = {v: 0 for v in vset}
            for k in edges:
                t, h = g.edge_ends_idx[k]
                degree[t] += 1
                degree[h] += 1
            if any(d < 4 for d in degree.values()):
                continue
            try:
                sub = Multigraph(
                    name=f"{g.name}/sub-{'-'.join(str(i) for i in combo)}",
                    vertices=tuple(v for i, v in enumerate(g.vertices) if i in vset),
                    edges=tuple(g.edges[k] for k in edges),
                )
            except GraphError:
                continue
            out.append(sub)
    return out


def propagate_subgraph(
    g: Multigraph,
    group: PermutationGroup,
    config: Config,
    depth: int,
) -> tuple[list[Certificate], list[str]]:
    """Analyze every admissible invariant subgraph standalone; the ambient
    class is the image of the subgraph's class, so the ambient period and
    index divide the subgraph's established upper bounds."""
    certs = []
    status = []
    for sub in invariant_subgraphs(g, group, config.union_cap):
        report = analyze(sub, config, _depth=depth - 1)
        for target, interval in (("period", report.period), ("index", report.index)):
            if interval.upper:
                certs.append(
                    Certificate(
                        rule="SubgraphPropagation",
                        target=target,
                        direction="upper",
                        divisor=interval.upper,
                        witness={
                            "subgraph": sub.name,
                            "edges": [e.id for e in sub.edges],
                            "subgraph_bound": _json_int(interval.upper),
                        },
                    )
                )
        if report.status:
            status.extend(f"{sub.name}: {s}" for s in report.status)
    return certs, status


# --- scanning ----------------------------------------------------------------


def _scan_loops_for_sigma(
    lattice: CycleLattice, sigma: GraphAutomorphism
) -> list[Chain]:
    """Candidate loops for the loop-summand rule: shortest paths from an
    orbit representative v to sigma(v) summed over translates, plus the
    orbit sums of fundamental cycles."""
    g = lattice.graph
    m = element_order(sigma.combined)
    if m == 1:
        return []
    candidates: list[Chain] = []
    seen: set[tuple] = set()

    def push(chain: Chain):
        if not chain:
            return
        key = tuple(sorted(chain.items()))
        neg = tuple(sorted(homology.chain_scale(chain, -1).items()))
        if key in seen or neg in seen:
            return
        seen.add(key)
        candidates.append(chain)

    moved = sorted({v for v in range(len(g.vertices)) if sigma.vperm[v] != v})
    orbit_reps = []
    covered: set[int] = set()
    for v in moved:
        if v in covered:
            continue
        orbit_reps.append(v)
        w = v
        while True:
            covered.add(w)
            w = sigma.vperm[w]
            if w == v:
                break
    for v in orbit_reps:
        path = _shortest_path_chain(g, v, sigma.vperm[v])
        if path is None:
            continue
        total: Chain = dict(path)
        cur = path
        for _ in range(m - 1):
            cur = chain_action(sigma, cur)
            total = chain_add(total, cur)
        push(total)
    for z in lattice.basis:
        orbit_sum: Chain = dict(z)
        cur = z
        for _ in range(m - 1):
            cur = chain_action(sigma, cur)
            orbit_sum = chain_add(orbit_sum, cur)
        push(orbit_sum)
        if chain_action(sigma, z) == z:
            push(dict(z))
    return candidates


def _shortest_path_chain(g: Multigraph, start: int, goal: int) -> Chain | None:
    """BFS shortest path start -> goal as a chain (smallest edge id wins
    ties), None if start == goal."""
    if start == goal:
        return None
    order = sorted(range(len(g.edges)), key=lambda k: g.edges[k].id)
    incident: list[list[int]] = [[] for _ in g.vertices]
    for k in order:
        t, h = g.edge_ends_idx[k]
        incident[t].append(k)
        incident[h].append(k)
    prev: dict[int, tuple[int, int, int]] = {}
    frontier = [start]
    seen = {start}
    while frontier and goal not in seen:
        nxt = []
        for v in frontier:
            for k in incident[v]:
                w = g.other_end(k, v)
                if w not in seen:
                    seen.add(w)
                    t, _ = g.edge_ends_idx[k]
                    prev[w] = (v, k, 1 if t == v else -1)
                    nxt.append(w)
        frontier = nxt
    if goal not in seen:
        return None
    chain: Chain = {}
    v = goal
    while v != start:
        pv, k, sign = prev[v]
        chain[k] = sign
        v = pv
    return chain


def _cyclic_scan(
    g: Multigraph,
    lattice: CycleLattice,
    cocycle: PathCocycle,
    group: PermutationGroup,
    config: Config,
    period: DivisorInterval,
    index: DivisorInterval,
    certs: list[Certificate],
    status: list[str],
):
    """Walk cyclic subgroups (largest order first), collecting cyclic
    restriction orders and loop-summand certificates.  After scan_quota
    subgroups the scan stops early once both intervals are resolved."""
    from . import autgroup as _ag

    pairs, complete = cyclic_subgroups(
        group,
        cap=config.max_enum,
        seed=config.seed,
        word_budget=config.word_budget,
        max_word_length=config.max_word_length,
        max_subgroups=config.max_subgroups,
    )
    if not complete:
        status.append(
            "cyclic-subgroup scan incomplete: |Aut| exceeds the enumeration cap; "
            f"sampled {len(pairs)} subgroups from seeded generator words"
        )
    pairs = sorted(pairs, key=lambda t: (-t[1], t[0]))
    seen: set[tuple[str, int]] = set()

    def push(cert: Certificate):
        key = (cert.rule, cert.divisor)
        if key not in seen:
            seen.add(key)
            certs.append(cert)

    processed = 0
    for perm, order in pairs:
        if order == 1:
            continue
        if (
            processed >= config.scan_quota
            and period.resolved
            and index.resolved
        ):
            break
        processed += 1
        sigma = _ag.from_combined(g, perm)
        n = cohomology.class_order_cyclic(cocycle, sigma)
        if n > 1:
            push(
                Certificate(
                    rule="CyclicRestriction",
                    target="period",
                    direction="lower",
                    divisor=n,
                    witness={
                        "automorphism": sigma.to_json_dict(),
                        "element_order": order,
                        "restricted_class_order": n,
                    },
                )
            )
            period.add_lower(n)
            index.add_lower(n)
        for loop in _scan_loops_for_sigma(lattice, sigma):
            result = period_lower_loop_summand(lattice, sigma, loop)
            if isinstance(result, NotApplicable) or result == 1:
                continue
            push(
                Certificate(
                    rule="LoopSummand",
                    target="period",
                    direction="lower",
                    divisor=result,
                    witness={
                        "automorphism": sigma.to_json_dict(),
                        "loop": _loop_witness(g, loop),
                    },
                )
            )
            period.add_lower(result)
            index.add_lower(result)


def _loop_witness(g: Multigraph, loop: Chain) -> list[dict]:
    return [
        {"edge": g.edges[k].id, "sign": sign}
        for k, sign in sorted(loop.items(), key=lambda t: g.edges[t[0]].id)
    ]


# --- the pipeline -------------------------------------------------------------


def analyze(g: Multigraph, config: Config | None = None, _depth: int | None = None) -> BoundsReport:
    """Full analysis of one graph: structural divisors, subgraph
    propagation, exact Sylow order when feasible, then the cyclic /
    loop-summand scan.  Always returns a report; caps only widen the
    interval and leave a status note."""
    config = config or Config()
    depth = config.subgraph_depth if _depth is None else _depth
    gen = genus(g)
    gens = automorphism_generators(g)
    group = automorphism_group(g, gens)
    aut_order = group.order()
    lattice = homology.fundamental_cycle_basis(g)
    cocycle = cohomology.build_path_cocycle(g, lattice, group)

    period = DivisorInterval()
    index = DivisorInterval()
    certs: list[Certificate] = []
    status: list[str] = []

    certs.append(
        Certificate(
            rule="AutOrder",
            target="period",
            direction="upper",
            divisor=aut_order,
            witness={"aut_order": str(aut_order)},
        )
    )
    period.add_upper(aut_order)

    orbit_certs, orbit_status = index_upper_divisors(g, group, config.union_cap)
    certs.extend(orbit_certs)
    status.extend(orbit_status)
    for cert in orbit_certs:
        index.add_upper(cert.divisor)

    if depth > 0:
        sub_certs, sub_status = propagate_subgraph(g, group, config, depth)
        certs.extend(sub_certs)
        status.extend(sub_status)
        for cert in sub_certs:
            (period if cert.target == "period" else index).add_upper(cert.divisor)

    exact = cohomology.class_order_exact(
        cocycle, group, enum_cap=config.max_enum, bar_cap=config.bar_cap,
        seed=config.seed, scan_on_unknown=False,
    )
    if isinstance(exact, Unknown):
        status.append(
            "exact class order not computed: "
            f"|Aut| = {exact.upper} against enumeration cap {config.max_enum} "
            f"or a Sylow subgroup above bar cap {config.bar_cap}"
        )
    else:
        n, parts = exact
        certs.append(
            Certificate(
                rule="SylowExact",
                target="period",
                direction="lower",
                divisor=n,
                witness={
                    "class_order": n,
                    "sylow_parts": [
                        {
                            "prime": p.prime,
                            "subgroup_order": p.subgroup_order,
                            "class_order": p.class_order,
                        }
                        for p in parts
                    ],
                },
            )
        )
        period.add_lower(n)
        period.add_upper(n)
        index.add_lower(n)

    # period divides index, so index upper bounds constrain the period too
    if index.upper:
        period.add_upper(index.upper)

    _cyclic_scan(g, lattice, cocycle, group, config, period, index, certs, status)

    certs.append(
        Certificate(
            rule="PeriodDividesIndex",
            target="index",
            direction="lower",
            divisor=period.lower,
            witness={"period_lower": _json_int(period.lower)},
        )
    )
    index.add_lower(period.lower)

    period.check("period")
    index.check("index")
    if period.upper and index.upper and index.upper % period.lower:
        raise SoundnessError("period lower bound does not divide index upper bound")
    return BoundsReport(
        graph=g,
        genus=gen,
        aut_order=aut_order,
        period=period,
        index=index,
        certificates=certs,
        status=status,
    )


# --- certificate re-verification ----------------------------------------------


def verify_certificate(g: Multigraph, cert: Certificate, config: Config | None = None) -> bool:
    """Re-check a certificate from its witness alone."""
    config = config or Config()
    rule = cert.rule
    if rule == "GenusIndex":
        return cert.divisor == genus(g) - 1
    if rule == "AutOrder":
        return cert.divisor == automorphism_group(g).order()
    if rule == "OrbitSubgraph":
        group = automorphism_group(g)
        kind = cert.witness["kind"]
        eorbits = _edge_orbits(g, group)
        vorbits = _vertex_orbits(g, group)
        if kind == "edge-orbit":
            ids = sorted(cert.witness["edges"])
            return any(
                sorted(g.edges[k].id for k in orbit) == ids and len(orbit) == cert.divisor
                for orbit in eorbits
            )
        if kind == "vertex-orbit-doubled":
            ids = sorted(cert.witness["vertices"])
            return any(
                sorted(g.vertices[v] for v in orbit) == ids
                and 2 * len(orbit) == cert.divisor
                for orbit in vorbits
            )
        if kind in ("orbit-union-edges", "orbit-union-vertices"):
            combo = cert.witness["orbits"]
            if any(i >= len(eorbits) for i in combo):
                return False
            edges = [k for i in combo for k in eorbits[i]]
            if kind == "orbit-union-edges":
                return cert.divisor == len(edges)
            return cert.divisor == 2 * len(_incident_vertices(g, edges))
        return False
    if rule == "LoopSummand":
        lattice = homology.fundamental_cycle_basis(g)
        sigma = from_json_dict(g, cert.witness["automorphism"])
        loop: Chain = {}
        for item in cert.witness["loop"]:
            loop[g.edge_index[item["edge"]]] = item["sign"]
        result = period_lower_loop_summand(lattice, sigma, loop)
        return result == cert.divisor
    if rule == "CyclicRestriction":
        lattice = homology.fundamental_cycle_basis(g)
        group = automorphism_group(g)
        cocycle = cohomology.build_path_cocycle(g, lattice, group)
        sigma = from_json_dict(g, cert.witness["automorphism"])
        return cohomology.class_order_cyclic(cocycle, sigma) == cert.divisor
    if rule == "SylowExact":
        lattice = homology.fundamental_cycle_basis(g)
        group = automorphism_group(g)
        cocycle = cohomology.build_path_cocycle(g, lattice, group)
        exact = cohomology.class_order_exact(
            cocycle, group, enum_cap=config.max_enum, bar_cap=config.bar_cap,
            seed=config.seed, scan_on_unknown=False,
        )
        return isinstance(exact, tuple) and exact[0] == cert.divisor
    if rule == "SubgraphPropagation":
        group = automorphism_group(g)
        for sub in invariant_subgraphs(g, group, config.union_cap):
            if sub.name == cert.witness["subgraph"]:
                report = analyze(sub, config, _depth=0)
                interval = report.period if cert.target == "period" else report.index
                return interval.upper != 0 and cert.divisor % interval.upper == 0
        return False
    if rule == "PeriodDividesIndex":
        return True
    return False
