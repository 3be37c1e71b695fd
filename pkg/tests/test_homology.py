from random import Random

import pytest

from graphperiod import catalog
from graphperiod.autgroup import automorphism_generators, identity_automorphism
from graphperiod.homology import (
    ChainComplex,
    boundary,
    chain_action,
    coinvariant_primitive,
    fundamental_cycle_basis,
    invariant_functional_gcd,
    verify_basis,
)
from graphperiod.intlinalg import det_bareiss
from graphperiod.multigraph import genus

from util import relabel, transfer_automorphism, unvalidated_graph, vertex_cycle_automorphism


@pytest.mark.parametrize(
    "name,rank", [("k5", 6), ("doubled-cycle-g5", 5), ("soccer-doubled", 61)]
)
def test_rank(name, rank):
    L = fundamental_cycle_basis(catalog.builtin(name))
    assert L.rank == rank
    assert verify_basis(L)


def test_tree_plus_one_edge_rank_one():
    # internal data below the degree floor, bypassing validation
    g = unvalidated_graph(
        "theta",
        ["a", "b", "c"],
        [("e1", "a", "b"), ("e2", "b", "c"), ("e3", "a", "c")],
    )
    L = fundamental_cycle_basis(g)
    assert L.rank == 1
    assert verify_basis(L)


def test_augmentation_kills_boundary():
    g = catalog.builtin("k5")
    cx = ChainComplex(g)
    d = cx.boundary_matrix
    aug = cx.augmentation()
    for j in range(len(g.edges)):
        col = [d[i][j] for i in range(len(g.vertices))]
        assert sum(a * x for a, x in zip(aug, col)) == 0


def test_basis_cycles_are_closed():
    for name in ("k5", "hybrid", "doubled-k4"):
        g = catalog.builtin(name)
        L = fundamental_cycle_basis(g)
        assert L.rank == genus(g)
        for z in L.basis:
            assert boundary(g, z) == {}


def test_action_matrix_identity():
    g = catalog.builtin("k5")
    L = fundamental_cycle_basis(g)
    ident = identity_automorphism(g)
    n = L.rank
    assert L.action_matrix(ident) == [
        [1 if i == j else 0 for j in range(n)] for i in range(n)
    ]


def test_action_matrix_determinant_unimodular():
    for name in ("k5", "doubled-k4"):
        g = catalog.builtin(name)
        L = fundamental_cycle_basis(g)
        for a in automorphism_generators(g)[:12]:
            assert abs(det_bareiss(L.action_matrix(a))) == 1


def test_action_is_homomorphism_on_words():
    rng = Random(2)
    for name in ("k5", "doubled-k4", "hybrid"):
        g = catalog.builtin(name)
        L = fundamental_cycle_basis(g)
        gens = automorphism_generators(g)
        for _ in range(15):
            word = [rng.choice(gens) for _ in range(rng.randint(2, 6))]
            composed = word[0]
            for w in word[1:]:
                composed = composed.compose(w)
            prod = L.action_matrix(word[0])
            for w in word[1:]:
                b = L.action_matrix(w)
                prod = [
                    [sum(prod[i][k] * b[k][j] for k in range(L.rank)) for j in range(L.rank)]
                    for i in range(L.rank)
                ]
            assert prod == L.action_matrix(composed)


def test_boundary_equivariance():
    # boundary(sigma . z) = sigma_V(boundary z) for arbitrary chains
    rng = Random(4)
    g = catalog.builtin("doubled-k4")
    gens = automorphism_generators(g)
    for _ in range(40):
        sigma = rng.choice(gens)
        chain = {rng.randrange(len(g.edges)): rng.choice([-2, -1, 1, 2]) for _ in range(4)}
        lhs = boundary(g, chain_action(sigma, chain))
        rhs = {sigma.vperm[v]: x for v, x in boundary(g, chain).items()}
        assert lhs == rhs


def test_rotation_permutes_doubled_cycle_classes():
    # the classes f1 f2 f3 f4 and e_i f_i of the doubled 4-cycle are
    # permuted (up to orientation) by the rotation
    g = catalog.builtin("doubled-cycle-g5")
    L = fundamental_cycle_basis(g)
    ei = g.edge_index
    rot = vertex_cycle_automorphism(g, ["v1", "v2", "v3", "v4"])
    full_loop = {ei[f"f{i}"]: 1 for i in range(1, 5)}
    assert chain_action(rot, full_loop) == full_loop
    two_gons = [{ei[f"e{i}"]: 1, ei[f"f{i}"]: -1} for i in range(1, 5)]
    for i in range(4):
        assert chain_action(rot, two_gons[i]) == two_gons[(i + 1) % 4]
    classes = [full_loop] + two_gons
    coords = [L.coordinates(z) for z in classes]
    # and these five classes are an alternative basis (determinant +-1)
    assert abs(det_bareiss(coords)) == 1


def test_coinvariant_identity_primitivity():
    g = catalog.builtin("k5")
    L = fundamental_cycle_basis(g)
    ident = identity_automorphism(g)
    assert coinvariant_primitive(L, ident, [1, 0, 0, 0, 0, 0])
    assert not coinvariant_primitive(L, ident, [2, 0, 0, 0, 0, 0])
    assert not coinvariant_primitive(L, ident, [0, 0, 0, 0, 0, 0])


def test_k5_pentagon_primitive_triangle_not():
    from graphperiod.bounds import chain_from_vertex_cycle

    g = catalog.builtin("k5")
    L = fundamental_cycle_basis(g)
    pentagon = L.coordinates(chain_from_vertex_cycle(g, ["v1", "v2", "v3", "v4", "v5"]))
    triangle = L.coordinates(chain_from_vertex_cycle(g, ["v1", "v2", "v3"]))
    rot5 = vertex_cycle_automorphism(g, ["v1", "v2", "v3", "v4", "v5"])
    rot3 = vertex_cycle_automorphism(g, ["v1", "v2", "v3"])
    assert coinvariant_primitive(L, rot5, pentagon)
    assert not coinvariant_primitive(L, rot3, triangle)
    assert invariant_functional_gcd(L, rot5, pentagon) == 1
    assert invariant_functional_gcd(L, rot3, triangle) != 1


def test_primitivity_verdict_independent_of_spanning_tree():
    from graphperiod.bounds import chain_from_vertex_cycle

    g = catalog.builtin("k5")
    mapping = {f"v{i}": f"w{6 - i}" for i in range(1, 6)}  # reverses id order
    h = relabel(g, mapping)
    L1 = fundamental_cycle_basis(g)
    L2 = fundamental_cycle_basis(h)
    assert L1.root != L2.root  # the tree really changed
    rot5 = vertex_cycle_automorphism(g, ["v1", "v2", "v3", "v4", "v5"])
    rot5h = transfer_automorphism(rot5, h)
    pent1 = chain_from_vertex_cycle(g, ["v1", "v2", "v3", "v4", "v5"])
    # same chain in the relabeled graph: edge ids/positions are unchanged
    assert coinvariant_primitive(L1, rot5, L1.coordinates(pent1)) == coinvariant_primitive(
        L2, rot5h, L2.coordinates(pent1)
    )


def test_coordinates_rejects_non_cycles():
    g = catalog.builtin("k5")
    L = fundamental_cycle_basis(g)
    with pytest.raises(ValueError):
        L.coordinates({0: 1})
