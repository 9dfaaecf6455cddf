import random

import networkx as nx
from hypothesis import given, settings
from hypothesis import strategies as st

from dezagraphs.constructions import lattice, paley, triangular
from dezagraphs.graph import (
    VertexPermutation,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    is_automorphism,
    relabel,
)
from dezagraphs.isomorphism import find_isomorphism, group_by_conjugacy, is_isomorphic, switching_involutions
from oracles import to_nx
from test_graph import graphs


def _check_witness(g1, g2, phi):
    assert relabel(g1, phi) == g2


def test_pentagon_is_paley5():
    ok, phi = is_isomorphic(cycle_graph(5), paley(5))
    assert ok
    _check_witness(cycle_graph(5), paley(5), phi)


def test_c6_vs_k33():
    assert not is_isomorphic(cycle_graph(6), complete_multipartite(2, 3))[0]


@given(graphs(max_n=10), st.randoms(use_true_random=False))
@settings(max_examples=60)
def test_relabeling_is_isomorphic(g, rnd):
    img = list(range(g.n))
    rnd.shuffle(img)
    h = relabel(g, VertexPermutation(tuple(img)))
    ok, phi = is_isomorphic(g, h)
    assert ok
    _check_witness(g, h, phi)
    assert is_isomorphic(h, g)[0]


@given(graphs(max_n=7), graphs(max_n=7))
@settings(max_examples=80)
def test_agrees_with_networkx(g1, g2):
    assert is_isomorphic(g1, g2)[0] == nx.is_isomorphic(to_nx(g1), to_nx(g2))


def test_vertex_transitive_nonisomorphic():
    # L(4) and the Shrikhande graph share parameters (16,6,2,2).
    shrikhande = nx.Graph()
    for x in range(4):
        for y in range(4):
            for dx, dy in [(0, 1), (1, 0), (1, 1)]:
                shrikhande.add_edge(4 * x + y, 4 * ((x + dx) % 4) + (y + dy) % 4)
    from dezagraphs.graph import from_edges

    s = from_edges(16, list(shrikhande.edges()))
    assert not is_isomorphic(lattice(4), s)[0]
    assert is_isomorphic(s, s)[0]


def test_random_relabel_of_strongly_regular():
    rng = random.Random(11)
    g = triangular(7)
    img = list(range(g.n))
    rng.shuffle(img)
    h = relabel(g, VertexPermutation(tuple(img)))
    phi = find_isomorphism(g, h)
    assert phi is not None
    _check_witness(g, h, phi)


def test_c4_switching_involutions_brute_force():
    g = cycle_graph(4)
    from itertools import permutations

    brute = set()
    for img in permutations(range(4)):
        p = VertexPermutation(img)
        if is_automorphism(g, p) and p.is_involution() and all(x == p(x) or not g.adjacent(x, p(x)) for x in range(4)):
            brute.add(img)
    found = {p.image for p in switching_involutions(g)}
    assert found == brute
    assert (2, 1, 0, 3) in found and (0, 3, 2, 1) in found


def test_group_by_conjugacy_c4():
    g = cycle_graph(4)
    invs = switching_involutions(g)
    rotation = VertexPermutation((1, 2, 3, 0))
    groups = group_by_conjugacy(invs, [rotation])
    sizes = sorted(len(grp) for grp in groups)
    # identity, {(0 2), (1 3)}, {(0 2)(1 3)}
    assert sizes == [1, 1, 2]


def test_complete_graph_only_identity():
    assert [p.image for p in switching_involutions(complete_graph(5))] == [tuple(range(5))]
