import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dezagraphs import constructions as C
from dezagraphs.analysis import (
    COMPLETE,
    DEZA,
    EMPTY,
    NOT_REGULAR,
    OTHER,
    STRONGLY_REGULAR,
    alpha_beta,
    children,
    classify,
    complement_is_deza,
    divisible_design_partitions,
    is_divisible_design,
)
from dezagraphs.graph import (
    GraphError,
    VertexPermutation,
    circulant,
    complement,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    empty_graph,
    from_edges,
    lexicographic_product,
    matching,
    relabel,
)
from dezagraphs.isomorphism import is_isomorphic
from corpus import deza_corpus
from oracles import brute_deza_params, brute_srg_params, value_counts_per_vertex
from test_graph import graphs


def test_paley13_strongly_regular():
    r = classify(C.paley(13))
    assert r.kind == STRONGLY_REGULAR
    assert (r.n, r.k, r.lam, r.mu) == (13, 6, 2, 3)
    assert not r.strictly_deza


def test_p5k2_strictly_deza():
    r = classify(C.two_clique_extension(C.paley(5)))
    assert r.kind == DEZA
    assert r.params == (10, 5, 4, 2)
    assert r.strictly_deza
    assert r.coedge_regular


def test_c7_not_strict():
    r = classify(cycle_graph(7))
    assert r.kind == DEZA
    assert r.params == (7, 2, 1, 0)
    assert r.diameter == 3
    assert not r.strictly_deza


def test_kinds_of_degenerate_graphs():
    assert classify(complete_graph(4)).kind == COMPLETE
    assert classify(empty_graph(4)).kind == EMPTY
    assert classify(from_edges(3, [(0, 1)])).kind == NOT_REGULAR
    r = classify(matching(3))
    assert r.kind == STRONGLY_REGULAR and r.lam == r.mu == 0
    with pytest.raises(GraphError):
        classify(complete_graph(1))


def test_other_kind():
    # pair values {0, 1, 2}
    assert classify(circulant(12, [1, 2, 10, 11])).kind == OTHER


def test_witnesses_realize_values():
    g = C.quasi_lattice(5)
    r = classify(g)
    for value, (u, v) in r.witnesses.items():
        assert (g.rows[u] & g.rows[v]).bit_count() == value
    assert set(r.witnesses) == {r.a, r.b}


@given(graphs(max_n=9))
@settings(max_examples=150)
def test_classify_matches_brute_force(g):
    if g.n < 2:
        return
    r = classify(g)
    srg = brute_srg_params(g)
    deza = brute_deza_params(g)
    if r.kind == STRONGLY_REGULAR:
        assert srg == (r.n, r.k, r.lam, r.mu)
    elif r.kind == DEZA:
        assert srg is None
        assert deza == r.params
    elif r.kind == OTHER:
        assert srg is None and deza is None


@given(st.randoms(use_true_random=False))
@settings(max_examples=10, deadline=None)
def test_classify_isomorphism_invariant(rnd):
    for name, g in deza_corpus()[:12]:
        img = list(range(g.n))
        rnd.shuffle(img)
        h = relabel(g, VertexPermutation(tuple(img)))
        r1, r2 = classify(g), classify(h)
        assert (r1.kind, r1.params, r1.strictly_deza, r1.lam, r1.mu) == (r2.kind, r2.params, r2.strictly_deza, r2.lam, r2.mu), name


def test_alpha_beta_examples():
    assert alpha_beta(10, 5, 4, 2) == (8, 1)
    assert alpha_beta(8, 4, 2, 0) == (1, 6)
    with pytest.raises(ValueError):
        alpha_beta(10, 5, 3, 3)
    with pytest.raises(ValueError):
        alpha_beta(10, 5, 4, 1)


def test_alpha_beta_matches_vertex_counts():
    for name, g in deza_corpus():
        r = classify(g)
        for counts in value_counts_per_vertex(g):
            assert counts.get(r.a, 0) == r.alpha, name
            assert counts.get(r.b, 0) == r.beta, name
        assert r.alpha + r.beta == r.n - 1
        assert r.k * (r.k - 1) == r.a * r.alpha + r.b * r.beta


def test_children_hypercube_complement():
    g = C.build(C.FamilySpec(C.Family.HYPERCUBE_COMPLEMENT, (3,)))
    kids = children(g, classify(g))
    assert kids.child_a.regular_valency() == 1
    assert is_isomorphic(kids.child_a, matching(4))[0]
    assert kids.child_b.regular_valency() == 6
    assert is_isomorphic(kids.child_b, complete_multipartite(4, 2))[0]


def test_children_of_srg_are_graph_and_complement():
    g = C.paley(13)
    kids = children(g, classify(g))
    assert {kids.child_a, kids.child_b} == {g, complement(g)}


def test_children_p5k2_matching():
    g = C.two_clique_extension(C.paley(5))
    kids = children(g, classify(g))
    assert kids.child_b == matching(5)


def test_children_undefined_for_single_value():
    g = C.lattice(4)
    with pytest.raises(ValueError):
        children(g, classify(g))


def test_complement_criterion_p5k2():
    g = C.two_clique_extension(C.paley(5))
    verdict = complement_is_deza(g, classify(g))
    cr = classify(complement(g))
    assert verdict.is_deza == (cr.kind in (DEZA, STRONGLY_REGULAR))


def test_complement_criterion_requires_gap_two():
    for name, g in deza_corpus():
        r = classify(g)
        if r.b - r.a != 2:
            assert not complement_is_deza(g, r).is_deza, name


def test_complement_criterion_matches_direct_on_corpus():
    for name, g in deza_corpus():
        r = classify(g)
        verdict = complement_is_deza(g, r)
        cr = classify(complement(g))
        assert verdict.is_deza == (cr.kind in (DEZA, STRONGLY_REGULAR)), name


def test_complement_criterion_rejects_srg():
    g = C.paley(13)
    with pytest.raises(ValueError):
        complement_is_deza(g, classify(g))


def test_divisible_design_examples():
    g = C.two_clique_extension(C.paley(5))
    dd = is_divisible_design(g, classify(g))
    assert dd is not None
    assert (dd.m, dd.class_size, dd.lambda1, dd.lambda2) == (5, 2, 4, 2)
    assert set(dd.classes) == {(2 * i, 2 * i + 1) for i in range(5)}
    assert is_divisible_design(cycle_graph(7), classify(cycle_graph(7))) is None
    k32 = complete_multipartite(3, 2)
    dd = is_divisible_design(k32, classify(k32))
    assert dd is not None and dd.class_size == 2 and dd.m == 3


def test_edge_and_coedge_regular_examples():
    for x in (2, 3, 4):
        for y in (2, 3):
            g = C.build(C.FamilySpec(C.Family.COMPLETE_TIMES_MATCHINGS, (x, y)))
            r = classify(g)
            assert r.strictly_deza and r.coedge_regular
            assert r.params == (2 * x * y, 1 + 2 * y * (x - 1), 2 * y * (x - 1), 2 * y * (x - 2) + 2)
    for m in (2, 3):
        g = lexicographic_product(C.triangular(6), empty_graph(m))
        r = classify(g)
        assert r.strictly_deza and r.edge_regular
        assert r.params == (15 * m, 8 * m, 8 * m, 4 * m)


def test_single_matching_edge_collapses_to_complete():
    for x in (2, 3, 4):
        g = C.build(C.FamilySpec(C.Family.COMPLETE_TIMES_MATCHINGS, (x, 1)))
        assert g == complete_graph(2 * x)
        assert classify(g).kind == COMPLETE


def test_k_equals_b_for_srg_lambda_mu_times_coclique():
    for base in (C.triangular(6), C.lattice(4)):
        rb = classify(base)
        assert rb.lam == rb.mu
        for m in (2, 3):
            r = classify(lexicographic_product(base, empty_graph(m)))
            assert r.kind == DEZA and r.k == r.b
            n, k, a = r.n, r.k, r.a
            assert m == (k * k - a * n) // (k - a)


def test_to_json_fields():
    d = classify(C.two_clique_extension(C.paley(5))).to_json()
    for key in ("n", "k", "kind", "b", "a", "alpha", "beta", "strictly_deza", "edge_regular",
                "coedge_regular", "diameter", "witnesses"):
        assert key in d
    assert d["witnesses"] == {"2": [0, 2], "4": [0, 1]}
    assert classify(matching(2)).to_json()["diameter"] is None


def test_divisible_designs_have_few_eigenvalues():
    from dezagraphs.spectra import spectrum

    for name, g in deza_corpus():
        r = classify(g)
        if divisible_design_partitions(g, r):
            assert len(spectrum(g).entries) <= 5, name
