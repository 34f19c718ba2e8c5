import pytest
from hypothesis import given, settings, strategies as st

from colorprob import (
    Antimatroid, ColoringProblem, Graph, Hypergraph, InvalidStructure, Matroid, Poset, QSymPoly,
    chromatic_polynomial, chromatic_qsym, count_colorings, is_stable, phi, poset_to_antimatroid,
    product, psi, species_contract, species_is_stable, species_product, species_restrict,
)
from colorprob.generators import GenConfig, generate
from colorprob.species import antimatroid_violations

from oracles import (
    contraction_bases, graph_colorings, restriction_bases, strict_order_maps,
)

M = QSymPoly.monomial
VARIANTS = ["graph", "hypergraph", "poset", "matroid", "antimatroid"]


def structures(variant, max_n=4):
    return st.builds(
        lambda seed, n: generate(variant, GenConfig(seed=seed, ground_size=n)),
        st.integers(0, 2**32), st.integers(1, max_n),
    )


# -- construction ------------------------------------------------------------

def test_graph_rejects_bad_edges():
    with pytest.raises(InvalidStructure):
        Graph("ab", [("a", "a")])
    with pytest.raises(InvalidStructure):
        Graph("ab", [("a", "z")])


def test_hypergraph_singletons_opt_in():
    with pytest.raises(InvalidStructure):
        Hypergraph("ab", [["a"]])
    h = Hypergraph("ab", [["a"]], allow_singletons=True)
    assert count_colorings(phi(h), 3) == 0


def test_poset_rejects_cycle():
    with pytest.raises(InvalidStructure):
        Poset("ab", [("a", "b"), ("b", "a")])


def test_poset_closure_and_covers():
    p = Poset("abc", [("a", "b"), ("b", "c")])
    assert p.less_than("a", "c")
    assert p.covers() == [("a", "b"), ("b", "c")]


def test_matroid_rejects_bad_bases():
    with pytest.raises(InvalidStructure):
        Matroid("abcd", [["a", "b"], ["c", "d"]])
    with pytest.raises(InvalidStructure):
        Matroid("ab", [["a"], ["a", "b"]])
    with pytest.raises(InvalidStructure):
        Matroid("ab", [])


def test_antimatroid_axioms():
    assert antimatroid_violations("ab", {frozenset(), frozenset("a"), frozenset("ab")}) == []
    kinds = {v.kind for v in antimatroid_violations("ab", {frozenset(), frozenset("ab")})}
    assert kinds == {"accessibility"}
    kinds = {v.kind for v in antimatroid_violations("abc", {frozenset(), frozenset("a"), frozenset("b"), frozenset("abc"),
                                                             frozenset("ac")})}
    assert "union closure" in kinds


# -- product -----------------------------------------------------------------

def test_graph_product():
    g = species_product(Graph("ab", [("a", "b")]), Graph("cd", [("c", "d")]))
    assert g.labels == tuple("abcd") and len(g.edges) == 2


def test_matroid_direct_sum_with_loop():
    m = species_product(Matroid("ab", [["a"], ["b"]]), Matroid("c", [[]]))
    assert m.bases == {frozenset("a"), frozenset("b")}


def test_poset_product_chi():
    p = species_product(Poset("ab", [("a", "b")]), Poset("cd", [("c", "d")]))
    for k in range(5):
        assert chromatic_polynomial(phi(p))(k) == (k * (k - 1) // 2) ** 2


def test_product_errors(k2):
    with pytest.raises(TypeError, match="mixed variants"):
        species_product(k2, Poset("cd"))
    with pytest.raises(ValueError):
        species_product(k2, Graph("bc"))


# -- restriction / contraction -----------------------------------------------

def test_graph_minors():
    path = Graph("abc", [("a", "b"), ("b", "c")])
    assert species_restrict(path, {"a", "c"}) == Graph("ac")
    assert species_contract(path, {"b"}) == Graph("ac")
    assert species_contract(path, {"a"}) == Graph("bc", [("b", "c")])


def test_hypergraph_minors_keep_contained_edges():
    h = Hypergraph("abc", [["a", "b", "c"], ["a", "b"]])
    assert species_restrict(h, {"a", "b"}) == Hypergraph("ab", [["a", "b"]])
    assert species_contract(h, {"a"}) == Hypergraph("bc")


def test_poset_minors(chain2):
    assert species_restrict(chain2, {"b"}) is None
    assert species_contract(chain2, {"b"}) is None
    assert species_restrict(chain2, {"a"}) == Poset("a")
    assert species_contract(chain2, {"a"}) == Poset("b")


def test_matroid_contract_to_loop(u12):
    m = species_contract(u12, {"a"})
    assert m.labels == ("b",) and m.bases == {frozenset()}
    assert m.loops() == {"b"}


@settings(max_examples=60, deadline=None)
@given(structures("matroid", 5), st.data())
def test_matroid_minors_match_independent_set_oracle(m, data):
    s = data.draw(st.sets(st.sampled_from(m.labels)))
    bases = [set(b) for b in m.bases]
    assert species_restrict(m, s).bases == restriction_bases(bases, s)
    assert species_contract(m, s).bases == contraction_bases(m.labels, bases, s)


def test_antimatroid_minors():
    a = Antimatroid("ab", [(), ("a",), ("a", "b")])
    assert species_restrict(a, {"b"}) is None
    assert species_contract(a, {"a"}) == Antimatroid("b", [(), ("b",)])


# -- stability ---------------------------------------------------------------

def test_stability_examples(u12):
    assert species_is_stable(Graph("abc"))
    assert not species_is_stable(Graph("ab", [("a", "b")]))
    assert not species_is_stable(u12)
    assert not u12.is_loop_coloop_only()
    assert species_is_stable(Matroid("ab", [["a"]]))
    assert species_is_stable(Antimatroid("ab", [(), "a", "b", "ab"]))
    assert species_is_stable(Poset("ab"))
    assert species_is_stable(Hypergraph("abc"))


@pytest.mark.parametrize("variant", VARIANTS)
def test_stable_iff_phi_stable(variant):
    for seed in range(60):
        x = generate(variant, GenConfig(seed=seed, ground_size=3))
        assert species_is_stable(x) == is_stable(phi(x))


# -- phi and psi ---------------------------------------------------------------

def test_phi_k2(phi_k2):
    assert set(phi_k2.family) == {0, 1, 2, 3}
    nested = {(s, t) for s in range(4) for t in range(4) if s | t == t}
    assert set(phi_k2.ideal) == nested - {(0, 3)}


def test_phi_matroid_equals_phi_graph(u12, phi_k2):
    assert phi(u12) == phi_k2


def test_phi_chain(chain2):
    c = phi(chain2)
    assert set(c.family) == {0, 1, 3}
    assert set(c.ideal) == {(0, 0), (1, 1), (3, 3), (0, 1), (1, 3)}


def test_phi_idempotent_on_fixture(four_element):
    assert phi(four_element) == four_element


def test_psi_examples(k2, u12):
    assert psi(k2) == M((1, 1), 2)
    assert psi(Poset("ab")) == M((1, 1), 2) + M((2,))
    assert psi(Matroid("a", [[]])) == M((1,))
    assert psi(Poset("ab", [("a", "b")])) == M((1, 1))
    assert psi(u12) == psi(k2)


@pytest.mark.parametrize("variant", VARIANTS)
def test_psi_equals_chromatic_qsym_of_phi(variant):
    for seed in range(40):
        x = generate(variant, GenConfig(seed=seed, ground_size=4))
        assert psi(x) == chromatic_qsym(phi(x))


@settings(max_examples=30, deadline=None)
@given(structures("graph"))
def test_graph_chi_is_classical(g):
    c = phi(g)
    edges = [tuple(e) for e in g.edges]
    for k in range(5):
        assert count_colorings(c, k) == graph_colorings(g.labels, edges, k)


@settings(max_examples=30, deadline=None)
@given(structures("poset"))
def test_poset_chi_counts_strict_maps(p):
    less = [(a, b) for a, b in p.leq if a != b]
    for k in range(5):
        assert count_colorings(phi(p), k) == strict_order_maps(p.labels, less, k)


@pytest.mark.parametrize("variant", VARIANTS)
def test_phi_morphism(variant):
    for seed in range(30):
        cfg = GenConfig(seed=seed, ground_size=3)
        x = generate(variant, cfg)
        y = generate(variant, cfg.with_seed(seed + 1000), labels="xyz")
        assert phi(species_product(x, y)) == product(phi(x), phi(y))
        for m in range(1 << x.n):
            s = x.subset(m)
            for op, core_op in ((species_restrict, "restrict"), (species_contract, "contract")):
                lhs = op(x, s)
                rhs = getattr(phi(x), core_op)(s)
                assert (lhs is None) == (rhs is None)
                if lhs is not None:
                    assert phi(lhs) == rhs


# -- order ideals as an antimatroid ------------------------------------------

def test_j_examples():
    assert poset_to_antimatroid(Poset("ab")).feasible == {frozenset(), frozenset("a"), frozenset("b"), frozenset("ab")}
    assert poset_to_antimatroid(Poset("ab", [("a", "b")])).feasible == {frozenset(), frozenset("a"), frozenset("ab")}
    p, q = Poset("ab", [("a", "b")]), Poset("cd", [("c", "d")])
    assert poset_to_antimatroid(species_product(p, q)) == species_product(poset_to_antimatroid(p), poset_to_antimatroid(q))


@settings(max_examples=40, deadline=None)
@given(structures("poset"), st.data())
def test_j_commutes_with_minors(p, data):
    s = data.draw(st.sets(st.sampled_from(p.labels)))
    a = poset_to_antimatroid(p)
    for op in (species_restrict, species_contract):
        lhs, rhs = op(p, s), op(a, s)
        assert (lhs is None) == (rhs is None)
        if lhs is not None:
            assert poset_to_antimatroid(lhs) == rhs


def test_structure_equality_by_labels():
    assert Graph("ab", [("a", "b")]) == Graph("ba", [("b", "a")])
    assert Graph("ab") != Graph("ab", [("a", "b")])
    assert isinstance(phi(Graph("ab")), ColoringProblem)
