from __future__ import annotations

import pytest
from conftest import small_xmods
from hypothesis import given, settings
from hypothesis import strategies as st

from xmodcentre import centre as ce
from xmodcentre import groups as gr
from xmodcentre import xmod as xm
from xmodcentre.errors import AxiomViolation, BudgetExceeded
from xmodcentre.reporting import name_centre

SMALL = small_xmods()


class TestEnumerate:
    def test_d4_order_and_type(self, d4_centre):
        assert len(d4_centre) == 16
        assert gr.identify(d4_centre.group) == "C2 x D4"

    def test_identity_is_first(self, d4_centre):
        e = d4_centre.elements[0]
        assert e.x == 0 and set(e.xi) == {0}

    def test_canonical_order(self, d4_centre):
        assert d4_centre.elements == sorted(d4_centre.elements)

    @pytest.mark.parametrize("g", [gr.dihedral(3), gr.dihedral(4), gr.quaternion8(), gr.cyclic(6)])
    def test_trivial_source_gives_centre(self, g):
        z = ce.enumerate_centre(xm.trivial_source(g))
        assert sorted(e.x for e in z.elements) == sorted(gr.centre_of(g))

    def test_aut_c4(self):
        z = ce.enumerate_centre(xm.aut_xmod(gr.cyclic(4)))
        assert gr.identify(z.group) == "C4"
        assert {e.x for e in z.elements} == {0}

    def test_identity_c2(self):
        x = xm.identity_xmod(gr.cyclic(2))
        z = ce.enumerate_centre(x)
        assert z.elements == [ce.CentreElement(0, (0, 0)), ce.CentreElement(1, (0, 0))]

    def test_every_element_satisfies_definition(self, group_centres, group_corpus):
        for f, z in group_centres.items():
            x = group_corpus[f]
            assert all(ce.satisfies_definition(x, e) for e in z.elements), f

    def test_definition_rejects_bad_pair(self, d4):
        bad = ce.CentreElement(d4.g0.element("alpha"), tuple(0 for _ in d4.g0))
        v = ce.satisfies_definition(d4, bad)
        assert not v and v.message == "ZE1"

    def test_product_formula(self, d4, d4_centre):
        z = d4_centre
        for p in z.elements[:6]:
            for q in z.elements[:6]:
                r = z.multiply(p, q)
                assert r.x == d4.g0.mul[p.x][q.x]
                assert all(r.xi[t] == d4.g1.mul[d4.act(p.x, q.xi[t])][p.xi[t]] for t in d4.g0)

    def test_find_and_by_generators(self, d4_centre):
        z = d4_centre
        for k, e in enumerate(z.elements):
            assert z.find(e.x, e.xi) == k
            assert z.by_generators(e.x, [e.xi[g] for g in z.xmod.g0.gens]) == k


class TestOracle:
    @pytest.mark.parametrize("name", sorted(SMALL))
    def test_small(self, name):
        x = SMALL[name]
        assert ce.centre_oracle(x) == set(ce.enumerate_centre(x).elements)

    def test_id_c2_count(self):
        assert len(ce.centre_oracle(xm.identity_xmod(gr.cyclic(2)))) == 2

    def test_trivial_source_c2(self):
        assert len(ce.centre_oracle(xm.trivial_source(gr.cyclic(2)))) == 2

    def test_budget(self, d4):
        with pytest.raises(BudgetExceeded):
            ce.centre_oracle(d4, budget=1000)


class TestD4:
    def test_delta(self, d4_input, d4_centre):
        nc = name_centre(d4_centre, d4_input.hints)
        delta = ce.delta_xmod(d4_centre).boundary.map
        g1 = d4_input.xmod.g1
        assert delta[g1.element("a")] == gr.evaluate_word(d4_centre.group, "A^2", nc.names)
        assert delta[g1.element("b")] == gr.evaluate_word(d4_centre.group, "BC", nc.names)

    def test_relations(self, d4_input, d4_centre):
        nc = name_centre(d4_centre, d4_input.hints)
        for rel in d4_input.relations:
            assert gr.check_relation(d4_centre.group, rel, nc.names), rel
        assert len(nc.words) == 16

    def test_flags(self, d4_centre):
        bcm = ce.braiding(d4_centre)
        assert bcm.is_braided and bcm.is_rqm
        assert not bcm.is_symmetric
        # the bracket is not bilinear on abelianisations here
        assert not bcm.factors_through_tensor

    def test_homotopy(self, d4_centre):
        h = ce.centre_homotopy(d4_centre)
        assert gr.identify(h.pi0) == "C2 x C2"
        assert gr.identify(h.pi1) == "C2"

    def test_seven_term_orders(self, d4_centre):
        rep = ce.seven_term_check(d4_centre)
        assert rep.ok
        assert rep.data["orders"]["pi0(Z)"] == 4


@pytest.fixture(scope="module")
def z():
    return ce.enumerate_centre(xm.aut_xmod(gr.cyclic(4)))


class TestAutC4:
    def test_kernel_of_z0(self, z):
        assert len(z.to_g0.kernel()) == 4

    def test_delta(self, z):
        x = z.xmod
        a = x.g1.gens[0]
        image = ce.delta_xmod(z).boundary.map
        e = z.elements[image[a]]
        sigma = x.g0.gens[0]
        assert e.x == 0 and e.xi[sigma] == x.g1.power(a, 2)
        assert len(set(image)) == 2

    def test_bracket_trivial(self, z):
        bcm = ce.braiding(z)
        assert {v for row in bcm.bracket for v in row} == {0}
        assert bcm.is_symmetric

    def test_homotopy(self, z):
        h = ce.centre_homotopy(z)
        assert (h.pi0.order, h.pi1.order) == (2, 2)

    def test_seven_term(self, z):
        assert ce.seven_term_check(z).ok


def test_to_trivial_homotopy():
    z = ce.enumerate_centre(xm.to_trivial(gr.direct_product(gr.cyclic(2), gr.cyclic(2))))
    h = ce.centre_homotopy(z)
    assert (h.pi0.order, h.pi1.order) == (1, 4)


def test_trivial_source_bracket():
    z = ce.enumerate_centre(xm.trivial_source(gr.dihedral(4)))
    bcm = ce.braiding(z)
    assert bcm.is_symmetric
    assert all(v == 0 for row in bcm.bracket for v in row)
    zx = ce.z0_xmod(z)
    assert all(zx.act(t, k) == k for t in zx.g0 for k in zx.g1)


def test_make_bcm_rejects_bad_bracket(d4_centre):
    base = ce.delta_xmod(d4_centre)
    bcm = ce.braiding(d4_centre)
    bad = [list(r) for r in bcm.bracket]
    bad[1][1] = (bad[1][1] + 1) % base.g1.order
    with pytest.raises(AxiomViolation) as info:
        ce.make_bcm(base, bad)
    assert info.value.axiom.startswith("BCM") or info.value.axiom == "action"


def test_centre_morphism(group_centres):
    for f, z in group_centres.items():
        assert ce.check_centre_morphism(z), f


# -- random crossed modules ------------------------------------------------------

def _random_xmod(draw):
    kind = draw(st.sampled_from(["aut", "identity", "normal", "trivial_source"]))
    g = draw(st.sampled_from([gr.cyclic(2), gr.cyclic(3), gr.cyclic(4), gr.dihedral(3), gr.direct_product(gr.cyclic(2), gr.cyclic(2))]))
    if kind == "aut":
        return xm.aut_xmod(g)
    if kind == "identity":
        return xm.identity_xmod(g)
    if kind == "trivial_source":
        return xm.trivial_source(g)
    gens = draw(st.lists(st.sampled_from(list(g)), max_size=2))
    n = gr.generated_subgroup(g, [g.conj(y, k) for y in g for k in gr.generated_subgroup(g, gens)])
    return xm.normal_inclusion(g, n)


random_xmods = st.composite(_random_xmod)()


@settings(max_examples=30, deadline=None)
@given(random_xmods)
def test_random_oracle_and_axioms(x):
    z = ce.enumerate_centre(x)
    assert ce.centre_oracle(x) == set(z.elements)
    bcm = ce.braiding(z)
    assert all(w is None for w in ce.bcm_axiom_witnesses(bcm.base, bcm.bracket).values())
    assert ce.action_from_bracket_witness(bcm.base, bcm.bracket) is None
    h = ce.centre_homotopy(z)
    assert h.pi0.is_abelian()
    assert ce.seven_term_check(z).ok
