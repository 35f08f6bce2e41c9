from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from xmodcentre import groups as gr
from xmodcentre import xmod as xm
from xmodcentre.errors import CM1Violation, CM2Violation, NotNormal, ShapeMismatch


def test_aut_d4_shape(d4):
    assert (d4.g1.order, d4.g0.order) == (8, 8)
    h = xm.homotopy(d4)
    assert gr.identify(h.pi0) == "C2"  # Out(D4)
    assert h.pi1.order == 2
    assert sorted(h.inclusion.map) == sorted([0, d4.g1.element("a^2")])


def test_aut_d4_action_is_evaluation(d4):
    # every automorphism acts bijectively and respects multiplication
    g = d4.g1
    for x in d4.g0:
        row = [d4.act(x, a) for a in g]
        assert sorted(row) == list(g)


@pytest.mark.parametrize("build", [xm.identity_xmod, xm.trivial_source, xm.aut_xmod])
def test_standard_constructions(build):
    for g in (gr.cyclic(3), gr.dihedral(3), gr.quaternion8()):
        x = build(g)
        assert xm.action_well_defined(x)


def test_to_trivial_needs_abelian():
    assert xm.to_trivial(gr.cyclic(4)).g0.order == 1
    with pytest.raises(CM2Violation):
        xm.to_trivial(gr.dihedral(3))


def test_cm1_violation_has_witness():
    s3 = gr.dihedral(3)
    # identity boundary with the trivial action breaks equivariance
    with pytest.raises(CM1Violation) as info:
        xm.make_xmod(s3, s3, gr.identity_hom(s3), gr.trivial_action(s3, s3))
    assert info.value.axiom == "CM1"
    x, a = info.value.witness
    assert s3.conj(x, a) != a


def test_cm2_violation():
    c2 = gr.cyclic(2)
    s3 = gr.dihedral(3)
    # trivial ∂ and trivial action force G1 abelian
    with pytest.raises(CM2Violation):
        xm.make_xmod(s3, c2, gr.trivial_hom(s3, c2), gr.trivial_action(c2, s3))


def test_shape_mismatch():
    g = gr.cyclic(2)
    h = gr.cyclic(3)
    with pytest.raises(ShapeMismatch):
        xm.make_xmod(g, g, gr.identity_hom(g), gr.trivial_action(h, g))


def test_normal_inclusion():
    s3 = gr.dihedral(3)
    c3 = gr.generated_subgroup(s3, [s3.element("a")])
    x = xm.normal_inclusion(s3, c3)
    h = xm.homotopy(x)
    assert h.pi0.order == 2 and h.pi1.order == 1
    with pytest.raises(NotNormal):
        xm.normal_inclusion(s3, [0, s3.element("b")])


def test_from_generator_data_matches_aut():
    c4 = gr.cyclic(4)
    x = xm.aut_xmod(c4)
    images = [[x.act(s, a) for a in c4.gens] for s in x.g0.gens]
    y = xm.from_generator_data(c4, x.g0, [x.d(a) for a in c4.gens], images)
    assert y.action.act == x.action.act
    assert xm.iso_test_xmod(x, y) is not None


def test_iso_test_xmod_distinguishes():
    c2 = gr.cyclic(2)
    assert xm.iso_test_xmod(xm.identity_xmod(c2), xm.to_trivial(c2)) is None
    assert xm.iso_test_xmod(xm.identity_xmod(c2), xm.aut_xmod(c2)) is None


def test_check_morphism_detects_non_commuting_square():
    c2 = gr.cyclic(2)
    x = xm.identity_xmod(c2)
    bad = xm.XmodMorphism(gr.identity_hom(c2), gr.trivial_hom(c2, c2))
    assert not xm.check_morphism(bad, x, x)
    good = xm.XmodMorphism(gr.identity_hom(c2), gr.identity_hom(c2))
    assert xm.check_morphism(good, x, x)


def test_crossed_homomorphisms_brute_force():
    s3 = gr.dihedral(3)
    x = xm.identity_xmod(s3)
    act = x.action.act
    found = set(xm.crossed_homomorphisms(s3, s3, act))
    assert all(xm.is_crossed_hom(s3, s3, act, xi) for xi in found)
    # principal crossed homs x -> a ^x a^-1 are all there
    for a in s3:
        xi = tuple(s3.mul[a][s3.inv[act[s][a]]] for s in s3)
        assert xi in found
    # s -> ξ(s)s is an endomorphism of S3, and there are 1 + 3 + 6 of those
    assert len(found) == 10


def test_fibres_partition(d4):
    fib = xm.fibres(d4)
    assert sorted(a for f in fib for a in f) == list(d4.g1)
    assert sum(1 for f in fib if f) == 4


# -- random crossed modules from normal subgroups ------------------------------------

groups = st.sampled_from([gr.dihedral(3), gr.dihedral(4), gr.quaternion8(), gr.symmetric(4, even_only=True), gr.cyclic(6)])


@settings(max_examples=20, deadline=None)
@given(groups, st.data())
def test_normal_inclusions_satisfy_axioms(g, data):
    gens = data.draw(st.lists(st.sampled_from(list(g)), max_size=2))
    normal = gr.generated_subgroup(g, gens)
    normal = sorted(gr.generated_subgroup(g, [g.conj(y, n) for y in g for n in normal]))
    x = xm.normal_inclusion(g, normal)
    h = xm.homotopy(x)
    assert h.pi0.order * len(normal) == g.order
    assert h.pi1.order == 1
    assert xm.action_well_defined(x)
