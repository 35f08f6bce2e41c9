from __future__ import annotations

import pytest
from conftest import small_xmods

from xmodcentre import catoracle as cat
from xmodcentre import centre as ce
from xmodcentre import groups as gr
from xmodcentre import xmod as xm
from xmodcentre.errors import BudgetExceeded

SMALL = small_xmods()


@pytest.mark.parametrize("name", sorted(SMALL))
def test_interchange_law(name):
    assert cat.interchange_witness(cat.build_cat(SMALL[name])) is None


@pytest.mark.parametrize("name", sorted(SMALL))
def test_groupoid_homotopy_matches(name):
    assert cat.homotopy_matches(cat.build_cat(SMALL[name]))


def test_composition_and_targets(d4):
    c = cat.build_cat(d4)
    for x in c.objects:
        for y in c.objects:
            for f in c.hom(x, y):
                assert c.target(f) == y
                assert c.compose(c.identity(y), f) == f == c.compose(f, c.identity(x))


def test_tensor_of_identities(d4):
    c = cat.build_cat(d4)
    for x in c.objects:
        for y in c.objects:
            assert c.tensor(c.identity(x), c.identity(y)) == c.identity(c.tensor_objects(x, y))


def test_compose_rejects_mismatch(d4):
    c = cat.build_cat(d4)
    f = c.identity(0)
    g = c.identity(1)
    with pytest.raises(ValueError):
        c.compose(g, f)


@pytest.mark.parametrize("name", sorted(SMALL))
def test_drinfeld_count_equals_centre(name):
    x = SMALL[name]
    z = ce.enumerate_centre(x)
    objects = cat.drinfeld_objects(cat.build_cat(x))
    assert len(objects) == len(z)
    res = cat.bijection_check(x, z, objects)
    assert res.report.ok and len(res.report.verdicts) == 4


def test_d4(d4, d4_centre):
    res = cat.bijection_check(d4, d4_centre)
    assert len(res.objects) == 16
    assert res.report.ok


def test_unit_is_a_centre_object(d4):
    c = cat.build_cat(d4)
    objects = cat.drinfeld_objects(c)
    unit = cat.HalfBraiding(0, tuple(0 for _ in c.objects))
    assert unit in objects
    for h in objects:
        assert cat.drinfeld_tensor(c, unit, h) == h == cat.drinfeld_tensor(c, h, unit)


def test_centre_tensor_closed(d4):
    c = cat.build_cat(d4)
    objects = set(cat.drinfeld_objects(c))
    for p in list(objects)[:5]:
        for q in objects:
            assert cat.drinfeld_tensor(c, p, q) in objects


def test_budget(d4):
    with pytest.raises(BudgetExceeded):
        cat.drinfeld_objects(cat.build_cat(d4), budget=10)


def test_symmetric_case_braiding_is_involutive():
    x = xm.to_trivial(gr.cyclic(4))
    c = cat.build_cat(x)
    objs = cat.drinfeld_objects(c)
    for p in objs:
        for q in objs:
            forward = cat.drinfeld_braiding(c, p, q)
            back = cat.drinfeld_braiding(c, q, p)
            assert c.compose(back, forward) == c.identity(forward.src)
