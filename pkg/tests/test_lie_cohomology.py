from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from xmodcentre.errors import AxiomViolation
from xmodcentre.lie import GF, QQ, lie_cohomology
from xmodcentre.lie import algebra as al
from xmodcentre.lie import cohomology as lc
from xmodcentre.lie import linalg as la

FIELDS = [QQ, GF(5)]


@pytest.mark.parametrize("fld", FIELDS, ids=lambda f: f.name)
class TestExamples:
    def test_h0_trivial(self, fld):
        m = lc.trivial_module(al.abelian(2, fld), 1)
        assert lie_cohomology(m, 0).dim == 1

    def test_h1_line(self, fld):
        m = lc.trivial_module(al.abelian(1, fld), 1)
        assert lie_cohomology(m, 1).dim == 1

    def test_h2_plane(self, fld):
        m = lc.trivial_module(al.abelian(2, fld), 1)
        assert lie_cohomology(m, 2).dim == 1

    def test_sl2_adjoint(self, fld):
        # Whitehead: H^0, H^1, H^2 of sl2 with coefficients in the adjoint module vanish
        m = lc.adjoint_module(al.sl2(fld))
        assert [lie_cohomology(m, k).dim for k in range(3)] == [0, 0, 0]

    def test_sl2_trivial(self, fld):
        m = lc.trivial_module(al.sl2(fld), 1)
        assert [lie_cohomology(m, k).dim for k in range(3)] == [1, 0, 0]

    def test_abelian3_trivial(self, fld):
        m = lc.trivial_module(al.abelian(3, fld), 1)
        assert [lie_cohomology(m, k).dim for k in range(3)] == [1, 3, 3]


def test_bad_module_rejected():
    # a 1-dim representation of sl2 must be trivial
    g = al.sl2()
    rho = [[[1]], [[0]], [[0]]]
    with pytest.raises(AxiomViolation):
        lc.make_module(g, 1, rho)


def test_degree_out_of_range():
    with pytest.raises(ValueError):
        lie_cohomology(lc.trivial_module(al.abelian(1), 1), 3)


def test_d_squared_is_zero():
    for m in (lc.adjoint_module(al.sl2()), lc.trivial_module(al.abelian(3), 2)):
        cc = lc.Cochains(m)
        for k in (0, 1):
            for j in range(cc.size(k)):
                e = [QQ(1) if i == j else QQ(0) for i in range(cc.size(k))]
                assert not any(cc.d(k + 1, cc.d(k, e)))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_coboundaries_classify_as_zero(seed):
    rng = random.Random(seed)
    m = lc.trivial_module(al.abelian(3), 2)
    H = lie_cohomology(m, 2)
    cc = H.cochains
    c1 = [QQ(rng.randint(-5, 5)) for _ in range(cc.size(1))]
    b = cc.d(1, c1)
    for idx, rep in enumerate(H.representatives):
        moved = [x + y for x, y in zip(rep, b)]
        want = [QQ(1) if i == idx else QQ(0) for i in range(H.dim)]
        assert H.classify(moved) == want


def test_representatives_are_cocycles():
    m = lc.trivial_module(al.abelian(3), 1)
    H = lie_cohomology(m, 2)
    assert all(H.is_cocycle(r) for r in H.representatives)
    assert la.rank(H.representatives, H.cochains.size(2), QQ) == H.dim
