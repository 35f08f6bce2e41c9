from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from xmodcentre.errors import UnsupportedSpec
from xmodcentre.lie import GF, QQ, Field, oracle
from xmodcentre.lie import linalg as la

FIELDS = [QQ, GF(3), GF(5), GF(7)]


def matrices(max_rows=4, max_cols=5):
    entry = st.integers(-3, 3)
    return st.integers(1, max_cols).flatmap(
        lambda n: st.tuples(st.just(n), st.lists(st.lists(entry, min_size=n, max_size=n), max_size=max_rows))
    )


class TestFields:
    def test_residue_arithmetic(self):
        F = GF(5)
        a, b = F(3), F(4)
        assert a + b == F(2)
        assert a * b == F(2)
        assert a / b == F(2)
        assert -a == F(2)
        assert int(F(-1)) == 4

    def test_rational_strings(self):
        assert QQ("1/2") == Fraction(1, 2)
        assert GF(5)("1/2") == GF(5)(3)

    @pytest.mark.parametrize("p", [2, 4, 9, 1])
    def test_rejects(self, p):
        with pytest.raises(UnsupportedSpec):
            Field(p)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            GF(3)(1) / GF(3)(3)

    def test_mixed_primes(self):
        with pytest.raises(ValueError):
            GF(3)(1) + GF(5)(1)


@pytest.mark.parametrize("fld", FIELDS, ids=lambda f: f.name)
@settings(max_examples=30, deadline=None)
@given(data=matrices())
def test_nullspace_against_sympy(fld, data):
    n, rows = data
    rows = [[fld(c) for c in r] for r in rows]
    ours = la.nullspace(rows, n, fld)
    assert len(ours) == len(oracle.dense_nullspace(rows, n, fld))
    for v in ours:
        assert all(x == 0 for x in la.matvec(rows, v, fld))
    assert la.rank(ours, n, fld) == len(ours)


@pytest.mark.parametrize("fld", FIELDS, ids=lambda f: f.name)
@settings(max_examples=30, deadline=None)
@given(data=matrices())
def test_rank_against_sympy(fld, data):
    n, rows = data
    rows = [[fld(c) for c in r] for r in rows]
    assert la.rank(rows, n, fld) == oracle.dense_rank(rows, n, fld)


@settings(max_examples=30, deadline=None)
@given(data=matrices(), coeffs=st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_solve_recovers_combination(data, coeffs):
    n, rows = data
    cols = [[QQ(c) for c in r] for r in rows]
    if not cols:
        return
    target = la.combine([QQ(c) for c in coeffs[: len(cols)]], cols, QQ, n)
    y = la.solve(cols, target, QQ)
    assert y is not None
    assert la.combine(y, cols, QQ, n) == target


def test_solve_inconsistent():
    assert la.solve([[QQ(1), QQ(0)]], [QQ(0), QQ(1)], QQ) is None


def test_deterministic_basis():
    rows = [[QQ(1), QQ(2), QQ(3)]]
    assert la.nullspace(rows, 3, QQ) == la.nullspace(rows, 3, QQ)
    assert len(la.nullspace(rows, 3, QQ)) == 2


def test_quotient():
    K = [[QQ(1), QQ(0), QQ(0)], [QQ(0), QQ(1), QQ(0)]]
    B = [[QQ(1), QQ(1), QQ(0)]]
    q = la.quotient(K, B, 3, QQ)
    assert q.dim == 1
    assert q.coordinates([QQ(2), QQ(2), QQ(0)]) == [QQ(0)]
    with pytest.raises(ValueError):
        q.coordinates([QQ(0), QQ(0), QQ(1)])


def test_same_span():
    u = [[QQ(1), QQ(1)]]
    assert la.same_span(u, [[QQ(2), QQ(2)]], 2, QQ)
    assert not la.same_span(u, [[QQ(1), QQ(0)]], 2, QQ)
