from __future__ import annotations

import json
from fractions import Fraction

import pytest

from xmodcentre import io
from xmodcentre.errors import CM1Violation, NotLie, ParseError


def test_corpus_listing():
    files = io.corpus_files()
    assert "aut_d4.json" in files and "sl2_adjoint.json" in files
    assert all(f.endswith(".json") for f in files)


@pytest.mark.parametrize("name", ["aut_d4", "aut_d4.json"])
def test_bare_names_resolve(name):
    inp = io.load(name)
    assert inp.kind == "xmod"
    assert inp.xmod.g1.order == 8


def test_missing_file():
    with pytest.raises(ParseError, match="no such file"):
        io.load("/nonexistent/thing.json")


def test_hints_and_relations():
    inp = io.load("aut_d4")
    assert set(inp.hints) == {"A", "B", "C"}
    assert "CA=AC" in inp.relations


def test_group_input():
    inp = io.loads('{"group": {"construct": "dihedral", "n": 3}}')
    assert inp.kind == "group" and inp.group.order == 6


def test_explicit_table():
    inp = io.loads(json.dumps({"group": {"order": 2, "table": [[0, 1], [1, 0]]}}))
    assert inp.group.order == 2


class TestErrors:
    def test_invalid_json_location(self):
        with pytest.raises(ParseError) as info:
            io.loads('{"group": \n  {"construct": }')
        assert info.value.location.startswith("line 2")

    def test_top_level(self):
        with pytest.raises(ParseError) as info:
            io.loads("[1, 2]")
        assert info.value.location == "$"

    def test_unknown_key(self):
        with pytest.raises(ParseError, match="expected one of"):
            io.loads('{"ring": {}}')

    def test_row_count(self):
        with pytest.raises(ParseError) as info:
            io.loads(json.dumps({"group": {"order": 3, "table": [[0, 1], [1, 0]]}}))
        assert info.value.location == "group.table"

    def test_boundary_length(self):
        spec = {"xmod": {"g1": {"construct": "cyclic", "n": 2}, "g0": {"construct": "cyclic", "n": 2}, "boundary": [0], "action": [[0, 1], [0, 1]]}}
        with pytest.raises(ParseError) as info:
            io.loads(json.dumps(spec))
        assert info.value.location == "xmod.boundary"

    def test_cm1_surfaces(self):
        s3 = {"construct": "dihedral", "n": 3}
        spec = {"xmod": {"g1": s3, "g0": s3, "boundary": list(range(6)), "action": [list(range(6))] * 6}}
        with pytest.raises(CM1Violation):
            io.loads(json.dumps(spec))

    def test_bad_field(self):
        with pytest.raises(ParseError) as info:
            io.parse_field({"Fp": 4})
        assert info.value.location == "lie_xmod.field"
        with pytest.raises(ParseError):
            io.parse_field("R")

    def test_bad_scalar(self):
        spec = {"lie_xmod": {"field": "Q", "l1": {"dim": 0}, "l0": {"dim": 1}, "boundary": [[1.5]]}}
        with pytest.raises(ParseError, match="rational string"):
            io.loads(json.dumps(spec))

    def test_not_lie(self):
        sc = [[[0, 0], [1, 0]], [[0, 0], [0, 0]]]  # [e0, e1] = e0 but [e1, e0] = 0
        spec = {"lie_xmod": {"field": "Q", "l1": {"dim": 0}, "l0": {"dim": 2, "sc": sc}, "boundary": []}}
        with pytest.raises(NotLie):
            io.loads(json.dumps(spec))


class TestLie:
    def test_fields(self):
        assert io.parse_field("Q").char == 0
        assert io.parse_field({"Fp": 7}).char == 7

    def test_rational_strings(self):
        sc = [[[0]]]
        spec = {"lie_xmod": {"field": "Q", "l1": {"dim": 1, "sc": sc}, "l0": {"dim": 1}, "boundary": [["1/2"]]}}
        x = io.loads(json.dumps(spec)).xmod
        assert x.d(x.l1.basis(0))[0] == Fraction(1, 2)

    def test_rational_mod_p(self):
        spec = {"lie_xmod": {"field": {"Fp": 5}, "l1": {"dim": 1}, "l0": {"dim": 1}, "boundary": [["1/2"]]}}
        x = io.loads(json.dumps(spec)).xmod
        assert x.d(x.l1.basis(0))[0] * 2 == x.field.one

    @pytest.mark.parametrize("name,dims", [("sl2_adjoint", (3, 3)), ("sl2_zero", (0, 3)), ("borel_ideal", (1, 2))])
    def test_corpus_dims(self, name, dims):
        x = io.load(name).xmod
        assert (x.l1.dim, x.l0.dim) == dims
