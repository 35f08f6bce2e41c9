"""Reading crossed modules of groups and Lie algebras from JSON.

Three top-level shapes are accepted::

    {"group": GROUP}
    {"xmod": XMOD}
    {"lie_xmod": LIE_XMOD}

``GROUP`` is either a construction (``{"construct": "dihedral", "n": 4}``) or
an explicit table (``{"order": N, "table": [[...]], "gens": [...]}``).

``XMOD`` is one of

* ``{"aut_of": GROUP}``, ``{"identity": GROUP}``, ``{"trivial_source": GROUP}``
  (``1 -> G``) or ``{"to_trivial": GROUP}`` (``G -> 1``);
* ``{"g1": GROUP, "g0": GROUP, "boundary": [...], "action": [[...]]}`` with
  full tables, or with ``"boundary_gens"`` / ``"action_gens"`` giving words
  for the images of generators.

An ``XMOD`` may also carry ``"name"``, ``"hints"`` (names for centre
elements, ``{"A": {"x": word, "xi": [word per generator of g0]}}``) and
``"relations"`` (words in those names that the centre should satisfy).

``LIE_XMOD`` is ``{"field": "Q" | {"Fp": p}, "l1": {"dim": n, "sc": ...},
"l0": {...}, "boundary": [[...]], "action": [[[...]]]}``. Missing ``sc`` or
``action`` tensors default to zero.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from importlib import resources
from pathlib import Path
from typing import Any

from . import groups as gr
from .errors import ParseError, UnsupportedSpec, XmodError
from .groups import FiniteGroup, GroupAction, GroupHom
from .lie.algebra import LieCrossedModule, make_lie, make_lie_xmod
from .lie.fields import Field
from .xmod import (
    CrossedModule,
    aut_xmod,
    identity_xmod,
    make_xmod,
    to_trivial,
    trivial_source,
)


@dataclass
class GroupInput:
    kind = "group"
    group: FiniteGroup
    source: Any = None


@dataclass
class XmodInput:
    kind = "xmod"
    xmod: CrossedModule
    hints: dict = field(default_factory=dict)  # name -> (x word, [xi words])
    relations: list = field(default_factory=list)
    source: Any = None


@dataclass
class LieInput:
    kind = "lie_xmod"
    xmod: LieCrossedModule
    source: Any = None


def _need(d, key, where):
    if not isinstance(d, dict):
        raise ParseError("expected an object", where)
    if key not in d:
        raise ParseError(f"missing key {key!r}", where)
    return d[key]


def _int(v, where):
    if isinstance(v, bool) or not isinstance(v, int):
        raise ParseError(f"expected an integer, got {v!r}", where)
    return v


def _list(v, where):
    if not isinstance(v, list):
        raise ParseError(f"expected a list, got {type(v).__name__}", where)
    return v


def parse_group(spec, where="group") -> FiniteGroup:
    if not isinstance(spec, dict):
        raise ParseError("a group must be an object", where)
    try:
        if "construct" in spec:
            return gr.construct_named(spec)
        order = _int(_need(spec, "order", where), f"{where}.order")
        table = _list(_need(spec, "table", where), f"{where}.table")
        if len(table) != order:
            raise ParseError(f"table has {len(table)} rows, expected {order}", f"{where}.table")
        for i, row in enumerate(table):
            _list(row, f"{where}.table[{i}]")
            for j, v in enumerate(row):
                _int(v, f"{where}.table[{i}][{j}]")
        gens = spec.get("gens")
        return gr.from_cayley(table, gens=gens, labels=spec.get("labels"), name=spec.get("name"))
    except (UnsupportedSpec, KeyError, TypeError, ValueError) as exc:
        raise ParseError(str(exc), where) from exc


def _word(g: FiniteGroup, w, where):
    if isinstance(w, int) and not isinstance(w, bool):
        if not 0 <= w < g.order:
            raise ParseError(f"element index {w} out of range", where)
        return w
    if not isinstance(w, str):
        raise ParseError(f"expected a word or an index, got {w!r}", where)
    try:
        return g.element(w)
    except ValueError as exc:
        raise ParseError(str(exc), where) from exc


def parse_xmod(spec, where="xmod") -> XmodInput:
    if not isinstance(spec, dict):
        raise ParseError("a crossed module must be an object", where)
    name = spec.get("name", "")
    shortcuts = {"aut_of": aut_xmod, "identity": identity_xmod, "trivial_source": trivial_source, "to_trivial": to_trivial}
    for key, build in shortcuts.items():
        if key in spec:
            g = parse_group(spec[key], f"{where}.{key}")
            x = build(g)
            if name:
                x = replace(x, name=name)
            return XmodInput(x, _hints(spec, where), spec.get("relations", []), spec)
    g1 = parse_group(_need(spec, "g1", where), f"{where}.g1")
    g0 = parse_group(_need(spec, "g0", where), f"{where}.g0")
    if "boundary_gens" in spec:
        words = _list(spec["boundary_gens"], f"{where}.boundary_gens")
        if len(words) != len(g1.gens):
            raise ParseError(f"need {len(g1.gens)} boundary images", f"{where}.boundary_gens")
        images = [_word(g0, w, f"{where}.boundary_gens[{i}]") for i, w in enumerate(words)]
        boundary = gr.hom_from_generator_images(g1, g0, images)
    else:
        table = _list(_need(spec, "boundary", where), f"{where}.boundary")
        if len(table) != g1.order:
            raise ParseError(f"boundary needs {g1.order} entries", f"{where}.boundary")
        boundary = GroupHom(g1, g0, [_word(g0, w, f"{where}.boundary[{i}]") for i, w in enumerate(table)])
    if "action_gens" in spec:
        rows = _list(spec["action_gens"], f"{where}.action_gens")
        if len(rows) != len(g0.gens) or any(len(_list(r, f"{where}.action_gens")) != len(g1.gens) for r in rows):
            raise ParseError(f"need a {len(g0.gens)}x{len(g1.gens)} table of images", f"{where}.action_gens")
        images = [[_word(g1, w, f"{where}.action_gens[{i}][{j}]") for j, w in enumerate(r)] for i, r in enumerate(rows)]
        action = gr.action_from_generator_images(g0, g1, images)
    else:
        rows = _list(_need(spec, "action", where), f"{where}.action")
        if len(rows) != g0.order or any(len(_list(r, f"{where}.action")) != g1.order for r in rows):
            raise ParseError(f"action needs a {g0.order}x{g1.order} table", f"{where}.action")
        table = [[_word(g1, w, f"{where}.action[{i}][{j}]") for j, w in enumerate(r)] for i, r in enumerate(rows)]
        action = GroupAction(g0, g1, table)
    x = make_xmod(g1, g0, boundary, action, name=name)
    return XmodInput(x, _hints(spec, where), spec.get("relations", []), spec)


def _hints(spec, where):
    hints = spec.get("hints", {})
    if not isinstance(hints, dict):
        raise ParseError("hints must be an object", f"{where}.hints")
    out = {}
    for k, v in hints.items():
        out[k] = (_need(v, "x", f"{where}.hints.{k}"), _list(_need(v, "xi", f"{where}.hints.{k}"), f"{where}.hints.{k}.xi"))
    return out


def parse_field(spec, where="lie_xmod.field") -> Field:
    try:
        if spec == "Q":
            return Field(0)
        if isinstance(spec, dict) and "Fp" in spec:
            return Field(_int(spec["Fp"], f"{where}.Fp"))
    except UnsupportedSpec as exc:
        raise ParseError(str(exc), where) from exc
    raise ParseError(f"field must be \"Q\" or {{\"Fp\": p}}, got {spec!r}", where)


def _zeros(*shape):
    if len(shape) == 1:
        return [0] * shape[0]
    return [_zeros(*shape[1:]) for _ in range(shape[0])]


def _scalars(v, where):
    """Nested lists of ints or rational strings such as ``"1/2"``."""
    if isinstance(v, list):
        return [_scalars(x, f"{where}[{i}]") for i, x in enumerate(v)]
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise ParseError(f"expected an integer or a rational string, got {v!r}", where)
    return v


def parse_lie_algebra(spec, fld: Field, where):
    dim = _int(_need(spec, "dim", where), f"{where}.dim")
    sc = _scalars(spec.get("sc", _zeros(dim, dim, dim)), f"{where}.sc")
    try:
        return make_lie(dim, sc, fld, spec.get("labels"))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(str(exc), where) from exc


def parse_lie_xmod(spec, where="lie_xmod") -> LieInput:
    fld = parse_field(_need(spec, "field", where), f"{where}.field")
    l1 = parse_lie_algebra(_need(spec, "l1", where), fld, f"{where}.l1")
    l0 = parse_lie_algebra(_need(spec, "l0", where), fld, f"{where}.l0")
    boundary = _scalars(_need(spec, "boundary", where), f"{where}.boundary")
    action = _scalars(spec.get("action", _zeros(l0.dim, l1.dim, l1.dim)), f"{where}.action")
    try:
        x = make_lie_xmod(l1, l0, boundary, action, spec.get("name", ""))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(str(exc), where) from exc
    return LieInput(x, spec)


def parse(obj):
    if not isinstance(obj, dict):
        raise ParseError("top level must be an object", "$")
    if "lie_xmod" in obj:
        return parse_lie_xmod(obj["lie_xmod"])
    if "xmod" in obj:
        return parse_xmod(obj["xmod"])
    if "group" in obj:
        return GroupInput(parse_group(obj["group"]), obj)
    raise ParseError("expected one of the keys 'group', 'xmod', 'lie_xmod'", "$")


def loads(text: str):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", f"line {exc.lineno} column {exc.colno}") from exc
    return parse(obj)


def load(path):
    """Parse a file; a bare name is also looked up in the bundled corpus."""
    p = Path(path)
    if not p.exists():
        name = p.name if p.suffix == ".json" else f"{p.name}.json"
        bundled = resources.files("xmodcentre") / "corpus" / name
        if not bundled.is_file():
            raise ParseError(f"no such file: {path}")
        return loads(bundled.read_text())
    return loads(p.read_text())


def corpus_files() -> list:
    root = resources.files("xmodcentre") / "corpus"
    return sorted(f.name for f in root.iterdir() if f.name.endswith(".json"))


def load_corpus(name: str):
    return loads((resources.files("xmodcentre") / "corpus" / name).read_text())


__all__ = [
    "GroupInput",
    "LieInput",
    "ParseError",
    "XmodError",
    "XmodInput",
    "corpus_files",
    "load",
    "load_corpus",
    "loads",
    "parse",
]
