"""Facts gathered by the command line front end.

Every command builds a list of :class:`Section` objects once. The text and
JSON renderings are both produced from those objects, so the two formats
always carry the same facts.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from . import catoracle as cat
from . import centre as ce
from . import cohom as co
from . import groups as gr
from . import norrie as nr
from . import xmod as xm
from .checks import Report
from .errors import CheckFailure, ParseError
from .lie import oracle as lo
from .lie.algebra import lie_xmod_witness
from .lie.centre import lie_centre, lie_homotopy, lie_xmod_homotopy
from .lie.fields import Residue
from .lie.sequence import lie_exact_sequence_check

INTERCHANGE_LIMIT = 5000  # composable pairs; the check is quadratic in this

SEQUENCE_NAMES = {
    "h1_order": "|H1(π0(X), π1(X))|",
    "pi0z_order": "|π0(Z_*)|",
    "stabiliser_order": "|Z_π1(π0)|",
    "h2_order": "|H2(G0, π1(X))|",
    "im_f": "|Im f|",
    "im_omega": "|Im ω|",
    "ker_g": "|Ker g|",
}
DIAGRAM_NAMES = {"der_order": "|Der(G0, G1)|", "h1_order": "|H1(G0, X)|", "z0_order": "|Z0|"}
LIE_SEQUENCE_NAMES = {
    "h1_dim": "dim H1(π0, π1)",
    "pi0z_dim": "dim π0(Z_*)",
    "stabiliser_dim": "dim Z_π1(π0)",
    "h2_dim": "dim H2(L0, π1)",
    "im_f": "rank f",
    "im_omega": "rank ω",
    "ker_g": "dim Ker g",
}


def plain(v: Any):
    """JSON-ready copy of ``v``."""
    if isinstance(v, bool) or v is None or isinstance(v, (int, str)):
        return v
    if isinstance(v, Residue):
        return int(v)
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else str(v)
    if isinstance(v, dict):
        return {str(k): plain(x) for k, x in v.items()}
    if isinstance(v, (list, tuple, set, frozenset)):
        items = sorted(v) if isinstance(v, (set, frozenset)) else v
        return [plain(x) for x in items]
    return str(v)


def fmt(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(fmt(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{fmt(k)} -> {fmt(x)}" for k, x in v.items()) + "}"
    return str(v)


@dataclass
class Table:
    title: str
    rows: list
    cols: list
    cells: list

    def to_json(self):
        return {"title": self.title, "rows": self.rows, "cols": self.cols, "cells": plain(self.cells)}

    def text_lines(self):
        cells = [[fmt(c) for c in row] for row in self.cells]
        width = max([len(str(s)) for s in self.rows + self.cols] + [len(c) for row in cells for c in row] + [1])
        yield f"{self.title}:"
        yield " " * (width + 2) + " ".join(str(c).rjust(width) for c in self.cols)
        for r, row in zip(self.rows, cells):
            yield "  " + str(r).rjust(width) + " " + " ".join(c.rjust(width) for c in row)


@dataclass
class Section:
    title: str
    facts: list = field(default_factory=list)  # (name, relation, value)
    checks: list = field(default_factory=list)  # (name, ok, message, witness)
    tables: list = field(default_factory=list)

    def fact(self, name, value, rel="="):
        self.facts.append((name, rel, value))

    def check(self, name, ok, message="", witness=None):
        self.checks.append((name, bool(ok), message, witness))

    def report(self, rep: Report, prefix=""):
        for name, v in rep.verdicts.items():
            self.check(prefix + name, v.ok, v.message, v.witness)

    @property
    def ok(self):
        return all(c[1] for c in self.checks)

    def to_json(self):
        return {
            "title": self.title,
            "facts": [{"name": n, "rel": r, "value": plain(v)} for n, r, v in self.facts],
            "checks": [{"name": n, "ok": ok, "message": m, "witness": plain(w)} for n, ok, m, w in self.checks],
            "tables": [t.to_json() for t in self.tables],
        }

    def text_lines(self):
        yield f"== {self.title} =="
        for n, r, v in self.facts:
            yield f"{n} {r} {fmt(v)}"
        for t in self.tables:
            yield from t.text_lines()
        for n, ok, m, w in self.checks:
            line = f"{'PASS' if ok else 'FAIL'} {n}"
            if not ok and m:
                line += f": {m}"
            if not ok and w is not None:
                line += f" (witness {fmt(plain(w))})"
            yield line


@dataclass
class Options:
    oracle: bool = False
    seed: int = 1
    budget: int | None = None

    @property
    def seeds(self):
        return (self.seed, self.seed + 1, self.seed + 2)


# -- naming elements of Z0 -----------------------------------------------------------


def _compress(word):
    """``["A", "A", "B"]`` -> ``"A^2B"``."""
    out, i = [], 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        n = j - i
        sym = word[i]
        if sym.endswith("^-1"):
            base = sym[:-3]
            out.append(f"{base}^-{n}" if n > 1 else sym)
        else:
            out.append(f"{sym}^{n}" if n > 1 else sym)
        i = j
    return "".join(out) or "1"


def shortest_words(g: gr.FiniteGroup, names: dict) -> dict:
    """Element -> shortest word in ``names`` and their inverses (breadth first)."""
    steps = [(n, k) for n, k in names.items()]
    steps += [(f"{n}^-1", g.inv[k]) for n, k in names.items() if g.inv[k] != k]
    words = {0: []}
    queue = deque([0])
    while queue:
        e = queue.popleft()
        for sym, k in steps:
            f = g.mul[e][k]
            if f not in words:
                words[f] = words[e] + [sym]
                queue.append(f)
    return {e: _compress(w) for e, w in words.items()}


@dataclass
class NamedCentre:
    z: ce.CentreGroup
    names: dict  # name -> element index
    words: dict  # element index -> word
    from_hints: bool


def name_centre(z: ce.CentreGroup, hints: dict) -> NamedCentre:
    x = z.xmod
    names = {}
    for name, (xw, xi_words) in hints.items():
        if len(xi_words) != len(x.g0.gens):
            raise ParseError(f"{name} needs one ξ value per generator of G0", f"hints.{name}")
        try:
            y = x.g0.element(xw)
            values = [x.g1.element(w) for w in xi_words]
        except ValueError as exc:
            raise ParseError(str(exc), f"hints.{name}") from exc
        k = z.by_generators(y, values)
        if k is None:
            raise CheckFailure("hints", f"{name} is not an element of Z0", name)
        names[name] = k
    from_hints = bool(names)
    if not names:
        names = {f"Z{i + 1}": k for i, k in enumerate(z.group.gens)}
    words = shortest_words(z.group, names)
    if len(words) != z.group.order:
        raise CheckFailure("hints", "named elements do not generate Z0", sorted(names))
    return NamedCentre(z, names, words, from_hints)


# -- group sections ---------------------------------------------------------------------


def group_sections(g: gr.FiniteGroup, opts: Options) -> list:
    s = Section("group")
    s.fact("order", g.order)
    s.fact(g.name or "G", gr.identify(g), "≅")
    s.fact("generators", [g.label(k) for k in g.gens])
    s.fact("abelian", g.is_abelian())
    s.fact("centre", [g.label(k) for k in gr.centre_of(g)])
    s.check("group axioms", True)
    return [s]


def _labels(g, elems):
    return "{" + ", ".join(g.label(e) for e in sorted(elems)) + "}"


def verify_section(x: xm.CrossedModule) -> Section:
    s = Section(f"crossed module {x.name}".strip())
    s.fact("|G1|", x.g1.order)
    s.fact("|G0|", x.g0.order)
    s.fact("G1", gr.identify(x.g1), "≅")
    s.fact("G0", gr.identify(x.g0), "≅")
    s.fact("Im ∂", _labels(x.g0, x.boundary.image()))
    s.fact("Ker ∂", _labels(x.g1, x.boundary.kernel()))
    s.check("CM1", True)
    s.check("CM2", True)
    image = x.boundary.image()
    s.check("Im ∂ normal in G0", gr.is_normal(x.g0, image), "not normal", gr.normality_witness(x.g0, image))
    centre = set(gr.centre_of(x.g1))
    bad = [a for a in x.boundary.kernel() if a not in centre]
    s.check("Ker ∂ central in G1", not bad, "kernel element off the centre", bad[:1] or None)
    v = xm.action_well_defined(x)
    s.check("π0 acts on π1", v.ok, v.message, v.witness)
    return s


def centre_section(x: xm.CrossedModule, hints: dict, relations: list, opts: Options, nc: NamedCentre | None = None):
    z = nc.z if nc else ce.enumerate_centre(x)
    nc = nc or name_centre(z, hints)
    words = nc.words
    s = Section("centre")
    s.fact("|Z0|", len(z))
    s.fact("Z0", gr.identify(z.group), "≅")
    for name, k in nc.names.items():
        s.fact(name, gr_label(z, k))
    for rel in relations:
        ok = gr.check_relation(z.group, rel, nc.names)
        s.check(f"relation {rel}", ok, "does not hold in Z0")
    for c in x.g1.gens:
        s.fact(f"δ({x.g1.label(c)})", words[ce.delta_xmod(z).boundary.map[c]])
    zx = ce.z0_xmod(z)
    for w in x.g0.gens:
        for name, k in nc.names.items():
            s.fact(f"^{x.g0.label(w)}{name}", words[zx.act(w, k)])
    bcm = ce.braiding(z)
    gens = list(nc.names.items())
    s.tables.append(
        Table(
            "bracket {P, Q} (row P, column Q)",
            [n for n, _ in gens],
            [n for n, _ in gens],
            [[x.g1.label(bcm.bracket[p][q]) for _, q in gens] for _, p in gens],
        )
    )
    s.fact("braided", bcm.is_braided)
    s.fact("symmetric", bcm.is_symmetric)
    s.fact("is_rqm", bcm.is_rqm)
    s.fact("factors_through_tensor", bcm.factors_through_tensor)
    s.check("z0: Z0 -> G0 is a crossed module", True)
    s.check("δ: G1 -> Z0 is a crossed module", True)
    for axiom, w in ce.bcm_axiom_witnesses(bcm.base, bcm.bracket).items():
        s.check(axiom, w is None, "fails", w)
    w = ce.action_from_bracket_witness(bcm.base, bcm.bracket)
    s.check("^P a = {P, ∂a} a", w is None, "fails", w)
    v = ce.check_centre_morphism(z)
    s.check("(id, z0): Z_* -> X is a morphism", v.ok, v.message, v.witness)
    if opts.oracle:
        budget = ce.ORACLE_BUDGET if opts.budget is None else opts.budget
        size = x.g1.order**x.g0.order
        if size > budget:
            s.fact("|Z0| (oracle)", f"skipped (|G1|^|G0| = {x.g1.order}^{x.g0.order} exceeds {budget})")
        else:
            found = ce.centre_oracle(x, budget=budget)
            s.fact("|Z0| (oracle)", len(found))
            s.check("oracle agrees with the enumeration", found == set(z.elements), "sets differ")
    return s


def gr_label(z: ce.CentreGroup, k):
    return ce._element_label(z.xmod, z.elements[k])


def invariants_section(x: xm.CrossedModule, z: ce.CentreGroup) -> Section:
    s = Section("homotopy invariants")
    h = xm.homotopy(x)
    hz = ce.centre_homotopy(z)
    s.fact("π0(X)", gr.identify(h.pi0), "≅")
    s.fact("π1(X)", gr.identify(h.pi1), "≅")
    s.fact("π0(Z_*)", gr.identify(hz.pi0), "≅")
    s.fact("π1(Z_*)", gr.identify(hz.pi1), "≅")
    s.fact("H0(π0(X), π1(X))", _labels(x.g1, hz.h0))
    s.fact("π1(Z_*) -> H0", {x.g1.label(a): x.g1.label(b) for a, b in hz.bijection.items()})
    s.check("π1(Z_*) = H0(π0(X), π1(X))", set(hz.bijection) == set(hz.h0), "sets differ")
    kz = co.kernel_z0_bijection(x, z)
    s.fact("|Der(π0(X), π1(X))|", len(kz))
    s.fact("|Ker z0|", len(z.to_g0.kernel()))
    s.check("Der(π0, π1) -> Ker z0 is a bijection", True)
    s.check("π0(Z_*) abelian", hz.pi0.is_abelian(), "not abelian")
    trivial = all(x.act(e.x, a) == a for e in z.elements for a in hz.inclusion.map)
    s.check("π0(Z_*) acts trivially on π1(Z_*)", trivial, "nontrivial action")
    v = cat.homotopy_matches(cat.build_cat(x))
    s.check("groupoid π0, π1 match π0(X), π1(X)", v.ok, v.message)
    return s


def cohomology_section(x: xm.CrossedModule, z: ce.CentreGroup, opts: Options) -> Section:
    s = Section("cohomology")
    p = co.prop15_check(x, seeds=opts.seeds, z=z)
    for k, v in p.report.data.items():
        s.fact(SEQUENCE_NAMES.get(k, k), v)
    s.report(p.report, "sequence: ")
    s.check(f"θ̄ class independent of ψ (seeds {list(opts.seeds)})", True)
    d = co.diagram_check(x, z)
    for k, v in d.data.items():
        if k != "z0_order":
            s.fact(DIAGRAM_NAMES.get(k, k), v)
    s.report(d, "diagram: ")
    st = ce.seven_term_check(z)
    for k, v in st.data["orders"].items():
        s.fact(f"|{k}|", v)
    s.report(st, "seven-term: ")
    return s


def norrie_section(x: xm.CrossedModule, z: ce.CentreGroup) -> Section:
    s = Section("Norrie centre")
    nc = nr.norrie_centre(x)
    top = _labels(x.g1, nc.top_inclusion.map)
    bottom = _labels(x.g0, nc.bottom_inclusion.map)
    s.fact("Z^Nor", f"{top} -> {bottom}")
    _, rep = nr.norrie_compare(x, z)
    for k, v in rep.data.items():
        s.fact(k, v)
    s.report(rep)
    return s


def drinfeld_section(x: xm.CrossedModule, z: ce.CentreGroup, opts: Options) -> Section:
    s = Section("Drinfeld centre")
    kw = {} if opts.budget is None else {"budget": opts.budget}
    res = cat.bijection_check(x, z, **kw)
    s.fact("half-braidings", len(res.objects))
    s.fact("|Z0|", len(z))
    s.check("half-braidings = |Z0|", len(res.objects) == len(z))
    s.report(res.report)
    c = cat.build_cat(x)
    pairs = x.g0.order * x.g1.order**2
    if pairs <= INTERCHANGE_LIMIT:
        w = cat.interchange_witness(c)
        s.check("interchange law in Cat(X)", w is None, "fails", w)
    else:
        s.fact("interchange law", f"skipped ({pairs} composable pairs)")
    return s


def xmod_sections(command: str, inp, opts: Options) -> list:
    x = inp.xmod
    if command == "verify":
        return [verify_section(x)]
    z = ce.enumerate_centre(x)
    nc = name_centre(z, inp.hints)
    out = []
    if command in ("centre", "report"):
        out.append(centre_section(x, inp.hints, inp.relations, opts, nc))
    if command in ("invariants", "report"):
        out.append(invariants_section(x, z))
    if command in ("cohomology", "report"):
        out.append(cohomology_section(x, z, opts))
    if command in ("norrie", "report"):
        out.append(norrie_section(x, z))
    if command in ("drinfeld-check", "report"):
        out.append(drinfeld_section(x, z, opts))
    if command == "report":
        out.insert(0, verify_section(x))
    return out


# -- Lie sections ---------------------------------------------------------------------


def _vec(v, labels):
    terms = []
    for c, lab in zip(v, labels):
        if c == 0:
            continue
        coeff = "" if c == 1 else "-" if c == -1 else f"{c} "
        terms.append(f"{coeff}{lab}")
    return " + ".join(terms).replace("+ -", "- ") or "0"


def lie_verify_section(x) -> Section:
    s = Section(f"Lie crossed module {x.name}".strip())
    s.fact("field", x.field.name)
    s.fact("dim L1", x.l1.dim)
    s.fact("dim L0", x.l0.dim)
    bad = lie_xmod_witness(x)
    s.check("crossed module identities", bad is None, bad[1] if bad else "", bad[2] if bad else None)
    pi0, _, kern = lie_xmod_homotopy(x)
    s.fact("dim π0", pi0.dim)
    s.fact("dim π1", len(kern))
    return s


def lie_centre_section(x, opts: Options, z=None) -> Section:
    z = z or lie_centre(x)
    s = Section("Lie centre")
    s.fact("dim Z0", z.dim)
    l0, l1 = x.l0.labels, x.l1.labels
    for i in range(z.dim):
        p = z.pair(i)
        xi = ", ".join(f"{t} -> {_vec(p.xi[k], l1)}" for k, t in enumerate(l0))
        s.fact(f"z{i}", f"({_vec(p.x, l0)}; {xi})")
    names = [f"z{i}" for i in range(z.dim)]
    for i in range(z.dim):
        for j in range(i + 1, z.dim):
            v = z.algebra.sc[i][j]
            if any(c != 0 for c in v):
                s.fact(f"[z{i}, z{j}]", _vec(v, names))
    for c in range(x.l1.dim):
        s.fact(f"δ({l1[c]})", _vec(z.delta_matrix[c], names))
    if z.dim:
        s.tables.append(Table("braiding {z_i, z_j} in L1", names, names, [[_vec(b, l1) for b in row] for row in z.braid]))
    s.report(z.report)
    s.report(z.bcm.report, "braided: ")
    hz = lie_homotopy(z, x)
    s.fact("dim π0(Z_*)", hz.pi0.dim)
    s.fact("dim π1(Z_*)", hz.pi1.dim)
    s.check("π1(Z_*) = H0(π0, π1)", len(hz.bijection) == len(hz.h0_basis))
    if opts.oracle:
        d = lo.centre_dimension(x)
        s.fact("dim Z0 (oracle)", d)
        s.check("oracle dimension agrees", d == z.dim)
    return s


def lie_sequence_section(x, opts: Options, z=None) -> Section:
    s = Section("Lie exact sequence")
    data = lie_exact_sequence_check(x, seeds=opts.seeds, z=z)
    for k, v in data.report.data.items():
        s.fact(LIE_SEQUENCE_NAMES.get(k, k), v)
    s.report(data.report)
    s.check(f"class of θ independent of ψ (seeds {list(opts.seeds)})", True)
    return s


def lie_sections(command: str, inp, opts: Options) -> list:
    x = inp.xmod
    if command == "verify":
        return [lie_verify_section(x)]
    z = lie_centre(x)
    out = []
    if command == "report":
        out.append(lie_verify_section(x))
    if command in ("lie-centre", "invariants", "report"):
        out.append(lie_centre_section(x, opts, z))
    if command in ("lie-centre", "cohomology", "report"):
        out.append(lie_sequence_section(x, opts, z))
    return out


GROUP_COMMANDS = ("verify", "report")
XMOD_COMMANDS = ("verify", "centre", "invariants", "cohomology", "norrie", "drinfeld-check", "report")
LIE_COMMANDS = ("verify", "lie-centre", "invariants", "cohomology", "report")
