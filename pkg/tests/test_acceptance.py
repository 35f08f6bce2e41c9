"""Acceptance criteria 1-6, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py`` (the lines are printed even when
output capture is on) or directly with ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import itertools
import sys

import pytest

from xmodcentre import catoracle as cat
from xmodcentre import centre as ce
from xmodcentre import cohom as co
from xmodcentre import groups as gr
from xmodcentre import io
from xmodcentre import norrie as nr
from xmodcentre import xmod as xm
from xmodcentre.lie import GF, QQ, lie_centre, lie_exact_sequence_check
from xmodcentre.lie import algebra as la_alg
from xmodcentre.lie import oracle as lie_oracle
from xmodcentre.lie.centre import lemma_identity_witness, lie_homotopy
from xmodcentre.reporting import name_centre

ORACLE_LIMIT = 10**8


class Criterion:
    """Collects named sub-checks and prints a single verdict line."""

    def __init__(self, number: int, title: str):
        self.number, self.title = number, title
        self.failures: list[str] = []
        self.count = 0

    def expect(self, ok, what: str):
        self.count += 1
        if not ok:
            self.failures.append(what)

    def line(self) -> str:
        head = f"criterion {self.number} ({self.title}): {self.count} checks"
        if not self.failures:
            return f"PASS {head}"
        return f"FAIL {head}, failing: {'; '.join(self.failures[:5])}"


def _emit(c: Criterion, capsys=None):
    text = c.line()
    if capsys is not None:
        with capsys.disabled():
            print(f"\n{text}")
    else:
        print(text)
    assert not c.failures, text


def _group_corpus():
    out = {}
    for f in io.corpus_files():
        inp = io.load_corpus(f)
        if inp.kind == "xmod":
            out[f] = inp.xmod
    return out


def _lie_corpus():
    out = {}
    for f in io.corpus_files():
        inp = io.load_corpus(f)
        if inp.kind == "lie_xmod":
            out[f] = inp.xmod
    return out


def _cm_axioms_hold(x: xm.CrossedModule) -> bool:
    """CM1 and CM2 straight from the tables."""
    g0, g1 = x.g0, x.g1
    hom = all(x.d(g1.mul[a][b]) == g0.mul[x.d(a)][x.d(b)] for a in g1 for b in g1)
    act = all(x.act(0, a) == a for a in g1) and all(
        x.act(g0.mul[s][t], a) == x.act(s, x.act(t, a)) for s in g0 for t in g0 for a in g1
    )
    cm1 = all(x.d(x.act(t, a)) == g0.conj(t, x.d(a)) for t in g0 for a in g1)
    cm2 = all(x.act(x.d(b), a) == g1.conj(b, a) for a in g1 for b in g1)
    return hom and act and cm1 and cm2


# -- criterion 1 -----------------------------------------------------------------------


def criterion_1() -> Criterion:
    c = Criterion(1, "D4 example")
    inp = io.load_corpus("aut_d4.json")
    x = inp.xmod
    z = ce.enumerate_centre(x)
    c.expect(len(z) == 16, "|Z0| = 16")
    c.expect(gr.iso_test(z.group, gr.direct_product(gr.cyclic(2), gr.dihedral(4))) is not None, "Z0 ≅ C2 x D4")

    names = name_centre(z, inp.hints).names
    for rel in ("C^2=1", "B^2=1", "A^4=1", "BAB=A^3", "CA=AC", "CB=BC"):
        c.expect(gr.check_relation(z.group, rel, names), f"relation {rel}")

    def el(word):
        return gr.evaluate_word(z.group, word, names)

    dx = ce.delta_xmod(z)
    g1 = x.g1
    c.expect(dx.boundary.map[g1.element("a")] == el("A^2"), "δ(a) = A^2")
    c.expect(dx.boundary.map[g1.element("b")] == el("BC"), "δ(b) = BC")

    ch = ce.centre_homotopy(z)
    c.expect(gr.identify(ch.pi0) == "C2 x C2", "π0(Z_*) ≅ C2 x C2")
    c.expect(ch.pi1.order == 2, "π1(Z_*) ≅ C2")

    bcm = ce.braiding(z)
    expected = {
        ("A", "A"): "a^2", ("A", "B"): "a", ("A", "C"): "1",
        ("B", "A"): "a", ("B", "B"): "1", ("B", "C"): "1",
        ("C", "A"): "a^2", ("C", "B"): "1", ("C", "C"): "1",
    }  # fmt: skip
    for (p, q), v in expected.items():
        c.expect(bcm.bracket[names[p]][names[q]] == g1.element(v), f"{{{p},{q}}} = {v}")
    c.expect(bcm.is_rqm, "is_rqm")

    zx = ce.z0_xmod(z)
    g0 = x.g0
    action = {
        ("alpha", "A"): "A", ("alpha", "B"): "A^2B", ("alpha", "C"): "C",
        ("beta", "A"): "A^-1", ("beta", "B"): "B", ("beta", "C"): "C",
    }  # fmt: skip
    for (w, p), v in action.items():
        c.expect(zx.act(g0.element(w), names[p]) == el(v), f"^{w}{p} = {v}")

    norrie = nr.norrie_centre(x)
    c.expect(sorted(norrie.top_inclusion.map) == sorted([0, g1.element("a^2")]), "Norrie top = {1, a^2}")
    c.expect(norrie.bottom.order == 1, "Norrie bottom = {1}")
    _, rep = nr.norrie_compare(x, z)
    d = rep.data
    c.expect(rep.verdicts["pi1 iso"], "j_* is an isomorphism on π1")
    c.expect(not d["weak_equivalence"], "j_* is not a weak equivalence")
    c.expect(d["pi0_norrie"] < d["pi0_centre"], "π0(j_*) is not onto")
    return c


# -- criterion 2 ---------------------------------------------------------------------


def criterion_2() -> Criterion:
    c = Criterion(2, "oracle and Drinfeld centre")
    checked = 0
    for f, x in _group_corpus().items():
        if x.g1.order**x.g0.order > ORACLE_LIMIT:
            continue
        checked += 1
        z = ce.enumerate_centre(x)
        c.expect(ce.centre_oracle(x, ORACLE_LIMIT) == set(z.elements), f"{f}: oracle set")
        objects = cat.drinfeld_objects(cat.build_cat(x))
        c.expect(len(objects) == len(z), f"{f}: Drinfeld object count")
        res = cat.bijection_check(x, z, objects)
        for stage in ("a: objects", "b: morphisms", "c: tensor", "d: braiding"):
            c.expect(res.report.verdicts.get(stage), f"{f}: stage {stage}")
    c.expect(checked >= 8, "corpus coverage")
    return c


# -- criterion 3 ---------------------------------------------------------------------


def criterion_3() -> Criterion:
    c = Criterion(3, "axiom suites")
    for f, x in _group_corpus().items():
        z = ce.enumerate_centre(x)
        c.expect(_cm_axioms_hold(ce.z0_xmod(z)), f"{f}: z0 crossed module")
        dx = ce.delta_xmod(z)
        c.expect(_cm_axioms_hold(dx), f"{f}: δ crossed module")
        bcm = ce.braiding(z)
        for axiom, w in ce.bcm_axiom_witnesses(dx, bcm.bracket).items():
            c.expect(w is None, f"{f}: {axiom}")
        c.expect(ce.action_from_bracket_witness(dx, bcm.bracket) is None, f"{f}: ^P a = {{P,δa}}a")
        ch = ce.centre_homotopy(z)
        c.expect(ch.pi0.is_abelian(), f"{f}: π0(Z_*) abelian")
        c.expect(
            all(x.act(e.x, a) == a for e in z.elements for a in ch.inclusion.map),
            f"{f}: π0(Z_*) acts trivially on π1(Z_*)",
        )
    return c


# -- criterion 4 ---------------------------------------------------------------------


def criterion_4() -> Criterion:
    c = Criterion(4, "cohomology exactness")
    for f, x in _group_corpus().items():
        z = ce.enumerate_centre(x)
        first = co.prop15_check(x, seeds=(1, 2, 3), z=z)
        v = first.report.verdicts
        for name in ("f injective", "Im f = Ker omega", "Im omega = Ker g"):
            c.expect(v[name], f"{f}: {name}")
        for name in ("f homomorphism", "omega homomorphism", "g homomorphism"):
            c.expect(v[name], f"{f}: {name}")
        again = co.prop15_check(x, seeds=(17, 29, 41), z=z)
        c.expect(again.g == first.g, f"{f}: θ̄ class independent of ψ")
        diagram = co.diagram_check(x, z)
        c.expect(diagram.ok, f"{f}: commutative diagram")
        c.expect(ce.seven_term_check(z).ok, f"{f}: seven-term sequence")
    return c


# -- criterion 5 ---------------------------------------------------------------------


def criterion_5() -> Criterion:
    c = Criterion(5, "π1 identification and Ker z0")
    for f, x in _group_corpus().items():
        z = ce.enumerate_centre(x)
        ch = ce.centre_homotopy(z)
        h = xm.homotopy(x)
        h0 = co.h0(co.make_module(h.pi1, h.pi0, h.module_action))
        bij = ch.bijection
        c.expect(sorted(bij) == sorted(ch.inclusion.map), f"{f}: bijection defined on π1(Z_*)")
        c.expect(len(set(bij.values())) == len(bij) == h0.order, f"{f}: bijection onto H0")
        c.expect(set(bij.values()) == set(ce.invariant_kernel(x)), f"{f}: image is H0 inside G1")
        c.expect(gr.iso_test(ch.pi1, h0) is not None, f"{f}: π1(Z_*) ≅ H0")
        kb = co.kernel_z0_bijection(x, z)
        der = co.derivations(co.make_module(h.pi1, h.pi0, h.module_action))
        c.expect(len(kb) == len(der) == len(z.to_g0.kernel()), f"{f}: Ker z0 ≅ Der(π0, π1)")
    return c


# -- criterion 6 ---------------------------------------------------------------------


def _perturbed(bracket, dims):
    """Bracket tensors that differ from ``bracket`` in exactly one entry."""
    n0, _, n1 = dims
    for i, j, k in itertools.islice(itertools.product(range(n0), range(n0), range(n1)), 6):
        t = [[list(row) for row in m] for m in bracket]
        t[i][j][k] = t[i][j][k] + 1
        yield t


def criterion_6() -> Criterion:
    c = Criterion(6, "Lie suite")
    corpus = _lie_corpus()
    expected = {"sl2_adjoint.json": 3, "abelian2.json": 2, "sl2_zero.json": 0}
    for f, d in expected.items():
        x = corpus[f]
        c.expect(lie_oracle.centre_dimension(x) == d, f"{f}: oracle dim = {d}")
        c.expect(lie_centre(x).dim == d, f"{f}: dim Z0 = {d}")
    for fld in (QQ, GF(5)):
        for f, x0 in corpus.items():
            x = x0.over(fld)
            tag = f"{f} over {fld.name}"
            z = lie_centre(x)
            c.expect(z.dim == lie_oracle.centre_dimension(x), f"{tag}: oracle agrees")
            c.expect(lemma_identity_witness(z) is None, f"{tag}: pair identity")
            args = (x.l1, z.algebra, z.delta_matrix, z.braid)
            first = la_alg.braided_witness(*args)
            second = la_alg.reconstruction_witness(*args)
            c.expect(first is None, f"{tag}: braided axioms")
            c.expect(second is None, f"{tag}: alternative axiom set")
            if z.dim:
                for t in _perturbed(z.braid, (z.dim, z.dim, x.l1.dim)):
                    a = la_alg.braided_witness(x.l1, z.algebra, z.delta_matrix, t) is None
                    b = la_alg.reconstruction_witness(x.l1, z.algebra, z.delta_matrix, t) is None
                    c.expect(a == b, f"{tag}: axiom sets agree on a perturbed bracket")
            lie_homotopy(z, x)
            seq = lie_exact_sequence_check(x, z=z)
            c.expect(seq.report.ok, f"{tag}: exact sequence")
    return c


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6]


@pytest.mark.parametrize("build", CRITERIA, ids=[f"criterion_{k}" for k in range(1, 7)])
def test_criterion(build, capsys):
    _emit(build(), capsys)


if __name__ == "__main__":
    failed = 0
    for build in CRITERIA:
        c = build()
        print(c.line())
        failed += bool(c.failures)
    sys.exit(1 if failed else 0)
