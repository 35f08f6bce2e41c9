"""Crossed modules of finite groups.

A crossed module is a homomorphism ``∂: G1 -> G0`` with a left action of ``G0``
on ``G1`` such that

* CM1: ``∂(^x a) = x ∂(a) x^-1``
* CM2: ``^{∂(b)} a = b a b^-1``

The Peiffer identity is stored and checked in this left-handed form only.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

from . import groups as gr
from .checks import Verdict, fail
from .errors import CM1Violation, CM2Violation, NotAHomomorphism, ShapeMismatch
from .groups import FiniteGroup, GroupAction, GroupHom


@dataclass(frozen=True)
class CrossedModule:
    g1: FiniteGroup
    g0: FiniteGroup
    boundary: GroupHom
    action: GroupAction
    name: str = ""

    def d(self, a):
        return self.boundary.map[a]

    def act(self, x, a):
        return self.action.act[x][a]

    def __repr__(self):
        return f"<CrossedModule {self.name or ''} {self.g1!r} -> {self.g0!r}>"


@dataclass(frozen=True)
class XmodMorphism:
    alpha1: GroupHom
    alpha0: GroupHom


@dataclass(frozen=True)
class HomotopyData:
    pi0: FiniteGroup
    projection: GroupHom  # g0 -> pi0
    pi1: FiniteGroup
    inclusion: GroupHom  # pi1 -> g1
    module_action: GroupAction  # pi0 acting on pi1


def _check_axioms(g1, g0, boundary, action):
    d, act = boundary.map, action.act
    for x in g0:
        for a in g1:
            if d[act[x][a]] != g0.conj(x, d[a]):
                raise CM1Violation("∂(^x a) != x ∂(a) x^-1", witness=(x, a))
    for a in g1:
        for b in g1:
            if act[d[b]][a] != g1.conj(b, a):
                raise CM2Violation("^{∂b} a != b a b^-1", witness=(a, b))


def make_xmod(g1: FiniteGroup, g0: FiniteGroup, boundary, action, name="") -> CrossedModule:
    """Validate and build a crossed module.

    ``boundary`` may be a :class:`GroupHom` or a plain table, ``action`` a
    :class:`GroupAction` or a ``|g0| x |g1|`` table.
    """
    if not isinstance(boundary, GroupHom):
        boundary = GroupHom(g1, g0, boundary)
    if not isinstance(action, GroupAction):
        action = GroupAction(g0, g1, action)
    if boundary.dom is not g1 or boundary.cod is not g0:
        raise ShapeMismatch("boundary does not go g1 -> g0")
    if action.actor is not g0 or action.target is not g1:
        raise ShapeMismatch("action is not an action of g0 on g1")
    _check_axioms(g1, g0, boundary, action)
    return CrossedModule(g1, g0, boundary, action, name)


def aut_xmod(g: FiniteGroup, name=None) -> CrossedModule:
    """``AUT(G)``: inner automorphisms ``G -> Aut(G)``, Aut acting by evaluation."""
    aut, tables = gr.automorphism_group(g)
    inner = gr.inner_hom(g, (aut, tables))
    action = GroupAction(aut, g, tables, check=False)
    return make_xmod(g, aut, inner, action, name=name or f"AUT({g.name or 'G'})")


def trivial_source(g: FiniteGroup) -> CrossedModule:
    """``1 -> G``."""
    one = gr.cyclic(1)
    return make_xmod(one, g, gr.trivial_hom(one, g), gr.trivial_action(g, one), name=f"1->{g.name}")


def identity_xmod(g: FiniteGroup) -> CrossedModule:
    """``id: G -> G`` with conjugation."""
    return make_xmod(g, g, gr.identity_hom(g), gr.conjugation_action(g), name=f"id:{g.name}")


def to_trivial(g: FiniteGroup) -> CrossedModule:
    """``G -> 1``; only a crossed module when ``G`` is abelian."""
    one = gr.cyclic(1)
    return make_xmod(g, one, gr.trivial_hom(g, one), gr.trivial_action(one, g), name=f"{g.name}->1")


def normal_inclusion(g: FiniteGroup, normal, name="") -> CrossedModule:
    """Inclusion of a normal subgroup with conjugation action."""
    n, incl = gr.subgroup(g, normal)
    if not gr.is_normal(g, normal):
        raise gr.NotNormal("subgroup is not normal", witness=gr.normality_witness(g, normal))
    elems = incl.map
    pos = {e: i for i, e in enumerate(elems)}
    act = [[pos[g.conj(x, e)] for e in elems] for x in g]
    return make_xmod(n, g, incl, act, name=name)


def from_generator_data(g1, g0, boundary_images, action_images, name="") -> CrossedModule:
    """Build a crossed module from images of generators.

    ``boundary_images[j]`` is ``∂`` of the j-th generator of ``g1``;
    ``action_images[i][j]`` is ``^{x_i} a_j`` on generators.
    """
    boundary = gr.hom_from_generator_images(g1, g0, boundary_images)
    action = gr.action_from_generator_images(g0, g1, action_images)
    return make_xmod(g1, g0, boundary, action, name=name)


def homotopy(x: CrossedModule) -> HomotopyData:
    """``π0 = G0 / Im ∂`` and ``π1 = Ker ∂`` with the induced ``π0``-action."""
    im = x.boundary.image()
    pi0, proj = gr.quotient(x.g0, im, name="pi0")
    pi1, incl = gr.subgroup(x.g1, x.boundary.kernel(), name="pi1")
    pos = {e: i for i, e in enumerate(incl.map)}
    reps = [next(y for y in x.g0 if proj.map[y] == c) for c in pi0]
    act = [[pos[x.act(r, k)] for k in incl.map] for r in reps]
    return HomotopyData(pi0, proj, pi1, incl, GroupAction(pi0, pi1, act))


def action_well_defined(x: CrossedModule) -> Verdict:
    """The ``π0``-action on ``π1`` does not depend on coset representatives."""
    h = homotopy(x)
    proj = h.projection.map
    for y in x.g0:
        for z in x.g0:
            if proj[y] != proj[z]:
                continue
            for k in h.inclusion.map:
                if x.act(y, k) != x.act(z, k):
                    return fail("action depends on representative", (y, z, k))
    return Verdict(True)


def check_morphism(m: XmodMorphism, x: CrossedModule, y: CrossedModule) -> Verdict:
    a1, a0 = m.alpha1, m.alpha0
    if a1.dom.order != x.g1.order or a1.cod.order != y.g1.order:
        raise ShapeMismatch("alpha1 does not go X.g1 -> Y.g1")
    if a0.dom.order != x.g0.order or a0.cod.order != y.g0.order:
        raise ShapeMismatch("alpha0 does not go X.g0 -> Y.g0")
    for name, h in (("alpha1", a1), ("alpha0", a0)):
        try:
            GroupHom(h.dom, h.cod, h.map)
        except NotAHomomorphism as e:
            return fail(f"{name} is not a homomorphism", e.witness)
    for a in x.g1:
        if a0.map[x.d(a)] != y.d(a1.map[a]):
            return fail("square does not commute", a)
    for z in x.g0:
        for a in x.g1:
            if a1.map[x.act(z, a)] != y.act(a0.map[z], a1.map[a]):
                return fail("alpha1(^x a) != ^{alpha0 x} alpha1(a)", (z, a))
    return Verdict(True)


def iso_test_xmod(x: CrossedModule, y: CrossedModule):
    """An isomorphism of crossed modules ``x -> y`` as an :class:`XmodMorphism`, or ``None``."""
    if (x.g1.order, x.g0.order) != (y.g1.order, y.g0.order):
        return None
    isos1 = list(gr.iter_isomorphisms(x.g1, y.g1))
    if not isos1:
        return None
    for f0 in gr.iter_isomorphisms(x.g0, y.g0):
        for f1 in isos1:
            m = XmodMorphism(f1, f0)
            if check_morphism(m, x, y):
                return m
    return None


# -- crossed homomorphisms -------------------------------------------------------


def extend_crossed_hom(g0: FiniteGroup, g1: FiniteGroup, act, gen_values):
    """Extend generator values to ``ξ`` with ``ξ(st) = ξ(s) ^s ξ(t)``; ``None`` if inconsistent.

    Checking the rule on every Cayley-graph edge ``(s, g)`` with ``g`` a
    generator suffices, by induction on word length.
    """
    xi = [None] * g0.order
    xi[0] = 0
    queue = deque([0])
    m0, m1 = g0.mul, g1.mul
    while queue:
        s = queue.popleft()
        xs, acts = xi[s], act[s]
        for g, val in zip(g0.gens, gen_values):
            v = m0[s][g]
            w = m1[xs][acts[val]]
            if xi[v] is None:
                xi[v] = w
                queue.append(v)
            elif xi[v] != w:
                return None
    return tuple(xi)


def crossed_homomorphisms(g0: FiniteGroup, g1: FiniteGroup, act, candidates=None):
    """Yield all crossed homomorphisms ``g0 -> g1`` for the action table ``act``.

    ``candidates[i]`` optionally restricts the value on the i-th generator.
    """
    cands = candidates if candidates is not None else [list(g1)] * len(g0.gens)
    for values in itertools.product(*cands):
        xi = extend_crossed_hom(g0, g1, act, values)
        if xi is not None:
            yield xi


def is_crossed_hom(g0, g1, act, xi) -> bool:
    m1 = g1.mul
    return xi[0] == 0 and all(
        xi[g0.mul[s][t]] == m1[xi[s]][act[s][xi[t]]] for s in g0 for t in g0
    )


def fibres(x: CrossedModule):
    """``fib[y]`` lists the ``a`` with ``∂a = y``."""
    fib = [[] for _ in x.g0]
    for a in x.g1:
        fib[x.d(a)].append(a)
    return fib
