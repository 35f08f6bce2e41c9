"""The monoidal groupoid of a crossed module and its Drinfeld centre.

Nothing here reuses the centre search: half-braidings are found from the
categorical definition alone, using only composition and tensor of arrows of
``Cat(X)``. :func:`bijection_check` then compares the result with ``Z0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from . import groups as gr
from .centre import _as_centre, braiding, delta_xmod
from .checks import Report, Verdict
from .errors import BudgetExceeded, CheckFailure
from .xmod import CrossedModule, homotopy

DRINFELD_BUDGET = 10**7


class Arrow(NamedTuple):
    """``src --label--> ∂(label) src``."""

    src: int
    label: int


class HalfBraiding(NamedTuple):
    """``components[y]`` labels the arrow ``y x -> x y``."""

    object: int
    components: tuple


class MonoidalGroupoid:
    def __init__(self, xmod: CrossedModule):
        self.xmod = xmod
        g0, g1 = xmod.g0, xmod.g1
        self.objects = list(g0)
        self._d = xmod.boundary.map
        self._act = xmod.action.act
        self._m0, self._m1 = g0.mul, g1.mul
        self._fibre = [[] for _ in g0]
        for a in g1:
            self._fibre[self._d[a]].append(a)
        self._inv0 = g0.inv

    def target(self, f: Arrow) -> int:
        return self._m0[self._d[f.label]][f.src]

    def hom(self, x, y) -> list:
        return [Arrow(x, a) for a in self._fibre[self._m0[y][self._inv0[x]]]]

    def identity(self, x) -> Arrow:
        return Arrow(x, 0)

    def compose(self, g: Arrow, f: Arrow) -> Arrow:
        """``g ∘ f``; the composite of ``a`` then ``b`` is labelled ``ba``."""
        if self.target(f) != g.src:
            raise ValueError("arrows are not composable")
        return Arrow(f.src, self._m1[g.label][f.label])

    def tensor(self, f: Arrow, g: Arrow) -> Arrow:
        """``(x -a-> x') ⊗ (y -b-> y') = (xy --a ^x b--> x'y')``."""
        return Arrow(self._m0[f.src][g.src], self._m1[f.label][self._act[f.src][g.label]])

    def tensor_objects(self, x, y):
        return self._m0[x][y]

    def arrows(self):
        for x in self.objects:
            for a in self.xmod.g1:
                yield Arrow(x, a)


def build_cat(x: CrossedModule) -> MonoidalGroupoid:
    return MonoidalGroupoid(x)


def interchange_witness(c: MonoidalGroupoid):
    """First failure of ``(g∘f) ⊗ (g'∘f') = (g⊗g') ∘ (f⊗f')``, else ``None``."""
    pairs = [(f, g) for f in c.arrows() for g in _out_of(c, c.target(f))]
    for f, g in pairs:
        gf = c.compose(g, f)
        for f2, g2 in pairs:
            lhs = c.tensor(gf, c.compose(g2, f2))
            rhs = c.compose(c.tensor(g, g2), c.tensor(f, f2))
            if lhs != rhs:
                return (f, g, f2, g2)
    return None


def _out_of(c: MonoidalGroupoid, x):
    return [Arrow(x, a) for a in c.xmod.g1]


def groupoid_homotopy(c: MonoidalGroupoid):
    """``(π0, π1)`` of the pointed groupoid as finite groups.

    ``π0`` is the set of components with the tensor product, ``π1`` the
    automorphisms of the unit object under composition.
    """
    comp = {}
    reps = []
    for x in c.objects:
        if x in comp:
            continue
        k = len(reps)
        reps.append(x)
        stack = [x]
        comp[x] = k
        while stack:
            u = stack.pop()
            for f in _out_of(c, u):
                v = c.target(f)
                if v not in comp:
                    comp[v] = k
                    stack.append(v)
    # component of the unit first, so that index 0 is the identity
    order = sorted(range(len(reps)), key=lambda k: k != comp[0])
    relabel = {k: i for i, k in enumerate(order)}
    reps = [reps[k] for k in order]
    pi0_table = [[relabel[comp[c.tensor_objects(a, b)]] for b in reps] for a in reps]
    pi0 = gr.from_cayley(pi0_table, name="pi0(Cat)")
    loops = sorted(f.label for f in c.hom(0, 0))
    pos = {a: i for i, a in enumerate(loops)}
    pi1_table = [[pos[c.compose(Arrow(0, b), Arrow(0, a)).label] for b in loops] for a in loops]
    pi1 = gr.from_cayley(pi1_table, name="pi1(Cat)")
    return pi0, pi1


def homotopy_matches(c: MonoidalGroupoid) -> Verdict:
    pi0, pi1 = groupoid_homotopy(c)
    h = homotopy(c.xmod)
    if gr.iso_test(pi0, h.pi0) is None:
        return Verdict(False, "π0 of the groupoid differs from π0 of the crossed module")
    if gr.iso_test(pi1, h.pi1) is None:
        return Verdict(False, "π1 of the groupoid differs from π1 of the crossed module")
    return Verdict(True)


def drinfeld_objects(c: MonoidalGroupoid, budget=DRINFELD_BUDGET) -> list:
    """All objects ``(x, ξ)`` of the Drinfeld centre of ``c``.

    ``ξ_y: y⊗x -> x⊗y`` must be natural in ``y`` and satisfy
    ``ξ_{y⊗z} = (ξ_y ⊗ 1_z) ∘ (1_y ⊗ ξ_z)``.
    """
    objs = c.objects
    n = len(objs)
    triangles = [[] for _ in objs]
    for y in objs:
        for z in objs:
            yz = c.tensor_objects(y, z)
            triangles[max(y, z, yz)].append((y, z, yz))
    naturality = [[] for _ in objs]
    for y in objs:
        for z in objs:
            arrows = c.hom(y, z)
            if arrows:
                naturality[max(y, z)].append((y, z, arrows))
    nodes = 0
    found = []
    for x in objs:
        xi = [None] * n
        idx = c.identity(x)

        def consistent(y):
            for a, b, ab in triangles[y]:
                lhs = xi[ab]
                rhs = c.compose(c.tensor(xi[a], c.identity(b)), c.tensor(c.identity(a), xi[b]))
                if lhs != rhs:
                    return False
            for a, b, arrows in naturality[y]:
                for f in arrows:
                    if c.compose(c.tensor(idx, f), xi[a]) != c.compose(xi[b], c.tensor(f, idx)):
                        return False
            return True

        def search(y):
            nonlocal nodes
            if y == n:
                found.append(HalfBraiding(x, tuple(f.label for f in xi)))
                return
            for f in c.hom(c.tensor_objects(y, x), c.tensor_objects(x, y)):
                nodes += 1
                if nodes > budget:
                    raise BudgetExceeded(f"half-braiding search visited more than {budget} nodes")
                xi[y] = f
                if consistent(y):
                    search(y + 1)
            xi[y] = None

        search(0)
    return found


def _component(c: MonoidalGroupoid, h: HalfBraiding, y) -> Arrow:
    return Arrow(c.tensor_objects(y, h.object), h.components[y])


def is_centre_morphism(c: MonoidalGroupoid, p: HalfBraiding, q: HalfBraiding, f: Arrow) -> bool:
    """Whether ``f: p.object -> q.object`` commutes with the half-braidings."""
    if f.src != p.object or c.target(f) != q.object:
        return False
    for z in c.objects:
        lhs = c.compose(c.tensor(f, c.identity(z)), _component(c, p, z))
        rhs = c.compose(_component(c, q, z), c.tensor(c.identity(z), f))
        if lhs != rhs:
            return False
    return True


def drinfeld_tensor(c: MonoidalGroupoid, p: HalfBraiding, q: HalfBraiding) -> HalfBraiding:
    """``ζ_z = (1_x ⊗ η_z) ∘ (ξ_z ⊗ 1_y)``."""
    x, y = p.object, q.object
    comps = []
    for z in c.objects:
        first = c.tensor(_component(c, p, z), c.identity(y))
        second = c.tensor(c.identity(x), _component(c, q, z))
        comps.append(c.compose(second, first).label)
    return HalfBraiding(c.tensor_objects(x, y), tuple(comps))


def drinfeld_braiding(c: MonoidalGroupoid, p: HalfBraiding, q: HalfBraiding) -> Arrow:
    """``c_{p,q}: p ⊗ q -> q ⊗ p`` is ``η_x`` for ``q = (y, η)``, ``p = (x, ξ)``."""
    return _component(c, q, p.object)


@dataclass
class BijectionResult:
    objects: list
    report: Report


def bijection_check(x: CrossedModule, z=None, objects=None, budget=DRINFELD_BUDGET) -> BijectionResult:
    """Compare ``Z0`` with the Drinfeld centre of ``Cat(X)``.

    (a) objects correspond bijectively, (b) arrows ``a`` are centre morphisms
    exactly when ``δ(a)(x, ξ) = (y, η)``, (c) tensor products agree and
    (d) the centre's braiding is the bracket ``{P, Q}`` seen as ``QP -> PQ``.
    """
    z = _as_centre(z if z is not None else x)
    c = build_cat(x)
    objects = objects if objects is not None else drinfeld_objects(c, budget)
    rep = Report("Cat(Z_*) vs Z(Cat)")
    by_pair = {(h.object, h.components): h for h in objects}
    image = {}
    for k, e in enumerate(z.elements):
        key = (e.x, tuple(e.xi))
        if key not in by_pair:
            raise CheckFailure("a", "centre element has no half-braiding", e)
        image[k] = by_pair[key]
    if len(objects) != len(z.elements) or len(set(image.values())) != len(objects):
        raise CheckFailure("a", "object map is not a bijection", (len(objects), len(z.elements)))
    rep.add("a: objects", Verdict(True))

    dx = delta_xmod(z)
    delta = dx.boundary.map
    zmul = z.group.mul
    for p in z.group:
        for q in z.group:
            hp, hq = image[p], image[q]
            for f in c.hom(hp.object, hq.object):
                lhs = is_centre_morphism(c, hp, hq, f)
                rhs = zmul[delta[f.label]][p] == q
                if lhs != rhs:
                    raise CheckFailure("b", "morphism criterion disagrees with δ(a)(x, ξ)", (p, q, f))
    rep.add("b: morphisms", Verdict(True))

    for p in z.group:
        for q in z.group:
            if drinfeld_tensor(c, image[p], image[q]) != image[zmul[p][q]]:
                raise CheckFailure("c", "tensor does not match the Z0 product", (p, q))
    rep.add("c: tensor", Verdict(True))

    bcm = braiding(z)
    for p in z.group:
        for q in z.group:
            arrow = drinfeld_braiding(c, image[q], image[p])  # Q ⊗ P -> P ⊗ Q
            if arrow.label != bcm.bracket[p][q]:
                raise CheckFailure("d", "braiding label differs from {P, Q}", (p, q))
            src = drinfeld_tensor(c, image[q], image[p])
            tgt = drinfeld_tensor(c, image[p], image[q])
            if not is_centre_morphism(c, src, tgt, arrow):
                raise CheckFailure("d", "braiding is not a morphism of the centre", (p, q))
            if zmul[delta[arrow.label]][zmul[q][p]] != zmul[p][q]:
                raise CheckFailure("d", "{P, Q} is not an arrow QP -> PQ in Cat(Z_*)", (p, q))
    rep.add("d: braiding", Verdict(True))
    rep.data.update(drinfeld_count=len(objects), z0_order=len(z.elements))
    return BijectionResult(objects, rep)
