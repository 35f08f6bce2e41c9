"""The centre of a crossed module of finite groups.

``Z0(X)`` is the set of pairs ``(x, ξ)`` with ``x ∈ G0`` and ``ξ: G0 -> G1`` such that

* ZE1: ``∂ ξ(t) = [x, t]``
* ZE2: ``ξ(∂a) = (^x a) a^-1``
* ZE3: ``ξ(st) = ξ(s) · ^s ξ(t)``

with product ``(x, ξ)(y, η) = (xy, t ↦ ^x η(t) · ξ(t))``. From it we build the
crossed modules ``z0: Z0 -> G0`` and ``δ: G1 -> Z0``, the braiding
``{(x, ξ), (y, η)} = ξ(y)`` on the latter, and their homotopy groups.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from . import groups as gr
from .checks import Report, Verdict, exact_at, fail, require
from .errors import AxiomViolation, BudgetExceeded, CheckFailure
from .groups import FiniteGroup, GroupHom
from .xmod import (
    CrossedModule,
    XmodMorphism,
    check_morphism,
    crossed_homomorphisms,
    fibres,
    make_xmod,
)

ORACLE_BUDGET = 10**8


class CentreElement(NamedTuple):
    x: int
    xi: tuple


@dataclass
class CentreGroup:
    xmod: CrossedModule
    elements: list
    group: FiniteGroup
    to_g0: GroupHom
    index: dict = field(repr=False, default_factory=dict)
    _cache: dict = field(repr=False, default_factory=dict)

    def __len__(self):
        return len(self.elements)

    def find(self, x, xi) -> int | None:
        return self.index.get(CentreElement(x, tuple(xi)))

    def by_generators(self, x, gen_values) -> int | None:
        """Index of the element with first component ``x`` and ``ξ`` given on ``G0.gens``."""
        gens = self.xmod.g0.gens
        for k, e in enumerate(self.elements):
            if e.x == x and all(e.xi[g] == v for g, v in zip(gens, gen_values)):
                return k
        return None

    def multiply(self, p: CentreElement, q: CentreElement) -> CentreElement:
        return _product(self.xmod, p, q)


def _product(x: CrossedModule, p, q):
    m1, act = x.g1.mul, x.action.act[p.x]
    xi, eta = p.xi, q.xi
    return CentreElement(x.g0.mul[p.x][q.x], tuple(m1[act[eta[t]]][xi[t]] for t in x.g0))


def _element_label(x: CrossedModule, e: CentreElement):
    g0, g1 = x.g0, x.g1
    vals = ", ".join(f"{g0.label(g)}->{g1.label(e.xi[g])}" for g in g0.gens)
    return f"({g0.label(e.x)}; {vals})"


def satisfies_definition(x: CrossedModule, e: CentreElement) -> Verdict:
    """Check ZE1-ZE3 directly."""
    g0, g1 = x.g0, x.g1
    xi = e.xi
    for t in g0:
        if x.d(xi[t]) != g0.commutator(e.x, t):
            return fail("ZE1", t)
    for a in g1:
        if xi[x.d(a)] != g1.mul[x.act(e.x, a)][g1.inv[a]]:
            return fail("ZE2", a)
    for s in g0:
        for t in g0:
            if xi[g0.mul[s][t]] != g1.mul[xi[s]][x.act(s, xi[t])]:
                return fail("ZE3", (s, t))
    return Verdict(True)


def _assemble(x: CrossedModule, found) -> CentreGroup:
    elements = sorted(set(found))
    index = {e: k for k, e in enumerate(elements)}
    mul = [[index[_product(x, p, q)] for q in elements] for p in elements]
    labels = [_element_label(x, e) for e in elements]
    group = gr.from_cayley(mul, labels=labels, name=f"Z0({x.name})" if x.name else "Z0")
    to_g0 = GroupHom(group, x.g0, [e.x for e in elements])
    return CentreGroup(x, elements, group, to_g0, index)


def enumerate_centre(x: CrossedModule) -> CentreGroup:
    """All of ``Z0(X)`` with its group structure.

    For each ``x ∈ G0`` the values of ``ξ`` on the generators of ``G0`` range
    over the ``∂``-fibres prescribed by ZE1, are extended by ZE3 along the
    Cayley graph and then filtered by ZE1 and ZE2.
    """
    g0, g1 = x.g0, x.g1
    fib = fibres(x)
    act = x.action.act
    found = []
    for y in g0:
        cands = [fib[g0.commutator(y, g)] for g in g0.gens]
        if any(not c for c in cands):
            continue
        target = [g1.mul[act[y][a]][g1.inv[a]] for a in g1]
        comm = [g0.commutator(y, t) for t in g0]
        for xi in crossed_homomorphisms(g0, g1, act, cands):
            if any(x.d(xi[t]) != comm[t] for t in g0):
                continue
            if any(xi[x.d(a)] != target[a] for a in g1):
                continue
            found.append(CentreElement(y, xi))
    return _assemble(x, found)


def centre_oracle(x: CrossedModule, budget=ORACLE_BUDGET) -> set:
    """Exhaustive search for ``Z0(X)`` straight from the definition.

    Walks every function ``ξ: G0 -> G1`` (pruning a branch as soon as one of
    ZE1-ZE3 is violated by the values assigned so far). Deliberately shares
    no code with :func:`enumerate_centre`.
    """
    g0, g1 = x.g0, x.g1
    n0 = g0.order
    if g1.order ** n0 > budget:
        raise BudgetExceeded(f"|g1|^|g0| = {g1.order}^{n0} exceeds budget {budget}")
    d = x.boundary.map
    act = x.action.act
    m0, m1, inv1 = g0.mul, g1.mul, g1.inv
    pre = [[a for a in g1 if d[a] == t] for t in g0]
    # ZE3 triples (s, u, su) that become checkable once max(s, u, su) is assigned
    triples = [[] for _ in g0]
    for s in g0:
        for u in g0:
            triples[max(s, u, m0[s][u])].append((s, u, m0[s][u]))
    nodes = 0
    result = set()
    for y in g0:
        ze2 = [[m1[act[y][a]][inv1[a]] for a in pre[t]] for t in g0]
        xi = [None] * n0

        def search(t):
            nonlocal nodes
            if t == n0:
                result.add(CentreElement(y, tuple(xi)))
                return
            for v in g1:
                nodes += 1
                if nodes > budget:
                    raise BudgetExceeded(f"oracle visited more than {budget} nodes")
                if d[v] != g0.commutator(y, t):
                    continue
                if any(v != w for w in ze2[t]):
                    continue
                xi[t] = v
                if all(xi[su] == m1[xi[s]][act[s][xi[u]]] for s, u, su in triples[t]):
                    search(t + 1)
            xi[t] = None

        search(0)
    return result


def _as_centre(obj) -> CentreGroup:
    return obj if isinstance(obj, CentreGroup) else enumerate_centre(obj)


def z0_xmod(z) -> CrossedModule:
    """``z0: Z0 -> G0`` with ``^z (x, ξ) = (z x z^-1, t ↦ ^z ξ(z^-1 t z))``."""
    z = _as_centre(z)
    if "z0" in z._cache:
        return z._cache["z0"]
    x = z.xmod
    g0 = x.g0
    table = []
    for w in g0:
        wi = g0.inv[w]
        row = []
        for e in z.elements:
            psi = tuple(x.act(w, e.xi[g0.conj(wi, t)]) for t in g0)
            k = z.find(g0.conj(w, e.x), psi)
            if k is None:
                raise CheckFailure("z0-action", "action leaves Z0", (w, e))
            row.append(k)
        table.append(row)
    try:
        res = make_xmod(z.group, g0, z.to_g0, table, name="G//Z")
    except AxiomViolation as e:
        raise CheckFailure("z0_xmod", str(e), e.witness) from e
    z._cache["z0"] = res
    return res


def zeta(x: CrossedModule, c) -> tuple:
    """``ζ_c(t) = c (^t c)^-1``."""
    g1 = x.g1
    return tuple(g1.mul[c][g1.inv[x.act(t, c)]] for t in x.g0)


def delta_xmod(z) -> CrossedModule:
    """``δ: G1 -> Z0``, ``δ(c) = (∂c, ζ_c)``, with ``^{(x, ξ)} a = ^x a``.

    The returned crossed module's ``boundary`` is ``δ``.
    """
    z = _as_centre(z)
    if "delta" in z._cache:
        return z._cache["delta"]
    x = z.xmod
    images = []
    for c in x.g1:
        k = z.find(x.d(c), zeta(x, c))
        if k is None:
            raise CheckFailure("delta", "δ(c) not in Z0", c)
        images.append(k)
    act = [x.action.act[e.x] for e in z.elements]
    try:
        delta = GroupHom(x.g1, z.group, images)
        res = make_xmod(x.g1, z.group, delta, act, name="Z_*")
    except (AxiomViolation, gr.NotAHomomorphism) as e:
        raise CheckFailure("delta_xmod", str(e), e.witness) from e
    z._cache["delta"] = res
    return res


def centre_morphism(z) -> XmodMorphism:
    """``(id, z0): Z_*(X) -> X``."""
    z = _as_centre(z)
    return XmodMorphism(gr.identity_hom(z.xmod.g1), z.to_g0)


# -- braided crossed modules ----------------------------------------------------


@dataclass(frozen=True)
class BraidedCrossedModule:
    base: CrossedModule
    bracket: tuple  # bracket[x][y] in g1
    is_braided: bool
    is_symmetric: bool
    is_rqm: bool
    factors_through_tensor: bool = False


def bcm_axiom_witnesses(base: CrossedModule, bracket) -> dict:
    """First failing instance of each of BCM1-BCM5 (``None`` where it holds)."""
    g0, g1 = base.g0, base.g1
    m0, m1, i0, i1 = g0.mul, g1.mul, g0.inv, g1.inv
    d = base.boundary.map
    br = bracket
    out = {k: None for k in ("BCM1", "BCM2", "BCM3", "BCM4", "BCM5")}
    for x in g0:
        for y in g0:
            if d[br[x][y]] != g0.commutator(x, y):
                out["BCM1"] = out["BCM1"] or (x, y)
    for a in g1:
        for b in g1:
            if br[d[a]][d[b]] != g1.commutator(a, b):
                out["BCM2"] = out["BCM2"] or (a, b)
    for a in g1:
        for x in g0:
            if br[d[a]][x] != i1[br[x][d[a]]]:
                out["BCM3"] = out["BCM3"] or (a, x)
    for x in g0:
        for y in g0:
            for z in g0:
                yz = m0[y][z]
                c = m0[m0[m0[z][x]][i0[z]]][i0[x]]
                rhs = m1[m1[br[x][y]][br[x][z]]][br[c][y]]
                if br[x][yz] != rhs:
                    out["BCM4"] = out["BCM4"] or (x, y, z)
                yzy = g0.conj(y, z)
                if br[m0[x][y]][z] != m1[br[x][yzy]][br[y][z]]:
                    out["BCM5"] = out["BCM5"] or (x, y, z)
    return out


def action_from_bracket_witness(base: CrossedModule, bracket):
    """Where ``^x a = {x, ∂a} a`` fails, if anywhere."""
    g1 = base.g1
    for x in base.g0:
        for a in g1:
            if base.act(x, a) != g1.mul[bracket[x][base.d(a)]][a]:
                return (x, a)
    return None


def is_symmetric_bracket(g0: FiniteGroup, g1: FiniteGroup, bracket) -> bool:
    return all(bracket[y][x] == g1.inv[bracket[x][y]] for x in g0 for y in g0)


def is_rqm_bracket(base: CrossedModule, bracket) -> bool:
    """Reduced quadratic module test.

    Both groups nilpotent of class at most two together with the three
    identities ``{∂a, x}{x, ∂a} = 1``, ``{∂a, ∂b} = [a, b]`` and
    ``∂{x, y} = [x, y]``. Whether the bracket also factors through
    ``G0^ab ⊗ G0^ab`` is reported separately by :func:`tensor_factorization_witness`.
    """
    g0, g1 = base.g0, base.g1
    for g in (g0, g1):
        c = gr.nilpotency_class(g)
        if c is None or c > 2:
            return False
    m1, d, br = g1.mul, base.boundary.map, bracket
    for a in g1:
        for x in g0:
            if m1[br[d[a]][x]][br[x][d[a]]] != 0:
                return False
        for b in g1:
            if g1.commutator(a, b) != br[d[a]][d[b]]:
                return False
    return all(g0.commutator(x, y) == d[br[x][y]] for x in g0 for y in g0)


def tensor_factorization_witness(base: CrossedModule, bracket):
    """First obstruction to the bracket being a homomorphism on ``G0^ab ⊗ G0^ab``.

    Returns ``None`` when the bracket is multiplicative in each variable with
    pairwise commuting values (which forces it to vanish on commutators).
    """
    g0, g1 = base.g0, base.g1
    m0, m1, br = g0.mul, g1.mul, bracket
    values = sorted({v for row in br for v in row})
    for u in values:
        for v in values:
            if m1[u][v] != m1[v][u]:
                return ("values do not commute", (u, v))
    for x in g0:
        for y in g0:
            for z in g0:
                if br[m0[x][y]][z] != m1[br[x][z]][br[y][z]]:
                    return ("not multiplicative on the left", (x, y, z))
                if br[x][m0[y][z]] != m1[br[x][y]][br[x][z]]:
                    return ("not multiplicative on the right", (x, y, z))
    return None


def make_bcm(base: CrossedModule, bracket) -> BraidedCrossedModule:
    """Validate a bracket against BCM1-BCM5 and the action-from-bracket identity."""
    bracket = tuple(tuple(int(v) for v in row) for row in bracket)
    for axiom, w in bcm_axiom_witnesses(base, bracket).items():
        if w is not None:
            raise AxiomViolation(axiom, "braided crossed module axiom fails", w)
    w = action_from_bracket_witness(base, bracket)
    if w is not None:
        raise AxiomViolation("action", "^x a != {x, ∂a} a", w)
    return BraidedCrossedModule(
        base,
        bracket,
        True,
        is_symmetric_bracket(base.g0, base.g1, bracket),
        is_rqm_bracket(base, bracket),
        tensor_factorization_witness(base, bracket) is None,
    )


def braiding(z) -> BraidedCrossedModule:
    """The braiding ``{(x, ξ), (y, η)} = ξ(y)`` on ``δ: G1 -> Z0``."""
    z = _as_centre(z)
    if "bcm" in z._cache:
        return z._cache["bcm"]
    base = delta_xmod(z)
    bracket = [[p.xi[q.x] for q in z.elements] for p in z.elements]
    try:
        res = make_bcm(base, bracket)
    except AxiomViolation as e:
        raise CheckFailure("braiding", str(e), e.witness) from e
    z._cache["bcm"] = res
    return res


# -- homotopy groups ------------------------------------------------------------------


@dataclass(frozen=True)
class CentreHomotopy:
    pi0: FiniteGroup
    projection: GroupHom  # Z0 -> pi0(Z_*)
    pi1: FiniteGroup
    inclusion: GroupHom  # pi1(Z_*) -> G1
    h0: tuple  # H^0(pi0(X), pi1(X)) as elements of G1
    bijection: dict  # pi1(Z_*) element (in G1) -> H^0 element (in G1)


def invariant_kernel(x: CrossedModule) -> list:
    """``{a : ∂a = 1, ^t a = a for all t}``, i.e. ``H^0(π0(X), π1(X))`` inside ``G1``."""
    return [a for a in x.g1 if x.d(a) == 0 and all(x.act(t, a) == a for t in x.g0)]


def centre_homotopy(z) -> CentreHomotopy:
    z = _as_centre(z)
    if "homotopy" in z._cache:
        return z._cache["homotopy"]
    dx = delta_xmod(z)
    delta = dx.boundary
    pi1, incl = gr.subgroup(z.xmod.g1, delta.kernel(), name="pi1(Z)")
    pi0, proj = gr.quotient(z.group, delta.image(), name="pi0(Z)")
    h0 = tuple(invariant_kernel(z.xmod))
    if set(h0) != set(incl.map):
        raise CheckFailure("pi1", "Ker δ differs from H^0(π0, π1)", sorted(set(h0) ^ set(incl.map)))
    res = CentreHomotopy(pi0, proj, pi1, incl, h0, {a: a for a in incl.map})
    z._cache["homotopy"] = res
    return res


def _well_defined_on_cosets(proj: GroupHom, f, position):
    """Turn ``f`` on representatives into a map on classes of ``proj``."""
    out = {}
    for a in proj.dom:
        c = proj.map[a]
        v = f(a)
        if out.setdefault(c, v) != v:
            raise CheckFailure(position, "map is not well defined on classes", (a, c))
    return out


def seven_term_check(z) -> Report:
    """Exactness of
    ``0 → π1 Z → π1 X → π1(X//Z) → π0 Z → π0 X → π0(X//Z) → 0``.

    Raises :class:`ExactnessFailure` naming the first bad position.
    """
    z = _as_centre(z)
    x = z.xmod
    dx = delta_xmod(z)
    zx = z0_xmod(z)
    delta = dx.boundary.map
    pz = centre_homotopy(z)
    pi0x, proj_x = gr.quotient(x.g0, x.boundary.image())
    pi0q, proj_q = gr.quotient(x.g0, z.to_g0.image())

    pi1z = list(pz.inclusion.map)
    pi1x = x.boundary.kernel()
    pi1q = z.to_g0.kernel()
    rep = {}
    for k in z.group:
        rep.setdefault(pz.projection.map[k], k)

    m1 = {a: a for a in pi1z}
    m2 = {a: delta[a] for a in pi1x}
    m3 = {k: pz.projection.map[k] for k in pi1q}
    m4 = _well_defined_on_cosets(pz.projection, lambda k: proj_x.map[z.to_g0.map[k]], "pi0Z->pi0X")
    m5 = _well_defined_on_cosets(proj_x, lambda y: proj_q.map[y], "pi0X->pi0(X//Z)")

    rep_ = Report("seven-term sequence")
    if any(a not in set(pi1x) for a in pi1z):
        raise CheckFailure("pi1Z->pi1X", "Ker δ not inside Ker ∂")
    if any(v not in set(pi1q) for v in m2.values()):
        raise CheckFailure("pi1X->pi1(X//Z)", "δ(Ker ∂) not inside Ker z0")
    rep_.add("0 -> pi1(Z)", require(Verdict(len(set(m1.values())) == len(m1), "not injective"), "pi1(Z)"))
    rep_.add("pi1(X)", require(exact_at("pi1(X)", m1.values(), [a for a in pi1x if m2[a] == 0]), "pi1(X)"))
    rep_.add(
        "pi1(X//Z)",
        require(exact_at("pi1(X//Z)", m2.values(), [k for k in pi1q if m3[k] == 0]), "pi1(X//Z)"),
    )
    rep_.add("pi0(Z)", require(exact_at("pi0(Z)", m3.values(), [c for c in pz.pi0 if m4[c] == 0]), "pi0(Z)"))
    rep_.add("pi0(X)", require(exact_at("pi0(X)", m4.values(), [c for c in pi0x if m5[c] == 0]), "pi0(X)"))
    rep_.add(
        "pi0(X//Z) -> 0",
        require(Verdict(set(m5.values()) == set(pi0q), "not surjective"), "pi0(X//Z)"),
    )
    rep_.data.update(
        orders={
            "pi1(Z)": len(pi1z),
            "pi1(X)": len(pi1x),
            "pi1(X//Z)": len(pi1q),
            "pi0(Z)": pz.pi0.order,
            "pi0(X)": pi0x.order,
            "pi0(X//Z)": pi0q.order,
        },
        maps={"m1": m1, "m2": m2, "m3": m3, "m4": m4, "m5": m5},
        z0_xmod=zx,
    )
    return rep_


def check_centre_morphism(z) -> Verdict:
    """``(id, z0)`` is a morphism of crossed modules ``Z_*(X) -> X``."""
    z = _as_centre(z)
    return check_morphism(centre_morphism(z), delta_xmod(z), z.xmod)
