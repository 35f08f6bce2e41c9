"""Low-dimensional cohomology of finite groups and the maps around ``π0(Z_*)``.

Abelian coefficients are handled in two independent ways: by enumerating
cocycles directly (degrees 0 and 1, and degree 2 for tiny cases) and by linear
algebra over ``Z/p^e`` on normalized cochains. Cochains of degree 1 are tuples
indexed by the acting group, degree 2 cochains are nested tuples
``c[s][t]``. Module elements are written multiplicatively, as group indices.

The second half of the module covers the pairs ``(g, γ)`` forming
``Der_{G0}(G0, G1)``, its quotient ``H^1(G0, G_*)``, and the maps
``f``, ``ω``, ``g`` whose exactness is tested by :func:`prop15_check`.
"""

from __future__ import annotations

import itertools
import random
from collections.abc import Callable
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from . import groups as gr
from . import zmod
from .centre import (
    _as_centre,
    _well_defined_on_cosets,
    centre_homotopy,
    delta_xmod,
    invariant_kernel,
    zeta,
)
from .checks import Report, Verdict, exact_at, fail, require
from .errors import BudgetExceeded, CheckFailure, NotCongruence, UnsupportedSpec
from .groups import FiniteGroup, GroupAction, GroupHom
from .xmod import CrossedModule, crossed_homomorphisms, fibres, homotopy

H2_BUDGET = 5 * 10**7  # matrix entries of the degree-2 differential
BRUTE_FORCE_BUDGET = 10**6


# -- abelian modules -------------------------------------------------------------


def _prime_factors(n):
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def cyclic_decomposition(g: FiniteGroup) -> list:
    """A basis ``[(generator, order), ...]`` of primary cyclic factors.

    Factors are grouped by prime and sorted by decreasing order inside each
    group. Relies on the fact that an element of maximal order in an abelian
    p-group generates a direct summand.
    """
    if not g.is_abelian():
        raise UnsupportedSpec("cyclic decomposition needs an abelian group")
    basis = []
    for p in _prime_factors(g.order):
        part = [a for a in g if _is_p_power(g.element_order(a), p)]
        span = {0: ()}  # element -> coordinates in the basis found so far
        chosen = []
        while len(span) < len(part):
            best, best_f, best_hit = None, -1, None
            for a in part:
                f, y = 0, a
                while y not in span:
                    y = g.power(y, p)
                    f += 1
                if f > best_f:
                    best, best_f, best_hit = a, f, y
            # best^(p^f) = hit lies in the span; divide the coordinates of hit by p^f
            pf = p**best_f
            coords = span[best_hit]
            fix = 0
            for (h, _), c in zip(chosen, coords):
                fix = g.mul[fix][g.power(h, (-c // pf))]
            gen = g.mul[best][fix]
            order = g.element_order(gen)
            if order != pf:
                raise CheckFailure("decomposition", "lifted generator has the wrong order", best)
            new_span = {}
            for elem, cs in span.items():
                y = elem
                for k in range(order):
                    new_span[y] = cs + (k,)
                    y = g.mul[y][gen]
            span = new_span
            chosen.append((gen, order))
        basis.extend(chosen)
    return basis


def _is_p_power(n, p):
    while n % p == 0:
        n //= p
    return n == 1


@dataclass(frozen=True)
class AbModule:
    group: FiniteGroup
    actor: FiniteGroup
    action: GroupAction
    cyclic_decomposition: tuple
    _coords: dict = field(repr=False, compare=False, default_factory=dict)
    _elements: dict = field(repr=False, compare=False, default_factory=dict)

    def coords(self, a) -> tuple:
        return self._coords[a]

    def element(self, coords) -> int:
        key = tuple(int(c) % o for c, (_, o) in zip(coords, self.cyclic_decomposition))
        return self._elements[key]

    def act(self, s, a):
        return self.action.act[s][a]

    def add(self, a, b):
        return self.group.mul[a][b]

    def neg(self, a):
        return self.group.inv[a]

    def blocks(self):
        """``{p: [factor positions]}`` of the primary decomposition."""
        out = {}
        for i, (_, o) in enumerate(self.cyclic_decomposition):
            out.setdefault(_prime_factors(o)[0], []).append(i)
        return out


def make_module(group: FiniteGroup, actor: FiniteGroup, action) -> AbModule:
    if not isinstance(action, GroupAction):
        action = GroupAction(actor, group, action)
    basis = tuple(cyclic_decomposition(group))
    coords, elements = {}, {}
    for cs in itertools.product(*[range(o) for _, o in basis]):
        a = 0
        for (h, _), c in zip(basis, cs):
            a = group.mul[a][group.power(h, c)]
        coords[a] = cs
        elements[cs] = a
    if len(coords) != group.order:
        raise CheckFailure("decomposition", "basis does not give unique coordinates")
    return AbModule(group, actor, action, basis, coords, elements)


def trivial_module(actor: FiniteGroup, group: FiniteGroup) -> AbModule:
    return make_module(group, actor, gr.trivial_action(actor, group))


def pi1_module(x: CrossedModule, over="pi0") -> AbModule:
    """``π1(X)`` as a module over ``π0(X)`` (``over="pi0"``) or over ``G0``."""
    h = homotopy(x)
    if over == "pi0":
        return make_module(h.pi1, h.pi0, h.module_action)
    if over == "g0":
        pos = {e: i for i, e in enumerate(h.inclusion.map)}
        act = [[pos[x.act(t, k)] for k in h.inclusion.map] for t in x.g0]
        return make_module(h.pi1, x.g0, act)
    raise ValueError(f"unknown base {over!r}")


# -- direct cochain formulas -------------------------------------------------------


def coboundary(m: AbModule, k: int, c):
    """``d^k c`` computed straight from the inhomogeneous formula."""
    G, n = m.actor, m.actor.order
    add, neg, act = m.add, m.neg, m.act
    if k == 0:
        return tuple(add(act(s, c), neg(c)) for s in G)
    if k == 1:
        return tuple(
            tuple(add(add(act(s, c[t]), neg(c[G.mul[s][t]])), c[s]) for t in G) for s in G
        )
    if k == 2:
        mul = G.mul
        return {
            (s, t, r): add(
                add(act(s, c[t][r]), neg(c[mul[s][t]][r])), add(c[s][mul[t][r]], neg(c[s][t]))
            )
            for s in range(n)
            for t in range(n)
            for r in range(n)
        }
    raise ValueError("degree must be 0, 1 or 2")


def is_cocycle(m: AbModule, k: int, c) -> bool:
    d = coboundary(m, k, c)
    if k == 2:
        return all(v == 0 for v in d.values())
    if k == 1:
        return all(v == 0 for row in d for v in row)
    return all(v == 0 for v in d)


def is_normalized(k: int, c) -> bool:
    if k == 1:
        return c[0] == 0
    if k == 2:
        return all(v == 0 for v in c[0]) and all(row[0] == 0 for row in c)
    return True


def satisfies_cocycle_identity(m: AbModule, theta) -> bool:
    """``^s θ(t,r) θ(s,tr) = θ(s,t) θ(st,r)`` for all triples."""
    G, mul, add, act = m.actor, m.actor.mul, m.add, m.act
    return all(
        add(act(s, theta[t][r]), theta[s][mul[t][r]]) == add(theta[s][t], theta[mul[s][t]][r])
        for s in G
        for t in G
        for r in G
    )


# -- cohomology groups ------------------------------------------------------------------


@dataclass
class CocycleClassGroup:
    degree: int
    module: AbModule
    carrier: FiniteGroup
    representatives: list  # carrier index -> cochain
    classify: Callable = field(repr=False)
    invariants: tuple = ()

    @property
    def order(self):
        return self.carrier.order


def _cyclic_product(orders, name):
    if not orders:
        return gr.cyclic(1)
    g = gr.cyclic(orders[0])
    for o in orders[1:]:
        g = gr.direct_product(g, gr.cyclic(o))
    g.name = name
    return g


def _mixed_radix(coords, orders):
    idx = 0
    for c, o in zip(coords, orders):
        idx = idx * o + c
    return idx


def _unradix(idx, orders):
    out = []
    for o in reversed(orders):
        out.append(idx % o)
        idx //= o
    return tuple(reversed(out))


def h0(m: AbModule) -> FiniteGroup:
    """Fixed points ``M^G`` as a subgroup of ``m.group``."""
    fixed = [a for a in m.group if all(m.act(s, a) == a for s in m.actor)]
    return gr.subgroup(m.group, fixed, name="H0")[0]


def fixed_points(m: AbModule) -> list:
    return [a for a in m.group if all(m.act(s, a) == a for s in m.actor)]


def derivations(m: AbModule) -> list:
    """All crossed homomorphisms ``G -> M`` found by extension from generators."""
    return sorted(crossed_homomorphisms(m.actor, m.group, m.action.act))


def principal_derivation(m: AbModule, b) -> tuple:
    """``φ_b(t) = b (^t b)^-1``."""
    return tuple(m.add(b, m.neg(m.act(t, b))) for t in m.actor)


def h1(m: AbModule) -> CocycleClassGroup:
    """Crossed homomorphisms modulo principal ones, by enumeration."""
    ders = derivations(m)
    pos = {d: i for i, d in enumerate(ders)}
    n = m.actor.order
    table = [
        [pos[tuple(m.add(p[t], q[t]) for t in range(n))] for q in ders] for p in ders
    ]
    dgroup = gr.from_cayley(table, name="Der", max_order=max(gr.MAX_ORDER, len(ders)))
    principal = sorted({pos[principal_derivation(m, b)] for b in m.group})
    carrier, proj = gr.quotient(dgroup, principal, name="H1")
    reps = [None] * carrier.order
    for i, d in enumerate(ders):
        c = proj.map[i]
        if reps[c] is None:
            reps[c] = d

    def classify(phi):
        phi = tuple(phi)
        if phi not in pos:
            raise ValueError("not a crossed homomorphism")
        return proj.map[pos[phi]]

    inv = tuple(sorted(carrier.order_profile())) if carrier.order > 1 else ()
    return CocycleClassGroup(1, m, carrier, reps, classify, inv)


class _Complex:
    """Normalized cochains with coefficients in one primary block of ``m``."""

    def __init__(self, m: AbModule, p: int):
        self.m, self.p = m, p
        self.factors = m.blocks()[p]
        self.exps = [zmod.valuation(m.cyclic_decomposition[i][1], p, 64) for i in self.factors]
        self.e = max(self.exps)
        self.q = p**self.e
        G = m.actor
        self.nonid = list(range(1, G.order))
        r = len(self.factors)
        self.r = r
        # T[s][i][j]: coordinate i of s·(basis element j)
        self.T = [
            [[m.coords(m.act(s, m.cyclic_decomposition[j][0]))[i] for j in self.factors] for i in self.factors]
            for s in G
        ]

    def tuples(self, k):
        return list(itertools.product(self.nonid, repeat=k))

    def index(self, k):
        return {t: i for i, t in enumerate(self.tuples(k))}

    def differential(self, k, last=None):
        """Integer matrix of ``d^k`` on block coordinates (rows: degree k+1).

        ``last`` restricts the rows to tuples whose final entry lies in it.
        """
        G = self.m.actor
        r = self.r
        rows, cols = self.tuples(k + 1), self.index(k)
        if last is not None:
            rows = [g for g in rows if g[-1] in last]
        D = np.zeros((len(rows) * r, len(cols) * r), dtype=np.int64)
        eye = np.eye(r, dtype=np.int64)
        for ri, g in enumerate(rows):
            R = slice(ri * r, ri * r + r)

            def put(tup, block):
                if 0 in tup:
                    return
                ci = cols[tup]
                D[R, ci * r : ci * r + r] += block

            put(g[1:], np.array(self.T[g[0]], dtype=np.int64))
            for i in range(k):
                merged = g[:i] + (G.mul[g[i]][g[i + 1]],) + g[i + 2 :]
                put(merged, (-1) ** (i + 1) * eye)
            put(g[:k], (-1) ** (k + 1) * eye)
        return D % self.q

    def embed(self, count):
        """``E``: scale factor ``j`` by ``p^(e - e_j)``, repeated ``count`` times."""
        diag = [self.p ** (self.e - ej) for ej in self.exps] * count
        return np.diag(np.array(diag, dtype=np.int64))

    def relations(self, count):
        """Generators of the kernel of ``E``."""
        n = self.r * count
        R = np.zeros((n, n), dtype=np.int64)
        for c in range(count):
            for j, ej in enumerate(self.exps):
                R[c * self.r + j, c * self.r + j] = self.p**ej
        return R % self.q

    def vector(self, k, cochain):
        idx = self.tuples(k)
        u = np.zeros(len(idx) * self.r, dtype=np.int64)
        for n_, tup in enumerate(idx):
            v = _cochain_value(cochain, k, tup)
            cs = self.m.coords(v)
            for j, f in enumerate(self.factors):
                u[n_ * self.r + j] = cs[f]
        return u

    def block_values(self, k, u):
        """Per cochain index the module element carried by ``u`` in this block."""
        out = {}
        full = len(self.m.cyclic_decomposition)
        for n_, tup in enumerate(self.tuples(k)):
            cs = [0] * full
            for j, f in enumerate(self.factors):
                cs[f] = int(u[n_ * self.r + j])
            out[tup] = self.m.element(cs)
        return out


def _cochain_value(c, k, tup):
    if k == 0:
        return c
    if k == 1:
        return c[tup[0]]
    return c[tup[0]][tup[1]]


def _assemble_cochain(m: AbModule, k, values_by_block):
    G = m.actor
    n = G.order

    def total(tup):
        v = 0
        for vals in values_by_block:
            if tup in vals:
                v = m.add(v, vals[tup])
        return v

    if k == 0:
        return total(())
    if k == 1:
        return tuple(0 if t == 0 else total((t,)) for t in range(n))
    return tuple(tuple(0 if 0 in (s, t) else total((s, t)) for t in range(n)) for s in range(n))


def cohomology(m: AbModule, k: int, budget=H2_BUDGET) -> CocycleClassGroup:
    """``H^k(G, M)`` for ``k <= 2`` via Smith normal form over each ``Z/p^e``."""
    if k not in (0, 1, 2):
        raise ValueError("degree must be 0, 1 or 2")
    n = m.actor.order
    r = len(m.cyclic_decomposition)
    if ((n - 1) ** (k + 1) * r) * ((n - 1) ** k * r) > budget:
        raise BudgetExceeded(f"degree-{k} differential for |G|={n} exceeds the budget")
    parts = []
    for p in sorted(m.blocks()):
        cx = _Complex(m, p)
        count_k = (n - 1) ** k
        # For normalized 2-cochains the cocycle identity with the last argument
        # running over generators implies it everywhere (induct on word length
        # in the extension M x_θ G), so only those rows are kept.
        Dk = cx.differential(k, last=set(m.actor.gens) if k == 2 else None)
        Mk = cx.embed(Dk.shape[0] // cx.r) @ Dk % cx.q
        Z = zmod.kernel(Mk, p, cx.e)
        B = cx.relations(count_k)
        if k > 0:
            B = np.concatenate([cx.differential(k - 1), B], axis=1)
        parts.append((cx, zmod.subquotient(Z, B, p, cx.e)))
    orders = [o for _, sq in parts for o in sq.orders]
    carrier = _cyclic_product(orders, f"H{k}")

    def classify(cochain):
        if not is_normalized(k, cochain):
            raise ValueError("cochain is not normalized")
        coords = []
        for cx, sq in parts:
            coords.extend(sq.coordinates(cx.vector(k, cochain)))
        return _mixed_radix(coords, orders)

    reps = []
    for idx in range(carrier.order):
        coords = _unradix(idx, orders)
        vals, pos = [], 0
        for cx, sq in parts:
            c = coords[pos : pos + len(sq.orders)]
            pos += len(sq.orders)
            vals.append(cx.block_values(k, sq.representative(c)))
        reps.append(_assemble_cochain(m, k, vals))
    return CocycleClassGroup(k, m, carrier, reps, classify, tuple(orders))


def h2(m: AbModule, budget=H2_BUDGET) -> CocycleClassGroup:
    return cohomology(m, 2, budget)


def h2_bruteforce_order(m: AbModule, budget=BRUTE_FORCE_BUDGET) -> int:
    """``|H^2(G, M)|`` by listing every normalized 2-cochain.

    Independent of the linear algebra; only usable for tiny inputs.
    """
    n, size = m.actor.order, m.group.order
    cells = [(s, t) for s in range(1, n) for t in range(1, n)]
    if size ** len(cells) > budget:
        raise BudgetExceeded(f"{size}^{len(cells)} cochains exceed the budget")
    cocycles = 0
    for values in itertools.product(range(size), repeat=len(cells)):
        table = [[0] * n for _ in range(n)]
        for (s, t), v in zip(cells, values):
            table[s][t] = v
        if satisfies_cocycle_identity(m, table):
            cocycles += 1
    boundaries = set()
    for values in itertools.product(range(size), repeat=n - 1):
        c = (0,) + values
        boundaries.add(coboundary(m, 1, c))
    return cocycles // len(boundaries)


# -- Guin's Der and H^1 --------------------------------------------------------------


class GuinDerivation(NamedTuple):
    g: int
    gamma: tuple


def guin_product(x: CrossedModule, p, q) -> GuinDerivation:
    """``(g, γ)(g', γ') = (gg', t ↦ ^g γ'(t) · γ(t))``."""
    m1, act = x.g1.mul, x.action.act[p.g]
    return GuinDerivation(x.g0.mul[p.g][q.g], tuple(m1[act[q.gamma[t]]][p.gamma[t]] for t in x.g0))


@dataclass
class GuinGroup:
    xmod: CrossedModule
    elements: list
    group: FiniteGroup
    index: dict
    inclusion: GroupHom  # Z0 -> Der


def guin_group(x: CrossedModule, z=None) -> GuinGroup:
    """``Der_{G0}(G0, G1)``: pairs ``(g, γ)`` with ``γ`` crossed and ``∂γ(t) = [g, t]``."""
    g0 = x.g0
    z = _as_centre(z if z is not None else x)
    fib = fibres(x)
    found = []
    for g in g0:
        cands = [fib[g0.commutator(g, s)] for s in g0.gens]
        if any(not c for c in cands):
            continue
        comm = [g0.commutator(g, t) for t in g0]
        for gamma in crossed_homomorphisms(g0, x.g1, x.action.act, cands):
            if all(x.d(gamma[t]) == comm[t] for t in g0):
                found.append(GuinDerivation(g, gamma))
    found.sort()
    index = {e: i for i, e in enumerate(found)}
    mul = [[index[guin_product(x, p, q)] for q in found] for p in found]
    group = gr.from_cayley(mul, name="Der", max_order=max(gr.MAX_ORDER, len(found)))
    images = []
    for e in z.elements:
        k = index.get(GuinDerivation(e.x, e.xi))
        if k is None:
            raise CheckFailure("Z0 in Der", "centre element is not a derivation pair", e)
        images.append(k)
    inclusion = GroupHom(z.group, group, images)
    return GuinGroup(x, found, group, index, inclusion)


def guin_h1(x: CrossedModule, der: GuinGroup | None = None):
    """``H^1(G0, G_*) = Der / ∼`` with its projection.

    ``(g, γ) ∼ (∂(a)^-1 g, t ↦ a^-1 γ(t) ^t a)``. Raises :class:`NotCongruence`
    if the classes are not compatible with the product.
    """
    der = der or guin_group(x)
    g1, m1, inv1 = x.g1, x.g1.mul, x.g1.inv
    cls = [None] * len(der.elements)
    reps = []
    for i, e in enumerate(der.elements):
        if cls[i] is not None:
            continue
        c = len(reps)
        reps.append(i)
        for a in g1:
            ai = inv1[a]
            other = GuinDerivation(
                x.g0.mul[x.d(ai)][e.g],
                tuple(m1[m1[ai][e.gamma[t]]][x.act(t, a)] for t in x.g0),
            )
            k = der.index.get(other)
            if k is None:
                raise CheckFailure("guin_h1", "equivalent pair is not in Der", (e, a))
            if cls[k] is not None and cls[k] != c:
                raise NotCongruence("guin_h1", "relation is not an equivalence", (i, k))
            cls[k] = c
    mul = der.group.mul
    table = []
    for ci in reps:
        row = []
        for cj in reps:
            row.append(cls[mul[ci][cj]])
        table.append(row)
    members = [[] for _ in reps]
    for i, c in enumerate(cls):
        members[c].append(i)
    for a, ma in enumerate(members):
        for b, mb in enumerate(members):
            for i in ma:
                for j in mb:
                    if cls[mul[i][j]] != table[a][b]:
                        raise NotCongruence("guin_h1", "∼ is not a congruence", (i, j))
    h1g = gr.from_cayley(table, name="H1(G0,G*)", max_order=max(gr.MAX_ORDER, len(reps)))
    return h1g, GroupHom(der.group, h1g, cls)


def diagram_check(x: CrossedModule, z=None) -> Report:
    """Both rows ``H^0 → G1 → Der → H^1 → 1`` and ``π1Z → G1 → Z0 → π0Z → 1``.

    Checks exactness of each row and commutativity of every square,
    raising :class:`CheckFailure` at the first bad cell.
    """
    z = _as_centre(z if z is not None else x)
    der = guin_group(x, z)
    h1g, proj_d = guin_h1(x, der)
    dx = delta_xmod(z)
    delta = dx.boundary.map
    ch = centre_homotopy(z)
    proj_z = ch.projection.map
    h0_top = invariant_kernel(x)
    pi1z = list(ch.inclusion.map)

    delta_d = []
    for c in x.g1:
        k = der.index.get(GuinDerivation(x.d(c), zeta(x, c)))
        if k is None:
            raise CheckFailure("G1 -> Der", "δ(c) is not in Der", c)
        delta_d.append(k)
    GroupHom(x.g1, der.group, delta_d)
    incl = der.inclusion.map
    vert3 = _well_defined_on_cosets(ch.projection, lambda k: proj_d.map[incl[k]], "pi0Z -> H1")

    rep = Report("nonabelian cohomology diagram")
    top_ker = [a for a in x.g1 if delta_d[a] == 0]
    rep.add("top: H0 -> G1", require(exact_at("top G1", h0_top, top_ker), "top G1", CheckFailure))
    rep.add(
        "top: Der",
        require(
            exact_at("top Der", delta_d, [k for k in der.group if proj_d.map[k] == 0]), "top Der", CheckFailure
        ),
    )
    rep.add(
        "top: H1 -> 1",
        require(Verdict(set(proj_d.map) == set(h1g), "not surjective"), "top H1", CheckFailure),
    )
    bot_ker = [a for a in x.g1 if delta[a] == 0]
    rep.add("bottom: pi1Z -> G1", require(exact_at("bottom G1", pi1z, bot_ker), "bottom G1", CheckFailure))
    rep.add(
        "bottom: Z0",
        require(
            exact_at("bottom Z0", delta, [k for k in z.group if proj_z[k] == 0]), "bottom Z0", CheckFailure
        ),
    )
    rep.add(
        "bottom: pi0Z -> 1",
        require(Verdict(set(proj_z) == set(ch.pi0), "not surjective"), "bottom pi0Z", CheckFailure),
    )
    rep.add(
        "pi1Z = H0",
        require(Verdict(set(pi1z) == set(h0_top), "vertical map is not a bijection"), "pi1Z vs H0", CheckFailure),
    )
    rep.add(
        "square G1/Der",
        require(
            Verdict(all(delta_d[a] == incl[delta[a]] for a in x.g1), "δ square does not commute"),
            "square G1 -> Z0 -> Der",
            CheckFailure,
        ),
    )
    rep.add(
        "Z0 -> Der injective",
        require(Verdict(len(set(incl)) == len(incl), "not injective"), "Z0 -> Der", CheckFailure),
    )
    rep.add(
        "pi0Z -> H1 injective",
        require(Verdict(len(set(vert3.values())) == len(vert3), "not injective"), "pi0Z -> H1", CheckFailure),
    )
    rep.add(
        "square Z0/H1",
        require(
            Verdict(all(proj_d.map[incl[k]] == vert3[proj_z[k]] for k in z.group), "square does not commute"),
            "square Z0 -> H1",
            CheckFailure,
        ),
    )
    rep.data.update(der_order=der.group.order, h1_order=h1g.order, z0_order=z.group.order)
    return rep


# -- the kernel of z0 ---------------------------------------------------------------


def kernel_z0_bijection(x: CrossedModule, z=None) -> dict:
    """``Der(π0, π1) -> Ker z0``, ``φ ↦ (1, φ̃)``, checked to be a bijection."""
    z = _as_centre(z if z is not None else x)
    h = homotopy(x)
    m = make_module(h.pi1, h.pi0, h.module_action)
    proj, incl = h.projection.map, h.inclusion.map
    out = {}
    for phi in derivations(m):
        lifted = tuple(incl[phi[proj[t]]] for t in x.g0)
        k = z.find(0, lifted)
        if k is None:
            raise CheckFailure("Ker z0", "lifted derivation is not in Z0", phi)
        out[phi] = k
    kernel = set(z.to_g0.kernel())
    if len(set(out.values())) != len(out) or set(out.values()) != kernel:
        raise CheckFailure("Ker z0", "Der(π0, π1) -> Ker z0 is not a bijection", (len(out), len(kernel)))
    return out


# -- f, ω and g --------------------------------------------------------------------


def central_stabiliser(x: CrossedModule) -> list:
    """``Z_{π1}(π0)``: central classes of ``π0`` acting trivially on ``π1``."""
    h = homotopy(x)
    pi0, act = h.pi0, h.module_action.act
    return [
        c
        for c in pi0
        if all(pi0.mul[c][d] == pi0.mul[d][c] for d in pi0) and all(act[c][k] == k for k in h.pi1)
    ]


def build_psi(x: CrossedModule, y, rng: random.Random | None = None) -> list:
    """A map ``ψ: G0 -> G1`` with ``∂ψ(t) = [y, t]`` and ``ψ(∂a) = ^y a · a^-1``.

    Off ``Im ∂`` the least valid preimage is taken, or a random one when
    ``rng`` is given.
    """
    g0, g1 = x.g0, x.g1
    psi = [None] * g0.order
    for a in g1:
        v = g1.mul[x.act(y, a)][g1.inv[a]]
        t = x.d(a)
        if psi[t] is None:
            psi[t] = v
        elif psi[t] != v:
            raise CheckFailure("psi", "ψ is not well defined on Im ∂", (y, a))
    fib = fibres(x)
    for t in g0:
        if psi[t] is None:
            cands = fib[g0.commutator(y, t)]
            if not cands:
                raise CheckFailure("psi", "[y, t] is not a boundary", (y, t))
            psi[t] = rng.choice(cands) if rng is not None else min(cands)
    return psi


def theta_bar(x: CrossedModule, psi) -> list:
    """``θ̄(s, t) = ψ(s) ^s ψ(t) ψ(st)^-1`` as a table of ``G1`` elements."""
    g0, m1, inv1 = x.g0, x.g1.mul, x.g1.inv
    return [
        [m1[m1[psi[s]][x.act(s, psi[t])]][inv1[psi[g0.mul[s][t]]]] for t in g0] for s in g0
    ]


@dataclass
class Prop15Data:
    h1: CocycleClassGroup
    pi0z: FiniteGroup
    stabiliser: list  # Z_{π1}(π0) as π0 elements
    h2: CocycleClassGroup
    f: dict
    omega: dict
    g: dict
    report: Report


def _hom_verdict(name, src_mul, tgt_mul, mapping, domain):
    for a in domain:
        for b in domain:
            if mapping[src_mul[a][b]] != tgt_mul[mapping[a]][mapping[b]]:
                return fail(f"{name} is not a homomorphism", (a, b))
    return Verdict(True)


def prop15_check(x: CrossedModule, seeds=(1, 2, 3), z=None) -> Prop15Data:
    """Construct ``f``, ``ω``, ``g`` and check exactness of
    ``0 → H^1(π0, π1) → π0(Z_*) → Z_{π1}(π0) → H^2(G0, π1)``.
    """
    z = _as_centre(z if z is not None else x)
    h = homotopy(x)
    m_pi0 = make_module(h.pi1, h.pi0, h.module_action)
    m_g0 = pi1_module(x, over="g0")
    H1 = h1(m_pi0)
    H2 = h2(m_g0)
    ch = centre_homotopy(z)
    proj_x, incl = h.projection.map, h.inclusion.map
    pos1 = {e: i for i, e in enumerate(incl)}
    rep = Report("H1 -> pi0(Z) -> Z(pi0) -> H2")

    # f
    f = {}
    for phi in derivations(m_pi0):
        c = H1.classify(phi)
        k = z.find(0, tuple(incl[phi[proj_x[t]]] for t in x.g0))
        if k is None:
            raise CheckFailure("f", "(1, φ̃) is not in Z0", phi)
        v = ch.projection.map[k]
        if f.setdefault(c, v) != v:
            raise CheckFailure("f", "f depends on the cocycle representative", phi)
    # ω
    omega = _well_defined_on_cosets(ch.projection, lambda k: proj_x[z.elements[k].x], "omega")
    stab = central_stabiliser(x)
    if not set(omega.values()) <= set(stab):
        raise CheckFailure("omega", "ω leaves Z_{π1}(π0)")
    # g, with every representative of each class and several ψ choices
    g = {}
    for y in x.g0:
        c = proj_x[y]
        if c not in stab:
            continue
        choices = [build_psi(x, y)] + [build_psi(x, y, random.Random(s)) for s in seeds]
        for psi in choices:
            tb = theta_bar(x, psi)
            if any(x.d(v) != 0 for row in tb for v in row):
                raise CheckFailure("g", "θ̄ leaves π1", y)
            theta = tuple(tuple(pos1[v] for v in row) for row in tb)
            if not satisfies_cocycle_identity(m_g0, theta):
                raise CheckFailure("g", "θ̄ is not a 2-cocycle", y)
            cls = H2.classify(theta)
            if g.setdefault(c, cls) != cls:
                raise CheckFailure("g", "class of θ̄ depends on choices", (y, psi))

    stab_set = set(stab)
    rep.add("f homomorphism", _hom_verdict("f", H1.carrier.mul, ch.pi0.mul, f, H1.carrier))
    rep.add("omega homomorphism", _hom_verdict("omega", ch.pi0.mul, h.pi0.mul, omega, ch.pi0))
    gm = h.pi0.mul
    rep.add(
        "g homomorphism",
        Verdict(
            all(g[gm[a][b]] == H2.carrier.mul[g[a]][g[b]] for a in stab for b in stab if gm[a][b] in stab_set),
            "g is not a homomorphism",
        ),
    )
    rep.add("f injective", Verdict(len(set(f.values())) == H1.order, "f is not injective"))
    rep.add("Im f = Ker omega", exact_at("pi0(Z)", f.values(), [c for c in ch.pi0 if omega[c] == 0]))
    rep.add("Im omega = Ker g", exact_at("Z(pi0)", omega.values(), [c for c in stab if g[c] == 0]))
    im_f = len(set(f.values()))
    im_w = len(set(omega.values()))
    rep.add("|Im f||Im omega| = |pi0 Z|", Verdict(im_f * im_w == ch.pi0.order, "order count mismatch"))
    rep.data.update(
        h1_order=H1.order,
        pi0z_order=ch.pi0.order,
        stabiliser_order=len(stab),
        h2_order=H2.order,
        im_f=im_f,
        im_omega=im_w,
        ker_g=sum(1 for c in stab if g[c] == 0),
    )
    return Prop15Data(H1, ch.pi0, stab, H2, f, omega, g, rep)
