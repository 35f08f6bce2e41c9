"""Finite groups stored as dense Cayley tables.

Elements are the integers ``0 .. order-1`` and the identity is always ``0``.
Everything is immutable once built; the constructors validate the group axioms
exhaustively, which is affordable because the package only targets small groups
(order at most 64).
"""

from __future__ import annotations

import itertools
import re
from collections import deque
from collections.abc import Iterable, Iterator, Sequence

from .errors import (
    NotAGroup,
    NotAHomomorphism,
    NotNormal,
    SearchBudgetExceeded,
    UnsupportedSpec,
)

MAX_ORDER = 64
DEFAULT_SEARCH_BUDGET = 10**6


class FiniteGroup:
    """A finite group given by its multiplication table.

    Use :func:`from_cayley` (validating) or the named constructors rather than
    calling this directly.
    """

    __slots__ = ("gens", "inv", "labels", "mul", "name", "order")

    def __init__(self, mul, inv, gens, labels=None, name=None):
        self.order = len(mul)
        self.mul = mul
        self.inv = inv
        self.gens = tuple(gens)
        self.labels = tuple(labels) if labels is not None else None
        self.name = name

    id = 0

    def __repr__(self):
        name = self.name or "FiniteGroup"
        return f"<{name} of order {self.order}>"

    def __len__(self):
        return self.order

    def __iter__(self):
        return iter(range(self.order))

    def op(self, a, b):
        return self.mul[a][b]

    def product(self, *elements):
        r = 0
        for e in elements:
            r = self.mul[r][e]
        return r

    def power(self, a, k):
        if k < 0:
            a, k = self.inv[a], -k
        r = 0
        for _ in range(k):
            r = self.mul[r][a]
        return r

    def conj(self, g, h):
        """``g h g^-1``."""
        return self.mul[self.mul[g][h]][self.inv[g]]

    def commutator(self, x, y):
        """``[x, y] = x y x^-1 y^-1``."""
        m, i = self.mul, self.inv
        return m[m[m[x][y]][i[x]]][i[y]]

    def element_order(self, a):
        k, r = 1, a
        while r != 0:
            r = self.mul[r][a]
            k += 1
        return k

    def order_profile(self):
        return tuple(sorted(self.element_order(a) for a in self))

    def exponent(self):
        from math import lcm

        e = 1
        for a in self:
            e = lcm(e, self.element_order(a))
        return e

    def is_abelian(self):
        m = self.mul
        return all(m[a][b] == m[b][a] for a in self for b in range(a + 1, self.order))

    def closure(self, elements: Iterable[int]) -> frozenset:
        """Subgroup generated by ``elements``."""
        elements = list(elements)
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for g in elements:
                v = self.mul[u][g]
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        return frozenset(seen)

    def label(self, a):
        if self.labels is None:
            return str(a)
        return self.labels[a]

    def index_of(self, label):
        if self.labels is None:
            return int(label)
        return self.labels.index(label)

    def element(self, word):
        """Evaluate a word such as ``"a^2b"`` or ``"alpha beta^-1"``."""
        return evaluate_word(self, word)

    def to_json(self):
        d = {"order": self.order, "table": [list(r) for r in self.mul], "gens": list(self.gens)}
        if self.labels is not None:
            d["labels"] = list(self.labels)
        if self.name:
            d["name"] = self.name
        return d


def greedy_generators(mul) -> list:
    """Smallest index first; add the next index not yet in the closure."""
    n = len(mul)
    gens: list = []
    closure = {0}
    for a in range(1, n):
        if a in closure:
            continue
        gens.append(a)
        closure = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for g in gens:
                v = mul[u][g]
                if v not in closure:
                    closure.add(v)
                    queue.append(v)
        if len(closure) == n:
            break
    return gens


def from_cayley(
    table: Sequence[Sequence[int]], gens=None, labels=None, name=None, max_order=MAX_ORDER
) -> FiniteGroup:
    """Validate a Cayley table and wrap it as a :class:`FiniteGroup`.

    Raises :class:`NotAGroup` with a witness on the first failed axiom.
    """
    n = len(table)
    if n == 0:
        raise NotAGroup("empty table")
    if n > max_order:
        raise NotAGroup(f"order {n} exceeds the supported bound {max_order}")
    mul = tuple(tuple(int(v) for v in row) for row in table)
    for i, row in enumerate(mul):
        if len(row) != n:
            raise NotAGroup(f"row {i} has length {len(row)}, expected {n}", witness=i)
        for v in row:
            if not 0 <= v < n:
                raise NotAGroup(f"entry {v} in row {i} out of range", witness=i)
    for a in range(n):
        if mul[0][a] != a or mul[a][0] != a:
            raise NotAGroup("index 0 is not a two-sided identity", witness=(0, a))
    inv = [None] * n
    for a in range(n):
        for b in range(n):
            if mul[a][b] == 0:
                inv[a] = b
                break
        if inv[a] is None or mul[inv[a]][a] != 0:
            raise NotAGroup(f"element {a} has no inverse", witness=a)
    for a in range(n):
        if len(set(mul[a])) != n or len({mul[b][a] for b in range(n)}) != n:
            raise NotAGroup(f"table is not a Latin square at {a}", witness=a)
    for a in range(n):
        ra = mul[a]
        for b in range(n):
            ab = ra[b]
            rb = mul[b]
            rab = mul[ab]
            for c in range(n):
                if rab[c] != ra[rb[c]]:
                    raise NotAGroup("associativity fails", witness=(a, b, c))
    if gens is None:
        gens = greedy_generators(mul)
    else:
        gens = [int(g) for g in gens]
        if any(not 0 <= g < n for g in gens):
            raise NotAGroup("generator out of range", witness=gens)
    g = FiniteGroup(mul, tuple(inv), gens, labels, name)
    if len(g.closure(gens)) != n:
        raise NotAGroup("the given generators do not generate the group", witness=list(gens))
    if labels is not None and len(labels) != n:
        raise NotAGroup("label list has the wrong length")
    return g


def _from_rule(n, rule, gens, labels, name):
    table = [[rule(a, b) for b in range(n)] for a in range(n)]
    return from_cayley(table, gens=gens, labels=labels, name=name)


def _power_label(name, k):
    if k == 0:
        return ""
    if k == 1:
        return name
    return f"{name}^{k}"


# -- named groups -------------------------------------------------------------


def cyclic(n: int, gen_name="g") -> FiniteGroup:
    if n < 1:
        raise UnsupportedSpec(f"cyclic group needs n >= 1, got {n}")
    labels = ["1"] + [_power_label(gen_name, k) for k in range(1, n)]
    gens = [1] if n > 1 else []
    return _from_rule(n, lambda a, b: (a + b) % n, gens, labels, f"C{n}")


def dihedral(n: int, gen_names=("a", "b")) -> FiniteGroup:
    """Order ``2n``; element ``i + n*j`` is ``a^i b^j`` with ``a^n = b^2 = 1``, ``bab = a^-1``."""
    if n < 1:
        raise UnsupportedSpec(f"dihedral group needs n >= 1, got {n}")
    an, bn = gen_names

    def rule(u, v):
        i, j = u % n, u // n
        k, l = v % n, v // n
        return (i + (k if j == 0 else -k)) % n + n * ((j + l) % 2)

    labels = []
    for j in range(2):
        for i in range(n):
            sep = " " if len(an) > 1 and i and j else ""
            s = _power_label(an, i) + (sep + bn if j else "")
            labels.append(s or "1")
    gens = [1, n] if n > 1 else [1]
    return _from_rule(2 * n, rule, gens, labels, f"D{n}")


_QUAT = {
    # unit quaternion products on (sign, basis) with basis 0=1,1=i,2=j,3=k
    (1, 1): (-1, 0), (2, 2): (-1, 0), (3, 3): (-1, 0),
    (1, 2): (1, 3), (2, 3): (1, 1), (3, 1): (1, 2),
    (2, 1): (-1, 3), (3, 2): (-1, 1), (1, 3): (-1, 2),
}


def quaternion8() -> FiniteGroup:
    """Elements ``1, -1, i, -i, j, -j, k, -k`` in that index order; generated by ``i, j``."""

    def decode(u):
        return (1 if u % 2 == 0 else -1), u // 2

    def rule(u, v):
        su, bu = decode(u)
        sv, bv = decode(v)
        if bu == 0:
            s, b = 1, bv
        elif bv == 0:
            s, b = 1, bu
        else:
            s, b = _QUAT[(bu, bv)]
        s *= su * sv
        return 2 * b + (0 if s == 1 else 1)

    labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    return _from_rule(8, rule, [2, 4], labels, "Q8")


def symmetric(n: int, even_only=False) -> FiniteGroup:
    """``S_n`` (or ``A_n``) on permutations of ``0..n-1`` listed lexicographically."""
    if n < 1:
        raise UnsupportedSpec(f"symmetric group needs n >= 1, got {n}")
    perms = [p for p in itertools.permutations(range(n)) if not even_only or _parity(p) == 0]
    index = {p: k for k, p in enumerate(perms)}
    table = [[index[tuple(p[q[i]] for i in range(n))] for q in perms] for p in perms]
    labels = ["".join(map(str, p)) for p in perms]
    return from_cayley(table, labels=labels, name=f"{'A' if even_only else 'S'}{n}")


def _parity(p) -> int:
    seen, swaps = set(), 0
    for i in range(len(p)):
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            length += 1
        swaps += max(length - 1, 0)
    return swaps % 2


def direct_product(g: FiniteGroup, h: FiniteGroup, name=None) -> FiniteGroup:
    """Element ``i*|h| + j`` is the pair ``(i, j)``."""
    m = h.order

    def rule(u, v):
        return g.mul[u // m][v // m] * m + h.mul[u % m][v % m]

    gens = [x * m for x in g.gens] + list(h.gens)
    labels = [f"({g.label(i)},{h.label(j)})" for i in g for j in h]
    name = name or f"{g.name or 'G'} x {h.name or 'H'}"
    return _from_rule(g.order * m, rule, gens, labels, name)


def construct_named(spec) -> FiniteGroup:
    """Build a group from a small dictionary description.

    ``{"construct": "cyclic", "n": 4}``, ``{"construct": "dihedral", "n": 4}``,
    ``{"construct": "quaternion8"}`` and
    ``{"construct": "direct_product", "factors": [spec, spec, ...]}``.
    An optional ``"gen_names"`` list renames the generators in the labels.
    """
    if not isinstance(spec, dict) or "construct" not in spec:
        raise UnsupportedSpec(f"not a group construction: {spec!r}")
    kind = spec["construct"]
    names = spec.get("gen_names")
    if kind == "cyclic":
        return cyclic(int(spec["n"]), *(names or []))
    if kind == "dihedral":
        return dihedral(int(spec["n"]), tuple(names) if names else ("a", "b"))
    if kind in ("quaternion8", "quaternion"):
        return quaternion8()
    if kind == "direct_product":
        factors = [construct_named(f) for f in spec["factors"]]
        if not factors:
            raise UnsupportedSpec("direct product of no factors")
        g = factors[0]
        for h in factors[1:]:
            g = direct_product(g, h)
        return g
    if kind == "symmetric":
        return symmetric(int(spec["n"]))
    if kind == "alternating":
        return symmetric(int(spec["n"]), even_only=True)
    if kind == "trivial":
        return cyclic(1)
    raise UnsupportedSpec(f"unknown construction {kind!r}")


# -- homomorphisms and actions -------------------------------------------------


class GroupHom:
    __slots__ = ("cod", "dom", "map")

    def __init__(self, dom: FiniteGroup, cod: FiniteGroup, mapping, check=True):
        self.dom = dom
        self.cod = cod
        self.map = tuple(int(v) for v in mapping)
        if check:
            self.validate()

    def validate(self):
        d, c, f = self.dom, self.cod, self.map
        if len(f) != d.order:
            raise NotAHomomorphism(f"map has length {len(f)}, domain order {d.order}")
        if any(not 0 <= v < c.order for v in f):
            raise NotAHomomorphism("image out of range")
        if f[0] != 0:
            raise NotAHomomorphism("identity not preserved", witness=(0,))
        for a in d:
            for b in d:
                if f[d.mul[a][b]] != c.mul[f[a]][f[b]]:
                    raise NotAHomomorphism("multiplicativity fails", witness=(a, b))

    def __call__(self, a):
        return self.map[a]

    def __repr__(self):
        return f"<GroupHom {self.dom!r} -> {self.cod!r}>"

    def kernel(self):
        return [a for a in self.dom if self.map[a] == 0]

    def image(self):
        return sorted(set(self.map))

    def is_injective(self):
        return len(set(self.map)) == self.dom.order

    def is_surjective(self):
        return len(set(self.map)) == self.cod.order

    def compose(self, other: GroupHom) -> GroupHom:
        """``self ∘ other``."""
        return GroupHom(other.dom, self.cod, [self.map[other.map[a]] for a in other.dom], check=False)


def identity_hom(g: FiniteGroup) -> GroupHom:
    return GroupHom(g, g, range(g.order), check=False)


def trivial_hom(dom: FiniteGroup, cod: FiniteGroup) -> GroupHom:
    return GroupHom(dom, cod, [0] * dom.order, check=False)


def extend_from_generators(dom: FiniteGroup, cod_mul, images: Sequence[int]):
    """Extend generator images along the Cayley graph; ``None`` if inconsistent.

    ``images[i]`` is the image of ``dom.gens[i]``. Checking ``f(u g) = f(u) f(g)``
    on every edge is enough for ``f`` to be a homomorphism.
    """
    n = dom.order
    f = [None] * n
    f[0] = 0
    queue = deque([0])
    gens = dom.gens
    mul = dom.mul
    while queue:
        u = queue.popleft()
        fu = cod_mul[f[u]]
        for g, img in zip(gens, images):
            v = mul[u][g]
            w = fu[img]
            if f[v] is None:
                f[v] = w
                queue.append(v)
            elif f[v] != w:
                return None
    return f


def hom_from_generator_images(dom: FiniteGroup, cod: FiniteGroup, images) -> GroupHom:
    images = [int(i) for i in images]
    if len(images) != len(dom.gens):
        raise NotAHomomorphism("need one image per generator")
    f = extend_from_generators(dom, cod.mul, images)
    if f is None:
        raise NotAHomomorphism("generator images do not extend to a homomorphism", witness=images)
    return GroupHom(dom, cod, f, check=False)


class GroupAction:
    """Left action by automorphisms: ``act[x][a]`` is ``^x a``."""

    __slots__ = ("act", "actor", "target")

    def __init__(self, actor: FiniteGroup, target: FiniteGroup, act, check=True):
        self.actor = actor
        self.target = target
        self.act = tuple(tuple(int(v) for v in row) for row in act)
        if check:
            self.validate()

    def validate(self):
        x0, t, act = self.actor, self.target, self.act
        if len(act) != x0.order or any(len(r) != t.order for r in act):
            raise NotAHomomorphism("action table has the wrong shape")
        if act[0] != tuple(range(t.order)):
            raise NotAHomomorphism("identity does not act trivially", witness=(0,))
        for x in x0:
            row = act[x]
            if len(set(row)) != t.order:
                raise NotAHomomorphism(f"element {x} does not act bijectively", witness=(x,))
            for a in t:
                for b in t:
                    if row[t.mul[a][b]] != t.mul[row[a]][row[b]]:
                        raise NotAHomomorphism(
                            f"element {x} does not act by a homomorphism", witness=(x, a, b)
                        )
        for x in x0:
            for y in x0:
                xy = act[x0.mul[x][y]]
                ax, ay = act[x], act[y]
                for a in t:
                    if xy[a] != ax[ay[a]]:
                        raise NotAHomomorphism("not an action: ^(xy)a != ^x(^y a)", witness=(x, y, a))

    def __call__(self, x, a):
        return self.act[x][a]

    def is_trivial(self):
        return all(row == tuple(range(self.target.order)) for row in self.act)


def trivial_action(actor: FiniteGroup, target: FiniteGroup) -> GroupAction:
    row = tuple(range(target.order))
    return GroupAction(actor, target, [row] * actor.order, check=False)


def conjugation_action(g: FiniteGroup) -> GroupAction:
    return GroupAction(g, g, [[g.conj(x, a) for a in g] for x in g], check=False)


def action_from_generator_images(actor: FiniteGroup, target: FiniteGroup, images) -> GroupAction:
    """``images[i][j]`` is ``^{x_i} a_j`` for actor generator ``x_i`` and target generator ``a_j``."""
    autos = []
    for row in images:
        f = extend_from_generators(target, target.mul, [int(v) for v in row])
        if f is None or len(set(f)) != target.order:
            raise NotAHomomorphism("generator images do not define an automorphism", witness=row)
        autos.append(f)
    # extend x -> automorphism along the actor's Cayley graph (composition of tables)
    n = actor.order
    table = [None] * n
    table[0] = tuple(range(target.order))
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for g, auto in zip(actor.gens, autos):
            v = actor.mul[u][g]
            w = tuple(table[u][auto[a]] for a in target)
            if table[v] is None:
                table[v] = w
                queue.append(v)
            elif table[v] != w:
                raise NotAHomomorphism("generator images do not define an action", witness=(u, g))
    return GroupAction(actor, target, table)


# -- automorphisms and isomorphisms -------------------------------------------


def _candidate_images(g: FiniteGroup, h: FiniteGroup):
    orders_h = [h.element_order(b) for b in h]
    return [[b for b in h if orders_h[b] == g.element_order(x)] for x in g.gens]


def iter_isomorphisms(g: FiniteGroup, h: FiniteGroup, budget=DEFAULT_SEARCH_BUDGET) -> Iterator[GroupHom]:
    """All isomorphisms ``g -> h`` in lexicographic order of generator images."""
    if g.order != h.order or g.order_profile() != h.order_profile():
        return
    candidates = _candidate_images(g, h)
    spent = 0
    for images in itertools.product(*candidates):
        spent += 1
        if spent > budget:
            raise SearchBudgetExceeded(f"more than {budget} generator-image candidates")
        f = extend_from_generators(g, h.mul, images)
        if f is not None and len(set(f)) == h.order:
            yield GroupHom(g, h, f, check=False)


def iso_test(g: FiniteGroup, h: FiniteGroup, budget=DEFAULT_SEARCH_BUDGET) -> GroupHom | None:
    """An isomorphism ``g -> h`` or ``None``; ``None`` means none exists."""
    if g.order != h.order or g.is_abelian() != h.is_abelian():
        return None
    return next(iter_isomorphisms(g, h, budget), None)


def automorphism_group(g: FiniteGroup, budget=DEFAULT_SEARCH_BUDGET):
    """``(Aut(g), tables)``; element ``k`` of ``Aut(g)`` is the automorphism ``tables[k]``.

    The product is composition, ``(φ·ψ)(a) = φ(ψ(a))``, so evaluating
    ``tables[k][a]`` is a left action. Index 0 is the identity automorphism;
    the others are labelled ``phi1, phi2, ...``.
    """
    if g.order > MAX_ORDER:
        raise SearchBudgetExceeded(f"order {g.order} exceeds {MAX_ORDER}")
    tables = sorted(tuple(f.map) for f in iter_isomorphisms(g, g, budget))
    index = {t: k for k, t in enumerate(tables)}
    mul = [[index[tuple(p[q[a]] for a in g)] for q in tables] for p in tables]
    labels = ["1"] + [f"phi{k}" for k in range(1, len(tables))]
    aut = from_cayley(mul, labels=labels, name=f"Aut({g.name or 'G'})")
    return aut, tables


def inner_hom(g: FiniteGroup, aut=None) -> GroupHom:
    """``g -> Aut(g)`` sending ``x`` to conjugation by ``x``."""
    a, tables = aut if aut is not None else automorphism_group(g)
    index = {t: k for k, t in enumerate(tables)}
    return GroupHom(g, a, [index[tuple(g.conj(x, y) for y in g)] for x in g])


# -- subgroups and quotients ---------------------------------------------------


def centre_of(g: FiniteGroup) -> list:
    m = g.mul
    return [z for z in g if all(m[z][x] == m[x][z] for x in g)]


def commutator(g: FiniteGroup, x, y):
    return g.commutator(x, y)


def generated_subgroup(g: FiniteGroup, elements) -> list:
    return sorted(g.closure(elements))


def is_subgroup(g: FiniteGroup, elements) -> bool:
    s = set(elements)
    return 0 in s and all(g.mul[a][g.inv[b]] in s for a in s for b in s)


def normality_witness(g: FiniteGroup, elements):
    s = set(elements)
    for x in g:
        for n in s:
            if g.conj(x, n) not in s:
                return (x, n)
    return None


def is_normal(g: FiniteGroup, elements) -> bool:
    return is_subgroup(g, elements) and normality_witness(g, elements) is None


def subgroup(g: FiniteGroup, elements, name=None):
    """``(H, inclusion)`` with ``H`` re-indexed over the sorted element list."""
    elems = sorted(set(elements))
    if not is_subgroup(g, elems):
        raise NotAGroup("not a subgroup", witness=elems)
    pos = {e: i for i, e in enumerate(elems)}
    mul = [[pos[g.mul[a][b]] for b in elems] for a in elems]
    labels = [g.label(e) for e in elems] if g.labels is not None else None
    h = from_cayley(mul, labels=labels, name=name)
    return h, GroupHom(h, g, elems, check=False)


def quotient(g: FiniteGroup, normal, name=None):
    """``(G/N, projection)``; cosets are ordered by their smallest element."""
    n = sorted(set(normal))
    if not is_subgroup(g, n):
        raise NotAGroup("not a subgroup", witness=n)
    w = normality_witness(g, n)
    if w is not None:
        raise NotNormal("subgroup is not normal", witness=w)
    coset_of = [None] * g.order
    reps = []
    for x in g:
        if coset_of[x] is None:
            k = len(reps)
            reps.append(x)
            for m in n:
                coset_of[g.mul[x][m]] = k
    mul = [[coset_of[g.mul[a][b]] for b in reps] for a in reps]
    labels = [g.label(r) for r in reps] if g.labels is not None else None
    gens = sorted({coset_of[x] for x in g.gens} - {0})
    if len(_closure_in(mul, gens)) != len(reps):
        gens = None
    q = from_cayley(mul, gens=gens, labels=labels, name=name)
    return q, GroupHom(g, q, coset_of, check=False)


def _closure_in(mul, gens):
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for s in gens:
            v = mul[u][s]
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return seen


def kernel(h: GroupHom) -> list:
    return h.kernel()


def image(h: GroupHom) -> list:
    return h.image()


def lower_central_series(g: FiniteGroup) -> list:
    """``[G, [G,G], [G,[G,G]], ...]`` as sorted element lists, until it stabilises."""
    series = [list(g)]
    while True:
        cur = series[-1]
        nxt = generated_subgroup(g, {g.commutator(x, c) for x in g for c in cur})
        if nxt == cur:
            return series
        series.append(nxt)


def nilpotency_class(g: FiniteGroup) -> int | None:
    """Class of a nilpotent group (0 for the trivial group), ``None`` if not nilpotent."""
    series = lower_central_series(g)
    if len(series[-1]) != 1:
        return None
    return len(series) - 1


# -- words ---------------------------------------------------------------------

_POWER = re.compile(r"\^\(?(-?\d+)\)?")


def generator_names(g: FiniteGroup) -> dict:
    """Names of the generators as they appear in the labels."""
    if g.labels is None:
        return {}
    return {g.labels[x]: x for x in g.gens}


def evaluate_word(g: FiniteGroup, word: str, names: dict | None = None) -> int:
    """Evaluate a product of named elements with optional integer powers.

    Names are matched longest-first, so ``"alpha^2beta"`` and ``"BAB"`` both
    parse. ``1`` is the identity. Whitespace is ignored.
    """
    if names is None:
        names = {}
        if g.labels is not None:
            names.update({lab: i for i, lab in enumerate(g.labels) if re.fullmatch(r"[A-Za-z]\w*", lab)})
    keys = sorted(names, key=len, reverse=True)
    pos, result = 0, 0
    word = word.replace(" ", "").replace("⁻¹", "^-1")
    while pos < len(word):
        if word[pos] == "1" and not word[pos:pos + 2].startswith("1^"):
            elem, pos = 0, pos + 1
        else:
            for k in keys:
                if word.startswith(k, pos):
                    elem, pos = names[k], pos + len(k)
                    break
            else:
                raise ValueError(f"cannot parse {word[pos:]!r} in word {word!r}")
        m = _POWER.match(word, pos)
        if m:
            elem = g.power(elem, int(m.group(1)))
            pos = m.end()
        result = g.mul[result][elem]
    return result


def check_relation(g: FiniteGroup, relation: str, names: dict | None = None) -> bool:
    """``"C^2=1=B^2"``: every side must evaluate to the same element."""
    sides = [evaluate_word(g, s, names) for s in relation.split("=")]
    return all(s == sides[0] for s in sides)


# -- naming ---------------------------------------------------------------------


def _partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def _prime_powers(n):
    out, p = [], 2
    while n > 1:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
        p += 1
    return out


def _product_of(factors, name):
    g = factors[0]
    for h in factors[1:]:
        g = direct_product(g, h)
    g.name = name
    return g


def _abelian_candidates(n):
    choices = [[(p, part) for part in _partitions(e)] for p, e in _prime_powers(n)]
    for combo in itertools.product(*choices):
        orders = sorted(p**k for p, part in combo for k in part)
        yield " x ".join(f"C{o}" for o in orders), [cyclic(o) for o in orders]


def _nonabelian_candidates(n):
    if n == 6:
        yield "S3", [symmetric(3)]
    if n == 8:
        yield "D4", [dihedral(4)]
        yield "Q8", [quaternion8()]
    if n == 12:
        yield "A4", [symmetric(4, even_only=True)]
    if n == 24:
        yield "S4", [symmetric(4)]
    for k in range(1, n):
        if n % k:
            continue
        m2 = n // k
        if m2 % 2 == 0 and m2 // 2 >= 3 and (k, m2) != (1, 6) and (k, m2) != (1, 8):
            name = f"D{m2 // 2}" if k == 1 else f"C{k} x D{m2 // 2}"
            yield name, ([cyclic(k)] if k > 1 else []) + [dihedral(m2 // 2)]
        if m2 == 8 and k > 1:
            yield f"C{k} x Q8", [cyclic(k), quaternion8()]
        if m2 == 6 and k > 1:
            yield f"C{k} x S3", [cyclic(k), symmetric(3)]


def identify(g: FiniteGroup) -> str:
    """A conventional name such as ``"C2 x D4"``, or ``"group of order n"``."""
    if g.order == 1:
        return "1"
    cands = _abelian_candidates(g.order) if g.is_abelian() else _nonabelian_candidates(g.order)
    for name, factors in cands:
        h = _product_of(factors, name)
        if iso_test(g, h) is not None:
            return name
    return f"group of order {g.order}"
