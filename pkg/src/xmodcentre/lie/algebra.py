"""Lie algebras by structure constants, Lie crossed modules and braided ones.

Axiom identifiers used in :class:`~xmodcentre.errors.AxiomViolation`:

``"action"``       ``[u,v]·a = u·(v·a) - v·(u·a)``
``"derivation"``   ``x·[a,b] = [x·a,b] + [a,x·b]``
``"equivariance"`` ``∂(x·a) = [x,∂a]``
``"peiffer"``      ``∂(a)·b = [a,b]``
``"symmetric-peiffer"`` ``∂(a)·b + ∂(b)·a = 0``
``"reconstruction"`` the bracket ``∂(a)·b`` is a Lie bracket respected by ``∂``

and for braided crossed modules

``"lift"``         ``∂{x,y} = [x,y]``
``"lift-boundary"`` ``{∂a,∂b} = [a,b]``
``"skew"``         ``{∂a,x} + {x,∂a} = 0``
``"jacobi"``       ``{x,[y,z]} + {z,[x,y]} + {y,[z,x]} = 0``
``"alternating"``  ``∂{x,x} = 0``
``"three-term"``   ``{u,∂{v,w}} + {w,∂{u,v}} + {v,∂{w,u}} = 0``
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from ..checks import Report, Verdict
from ..errors import AxiomViolation, CheckFailure, NotLie, ShapeMismatch
from . import linalg as la
from .fields import QQ, Field


def _tensor(t, shape, fld: Field, what):
    a, b, c = shape
    try:
        if len(t) != a or any(len(r) != b for r in t) or any(len(s) != c for r in t for s in r):
            raise ShapeMismatch(f"{what}: expected shape {shape}")
    except TypeError as exc:
        raise ShapeMismatch(f"{what}: expected a nested list of shape {shape}") from exc
    return tuple(tuple(tuple(fld(x) for x in s) for s in r) for r in t)


def bilinear(t, u, v, fld: Field, n_out: int):
    """``sum_ij u_i v_j t[i][j]``."""
    out = fld.zeros(n_out)
    for i, ui in enumerate(u):
        if not ui:
            continue
        row = t[i]
        for j, vj in enumerate(v):
            if not vj:
                continue
            c = ui * vj
            for k, x in enumerate(row[j]):
                if x:
                    out[k] = out[k] + c * x
    return out


def _add(*vs):
    out = list(vs[0])
    for v in vs[1:]:
        out = [a + b for a, b in zip(out, v)]
    return out


def _sub(u, v):
    return [a - b for a, b in zip(u, v)]


def _scale(c, v):
    return [c * a for a in v]


def _unit(n, i, fld: Field):
    v = fld.zeros(n)
    v[i] = fld.one
    return v


def _is_zero(v):
    return not any(v)


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    """``[e_i, e_j] = sum_k sc[i][j][k] e_k`` over ``field``."""

    dim: int
    field: Field
    sc: tuple
    labels: tuple

    def bracket(self, u, v):
        return bilinear(self.sc, u, v, self.field, self.dim)

    def basis(self, i):
        return _unit(self.dim, i, self.field)

    def basis_vectors(self):
        return [self.basis(i) for i in range(self.dim)]

    def zero(self):
        return self.field.zeros(self.dim)

    def vector(self, values):
        return self.field.vector(values)

    def is_abelian(self):
        return not any(x for r in self.sc for s in r for x in s)

    def over(self, fld: Field) -> LieAlgebra:
        return make_lie(self.dim, _reinterpret(self.sc, fld), fld, self.labels)


def _reinterpret(t, fld: Field):
    if isinstance(t, (list, tuple)):
        return [_reinterpret(x, fld) for x in t]
    return fld(t)


def make_lie(dim: int, sc, field: Field = QQ, labels=None) -> LieAlgebra:
    sc = _tensor(sc, (dim, dim, dim), field, "structure constants")
    labels = tuple(labels) if labels is not None else tuple(f"e{i}" for i in range(dim))
    if len(labels) != dim:
        raise ShapeMismatch("wrong number of basis labels")
    for i in range(dim):
        for j in range(i, dim):
            if any(a + b for a, b in zip(sc[i][j], sc[j][i])):
                raise NotLie(f"[{labels[i]},{labels[j]}] + [{labels[j]},{labels[i]}] != 0", (i, j))
    alg = LieAlgebra(dim, field, sc, labels)
    e = alg.basis_vectors()
    for i, j, k in combinations(range(dim), 3):
        total = _add(
            alg.bracket(e[i], alg.bracket(e[j], e[k])),
            alg.bracket(e[k], alg.bracket(e[i], e[j])),
            alg.bracket(e[j], alg.bracket(e[k], e[i])),
        )
        if not _is_zero(total):
            raise NotLie(f"Jacobi identity fails on ({labels[i]}, {labels[j]}, {labels[k]})", (i, j, k))
    return alg


def abelian(dim: int, field: Field = QQ, labels=None) -> LieAlgebra:
    zero = [[[0] * dim for _ in range(dim)] for _ in range(dim)]
    return make_lie(dim, zero, field, labels)


def sl2(field: Field = QQ) -> LieAlgebra:
    """Basis ``(e, f, h)`` with ``[h,e] = 2e``, ``[h,f] = -2f``, ``[e,f] = h``."""
    sc = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    E, F, H = range(3)
    sc[H][E][E], sc[E][H][E] = 2, -2
    sc[H][F][F], sc[F][H][F] = -2, 2
    sc[E][F][H], sc[F][E][H] = 1, -1
    return make_lie(3, sc, field, ("e", "f", "h"))


def adjoint_tensor(alg: LieAlgebra):
    return [[list(alg.sc[i][j]) for j in range(alg.dim)] for i in range(alg.dim)]


def structure_on(alg: LieAlgebra, vectors, labels=None) -> LieAlgebra:
    """The subalgebra spanned by the independent ``vectors``."""
    fld = alg.field
    n = len(vectors)
    sc = []
    for u in vectors:
        row = []
        for v in vectors:
            y = la.solve(vectors, alg.bracket(u, v), fld)
            if y is None:
                raise CheckFailure("subalgebra", "span is not closed under the bracket", (u, v))
            row.append(y)
        sc.append(row)
    return make_lie(n, sc, fld, labels)


def quotient_algebra(alg: LieAlgebra, ideal, labels=None):
    """``(alg / ideal, quotient data)``; ``ideal`` need not be independent."""
    fld = alg.field
    q = la.quotient(alg.basis_vectors(), ideal, alg.dim, fld)
    for u in alg.basis_vectors():
        for v in q.sub:
            if la.solve(q.sub, alg.bracket(u, v), fld) is None:
                raise CheckFailure("quotient", "subspace is not an ideal", (u, v))
    sc = [[q.coordinates(alg.bracket(u, v)) for v in q.basis] for u in q.basis]
    return make_lie(q.dim, sc, fld, labels), q


@dataclass(frozen=True, eq=False)
class LieCrossedModule:
    """``boundary[j]`` is ``∂(e_j)`` in the basis of ``l0``.

    ``action[i][j][k]`` gives ``f_i · e_j = sum_k action[i][j][k] e_k`` with
    ``f_i`` a basis vector of ``l0`` and ``e_j`` one of ``l1``.
    """

    l1: LieAlgebra
    l0: LieAlgebra
    boundary: tuple
    action: tuple
    name: str = ""

    @property
    def field(self):
        return self.l0.field

    def d(self, a):
        return la.combine(a, self.boundary, self.field, self.l0.dim)

    def act(self, x, a):
        return bilinear(self.action, x, a, self.field, self.l1.dim)

    def over(self, fld: Field) -> LieCrossedModule:
        return make_lie_xmod(
            self.l1.over(fld),
            self.l0.over(fld),
            _reinterpret(self.boundary, fld),
            _reinterpret(self.action, fld),
            self.name,
        )


def _matrix(m, rows, cols, fld: Field, what):
    if len(m) != rows or any(len(r) != cols for r in m):
        raise ShapeMismatch(f"{what}: expected a {rows}x{cols} matrix")
    return tuple(tuple(fld(x) for x in r) for r in m)


def lie_xmod_witness(x: LieCrossedModule):
    """``(axiom, message, witness)`` for the first failing identity, else ``None``."""
    l1, l0 = x.l1, x.l0
    e = l1.basis_vectors()
    f = l0.basis_vectors()
    for i, u in enumerate(f):
        for j, v in enumerate(f):
            for k, a in enumerate(e):
                lhs = x.act(l0.bracket(u, v), a)
                rhs = _sub(x.act(u, x.act(v, a)), x.act(v, x.act(u, a)))
                if lhs != rhs:
                    return "action", "[u,v]·a != u·(v·a) - v·(u·a)", (i, j, k)
    for i, u in enumerate(f):
        for j, a in enumerate(e):
            for k, b in enumerate(e):
                lhs = x.act(u, l1.bracket(a, b))
                rhs = _add(l1.bracket(x.act(u, a), b), l1.bracket(a, x.act(u, b)))
                if lhs != rhs:
                    return "derivation", "x·[a,b] != [x·a,b] + [a,x·b]", (i, j, k)
    for i, u in enumerate(f):
        for j, a in enumerate(e):
            if x.d(x.act(u, a)) != l0.bracket(u, x.d(a)):
                return "equivariance", "∂(x·a) != [x,∂a]", (i, j)
    for i, a in enumerate(e):
        for j, b in enumerate(e):
            if x.act(x.d(a), b) != l1.bracket(a, b):
                return "peiffer", "∂(a)·b != [a,b]", (i, j)
    for i, a in enumerate(e):
        for j, b in enumerate(e):
            if not _is_zero(_add(x.act(x.d(a), b), x.act(x.d(b), a))):
                return "symmetric-peiffer", "∂(a)·b + ∂(b)·a != 0", (i, j)
    # the bracket rebuilt from ∂ and the action must be a Lie bracket that ∂ respects
    rebuilt = [[x.act(x.d(a), b) for b in e] for a in e]
    try:
        make_lie(l1.dim, rebuilt, l1.field)
    except NotLie as exc:
        return "reconstruction", f"∂(a)·b is not a Lie bracket: {exc}", exc.witness
    for i, a in enumerate(e):
        for j, b in enumerate(e):
            if x.d(rebuilt[i][j]) != l0.bracket(x.d(a), x.d(b)):
                return "reconstruction", "∂ does not respect ∂(a)·b", (i, j)
    return None


def make_lie_xmod(l1: LieAlgebra, l0: LieAlgebra, boundary, action, name="") -> LieCrossedModule:
    if l1.field != l0.field:
        raise ShapeMismatch("l1 and l0 are over different fields")
    fld = l0.field
    x = LieCrossedModule(
        l1,
        l0,
        _matrix(boundary, l1.dim, l0.dim, fld, "boundary"),
        _tensor(action, (l0.dim, l1.dim, l1.dim), fld, "action"),
        name,
    )
    bad = lie_xmod_witness(x)
    if bad is not None:
        raise AxiomViolation(*bad)
    return x


def zero_source(l0: LieAlgebra, name="") -> LieCrossedModule:
    """``0 -> l0``."""
    l1 = abelian(0, l0.field)
    return make_lie_xmod(l1, l0, [], [[] for _ in range(l0.dim)], name)


def identity_lie_xmod(alg: LieAlgebra, name="") -> LieCrossedModule:
    """``id: alg -> alg`` with the adjoint action."""
    eye = [alg.basis(i) for i in range(alg.dim)]
    return make_lie_xmod(alg, alg, eye, adjoint_tensor(alg), name)


def ideal_inclusion(alg: LieAlgebra, vectors, labels=None, name="") -> LieCrossedModule:
    """``I -> alg`` for an ideal spanned by independent ``vectors``; adjoint action."""
    sub = structure_on(alg, vectors, labels)
    fld = alg.field
    action = []
    for u in alg.basis_vectors():
        rows = []
        for v in vectors:
            y = la.solve(vectors, alg.bracket(u, v), fld)
            if y is None:
                raise CheckFailure("ideal", "span is not an ideal", (u, v))
            rows.append(y)
        action.append(rows)
    return make_lie_xmod(sub, alg, [list(v) for v in vectors], action, name)


# braided crossed modules


def _bcm_brackets(l1, l0, boundary, bracket):
    fld = l0.field
    bmat = _matrix(boundary, l1.dim, l0.dim, fld, "boundary")
    br = _tensor(bracket, (l0.dim, l0.dim, l1.dim), fld, "bracket")

    def d(a):
        return la.combine(a, bmat, fld, l0.dim)

    def curly(u, v):
        return bilinear(br, u, v, fld, l1.dim)

    return bmat, br, d, curly


def braided_witness(l1: LieAlgebra, l0: LieAlgebra, boundary, bracket):
    """First failure among lift, lift-boundary, skew and jacobi, else ``None``."""
    _, _, d, curly = _bcm_brackets(l1, l0, boundary, bracket)
    e, f = l1.basis_vectors(), l0.basis_vectors()
    for i, u in enumerate(f):
        for j, v in enumerate(f):
            if d(curly(u, v)) != l0.bracket(u, v):
                return "lift", "∂{x,y} != [x,y]", (i, j)
    for i, a in enumerate(e):
        for j, b in enumerate(e):
            if curly(d(a), d(b)) != l1.bracket(a, b):
                return "lift-boundary", "{∂a,∂b} != [a,b]", (i, j)
    bad = _skew_witness(e, f, d, curly)
    if bad:
        return bad
    for i, j, k in _triples(l0.dim):
        u, v, w = f[i], f[j], f[k]
        total = _add(curly(u, l0.bracket(v, w)), curly(w, l0.bracket(u, v)), curly(v, l0.bracket(w, u)))
        if not _is_zero(total):
            return "jacobi", "{x,[y,z]} + {z,[x,y]} + {y,[z,x]} != 0", (i, j, k)
    return None


def _triples(n):
    return [(i, j, k) for i in range(n) for j in range(n) for k in range(n)]


def _skew_witness(e, f, d, curly):
    for i, a in enumerate(e):
        for j, u in enumerate(f):
            if not _is_zero(_add(curly(d(a), u), curly(u, d(a)))):
                return "skew", "{∂a,x} + {x,∂a} != 0", (i, j)
    return None


def reconstruction_witness(l1: LieAlgebra, l0: LieAlgebra, boundary, bracket):
    """Check the linear-map-only axiom set and rebuild both Lie brackets from it.

    The bracket on ``l0`` is rebuilt as ``∂{x,y}`` and the one on ``l1`` as
    ``{∂a,∂b}``. Both must be Lie brackets, ``∂`` must respect them, and they
    must coincide with the brackets already carried by ``l0`` and ``l1``.
    """
    fld = l0.field
    _, _, d, curly = _bcm_brackets(l1, l0, boundary, bracket)
    e, f = l1.basis_vectors(), l0.basis_vectors()
    bad = _skew_witness(e, f, d, curly)
    if bad:
        return bad
    for i in range(l0.dim):
        for j in range(i, l0.dim):
            # polarised form of ∂{x,x} = 0, valid since 2 is invertible
            total = d(_add(curly(f[i], f[j]), curly(f[j], f[i])))
            if not _is_zero(total):
                return "alternating", "∂{x,x} != 0", (i, j)
    for i, j, k in _triples(l0.dim):
        u, v, w = f[i], f[j], f[k]
        total = _add(curly(u, d(curly(v, w))), curly(w, d(curly(u, v))), curly(v, d(curly(w, u))))
        if not _is_zero(total):
            return "three-term", "{u,∂{v,w}} + {w,∂{u,v}} + {v,∂{w,u}} != 0", (i, j, k)
    sc0 = [[d(curly(u, v)) for v in f] for u in f]
    sc1 = [[curly(d(a), d(b)) for b in e] for a in e]
    try:
        r0 = make_lie(l0.dim, sc0, fld)
        r1 = make_lie(l1.dim, sc1, fld)
    except NotLie as exc:
        return "three-term", f"rebuilt bracket is not a Lie bracket: {exc}", exc.witness
    for i, a in enumerate(e):
        for j, b in enumerate(e):
            if d(r1.bracket(a, b)) != r0.bracket(d(a), d(b)):
                return "three-term", "∂ does not respect the rebuilt brackets", (i, j)
    if r0.sc != l0.sc:
        return "lift", "rebuilt bracket on l0 differs from the given one", None
    if r1.sc != l1.sc:
        return "lift-boundary", "rebuilt bracket on l1 differs from the given one", None
    return None


@dataclass
class LieBCM:
    l1: LieAlgebra
    l0: LieAlgebra
    boundary: tuple
    bracket: tuple
    xmod: LieCrossedModule  # with the induced action x·a = {x, ∂a}
    report: Report = field(default_factory=lambda: Report("braided Lie crossed module"))

    def curly(self, u, v):
        return bilinear(self.bracket, u, v, self.l0.field, self.l1.dim)


def induced_action(l1: LieAlgebra, l0: LieAlgebra, boundary, bracket):
    _, _, d, curly = _bcm_brackets(l1, l0, boundary, bracket)
    return [[curly(u, d(a)) for a in l1.basis_vectors()] for u in l0.basis_vectors()]


def verify_lie_bcm(l1: LieAlgebra, l0: LieAlgebra, boundary, bracket) -> LieBCM:
    """Both axiom sets must give the same verdict; raises on failure."""
    first = braided_witness(l1, l0, boundary, bracket)
    second = reconstruction_witness(l1, l0, boundary, bracket)
    if (first is None) != (second is None):
        raise CheckFailure("bcm", "the two braided axiom sets disagree", (first, second))
    if first is not None:
        raise AxiomViolation(*first)
    bmat, br, d, curly = _bcm_brackets(l1, l0, boundary, bracket)
    rep = Report("braided Lie crossed module")
    rep.add("lift/lift-boundary/skew/jacobi", Verdict(True))
    rep.add("skew/alternating/three-term", Verdict(True))
    xm = make_lie_xmod(l1, l0, bmat, induced_action(l1, l0, bmat, br), "induced")
    rep.add("induced action is a crossed module", Verdict(True))
    image = [d(a) for a in l1.basis_vectors()]
    f = l0.basis_vectors()
    nonab = next(
        ((i, j) for i, u in enumerate(f) for j, v in enumerate(f) if la.solve(image, l0.bracket(u, v), l0.field) is None),
        None,
    )
    rep.add("pi0 abelian", Verdict(nonab is None, "[x,y] is not a boundary", nonab))
    kernel = la.nullspace(_transpose(bmat, l1.dim, l0.dim), l1.dim, l1.field)
    moving = next(((i, a) for i, u in enumerate(f) for a in kernel if not _is_zero(xm.act(u, a))), None)
    rep.add("trivial action on pi1", Verdict(moving is None, "x·a != 0 for some a in Ker ∂", moving))
    if not rep.ok:
        name, v = next(iter(rep.failures().items()))
        raise CheckFailure(name, v.message, v.witness)
    return LieBCM(l1, l0, bmat, br, xm, rep)


def _transpose(m, rows, cols):
    """Rows of ``m^T`` so that ``nullspace`` of it is ``{a : sum_j a_j m[j] = 0}``."""
    return [[m[j][c] for j in range(rows)] for c in range(cols)]


def kernel_of_boundary(x: LieCrossedModule):
    return la.nullspace(_transpose(x.boundary, x.l1.dim, x.l0.dim), x.l1.dim, x.field)


def image_of_boundary(x: LieCrossedModule):
    return la.independent([list(r) for r in x.boundary], x.field)
