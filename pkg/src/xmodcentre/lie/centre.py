"""The centre ``Z0(L)`` of a Lie crossed module and its braided structure.

An element is a pair ``(x, ξ)`` with ``x`` in ``l0`` and ``ξ: l0 -> l1``
linear. It is stored as one vector of length ``n0 + n0*n1``: first ``x``,
then the rows ``ξ(f_0), ..., ξ(f_{n0-1})``.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..checks import Report, Verdict
from ..errors import CheckFailure, NotLie, XmodError
from . import linalg as la
from .algebra import (
    LieAlgebra,
    LieBCM,
    LieCrossedModule,
    _sub,
    image_of_boundary,
    kernel_of_boundary,
    make_lie,
    make_lie_xmod,
    quotient_algebra,
    structure_on,
    verify_lie_bcm,
)


@dataclass(frozen=True)
class Pair:
    x: list
    xi: list  # xi[t] = ξ(f_t)

    def __call__(self, t, x: LieCrossedModule):
        return la.combine(t, self.xi, x.field, x.l1.dim)


def split(v, x: LieCrossedModule) -> Pair:
    n0, n1 = x.l0.dim, x.l1.dim
    return Pair(list(v[:n0]), [list(v[n0 + t * n1 : n0 + (t + 1) * n1]) for t in range(n0)])


def join(p: Pair) -> list:
    out = list(p.x)
    for row in p.xi:
        out.extend(row)
    return out


def ze_system(x: LieCrossedModule) -> list:
    """Rows of the linear system cut out by the three centre equations.

    ``∂ξ(t) = [x,t]`` for each basis ``t``, ``ξ(∂a) = x·a`` for each basis
    ``a`` and ``ξ([s,t]) = s·ξ(t) - t·ξ(s)`` for each basis pair ``s < t``.
    """
    fld = x.field
    n0, n1 = x.l0.dim, x.l1.dim
    N = n0 + n0 * n1
    X = lambda i: i
    XI = lambda t, k: n0 + t * n1 + k
    B, C, A = x.boundary, x.l0.sc, x.action
    rows = []

    def new():
        r = fld.zeros(N)
        rows.append(r)
        return r

    for t in range(n0):
        for m in range(n0):
            r = new()
            for k in range(n1):
                r[XI(t, k)] += B[k][m]
            for i in range(n0):
                r[X(i)] -= C[i][t][m]
    for j in range(n1):
        for k in range(n1):
            r = new()
            for t in range(n0):
                r[XI(t, k)] += B[j][t]
            for i in range(n0):
                r[X(i)] -= A[i][j][k]
    for s in range(n0):
        for t in range(s + 1, n0):
            for k in range(n1):
                r = new()
                for u in range(n0):
                    r[XI(u, k)] += C[s][t][u]
                for l in range(n1):
                    r[XI(t, l)] -= A[s][l][k]
                    r[XI(s, l)] += A[t][l][k]
    return [r for r in rows if any(r)]


def satisfies_ze(p: Pair, x: LieCrossedModule) -> str | None:
    """Name of the first centre equation ``p`` violates, else ``None``."""
    l0, l1 = x.l0, x.l1
    for t in l0.basis_vectors():
        if x.d(p(t, x)) != l0.bracket(p.x, t):
            return "∂ξ(t) = [x,t]"
    for a in l1.basis_vectors():
        if p(x.d(a), x) != x.act(p.x, a):
            return "ξ(∂a) = x·a"
    f = l0.basis_vectors()
    for s in f:
        for t in f:
            if p(l0.bracket(s, t), x) != _sub(x.act(s, p(t, x)), x.act(t, p(s, x))):
                return "ξ([s,t]) = s·ξ(t) - t·ξ(s)"
    return None


def zeta(c, x: LieCrossedModule) -> Pair:
    """``δ(c) = (∂c, t -> -t·c)``."""
    return Pair(x.d(c), [[-v for v in x.act(t, c)] for t in x.l0.basis_vectors()])


def pair_bracket(p: Pair, q: Pair, x: LieCrossedModule) -> Pair:
    """``[(x,ξ),(y,η)] = ([x,y], t -> -t·ξ(y))``."""
    c = p(q.x, x)
    return Pair(x.l0.bracket(p.x, q.x), [[-v for v in x.act(t, c)] for t in x.l0.basis_vectors()])


def pair_action(z, p: Pair, x: LieCrossedModule) -> Pair:
    """``z·(x,ξ) = ([z,x], t -> t·ξ(z))``."""
    c = p(z, x)
    return Pair(x.l0.bracket(z, p.x), [x.act(t, c) for t in x.l0.basis_vectors()])


@dataclass
class LieCentre:
    xmod: LieCrossedModule
    ambient_dim: int
    basis: list  # vectors of length ambient_dim
    algebra: LieAlgebra  # Z0 with the bracket in the coordinates of ``basis``
    delta_matrix: list  # delta_matrix[c] = coordinates of δ(e_c)
    action_tensor: list  # action_tensor[i][p] = coordinates of f_i·(basis p)
    braid: list  # braid[p][q] = {basis p, basis q} in l1
    projection: list  # projection[p] = x-part of basis p
    bcm: LieBCM
    over_l0: LieCrossedModule  # (x, ξ) -> x
    report: Report

    @property
    def dim(self):
        return len(self.basis)

    @property
    def bracket_sc(self):
        return self.algebra.sc

    def pair(self, p) -> Pair:
        return split(self.basis[p], self.xmod)

    def element(self, coords) -> Pair:
        return split(la.combine(coords, self.basis, self.xmod.field, self.ambient_dim), self.xmod)

    def coordinates(self, p: Pair):
        y = la.solve(self.basis, join(p), self.xmod.field)
        if y is None:
            raise CheckFailure("Z0", "pair is not in Z0", p)
        return y


def lemma_identity_witness(z: LieCentre):
    """``-t·ξ(y) = ξ([y,t]) - η([x,t]) = t·η(x)`` on basis pairs and basis ``t``."""
    x = z.xmod
    for i in range(z.dim):
        p = z.pair(i)
        for j in range(z.dim):
            q = z.pair(j)
            for k, t in enumerate(x.l0.basis_vectors()):
                first = [-v for v in x.act(t, p(q.x, x))]
                middle = _sub(p(x.l0.bracket(q.x, t), x), q(x.l0.bracket(p.x, t), x))
                last = x.act(t, q(p.x, x))
                if not first == middle == last:
                    return i, j, k
    return None


def lie_centre(x: LieCrossedModule) -> LieCentre:
    fld = x.field
    n0, n1 = x.l0.dim, x.l1.dim
    N = n0 + n0 * n1
    basis = la.nullspace(ze_system(x), N, fld)
    rep = Report("Lie centre")
    for v in basis:
        bad = satisfies_ze(split(v, x), x)
        if bad:
            raise CheckFailure("Z0", f"basis vector violates {bad}", v)
    rep.add("basis satisfies the centre equations", Verdict(True))

    def coords(p: Pair, what):
        y = la.solve(basis, join(p), fld)
        if y is None:
            raise CheckFailure(what, "result leaves Z0", p)
        return y

    pairs = [split(v, x) for v in basis]
    sc = [[coords(pair_bracket(p, q, x), "bracket") for q in pairs] for p in pairs]
    try:
        alg = make_lie(len(basis), sc, fld, tuple(f"z{i}" for i in range(len(basis))))
    except NotLie as exc:
        raise CheckFailure("bracket", f"Z0 is not a Lie algebra: {exc}", exc.witness) from exc
    rep.add("Z0 is a Lie algebra", Verdict(True))

    delta = [coords(zeta(c, x), "delta") for c in x.l1.basis_vectors()]
    e = x.l1.basis_vectors()
    for a in e:
        for b in e:
            lhs = coords(zeta(x.l1.bracket(a, b), x), "delta")
            rhs = alg.bracket(la.combine(a, delta, fld, alg.dim), la.combine(b, delta, fld, alg.dim))
            if lhs != rhs:
                raise CheckFailure("delta", "δ is not a Lie homomorphism", (a, b))
    rep.add("δ is a Lie homomorphism", Verdict(True))

    braid = [[p(q.x, x) for q in pairs] for p in pairs]
    for i, p in enumerate(pairs):
        for j, q in enumerate(pairs):
            if coords(zeta(braid[i][j], x), "braid") != sc[i][j]:
                raise CheckFailure("bracket", "[P,Q] differs from δ{P,Q}", (i, j))
    try:
        bcm = verify_lie_bcm(x.l1, alg, delta, braid)
    except XmodError as exc:
        raise CheckFailure("bcm", f"(δ, {{-,-}}) is not braided: {exc}", exc.witness) from exc
    rep.add("(δ, {-,-}) is a braided crossed module", Verdict(True))

    action = [[coords(pair_action(t, p, x), "action") for p in pairs] for t in x.l0.basis_vectors()]
    projection = [p.x for p in pairs]
    try:
        over_l0 = make_lie_xmod(alg, x.l0, projection, action, "Z0 -> L0")
    except XmodError as exc:
        raise CheckFailure("action", f"Z0 -> L0 is not a crossed module: {exc}", exc.witness) from exc
    rep.add("Z0 -> L0 is a crossed module", Verdict(True))

    z = LieCentre(x, N, basis, alg, delta, action, braid, projection, bcm, over_l0, rep)
    bad = lemma_identity_witness(z)
    if bad is not None:
        raise CheckFailure("pair identity", "-t·ξ(y), ξ([y,t]) - η([x,t]) and t·η(x) differ", bad)
    rep.add("-t·ξ(y) = ξ([y,t]) - η([x,t]) = t·η(x)", Verdict(True))
    rep.data.update(dim=len(basis))
    return z


# homotopy


@dataclass
class LieHomotopy:
    pi0: LieAlgebra  # Z0 / Im δ
    pi1: LieAlgebra  # Ker δ
    pi1_basis: list  # vectors in l1
    h0_basis: list  # H^0(π0(L), π1(L)) inside l1
    bijection: list  # bijection[i] = coordinates of pi1_basis[i] in h0_basis
    pi0_quotient: la.Quotient


def invariants(x: LieCrossedModule) -> list:
    """``{a in Ker ∂ : t·a = 0 for every t}``, computed without reference to ``Z0``."""
    fld = x.field
    kern = kernel_of_boundary(x)
    if not kern:
        return []
    # coefficients c with sum_i c_i kern_i killed by every f_t
    rows = []
    for t in x.l0.basis_vectors():
        images = [x.act(t, a) for a in kern]
        for k in range(x.l1.dim):
            rows.append([img[k] for img in images])
    coeffs = la.nullspace(rows, len(kern), fld)
    return [la.combine(c, kern, fld, x.l1.dim) for c in coeffs]


def lie_homotopy(z: LieCentre, x: LieCrossedModule | None = None) -> LieHomotopy:
    x = x or z.xmod
    fld = x.field
    # Ker δ: coefficient vectors c with sum_c c_k delta[k] = 0
    n1 = x.l1.dim
    rows = [[z.delta_matrix[k][p] for k in range(n1)] for p in range(z.dim)]
    kern = la.nullspace(rows, n1, fld)
    pi1 = structure_on(x.l1, kern, tuple(f"k{i}" for i in range(len(kern)))) if kern else make_lie(0, [], fld)
    if not pi1.is_abelian():
        raise CheckFailure("pi1", "Ker δ is not abelian", pi1.sc)
    image = [list(r) for r in z.delta_matrix]
    pi0, q = quotient_algebra(z.algebra, image)
    if not pi0.is_abelian():
        raise CheckFailure("pi0", "Z0 / Im δ is not abelian", pi0.sc)
    h0 = invariants(x)
    if not la.same_span(kern, h0, n1, fld) or len(kern) != len(h0):
        raise CheckFailure("pi1", "Ker δ and H^0(π0, π1) differ", (kern, h0))
    bijection = [la.solve(h0, v, fld) for v in kern]
    return LieHomotopy(pi0, pi1, kern, h0, bijection, q)


def lie_xmod_homotopy(x: LieCrossedModule):
    """``(π0, quotient data, π1 basis)`` of ``x`` itself."""
    pi0, q = quotient_algebra(x.l0, image_of_boundary(x))
    return pi0, q, kernel_of_boundary(x)

