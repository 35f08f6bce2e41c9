"""``0 -> H^1(π0, π1) -f-> π0(Z_*) -ω-> Z_{π1}(π0) -g-> H^2(L0, π1)``.

The maps follow the group case:

* ``f`` sends a derivation ``φ`` to the class of ``(0, φ∘proj)``;
* ``ω`` sends the class of ``(x, ξ)`` to the class of ``x``;
* ``g`` lifts ``m`` to ``x``, picks a linear ``ψ: L0 -> L1`` with
  ``∂ψ(t) = [x,t]`` and ``ψ(∂a) = x·a``, and takes the class of
  ``θ(s,t) = s·ψ(t) - t·ψ(s) - ψ([s,t])``.

Every choice in ``g`` is varied with seeded random generators and the
resulting class must not move.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from ..checks import Report, Verdict
from ..errors import CheckFailure, ExactnessFailure
from . import linalg as la
from .algebra import (
    LieCrossedModule,
    _sub,
    _unit,
    image_of_boundary,
    kernel_of_boundary,
    quotient_algebra,
)
from .centre import LieCentre, Pair, lie_centre, lie_homotopy
from .cohomology import LieCohomology, lie_cohomology, submodule


def _kernel(cols, n_dom, n_tgt, fld):
    rows = [[cols[j][r] for j in range(n_dom)] for r in range(n_tgt)]
    return la.nullspace(rows, n_dom, fld)


def _image(cols, fld):
    return la.independent([c for c in cols if any(c)], fld)


@dataclass
class LieSequenceData:
    h1: LieCohomology
    h2: LieCohomology
    pi0z_dim: int
    stabiliser: list  # basis of Z_{π1}(π0) in π0 coordinates
    f: list  # f[i] = π0(Z_*) coordinates of f(class i)
    omega: list  # omega[i] = stabiliser coordinates of ω(basis i)
    g: list  # g[i] = H^2 coordinates of g(stabiliser basis i)
    report: Report


def central_stabiliser(x: LieCrossedModule, pi0, q, kern) -> list:
    """``{m in π0 : [m, π0] = 0 and m·a = 0 for a in π1}`` in ``π0`` coordinates."""
    fld = x.field
    rows = []
    for t in pi0.basis_vectors():
        images = [pi0.bracket(pi0.basis(i), t) for i in range(pi0.dim)]
        rows.extend([img[k] for img in images] for k in range(pi0.dim))
    for a in kern:
        images = [x.act(q.lift(pi0.basis(i)), a) for i in range(pi0.dim)]
        rows.extend([img[k] for img in images] for k in range(x.l1.dim))
    return la.nullspace(rows, pi0.dim, fld)


def _psi(x: LieCrossedModule, xv, q, kern, rng):
    """Rows ``ψ(f_t)``; ``rng`` perturbs the free part by elements of ``π1``."""
    fld = x.field
    images = [list(r) for r in x.boundary]
    basis_vals = []
    for v in q.sub:
        a = la.solve(images, v, fld)
        basis_vals.append(x.act(xv, la.combine(a, x.l1.basis_vectors(), fld, x.l1.dim)))
    for t in q.basis:
        a = la.solve(images, x.l0.bracket(xv, t), fld)
        if a is None:
            raise CheckFailure("g", "[x, t] is not a boundary", t)
        if rng is not None and kern:
            a = la.combine([fld(1)] + [fld(rng.randint(-3, 3)) for _ in kern], [a] + kern, fld, x.l1.dim)
        basis_vals.append(a)
    frame = q.sub + q.basis
    rows = []
    for t in x.l0.basis_vectors():
        c = la.solve(frame, t, fld)
        rows.append(la.combine(c, basis_vals, fld, x.l1.dim))
    return rows


def theta(x: LieCrossedModule, psi) -> dict:
    """``θ(s,t) = s·ψ(t) - t·ψ(s) - ψ([s,t])`` on basis pairs ``s < t``."""
    fld = x.field
    e = x.l0.basis_vectors()
    out = {}
    for s in range(x.l0.dim):
        for t in range(s + 1, x.l0.dim):
            bracket = la.combine(x.l0.bracket(e[s], e[t]), psi, fld, x.l1.dim)
            out[(s, t)] = _sub(_sub(x.act(e[s], psi[t]), x.act(e[t], psi[s])), bracket)
    return out


def lie_exact_sequence_check(x: LieCrossedModule, seeds=(1, 2, 3), z: LieCentre | None = None) -> LieSequenceData:
    fld = x.field
    z = z or lie_centre(x)
    hz = lie_homotopy(z, x)
    q0 = hz.pi0_quotient  # Z0 coordinates / Im δ
    pi0, q = quotient_algebra(x.l0, image_of_boundary(x))
    kern = kernel_of_boundary(x)
    n1 = x.l1.dim

    def in_kern(v):
        y = la.solve(kern, v, fld)
        if y is None:
            raise CheckFailure("pi1", "vector is not in Ker ∂", v)
        return y

    def act_pi0(s, v):
        return in_kern(x.act(q.lift(s), la.combine(v, kern, fld, n1)))

    def act_l0(s, v):
        return in_kern(x.act(s, la.combine(v, kern, fld, n1)))

    units = [_unit(len(kern), i, fld) for i in range(len(kern))]
    a_pi0 = submodule(pi0, units, act_pi0)
    a_l0 = submodule(x.l0, units, act_l0)
    H1 = lie_cohomology(a_pi0, 1)
    H2 = lie_cohomology(a_l0, 2)
    rep = Report("H1 -> pi0(Z) -> Z(pi0) -> H2")

    def f_of(phi):
        xi = []
        for t in x.l0.basis_vectors():
            val = H1.cochains.phi_on(phi, q.coordinates(t))
            xi.append(la.combine(val, kern, fld, n1))
        return q0.coordinates(z.coordinates(Pair(fld.zeros(x.l0.dim), xi)))

    f = [f_of(phi) for phi in H1.representatives]
    for b in H1.coboundaries:
        if any(f_of(b)):
            raise CheckFailure("f", "f does not vanish on inner derivations", b)

    stab = central_stabiliser(x, pi0, q, kern)

    def omega_of(zc):
        m = q.coordinates(z.element(zc).x)
        y = la.solve(stab, m, fld)
        if y is None:
            raise CheckFailure("omega", "ω leaves Z_{π1}(π0)", zc)
        return y

    omega = [omega_of(v) for v in q0.basis]
    for v in q0.sub:
        if any(omega_of(v)):
            raise CheckFailure("omega", "ω does not vanish on Im δ", v)

    def g_of(m, rng=None):
        xv = q.lift(m)
        if rng is not None:
            shift = [fld(rng.randint(-3, 3)) for _ in q.sub]
            xv = la.combine([fld(1)] + shift, [xv] + q.sub, fld, x.l0.dim)
        th = theta(x, _psi(x, xv, q, kern, rng))
        cochain = []
        for s, t in H2.cochains.pairs:
            cochain.extend(in_kern(th[(s, t)]))
        if not H2.is_cocycle(cochain):
            raise CheckFailure("g", "θ is not a 2-cocycle", m)
        return H2.classify(cochain)

    g = []
    for m in stab:
        cls = g_of(m)
        for s in seeds:
            if g_of(m, random.Random(s)) != cls:
                raise CheckFailure("g", "class of θ depends on the choices", (m, s))
        g.append(cls)

    rng = random.Random(seeds[0] if seeds else 0)
    lin = _linearity(rng, fld, H1.representatives, f_of, H1.cochains.size(1))
    rep.add("f linear", Verdict(lin, "f is not linear"))
    lin = _linearity(rng, fld, q0.basis, omega_of, z.dim)
    rep.add("omega linear", Verdict(lin, "ω is not linear"))
    lin = _linearity(rng, fld, stab, g_of, pi0.dim)
    rep.add("g linear", Verdict(lin, "g is not linear"))

    rank_f = len(_image(f, fld))
    rep.add("f injective", Verdict(rank_f == H1.dim, "f is not injective", rank_f))
    ker_w = [la.combine(c, q0.basis, fld, z.dim) for c in _kernel(omega, q0.dim, len(stab), fld)]
    im_f = [la.combine(c, q0.basis, fld, z.dim) for c in f]
    rep.add("Im f = Ker omega", Verdict(la.same_span(im_f, ker_w, z.dim, fld), "Im f != Ker ω", (im_f, ker_w)))
    ker_g = _kernel(g, len(stab), H2.dim, fld)
    rep.add("Im omega = Ker g", Verdict(la.same_span(omega, ker_g, len(stab), fld), "Im ω != Ker g", (omega, ker_g)))
    rep.data.update(
        h1_dim=H1.dim,
        pi0z_dim=q0.dim,
        stabiliser_dim=len(stab),
        h2_dim=H2.dim,
        im_f=rank_f,
        im_omega=len(_image(omega, fld)),
        ker_g=len(ker_g),
    )
    for name, v in rep.verdicts.items():
        if not v:
            raise ExactnessFailure(name, v.message, v.witness)
    return LieSequenceData(H1, H2, q0.dim, stab, f, omega, g, rep)


def _linearity(rng, fld, basis, fn, n) -> bool:
    """``fn(a u + v) = a fn(u) + fn(v)`` on random combinations of ``basis``."""
    if not basis:
        return True
    for _ in range(3):
        c1 = [fld(rng.randint(-4, 4)) for _ in basis]
        c2 = [fld(rng.randint(-4, 4)) for _ in basis]
        a = fld(rng.randint(-4, 4))
        u = la.combine(c1, basis, fld, n)
        v = la.combine(c2, basis, fld, n)
        w = [a * p + r for p, r in zip(u, v)]
        lhs = fn(w)
        rhs = [a * p + r for p, r in zip(fn(u), fn(v))]
        if lhs != rhs:
            return False
    return True
