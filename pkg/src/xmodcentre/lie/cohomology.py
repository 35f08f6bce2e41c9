"""Chevalley–Eilenberg cohomology in degrees 0, 1 and 2.

Cochains are alternating. With ``m = dim V``:

* a 0-cochain is a vector of ``V``;
* a 1-cochain ``φ`` stores ``φ(e_s)`` in slots ``s*m .. s*m + m``;
* a 2-cochain ``ω`` stores ``ω(e_s, e_t)`` for ``s < t`` in pair order.

The differentials are

``d0 v (s) = s·v``,
``d1 φ (s,t) = s·φ(t) - t·φ(s) - φ([s,t])`` and
``d2 ω (s,t,r) = s·ω(t,r) - t·ω(s,r) + r·ω(s,t) - ω([s,t],r) + ω([s,r],t) - ω([t,r],s)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ..errors import AxiomViolation, ShapeMismatch
from . import linalg as la
from .algebra import LieAlgebra, _add, _sub, _tensor, _unit, bilinear


@dataclass(frozen=True, eq=False)
class LieModule:
    """``rho[i][j][k]``: ``e_i · v_j = sum_k rho[i][j][k] v_k``."""

    algebra: LieAlgebra
    dim: int
    rho: tuple

    @property
    def field(self):
        return self.algebra.field

    def act(self, s, v):
        return bilinear(self.rho, s, v, self.field, self.dim)


def make_module(algebra: LieAlgebra, dim: int, rho) -> LieModule:
    rho = _tensor(rho, (algebra.dim, dim, dim), algebra.field, "module action")
    m = LieModule(algebra, dim, rho)
    f = algebra.basis_vectors()
    vs = [_unit(dim, j, algebra.field) for j in range(dim)]
    for i, u in enumerate(f):
        for j, w in enumerate(f):
            for k, v in enumerate(vs):
                if m.act(algebra.bracket(u, w), v) != _sub(m.act(u, m.act(w, v)), m.act(w, m.act(u, v))):
                    raise AxiomViolation("action", "[u,w]·v != u·(w·v) - w·(u·v)", (i, j, k))
    return m


def trivial_module(algebra: LieAlgebra, dim: int) -> LieModule:
    zero = [[[0] * dim for _ in range(dim)] for _ in range(algebra.dim)]
    return make_module(algebra, dim, zero)


def adjoint_module(algebra: LieAlgebra) -> LieModule:
    return make_module(algebra, algebra.dim, [[list(algebra.sc[i][j]) for j in range(algebra.dim)] for i in range(algebra.dim)])


def submodule(algebra: LieAlgebra, vectors, act) -> LieModule:
    """The module spanned by ``vectors`` inside a space where ``act(s, v)`` is known."""
    fld = algebra.field
    rho = []
    for s in algebra.basis_vectors():
        rows = []
        for v in vectors:
            y = la.solve(vectors, act(s, v), fld)
            if y is None:
                raise ShapeMismatch("span is not stable under the action")
            rows.append(y)
        rho.append(rows)
    return make_module(algebra, len(vectors), rho)


class Cochains:
    """Index bookkeeping and differentials for one module."""

    def __init__(self, module: LieModule):
        self.module = module
        self.n = module.algebra.dim
        self.m = module.dim
        self.pairs = list(combinations(range(self.n), 2))
        self.pair_index = {p: i for i, p in enumerate(self.pairs)}
        self.triples = list(combinations(range(self.n), 3))

    def size(self, k):
        return self.m * [1, self.n, len(self.pairs), len(self.triples)][k]

    def _zero(self):
        return self.module.field.zeros(self.m)

    # evaluation on basis vectors, extended linearly where needed

    def phi(self, c, s):
        return list(c[s * self.m : (s + 1) * self.m])

    def phi_on(self, c, vec):
        return la.combine(vec, [self.phi(c, s) for s in range(self.n)], self.module.field, self.m)

    def omega(self, c, s, t):
        if s == t:
            return self._zero()
        if s < t:
            i = self.pair_index[(s, t)]
            return list(c[i * self.m : (i + 1) * self.m])
        return [-v for v in self.omega(c, t, s)]

    def omega_on(self, c, u, t):
        """``ω(u, e_t)`` for a vector ``u``."""
        return la.combine(u, [self.omega(c, s, t) for s in range(self.n)], self.module.field, self.m)

    def d(self, k, c):
        mod, alg = self.module, self.module.algebra
        e = alg.basis_vectors()
        out = []
        if k == 0:
            for s in range(self.n):
                out.extend(mod.act(e[s], c))
        elif k == 1:
            for s, t in self.pairs:
                val = _sub(_sub(mod.act(e[s], self.phi(c, t)), mod.act(e[t], self.phi(c, s))), self.phi_on(c, alg.bracket(e[s], e[t])))
                out.extend(val)
        elif k == 2:
            for s, t, r in self.triples:
                val = _add(
                    mod.act(e[s], self.omega(c, t, r)),
                    [-v for v in mod.act(e[t], self.omega(c, s, r))],
                    mod.act(e[r], self.omega(c, s, t)),
                    [-v for v in self.omega_on(c, alg.bracket(e[s], e[t]), r)],
                    self.omega_on(c, alg.bracket(e[s], e[r]), t),
                    [-v for v in self.omega_on(c, alg.bracket(e[t], e[r]), s)],
                )
                out.extend(val)
        else:
            raise ValueError("only degrees 0, 1 and 2 are supported")
        return out

    def matrix(self, k):
        """Rows of ``d_k`` as a ``size(k+1) x size(k)`` matrix."""
        fld = self.module.field
        cols = [self.d(k, _unit(self.size(k), j, fld)) for j in range(self.size(k))]
        return [[cols[j][r] for j in range(self.size(k))] for r in range(self.size(k + 1))]


@dataclass
class LieCohomology:
    degree: int
    module: LieModule
    cochains: Cochains
    cocycles: list
    coboundaries: list
    quotient: la.Quotient

    @property
    def dim(self):
        return self.quotient.dim

    @property
    def representatives(self):
        return self.quotient.basis

    def classify(self, cocycle):
        return self.quotient.coordinates(list(cocycle))

    def is_cocycle(self, c):
        return not any(self.cochains.d(self.degree, c))


def lie_cohomology(module: LieModule, degree: int) -> LieCohomology:
    if degree not in (0, 1, 2):
        raise ValueError("only degrees 0, 1 and 2 are supported")
    fld = module.field
    cc = Cochains(module)
    size = cc.size(degree)
    cocycles = la.nullspace(cc.matrix(degree), size, fld)
    if degree == 0:
        boundaries = []
    else:
        prev = cc.size(degree - 1)
        boundaries = la.independent([cc.d(degree - 1, _unit(prev, j, fld)) for j in range(prev)], fld)
    q = la.quotient(cocycles, boundaries, size, fld)
    return LieCohomology(degree, module, cc, cocycles, boundaries, q)
