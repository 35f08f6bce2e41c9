"""Independent cross-checks built on sympy.

The centre equations are written out symbolically for a generic pair
``(x, ξ)`` and handed to sympy's dense ``DomainMatrix`` nullspace, so none of
the hand-written elimination or equation assembly is reused.
"""

from __future__ import annotations

import sympy as sp
from sympy.polys.matrices import DomainMatrix

from .algebra import LieCrossedModule
from .fields import Field


def _domain(fld: Field):
    return sp.QQ if fld.char == 0 else sp.GF(fld.char)


def _sym(c):
    return sp.Rational(str(c)) if not hasattr(c, "p") else sp.Integer(int(c))


def dense_nullspace(rows, ncols: int, fld: Field) -> list:
    """Nullspace basis as lists of sympy domain elements."""
    K = _domain(fld)
    if not rows:
        return [[K(1) if i == j else K(0) for i in range(ncols)] for j in range(ncols)]
    M = DomainMatrix([[K.from_sympy(_sym(c)) for c in r] for r in rows], (len(rows), ncols), K)
    N = M.nullspace()
    return [list(r) for r in N.to_list()] if N.shape[0] else []


def dense_rank(rows, ncols: int, fld: Field) -> int:
    return ncols - len(dense_nullspace(rows, ncols, fld))


def centre_equations(x: LieCrossedModule):
    """Symbols and linear expressions whose common zero set is ``Z0``."""
    n0, n1 = x.l0.dim, x.l1.dim
    xs = sp.symbols(f"x0:{n0}") if n0 else ()
    xi = [[sp.Symbol(f"xi_{t}_{k}") for k in range(n1)] for t in range(n0)]
    S = lambda c: _sym(c)
    X = sp.Matrix(n0, 1, list(xs)) if n0 else sp.zeros(0, 1)
    D = sp.Matrix(n1, n0, lambda j, m: S(x.boundary[j][m]))  # row j is ∂(e_j)
    XI = sp.Matrix(n0, n1, lambda t, k: xi[t][k])  # row t is ξ(f_t)
    br0 = lambda i, j, m: S(x.l0.sc[i][j][m])
    act = lambda i, j, k: S(x.action[i][j][k])
    eqs = []
    for t in range(n0):
        dxi = (XI[t, :] * D) if n1 else sp.zeros(1, n0)
        for m in range(n0):
            eqs.append(dxi[m] - sum(X[i] * br0(i, t, m) for i in range(n0)))
    for j in range(n1):
        for k in range(n1):
            lhs = sum(D[j, t] * XI[t, k] for t in range(n0))
            eqs.append(lhs - sum(X[i] * act(i, j, k) for i in range(n0)))
    for s in range(n0):
        for t in range(n0):
            for k in range(n1):
                lhs = sum(br0(s, t, u) * XI[u, k] for u in range(n0))
                rhs = sum(XI[t, l] * act(s, l, k) - XI[s, l] * act(t, l, k) for l in range(n1))
                eqs.append(lhs - rhs)
    unknowns = list(xs) + [v for row in xi for v in row]
    return unknowns, [sp.expand(e) for e in eqs]


def centre_dimension(x: LieCrossedModule) -> int:
    unknowns, eqs = centre_equations(x)
    if not unknowns:
        return 0
    eqs = [e for e in eqs if e != 0]
    if not eqs:
        return len(unknowns)
    A, _ = sp.linear_eq_to_matrix(eqs, unknowns)
    rows = [[A[i, j] for j in range(A.cols)] for i in range(A.rows)]
    K = _domain(x.field)
    M = DomainMatrix([[K.from_sympy(sp.sympify(c)) for c in r] for r in rows], (len(rows), len(unknowns)), K)
    return len(unknowns) - M.rank()
