"""Exact linear algebra over :class:`~xmodcentre.lie.fields.Field`.

Row reduction is fraction free. Over ``Q`` every row is first scaled to
integers; eliminating column ``c`` replaces row ``j`` by
``pivot * row_j - a_jc * row_r`` and then divides out the row content, so no
fractions appear until a kernel vector is read off. Over ``F_p`` the same
loop runs on residues. The pivot is always the first nonzero column, and
within it the smallest row index, so bases are reproducible.

Vectors are lists of field elements and matrices are lists of rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .fields import Field


def _to_integers(rows, field: Field):
    if field.char == 0:
        out = []
        for r in rows:
            den = lcm(*(Fraction(c).denominator for c in r)) if r else 1
            out.append([int(Fraction(c) * den) for c in r])
        return out
    return [[int(field(c)) for c in r] for r in rows]


def _nonzero(a, p):
    return a % p != 0 if p else a != 0


def _primitive(row, p):
    if p:
        return [c % p for c in row]
    g = 0
    for c in row:
        g = gcd(g, c)
    if g > 1:
        row = [c // g for c in row]
    return row


@dataclass
class Echelon:
    """Reduced echelon form with integer (or residue) rows.

    Row ``r`` has entry ``rows[r][pivots[r]] != 0`` and every other row is
    zero in column ``pivots[r]``. Pivots are not normalised to ``1``.
    """

    field: Field
    ncols: int
    rows: list
    pivots: list

    @property
    def rank(self):
        return len(self.pivots)

    def free_columns(self):
        taken = set(self.pivots)
        return [c for c in range(self.ncols) if c not in taken]


def echelon(rows, ncols: int, field: Field) -> Echelon:
    p = field.char
    work = [r for r in (_primitive(r, p) for r in _to_integers(rows, field)) if any(r)]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(work):
            break
        pick = next((i for i in range(r, len(work)) if _nonzero(work[i][c], p)), None)
        if pick is None:
            continue
        work[r], work[pick] = work[pick], work[r]
        head = work[r]
        pv = head[c]
        if not p and pv < 0:
            head = work[r] = [-x for x in head]
            pv = -pv
        for j in range(len(work)):
            if j == r:
                continue
            a = work[j][c]
            if _nonzero(a, p):
                work[j] = _primitive([pv * x - a * y for x, y in zip(work[j], head)], p)
        pivots.append(c)
        r += 1
    return Echelon(field, ncols, [row for row in work[:r]], pivots)


def nullspace(rows, ncols: int, field: Field) -> list:
    """Basis of ``{v : A v = 0}``, one vector per free column (set to ``1``)."""
    ech = echelon(rows, ncols, field)
    basis = []
    for f in ech.free_columns():
        v = field.zeros(ncols)
        v[f] = field.one
        for row, c in zip(ech.rows, ech.pivots):
            if _nonzero(row[f], field.char):
                v[c] = -field(row[f]) / field(row[c])
        basis.append(v)
    return basis


def rank(rows, ncols: int, field: Field) -> int:
    return echelon(rows, ncols, field).rank


def solve(columns, b, field: Field):
    """Coefficients ``y`` with ``sum_i y_i columns[i] = b``, or ``None``."""
    n = len(b)
    k = len(columns)
    aug = [[columns[i][r] for i in range(k)] + [b[r]] for r in range(n)]
    ech = echelon(aug, k + 1, field)
    if ech.pivots and ech.pivots[-1] == k:
        return None
    y = field.zeros(k)
    for row, c in zip(ech.rows, ech.pivots):
        y[c] = field(row[k]) / field(row[c])
    return y


def independent(vectors, field: Field) -> list:
    """Greedy maximal independent subfamily, in the given order."""
    chosen = []
    for v in vectors:
        if rank(chosen + [v], len(v), field) > len(chosen):
            chosen.append(v)
    return chosen


def combine(coeffs, vectors, field: Field, n: int):
    out = field.zeros(n)
    for c, v in zip(coeffs, vectors):
        if c:
            for i, x in enumerate(v):
                out[i] = out[i] + c * x
    return out


def matvec(M, v, field: Field):
    """``M v`` for ``M`` stored as rows."""
    return [sum((a * x for a, x in zip(row, v)), field.zero) for row in M]


def same_span(us, vs, n: int, field: Field) -> bool:
    ru = rank(us, n, field)
    return ru == rank(vs, n, field) == rank(list(us) + list(vs), n, field)


@dataclass
class Quotient:
    """``K / B`` for ``B <= K``; ``basis`` lifts a basis of the quotient."""

    field: Field
    dim_ambient: int
    sub: list  # independent basis of B
    basis: list  # representatives completing ``sub`` to a basis of K

    @property
    def dim(self):
        return len(self.basis)

    def coordinates(self, v):
        y = solve(self.sub + self.basis, v, self.field)
        if y is None:
            raise ValueError("vector is not in K")
        return y[len(self.sub):]

    def lift(self, coords):
        return combine(coords, self.basis, self.field, self.dim_ambient)


def quotient(K, B, n: int, field: Field) -> Quotient:
    sub = independent(B, field)
    basis = []
    for v in K:
        if rank(sub + basis + [v], n, field) > len(sub) + len(basis):
            basis.append(v)
    return Quotient(field, n, sub, basis)
