"""Linear algebra over the chain ring ``Z/p^e``.

Every nonzero element of ``Z/p^e`` is a unit times a power of ``p``, so Smith
normal form is reached by always pivoting on an entry of least valuation.
Matrices are numpy ``int64`` arrays reduced into ``[0, p^e)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def valuation(x: int, p: int, e: int) -> int:
    x %= p**e
    if x == 0:
        return e
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def unit_inverse(u: int, q: int) -> int:
    return pow(int(u), -1, q)


@dataclass
class SmithForm:
    """``P @ A @ Q == diag(p^v_0, ..., p^v_{r-1}, 0, ...)`` modulo ``p^e``."""

    p: int
    e: int
    P: np.ndarray
    P_inv: np.ndarray
    Q: np.ndarray
    vals: list  # valuations of the nonzero diagonal entries

    @property
    def q(self):
        return self.p**self.e

    @property
    def rank(self):
        return len(self.vals)


def smith(A, p: int, e: int, track_rows=True) -> SmithForm:
    """Smith form with transforms. ``P`` and ``P_inv`` are skipped unless ``track_rows``."""
    q = p**e
    A = np.array(A, dtype=np.int64) % q
    if A.ndim != 2:
        raise ValueError("expected a matrix")
    n, m = A.shape
    P = np.eye(n, dtype=np.int64) if track_rows else None
    P_inv = np.eye(n, dtype=np.int64) if track_rows else None
    Q = np.eye(m, dtype=np.int64)
    vals = []
    k = 0
    while k < min(n, m):
        sub = A[k:, k:]
        pivot = None
        for v in range(e):
            mask = sub % p ** (v + 1) != 0 if v + 1 < e else sub != 0
            flat = int(np.argmax(mask))
            if mask.flat[flat]:
                i, j = divmod(flat, sub.shape[1])
                pivot = (k + i, k + j, v)
                break
        if pivot is None:
            break
        i, j, v = pivot
        if i != k:
            A[[k, i]] = A[[i, k]]
            if track_rows:
                P[[k, i]] = P[[i, k]]
                P_inv[:, [k, i]] = P_inv[:, [i, k]]
        if j != k:
            A[:, [k, j]] = A[:, [j, k]]
            Q[:, [k, j]] = Q[:, [j, k]]
        pk = p**v
        u = unit_inverse(int(A[k, k]) // pk, q)
        A[k, k:] = A[k, k:] * u % q
        if track_rows:
            P[k] = P[k] * u % q
            P_inv[:, k] = P_inv[:, k] * unit_inverse(u, q) % q
        # rows above k are already reduced to their pivots, so only rows below change
        f = A[k + 1 :, k] // pk
        nz = np.flatnonzero(f)
        if len(nz):
            rows = nz + k + 1
            fv = f[nz]
            A[rows, k:] = (A[rows, k:] - np.outer(fv, A[k, k:])) % q
            if track_rows:
                P[rows] = (P[rows] - np.outer(fv, P[k])) % q
                P_inv[:, k] = (P_inv[:, k] + P_inv[:, rows] @ fv) % q
        g = A[k, k + 1 :] // pk
        if g.any():
            Q[:, k + 1 :] = (Q[:, k + 1 :] - np.outer(Q[:, k], g)) % q
            A[k, k + 1 :] = 0
        vals.append(v)
        k += 1
    return SmithForm(p, e, P, P_inv, Q, vals)


def kernel(A, p: int, e: int) -> np.ndarray:
    """Generators (as columns) of ``{x : A x = 0}``."""
    A = np.array(A, dtype=np.int64)
    m = A.shape[1]
    if A.shape[0] == 0:
        return np.eye(m, dtype=np.int64)
    sf = smith(A, p, e, track_rows=False)
    q = sf.q
    cols = []
    for i in range(m):
        if i < sf.rank:
            if sf.vals[i] == 0:
                continue
            cols.append(sf.Q[:, i] * p ** (e - sf.vals[i]) % q)
        else:
            cols.append(sf.Q[:, i] % q)
    if not cols:
        return np.zeros((m, 0), dtype=np.int64)
    return np.stack(cols, axis=1)


def solve(A, b, p: int, e: int, sf: SmithForm | None = None):
    """One solution of ``A x = b`` or ``None``."""
    A = np.array(A, dtype=np.int64)
    q = p**e
    sf = sf or smith(A, p, e)
    c = sf.P @ (np.array(b, dtype=np.int64) % q) % q
    y = np.zeros(A.shape[1], dtype=np.int64)
    for i, v in enumerate(sf.vals):
        if c[i] % p**v:
            return None
        y[i] = c[i] // p**v
    if c[sf.rank:].any():
        return None
    return sf.Q @ y % q


@dataclass
class Subquotient:
    """``K / B`` for submodules ``B <= K`` of ``(Z/p^e)^n``.

    ``K`` is spanned by the columns of ``K_gens``. Elements of ``K`` are mapped
    to coordinates ``(c_0, ..., c_{s-1})`` with ``c_i`` taken modulo ``orders[i]``.
    """

    p: int
    e: int
    K_gens: np.ndarray
    K_smith: SmithForm
    W_smith: SmithForm
    slots: list  # indices into the W Smith basis that give nontrivial factors
    orders: list

    def coordinates(self, u):
        if not self.slots:
            return ()
        q = self.p**self.e
        y = solve(self.K_gens, u, self.p, self.e, self.K_smith)
        if y is None:
            raise ValueError("vector does not lie in K")
        z = self.W_smith.P @ y % q
        return tuple(int(z[i]) % o for i, o in zip(self.slots, self.orders))

    def representative(self, coords):
        if not self.slots:
            return np.zeros(self.K_gens.shape[0], dtype=np.int64)
        q = self.p**self.e
        k = self.K_gens.shape[1]
        z = np.zeros(k, dtype=np.int64)
        for i, c in zip(self.slots, coords):
            z[i] = c
        y = self.W_smith.P_inv @ z % q
        return self.K_gens @ y % q


def subquotient(K_gens, B_gens, p: int, e: int) -> Subquotient:
    q = p**e
    K_gens = np.array(K_gens, dtype=np.int64) % q
    n, k = K_gens.shape
    if n == 0 or k == 0:
        return Subquotient(p, e, K_gens, None, None, [], [])
    B_gens = np.array(B_gens, dtype=np.int64).reshape(n, -1) % q
    # preimage of B under y -> K_gens y, i.e. the y-part of ker [K | -B]
    stacked = np.concatenate([K_gens, (-B_gens) % q], axis=1)
    W = kernel(stacked, p, e)[:k]
    if W.shape[1] == 0:
        W = np.zeros((k, 1), dtype=np.int64)
    w_sf = smith(W, p, e)
    slots, orders = [], []
    for i in range(k):
        v = w_sf.vals[i] if i < w_sf.rank else e
        if v > 0:
            slots.append(i)
            orders.append(p**v)
    return Subquotient(p, e, K_gens, smith(K_gens, p, e), w_sf, slots, orders)
