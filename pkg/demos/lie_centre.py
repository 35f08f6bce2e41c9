"""The linear centre of a few small Lie crossed modules, over Q and over F5.

Run with ``python3 demos/lie_centre.py``.
"""

from __future__ import annotations

from xmodcentre import io
from xmodcentre.lie import (
    GF,
    QQ,
    lie_centre,
    lie_exact_sequence_check,
    lie_homotopy,
    oracle,
)

for name in ("sl2_adjoint", "sl2_zero", "abelian2", "borel_ideal", "heisenberg_ext"):
    base = io.load(name).xmod
    for fld in (QQ, GF(5)):
        x = base.over(fld)
        z = lie_centre(x)
        h = lie_homotopy(z, x)
        seq = lie_exact_sequence_check(x, z=z)
        d = seq.report.data
        print(
            f"{name:15s} {fld.name:3s} dim Z0 = {z.dim} (oracle {oracle.centre_dimension(x)})"
            f"  pi0/pi1 = {h.pi0.dim}/{h.pi1.dim}"
            f"  H1 = {d['h1_dim']}, H2 = {d['h2_dim']}, sequence ok = {seq.report.ok}"
        )

# for sl2 acting on itself every centre element is (x, ad x)
x = io.load("sl2_adjoint").xmod
z = lie_centre(x)
for i in range(z.dim):
    p = z.pair(i)
    assert all(p.xi[t] == x.l0.bracket(p.x, f) for t, f in enumerate(x.l0.basis_vectors()))
print("\nsl2 adjoint: xi = ad x for every basis pair")
