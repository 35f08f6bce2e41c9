"""Norrie's centre ``H^0(G0, G1) -> Z(G0) ∩ st_{G1}(G0)`` and its map into ``Z_*``."""

from __future__ import annotations

from dataclasses import dataclass

from . import groups as gr
from .centre import _as_centre, centre_homotopy, delta_xmod
from .checks import Report, Verdict
from .errors import CheckFailure
from .groups import FiniteGroup, GroupHom
from .xmod import CrossedModule, XmodMorphism, check_morphism, homotopy, make_xmod


@dataclass(frozen=True)
class NorrieCentre:
    top: FiniteGroup
    bottom: FiniteGroup
    boundary: GroupHom
    xmod: CrossedModule
    top_inclusion: GroupHom  # top -> G1
    bottom_inclusion: GroupHom  # bottom -> G0


def fixed_by_all(x: CrossedModule) -> list:
    """``H^0(G0, G1) = {a : ^t a = a for all t}``."""
    return [a for a in x.g1 if all(x.act(t, a) == a for t in x.g0)]


def stabiliser(x: CrossedModule) -> list:
    """``st_{G1}(G0) = {t : ^t a = a for all a}``."""
    return [t for t in x.g0 if all(x.act(t, a) == a for a in x.g1)]


def norrie_centre(x: CrossedModule) -> NorrieCentre:
    top_elems = fixed_by_all(x)
    centre = set(gr.centre_of(x.g0))
    bottom_elems = [t for t in stabiliser(x) if t in centre]
    top, ti = gr.subgroup(x.g1, top_elems, name="H0(G0,G1)")
    bottom, bi = gr.subgroup(x.g0, bottom_elems, name="Z_G1(G0)")
    pos = {e: i for i, e in enumerate(bi.map)}
    images = []
    for a in ti.map:
        if x.d(a) not in pos:
            raise CheckFailure("norrie", "∂ of an invariant element is not in Z_G1(G0)", a)
        images.append(pos[x.d(a)])
    boundary = GroupHom(top, bottom, images)
    xm = make_xmod(top, bottom, boundary, gr.trivial_action(bottom, top), name="Z^Nor")
    return NorrieCentre(top, bottom, boundary, xm, ti, bi)


def norrie_compare(x: CrossedModule, z=None):
    """``j_*: Z^Nor -> Z_*`` with ``j1`` the inclusion and ``j0(t) = (t, 1)``.

    Returns the morphism and a report on ``π1`` (iso), ``π0`` (mono) and
    whether ``j_*`` is a weak equivalence.
    """
    z = _as_centre(z if z is not None else x)
    nc = norrie_centre(x)
    one = tuple(0 for _ in x.g0)
    j0_map = []
    for t in nc.bottom_inclusion.map:
        k = z.find(t, one)
        if k is None:
            raise CheckFailure("j0", "(t, 1) is not in Z0", t)
        j0_map.append(k)
    j0 = GroupHom(nc.bottom, z.group, j0_map)
    j1 = GroupHom(nc.top, x.g1, nc.top_inclusion.map)
    m = XmodMorphism(j1, j0)
    zx = delta_xmod(z)
    rep = Report("Norrie comparison")
    rep.add("j0 injective", Verdict(j0.is_injective(), "j0 is not injective"))
    v = check_morphism(m, nc.xmod, zx)
    if not v:
        raise CheckFailure("j_*", v.message, v.witness)
    rep.add("j_* morphism", v)

    hn = homotopy(nc.xmod)
    hz = centre_homotopy(z)
    pi1_image = sorted(j1.map[k] for k in hn.inclusion.map)
    pi1_iso = set(pi1_image) == set(hz.inclusion.map) and len(pi1_image) == hz.pi1.order
    rep.add("pi1 iso", Verdict(pi1_iso, "j_* is not an isomorphism on π1"))
    pi0_map = {}
    for t in nc.bottom:
        c = hn.projection.map[t]
        val = hz.projection.map[j0.map[t]]
        if pi0_map.setdefault(c, val) != val:
            raise CheckFailure("pi0", "π0(j_*) is not well defined", t)
    pi0_injective = len(set(pi0_map.values())) == len(pi0_map)
    rep.add("pi0 injective", Verdict(pi0_injective, "π0(j_*) is not injective"))
    weak = pi1_iso and pi0_injective and len(pi0_map) == hz.pi0.order
    rep.data.update(
        top_order=nc.top.order,
        bottom_order=nc.bottom.order,
        pi0_norrie=hn.pi0.order,
        pi0_centre=hz.pi0.order,
        pi1_norrie=hn.pi1.order,
        pi1_centre=hz.pi1.order,
        weak_equivalence=weak,
    )
    return m, rep
