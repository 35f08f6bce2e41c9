from __future__ import annotations

import pytest

from xmodcentre import centre as ce
from xmodcentre import groups as gr
from xmodcentre import io
from xmodcentre import xmod as xm

GROUP_CORPUS = [f for f in io.corpus_files() if io.load_corpus(f).kind == "xmod"]
LIE_CORPUS = [f for f in io.corpus_files() if io.load_corpus(f).kind == "lie_xmod"]


@pytest.fixture(scope="session")
def d4_input():
    return io.load_corpus("aut_d4.json")


@pytest.fixture(scope="session")
def d4(d4_input):
    return d4_input.xmod


@pytest.fixture(scope="session")
def d4_centre(d4):
    return ce.enumerate_centre(d4)


@pytest.fixture(scope="session")
def group_corpus():
    return {f: io.load_corpus(f).xmod for f in GROUP_CORPUS}


@pytest.fixture(scope="session")
def group_centres(group_corpus):
    return {f: ce.enumerate_centre(x) for f, x in group_corpus.items()}


@pytest.fixture(scope="session")
def lie_corpus():
    return {f: io.load_corpus(f).xmod for f in LIE_CORPUS}


def small_xmods():
    """Crossed modules that are cheap enough for exhaustive property checks."""
    c2, c3, c4 = gr.cyclic(2), gr.cyclic(3), gr.cyclic(4)
    s3 = gr.dihedral(3)
    return {
        "id C3": xm.identity_xmod(c3),
        "1 -> S3": xm.trivial_source(s3),
        "C4 -> 1": xm.to_trivial(c4),
        "AUT(C4)": xm.aut_xmod(c4),
        "AUT(C2 x C2)": xm.aut_xmod(gr.direct_product(c2, c2)),
        "C3 < S3": xm.normal_inclusion(s3, [0] + [k for k in s3 if s3.element_order(k) == 3]),
    }
