"""Face-spiral winding."""

from __future__ import annotations

from hypothesis import given, settings
from hypothesis import strategies as st

from resonantk.catalog import catalog_graph
from resonantk.plane_graph import canonical_code, validate_fullerene
from resonantk._spiral import wind

F20_SPIRAL = [5] * 12
F24_SPIRAL = [6] + [5] * 12 + [6]
F40_SPIRAL = [5] + [6] * 5 + [5] * 10 + [6] * 5 + [5]
# pentagon positions 1,7,9,11,13,15,18,20,22,24,26,32 of 32 faces
C60_SPIRAL = [
    5, 6, 6, 6, 6, 6, 5, 6, 5, 6, 5, 6, 5, 6, 5, 6,
    6, 5, 6, 5, 6, 5, 6, 5, 6, 5, 6, 6, 6, 6, 6, 5,
]


def test_dodecahedron_winds():
    g = wind(F20_SPIRAL)
    assert g is not None
    f = validate_fullerene(g)
    assert f.n == 20
    assert canonical_code(f) == canonical_code(catalog_graph("F20").graph)


def test_barrel_and_tube_spirals_match_catalog():
    for seq, name in ((F24_SPIRAL, "F24"), (F40_SPIRAL, "F40")):
        g = wind(seq)
        assert g is not None
        assert canonical_code(g) == canonical_code(catalog_graph(name).graph)


def test_c60_spiral_matches_catalog():
    g = wind(C60_SPIRAL)
    assert g is not None
    assert canonical_code(g) == canonical_code(catalog_graph("C60").graph)


def test_rejects_unwindable():
    # wrong totals: 11 pentagons cannot close a cubic sphere
    assert wind([5] * 11) is None
    assert wind([5] * 12 + [6]) is None  # face/vertex count mismatch
    assert wind([5, 5]) is None  # too few faces
    assert wind([]) is None
    # right totals, wrong order: all hexagons first strands the pentagons
    assert wind([6] * 20 + [5] * 12) is None


@settings(max_examples=150, deadline=None)
@given(st.lists(st.sampled_from([5, 6]), min_size=4, max_size=26))
def test_wind_never_crashes_and_valid_when_it_returns(seq):
    g = wind(seq)
    if g is None:
        return
    # anything that winds is a plane cubic graph with the requested faces
    f = validate_fullerene(g)
    sizes = sorted(face.size for face in f.faces)
    assert sizes == sorted(seq)
