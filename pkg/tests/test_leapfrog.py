"""Leapfrog transform: image structure, canonical matching, certificates."""

from __future__ import annotations

import pytest

from resonantk.errors import GraphError
from resonantk.leapfrog import leapfrog, territory, two_resonance_certificate
from resonantk.matching import alternating_faces
from resonantk.plane_graph import canonical_code
from resonantk.resonance import is_resonant_pattern


@pytest.fixture(scope="module")
def lf20(graphs):
    return leapfrog(graphs["F20"])


def test_image_is_c60(graphs, lf20):
    assert lf20.image.n == 60
    assert canonical_code(lf20.image) == canonical_code(graphs["C60"])


def test_face_bookkeeping(graphs, lf20):
    f = graphs["F20"]
    assert len(lf20.heritable) == len(f.faces)
    assert len(lf20.fresh) == f.n
    assert set(lf20.heritable.values()) == set(range(len(f.faces)))
    assert set(lf20.fresh.values()) == set(range(f.n))
    # heritable face sizes equal their originals'
    for img_fid, orig_fid in lf20.heritable.items():
        assert lf20.image.faces[img_fid].size == f.faces[orig_fid].size
    # fresh faces are hexagons
    for img_fid in lf20.fresh:
        assert lf20.image.faces[img_fid].size == 6


def test_m0_is_perfect_and_fresh_faces_alternate(lf20):
    m0 = lf20.m0
    assert 2 * m0.size == lf20.image.n
    alt = set(alternating_faces(lf20.image, m0))
    assert set(lf20.fresh) <= alt
    # here every hexagon is fresh, so m0 alternates on all 20 at once
    assert alt == set(lf20.image.hexagon_ids)
    assert len(alt) == 20
    # heritable pentagons can never alternate (odd faces)
    for img_fid in lf20.heritable:
        assert img_fid not in alt


def test_heritable_faces_partition_vertices(lf20):
    seen: set[int] = set()
    for img_fid in lf20.heritable:
        vs = lf20.image.faces[img_fid].vertices
        assert not vs & seen
        seen |= vs
    assert seen == set(range(lf20.image.n))


def test_territory_ring(lf20):
    some_heritable = min(lf20.heritable)
    t = territory(lf20, some_heritable)
    assert t.center == some_heritable
    assert len(t.ring) == lf20.image.faces[some_heritable].size
    assert all(r in lf20.fresh for r in t.ring)
    fresh_id = min(lf20.fresh)
    with pytest.raises(GraphError):
        territory(lf20, fresh_id)


def test_certificates_for_all_disjoint_pairs(lf20):
    image = lf20.image
    hexes = image.hexagon_ids
    checked = 0
    for i, a in enumerate(hexes):
        av = image.faces[a].vertices
        for b in hexes[i + 1 :]:
            if av & image.faces[b].vertices:
                continue
            m = two_resonance_certificate(lf20, a, b)
            assert 2 * m.size == image.n
            alt = set(alternating_faces(image, m))
            assert a in alt and b in alt
            assert is_resonant_pattern(image, [a, b]) is not None
            checked += 1
    assert checked == 160


def test_fresh_fresh_certificate_is_m0(lf20):
    image = lf20.image
    fresh = sorted(lf20.fresh)
    a = fresh[0]
    av = image.faces[a].vertices
    b = next(h for h in fresh[1:] if not av & image.faces[h].vertices)
    m = two_resonance_certificate(lf20, a, b)
    assert set(m.edges) == set(lf20.m0.edges)


def test_territories_share_at_most_two_adjacent_faces(graphs, lf20):
    for lf in (lf20, leapfrog(graphs["F24"])):
        rings = {c: territory(lf, c).ring for c in lf.heritable}
        centers = sorted(rings)
        for i, a in enumerate(centers):
            for b in centers[i + 1 :]:
                common = set(rings[a]) & set(rings[b])
                assert len(common) <= 2
                if len(common) == 2:
                    f1, f2 = sorted(common)
                    e1 = set(lf.image.faces[f1].boundary_edges())
                    e2 = set(lf.image.faces[f2].boundary_edges())
                    assert e1 & e2, "shared territory faces must be adjacent"


def test_certificate_rejects_overlapping_pair(lf20):
    image = lf20.image
    a = image.hexagon_ids[0]
    av = image.faces[a].vertices
    b = next(h for h in image.hexagon_ids if h != a and av & image.faces[h].vertices)
    with pytest.raises(GraphError):
        two_resonance_certificate(lf20, a, b)


def test_leapfrog_of_leapfrog(graphs):
    # F20 -> C60 -> C180: the tripling composes
    lf2 = leapfrog(leapfrog(graphs["F20"]).image)
    assert lf2.image.n == 180
    assert len(lf2.image.pentagon_ids) == 12
