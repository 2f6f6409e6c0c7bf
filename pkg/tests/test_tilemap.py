import math

import pytest

from sphtile import catalog, tilemap as tm
from sphtile.algsolve import AngleAssignment

PI = math.pi

TETRA_FACES = [(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)]
CUBE_FACES = [
    (0, 1, 2, 3), (4, 5, 6, 7), (0, 1, 5, 4),
    (1, 2, 6, 5), (2, 3, 7, 6), (3, 0, 4, 7),
]


def test_build_tetrahedron_counts():
    t = tm.build_from_faces(TETRA_FACES)
    assert (t.num_vertices, t.num_edges, t.num_faces) == (4, 6, 4)
    c = tm.census(t)
    assert c.vertex_types == {(3, 3, 3): 4}
    assert c.face_counts == {3: 4}


def test_build_dihedron():
    t = tm.build_from_faces([(0, 1, 2, 3, 4), (0, 1, 2, 3, 4)], family="dihedron")
    assert (t.num_vertices, t.num_edges, t.num_faces) == (5, 5, 2)
    assert tm.census(t).vertex_types == {(5, 5): 5}


def test_build_hosohedron():
    t = tm.digon_fan(6)
    assert (t.num_vertices, t.num_edges, t.num_faces) == (2, 6, 6)
    assert tm.census(t).vertex_types == {(2,) * 6: 2}


def test_build_errors():
    with pytest.raises(tm.NotEdgeToEdge):
        tm.build_from_faces([(0, 1, 2), (0, 1, 2), (0, 1, 2)])  # edge used thrice
    with pytest.raises(tm.NotEdgeToEdge):
        tm.build_from_faces(TETRA_FACES[:3])  # open boundary
    with pytest.raises(tm.Disconnected):
        tm.build_from_faces(
            TETRA_FACES + [tuple(v + 4 for v in f) for f in TETRA_FACES]
        )


def test_build_accepts_mixed_orientations():
    flipped = [TETRA_FACES[0][::-1]] + TETRA_FACES[1:]
    t = tm.build_from_faces(flipped)
    assert tm.isomorphic(t, tm.build_from_faces(TETRA_FACES))


def test_validate_ed_counts_derived_from_handshake():
    # face data f3=20, f4=30, f5=12 forces e = 120 and v = 60 via the
    # handshake and polyhedral identities
    fcounts = {3: 20, 4: 30, 5: 12}
    e = sum(m * n for m, n in fcounts.items()) // 2
    f = sum(fcounts.values())
    v = 2 + e - f
    assert (v, e, f) == (60, 120, 62)
    ed = catalog.make("eD")
    c = tm.census(ed.map)
    assert (c.v, c.e, c.f) == (60, 120, 62)
    rep = tm.validate(ed.map, ed.angles, expected=catalog.expected_census("eD"))
    assert rep.overall_pass, rep.failures()


def test_validate_flags_wrong_angle():
    cube = tm.build_from_faces(CUBE_FACES)
    bad = AngleAssignment({4: PI / 2}, PI / 2)
    rep = tm.validate(cube, bad)
    assert "angle_sums" in rep.failures()
    assert not rep.overall_pass


def test_validate_area_residual_positive_check():
    cube = tm.build_from_faces(CUBE_FACES)
    good = AngleAssignment.from_angles({4: 2 * PI / 3})
    rep = tm.validate(cube, good)
    assert rep.overall_pass
    assert rep.checks["area"].residual < 1e-12


def test_j19_area_identity():
    # oracle: spherical excess summed over the golden face counts
    from sphtile.sphkernel import polygon_area

    t = catalog.make("J19")
    a = t.angles
    total = (
        4 * polygon_area(3, a.angle(3))
        + 13 * polygon_area(4, a.angle(4))
        + 1 * polygon_area(8, a.angle(8))
    )
    assert total == pytest.approx(4 * PI, abs=1e-8)


def test_census_examples():
    j72 = catalog.make("J72")
    c = tm.census(j72.map)
    assert c.vertex_types == {(3, 4, 5, 4): 50, (3, 4, 4, 5): 10}
    h = catalog.make("hosohedron(6)")
    c = tm.census(h.map)
    assert c.v == 2 and c.face_counts == {2: 6}


def test_isomorphic_relabelled_cube():
    cube = tm.build_from_faces(CUBE_FACES)
    perm = {0: 6, 1: 4, 2: 0, 3: 7, 4: 2, 5: 3, 6: 1, 7: 5}
    other = tm.build_from_faces([tuple(perm[v] for v in f) for f in CUBE_FACES])
    assert tm.isomorphic(cube, other)
    assert not tm.isomorphic(cube, tm.build_from_faces(TETRA_FACES))


def test_isomorphic_distinguishes_same_census_pairs():
    assert not tm.isomorphic(catalog.make("eC").map, catalog.make("J37").map)
    assert not tm.isomorphic(catalog.make("J73").map, catalog.make("J74").map)
    assert not tm.isomorphic(catalog.make("J80").map, catalog.make("J81").map)


def test_isomorphic_is_equivalence_on_samples():
    names = ["T", "O", "J27", "aC", "J73"]
    maps = {n: catalog.make(n).map for n in names}
    for n, m in maps.items():
        assert tm.isomorphic(m, m)
    for a in names:
        for b in names:
            assert tm.isomorphic(maps[a], maps[b]) == tm.isomorphic(maps[b], maps[a])


def test_homogeneity():
    assert tm.homogeneity(catalog.make("J37").map) == "strong"
    assert tm.homogeneity(catalog.make("J27").map) == "weak-only"
    assert tm.homogeneity(catalog.make("J5").map) == "none"


def test_small_face_or_degree3_vertex_everywhere():
    # every catalog map with faces >= 3 sides and degrees >= 3 has a face
    # of size 3, 4 or 5; the triangle-free ones have a degree-3 vertex
    for name in catalog.all_entries():
        t = catalog.make(name).map
        if t.family in ("hosohedron", "dihedron"):
            continue
        c = tm.census(t)
        assert any(m in (3, 4, 5) for m in c.face_counts), name
        if 3 not in c.face_counts:
            assert any(t.degree(v) == 3 for v in range(t.num_vertices)), name


def test_counting_identities_across_catalog():
    for name in catalog.all_entries():
        t = catalog.make(name)
        rep = tm.validate(t.map, t.angles, name=name)
        for key in ("euler", "degree_sum", "face_sum", "angle_sums", "area"):
            assert rep.checks[key].passed, (name, key)
