import math

import pytest

from sphtile import catalog as cat, tilemap as tm
from sphtile.sphkernel import DomainError

PI = math.pi
SQ5 = math.sqrt(5.0)

ALL = cat.all_entries()


@pytest.mark.parametrize("name", ALL)
def test_entry_validates_with_golden_census(name):
    t = cat.make(name)
    rep = tm.validate(
        t.map, t.angles, tol=1e-9, area_tol=1e-8,
        expected=cat.expected_census(name), name=name,
    )
    assert rep.overall_pass, (name, rep.failures())


def test_j19_octagon_forced_by_handshake():
    # the vertex census {12 of 3.4.4.4, 8 of 4.4.8} fixes 2e = 72; with
    # f3 = 4 and f4 = 13 the remaining face must be a single octagon
    two_e = 12 * 4 + 8 * 3
    assert two_e == 72
    remainder = two_e - (3 * 4 + 4 * 13)
    assert remainder == 8
    c = tm.census(cat.make("J19").map)
    assert c.face_counts == {3: 4, 4: 13, 8: 1}


def test_prism_triangular_angles():
    p = cat.make("prism(3)")
    assert p.angles.angles[3] == pytest.approx(4 * math.atan(1 / math.sqrt(7)), abs=1e-12)


def test_prism4_is_cube_and_antiprism3_is_octahedron():
    assert tm.isomorphic(cat.make("prism(4)").map, cat.make("C").map)
    assert tm.isomorphic(cat.make("antiprism(3)").map, cat.make("O").map)


def test_antiprism5_matches_icosahedron_family():
    ap = cat.make("antiprism(5)")
    assert tm.census(ap.map).vertex_types == {(3, 3, 3, 5): 10}
    assert ap.angles.angles[3] == pytest.approx(2 * PI / 5, abs=1e-9)
    assert ap.angles.angles[5] == pytest.approx(4 * PI / 5, abs=1e-9)
    # antiprism(5) is the icosahedron with two antipodal vertices removed
    anti = cat._diminished_icosahedron(2, antipodal=True)
    assert tm.isomorphic(ap.map, anti.map)


def test_family_domain_errors():
    with pytest.raises(DomainError):
        cat.make_prism(2)
    with pytest.raises(DomainError):
        cat.make_hosohedron(2)
    with pytest.raises(cat.UnknownName):
        cat.make("J13")


# --------------------------------------------------------------------------
# operator identities
# --------------------------------------------------------------------------


def test_cupola_subdivide_j19():
    j19 = cat.make("J19")
    octagon = cat.faces_of_size(j19.map, 8)[0]
    ortho = cat.cupola_subdivide(j19, octagon, phase=0)
    gyro = cat.cupola_subdivide(j19, octagon, phase=1)
    assert tm.isomorphic(ortho.map, cat.make("eC").map)
    assert tm.isomorphic(gyro.map, cat.make("J37").map)
    assert tm.validate(ortho.map, ortho.angles).overall_pass
    assert tm.validate(gyro.map, gyro.angles).overall_pass


def test_prism_subdivide_j4():
    j4 = cat.make("J4")
    octagon = cat.faces_of_size(j4.map, 8)[0]
    r = cat.prism_subdivide(j4, octagon)
    assert tm.isomorphic(r.map, cat.make("J19").map)
    assert tm.validate(r.map, r.angles).overall_pass


def test_pyramid_subdivide_j11():
    j11 = cat.make("J11")
    pent = cat.faces_of_size(j11.map, 5)[0]
    r = cat.pyramid_subdivide(j11, pent)
    assert tm.isomorphic(r.map, cat.make("I").map)
    assert tm.validate(r.map, r.angles).overall_pass


def test_pyramid_subdivide_preconditions():
    j2 = cat.make("J2")
    with pytest.raises(cat.PreconditionFailed):
        cat.pyramid_subdivide(j2, cat.faces_of_size(j2.map, 5)[0])
    with pytest.raises(cat.PreconditionFailed):
        cat.pyramid_subdivide(cat.make("dihedron(6)"), 0)


def test_cupola_subdivide_rejects_concave_decagon():
    j5 = cat.make("J5")
    with pytest.raises(cat.PreconditionFailed):
        cat.cupola_subdivide(j5, cat.faces_of_size(j5.map, 10)[0])


def test_cupola_subdivide_j76_rebuilds_ed_family():
    j76 = cat.make("J76")
    decagon = cat.faces_of_size(j76.map, 10)[0]
    results = set()
    for phase in (0, 1):
        r = cat.cupola_subdivide(j76, decagon, phase=phase)
        for name in ("eD", "J72"):
            if tm.isomorphic(r.map, cat.make(name).map):
                results.add(name)
    assert results == {"eD", "J72"}


def test_shrink_all_truncated_tetrahedron():
    tt = cat.make("tT")
    assert tm.isomorphic(cat.shrink_all(tt.map, 3), cat.make("T").map)


def test_truncate_all_cube():
    assert tm.isomorphic(cat.truncate_all(cat.make("C").map), cat.make("tC").map)


def test_shrink_truncate_inverse():
    tc = cat.make("tC").map
    shrunk = cat.shrink(tc, cat.faces_of_size(tc, 3)[0])
    new_vertex = [
        v for v in range(shrunk.num_vertices)
        if sorted(shrunk.vertex_face_sizes(v)) == [7, 7, 7]
    ]
    assert len(new_vertex) == 1
    assert tm.isomorphic(cat.truncate(shrunk, new_vertex[0]), tc)


def test_shrink_precondition():
    ec = cat.make("eC").map  # vertices have degree 4
    with pytest.raises(cat.PreconditionFailed):
        cat.shrink(ec, cat.faces_of_size(ec, 3)[0])


def test_rotate_and_diminish_cupola_on_ed():
    ed = cat.make("eD")
    sites = cat._canonical_sites(ed.map, cat.find_cupola_sites(ed.map))
    assert len(sites) == 12
    r1 = cat.rotate_cupola(ed, sites[0])
    assert tm.isomorphic(r1.map, cat.make("J72").map)
    d1 = cat.diminish_cupola(ed, sites[0])
    assert tm.isomorphic(d1.map, cat.make("J76").map)
    # rotating by two boundary steps is a symmetry of the cap
    r2 = cat._apply_cupola_ops(ed, rotate_sites=[sites[0]], shift=2)
    assert tm.isomorphic(r2.map, ed.map)


def test_ed_site_geometry():
    _, sites, opposite, disjoint, triple = cat._ed_site_data()
    for s in sites:
        others = disjoint[s.top]
        assert len(others) == 6  # one antipodal plus five at lattice distance 2
        assert opposite[s.top] in others
    a, b, c = triple
    assert not (a.vertices & b.vertices)
    assert not (a.vertices & c.vertices)
    assert not (b.vertices & c.vertices)


def test_ed_recipe_closure():
    # every recipe result is isomorphic to its direct catalog entry and
    # the thirteen family members are pairwise distinct
    family = ["eD"] + [f"J{i}" for i in range(72, 84)]
    forms = {}
    for name in family:
        forms[name] = cat.make(name).map.canonical_form
    assert len(set(forms.values())) == len(family)
    for name, recipe in cat._ED_RECIPES.items():
        t = cat.derive_from_ed(
            dim=recipe.get("dim", 0),
            rot=recipe.get("rot", 0),
            dim_rel=recipe.get("dim_rel"),
            rot_rel=recipe.get("rot_rel"),
        )
        assert t.map.canonical_form == forms[name], name


def test_rotate_hemisphere_identities():
    ac = cat.make("aC")
    cyc = cat.equatorial_cycles(ac)
    assert cyc and len(cyc[0]) == 6
    assert tm.isomorphic(cat.rotate_hemisphere(ac, cyc[0]).map, cat.make("J27").map)
    ad = cat.make("aD")
    cyc = cat.equatorial_cycles(ad)
    assert cyc and len(cyc[0]) == 10
    assert tm.isomorphic(cat.rotate_hemisphere(ad, cyc[0]).map, cat.make("J34").map)
    assert tm.isomorphic(cat.cut_hemisphere(ad, cyc[0]).map, cat.make("J6").map)


def test_even_boundary_when_arrangement_alternates():
    # census-level parity predicate: if every vertex of an m-gon carries
    # exactly one angle of each of three distinct sizes, the boundary edge
    # labels alternate and m must be even
    for name in ("bC", "bD"):
        t = cat.make(name).map
        c = tm.census(t)
        (arr, _), = [
            (a, k) for a, k in c.vertex_types.items()
        ]
        assert len(set(arr)) == 3  # three distinct sizes at each vertex
        for m in c.face_counts:
            assert m % 2 == 0, (name, m)


def test_homogeneity_classification_over_catalog():
    strong = set(cat.PLATONIC) | set(cat.ARCHIMEDEAN) | {"J37"}
    strong |= {f"prism({n})" for n in range(3, 13)}
    strong |= {f"antiprism({n})" for n in range(3, 13)}
    weak_only = {"J27", "J34", "J72", "J73", "J74", "J75"}
    for name in ALL:
        t = cat.make(name).map
        h = tm.homogeneity(t)
        if name in strong or t.family in ("hosohedron", "dihedron"):
            assert h == "strong", name
        elif name in weak_only:
            assert h == "weak-only", name
        else:
            assert h == "none", name


def test_all_entries_pairwise_non_isomorphic():
    # prism(4) and antiprism(3) are routed aliases of C and O
    names = [n for n in ALL if n not in ("prism(4)", "antiprism(3)")]
    forms = {}
    for n in names:
        form = cat.make(n).map.canonical_form
        assert form not in forms, (forms.get(form), n)
        forms[form] = n


def test_manifest_round_trip():
    doc = cat.manifest()
    assert len(doc["entries"]) == len(ALL)
    by_name = {e["name"]: e for e in doc["entries"]}
    assert by_name["J19"]["face_counts"] == {"3": 4, "4": 13, "8": 1}
    assert by_name["eD"]["vertex_types"] == {"3.4.5.4": 60}
