"""Projective-line enumeration, relations, induced maps.

The independent oracle here decides admissibility of a pair (a, b) through
the ideal criterion -- (a, b) extends to an invertible matrix over a
finite commutative ring iff 1 is an a,b-combination -- which shares no
code path with the determinant-completion test in the package.
"""

import itertools
import json

import pytest

import ringline as rl
from ringline.correspond import (JACOBSON_LAYOUT, NEIGHBOURHOOD_LAYOUT,
                                 club_to_tilde_hom)
from ringline.projline import (LineError, ProjPoint, catalog_dot, catalog_json,
                               is_admissible_componentwise)


# --- independent oracle -----------------------------------------------------

def oracle_unimodular(ring, a, b):
    """1 in the ideal (a, b), by brute force over coefficient pairs."""
    for s in ring.elements():
        for t in ring.elements():
            if ring.add(ring.mul(a, s), ring.mul(b, t)) == ring.one:
                return True
    return False


def test_admissibility_matches_ideal_oracle(r_club, r_tilde, gf4):
    for ring in (r_club, r_tilde, gf4):
        for a, b in itertools.product(ring.elements(), repeat=2):
            assert rl.is_admissible(ring, a, b) == oracle_unimodular(ring, a, b)


def test_admissibility_examples(r_tilde):
    x = r_tilde.element_from_str("x")
    x1 = r_tilde.element_from_str("x+1")
    assert not rl.is_admissible(r_tilde, x, x)
    assert rl.is_admissible(r_tilde, x, x1)
    assert rl.is_admissible(r_tilde, r_tilde.one, x)


def test_product_componentwise_cross_oracle(r_tilde_prod):
    for a, b in itertools.product(r_tilde_prod.elements(), repeat=2):
        assert rl.is_admissible(r_tilde_prod, a, b) == \
            is_admissible_componentwise(r_tilde_prod, a, b)


# --- canonical points -------------------------------------------------------

def test_canonicalize_unit_rescaling_example(r_club):
    p = rl.canonicalize(r_club, r_club.element_from_str("x^2+x+1"),
                        r_club.element_from_str("x^2"))
    assert str(p) == "(1,x)"


def test_canonicalize_rejects_inadmissible(r_tilde):
    x = r_tilde.element_from_str("x")
    with pytest.raises(LineError):
        rl.canonicalize(r_tilde, x, x)


def test_canonicalize_invariant_under_unit_scaling(r_club, club_catalog):
    for p in club_catalog.points:
        for u in r_club.units():
            q = rl.canonicalize(r_club, r_club.mul(u, p.a), r_club.mul(u, p.b))
            assert q == p


def test_point_counts(club_catalog, tilde_catalog, gf4):
    assert len(club_catalog) == 18
    assert len(tilde_catalog) == 9
    assert len(rl.enumerate_points(gf4)) == 5
    for q in (2, 3, 5, 8):
        f = rl.build_ring(f"gf({q})")
        assert len(rl.enumerate_points(f)) == q + 1


def test_orbit_counting_oracle(r_club, club_catalog):
    # |points| * |units| admissible pairs, since unit scaling acts freely here
    admissible = sum(rl.is_admissible(r_club, a, b)
                     for a, b in itertools.product(r_club.elements(), repeat=2))
    assert admissible == len(club_catalog) * len(r_club.units())


def test_expected_point_count(r_club, r_tilde, r_tilde_prod, gf4):
    assert rl.expected_point_count(gf4) == 5
    assert rl.expected_point_count(rl.build_ring("gf(8)")) == 9
    assert rl.expected_point_count(r_tilde_prod) == 9
    # neither ring is local nor an explicit product: no closed form applies
    assert rl.expected_point_count(r_club) is None
    assert rl.expected_point_count(r_tilde) is None


# --- relations --------------------------------------------------------------

def test_relation_symmetry_and_diagonal(club_catalog):
    rel = club_catalog.relation
    n = len(club_catalog)
    for i in range(n):
        assert rel[i][i] == rl.EQUAL
        for j in range(i + 1, n):
            assert rel[i][j] == rel[j][i]
            assert rel[i][j] in (rl.NEIGHBOUR, rl.DISTANT)


def test_field_line_has_no_neighbours(gf4):
    cat = rl.enumerate_points(gf4)
    for i, j in itertools.combinations(range(len(cat)), 2):
        assert cat.relation[i][j] == rl.DISTANT


def test_pair_relation_witness(tilde_catalog):
    p = tilde_catalog.point_by_str("(1,0)")
    q = tilde_catalog.point_by_str("(1,x)")
    rel, det = rl.pair_relation(p, q)
    assert rel == rl.NEIGHBOUR and str(det) == "x"
    rel, det = rl.pair_relation(p, tilde_catalog.point_by_str("(0,1)"))
    assert rel == rl.DISTANT and str(det) == "1"


def test_mixed_ring_points_rejected(club_catalog, tilde_catalog):
    with pytest.raises(rl.MixedRingError):
        rl.pair_relation(club_catalog.points[0], tilde_catalog.points[0])


def test_nine_point_line_distant_degree_four(tilde_catalog):
    for p in tilde_catalog.points:
        assert len(rl.distant_points(tilde_catalog, p)) == 4
        assert len(rl.neighbourhood(tilde_catalog, p)) == 4


def test_neighbourhood_of_base_point(club_catalog):
    base = club_catalog.point_by_str("(1,0)")
    expected = {club_catalog.point_by_str(f"({a},{b})")
                for a, b in NEIGHBOURHOOD_LAYOUT if (a, b) != ("1", "0")}
    assert len(expected) == 9
    assert rl.neighbourhood(club_catalog, base) == expected


def test_distinguished_subsets(club_catalog):
    subs = rl.distinguished_subsets(club_catalog)
    as_strs = {k: {str(p) for p in v} for k, v in subs.items()}
    assert as_strs["gf2_subline"] == {"(0,1)", "(1,0)", "(1,1)"}
    assert as_strs["both_zero_divisor"] == \
        {"(x,x+1)", "(x+1,x)", "(x,x^2+1)", "(x^2+1,x)"}
    # (x^2+x+1, 1) rescales to (1, x^2+x+1): two canonical unit-unit points
    assert as_strs["unit_unit"] == {"(1,1)", "(1,x^2+x+1)"}


def test_ten_point_layout_is_union_of_distinguished_sets(club_catalog):
    subs = rl.distinguished_subsets(club_catalog)
    hom = club_to_tilde_hom()
    tilde_cat = rl.enumerate_points(hom.target)
    counterparts = set()
    for p in subs["gf2_subline"]:
        counterparts |= rl.jacobson_counterpart(p, hom, club_catalog, tilde_cat)
    layout = {club_catalog.point_by_str(f"({a},{b})")
              for a, b in JACOBSON_LAYOUT}
    assert layout == \
        subs["gf2_subline"] | counterparts | subs["both_zero_divisor"]


# --- induced point maps -----------------------------------------------------

def test_induced_map_examples(club_catalog):
    hom = club_to_tilde_hom()
    tilde_cat = rl.enumerate_points(hom.target)
    pmap = rl.induced_point_map(hom, club_catalog, tilde_cat)
    assert str(pmap[club_catalog.point_by_str("(x^2+1,x)")]) == "(x+1,x)"
    assert str(pmap[club_catalog.point_by_str("(1,x^2+x)")]) == "(1,0)"
    assert str(pmap[club_catalog.point_by_str("(1,1)")]) == "(1,1)"


def test_induced_map_fibers_have_size_two(club_catalog):
    hom = club_to_tilde_hom()
    tilde_cat = rl.enumerate_points(hom.target)
    pmap = rl.induced_point_map(hom, club_catalog, tilde_cat)
    fibers = {}
    for p, img in pmap.items():
        fibers.setdefault(img, set()).add(p)
    assert set(fibers) == set(tilde_cat.points)
    assert all(len(f) == 2 for f in fibers.values())


def test_induced_map_preserves_distance(club_catalog):
    hom = club_to_tilde_hom()
    tilde_cat = rl.enumerate_points(hom.target)
    pmap = rl.induced_point_map(hom, club_catalog, tilde_cat)
    for p, q in itertools.combinations(club_catalog.points, 2):
        if rl.pair_relation(p, q)[0] == rl.DISTANT:
            assert rl.pair_relation(pmap[p], pmap[q])[0] == rl.DISTANT


def test_induced_map_requires_kernel_in_radical(r_club, club_catalog):
    # collapse everything to zero except the multiplicative identity: the
    # kernel is far larger than the radical and the map must be refused
    table = {a: (r_club.one if a == r_club.one else r_club.zero)
             for a in r_club.elements()}
    bad = rl.RingHomomorphism(r_club, r_club, table)
    with pytest.raises(LineError):
        rl.induced_point_map(bad, club_catalog, club_catalog)


def test_jacobson_counterparts(club_catalog):
    hom = club_to_tilde_hom()
    tilde_cat = rl.enumerate_points(hom.target)
    def other(s):
        p = club_catalog.point_by_str(s)
        return {str(q) for q in
                rl.jacobson_counterpart(p, hom, club_catalog, tilde_cat)}
    assert other("(1,0)") == {"(1,x^2+x)"}
    assert other("(0,1)") == {"(x^2+x,1)"}
    assert other("(1,1)") == {"(1,x^2+x+1)"}


def test_jacobson_counterpart_trivial_over_field(gf4):
    cat = rl.enumerate_points(gf4)
    _, hom = rl.quotient_by_radical(gf4)
    qcat = rl.enumerate_points(hom.target)
    for p in cat.points:
        assert rl.jacobson_counterpart(p, hom, cat, qcat) == set()


# --- export -----------------------------------------------------------------

def test_catalog_json(gf4):
    cat = rl.enumerate_points(gf4)
    data = json.loads(catalog_json(cat))
    assert len(data["points"]) == 5
    assert data["relation"][0][0] == 0
    assert all(data["relation"][i][j] == 2
               for i in range(5) for j in range(5) if i != j)


def test_catalog_dot(gf4, tilde_catalog):
    dot = catalog_dot(rl.enumerate_points(gf4))
    assert dot.count(" -- ") == 10  # complete graph on 5 points
    dot_n = catalog_dot(tilde_catalog, rl.NEIGHBOUR)
    assert dot_n.count(" -- ") == 9 * 4 // 2
    with pytest.raises(LineError):
        catalog_dot(tilde_catalog, "equal")


def test_point_by_str(tilde_catalog):
    assert str(tilde_catalog.point_by_str("( 1 , x )")) == "(1,x)"
    with pytest.raises(LineError):
        tilde_catalog.point_by_str("(x,x)")
