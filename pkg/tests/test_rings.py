"""Ring construction, arithmetic, classification, radical and quotients.

Derived expected values are computed by a standalone polynomial oracle
(plain int lists, reduction by repeated substitution) that shares no code
with the package.
"""

import itertools

import pytest

import ringline as rl
from ringline.rings import RingError, build_ring, el, find_isomorphism, ring_arith


# --- independent oracle: GF(2)[x] mod x^3 - x as int lists -----------------

def oracle_mul_mod2_x3x(a, b):
    """a, b little-endian coefficient lists mod 2; product mod x^3 - x."""
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            prod[i + j] ^= ai & bj
    while len(prod) > 3:
        top = prod.pop()
        if top:
            prod[len(prod) - 2] ^= 1  # x^(d) -> x^(d-2) since x^3 = x
    while len(prod) < 3:
        prod.append(0)
    return prod


def test_oracle_sanity():
    # x * x^2 = x^3 = x
    assert oracle_mul_mod2_x3x([0, 1, 0], [0, 0, 1]) == [0, 1, 0]


# --- construction -----------------------------------------------------------

def test_build_ring_sizes():
    assert build_ring("gf(2)[x]/(x^3-x)").size == 8
    assert build_ring("gf(2)xgf(2)").size == 4
    assert build_ring("gf(4)").size == 4
    assert build_ring("gf(8)").size == 8
    assert build_ring("gf(3)").size == 3
    assert build_ring("GF(2) x GF(2) x GF(2)").size == 8


def test_build_ring_errors():
    with pytest.raises(RingError):
        build_ring("gf(6)")
    with pytest.raises(RingError):
        build_ring("gf(7")
    with pytest.raises(RingError):
        build_ring("gf(2)^")
    with pytest.raises(RingError):
        rl.GaloisField(2, 2, modulus=(0, 0, 1))  # x^2 is reducible
    with pytest.raises(RingError):
        build_ring("gf(2)[x]/(x^9)", size_cap=256)  # 512 elements


def test_structural_equality():
    assert build_ring("gf(4)") == build_ring("gf(4)")
    # same size, different construction: never silently identified
    assert build_ring("gf(4)") != build_ring("gf(2)[x]/(x^2+x+1)")
    assert build_ring("gf(2)xgf(2)") != build_ring("gf(2)[x]/(x^2-x)")


def test_gf4_modulus_choice():
    f = build_ring("gf(4)")
    # lexicographically smallest irreducible quadratic: x^2 + x + 1
    assert f.modulus == (1, 1, 1)


def test_gf8_modulus_choice():
    f = build_ring("gf(8)")
    assert f.modulus == (1, 1, 0, 1)  # x^3 + x + 1


# --- arithmetic -------------------------------------------------------------

def test_arith_defining_relation(r_club):
    assert str(el(r_club, "x") * el(r_club, "x^2")) == "x"


def test_arith_zero_divisor_product(r_tilde):
    assert str(el(r_tilde, "x") * el(r_tilde, "x+1")) == "0"


def test_arith_unit_square_matches_oracle(r_club):
    # (x^2+x+1)^2 via the independent oracle, then frozen
    assert oracle_mul_mod2_x3x([1, 1, 1], [1, 1, 1]) == [1, 0, 0]
    assert str(el(r_club, "x^2+x+1") ** 2) == "1"


def test_ring_arith_dispatch(r_club):
    x = el(r_club, "x")
    assert str(ring_arith(r_club, "mul", x, x)) == "x^2"
    assert str(ring_arith(r_club, "add", x, x)) == "0"
    assert str(ring_arith(r_club, "neg", x)) == "x"
    assert str(ring_arith(r_club, "pow", x, 3)) == "x"


def test_mixed_ring_operands(r_club, r_tilde):
    with pytest.raises(rl.MixedRingError):
        el(r_club, "x") * el(r_tilde, "x")


def test_ring_laws_exhaustive(r_club, r_tilde, gf4):
    for ring in (r_club, r_tilde, gf4):
        els = ring.elements()
        for a, b in itertools.product(els, repeat=2):
            assert ring.add(a, b) == ring.add(b, a)
            assert ring.mul(a, b) == ring.mul(b, a)
        for a, b, c in itertools.product(els, repeat=3):
            assert ring.mul(a, ring.mul(b, c)) == ring.mul(ring.mul(a, b), c)
            assert ring.add(a, ring.add(b, c)) == ring.add(ring.add(a, b), c)
            assert ring.mul(a, ring.add(b, c)) == \
                ring.add(ring.mul(a, b), ring.mul(a, c))


# --- classification ---------------------------------------------------------

def test_classify_examples(r_club, r_tilde, gf4):
    kind, inv = gf4.classify(gf4.element_from_str("x"))
    assert kind == "unit" and gf4.mul(gf4.element_from_str("x"), inv) == gf4.one
    kind, wit = r_tilde.classify(r_tilde.element_from_str("x"))
    assert kind == "zero-divisor" and wit != r_tilde.zero
    assert [r_club.el_str(u) for u in r_club.units()] == ["1", "x^2+x+1"]


def test_classification_partitions(r_club, r_tilde, gf4, r_tilde_prod):
    for ring in (r_club, r_tilde, gf4, r_tilde_prod):
        kinds = [ring.classify(a)[0] for a in ring.elements()]
        assert kinds.count("zero") == 1
        assert kinds.count("unit") + kinds.count("zero-divisor") == ring.size - 1


def test_unit_counts(r_club, r_tilde, gf4):
    assert len(r_club.units()) == 2
    assert len(r_tilde.units()) == 1
    assert len(gf4.units()) == 3
    for q in (2, 3, 5, 8):
        f = build_ring(f"gf({q})")
        assert len(f.units()) == q - 1


# --- radical and quotient ---------------------------------------------------

def test_radical(r_club, r_tilde, gf4):
    # (x^2+x)^2 = 0 under the oracle
    assert oracle_mul_mod2_x3x([0, 1, 1], [0, 1, 1]) == [0, 0, 0]
    assert [r_club.el_str(a) for a in rl.jacobson_radical(r_club)] == \
        ["0", "x^2+x"]
    assert rl.jacobson_radical(gf4) == [gf4.zero]
    assert rl.jacobson_radical(r_tilde) == [r_tilde.zero]


def test_quotient_by_radical(r_club, gf4):
    q, hom = rl.quotient_by_radical(r_club)
    assert q.size == 4
    assert rl.validate_hom(hom)
    # x^2 - x = x^2 + x lies in the radical, so x^2 and x share a coset
    assert hom.table[r_club.element_from_str("x^2")] == \
        hom.table[r_club.element_from_str("x")]
    # representatives are the lexicographically minimal coset members
    assert [q.el_str(a) for a in q.sorted_elements()] == ["0", "1", "x", "x+1"]
    qf, homf = rl.quotient_by_radical(gf4)
    assert qf.size == 4 and rl.validate_hom(homf)
    assert all(homf.table[a] == a for a in gf4.elements())


def test_quotient_isomorphic_to_product(r_club, r_tilde_prod, r_tilde):
    q, _ = rl.quotient_by_radical(r_club)
    assert find_isomorphism(q, r_tilde_prod) is not None
    assert find_isomorphism(q, r_tilde) is not None
    assert find_isomorphism(r_tilde, r_tilde_prod) is not None


def test_mark_ring_matches_product_classification(r_tilde, r_tilde_prod):
    # the two constructions of the four-mark ring classify identically
    iso = find_isomorphism(r_tilde, r_tilde_prod)
    assert iso is not None
    for a in r_tilde.elements():
        assert r_tilde.classify(a)[0] == r_tilde_prod.classify(iso.table[a])[0]


def test_units_lift_through_quotient(r_club):
    q, hom = rl.quotient_by_radical(r_club)
    for a in r_club.elements():
        assert r_club.is_unit(a) == q.is_unit(hom.table[a])


def test_validate_hom_rejects_bad_maps(r_tilde):
    swap = {a: a for a in r_tilde.elements()}
    swap[r_tilde.zero], swap[r_tilde.one] = r_tilde.one, r_tilde.zero
    bad = rl.RingHomomorphism(r_tilde, r_tilde, swap)
    assert not rl.validate_hom(bad)
    # x -> x+1 on the mark ring: exhaustive verdict
    x, x1 = r_tilde.element_from_str("x"), r_tilde.element_from_str("x+1")
    table = {r_tilde.zero: r_tilde.zero, r_tilde.one: r_tilde.one,
             x: x1, x1: x}
    # this swap is in fact the nontrivial ring automorphism
    assert rl.validate_hom(rl.RingHomomorphism(r_tilde, r_tilde, table))


def test_tilde_swap_is_automorphism(r_tilde):
    # open question: downstream claims must be invariant under x <-> x+1
    x, x1 = r_tilde.element_from_str("x"), r_tilde.element_from_str("x+1")
    table = {r_tilde.zero: r_tilde.zero, r_tilde.one: r_tilde.one,
             x: x1, x1: x}
    assert rl.validate_hom(rl.RingHomomorphism(r_tilde, r_tilde, table))
