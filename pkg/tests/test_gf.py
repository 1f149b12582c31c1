import itertools

import pytest

from hecke.gf import (
    enumerate_irreducibles,
    enumerate_monic,
    enumerate_monic_units,
    factorize,
    field_build,
    format_poly,
    is_monic,
    parse_poly,
    poly_add,
    poly_deg,
    poly_divrem,
    poly_eval,
    poly_mul,
    poly_pow,
    poly_scale,
)

F2 = field_build(2)
F3 = field_build(3)
F4 = field_build(2, 2)

SMALL_FIELDS = [F2, F3, F4, field_build(5), field_build(7), field_build(2, 3), field_build(3, 2)]


def brute_has_proper_factor(K, f):
    """Independent irreducibility oracle: search for g*h == f by multiplication."""
    d = poly_deg(f)
    for dg in range(1, d):
        for g in enumerate_monic(K, dg):
            for h in enumerate_monic(K, d - dg):
                if poly_scale(K, f[-1], poly_mul(K, g, h)) == f:
                    return True
    return False


# -- field construction -------------------------------------------------------


def test_field_build_prime_has_no_modulus():
    assert F2.modulus is None
    assert (F2.p, F2.k, F2.q) == (2, 1, 2)


def test_field_build_f4_modulus():
    # X^2 + X + 1 is the only monic irreducible quadratic over F_2.
    assert F4.modulus == (1, 1, 1)
    assert not brute_has_proper_factor(F2, (1, 1, 1))


def test_field_build_f9_modulus():
    # Trial enumeration low-degree-first: X^2, X^2+X, X^2+2X are reducible,
    # X^2+1 is not (-1 is a non-square mod 3).
    F9 = field_build(3, 2)
    assert F9.modulus == (1, 0, 1)
    assert not brute_has_proper_factor(F3, (1, 0, 1))
    for low in [(0, 0), (0, 1), (0, 2)]:
        assert brute_has_proper_factor(F3, low + (1,))


def test_field_build_rejects_bad_arguments():
    with pytest.raises(ValueError):
        field_build(4)
    with pytest.raises(ValueError):
        field_build(2, 0)


# -- field arithmetic ---------------------------------------------------------


def test_char_two_addition():
    assert F2.add(1, 1) == 0


def test_f4_generator_square():
    g = F4.from_coords((0, 1))
    g_plus_one = F4.from_coords((1, 1))
    assert F4.mul(g, g) == g_plus_one  # forced by g^2 + g + 1 = 0
    assert F4.trace(g) == 1  # g + g^2 = g + (g+1) = 1


@pytest.mark.parametrize("K", SMALL_FIELDS, ids=lambda K: f"q{K.q}")
def test_field_axioms_exhaustive(K):
    els = list(K.elements())
    for a in els:
        assert K.add(a, 0) == a
        assert K.mul(a, 1) == a
        assert K.add(a, K.neg(a)) == 0
        if a:
            assert K.mul(a, K.inv(a)) == 1
    for a, b in itertools.product(els, repeat=2):
        assert K.add(a, b) == K.add(b, a)
        assert K.mul(a, b) == K.mul(b, a)
    for a, b, c in itertools.product(els, repeat=3):
        assert K.add(K.add(a, b), c) == K.add(a, K.add(b, c))
        assert K.mul(K.mul(a, b), c) == K.mul(a, K.mul(b, c))
        assert K.mul(a, K.add(b, c)) == K.add(K.mul(a, b), K.mul(a, c))


@pytest.mark.parametrize("K", SMALL_FIELDS, ids=lambda K: f"q{K.q}")
def test_trace_is_linear_and_surjective(K):
    els = list(K.elements())
    for a in els:
        assert 0 <= K.trace(a) < K.p
    for a, b in itertools.product(els, repeat=2):
        assert K.trace(K.add(a, b)) == (K.trace(a) + K.trace(b)) % K.p
    for c in range(K.p):  # prime-subfield scalars are encoded as 0..p-1
        for a in els:
            assert K.trace(K.mul(c, a)) == (c * K.trace(a)) % K.p
    assert {K.trace(a) for a in els} == set(range(K.p))


def test_inv_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        F3.inv(0)


# -- polynomial arithmetic ----------------------------------------------------


def test_char_two_squaring():
    x_plus_1 = (1, 1)
    assert poly_mul(F2, x_plus_1, x_plus_1) == (1, 0, 1)


def test_divrem_and_multiply_back():
    f = (1, 1, 0, 1)  # X^3 + X + 1
    g = (1, 1)  # X + 1
    q, r = poly_divrem(F2, f, g)
    assert (q, r) == ((0, 1, 1), (1,))
    assert poly_add(F2, poly_mul(F2, q, g), r) == f


def test_divrem_random_fields_multiply_back():
    for K in (F2, F3, F4):
        for f in enumerate_monic(K, 3):
            for g in enumerate_monic(K, 1):
                q, r = poly_divrem(K, f, g)
                assert poly_deg(r) < poly_deg(g)
                assert poly_add(K, poly_mul(K, q, g), r) == f


def test_eval_constant_term():
    assert poly_eval(F2, (1, 1, 1), 0) == 1
    assert poly_eval(F3, (2, 1), 1) == 0  # X + 2 at X = 1


def test_divrem_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        poly_divrem(F2, (1, 1), ())


# -- factorization ------------------------------------------------------------


def test_factorize_frobenius_square():
    unit, factors = factorize(F2, (1, 0, 1))  # X^2 + 1 = (X+1)^2
    assert unit == 1
    assert factors == (((1, 1), 2),)


def test_factorize_irreducible_cubic():
    # X^3 + X + 1 has no roots in F_2, hence is irreducible at degree 3.
    f = (1, 1, 0, 1)
    assert poly_eval(F2, f, 0) != 0 and poly_eval(F2, f, 1) != 0
    unit, factors = factorize(F2, f)
    assert unit == 1 and factors == ((f, 1),)


def test_factorize_square_of_quadratic():
    # (X^2+X+1)^2 = X^4 + X^2 + 1 over F_2.
    g = (1, 1, 1)
    assert poly_mul(F2, g, g) == (1, 0, 1, 0, 1)
    unit, factors = factorize(F2, (1, 0, 1, 0, 1))
    assert unit == 1 and factors == ((g, 2),)


def test_factorize_zero_raises():
    with pytest.raises(ValueError):
        factorize(F2, ())


@pytest.mark.parametrize("K,nmax", [(F2, 5), (F3, 4), (F4, 3)], ids=["q2", "q3", "q4"])
def test_factorize_recombines_all_monic_units(K, nmax):
    for n in range(nmax + 1):
        for f in enumerate_monic_units(K, n):
            unit, factors = factorize(K, f)
            prod = (unit,)
            for g, m in factors:
                assert is_monic(g)
                assert g[0] != 0  # f(0) != 0 passes to every factor
                assert g in enumerate_irreducibles(K, max(poly_deg(f), 1))
                prod = poly_mul(K, prod, poly_pow(K, g, m))
            assert prod == f


# -- enumerations -------------------------------------------------------------


def test_irreducibles_f2():
    assert enumerate_irreducibles(F2, 2) == [(1, 1), (1, 1, 1)]
    assert enumerate_irreducibles(F2, 3) == [
        (1, 1),
        (1, 1, 1),
        (1, 1, 0, 1),  # X^3 + X + 1
        (1, 0, 1, 1),  # X^3 + X^2 + 1
    ]


def test_irreducibles_f3_degree_one_excludes_x():
    assert enumerate_irreducibles(F3, 1) == [(1, 1), (2, 1)]


def test_irreducibles_against_brute_force():
    for K in (F2, F3):
        for f in enumerate_irreducibles(K, 4):
            assert not brute_has_proper_factor(K, f)
        listed = set(map(tuple, enumerate_irreducibles(K, 3)))
        for d in range(1, 4):
            for f in enumerate_monic(K, d):
                expected = f[0] != 0 and not brute_has_proper_factor(K, f)
                assert (f in listed) == expected


def test_monic_units_examples():
    assert set(enumerate_monic_units(F2, 2)) == {(1, 0, 1), (1, 1, 1)}
    assert enumerate_monic_units(F3, 0) == [(1,)]
    assert set(enumerate_monic_units(F3, 1)) == {(1, 1), (2, 1)}


@pytest.mark.parametrize("K", [F2, F3, F4], ids=["q2", "q3", "q4"])
def test_monic_unit_counts(K):
    for n in range(1, 6):
        assert len(enumerate_monic_units(K, n)) == (K.q - 1) * K.q ** (n - 1)


# -- text format --------------------------------------------------------------


def test_format_poly_examples():
    assert format_poly(F2, (1, 1, 0, 1)) == "1+1*X^1+1*X^3"
    assert format_poly(F2, ()) == "0"
    assert format_poly(F4, (2, 1)) == "[0,1]+[1,0]*X^1"


def test_parse_poly_tolerant_forms():
    assert parse_poly(F2, "1+1*X^1+1*X^3") == (1, 1, 0, 1)
    assert parse_poly(F2, "1+X+X^3") == (1, 1, 0, 1)
    assert parse_poly(F2, "1+1X+1X^3") == (1, 1, 0, 1)
    assert parse_poly(F3, "2*X^2") == (0, 0, 2)
    assert parse_poly(F2, "0") == ()
    assert parse_poly(F4, "[0,1]+[1,0]*X") == (2, 1)


def test_parse_format_roundtrip():
    for K in (F2, F3, F4):
        for n in range(4):
            for f in enumerate_monic_units(K, n):
                assert parse_poly(K, format_poly(K, f)) == f


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_poly(F2, "1+Y^2")
    with pytest.raises(ValueError):
        parse_poly(F2, "5*X")
