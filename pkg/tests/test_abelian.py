"""Free abelian fixture: the simplest structure the kernel can drive."""

import itertools

import pytest

from garside_al import (
    abelian_structure,
    absorbs,
    delta_power,
    enumerate_absorbable,
    invert,
    is_absorbable,
    left_gcd,
    make_element,
    multiply,
    power,
)

Z3 = abelian_structure(3)
Z4 = abelian_structure(4)


def unit(struct, i):
    return make_element(
        struct, 0, [tuple(1 if j == i else 0 for j in range(struct.n))])


def test_structure_constants():
    assert Z3.delta == (1, 1, 1)
    assert sorted(Z3.atoms) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    assert len(list(Z3.all_simples())) == 8


def test_multiplication_is_coordinatewise():
    a = unit(Z3, 0)
    b = unit(Z3, 1)
    assert multiply(a, b) == multiply(b, a)
    assert multiply(multiply(a, b), unit(Z3, 2)) == delta_power(Z3, 1)


def test_normal_form_counts_coordinates():
    # e1^3 * e2: factors are the support vectors in decreasing size
    e = multiply(power(unit(Z3, 0), 3), unit(Z3, 1))
    assert e.power == 0
    assert e.canonical_length == 3
    assert e.factors[0] == (1, 1, 0)
    assert e.factors[1] == (1, 0, 0) and e.factors[2] == (1, 0, 0)


def test_stats_of_generator_multiples():
    for k in range(1, 5):
        e = power(unit(Z3, 0), k)
        assert (e.inf, e.sup, e.canonical_length) == (0, k, k)
        assert invert(e).inf == -k


def test_generator_multiples_absorbable_with_cross_witness():
    for struct in (Z3, Z4):
        for k in range(1, 5):
            for i in range(struct.n):
                y = power(unit(struct, i), k)
                j = (i + 1) % struct.n
                assert absorbs(power(unit(struct, j), k), y)
                cert = is_absorbable(y)
                assert cert is not None and absorbs(cert.x, y)


def test_rank_two_has_no_absorbable_elements():
    z2 = abelian_structure(2)
    assert enumerate_absorbable(z2, 3) == ()


def test_gcd_is_coordinatewise_min():
    a = multiply(power(unit(Z3, 0), 2), unit(Z3, 1))   # (2,1,0)
    b = multiply(unit(Z3, 0), power(unit(Z3, 2), 3))   # (1,0,3)
    g = left_gcd(a, b)
    assert g == unit(Z3, 0)


def test_mixed_sign_vectors():
    e = multiply(invert(unit(Z3, 0)), unit(Z3, 1))  # the vector (-1, 1, 0)
    assert (e.inf, e.sup, e.canonical_length) == (-1, 1, 2)
    assert multiply(e, invert(e)).is_identity


def test_two_coordinate_vector_is_not_absorbable():
    # absorbing (1,1,0) would need inf 0 and sup 1 after adding it, which
    # pins every coordinate of the absorber to 0
    y = multiply(unit(Z3, 0), unit(Z3, 1))
    assert is_absorbable(y) is None


def test_invalid_rank():
    with pytest.raises(ValueError):
        abelian_structure(0)


def test_non_simple_factor_rejected():
    # coordinates above 1 are not simples; they must not slip into factors
    with pytest.raises(ValueError, match="not a simple"):
        make_element(Z3, 0, [(2, 0, 0)])
