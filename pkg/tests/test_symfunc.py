from hypothesis import given, settings, strategies as st
import pytest

from rankcalc.errors import NotHomogeneous, ParseError
from rankcalc.partitions import all_partitions
from rankcalc.symfunc import (
    MonomialExpansion,
    SchurExpansion,
    is_schur_nonnegative,
    kostka,
    monomial_to_schur,
    parse_expansion,
    schur_product,
    schur_to_monomial,
)


def s(*parts):
    return SchurExpansion.basis(tuple(parts))


def m(*parts):
    return MonomialExpansion.basis(tuple(parts))


@st.composite
def schur_expansions_st(draw, degree=None, max_size=6):
    n = degree if degree is not None else draw(st.integers(0, max_size))
    parts = all_partitions(n)
    chosen = draw(st.lists(st.sampled_from(parts), min_size=0, max_size=3))
    coeffs = draw(
        st.lists(st.integers(-4, 4), min_size=len(chosen), max_size=len(chosen))
    )
    data = {}
    for lam, c in zip(chosen, coeffs):
        data[lam] = data.get(lam, 0) + c
    return SchurExpansion(data)


def test_expansion_mechanics():
    e = SchurExpansion({(2, 1): 2, (3,): 0, (1, 1, 1): -1})
    assert e.terms() == {(1, 1, 1): -1, (2, 1): 2}
    assert e.coeff((3,)) == 0
    assert (e - e) == SchurExpansion()
    assert not SchurExpansion()
    assert 2 * s(1) == SchurExpansion({(1,): 2})
    assert SchurExpansion() != MonomialExpansion()


def test_kostka_values():
    assert kostka((2,), (2,)) == 1
    assert kostka((2,), (1, 1)) == 1
    assert kostka((1, 1), (2,)) == 0
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((3, 1), (2, 1, 1)) == 2


def test_schur_to_monomial_examples():
    assert schur_to_monomial(s(1, 1)) == m(1, 1)
    assert schur_to_monomial(s(2)) == m(2) + m(1, 1)
    assert schur_to_monomial(s(2, 1)) == m(2, 1) + 2 * m(1, 1, 1)


def test_monomial_to_schur_examples():
    assert monomial_to_schur(m(1, 1)) == s(1, 1)
    assert monomial_to_schur(m(2)) == s(2) - s(1, 1)
    # the expansion with monomial coefficients (-1, 1, 2, 4) on
    # (4), (2,2), (2,1,1), (1,1,1,1) is exactly s22 + s31 - s4
    mixed = MonomialExpansion({(4,): -1, (2, 2): 1, (2, 1, 1): 2, (1, 1, 1, 1): 4})
    assert monomial_to_schur(mixed) == s(2, 2) + s(3, 1) - s(4)


def test_monomial_to_schur_requires_homogeneous():
    with pytest.raises(NotHomogeneous):
        monomial_to_schur(m(1) + m(2))
    assert monomial_to_schur(MonomialExpansion()) == SchurExpansion()
    assert monomial_to_schur(MonomialExpansion.one()) == SchurExpansion.one()


@settings(max_examples=80, deadline=None)
@given(e=schur_expansions_st())
def test_round_trip_schur_monomial(e):
    assert monomial_to_schur(schur_to_monomial(e)) == e


def test_round_trip_exhaustive_basis_degree_8():
    for n in range(9):
        for lam in all_partitions(n):
            e = SchurExpansion.basis(lam)
            assert monomial_to_schur(schur_to_monomial(e)) == e


def test_schur_product_examples():
    assert schur_product(s(1), s(1)) == s(2) + s(1, 1)
    assert schur_product(SchurExpansion.one(), s(3, 1)) == s(3, 1)
    power = s(1)
    for _ in range(3):
        power = schur_product(power, s(1))
    assert power == s(1, 1, 1, 1) + 3 * s(2, 1, 1) + 2 * s(2, 2) + 3 * s(3, 1) + s(4)


@settings(max_examples=40, deadline=None)
@given(a=schur_expansions_st(max_size=3), b=schur_expansions_st(max_size=3))
def test_schur_product_commutes(a, b):
    assert schur_product(a, b) == schur_product(b, a)


def test_schur_product_associative_small():
    basis = [s(1), s(2), s(1, 1), s(2, 1)]
    for a in basis:
        for b in basis:
            for c in basis:
                assert schur_product(schur_product(a, b), c) == schur_product(
                    a, schur_product(b, c)
                )


@settings(max_examples=30, deadline=None)
@given(
    a=schur_expansions_st(degree=2),
    b=schur_expansions_st(degree=3),
)
def test_degree_additivity(a, b):
    product = schur_product(a, b)
    if a and b:
        assert all(sum(lam) == 5 for lam in product.support())


def test_is_schur_nonnegative():
    assert is_schur_nonnegative(s(2, 2) + s(3, 1))
    assert not is_schur_nonnegative(s(2, 2) + s(3, 1) - s(4))
    assert is_schur_nonnegative(SchurExpansion())


def test_text_rendering():
    e = s(2, 2) + s(3, 1) - s(4)
    assert e.text() == "1*s[2,2] + 1*s[3,1] - 1*s[4]"
    assert SchurExpansion().text() == "0"
    assert SchurExpansion.one().text() == "1*s[-]"
    assert (-1 * s(1)).text() == "-1*s[1]"
    assert (m(2, 1) + 2 * m(1, 1, 1)).text() == "2*m[1,1,1] + 1*m[2,1]"


@settings(max_examples=60, deadline=None)
@given(e=schur_expansions_st())
def test_text_parse_round_trip(e):
    assert parse_expansion(e.text(), SchurExpansion) == e


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_expansion("1*m[2]", SchurExpansion)
    with pytest.raises(ParseError):
        parse_expansion("garbage", SchurExpansion)
