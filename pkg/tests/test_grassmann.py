import pytest

from rankcalc.errors import ContextMismatch, ParseError, ShapeTooLarge
from rankcalc.grassmann import (
    SchubertClass,
    class_add,
    class_degree,
    class_product,
    class_sub,
    is_schubert_nonnegative,
    lift,
    parse_class,
    phi,
    point_class,
    schubert_class,
    skew_complement_class,
)
from rankcalc.partitions import all_partitions
from rankcalc.symfunc import SchurExpansion, schur_product


def s(*parts):
    return SchurExpansion.basis(tuple(parts))


def sigma1_power(k, n, power):
    out = schubert_class((1,), k, n)
    for _ in range(power - 1):
        out = class_product(out, schubert_class((1,), k, n))
    return out


def test_phi_truncation():
    assert phi(s(5), 4, 8).is_zero()
    mixed = s(2, 2) + s(3, 1) - s(4)
    assert phi(mixed, 2, 4) == schubert_class((2, 2), 2, 4)
    assert phi(SchurExpansion(), 3, 6).is_zero()
    assert phi(s(2, 1, 1), 2, 6).is_zero()  # too many rows


def test_schubert_class_constructor_rejects_overflow():
    with pytest.raises(ValueError):
        SchubertClass(2, 4, {(3,): 1})


def test_class_product_sigma1_fourth_power():
    result = sigma1_power(4, 8, 4)
    assert result.terms() == {
        (1, 1, 1, 1): 1,
        (2, 1, 1): 3,
        (2, 2): 2,
        (3, 1): 3,
        (4,): 1,
    }


def test_class_product_identity_and_truncation():
    x = schubert_class((2, 1), 3, 6)
    one = SchubertClass(3, 6, {(): 1})
    assert class_product(one, x) == x
    tiny = class_product(schubert_class((1,), 1, 2), schubert_class((1,), 1, 2))
    assert tiny.is_zero()


def test_context_mismatch():
    with pytest.raises(ContextMismatch):
        class_product(schubert_class((1,), 2, 4), schubert_class((1,), 2, 5))
    with pytest.raises(ContextMismatch):
        class_sub(schubert_class((1,), 2, 4), schubert_class((1,), 3, 6))


def test_class_degree():
    assert class_degree(point_class(4, 8)) == 1
    assert class_degree(schubert_class((2, 2), 4, 8)) == 2640
    y = sigma1_power(4, 8, 4)
    assert class_degree(y) == 24024
    x = class_sub(y, schubert_class((2, 2), 4, 8))
    assert class_degree(x) == 21384


def test_class_sub_and_nonnegativity():
    x = schubert_class((2, 2), 4, 8)
    assert class_sub(x, x).is_zero()
    assert is_schubert_nonnegative(class_sub(x, x))
    y = sigma1_power(4, 8, 4)
    difference = class_sub(y, x)
    assert difference.terms() == {
        (1, 1, 1, 1): 1,
        (2, 1, 1): 3,
        (2, 2): 1,
        (3, 1): 3,
        (4,): 1,
    }
    assert is_schubert_nonnegative(difference)
    assert not is_schubert_nonnegative(
        class_sub(schubert_class((2, 2), 4, 8), schubert_class((3, 1), 4, 8))
    )


def test_degree_additivity():
    a = schubert_class((2, 2), 4, 8)
    b = schubert_class((3, 1), 4, 8)
    assert class_degree(class_add(a, b)) == class_degree(a) + class_degree(b)


def test_skew_complement_class():
    # only the empty inner summand survives when the shapes coincide
    assert skew_complement_class((2, 1), (2, 1), 2, 4) == point_class(2, 4)
    display = skew_complement_class((4, 3, 2, 1), (3, 2, 1), 4, 8)
    assert display.terms() == {
        (3, 3, 3, 3): 1,
        (4, 3, 3, 2): 3,
        (4, 4, 2, 2): 2,
        (4, 4, 3, 1): 3,
        (4, 4, 4): 1,
    }
    assert skew_complement_class((3, 1), (), 2, 5) == schubert_class((2,), 2, 5)
    with pytest.raises(ShapeTooLarge):
        skew_complement_class((5,), (), 2, 4)
    with pytest.raises(ShapeTooLarge):
        skew_complement_class((2, 2), (3,), 2, 6)


def test_phi_is_ring_map_small():
    for k, n in ((2, 4), (2, 5), (3, 6)):
        shapes = [lam for d in (1, 2, 3) for lam in all_partitions(d)]
        for mu in shapes:
            for nu in shapes:
                a, b = SchurExpansion.basis(mu), SchurExpansion.basis(nu)
                assert phi(schur_product(a, b), k, n) == class_product(
                    phi(a, k, n), phi(b, k, n)
                )


def test_pieri_iteration_reaches_degree_times_point():
    for k, n in ((2, 4), (2, 5)):
        for size in range(k * (n - k) + 1):
            for lam in all_partitions(size):
                if len(lam) > k or (lam and lam[0] > n - k):
                    continue
                x = schubert_class(lam, k, n)
                expected = class_degree(x)
                for _ in range(k * (n - k) - size):
                    x = class_product(x, schubert_class((1,), k, n))
                assert x == SchubertClass(
                    k, n, {tuple([n - k] * k): expected}
                ) or (expected == 0 and x.is_zero())


def test_lift_round_trip():
    x = schubert_class((2, 1), 3, 6)
    assert phi(lift(x), 3, 6) == x


def test_class_text():
    x = class_sub(
        schubert_class((2, 2), 2, 4), schubert_class((1, 1), 2, 4)
    )
    assert x.text() == "-1*o[1,1] + 1*o[2,2]@Gr(2,4)"
    assert SchubertClass(2, 4).text() == "0@Gr(2,4)"
    assert parse_class("-1*o[1,1] + 1*o[2,2]@Gr(2,4)") == x
    assert parse_class("0@Gr(2,4)") == SchubertClass(2, 4)
    with pytest.raises(ParseError):
        parse_class("1*o[2,2]")
    with pytest.raises(ParseError):
        parse_class("1*o[3]@Gr(2,4)")  # does not fit the rectangle
