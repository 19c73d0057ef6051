import pytest
from fractions import Fraction

from incalg.errors import InputError, NotUnit
from incalg.rings import (RingElem, center_field, format_elem, in_radical,
                          invert_unit, is_central, parse_elem, parse_ring)


def test_parse_ring_round_trip():
    for text in ["Q", "Zmod:12", "Mat:2:Q", "Mat:3:Zmod:7"]:
        assert str(parse_ring(text)) == text


def test_parse_ring_rejects_garbage():
    for text in ["", "R", "Zmod:0", "Zmod:x", "Mat:0:Q", "Mat:2:Mat:2:Q"]:
        with pytest.raises(InputError):
            parse_ring(text)


def test_rational_arithmetic(QQ):
    a = parse_elem(QQ, "2/3")
    b = parse_elem(QQ, "-1/6")
    assert format_elem(a + b) == "1/2"
    assert format_elem(a * b) == "-1/9"
    assert format_elem(-b) == "1/6"
    assert (a - a).is_zero()


def test_rational_canonical_form(QQ):
    assert format_elem(parse_elem(QQ, "4/6")) == "2/3"
    assert format_elem(parse_elem(QQ, "5")) == "5"
    assert format_elem(parse_elem(QQ, "-3/1")) == "-3"


def test_residue_arithmetic(Z12):
    a = parse_elem(Z12, "7")
    b = parse_elem(Z12, "8")
    assert format_elem(a + b) == "3"
    assert format_elem(a * b) == "8"
    assert format_elem(-a) == "5"


def test_matrix_arithmetic(M2Q):
    a = parse_elem(M2Q, [["1", "2"], ["3", "4"]])
    b = parse_elem(M2Q, [["0", "1"], ["1", "0"]])
    assert (a * b).payload == ((Fraction(2), Fraction(1)),
                               (Fraction(4), Fraction(3)))
    assert (a + b).payload == ((Fraction(1), Fraction(3)),
                               (Fraction(4), Fraction(4)))


def test_invert_unit_field(QQ, F7):
    assert format_elem(invert_unit(parse_elem(QQ, "-2/5"))) == "-5/2"
    assert format_elem(invert_unit(parse_elem(F7, "3"))) == "5"


def test_invert_unit_residue_ring(Z12):
    assert format_elem(invert_unit(parse_elem(Z12, "5"))) == "5"
    with pytest.raises(NotUnit):
        invert_unit(parse_elem(Z12, "6"))


def test_invert_unit_matrix(M2Q):
    a = parse_elem(M2Q, [["1", "1"], ["0", "1"]])
    inv = invert_unit(a)
    assert (a * inv).is_one() and (inv * a).is_one()
    with pytest.raises(NotUnit):
        invert_unit(parse_elem(M2Q, [["1", "2"], ["2", "4"]]))


def test_matrix_inverse_over_residue_ring():
    spec = parse_ring("Mat:2:Zmod:12")
    a = parse_elem(spec, [["1", "3"], ["4", "1"]])  # det = 1 - 12 = 1 mod 12
    inv = invert_unit(a)
    assert (a * inv).is_one() and (inv * a).is_one()
    with pytest.raises(NotUnit):
        invert_unit(parse_elem(spec, [["2", "0"], ["0", "1"]]))


def test_is_central(M2Q, QQ):
    assert is_central(parse_elem(QQ, "3/7"))
    assert is_central(parse_elem(M2Q, [["5", "0"], ["0", "5"]]))
    assert not is_central(parse_elem(M2Q, [["5", "1"], ["0", "5"]]))


def test_radical_membership(QQ, Z12):
    # J(Z/12) = (6): multiples of rad(12) = 6
    assert in_radical(parse_elem(Z12, "6"))
    assert in_radical(parse_elem(Z12, "0"))
    assert not in_radical(parse_elem(Z12, "4"))
    assert not in_radical(parse_elem(QQ, "1"))
    assert in_radical(parse_elem(QQ, "0"))
    mat = parse_ring("Mat:2:Zmod:12")
    assert in_radical(parse_elem(mat, [["6", "0"], ["6", "6"]]))
    assert not in_radical(parse_elem(mat, [["6", "1"], ["0", "6"]]))


def test_center_field(QQ, F7, Z12, M2Q):
    assert center_field(QQ) == QQ
    assert center_field(F7) == F7
    assert center_field(M2Q) == QQ
    with pytest.raises(ValueError):
        center_field(Z12)


def test_scalar_embeds_diagonally(M2Q):
    five = RingElem.scalar(M2Q, Fraction(5))
    assert five.payload == ((Fraction(5), Fraction(0)),
                            (Fraction(0), Fraction(5)))
