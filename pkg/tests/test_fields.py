"""Field arithmetic: construction, canonical forms, axioms, and JSON encoding."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from glndep import errors
from glndep.fields import (
    ExtensionField,
    PrimeField,
    RationalField,
    field_from_json,
    field_from_order,
    field_to_json,
    find_irreducible,
    is_irreducible,
    parse_field,
)

GF2 = PrimeField(2)
GF3 = PrimeField(3)
GF7 = PrimeField(7)
GF4 = ExtensionField(2, 2)
GF9 = ExtensionField(3, 2)
QQ = RationalField()


# construction

def test_prime_field_basic():
    assert GF7.p == 7
    assert GF7.cardinality == 7
    assert GF7.zero == 0 and GF7.one == 1


def test_prime_field_rejects_composite():
    with pytest.raises(errors.NotPrimeError):
        PrimeField(4)
    with pytest.raises(errors.NotPrimeError):
        PrimeField(1)
    with pytest.raises(errors.NotPrimeError):
        PrimeField(0)


def test_prime_field_rejects_huge_modulus():
    with pytest.raises(ValueError):
        PrimeField(2305843009213693951)  # a Mersenne prime, but over the size cap


def test_extension_default_modulus_gf4():
    # x^2 + x + 1 is the only monic irreducible quadratic over GF(2)
    assert GF4.modulus == (1, 1, 1)
    assert GF4.cardinality == 4


def test_extension_default_modulus_gf9():
    # counting order enumerates x^2 (divisible by x), then x^2 + 1 (no roots)
    assert GF9.modulus == (1, 0, 1)


def test_extension_rejects_reducible_modulus():
    with pytest.raises(ValueError):
        ExtensionField(2, 2, [1, 0, 1])  # x^2 + 1 == (x+1)^2 over GF(2)


def test_extension_rejects_degree_one():
    with pytest.raises(ValueError):
        ExtensionField(2, 1)


def test_rational_field_is_infinite():
    assert QQ.cardinality is None
    assert not QQ.is_finite
    with pytest.raises(errors.InfiniteFieldError):
        list(QQ.elements())


# arithmetic examples

def test_gf2_inverse_of_one():
    assert GF2.inv(1) == 1


def test_gf4_x_times_x():
    x = (0, 1)
    assert GF4.mul(x, x) == (1, 1)  # x^2 reduces to x + 1


def test_rational_add():
    assert QQ.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)


@pytest.mark.parametrize("field", [GF2, GF7, GF4, QQ])
def test_division_by_zero(field):
    with pytest.raises(ZeroDivisionError):
        field.inv(field.zero)
    with pytest.raises(ZeroDivisionError):
        field.div(field.one, field.zero)


def test_sub_and_div_agree_with_definitions():
    assert GF7.sub(2, 5) == 4
    assert GF7.div(3, 5) == GF7.mul(3, GF7.inv(5))


# irreducibility

def test_irreducible_examples():
    assert is_irreducible(GF2, [1, 1, 1])  # x^2 + x + 1
    assert not is_irreducible(GF2, [1, 0, 1])  # x^2 + 1 = (x + 1)^2
    assert is_irreducible(GF3, [1, 0, 1])  # x^2 + 1 has no roots mod 3


def test_find_irreducible_counting_order():
    assert find_irreducible(GF2, 2) == (1, 1, 1)
    assert find_irreducible(GF3, 2) == (1, 0, 1)
    assert find_irreducible(GF2, 3) == (1, 1, 0, 1)
    assert find_irreducible(GF2, 4) == (1, 1, 0, 0, 1)


def test_is_irreducible_requires_monic():
    with pytest.raises(ValueError):
        is_irreducible(GF3, [1, 2])  # leading coefficient 2


# enumeration

def test_enumerate_prime_fields():
    assert list(GF2.elements()) == [0, 1]
    assert list(GF3.elements()) == [0, 1, 2]


def test_enumerate_gf4_order():
    assert list(GF4.elements()) == [(0, 0), (1, 0), (0, 1), (1, 1)]


def test_enumeration_starts_at_zero():
    for field in (GF2, GF3, GF4, GF9):
        assert next(iter(field.elements())) == field.zero


# canonical-form validation

def test_prime_validate_rejects_out_of_range():
    with pytest.raises(ValueError):
        GF3.validate(3)
    with pytest.raises(ValueError):
        GF3.validate(-1)
    with pytest.raises(TypeError):
        GF3.validate(1.0)
    with pytest.raises(TypeError):
        GF3.validate(True)


def test_extension_validate_rejects_bad_tuples():
    with pytest.raises(TypeError):
        GF4.validate((0,))
    with pytest.raises(ValueError):
        GF4.validate((2, 0))


def test_rational_validate_requires_fraction():
    QQ.validate(Fraction(-3, 7))
    with pytest.raises(TypeError):
        QQ.validate(0.5)
    with pytest.raises(TypeError):
        QQ.validate(1)


def test_from_int_embedding():
    assert GF7.from_int(9) == 2
    assert GF4.from_int(3) == (1, 0)
    assert QQ.from_int(3) == Fraction(3)


# field axioms (property-based)

def _gf_elements(field):
    return st.integers(min_value=0, max_value=field.cardinality - 1).map(field.element_from_index)


def _axiom_check(field, a, b, c):
    assert field.add(field.add(a, b), c) == field.add(a, field.add(b, c))
    assert field.mul(field.mul(a, b), c) == field.mul(a, field.mul(b, c))
    assert field.add(a, b) == field.add(b, a)
    assert field.mul(a, b) == field.mul(b, a)
    assert field.mul(a, field.add(b, c)) == field.add(field.mul(a, b), field.mul(a, c))
    assert field.add(a, field.neg(a)) == field.zero
    if a != field.zero:
        assert field.mul(a, field.inv(a)) == field.one


@given(_gf_elements(GF7), _gf_elements(GF7), _gf_elements(GF7))
def test_field_axioms_gf7(a, b, c):
    _axiom_check(GF7, a, b, c)


@given(_gf_elements(GF9), _gf_elements(GF9), _gf_elements(GF9))
def test_field_axioms_gf9(a, b, c):
    _axiom_check(GF9, a, b, c)


_RATIONALS = st.fractions(min_value=-1000, max_value=1000, max_denominator=100)


@settings(max_examples=60)
@given(_RATIONALS, _RATIONALS, _RATIONALS)
def test_field_axioms_rationals(a, b, c):
    _axiom_check(QQ, a, b, c)


@given(_gf_elements(GF9), _gf_elements(GF9))
def test_results_stay_canonical_gf9(a, b):
    for value in (GF9.add(a, b), GF9.mul(a, b), GF9.neg(a), GF9.sub(a, b)):
        GF9.validate(value)


@pytest.mark.parametrize(
    "field,value",
    [(GF7, 5), (GF4, (1, 1)), (QQ, Fraction(-2, 3)), (QQ, 4)],
)
def test_element_constructor_is_idempotent(field, value):
    once = field.element(value)
    assert field.element(once) == once


@pytest.mark.parametrize("field", [GF4, ExtensionField(2, 3), GF9, ExtensionField(5, 2), ExtensionField(3, 4)])
def test_multiplicative_group_closed(field):
    nonzero = [e for e in field.elements() if e != field.zero]
    assert len(nonzero) == field.cardinality - 1
    seen = set(nonzero)
    for a in nonzero:
        assert field.mul(a, field.inv(a)) == field.one
        for b in nonzero:
            assert field.mul(a, b) in seen


# selectors and JSON

def test_parse_field_selectors():
    assert parse_field("prime:7") == GF7
    assert parse_field("ext:2:2") == GF4
    assert parse_field("rational") == QQ
    with pytest.raises(errors.ParseError):
        parse_field("prime:abc")
    with pytest.raises(errors.ParseError):
        parse_field("galois:2")


def test_field_from_order():
    assert field_from_order(7) == GF7
    assert field_from_order(4) == GF4
    assert field_from_order(9) == GF9
    with pytest.raises(ValueError):
        field_from_order(6)


@pytest.mark.parametrize("field", [GF2, GF7, GF4, GF9, QQ])
def test_field_json_round_trip(field):
    assert field_from_json(field_to_json(field)) == field


def test_field_json_rejects_garbage():
    with pytest.raises(errors.ParseError):
        field_from_json({"kind": "prime", "p": 4})
    with pytest.raises(errors.ParseError):
        field_from_json({"kind": "octonion"})
    with pytest.raises(errors.ParseError):
        field_from_json("prime:2")


@pytest.mark.parametrize(
    "field,values",
    [
        (GF7, [0, 1, 6]),
        (GF4, [(0, 0), (1, 1)]),
        (QQ, [Fraction(0), Fraction(-7, 3), Fraction(5)]),
    ],
)
def test_element_json_round_trip(field, values):
    for v in values:
        assert field.element_from_json(field.element_to_json(v)) == v


def test_element_json_rejects_non_canonical():
    with pytest.raises(errors.ParseError):
        GF3.element_from_json("3")
    with pytest.raises(errors.ParseError):
        GF3.element_from_json(2)
    with pytest.raises(errors.ParseError):
        GF4.element_from_json(["1"])
    with pytest.raises(errors.ParseError):
        QQ.element_from_json("1/0")
