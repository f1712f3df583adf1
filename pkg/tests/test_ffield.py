import pytest

from killform.base_module import EXC, ErrorCode
from killform.models.ffield import (
    FieldElement,
    FieldOp,
    field_arith,
    field_make,
    frobenius,
    trace_to_subfield,
)


@pytest.mark.parametrize('p, k, modulus', [
    (2, 2, (1, 1, 1)),   # x^2 + x + 1
    (2, 3, (1, 1, 0, 1)),  # x^3 + x + 1
    (3, 2, (1, 0, 1)),   # x^2 + 1
    (5, 1, (0, 1)),
])
def test_smallest_modulus(p, k, modulus):
    assert field_make(p, k).modulus == modulus


def test_gf8_multiplication():
    F = field_make(2, 3)
    x, x2 = 2, 4
    assert F.mul(x, x2) == 3  # x^3 = x + 1
    assert F.mul(x, 1) == x
    assert F.add(3, 3) == 0


@pytest.mark.parametrize('p, k', [(2, 3), (3, 2), (5, 2), (7, 1)])
def test_field_axioms(p, k):
    F = field_make(p, k)
    for a in range(1, F.q):
        assert F.mul(a, F.inv(a)) == 1
        assert F.add(a, F.neg(a)) == 0
        assert F.pow(a, F.q - 1) == 1
    assert F.element_order(F.xi) == F.q - 1


def test_tables_match_arithmetic():
    F = field_make(3, 2)
    add, mul = F.tables()
    for a in range(F.q):
        for b in range(F.q):
            assert add[a, b] == F.add(a, b)
            assert mul[a, b] == F.mul(a, b)


def test_subfield_trace_and_norm():
    F = field_make(5, 2)
    q = F.subfield_order
    assert q == 5
    for a in range(F.q):
        t = F.trace_to_subfield(a)
        assert F.pow(t, q) == t
        n = F.norm_to_subfield(a)
        assert F.pow(n, q) == n


def test_subfield_needs_even_degree():
    with pytest.raises(EXC) as e:
        field_make(2, 3).subfield_order
    assert e.value.code is ErrorCode.ValidationError


def test_frobenius_is_automorphism():
    F = field_make(2, 4)
    for a in range(F.q):
        for b in (1, 3, 7):
            assert F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b))
    assert all(F.frobenius(a, F.k) == a for a in range(F.q))


def test_invalid_field():
    with pytest.raises(EXC) as e:
        field_make(4, 1)
    assert e.value.code is ErrorCode.ValidationError


def test_field_element_operations():
    F = field_make(3, 2)
    a = FieldElement(F, [1, 1])
    b = FieldElement(F, 5)
    assert (a + b) - b == a
    assert (a * b) / b == a
    assert a * a.inverse() == FieldElement(F, 1)
    assert a ** (F.q - 1) == FieldElement(F, 1)
    assert -(-a) == a
    assert field_arith(a, b, '+') == a + b
    assert field_arith(a, 3, FieldOp.POW) == a * a * a
    assert frobenius(a, 2) == a
    t = trace_to_subfield(a)
    assert t ** F.subfield_order == t


def test_field_element_errors():
    F, G = field_make(3, 2), field_make(2, 3)
    with pytest.raises(EXC) as e:
        FieldElement(F, 1) + FieldElement(G, 1)
    assert e.value.code is ErrorCode.DimensionMismatch
    with pytest.raises(EXC) as e:
        FieldElement(F, 0).inverse()
    assert e.value.code is ErrorCode.NotInvertible
    with pytest.raises(EXC) as e:
        FieldElement(F, 9)
    assert e.value.code is ErrorCode.ValidationError
    with pytest.raises(EXC) as e:
        FieldOp.from_string('%')
    assert e.value.code is ErrorCode.ParseError
