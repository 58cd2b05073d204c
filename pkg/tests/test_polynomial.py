from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cremona.domains import QQ, PrimeField, field_from_string
from cremona.errors import ParseError, StructuralError
from cremona.polynomial import (PolyMatrix, Ring, determinant, format_polynomial,
                                parse_polynomial, signed_minors)

P = 32003
R = Ring("z0 z1 z2 z3")
RQ = Ring("z0 z1 z2 z3", QQ)

exps = st.tuples(*[st.integers(0, 3)] * 4)
coeffs = st.integers(-50, 50)
polys = st.dictionaries(exps, coeffs, max_size=6).map(R.from_dict)
qpolys = st.dictionaries(exps, coeffs, max_size=6).map(RQ.from_dict)


def test_parse_example():
    z0, z1, z2, z3 = R.gens()
    assert R("-z1^2+z0*z3") == z0 * z3 - z1 ** 2
    assert R(" 3 * z0 ^ 2 - z1 ") == 3 * z0 ** 2 - z1


def test_parse_errors_have_columns():
    with pytest.raises(ParseError) as e:
        parse_polynomial("z0+*z1", R)
    assert e.value.column == 4
    with pytest.raises(ParseError) as e:
        parse_polynomial("z0+q", R)
    assert e.value.column == 4
    with pytest.raises(ParseError):
        parse_polynomial("z0^", R)


def test_mod_p_reduction():
    assert R(f"{P}*z0") == R.zero()
    assert R(f"{P + 2}*z0") == R("2*z0")


def test_field_strings():
    assert field_from_string("QQ") == QQ
    assert field_from_string("GF(101)").p == 101
    with pytest.raises(ValueError):
        field_from_string("GF(100)")


@settings(max_examples=60, deadline=None)
@given(polys)
def test_format_parse_roundtrip(f):
    assert parse_polynomial(format_polynomial(f), R) == f


@settings(max_examples=40, deadline=None)
@given(qpolys)
def test_format_parse_roundtrip_rational(f):
    f = f.scale(Fraction(1, 7))
    assert parse_polynomial(str(f), RQ) == f


@settings(max_examples=40, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == R.zero()


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 5), st.integers(0, 10**6))
def test_euler_identity(d, seed):
    import random
    f = R.random_form(d, random.Random(seed))
    lhs = sum((x * f.derivative(i) for i, x in enumerate(R.gens())), R.zero())
    assert lhs == f.scale(d)


@settings(max_examples=30, deadline=None)
@given(polys, polys)
def test_product_rule(a, b):
    for i in range(4):
        assert (a * b).derivative(i) == a.derivative(i) * b + a * b.derivative(i)


def test_substitute_and_evaluate():
    z0, z1, z2, z3 = R.gens()
    f = z0 * z1 + z3 ** 2
    g = f.substitute([z1, z0, z2, z0 + z1])
    assert g == z0 * z1 + (z0 + z1) ** 2
    assert f.evaluate([2, 3, 5, 7]) == 55


def test_homogeneity():
    assert R("z0^2+z1*z3").is_homogeneous()
    assert not R("z0^2+z1").is_homogeneous()
    assert R("z0^2*z3+z1").degree() == 3


def test_mismatched_rings():
    S = Ring("z0 z1 z2 z3", PrimeField(101))
    with pytest.raises(StructuralError):
        R.gen(0) + S.gen(0)


def test_determinant_and_minors():
    z0, z1, z2, z3 = R.gens()
    M = PolyMatrix([[z0, z1], [z2, z3]])
    assert determinant(M) == z0 * z3 - z1 * z2
    N = PolyMatrix([[z0, z1, z2], [z1, z2, z3], [z0, z0, z3], [z3, z2, z1]])
    taus = signed_minors(N)
    # each column is a syzygy of the signed minors (Laplace expansion)
    assert all(f.is_zero() for f in N.transpose().apply(taus))
