import random

import pytest
from hypothesis import given, settings, strategies as st

from cremona import groebner as gb
from cremona.domains import QQ
from cremona.errors import BudgetExceeded
from cremona.ideal import Ideal, groebner_basis, ideal_membership
from cremona.monomials import MonomialOrder
from cremona.polynomial import Ring

R = Ring("z0 z1 z2 z3")
RQ = Ring("z0 z1 z2 z3", QQ)


def _certified(I, order=None):
    order = order or I.ring.order
    return gb.is_groebner(I._basis(order), order, I.ring.field.p)


def test_twisted_cubic_basis():
    z0, z1, z2, z3 = R.gens()
    I = Ideal([z0 * z2 - z1 ** 2, z1 * z3 - z2 ** 2, z0 * z3 - z1 * z2])
    G = I.groebner_basis()
    assert len(G) == 3
    assert _certified(I)
    assert I.hilbert().poly_string() == "3t+1"


def test_linear_basis():
    z0, z1, z2, z3 = R.gens()
    I = Ideal([z0 - z1, z0 + z1])
    assert sorted(str(g) for g in I.groebner_basis()) == ["z0", "z1"]


def test_unit_ideal():
    z0, z1, z2, z3 = R.gens()
    I = Ideal([z0 * z1 - 1, z0])
    assert I.is_unit()


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10**6), st.integers(2, 4))
def test_buchberger_certificate_random(seed, k):
    rng = random.Random(seed)
    gens = [R.random_form(rng.randint(1, 3), rng) for _ in range(k)]
    I = Ideal(gens)
    assert _certified(I)
    assert all(I.contains(g) for g in gens)


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10**6))
def test_lex_and_grevlex_agree(seed):
    rng = random.Random(seed)
    gens = [R.random_form(2, rng) for _ in range(3)]
    I = Ideal(gens)
    lex = MonomialOrder.lex(4)
    assert _certified(I, lex)
    for g in I.groebner_basis(lex):
        assert I.contains(g)
    for g in I.groebner_basis():
        assert I.reduce(g, lex).is_zero()


def test_rational_basis_matches_mod_p():
    z = RQ.gens()
    I = Ideal([z[0] * z[1] - 3 * z[2] ** 2, z[1] ** 2 - z[0] * z[3], z[2] * z[3] - 5 * z[0] ** 2])
    Ip = Ideal([R(str(g)) for g in I.gens])
    assert I.hilbert() == Ip.hilbert()
    assert _certified(I)


def test_membership():
    z0, z1, z2, z3 = R.gens()
    I = Ideal([z0 ** 2, z1 ** 2])
    assert ideal_membership(z0 ** 2 * z3 + z1 ** 3, I)
    assert not ideal_membership(z0 * z1, I)
    assert z0 ** 3 in I


def test_budget():
    rng = random.Random(3)
    I = Ideal([R.random_form(3, rng) for _ in range(4)], budget=5)
    with pytest.raises(BudgetExceeded):
        groebner_basis(I)


def test_reduced_basis_is_canonical():
    rng = random.Random(11)
    gens = [R.random_form(2, rng) for _ in range(3)]
    a = Ideal(gens)
    b = Ideal([gens[0] + gens[1], gens[1], gens[2] - gens[0].scale(7)])
    assert a == b
    assert [str(g) for g in a.groebner_basis()] == [str(g) for g in b.groebner_basis()]
