"""Acceptance criteria 1-7, one test each."""

import random
import time

from hypothesis import given, settings, strategies as st

from cremona import groebner as gb
from cremona.chow import H, Hp, gamma_class, integrate_blowup, ruled_degree, s, x_class
from cremona.families import construct, dimension_formula, explicit_example, extract_line, make_loria
from cremona.ideal import (Ideal, graded_piece, ideal_intersection, ideal_quotient,
                           saturation)
from cremona.polynomial import Ring
from cremona.ratmap import (analyze, base_ideal, compose_check, exact_divide,
                            image_of_hypersurface, inverse_degree, is_birational, jacobian,
                            secant_length)

from conftest import built

SEEDS = (1, 2, 3)

TABLE = {
    "R": {"alpha": 9, "beta": 1, "eta": 3, "genus": 0},
    "C": {"alpha": 10, "beta": 1, "eta": 2, "genus": 1},
    "D": {"alpha": 11, "beta": 1, "eta": 1, "genus": 2},
    "J": {"alpha": 12, "beta": 0, "genus": 3},
}


def test_criterion_1_invariant_table():
    for fam, want in TABLE.items():
        for seed in SEEDS:
            t = time.perf_counter()
            a = analyze(built(fam, seed).map, seed)
            assert a.bidegree == (4, 4), (fam, seed)
            got = {"alpha": a.alpha, "beta": a.beta, "eta": a.eta, "genus": a.genus}
            for key, value in want.items():
                assert got[key] == value, (fam, seed, key, got[key])
            assert a.degC1 + a.degC2 == 16
            assert time.perf_counter() - t < 300


def test_criterion_2_dimension_row():
    t = time.perf_counter()
    assert {f: dimension_formula(f)[0] for f in "RCDJ"} == {"R": 37, "C": 37, "D": 46, "J": 54}
    for d in range(2, 9):
        assert dimension_formula("J", d)[1]
        assert dimension_formula("R", d)[1]
    assert dimension_formula("D")[1] and dimension_formula("C")[1]
    assert time.perf_counter() - t < 1


def test_criterion_3_determinantal_deep_suite():
    for seed in SEEDS:
        c = built("D", seed)
        tau, taup = c.map, c.inverse
        Gamma, Delta = c.witnesses["Gamma"], c.witnesses["Delta"]
        assert Gamma.hilbert().poly_string() == "8t-4"
        assert secant_length(Gamma, Delta) == 5
        assert len(graded_piece(base_ideal(tau), 4)) == 4
        cubics = graded_piece(Gamma, 3)
        assert len(cubics) == 1
        assert compose_check(tau, taup).degree() == 15
        q = exact_divide(jacobian(tau), cubics[0])
        assert q is not None and q.degree() == 9


def test_criterion_4_contraction_suite():
    c = built("D", 1)
    tau, taup = c.map, c.inverse
    S3 = graded_piece(c.witnesses["Gamma"], 3)[0]
    img = image_of_hypersurface(tau, S3)
    assert (img.dim, img.degree) == (1, 1)
    line = Ideal(img.linear_forms, img.ideal.ring)
    Dp = extract_line(taup)
    Gp = saturation(base_ideal(taup), Dp)
    assert Gp.hilbert().poly_string() == "8t-4"
    assert secant_length(Gp, Dp) == 5
    assert line == Dp
    S9 = exact_divide(jacobian(tau), S3)
    img9 = image_of_hypersurface(tau, S9)
    assert (img9.dim, img9.degree) == (1, 8)


def test_criterion_5_explicit_rational_example():
    c = explicit_example()
    G = c.witnesses["G"]
    printed = [["-z1", "z0", "-z1^2+z0*z3"],
               ["z0", "z1", "z0^2-z1*z2"],
               ["0", "z2", "z0*z1-z1*z3"],
               ["0", "z3", "-z0*z1+z0*z2"]]
    R = G.ring
    for i in range(4):
        for j in range(3):
            assert G[i, j] == R(printed[i][j]), (i, j)
    assert is_birational(c.map).value
    assert inverse_degree(c.map) == (4, 12)
    assert c.map.degree == 4


def test_criterion_6_loria():
    c = make_loria()
    assert is_birational(c.map).value
    assert (c.map.degree, inverse_degree(c.map)[0]) == (4, 4)
    for L in c.witnesses["lines"]:
        for f in c.map.components:
            assert L.contains(f)


R4 = Ring("z0 z1 z2 z3")


@settings(max_examples=10, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.integers(0, 10**6))
def _ci_degree(a, b, seed):
    rng = random.Random(seed)
    h = Ideal([R4.random_form(a, rng), R4.random_form(b, rng)]).hilbert()
    assert (h.proj_dim, h.degree) == (1, a * b)


@settings(max_examples=8, deadline=None)
@given(st.integers(0, 10**6))
def _ideal_operations(seed):
    rng = random.Random(seed)
    z = R4.gens()
    I = Ideal([R4.random_form(2, rng) * z[0], R4.random_form(3, rng), R4.random_form(2, rng) * z[1]])
    J = Ideal([z[0], z[1] + z[2]])
    order = R4.order
    assert gb.is_groebner(I._basis(order), order, R4.field.p)
    Q = ideal_quotient(I, J)
    S = saturation(I, J)
    assert Q.contains(I) and S.contains(Q)
    assert all((q * j) in I for q in Q.gens for j in J.gens)
    X = ideal_intersection(I, J)
    assert I.contains(X) and J.contains(X)
    perm = [3, 1, 0, 2]
    P = Ideal([g.substitute([R4.gen(i) for i in perm]) for g in I.gens])
    assert (P.hilbert().proj_dim, P.hilbert().degree) == (I.hilbert().proj_dim, I.hilbert().degree)
    f = R4.random_form(3, rng)
    assert sum((x * f.derivative(i) for i, x in enumerate(z)), R4.zero()) == f.scale(3)


def test_criterion_7_engine_properties():
    t = time.perf_counter()
    _ci_degree()
    _ideal_operations()
    assert all(ruled_degree(d) == d for d in range(2, 13))
    X = x_class()
    assert (X * H ** 3).coefficient(1, 3, 3) == 1
    assert (X * Hp ** 3).coefficient(1, 3, 3) == 1
    g = gamma_class()
    assert g == 5 * s * H + 3 * H ** 2
    assert integrate_blowup(g * H) == 8
    assert time.perf_counter() - t < 60
