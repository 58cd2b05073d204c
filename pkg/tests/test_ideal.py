import random

from hypothesis import given, settings, strategies as st

from cremona.ideal import (Ideal, count_distinct_points, elimination, exact_quotient,
                           graded_piece, ideal_intersection, ideal_quotient, irrelevant_ideal,
                           saturate_by_element, saturation)
from cremona.monomials import MonomialOrder
from cremona.polynomial import Ring

R = Ring("z0 z1 z2 z3")
z0, z1, z2, z3 = R.gens()


def test_hilbert_basics():
    assert Ideal([], R).hilbert().proj_dim == 3
    assert Ideal([], R).hilbert().degree == 1
    u = Ideal([R.one()], R).hilbert()
    assert u.proj_dim == -1 and u.degree == 0


def test_double_line_hilbert():
    h = Ideal([z0, z1]).power(2).hilbert()
    # (z0, z1)^2 is a triple structure on a line in P3
    assert h.poly_string() == "3t+1"
    assert h.degree == 3


@settings(max_examples=12, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.integers(0, 10**6))
def test_complete_intersection_degree(a, b, seed):
    rng = random.Random(seed)
    h = Ideal([R.random_form(a, rng), R.random_form(b, rng)]).hilbert()
    assert h.proj_dim == 1
    assert h.degree == a * b
    # arithmetic genus of a complete intersection (a, b) in P3
    assert h.arithmetic_genus == a * b * (a + b - 4) // 2 + 1


@settings(max_examples=8, deadline=None)
@given(st.integers(0, 10**6))
def test_dimension_degree_order_independent(seed):
    rng = random.Random(seed)
    I = Ideal([R.random_form(2, rng), R.random_form(2, rng), R.random_form(3, rng) * z0])
    h1 = I.hilbert()
    perm = [2, 0, 3, 1]
    J = Ideal([g.substitute([R.gen(i) for i in perm]) for g in I.gens])
    h2 = J.hilbert()
    assert (h1.proj_dim, h1.degree) == (h2.proj_dim, h2.degree)


def test_intersection_and_containment():
    A = Ideal([z0, z1])
    B = Ideal([z2, z3])
    X = ideal_intersection(A, B)
    assert X.hilbert().degree == 2
    for g in X.gens:
        assert g in A and g in B
    assert X == A * B


@settings(max_examples=8, deadline=None)
@given(st.integers(0, 10**6))
def test_quotient_containments(seed):
    rng = random.Random(seed)
    I = Ideal([R.random_form(2, rng) * z0, R.random_form(2, rng) * z1, R.random_form(3, rng)])
    J = Ideal([z0, z1])
    Q = ideal_quotient(I, J)
    assert Q.contains(I)
    for q in Q.gens:
        for j in J.gens:
            assert (q * j) in I
    S = saturation(I, J)
    assert S.contains(Q)


def test_quotient_examples():
    assert ideal_quotient(Ideal([z0 * z1]), Ideal([z0])) == Ideal([z1])
    assert saturation(Ideal([z0 * z1, z0 * z2]), Ideal([z0])) == Ideal([z1, z2])
    # irrelevant component
    I = Ideal([z0, z1]) * irrelevant_ideal(R)
    assert saturation(I, irrelevant_ideal(R)) == Ideal([z0, z1])
    # embedded point at (0:0:0:1) is a genuine point of P3
    I = Ideal([z0, z1]) * Ideal([z0, z1, z2])
    assert saturation(I, irrelevant_ideal(R)) == I
    assert saturation(I, Ideal([z0, z1, z2])) == Ideal([z0, z1])
    assert saturate_by_element(Ideal([z0 ** 3 * z1]), z0) == Ideal([z1])


def test_elimination_twisted_cubic():
    S = Ring("t u z0 z1 z2 z3")
    t, u, a, b, c, d = S.gens()
    I = Ideal([a - t ** 3, b - t ** 2 * u, c - t * u ** 2, d - u ** 3])
    E = elimination(I, ["t", "u"])
    T = Ideal([g.to_ring(R) for g in E.gens], R)
    assert T.hilbert().poly_string() == "3t+1"


def test_exact_quotient():
    f = (z0 + z1) * (z2 ** 2 - z3 * z0)
    q, ok = exact_quotient(f, z0 + z1)
    assert ok and q == z2 ** 2 - z3 * z0
    _, ok = exact_quotient(f, z0 + z2)
    assert not ok


def test_graded_piece():
    I = Ideal([z0 * z1, z2 ** 2])
    assert len(graded_piece(I, 2)) == 2
    assert len(graded_piece(I, 3)) == 8 - 0


def test_count_distinct_points():
    S = Ring("x y z")
    x, y, z = S.gens()
    assert count_distinct_points(Ideal([x ** 2, y])) == 1
    assert count_distinct_points(Ideal([x * y, z * (x - y), z ** 2])) == 2
    # three collinear reduced points
    assert count_distinct_points(Ideal([z, x * y * (x - y)])) == 3


def test_lex_block_orders_encode():
    o = MonomialOrder.block(4, [0, 1])
    assert o.encode((0, 0, 5, 5)) < o.encode((1, 0, 0, 0))
