import pytest

from cremona.chow import (ONE, ChowClass, H, Hp, format_class, gamma_class, integrate_blowup,
                          ruled_degree, s, series_coefficient, x_class)


def test_truncation():
    assert s * s == ChowClass()
    assert H ** 4 == ChowClass()
    assert (s * H ** 3 * Hp ** 3).degree == 1


def test_x_class_degrees():
    X = x_class()
    assert (X * H ** 3).coefficient(1, 3, 3) == 1
    assert (X * Hp ** 3).coefficient(1, 3, 3) == 1
    # symmetric under exchanging the two factors
    assert X.swap() == X


def test_gamma_class():
    g = gamma_class()
    assert g == 3 * H ** 2 + 5 * s * H
    assert format_class(g) == "3*H^2+5*s*H"
    assert integrate_blowup(g * H) == 8
    assert integrate_blowup(g * s) == 3


def test_series_coefficient_small():
    # h_1(a, b) = a + b, h_2(a, b) = a^2 + ab + b^2
    assert series_coefficient([H, s], 1) == H + s
    assert series_coefficient([H, s], 2) == H ** 2 + H * s
    assert series_coefficient([H], 0) == ONE


def test_blowup_integration():
    assert integrate_blowup(H ** 3) == 1
    assert integrate_blowup(s * H ** 2) == 1


@pytest.mark.parametrize("d", range(2, 13))
def test_ruled_degree(d):
    assert ruled_degree(d) == d


def test_ruled_degree_domain():
    with pytest.raises(ValueError):
        ruled_degree(1)


def test_ring_laws():
    a = 2 * s + H - Hp
    b = H * Hp + 3 * s
    c = Hp + 1
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
