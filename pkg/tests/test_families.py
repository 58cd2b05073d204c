import random

import pytest

from cremona.domains import QQ, PrimeField
from cremona.errors import CertificateError, StructuralError
from cremona.families import (EXPECTED, construct, dimension_formula, extract_line,
                              jonquieres_inverse, loria_points, make_determinantal,
                              make_jonquieres, make_ruled, quadric_through, z_ring)
from cremona.ideal import Ideal, graded_piece
from cremona.ratmap import base_ideal, compose_check, is_birational

from conftest import built


@pytest.mark.parametrize("d", range(2, 9))
def test_dimension_identities(d):
    for fam in ("J", "R"):
        value, ok = dimension_formula(fam, d)
        assert ok
    assert dimension_formula("J", d)[0] == 2 * d * d + 2 * d + 14
    assert dimension_formula("R", d)[0] == 6 * d + 13


def test_dimension_row():
    assert {f: dimension_formula(f)[0] for f in "RCDJ"} == {"R": 37, "C": 37, "D": 46, "J": 54}
    assert dimension_formula("D")[1] and dimension_formula("C")[1]
    with pytest.raises(StructuralError):
        dimension_formula("D", 5)
    with pytest.raises(StructuralError):
        dimension_formula("X")


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_jonquieres_inverse(d):
    c = make_jonquieres(d, seed=d)
    cc = compose_check(c.map, c.inverse)
    # composition is S'^(d-1) * K times the identity
    assert cc.degree() == d * d - 1
    assert is_birational(c.map, seed=d).value


def test_jonquieres_certificate():
    R = z_ring()
    z = R.gens()
    from cremona.families import JonquieresParams
    prm = JonquieresParams(2, z[0], z[0] * z[2], R.one(), z[2])
    # P_1 Q_1 == P_2 Q_0: the certificate must name the violated condition
    with pytest.raises(CertificateError) as e:
        make_jonquieres(2, params=prm)
    assert "P_{d-1} Q_{d-1}" in str(e.value)


@pytest.mark.parametrize("d", [3, 4, 5])
def test_ruled_base_and_piece(d):
    c = make_ruled(d, seed=1)
    h = base_ideal(c.map).hilbert()
    assert h.proj_dim == 1
    if d == 4:
        assert h.degree == 9
        assert len(graded_piece(c.witnesses["ideal"], 4)) == 4


def test_determinantal_syzygies(det1):
    G = det1.witnesses["G"]
    assert all(f.is_zero() for f in G.transpose().apply(list(det1.map.components)))
    assert det1.witnesses["Delta"] == extract_line(det1.map)


def test_determinantal_base_degree(det1):
    h = base_ideal(det1.map).hilbert()
    assert (h.proj_dim, h.degree) == (1, 11)


def test_explicit_matrix(explicit):
    G = explicit.witnesses["G"]
    printed = [["-z1", "z0", "-z1^2+z0*z3"],
               ["z0", "z1", "z0^2-z1*z2"],
               ["0", "z2", "z0*z1-z1*z3"],
               ["0", "z3", "-z0*z1+z0*z2"]]
    R = G.ring
    assert R.field == QQ
    for i in range(4):
        for j in range(3):
            assert G[i, j] == R(printed[i][j])


def test_conic_rref_canonical():
    a = built("C", 1)
    b = construct("C", 1)
    assert [str(f) for f in a.map.components] == [str(f) for f in b.map.components]


@pytest.mark.parametrize("fam", ["J", "R", "D", "C"])
def test_determinism(fam):
    a = construct(fam, 2)
    b = construct(fam, 2)
    assert [str(f) for f in a.map.components] == [str(f) for f in b.map.components]
    assert EXPECTED[fam].items() <= a.expected.items()


def test_other_prime():
    c = construct("D", 1, field=PrimeField(10007))
    assert c.map.ring.field.p == 10007


def test_loria_incidences(loria):
    ring = loria.map.ring
    for q in loria.witnesses["cones"]:
        for L in loria.witnesses["lines"]:
            assert L.contains(q)
    pts = loria.witnesses["points"]
    cones = loria.witnesses["cones"]
    for j, q in enumerate(cones):
        vals = [q.evaluate(pt) for pt in pts]
        assert sum(1 for v in vals if v == 0) == 2
        assert vals[j] != 0
    assert len(set(tuple(p) for p in loria_points())) == 3


def test_quadric_through_underdetermined():
    R = z_ring(QQ)
    e = [[int(i == j) for j in range(4)] for i in range(4)]
    with pytest.raises(CertificateError):
        quadric_through(R, [(e[0], e[3])], [])


def test_unknown_family():
    with pytest.raises(StructuralError):
        construct("Z", 1)
