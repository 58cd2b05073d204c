import pytest

from cremona.domains import QQ
from cremona.errors import ParseError
from cremona.fixtures import construction_fixture, dump_fixture, load_fixture
from cremona.polynomial import Ring

from conftest import built

ID = """# identity
ring z0 z1 z2 z3
field GF(32003)
seed 1
z0
z1
z2
z3
[expect]
bidegree 1 1
alpha 0
genus none
"""


def test_load_identity():
    fx = load_fixture(ID)
    assert [str(f) for f in fx.components] == ["z0", "z1", "z2", "z3"]
    assert fx.expect == {"bidegree": [1, 1], "alpha": 0, "genus": None}
    assert fx.seed == 1


@pytest.mark.parametrize("fam", ["J", "D", "C"])
def test_roundtrip(fam):
    c = built(fam, 1)
    text = construction_fixture(c)
    fx = load_fixture(text)
    assert fx.components == list(c.map.components)
    assert fx.family == fam
    assert fx.expect == c.expected
    assert construction_fixture(c) == text


def test_sections_roundtrip(det1):
    fx = load_fixture(construction_fixture(det1))
    ring, gens = fx.sections["Delta"]
    assert len(gens) == 2
    ring, inv = fx.sections["inverse"]
    assert ring.names == ("y0", "y1", "y2", "y3")
    assert inv == list(det1.inverse.components)


def test_loria_fixture_integer(loria):
    text = construction_fixture(loria)
    assert "/" not in text
    fx = load_fixture(text)
    assert fx.ring.field == QQ


@pytest.mark.parametrize("text,line,col", [
    ("ring z0 z1 z2 z3\nz0\nz1\n  z2+*z1\nz3\n", 4, 6),
    ("ring z0 z1 z2 z3\nz0\nz1\nz2+w\nz3\n", 4, 4),
    ("ring z0 z1\nz0\n", 1, 6),
    ("z0\n", 1, 1),
    ("ring z0 z1 z2 z3\nz0\nz1\n[Delta]\n", 4, 1),
    ("ring z0 z1 z2 z3\nz0\nz1\nz2\nz3\n[expect]\nalpha x\n", 7, 7),
    ("ring z0 z1 z2 z3\nfield GF(12)\nz0\n", 2, 7),
])
def test_parse_errors(text, line, col):
    with pytest.raises(ParseError) as e:
        load_fixture(text)
    assert (e.value.line, e.value.column) == (line, col)


def test_too_few_components():
    with pytest.raises(ParseError):
        load_fixture("ring z0 z1 z2 z3\nz0\nz1\n")


def test_dump_load():
    R = Ring("z0 z1 z2 z3")
    comps = [R("z0^2"), R("z0*z1"), R("z0*z2"), R("z1*z2-z0*z3")]
    text = dump_fixture(R, comps, seed=3, family="x", expect={"bidegree": (2, 2)})
    fx = load_fixture(text)
    assert fx.components == comps and fx.expect["bidegree"] == [2, 2]
