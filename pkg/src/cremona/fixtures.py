"""Plain-text map fixtures.

A fixture is a sequence of lines::

    # comments and blank lines are ignored
    ring z0 z1 z2 z3
    field GF(32003)
    seed 1
    family D
    <component 0>
    ...
    <component 3>
    [Delta]
    z0+3*z1
    ...
    [inverse]
    ring y0 y1 y2 y3
    <component 0>
    ...
    [expect]
    bidegree 4 4
    alpha 11

Header keys come first, then exactly four component lines.  Each
``[section]`` holds polynomials (optionally preceded by its own ``ring``
line), except ``[expect]`` which holds ``key value...`` lines.
"""

from dataclasses import dataclass, field

from .domains import QQ, field_from_string
from .errors import ParseError, StructuralError
from .polynomial import Ring, parse_polynomial
from .ratmap import RationalMap

HEADER_KEYS = ("ring", "field", "seed", "family")
EXPECT_INT_KEYS = ("alpha", "beta", "eta", "genus", "degC1", "degC2", "base_degree")


@dataclass
class Fixture:
    ring: Ring
    components: list
    seed: object = None
    family: str = ""
    sections: dict = field(default_factory=dict)       # name -> (ring, [polys])
    expect: dict = field(default_factory=dict)

    @property
    def map(self):
        return RationalMap(self.components, note=f"fixture {self.family} seed={self.seed}")

    def section_map(self, name):
        ring, polys = self.sections[name]
        return RationalMap(polys, note=f"{name} of fixture")


def field_text(F):
    return "QQ" if F == QQ else f"GF({F.p})"


def dump_fixture(ring, components, seed=None, family="", sections=None, expect=None):
    lines = [f"ring {' '.join(ring.names)}", f"field {field_text(ring.field)}"]
    if seed is not None:
        lines.append(f"seed {seed}")
    if family:
        lines.append(f"family {family}")
    lines.extend(str(f) for f in components)
    for name, (sring, polys) in (sections or {}).items():
        lines.append(f"[{name}]")
        if sring is not None and sring.names != ring.names:
            lines.append(f"ring {' '.join(sring.names)}")
        lines.extend(str(f) for f in polys)
    if expect:
        lines.append("[expect]")
        for key, value in expect.items():
            if value is None:
                value = "none"
            if isinstance(value, (list, tuple)):
                value = " ".join(str(v) for v in value)
            lines.append(f"{key} {value}")
    return "\n".join(lines) + "\n"


def load_fixture(text):
    header = {}
    components = []
    sections = {}
    expect = {}
    current = None
    names = None
    F = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        col = raw.index(line[0]) + 1
        if line.startswith("["):
            if not line.endswith("]") or len(line) < 3:
                raise ParseError("malformed section header", lineno, col)
            if len(components) != 4:
                raise ParseError(f"expected 4 components before sections, got {len(components)}",
                                 lineno, col)
            current = line[1:-1].strip()
            if current in sections or (current == "expect" and expect):
                raise ParseError(f"duplicate section [{current}]", lineno, col)
            if current != "expect":
                sections[current] = [ring, []]
            continue
        word = line.split(None, 1)[0]
        rest = line[len(word):].strip()
        if current == "expect":
            expect[word] = _expect_value(word, rest, lineno, col + len(word) + 1)
            continue
        if word in HEADER_KEYS and current is None and not components:
            if word in header:
                raise ParseError(f"duplicate header {word!r}", lineno, col)
            header[word] = rest
            if word == "ring":
                names = rest.split()
                if len(names) != 4:
                    raise ParseError("a map ring needs exactly 4 variables", lineno, col + 5)
            elif word == "field":
                try:
                    F = field_from_string(rest)
                except ValueError as exc:
                    raise ParseError(str(exc), lineno, col + 6) from None
            continue
        if word == "ring" and current is not None:
            sections[current][0] = Ring(rest.split(), ring.field)
            continue
        if current is None and not components:
            if names is None:
                raise ParseError("missing 'ring' header before the components", lineno, col)
            ring = Ring(names, F or field_from_string("32003"))
        target = ring if current is None else sections[current][0]
        try:
            poly = parse_polynomial(line, target)
        except ParseError as exc:
            raise ParseError(exc.message, lineno,
                             (exc.column or 1) + col - 1) from None
        if current is None:
            if len(components) == 4:
                raise ParseError("more than 4 component lines", lineno, col)
            components.append(poly)
        else:
            sections[current][1].append(poly)

    if len(components) != 4:
        raise ParseError(f"expected 4 components, got {len(components)}")
    seed = header.get("seed")
    if seed is not None and seed.lstrip("-").isdigit():
        seed = int(seed)
    return Fixture(ring, components, seed, header.get("family", ""),
                   {k: (v[0], v[1]) for k, v in sections.items()}, expect)


def _expect_value(key, rest, lineno, col):
    if key == "bidegree":
        parts = rest.replace(",", " ").replace("(", " ").replace(")", " ").split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ParseError("bidegree needs two integers", lineno, col)
        return [int(p) for p in parts]
    if rest.lower() == "none":
        return None
    if key in EXPECT_INT_KEYS:
        if not rest.lstrip("-").isdigit():
            raise ParseError(f"{key} needs an integer", lineno, col)
        return int(rest)
    return rest


def read_fixture(path):
    with open(path, encoding="utf-8") as fh:
        return load_fixture(fh.read())


def construction_fixture(c):
    """Fixture text for a :class:`~cremona.families.Construction`."""
    m = c.map
    sections = {}
    w = c.witnesses
    if c.inverse is not None:
        sections["inverse"] = (c.inverse.ring, list(c.inverse.components))
    for key in ("Delta", "Gamma", "delta", "conic"):
        if key in w:
            sections[key] = (m.ring, list(w[key].gens))
    if "lines" in w:
        for i, L in enumerate(w["lines"]):
            sections[f"l{i}"] = (m.ring, list(L.gens))
    if not isinstance(c.seed, int) and c.seed is not None:
        raise StructuralError("seed must be an integer")
    return dump_fixture(m.ring, m.components, c.seed, c.family, sections, c.expected)
