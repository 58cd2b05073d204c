"""Rational maps P3 --> P3 and the invariants that tell the quarto-quartic families apart."""

import logging
import random
from dataclasses import dataclass, field

from .errors import (Inconclusive, NotAnInverse, StructuralError,
                     UnclassifiedSingularity)
from .ideal import (Ideal, count_distinct_points, elimination, exact_quotient,
                    generic_member, irrelevant_ideal, saturate_by_element,
                    saturation)
from .polynomial import PolyMatrix, Ring, determinant

log = logging.getLogger(__name__)

RETRIES = 5


class RationalMap:
    """Four forms of one degree, read as ``(x0:...:x3) --> (f0:...:f3)``."""

    def __init__(self, components, note=""):
        comps = list(components)
        if len(comps) != 4:
            raise StructuralError(f"a map of P3 needs 4 components, got {len(comps)}")
        ring = comps[0].ring
        if ring.nvars != 4:
            raise StructuralError(f"components must live in a ring with 4 variables, not {ring}")
        if any(f.ring != ring for f in comps):
            raise StructuralError("components live in different rings")
        if all(f.is_zero() for f in comps):
            raise StructuralError("all components are zero")
        degs = {f.degree() for f in comps if f}
        if len(degs) != 1 or not all(f.is_homogeneous() for f in comps):
            raise StructuralError("components must be homogeneous of one common degree")
        self.components = tuple(comps)
        self.ring = ring
        self.degree = degs.pop()
        self.note = note
        self._base = None
        self._sing = None
        self._graph = None

    @property
    def field(self):
        return self.ring.field

    def __call__(self, point):
        return [f.evaluate(point) for f in self.components]

    def __repr__(self):
        return f"RationalMap(degree={self.degree}, ring={self.ring})"

    def member(self, coeffs):
        """The form ``sum c_i f_i``."""
        total = self.ring.zero()
        for c, f in zip(coeffs, self.components):
            if c:
                total = total + f.scale(c)
        return total

    def random_member(self, rng):
        field = self.field
        return self.member([field.random_nonzero(rng) for _ in range(4)])

    def certify_codimension(self):
        """The base scheme must have codimension at least 2 (no common factor)."""
        h = base_ideal(self).hilbert()
        if h.proj_dim > 1:
            raise StructuralError("components share a common factor (base locus is a surface)")
        return h


def identity_map(ring):
    return RationalMap(ring.gens(), note="identity")


# -- base and singular schemes ------------------------------------------------
def base_ideal(m):
    """Saturation of ``(f0..f3)`` by the irrelevant ideal."""
    if m._base is None:
        I = Ideal(m.components, m.ring)
        m._base = saturation(I, irrelevant_ideal(m.ring))
    return m._base


def sing_scheme(m):
    """``(ideal, beta, eta)`` for the scheme cut out by all first partials of all components."""
    if m._sing is None:
        parts = [f.derivative(i) for f in m.components for i in range(m.ring.nvars)]
        J = saturation(Ideal(parts, m.ring), irrelevant_ideal(m.ring))
        h = J.hilbert()
        beta = h.proj_dim
        eta = h.degree if beta == 1 else None
        m._sing = (J, beta, eta)
    return m._sing


# -- birationality ------------------------------------------------------------
@dataclass
class Certificate:
    value: bool
    fiber_degree: int
    fiber_dim: int
    attempts: int
    detail: str = ""


def _members(m, rng, k):
    field = m.field
    return [m.member([field.random(rng) for _ in range(4)]) for _ in range(k)]


def is_birational(m, seed=1):
    """Pull back a random point of the target and strip the base locus.

    The fibre ideal ``(g1, g2, g3) : g4^oo`` uses four random members ``g_i``;
    a generic fourth member vanishes on every base component and on no point
    of the generic fibre, so this is the fibre away from the base scheme.
    """
    rng = random.Random(seed)
    for attempt in range(1, RETRIES + 1):
        g = _members(m, rng, 4)
        if any(x.is_zero() for x in g):
            continue
        fiber = saturate_by_element(Ideal(g[:3], m.ring), g[3])
        h = fiber.hilbert()
        if h.degree == 0 or h.is_empty:
            return Certificate(False, 0, -1, attempt, "generic fibre is empty: map is not dominant")
        if h.proj_dim != 0:
            log.debug("fibre of dimension %d, redrawing", h.proj_dim)
            continue
        return Certificate(h.degree == 1, h.degree, 0, attempt,
                           "single reduced point" if h.degree == 1 else f"{h.degree} points")
    raise Inconclusive(f"{RETRIES} degenerate draws in a row while testing birationality")


def inverse_degree(m, seed=1):
    """``(deg C1, deg C2)`` for the preimage of a random line."""
    rng = random.Random(seed + 7919)
    d = m.degree
    for _ in range(RETRIES):
        g = _members(m, rng, 3)
        if any(x.is_zero() for x in g):
            continue
        curve = saturate_by_element(Ideal(g[:2], m.ring), g[2])
        h = curve.hilbert()
        if h.proj_dim != 1:
            continue
        return h.degree, d * d - h.degree
    raise Inconclusive(f"{RETRIES} degenerate lines while computing the inverse degree")


def compose_check(m, inv):
    """``c`` with ``inv(m(x)) == c * x``; raises :class:`NotAnInverse` otherwise."""
    if inv.ring.nvars != 4:
        raise StructuralError("inverse must have 4 variables")
    comps = [f.substitute(list(m.components)) for f in inv.components]
    z = m.ring.gens()
    c, ok = exact_quotient(comps[0], z[0])
    if not ok:
        raise NotAnInverse("first component is not divisible by the first coordinate")
    for i in range(1, 4):
        ci, ok = exact_quotient(comps[i], z[i])
        if not ok or ci != c:
            raise NotAnInverse(f"component {i} is not c * x{i}")
    if c.is_zero():
        raise NotAnInverse("composition is identically zero")
    return c


def jacobian(m):
    rows = [[f.derivative(j) for j in range(4)] for f in m.components]
    return determinant(PolyMatrix(rows, m.ring))


def exact_divide(num, den):
    """Quotient ``q`` with ``num == q * den``, or ``None`` when the division is not exact."""
    q, ok = exact_quotient(num, den)
    return q if ok else None


# -- images -----------------------------------------------------------------
def graph_ring(m):
    names = [f"y{i}" for i in range(4)]
    if set(names) & set(m.ring.names):
        names = [f"w{i}" for i in range(4)]
    return m.ring.extend(names)


def graph_ideal(m, seed=1):
    """2x2 minors of ``(y ; f(x))`` saturated by a generic member of the base ideal."""
    if m._graph is None:
        big = graph_ring(m)
        Z = [big(f) for f in m.components]
        Y = [big.gen(4 + i) for i in range(4)]
        minors = [Y[i] * Z[j] - Y[j] * Z[i] for i in range(4) for j in range(i + 1, 4)]
        g = big(generic_member(base_ideal(m), random.Random(seed + 31)))
        m._graph = (big, saturate_by_element(Ideal(minors, big), g), g)
    return m._graph


@dataclass
class ImageData:
    ideal: Ideal
    dim: int
    degree: int
    linear_forms: list = field(default_factory=list)


def image_of_hypersurface(m, S, seed=1):
    """Closure of the image of ``V(S)`` minus the base locus, as an ideal in the target variables."""
    if not S.is_homogeneous():
        raise StructuralError("S must be homogeneous")
    big, graph, g = graph_ideal(m, seed)
    # strict transform: the graph also carries fibres of positive dimension
    # over the base curve, and those sit inside V(S) whenever S contains it
    strict = saturate_by_element(graph + big(S), g)
    E = elimination(strict, list(range(4)))
    target = Ring(big.names[4:], m.ring.field)
    img = Ideal([h.to_ring(target) for h in E.gens], target)
    img = saturation(img, irrelevant_ideal(target))
    h = img.hilbert()
    lin = [f for f in img.groebner_basis() if f.degree() == 1]
    return ImageData(img, h.proj_dim, h.degree, lin)


# -- genus ------------------------------------------------------------------
def plane_section(f, rng):
    """Restrict ``f`` to a random plane ``x3 = sum a_i x_i``, as a form in three variables."""
    ring = f.ring
    plane = Ring(ring.names[:3], ring.field)
    x = plane.gens()
    field = ring.field
    last = plane.zero()
    for v in x:
        last = last + v.scale(field.random(rng))
    return f.substitute(x + [last])


def _random_coordinates(ring, rng):
    from .linalg import rank

    field = ring.field
    n = ring.nvars
    while True:
        mat = [[field.random(rng) for _ in range(n)] for _ in range(n)]
        if rank(mat, field.p) == n:
            break
    x = ring.gens()
    images = []
    for row in mat:
        f = ring.zero()
        for c, v in zip(row, x):
            if c:
                f = f + v.scale(c)
        images.append(f)
    return images


def _single_point(J, rng):
    """Linear generators of the reduced point supporting ``J`` (coordinates already generic)."""
    from .ideal import _upoly_gcd, _upoly_trim

    ring = J.ring
    p = ring.field.p
    n = ring.nvars
    last = n - 1
    forms = []
    for i in range(n - 1):
        others = [j for j in range(n) if j not in (i, last)]
        E = elimination(J, others)
        u = []
        for h in E.gens:
            poly = [0] * (h.degree() + 1)
            for exps, c in h.terms:
                poly[exps[i]] = (poly[exps[i]] + c) % p if p else poly[exps[i]] + c
            poly = _upoly_trim(poly)
            u = poly if not u else _upoly_gcd(u, poly, p)
        if len(u) < 2:
            return None
        deriv = [(k * c) % p if p else k * c for k, c in enumerate(u)][1:]
        common = _upoly_gcd(u, deriv, p)
        red = _upoly_divide(u, common, p)
        if len(red) != 2:
            return None
        # red[0] + red[1] * x_i with x_last = 1
        forms.append(ring.gen(i).scale(red[1]) + ring.gen(last).scale(red[0]))
    return Ideal(forms, ring)


def _upoly_divide(a, b, p):
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    inv = pow(b[-1], -1, p) if p else 1 / b[-1]
    for s in range(len(a) - len(b), -1, -1):
        c = a[s + len(b) - 1] * inv
        if p:
            c %= p
        out[s] = c
        for i, x in enumerate(b):
            a[s + i] -= c * x
            if p:
                a[s + i] %= p
    return out


@dataclass
class GenusResult:
    genus: int
    points: int
    length: int
    attempts: int
    profile: str


def classify_plane_quartic(q, rng):
    """Genus of an irreducible plane quartic from the shape of its singular scheme."""
    ring = q.ring
    q = q.substitute(_random_coordinates(ring, rng))
    J = Ideal([q] + q.gradient(), ring)
    J = saturation(J, irrelevant_ideal(ring))
    h = J.hilbert()
    if h.is_empty or h.degree == 0:
        return GenusResult(3, 0, 0, 1, "smooth")
    if h.proj_dim != 0:
        raise UnclassifiedSingularity(f"singular locus of dimension {h.proj_dim}")
    L = h.degree
    n = count_distinct_points(J, rng)
    if n == L <= 3:
        # Tjurina number 1 at every point: ordinary nodes
        return GenusResult(3 - n, n, L, 1, f"{n} node" + ("s" if n > 1 else ""))
    if (n, L) == (1, 4):
        pt = _single_point(J, rng)
        if pt is not None and pt.power(3).contains(q):
            return GenusResult(0, n, L, 1, "ordinary triple point")
    raise UnclassifiedSingularity(f"profile points={n}, length={L}")


def genus(m, seed=1):
    """Geometric genus of a generic plane section of a generic member (degree 4 only)."""
    if m.degree != 4:
        raise StructuralError("the genus table covers quartic maps only")
    rng = random.Random(seed * 1000003 + 17)
    last = None
    for attempt in range(1, RETRIES + 1):
        q = plane_section(m.random_member(rng), rng)
        if q.is_zero() or q.degree() != 4:
            continue
        try:
            res = classify_plane_quartic(q, rng)
        except UnclassifiedSingularity as exc:
            last = exc
            log.debug("unclassified draw: %s", exc)
            continue
        res.attempts = attempt
        return res
    raise UnclassifiedSingularity(f"unclassified singularity profile after {RETRIES} draws: {last}")


def secant_length(curve, line):
    """Length of the intersection scheme of a curve and a line."""
    hc, hl = curve.hilbert(), line.hilbert()
    if hc.proj_dim != 1 or hl.proj_dim != 1 or hl.degree != 1:
        raise StructuralError("secant_length needs a curve and a line")
    if line.contains(curve) or curve.contains(line):
        raise StructuralError("the line and the curve are not in general position (containment)")
    meet = saturation(curve + line, irrelevant_ideal(curve.ring))
    h = meet.hilbert()
    return 0 if h.is_empty else h.degree


# -- full analysis ----------------------------------------------------------
@dataclass
class MapAnalysis:
    degree: int
    bidegree: tuple
    alpha: int
    beta: int
    eta: object
    degC1: int
    degC2: int
    genus: object
    birational: bool
    base_poly: str
    jacobian_degree: int
    flags: dict = field(default_factory=dict)

    def row(self):
        return {"bidegree": list(self.bidegree), "alpha": self.alpha, "beta": self.beta,
                "eta": self.eta, "genus": self.genus}


def analyze(m, seed=1, with_genus=True):
    base = base_ideal(m)
    hb = base.hilbert()
    if hb.proj_dim > 1:
        raise StructuralError("base locus has codimension 1: components share a factor")
    alpha = hb.degree if hb.proj_dim == 1 else 0
    _, beta, eta = sing_scheme(m)
    cert = is_birational(m, seed)
    c1, c2 = inverse_degree(m, seed)
    jac = jacobian(m)
    jdeg = jac.degree() if jac else -1
    g = None
    flags = {
        "birational": cert.value,
        "liaison_sum": c1 + c2 == m.degree ** 2,
        "jacobian_degree": jac.is_zero() or jdeg == 4 * (m.degree - 1),
        "jacobian_nonzero_if_birational": (not cert.value) or not jac.is_zero(),
    }
    if with_genus and m.degree == 4 and cert.value:
        res = genus(m, seed)
        g = res.genus
    return MapAnalysis(
        degree=m.degree,
        bidegree=(m.degree, c1),
        alpha=alpha,
        beta=beta,
        eta=eta,
        degC1=c1,
        degC2=c2,
        genus=g,
        birational=cert.value,
        base_poly=hb.poly_string() if hb.proj_dim >= 0 else "0",
        jacobian_degree=jdeg,
        flags=flags,
    )
