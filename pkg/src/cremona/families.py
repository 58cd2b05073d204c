"""Constructors for the quarto-quartic families and the Loria map, plus parameter counts."""

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd, lcm

from .domains import QQ, PrimeField
from .errors import CertificateError, StructuralError
from .ideal import (Ideal, graded_piece, ideal_intersection, irrelevant_ideal,
                    saturation)
from .linalg import nullspace, rank
from .polynomial import PolyMatrix, Ring, signed_minors
from .ratmap import RationalMap, base_ideal, secant_length, sing_scheme

RETRIES = 5
Z_NAMES = "z0 z1 z2 z3"
Y_NAMES = "y0 y1 y2 y3"


def z_ring(field=None):
    return Ring(Z_NAMES, field or PrimeField())


def y_ring(field=None):
    return Ring(Y_NAMES, field or PrimeField())


@dataclass
class Construction:
    """A constructed map with its witnesses and the profile it is expected to have."""

    family: str
    map: RationalMap
    seed: object = None
    inverse: RationalMap = None
    witnesses: dict = field(default_factory=dict)
    expected: dict = field(default_factory=dict)
    params: object = None


def _retrying(build, seed, what):
    last = None
    for k in range(RETRIES):
        try:
            return build(random.Random(_mix(seed, k)))
        except CertificateError as exc:
            last = exc
    raise CertificateError(last.condition if last else what,
                           f"still failing after {RETRIES} draws")


def _mix(seed, k):
    return (seed or 0) * 7368787 + k * 2654435761 + 1


def _linear(ring, coeffs, variables=None):
    gens = ring.gens() if variables is None else [ring.gen(v) for v in variables]
    total = ring.zero()
    for c, g in zip(coeffs, gens):
        if c:
            total = total + g.scale(c)
    return total


def point_ideal(ring, pt):
    """Ideal of the point with coordinates ``pt`` (2x2 minors of ``(x ; pt)``)."""
    x = ring.gens()
    k = max(i for i, c in enumerate(pt) if c)
    forms = [x[i].scale(pt[k]) - x[k].scale(pt[i]) for i in range(ring.nvars) if i != k]
    return Ideal(forms, ring)


# -- de Jonquieres -------------------------------------------------------------
@dataclass
class JonquieresParams:
    d: int
    P_lo: object      # P_{d-1}
    P_hi: object      # P_d
    Q_lo: object      # Q_{d-2}
    Q_hi: object      # Q_{d-1}


def random_jonquieres_params(d, rng, ring):
    base = [0, 1, 2]
    return JonquieresParams(
        d,
        ring.random_form(d - 1, rng, base), ring.random_form(d, rng, base),
        ring.random_form(d - 2, rng, base), ring.random_form(d - 1, rng, base))


def make_jonquieres(d=4, seed=1, params=None, field=None):
    """Monoidal map ``(z0 S, z1 S, z2 S, T)`` with ``S = z3 Q_{d-2} + Q_{d-1}``, ``T = z3 P_{d-1} + P_d``."""
    if d < 2:
        raise StructuralError("de Jonquieres maps need d >= 2")
    ring = z_ring(field) if params is None else params.P_hi.ring

    def build(rng):
        prm = params or random_jonquieres_params(d, rng, ring)
        z = ring.gens()
        S = z[3] * prm.Q_lo + prm.Q_hi
        T = z[3] * prm.P_lo + prm.P_hi
        K = prm.P_lo * prm.Q_hi - prm.P_hi * prm.Q_lo
        if K.is_zero():
            raise CertificateError("P_{d-1} Q_{d-1} != P_d Q_{d-2}")
        h = saturation(Ideal([S, T], ring), irrelevant_ideal(ring)).hilbert()
        if h.proj_dim != 1 or h.degree != d * (d - 1):
            raise CertificateError("gcd(S_{d-1}, S_d) = 1")
        m = RationalMap([z[0] * S, z[1] * S, z[2] * S, T], note=f"J d={d} seed={seed}")
        inv = jonquieres_inverse(prm)
        return Construction("J", m, seed, inverse=inv, params=prm,
                            witnesses={"S_lo": S, "S_hi": T},
                            expected=expected_row("J") if d == 4 else {})

    if params is not None:
        return build(None)
    return _retrying(build, seed, "jonquieres")


def jonquieres_inverse(prm):
    """``(y0 S', y1 S', y2 S', T')`` with ``S' = P_{d-1} - y3 Q_{d-2}``, ``T' = y3 Q_{d-1} - P_d``."""
    ring = prm.P_hi.ring
    yr = Ring(Y_NAMES, ring.field)
    mapping = dict(zip(ring.names, yr.names))

    def mv(f):
        return f.to_ring(yr, mapping)

    y = yr.gens()
    S = mv(prm.P_lo) - y[3] * mv(prm.Q_lo)
    T = y[3] * mv(prm.Q_hi) - mv(prm.P_hi)
    return RationalMap([y[0] * S, y[1] * S, y[2] * S, T], note="J inverse")


# -- ruled ------------------------------------------------------------------
@dataclass
class RuledParams:
    d: int
    delta: Ideal
    lines: list
    points: list


def make_ruled(d=4, seed=1, field=None):
    """Degree-``d`` piece of ``I_delta^(d-1)`` meet the lines ``Delta_j`` and points ``p_j``."""
    if d < 2:
        raise StructuralError("ruled maps need d >= 2")
    ring = z_ring(field)
    F = ring.field
    z = ring.gens()

    def build(rng):
        delta = Ideal([z[0], z[1]], ring)
        lines = []
        for _ in range(d - 1):
            l1 = _linear(ring, [F.random_nonzero(rng), F.random_nonzero(rng)], [0, 1])
            l2 = _linear(ring, [F.random(rng) for _ in range(4)])
            lines.append(Ideal([l1, l2], ring))
        points = [[F.random_nonzero(rng) for _ in range(4)] for _ in range(d - 1)]
        for L in lines:
            if L.hilbert().proj_dim != 1 or secant_length(L, delta) != 1:
                raise CertificateError("Delta_j meets delta in length one")
        for i in range(len(lines)):
            for j in range(i + 1, len(lines)):
                if secant_length(lines[i], lines[j]) != 0:
                    raise CertificateError("Delta_j pairwise disjoint")
        I = delta.power(d - 1)
        for L in lines:
            I = ideal_intersection(I, L)
        for pt in points:
            if any(_on(L, pt) for L in lines + [delta]):
                raise CertificateError("points off the lines")
            I = ideal_intersection(I, point_ideal(ring, pt))
        piece = graded_piece(I, d)
        if len(piece) != 4:
            raise CertificateError("dim I_d == 4", f"got {len(piece)}")
        m = RationalMap(piece, note=f"R d={d} seed={seed}")
        prm = RuledParams(d, delta, lines, points)
        return Construction("R", m, seed, params=prm,
                            witnesses={"delta": delta, "ideal": I},
                            expected=dict(expected_row("R") if d == 4 else {},
                                          base_degree=(d + 2) * (d - 1) // 2))

    return _retrying(build, seed, "ruled")


def _on(ideal, pt):
    return all(g.evaluate(pt) == 0 for g in ideal.gens)


# -- determinantal -----------------------------------------------------------
B_MATRIX = [[0, -1], [1, 0]]


@dataclass
class DetParams:
    N0: list
    N1: list
    M: list
    U0: list
    U1: list
    B: list = field(default_factory=lambda: [r[:] for r in B_MATRIX])


def explicit_det_params():
    """The fixed example: N0 = N1, M = identity, U0 and U1 cyclic shifts."""
    N = [[1, 0], [0, 1], [0, 0], [0, 0]]
    U0 = [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0]]
    U1 = [[0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]]
    ident = [[int(i == j) for j in range(4)] for i in range(4)]
    return DetParams([r[:] for r in N], [r[:] for r in N], ident, U0, U1)


def random_det_params(F, rng):
    def mat(r, c):
        return [[F.random(rng) for _ in range(c)] for _ in range(r)]

    return DetParams(mat(4, 2), mat(4, 2), mat(4, 4), mat(4, 4), mat(4, 4))


def _apply(ring, mat, vec):
    out = []
    for row in mat:
        acc = ring.zero()
        for c, v in zip(row, vec):
            if c:
                acc = acc + v.scale(c)
        out.append(acc)
    return out


def _t(mat):
    return [list(r) for r in zip(*mat)]


def det_matrix(ring, prm, primed=False):
    """The 4x3 matrix ``(g0 g1 g2)`` (or its primed counterpart in the target variables)."""
    x = ring.gens()
    if not primed:
        lam = _apply(ring, prm.B, _apply(ring, _t(prm.N0), x))
        g0 = _apply(ring, prm.N1, lam)
        g1 = _apply(ring, prm.M, x)
        U0x = _apply(ring, prm.U0, x)
        U1x = _apply(ring, prm.U1, x)
        g2 = [lam[0] * a + lam[1] * b for a, b in zip(U0x, U1x)]
    else:
        lam = _apply(ring, prm.B, _apply(ring, _t(prm.N1), x))
        g0 = [-v for v in _apply(ring, prm.N0, lam)]
        g1 = _apply(ring, _t(prm.M), x)
        U0x = _apply(ring, _t(prm.U0), x)
        U1x = _apply(ring, _t(prm.U1), x)
        g2 = [lam[0] * a + lam[1] * b for a, b in zip(U0x, U1x)]
    return PolyMatrix([[g0[i], g1[i], g2[i]] for i in range(4)], ring)


def make_determinantal(params=None, seed=1, field=None):
    """Signed maximal minors of ``G``, its primed inverse, the line Delta and the curve Gamma."""
    F = field or PrimeField()
    ring = z_ring(F)
    yr = y_ring(F)

    def build(rng):
        prm = params or random_det_params(F, rng)
        p = F.p
        if rank(prm.N0, p) != 2 or rank(prm.N1, p) != 2:
            raise CertificateError("N0, N1 of rank 2")
        if rank([sum(prm.U0, []), sum(prm.U1, [])], p) != 2:
            raise CertificateError("U0, U1 independent")
        G = det_matrix(ring, prm)
        tau = RationalMap(signed_minors(G), note=f"D seed={seed}")
        Gp = det_matrix(yr, prm, primed=True)
        taup = RationalMap(signed_minors(Gp), note=f"D inverse seed={seed}")
        base = base_ideal(tau)
        h = base.hilbert()
        if h.proj_dim != 1 or h.degree != 11:
            raise CertificateError("base scheme of degree 11 and codimension 2",
                                   f"got dim {h.proj_dim}, degree {h.degree}")
        Delta = extract_line(tau)
        if Delta is None:
            Delta = Ideal(_apply(ring, _t(prm.N0), ring.gens()), ring)
        Gamma = saturation(base, Delta)
        return Construction("D", tau, seed, inverse=taup, params=prm,
                            witnesses={"G": G, "Delta": Delta, "Gamma": Gamma, "Gprime": Gp},
                            expected=expected_row("D"))

    if params is not None:
        return build(None)
    return _retrying(build, seed, "determinantal")


def extract_line(m):
    """The line of the singular scheme, when its degree-1 forms cut out exactly a line."""
    J, beta, _ = sing_scheme(m)
    if beta != 1:
        return None
    lin = graded_piece(J, 1)
    if len(lin) != 2:
        return None
    return Ideal(lin, m.ring)


def explicit_example():
    """The fixed rational example of the determinantal construction."""
    return make_determinantal(explicit_det_params(), seed=None, field=QQ)


# -- conic -------------------------------------------------------------------
@dataclass
class ConicParams:
    Q1: object
    Q2: object
    f: object
    p1: list


def make_conic(seed=1, field=None):
    """Degree-4 piece of ``(f^2 Q2, Q1^2, f Q1 z0, f Q1 z1, f Q1 z2)`` through a point ``p1``."""
    ring = z_ring(field)
    F = ring.field
    z = ring.gens()

    def build(rng):
        # I_p = (z0, z1, z2): Q1 has no z3^2 term, Q2 lives in z0, z1, z2
        Q1 = z[3] * ring.random_form(1, rng, [0, 1, 2]) + ring.random_form(2, rng, [0, 1, 2])
        Q2 = ring.random_form(2, rng, [0, 1, 2])
        f = ring.random_form(1, rng)
        p1 = [F.random_nonzero(rng) for _ in range(4)]
        if Q1.is_zero() or Q2.is_zero() or f.is_zero():
            raise CertificateError("nonzero Q1, Q2, f")
        fQ1 = f * Q1
        G = Ideal([f * f * Q2, Q1 * Q1, fQ1 * z[0], fQ1 * z[1], fQ1 * z[2]], ring)
        I = ideal_intersection(G, point_ideal(ring, p1))
        piece = graded_piece(I, 4)
        if len(piece) != 4:
            raise CertificateError("dim I_4 == 4", f"got {len(piece)}")
        m = RationalMap(piece, note=f"C seed={seed}")
        return Construction("C", m, seed, params=ConicParams(Q1, Q2, f, p1),
                            witnesses={"conic": Ideal([f, Q1], ring), "G": G, "ideal": I},
                            expected=expected_row("C"))

    return _retrying(build, seed, "conic")


# -- Loria ---------------------------------------------------------------------
LORIA_SEED = 1890


def loria_points(seed=LORIA_SEED):
    rng = random.Random(seed)
    pts = []
    while len(pts) < 3:
        pt = [Fraction(rng.randint(1, 9)) for _ in range(3)] + [Fraction(0)]
        if pt not in pts:
            pts.append(pt)
    return pts


def quadric_through(ring, lines, points):
    """The unique quadric (up to scalar) containing the given lines and points.

    Each line is a pair of points; a quadric contains a line when it vanishes
    at three of its points.
    """
    monos = ring.monomials_of_degree(2)
    rows = []

    def cond(pt):
        row = []
        for e in monos:
            v = Fraction(1)
            for x, k in zip(pt, e):
                v *= Fraction(x) ** k
            row.append(v)
        return row

    for a, b in lines:
        for s, t in ((1, 0), (0, 1), (1, 1)):
            rows.append(cond([s * x + t * y for x, y in zip(a, b)]))
    for pt in points:
        rows.append(cond(pt))
    p = ring.field.p
    if p:
        rows = [[ring.field(x) for x in r] for r in rows]
    ker = nullspace(rows, len(monos), p)
    if len(ker) != 1:
        raise CertificateError("quadric cone determined by the incidences", f"{len(ker)} solutions")
    coeffs = ker[0]
    if not p:
        # primitive integer representative of the same cone
        den = lcm(*(Fraction(c).denominator for c in coeffs))
        ints = [int(Fraction(c) * den) for c in coeffs]
        g = gcd(*ints)
        coeffs = [Fraction(c // g) for c in ints]
    return ring.from_dict(dict(zip(monos, coeffs)))


def make_loria(field=None, seed=LORIA_SEED):
    """``(q1 q2, q0 q2, q0 q1, z0 z1 z2 z3)``; ``q_j`` contains the three coordinate lines and two of three points."""
    ring = z_ring(field or QQ)
    O = [[ring.field(x) for x in pt] for pt in loria_points(seed)]
    e = [[int(i == j) for j in range(4)] for i in range(4)]
    # l0 = (z1, z2), l1 = (z2, z0), l2 = (z0, z1) all pass through (0:0:0:1)
    lines = [(e[0], e[3]), (e[1], e[3]), (e[2], e[3])]
    q = []
    for j in range(3):
        q.append(quadric_through(ring, lines, [O[k] for k in range(3) if k != j]))
    z = ring.gens()
    comps = [q[1] * q[2], q[0] * q[2], q[0] * q[1], z[0] * z[1] * z[2] * z[3]]
    m = RationalMap(comps, note="Loria")
    line_ideals = [Ideal([z[1], z[2]], ring), Ideal([z[2], z[0]], ring), Ideal([z[0], z[1]], ring)]
    return Construction("loria", m, seed, witnesses={"lines": line_ideals, "cones": q,
                                                      "points": O},
                        expected={"bidegree": [4, 4]})


# -- expected rows and parameter counts ----------------------------------------
EXPECTED = {
    "R": {"bidegree": [4, 4], "alpha": 9, "beta": 1, "eta": 3, "genus": 0},
    "C": {"bidegree": [4, 4], "alpha": 10, "beta": 1, "eta": 2, "genus": 1},
    "D": {"bidegree": [4, 4], "alpha": 11, "beta": 1, "eta": 1, "genus": 2},
    "J": {"bidegree": [4, 4], "alpha": 12, "beta": 0, "eta": None, "genus": 3},
}


def expected_row(family):
    return dict(EXPECTED[family])


def dimension_formula(family, d=4):
    """``(dimension, identity_holds)`` for the parameter count of a family."""
    family = family.upper()
    if family == "J":
        if d < 2:
            raise StructuralError("J needs d >= 2")
        closed = 2 * d * d + 2 * d + 14
        count = comb(d, d - 2) + 2 * comb(d + 1, d - 1) + comb(d + 2, d) + 13
        return closed, count == closed
    if family == "R":
        if d < 2:
            raise StructuralError("R needs d >= 2")
        closed = 6 * d + 13
        return closed, 4 + 3 * (d - 1) + 3 * (d - 1) + 15 == closed
    if family == "D":
        if d != 4:
            raise StructuralError("D is defined for d = 4 only")
        return 46, 7 + 7 + 15 + 21 - 4 == 46
    if family == "C":
        if d != 4:
            raise StructuralError("C is defined for d = 4 only")
        return 37, 9 + 7 + 3 + 3 + 15 == 37
    raise StructuralError(f"unknown family {family!r}")


def construct(family, seed=1, d=4, field=None):
    family = family.upper() if family.lower() != "loria" else "loria"
    if family == "J":
        return make_jonquieres(d, seed, field=field)
    if family == "R":
        return make_ruled(d, seed, field=field)
    if family == "D":
        if d != 4:
            raise StructuralError("D is defined for d = 4 only")
        return make_determinantal(seed=seed, field=field)
    if family == "C":
        if d != 4:
            raise StructuralError("C is defined for d = 4 only")
        return make_conic(seed, field=field)
    if family == "loria":
        return make_loria()
    raise StructuralError(f"unknown family {family!r}")
