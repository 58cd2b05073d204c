"""Ideals with cached Groebner bases, and the ideal algebra built on them."""

import logging
import random
import threading

from . import groebner as gb
from .errors import StructuralError
from .hilbert import hilbert_data
from .linalg import rref
from .monomials import EXP_BITS, MonomialOrder
from .polynomial import Polynomial

log = logging.getLogger(__name__)

_AUX = "_t"


class Ideal:
    """Homogeneous or inhomogeneous ideal of a :class:`~cremona.polynomial.Ring`.

    Reduced Groebner bases are memoized per monomial order.  The memo is
    guarded by a lock, so two threads asking for the same basis share one
    computation.
    """

    def __init__(self, gens, ring=None, budget=None):
        gens = list(gens)
        if ring is None:
            if not gens:
                raise StructuralError("an empty generator list needs an explicit ring")
            ring = gens[0].ring
        for g in gens:
            if not isinstance(g, Polynomial) or g.ring != ring:
                raise StructuralError(f"generator {g!r} is not in {ring}")
        self.ring = ring
        self.gens = tuple(g for g in gens if g)
        self.budget = gb.DEFAULT_BUDGET if budget is None else budget
        self._cache = {}
        self._hilbert = None
        self._lock = threading.Lock()

    # -- Groebner bases -----------------------------------------------------
    def _basis(self, order=None):
        order = order or self.ring.order
        with self._lock:
            basis = self._cache.get(order)
            if basis is None:
                p = self.ring.field.p
                basis = gb.buchberger([gb.to_internal(g, order) for g in self.gens],
                                      order, p, self.budget)
                self._cache[order] = basis
        return basis

    def groebner_basis(self, order=None):
        """Reduced Groebner basis (monic, increasing leading terms)."""
        return [gb.from_internal(d, self.ring) for d in self._basis(order)]

    def seed_basis(self, basis, order=None):
        """Install a known reduced Groebner basis (list of polynomials) in the cache."""
        order = order or self.ring.order
        with self._lock:
            self._cache[order] = [gb.to_internal(g, order) for g in basis]

    def leading_exponents(self, order=None):
        order = order or self.ring.order
        return [order.decode(max(d)) for d in self._basis(order)]

    def reduce(self, f, order=None):
        """Normal form of ``f`` with respect to the reduced basis."""
        order = order or self.ring.order
        red = gb.reducers_of(self._basis(order), order, self.ring.field.p)
        return gb.from_internal(gb.normal_form(gb.to_internal(f, order), red, order,
                                               self.ring.field.p), self.ring)

    def contains(self, f):
        if isinstance(f, Ideal):
            return all(self.contains(g) for g in f.gens)
        return self.reduce(f).is_zero()

    __contains__ = contains

    def is_unit(self):
        b = self._basis()
        return len(b) == 1 and max(b[0]) == 0

    def is_zero(self):
        return not self.gens

    def is_homogeneous(self):
        return all(g.is_homogeneous() for g in self.gens)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self._basis() == other._basis()

    def __hash__(self):
        return hash(self.ring)

    def __repr__(self):
        return f"Ideal({', '.join(str(g) for g in self.gens[:4])}{', ...' if len(self.gens) > 4 else ''})"

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, Polynomial):
            other = [other]
        if isinstance(other, Ideal):
            other = other.gens
        return Ideal(list(self.gens) + list(other), self.ring, self.budget)

    def __mul__(self, other):
        return Ideal([f * g for f in self.gens for g in other.gens], self.ring, self.budget)

    def power(self, k):
        out = Ideal([self.ring.one()], self.ring, self.budget)
        for _ in range(k):
            out = out * self
            out = Ideal(out.minimal_gens(), self.ring, self.budget)
        return out

    def minimal_gens(self):
        """Drop generators already in the span of the others (homogeneous, by degree)."""
        if not self.is_homogeneous():
            return list(self.gens)
        keep = []
        by_degree = {}
        for g in self.gens:
            by_degree.setdefault(g.degree(), []).append(g)
        for d in sorted(by_degree):
            lower = Ideal(keep, self.ring) if keep else None
            span = []
            for g in by_degree[d]:
                r = lower.reduce(g) if lower else g
                if r.is_zero():
                    continue
                cand = span + [g]
                if _rank([lower.reduce(h) if lower else h for h in cand]) > len(span):
                    span.append(g)
            keep.extend(span)
        return keep

    # -- Hilbert data ---------------------------------------------------------
    def hilbert(self):
        if self._hilbert is None:
            if not self.is_homogeneous():
                raise StructuralError("Hilbert data needs a homogeneous ideal")
            if not self.gens:
                lead = []
            else:
                lead = self.leading_exponents()
            self._hilbert = hilbert_data(lead, self.ring.nvars)
        return self._hilbert


def _rank(polys):
    if not polys:
        return 0
    keys = sorted({k for f in polys for k, _ in f.items()}, reverse=True)
    idx = {k: i for i, k in enumerate(keys)}
    rows = []
    for f in polys:
        r = [0] * len(keys)
        for k, c in f.items():
            r[idx[k]] = c
        rows.append(r)
    return len(rref(rows, polys[0].ring.field.p)[1])


def unit_ideal(ring):
    return Ideal([ring.one()], ring)


def irrelevant_ideal(ring, variables=None):
    idx = range(ring.nvars) if variables is None else [ring.index(v) for v in variables]
    return Ideal([ring.gen(i) for i in idx], ring)


# -- operations ---------------------------------------------------------------
def groebner_basis(I, order=None):
    return I.groebner_basis(order)


def ideal_membership(f, I):
    return I.contains(f)


def _check_same_ring(I, J):
    if I.ring != J.ring:
        raise StructuralError(f"ring mismatch: {I.ring} vs {J.ring}")


def elimination(I, eliminate):
    """Generators of ``I`` intersected with the subring free of ``eliminate``."""
    ring = I.ring
    elim = sorted({ring.index(v) for v in eliminate})
    if not elim:
        return I
    order = MonomialOrder.block(ring.nvars, elim)
    keep = [g for g in I.groebner_basis(order) if not set(g.variables()).intersection(elim)]
    return Ideal(keep, ring, I.budget)


def ideal_intersection(I, J):
    """``I`` intersected with ``J`` via elimination of ``t`` from ``tI + (1-t)J``."""
    _check_same_ring(I, J)
    if I.is_zero() or J.is_zero():
        return Ideal([], I.ring)
    if J.is_unit():
        return I
    if I.is_unit():
        return J
    ring = I.ring
    big = ring.extend([_AUX])
    t = big.gen(_AUX)
    gens = [t * big(g) for g in I.gens] + [(big.one() - t) * big(g) for g in J.gens]
    E = elimination(Ideal(gens, big, I.budget), [_AUX])
    return Ideal([g.to_ring(ring) for g in E.gens], ring, I.budget)


def _linear_change(l):
    """Forward/backward images moving the linear form ``l`` onto one coordinate.

    Returns ``(k, forward, backward)``: substituting ``forward`` turns ``l`` into
    the variable ``z_k``; substituting ``backward`` undoes it.
    """
    ring = l.ring
    coeffs = [l.coefficient(tuple(int(i == j) for j in range(ring.nvars)))
              for i in range(ring.nvars)]
    k = max(i for i, c in enumerate(coeffs) if c)
    inv = ring.field.inv(coeffs[k])
    z = ring.gens()
    fwd = list(z)
    rest = ring.zero()
    for i, c in enumerate(coeffs):
        if i != k and c:
            rest = rest + z[i].scale(c)
    fwd[k] = (z[k] - rest).scale(inv)
    back = list(z)
    back[k] = l
    return k, fwd, back


def _is_linear_form(f):
    return f.is_homogeneous() and f.degree() == 1


def _divide_linear(I, l, full):
    """``I : l`` (``full=False``) or ``I : l^oo`` (``full=True``) for a linear form ``l``.

    Bayer's observation: in grevlex with ``l`` as the smallest variable, the
    quotient is obtained by dividing basis elements by powers of ``l``.
    """
    if not I.is_homogeneous():
        raise StructuralError("linear quotients need a homogeneous ideal")
    ring = I.ring
    k, fwd, back = _linear_change(l)
    moved = Ideal([g.substitute(fwd) for g in I.gens], ring, I.budget)
    perm = [i for i in range(ring.nvars) if i != k] + [k]
    order = MonomialOrder.grevlex(ring.nvars, perm)
    basis = moved.groebner_basis(order)
    shift = EXP_BITS * k
    out = []
    for g in basis:
        e = min((key >> shift) & ((1 << EXP_BITS) - 1) for key, _ in g.items())
        if not full:
            e = min(e, 1)
        if e:
            unit = ring.order.units[k] * e
            g = Polynomial(ring, {key - unit: c for key, c in g.items()})
        out.append(g.substitute(back))
    return Ideal(out, ring, I.budget)


def ideal_quotient(I, J):
    """``I : J``, as the intersection of ``I : g`` over the generators of ``J``."""
    _check_same_ring(I, J)
    if J.is_zero():
        return unit_ideal(I.ring)
    result = None
    for g in J.gens:
        q = quotient_by_element(I, g)
        result = q if result is None else ideal_intersection(result, q)
    return result


def quotient_by_element(I, g):
    """``I : g``, computed as ``(I intersected with (g))`` divided by ``g``."""
    if g.is_constant():
        return I
    if _is_linear_form(g) and I.is_homogeneous():
        return _divide_linear(I, g, full=False)
    inter = ideal_intersection(I, Ideal([g], I.ring))
    out = []
    for h in inter.gens:
        q, ok = exact_quotient(h, g)
        if not ok:
            raise ArithmeticError("intersection element not divisible by g")
        out.append(q)
    return Ideal(out, I.ring, I.budget)


def saturate_by_element(I, g):
    """``I : g^oo``.  Linear ``g`` uses the grevlex trick, otherwise ``I + (t g - 1)`` eliminating ``t``."""
    if g.is_constant():
        return I
    if _is_linear_form(g) and I.is_homogeneous():
        return _divide_linear(I, g, full=True)
    ring = I.ring
    big = ring.extend([_AUX])
    t = big.gen(_AUX)
    gens = [big(h) for h in I.gens] + [t * big(g) - big.one()]
    E = elimination(Ideal(gens, big, I.budget), [_AUX])
    return Ideal([h.to_ring(ring) for h in E.gens], ring, I.budget)


def generic_member(J, rng):
    """Random homogeneous element of ``J`` in the top generator degree."""
    ring = J.ring
    top = max(g.degree() for g in J.gens)
    total = ring.zero()
    for g in J.gens:
        c = ring.random_form(top - g.degree(), rng) if g.degree() < top else \
            ring.constant(ring.field.random_nonzero(rng))
        total = total + c * g
    return total


def saturation(I, J, rng=None):
    """``I : J^oo``.

    When ``J`` is generated by linear forms the answer is ``I : l^oo`` for a
    random linear combination ``l`` of them (exact away from a proper closed
    set of choices).  Otherwise iterate ``I : J`` until the basis stabilizes.
    """
    _check_same_ring(I, J)
    if J.is_zero():
        return I
    if J.is_unit():
        return I
    if I.is_homogeneous() and all(_is_linear_form(g) for g in J.gens):
        if len(J.gens) == 1:
            return _divide_linear(I, J.gens[0], full=True)
        rng = rng or random.Random(0x5A7)
        ring = I.ring
        field = ring.field
        l = ring.zero()
        for g in J.gens:
            l = l + g.scale(field.random_nonzero(rng))
        if l.is_zero():
            l = J.gens[0]
        return _divide_linear(I, l, full=True)
    if len(J.gens) == 1:
        return saturate_by_element(I, J.gens[0])
    current = I
    while True:
        nxt = ideal_quotient(current, J)
        if nxt == current:
            return current
        current = nxt


def exact_quotient(num, den):
    """``(q, True)`` with ``num == q * den``, or ``(None, False)``.

    Division by repeated cancellation of grevlex leading terms.
    """
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    ring = num.ring
    p = ring.field.p
    lead = max(den._d)
    lc = den._d[lead]
    inv = pow(lc, -1, p) if p else 1 / lc
    order = ring.order
    tail = [(k, c) for k, c in den.items() if k != lead]
    rem = dict(num.items())
    quo = {}
    while rem:
        m = max(rem)
        if not order.divides(lead, m):
            return None, False
        c = rem.pop(m) * inv
        if p:
            c %= p
        q = m - lead
        quo[q] = c
        for k, a in tail:
            k += q
            v = rem.get(k, 0) - c * a
            if p:
                v %= p
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    return Polynomial(ring, quo), True


def graded_piece(I, d):
    """Basis (reduced row echelon form) of the degree-``d`` part of a homogeneous ideal."""
    if not I.is_homogeneous():
        raise StructuralError("graded pieces need a homogeneous ideal")
    ring = I.ring
    rows_polys = []
    for g in I.gens:
        e = d - g.degree()
        if e < 0:
            continue
        for mono in ring.monomials_of_degree(e):
            rows_polys.append(g * ring.monomial(mono))
    if not rows_polys:
        return []
    cols = [ring.order.encode(m) for m in ring.monomials_of_degree(d)]
    idx = {k: i for i, k in enumerate(cols)}
    rows = []
    for f in rows_polys:
        r = [0] * len(cols)
        for k, c in f.items():
            r[idx[k]] = c
        rows.append(r)
    red, _ = rref(rows, ring.field.p)
    return [Polynomial(ring, {cols[i]: c for i, c in enumerate(r) if c}) for r in red]


def hilbert(I):
    return I.hilbert()


# -- point counting -----------------------------------------------------------
def _upoly_trim(a):
    while a and not a[-1]:
        a.pop()
    return a


def _upoly_mod(a, b, p):
    a = list(a)
    inv = pow(b[-1], -1, p) if p else 1 / b[-1]
    while len(a) >= len(b) and a:
        c = a[-1] * inv
        s = len(a) - len(b)
        for i, x in enumerate(b):
            a[s + i] -= c * x
            if p:
                a[s + i] %= p
        _upoly_trim(a)
    return a


def _upoly_gcd(a, b, p):
    a, b = _upoly_trim(list(a)), _upoly_trim(list(b))
    while b:
        a, b = b, _upoly_mod(a, b, p)
    return a


def _distinct_on_projection(I, rng):
    ring = I.ring
    n = ring.nvars
    field = ring.field
    p = field.p
    z = ring.gens()
    while True:
        mat = [[field.random(rng) for _ in range(n)] for _ in range(n)]
        if _rank_matrix(mat, p) == n:
            break
    images = []
    for row in mat:
        f = ring.zero()
        for c, v in zip(row, z):
            if c:
                f = f + v.scale(c)
        images.append(f)
    moved = Ideal([g.substitute(images) for g in I.gens], ring, I.budget)
    E = elimination(moved, list(range(n - 2)))
    x, y = n - 2, n - 1
    g = None
    for h in E.gens:
        u = [0] * (h.degree() + 1)
        for exps, c in h.terms:
            u[exps[x]] = (u[exps[x]] + c) % p if p else u[exps[x]] + c
        u = _upoly_trim(u)
        g = u if g is None else _upoly_gcd(g, u, p)
    if not g:
        return 0
    deg = len(g) - 1
    deriv = [(i * c) % p if p else i * c for i, c in enumerate(g)][1:]
    common = _upoly_gcd(g, deriv, p)
    return deg - (len(common) - 1)


def _rank_matrix(mat, p):
    return len(rref(mat, p)[1])


def count_distinct_points(I, rng=None, tries=2):
    """Number of geometric points of a zero-dimensional projective scheme."""
    h = I.hilbert()
    if h.degree == 0 or h.is_empty:
        return 0
    if h.proj_dim != 0:
        raise StructuralError(f"expected a zero-dimensional scheme, got dimension {h.proj_dim}")
    rng = rng or random.Random(0xC0)
    return max(_distinct_on_projection(I, rng) for _ in range(tries))
