"""Buchberger's algorithm on packed monomial keys.

Internal polynomials are plain dicts ``{key: coeff}`` where ``key`` is packed
for one :class:`~cremona.monomials.MonomialOrder`, so ``max(d)`` is the
leading monomial.  Basis elements are kept monic as ``(lead, low, tail)``
triples; ``tail`` is the list of non-leading ``(key, coeff)`` items.
"""

import heapq
import logging
from fractions import Fraction

from .errors import BudgetExceeded
from .monomials import key_degree

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 200_000


def to_internal(poly, order):
    conv = order.convert
    if order == poly.ring.order:
        return dict(poly.items())
    return {conv(k): c for k, c in poly.items()}


def from_internal(d, ring):
    conv = ring.order.convert
    from .polynomial import Polynomial

    return Polynomial(ring, {conv(k): c for k, c in d.items()})


def _monic(d, p):
    lead = max(d)
    c = d[lead]
    if p:
        if c == 1:
            return d
        inv = pow(c, -1, p)
        return {k: v * inv % p for k, v in d.items()}
    if c == 1:
        return d
    return {k: v / c for k, v in d.items()}


def _entry(d, emask):
    lead = max(d)
    tail = [(k, c) for k, c in d.items() if k != lead]
    return lead, lead & emask, tail


def normal_form(f, reducers, order, p):
    """Fully reduce the dict ``f`` by monic ``reducers`` (lead, low, tail)."""
    emask, guard = order.emask, order.guard
    f = dict(f)
    rem = {}
    if p:
        while f:
            m = max(f)
            c = f.pop(m)
            mg = (m & emask) | guard
            for lk, ll, tail in reducers:
                if (mg - ll) & guard == guard:
                    q = m - lk
                    get = f.get
                    for k, a in tail:
                        k += q
                        v = (get(k, 0) - c * a) % p
                        if v:
                            f[k] = v
                        else:
                            del f[k]
                    break
            else:
                rem[m] = c
        return rem
    while f:
        m = max(f)
        c = f.pop(m)
        mg = (m & emask) | guard
        for lk, ll, tail in reducers:
            if (mg - ll) & guard == guard:
                q = m - lk
                get = f.get
                for k, a in tail:
                    k += q
                    v = get(k, 0) - c * a
                    if v:
                        f[k] = v
                    else:
                        del f[k]
                break
        else:
            rem[m] = c
    return rem


def spoly(a, b, lcm, p):
    """S-polynomial of monic entries ``a`` and ``b`` with the given lcm key."""
    la, _, ta = a
    lb, _, tb = b
    qa, qb = lcm - la, lcm - lb
    d = {k + qa: c for k, c in ta}
    get = d.get
    if p:
        for k, c in tb:
            k += qb
            v = (get(k, 0) - c) % p
            if v:
                d[k] = v
            else:
                del d[k]
    else:
        for k, c in tb:
            k += qb
            v = get(k, 0) - c
            if v:
                d[k] = v
            else:
                del d[k]
    return d


class Buchberger:
    """One run of Buchberger's algorithm (normal/sugar selection, Gebauer-Moeller criteria)."""

    def __init__(self, order, p, budget=DEFAULT_BUDGET):
        self.order = order
        self.p = p
        self.budget = budget
        self.entries = []     # (lead, low, tail)
        self.sugar = []
        self.active = []      # indices usable for reduction and new pairs
        self.pairs = []       # heap of (sugar, lcm, i, j)
        self.reductions = 0
        self.zero_reductions = 0

    def run(self, polys):
        emask = self.order.emask
        p = self.p
        start = []
        for d in polys:
            if d:
                start.append(_monic(d, p))
        start.sort(key=max)
        for d in start:
            deg = max(key_degree(k, emask) for k in d)
            d = normal_form(d, self._reducers(), self.order, p)
            if d:
                self._add(_monic(d, p), deg)
        while self.pairs:
            sug, lcm, i, j = heapq.heappop(self.pairs)
            self.reductions += 1
            if self.reductions > self.budget:
                raise BudgetExceeded(self.reductions, self.budget)
            s = spoly(self.entries[i], self.entries[j], lcm, p)
            if not s:
                self.zero_reductions += 1
                continue
            h = normal_form(s, self._reducers(), self.order, p)
            if not h:
                self.zero_reductions += 1
                continue
            self._add(_monic(h, p), sug)
        return self.reduced()

    def _reducers(self):
        return [self.entries[i] for i in self.active]

    def _add(self, d, sugar):
        order = self.order
        emask = order.emask
        divides = order.divides
        lcm_of = order.lcm
        entry = _entry(d, emask)
        k = len(self.entries)
        self.entries.append(entry)
        self.sugar.append(sugar)
        h = entry[0]
        hdeg = key_degree(h, emask)

        # Gebauer-Moeller: candidate pairs (i, k)
        cand = []
        for i in self.active:
            gi = self.entries[i][0]
            cand.append((lcm_of(gi, h), i, order.gcd_is_one(gi, h)))
        kept = []
        for idx, (l1, i, disjoint) in enumerate(cand):
            if disjoint:
                kept.append((l1, i, True))
                continue
            dominated = False
            for l2, _, _ in cand[idx + 1:]:
                if divides(l2, l1):
                    dominated = True
                    break
            if not dominated:
                for l2, _, _ in kept:
                    if divides(l2, l1):
                        dominated = True
                        break
            if not dominated:
                kept.append((l1, i, False))
        new_pairs = []
        for l1, i, disjoint in kept:
            if disjoint:
                continue
            gi = self.entries[i][0]
            ldeg = key_degree(l1, emask)
            s = max(self.sugar[i] + ldeg - key_degree(gi, emask), sugar + ldeg - hdeg)
            new_pairs.append((s, l1, i, k))

        # drop old pairs made redundant by h
        old = []
        changed = False
        for pair in self.pairs:
            _, l, i, j = pair
            if divides(h, l):
                gi = self.entries[i][0]
                gj = self.entries[j][0]
                if lcm_of(gi, h) != l and lcm_of(gj, h) != l:
                    changed = True
                    continue
            old.append(pair)
        if changed:
            heapq.heapify(old)
        self.pairs = old
        for pr in new_pairs:
            heapq.heappush(self.pairs, pr)

        self.active = [i for i in self.active if not divides(h, self.entries[i][0])]
        self.active.append(k)

    def reduced(self):
        """Reduced Groebner basis as monic dicts, sorted by increasing lead."""
        p = self.p
        divides = self.order.divides
        act = sorted(self.active, key=lambda i: self.entries[i][0])
        # minimal basis: no lead divisible by an earlier (smaller) lead
        minimal = []
        for i in act:
            if not any(divides(self.entries[j][0], self.entries[i][0]) for j in minimal):
                minimal.append(i)
        act = minimal
        out = []
        one = 1 if p else Fraction(1)
        for i in act:
            lead, _, tail = self.entries[i]
            others = [self.entries[j] for j in act if j != i]
            t = normal_form(dict(tail), others, self.order, p) if tail else {}
            t[lead] = one
            out.append(t)
        return out


def buchberger(polys, order, p, budget=DEFAULT_BUDGET):
    """Reduced Groebner basis of internal dicts ``polys``; returns monic dicts."""
    run = Buchberger(order, p, budget)
    basis = run.run(polys)
    log.debug("buchberger %s: %d pairs, %d zero, basis %d",
              order.label, run.reductions, run.zero_reductions, len(basis))
    return basis


def is_groebner(basis, order, p):
    """Buchberger criterion: every S-polynomial reduces to zero."""
    entries = [_entry(_monic(d, p), order.emask) for d in basis if d]
    for a in range(len(entries)):
        for b in range(a + 1, len(entries)):
            lcm = order.lcm(entries[a][0], entries[b][0])
            s = spoly(entries[a], entries[b], lcm, p)
            if s and normal_form(s, entries, order, p):
                return False
    return True


def reducers_of(basis, order, p):
    return [_entry(_monic(d, p), order.emask) for d in basis if d]
