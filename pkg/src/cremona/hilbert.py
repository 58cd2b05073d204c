"""Hilbert series of monomial ideals and the data derived from them."""

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return out


def _pmul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _shift(a, k):
    return [0] * k + list(a)


def _trim(a):
    a = list(a)
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _minimalize(gens):
    gens = sorted(set(gens), key=sum)
    out = []
    for g in gens:
        if not any(all(x <= y for x, y in zip(h, g)) for h in out):
            out.append(g)
    return out


def series_numerator(gens, nvars):
    """Numerator ``N(t)`` with ``HS(R/I) = N(t) / (1-t)^nvars`` for a monomial ideal.

    ``gens`` are exponent tuples.  Uses the pivot recursion
    ``N(I) = N(I + (x^e)) + t^e N(I : x^e)`` with memoization.
    """
    memo = {}
    return _trim(_numerator(tuple(_minimalize(gens)), nvars, memo))


def _numerator(gens, nvars, memo):
    if not gens:
        return [1]
    if gens in memo:
        return memo[gens]
    if any(sum(g) == 0 for g in gens):
        return [0]
    support = [sum(1 for g in gens if g[i]) for i in range(nvars)]
    if all(sum(1 for x in g if x) == 1 for g in gens) or _coprime(gens):
        result = [1]
        for g in gens:
            result = _pmul(result, [1] + [0] * (sum(g) - 1) + [-1])
        memo[gens] = result
        return result
    # pivot on the variable occurring in the most non-pure generators
    mixed = [g for g in gens if sum(1 for x in g if x) > 1]
    best = max(range(nvars), key=lambda i: (sum(1 for g in mixed if g[i]), support[i]))
    exps = sorted(g[best] for g in mixed if g[best])
    e = exps[len(exps) // 2]
    pivot = tuple(e if i == best else 0 for i in range(nvars))
    plus = tuple(_minimalize(list(gens) + [pivot]))
    colon = tuple(_minimalize([tuple(max(0, x - e) if i == best else x
                                     for i, x in enumerate(g)) for g in gens]))
    result = _padd(_numerator(plus, nvars, memo), _shift(_numerator(colon, nvars, memo), e))
    memo[gens] = result
    return result


def _coprime(gens):
    seen = 0
    for g in gens:
        mask = sum(1 << i for i, x in enumerate(g) if x)
        if mask & seen:
            return False
        seen |= mask
    return True


@dataclass(frozen=True)
class HilbertData:
    """Hilbert series data of ``R/I`` for a homogeneous ideal ``I`` in ``nvars`` variables."""

    nvars: int
    numerator: tuple            # N(t), HS = N(t) / (1-t)^nvars
    reduced: tuple              # Q(t), HS = Q(t) / (1-t)^krull_dim
    krull_dim: int
    degree: int
    poly: tuple = field(default=())   # Hilbert polynomial coefficients, increasing powers

    @property
    def proj_dim(self):
        return self.krull_dim - 1 if self.degree else -1

    @property
    def is_empty(self):
        """The projective scheme is empty (the ideal is irrelevant or the unit ideal)."""
        return self.krull_dim == 0

    def hilbert_function(self, s):
        n = self.nvars
        if s < 0:
            return 0
        if n == 0:
            return self.numerator[s] if s < len(self.numerator) else 0
        return sum(c * comb(s - j + n - 1, n - 1) for j, c in enumerate(self.numerator) if j <= s)

    def hilbert_polynomial(self, s):
        total = Fraction(0)
        for i, c in enumerate(self.poly):
            total += c * s ** i
        return total

    @property
    def regularity_index(self):
        """Every ``s`` at or above this value has ``HF(s) == HP(s)``."""
        return max(0, len(self.reduced) - self.krull_dim)

    @property
    def arithmetic_genus(self):
        """``1 - P(0)`` for curves."""
        if self.proj_dim != 1:
            raise ValueError("arithmetic genus is only reported for curves")
        return 1 - int(self.poly[0])

    def poly_string(self, var="t"):
        parts = []
        for i in range(len(self.poly) - 1, -1, -1):
            c = self.poly[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            coeff = str(a) if (a != 1 or i == 0) else ""
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            parts.append(f"{sign}{coeff}{mono}")
        if not parts:
            return "0"
        s = "".join(parts)
        return s[1:] if s[0] == "+" else s


def hilbert_data(leading_exponents, nvars):
    """Hilbert data from the exponent tuples of a Groebner basis' leading terms."""
    num = series_numerator(leading_exponents, nvars)
    q = list(num)
    d = nvars
    if q == [0]:
        return HilbertData(nvars, (0,), (0,), 0, 0, ())
    while d > 0 and sum(q) == 0:
        # divide by (1 - t)
        out = []
        acc = 0
        for c in q[:-1]:
            acc += c
            out.append(acc)
        q = _trim(out)
        d -= 1
    degree = sum(q)
    return HilbertData(nvars, tuple(num), tuple(q), d, degree, tuple(_hilbert_poly(q, d)))


def _hilbert_poly(q, d):
    """Coefficients of ``sum_j q_j * C(s - j + d - 1, d - 1)`` as a polynomial in ``s``."""
    if d == 0:
        return []
    total = [Fraction(0)]
    for j, c in enumerate(q):
        if not c:
            continue
        # C(s - j + d - 1, d - 1) = prod_{i=1}^{d-1} (s - j + i) / i
        term = [Fraction(c)]
        for i in range(1, d):
            term = _pmul(term, [Fraction(i - j, i), Fraction(1, i)])
        total = _padd(total, term)
    while len(total) > 1 and total[-1] == 0:
        total.pop()
    return total
