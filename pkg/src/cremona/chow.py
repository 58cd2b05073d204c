"""Intersection numbers on P1 x P3 x P3' and on a projective bundle over the blown-up P3.

The ring is Z[s, H, H'] / (s^2, H^4, H'^4).  A class is a dense 2x4x4 integer
array ``c[a][b][e]`` holding the coefficient of ``s^a H^b H'^e``.
"""

from itertools import product

_SHAPE = (2, 4, 4)


class ChowClass:
    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        c = [[[0] * 4 for _ in range(4)] for _ in range(2)]
        if coeffs:
            for (a, b, e), v in coeffs.items():
                if a < 2 and b < 4 and e < 4:
                    c[a][b][e] += int(v)
        self.c = c

    @classmethod
    def monomial(cls, a=0, b=0, e=0, coeff=1):
        return cls({(a, b, e): coeff})

    def items(self):
        for a, b, e in product(range(2), range(4), range(4)):
            v = self.c[a][b][e]
            if v:
                yield (a, b, e), v

    def coefficient(self, a, b, e):
        if a >= 2 or b >= 4 or e >= 4:
            return 0
        return self.c[a][b][e]

    @property
    def degree(self):
        """Coefficient of the top class s * H^3 * H'^3."""
        return self.c[1][3][3]

    def __add__(self, other):
        other = _as_class(other)
        out = ChowClass()
        for a, b, e in product(range(2), range(4), range(4)):
            out.c[a][b][e] = self.c[a][b][e] + other.c[a][b][e]
        return out

    __radd__ = __add__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-_as_class(other))

    def __rsub__(self, other):
        return _as_class(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            out = ChowClass()
            for (a, b, e), v in self.items():
                out.c[a][b][e] = v * other
            return out
        return chow_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = ChowClass.monomial()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = _as_class(other)
        return isinstance(other, ChowClass) and self.c == other.c

    def __hash__(self):
        return hash(tuple(self.items()))

    def swap(self):
        """Exchange H and H' (a ring involution fixing s)."""
        out = ChowClass()
        for (a, b, e), v in self.items():
            out.c[a][e][b] = v
        return out

    def __repr__(self):
        return f"ChowClass({format_class(self)})"


def _as_class(x):
    if isinstance(x, ChowClass):
        return x
    return ChowClass.monomial(coeff=x)


def chow_mul(x, y):
    out = ChowClass()
    oc = out.c
    for (a1, b1, e1), v1 in x.items():
        for (a2, b2, e2), v2 in y.items():
            a, b, e = a1 + a2, b1 + b2, e1 + e2
            if a < 2 and b < 4 and e < 4:
                oc[a][b][e] += v1 * v2
    return out


s = ChowClass.monomial(1, 0, 0)
H = ChowClass.monomial(0, 1, 0)
Hp = ChowClass.monomial(0, 0, 1)
ONE = ChowClass.monomial()


def format_class(x):
    names = ("s", "H", "H'")
    parts = []
    for (a, b, e), v in sorted(x.items(), key=lambda t: (-sum(t[0]), t[0])):
        mono = []
        for n, k in zip(names, (a, b, e)):
            if k == 1:
                mono.append(n)
            elif k > 1:
                mono.append(f"{n}^{k}")
        m = "*".join(mono)
        if not m:
            term = str(abs(v))
        elif abs(v) == 1:
            term = m
        else:
            term = f"{abs(v)}*{m}"
        parts.append(("-" if v < 0 else "+") + term)
    if not parts:
        return "0"
    out = "".join(parts)
    return out[1:] if out[0] == "+" else out


def x_class():
    """Class of the complete intersection (s+H)(s+H')(H+H')(s+H+H')."""
    return (s + H) * (s + Hp) * (H + Hp) * (s + H + Hp)


def series_coefficient(roots, k):
    """Coefficient of t^k in prod_i 1/(1 - roots[i] t) (the complete symmetric sum)."""
    # h_k(x_1..x_n) built one root at a time: h_k = sum_j x_n^j h_{k-j}(x_1..x_{n-1})
    h = [ONE] + [ChowClass() for _ in range(k)]
    for r in roots:
        new = []
        for deg in range(k + 1):
            total = ChowClass()
            power = ONE
            for j in range(deg + 1):
                total = total + power * h[deg - j]
                power = power * r
            new.append(total)
        h = new
    return h[k]


def gamma_class():
    """Degree-2 coefficient of 1/((1 - s t)(1 - H t)(1 - (s+H) t))."""
    return series_coefficient([s, H, s + H], 2)


def integrate_blowup(x):
    """Degree of a class on the blow-up of P3 along a line, embedded in P1 x P3 as (s + H)."""
    return (x * (s + H)).coefficient(1, 3, 0)


def ruled_degree(d):
    """Degree of the image threefold: (H' + s)^(d-1) * H'^3 on a P^(d-1)-bundle.

    The bundle is P(O^(d-1) + O(H)) over the blown-up P3, whose ring is
    Z[s, H][H'] / (s^2, H^4, H'^d - H'^(d-1) H).  The fibre class H'^(d-1)
    integrates to the base, and the base integrates against (s + H) on P1 x P3.
    """
    if d < 2:
        raise ValueError("ruled_degree needs d >= 2")
    # polynomial in (s, H, H') as {(a, b, e): coeff}
    poly = {(0, 0, 3): 1}
    for _ in range(d - 1):
        nxt = {}
        for (a, b, e), v in poly.items():
            for da, de in ((0, 1), (1, 0)):
                key = (a + da, b, e + de)
                if key[0] < 2:
                    nxt[key] = nxt.get(key, 0) + v
        poly = nxt
    # rewrite H'^e -> H'^(d-1) H^(e-d+1), highest powers first
    reduced = {}
    for (a, b, e), v in poly.items():
        if e >= d:
            b += e - d + 1
            e = d - 1
        if b < 4:
            reduced[(a, b, e)] = reduced.get((a, b, e), 0) + v
    base = ChowClass({(a, b, 0): v for (a, b, e), v in reduced.items() if e == d - 1})
    return integrate_blowup(base)
