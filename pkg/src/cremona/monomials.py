"""Monomial orders and the packed-integer monomial encoding.

A monomial in ``n`` variables is stored as one Python int.  The low part holds
the exponents (``EXP_BITS`` per variable, top bit of each field is a guard
bit); the high part holds ``n`` rows of a non-negative integer weight matrix
that realises the order.  Because every row is linear in the exponents:

* multiplying monomials is adding keys,
* dividing is subtracting keys,
* comparing keys as ints compares the monomials in the order.

The order rows determine the exponents, so two distinct monomials never tie
on the high part.
"""

EXP_BITS = 10
ROW_BITS = 12
MAX_EXPONENT = (1 << (EXP_BITS - 1)) - 1
MAX_DEGREE = (1 << ROW_BITS) - 1
_DIGIT_MOD = (1 << EXP_BITS) - 1


class MonomialOrder:
    """A monomial order on ``nvars`` variables given by weight rows.

    Use the constructors :meth:`grevlex`, :meth:`lex` and :meth:`block`.
    Orders compare equal when their rows agree, so they can key caches.
    """

    __slots__ = ("nvars", "kind", "rows", "label", "emask", "guard",
                 "row_units", "units", "_hash")

    def __init__(self, nvars, rows, kind, label):
        self.nvars = nvars
        self.rows = tuple(tuple(r) for r in rows)
        if len(self.rows) != nvars:
            raise ValueError("an order needs exactly one row per variable")
        self.kind = kind
        self.label = label
        n = nvars
        self.emask = (1 << (EXP_BITS * n)) - 1
        self.guard = sum(1 << (EXP_BITS * i + EXP_BITS - 1) for i in range(n))
        base = EXP_BITS * n
        row_units = []
        for i in range(n):
            u = 0
            for j, row in enumerate(self.rows):
                if row[i]:
                    u += row[i] << (base + ROW_BITS * (n - 1 - j))
            row_units.append(u)
        self.row_units = tuple(row_units)
        self.units = tuple(row_units[i] + (1 << (EXP_BITS * i)) for i in range(n))
        self._hash = hash((self.nvars, self.rows))

    # -- constructors -------------------------------------------------------
    @classmethod
    def grevlex(cls, nvars, perm=None):
        """Graded reverse lex; ``perm`` lists variables from largest to smallest."""
        perm = list(range(nvars)) if perm is None else list(perm)
        rows = _grevlex_rows(nvars, perm)
        label = "grevlex" if perm == list(range(nvars)) else f"grevlex{tuple(perm)}"
        return cls(nvars, rows, "grevlex", label)

    @classmethod
    def lex(cls, nvars, perm=None):
        perm = list(range(nvars)) if perm is None else list(perm)
        rows = []
        for v in perm:
            r = [0] * nvars
            r[v] = 1
            rows.append(r)
        return cls(nvars, rows, "lex", f"lex{tuple(perm)}")

    @classmethod
    def block(cls, nvars, first):
        """Elimination order: grevlex on ``first``, ties broken by grevlex on the rest."""
        first = list(first)
        rest = [i for i in range(nvars) if i not in first]
        if not first or not rest:
            return cls.grevlex(nvars)
        rows = _grevlex_rows(nvars, first) + _grevlex_rows(nvars, rest)
        return cls(nvars, rows, "block", f"block{tuple(first)}")

    # -- packing ------------------------------------------------------------
    def encode(self, exps):
        key = 0
        for e, u in zip(exps, self.units):
            if e:
                if e > MAX_EXPONENT:
                    raise OverflowError(f"exponent {e} exceeds {MAX_EXPONENT}")
                key += e * u
        return key

    def decode(self, key):
        return tuple((key >> (EXP_BITS * i)) & _FIELD for i in range(self.nvars))

    def convert(self, key):
        """Re-key a monomial from any order on the same variables into this one."""
        low = key & self.emask
        key = low
        i = 0
        while low:
            e = low & _FIELD
            if e:
                key += e * self.row_units[i]
            low >>= EXP_BITS
            i += 1
        return key

    def divides(self, a, b):
        """True when monomial ``a`` divides monomial ``b``."""
        g = self.guard
        return (((b & self.emask) | g) - (a & self.emask)) & g == g

    def lcm(self, a, b):
        ea, eb = self.decode(a), self.decode(b)
        return self.encode([x if x > y else y for x, y in zip(ea, eb)])

    def gcd_is_one(self, a, b):
        ea, eb = a & self.emask, b & self.emask
        while ea and eb:
            if (ea & _FIELD) and (eb & _FIELD):
                return False
            ea >>= EXP_BITS
            eb >>= EXP_BITS
        return True

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self.rows == other.rows

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"MonomialOrder({self.label}, n={self.nvars})"


_FIELD = (1 << EXP_BITS) - 1


def key_degree(key, emask):
    """Total degree of a packed monomial (digit sum of the exponent fields)."""
    return (key & emask) % _DIGIT_MOD


def _grevlex_rows(nvars, perm):
    # prefix sums s_k, s_{k-1}, ..., s_1 over perm (perm[-1] is the smallest)
    rows = []
    for k in range(len(perm), 0, -1):
        r = [0] * nvars
        for v in perm[:k]:
            r[v] = 1
        rows.append(r)
    return rows
