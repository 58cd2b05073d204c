"""Multivariate polynomials over QQ or GF(p).

Terms are kept in a dict from packed grevlex monomial keys (see
:mod:`cremona.monomials`) to nonzero coefficients.  ``Polynomial.terms`` gives
the canonical sequence, strictly descending in grevlex.
"""

import re
from fractions import Fraction

from .domains import PrimeField
from .errors import ParseError, StructuralError
from .monomials import EXP_BITS, MAX_EXPONENT, MonomialOrder, key_degree

_FIELD = (1 << EXP_BITS) - 1


class Ring:
    """Polynomial ring ``field[names]`` with grevlex as the native order."""

    def __init__(self, names, field=None):
        if isinstance(names, str):
            names = [s for s in re.split(r"[\s,]+", names.strip()) if s]
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")
        self.field = PrimeField() if field is None else field
        self.nvars = len(self.names)
        self.order = MonomialOrder.grevlex(self.nvars)
        self._index = {name: i for i, name in enumerate(self.names)}
        self._hash = hash((self.names, self.field))

    def __eq__(self, other):
        return (isinstance(other, Ring) and self.names == other.names
                and self.field == other.field)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Ring({','.join(self.names)}; {self.field})"

    def index(self, var):
        if isinstance(var, int):
            if not 0 <= var < self.nvars:
                raise StructuralError(f"variable index {var} out of range")
            return var
        try:
            return self._index[var]
        except KeyError:
            raise StructuralError(f"{var!r} is not a variable of {self}") from None

    # -- element constructors ----------------------------------------------
    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.constant(1)

    def constant(self, c):
        c = self.field(c)
        return Polynomial(self, {0: c} if c else {})

    def gen(self, var):
        i = self.index(var)
        return Polynomial(self, {self.order.units[i]: self.field.one})

    def gens(self):
        return [self.gen(i) for i in range(self.nvars)]

    def monomial(self, exps, coeff=1):
        coeff = self.field(coeff)
        if not coeff:
            return self.zero()
        return Polynomial(self, {self.order.encode(exps): coeff})

    def from_dict(self, terms):
        """Build from ``{exponent tuple: coefficient}``."""
        f = self.field
        enc = self.order.encode
        d = {}
        for exps, c in terms.items():
            c = f(c)
            if c:
                k = enc(exps)
                d[k] = f(d.get(k, 0) + c)
                if not d[k]:
                    del d[k]
        return Polynomial(self, d)

    def __call__(self, value):
        if isinstance(value, Polynomial):
            if value.ring == self:
                return value
            return value.to_ring(self)
        if isinstance(value, str):
            return parse_polynomial(value, self)
        return self.constant(value)

    def linear_form(self, coeffs):
        return self.from_dict({tuple(int(i == j) for j in range(self.nvars)): c
                               for i, c in enumerate(coeffs)})

    def monomials_of_degree(self, d):
        """Exponent tuples of degree ``d``, in grevlex-descending order."""
        out = []

        def rec(i, left, acc):
            if i == self.nvars - 1:
                out.append(tuple(acc + [left]))
                return
            for e in range(left, -1, -1):
                rec(i + 1, left - e, acc + [e])

        if self.nvars == 0:
            return [()] if d == 0 else []
        rec(0, d, [])
        out.sort(key=self.order.encode, reverse=True)
        return out

    def with_field(self, field):
        return Ring(self.names, field)

    def extend(self, names):
        return Ring(self.names + tuple(names), self.field)

    def random_form(self, degree, rng, variables=None):
        """Dense random form of the given degree (optionally in a subset of variables)."""
        idx = None if variables is None else {self.index(v) for v in variables}
        terms = {}
        for exps in self.monomials_of_degree(degree):
            if idx is not None and any(e and i not in idx for i, e in enumerate(exps)):
                continue
            terms[exps] = self.field.random(rng)
        return self.from_dict(terms)


class Polynomial:
    """Immutable polynomial; ``terms`` lists ``(exponents, coeff)`` in grevlex-descending order."""

    __slots__ = ("ring", "_d", "_terms", "_hash")

    def __init__(self, ring, d):
        self.ring = ring
        self._d = d
        self._terms = None
        self._hash = None

    # -- inspection ---------------------------------------------------------
    @property
    def terms(self):
        if self._terms is None:
            dec = self.ring.order.decode
            self._terms = tuple((dec(k), self._d[k]) for k in sorted(self._d, reverse=True))
        return self._terms

    def keys(self):
        """Packed grevlex keys, descending."""
        return sorted(self._d, reverse=True)

    def items(self):
        return self._d.items()

    def __len__(self):
        return len(self._d)

    def __bool__(self):
        return bool(self._d)

    def is_zero(self):
        return not self._d

    def is_constant(self):
        return not self._d or (len(self._d) == 1 and 0 in self._d)

    def coefficient(self, exps):
        return self._d.get(self.ring.order.encode(exps), self.ring.field.zero)

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self._d:
            return -1
        em = self.ring.order.emask
        return max(key_degree(k, em) for k in self._d)

    def is_homogeneous(self):
        if not self._d:
            return True
        em = self.ring.order.emask
        degs = {key_degree(k, em) for k in self._d}
        return len(degs) == 1

    def homogeneous_components(self):
        em = self.ring.order.emask
        parts = {}
        for k, c in self._d.items():
            parts.setdefault(key_degree(k, em), {})[k] = c
        return {deg: Polynomial(self.ring, d) for deg, d in sorted(parts.items())}

    def variables(self):
        """Indices of the variables that occur."""
        low = 0
        for k in self._d:
            low |= k
        return [i for i in range(self.ring.nvars) if (low >> (EXP_BITS * i)) & _FIELD]

    def leading_term(self, order=None):
        """``(exponents, coeff)`` of the largest term in ``order`` (grevlex by default)."""
        if not self._d:
            raise ValueError("the zero polynomial has no leading term")
        if order is None or order == self.ring.order:
            k = max(self._d)
        else:
            k = max(self._d, key=order.convert)
        return self.ring.order.decode(k), self._d[k]

    # -- arithmetic ---------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise StructuralError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        return self.ring.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        d = dict(self._d)
        p = self.ring.field.p
        for k, c in other._d.items():
            v = d.get(k, 0) + c
            if p:
                v %= p
            if v:
                d[k] = v
            else:
                d.pop(k, None)
        return Polynomial(self.ring, d)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.field.p
        if p:
            return Polynomial(self.ring, {k: p - c for k, c in self._d.items()})
        return Polynomial(self.ring, {k: -c for k, c in self._d.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c):
        f = self.ring.field
        c = f(c)
        if not c:
            return self.ring.zero()
        p = f.p
        if p:
            return Polynomial(self.ring, {k: v * c % p for k, v in self._d.items()})
        return Polynomial(self.ring, {k: v * c for k, v in self._d.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        other = self._coerce(other)
        if not self._d or not other._d:
            return self.ring.zero()
        if self.degree() + other.degree() > MAX_EXPONENT:
            raise OverflowError("product degree exceeds the packed monomial range")
        a, b = self._d, other._d
        if len(a) < len(b):
            a, b = b, a
        acc = {}
        get = acc.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                acc[k] = get(k, 0) + ca * cb
        p = self.ring.field.p
        if p:
            acc = {k: v % p for k, v in acc.items() if v % p}
        else:
            acc = {k: v for k, v in acc.items() if v}
        return Polynomial(self.ring, acc)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def monic(self):
        if not self._d:
            return self
        _, lc = self.leading_term()
        return self.scale(self.ring.field.inv(lc))

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._d == other._d
        if isinstance(other, (int, Fraction)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._d.items())))
        return self._hash

    # -- calculus and substitution -------------------------------------------
    def derivative(self, var):
        ring = self.ring
        i = ring.index(var)
        unit = ring.order.units[i]
        shift = EXP_BITS * i
        p = ring.field.p
        d = {}
        for k, c in self._d.items():
            e = (k >> shift) & _FIELD
            if e:
                v = c * e
                if p:
                    v %= p
                if v:
                    d[k - unit] = v
        return Polynomial(ring, d)

    def gradient(self):
        return [self.derivative(i) for i in range(self.ring.nvars)]

    def substitute(self, images):
        """Evaluate at polynomials: ``f(images[0], ..., images[n-1])``."""
        ring = self.ring
        if len(images) != ring.nvars:
            raise StructuralError(
                f"substitute needs {ring.nvars} images, got {len(images)}")
        images = list(images)
        target = None
        for img in images:
            if isinstance(img, Polynomial):
                if target is not None and img.ring != target:
                    raise StructuralError("images live in different rings")
                target = img.ring
        if target is None:
            target = ring
        images = [img if isinstance(img, Polynomial) else target.constant(img)
                  for img in images]
        return _horner(self.terms, 0, images, target)

    def evaluate(self, point):
        """Value at a point with coordinates in the coefficient field."""
        f = self.ring.field
        point = [f(x) for x in point]
        total = f.zero
        for exps, c in self.terms:
            v = c
            for x, e in zip(point, exps):
                if e:
                    v = v * x ** e
            total += v
        return f(total)

    def to_ring(self, ring, mapping=None):
        """Move into ``ring`` matching variables by name (or via ``mapping`` name->name)."""
        idx = []
        for name in self.ring.names:
            target = mapping.get(name, name) if mapping else name
            idx.append(ring._index.get(target))
        f = ring.field
        d = {}
        enc = ring.order.encode
        for exps, c in self.terms:
            new = [0] * ring.nvars
            for i, e in enumerate(exps):
                if e:
                    if idx[i] is None:
                        raise StructuralError(
                            f"variable {self.ring.names[i]} has no image in {ring}")
                    new[idx[i]] += e
            c = f(c)
            if c:
                k = enc(new)
                v = f(d.get(k, 0) + c)
                if v:
                    d[k] = v
                else:
                    d.pop(k, None)
        return Polynomial(ring, d)

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"


def _horner(terms, var, images, target):
    """Recursive Horner evaluation over the variables in order."""
    if var == len(images) or not terms:
        if not terms:
            return target.zero()
        # only the constant term can remain
        return target.constant(terms[0][1])
    groups = {}
    for exps, c in terms:
        groups.setdefault(exps[var], []).append((exps, c))
    img = images[var]
    result = None
    top = max(groups)
    for e in range(top, -1, -1):
        part = groups.get(e)
        inner = _horner(part, var + 1, images, target) if part else None
        if result is None:
            result = inner
        else:
            result = result * img
            if inner is not None:
                result = result + inner
    return result


# -- text grammar -----------------------------------------------------------
_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*^()/]))")


def _tokenize(text):
    pos = 0
    tokens = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            col = pos + 1
            while col <= len(text) and text[col - 1].isspace():
                col += 1
            raise ParseError(f"unexpected character {text[col - 1]!r}", column=col)
        num, name, op = m.groups()
        start = m.start(m.lastindex) + 1
        if num is not None:
            tokens.append(("num", int(num), start))
        elif name is not None:
            tokens.append(("var", name, start))
        else:
            tokens.append(("op", "^" if op == "**" else op, start))
        pos = m.end()
    tokens.append(("end", None, len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text, ring):
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, column=tok[2])

    def parse(self):
        if self.peek()[0] == "end":
            self.error("empty polynomial")
        value = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected {self.peek()[1]!r}")
        return value

    def expr(self):
        sign = 1
        if self.peek()[:2] in (("op", "-"), ("op", "+")):
            sign = -1 if self.take()[1] == "-" else 1
        value = self.term()
        if sign < 0:
            value = -value
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.power()
        while True:
            tok = self.peek()
            if tok[:2] == ("op", "*"):
                self.take()
                value = value * self.power()
            elif tok[:2] == ("op", "/"):
                self.take()
                den = self.take()
                if den[0] != "num" or den[1] == 0:
                    self.error("only division by a nonzero integer is allowed", den)
                value = value.scale(self.ring.field.inv(self.ring.field(den[1])))
            else:
                return value

    def power(self):
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            tok = self.take()
            if tok[0] != "num":
                self.error("exponent must be a non-negative integer", tok)
            return base ** tok[1]
        return base

    def atom(self):
        tok = self.take()
        kind, val, _ = tok
        if kind == "num":
            return self.ring.constant(val)
        if kind == "var":
            if val not in self.ring._index:
                self.error(f"unknown variable {val!r}", tok)
            return self.ring.gen(val)
        if tok[:2] == ("op", "("):
            inner = self.expr()
            if self.take()[:2] != ("op", ")"):
                self.error("missing ')'")
            return inner
        if tok[:2] == ("op", "-"):
            return -self.power()
        self.error(f"unexpected {val!r}" if val else "unexpected end of input", tok)


def parse_polynomial(text, ring):
    """Parse ``text`` such as ``-z1^2+z0*z3`` into ``ring``."""
    return _Parser(text, ring).parse()


def format_polynomial(f):
    if not f._d:
        return "0"
    field = f.ring.field
    names = f.ring.names
    out = []
    for exps, c in f.terms:
        c = field.to_int(c) if field.p else c
        mono = "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(names, exps) if e)
        if isinstance(c, Fraction) and c.denominator == 1:
            c = c.numerator
        neg = c < 0
        a = -c if neg else c
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        elif isinstance(a, Fraction):
            body = f"{a.numerator}*{mono}/{a.denominator}"
        else:
            body = f"{a}*{mono}"
        if isinstance(a, Fraction) and not mono:
            body = f"{a.numerator}/{a.denominator}"
        out.append(("-" if neg else ("+" if out else "")) + body)
    return "".join(out)


# -- polynomial matrices ------------------------------------------------------
class PolyMatrix:
    """Rectangular matrix of polynomials over a single ring."""

    def __init__(self, entries, ring=None):
        rows = [list(r) for r in entries]
        if not rows or not rows[0]:
            raise StructuralError("empty matrix")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise StructuralError("ragged matrix")
        if ring is None:
            ring = next((e.ring for r in rows for e in r if isinstance(e, Polynomial)), None)
            if ring is None:
                raise StructuralError("cannot infer the ring of a scalar matrix")
        self.ring = ring
        self.entries = [[ring(e) for e in r] for r in rows]
        self.rows = len(rows)
        self.cols = width

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def transpose(self):
        return PolyMatrix([[self.entries[i][j] for i in range(self.rows)]
                           for j in range(self.cols)], self.ring)

    def delete_row(self, k):
        return PolyMatrix([r for i, r in enumerate(self.entries) if i != k], self.ring)

    def column(self, j):
        return [r[j] for r in self.entries]

    def apply(self, vector):
        """Matrix-vector product."""
        if len(vector) != self.cols:
            raise StructuralError("dimension mismatch")
        out = []
        for r in self.entries:
            acc = self.ring.zero()
            for a, b in zip(r, vector):
                acc = acc + a * b
            out.append(acc)
        return out

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.entries == other.entries

    def __repr__(self):
        body = "; ".join(", ".join(str(e) for e in r) for r in self.entries)
        return f"PolyMatrix[{body}]"


def determinant(m):
    """Determinant by cofactor expansion along the first row (size <= 4)."""
    if m.rows != m.cols:
        raise StructuralError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    return _det(m.entries, m.ring)


def _det(rows, ring):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = ring.zero()
    for j in range(n):
        a = rows[0][j]
        if not a:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = a * _det(minor, ring)
        total = total + term if j % 2 == 0 else total - term
    return total


def matrix_minors(m):
    """Maximal minors Delta_k of an (n+1) x n matrix, Delta_k dropping row k."""
    if m.rows != m.cols + 1:
        raise StructuralError("expected an (n+1) x n matrix")
    return [determinant(m.delete_row(k)) for k in range(m.rows)]


def signed_minors(m):
    """``((-1)^k Delta_k)``: the vector orthogonal to every column of ``m``."""
    return [d if k % 2 == 0 else -d for k, d in enumerate(matrix_minors(m))]

