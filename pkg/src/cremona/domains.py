"""Exact coefficient domains: the rationals and prime fields GF(p)."""

from fractions import Fraction
from functools import lru_cache

DEFAULT_PRIME = 32003


@lru_cache(maxsize=None)
def is_prime(n):
    """Deterministic primality test (exact for every n below 2**64)."""
    from sympy.ntheory import isprime

    return bool(isprime(n))


class Rationals:
    """The field Q, elements are :class:`fractions.Fraction`."""

    characteristic = 0
    p = None
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x):
        if isinstance(x, str):
            return Fraction(x.strip())
        return Fraction(x)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return 1 / Fraction(a)

    def random(self, rng, bound=30):
        return Fraction(rng.randint(-bound, bound))

    def random_nonzero(self, rng, bound=30):
        while True:
            c = rng.randint(-bound, bound)
            if c:
                return Fraction(c)

    def to_int(self, a):
        """Integer representative; only valid for integral elements."""
        if a.denominator != 1:
            raise ValueError(f"{a} is not an integer")
        return a.numerator

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"

    def __str__(self):
        return "QQ"


class PrimeField:
    """GF(p) for a prime p > 3, elements are ints in ``range(p)``."""

    def __init__(self, p=DEFAULT_PRIME):
        p = int(p)
        if p <= 3 or not is_prime(p):
            raise ValueError(f"modulus must be a prime > 3, got {p}")
        self.p = p
        self.characteristic = p
        self.zero = 0
        self.one = 1

    def __call__(self, x):
        p = self.p
        if isinstance(x, int):
            return x % p
        if isinstance(x, str):
            x = Fraction(x.strip())
        if isinstance(x, Fraction):
            num = x.numerator % p
            den = x.denominator % p
            if den == 0:
                raise ZeroDivisionError(f"{x} has denominator divisible by {p}")
            return num * pow(den, -1, p) % p
        raise TypeError(f"cannot coerce {x!r} into GF({p})")

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("zero has no inverse")
        return pow(a, -1, self.p)

    def random(self, rng):
        return rng.randrange(self.p)

    def random_nonzero(self, rng):
        return rng.randrange(1, self.p)

    def to_int(self, a):
        """Symmetric representative in (-p/2, p/2]."""
        a %= self.p
        return a - self.p if a > self.p // 2 else a

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"

    __str__ = __repr__


QQ = Rationals()


def field_from_string(text):
    """Parse ``QQ``, ``GF(p)`` or a bare prime."""
    text = text.strip()
    if text.upper() in ("QQ", "Q"):
        return QQ
    if text.upper().startswith("GF(") and text.endswith(")"):
        text = text[3:-1]
    return PrimeField(int(text))
