"""Dense exact linear algebra over QQ or GF(p) (lists of lists)."""

from fractions import Fraction


def rref(rows, p):
    """Row-reduce a copy of ``rows``; returns ``(reduced_rows, pivot_columns)``.

    ``p`` is the modulus, or ``None`` for rational entries.
    """
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        row = m[r]
        if p:
            inv = pow(row[c], -1, p)
            row = [x * inv % p for x in row]
        else:
            lead = row[c]
            row = [Fraction(x) / lead for x in row]
        m[r] = row
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                if p:
                    m[i] = [(x - f * y) % p for x, y in zip(m[i], row)]
                else:
                    m[i] = [x - f * y for x, y in zip(m[i], row)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows, p):
    return len(rref(rows, p)[1])


def nullspace(rows, ncols, p):
    """Basis of ``{x : rows * x = 0}``."""
    red, pivots = rref(rows, p) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    one = 1 if p else Fraction(1)
    for f in free:
        v = [0] * ncols
        v[f] = one
        for row, c in zip(red, pivots):
            v[c] = (-row[f]) % p if p else -row[f]
        basis.append(v)
    return basis


def mat_mul(a, b, p=None):
    out = [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]
    if p:
        out = [[x % p for x in row] for row in out]
    return out


def transpose(a):
    return [list(r) for r in zip(*a)]
