"""Dense univariate polynomial utilities over Z, Q and F_p.

Coefficient lists run low-to-high degree ([c0, c1, ..., cn]); the zero
polynomial is the empty list.  Everything is exact: Python ints,
fractions.Fraction, or ints mod a prime.
"""

from __future__ import annotations

import math
from fractions import Fraction


def normalize(f):
    """Strip trailing zero coefficients."""
    n = len(f)
    while n and not f[n - 1]:
        n -= 1
    return list(f[:n])


def degree(f) -> int:
    """Degree; -1 for the zero polynomial."""
    return len(normalize(f)) - 1


def add(f, g):
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] += c
    return normalize(out)


def neg(f):
    return [-c for c in f]


def sub(f, g):
    return add(f, neg(g))


def mul(f, g):
    f, g = normalize(f), normalize(g)
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if not a:
            continue
        for j, b in enumerate(g):
            out[i + j] += a * b
    return normalize(out)


def scale(f, c):
    if not c:
        return []
    return normalize([a * c for a in f])


def pow_(f, k: int):
    result = [1]
    base = list(f)
    while k:
        if k & 1:
            result = mul(result, base)
        base = mul(base, base)
        k >>= 1
    return result


def evaluate(f, x):
    acc = 0
    for c in reversed(normalize(f)):
        acc = acc * x + c
    return acc


def derivative(f):
    return normalize([i * c for i, c in enumerate(f)][1:])


def divmod_exact(f, g):
    """(quotient, remainder) over the rationals."""
    g = normalize(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = [Fraction(c) for c in normalize(f)]
    lc = Fraction(g[-1])
    dg = len(g) - 1
    q = [Fraction(0)] * max(len(f) - dg, 0)
    while len(f) - 1 >= dg and f:
        k = len(f) - 1 - dg
        c = f[-1] / lc
        q[k] = c
        for i, b in enumerate(g):
            f[k + i] -= c * Fraction(b)
        f = normalize(f)
    return normalize(q), f


def to_text(f, var="x") -> str:
    f = normalize(f)
    if not f:
        return "0"
    terms = []
    for i, c in enumerate(f):
        if not c:
            continue
        if i == 0:
            terms.append(f"{c}")
        elif i == 1:
            terms.append(f"{c}*{var}" if c not in (1, -1) else ("-" + var if c == -1 else var))
        else:
            base = f"{var}^{i}"
            terms.append(f"{c}*{base}" if c not in (1, -1) else ("-" + base if c == -1 else base))
    out = " + ".join(reversed(terms))
    return out.replace("+ -", "- ")


# ---------------------------------------------------------------------------
# resultants

def _sylvester_rows(P, Q):
    """Sylvester matrix rows, rows of P first (fixes the sign convention)."""
    m, n = len(P) - 1, len(Q) - 1
    size = m + n
    rows = []
    ph = list(reversed(P))  # high-to-low
    qh = list(reversed(Q))
    for i in range(n):
        rows.append([0] * i + ph + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + qh + [0] * (size - n - 1 - i))
    return rows


def _det_bareiss(rows):
    """Fraction-free determinant for integer matrices."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not a[k][k]:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _det_fractions(rows):
    a = [[Fraction(c) for c in r] for r in rows]
    n = len(a)
    if n == 0:
        return Fraction(1)
    det = Fraction(1)
    for k in range(n):
        if not a[k][k]:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    det = -det
                    break
            else:
                return Fraction(0)
        det *= a[k][k]
        inv = 1 / a[k][k]
        for i in range(k + 1, n):
            if not a[i][k]:
                continue
            factor = a[i][k] * inv
            for j in range(k, n):
                a[i][j] -= factor * a[k][j]
    return det


def resultant(P, Q):
    """Res(P, Q) via the Sylvester determinant (rows of P first).

    Integer inputs give an int; Fraction inputs give a Fraction.
    """
    P, Q = normalize(P), normalize(Q)
    if not P or not Q:
        raise ValueError("resultant of the zero polynomial is undefined")
    rows = _sylvester_rows(P, Q)
    if all(isinstance(c, int) for row in rows for c in row):
        return _det_bareiss(rows)
    return _det_fractions(rows)


def discriminant(f):
    """Discriminant of an integer polynomial (exact integer)."""
    f = normalize(f)
    n = len(f) - 1
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    if n == 1:
        return 1
    r = resultant(f, derivative(f))
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    val = Fraction(sign * r, f[-1])
    assert val.denominator == 1
    return val.numerator


# ---------------------------------------------------------------------------
# arithmetic in F_p[x]

def pmod(f, p):
    return normalize([c % p for c in f])


def pmul(f, g, p):
    return pmod(mul(f, g), p)


def padd(f, g, p):
    return pmod(add(f, g), p)


def psub(f, g, p):
    return pmod(sub(f, g), p)


def pmonic(f, p):
    f = pmod(f, p)
    if not f:
        return f
    inv = pow(f[-1], p - 2, p)
    return pmod(scale(f, inv), p)


def pdivmod(f, g, p):
    g = pmod(g, p)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = pmod(f, p)
    inv = pow(g[-1], p - 2, p)
    dg = len(g) - 1
    q = [0] * max(len(f) - dg, 0)
    while f and len(f) - 1 >= dg:
        k = len(f) - 1 - dg
        c = f[-1] * inv % p
        q[k] = c
        for i, b in enumerate(g):
            f[k + i] = (f[k + i] - c * b) % p
        f = normalize(f)
    return normalize(q), f


def pgcd(f, g, p):
    f, g = pmod(f, p), pmod(g, p)
    while g:
        f, g = g, pdivmod(f, g, p)[1]
    return pmonic(f, p)


def ppow_mod(base, k: int, modpoly, p):
    result = [1]
    base = pdivmod(base, modpoly, p)[1]
    while k:
        if k & 1:
            result = pdivmod(pmul(result, base, p), modpoly, p)[1]
        base = pdivmod(pmul(base, base, p), modpoly, p)[1]
        k >>= 1
    return result


def pderiv(f, p):
    return pmod(derivative(f), p)


def _pth_root(f, p):
    """Inverse Frobenius for f(x) = g(x)^p over the prime field."""
    return normalize([f[i] for i in range(0, len(f), p)])


def squarefree_decomposition(f, p):
    """Monic squarefree decomposition over F_p.

    Returns a dict {multiplicity: monic squarefree part}; the product
    of part^multiplicity recovers f up to the leading coefficient.
    """
    f = pmonic(f, p)
    result: dict[int, list] = {}
    if degree(f) <= 0:
        return result
    fp = pderiv(f, p)
    if not fp:
        inner = squarefree_decomposition(_pth_root(f, p), p)
        return {m * p: g for m, g in inner.items()}
    c = pgcd(f, fp, p)
    w = pdivmod(f, c, p)[0]
    i = 1
    while degree(w) > 0:
        y = pgcd(w, c, p)
        z = pdivmod(w, y, p)[0]
        if degree(z) > 0:
            result[i] = pmul(result[i], z, p) if i in result else z
        w = y
        c = pdivmod(c, y, p)[0]
        i += 1
    if degree(c) > 0:
        for m, g in squarefree_decomposition(_pth_root(c, p), p).items():
            key = m * p
            result[key] = pmul(result[key], g, p) if key in result else g
    return result


def distinct_degree_counts(g, p):
    """[(degree, count)] of irreducible factors of a monic squarefree g."""
    g = pmonic(g, p)
    counts = []
    rem = g
    x = [0, 1]
    h = pdivmod(x, rem, p)[1]
    d = 0
    while degree(rem) > 0:
        d += 1
        if degree(rem) < 2 * d:
            counts.append((degree(rem), 1))
            break
        h = ppow_mod(h, p, rem, p)
        G = pgcd(psub(h, x, p), rem, p)
        if degree(G) > 0:
            counts.append((d, degree(G) // d))
            rem = pdivmod(rem, G, p)[0]
            h = pdivmod(h, rem, p)[1]
    return counts


def factor_shape(f, p):
    """Sorted [(degree, multiplicity)] across all irreducible factors of f mod p."""
    shape = []
    for mult, part in squarefree_decomposition(f, p).items():
        for d, cnt in distinct_degree_counts(part, p):
            shape.extend([(d, mult)] * cnt)
    return sorted(shape)


def radical_and_cofactor(f, p):
    """(rad, f/rad) mod p for monic f: rad = product of distinct irreducible factors."""
    parts = squarefree_decomposition(f, p)
    rad = [1]
    for part in parts.values():
        rad = pmul(rad, part, p)
    cof = pdivmod(pmonic(f, p), rad, p)[0]
    return rad, cof


# ---------------------------------------------------------------------------
# irreducibility over Q for small degrees

def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
    return sorted(out)


def _content(f) -> int:
    return math.gcd(*[abs(c) for c in f]) if f else 0


def rational_roots(f) -> list[Fraction]:
    """All rational roots of an integer polynomial."""
    f = normalize(f)
    if degree(f) < 1:
        return []
    roots = []
    while f and f[0] == 0:
        if Fraction(0) not in roots:
            roots.append(Fraction(0))
        f = f[1:]
    f = normalize(f)
    if degree(f) < 1:
        return roots
    for q in _divisors(f[-1]):
        for pnum in _divisors(f[0]):
            for cand in (Fraction(pnum, q), Fraction(-pnum, q)):
                if cand not in roots and evaluate(f, cand) == 0:
                    roots.append(cand)
    return sorted(roots)


def is_irreducible(f) -> bool | None:
    """Irreducibility over Q for degree <= 4; None (unchecked) above that."""
    f = normalize(f)
    n = degree(f)
    if n < 1:
        return False
    if n == 1:
        return True
    if n > 4:
        return None
    if rational_roots(f):
        return False
    if n <= 3:
        return True
    # quartic with no rational root: look for a quadratic factor e*x^2 + u*x + v
    c = _content(f)
    f = [a // c for a in f]
    lc, c0 = f[-1], f[0]
    cauchy = 1 + max(abs(a) for a in f) // abs(lc) + 1
    for e in _divisors(lc):
        ubound = 2 * cauchy * e + 1
        for v in _divisors(c0):
            for sv in (v, -v):
                for u in range(-ubound, ubound + 1):
                    _, rem = divmod_exact(f, [sv, u, e])
                    if not rem:
                        return False
    return True
