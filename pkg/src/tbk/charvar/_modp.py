"""GF(p) univariate polynomial helpers for the modular elimination engine.

Polynomials are plain lists of ints (ascending powers, trimmed).  Primes
are around 2^61 so products fit comfortably in Python ints.
"""

from __future__ import annotations

from fractions import Fraction


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic for n < 3.3e24 with these bases
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_stream(start=(1 << 61) + 1):
    n = start | 1
    while True:
        if is_prime(n):
            yield n
        n += 2


def ptrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def padd(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return ptrim(out)


def psub(a, b, p):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return ptrim(out)


def pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return ptrim([c % p for c in out])


def pscale(a, c, p):
    c %= p
    return ptrim([x * c % p for x in a])


def pdivmod(a, b, p):
    if not b:
        raise ZeroDivisionError("GF(p)[x] division by zero")
    a = list(a)
    db, da = len(b) - 1, len(a) - 1
    if da < db:
        return [], ptrim(a)
    inv = pow(b[-1], p - 2, p)
    q = [0] * (da - db + 1)
    for k in range(da - db, -1, -1):
        c = a[k + db] * inv % p
        if c:
            q[k] = c
            for i, d in enumerate(b):
                a[k + i] = (a[k + i] - c * d) % p
    return ptrim(q), ptrim(a)


def pgcd_monic(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, pdivmod(a, b, p)[1]
    if a:
        a = pscale(a, pow(a[-1], p - 2, p), p)
    return a


def pderiv(a, p):
    return ptrim([i * c % p for i, c in enumerate(a)][1:])


def squarefree_monic(a, p):
    """Monic squarefree part a / gcd(a, a')."""
    if not a:
        return []
    g = pgcd_monic(a, pderiv(a, p), p)
    if len(g) > 1:
        a = pdivmod(a, g, p)[0]
    return pscale(a, pow(a[-1], p - 2, p), p)


def peval(a, x, p):
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def resultant_scalar(f, g, p):
    """Resultant of two GF(p)[x] polynomials, classically signed."""
    if not f or not g:
        return 0
    res = 1
    while True:
        df, dg = len(f) - 1, len(g) - 1
        if dg == 0:
            return res * pow(g[0], df, p) % p
        r = pdivmod(f, g, p)[1]
        if not r:
            return 0
        dr = len(r) - 1
        if df * dg % 2:
            res = -res % p
        res = res * pow(g[-1], df - dr, p) % p
        f, g = g, r


def newton_interp(xs, ys, p):
    """Interpolating polynomial through (xs, ys) over GF(p)."""
    n = len(xs)
    coeffs = list(ys)
    for k in range(1, n):
        for i in range(n - 1, k - 1, -1):
            inv = pow((xs[i] - xs[i - k]) % p, p - 2, p)
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) * inv % p
    # expand Newton form
    poly = []
    for k in range(n - 1, -1, -1):
        poly = padd(pmul(poly, [(-xs[k]) % p, 1], p), [coeffs[k]], p)
    return poly


def cauchy_interpolate(xs, ys, d_num, d_den, p):
    """Rational function num/den with num(x_i) = y_i * den(x_i).

    Degrees bounded by (d_num, d_den).  Returns (num, den) with den
    monic, or None when no such function fits.  Extended Euclid on
    (prod(x - x_i), interpolant), stopped at the degree threshold.
    """
    if len(xs) < d_num + d_den + 2:
        return None
    modulus = [1]
    for x in xs:
        modulus = pmul(modulus, [(-x) % p, 1], p)
    interp = newton_interp(xs, ys, p)

    r0, r1 = modulus, interp
    t0, t1 = [], [1]
    while r1 and len(r1) - 1 > d_num:
        q, r = pdivmod(r0, r1, p)
        r0, r1 = r1, r
        t0, t1 = t1, psub(t0, pmul(q, t1, p), p)
    num, den = r1, t1
    if not den or len(den) - 1 > d_den:
        return None
    g = pgcd_monic(num, den, p) if num else []
    if len(g) > 1:
        num = pdivmod(num, g, p)[0]
        den = pdivmod(den, g, p)[0]
    inv = pow(den[-1], p - 2, p)
    num, den = pscale(num, inv, p), pscale(den, inv, p)
    for x, y in zip(xs, ys):
        dv = peval(den, x, p)
        if dv == 0 or (peval(num, x, p) - y * dv) % p:
            return None
    return num, den


def plcm(a, b, p):
    g = pgcd_monic(a, b, p)
    q = pdivmod(a, g, p)[0] if len(g) > 1 else list(a)
    out = pmul(q, b, p)
    if out:
        out = pscale(out, pow(out[-1], p - 2, p), p)
    return out


def crt_pair(r1, m1, r2, m2):
    """Combine residues r1 mod m1 and r2 mod m2 (coprime moduli)."""
    inv = pow(m1 % m2, m2 - 2, m2) if is_prime(m2) else pow(m1, -1, m2)
    t = (r2 - r1) % m2 * inv % m2
    return r1 + m1 * t, m1 * m2


def rational_reconstruct(r, m):
    """Fraction n/d with n^2, d^2 <= m/2 congruent to r mod m, or None."""
    r %= m
    a0, a1 = m, r
    b0, b1 = 0, 1
    bound = m // 2
    while a1 * a1 > bound:
        q = a0 // a1
        a0, a1 = a1, a0 - q * a1
        b0, b1 = b1, b0 - q * b1
    if a1 == 0 or b1 == 0 or b1 * b1 > bound:
        return None
    from math import gcd
    if gcd(abs(a1), abs(b1)) != 1:
        return None
    if b1 < 0:
        a1, b1 = -a1, -b1
    return Fraction(a1, b1)
