"""Resultants of multivariate integer polynomials with respect to one variable.

Two independent exact engines are provided:

* ``subresultant`` -- Brown's subresultant polynomial remainder sequence,
  the default (all coefficient-ring divisions are exact).
* ``sylvester``    -- determinant of the Sylvester matrix by Bareiss
  fraction-free elimination.

Both return the classically signed resultant and must agree exactly; the
test suite checks this on random inputs.
"""

from __future__ import annotations

import operator

from .multipoly import MultiPoly, _prem_lists


def _one_like(c):
    return 1 if isinstance(c, int) else MultiPoly.constant(1, c.variables)


def _exact_quo(a, b):
    if isinstance(a, int):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError(f"inexact division {a} / {b}")
        return q
    return a.exact_div(b)


def _inner_subresultants(f, g):
    """Brown's subresultant PRS on ascending coefficient lists.

    Requires deg f >= deg g >= 0, both nonzero.  Returns (prs, scalars);
    the resultant of (f, g) is scalars[-1] when deg(prs[-1]) == 0.
    """
    mul, sub = operator.mul, operator.sub
    one = _one_like(f[-1])

    n, m = len(f) - 1, len(g) - 1
    prs = [list(f), list(g)]
    d = n - m

    b = one if (d + 1) % 2 == 0 else -one
    h = _prem_lists(f, g, mul, sub)
    h = [mul(x, b) for x in h]

    lc = g[-1]
    c = lc ** d if d else one
    scalars = [one, c]
    c = -c

    while h:
        k = len(h) - 1
        prs.append(list(h))
        f, g, m, d = g, h, k, m - k

        b = mul(-lc, c ** d if d else one)
        h = _prem_lists(f, g, mul, sub)
        h = [_exact_quo(x, b) for x in h]

        lc = g[-1]
        if d > 1:
            c = _exact_quo((-lc) ** d, c ** (d - 1))
        else:
            c = -lc
        scalars.append(-c)

    return prs, scalars


def _resultant_lists_prs(fc, gc):
    """Signed resultant of ascending coefficient lists via subresultant PRS."""
    if not fc or not gc:
        return 0 if isinstance((fc or gc)[-1], int) else MultiPoly.constant(0)
    one = _one_like(fc[-1])
    zero = one - one
    n, m = len(fc) - 1, len(gc) - 1
    swap_sign = 1
    if n < m:
        fc, gc = gc, fc
        n, m = m, n
        if n % 2 and m % 2:
            swap_sign = -1
    if m == 0:
        res = gc[0] ** n if n else one
        return res if swap_sign == 1 else -res
    prs, scalars = _inner_subresultants(fc, gc)
    if len(prs[-1]) - 1 > 0:
        return zero
    res = scalars[-1]
    return res if swap_sign == 1 else -res


def _sylvester_matrix(fc, gc):
    """Sylvester matrix rows (descending coefficients), as nested lists."""
    n, m = len(fc) - 1, len(gc) - 1
    size = n + m
    fdesc = list(reversed(fc))
    gdesc = list(reversed(gc))
    zero = fdesc[0] - fdesc[0] if not isinstance(fdesc[0], int) else 0
    rows = []
    for i in range(m):
        rows.append([zero] * i + fdesc + [zero] * (size - n - 1 - i))
    for i in range(n):
        rows.append([zero] * i + gdesc + [zero] * (size - m - 1 - i))
    return rows


def bareiss_determinant(rows):
    """Fraction-free determinant of a square matrix over an integral domain."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    one = _one_like(a[0][0])
    zero = one - one
    sign = 1
    prev = one
    for k in range(n - 1):
        if _is_zero(a[k][k]):
            pivot = next((i for i in range(k + 1, n) if not _is_zero(a[i][k])), None)
            if pivot is None:
                return zero
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = _exact_quo(num, prev)
            a[i][k] = zero
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign == 1 else -det


def _is_zero(c):
    return (c == 0) if isinstance(c, int) else c.is_zero()


def _resultant_lists_sylvester(fc, gc):
    if not fc or not gc:
        return 0 if isinstance((fc or gc)[-1], int) else MultiPoly.constant(0)
    one = _one_like(fc[-1])
    n, m = len(fc) - 1, len(gc) - 1
    if n == 0 and m == 0:
        return one
    if m == 0:
        return gc[0] ** n
    if n == 0:
        res = fc[0] ** m
        return res
    return bareiss_determinant(_sylvester_matrix(fc, gc))


def poly_resultant(f, g, var, engine="subresultant"):
    """Resultant of f and g with respect to ``var``.

    The result is a polynomial in the remaining variables; it vanishes
    exactly when f and g share a common factor involving ``var``.  Raises
    ValueError when ``var`` occurs in neither input.
    """
    df, dg = f.degree(var), g.degree(var)
    if df <= 0 and dg <= 0:
        raise ValueError(f"variable {var!r} absent from both resultant inputs")
    if f.is_zero() or g.is_zero():
        vars_ = tuple(v for v in f._aligned(g)[0].variables if v != var)
        return MultiPoly.constant(0, vars_)
    fa, ga = f._aligned(g)
    fc = fa.coefficients_in(var)
    gc = ga.coefficients_in(var)
    if engine == "subresultant":
        res = _resultant_lists_prs(fc, gc)
    elif engine == "sylvester":
        res = _resultant_lists_sylvester(fc, gc)
    else:
        raise ValueError(f"unknown resultant engine {engine!r}")
    if isinstance(res, int):
        res = MultiPoly.constant(res)
    return res
