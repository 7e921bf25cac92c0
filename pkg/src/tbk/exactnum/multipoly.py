"""Sparse multivariate polynomials over the integers.

Terms are stored as a dict mapping exponent tuples to nonzero integer
coefficients.  The variable order is fixed globally as (L, M, u); any
other variable names sort after these, alphabetically.  All values are
immutable after construction, so they can be shared freely between
threads.
"""

from __future__ import annotations

from math import gcd as int_gcd

#: canonical global variable order (L, M, u), then everything else by name
_VAR_RANK = {"L": 0, "M": 1, "u": 2}


def _var_key(name: str):
    return (_VAR_RANK.get(name, len(_VAR_RANK)), name)


def merge_variables(a, b):
    """Union of two variable tuples in canonical order."""
    if a == b:
        return a
    return tuple(sorted(set(a) | set(b), key=_var_key))


class ExactDivisionError(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


class MultiPoly:
    __slots__ = ("variables", "terms")

    def __init__(self, variables=(), terms=None):
        variables = tuple(variables)
        clean = {}
        if terms:
            n = len(variables)
            for exps, coeff in terms.items():
                if coeff == 0:
                    continue
                exps = tuple(exps)
                if len(exps) != n:
                    raise ValueError(
                        f"exponent tuple {exps} does not match variables {variables}"
                    )
                clean[exps] = clean.get(exps, 0) + coeff
                if clean[exps] == 0:
                    del clean[exps]
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *args):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, c, variables=()):
        variables = tuple(variables)
        if c == 0:
            return cls(variables, {})
        return cls(variables, {(0,) * len(variables): int(c)})

    @classmethod
    def variable(cls, name):
        return cls((name,), {(1,): 1})

    @classmethod
    def monomial(cls, coeff, variables, exponents):
        return cls(tuple(variables), {tuple(exponents): int(coeff)})

    # -- basic queries -----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(all(e == 0 for e in k) for k in self.terms)

    def constant_value(self):
        if self.is_zero():
            return 0
        [(exps, coeff)] = self.terms.items()
        if any(exps):
            raise ValueError(f"{self} is not a constant")
        return coeff

    def degree(self, var):
        """Degree in one variable; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if var not in self.variables:
            return 0
        i = self.variables.index(var)
        return max(k[i] for k in self.terms)

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(k) for k in self.terms)

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    # -- canonical form / equality ----------------------------------------

    def drop_unused(self):
        """Remove variables that never appear with positive exponent."""
        if not self.terms:
            return MultiPoly((), {})
        used = [i for i, _ in enumerate(self.variables)
                if any(k[i] for k in self.terms)]
        if len(used) == len(self.variables):
            return self
        newvars = tuple(self.variables[i] for i in used)
        newterms = {tuple(k[i] for i in used): c for k, c in self.terms.items()}
        return MultiPoly(newvars, newterms)

    def in_variables(self, variables):
        """Re-embed into a larger variable tuple (canonical order)."""
        variables = tuple(variables)
        if variables == self.variables:
            return self
        idx = []
        for v in self.variables:
            if v not in variables and self.degree(v) > 0:
                raise ValueError(f"cannot drop variable {v!r} still in use")
            idx.append(variables.index(v) if v in variables else None)
        n = len(variables)
        newterms = {}
        for k, c in self.terms.items():
            exps = [0] * n
            for e, j in zip(k, idx):
                if j is not None:
                    exps[j] = e
            newterms[tuple(exps)] = newterms.get(tuple(exps), 0) + c
        return MultiPoly(variables, newterms)

    def _aligned(self, other):
        if isinstance(other, int):
            other = MultiPoly.constant(other, self.variables)
        if self.variables == other.variables:
            return self, other
        common = merge_variables(self.variables, other.variables)
        return self.in_variables(common), other.in_variables(common)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.drop_unused().terms == MultiPoly.constant(other).terms
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self._aligned(other)
        return a.terms == b.terms

    def __hash__(self):
        c = self.drop_unused()
        return hash((c.variables, frozenset(c.terms.items())))

    # -- arithmetic --------------------------------------------------------

    def __neg__(self):
        return MultiPoly(self.variables, {k: -c for k, c in self.terms.items()})

    def __add__(self, other):
        a, b = self._aligned(other)
        terms = dict(a.terms)
        for k, c in b.terms.items():
            s = terms.get(k, 0) + c
            if s:
                terms[k] = s
            elif k in terms:
                del terms[k]
        return MultiPoly(a.variables, terms)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = MultiPoly.constant(other, self.variables)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return MultiPoly(self.variables, {})
            return MultiPoly(self.variables,
                             {k: c * other for k, c in self.terms.items()})
        a, b = self._aligned(other)
        if len(a.terms) < len(b.terms):
            a, b = b, a
        terms = {}
        get = terms.get
        for kb, cb in b.terms.items():
            for ka, ca in a.terms.items():
                k = tuple(x + y for x, y in zip(ka, kb))
                s = get(k, 0) + ca * cb
                if s:
                    terms[k] = s
                elif k in terms:
                    del terms[k]
        return MultiPoly(a.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.constant(1, self.variables)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- structure ---------------------------------------------------------

    def coefficients_in(self, var):
        """Coefficient list [c0, c1, ...] of powers of var.

        Coefficients are polynomials in the remaining variables.  The zero
        polynomial yields [].
        """
        if not self.terms:
            return []
        if var not in self.variables:
            return [self]
        i = self.variables.index(var)
        rest = self.variables[:i] + self.variables[i + 1:]
        deg = max(k[i] for k in self.terms)
        buckets = [dict() for _ in range(deg + 1)]
        for k, c in self.terms.items():
            kk = k[:i] + k[i + 1:]
            buckets[k[i]][kk] = buckets[k[i]].get(kk, 0) + c
        return [MultiPoly(rest, b) for b in buckets]

    @classmethod
    def from_coefficients(cls, var, coeffs):
        """Inverse of coefficients_in: assemble sum(coeffs[i] * var**i)."""
        allvars = (var,)
        for c in coeffs:
            if isinstance(c, MultiPoly):
                allvars = merge_variables(allvars, c.variables)
        i = allvars.index(var)
        terms = {}
        for e, c in enumerate(coeffs):
            if isinstance(c, int):
                c = MultiPoly.constant(c)
            c = c.in_variables(tuple(v for v in allvars if v != var))
            for k, coeff in c.terms.items():
                kk = k[:i] + (e,) + k[i:]
                terms[kk] = terms.get(kk, 0) + coeff
        return cls(allvars, terms)

    def substitute_int(self, var, value):
        """Substitute an integer for one variable, exactly."""
        if var not in self.variables:
            return self
        i = self.variables.index(var)
        rest = self.variables[:i] + self.variables[i + 1:]
        terms = {}
        for k, c in self.terms.items():
            kk = k[:i] + k[i + 1:]
            s = terms.get(kk, 0) + c * value ** k[i]
            if s:
                terms[kk] = s
            elif kk in terms:
                del terms[kk]
        return MultiPoly(rest, terms)

    def evaluate(self, assignment):
        """Fully evaluate at numeric values (Fraction, float or complex)."""
        missing = [v for v in self.variables if v not in assignment]
        if missing:
            raise ValueError(f"missing values for {missing}")
        vals = [assignment[v] for v in self.variables]
        total = 0
        for k, c in self.terms.items():
            t = c
            for x, e in zip(vals, k):
                if e:
                    t = t * x ** e
            total += t
        return total

    def derivative(self, var):
        if var not in self.variables:
            return MultiPoly(self.variables, {})
        i = self.variables.index(var)
        terms = {}
        for k, c in self.terms.items():
            if k[i] == 0:
                continue
            kk = k[:i] + (k[i] - 1,) + k[i + 1:]
            terms[kk] = terms.get(kk, 0) + c * k[i]
        return MultiPoly(self.variables, terms)

    # -- content and division ----------------------------------------------

    def content(self):
        """Nonnegative gcd of the integer coefficients (0 for the zero poly)."""
        g = 0
        for c in self.terms.values():
            g = int_gcd(g, abs(c))
            if g == 1:
                break
        return g

    def primitive_part(self):
        g = self.content()
        if g <= 1:
            return self
        return MultiPoly(self.variables, {k: c // g for k, c in self.terms.items()})

    def monomial_content(self):
        """Componentwise minimum exponent vector over all terms."""
        if not self.terms:
            return (0,) * len(self.variables)
        mins = None
        for k in self.terms:
            mins = k if mins is None else tuple(map(min, mins, k))
        return mins

    def strip_monomial(self):
        """Divide out the largest common monomial factor."""
        mins = self.monomial_content()
        if not any(mins):
            return self
        terms = {tuple(e - m for e, m in zip(k, mins)): c
                 for k, c in self.terms.items()}
        return MultiPoly(self.variables, terms)

    def _lex_leading(self):
        """(exponents, coefficient) of the lex-largest term."""
        k = max(self.terms)
        return k, self.terms[k]

    def sign_normalized(self):
        """Flip sign so the lex-leading coefficient is positive."""
        if not self.terms:
            return self
        _, c = self._lex_leading()
        return -self if c < 0 else self

    def exact_div(self, divisor):
        """Exact division; raises ExactDivisionError on a nonzero remainder."""
        if isinstance(divisor, int):
            if divisor == 0:
                raise ZeroDivisionError("polynomial division by zero")
            terms = {}
            for k, c in self.terms.items():
                q, r = divmod(c, divisor)
                if r:
                    raise ExactDivisionError(f"coefficient {c} not divisible by {divisor}")
                terms[k] = q
            return MultiPoly(self.variables, terms)
        a, b = self._aligned(divisor)
        if b.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if a.is_zero():
            return a
        quot = {}
        rem = dict(a.terms)
        lead_b, lc_b = b._lex_leading()
        while rem:
            lead_r = max(rem)
            lc_r = rem[lead_r]
            k = tuple(er - eb for er, eb in zip(lead_r, lead_b))
            if any(e < 0 for e in k):
                raise ExactDivisionError("division is not exact")
            q, r = divmod(lc_r, lc_b)
            if r:
                raise ExactDivisionError("division is not exact")
            quot[k] = quot.get(k, 0) + q
            for kb, cb in b.terms.items():
                kk = tuple(x + y for x, y in zip(k, kb))
                s = rem.get(kk, 0) - q * cb
                if s:
                    rem[kk] = s
                elif kk in rem:
                    del rem[kk]
        return MultiPoly(a.variables, quot)

    def divides(self, other):
        try:
            other.exact_div(self)
            return True
        except (ExactDivisionError, ZeroDivisionError):
            return False

    # -- display -----------------------------------------------------------

    def sorted_terms(self):
        """Terms sorted lexicographically by exponent tuple."""
        return sorted(self.terms.items())

    def __repr__(self):
        return f"MultiPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, c in sorted(self.terms.items(), reverse=True):
            factors = []
            for v, e in zip(self.variables, k):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            if not factors:
                parts.append(f"{c:+d}")
            elif abs(c) == 1:
                parts.append(("+" if c > 0 else "-") + "*".join(factors))
            else:
                parts.append(f"{c:+d}*" + "*".join(factors))
        s = " ".join(parts)
        return s[1:] if s.startswith("+") else s


# -- gcd and squarefree machinery -------------------------------------------


def _coeff_gcd(polys):
    """gcd of a list of polynomials (recursive poly_gcd fold)."""
    g = None
    for p in polys:
        if p.is_zero():
            continue
        g = p.sign_normalized() if g is None else poly_gcd(g, p)
        if g.is_constant() and abs(g.constant_value()) == 1:
            break
    if g is None:
        return MultiPoly.constant(0)
    return g.sign_normalized()


def _prem_lists(f, g, mul, sub):
    """Pseudo-remainder on coefficient lists: lc(g)^(df-dg+1) * f mod g."""
    df, dg = len(f) - 1, len(g) - 1
    if df < dg:
        return list(f)
    r = list(f)
    lc_g = g[-1]
    n = df - dg + 1
    dr = df
    while dr >= dg and any(not _is_zero_c(c) for c in r):
        lc_r = r[dr]
        n -= 1
        r = [mul(c, lc_g) for c in r]
        for i, gc in enumerate(g):
            r[dr - dg + i] = sub(r[dr - dg + i], mul(lc_r, gc))
        r = _trim(r)
        dr = len(r) - 1
    for _ in range(max(n, 0)):
        r = [mul(c, lc_g) for c in r]
    return _trim(r)


def _is_zero_c(c):
    return (c == 0) if isinstance(c, int) else c.is_zero()


def _trim(coeffs):
    while coeffs and _is_zero_c(coeffs[-1]):
        coeffs.pop()
    return coeffs


def poly_prem(f, g, var):
    """Pseudo-remainder of f by g with respect to var."""
    fc = f.coefficients_in(var)
    gc = g.coefficients_in(var)
    if not gc:
        raise ZeroDivisionError("pseudo-division by zero")
    r = _prem_lists(fc, gc, lambda a, b: a * b, lambda a, b: a - b)
    return MultiPoly.from_coefficients(var, r) if r else MultiPoly.constant(0)


def _primitive_in(f, var):
    """Remove the content of f viewed as a polynomial in var."""
    coeffs = f.coefficients_in(var)
    cont = _coeff_gcd(coeffs)
    if cont.is_zero() or (cont.is_constant() and abs(cont.constant_value()) == 1):
        return f.primitive_part()
    return f.exact_div(cont.in_variables(f.variables)).primitive_part()


def poly_gcd(f, g):
    """gcd in Z[variables], normalized with positive lex-leading coefficient."""
    if f.is_zero():
        return g.sign_normalized()
    if g.is_zero():
        return f.sign_normalized()
    a, b = f._aligned(g)
    if a.is_constant() and b.is_constant():
        return MultiPoly.constant(int_gcd(abs(a.constant_value()),
                                          abs(b.constant_value())))
    main = None
    for v in a.variables:
        if a.degree(v) > 0 or b.degree(v) > 0:
            main = v
            break
    if main is None:  # both constants in disguise
        return MultiPoly.constant(int_gcd(abs(a.constant_value()),
                                          abs(b.constant_value())))
    ac = a.coefficients_in(main)
    bc = b.coefficients_in(main)
    cont_a = _coeff_gcd(ac)
    cont_b = _coeff_gcd(bc)
    cont = poly_gcd(cont_a, cont_b)
    pa = a.exact_div(cont_a.in_variables(a.variables)) if cont_a != 1 else a
    pb = b.exact_div(cont_b.in_variables(b.variables)) if cont_b != 1 else b
    if pa.degree(main) < pb.degree(main):
        pa, pb = pb, pa
    # primitive PRS in the main variable
    while True:
        if pb.is_zero():
            result = _primitive_in(pa, main)
            break
        if pb.degree(main) == 0:
            result = MultiPoly.constant(1, a.variables)
            break
        r = poly_prem(pa, pb, main)
        pa, pb = pb, (_primitive_in(r, main) if not r.is_zero() else r)
    return (cont * result).sign_normalized()


def poly_content_in(f, var):
    """Content of f viewed as a polynomial in var (gcd of the coefficients)."""
    return _coeff_gcd(f.coefficients_in(var))


def poly_content(f):
    """Integer content of f as a constant polynomial."""
    if f.is_zero():
        raise ValueError("content of the zero polynomial")
    return MultiPoly.constant(f.content())


def poly_primitive_part(f):
    if f.is_zero():
        raise ValueError("primitive part of the zero polynomial")
    return f.primitive_part()


def poly_squarefree_part(f):
    """Product of the distinct irreducible factors of f (primitive, lex-positive).

    Computed by dividing out gcd(f, df/dv over every variable), which removes
    every repeated factor in characteristic zero.
    """
    if f.is_zero():
        raise ValueError("squarefree part of the zero polynomial")
    g = f
    for v in f.variables:
        if f.degree(v) > 0:
            g = poly_gcd(g, f.derivative(v))
    if g.is_constant():
        return f.primitive_part().sign_normalized()
    return f.exact_div(g.in_variables(f.variables)).primitive_part().sign_normalized()


def poly_cleanup(f, mode):
    """Normalization modes used on elimination output."""
    if f.is_zero():
        raise ValueError("poly_cleanup of the zero polynomial")
    if mode == "content":
        return poly_content(f)
    if mode == "primitive_part":
        return poly_primitive_part(f)
    if mode == "squarefree_part":
        return poly_squarefree_part(f)
    raise ValueError(f"unknown cleanup mode {mode!r}")
