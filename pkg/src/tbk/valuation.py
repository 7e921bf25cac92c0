"""Order-of-vanishing valuations and tree-action diagnostics.

The working field is the rational functions in one parameter t over Q,
with the valuation ord = order of vanishing at t = 0 (negative for
poles, +infinity for 0).  A determinant-one 2x2 matrix over this field
fixes a vertex of the associated tree exactly when ord(trace) >= 0; an
element with ord(trace) < 0 certifies a nontrivial action.
"""

from __future__ import annotations

import ast
import math
from dataclasses import dataclass
from fractions import Fraction

from .slopes import Slope

INFINITE_ORDER = math.inf


class QPoly:
    """Univariate polynomial over Fraction, ascending coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("QPoly is immutable")

    @classmethod
    def const(cls, c):
        return cls((Fraction(c),))

    @classmethod
    def t(cls):
        return cls((0, 1))

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        return len(self.coeffs) - 1

    def valuation(self):
        """Index of the lowest nonzero coefficient; inf for 0."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return INFINITE_ORDER

    def __eq__(self, other):
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    def __neg__(self):
        return QPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QPoly([c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return QPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        div = other.coeffs
        dq = len(rem) - len(div)
        if dq < 0:
            return QPoly(), self
        quot = [Fraction(0)] * (dq + 1)
        lc = div[-1]
        for k in range(dq, -1, -1):
            c = rem[k + len(div) - 1] / lc
            quot[k] = c
            if c:
                for i, d in enumerate(div):
                    rem[k + i] -= c * d
        return QPoly(quot), QPoly(rem)

    def monic(self):
        if self.is_zero():
            return self
        lc = self.coeffs[-1]
        return QPoly([c / lc for c in self.coeffs])

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*t" if abs(c) != 1 else ("t" if c > 0 else "-t"))
            else:
                parts.append(f"{c}*t^{i}" if abs(c) != 1 else
                             (f"t^{i}" if c > 0 else f"-t^{i}"))
        return " + ".join(parts).replace("+ -", "- ")


def _qpoly_gcd(a: QPoly, b: QPoly) -> QPoly:
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic() if not a.is_zero() else a


class RatFunc:
    """Rational function num/den over Q(t), stored in lowest terms with a
    monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, (int, Fraction)):
            num = QPoly.const(num)
        if den is None:
            den = QPoly.const(1)
        elif isinstance(den, (int, Fraction)):
            den = QPoly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = QPoly(), QPoly.const(1)
        else:
            g = _qpoly_gcd(num, den)
            if g.degree() > 0:
                num = num.divmod(g)[0]
                den = den.divmod(g)[0]
            lc = den.coeffs[-1]
            if lc != 1:
                num = num * (1 / lc)
                den = den * (1 / lc)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("RatFunc is immutable")

    @classmethod
    def t(cls):
        return cls(QPoly.t())

    def is_zero(self):
        return self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc(other)
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc(other)
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RatFunc(other) / self

    def __pow__(self, n):
        if n < 0:
            return RatFunc(1) / self ** (-n)
        out = RatFunc(1)
        for _ in range(n):
            out = out * self
        return out

    def __str__(self):
        if self.den == QPoly.const(1):
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatFunc({self})"


#: The element named in diagnostics: a rational function valued by its
#: order of vanishing at t = 0.
ValuedElement = RatFunc


def ord_at_zero(f: RatFunc):
    """Order of vanishing at t = 0; +inf for the zero function."""
    if f.is_zero():
        return INFINITE_ORDER
    return f.num.valuation() - f.den.valuation()


class Mat2:
    """2x2 determinant-one matrix over the rational function field."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d, check_det=True):
        conv = lambda x: x if isinstance(x, RatFunc) else RatFunc(x)
        a, b, c, d = conv(a), conv(b), conv(c), conv(d)
        if check_det and a * d - b * c != RatFunc(1):
            raise ValueError("matrix determinant is not 1")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    def __setattr__(self, *x):
        raise AttributeError("Mat2 is immutable")

    @classmethod
    def identity(cls):
        return cls(1, 0, 0, 1)

    def __mul__(self, o):
        return Mat2(self.a * o.a + self.b * o.c, self.a * o.b + self.b * o.d,
                    self.c * o.a + self.d * o.c, self.c * o.b + self.d * o.d,
                    check_det=False)

    def inverse(self):
        return Mat2(self.d, -self.b, -self.c, self.a, check_det=False)

    def trace(self) -> RatFunc:
        return self.a + self.d

    def det(self) -> RatFunc:
        return self.a * self.d - self.b * self.c

    def __eq__(self, o):
        return (self.a, self.b, self.c, self.d) == (o.a, o.b, o.c, o.d)

    def __repr__(self):
        return f"Mat2([[{self.a}, {self.b}], [{self.c}, {self.d}]])"


def fixes_vertex(matrix: Mat2) -> bool:
    """True when the matrix fixes a vertex of the tree: ord(trace) >= 0."""
    return ord_at_zero(matrix.trace()) >= 0


def translation_length(matrix: Mat2) -> int:
    """max(0, -2*ord(trace)): the distance the matrix shifts its axis."""
    o = ord_at_zero(matrix.trace())
    if o is INFINITE_ORDER or o >= 0:
        return 0
    return -2 * int(o)


def nontriviality_certificate(gens, depth=3):
    """Shortest product of generators with negative trace valuation.

    Searches words in the generators (no inverses) breadth-first up to the
    given length and returns the witnessing index tuple, or None.
    """
    frontier = [((), Mat2.identity())]
    for _ in range(depth):
        nxt = []
        for word, mat in frontier:
            for i, g in enumerate(gens):
                w, m = word + (i,), mat * g
                if ord_at_zero(m.trace()) < 0:
                    return w
                nxt.append((w, m))
        frontier = nxt
    return None


@dataclass(frozen=True)
class Strict:
    """The point detects surfaces of a single boundary slope."""

    slope: Slope


@dataclass(frozen=True)
class Weak:
    """Every peripheral trace is finite: a closed surface is detected."""


def classify_detection(v_meridian: int, v_longitude: int):
    """Strict/weak classification from eigenvalue valuations.

    (0, 0) is weak; otherwise the detected slope is the primitive (p, q)
    with p*vM + q*vL = 0, i.e. -vL/vM, with 1/0 when vM = 0.
    """
    if v_meridian == 0 and v_longitude == 0:
        return Weak()
    if v_meridian == 0:
        return Strict(Slope.INFINITY)
    g = math.gcd(abs(v_meridian), abs(v_longitude))
    return Strict(Slope(-v_longitude // g, v_meridian // g))


# -- text form of matrix entries --------------------------------------------

_ALLOWED = (ast.Expression, ast.BinOp, ast.UnaryOp, ast.Constant, ast.Name,
            ast.Add, ast.Sub, ast.Mult, ast.Div, ast.Pow, ast.USub, ast.UAdd)


def parse_ratfunc(text: str) -> RatFunc:
    """Parse entries such as ``t^2/(1+t)``, ``3`` or ``1/t``."""
    src = text.replace("^", "**").strip()
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"malformed rational function {text!r}") from exc

    def ev(node):
        if not isinstance(node, _ALLOWED):
            raise ValueError(f"unsupported syntax in {text!r}")
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant):
            if not isinstance(node.value, int):
                raise ValueError(f"only integer constants allowed in {text!r}")
            return RatFunc(node.value)
        if isinstance(node, ast.Name):
            if node.id != "t":
                raise ValueError(f"unknown symbol {node.id!r} in {text!r}")
            return RatFunc.t()
        if isinstance(node, ast.UnaryOp):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            lhs, rhs = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return lhs + rhs
            if isinstance(node.op, ast.Sub):
                return lhs - rhs
            if isinstance(node.op, ast.Mult):
                return lhs * rhs
            if isinstance(node.op, ast.Div):
                return lhs / rhs
            if isinstance(node.op, ast.Pow):
                if not (isinstance(node.right, ast.Constant)
                        and isinstance(node.right.value, int)):
                    raise ValueError(f"exponent must be an integer in {text!r}")
                return lhs ** node.right.value
        raise ValueError(f"unsupported syntax in {text!r}")

    return ev(tree)


def parse_matrix_line(line: str) -> Mat2:
    """Parse ``a11 ; a12 ; a21 ; a22`` into a determinant-one matrix."""
    fields = [f for f in line.split(";")]
    if len(fields) != 4:
        raise ValueError(f"expected 4 ';'-separated entries, got {line!r}")
    return Mat2(*[parse_ratfunc(f) for f in fields])
