"""Continued fractions with signed integer entries.

A fraction p/q is written r + [a1, a2, ..., as] for the nested form

    r + 1/(a1 + 1/(a2 + ... + 1/as)).

Expansions with every |ai| >= 2 are called admissible; those are the ones
that carry branched surfaces, and for a fixed p/q (taken mod Z, with q odd)
there are finitely many of them.  This module evaluates, negates and
composes expansions, and enumerates the complete admissible set.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction


class InvalidFractionError(ValueError):
    """Input fraction is not a reduced p/q with q odd and 0 < p < q."""


class ZeroDenominatorError(ZeroDivisionError):
    """A partial denominator vanished while evaluating an expansion."""


@dataclass(frozen=True)
class ContinuedFraction:
    """Signed-entry continued fraction r + [a1, ..., as]."""

    entries: tuple
    integer_part: int = 0

    def __post_init__(self):
        entries = tuple(int(a) for a in self.entries)
        if any(a == 0 for a in entries):
            raise ValueError("continued fraction entries must be nonzero")
        object.__setattr__(self, "entries", entries)

    @property
    def admissible(self) -> bool:
        return all(abs(a) >= 2 for a in self.entries)

    def __len__(self):
        return len(self.entries)

    def __str__(self):
        body = "[" + ",".join(str(a) for a in self.entries) + "]"
        if self.integer_part:
            return f"{self.integer_part}+{body}"
        return body

    def __repr__(self):
        return f"ContinuedFraction({self})"


def evaluate(cf: ContinuedFraction) -> Fraction:
    """Exact value of r + [a1, ..., as]; [] evaluates to r alone."""
    x = Fraction(0)
    for a in reversed(cf.entries):
        if a + x == 0:
            raise ZeroDenominatorError(f"zero partial denominator in {cf}")
        x = 1 / (a + x)
    return cf.integer_part + x


def evaluate_entries(entries) -> Fraction:
    return evaluate(ContinuedFraction(tuple(entries)))


def evaluate_with_tail(entries, x: Fraction) -> Fraction:
    """Value of [a1, ..., ak, x] with a rational x as the final entry."""
    if x == 0:
        raise ZeroDenominatorError("tail entry x must be nonzero")
    t = Fraction(1, 1) / x
    for a in reversed(tuple(entries)):
        if a + t == 0:
            raise ZeroDenominatorError("zero partial denominator")
        t = 1 / (a + t)
    return t


def negate(cf: ContinuedFraction) -> ContinuedFraction:
    """[a1,...,as] = -[-a1,...,-as]; negates the integer part too."""
    return ContinuedFraction(tuple(-a for a in cf.entries), -cf.integer_part)


def expand_repetition(pattern, k: int) -> list:
    """Pattern repeated k times; k = 0 gives []."""
    if k < 0:
        raise ValueError("repetition count must be >= 0")
    return list(pattern) * k


def _check_fraction(p_over_q: Fraction) -> Fraction:
    p_over_q = Fraction(p_over_q)
    p, q = p_over_q.numerator, p_over_q.denominator
    if q % 2 == 0:
        raise InvalidFractionError(f"{p_over_q}: denominator must be odd")
    if not (0 < p < q):
        raise InvalidFractionError(f"{p_over_q}: need 0 < p < q")
    return p_over_q


def _representatives(p_over_q: Fraction):
    """The two representatives of p/q mod Z inside (-1, 1)."""
    return (p_over_q, p_over_q - 1)


def _admissible_tails(x: Fraction):
    """All admissible entry lists whose value is exactly x in (-1,1)\\{0}.

    The head entry a of [a, tail] satisfies a = 1/x - value(tail) with
    |value(tail)| < 1, so a lies in the open interval (1/x - 1, 1/x + 1);
    recursion is on the leftover 1/x - a, whose denominator strictly
    decreases.
    """
    c = 1 / x
    lo = math.floor(c - 1) + 1
    hi = math.ceil(c + 1) - 1
    found = []
    for a in range(lo, hi + 1):
        if abs(a) < 2:
            continue
        t = c - a
        if t == 0:
            found.append((a,))
        elif abs(t) < 1:
            for tail in _admissible_tails(t):
                found.append((a,) + tail)
    return found


def enumerate_admissible(p_over_q: Fraction) -> list:
    """Every admissible expansion whose value is p/q mod Z.

    Both representatives of p/q in (-1, 1) are expanded; results are sorted
    lexicographically by entries and are duplicate-free.  Each returned
    expansion has integer part 0, so evaluate() recovers the representative
    it stands for.
    """
    p_over_q = _check_fraction(p_over_q)
    seen = set()
    for rep in _representatives(p_over_q):
        for entries in _admissible_tails(rep):
            seen.add(entries)
    return [ContinuedFraction(e) for e in sorted(seen)]


def _all_even_greedy(x: Fraction):
    """Greedy all-even expansion of the exact value x, or None.

    At each step the unique even integer within distance 1 of 1/x is
    taken; the attempt fails when 1/x lands exactly on an odd integer
    (two even integers tie at distance 1).
    """
    entries = []
    while x != 0:
        c = 1 / x
        b = 2 * math.floor(c / 2)
        if c - b > 1:
            b += 2
        elif c - b == 1:
            return None  # tie: 1/x is an odd integer
        entries.append(b)
        x = c - b
    return tuple(entries)


def all_even_expansion(p_over_q: Fraction) -> ContinuedFraction:
    """The unique expansion with all even entries and value p/q mod Z.

    Any representative with odd denominator is accepted; the class mod Z
    is what matters.
    """
    p_over_q = Fraction(p_over_q)
    p_over_q -= math.floor(p_over_q)
    if p_over_q == 0:
        raise InvalidFractionError("integers have no admissible expansion")
    p_over_q = _check_fraction(p_over_q)
    hits = []
    for rep in _representatives(p_over_q):
        entries = _all_even_greedy(rep)
        if entries is not None:
            hits.append(entries)
    if len(hits) != 1:
        raise RuntimeError(
            f"all-even expansion of {p_over_q} is not unique: {hits}")
    return ContinuedFraction(hits[0])


def all_positive_expansion(p_over_q: Fraction) -> ContinuedFraction:
    """Euclidean expansion with all positive entries, never ending in 1."""
    p_over_q = Fraction(p_over_q)
    if not (0 < p_over_q < 1):
        raise InvalidFractionError(f"{p_over_q}: need 0 < p/q < 1")
    entries = []
    x = p_over_q
    while x != 0:
        c = 1 / x
        a = math.floor(c)
        entries.append(a)
        x = c - a
    return ContinuedFraction(tuple(entries))


# -- text syntax -------------------------------------------------------------

_GROUP = re.compile(r"\(([^()]*)\)_(\d+)")


def parse_cf(text: str) -> ContinuedFraction:
    """Parse CF text like ``[4,-4]`` or ``[(-2,2)_3,-3]``.

    ``(pattern)_k`` groups expand to the pattern repeated k times.  A
    Unicode minus sign is accepted as well.
    """
    s = text.replace("−", "-").replace(" ", "")
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"expected [...] continued fraction, got {text!r}")
    body = s[1:-1]

    def expand(match):
        pattern, k = match.group(1), int(match.group(2))
        items = [p for p in pattern.split(",") if p]
        return ",".join(items * k)

    prev = None
    while prev != body:
        prev = body
        body = _GROUP.sub(expand, body)
    body = re.sub(",+", ",", body).strip(",")
    if not body:
        raise ValueError(f"empty continued fraction {text!r}")
    try:
        entries = tuple(int(p) for p in body.split(","))
    except ValueError:
        raise ValueError(f"malformed continued fraction {text!r}") from None
    return ContinuedFraction(entries)


def format_cf(cf: ContinuedFraction) -> str:
    """Canonical fully expanded form, e.g. ``[3,2,-2,2]``."""
    return "[" + ",".join(str(a) for a in cf.entries) + "]"
