"""Sparse polynomial text format (bit-exact interchange).

    # apoly v1
    vars L M
    term <expL> <expM> <coefficient>

One ``term`` line per nonzero term, sorted lexicographically by exponent
tuple; coefficients in decimal with an optional leading minus sign.
"""

from __future__ import annotations

from .multipoly import MultiPoly

HEADER = "# apoly v1"


def format_apoly(poly: MultiPoly) -> str:
    lines = [HEADER, "vars " + " ".join(poly.variables)]
    for exps, coeff in poly.sorted_terms():
        lines.append("term " + " ".join(str(e) for e in exps) + f" {coeff}")
    return "\n".join(lines) + "\n"


def parse_apoly(text: str) -> MultiPoly:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != HEADER:
        raise ValueError(f"missing {HEADER!r} header")
    if len(lines) < 2 or not lines[1].startswith("vars "):
        raise ValueError("missing 'vars' line")
    variables = tuple(lines[1].split()[1:])
    if not variables:
        raise ValueError("empty variable list")
    terms = {}
    for ln in lines[2:]:
        fields = ln.split()
        if fields[0] != "term" or len(fields) != len(variables) + 2:
            raise ValueError(f"malformed term line: {ln!r}")
        exps = tuple(int(x) for x in fields[1:-1])
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in line: {ln!r}")
        coeff = int(fields[-1])
        if coeff == 0:
            raise ValueError(f"zero coefficient in line: {ln!r}")
        if exps in terms:
            raise ValueError(f"duplicate exponent tuple in line: {ln!r}")
        terms[exps] = coeff
    return MultiPoly(variables, terms)


def write_apoly(poly: MultiPoly, path) -> None:
    with open(path, "w") as f:
        f.write(format_apoly(poly))


def read_apoly(path) -> MultiPoly:
    with open(path) as f:
        return parse_apoly(f.read())
