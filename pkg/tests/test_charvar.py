import random
from fractions import Fraction

import pytest

from tbk.charvar import (
    DEFAULT_CONVENTION,
    SlopeConvention,
    a_polynomial,
    edge_slopes,
    finite_edge_slopes_as_ints,
    longitude_data,
    newton_polygon,
    presentation,
    riley_polynomial,
    split_components,
)
from tbk.confrac import InvalidFractionError
from tbk.exactnum import MultiPoly, poly_prem
from tbk.slopes import Slope

from oracles import (
    random_multipoly,
    relative_apoly_residual,
    sample_representations,
)

L = MultiPoly.variable("L")
M = MultiPoly.variable("M")


def test_presentation_examples():
    pres = presentation(Fraction(1, 3))
    assert pres.epsilons == (1, 1)
    pres = presentation(Fraction(2, 5))
    assert len(pres.epsilons) == 4
    assert pres.epsilons == (-1, 1, 1, -1)
    assert presentation(Fraction(4, 15)).epsilons == tuple(
        reversed(presentation(Fraction(4, 15)).epsilons))


def test_presentation_floor_formula():
    # eps_i = (-1)^floor(i*beta/q) for the odd representative beta
    pres = presentation(Fraction(4, 15))
    beta = 4 - 15
    expected = tuple(-1 if ((i * beta) // 15) % 2 else 1 for i in range(1, 15))
    assert pres.epsilons == expected


def test_presentation_palindromic_sweep():
    for q in range(3, 46, 2):
        for p in (1, 2, q - 2):
            if p < q and Fraction(p, q).denominator == q:
                eps = presentation(Fraction(p, q)).epsilons
                assert eps == tuple(reversed(eps)), (p, q)


def test_presentation_invalid():
    with pytest.raises(InvalidFractionError):
        presentation(Fraction(1, 4))


def test_riley_degrees():
    assert riley_polynomial(presentation(Fraction(1, 3))).degree("u") == 1
    assert riley_polynomial(presentation(Fraction(2, 5))).degree("u") == 2
    assert riley_polynomial(presentation(Fraction(4, 15))).degree("u") == 7


def test_riley_degree_sweep_q45():
    for q in range(3, 46, 2):
        phi = riley_polynomial(presentation(Fraction(2, q)))
        assert phi.degree("u") == (q - 1) // 2, q


def test_riley_trefoil_exact():
    u = MultiPoly.variable("u")
    phi = riley_polynomial(presentation(Fraction(1, 3)))
    assert phi == M ** 4 - M ** 2 * u - M ** 2 + 1


def test_longitude_upper_triangular_on_curve():
    # the (2,1) entry of the longitude matrix is divisible by the Riley
    # polynomial: exact pseudo-remainder check at small sizes
    for pq in (Fraction(1, 3), Fraction(2, 5), Fraction(3, 7), Fraction(2, 7),
               Fraction(4, 9)):
        pres = presentation(pq)
        phi = riley_polynomial(pres)
        _, lower, _ = longitude_data(pres)
        assert poly_prem(lower, phi, "u").is_zero(), pq


def test_a_polynomial_trefoils():
    assert a_polynomial(Fraction(1, 3)).poly == L * M ** 6 + 1
    assert a_polynomial(Fraction(2, 3)).poly == L + M ** 6
    assert a_polynomial(Fraction(1, 3), keep_abelian=True).poly == (
        (L * M ** 6 + 1) * (L - 1)).sign_normalized()


def test_a_polynomial_figure_eight_exact():
    known = (L ** 2 * M ** 4
             - L * (M ** 8 - M ** 6 - 2 * M ** 4 - M ** 2 + 1)
             + M ** 4)
    assert a_polynomial(Fraction(2, 5)).poly == known


def test_a_polynomial_engines_agree():
    for pq in (Fraction(1, 3), Fraction(2, 5), Fraction(3, 7), Fraction(2, 7)):
        direct = a_polynomial(pq, engine="direct").poly
        modular = a_polynomial(pq, engine="modular").poly
        assert direct == modular, pq


def test_a_polynomial_numeric_oracle():
    for pq in (Fraction(2, 5), Fraction(4, 15), Fraction(6, 35)):
        samples = sample_representations(pq, count=20)
        assert max(s[-1] for s in samples) < 1e-10  # longitude upper-triangular
        residual = relative_apoly_residual(a_polynomial(pq).poly, samples)
        assert residual < 1e-8, (pq, residual)


def test_newton_polygon_examples():
    poly = MultiPoly(("L", "M"), {(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 1})
    assert set(newton_polygon(poly).corners) == {(0, 0), (1, 0), (0, 1), (1, 1)}
    assert edge_slopes(newton_polygon(poly)) == {Slope(0, 1), Slope.INFINITY}

    poly = MultiPoly(("L", "M"), {(0, 0): 1, (2, 0): 1, (0, 2): 1, (1, 1): 5})
    assert set(newton_polygon(poly).corners) == {(0, 0), (2, 0), (0, 2)}

    # parallelogram with corners (0,14),(1,14),(1,0),(2,0): slopes {0, -14}
    poly = MultiPoly(("L", "M"), {(0, 14): 1, (1, 14): 1, (1, 0): 1, (2, 0): 1})
    assert finite_edge_slopes_as_ints(newton_polygon(poly)) == {0, -14}


def test_newton_polygon_counterclockwise():
    polygon = newton_polygon(a_polynomial(Fraction(2, 5)).poly)
    corners = list(polygon.corners)
    area2 = sum(x0 * y1 - x1 * y0
                for (x0, y0), (x1, y1) in zip(corners, corners[1:] + corners[:1]))
    assert area2 > 0  # counterclockwise orientation
    assert corners[0] == min(corners)


def test_edge_slope_conventions():
    poly = MultiPoly(("L", "M"), {(0, 0): 1, (1, 4): 1})
    polygon = newton_polygon(poly)
    assert edge_slopes(polygon) == {Slope(4, 1)}
    assert edge_slopes(polygon, SlopeConvention(axis="ml")) == {Slope(1, 4)}
    assert edge_slopes(polygon, SlopeConvention(negate=True)) == {Slope(-4, 1)}
    assert edge_slopes(polygon, SlopeConvention(half=True)) == {Slope(2, 1)}
    assert DEFAULT_CONVENTION == SlopeConvention("lm", False, False)


def test_minkowski_edge_slope_union():
    rng = random.Random(17)
    done = 0
    while done < 100:
        f = random_multipoly(rng, variables=("L", "M"), max_degree=5, terms=5)
        g = random_multipoly(rng, variables=("L", "M"), max_degree=5, terms=5)
        if f.is_zero() or g.is_zero():
            continue
        union = edge_slopes(newton_polygon(f)) | edge_slopes(newton_polygon(g))
        assert edge_slopes(newton_polygon(f * g)) == union
        done += 1


def test_degenerate_polygons():
    point = MultiPoly(("L", "M"), {(2, 3): 5})
    assert newton_polygon(point).corners == ((2, 3),)
    assert edge_slopes(newton_polygon(point)) == set()
    segment = MultiPoly(("L", "M"), {(0, 0): 1, (1, 6): 1, (2, 12): 1})
    assert newton_polygon(segment).corners == ((0, 0), (2, 12))
    assert edge_slopes(newton_polygon(segment)) == {Slope(6, 1)}


def test_split_components_k2():
    ap = a_polynomial(Fraction(4, 15))
    parts = split_components(ap, canonical_slopes={0, -14})
    assert parts is not None and len(parts) == 2
    product = parts[0].poly * parts[1].poly
    assert product.sign_normalized() == ap.poly.sign_normalized()
    tags = {p.component_tag for p in parts}
    assert tags == {"canonical", "other"}
    for p in parts:
        slopes = finite_edge_slopes_as_ints(newton_polygon(p))
        if p.component_tag == "canonical":
            assert slopes == {0, -14}
        else:
            assert slopes == {0, -8}


def test_split_components_irreducible():
    assert split_components(a_polynomial(Fraction(2, 5))) is None


def test_a_polynomial_structure():
    # knot A-polynomials carry only even meridian exponents and are
    # palindromic under (i, j) -> (dL - i, dM - j)
    from math import gcd

    for q in range(3, 14, 2):
        for p in range(1, q):
            if gcd(p, q) != 1 or p > q - p:
                continue
            A = a_polynomial(Fraction(p, q)).poly
            dL, dM = A.degree("L"), A.degree("M")
            assert all(j % 2 == 0 for (_, j) in A.terms)
            for (i, j), c in A.terms.items():
                assert A.terms.get((dL - i, dM - j)) == c, (p, q, i, j)


def test_edge_slopes_are_boundary_slopes():
    # every Newton-polygon edge slope must appear among the surface slopes
    # of the same fraction; only the fiber slope 0 may go undetected
    from math import gcd

    from tbk.surfaces import slope_report

    for q in range(3, 14, 2):
        for p in range(1, q):
            if gcd(p, q) != 1 or p > q - p:
                continue
            fraction = Fraction(p, q)
            boundary = {d.slope for d in slope_report(fraction)}
            edges = finite_edge_slopes_as_ints(
                newton_polygon(a_polynomial(fraction)))
            assert edges <= boundary, fraction
            assert boundary - edges <= {0}, fraction
