"""Newton polygons, valuation profiles, end exponents, and the min-plus
duality between polygon evaluation and coordinate stretching."""

import random
from fractions import Fraction

import pytest

from k3seg.errors import UnrecognizedCuspError, ZeroFormError
from k3seg.symalg import INF, NEG_INF, SForm, TLaurent, parse_family
from k3seg.tropics import (
    end_exponents,
    modified_polygon,
    newton_polygon,
    root_valuations,
)


def test_newton_polygon_of_tent_g12(named):
    poly = newton_polygon(named["tent"].g12)
    assert poly.degree == 12
    assert poly.points == ((0, Fraction(1)), (6, Fraction(0)), (12, Fraction(1)))
    assert poly.hull == poly.points
    assert poly.slopes() == [Fraction(-1, 6), Fraction(1, 6)]
    assert poly.eval_at(0) == 0
    assert poly.eval_at(Fraction(1, 6)) == 1
    assert poly.eval_at(Fraction(-1, 2)) == -5


def test_newton_polygon_drops_interior_points():
    f = SForm(4, [TLaurent.term(1, 3), TLaurent.term(1, 5), TLaurent.term(1, 0)])
    poly = newton_polygon(f)
    assert poly.hull == ((0, Fraction(3)), (2, Fraction(0)))
    assert len(poly.points) == 3


def test_newton_polygon_of_zero_form():
    with pytest.raises(ZeroFormError):
        newton_polygon(SForm.zero(8))


def test_root_valuations_of_tent(named):
    g = named["tent"]
    assert root_valuations(g.g12).pairs() == [(Fraction(1, 6), 6), (Fraction(-1, 6), 6)]
    # 3*s^4 at formal degree 8: four roots at s = 0, four at s = infinity
    assert root_valuations(g.g8).pairs() == [(INF, 4), (NEG_INF, 4)]


def test_root_valuations_count_matches_formal_degree():
    f = SForm(6, [0, TLaurent.one, 0, TLaurent.term(1, 2)])
    prof = root_valuations(f)
    assert len(prof) == 6
    assert prof.pairs() == [(INF, 1), (Fraction(-1), 2), (NEG_INF, 3)]


def test_end_exponents_of_named_families(named):
    for name, e in (("ds_split", 1), ("d_mixed", 1), ("d_constant", 1)):
        ends = end_exponents(named[name].normalized())
        assert (ends.at_zero, ends.at_infinity) == (e, e)
    ends = end_exponents(named["tent"])
    assert (ends.at_zero, ends.at_infinity) == (Fraction(1, 6), Fraction(1, 6))


def test_end_exponents_reject_non_degenerating_pair():
    f = parse_family("g8 = s^8 + 1\ng12 = s^12 + 1\n")
    with pytest.raises(UnrecognizedCuspError, match="not both positive"):
        end_exponents(f)


def test_end_exponents_reject_infinite_speed():
    # every constraint from g8 sits at s=0/infinity and g12 gives no finite
    # bound at the zero end either
    f = parse_family("g8 = 9*s^4 + t*s^5\ng12 = s^6\n")
    with pytest.raises(UnrecognizedCuspError, match="infinite"):
        end_exponents(f)


def test_end_exponents_ignore_vanishing_form():
    f = parse_family("g8 = 3*s^4\ng12 = s^6 - s^6\n")
    g = parse_family("g8 = 3*s^4 + t*(1 + s^8)\ng12 = s^6 - s^6\n")
    with pytest.raises(UnrecognizedCuspError):
        end_exponents(f)  # g8 alone: infinite speeds
    ends = end_exponents(g)
    assert ends == (Fraction(1, 4), Fraction(1, 4))


# min-plus duality: evaluating the polygon at a equals the smallest
# coefficient valuation after stretching the coordinate by t^a
def test_polygon_evaluation_is_stretched_minimum():
    rng = random.Random(97)
    for _ in range(40):
        degree = rng.randint(1, 24)
        f = SForm.zero(degree)
        for _ in range(rng.randint(1, 6)):
            i = rng.randrange(degree + 1)
            c = rng.choice((-3, -1, 1, 2))
            e = Fraction(rng.randint(-8, 12), rng.choice((1, 2, 3)))
            f = f + SForm.monomial(degree, i, c, e)
        if f.is_zero():
            continue
        a = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        assert newton_polygon(f).eval_at(a) == f.substitute_scaled(a).min_coeff_val()


def test_modified_polygon_frozen_hulls(named):
    mp = modified_polygon(named["ds_split"].normalized())
    assert mp.hull == ((0, 12), (3, 9), (21, 9), (24, 12))
    mp = modified_polygon(named["tent"])
    assert mp.hull == ((0, 2), (6, 1), (18, 1), (24, 2))


def test_modified_polygon_extends_degree_drop(named):
    # the d_mixed discriminant has s-degree 12; the clamp walks the missing
    # top half out to index 24 at the infinity-end speed
    g = named["d_mixed"].normalized()
    assert newton_polygon(g.discriminant24()).hull == ((0, 26), (6, 20), (12, 26))
    mp = modified_polygon(g)
    assert mp.hull == ((0, 26), (6, 20), (24, 38))
    assert mp.degree == 24


def test_modified_polygon_slopes_are_clamped(named):
    for name in ("ds_split", "ds_circle", "tent", "d_mixed"):
        g = named[name].normalized()
        ends = end_exponents(g)
        mp = modified_polygon(g)
        assert mp.hull[0][0] == 0 and mp.hull[-1][0] == 24
        for slope in mp.slopes():
            assert -ends.at_zero <= slope <= ends.at_infinity
