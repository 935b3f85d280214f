"""Newton polygons of forms over the Laurent base and what they know about
roots: valuation profiles, the two end exponents of a degenerating family, and
the clamped discriminant polygon.

Everything here is exact. Heights are Fractions; the two improper valuations
are represented by the module constants INF and NEG_INF (math.inf floats,
which compare correctly against Fractions).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

from .errors import UnrecognizedCuspError, ZeroFormError
from .symalg.forms import FamilyPair, SForm
from .symalg.laurent import INF, NEG_INF

Point = tuple[int, Fraction]


def _cross(o: Point, p: Point, q: Point) -> Fraction:
    return (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0])


def _lower_hull(points: list[Point]) -> list[Point]:
    hull: list[Point] = []
    for p in points:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    return hull


@dataclass(frozen=True)
class TropicalPolynomial:
    """Lower Newton polygon of a form: finite points (index, coefficient
    valuation) and the vertex chain of their lower convex hull."""

    degree: int
    points: tuple[Point, ...]
    hull: tuple[Point, ...]

    def eval_at(self, a) -> Fraction:
        """min-plus evaluation: min over points of height + index * a."""
        a = Fraction(a)
        return min(v + i * a for i, v in self.points)

    def edges(self) -> list[tuple[Point, Point, Fraction]]:
        return [
            (p, q, Fraction(q[1] - p[1], q[0] - p[0]))
            for p, q in zip(self.hull, self.hull[1:])
        ]

    def slopes(self) -> list[Fraction]:
        return [e[2] for e in self.edges()]


def newton_polygon(p: SForm) -> TropicalPolynomial:
    points = p.hull_points()
    if not points:
        raise ZeroFormError("Newton polygon of the zero form")
    return TropicalPolynomial(p.degree, tuple(points), tuple(_lower_hull(points)))


class ValProfile:
    """Root valuations of a form, as a descending multiset.

    Roots at s = infinity (degree drop at the top) carry NEG_INF; roots at
    s = 0 (index gap at the bottom) carry INF. The total count is always the
    formal degree of the source form.
    """

    __slots__ = ("vals",)

    def __init__(self, vals: Iterable):
        self.vals = tuple(sorted(vals, reverse=True))

    def __len__(self) -> int:
        return len(self.vals)

    def __iter__(self):
        return iter(self.vals)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ValProfile):
            return NotImplemented
        return self.vals == other.vals

    def __repr__(self):
        return "ValProfile(%s)" % (list(self.vals),)

    def pairs(self) -> list[tuple[object, int]]:
        """(valuation, multiplicity) pairs, descending."""
        out: list[tuple[object, int]] = []
        for v in self.vals:
            if out and out[-1][0] == v:
                out[-1] = (v, out[-1][1] + 1)
            else:
                out.append((v, 1))
        return out


def root_valuations(p: SForm) -> ValProfile:
    poly = newton_polygon(p)
    vals: list = []
    vals.extend([INF] * p.s_valuation())
    for (i1, _), (i2, _), slope in poly.edges():
        vals.extend([-slope] * (i2 - i1))
    vals.extend([NEG_INF] * (p.degree - p.s_degree()))
    return ValProfile(vals)


class EndExponents(NamedTuple):
    at_zero: Fraction
    at_infinity: Fraction


def end_exponents(f: FamilyPair) -> EndExponents:
    """Degeneration speeds toward the two ends of the base of the family.

    With the root valuations of g8 sorted descending as x1 >= ... >= x8 and
    those of g12 as y1 >= ... >= y12, the exponent at the zero end is
    min(x4, y6) and at the infinity end min(-x5, -y7). A side whose form
    vanishes identically places no constraint.
    """
    zero_candidates: list = []
    inf_candidates: list = []
    if f.g8:
        xs = root_valuations(f.g8).vals
        zero_candidates.append(xs[3])
        inf_candidates.append(-xs[4])
    if f.g12:
        ys = root_valuations(f.g12).vals
        zero_candidates.append(ys[5])
        inf_candidates.append(-ys[6])
    e0 = min(zero_candidates)
    einf = min(inf_candidates)
    if e0 <= 0 or einf <= 0:
        raise UnrecognizedCuspError(
            "end exponents (%s, %s) are not both positive; the family does not "
            "degenerate toward the cusp" % (e0, einf)
        )
    if e0 == INF or einf == INF:
        raise UnrecognizedCuspError("an end exponent is infinite")
    return EndExponents(e0, einf)


def _merge_collinear(chain: list[Point]) -> list[Point]:
    out: list[Point] = []
    for p in chain:
        while len(out) >= 2 and _cross(out[-2], out[-1], p) == 0:
            out.pop()
        out.append(p)
    return out


def modified_polygon(f: FamilyPair) -> TropicalPolynomial:
    """The discriminant polygon with its steep tails clamped.

    Hull slopes at most -e0 are replaced by a single slope -e0 edge reaching
    index 0, and slopes at least einf by a slope einf edge reaching the full
    degree 24; the infinite vertical parts at either end (missing bottom or
    top coefficients) are flattened out by the same extension. Interior slopes
    are untouched, so the result is still convex with slopes in [-e0, einf].
    """
    delta = f.discriminant24()
    poly = newton_polygon(delta)
    ends = end_exponents(f)
    e0, einf = ends.at_zero, ends.at_infinity

    hull = list(poly.hull)
    left = hull[0]
    for (p, q, slope) in poly.edges():
        if slope <= -e0:
            left = q
    right = hull[-1]
    for (p, q, slope) in reversed(poly.edges()):
        if slope >= einf:
            right = p
    keep = [v for v in hull if left[0] <= v[0] <= right[0]]
    chain = (
        [(0, left[1] + left[0] * e0)]
        + keep
        + [(24, right[1] + (24 - right[0]) * einf)]
    )
    chain = _merge_collinear(chain)
    return TropicalPolynomial(24, tuple(chain), tuple(chain))
