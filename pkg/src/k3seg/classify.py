"""Classification of the t -> 0 limit: which cusp the family heads to, what the
surfaces over the two ends of the density interval look like, and the chain of
D/A/E components of the stable degenerate surface.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from .density import DensityFunction
from .errors import InconsistentTypeError, UnrecognizedCuspError
from .symalg.field import sgcd, sderiv, sdeg, snorm
from .symalg.forms import (
    FamilyPair,
    SForm,
    _repeated_factor_gcd,
    extract_cusp_quartic,
)
from .tropics import end_exponents


class CuspKind(enum.Enum):
    """Where the family lands when t reaches 0.

    MAXIMAL: the limit pair is (c1*s^4, c2*s^6) with c1^3 = 27*c2^2 (the most
    degenerate corner). SEGMENT: same monomial shape but c1^3 != 27*c2^2.
    CUSPIDAL: the discriminant vanishes identically and the extracted quartic
    keeps four distinct finite roots in the limit. CUSPIDAL_TO_MAXIMAL: the
    quartic's roots collide or escape. NO_DEGENERATION: the limit is still a
    minimal pair with nonzero discriminant. UNRECOGNIZED: none of the above
    (a coordinate change would be needed before classifying).
    """

    MAXIMAL = "maximal"
    SEGMENT = "segment"
    CUSPIDAL = "cuspidal"
    CUSPIDAL_TO_MAXIMAL = "cuspidal-to-maximal"
    NO_DEGENERATION = "no-degeneration"
    UNRECOGNIZED = "unrecognized"


def _constant_form_coeffs(form: SForm) -> Optional[list[Fraction]]:
    """Coefficient list of the t = 0 limit, or None if a valuation is negative."""
    try:
        return form.limit0_coeffs()
    except ValueError:
        return None


def _limit_spoly(form: SForm) -> list[Fraction]:
    coeffs = form.limit0_coeffs()
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def _is_squarefree_quartic_limit(quartic: SForm) -> bool:
    """True when the limit of the quartic has degree exactly 4 and no repeated
    root (equivalently: four distinct finite roots)."""
    limit = _limit_spoly(quartic)
    if len(limit) != 5:
        return False
    return sdeg(sgcd(limit, sderiv(limit))) < 1


def _constant_pair_minimal(g8: list[Fraction], g12: list[Fraction]) -> bool:
    """Minimality of a constant pair, at every point of P^1 including infinity."""

    def affine_ok(a: list[Fraction], b: list[Fraction]) -> bool:
        if not a and not b:
            return False
        if not a:
            return sdeg(_repeated_factor_gcd(b, 6)) < 1
        if not b:
            return sdeg(_repeated_factor_gcd(a, 4)) < 1
        g4 = _repeated_factor_gcd(a, 4)
        if sdeg(g4) < 1:
            return True
        g6 = _repeated_factor_gcd(b, 6)
        if sdeg(g6) < 1:
            return True
        return sdeg(sgcd(g4, g6)) < 1

    def pad_invert(p: list[Fraction], deg: int) -> list[Fraction]:
        full = list(p) + [Fraction(0)] * (deg + 1 - len(p))
        return snorm(list(reversed(full)))

    return affine_ok(g8, g12) and affine_ok(pad_invert(g8, 8), pad_invert(g12, 12))


def cusp_type(f: FamilyPair) -> CuspKind:
    """Classify the t = 0 limit of a normalized pair. Never raises: inputs the
    decision tree cannot place come back as UNRECOGNIZED."""
    if not f.discriminant24():
        quartic = None
        try:
            quartic = extract_cusp_quartic(f)
        except UnrecognizedCuspError:
            return CuspKind.UNRECOGNIZED
        if _is_squarefree_quartic_limit(quartic):
            return CuspKind.CUSPIDAL
        return CuspKind.CUSPIDAL_TO_MAXIMAL

    c8 = _constant_form_coeffs(f.g8)
    c12 = _constant_form_coeffs(f.g12)
    if c8 is None or c12 is None:
        return CuspKind.UNRECOGNIZED

    lim8 = snorm(list(c8))
    lim12 = snorm(list(c12))
    delta_limit = _limit_delta(lim8, lim12)
    if delta_limit and _constant_pair_minimal(lim8, lim12):
        return CuspKind.NO_DEGENERATION

    mono8 = len(lim8) == 5 and all(not c for c in lim8[:4])
    mono12 = len(lim12) == 7 and all(not c for c in lim12[:6])
    if mono8 and mono12:
        c1, c2 = lim8[4], lim12[6]
        if c1 ** 3 == 27 * c2 ** 2:
            return CuspKind.MAXIMAL
        return CuspKind.SEGMENT
    return CuspKind.UNRECOGNIZED


def _limit_delta(g8: list[Fraction], g12: list[Fraction]) -> list[Fraction]:
    def mul(a, b):
        if not a or not b:
            return []
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return out

    cube = mul(mul(g8, g8), g8)
    square = [27 * c for c in mul(g12, g12)]
    n = max(len(cube), len(square))
    out = [
        (cube[i] if i < len(cube) else 0) - (square[i] if i < len(square) else 0)
        for i in range(n)
    ]
    return snorm(out)


# ---------------------------------------------------------------------------
# end surfaces
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EndSurface:
    """The limit Weierstrass data over one end of the density interval:
    forms of degrees (4, 6) in the stretched coordinate, and whether their
    own discriminant vanishes identically (a generically nodal limit)."""

    g4: SForm
    g6: SForm
    is_nodal: bool


def end_surface_data(f: FamilyPair, side: str) -> EndSurface:
    """Limit surface at the given end ("left" = toward s = 0, "right" = toward
    s = infinity).

    The base coordinate is stretched by s = t^e0 * sigma (on the right, the
    inverted family is stretched by einf the same way), the pair is regauged
    jointly by t^(-2c), t^(-3c) with c = min(mu8/2, mu12/3), and the t = 0
    limit is read off. With valid end exponents the surviving coefficients sit
    in degrees at most (4, 6).
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    ends = end_exponents(f)
    if side == "right":
        f = f.inverted()
        stretch = ends.at_infinity
    else:
        stretch = ends.at_zero
    sub8 = f.g8.substitute_scaled(stretch)
    sub12 = f.g12.substitute_scaled(stretch)
    mu8 = sub8.min_coeff_val()
    mu12 = sub12.min_coeff_val()
    c = min(mu8 / 2, mu12 / 3)
    lim8 = sub8.shift_t(-2 * c).limit0_coeffs()
    lim12 = sub12.shift_t(-3 * c).limit0_coeffs()
    if any(lim8[5:]) or any(lim12[7:]):
        raise UnrecognizedCuspError(
            "end-surface limit does not fit in degrees (4, 6); "
            "the end exponents do not govern this family"
        )
    g4 = SForm(4, lim8[:5])
    g6 = SForm(6, lim12[:7])
    cube = g4 ** 3 if g4 else SForm.zero(12)
    square = (g6 * g6).scale(27) if g6 else SForm.zero(12)
    return EndSurface(g4, g6, is_nodal=not (cube - square))


# ---------------------------------------------------------------------------
# stable types
# ---------------------------------------------------------------------------


class Component(NamedTuple):
    kind: str  # "D", "A" or "E"
    index: int
    charge: int


CHARGE_OFFSET = {"A": 1, "E": 3, "D": 4}


def component(kind: str, index: int) -> Component:
    return Component(kind, index, index + CHARGE_OFFSET[kind])


@dataclass(frozen=True)
class StableType:
    components: tuple[Component, ...]

    def label(self) -> str:
        return " ".join("%s%d" % (c.kind, c.index) for c in self.components)

    def rank(self) -> int:
        return sum(c.index for c in self.components)

    def charges(self) -> list[int]:
        return [c.charge for c in self.components]

    def reversed(self) -> "StableType":
        return StableType(tuple(reversed(self.components)))

    def __str__(self):
        return self.label()


def _end_component(m: int, end_value: Fraction) -> Component:
    if end_value == 0:
        k = m - 3
        if not 0 <= k <= 8:
            hint = (
                "; a value of 9 indicates an extended E9-shape limit that this "
                "classification does not cover" if k == 9 else ""
            )
            raise InconsistentTypeError("E-component index %d outside [0, 8]%s" % (k, hint))
        return component("E", k)
    k = m - 4
    if k < 0:
        raise InconsistentTypeError("D-component index %d is negative" % k)
    return component("D", k)


def stable_type(fn: DensityFunction, end_values: Optional[tuple] = None) -> StableType:
    """Read the D/A/E chain off a density function.

    The end multiplicities are 12 -/+ the first/last slope; an end with V = 0
    is an E-component (index m-3), otherwise a D-component (index m-4). Every
    interior breakpoint contributes an A-component with index one less than
    its slope drop. Charges must total 24.
    """
    if end_values is None:
        end_values = (fn.breakpoints[0][1], fn.breakpoints[-1][1])
    slopes = fn.slopes()
    m_left = 12 - slopes[0]
    m_right = 12 + slopes[-1]
    parts = [_end_component(m_left, Fraction(end_values[0]))]
    for _, drop in fn.slope_drops():
        parts.append(component("A", drop - 1))
    parts.append(_end_component(m_right, Fraction(end_values[1])))
    total = sum(c.charge for c in parts)
    if total != 24:
        raise InconsistentTypeError("charges %s sum to %d, not 24" % (
            [c.charge for c in parts], total))
    return StableType(tuple(parts))
