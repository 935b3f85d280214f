"""Forms on the projective line with t-Laurent coefficients, and the (g8, g12)
pairs that define a degenerating Weierstrass family.

An SForm of formal degree d is a binary form of degree d written in the affine
chart s: a list of d+1 TLaurent coefficients. Keeping the formal degree around
(instead of trimming to the actual s-degree) is what lets a degree drop at the
top encode zeros at s = infinity.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import DegreeError, NotMinimalError, UnrecognizedCuspError, ZeroFormError
from .field import RatU, sdeg, sderiv, sdivmod, sgcd, smul, snorm
from .laurent import INF, Scalar, TLaurent, _frac, lcm_all


class SForm:
    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs: Iterable = ()):
        entries = [c if isinstance(c, TLaurent) else TLaurent.const(c) for c in coeffs]
        if len(entries) > degree + 1:
            for i in range(degree + 1, len(entries)):
                if entries[i]:
                    raise DegreeError(
                        "form of degree %d has a nonzero coefficient at s^%d" % (degree, i)
                    )
            entries = entries[: degree + 1]
        entries.extend([TLaurent.zero] * (degree + 1 - len(entries)))
        self.degree = degree
        self.coeffs = tuple(entries)

    # -- construction helpers ------------------------------------------------

    @classmethod
    def zero(cls, degree: int) -> "SForm":
        return cls(degree)

    @classmethod
    def monomial(cls, degree: int, i: int, c: Scalar = 1, e: Scalar = 0) -> "SForm":
        coeffs = [TLaurent.zero] * (degree + 1)
        coeffs[i] = TLaurent.term(c, e)
        return cls(degree, coeffs)

    # -- inspection ----------------------------------------------------------

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_zero(self) -> bool:
        return not self

    def s_degree(self) -> int:
        """Largest s-exponent with a nonzero coefficient; -1 for the zero form."""
        for i in range(self.degree, -1, -1):
            if self.coeffs[i]:
                return i
        return -1

    def s_valuation(self) -> int:
        """Smallest s-exponent with a nonzero coefficient; -1 for the zero form."""
        for i in range(self.degree + 1):
            if self.coeffs[i]:
                return i
        return -1

    def min_coeff_val(self):
        vals = [c.val() for c in self.coeffs if c]
        return min(vals) if vals else INF

    def hull_points(self) -> list[tuple[int, Fraction]]:
        return [(i, c.val()) for i, c in enumerate(self.coeffs) if c]

    def __eq__(self, other) -> bool:
        if not isinstance(other, SForm):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.degree, self.coeffs))

    def __repr__(self):
        parts = ["(%r)*s^%d" % (c, i) for i, c in enumerate(self.coeffs) if c]
        return "SForm(%d: %s)" % (self.degree, " + ".join(parts) or "0")

    # -- ring operations -----------------------------------------------------

    def _map(self, fn) -> "SForm":
        out = SForm.__new__(SForm)
        out.degree = self.degree
        out.coeffs = tuple(fn(c) for c in self.coeffs)
        return out

    def __add__(self, other: "SForm") -> "SForm":
        if self.degree != other.degree:
            raise ValueError("degree mismatch: %d vs %d" % (self.degree, other.degree))
        out = SForm.__new__(SForm)
        out.degree = self.degree
        out.coeffs = tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        return out

    def __neg__(self) -> "SForm":
        return self._map(lambda c: -c)

    def __sub__(self, other: "SForm") -> "SForm":
        return self + (-other)

    def __mul__(self, other: "SForm") -> "SForm":
        deg = self.degree + other.degree
        acc = [TLaurent.zero] * (deg + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    acc[i + j] = acc[i + j] + a * b
        out = SForm.__new__(SForm)
        out.degree = deg
        out.coeffs = tuple(acc)
        return out

    def __pow__(self, n: int) -> "SForm":
        if n < 0:
            raise ValueError("negative power of a form")
        if n == 0:
            return SForm.monomial(0, 0, 1)
        acc = self
        for _ in range(n - 1):
            acc = acc * self
        return acc

    def scale(self, c) -> "SForm":
        factor = c if isinstance(c, TLaurent) else TLaurent.const(c)
        return self._map(lambda x: x * factor)

    def shift_t(self, e: Scalar) -> "SForm":
        """Multiply the whole form by t^e."""
        e = _frac(e)
        return self._map(lambda c: c.shift(e))

    def substitute_scaled(self, e: Fraction) -> "SForm":
        """Rewrite in the stretched coordinate sigma = s / t^e.

        The coefficient of sigma^i picks up a factor t^(i*e).
        """
        out = SForm.__new__(SForm)
        out.degree = self.degree
        out.coeffs = tuple(c.shift(i * e) for i, c in enumerate(self.coeffs))
        return out

    def inverted(self) -> "SForm":
        """The form pulled back along s -> 1/s (coefficient list reversed)."""
        out = SForm.__new__(SForm)
        out.degree = self.degree
        out.coeffs = tuple(reversed(self.coeffs))
        return out

    def rescale_exponents(self, r: Scalar) -> "SForm":
        r = _frac(r)
        return self._map(lambda c: c.rescale_exponents(r))

    # -- limits and numerics ---------------------------------------------------

    def limit0_coeffs(self) -> list[Fraction]:
        """Coefficientwise value at t = 0; only valid when no valuation is negative."""
        return [c.limit0() for c in self.coeffs]

    def exponent_denominators(self) -> set[int]:
        dens: set[int] = set()
        for c in self.coeffs:
            dens |= c.exponent_denominators()
        return dens

    def eval_mp(self, s0, t0):
        from mpmath import mp

        acc = mp.mpf(0)
        power = mp.mpc(1)
        for c in self.coeffs:
            if c:
                acc = acc + c.eval_mp(t0) * power
            power = power * s0
        return acc


class FamilyPair:
    """A pair (g8, g12) of forms over the Laurent base, plus bookkeeping.

    shift records the gauge exponent c applied by normalized(): the stored pair
    is (t^(2c) g8_in, t^(3c) g12_in) relative to the parsed input.
    """

    __slots__ = ("g8", "g12", "shift", "source_text", "_disc24")

    def __init__(self, g8: SForm, g12: SForm, shift: Scalar = 0, source_text: str = ""):
        if g8.degree != 8 or g12.degree != 12:
            raise ValueError("family forms must have formal degrees 8 and 12")
        if not g8 and not g12:
            raise ZeroFormError("g8 and g12 both vanish identically")
        self.g8 = g8
        self.g12 = g12
        self.shift = _frac(shift)
        self.source_text = source_text
        self._disc24: SForm | None = None

    def __eq__(self, other) -> bool:
        if not isinstance(other, FamilyPair):
            return NotImplemented
        return self.g8 == other.g8 and self.g12 == other.g12

    def __repr__(self):
        return "FamilyPair(g8=%r, g12=%r, shift=%s)" % (self.g8, self.g12, self.shift)

    def discriminant24(self) -> SForm:
        if self._disc24 is None:
            cube = self.g8 ** 3 if self.g8 else SForm.zero(24)
            square = (self.g12 * self.g12).scale(27) if self.g12 else SForm.zero(24)
            self._disc24 = cube - square
        return self._disc24

    def normalized(self) -> "FamilyPair":
        """Gauge the pair so every coefficient valuation is >= 0 with one hitting 0."""
        v8 = self.g8.min_coeff_val()
        v12 = self.g12.min_coeff_val()
        c = -min(v8 / 2 if v8 is not INF else INF, v12 / 3 if v12 is not INF else INF)
        if c == 0:
            return self
        return FamilyPair(
            self.g8.shift_t(2 * c),
            self.g12.shift_t(3 * c),
            shift=self.shift + c,
            source_text=self.source_text,
        )

    def inverted(self) -> "FamilyPair":
        return FamilyPair(
            self.g8.inverted(), self.g12.inverted(), self.shift, self.source_text
        )

    def ramification(self) -> int:
        dens = self.g8.exponent_denominators() | self.g12.exponent_denominators()
        return lcm_all(dens | {1})


# ---------------------------------------------------------------------------
# conversion to s-polynomials over Q(u), u = t^(1/m)
# ---------------------------------------------------------------------------


def _tl_to_ratu(c: TLaurent, m: int) -> RatU:
    if not c:
        return RatU([])
    shift = 0
    lowest = c.val() * m
    if lowest < 0:
        shift = -int(lowest)
    num = [Fraction(0)] * (int(c.top_exponent() * m) + shift + 1)
    for e, coef in c.items():
        k = e * m
        if k.denominator != 1:
            raise ValueError("exponent %s not a multiple of 1/%d" % (e, m))
        num[int(k) + shift] = coef
    den = [Fraction(0)] * shift + [Fraction(1)]
    return RatU(num, den)


def _ratu_to_tl(r: RatU, m: int) -> TLaurent:
    nonzero = [j for j, c in enumerate(r.den) if c]
    if len(nonzero) != 1:
        raise ValueError("denominator is not a monomial in u")
    j = nonzero[0]
    return TLaurent(
        {Fraction(k - j, m): c for k, c in enumerate(r.num) if c}
    )


def _form_to_spoly(form: SForm, m: int) -> list[RatU]:
    return snorm([_tl_to_ratu(c, m) for c in form.coeffs])


def _spoly_to_form(p: Sequence[RatU], degree: int, m: int) -> SForm:
    return SForm(degree, [_ratu_to_tl(c, m) for c in p])


# ---------------------------------------------------------------------------
# minimality and the cusp-quartic extraction
# ---------------------------------------------------------------------------


def _repeated_factor_gcd(p: list, order: int) -> list:
    """gcd of p with its first (order-1) derivatives.

    A nonconstant common divisor here is exactly a factor of multiplicity
    >= order in p (characteristic zero).
    """
    g = list(p)
    d = list(p)
    for _ in range(order - 1):
        d = sderiv(d)
        g = sgcd(g, d)
        if sdeg(g) < 1:
            break
    return g


def _affine_nonminimal(g8p: list, g12p: list) -> bool:
    if not g8p and not g12p:
        return False
    if not g8p:
        return sdeg(_repeated_factor_gcd(g12p, 6)) >= 1
    if not g12p:
        return sdeg(_repeated_factor_gcd(g8p, 4)) >= 1
    g4 = _repeated_factor_gcd(g8p, 4)
    if sdeg(g4) < 1:
        return False
    g6 = _repeated_factor_gcd(g12p, 6)
    if sdeg(g6) < 1:
        return False
    return sdeg(sgcd(g4, g6)) >= 1


def minimality_check(f: FamilyPair) -> None:
    """Reject pairs with a common quartic/sextic power factor, at any point of P^1.

    The affine test catches factors P(s); running it again on the inverted pair
    catches the factor supported at s = infinity. A degenerate pair (identically
    vanishing discriminant) must additionally carry the exact cusp-quartic
    shape, else no stable model with only ADE fibers exists.
    """
    m = f.ramification()
    for pair in (f, f.inverted()):
        if _affine_nonminimal(_form_to_spoly(pair.g8, m), _form_to_spoly(pair.g12, m)):
            raise NotMinimalError(
                "a nonconstant form P has P^4 | g8 and P^6 | g12"
            )
    if not f.discriminant24():
        try:
            extract_cusp_quartic(f)
        except UnrecognizedCuspError as exc:
            raise NotMinimalError(
                "discriminant vanishes identically but the pair is not (3*G^2, G^3): %s"
                % exc.message
            ) from exc


def extract_cusp_quartic(f: FamilyPair) -> SForm:
    """For a pair with identically zero discriminant, recover G with
    (g8, g12) = (3 G^2, G^3) via G = 3 g12 / g8, verifying both identities exactly."""
    if f.discriminant24():
        raise ValueError("discriminant is not identically zero")
    m = f.ramification()
    g8p = _form_to_spoly(f.g8, m)
    g12p = _form_to_spoly(f.g12, m)
    if not g8p or not g12p:
        raise UnrecognizedCuspError("one of the forms vanishes identically")
    quo, rem = sdivmod([c * 3 for c in g12p], g8p)
    if rem:
        raise UnrecognizedCuspError("3*g12 is not divisible by g8")
    if snorm(smul([c * 3 for c in quo], quo)) != g8p:
        raise UnrecognizedCuspError("3*G^2 differs from g8")
    if snorm(smul(smul(quo, quo), quo)) != g12p:
        raise UnrecognizedCuspError("G^3 differs from g12")
    try:
        return _spoly_to_form(quo, 4, m)
    except (ValueError, DegreeError) as exc:
        raise UnrecognizedCuspError("quotient is not a quartic form: %s" % exc) from exc
