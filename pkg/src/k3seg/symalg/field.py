"""Exact univariate polynomial arithmetic used by the divisibility checks.

Two layers live here. The bottom layer is dense polynomials over Fraction
(lists, index = degree, no trailing zeros, [] is zero). On top sits RatU, the
field of rational functions in one variable; minimality and squarefreeness of
the s-forms are decided by Euclidean gcds of s-polynomials whose coefficients
are RatU values in u = t^(1/m).

The s-level helpers are generic over the coefficient field: they only use the
arithmetic dunders, so the same code runs with Fraction coefficients (limit
forms over the rationals) and RatU coefficients (forms over Q(u)).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

# ---------------------------------------------------------------------------
# dense polynomials over Fraction
# ---------------------------------------------------------------------------


def unorm(p: list[Fraction]) -> list[Fraction]:
    while p and not p[-1]:
        p.pop()
    return p


def uadd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return unorm(out)


def uneg(a: list[Fraction]) -> list[Fraction]:
    return [-c for c in a]


def usub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    return uadd(a, uneg(b))


def umul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return unorm(out)


def udivmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv = 1 / b[-1]
    while len(a) >= len(b):
        c = a[-1] * inv
        d = len(a) - len(b)
        q[d] = c
        for i, cb in enumerate(b):
            a[d + i] -= c * cb
        unorm(a)
        if len(a) >= len(b) and not a[-1]:
            unorm(a)
    return unorm(q), a


def _zprim(p: list[int]) -> list[int]:
    """Strip the integer content (in place is fine, inputs are scratch)."""
    g = 0
    for c in p:
        if c:
            g = gcd(g, c)
            if g == 1:
                return p
    if g > 1:
        p = [c // g for c in p]
    return p


def _frac_to_z(p: list[Fraction]) -> list[int]:
    """Primitive integer polynomial proportional to p (sign preserved)."""
    if not p:
        return []
    den = 1
    for c in p:
        d = Fraction(c).denominator
        den = den // gcd(den, d) * d
    return _zprim([int(Fraction(c) * den) for c in p])


def _ziprem(a: list[int], b: list[int]) -> list[int]:
    """Integer pseudo-remainder: scale by b's leading coefficient per step."""
    a = list(a)
    lb = b[-1]
    while len(a) >= len(b):
        la = a[-1]
        shift = len(a) - len(b)
        a = [c * lb for c in a]
        for i, cb in enumerate(b):
            a[shift + i] -= la * cb
        while a and not a[-1]:
            a.pop()
    return a


def _zugcd(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd in Z[u] (positive leading coefficient), primitive PRS.

    A plain Euclid over Q explodes: the remainder fractions grow exponentially.
    Taking the integer content out after every pseudo-remainder keeps every
    intermediate small.
    """
    a = _zprim(list(a))
    b = _zprim(list(b))
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            a = [1]
            break
        a, b = b, _zprim(_ziprem(a, b))
    if a and a[-1] < 0:
        a = [-c for c in a]
    return a


def ugcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    g = _zugcd(_frac_to_z(a), _frac_to_z(b))
    if not g:
        return []
    lead = g[-1]
    return [Fraction(c, lead) for c in g]


# ---------------------------------------------------------------------------
# rational functions in u over Q
# ---------------------------------------------------------------------------


class RatU:
    """Reduced fraction of two dense Fraction-polynomials, monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: list[Fraction], den: list[Fraction] | None = None):
        den = den if den is not None else [Fraction(1)]
        if not den:
            raise ZeroDivisionError("RatU with zero denominator")
        if not num:
            self.num, self.den = [], [Fraction(1)]
            return
        g = ugcd(num, den)
        if len(g) > 1:
            num = udivmod(num, g)[0]
            den = udivmod(den, g)[0]
        lead = den[-1]
        if lead != 1:
            inv = 1 / lead
            num = [c * inv for c in num]
            den = [c * inv for c in den]
        self.num, self.den = num, den

    @classmethod
    def const(cls, c) -> "RatU":
        c = Fraction(c)
        return cls([c] if c else [])

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RatU.const(other)
        if not isinstance(other, RatU):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((tuple(self.num), tuple(self.den)))

    def _coerce(self, other) -> "RatU | None":
        if isinstance(other, RatU):
            return other
        if isinstance(other, (int, Fraction)):
            return RatU.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatU(uadd(umul(self.num, o.den), umul(o.num, self.den)), umul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        r = RatU.__new__(RatU)
        r.num, r.den = uneg(self.num), self.den
        return r

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatU(umul(self.num, o.num), umul(self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o:
            raise ZeroDivisionError("division by zero RatU")
        return RatU(umul(self.num, o.den), umul(self.den, o.num))

    def __repr__(self):
        return "RatU(%s / %s)" % (self.num, self.den)


# ---------------------------------------------------------------------------
# s-polynomials over a generic coefficient field
# ---------------------------------------------------------------------------


def snorm(p: list) -> list:
    while p and not p[-1]:
        p.pop()
    return p


def sdeg(p: list) -> int:
    return len(p) - 1


def sadd(a: list, b: list) -> list:
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else None
        y = b[i] if i < len(b) else None
        if x is None:
            out.append(y)
        elif y is None:
            out.append(x)
        else:
            out.append(x + y)
    return snorm(out)


def ssub(a: list, b: list) -> list:
    return sadd(a, [-c for c in b])


def smul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out: list = [None] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            prod = ca * cb
            out[i + j] = prod if out[i + j] is None else out[i + j] + prod
    return snorm([c if c is not None else ca * 0 for c in out])


def sdivmod(a: list, b: list) -> tuple[list, list]:
    if not b:
        raise ZeroDivisionError("s-polynomial division by zero")
    a = list(a)
    q: list = [None] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b):
        c = a[-1] / b[-1]
        d = len(a) - len(b)
        q[d] = c if q[d] is None else q[d] + c
        for i, cb in enumerate(b):
            a[d + i] = a[d + i] - c * cb
        snorm(a)
    zero = b[-1] - b[-1]
    return snorm([c if c is not None else zero for c in q]), a


def _ratu_cleared(p: list) -> list[list[int]] | None:
    """p with RatU coefficients, rewritten over Z[u] by clearing the common
    monomial denominator and every Fraction denominator. None when some
    coefficient's denominator is not a monomial."""
    parts: list[tuple[list[Fraction], int]] = []
    for c in p:
        if not isinstance(c, RatU):
            return None
        nz = [j for j, x in enumerate(c.den) if x]
        if len(nz) != 1 or c.den[nz[0]] != 1:
            return None
        parts.append((c.num, nz[0]))
    top = max((sh for _, sh in parts), default=0)
    den = 1
    for num, _ in parts:
        for c in num:
            d = c.denominator
            den = den // gcd(den, d) * d
    return [
        [0] * (top - sh) + [int(c * den) for c in num] if num else []
        for num, sh in parts
    ]


def _zumul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    while out and not out[-1]:
        out.pop()
    return out


def _spp_z(p: list[list[int]]) -> list[list[int]]:
    """Primitive part over Z[u] in the s-variable: strip the common divisor of
    all coefficient polynomials (their gcd in Z[u], integer content included)."""
    while p and not p[-1]:
        p.pop()
    if not p:
        return p
    cont: list[int] = []
    for c in p:
        if c:
            cont = _zugcd(cont, c)
        if cont == [1]:
            break
    if len(cont) > 1:
        p = [_zdiv_exact(c, cont) if c else [] for c in p]
    icont = 0
    for c in p:
        for x in c:
            if x:
                icont = gcd(icont, x)
        if icont == 1:
            return p
    if icont > 1:
        p = [[x // icont for x in c] for c in p]
    return p


def _zdiv_exact(a: list[int], b: list[int]) -> list[int]:
    """Exact quotient in Z[u]; every leading-coefficient division comes out
    whole when the division is exact, which the callers guarantee."""
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    lb = b[-1]
    while len(a) >= len(b):
        c = a[-1] // lb
        d = len(a) - len(b)
        q[d] = c
        for i, cb in enumerate(b):
            a[d + i] -= c * cb
        while a and not a[-1]:
            a.pop()
    return q


def _zsprem(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    """Pseudo-remainder in Z[u][s]: scale by b's leading coefficient per step
    so the reduction never leaves the polynomial ring."""
    a = [list(c) for c in a]
    lb = b[-1]
    while len(a) >= len(b):
        la = a[-1]
        shift = len(a) - len(b)
        a = [_zumul(c, lb) if c else [] for c in a]
        for i, cb in enumerate(b):
            if cb:
                prod = _zumul(la, cb)
                tgt = a[shift + i]
                if len(tgt) < len(prod):
                    tgt.extend([0] * (len(prod) - len(tgt)))
                for j, x in enumerate(prod):
                    tgt[j] -= x
                while tgt and not tgt[-1]:
                    tgt.pop()
        while a and not a[-1]:
            a.pop()
    return a


def _sgcd_primitive(a: list[list[int]], b: list[list[int]]) -> list:
    a = _spp_z(a)
    b = _spp_z(b)
    while b:
        a, b = b, _spp_z(_zsprem(a, b))
    return [RatU([Fraction(x) for x in c]) for c in a]


_SCREEN_PRIME = (1 << 61) - 1
_SCREEN_POINTS = (9157, 65537, 1048573)


def _ueval_mod(c: list[int], u0: int, p: int) -> int:
    acc = 0
    for x in reversed(c):
        acc = (acc * u0 + x) % p
    return acc


def _fp_coprime(a: list[int], b: list[int], p: int) -> bool:
    while b:
        inv = pow(b[-1], p - 2, p)
        while len(a) >= len(b):
            c = a[-1] * inv % p
            d = len(a) - len(b)
            for i, cb in enumerate(b):
                a[d + i] = (a[d + i] - c * cb) % p
            while a and not a[-1]:
                a.pop()
        a, b = b, a
    return len(a) == 1


def _provably_coprime(ca: list[list[int]], cb: list[list[int]]) -> bool:
    """Sound one-sided test: specialize u and reduce mod a large prime. When
    both s-leading coefficients survive the specialization, the resultant
    specializes faithfully, so a coprime image proves a constant gcd over
    Q(u). A nonconstant image proves nothing and the caller falls back."""
    p = _SCREEN_PRIME
    for u0 in _SCREEN_POINTS:
        if _ueval_mod(ca[-1], u0, p) == 0 or _ueval_mod(cb[-1], u0, p) == 0:
            continue
        a = [_ueval_mod(c, u0, p) for c in ca]
        b = [_ueval_mod(c, u0, p) for c in cb]
        if _fp_coprime(a, b, p):
            return True
    return False


def sgcd(a: list, b: list) -> list:
    a, b = list(a), list(b)
    if a and b and (isinstance(a[-1], RatU) or isinstance(b[-1], RatU)):
        # Euclid in Q(u)[s] thrashes on per-operation fraction reduction; a
        # primitive pseudo-remainder sequence over Z[u] avoids it entirely,
        # and the modular screen skips even that in the generic coprime case.
        ca = _ratu_cleared(a)
        cb = _ratu_cleared(b)
        if ca is not None and cb is not None:
            if len(ca) > 1 and len(cb) > 1 and _provably_coprime(ca, cb):
                return [RatU.const(1)]
            return _sgcd_primitive(ca, cb)
    while b:
        a, b = b, sdivmod(a, b)[1]
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def sderiv(p: list) -> list:
    return snorm([p[i] * i for i in range(1, len(p))])
