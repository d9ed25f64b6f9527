"""Exact arithmetic over the coefficient field Q(s) with s**2 = t.

Every scalar in the engine is a rational function in the variable s, a
formal square root of t.  Keeping integer exponents in s avoids
half-integer bookkeeping; display converts back to half-integer powers
of t ("t^(3/2) - t^(-1/2)").  There is no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

__all__ = [
    "LaurentPoly",
    "RationalFunction",
    "t_power",
    "s_power",
    "add",
    "mul",
    "div",
    "is_zero",
]

_F0 = Fraction(0)
_F1 = Fraction(1)


def _frac_gcd(values):
    """Positive rational c such that every v/c is an integer and the
    integers are coprime."""
    num = 0
    den = 1
    for v in values:
        num = gcd(num, v.numerator)
        den = lcm(den, v.denominator)
    return Fraction(num, den)


class LaurentPoly:
    """Sparse Laurent polynomial in s over Q: exponent -> nonzero Fraction."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                if not isinstance(v, Fraction):
                    v = Fraction(v)
                if v:
                    c[int(e)] = v
        self._c = c

    @classmethod
    def _raw(cls, c):
        p = object.__new__(cls)
        p._c = c
        return p

    @classmethod
    def zero(cls):
        return _LP_ZERO

    @classmethod
    def one(cls):
        return _LP_ONE

    @classmethod
    def s_power(cls, k, coeff=1):
        coeff = coeff if isinstance(coeff, Fraction) else Fraction(coeff)
        if not coeff:
            return _LP_ZERO
        return cls._raw({int(k): coeff})

    # -- structure ---------------------------------------------------------

    def items(self):
        return self._c.items()

    def terms(self):
        return sorted(self._c.items())

    @property
    def is_zero(self):
        return not self._c

    @property
    def is_one(self):
        return self._c == {0: _F1}

    @property
    def is_monomial(self):
        return len(self._c) == 1

    def monomial(self):
        """The (exponent, coefficient) pair; raises unless exactly one term."""
        if len(self._c) != 1:
            raise ValueError("not a monomial: %s" % self)
        return next(iter(self._c.items()))

    @property
    def valuation(self):
        if not self._c:
            raise ValueError("zero polynomial has no valuation")
        return min(self._c)

    @property
    def degree(self):
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return max(self._c)

    def leading_coefficient(self):
        return self._c[self.degree]

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self._c:
            return other
        if not other._c:
            return self
        c = dict(self._c)
        for e, v in other._c.items():
            nv = c.get(e, _F0) + v
            if nv:
                c[e] = nv
            else:
                c.pop(e, None)
        return LaurentPoly._raw(c)

    def __neg__(self):
        return LaurentPoly._raw({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return _LP_ZERO
        if len(a) == 1:
            (e, v), = a.items()
            return LaurentPoly._raw({e + e2: v * v2 for e2, v2 in b.items()})
        if len(b) == 1:
            (e, v), = b.items()
            return LaurentPoly._raw({e + e2: v * v2 for e2, v2 in a.items()})
        c = {}
        for e1, v1 in a.items():
            for e2, v2 in b.items():
                e = e1 + e2
                nv = c.get(e, _F0) + v1 * v2
                if nv:
                    c[e] = nv
                else:
                    c.pop(e, None)
        return LaurentPoly._raw(c)

    def scale(self, f):
        f = f if isinstance(f, Fraction) else Fraction(f)
        if not f:
            return _LP_ZERO
        return LaurentPoly._raw({e: v * f for e, v in self._c.items()})

    def shift(self, k):
        """Multiply by s**k."""
        if k == 0:
            return self
        return LaurentPoly._raw({e + k: v for e, v in self._c.items()})

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    # -- display -----------------------------------------------------------

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e, v in sorted(self._c.items(), reverse=True):
            parts.append(_term_str(e, v))
        out = parts[0]
        for p in parts[1:]:
            if p.startswith("-"):
                out += " - " + p[1:]
            else:
                out += " + " + p
        return out

    def __repr__(self):
        return "LaurentPoly(%s)" % self

    def to_json(self):
        return [[e, [v.numerator, v.denominator]] for e, v in self.terms()]


_LP_ZERO = LaurentPoly._raw({})
_LP_ONE = LaurentPoly._raw({0: _F1})


def _power_str(e):
    """Render s**e as a half-integer power of t."""
    if e == 0:
        return ""
    if e == 2:
        return "t"
    if e % 2 == 0:
        k = e // 2
        return "t^%d" % k if k > 0 else "t^(%d)" % k
    return "t^(%d/2)" % e


def _frac_str(v):
    return str(v)


def _term_str(e, v):
    pw = _power_str(e)
    if not pw:
        return _frac_str(v)
    if v == 1:
        return pw
    if v == -1:
        return "-" + pw
    return "%s*%s" % (_frac_str(v), pw)


# -- ordinary-polynomial helpers for normalization (exponents >= 0) --------
#
# Normalization works on primitive integer polynomials: big-int arithmetic
# with a primitive pseudo-remainder sequence keeps the gcd fast where a
# Fraction-based Euclid blows up.


def _int_content(p):
    g = 0
    for v in p.values():
        g = gcd(g, v)
    return g


def _int_primitive(p):
    g = _int_content(p)
    if g > 1:
        return {e: v // g for e, v in p.items()}
    return p


def _int_prem(a, b):
    """Pseudo-remainder of integer polynomial dicts (lc(b)^k a mod b)."""
    db = max(b)
    lb = b[db]
    r = dict(a)
    while r:
        dr = max(r)
        if dr < db:
            break
        lr = r.pop(dr)
        if lb != 1:
            for e in r:
                r[e] *= lb
        for e, v in b.items():
            if e == db:
                continue
            e2 = e + dr - db
            nv = r.get(e2, 0) - lr * v
            if nv:
                r[e2] = nv
            else:
                r.pop(e2, None)
    return r


def _int_poly_gcd(a, b):
    """Primitive positive-leading gcd of nonzero integer polynomial dicts."""
    a = _int_primitive(a)
    b = _int_primitive(b)
    if max(a) < max(b):
        a, b = b, a
    while b:
        r = _int_prem(a, b)
        a, b = b, _int_primitive(r) if r else {}
    if a[max(a)] < 0:
        a = {e: -v for e, v in a.items()}
    return a


def _int_exact_div(n, g):
    """Exact quotient of integer polynomial dicts (g must divide n)."""
    if g == {0: 1}:
        return n
    q = {}
    r = dict(n)
    dg = max(g)
    lg = g[dg]
    while r:
        dr = max(r)
        c, rem = divmod(r[dr], lg)
        if rem or dr < dg:
            raise ArithmeticError("inexact polynomial division")
        q[dr - dg] = c
        for e, v in g.items():
            e2 = e + dr - dg
            nv = r.get(e2, 0) - c * v
            if nv:
                r[e2] = nv
            else:
                r.pop(e2, None)
    return q


def _fraction_to_int(p):
    """Split a Fraction dict into (positive content, primitive int dict)."""
    c = _frac_gcd(p.values())
    return c, {e: int(v / c) for e, v in p.items()}


class RationalFunction:
    """Normalized quotient of Laurent polynomials in s.

    Invariants of the stored representation:

    * the denominator is an ordinary polynomial (lowest exponent 0) with
      coprime integer coefficients and positive leading coefficient;
    * numerator and denominator share no polynomial factor;
    * zero is stored as 0/1.

    Two values are equal iff their stored pairs are identical, so equality
    is decidable by construction.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = _LP_ONE
        if not isinstance(num, LaurentPoly):
            num = LaurentPoly.s_power(0, Fraction(num))
        if not isinstance(den, LaurentPoly):
            den = LaurentPoly.s_power(0, Fraction(den))
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            self.num = _LP_ZERO
            self.den = _LP_ONE
            return
        if den.is_one:
            self.num = num
            self.den = den
            return
        vn = num.valuation
        vd = den.valuation
        cn, n = _fraction_to_int(num.shift(-vn)._c)
        cd, d = _fraction_to_int(den.shift(-vd)._c)
        if max(d) > 0 and max(n) > 0:
            g = _int_poly_gcd(n, d)
            if max(g) > 0:
                n = _int_exact_div(n, g)
                d = _int_exact_div(d, g)
        if d[max(d)] < 0:
            d = {e: -v for e, v in d.items()}
            n = {e: -v for e, v in n.items()}
        scale = cn / cd
        if max(d) == 0:
            scale /= d[0]
            d = {0: 1}
        self.num = LaurentPoly(
            {e: v * scale for e, v in n.items()}).shift(vn - vd)
        self.den = LaurentPoly._raw({e: Fraction(v) for e, v in d.items()})

    @classmethod
    def _raw(cls, num, den):
        r = object.__new__(cls)
        r.num = num
        r.den = den
        return r

    @classmethod
    def zero(cls):
        return _RF_ZERO

    @classmethod
    def one(cls):
        return _RF_ONE

    @classmethod
    def from_laurent(cls, p):
        return cls._raw(p, _LP_ONE)

    @classmethod
    def t_power(cls, k):
        """The monomial t**k for half-integer k (2k must be an integer)."""
        e = 2 * Fraction(k)
        if e.denominator != 1:
            raise ValueError("t_power needs a half-integer exponent, got %s" % k)
        return cls._raw(LaurentPoly.s_power(int(e)), _LP_ONE)

    @classmethod
    def s_power(cls, k, coeff=1):
        return cls._raw(LaurentPoly.s_power(k, coeff), _LP_ONE)

    # -- predicates ---------------------------------------------------------

    @property
    def is_zero(self):
        return self.num.is_zero

    @property
    def is_one(self):
        return self.num.is_one and self.den.is_one

    @property
    def is_monomial(self):
        return self.den.is_one and self.num.is_monomial

    def __bool__(self):
        return not self.num.is_zero

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(v):
        if isinstance(v, RationalFunction):
            return v
        if isinstance(v, LaurentPoly):
            return RationalFunction.from_laurent(v)
        if isinstance(v, (int, Fraction)):
            return RationalFunction._raw(
                LaurentPoly.s_power(0, Fraction(v)), _LP_ONE)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den is o.den or self.den == o.den:
            if self.den.is_one:
                return RationalFunction._raw(self.num + o.num, _LP_ONE)
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den,
                                self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._raw(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den.is_one and o.den.is_one:
            return RationalFunction._raw(self.num * o.num, _LP_ONE)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.invert()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.invert()

    def invert(self):
        if self.num.is_zero:
            raise ZeroDivisionError("inverting the zero rational function")
        return RationalFunction(self.den, self.num)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    # -- display ------------------------------------------------------------

    def __str__(self):
        if self.den.is_one:
            return str(self.num)
        return "(%s)/(%s)" % (self.num, self.den)

    def __repr__(self):
        return "RationalFunction(%s)" % self

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}


_RF_ZERO = RationalFunction._raw(_LP_ZERO, _LP_ONE)
_RF_ONE = RationalFunction._raw(_LP_ONE, _LP_ONE)


# -- module-level operation set --------------------------------------------


def t_power(k):
    return RationalFunction.t_power(k)


def s_power(k, coeff=1):
    return RationalFunction.s_power(k, coeff)


def add(a, b):
    return a + b


def mul(a, b):
    return a * b


def div(a, b):
    """Exact division; raises ZeroDivisionError when b == 0."""
    return a / b


def is_zero(a):
    return a.is_zero
