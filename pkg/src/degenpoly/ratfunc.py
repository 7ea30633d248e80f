"""Rational functions in x over the λ-polynomial ring.

A RationalFn is a pair num/den of XPoly values whose denominator has
an invertible constant term (a nonzero λ-free rational), so it always
admits a power-series expansion around x = 0.  No gcd reduction is
attempted; equality is decided by cross-multiplication, which is exact
and cheap at the sizes that occur here.

The module also provides the two substitution rules that do the heavy
lifting elsewhere: the Möbius substitution x -> x/(1 + s*x) applied to
a polynomial (returning a RationalFn with denominator (1+s*x)^deg) and
the gamma-moment rule that integrates a polynomial in y against the
weight e^{-y} on (0, ∞) by sending y^k to k!.
"""

from __future__ import annotations

from math import factorial
from typing import Sequence, Union

from .rational import Rational, as_rational, is_scalar
from .poly import LP_ONE, XP_ONE, LambdaPoly, XPoly
from .series import LAMBDA_RING, NonInvertibleError, Series

__all__ = [
    "RationalFn",
    "PoleError",
    "substitute_mobius",
    "gamma_moment",
]


class PoleError(ZeroDivisionError):
    """Evaluation of a rational function where its denominator vanishes."""


def _as_xpoly(v) -> XPoly:
    if isinstance(v, XPoly):
        return v
    if isinstance(v, LambdaPoly) or is_scalar(v):
        return XPoly.const(v)
    raise TypeError(f"cannot use {v!r} as a polynomial in x")


class RationalFn:
    """Quotient of two XPoly values, expandable around x = 0."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=XP_ONE):
        num = _as_xpoly(num)
        den = _as_xpoly(den)
        c = den.coeff(0)
        if not (c.is_constant and c):
            raise NonInvertibleError(
                f"denominator constant term {c} is not an invertible rational"
            )
        self.num = num
        self.den = den

    def _coerce(self, other):
        if isinstance(other, RationalFn):
            return other
        try:
            return RationalFn(_as_xpoly(other))
        except TypeError:
            return None

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        raise TypeError("RationalFn is unhashable (equality is by cross-multiplication)")

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFn(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFn(-self.num, self.den)

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
        return RationalFn(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("rational function powers must be nonnegative integers")
        return RationalFn(self.num**n, self.den**n)

    def expand(self, order: int) -> Series:
        """Power-series expansion in x to the given order, λ kept symbolic."""
        num = Series("x", order, self.num.coeffs[: order + 1], LAMBDA_RING)
        den = Series("x", order, self.den.coeffs[: order + 1], LAMBDA_RING)
        return num * den.reciprocal()

    def eval(self, x, lam) -> Rational:
        """Evaluate at rational x and λ; raises PoleError on a vanishing denominator."""
        d = self.den.eval(x, lam)
        if not d:
            raise PoleError(f"denominator vanishes at x={x}, λ={lam}")
        return self.num.eval(x, lam) / d

    def substituted(self, shift) -> "RationalFn":
        """Apply x -> x/(1 + shift*x) to the whole rational function."""
        dn, dd = self.num.degree, self.den.degree
        base = XP_ONE + XPoly.monomial(shift, 1)
        top = substitute_mobius(self.num, shift).num if self.num else XPoly()
        bot = substitute_mobius(self.den, shift).num
        # num/B^dn over den/B^dd; clear to a polynomial quotient
        if dn >= dd:
            return RationalFn(top, bot * base ** (dn - dd))
        return RationalFn(top * base ** (dd - dn), bot)

    def text(self, lam_sym: str = "λ", x_sym: str = "x", latex: bool = False) -> str:
        num = self.num.text(lam_sym, x_sym, latex)
        den = self.den.text(lam_sym, x_sym, latex)
        if latex:
            return f"\\frac{{{num}}}{{{den}}}"
        if self.den == XP_ONE:
            return num
        return f"({num}) / ({den})"

    def latex(self) -> str:
        return self.text(lam_sym="\\lambda", latex=True)

    def __str__(self):
        return self.text()

    def __repr__(self):
        return f"RationalFn({self.text()!r})"


def substitute_mobius(p: XPoly, shift) -> RationalFn:
    """Substitute x -> x/(1 + shift*x) into a polynomial and clear denominators.

    shift may be a rational or a LambdaPoly; the denominator of the
    result is (1 + shift*x)^deg(p).  With shift = λ this sends the
    degenerate Bell polynomial to its second-kind sibling; with
    shift = -λ it undoes that; with shift = -1 it is the x/(1-x)
    substitution that turns geometric polynomials into Eulerian ones.
    """
    p = _as_xpoly(p)
    s = shift if isinstance(shift, LambdaPoly) else LambdaPoly.const(as_rational(shift))
    base = XP_ONE + XPoly.monomial(s, 1)
    d = p.degree
    if d < 0:
        return RationalFn(XPoly(), XP_ONE)
    num = XPoly()
    pw = XP_ONE  # base^(d-k), built downward
    # iterate k from d down to 0 so the base power grows as the x power shrinks
    for k in range(d, -1, -1):
        c = p.coeff(k)
        if c:
            num = num + XPoly.monomial(c, k) * pw
        if k:
            pw = pw * base
    return RationalFn(num, base**d)


def gamma_moment(y_coeffs: Sequence[Union[XPoly, LambdaPoly]]) -> XPoly:
    """Integrate sum_k y_coeffs[k] * y^k against e^{-y} dy on (0, ∞).

    The k-th moment of the unit exponential weight is exactly k!, so
    the integral collapses to sum_k k! * y_coeffs[k], an XPoly.  The
    entries may be XPoly or anything that coerces into one.
    """
    out = XPoly()
    for k, c in enumerate(y_coeffs):
        c = _as_xpoly(c)
        if c:
            out = out + factorial(k) * c
    return out
