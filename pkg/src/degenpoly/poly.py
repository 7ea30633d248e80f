"""Dense exact polynomials in the deformation parameter and in x.

LambdaPoly is a polynomial in the deformation parameter (rendered as
the symbol λ) with rational coefficients.  XPoly is a polynomial in x
whose coefficients are LambdaPoly values, so it is effectively a
bivariate polynomial in (x, λ).  Coefficients are stored densely,
lowest degree first, with no trailing zeros; the zero polynomial has
an empty coefficient tuple.  Instances are immutable and all
arithmetic is exact.

Scalars (ints, rationals) coerce into either class on the fly, and a
LambdaPoly coerces into an XPoly as a constant, so mixed arithmetic
such as ``2 * p - q / 3`` works without ceremony.
"""

from __future__ import annotations

from typing import Iterable, Sequence, Union

from .rational import RAT_ONE, RAT_ZERO, Rational, as_rational, is_scalar

__all__ = [
    "LambdaPoly",
    "XPoly",
    "LAM",
    "LP_ONE",
    "LP_ZERO",
    "X",
    "XP_ONE",
    "XP_ZERO",
    "lambda_falling",
    "lambda_substitute",
]


def _strip(coeffs: list) -> tuple:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


def _format_rational(q, latex: bool) -> str:
    if latex and q.denominator != 1:
        sign = "-" if q < 0 else ""
        return f"{sign}\\frac{{{abs(q.numerator)}}}{{{q.denominator}}}"
    return str(q)


def _format_power(sym: str, i: int, latex: bool) -> str:
    if i == 0:
        return ""
    if i == 1:
        return sym
    return f"{sym}^{{{i}}}" if latex else f"{sym}^{i}"


def _join_terms(terms: list[tuple[bool, str]]) -> str:
    # terms: (negative?, body) pairs in increasing degree
    if not terms:
        return "0"
    out = []
    for idx, (neg, body) in enumerate(terms):
        if idx == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


class LambdaPoly:
    """Polynomial in the deformation parameter with rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _strip([as_rational(c) for c in coeffs])

    @classmethod
    def _raw(cls, coeffs: tuple) -> "LambdaPoly":
        # internal: coeffs already Rational and stripped
        p = object.__new__(cls)
        p.coeffs = coeffs
        return p

    @classmethod
    def const(cls, value) -> "LambdaPoly":
        q = as_rational(value)
        return cls._raw((q,) if q else ())

    @classmethod
    def monomial(cls, coeff, degree: int) -> "LambdaPoly":
        q = as_rational(coeff)
        if not q:
            return LP_ZERO
        return cls._raw((RAT_ZERO,) * degree + (q,))

    @property
    def degree(self) -> int:
        """Degree in the deformation parameter; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> Rational:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else RAT_ZERO

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_value(self) -> Rational:
        """The value of a constant polynomial, as a plain rational."""
        if not self.is_constant:
            raise ValueError(f"not a constant polynomial: {self}")
        return self.coeffs[0] if self.coeffs else RAT_ZERO

    def eval(self, value) -> Rational:
        """Evaluate at a rational value of the deformation parameter."""
        v = as_rational(value)
        acc = RAT_ZERO
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def scale_lambda(self, factor) -> "LambdaPoly":
        """Substitute factor * λ for λ."""
        f = as_rational(factor)
        pw = RAT_ONE
        out = []
        for c in self.coeffs:
            out.append(c * pw)
            pw = pw * f
        return LambdaPoly._raw(_strip(out))

    def _coerce(self, other):
        if isinstance(other, LambdaPoly):
            return other
        if is_scalar(other):
            return LambdaPoly.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return LambdaPoly._raw(_strip(out))

    __radd__ = __add__

    def __neg__(self):
        return LambdaPoly._raw(tuple(-c for c in self.coeffs))

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
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return LP_ZERO
        out = [RAT_ZERO] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = out[i + j] + ai * bj
        return LambdaPoly._raw(_strip(out))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not is_scalar(other):
            return NotImplemented
        q = as_rational(other)
        if not q:
            raise ZeroDivisionError("division of a polynomial by zero")
        return self * (RAT_ONE / q)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        acc = LP_ONE
        for _ in range(n):
            acc = acc * self
        return acc

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        if self.is_constant:
            return hash(self.constant_value())
        return hash(("LambdaPoly", self.coeffs))

    def _terms(self, sym: str, latex: bool, xpart: str = "") -> list[tuple[bool, str]]:
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            neg = c < 0
            mag = -c if neg else c
            lam = _format_power(sym, i, latex)
            # a space keeps \lambda from swallowing a following letter
            sep = " " if latex and lam and xpart else ""
            body = lam + sep + xpart
            if mag != 1 or not body:
                body = _format_rational(mag, latex) + body
            terms.append((neg, body))
        return terms

    def text(self, sym: str = "λ", latex: bool = False) -> str:
        """Canonical rendering: increasing degree, p/q rationals, explicit ^."""
        return _join_terms(self._terms(sym, latex))

    def latex(self) -> str:
        return self.text(sym="\\lambda", latex=True)

    def __str__(self):
        return self.text()

    def __repr__(self):
        return f"LambdaPoly({self.text()!r})"


LP_ZERO = LambdaPoly._raw(())
LP_ONE = LambdaPoly._raw((RAT_ONE,))
LAM = LambdaPoly._raw((RAT_ZERO, RAT_ONE))


class XPoly:
    """Polynomial in x whose coefficients are LambdaPoly values."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = []
        for c in coeffs:
            if isinstance(c, LambdaPoly):
                cs.append(c)
            elif is_scalar(c):
                cs.append(LambdaPoly.const(c))
            else:
                raise TypeError(f"bad XPoly coefficient: {c!r}")
        self.coeffs = _strip(cs)

    @classmethod
    def _raw(cls, coeffs: tuple) -> "XPoly":
        p = object.__new__(cls)
        p.coeffs = coeffs
        return p

    @classmethod
    def const(cls, value) -> "XPoly":
        c = value if isinstance(value, LambdaPoly) else LambdaPoly.const(value)
        return cls._raw((c,) if c else ())

    @classmethod
    def monomial(cls, coeff, degree: int) -> "XPoly":
        c = coeff if isinstance(coeff, LambdaPoly) else LambdaPoly.const(coeff)
        if not c:
            return XP_ZERO
        return cls._raw((LP_ZERO,) * degree + (c,))

    @classmethod
    def from_rationals(cls, coeffs: Sequence) -> "XPoly":
        """Build a λ-free polynomial from plain rational coefficients."""
        return cls(coeffs)

    @property
    def degree(self) -> int:
        """Degree in x; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lambda_degree(self) -> int:
        """Largest degree in the deformation parameter over all coefficients."""
        return max((c.degree for c in self.coeffs), default=-1)

    def coeff(self, k: int) -> LambdaPoly:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else LP_ZERO

    def eval_x(self, value) -> LambdaPoly:
        """Substitute a rational for x; the result still depends on λ."""
        v = as_rational(value)
        acc = LP_ZERO
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def eval(self, x, lam) -> Rational:
        """Evaluate at rational x and rational deformation parameter."""
        return self.eval_x(x).eval(lam)

    def eval_lambda(self, value) -> "XPoly":
        """Substitute a rational for λ, keeping x symbolic."""
        v = as_rational(value)
        return XPoly._raw(_strip([LambdaPoly.const(c.eval(v)) for c in self.coeffs]))

    def scale_lambda(self, factor) -> "XPoly":
        return XPoly._raw(_strip([c.scale_lambda(factor) for c in self.coeffs]))

    def _coerce(self, other):
        if isinstance(other, XPoly):
            return other
        if isinstance(other, LambdaPoly) or is_scalar(other):
            return XPoly.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return XPoly._raw(_strip(out))

    __radd__ = __add__

    def __neg__(self):
        return XPoly._raw(tuple(-c for c in self.coeffs))

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
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return XP_ZERO
        out = [LP_ZERO] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = out[i + j] + ai * bj
        return XPoly._raw(_strip(out))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not is_scalar(other):
            return NotImplemented
        q = as_rational(other)
        if not q:
            raise ZeroDivisionError("division of a polynomial by zero")
        return self * (RAT_ONE / q)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        acc = XP_ONE
        for _ in range(n):
            acc = acc * self
        return acc

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0]) if self.coeffs else hash(LP_ZERO)
        return hash(("XPoly", self.coeffs))

    def text(self, lam_sym: str = "λ", x_sym: str = "x", latex: bool = False) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            xpart = _format_power(x_sym, k, latex)
            if len([q for q in c.coeffs if q]) == 1:
                # single monomial in λ: fold signs and the trivial factor 1
                terms.extend(c._terms(lam_sym, latex, xpart))
            elif k == 0:
                terms.extend(c._terms(lam_sym, latex))
            else:
                terms.append((False, f"({c.text(lam_sym, latex)}){xpart}"))
        return _join_terms(terms)

    def latex(self) -> str:
        return self.text(lam_sym="\\lambda", latex=True)

    def __str__(self):
        return self.text()

    def __repr__(self):
        return f"XPoly({self.text()!r})"


XP_ZERO = XPoly._raw(())
XP_ONE = XPoly._raw((LP_ONE,))
X = XPoly._raw((LP_ZERO, LP_ONE))

PolyLike = Union[LambdaPoly, XPoly]


def lambda_falling(base, m: int) -> LambdaPoly:
    """m-factor falling product base * (base - λ) * ... * (base - (m-1)λ).

    base may be an int, a rational, or a LambdaPoly.  For base 1 this
    is the coefficient sequence of the degenerate exponential; for an
    integer base k it is the diagonal weight attached to x^k by the
    degenerate derivative operator.
    """
    if m < 0:
        raise ValueError("falling products need a nonnegative length")
    b = base if isinstance(base, LambdaPoly) else LambdaPoly.const(base)
    acc = LP_ONE
    for j in range(m):
        acc = acc * (b - LambdaPoly.monomial(j, 1))
    return acc


def lambda_substitute(p: PolyLike, *, value=None, scale=None) -> PolyLike:
    """Exact substitution for the deformation parameter.

    Exactly one of the keywords must be given: value=c performs λ -> c
    (value=0 extracts the classical limit), scale=f performs λ -> f*λ.
    The result is the same kind of polynomial as the input.
    """
    if (value is None) == (scale is None):
        raise ValueError("give exactly one of value= or scale=")
    if isinstance(p, LambdaPoly):
        if value is not None:
            return LambdaPoly.const(p.eval(value))
        return p.scale_lambda(scale)
    if isinstance(p, XPoly):
        if value is not None:
            return p.eval_lambda(value)
        return p.scale_lambda(scale)
    raise TypeError(f"cannot substitute into {p!r}")
