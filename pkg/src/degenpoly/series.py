"""Truncated formal power series with exact coefficients.

A Series is a finite prefix c_0 + c_1 v + ... + c_N v^N of a formal
power series in the variable named by ``var``, with coefficients in
one of three rings: plain rationals, LambdaPoly, or XPoly.  The stored
coefficients are the plain series coefficients; any factorial
normalisation belongs to whoever builds or reads the series, not to
this module.

Truncation discipline: a binary operation never manufactures precision,
so the result order is min(order_a, order_b).  Binary operations also
insist on an identical variable tag and an identical coefficient ring;
use promote() to embed a series into a larger ring first.  truncate()
only shortens.
"""

from __future__ import annotations

from typing import Callable, Sequence

from .rational import RAT_ONE, RAT_ZERO, Rational, as_rational, is_scalar
from .poly import LP_ONE, LP_ZERO, XP_ONE, XP_ZERO, LambdaPoly, XPoly, lambda_falling

__all__ = [
    "Series",
    "CoefficientRing",
    "RATIONAL_RING",
    "LAMBDA_RING",
    "XPOLY_RING",
    "NonInvertibleError",
    "diag_weight",
    "first_mismatch",
]


class NonInvertibleError(ZeroDivisionError):
    """Division by a series or coefficient that is not a unit."""


class CoefficientRing:
    """Descriptor for a coefficient ring: its zero, one, coercion, inversion."""

    __slots__ = ("name", "rank", "zero", "one", "coerce", "invert")

    def __init__(self, name, rank, zero, one, coerce, invert):
        self.name = name
        self.rank = rank
        self.zero = zero
        self.one = one
        self.coerce = coerce
        self.invert = invert

    def __repr__(self):
        return f"<ring {self.name}>"


def _coerce_rational(v):
    if is_scalar(v):
        return as_rational(v)
    if isinstance(v, LambdaPoly) and v.is_constant:
        return v.constant_value()
    raise TypeError(f"not a rational coefficient: {v!r}")


def _invert_rational(v):
    if not v:
        raise NonInvertibleError("constant term 0 is not invertible")
    return RAT_ONE / v


def _coerce_lambda(v):
    if isinstance(v, LambdaPoly):
        return v
    if is_scalar(v):
        return LambdaPoly.const(v)
    raise TypeError(f"not a LambdaPoly coefficient: {v!r}")


def _invert_lambda(v):
    if not (v.is_constant and v):
        raise NonInvertibleError(f"constant term {v} is not a unit")
    return LambdaPoly.const(RAT_ONE / v.constant_value())


def _coerce_xpoly(v):
    if isinstance(v, XPoly):
        return v
    if isinstance(v, LambdaPoly) or is_scalar(v):
        return XPoly.const(v)
    raise TypeError(f"not an XPoly coefficient: {v!r}")


def _invert_xpoly(v):
    c = v.coeff(0)
    if v.degree > 0 or not (c.is_constant and c):
        raise NonInvertibleError(f"constant term {v} is not a unit")
    return XPoly.const(RAT_ONE / c.constant_value())


RATIONAL_RING = CoefficientRing("rational", 0, RAT_ZERO, RAT_ONE, _coerce_rational, _invert_rational)
LAMBDA_RING = CoefficientRing("lambda", 1, LP_ZERO, LP_ONE, _coerce_lambda, _invert_lambda)
XPOLY_RING = CoefficientRing("xpoly", 2, XP_ZERO, XP_ONE, _coerce_xpoly, _invert_xpoly)


class Series:
    """Order-N truncation of a formal power series, exact coefficients."""

    __slots__ = ("var", "order", "ring", "coeffs")

    def __init__(self, var: str, order: int, coeffs: Sequence, ring: CoefficientRing):
        if order < 0:
            raise ValueError("series order must be nonnegative")
        if len(coeffs) > order + 1:
            raise ValueError(f"{len(coeffs)} coefficients for order {order}")
        cs = [ring.coerce(c) for c in coeffs]
        cs.extend([ring.zero] * (order + 1 - len(cs)))
        self.var = var
        self.order = order
        self.ring = ring
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, var, order, coeffs, ring) -> "Series":
        s = object.__new__(cls)
        s.var = var
        s.order = order
        s.ring = ring
        s.coeffs = coeffs
        return s

    @classmethod
    def constant(cls, value, var: str, order: int, ring: CoefficientRing) -> "Series":
        return cls(var, order, [value], ring)

    @classmethod
    def one(cls, var: str, order: int, ring: CoefficientRing) -> "Series":
        return cls.constant(1, var, order, ring)

    def coeff(self, n: int):
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def _check_mate(self, other: "Series"):
        if self.var != other.var:
            raise ValueError(f"variable mismatch: {self.var!r} vs {other.var!r}")
        if self.ring is not other.ring:
            raise ValueError(
                f"ring mismatch: {self.ring.name} vs {other.ring.name}; promote() first"
            )

    def promote(self, ring: CoefficientRing) -> "Series":
        """Embed into a ring at least as large (rationals ⊂ λ-polys ⊂ x-polys)."""
        if ring is self.ring:
            return self
        if ring.rank < self.ring.rank:
            raise ValueError(f"cannot demote {self.ring.name} series to {ring.name}")
        return Series(self.var, self.order, self.coeffs, ring)

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        if order == self.order:
            return self
        return Series._raw(self.var, order, self.coeffs[: order + 1], self.ring)

    def __add__(self, other):
        if isinstance(other, Series):
            self._check_mate(other)
            n = min(self.order, other.order)
            out = tuple(a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs[: n + 1]))
            return Series._raw(self.var, n, out, self.ring)
        try:
            c = self.ring.coerce(other)
        except TypeError:
            return NotImplemented
        out = (self.coeffs[0] + c,) + self.coeffs[1:]
        return Series._raw(self.var, self.order, out, self.ring)

    __radd__ = __add__

    def __neg__(self):
        return Series._raw(self.var, self.order, tuple(-c for c in self.coeffs), self.ring)

    def __sub__(self, other):
        if isinstance(other, Series):
            self._check_mate(other)
            n = min(self.order, other.order)
            out = tuple(a - b for a, b in zip(self.coeffs[: n + 1], other.coeffs[: n + 1]))
            return Series._raw(self.var, n, out, self.ring)
        return self + (-other if not is_scalar(other) else -as_rational(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Series):
            self._check_mate(other)
            n = min(self.order, other.order)
            zero = self.ring.zero
            out = [zero] * (n + 1)
            for i, ai in enumerate(self.coeffs[: n + 1]):
                if not ai:
                    continue
                for j in range(n + 1 - i):
                    bj = other.coeffs[j]
                    if bj:
                        out[i + j] = out[i + j] + ai * bj
            return Series._raw(self.var, n, tuple(out), self.ring)
        return self.scaled(other)

    __rmul__ = __mul__

    def scaled(self, factor) -> "Series":
        """Multiply every coefficient by a fixed ring element."""
        try:
            c = self.ring.coerce(factor)
        except TypeError:
            return NotImplemented
        return Series._raw(self.var, self.order, tuple(c * a for a in self.coeffs), self.ring)

    def reciprocal(self) -> "Series":
        """Multiplicative inverse; needs an invertible constant term."""
        inv = self.ring.invert(self.coeffs[0])
        n_max = self.order
        out = [self.ring.zero] * (n_max + 1)
        out[0] = inv
        a = self.coeffs
        for n in range(1, n_max + 1):
            s = self.ring.zero
            for k in range(1, n + 1):
                if a[k]:
                    s = s + a[k] * out[n - k]
            out[n] = -(inv * s)
        return Series._raw(self.var, n_max, tuple(out), self.ring)

    def compose(self, inner: "Series") -> "Series":
        """Substitute inner for this series' variable.

        The inner series must have zero constant term, and the outer
        coefficients must embed into the inner ring.  The result lives
        in the inner ring and variable, at order min of the two.
        """
        if inner.coeffs[0]:
            raise ValueError("inner series must have zero constant term")
        if self.ring.rank > inner.ring.rank:
            raise ValueError(
                f"outer ring {self.ring.name} does not embed into {inner.ring.name}"
            )
        ring = inner.ring
        n = min(self.order, inner.order)
        inner_t = inner.truncate(n)
        out = [ring.zero] * (n + 1)
        out[0] = ring.coerce(self.coeffs[0])
        pw = Series.one(inner.var, n, ring)
        top = min(n, len(self.coeffs) - 1)
        for k in range(1, top + 1):
            pw = pw * inner_t
            ck = self.coeffs[k]
            if not ck:
                continue
            c = ring.coerce(ck)
            for idx in range(k, n + 1):
                p = pw.coeffs[idx]
                if p:
                    out[idx] = out[idx] + c * p
        return Series._raw(inner.var, n, tuple(out), ring)

    def exp(self) -> "Series":
        """Exponential of a series with zero constant term."""
        if self.coeffs[0]:
            raise ValueError("exp needs a zero constant term")
        n = self.order
        out = [self.ring.zero] * (n + 1)
        out[0] = self.ring.one
        term = Series.one(self.var, n, self.ring)
        for k in range(1, n + 1):
            term = (term * self).scaled(Rational(1, k))
            for idx in range(k, n + 1):
                t = term.coeffs[idx]
                if t:
                    out[idx] = out[idx] + t
        return Series._raw(self.var, n, tuple(out), self.ring)

    def derivative(self) -> "Series":
        """Formal derivative; drops the truncation order by one."""
        if self.order == 0:
            raise ValueError("cannot differentiate an order-0 truncation")
        out = tuple((i + 1) * self.coeffs[i + 1] for i in range(self.order))
        return Series._raw(self.var, self.order - 1, out, self.ring)

    def shift_up(self, k: int) -> "Series":
        """Multiply by var^k; a valuation shift, so the order grows by k."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        if k == 0:
            return self
        return Series._raw(
            self.var, self.order + k, (self.ring.zero,) * k + self.coeffs, self.ring
        )

    def diag(self, weight: Callable[[int], object], ring: CoefficientRing | None = None) -> "Series":
        """Replace coefficient c_k by weight(k) * c_k.

        Pass ring= when the weights land outside the current ring, e.g.
        λ-dependent weights applied to a rational series.
        """
        target = ring or self.ring
        vals = []
        for k, c in enumerate(self.coeffs):
            w = weight(k)
            vals.append(target.coerce(w * target.coerce(c) if c else target.zero))
        return Series._raw(self.var, self.order, tuple(vals), target)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return (
            self.var == other.var
            and self.order == other.order
            and self.ring is other.ring
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.var, self.order, self.ring.name, self.coeffs))

    def __str__(self):
        inside = ", ".join(str(c) for c in self.coeffs)
        return f"Series[{self.var}; {self.ring.name}; O({self.var}^{self.order + 1})]({inside})"

    __repr__ = __str__


def diag_weight(s: Series, m: int) -> Series:
    """Apply the m-fold degenerate derivative diagonal: weight (k)_{m,λ} on c_k.

    This is the coefficient-level action of m passes of the operator
    that differentiates, rescales exponents by 1-λ, and restores the
    power of x; on x^k one pass multiplies by k, then k-λ, and so on.
    m = 0 is the identity.
    """
    if m < 0:
        raise ValueError("operator power must be nonnegative")
    ring = s.ring if s.ring.rank >= LAMBDA_RING.rank else LAMBDA_RING
    return s.diag(lambda k: lambda_falling(k, m), ring=ring)


def first_mismatch(a: Series, b: Series):
    """First index where two series disagree, up to the smaller order.

    Returns None when they agree, else (index, a_coeff, b_coeff).  The
    rings may differ; coefficients are compared by value.
    """
    if a.var != b.var:
        raise ValueError(f"variable mismatch: {a.var!r} vs {b.var!r}")
    n = min(a.order, b.order)
    for k in range(n + 1):
        x, y = a.coeffs[k], b.coeffs[k]
        same = (x == y) if a.ring.rank >= b.ring.rank else (y == x)
        if not same:
            return k, x, y
    return None
