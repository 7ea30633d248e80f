"""Machine-checkable identity suite over the polynomial families.

Every check states an identity between two (or three) independently
computed exact quantities and reports a Verdict: pass/fail, the bounds
actually checked, and on failure the first offending indices together
with both values.  Checks are registered with a deliberate fault
("negative control") that can be switched on to prove the check can
fail; a healthy suite passes normally and fails in exactly the
targeted way under its control.

All comparisons are exact; there are no tolerances anywhere.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb, factorial
from typing import Callable, Optional

from .rational import RAT_ONE, RAT_ZERO, Rational, as_rational
from .poly import (
    LAM,
    LP_ONE,
    LP_ZERO,
    X,
    XP_ONE,
    LambdaPoly,
    XPoly,
    lambda_falling,
    lambda_substitute,
)
from .series import LAMBDA_RING, RATIONAL_RING, Series, diag_weight, first_mismatch
from .ratfunc import RationalFn, gamma_moment, substitute_mobius
from .render import value_to_json
from . import families as fam

__all__ = [
    "Verdict",
    "IdentityCheck",
    "REGISTRY",
    "run_check",
    "run_all",
    "verdict_to_dict",
    "verdicts_to_json",
]


@dataclass(frozen=True)
class Verdict:
    """Outcome of one identity check."""

    id: str
    status: str  # "pass" | "fail"
    checked_range: dict
    description: str
    params: dict
    counterexample: Optional[dict] = None

    @property
    def ok(self) -> bool:
        return self.status == "pass"


@dataclass(frozen=True)
class IdentityCheck:
    """A registered check: its bounds, runner, and negative control."""

    id: str
    description: str
    params: dict
    fn: Callable[..., Verdict]
    perturbation: str


def _done(check_id, description, params, failure=None) -> Verdict:
    if failure is None:
        return Verdict(check_id, "pass", dict(params), description, dict(params))
    indices, lhs, rhs = failure
    return Verdict(
        check_id,
        "fail",
        dict(params),
        description,
        dict(params),
        {"indices": indices, "lhs": lhs, "rhs": rhs},
    )


def _f_eval(coeffs, k) -> Rational:
    acc = RAT_ZERO
    for c in reversed(coeffs):
        acc = acc * k + c
    return acc


def _poly_battery(d_max: int):
    # monomials of each degree, then one polynomial mixing all of them
    fs = [((RAT_ZERO,) * d + (RAT_ONE,), f"x^{d}" if d else "1") for d in range(d_max + 1)]
    fs.append((tuple(as_rational(j + 1) for j in range(d_max + 1)), "mixed"))
    return fs


# ---------------------------------------------------------------------------
# individual checks

_D_T1 = (
    "integrating the partially deformed Bell polynomial of x*y in y against "
    "the unit exponential weight yields the deformed geometric polynomial"
)


def check_T1(n_max=16, perturbed=False) -> Verdict:
    params = {"n_max": n_max}
    failure = None
    for n in range(n_max + 1):
        p = fam.bell_partial_deg(n)
        # p(x*y) collected by powers of y: the y^k slot holds coeff_k * x^k
        moments = [XPoly.monomial(p.coeff(k), k) for k in range(p.degree + 1)]
        if perturbed:
            moments = [XPoly()] + moments  # sneak in an extra factor of y
        lhs = gamma_moment(moments)
        rhs = fam.geometric_deg(n)
        if lhs != rhs:
            failure = ({"n": n}, lhs, rhs)
            break
    return _done("T1", _D_T1, params, failure)


_D_L2 = (
    "n-fold x d/dx on a series equals the S2-weighted sum of x^k times "
    "its k-th derivative"
)


def check_L2(n_max=16, g: Series | None = None, perturbed=False) -> Verdict:
    params = {"n_max": n_max}
    if g is None:
        g = fam.e_lambda_series(n_max + 5, "x")
    if g.order < n_max + 5:
        raise ValueError(f"base series order {g.order} < n_max + 5 = {n_max + 5}")
    ders = [g]
    for _ in range(n_max):
        ders.append(ders[-1].derivative())
    failure = None
    for n in range(n_max + 1):
        lhs = g.diag(lambda k: k**n)
        rhs = Series(g.var, g.order, [], g.ring)
        for k in range(n + 1):
            c = fam.stirling("S2", n, k)
            if perturbed and (n, k) == (1, 1):
                c = 2 * c
            if c:
                rhs = rhs + ders[k].shift_up(k).scaled(c)
        bad = first_mismatch(lhs, rhs)
        if bad is not None:
            failure = ({"n": n, "coeff": bad[0]}, bad[1], bad[2])
            break
    return _done("L2", _D_L2, params, failure)


_D_T3 = (
    "sampling a polynomial along the coefficient index of a base series "
    "equals its S2-weighted derivative expansion"
)


def check_T3(d_max=4, r_max=3, order=16, f_coeffs=None, g_id=None, perturbed=False) -> Verdict:
    params = {"d_max": d_max, "r_max": r_max, "order": order}
    bases = [
        ("e_lambda", fam.e_lambda_series(order, "x")),
        ("geometric", fam.geom_series(order)),
    ]
    bases += [(f"binomial_{r}", fam.binom_series(r, order)) for r in range(2, r_max + 1)]
    if g_id is not None:
        bases = [(gid, g) for gid, g in bases if gid == g_id]
        if not bases:
            raise ValueError(f"unknown base series {g_id!r}")
    battery = _poly_battery(d_max) if f_coeffs is None else [(tuple(map(as_rational, f_coeffs)), "given")]
    failure = None
    for g_label, g in bases:
        ders = [g]
        for _ in range(max(len(fc) for fc, _ in battery) - 1):
            ders.append(ders[-1].derivative())
        for fc, f_label in battery:
            shift = 1 if perturbed else 0
            lhs = g.diag(lambda k: _f_eval(fc, k + shift))
            rhs = Series(g.var, g.order, [], g.ring)
            for n, fn in enumerate(fc):
                if not fn:
                    continue
                for k in range(n + 1):
                    c = fam.stirling("S2", n, k)
                    if c:
                        rhs = rhs + ders[k].shift_up(k).scaled(fn * c)
            bad = first_mismatch(lhs, rhs)
            if bad is not None:
                failure = ({"g": g_label, "f": f_label, "coeff": bad[0]}, bad[1], bad[2])
                break
        if failure:
            break
    return _done("T3", _D_T3, params, failure)


_D_T4 = (
    "deformed exponential sums sampled by a polynomial equal the deformed "
    "exponential times the matching second-kind deformed Bell combination"
)


def check_T4(d_max=6, order=16, perturbed=False) -> Verdict:
    params = {"d_max": d_max, "order": order}
    e = fam.e_lambda_series(order, "x")
    failure = None
    for fc, f_label in _poly_battery(d_max):
        lhs = e.diag(lambda k: _f_eval(fc, k) + (k if perturbed else 0))
        combo = Series("x", order, [], LAMBDA_RING)
        for n, fn in enumerate(fc):
            if fn:
                combo = combo + fam.bell_second_deg(n).expand(order).scaled(fn)
        rhs = e * combo
        bad = first_mismatch(lhs, rhs)
        if bad is not None:
            failure = ({"f": f_label, "coeff": bad[0]}, bad[1], bad[2])
            break
    return _done("T4", _D_T4, params, failure)


_D_T5T6 = (
    "the second-kind deformed Bell polynomial equals the first kind under "
    "x -> x/(1+λx), and the inverse substitution recovers the first kind"
)


def check_T5_T6(n_max=12, order=16, perturbed=False) -> Verdict:
    params = {"n_max": n_max, "order": order}
    if n_max > order:
        raise ValueError("order must be at least n_max")
    sign = 1 if perturbed else -1
    # series expansion of x/(1+λx): alternating geometric in λx
    inner = Series(
        "x",
        order,
        [LP_ZERO] + [LambdaPoly.monomial(sign**(k - 1), k - 1) for k in range(1, order + 1)],
        LAMBDA_RING,
    )
    failure = None
    for n in range(n_max + 1):
        rf = fam.bell_second_deg(n)
        closed = rf.expand(order)
        outer = Series("u", order, fam.bell_deg(n).coeffs, LAMBDA_RING)
        composed = outer.compose(inner)
        bad = first_mismatch(closed, composed)
        if bad is not None:
            failure = ({"n": n, "coeff": bad[0]}, bad[1], bad[2])
            break
        back = rf.substituted(-LAM)
        first = RationalFn(fam.bell_deg(n))
        if back != first:
            failure = ({"n": n, "leg": "inverse"}, back, first)
            break
    return _done("T5T6", _D_T5T6, params, failure)


def _s1_lambda_weight(m: int, l: int) -> LambdaPoly:
    # S1(m, l) λ^{m-l}: the weight converting power sums to falling products
    return fam.stirling("S1", m, l) * LambdaPoly.monomial(1, m - l)


def _s1_mobius_numerator(m: int, poly_of, bump_l0=False) -> XPoly:
    # sum over l of weight(m,l) times poly_of(l)(x/(1-x)) cleared to the
    # common denominator (1-x)^m
    base = XP_ONE - X
    num = XPoly()
    for l in range(m + 1):
        w = _s1_lambda_weight(m, l)
        if bump_l0 and l == 0:
            w = w + 1
        if not w:
            continue
        p = poly_of(l)
        num = num + w * substitute_mobius(p, -1).num * base ** (m - p.degree)
    return num


_D_T7 = (
    "running sums of deformed falling products match the S1-weighted "
    "geometric closed form with denominator (1-x)^(m+2)"
)


def check_T7(m_max=10, k_max=16, perturbed=False) -> Verdict:
    params = {"m_max": m_max, "k_max": k_max}
    base = XP_ONE - X
    failure = None
    for m in range(m_max + 1):
        num = _s1_mobius_numerator(m, fam.geometric, bump_l0=perturbed)
        s = RationalFn(num, base ** (m + 2)).expand(k_max)
        acc = LP_ZERO
        for k in range(k_max + 1):
            acc = acc + lambda_falling(k, m)
            if s.coeff(k) != acc:
                failure = ({"m": m, "k": k}, s.coeff(k), acc)
                break
        if failure:
            break
    return _done("T7", _D_T7, params, failure)


_D_T8 = (
    "the deformed geometric polynomial at x = -1/2 equals "
    "2/(n+1) times (beta_{n+1} at λ minus 2^{n+1} beta_{n+1} at λ/2)"
)


def check_T8(n_max=30, perturbed=False) -> Verdict:
    params = {"n_max": n_max}
    half = Rational(-1, 2)
    failure = None
    for n in range(n_max + 1):
        lhs = fam.geometric_deg(n).eval_x(half)
        b = fam.bernoulli_deg(n + 1)
        b_half = lambda_substitute(b, scale=Rational(1, 2))
        power = 2 ** (n + (0 if perturbed else 1))
        rhs = (b - power * b_half) * Rational(2, n + 1)
        if lhs != rhs:
            failure = ({"n": n}, lhs, rhs)
            break
    return _done("T8", _D_T8, params, failure)


_D_E04 = (
    "the change-of-basis tables are mutually inverse: classical pairs in "
    "both composition orders, deformed pair in one, plus reconstruction "
    "of both falling-factorial bases"
)


def check_E04(n_max=40, perturbed=False) -> Verdict:
    params = {"n_max": n_max}
    failure = None
    for n in range(min(n_max, 12) + 1):
        rebuilt = XPoly()
        for k in range(n + 1):
            rebuilt = rebuilt + fam.stirling("S2deg", n, k) * fam.falling_factorial(k)
        if rebuilt != fam.falling_factorial_lambda(n):
            failure = ({"n": n, "basis": "deformed"}, rebuilt, fam.falling_factorial_lambda(n))
            break
        rebuilt = XPoly()
        for k in range(n + 1):
            rebuilt = rebuilt + fam.stirling("S1deg", n, k) * fam.falling_factorial_lambda(k)
        if rebuilt != fam.falling_factorial(n):
            failure = ({"n": n, "basis": "classical"}, rebuilt, fam.falling_factorial(n))
            break
    if failure is None:
        for n in range(n_max + 1):
            for m in range(n + 1):
                want = RAT_ONE if n == m else RAT_ZERO
                got = RAT_ZERO
                got2 = RAT_ZERO
                for k in range(m, n + 1):
                    got += fam.stirling("S1", n, k).constant_value() * fam.stirling(
                        "S2", k, m
                    ).constant_value()
                    got2 += fam.stirling("S2", n, k).constant_value() * fam.stirling(
                        "S1", k, m
                    ).constant_value()
                if got != want or got2 != want:
                    failure = ({"n": n, "m": m, "pair": "classical"}, got if got != want else got2, want)
                    break
                val = LP_ZERO
                for k in range(m, n + 1):
                    a = fam.stirling("S1deg", n, k)
                    if perturbed and (n, k) == (2, 1):
                        a = a + 1
                    val = val + a * fam.stirling("S2deg", k, m)
                if val != want:
                    failure = ({"n": n, "m": m, "pair": "deformed"}, val, LambdaPoly.const(want))
                    break
            if failure:
                break
    return _done("E04", _D_E04, params, failure)


_D_E40 = (
    "power sums 0^m + ... + k^m: the direct sum, the Bernoulli-polynomial "
    "closed form, and the λ=0 geometric route all agree"
)


def check_E40(m_max=10, k_max=50, perturbed=False) -> Verdict:
    params = {"m_max": m_max, "k_max": k_max}
    base = XP_ONE - X
    failure = None
    for m in range(m_max + 1):
        s = RationalFn(substitute_mobius(fam.geometric(m), -1).num, base ** (m + 2)).expand(k_max)
        bp = fam.bernoulli_poly(m + 1)
        b0 = bp.eval(0, 0)
        div = m + 1 + (1 if perturbed else 0)
        acc = RAT_ZERO
        for k in range(k_max + 1):
            acc = acc + Rational(k) ** m if k else acc + (RAT_ONE if m == 0 else RAT_ZERO)
            via_bernoulli = (bp.eval(k + 1, 0) - b0) / div
            if via_bernoulli != acc:
                failure = ({"m": m, "k": k, "route": "bernoulli"}, via_bernoulli, acc)
                break
            if s.coeff(k) != acc:
                failure = ({"m": m, "k": k, "route": "geometric"}, s.coeff(k), acc)
                break
        if failure:
            break
    return _done("E40", _D_E40, params, failure)


_D_E44 = (
    "Eulerian numerators: coefficients are λ-free, sum to m!, and "
    "regenerate the k^m coefficient stream over (1-x)^(m+1)"
)


def check_eulerian(m_max=10, k_max=20, perturbed=False) -> Verdict:
    params = {"m_max": m_max, "k_max": k_max}
    base = XP_ONE - X
    failure = None
    for m in range(m_max + 1):
        a = fam.eulerian_poly(m)
        if a.lambda_degree > 0:
            failure = ({"m": m, "leg": "lambda-free"}, a, XPoly())
            break
        total = RAT_ZERO
        for k in range(a.degree + 1):
            total += a.coeff(k).constant_value()
        if total != factorial(m):
            failure = ({"m": m, "leg": "coefficient-sum"}, total, as_rational(factorial(m)))
            break
        dpow = m + 1 - (1 if perturbed else 0)
        s = RationalFn(a, base**dpow).expand(k_max)
        for k in range(k_max + 1):
            want = as_rational(k**m) if k else (RAT_ONE if m == 0 else RAT_ZERO)
            if s.coeff(k) != want:
                failure = ({"m": m, "k": k}, s.coeff(k), want)
                break
        if failure:
            break
    return _done("E44", _D_E44, params, failure)


_D_E50 = (
    "rising-binomial coefficients weighted by deformed falling products "
    "match the S1-weighted higher-order geometric closed form"
)


def check_E50(m_max=8, r_max=4, order=16, perturbed=False) -> Verdict:
    params = {"m_max": m_max, "r_max": r_max, "order": order}
    base = XP_ONE - X
    failure = None
    for r in range(1, r_max + 1):
        shift = 0 if perturbed else 1
        bs = Series(
            "x", order, [comb(r + k - shift, k) for k in range(order + 1)], RATIONAL_RING
        )
        for m in range(m_max + 1):
            lhs = diag_weight(bs, m)
            num = _s1_mobius_numerator(m, lambda l: fam.geometric_r(l, r))
            rhs = RationalFn(num, base ** (m + r)).expand(order)
            bad = first_mismatch(lhs, rhs)
            if bad is not None:
                failure = ({"r": r, "m": m, "coeff": bad[0]}, bad[1], bad[2])
                break
        if failure:
            break
    return _done("E50", _D_E50, params, failure)


_D_E57 = (
    "series coefficients of 1/(deformed exponential + 1) match both the "
    "deformed Bernoulli combination and half the geometric value at -1/2"
)


def check_E57(n_max=16, perturbed=False) -> Verdict:
    params = {"n_max": n_max}
    rec = (fam.e_lambda_series(n_max, "t") + 1).reciprocal()
    failure = None
    for n in range(n_max + 1):
        lhs = factorial(n) * rec.coeff(n)
        b = fam.bernoulli_deg(n + 1)
        b_half = lambda_substitute(b, scale=Rational(1, 2))
        div = n + 1 + (1 if perturbed else 0)
        via_beta = (b - 2 ** (n + 1) * b_half) / div
        if lhs != via_beta:
            failure = ({"n": n, "route": "bernoulli"}, lhs, via_beta)
            break
        via_geom = fam.geometric_deg(n).eval_x(Rational(-1, 2)) / 2
        if lhs != via_geom:
            failure = ({"n": n, "route": "geometric"}, lhs, via_geom)
            break
    return _done("E57", _D_E57, params, failure)


_D_R9 = (
    "alternating sums of deformed falling products, defined as the exact "
    "rational-function value at x = -1: geometric and Eulerian routes agree"
)


def check_R9(n_max=16, perturbed=False) -> Verdict:
    params = {"n_max": n_max}
    mhalf = Rational(-1, 2)
    failure = None
    for n in range(n_max + 1):
        via_geom = LP_ZERO
        via_euler = LP_ZERO
        for l in range(n + 1):
            w = _s1_lambda_weight(n, l)
            if not w:
                continue
            via_geom = via_geom + w * fam.geometric(l).eval_x(mhalf)
            via_euler = via_euler + w * fam.eulerian_poly(l).eval_x(-1) * Rational(1, 2 ** (l + 1))
        if not perturbed:
            via_geom = via_geom / 2
        if via_geom != via_euler:
            failure = ({"n": n}, via_geom, via_euler)
            break
    return _done("R9", _D_R9, params, failure)


_D_DEG = (
    "every deformed family collapses to its classical counterpart at λ = 0, "
    "and classical Bell values match the additive-triangle recurrence"
)


def check_degeneration(n_max=20, perturbed=False) -> Verdict:
    params = {"n_max": n_max}
    at = 1 if perturbed else 0  # the control degenerates at the wrong point
    failure = None
    for n in range(n_max + 1):
        legs = [
            ("bell_deg", lambda_substitute(fam.bell_deg(n), value=at), fam.bell_poly(n)),
            ("phi_deg", lambda_substitute(fam.bell_partial_deg(n), value=at), fam.bell_poly(n)),
            ("geom_deg", lambda_substitute(fam.geometric_deg(n), value=at), fam.geometric(n)),
            (
                "falling_lambda",
                lambda_substitute(fam.falling_factorial_lambda(n), value=at),
                XPoly.monomial(1, n),
            ),
            (
                "bernoulli_deg",
                LambdaPoly.const(fam.bernoulli_deg(n).eval(at)),
                LambdaPoly.const(fam.bernoulli_number(n)),
            ),
        ]
        for name, got, want in legs:
            if got != want:
                failure = ({"family": name, "n": n}, got, want)
                break
        if failure:
            break
        for k in range(n + 1):
            s1 = fam.stirling("S1deg", n, k).eval(at)
            s2 = fam.stirling("S2deg", n, k).eval(at)
            if s1 != fam.stirling("S1", n, k).constant_value():
                failure = ({"family": "stirling1_deg", "n": n, "k": k}, s1, fam.stirling("S1", n, k))
                break
            if s2 != fam.stirling("S2", n, k).constant_value():
                failure = ({"family": "stirling2_deg", "n": n, "k": k}, s2, fam.stirling("S2", n, k))
                break
        if failure:
            break
    if failure is None:
        # Bell numbers from the additive triangle, no tables involved
        row = [1]
        for n in range(min(n_max, 15) + 1):
            got = fam.bell_poly(n).eval(1, 0)
            if got != row[0]:
                failure = ({"family": "bell-numbers", "n": n}, got, as_rational(row[0]))
                break
            nxt = [row[-1]]
            for v in row:
                nxt.append(nxt[-1] + v)
            row = nxt
    return _done("DEG", _D_DEG, params, failure)


_GF_BUILDERS = {
    "bell_deg": (fam.bell_deg_gf, fam.bell_deg),
    "phi_deg": (fam.bell_partial_deg_gf, fam.bell_partial_deg),
    "geom_deg": (fam.geometric_deg_gf, fam.geometric_deg),
    "bernoulli_deg": (fam.bernoulli_deg_gf, fam.bernoulli_deg),
}

_D_GF = "coefficients of the defining series regenerate the constructed family"


def check_gf_consistency(family: str, order=16, perturbed=False) -> Verdict:
    if family not in _GF_BUILDERS:
        raise ValueError(f"no generating series registered for {family!r}")
    params = {"family": family, "order": order}
    check_id = {
        "bell_deg": "GF-bell",
        "phi_deg": "GF-phi",
        "geom_deg": "GF-geom",
        "bernoulli_deg": "GF-bern",
    }[family]
    build, construct = _GF_BUILDERS[family]
    s = build(order)
    failure = None
    for n in range(order + 1):
        w = factorial(n + 1) if perturbed else factorial(n)
        got = w * s.coeff(n)
        want = construct(n)
        if got != want:
            failure = ({"n": n}, got, want)
            break
    if failure is None and family == "bernoulli_deg":
        # the series must also solve its defining equation: product with
        # (deformed exponential - 1)/t is exactly 1
        shifted = Series(
            "t",
            order,
            [lambda_falling(1, m + 1) / factorial(m + 1) for m in range(order + 1)],
            LAMBDA_RING,
        )
        prod = s * shifted
        for n in range(order + 1):
            want = LP_ONE if n == 0 else LP_ZERO
            if prod.coeff(n) != want:
                failure = ({"n": n, "leg": "defining-equation"}, prod.coeff(n), want)
                break
    return _done(check_id, _D_GF, params, failure)


# ---------------------------------------------------------------------------
# registry

REGISTRY: tuple[IdentityCheck, ...] = tuple(
    sorted(
        [
            IdentityCheck(
                "DEG",
                _D_DEG,
                {"n_max": 20},
                check_degeneration,
                "degenerates at λ = 1 instead of λ = 0",
            ),
            IdentityCheck(
                "E04",
                _D_E04,
                {"n_max": 40},
                check_E04,
                "adds 1 to the deformed first-kind entry (2, 1)",
            ),
            IdentityCheck(
                "E40",
                _D_E40,
                {"m_max": 10, "k_max": 50},
                check_E40,
                "divides the Bernoulli closed form by m+2 instead of m+1",
            ),
            IdentityCheck(
                "E44",
                _D_E44,
                {"m_max": 10, "k_max": 20},
                check_eulerian,
                "expands over (1-x)^m instead of (1-x)^(m+1)",
            ),
            IdentityCheck(
                "E50",
                _D_E50,
                {"m_max": 8, "r_max": 4, "order": 16},
                check_E50,
                "uses binomial C(r+k, k) weights instead of C(r+k-1, k)",
            ),
            IdentityCheck(
                "E57",
                _D_E57,
                {"n_max": 16},
                check_E57,
                "divides the Bernoulli combination by n+2 instead of n+1",
            ),
            IdentityCheck(
                "GF-bell",
                _D_GF,
                {"family": "bell_deg", "order": 16},
                check_gf_consistency,
                "reads coefficient n with weight (n+1)! instead of n!",
            ),
            IdentityCheck(
                "GF-bern",
                _D_GF,
                {"family": "bernoulli_deg", "order": 16},
                check_gf_consistency,
                "reads coefficient n with weight (n+1)! instead of n!",
            ),
            IdentityCheck(
                "GF-geom",
                _D_GF,
                {"family": "geom_deg", "order": 16},
                check_gf_consistency,
                "reads coefficient n with weight (n+1)! instead of n!",
            ),
            IdentityCheck(
                "GF-phi",
                _D_GF,
                {"family": "phi_deg", "order": 16},
                check_gf_consistency,
                "reads coefficient n with weight (n+1)! instead of n!",
            ),
            IdentityCheck(
                "L2",
                _D_L2,
                {"n_max": 16},
                check_L2,
                "doubles the S2(1, 1) weight",
            ),
            IdentityCheck(
                "R9",
                _D_R9,
                {"n_max": 16},
                check_R9,
                "drops the factor 1/2 on the geometric route",
            ),
            IdentityCheck(
                "T1",
                _D_T1,
                {"n_max": 16},
                check_T1,
                "inserts an extra factor of y before integrating",
            ),
            IdentityCheck(
                "T3",
                _D_T3,
                {"d_max": 4, "r_max": 3, "order": 16},
                check_T3,
                "samples the polynomial at k+1 instead of k",
            ),
            IdentityCheck(
                "T4",
                _D_T4,
                {"d_max": 6, "order": 16},
                check_T4,
                "adds k to the sampled value at index k",
            ),
            IdentityCheck(
                "T5T6",
                _D_T5T6,
                {"n_max": 12, "order": 16},
                check_T5_T6,
                "expands x/(1+λx) with the wrong sign pattern",
            ),
            IdentityCheck(
                "T7",
                _D_T7,
                {"m_max": 10, "k_max": 16},
                check_T7,
                "adds 1 to the S1(m, 0) weight",
            ),
            IdentityCheck(
                "T8",
                _D_T8,
                {"n_max": 30},
                check_T8,
                "uses 2^n instead of 2^(n+1) on the half-scale term",
            ),
        ],
        key=lambda c: c.id,
    )
)

_BY_ID = {c.id: c for c in REGISTRY}


def run_check(check_id: str, overrides: dict | None = None, perturbed=False) -> Verdict:
    """Run one registered check, optionally overriding its default bounds."""
    try:
        entry = _BY_ID[check_id]
    except KeyError:
        known = ", ".join(sorted(_BY_ID))
        raise ValueError(f"unknown check {check_id!r}; known: {known}") from None
    params = dict(entry.params)
    if overrides:
        for key, val in overrides.items():
            if key in params and val is not None:
                params[key] = val
    return entry.fn(**params, perturbed=perturbed)


def run_all(prefix: str | None = None, overrides: dict | None = None, negative_control=False):
    """Run every check (or those whose id starts with prefix), in id order.

    negative_control may be True (inject every registered fault) or a
    single check id (inject only that one, leaving the rest honest).
    """
    ids = [c.id for c in REGISTRY if prefix is None or c.id.startswith(prefix)]
    if not ids:
        known = ", ".join(c.id for c in REGISTRY)
        raise ValueError(f"no check id starts with {prefix!r}; known: {known}")
    if isinstance(negative_control, str) and negative_control not in _BY_ID:
        known = ", ".join(sorted(_BY_ID))
        raise ValueError(f"unknown check {negative_control!r}; known: {known}")
    return [
        run_check(i, overrides, negative_control is True or negative_control == i)
        for i in ids
    ]


def verdict_to_dict(v: Verdict) -> dict:
    out = {
        "id": v.id,
        "status": v.status,
        "checked_range": dict(v.checked_range),
        "description": v.description,
        "params": dict(v.params),
    }
    if v.counterexample is not None:
        ce = v.counterexample
        out["counterexample"] = {
            "indices": dict(ce["indices"]),
            "lhs": value_to_json(ce["lhs"]),
            "rhs": value_to_json(ce["rhs"]),
        }
    return out


def verdicts_to_json(verdicts) -> str:
    return json.dumps([verdict_to_dict(v) for v in verdicts], indent=2)
