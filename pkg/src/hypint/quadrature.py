"""Independent numerical ground truth: double-exponential quadrature.

Semi-infinite integrals use the exp-sinh transform x = exp((pi/2) sinh t);
finite intervals use tanh-sinh.  Both run the trapezoid rule with level
doubling until two consecutive levels agree within the target error, with
per-integrand adaptive truncation of the node sweep.  Node tables are
cached per (level, precision).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp, mpf, exp, log, sinh, cosh, asinh, pi, isfinite

from .errors import NoConvergence, DomainError
from .precision import PrecisionContext
from . import exact

MAX_LEVEL = 12
_node_lock = threading.Lock()
_expsinh_nodes: dict = {}
_tanhsinh_nodes: dict = {}


@dataclass
class QuadratureResult:
    value: mpf
    est_error: mpf
    nodes_used: int
    level: int


def default_target(ctx: PrecisionContext) -> mpf:
    with ctx.working():
        return mpf(2) ** (-(ctx.bits - 24))


def _tmax_expsinh(wp: int) -> mpf:
    # exp(-(pi/2) sinh t) * (pi/2) cosh t below 2^-(wp+16) at the cutoff
    return asinh(mpf(2) * (wp + 24) * log(mpf(2)) / pi) + mpf(1) / 4


def _expsinh_table(level: int, wp: int):
    """Nodes (x, w) for the map x = exp((pi/2) sinh t), split by sign of t.

    Both lists are ordered by increasing |t|; the positive list includes t=0.
    """
    key = (level, wp)
    with _node_lock:
        tab = _expsinh_nodes.get(key)
    if tab is not None:
        return tab
    with mp.workprec(wp + 16):
        h = mpf(1) / (1 << level)
        tmax = _tmax_expsinh(wp)
        halfpi = pi / 2
        pos, neg = [], []
        n = 0
        while True:
            t = n * h
            if t > tmax:
                break
            u = halfpi * sinh(t)
            ch = halfpi * cosh(t)
            xp = exp(u)
            pos.append((xp, ch * xp))
            if n > 0:
                xn = 1 / xp
                neg.append((xn, ch * xn))
            n += 1
    with _node_lock:
        _expsinh_nodes[key] = (pos, neg)
    return pos, neg


def _sweep(f, nodes, trunc_eps, running):
    """Sum w*f(x) outward until 4 consecutive negligible terms."""
    total = running
    small = 0
    used = 0
    for x, w in nodes:
        term = w * f(x)
        if not isfinite(term):
            raise NoConvergence(f"integrand not finite at node x={mp.nstr(mpf(x), 8)}")
        total += term
        used += 1
        if abs(term) <= trunc_eps * max(abs(total), mpf(1)):
            small += 1
            if small >= 4:
                break
        else:
            small = 0
    return total, used


def integrate_semi_infinite(
    integrand, ctx: PrecisionContext, target_error=None, max_level: int = MAX_LEVEL
) -> QuadratureResult:
    """Integrate a continuous integrand over (0, inf).

    The integrand must decay at least like exp(-c x) or an integrable
    power at infinity and stay bounded at the origin.  Error estimate is
    the difference between the last two levels.
    """
    wp = ctx.wp
    with mp.workprec(wp + 16):
        target = mpf(target_error) if target_error is not None else default_target(ctx)
        trunc_eps = mpf(2) ** (-(wp + 8))
        prev = None
        est = None
        value = None
        nodes_used = 0
        for level in range(2, max_level + 1):
            h = mpf(1) / (1 << level)
            pos, neg = _expsinh_table(level, wp)
            total, c1 = _sweep(integrand, pos, trunc_eps, mpf(0))
            total, c2 = _sweep(integrand, neg, trunc_eps, total)
            value = total * h
            nodes_used = c1 + c2
            if prev is not None:
                est = abs(value - prev)
                if est <= target:
                    return QuadratureResult(value, est, nodes_used, level)
            prev = value
        raise NoConvergence(
            f"semi-infinite quadrature did not reach {mp.nstr(target, 5)} "
            f"by level {max_level} (last inter-level difference {mp.nstr(est, 5)})"
        )


def _tanhsinh_table(level: int, wp: int):
    """Positive-t tanh-sinh nodes as (delta, w) with delta = 1 - tanh((pi/2) sinh t).

    delta is kept instead of the abscissa so endpoint distances stay
    accurate for singular endpoints.
    """
    key = (level, wp)
    with _node_lock:
        tab = _tanhsinh_nodes.get(key)
    if tab is not None:
        return tab
    with mp.workprec(wp + 16):
        h = mpf(1) / (1 << level)
        # cosh(pi/2 sinh t)^-2 below 2^-(wp+16): pi sinh t > (wp+18) ln 2
        tmax = asinh((wp + 24) * log(mpf(2)) / pi) + mpf(1) / 4
        halfpi = pi / 2
        out = []
        n = 0
        while True:
            t = n * h
            if t > tmax:
                break
            u = halfpi * sinh(t)
            e2 = exp(2 * u)
            delta = 2 / (e2 + 1)  # 1 - tanh(u)
            w = halfpi * cosh(t) * 4 * e2 / (e2 + 1) ** 2  # (pi/2) cosh t sech^2(u)
            out.append((delta, w))
            n += 1
    with _node_lock:
        _tanhsinh_nodes[key] = out
    return out


def integrate_finite(
    integrand, a, b, ctx: PrecisionContext, target_error=None, max_level: int = MAX_LEVEL
) -> QuadratureResult:
    """Tanh-sinh integration over a finite interval (a, b); endpoints are
    never evaluated, so integrable endpoint singularities are fine."""
    wp = ctx.wp
    with mp.workprec(wp + 16):
        a = mpf(a)
        b = mpf(b)
        if a == b:
            return QuadratureResult(mpf(0), mpf(0), 0, 0)
        if a > b:
            r = integrate_finite(integrand, b, a, ctx, target_error, max_level)
            return QuadratureResult(-r.value, r.est_error, r.nodes_used, r.level)
        target = mpf(target_error) if target_error is not None else default_target(ctx)
        trunc_eps = mpf(2) ** (-(wp + 8))
        half = (b - a) / 2
        prev = None
        est = None
        for level in range(2, max_level + 1):
            h = mpf(1) / (1 << level)
            total = mpf(0)
            used = 0
            small = 0
            for i, (delta, w) in enumerate(_tanhsinh_table(level, wp)):
                pts = [b - half * delta, a + half * delta] if i else [a + half * delta]
                term = mpf(0)
                for xx in pts:
                    term += w * integrand(xx)
                if not isfinite(term):
                    raise NoConvergence("integrand not finite at tanh-sinh node")
                total += term
                used += len(pts)
                if abs(term) <= trunc_eps * max(abs(total), mpf(1)):
                    small += 1
                    if small >= 4:
                        break
                else:
                    small = 0
            value = total * h * half
            if prev is not None:
                est = abs(value - prev)
                if est <= target:
                    return QuadratureResult(value, est, used, level)
            prev = value
        raise NoConvergence(
            f"finite-interval quadrature did not reach {mp.nstr(target, 5)} "
            f"by level {max_level}"
        )


# ---------------------------------------------------------------------------
# log(log x) integrals


def _loglog_weight_terms(kind: str, n: int):
    """Exact coefficients of the rational weight in the generalized
    log(log x) representations: list of (coeff, m) meaning
    coeff * (m x^4 - 2(m+2) x^2 + m) x^(m-1) / (x^2+1)^(m+2)."""
    if n < 1:
        raise DomainError("N must be >= 1")
    if kind == "beta":
        c = exact.sech_deriv_coeffs(n - 1)
        return [(Fraction(4**k) * c[(n - 1, k)], 2 * k + 1) for k in range(n)]
    if kind == "zeta":
        d = exact.tanh_deriv_coeffs(n)
        return [(Fraction(4**k, 2) * d[(n, k)], 2 * k) for k in range(1, n + 1)]
    raise DomainError(f"kind must be 'beta' or 'zeta', got {kind!r}")


def integrate_loglog(kind: str, n: int, ctx: PrecisionContext, target_error=None) -> QuadratureResult:
    """Integral over (1, inf) of the generalized rational weight times
    log(log x), evaluated after x = exp(t) as a semi-infinite integral
    with an integrable log singularity at t = 0."""
    terms = _loglog_weight_terms(kind, n)
    wp = ctx.wp

    def f(t):
        with mp.workprec(wp + 16):
            x = exp(t)
            x2 = x * x
            x4 = x2 * x2
            denom_base = x2 + 1
            total = mpf(0)
            for coeff, m in terms:
                num = (m * x4 - 2 * (m + 2) * x2 + m) * x ** (m - 1)
                total += mpf(coeff.numerator) / coeff.denominator * num / denom_base ** (m + 2)
            return total * log(t) * x

    return integrate_semi_infinite(f, ctx, target_error)


def loglog_prefactor(kind: str, n: int, ctx: PrecisionContext) -> mpf:
    """Factor P with constant = P * integral for the generalized log(log x)
    representations: beta(2N) or zeta(2N+1) respectively."""
    from math import factorial

    with ctx.working():
        if kind == "beta":
            return mpf((-1) ** n) * pi ** (2 * n - 1) / (2 ** (2 * n - 1) * factorial(2 * n - 1))
        if kind == "zeta":
            return mpf((-1) ** n) * 2 * pi ** (2 * n) / ((2 ** (2 * n + 1) - 1) * factorial(2 * n))
    raise DomainError(f"kind must be 'beta' or 'zeta', got {kind!r}")
