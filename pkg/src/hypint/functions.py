"""Arbitrary-precision special functions backing every closed form.

The analytic kernel is a hand-rolled Euler-Maclaurin evaluation of the
Hurwitz zeta function and its s-derivative (differentiated analytically,
term by term — never numerically).  Dirichlet beta/eta/lambda, the
derivative values at negative integers, the polylogarithm and the
infinite-product function f are built on top of it.  Gamma-family
functions (log-gamma, digamma, polygamma) delegate to mpmath's
asymptotic-series implementations behind the same context discipline.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

from mpmath import mp, mpf, exp, log, sqrt, pi, euler, gamma as mp_gamma, loggamma as mp_loggamma, psi as mp_psi, isint

from .errors import DomainError, PoleError, NoConvergence
from .precision import PrecisionContext
from . import exact
from .series import _cvz

_lock = threading.Lock()
_const_cache: dict = {}
_polylog_zeta_cache: dict = {}
_power_table_cache: dict = {}


# ---------------------------------------------------------------------------
# Euler-Maclaurin Hurwitz zeta and its s-derivative


def _rising_with_deriv(s, r: int):
    """Rising factorial s(s+1)...(s+r-1) and its s-derivative.

    At most one factor can vanish (distinct integer offsets); in that case
    the derivative is the product of the remaining factors.
    """
    factors = [s + i for i in range(r)]
    zero_idx = [i for i, f in enumerate(factors) if f == 0]
    if not zero_idx:
        p = mpf(1)
        inv = mpf(0)
        for f in factors:
            p *= f
            inv += 1 / f
        return p, p * inv
    i0 = zero_idx[0]
    dp = mpf(1)
    for i, f in enumerate(factors):
        if i != i0:
            dp *= f
    return mpf(0), dp


def _hurwitz_em(s, a, wp: int, want_deriv: bool):
    """Euler-Maclaurin zeta(s, a) and optionally its s-derivative.

    Shift count M ~ 0.7*wp + |s|; Bernoulli terms added until below target,
    restarting with larger M if they stall.  Negative s costs extra working
    bits to absorb the cancellation between the direct block and the tail.
    """
    s = mpf(s)
    a = mpf(a)
    M = max(int(0.7 * wp) + int(abs(s)) + 8, 16)
    extra = 16
    if s < 1:
        extra += int((abs(s) + 1) * math.log2(M + 2)) + 8
    for _ in range(5):
        with mp.workprec(wp + extra):
            res = _hurwitz_em_once(s, a, M, wp, want_deriv)
        if res is not None:
            return res
        M *= 2
        extra += 8
    raise NoConvergence("Euler-Maclaurin Hurwitz zeta did not stabilize")


def _hurwitz_em_once(s, a, M: int, wp: int, want_deriv: bool):
    eps = mpf(2) ** (-(wp + 8))
    z = mpf(0)
    zd = mpf(0)
    for n in range(M):
        base = a + n
        p = base ** (-s)
        z += p
        if want_deriv:
            zd -= log(base) * p
    q = a + M
    lq = log(q)
    q_pow = q ** (-s)  # q^-s
    # integral term q^(1-s)/(s-1) and boundary q^-s/2
    z += q_pow * q / (s - 1) + q_pow / 2
    if want_deriv:
        zd += -lq * q_pow * q / (s - 1) - q_pow * q / (s - 1) ** 2 - lq * q_pow / 2

    # Bernoulli tail: B_2j/(2j)! * (s)_(2j-1) * q^(-s-2j+1)
    qinv2 = 1 / (q * q)
    pw = q_pow * q  # q^(-s-2j+1) at j=0
    prev_mag = None
    scale = abs(z) + 1
    j = 0
    while True:
        j += 1
        pw *= qinv2
        bern = exact.bernoulli(2 * j)
        bfac = mpf(bern.numerator) / bern.denominator / mp.factorial(2 * j)
        rise, rise_d = _rising_with_deriv(s, 2 * j - 1)
        term = bfac * rise * pw
        z += term
        if want_deriv:
            zd += bfac * (rise_d - rise * lq) * pw
        mag = abs(term) + (abs(bfac * rise_d * pw) if want_deriv else mpf(0))
        if mag < eps * scale:
            return (z, zd) if want_deriv else z
        if prev_mag is not None and mag > prev_mag:
            return None  # stalled: caller enlarges M
        prev_mag = mag
        if j > wp:
            return None


def hurwitz_zeta(s, a, ctx: PrecisionContext) -> mpf:
    """zeta(s, a) for real s != 1 and a > 0."""
    with ctx.working():
        s = mpf(s)
        a = mpf(a)
    if a <= 0:
        raise DomainError(f"Hurwitz zeta needs a > 0, got a = {a}")
    if s == 1:
        raise PoleError("zeta(s, a) has a pole at s = 1")
    return _hurwitz_em(s, a, ctx.wp, False)


def hurwitz_zeta_sderiv(s, a, ctx: PrecisionContext) -> mpf:
    """d/ds zeta(s, a) for real s != 1 and a > 0."""
    with ctx.working():
        s = mpf(s)
        a = mpf(a)
    if a <= 0:
        raise DomainError(f"Hurwitz zeta needs a > 0, got a = {a}")
    if s == 1:
        raise PoleError("zeta(s, a) has a pole at s = 1")
    return _hurwitz_em(s, a, ctx.wp, True)[1]


# ---------------------------------------------------------------------------
# Dirichlet series


def riemann_zeta(s, ctx: PrecisionContext) -> mpf:
    with ctx.working():
        s = mpf(s)
    if s == 1:
        raise PoleError("zeta(s) has a pole at s = 1")
    return _hurwitz_em(s, 1, ctx.wp, False)


def dirichlet_eta(s, ctx: PrecisionContext) -> mpf:
    """eta(s) = (1 - 2^(1-s)) zeta(s); finite at s = 1 (equal to log 2).

    For s > 0 the alternating series is accelerated directly, which covers
    the s = 1 point without special-casing the zeta pole.
    """
    wp = ctx.wp
    with mp.workprec(wp + 32):
        s = mpf(s)
        if s > 0:
            n = int(1.1 * (wp + 16) / math.log2(3 + 2 * math.sqrt(2))) + 8
            return _cvz(lambda k: (k + 1) ** (-s), n)
        return (1 - 2 ** (1 - s)) * riemann_zeta(s, ctx)


def dirichlet_lambda(s, ctx: PrecisionContext) -> mpf:
    """lambda(s) = (1 - 2^-s) zeta(s)."""
    with ctx.working():
        s = mpf(s)
        if s == 1:
            raise PoleError("lambda(s) has a pole at s = 1")
        return (1 - 2 ** (-s)) * riemann_zeta(s, ctx)


def dirichlet_beta(s, ctx: PrecisionContext) -> mpf:
    """beta(s); alternating-series acceleration for s > 0, Hurwitz-difference
    continuation 4^-s (zeta(s,1/4) - zeta(s,3/4)) otherwise."""
    wp = ctx.wp
    with mp.workprec(wp + 32):
        s = mpf(s)
        if s > 0:
            n = int(1.1 * (wp + 16) / math.log2(3 + 2 * math.sqrt(2))) + 8
            return _cvz(lambda k: (2 * k + 1) ** (-s), n)
        quarter = mpf(1) / 4
        return 4 ** (-s) * (
            _hurwitz_em(s, quarter, wp, False) - _hurwitz_em(s, 3 * quarter, wp, False)
        )


def dirichlet_beta_sderiv(s, ctx: PrecisionContext) -> mpf:
    """d/ds beta(s) through the Hurwitz-difference representation."""
    wp = ctx.wp
    with mp.workprec(wp + 32):
        s = mpf(s)
        quarter = mpf(1) / 4
        z1, zd1 = _hurwitz_em(s, quarter, wp, True)
        z3, zd3 = _hurwitz_em(s, 3 * quarter, wp, True)
        return 4 ** (-s) * ((zd1 - zd3) - log(mpf(4)) * (z1 - z3))


# ---------------------------------------------------------------------------
# Gamma family (mpmath asymptotic-series implementations behind the context)


def log_gamma(z, ctx: PrecisionContext) -> mpf:
    with ctx.working():
        z = mpf(z)
        if z <= 0:
            raise DomainError(f"log_gamma needs z > 0, got {z}")
        return mp_loggamma(z)


def digamma(z, ctx: PrecisionContext) -> mpf:
    with ctx.working():
        z = mpf(z)
        if z <= 0:
            raise DomainError(f"digamma needs z > 0, got {z}")
        return mp_psi(0, z)


def polygamma(m: int, z, ctx: PrecisionContext) -> mpf:
    if m < 0:
        raise DomainError("polygamma order must be >= 0")
    with ctx.working():
        z = mpf(z)
        if z <= 0:
            raise DomainError(f"polygamma needs z > 0, got {z}")
        return mp_psi(m, z)


def euler_gamma(ctx: PrecisionContext) -> mpf:
    with ctx.working():
        return +euler


# ---------------------------------------------------------------------------
# Derivative values at negative integers


def zeta_sderiv_neg_even(k: int, ctx: PrecisionContext) -> mpf:
    """zetadot(-2k) = (-1)^k (2 pi)^(-2k) (2k)! zeta(2k+1) / 2."""
    if k < 1:
        raise DomainError("k must be >= 1")
    with ctx.working():
        return (
            mpf((-1) ** k)
            / 2
            * (2 * pi) ** (-2 * k)
            * mp.factorial(2 * k)
            * riemann_zeta(2 * k + 1, ctx)
        )


def beta_sderiv_neg_odd(k: int, ctx: PrecisionContext) -> mpf:
    """betadot(1-2k) = (-1)^(k+1) (2/pi)^(2k-1) (2k-1)! beta(2k)."""
    if k < 1:
        raise DomainError("k must be >= 1")
    with ctx.working():
        return (
            mpf((-1) ** (k + 1))
            * (2 / pi) ** (2 * k - 1)
            * mp.factorial(2 * k - 1)
            * dirichlet_beta(2 * k, ctx)
        )


def beta_sderiv_neg_even(k: int, ctx: PrecisionContext) -> mpf:
    """betadot(-2k), assembled from zetadot(-2k, 1/4), zetadot(-2k, 3/4) and
    the logarithmic factor of the 2^(2s) prefactor."""
    if k < 1:
        raise DomainError("k must be >= 1")
    return dirichlet_beta_sderiv(-2 * k, ctx)


# ---------------------------------------------------------------------------
# Polylogarithm on (0, 1)

_EXPANSION_CUT = 0.125  # switch to the w = -log x expansion below this


def _zeta_table_key(s, wp):
    return (mp.nstr(s, 40), wp)


def _polylog_expansion_zetas(s, wp: int, count: int):
    """Cached zeta(s - k) values for the small-w expansion."""
    key = _zeta_table_key(s, wp)
    with _lock:
        vals = _polylog_zeta_cache.setdefault(key, [])
    while len(vals) < count:
        k = len(vals)
        arg = s - k
        with mp.workprec(wp + 16):
            if isint(arg):
                ai = int(arg)
                if ai == 1:
                    vals.append(None)  # pole; handled by the integer branch
                elif ai >= 2:
                    vals.append(_hurwitz_em(mpf(ai), 1, wp, False))
                elif ai == 0:
                    vals.append(mpf(-1) / 2)
                else:
                    bern = exact.bernoulli(-ai + 1)
                    vals.append(mpf(-bern.numerator) / bern.denominator / (-ai + 1))
            else:
                vals.append(_hurwitz_em(arg, 1, wp, False))
    return vals


def _power_table(s, wp: int, count: int):
    """Cached k^-s for k = 1..count (index 0 unused)."""
    key = _zeta_table_key(s, wp)
    with _lock:
        tab = _power_table_cache.setdefault(key, [None, mpf(1)])
    with mp.workprec(wp + 8):
        while len(tab) <= count:
            k = len(tab)
            tab.append(mpf(k) ** (-s))
    return tab


def polylog(s, x, ctx: PrecisionContext) -> mpf:
    """Li_s(x) for real s > 0 and 0 < x < 1.

    Direct series away from 1; near 1 the expansion in w = -log x
    (gamma-term plus zeta(s-k) series for non-integer s, the
    harmonic-number-corrected variant at integer s).
    """
    wp = ctx.wp
    with mp.workprec(wp + 16):
        s = mpf(s)
        x = mpf(x)
        if not (0 < x < 1):
            raise DomainError(f"polylog implemented on 0 < x < 1, got x = {x}")
        if s <= 0:
            raise DomainError(f"polylog needs s > 0, got s = {s}")
        w = -log(x)
        if w >= _EXPANSION_CUT:
            return _polylog_direct(s, x, wp)
        return _polylog_near_one(s, w, wp)


def _polylog_direct(s, x, wp: int) -> mpf:
    eps = mpf(2) ** (-(wp + 8))
    need = int((wp + 16) * math.log(2) / float(-log(x))) + 4
    tab = _power_table(s, wp, need)
    total = mpf(0)
    xk = mpf(1)
    for k in range(1, need + 1):
        xk *= x
        term = xk * tab[k]
        total += term
        if term < eps * total:
            break
    return total


def _polylog_near_one(s, w, wp: int) -> mpf:
    if isint(s):
        return _polylog_near_one_int(int(s), w, wp)
    delta = abs(s - mp.nint(s))
    boost = 0
    if delta < mpf(2) ** (-wp // 2):
        # gamma term and the nearby zeta pole nearly cancel; add bits
        boost = min(int(-mp.log(delta, 2)) + 24, 4 * wp)
    with mp.workprec(wp + 24 + boost):
        eps = mpf(2) ** (-(wp + 8))
        total = mp_gamma(1 - s) * w ** (s - 1)
        zetas = _polylog_expansion_zetas(s, wp + boost, 8)
        wk = mpf(1)  # (-w)^k / k!
        k = 0
        small = 0
        while True:
            zetas = _polylog_expansion_zetas(s, wp + boost, k + 1)
            term = zetas[k] * wk
            total += term
            if abs(term) < eps * (abs(total) + 1):
                small += 1
                if small >= 3:
                    return total
            else:
                small = 0
            k += 1
            wk *= -w / k
            if k > 8 * wp:
                raise NoConvergence("polylog expansion did not converge")


def _polylog_near_one_int(n: int, w, wp: int) -> mpf:
    with mp.workprec(wp + 24):
        eps = mpf(2) ** (-(wp + 8))
        h = exact.harmonic(n - 1)
        lead = (
            mpf((-1) ** (n - 1))
            * w ** (n - 1)
            / mp.factorial(n - 1)
            * (mpf(h.numerator) / h.denominator - log(w))
        )
        total = lead
        wk = mpf(1)
        k = 0
        small = 0
        while True:
            if k != n - 1:
                arg = n - k
                if arg >= 2:
                    zv = _hurwitz_em(mpf(arg), 1, wp, False)
                elif arg == 0:
                    zv = mpf(-1) / 2
                elif arg == 1:
                    raise AssertionError("unreachable: k == n-1 excluded")
                else:
                    bern = exact.bernoulli(1 - arg)
                    zv = mpf(-bern.numerator) / bern.denominator / (1 - arg)
                term = zv * wk
                total += term
                if abs(term) < eps * (abs(total) + 1):
                    small += 1
                    if small >= 3:
                        return total
                else:
                    small = 0
            k += 1
            wk *= -w / k
            if k > 8 * wp:
                raise NoConvergence("polylog expansion did not converge")


# ---------------------------------------------------------------------------
# Adamchik's integral of x^n psi(x)


def adamchik_psi_integral(n: int, z, ctx: PrecisionContext) -> mpf:
    """int_0^z x^n psi(x) dx in closed form (regularized at n = 0).

    Combination of zetadot at negative integers, Bernoulli polynomials and
    harmonic numbers.
    """
    if n < 0:
        raise DomainError("n must be >= 0")
    wp = ctx.wp
    with mp.workprec(wp + 16):
        z = mpf(z)
        if z <= 0:
            raise DomainError(f"adamchik_psi_integral needs z > 0, got {z}")
        total = mpf((-1) ** (n - 1) if n >= 1 else -1) * _zetadot_neg_int(n, ctx)
        bnum = exact.bernoulli(n + 1)
        hn = exact.harmonic(n)
        total += (
            mpf((-1) ** n)
            / (n + 1)
            * mpf(bnum.numerator)
            / bnum.denominator
            * mpf(hn.numerator)
            / hn.denominator
        )
        for k in range(n + 1):
            hk = exact.harmonic(k)
            if hk != 0:
                bpoly = _bernoulli_poly_mpf(k + 1, z)
                total -= (
                    mpf((-1) ** k)
                    * mp.binomial(n, k)
                    * z ** (n - k)
                    / (k + 1)
                    * bpoly
                    * mpf(hk.numerator)
                    / hk.denominator
                )
        for k in range(n + 1):
            total += (
                mpf((-1) ** k)
                * mp.binomial(n, k)
                * z ** (n - k)
                * _hurwitz_em(mpf(-k), z, wp, True)[1]
            )
        return total


def _zetadot_neg_int(n: int, ctx: PrecisionContext) -> mpf:
    """zetadot(-n) at a nonnegative integer; zetadot(0) = -log(2 pi)/2."""
    if n == 0:
        with ctx.working():
            return -log(2 * pi) / 2
    return _hurwitz_em(mpf(-n), 1, ctx.wp, True)[1]


def _bernoulli_poly_mpf(n: int, z) -> mpf:
    coeffs = exact.bernoulli_poly_coeffs(n)
    total = mpf(0)
    for c in coeffs:
        total = total * z + mpf(c.numerator) / c.denominator
    return total


# ---------------------------------------------------------------------------
# The infinite-product function f


def f_product_partial(s, terms: int, ctx: PrecisionContext) -> mpf:
    """Partial log-product sum_{k<terms} [1/2 + (k+s+1/4)(log(k+s) - log(k+s+1/2))]."""
    if terms < 1:
        raise DomainError("terms must be >= 1")
    wp = ctx.wp
    with mp.workprec(wp + 16):
        s = mpf(s)
        if s <= 0:
            raise DomainError(f"f is defined for s > 0, got {s}")
        total = mpf(0)
        half = mpf(1) / 2
        quarter = mpf(1) / 4
        for k in range(terms):
            ks = k + s
            total += half + (ks + quarter) * (log(ks) - log(ks + half))
        return total


def f_closed(s, ctx: PrecisionContext) -> mpf:
    """Closed form of f(s) via the Hurwitz zeta s-derivative difference."""
    wp = ctx.wp
    with mp.workprec(wp + 16):
        s = mpf(s)
        if s <= 0:
            raise DomainError(f"f is defined for s > 0, got {s}")
        half = mpf(1) / 2
        return (
            _hurwitz_em(mpf(-1), s + half, wp, True)[1]
            - _hurwitz_em(mpf(-1), s, wp, True)[1]
            + (-mp_loggamma(2 * s + 1) + log(s)) / 4
            + (log(mpf(2)) - 1) * s / 2
            + log(mpf(2)) / 4
            + log(pi) / 8
            + mpf(1) / 8
        )


# ---------------------------------------------------------------------------
# Named constants (CLI dump and the symbolic basis)

CONSTANT_NAMES = (
    "pi",
    "gamma",
    "log2",
    "logpi",
    "loggamma_quarter",
    "beta2",
    "beta4",
    "zeta3",
    "zeta5",
    "zetadot_m1",
    "zetadot_m3",
    "betadot_m2",
    "betadot_m4",
)


def named_constants(ctx: PrecisionContext) -> dict:
    """The paper-wide constants at working precision, cached per precision."""
    key = ctx.wp
    with _lock:
        cached = _const_cache.get(key)
    if cached is not None:
        return cached
    with ctx.working():
        vals = {
            "pi": +pi,
            "gamma": +euler,
            "log2": log(mpf(2)),
            "logpi": log(pi),
            "loggamma_quarter": mp_loggamma(mpf(1) / 4),
            "beta2": dirichlet_beta(2, ctx),
            "beta4": dirichlet_beta(4, ctx),
            "zeta3": riemann_zeta(3, ctx),
            "zeta5": riemann_zeta(5, ctx),
            "zetadot_m1": _hurwitz_em(mpf(-1), 1, ctx.wp, True)[1],
            "zetadot_m3": _hurwitz_em(mpf(-3), 1, ctx.wp, True)[1],
            "betadot_m2": beta_sderiv_neg_even(1, ctx),
            "betadot_m4": beta_sderiv_neg_even(2, ctx),
        }
    with _lock:
        _const_cache[key] = vals
    return vals
