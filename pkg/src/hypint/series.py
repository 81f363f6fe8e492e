"""High-precision series summation: the oracle layer's series half.

Three engines:

* :func:`sum_series` — direct summation with a rigorous tail bound for
  alternating or exponentially decaying terms.
* :func:`alternating_sum` — Cohen/Rodriguez Villegas/Zagier Chebyshev
  acceleration for alternating series with smooth, slowly decaying terms.
* :func:`log_shifted_sum` — Euler-Maclaurin evaluation of
  sum_j log(a+cj) (b+cj)^(-sigma), the inner sums of the doubly-indexed
  logarithmic series in the functional-equation corollaries.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from mpmath import mp, mpf, log, sqrt, factorial as mpfactorial

from .errors import NoConvergence, DomainError
from .precision import PrecisionContext
from . import exact

MAX_TERMS = 500_000


def sum_series(term, ctx: PrecisionContext, target_error=None, kind: str = "auto") -> mpf:
    """Sum term(n) for n = 1, 2, ... with tail control by decay class.

    kind 'alternating' uses the last-term bound, switching to Chebyshev
    acceleration when the terms decay too slowly to meet the target
    directly; 'exponential' uses a geometric bound from the observed
    ratio; 'auto' sniffs signs first.  Terms must eventually decrease
    monotonically in absolute value.
    """
    wp = ctx.wp
    with mp.workprec(wp + 16):
        target = mpf(target_error) if target_error is not None else mpf(2) ** (-(ctx.bits - 24))
        first = [term(n) for n in range(1, 9)]
        if kind == "auto":
            signs = [mp.sign(t) for t in first if t != 0]
            alternating = all(signs[i] == -signs[i + 1] for i in range(len(signs) - 1))
            kind = "alternating" if alternating and len(signs) > 4 else "exponential"
        direct_cap = max(64, 4 * ctx.bits) if kind == "alternating" else MAX_TERMS
        total = mpf(0)
        prev_abs = None
        n = 0
        while n < direct_cap:
            n += 1
            t = first[n - 1] if n <= 8 else term(n)
            total += t
            at = abs(t)
            if at > 0 and prev_abs is not None and at < prev_abs:
                if kind == "alternating":
                    tail = at
                else:
                    r = at / prev_abs
                    tail = at * r / (1 - r) if r < 1 else mp.inf
                if tail <= target:
                    return total
            if at > 0:
                prev_abs = at
            elif prev_abs is not None and prev_abs <= target:
                return total
        if kind != "alternating":
            raise NoConvergence(f"series did not meet target after {direct_cap} terms")
        # slow alternating decay: accelerate with strict-alternation folding
        s0 = mp.sign(first[0]) or mpf(1)
        value, est = alternating_sum(
            lambda k: s0 * mpf((-1) ** k) * term(k + 1), ctx, target_error=target
        )
        return s0 * value


def _cvz(a, n: int) -> mpf:
    """Chebyshev-weighted estimate of sum_{k>=0} (-1)^k a(k) from n terms."""
    d = (3 + 2 * sqrt(mpf(2))) ** n
    d = (d + 1 / d) / 2
    b = mpf(-1)
    c = -d
    s = mpf(0)
    for k in range(n):
        c = b - c
        s += c * a(k)
        b = (k + n) * (k - n) * b / ((k + mpf(1) / 2) * (k + 1))
    return s / d


def alternating_sum(a, ctx: PrecisionContext, target_error=None) -> tuple:
    """sum_{k>=0} (-1)^k a(k) for smooth positive a with any decay rate.

    Returns (value, est_error); the estimate is the difference between two
    acceleration orders.  Raises NoConvergence if the estimate will not
    drop below the target.
    """
    wp = ctx.wp
    with mp.workprec(wp + 16):
        target = mpf(target_error) if target_error is not None else mpf(2) ** (-(ctx.bits - 24))
        # (3+sqrt 8)^-n error model for smooth terms, with headroom
        n = max(int(mp.log(1 / target) / mp.log(3 + 2 * sqrt(mpf(2)))) + 12, 24)
        cache: dict = {}

        def av(k):
            if k not in cache:
                cache[k] = a(k)
            return cache[k]

        for _ in range(4):
            v1 = _cvz(av, n)
            v2 = _cvz(av, n + 10)
            est = abs(v1 - v2)
            if est <= target:
                return v2, est
            n = int(n * 1.6) + 10
        raise NoConvergence("alternating acceleration stalled above target error")


def log_shifted_sum(sigma, a, b, c, ctx: PrecisionContext) -> mpf:
    """sum_{j>=0} log(a + c j) * (b + c j)^(-sigma) with b >= a > 0, sigma > 1.

    Direct summation of an initial block plus an Euler-Maclaurin tail whose
    integral has the closed form int log(u) u^(-sigma) du combined with a
    geometric expansion of log(1 - (b-a)/u).
    """
    wp = ctx.wp
    with mp.workprec(wp + 24):
        sigma = mpf(sigma)
        a = mpf(a)
        b = mpf(b)
        c = mpf(c)
        if sigma <= 1:
            raise DomainError("log_shifted_sum needs sigma > 1")
        delta = b - a
        if delta < 0:
            raise DomainError("log_shifted_sum needs b >= a")
        eps = mpf(2) ** (-(wp + 8))
        M = int(max(2 * float(delta / c) + 1, 48, wp // 3))
        for _ in range(6):
            direct = mpf(0)
            for j in range(M):
                direct += log(a + c * j) * (b + c * j) ** (-sigma)
            tail = _em_tail(sigma, a, b, c, M, delta, eps)
            if tail is not None:
                return direct + tail
            M *= 2
        raise NoConvergence("Euler-Maclaurin tail for log sum did not stabilize")


def _em_tail(sigma, a, b, c, M, delta, eps):
    """Tail sum_{j>=M} h(j) for h(x) = log(a+cx)(b+cx)^(-sigma), or None if
    the Bernoulli correction series fails to decay at this M."""
    U = b + c * M
    F = U ** (1 - sigma) * ((sigma - 1) * log(U) + 1) / (sigma - 1) ** 2
    corr = mpf(0)
    if delta > 0:
        ratio = delta / U
        p = mpf(1)
        t = 1
        while True:
            p *= ratio
            inc = p / t * U ** (1 - sigma) / (sigma + t - 1)
            corr += inc
            if abs(inc) < eps * (abs(F) + abs(corr) + 1):
                break
            t += 1
            if t > 20_000:
                return None
    total = (F - corr) / c
    A = a + c * M
    B = b + c * M
    total += log(A) * B ** (-sigma) / 2

    R = 20
    maxd = 2 * R - 1
    # derivative factor tables: L^(m) of log(a+cx), P^(r) of (b+cx)^(-sigma)
    L = [log(A)] + [
        mpf((-1) ** (m - 1)) * mpfactorial(m - 1) * c**m * A ** (-m) for m in range(1, maxd + 1)
    ]
    P = [B ** (-sigma)]
    for r in range(1, maxd + 1):
        P.append(P[-1] * (-(sigma + r - 1)) * c / B)
    prev_mag = None
    scale = abs(total) + 1
    for r in range(1, R + 1):
        der = 2 * r - 1
        h_der = mp.fsum(comb(der, m) * L[m] * P[der - m] for m in range(der + 1))
        bern = exact.bernoulli(2 * r)
        term = -mpf(bern.numerator) / bern.denominator / mpfactorial(2 * r) * h_der
        total += term
        mag = abs(term)
        if mag < eps * scale:
            return total
        if prev_mag is not None and mag > prev_mag:
            return None
        prev_mag = mag
    return None


# ---------------------------------------------------------------------------
# Doubly-indexed logarithmic series of the functional-equation corollaries


def double_log_series(q_coeffs, family: str, sigma, ctx: PrecisionContext, target_error=None):
    """Value of the doubly-indexed log series, reordered by distance i = k - j.

    family 'odd':  sum_{k>=0} (-1)^k (2k+1)^(-sigma) sum_{j=0}^{k-1} (-1)^j Q(j-k) log(2j+1)
    family 'int':  sum_{k>=1} (-1)^k k^(-sigma)      sum_{j=1}^{k}   (-1)^j Q(j-k) log(j)

    Since (-1)^(k+j) = (-1)^(k-j), grouping by i = k - j gives an
    alternating series over i whose terms are shifted log sums; those are
    evaluated by Euler-Maclaurin and the i-series accelerated.  Q is given
    by exact rational coefficients q_coeffs[r] of (j-k)^r.

    Returns (value, est_error).
    """
    if family not in ("odd", "int"):
        raise DomainError(f"unknown series family {family!r}")
    wp = ctx.wp
    with mp.workprec(wp + 16):
        sigma = mpf(sigma)

        def q_at(i: int) -> Fraction:
            m = -i
            return sum((q for q in (q_coeffs[r] * m**r for r in range(len(q_coeffs)))), Fraction(0))

        inner: dict = {}

        def g(i: int) -> mpf:
            if i not in inner:
                if family == "odd":
                    # sum_{j>=1} log(2j+1)/(2j+2i+1)^sigma  (j = 0 contributes log 1 = 0)
                    inner[i] = log_shifted_sum(sigma, 3, 2 * i + 3, 2, ctx)
                else:
                    # sum_{j>=2} log(j)/(j+i)^sigma
                    inner[i] = log_shifted_sum(sigma, 2, 2 + i, 1, ctx)
            return inner[i]

        i0 = 1 if family == "odd" else 0
        skip = 8

        def b(i: int) -> mpf:
            qq = q_at(i)
            if qq == 0:
                return mpf(0)
            return mpf(qq.numerator) / qq.denominator * g(i)

        head = mp.fsum(mpf((-1) ** i) * b(i) for i in range(i0, i0 + skip))
        start = i0 + skip
        tail, est = alternating_sum(lambda m: b(start + m), ctx, target_error)
        sign = mpf((-1) ** start)
        return head + sign * tail, est
