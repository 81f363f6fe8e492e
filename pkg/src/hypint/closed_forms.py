"""Closed-form evaluation of every hyperbolic integral family.

Continuous-T formulas are implemented exactly as printed (entire in T,
no removable-singularity division); integer-T values additionally come in
exact symbolic form as :class:`ConstantCombination` over the fixed
constant basis plus a finite logarithmic sum.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

from mpmath import mp, mpf, exp, log, pi, isint

from .errors import DomainError, DivergentInput, UnsupportedParameter
from .precision import PrecisionContext, to_mpf
from . import exact
from . import functions as fn

BASIS = (
    "one",
    "log2",
    "logpi",
    "loggamma_quarter",
    "beta2_over_pi",
    "beta4_over_pi3",
    "zeta3_over_pi2",
    "zeta5_over_pi4",
    "zetadot_m1",
    "zetadot_m3",
    "betadot_m2",
    "betadot_m4",
)


def basis_values(ctx: PrecisionContext) -> dict:
    c = fn.named_constants(ctx)
    with ctx.working():
        return {
            "one": mpf(1),
            "log2": c["log2"],
            "logpi": c["logpi"],
            "loggamma_quarter": c["loggamma_quarter"],
            "beta2_over_pi": c["beta2"] / c["pi"],
            "beta4_over_pi3": c["beta4"] / c["pi"] ** 3,
            "zeta3_over_pi2": c["zeta3"] / c["pi"] ** 2,
            "zeta5_over_pi4": c["zeta5"] / c["pi"] ** 4,
            "zetadot_m1": c["zetadot_m1"],
            "zetadot_m3": c["zetadot_m3"],
            "betadot_m2": c["betadot_m2"],
            "betadot_m4": c["betadot_m4"],
        }


@dataclass(frozen=True)
class ConstantCombination:
    """Exact value: global_sign * (sum coeffs[b]*b + sum c_i*log(m_i))."""

    coeffs: tuple = ()  # ((basis_name, Fraction), ...)
    log_sum: tuple = ()  # ((Fraction, int), ...) meaning c * log(m)
    global_sign: int = 1

    @classmethod
    def build(cls, coeffs: dict, log_sum=(), global_sign: int = 1) -> "ConstantCombination":
        for name in coeffs:
            if name not in BASIS:
                raise UnsupportedParameter(f"constant {name!r} outside the symbolic basis")
        cleaned = tuple(
            (name, Fraction(v)) for name, v in sorted(coeffs.items()) if Fraction(v) != 0
        )
        logs: dict = {}
        for c, m in log_sum:
            c = Fraction(c)
            m = int(m)
            if m <= 0:
                raise DomainError("log arguments must be positive integers")
            if m == 1 or c == 0:
                continue
            logs[m] = logs.get(m, Fraction(0)) + c
        lg = tuple((c, m) for m, c in sorted(logs.items()) if c != 0)
        return cls(cleaned, lg, 1 if global_sign >= 0 else -1)

    def signed(self) -> "ConstantCombination":
        """Fold the recorded sign into the coefficients (canonical form)."""
        if self.global_sign == 1:
            return self
        return ConstantCombination(
            tuple((n, -v) for n, v in self.coeffs),
            tuple((-c, m) for c, m in self.log_sum),
            1,
        )

    def same_value(self, other: "ConstantCombination") -> bool:
        a, b = self.signed(), other.signed()
        return a.coeffs == b.coeffs and a.log_sum == b.log_sum

    def coeff(self, name: str) -> Fraction:
        for n, v in self.signed().coeffs:
            if n == name:
                return v
        return Fraction(0)

    def evaluate(self, ctx: PrecisionContext) -> mpf:
        vals = basis_values(ctx)
        with ctx.working():
            total = mpf(0)
            for name, c in self.coeffs:
                total += mpf(c.numerator) / c.denominator * vals[name]
            for c, m in self.log_sum:
                total += mpf(c.numerator) / c.denominator * log(mpf(m))
            return self.global_sign * total

    def to_json_dict(self) -> dict:
        d = {name: str(c) for name, c in self.coeffs}
        d["log_sum"] = [[str(c), m] for c, m in self.log_sum]
        d["global_sign"] = self.global_sign
        return d


# ---------------------------------------------------------------------------
# Integral specification for the oracle


@dataclass(frozen=True)
class IntegralSpec:
    """Integrand (tanh x / x)^N tanh(x)^K sech(x)^L exp(-T x) on (0, inf)."""

    N: int = 0
    K: int = 0
    L: object = 0
    T: object = 0

    def __post_init__(self):
        if self.N < 0 or self.K < 0:
            raise DomainError("N and K must be nonnegative integers")
        if mpf(self.L) < 0 or mpf(self.T) < 0:
            raise DomainError("L and T must be nonnegative")
        if self.N == 0 and self.K == 0 and mpf(self.L) == 0 and mpf(self.T) == 0:
            raise DivergentInput("the constant integrand 1 is not integrable on (0, inf)")

    @property
    def converges(self) -> bool:
        # decay at infinity: e^-(L+T)x, else algebraic x^-N (needs N >= 2)
        return mpf(self.L) + mpf(self.T) > 0 or self.N >= 2

    def integrand(self, ctx: PrecisionContext):
        L = to_mpf(self.L, ctx)
        T = to_mpf(self.T, ctx)
        N, K = self.N, self.K
        t_int = isint(T) and int(T) >= 0
        t_i = int(T) if t_int else None
        l_int = isint(L) and int(L) >= 0
        l_i = int(L) if l_int else None

        def f(x):
            e = exp(-x)
            e2 = e * e
            denom = 1 + e2
            th = (1 - e2) / denom
            val = mpf(1)
            if N:
                val *= (th / x) ** N
            if K:
                val *= th**K
            if l_i is not None:
                if l_i:
                    val *= (2 * e / denom) ** l_i
            elif L != 0:
                val *= (2 * e / denom) ** L
            if t_i is not None:
                if t_i:
                    val *= e**t_i
            elif T != 0:
                val *= exp(-T * x)
            return val

        return f


# ---------------------------------------------------------------------------
# sech^L exp(-Tx) and tanh sech^L exp(-Tx)


def _psi_even(T, ctx):  # psi((T+4)/4) - psi((T+2)/4)
    return fn.digamma((T + 4) / 4, ctx) - fn.digamma((T + 2) / 4, ctx)


def _psi_odd(T, ctx):  # psi((T+3)/4) - psi((T+1)/4)
    return fn.digamma((T + 3) / 4, ctx) - fn.digamma((T + 1) / 4, ctx)


def sech_power_exp(L: int, T, ctx: PrecisionContext) -> mpf:
    """int_0^inf sech(x)^L exp(-Tx) dx for integer L >= 0 (L + T > 0)."""
    if not isinstance(L, int):
        raise UnsupportedParameter("sech_power_exp covers integer L only; use the oracle otherwise")
    if L < 0:
        raise DomainError("L must be >= 0")
    with ctx.working():
        T = to_mpf(T, ctx)
        if T < 0:
            raise DomainError("T must be >= 0")
        if L == 0:
            if T == 0:
                raise DivergentInput("sech^0 exp(0) is not integrable")
            return 1 / T
        if L % 2 == 0:
            half_l = L // 2
            base = -T / 2 * _psi_even(T, ctx) + 1
            prod = mpf(1)
            for j in range(1, half_l):
                prod *= (2 * j) ** 2 - T * T
            total = prod * base / mp.factorial(2 * half_l - 1)
            for j in range(1, half_l):
                p = mpf(1)
                for k in range(j + 1, half_l):
                    p *= ((2 * k) ** 2 - T * T) / (2 * k * (2 * k + 1))
                total += p * T / (2 * j * (2 * j + 1))
            return total
        half_l = (L - 1) // 2
        base = _psi_odd(T, ctx) / 2
        prod = mpf(1)
        for j in range(half_l):
            prod *= (2 * j + 1) ** 2 - T * T
        total = prod * base / mp.factorial(2 * half_l)
        for j in range(half_l):
            p = mpf(1)
            for k in range(j + 1, half_l):
                p *= ((2 * k + 1) ** 2 - T * T) / ((2 * k + 1) * (2 * k + 2))
            total += p * T / ((2 * j + 1) * (2 * j + 2))
        return total


def tanh_sech_power_exp(L: int, T, ctx: PrecisionContext) -> mpf:
    """int_0^inf tanh(x) sech(x)^L exp(-Tx) dx for integer L >= 1.

    Implemented in the T-entire printed form, so T = 0 needs no limit
    handling and reduces to 1/L.
    """
    if not isinstance(L, int) or L < 1:
        raise DomainError("L must be an integer >= 1")
    with ctx.working():
        T = to_mpf(T, ctx)
        if T < 0:
            raise DomainError("T must be >= 0")
        if L % 2 == 0:
            half_l = L // 2
            base = -T / 2 * _psi_even(T, ctx) + 1
            prod = mpf(1)
            for j in range(1, half_l):
                prod *= (2 * j) ** 2 - T * T
            total = -T * prod * base / mp.factorial(2 * half_l)
            s = mpf(0)
            for j in range(1, half_l):
                p = mpf(1)
                for k in range(j + 1, half_l):
                    p *= ((2 * k) ** 2 - T * T) / (2 * k * (2 * k + 1))
                s += p * T * T / (2 * j * (2 * j + 1))
            return total - s / (2 * half_l) + mpf(1) / (2 * half_l)
        half_l = (L - 1) // 2
        base = _psi_odd(T, ctx) / 2
        prod = mpf(1)
        for j in range(half_l):
            prod *= (2 * j + 1) ** 2 - T * T
        total = -T * prod * base / mp.factorial(2 * half_l + 1)
        s = mpf(0)
        for j in range(half_l):
            p = mpf(1)
            for k in range(j + 1, half_l):
                p *= ((2 * k + 1) ** 2 - T * T) / ((2 * k + 1) * (2 * k + 2))
            s += p * T * T / ((2 * j + 1) * (2 * j + 2))
        return total - s / (2 * half_l + 1) + mpf(1) / (2 * half_l + 1)


# ---------------------------------------------------------------------------
# tanh(x)/x sech(x)^L exp(-Tx), continuous T


def _zdiff(order: int, a1, a2, ctx):
    return fn.hurwitz_zeta_sderiv(order, a1, ctx) - fn.hurwitz_zeta_sderiv(order, a2, ctx)


def _lgdiff(a1, a2, ctx):
    return fn.log_gamma(a1, ctx) - fn.log_gamma(a2, ctx)


def tanh_over_x_sech_exp(L: int, T, ctx: PrecisionContext) -> mpf:
    """int_0^inf (tanh x / x) sech(x)^L exp(-Tx) dx for L in 1..4, T >= 0,
    via the Hurwitz zeta s-derivative closed forms."""
    if L not in (1, 2, 3, 4):
        raise UnsupportedParameter(
            f"closed forms cover L in 1..4 (the general-L polynomial structure is conjectural); got L={L}"
        )
    with ctx.working():
        T = to_mpf(T, ctx)
        if T < 0:
            raise DomainError("T must be >= 0")
        if L == 1:
            a1, a2 = (T + 1) / 4, (T + 3) / 4
            return 8 * _zdiff(-1, a1, a2, ctx) - 2 * T * _lgdiff(a1, a2, ctx)
        if L == 2:
            a1, a2 = (T + 2) / 4, (T + 4) / 4
            return (
                16 * _zdiff(-2, a1, a2, ctx)
                - 8 * T * _zdiff(-1, a1, a2, ctx)
                + T * T * _lgdiff(a1, a2, ctx)
            )
        if L == 3:
            a1, a2 = (T + 1) / 4, (T + 3) / 4
            return (
                -mpf(64) / 3 * _zdiff(-3, a1, a2, ctx)
                + 16 * T * _zdiff(-2, a1, a2, ctx)
                - (4 * T * T - mpf(4) / 3) * _zdiff(-1, a1, a2, ctx)
                + (T**3 - T) / 3 * _lgdiff(a1, a2, ctx)
            )
        a1, a2 = (T + 2) / 4, (T + 4) / 4
        return (
            -mpf(64) / 3 * _zdiff(-4, a1, a2, ctx)
            + mpf(64) / 3 * T * _zdiff(-3, a1, a2, ctx)
            - (8 * T * T - mpf(16) / 3) * _zdiff(-2, a1, a2, ctx)
            + (mpf(4) / 3 * T**3 - mpf(8) / 3 * T) * _zdiff(-1, a1, a2, ctx)
            - (T**4 / 12 - T * T / 3) * _lgdiff(a1, a2, ctx)
        )


# ---------------------------------------------------------------------------
# Integer-T symbolic forms


def _logsum_odd(poly, k: int):
    """[(poly(j-k) with sign (-1)^j, 2j+1) for j in 0..k-1]."""
    return [((-1) ** j * poly(Fraction(j - k)), 2 * j + 1) for j in range(k)]


def _logsum_int(poly, k: int):
    """[(poly(j-k) with sign (-1)^j, j) for j in 1..k]."""
    return [((-1) ** j * poly(Fraction(j - k)), j) for j in range(1, k + 1)]


def tanh_over_x_sech_exp_symbolic(L: int, T: int) -> ConstantCombination:
    """Exact value of int_0^inf (tanh x/x) sech^L e^(-Tx) dx at integer T >= 0."""
    if L not in (1, 2, 3, 4):
        raise UnsupportedParameter(
            f"closed forms cover L in 1..4 (the general-L polynomial structure is conjectural); got L={L}"
        )
    if not isinstance(T, int) or T < 0:
        raise DomainError("symbolic form needs integer T >= 0")
    k = T // 2
    odd_t = T % 2 == 1
    sign = (-1) ** k
    kk = Fraction(k)
    if L == 1 and not odd_t:
        return ConstantCombination.build(
            {"log2": 6 * kk, "logpi": 4 * kk, "loggamma_quarter": -8 * kk, "beta2_over_pi": 4},
            _logsum_odd(lambda m: 2 * (2 * m + 1), k),
            sign,
        )
    if L == 1:
        return ConstantCombination.build(
            {"log2": 2 * kk - Fraction(1, 3), "logpi": -(2 * kk + 1), "zetadot_m1": -12},
            _logsum_int(lambda m: -2 * (2 * m - 1), k),
            sign,
        )
    if L == 2 and not odd_t:
        return ConstantCombination.build(
            {
                "log2": -(2 * kk**2 - Fraction(8, 3) * kk),
                "logpi": 2 * kk**2,
                "zetadot_m1": 24 * kk,
                "zeta3_over_pi2": 7,
            },
            _logsum_int(lambda m: -4 * m**2, k),
            sign,
        )
    if L == 2:
        return ConstantCombination.build(
            {
                "log2": 6 * kk**2 + 6 * kk + Fraction(3, 2),
                "logpi": 4 * kk**2 + 4 * kk + 1,
                "loggamma_quarter": -(8 * kk**2 + 8 * kk + 2),
                "beta2_over_pi": 8 * kk + 4,
                "betadot_m2": -1,
            },
            _logsum_odd(lambda m: -4 * m**2, k),
            sign,
        )
    if L == 3 and not odd_t:
        return ConstantCombination.build(
            {
                "log2": -(4 * kk**3 - kk),
                "logpi": -(Fraction(8, 3) * kk**3 - Fraction(2, 3) * kk),
                "loggamma_quarter": Fraction(16, 3) * kk**3 - Fraction(4, 3) * kk,
                "beta2_over_pi": -(8 * kk**2 - Fraction(2, 3)),
                "betadot_m2": 2 * kk,
                "beta4_over_pi3": 16,
            },
            _logsum_odd(
                lambda m: -(Fraction(8, 3) * m**3 + 4 * m**2 + Fraction(4, 3) * m), k
            ),
            sign,
        )
    if L == 3:
        return ConstantCombination.build(
            {
                "log2": -(
                    Fraction(4, 3) * kk**3 - Fraction(2, 3) * kk**2 - 2 * kk - Fraction(4, 45)
                ),
                "logpi": Fraction(4, 3) * kk**3 + 2 * kk**2 + Fraction(2, 3) * kk,
                "zetadot_m1": 24 * kk**2 + 24 * kk + 4,
                "zeta3_over_pi2": 14 * kk + 7,
                "zetadot_m3": 40,
            },
            _logsum_int(lambda m: Fraction(8, 3) * m**3 - 4 * m**2 + Fraction(4, 3) * m, k),
            sign,
        )
    if L == 4 and not odd_t:
        return ConstantCombination.build(
            {
                "log2": Fraction(2, 3) * kk**4
                - Fraction(16, 9) * kk**3
                - Fraction(2, 3) * kk**2
                + Fraction(8, 5) * kk,
                "logpi": -(Fraction(2, 3) * kk**4 - Fraction(2, 3) * kk**2),
                "zetadot_m1": -(16 * kk**3 - 8 * kk),
                "zeta3_over_pi2": -(14 * kk**2 - Fraction(7, 3)),
                "zetadot_m3": -80 * kk,
                "zeta5_over_pi4": 31,
            },
            _logsum_int(lambda m: Fraction(4, 3) * m**4 - Fraction(4, 3) * m**2, k),
            sign,
        )
    return ConstantCombination.build(
        {
            "log2": -(2 * kk**4 + 4 * kk**3 + kk**2 - kk - Fraction(3, 8)),
            "logpi": -(
                Fraction(4, 3) * kk**4
                + Fraction(8, 3) * kk**3
                + Fraction(2, 3) * kk**2
                - Fraction(2, 3) * kk
                - Fraction(1, 4)
            ),
            "loggamma_quarter": Fraction(8, 3) * kk**4
            + Fraction(16, 3) * kk**3
            + Fraction(4, 3) * kk**2
            - Fraction(4, 3) * kk
            - Fraction(1, 2),
            "beta2_over_pi": -(
                Fraction(16, 3) * kk**3 + 8 * kk**2 + Fraction(4, 3) * kk - Fraction(2, 3)
            ),
            "betadot_m2": 2 * kk**2 + 2 * kk + Fraction(1, 6),
            "beta4_over_pi3": 32 * kk + 16,
            "betadot_m4": Fraction(1, 12),
        },
        _logsum_odd(lambda m: Fraction(4, 3) * m**4 - Fraction(4, 3) * m**2, k),
        sign,
    )


# ---------------------------------------------------------------------------
# Recurrence theorems


def beta_recurrence_coeffs(N: int):
    """Exact coefficients of beta(2k)/pi^(2k-1), k = 1..N+1, for
    int (tanh x/x) sech^(2N+1)."""
    if N < 0:
        raise DomainError("N must be >= 0")
    g = exact.g_table(N + 1)
    pref = Fraction(comb(2 * N, N), (2 * N + 1) * 2 ** (2 * N))
    return [
        (pref * 2 ** (2 * k) * factorial(2 * k - 1) * g[(N + 1, k)], k) for k in range(1, N + 2)
    ]


def beta_recurrence_eval(N: int, ctx: PrecisionContext) -> mpf:
    coeffs = beta_recurrence_coeffs(N)
    with ctx.working():
        total = mpf(0)
        for c, k in coeffs:
            total += (
                mpf(c.numerator)
                / c.denominator
                * fn.dirichlet_beta(2 * k, ctx)
                / pi ** (2 * k - 1)
            )
        return total


def beta_recurrence_symbolic(N: int) -> ConstantCombination:
    if N > 1:
        raise UnsupportedParameter("symbolic basis covers beta(2), beta(4) only (N <= 1)")
    names = {1: "beta2_over_pi", 2: "beta4_over_pi3"}
    return ConstantCombination.build({names[k]: c for c, k in beta_recurrence_coeffs(N)})


def zeta_recurrence_coeffs(N: int):
    """Exact coefficients of zeta(2k+1)/pi^(2k), k = 1..N, for
    int (tanh x/x) sech^(2N)."""
    if N < 1:
        raise DomainError("N must be >= 1")
    h = exact.h_table(N)
    pref = Fraction(2 ** (2 * N), N**2 * comb(2 * N, N))
    return [
        (pref * (2 - Fraction(1, 2 ** (2 * k))) * factorial(2 * k) * h[(N, k)], k)
        for k in range(1, N + 1)
    ]


def zeta_recurrence_eval(N: int, ctx: PrecisionContext) -> mpf:
    coeffs = zeta_recurrence_coeffs(N)
    with ctx.working():
        total = mpf(0)
        for c, k in coeffs:
            total += (
                mpf(c.numerator)
                / c.denominator
                * fn.riemann_zeta(2 * k + 1, ctx)
                / pi ** (2 * k)
            )
        return total


def zeta_recurrence_symbolic(N: int) -> ConstantCombination:
    if N > 2:
        raise UnsupportedParameter("symbolic basis covers zeta(3), zeta(5) only (N <= 2)")
    names = {1: "zeta3_over_pi2", 2: "zeta5_over_pi4"}
    return ConstantCombination.build({names[k]: c for c, k in zeta_recurrence_coeffs(N)})


# ---------------------------------------------------------------------------
# (tanh x / x)^N


def tanh_over_x_power_coeffs(N: int):
    """Exact coefficients of zeta(2k+1)/pi^(2k), k = 1..N-1, for
    int (tanh x/x)^N dx."""
    if N < 2:
        raise DomainError("N must be >= 2")
    d = exact.dN_table(N)
    h = exact.h_table(N - 1)
    out = []
    for k in range(1, N):
        inner = Fraction(0)
        for j in range(k, N):
            inner += d[(N - 1, 2 * j)] * Fraction(2 ** (2 * j), j**2 * comb(2 * j, j)) * h[(j, k)]
        coeff = (
            Fraction(1, factorial(N - 1))
            * inner
            * factorial(2 * k)
            * (2 - Fraction(1, 2 ** (2 * k)))
        )
        out.append((coeff, k))
    return out


def tanh_over_x_power(N: int, ctx: PrecisionContext):
    """Value and exact zeta-coefficient vector of int (tanh x/x)^N dx."""
    coeffs = tanh_over_x_power_coeffs(N)
    with ctx.working():
        total = mpf(0)
        for c, k in coeffs:
            total += (
                mpf(c.numerator)
                / c.denominator
                * fn.riemann_zeta(2 * k + 1, ctx)
                / pi ** (2 * k)
            )
        return total, coeffs


# ---------------------------------------------------------------------------
# Infinite products


def infinite_product_beta2(terms: int, ctx: PrecisionContext) -> mpf:
    """Partial-product approximation to beta(2):
    (pi/4) log 2 + 2 pi sum_{k<terms} [-1/2 + (k+1/2)(log(4k+3) - log(4k+1))]."""
    if terms < 1:
        raise DomainError("terms must be >= 1")
    with ctx.working():
        half = mpf(1) / 2
        s = mpf(0)
        for k in range(terms):
            s += -half + (k + half) * (log(mpf(4 * k + 3)) - log(mpf(4 * k + 1)))
        return pi / 4 * log(mpf(2)) + 2 * pi * s


def infinite_product_zdot(terms: int, ctx: PrecisionContext) -> mpf:
    """Partial-product approximation to zetadot(-1):
    1/12 - (7/36) log 2 - (1/12) log pi + (2/3) sum_{k<terms} [1/2 + (k+3/4)(log(2k+1) - log(2k+2))]."""
    if terms < 1:
        raise DomainError("terms must be >= 1")
    with ctx.working():
        s = mpf(0)
        half = mpf(1) / 2
        for k in range(terms):
            s += half + (k + mpf(3) / 4) * (log(mpf(2 * k + 1)) - log(mpf(2 * k + 2)))
        return mpf(1) / 12 - mpf(7) / 36 * log(mpf(2)) - log(pi) / 12 + mpf(2) / 3 * s


# ---------------------------------------------------------------------------
# Residual checks fed by the oracle


def _oracle_value(spec: IntegralSpec, ctx, oracle, target_error):
    if not spec.converges:
        raise DivergentInput(f"integral diverges for {spec}")
    return oracle(spec.integrand(ctx), ctx, target_error)


def partial_integration_residual(spec: IntegralSpec, ctx: PrecisionContext, oracle, target_error=None):
    """Both sides of the partial-integration identity, all four integrals
    from the oracle.  Returns (lhs, rhs, est_error)."""
    with ctx.working():
        terms = [
            (spec.N, IntegralSpec(spec.N + 1, spec.K, spec.L, spec.T)),
            (spec.N + spec.K + 1, IntegralSpec(spec.N, spec.K, mpf(spec.L) + 2, spec.T)),
            (-mpf(spec.L), IntegralSpec(spec.N, spec.K + 2, spec.L, spec.T)),
            (-mpf(spec.T), IntegralSpec(spec.N, spec.K + 1, spec.L, spec.T)),
        ]
        vals = []
        est = mpf(0)
        for coeff, sp in terms:
            if coeff == 0:
                vals.append(mpf(0))
                continue
            r = _oracle_value(sp, ctx, oracle, target_error)
            vals.append(coeff * r.value)
            est += abs(coeff) * r.est_error
        lhs = vals[0]
        rhs = vals[1] + vals[2] + vals[3]
        return lhs, rhs, est


def two_step_recurrence_residual(L, T, ctx: PrecisionContext, oracle, target_error=None):
    """Both sides of the two-step sech-power recurrence for real L > 0,
    all three integrals from the oracle.  Returns (lhs, rhs, est_error)."""
    with ctx.working():
        L = to_mpf(L, ctx)
        T = to_mpf(T, ctx)
        if L <= 0:
            raise DomainError("L must be > 0")
        r4 = _oracle_value(IntegralSpec(0, 0, L + 4, T), ctx, oracle, target_error)
        r2 = _oracle_value(IntegralSpec(0, 0, L + 2, T), ctx, oracle, target_error)
        r0 = _oracle_value(IntegralSpec(0, 0, L, T), ctx, oracle, target_error)
        lhs = (L + 2) * (L + 3) * r4.value
        c2 = (L + 1) * (2 * L + 3) - T * T + 1
        c0 = T * T - L * L
        rhs = c2 * r2.value + c0 * r0.value
        est = (L + 2) * (L + 3) * r4.est_error + abs(c2) * r2.est_error + abs(c0) * r0.est_error
        return lhs, rhs, est
