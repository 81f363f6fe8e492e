"""Special-function kernel: frozen classical values, mpmath cross-checks,
precision scaling, reflection and Lerch consistency."""

import pytest
from mpmath import mp, mpf, log, exp, pi, zeta as mp_zeta, loggamma as mp_loggamma, polylog as mp_polylog, catalan, workprec

from hypint import functions as fn
from hypint.errors import DomainError, PoleError
from hypint.precision import PrecisionContext


def ref_prec():
    return workprec(350)


def test_riemann_zeta_classics(ctx):
    with ref_prec():
        assert abs(fn.riemann_zeta(2, ctx) - pi**2 / 6) < ctx.tolerance()
        assert abs(fn.riemann_zeta(-1, ctx) + mpf(1) / 12) < ctx.tolerance()
        assert abs(fn.riemann_zeta(0, ctx) + mpf(1) / 2) < ctx.tolerance()


def test_zeta_pole():
    ctx = PrecisionContext(128)
    with pytest.raises(PoleError):
        fn.riemann_zeta(1, ctx)
    with pytest.raises(PoleError):
        fn.hurwitz_zeta(1, mpf(1) / 4, ctx)


def test_hurwitz_domain():
    ctx = PrecisionContext(128)
    with pytest.raises(DomainError):
        fn.hurwitz_zeta(2, 0, ctx)
    with pytest.raises(DomainError):
        fn.hurwitz_zeta(2, -1, ctx)


def test_hurwitz_classics(ctx):
    with ref_prec():
        assert abs(fn.hurwitz_zeta(2, 1, ctx) - pi**2 / 6) < ctx.tolerance()
        # zeta(s, 1/2) = (2^s - 1) zeta(s)
        assert abs(fn.hurwitz_zeta(2, mpf(1) / 2, ctx) - pi**2 / 2) < ctx.tolerance()
        # zeta(-2, 1/4) - zeta(-2, 3/4) = -1/32 via Bernoulli polynomials
        d = fn.hurwitz_zeta(-2, mpf(1) / 4, ctx) - fn.hurwitz_zeta(-2, mpf(3) / 4, ctx)
        assert abs(d + mpf(1) / 32) < ctx.tolerance()


def test_hurwitz_against_mpmath(ctx):
    with ref_prec():
        for s in (mpf(2), mpf(3), mpf("-1.5"), mpf("0.25"), mpf(-4)):
            for a in (mpf(1) / 4, mpf(3) / 4, mpf("1.75"), mpf(9)):
                mine = fn.hurwitz_zeta(s, a, ctx)
                assert abs(mine - mp_zeta(s, a)) < ctx.tolerance(), (s, a)


def test_hurwitz_sderiv_against_mpmath(ctx):
    with ref_prec():
        for s in (mpf(-1), mpf(-2), mpf(-3), mpf(-4), mpf(2), mpf("-0.5")):
            for a in (mpf(1) / 4, mpf(1) / 2, mpf(1), mpf("2.25")):
                mine = fn.hurwitz_zeta_sderiv(s, a, ctx)
                assert abs(mine - mp_zeta(s, a, 1)) < ctx.tolerance(), (s, a)


def test_zetadot_reflection_values(ctx):
    with ref_prec():
        # zetadot(-2k) = (-1)^k (2pi)^(-2k) (2k)! zeta(2k+1) / 2, checked
        # against the direct Euler-Maclaurin s-derivative
        for k in (1, 2, 3):
            refl = fn.zeta_sderiv_neg_even(k, ctx)
            direct = fn.hurwitz_zeta_sderiv(-2 * k, 1, ctx)
            assert abs(refl - direct) < ctx.tolerance(), k
        assert abs(fn.hurwitz_zeta_sderiv(-2, 1, ctx) + fn.riemann_zeta(3, ctx) / (4 * pi**2)) < ctx.tolerance()


def test_zetadot_m1_frozen_digits(ctx):
    # frozen from independent Euler-Maclaurin evaluation at 200 bits
    with ref_prec():
        assert abs(fn.hurwitz_zeta_sderiv(-1, 1, ctx) - mpf("-0.1654211437004509")) < mpf("1e-16")


def test_lerch_formula(ctx):
    # zetadot(0, a) = log Gamma(a) - log(2 pi)/2
    import random

    rng = random.Random(7)
    with ref_prec():
        for _ in range(100):
            a = mpf(rng.uniform(0.1, 10.0))
            lhs = fn.hurwitz_zeta_sderiv(0, a, ctx)
            rhs = fn.log_gamma(a, ctx) - log(2 * pi) / 2
            assert abs(lhs - rhs) < ctx.tolerance(12), a


def test_beta_values(ctx):
    with ref_prec():
        assert abs(fn.dirichlet_beta(1, ctx) - pi / 4) < ctx.tolerance()
        assert abs(fn.dirichlet_beta(2, ctx) - catalan) < ctx.tolerance()
        assert abs(fn.dirichlet_beta(-2, ctx) + mpf(1) / 2) < ctx.tolerance()
        # hurwitz-difference route equals the accelerated series route
        s = mpf("1.3")
        hurwitz_route = 4 ** (-s) * (
            fn.hurwitz_zeta(s, mpf(1) / 4, ctx) - fn.hurwitz_zeta(s, mpf(3) / 4, ctx)
        )
        assert abs(fn.dirichlet_beta(s, ctx) - hurwitz_route) < ctx.tolerance()


def test_eta_lambda(ctx):
    with ref_prec():
        assert abs(fn.dirichlet_eta(1, ctx) - log(mpf(2))) < ctx.tolerance()
        for s in (mpf(2), mpf("0.5"), mpf(3)):
            assert abs(fn.dirichlet_eta(s, ctx) - (1 - 2 ** (1 - s)) * fn.riemann_zeta(s, ctx)) < ctx.tolerance()
            assert abs(fn.dirichlet_lambda(s, ctx) - (1 - 2 ** (-s)) * fn.riemann_zeta(s, ctx)) < ctx.tolerance()


def test_beta_sderiv_values(ctx):
    with ref_prec():
        # betadot(-1) = 2 beta(2) / pi
        assert abs(fn.beta_sderiv_neg_odd(1, ctx) - 2 * catalan / pi) < ctx.tolerance()
        # closed form against direct Hurwitz-difference derivative
        for k in (1, 2, 3, 4):
            refl = fn.beta_sderiv_neg_odd(k, ctx)
            direct = fn.dirichlet_beta_sderiv(1 - 2 * k, ctx)
            assert abs(refl - direct) < ctx.tolerance(), k


def test_beta_sderiv_reflection_vs_numerical_differencing(ctx):
    # (beta(s+h) - beta(s-h)) / 2h at h = 2^(-bits/3) within 2^(-bits/4)
    with ref_prec():
        h = mpf(2) ** (-(ctx.bits // 3))
        tol = mpf(2) ** (-(ctx.bits // 4))
        for k in (1, 2, 3, 4):
            s = mpf(1 - 2 * k)
            numeric = (fn.dirichlet_beta(s + h, ctx) - fn.dirichlet_beta(s - h, ctx)) / (2 * h)
            assert abs(fn.beta_sderiv_neg_odd(k, ctx) - numeric) < tol, k


def test_gamma_family(ctx):
    with ref_prec():
        assert abs(fn.digamma(1, ctx) + fn.euler_gamma(ctx)) < ctx.tolerance()
        assert abs(fn.digamma(mpf(3) / 4, ctx) - fn.digamma(mpf(1) / 4, ctx) - pi) < ctx.tolerance()
        # log Gamma(1/4): frozen digits, cross-checked through Lerch's formula
        lg = fn.log_gamma(mpf(1) / 4, ctx)
        assert abs(lg - mpf("1.288022524698077")) < mpf("1e-15")
        lerch = fn.hurwitz_zeta_sderiv(0, mpf(1) / 4, ctx) + log(2 * pi) / 2
        assert abs(lg - lerch) < ctx.tolerance()
    with pytest.raises(DomainError):
        fn.log_gamma(0, ctx)
    with pytest.raises(DomainError):
        fn.digamma(-1, ctx)
    with pytest.raises(DomainError):
        fn.polygamma(1, 0, ctx)


def test_polylog_classics(ctx):
    with ref_prec():
        assert abs(fn.polylog(1, mpf(1) / 2, ctx) - log(mpf(2))) < ctx.tolerance()
        # continuity at the endpoint: Li_2(1-) -> pi^2/6
        assert abs(fn.polylog(2, 1 - mpf(10) ** -6, ctx) - pi**2 / 6) < mpf(10) ** -4


def test_polylog_dual_method_consistency(ctx):
    # direct series against the expansion branch on both sides of the cut
    with ref_prec():
        s = mpf(3) / 2
        tol = mpf(2) ** (-(ctx.bits - 16))
        for w in (mpf(1) / 9, mpf(1) / 7):
            x = exp(-w)
            direct = fn._polylog_direct(s, x, ctx.wp)
            near = fn._polylog_near_one(s, w, ctx.wp)
            assert abs(direct - near) < tol, w


def test_polylog_against_mpmath(ctx):
    with ref_prec():
        for s in (mpf(1), mpf(2), mpf(4), mpf("2.5"), mpf("0.75")):
            for x in (mpf("0.3"), exp(-mpf(1) / 100), exp(-mpf(1) / 30)):
                assert abs(fn.polylog(s, x, ctx) - mp_polylog(s, x)) < ctx.tolerance(), (s, x)


def test_polylog_domain(ctx):
    with pytest.raises(DomainError):
        fn.polylog(2, mpf("1.5"), ctx)
    with pytest.raises(DomainError):
        fn.polylog(-1, mpf("0.5"), ctx)


def test_adamchik_fundamental_theorem(ctx):
    # int_1^2 psi = log Gamma(2) - log Gamma(1) = 0
    with ref_prec():
        d = fn.adamchik_psi_integral(0, 2, ctx) - fn.adamchik_psi_integral(0, 1, ctx)
        assert abs(d - (fn.log_gamma(2, ctx) - fn.log_gamma(1, ctx))) < ctx.tolerance()


def test_adamchik_against_quadrature(ctx):
    from hypint import quadrature as quad

    with ref_prec():
        tol = mpf(2) ** (-(ctx.bits - 20))
        for n, z in ((1, mpf(1)), (2, mpf(1) / 2)):
            closed = fn.adamchik_psi_integral(n, z, ctx)
            r = quad.integrate_finite(
                lambda x: x**n * fn.digamma(x, ctx), mpf(0), z, ctx,
                target_error=tol / 4,
            )
            assert abs(closed - r.value) < max(tol, 4 * r.est_error), (n, z)


def test_precision_scaling():
    # recomputing at bits+64 moves results by less than 2^-(bits-8)
    base = PrecisionContext(128)
    more = PrecisionContext(192)
    with workprec(400):
        for f in (
            lambda c: fn.hurwitz_zeta_sderiv(-3, mpf(1) / 4, c),
            lambda c: fn.dirichlet_beta(mpf("0.7"), c),
            lambda c: fn.polylog(mpf("1.5"), exp(-mpf(1) / 50), c),
            lambda c: fn.f_closed(mpf(1) / 4, c),
        ):
            assert abs(f(base) - f(more)) < base.tolerance() * max(1, abs(f(base)))


def test_named_constants_complete(ctx):
    vals = fn.named_constants(ctx)
    assert set(vals) == set(fn.CONSTANT_NAMES)
    with ref_prec():
        assert abs(vals["beta2"] - catalan) < ctx.tolerance()
