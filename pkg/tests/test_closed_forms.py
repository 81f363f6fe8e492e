"""Closed forms: printed base cases, grid agreement, recurrence coherence,
symbolic combinations, products."""

from fractions import Fraction

import pytest
from mpmath import mp, mpf, exp, log, pi, zeta as mp_zeta, catalan, loggamma, workprec

from hypint import closed_forms as cf
from hypint import functions as fn
from hypint import quadrature as quad
from hypint.errors import DivergentInput, DomainError, UnsupportedParameter
from hypint.precision import PrecisionContext


def test_sech_power_base_cases(ctx):
    with workprec(300):
        assert abs(cf.sech_power_exp(1, 1, ctx) - log(mpf(2))) < ctx.tolerance()
        assert abs(cf.sech_power_exp(1, 0, ctx) - pi / 2) < ctx.tolerance()
        assert abs(cf.sech_power_exp(2, 0, ctx) - 1) < ctx.tolerance()
        assert abs(cf.sech_power_exp(3, 0, ctx) - pi / 4) < ctx.tolerance()
        assert abs(cf.sech_power_exp(4, 0, ctx) - mpf(2) / 3) < ctx.tolerance()


def test_sech_power_vs_oracle(ctx):
    with workprec(300):
        for L in (1, 2, 3, 4, 5, 6, 7, 8):
            for T in (mpf(0), mpf(1), mpf("2.5"), mpf(6)):
                spec = cf.IntegralSpec(0, 0, L, T)
                r = quad.integrate_semi_infinite(spec.integrand(ctx), ctx)
                closed = cf.sech_power_exp(L, T, ctx)
                assert abs(closed - r.value) < max(4 * r.est_error, mpf(10) ** -25), (L, T)


def test_sech_power_refuses_non_integer():
    ctx = PrecisionContext(128)
    with pytest.raises(UnsupportedParameter):
        cf.sech_power_exp(mpf("1.5"), 0, ctx)
    with pytest.raises(DomainError):
        cf.sech_power_exp(1, -1, ctx)
    with pytest.raises(DivergentInput):
        cf.sech_power_exp(0, 0, ctx)


def test_tanh_sech_base_cases(ctx):
    with workprec(300):
        assert abs(cf.tanh_sech_power_exp(2, 0, ctx) - mpf(1) / 2) < ctx.tolerance()
        assert abs(cf.tanh_sech_power_exp(1, 0, ctx) - 1) < ctx.tolerance()
        for L in (1, 2, 3, 4, 5):
            assert abs(cf.tanh_sech_power_exp(L, 0, ctx) - mpf(1) / L) < ctx.tolerance()


def test_tanh_sech_linear_relation(ctx):
    # T I[tanh sech^L] = (L+1) I[sech^(L+2)] - L I[sech^L]
    with workprec(300):
        for L in (1, 2, 3, 5):
            for T in (mpf(1), mpf("0.5"), mpf(4)):
                lhs = T * cf.tanh_sech_power_exp(L, T, ctx)
                rhs = (L + 1) * cf.sech_power_exp(L + 2, T, ctx) - L * cf.sech_power_exp(L, T, ctx)
                assert abs(lhs - rhs) < ctx.tolerance(16), (L, T)


def test_tanh_sech_vs_oracle(ctx):
    with workprec(300):
        for L in (1, 2, 3, 4):
            for T in (mpf(0), mpf("1.3")):
                spec = cf.IntegralSpec(0, 1, L, T)
                r = quad.integrate_semi_infinite(spec.integrand(ctx), ctx)
                closed = cf.tanh_sech_power_exp(L, T, ctx)
                assert abs(closed - r.value) < max(4 * r.est_error, mpf(10) ** -25), (L, T)


def test_tanh_over_x_known_values(ctx):
    with workprec(300):
        assert abs(cf.tanh_over_x_sech_exp(1, 0, ctx) - 4 * catalan / pi) < ctx.tolerance()
        assert abs(cf.tanh_over_x_sech_exp(2, 0, ctx) - 7 * mp_zeta(3) / pi**2) < ctx.tolerance()
        ref = -log(mpf(2)) / 3 - log(pi) - 12 * mp_zeta(-1, 1, 1)
        assert abs(cf.tanh_over_x_sech_exp(1, 1, ctx) - ref) < ctx.tolerance()


def test_tanh_over_x_unsupported_L(ctx):
    with pytest.raises(UnsupportedParameter):
        cf.tanh_over_x_sech_exp(5, 0, ctx)
    with pytest.raises(UnsupportedParameter):
        cf.tanh_over_x_sech_exp_symbolic(5, 0)
    with pytest.raises(DomainError):
        cf.tanh_over_x_sech_exp_symbolic(2, -1)


def test_symbolic_examples():
    s = cf.tanh_over_x_sech_exp_symbolic(2, 1)
    assert s.coeff("log2") == Fraction(3, 2)
    assert s.coeff("logpi") == 1
    assert s.coeff("loggamma_quarter") == -2
    assert s.coeff("beta2_over_pi") == 4
    assert s.coeff("betadot_m2") == -1
    assert s.log_sum == ()

    s = cf.tanh_over_x_sech_exp_symbolic(1, 0)
    assert s.signed().coeffs == (("beta2_over_pi", Fraction(4)),)

    s = cf.tanh_over_x_sech_exp_symbolic(4, 1)
    assert s.coeff("betadot_m4") == Fraction(1, 12)
    assert s.coeff("beta4_over_pi3") == 16
    assert s.coeff("zeta3_over_pi2") == 0


def test_symbolic_global_sign_recorded():
    s = cf.tanh_over_x_sech_exp_symbolic(1, 2)  # k = 1 -> sign -1
    assert s.global_sign == -1
    t = cf.tanh_over_x_sech_exp_symbolic(1, 4)  # k = 2 -> sign +1
    assert t.global_sign == 1


def test_zero_combination_evaluates_to_zero(ctx):
    z = cf.ConstantCombination.build({})
    assert z.evaluate(ctx) == 0


def test_full_integer_grid_three_way(ctx):
    # symbolic vs continuous for the whole grid; quadrature on a subsample
    with workprec(300):
        for L in (1, 2, 3, 4):
            for T in range(13):
                sym = cf.tanh_over_x_sech_exp_symbolic(L, T).evaluate(ctx)
                cont = cf.tanh_over_x_sech_exp(L, T, ctx)
                assert abs(sym - cont) < mpf(10) ** -25, (L, T)
        for L, T in ((1, 0), (2, 3), (3, 7), (4, 12), (2, 1), (3, 0)):
            spec = cf.IntegralSpec(1, 0, L, T)
            r = quad.integrate_semi_infinite(spec.integrand(ctx), ctx)
            sym = cf.tanh_over_x_sech_exp_symbolic(L, T).evaluate(ctx)
            assert abs(sym - r.value) < max(4 * r.est_error, mpf(10) ** -25), (L, T)


def test_split_lemma(ctx):
    with workprec(300):
        for L in (1, 2, 3, 4):
            T = mpf("1.5")
            lhs = cf.tanh_over_x_sech_exp(L, T, ctx) - cf.tanh_over_x_sech_exp(L, 0, ctx)
            r = quad.integrate_finite(lambda u: cf.tanh_sech_power_exp(L, u, ctx), 0, T, ctx)
            assert abs(lhs + r.value) < max(4 * r.est_error, mpf(10) ** -25), L


def test_beta_recurrence_known(ctx):
    with workprec(300):
        assert abs(cf.beta_recurrence_eval(0, ctx) - 4 * catalan / pi) < ctx.tolerance()
        # N = 1 equals the L = 3, T = 0 closed form
        assert abs(cf.beta_recurrence_eval(1, ctx) - cf.tanh_over_x_sech_exp(3, 0, ctx)) < ctx.tolerance()


def test_zeta_recurrence_known(ctx):
    with workprec(300):
        assert abs(cf.zeta_recurrence_eval(1, ctx) - 7 * mp_zeta(3) / pi**2) < ctx.tolerance()
        assert abs(cf.zeta_recurrence_eval(2, ctx) - cf.tanh_over_x_sech_exp(4, 0, ctx)) < ctx.tolerance()


def test_recurrence_symbolic_coherence():
    # exact basis-coefficient equality with the integer-T symbolic results
    assert cf.beta_recurrence_symbolic(0).same_value(cf.tanh_over_x_sech_exp_symbolic(1, 0))
    assert cf.beta_recurrence_symbolic(1).same_value(cf.tanh_over_x_sech_exp_symbolic(3, 0))
    assert cf.zeta_recurrence_symbolic(1).same_value(cf.tanh_over_x_sech_exp_symbolic(2, 0))
    assert cf.zeta_recurrence_symbolic(2).same_value(cf.tanh_over_x_sech_exp_symbolic(4, 0))


def test_recurrence_vs_oracle(ctx):
    with workprec(300):
        spec = cf.IntegralSpec(1, 0, 11, 0)  # 2N+1 with N = 5
        r = quad.integrate_semi_infinite(spec.integrand(ctx), ctx)
        assert abs(cf.beta_recurrence_eval(5, ctx) - r.value) < max(4 * r.est_error, mpf(10) ** -25)
        spec = cf.IntegralSpec(1, 0, 12, 0)  # 2N with N = 6
        r = quad.integrate_semi_infinite(spec.integrand(ctx), ctx)
        assert abs(cf.zeta_recurrence_eval(6, ctx) - r.value) < max(4 * r.est_error, mpf(10) ** -25)


FIRST_SIX = {
    2: {1: Fraction(14)},
    3: {1: Fraction(-7), 2: Fraction(186)},
    4: {2: Fraction(-496, 3), 3: Fraction(2540)},
    5: {2: Fraction(31), 3: Fraction(-3175), 4: Fraction(35770)},
    6: {3: Fraction(5842, 5), 4: Fraction(-57232), 5: Fraction(515844)},
    7: {3: Fraction(-127), 4: Fraction(1402184, 45), 5: Fraction(-1003030), 6: Fraction(7568484)},
}


def test_first_six_table_exact(ctx):
    for n, expected in FIRST_SIX.items():
        _, coeffs = cf.tanh_over_x_power(n, ctx)
        got = {k: c for c, k in coeffs if c != 0}
        assert got == expected, n


def test_tanh_over_x_power_vs_oracle(ctx):
    with workprec(300):
        for n in range(2, 8):
            val, _ = cf.tanh_over_x_power(n, ctx)
            spec = cf.IntegralSpec(n, 0, 0, 0)
            r = quad.integrate_semi_infinite(spec.integrand(ctx), ctx)
            assert abs(val - r.value) < max(4 * r.est_error, mpf(10) ** -25), n


def test_combination_precision_stability(ctx, ctx192):
    # exact coefficients; evaluating with higher-precision constants moves
    # the result by less than 2^-(bits-8) relative
    s = cf.tanh_over_x_sech_exp_symbolic(4, 7)
    v1 = s.evaluate(ctx)
    v2 = s.evaluate(ctx192)
    assert abs(v1 - v2) / abs(v2) < ctx.tolerance()


def test_infinite_products(ctx):
    with workprec(300):
        assert abs(cf.infinite_product_beta2(10_000, ctx) - catalan) < mpf(10) ** -3
        zdot = fn.hurwitz_zeta_sderiv(-1, 1, ctx)
        assert abs(cf.infinite_product_zdot(10_000, ctx) - zdot) < mpf(10) ** -3
        # terms = 1 is finite and well-defined
        assert mp.isfinite(cf.infinite_product_beta2(1, ctx))
        assert mp.isfinite(cf.infinite_product_zdot(1, ctx))


def test_f_closed_matches_products(ctx):
    with workprec(300):
        # beta(2) = (pi/4) log 2 - 2 pi f(1/4)
        lhs = pi / 4 * log(mpf(2)) - 2 * pi * fn.f_closed(mpf(1) / 4, ctx)
        assert abs(lhs - catalan) < ctx.tolerance()
        # zetadot(-1) = 1/12 - (7/36) log 2 - (1/12) log pi + (2/3) f(1/2)
        zdot = fn.hurwitz_zeta_sderiv(-1, 1, ctx)
        rhs = (
            mpf(1) / 12
            - mpf(7) / 36 * log(mpf(2))
            - log(pi) / 12
            + mpf(2) / 3 * fn.f_closed(mpf(1) / 2, ctx)
        )
        assert abs(rhs - zdot) < ctx.tolerance()


def test_f_partial_converges(ctx):
    with workprec(300):
        for s in (mpf(1) / 4, mpf(1) / 2, mpf(1)):
            gap = abs(fn.f_product_partial(s, 10_000, ctx) - fn.f_closed(s, ctx))
            assert gap < mpf(10) ** -3, s


def test_integral_spec_validation():
    with pytest.raises(DivergentInput):
        cf.IntegralSpec(0, 0, 0, 0)
    assert not cf.IntegralSpec(1, 0, 0, 0).converges
    assert cf.IntegralSpec(2, 0, 0, 0).converges
    assert cf.IntegralSpec(1, 0, mpf("0.5"), 0).converges
    with pytest.raises(DomainError):
        cf.IntegralSpec(-1, 0, 1, 0)


def test_partial_integration_examples(ctx):
    for n, k, L, T in ((1, 0, 1, 0), (2, 1, mpf("0.5"), mpf("1.5")), (1, 2, 3, 0)):
        spec = cf.IntegralSpec(n, k, L, T)
        lhs, rhs, est = cf.partial_integration_residual(spec, ctx, quad.integrate_semi_infinite)
        assert abs(lhs - rhs) < max(4 * est, mpf(10) ** -25), (n, k, L, T)


def test_partial_integration_divergence_handling(ctx):
    # the all-zero integrand is rejected outright
    with pytest.raises(DivergentInput):
        cf.IntegralSpec(0, 0, 0, 0)
    # terms with zero coefficient are never evaluated, so N = 0 and L = T = 0
    # inputs stay valid as long as the remaining integrals converge
    lhs, rhs, est = cf.partial_integration_residual(
        cf.IntegralSpec(0, 0, 1, 0), ctx, quad.integrate_semi_infinite
    )
    assert lhs == 0
    assert abs(lhs - rhs) < max(4 * est, mpf(10) ** -25)
    lhs, rhs, est = cf.partial_integration_residual(
        cf.IntegralSpec(1, 1, 0, 0), ctx, quad.integrate_semi_infinite
    )
    assert abs(lhs - rhs) < max(4 * est, mpf(10) ** -25)


def test_two_step_recurrence_examples(ctx):
    for L, T in ((1, 0), (mpf("2.5"), mpf("1.3")), (3, 2)):
        lhs, rhs, est = cf.two_step_recurrence_residual(L, T, ctx, quad.integrate_semi_infinite)
        assert abs(lhs - rhs) < max(4 * est, mpf(10) ** -25), (L, T)
