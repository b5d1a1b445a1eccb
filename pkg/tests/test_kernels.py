"""Kernel routes, asymptotic main terms, and expansion reports.

Pinned values computed with mpmath at dps=60.
"""

import mpmath
import pytest
from hypothesis import given, settings, strategies as st
from mpmath import mp, mpf, mpc

from indexkernels import config
from indexkernels.bessel import k_itau_quad
from indexkernels.errors import DomainError
from indexkernels.kernels import (KernelPoint, conical_p, eval,
                                  k_squared_direct, olevskii_decay_slopes,
                                  olevskii_direct, olevskii_main,
                                  product_kernel_direct, thm1_main,
                                  thm1_remainder_bound,
                                  thm1_remainder_explicit, thm1_report,
                                  thm2_main_and_bound, thm3_main_and_bound,
                                  thm4_main_and_bound, whittaker_cross_checked,
                                  whittaker_direct)

mp.dps = config.get().dps

K_I_1 = mpf("0.289428037025992127634567159242")
KSQ_I_1 = mpf("0.0837685886167190699581280431869")
PROD_15_08 = mpf("0.39963824944900481601009080283")
W_03_2I_05 = mpf("-0.0372985572537486948901996676241")
CONICAL_PIN = mpf("0.404999183551956847454720383896")
OLEV_PIN = mpf("0.735925581477794741204783046603")
THM1_SCALE_10 = mpf("1.19456054110345569211185750475e-7")
THM1_BOUND_PIN = mpf("0.698599876629271260918937893633")
THM2_BOUND_PIN = mpf("1.76139951178031923012249104744")
THM3_BOUND_PIN = mpf("1.03364196805756866867859946154")
THM4_BOUND_PIN = mpf("0.68953575650896037177052867328")


def rel(a, b):
    return abs(a - b) / max(abs(b), mpf("1e-30"))


class TestExpansionK:
    def test_scale_pinned(self):
        scale, main = thm1_main(mpf(10), mpf(1))
        assert rel(scale, THM1_SCALE_10) < mpf("1e-28")
        assert abs(main) <= 1

    def test_explicit_remainder_closes_identity(self):
        # scale * (main + R_N) must reproduce the kernel exactly, for
        # every truncation order
        for N in (0, 1, 2):
            for tau in (mpf(5), mpf(12)):
                for x in (mpf("0.25"), mpf(2)):
                    scale, main = thm1_main(tau, x)
                    r = thm1_remainder_explicit(N, tau, x)
                    ref = k_itau_quad(tau, x).value
                    assert rel(scale * (main + r), ref) < mpf("1e-20")

    def test_bound_pinned(self):
        b = thm1_remainder_bound(0, mpf(10), mpf(5), mpf(1))
        assert rel(b, THM1_BOUND_PIN) < mpf("1e-28")

    def test_bound_decreases_in_tau(self):
        assert thm1_remainder_bound(1, mpf(20), mpf(5), mpf(1)) < \
            thm1_remainder_bound(1, mpf(10), mpf(5), mpf(1))

    def test_report_holds(self):
        rep = thm1_report(2, mpf(10), mpf(1), mpf(5), mpf(1))
        assert rep.bound_holds
        assert abs(rep.empirical_remainder) <= rep.remainder_bound


class TestExpansionSquare:
    def test_direct_pinned(self):
        assert rel(k_squared_direct(mpf(1), mpf(1)), KSQ_I_1) < mpf("1e-22")

    def test_square_consistency(self):
        v = k_squared_direct(mpf(3), mpf("0.6"))
        w = k_itau_quad(mpf(3), mpf("0.6")).value ** 2
        assert rel(v, w) < mpf("1e-15")

    def test_report_holds(self):
        rep = thm2_main_and_bound(mpf(10), mpf(1), mpf(5), mpf(1))
        assert rep.bound_holds
        assert rel(rep.remainder_bound, THM2_BOUND_PIN) < mpf("1e-28")


class TestExpansionProduct:
    def test_direct_pinned(self):
        assert rel(product_kernel_direct(mpf("1.5"), mpf("0.8")),
                   PROD_15_08) < mpf("1e-20")

    def test_small_index_limit(self):
        # as tau -> 0 the product tends to 2 I_0(x) K_0(x)
        v = product_kernel_direct(mpf("1e-6"), mpf(1))
        ref = 2 * mpmath.besseli(0, 1) * mpmath.besselk(0, 1)
        assert rel(v, ref) < mpf("1e-10")

    def test_report_holds(self):
        rep = thm3_main_and_bound(mpf(10), mpf(1), mpf(5), mpf(1))
        assert rep.bound_holds
        assert rel(rep.remainder_bound, THM3_BOUND_PIN) < mpf("1e-28")


class TestWhittaker:
    def test_pinned_both_routes(self):
        for route in ("f11", "series218"):
            v = whittaker_direct(mpf("0.3"), mpf(2), mpf("0.5"), route)
            assert rel(v, W_03_2I_05) < mpf("1e-20")

    def test_cross_checked(self):
        v = whittaker_cross_checked(mpf("-0.2"), mpf(1), mpf("0.8"))
        ref = mpmath.whitw(mpf("-0.2"), 1j, mpf("0.8")).real
        assert rel(v, ref) < mpf("1e-15")

    def test_report_holds(self):
        rep = thm4_main_and_bound(mpf(0), mpf(10), mpf("0.5"), mpf(5),
                                  mpf("0.5"))
        assert rep.bound_holds
        assert rel(rep.remainder_bound, THM4_BOUND_PIN) < mpf("1e-28")

    def test_report_finite_near_argument_cap(self):
        # the bound blows up like (1-x0)^{-2(1+|rho|)} but stays finite
        rep = thm4_main_and_bound(mpf("0.2"), mpf(8), mpf("0.9"), mpf(5),
                                  mpf("0.99"))
        assert mpmath.isfinite(rep.remainder_bound)

    def test_phase_modes_both_finite(self):
        for mode in ("printed", "squared"):
            rep = thm4_main_and_bound(mpf(0), mpf(10), mpf("0.5"), mpf(5),
                                      mpf("0.5"), phase_mode=mode)
            assert mpmath.isfinite(rep.empirical_remainder)


class TestConical:
    def test_pinned(self):
        v = conical_p(mpf("0.4"), mpf(2), mpmath.sqrt(2))
        assert rel(v, CONICAL_PIN) < mpf("1e-20")

    def test_against_oracle(self):
        mu, tau = mpf("0.7"), mpf(3)
        z = mpmath.sqrt(1 + 4 * mpf("0.8") ** 2)
        v = conical_p(mu, tau, z)
        ref = mpmath.legenp(mpc(-0.5, tau), -mu, z, type=3).real
        assert rel(v, ref) < mpf("1e-18")


class TestOlevskii:
    def test_pinned(self):
        v = olevskii_direct(mpf("1.3"), mpf("0.2"), mpf(1), mpf("0.5"))
        assert rel(v, OLEV_PIN) < mpf("1e-22")

    def test_value_at_boundary_argument(self):
        # x = 1 hits the hypergeometric convergence boundary; the Pfaff
        # switch has to carry it
        v = olevskii_direct(mpf("0.7"), mpf("0.2"), mpf(2), mpf(1))
        ref = mpmath.hyp2f1(mpf("0.45") + 2j, mpf("0.45") - 2j,
                            mpf("1.2"), -1).real
        assert rel(v, ref) < mpf("1e-18")

    def test_small_argument_limit(self):
        v = olevskii_direct(mpf("1.3"), mpf("0.2"), mpf(1), mpf("1e-4"))
        assert abs(v - 1) < mpf("1e-6")

    def test_main_term_tracks_direct(self):
        # at a phase peak the main term carries most of the value
        mu, nu, x = mpf("1.4"), mpf("0.2"), mpf(1)
        L = mpmath.log(x + mpmath.sqrt(x * x + 1))
        tau = 20 * mpmath.pi / (2 * L)
        d = olevskii_direct(mu, nu, tau, x)
        m = olevskii_main(mu, nu, tau, x)
        # the remainder order is only tau^{3/4-mu-nu}, a factor
        # tau^{-0.05} below the main term here, so the match is loose
        assert rel(m, d) < mpf("0.35")

    def test_decay_slopes(self):
        s_main, s_rem = olevskii_decay_slopes(mpf("1.4"), mpf("0.2"), mpf(1))
        assert abs(s_main - (mpf("-0.7"))) < mpf("0.1")
        assert abs(s_rem - (mpf("-0.85"))) < mpf("0.15")


class TestDispatch:
    def test_point_validation(self):
        with pytest.raises(DomainError):
            KernelPoint(kernel="nope", x=1, tau=1)
        with pytest.raises(DomainError):
            KernelPoint(kernel="kl", x=-1, tau=1)
        with pytest.raises(DomainError):
            KernelPoint(kernel="whittaker", x=1, tau=1, rho="0.6")
        with pytest.raises(DomainError):
            KernelPoint(kernel="olevskii", x=1, tau=1, mu="1.3")

    def test_routes_agree_kl(self):
        p = KernelPoint(kernel="kl", x="0.7", tau=2)
        s = eval(p, "series")
        q = eval(p, "quadrature")
        assert rel(s.value, q.value) < mpf("1e-15")

    def test_routes_agree_square(self):
        p = KernelPoint(kernel="lebedev-square", x="0.7", tau=2)
        assert rel(eval(p, "series").value,
                   eval(p, "quadrature").value) < mpf("1e-12")

    def test_routes_agree_product(self):
        p = KernelPoint(kernel="lebedev-product", x="0.8", tau="1.5")
        assert rel(eval(p, "series").value,
                   eval(p, "quadrature").value) < mpf("1e-12")

    def test_routes_agree_whittaker(self):
        p = KernelPoint(kernel="whittaker", x="0.5", tau=2, rho="-0.3")
        assert rel(eval(p, "f11").value,
                   eval(p, "quadrature").value) < mpf("1e-10")

    def test_routes_agree_mehler_fock(self):
        p = KernelPoint(kernel="mehler-fock", x="0.5", tau=2, mu="0.4")
        assert rel(eval(p, "series").value,
                   eval(p, "quadrature").value) < mpf("1e-8")

    def test_routes_agree_olevskii(self):
        p = KernelPoint(kernel="olevskii", x="0.5", tau=1, mu="1.3", nu="0.2")
        assert rel(eval(p, "series").value,
                   eval(p, "quadrature").value) < mpf("1e-12")

    def test_unknown_route(self):
        p = KernelPoint(kernel="kl", x=1, tau=1)
        with pytest.raises(DomainError):
            eval(p, "telepathy")

    @settings(max_examples=8, deadline=None)
    @given(st.floats(min_value=0.5, max_value=6),
           st.floats(min_value=0.2, max_value=3))
    def test_kl_route_agreement_property(self, tau, x):
        p = KernelPoint(kernel="kl", x=mpf(x), tau=mpf(tau))
        s = eval(p, "series")
        q = eval(p, "quadrature")
        assert abs(s.value - q.value) <= \
            (s.rel_error_estimate + q.rel_error_estimate + mpf("1e-30")) \
            * max(abs(s.value), abs(q.value)) * 100
