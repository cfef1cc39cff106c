#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "adelic/weil_local.hpp"

using namespace adelic;
using bs::LevelFunction;
using bs::MultSeq;
using cplx = std::complex<double>;
using measures::PlaceDesc;

TEST_CASE("pv pairing: pinned finite-place values, exact") {
    const auto p2 = PlaceDesc::finite(2);
    CHECK(weil::pv_pairing_finite(p2, LevelFunction::xi(2, 0)).real() ==
          -std::log(2.0));
    const auto units3 = LevelFunction::xi(3, 0) - LevelFunction::xi(3, 1);
    CHECK(weil::pv_pairing_finite(PlaceDesc::finite(3), units3).real() ==
          -std::log(3.0));
    CHECK(weil::pv_pairing_finite(p2, LevelFunction::zero(2)).real() == 0.0);
    for (long long p : {2LL, 3LL, 5LL, 7LL}) {
        const auto place = PlaceDesc::finite(p);
        const double expect = -std::log(double(p)) / (double(p) - 1.0);
        CHECK(std::abs(weil::pv_pairing_finite(place, LevelFunction::xi(p, 0))
                           .real() -
                       expect) <= 1e-14);
    }
}

TEST_CASE("pv pairing translation covariance") {
    // <P, lambda_a h> = <P, h> - ln|a| h(0), a = varpi^{+-1}
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<int> cd(-6, 6);
    for (long long p : {2LL, 5LL}) {
        const auto place = PlaceDesc::finite(p);
        const double lq = std::log(double(p));
        std::vector<cplx> c(bs::ipow(p, 3));
        for (auto& x : c) x = cplx(cd(rng), cd(rng));
        const LevelFunction h(p, 1, 2, c);
        const cplx base = weil::pv_pairing_finite(place, h);
        const cplx h0 = h.value_at_zero();
        // |varpi| = q^{-1}: ln|a| = -ln q for a = varpi
        const cplx up = weil::pv_pairing_finite(place, h.translated(1));
        CHECK(std::abs(up - (base + lq * h0)) <= 1e-13);
        const cplx down = weil::pv_pairing_finite(place, h.translated(-1));
        CHECK(std::abs(down - (base - lq * h0)) <= 1e-13);
    }
}

TEST_CASE("weil_local_finite shell expansion") {
    const auto p3 = PlaceDesc::finite(3);
    const double l3 = std::log(3.0);
    // valuation +e shells carry weight q^{-e}; -e shells weight 1
    CHECK(weil::weil_local_finite(p3, MultSeq::shell(3, 1)).real() ==
          doctest::Approx(l3 / 3.0).epsilon(1e-15));
    CHECK(weil::weil_local_finite(p3, MultSeq::shell(3, -1)).real() ==
          doctest::Approx(l3).epsilon(1e-15));
    const auto p2 = PlaceDesc::finite(2);
    CHECK(weil::weil_local_finite(p2, MultSeq::shell(2, 2)).real() ==
          doctest::Approx(std::log(2.0) / 4.0).epsilon(1e-15));
    CHECK(weil::weil_local_finite(p2, MultSeq::shell(2, -2)).real() ==
          doctest::Approx(std::log(2.0)).epsilon(1e-15));
    // unit shell contributes exactly zero
    for (long long p : {2LL, 3LL, 5LL, 7LL})
        CHECK(weil::weil_local_finite(PlaceDesc::finite(p),
                                      MultSeq::shell(p, 0))
                  .real() == 0.0);
}

TEST_CASE("weil_local_finite equals the direct integrand sum off the unit shell") {
    // for f vanishing on the unit shell no principal value is needed:
    // integrand f(x)|x|/|1-x| summed shell by shell with measure ln q
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> cd(-5, 5);
    for (long long p : {2LL, 5LL}) {
        const auto place = PlaceDesc::finite(p);
        MultSeq f = MultSeq::zero(p);
        for (long long k = -4; k <= 4; ++k)
            if (k != 0) f.coeffs[k] = cplx(cd(rng), cd(rng));
        cplx oracle{};
        for (const auto& [k, v] : f.coeffs) {
            const double q = double(p);
            // |x| = q^{-k}; |1-x| = 1 for k >= 1, = |x| for k <= -1
            const double weight = k >= 1 ? std::pow(q, -double(k)) : 1.0;
            oracle += v * weight * std::log(q);
        }
        CHECK(std::abs(weil::weil_local_finite(place, f) - oracle) <= 1e-14);
    }
}

TEST_CASE("weil_local_finite closed tail and divergence guard") {
    // restrict(1_O) has tail 1 from shell 0: W = ln q sum_{e>=1} q^{-e}
    for (long long p : {2LL, 3LL}) {
        const auto r = LevelFunction::xi(p, 0).restrict_to_units_part();
        const double expect = std::log(double(p)) / (double(p) - 1.0);
        CHECK(std::abs(weil::weil_local_finite(PlaceDesc::finite(p), r).real() -
                       expect) < 1e-14);
    }
    MultSeq bad = MultSeq::zero(2);
    bad.tail = 1.0;
    bad.tail_start = -1;
    CHECK_THROWS_AS(weil::weil_local_finite(PlaceDesc::finite(2), bad),
                    divergence_error);
}

TEST_CASE("error terms start at e = 2") {
    const auto p2 = PlaceDesc::finite(2);
    CHECK(weil::error_term_Ev(p2, MultSeq::shell(2, 1)).real() == 0.0);
    CHECK(weil::error_term_Ev(p2, MultSeq::shell(2, -1)).real() == 0.0);
    CHECK(weil::error_term_Ev(p2, MultSeq::shell(2, -2)).real() ==
          doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(weil::error_term_Ev(p2, MultSeq::shell(2, 2)).real() ==
          doctest::Approx(std::log(2.0) / 4.0).epsilon(1e-15));

    // W - E = ln q (q^{-1} f[1] + f[-1]) for random f
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<int> cd(-5, 5);
    for (long long p : {2LL, 7LL}) {
        const auto place = PlaceDesc::finite(p);
        MultSeq f = MultSeq::zero(p);
        for (long long k = -3; k <= 3; ++k)
            if (k != 0) f.coeffs[k] = cplx(cd(rng), cd(rng));
        const cplx diff = weil::weil_local_finite(place, f) -
                          weil::error_term_Ev(place, f);
        const cplx expect =
            std::log(double(p)) * (f.at(1) / double(p) + f.at(-1));
        CHECK(std::abs(diff - expect) < 1e-14);
    }
}

TEST_CASE("pullback samples the profile at shell norms") {
    const auto g = arch::LogProfile::gauss(0.5, 0.4);
    const auto f = weil::pullback_profile(g, 3);
    const double l3 = std::log(3.0);
    for (long long k = -2; k <= 2; ++k)
        CHECK(std::abs(f.at(k) - g.eval(-double(k) * l3)) < 1e-15);
}

TEST_CASE("archimedean routes agree and calibration is tiny") {
    weil::PVContext ctx;
    ctx.calibrate();
    CHECK(std::abs(ctx.c()) < 1e-6);

    for (auto [u0, s] : {std::pair{1.0, 0.7}, {2.0, 0.2}, {-0.6, 0.5}}) {
        const auto g = arch::LogProfile::gauss(u0, s);
        const double pv = weil::weil_local_real_pv(g, ctx);
        const double sub = weil::weil_local_real_subtracted(g);
        const double dig = weil::weil_local_real_digamma(g, ctx);
        CHECK(std::abs(pv - sub) < 1e-6);
        CHECK(std::abs(dig - sub) < 1e-6);
        CHECK(std::abs(pv - dig) < 1e-6);
    }
    // zero profile: all routes vanish
    const auto z = arch::LogProfile::gauss(0.0, 1.0, 0.0);
    CHECK(weil::weil_local_real_subtracted(z) == doctest::Approx(0.0));
    CHECK(std::abs(weil::weil_local_real_digamma(z, ctx)) < 1e-12);
}

TEST_CASE("digamma route requires calibration; scaling is linear") {
    weil::PVContext fresh;
    CHECK_THROWS_AS(
        weil::weil_local_real_digamma(arch::LogProfile::gauss(0, 1), fresh),
        calibration_error);

    const auto g = arch::LogProfile::gauss(0.7, 0.45);
    const double w1 = weil::weil_local_real_subtracted(g);
    const double w3 = weil::weil_local_real_subtracted(g.scaled(3.0));
    CHECK(std::abs(w3 - 3.0 * w1) < 1e-9);
}

TEST_CASE("W_inf additivity across profiles via a sampled sum") {
    const auto g1 = arch::LogProfile::gauss(0.4, 0.5);
    const auto g2 = arch::LogProfile::gauss(-0.8, 0.6);
    std::vector<double> vals;
    const double lo = -10.0, du = 0.005;
    for (double u = lo; u <= 10.0 + 1e-12; u += du)
        vals.push_back(g1.eval(u).real() + g2.eval(u).real());
    const auto sum = arch::LogProfile::sampled(lo, du, vals);
    const double lhs = weil::weil_local_real_subtracted(sum, 1e-9);
    const double rhs = weil::weil_local_real_subtracted(g1) +
                       weil::weil_local_real_subtracted(g2);
    CHECK(std::abs(lhs - rhs) < 1e-5);
}

TEST_CASE("E_S assembly matches a manual sum") {
    weil::PVContext ctx;
    const auto g = arch::LogProfile::gauss(1.2, 0.3);
    const auto es = weil::error_term_ES(g, {}, 50, ctx);
    cplx manual = weil::weil_local_real_subtracted(g);
    for (long long p : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL, 17LL, 19LL, 23LL,
                        29LL, 31LL, 37LL, 41LL, 43LL, 47LL}) {
        manual += weil::error_term_Ev(PlaceDesc::finite(p),
                                      weil::pullback_profile(g, p));
    }
    CHECK(std::abs(es.value - manual) < 1e-10);
    CHECK(es.tail_bound > 0.0);
    CHECK(es.tail_bound < 0.1);
}

TEST_CASE("hermite adapter feeds the real-place routes") {
    weil::PVContext ctx;
    ctx.calibrate();
    // f = e^{-pi x^2}: profile g(u) = e^{-pi e^{2u}}
    const auto f = arch::HermiteGaussian::basis(0, std::pow(2.0, -0.25));
    const auto g = weil::profile_from_hermite(f);
    CHECK(std::abs(g.eval(0.0).real() - std::exp(-M_PI)) < 1e-9);
    const double sub = weil::weil_local_real_subtracted(g, 1e-9);
    const double dig = weil::weil_local_real_digamma(g, ctx);
    CHECK(std::abs(sub - dig) < 3e-6);
}

TEST_CASE("pv route rejects under-smooth sampled profiles quickly") {
    std::vector<double> vals;
    const double lo = -3.0, du = 0.01;
    const auto g = arch::LogProfile::gauss(0.8, 0.35);
    for (double u = lo; u <= 4.6 + 1e-12; u += du)
        vals.push_back(g.eval(u).real());
    const auto s = arch::LogProfile::sampled(lo, du, vals);
    weil::PVContext ctx;
    ctx.quad_tol = 1e-8;
    CHECK_THROWS_AS(weil::weil_local_real_pv(s, ctx), accuracy_error);
}
