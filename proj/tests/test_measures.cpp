#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "adelic/measures.hpp"
#include "adelic/numeric.hpp"

using namespace adelic;
using measures::PlaceDesc;
using measures::Subgroup;

namespace {
const double kLn2 = std::log(2.0);
}

TEST_CASE("finite multiplicative shell integral") {
    const auto p2 = PlaceDesc::finite(2);
    CHECK(measures::mult_integral_finite(p2, bs::MultSeq::shell(2, 0)).real() ==
          doctest::Approx(kLn2).epsilon(1e-15));
    CHECK(measures::mult_integral_finite(PlaceDesc::finite(3),
                                         bs::MultSeq::zero(3))
              .real() == 0.0);
    bs::MultSeq two_shells = bs::MultSeq::shell(2, 0) + bs::MultSeq::shell(2, 1);
    CHECK(measures::mult_integral_finite(p2, two_shells).real() ==
          doctest::Approx(2.0 * kLn2).epsilon(1e-15));

    CHECK_THROWS_AS(measures::mult_integral_finite(PlaceDesc::real(),
                                                   bs::MultSeq::shell(2, 0)),
                    wrong_place_error);
    bs::MultSeq tailed = bs::MultSeq::zero(2);
    tailed.tail = 1.0;
    CHECK_THROWS_AS(measures::mult_integral_finite(p2, tailed),
                    divergence_error);
}

TEST_CASE("shell measure is translation invariant") {
    // vol(varpi^k O^x) = vol(O^x) = ln q for every k
    for (long long p : {2LL, 3LL, 7LL}) {
        const auto place = PlaceDesc::finite(p);
        const double base =
            measures::mult_integral_finite(place, bs::MultSeq::shell(p, 0))
                .real();
        for (long long k : {-3LL, -1LL, 2LL, 5LL}) {
            CHECK(measures::mult_integral_finite(place,
                                                 bs::MultSeq::shell(p, k))
                      .real() == base);
        }
    }
}

TEST_CASE("normalization: measure of 1 <= |x| < u") {
    // finite place: u = p^k means shells of valuation -(k-1)..0
    for (long long p : {2LL, 5LL}) {
        for (int k = 1; k <= 4; ++k) {
            bs::MultSeq f = bs::MultSeq::zero(p);
            for (int j = 0; j < k; ++j) f.coeffs[-j] = 1.0;
            const double got =
                measures::mult_integral_finite(PlaceDesc::finite(p), f).real();
            CHECK(got == doctest::Approx(k * std::log(double(p))).epsilon(1e-14));
        }
    }
    // real place: d^x = dx/(2|x|) over both signs, by quadrature
    for (double u : {1.5, 4.0, 90.0}) {
        const double got =
            2.0 *
            quad::integrate([](double x) { return 1.0 / (2.0 * x); }, 1.0, u,
                            {1e-12, 1e-12})
                .real();
        CHECK(got == doctest::Approx(std::log(u)).epsilon(1e-10));
    }
}

TEST_CASE("archimedean multiplicative integral") {
    const auto g = arch::LogProfile::gauss(0.0, 1.0, 1.0);
    const double sqrt2pi = std::sqrt(2.0 * M_PI);
    CHECK(measures::mult_integral_arch(g, 0.0).real() ==
          doctest::Approx(sqrt2pi).epsilon(1e-12));
    CHECK(measures::mult_integral_arch(g, 1.0).real() ==
          doctest::Approx(sqrt2pi * std::exp(0.5)).epsilon(1e-12));
    CHECK(std::abs(measures::mult_integral_arch(arch::LogProfile::zero(), 2.0)) ==
          0.0);

    // quadrature oracle for the closed form
    for (cplx s : {cplx(0.0, 0.0), cplx(1.0, 0.0), cplx(0.5, 14.134725)}) {
        const cplx oracle = quad::integrate(
            [&](double u) { return g.eval(u) * std::exp(s * u); }, -14.0, 14.0,
            {1e-12, 1e-12});
        const cplx closed = measures::mult_integral_arch(g, s);
        CHECK(std::abs(closed - oracle) < 1e-9);
    }
}

TEST_CASE("subgroup volumes") {
    CHECK(measures::vol_subgroup(PlaceDesc::finite(2), Subgroup::units) ==
          doctest::Approx(kLn2).epsilon(1e-15));
    CHECK(measures::vol_subgroup(PlaceDesc::finite(2), Subgroup::one_plus_p) ==
          doctest::Approx(kLn2).epsilon(1e-15));
    CHECK(measures::vol_subgroup(PlaceDesc::finite(5), Subgroup::one_plus_p) ==
          doctest::Approx(0.4023594781085251).epsilon(1e-14));
    CHECK_THROWS_AS(measures::vol_subgroup(PlaceDesc::real(), Subgroup::units),
                    wrong_place_error);
}

TEST_CASE("measure context caches ln q") {
    const measures::MeasureCtx ctx(PlaceDesc::finite(7));
    CHECK(ctx.mult_shell_volume == doctest::Approx(std::log(7.0)));
    CHECK(ctx.additive_unit_volume == 1.0);
}
