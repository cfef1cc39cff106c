#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "adelic/numeric.hpp"
#include "adelic/spectral.hpp"
#include "adelic/specfun.hpp"

using namespace adelic;
using measures::PlaceDesc;
using spectral::EulerProductSpec;
using cplx = std::complex<double>;

TEST_CASE("euler product against the zeta oracle") {
    // Euler-Maclaurin zeta is the independent route
    EulerProductSpec all{{}, 1000000};
    const auto v = spectral::euler_Lhat(all, 2.0);
    CHECK(std::abs(v.value.real() - M_PI * M_PI / 6.0) < 1e-6);
    CHECK(std::abs(v.value - specfun::zeta(2.0)) < 3.0 * v.tail_bound + 1e-9);

    const auto v3 = spectral::euler_Lhat(all, 3.0);
    CHECK(std::abs(v3.value - specfun::zeta(3.0)) < 1e-10);

    // factor removal: S = {2} at s = 2 gives (pi^2/6)(1 - 1/4) = pi^2/8
    EulerProductSpec no2{{2}, 1000000};
    CHECK(std::abs(spectral::euler_Lhat(no2, 2.0).value.real() -
                   M_PI * M_PI / 8.0) < 1e-6);

    // empty-product limit proxy
    CHECK(std::abs(spectral::euler_Lhat(all, 50.0).value - 1.0) < 1e-14);
    CHECK_THROWS_AS(spectral::euler_Lhat(all, 1.0), divergence_error);
    CHECK_THROWS_AS(spectral::euler_Lhat(all, cplx(0.5, 3.0)),
                    divergence_error);
}

TEST_CASE("factorization L = Lhat_S * (local factors in S)") {
    EulerProductSpec all{{}, 200000};
    EulerProductSpec part{{2, 7}, 200000};
    for (cplx s : {cplx(2.0, 0.0), cplx(1.7, 5.0), cplx(3.0, -2.0)}) {
        const cplx local =
            1.0 / ((1.0 - std::pow(2.0, -s)) * (1.0 - std::pow(7.0, -s)));
        const cplx lhs = spectral::euler_Lhat(part, s).value * local;
        const cplx rhs = spectral::euler_Lhat(all, s).value;
        CHECK(std::abs(lhs - rhs) < 1e-12 * std::abs(rhs));
    }
}

TEST_CASE("completed zeta: functional equation and reflection") {
    CHECK(std::abs(spectral::completed_zeta(0.3) -
                   spectral::completed_zeta(0.7)) < 1e-9);
    CHECK(std::abs(spectral::completed_zeta(2.0).real() - M_PI / 6.0) < 1e-12);
    const cplx s(0.4, 3.0);
    CHECK(std::abs(std::conj(spectral::completed_zeta(std::conj(s))) -
                   spectral::completed_zeta(s)) < 1e-12);
    CHECK_THROWS_AS(spectral::completed_zeta(1.0), pole_error);
    CHECK_THROWS_AS(spectral::completed_zeta(0.0), pole_error);

    CHECK(spectral::functional_eq_residual(0.5) == 0.0);
    CHECK(spectral::functional_eq_residual(cplx(0.25, 5.0)) < 1e-8);
    CHECK(spectral::functional_eq_residual(0.9) < 1e-9);
    // a tour along the strip boundary region used by the zero finder
    for (double t : {10.0, 50.0, 120.0, 200.0})
        CHECK(spectral::functional_eq_residual(cplx(0.3, t)) <
              1e-8 * std::max(1.0, std::abs(spectral::completed_zeta(cplx(0.3, t)))));
}

TEST_CASE("tate integral, finite place") {
    const auto p2 = PlaceDesc::finite(2);
    const auto one_o = bs::LevelFunction::xi(2, 0);
    CHECK(std::abs(spectral::tate_local_integral(p2, one_o, 1.0).real() -
                   2.0 * std::log(2.0)) < 1e-14);
    // geometric shell-sum oracle at a complex point
    const cplx s(0.8, 1.3);
    cplx oracle{};
    for (int k = 0; k < 400; ++k)
        oracle += std::pow(2.0, -double(k) * s) * std::log(2.0);
    CHECK(std::abs(spectral::tate_local_integral(p2, one_o, s) - oracle) <
          1e-12);
    // pole structure at s -> 0: (1 - q^{-s}) I(s) -> ln q
    for (double s0 : {1e-3, 1e-4}) {
        const cplx v = (1.0 - std::pow(2.0, -s0)) *
                       spectral::tate_local_integral(p2, one_o, s0);
        CHECK(std::abs(v - std::log(2.0)) < 1e-8 + 2.0 * s0);
    }
    CHECK_THROWS_AS(spectral::tate_local_integral(p2, one_o, cplx(-0.2, 0.0)),
                    divergence_error);
    CHECK(std::abs(spectral::tate_local_integral(
              p2, bs::LevelFunction::zero(2), 2.0)) == 0.0);
}

TEST_CASE("tate integral, real place") {
    // f = e^{-pi x^2} = 2^{-1/4} h_0: int f |x|^s d^x = pi^{-s/2}Gamma(s/2)/2
    const auto f = arch::HermiteGaussian::basis(0, std::pow(2.0, -0.25));
    const auto real = PlaceDesc::real();
    CHECK(std::abs(spectral::tate_local_integral(real, f, 1.0).real() - 0.5) <
          1e-10);
    for (cplx s : {cplx(0.7, 0.0), cplx(0.5, 2.0), cplx(1.4, -3.0)}) {
        const cplx closed =
            0.5 * std::exp(-0.5 * s * std::log(M_PI) +
                           specfun::log_gamma(0.5 * s));
        const cplx got = spectral::tate_local_integral(real, f, s);
        CHECK(std::abs(got - closed) < 1e-8 * std::max(1.0, std::abs(closed)));
    }
    CHECK_THROWS_AS(spectral::tate_local_integral(real, f, cplx(-1.0, 0.0)),
                    divergence_error);
}

TEST_CASE("spectral side: pole part, zero sum, multiplicity handling") {
    global::ZeroTable none;
    const auto g = arch::LogProfile::gauss(0.0, 1.0);
    const double sqrt2pi = std::sqrt(2.0 * M_PI);
    const auto v0 = spectral::spectral_side(g, none);
    CHECK(v0.value.real() ==
          doctest::Approx(sqrt2pi * (1.0 + std::exp(0.5))).epsilon(1e-14));

    global::ZeroTable hundred;
    for (int i = 0; i < 100; ++i)
        hundred.ordinates.push_back(14.134725 + 2.0 * i);
    const auto v1 = spectral::spectral_side(g, hundred);
    // sigma = 1: each zero term is ~e^{-gamma^2/2}, entirely negligible
    CHECK(std::abs(v1.value - v0.value) < 1e-40);

    // duplicates are multiplicity
    global::ZeroTable one, two;
    one.ordinates = {14.134725};
    two.ordinates = {14.134725, 14.134725};
    const auto nar = arch::LogProfile::gauss(1.0, 0.25);
    const double z1 = spectral::spectral_side(nar, one).zero_part.real();
    const double z2 = spectral::spectral_side(nar, two).zero_part.real();
    CHECK(std::abs(z2 - 2.0 * z1) < 1e-14);
}

TEST_CASE("euler product vs truncated dirichlet series with tail bounds") {
    // independent route: sum_{n<=N} n^{-s} with an integral tail bound
    for (double s : {2.0, 3.0}) {
        const long long N = 200000;
        KahanSum<cplx> sum;
        for (long long n = 1; n <= N; ++n)
            sum.add(std::pow(double(n), -s));
        const double series_tail = std::pow(double(N), 1.0 - s) / (s - 1.0);
        spectral::EulerProductSpec spec{{}, 200000};
        const auto prod = spectral::euler_Lhat(spec, s);
        CHECK(std::abs(prod.value - sum.value()) <=
              series_tail + 3.0 * prod.tail_bound + 1e-12);
    }
}
