#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "adelic/global_verify.hpp"
#include "adelic/specfun.hpp"

using namespace adelic;
using arch::HermiteGaussian;
using arch::LogProfile;
using cplx = std::complex<double>;

TEST_CASE("sieve: small cases, counts, prime powers") {
    const auto t10 = global::sieve_primes(10);
    CHECK(t10.primes == std::vector<long long>({2, 3, 5, 7}));
    bool has8 = false, has9 = false;
    for (const auto& pp : t10.prime_powers) {
        has8 |= (pp.p == 2 && pp.e == 3 && pp.value == 8);
        has9 |= (pp.p == 3 && pp.e == 2 && pp.value == 9);
    }
    CHECK(has8);
    CHECK(has9);

    CHECK(global::sieve_primes(2).primes == std::vector<long long>({2}));
    CHECK(global::sieve_primes(1000000).count() == 78498);
    CHECK_THROWS_AS(global::sieve_primes(1), config_error);
}

TEST_CASE("sieve agrees with trial division on a sample window") {
    const auto table = global::sieve_primes(30000);
    const auto window = global::trial_division_window(10000, 20000);
    std::vector<long long> from_sieve;
    for (const long long p : table.primes)
        if (p >= 10000 && p <= 20000) from_sieve.push_back(p);
    CHECK(from_sieve == window);
}

TEST_CASE("hardy Z: theta route matches known zero locations") {
    // sign changes bracket the first zeros
    CHECK(specfun::hardy_z(14.0) * specfun::hardy_z(14.2) < 0.0);
    CHECK(specfun::hardy_z(20.9) * specfun::hardy_z(21.1) < 0.0);
    // the asymptotic scanner tracks the Euler-Maclaurin route coarsely
    for (double t : {400.0, 650.0, 987.0})
        CHECK(std::abs(specfun::hardy_z_rs(t) - specfun::hardy_z(t)) < 2e-3);
}

TEST_CASE("zero finder matches pinned reference ordinates") {
    const auto t = global::find_zeros(10);
    REQUIRE(t.count() == 10);
    CHECK(std::abs(t.ordinates[0] - 14.134725141) < 1e-6);
    CHECK(std::abs(t.ordinates[1] - 21.022039639) < 1e-6);
    CHECK(std::abs(t.ordinates[2] - 25.010857580) < 1e-6);
    CHECK(std::abs(t.ordinates[9] - 49.773832478) < 1e-6);
}

TEST_CASE("zeros file io and validation") {
    const char* path = "zeros_tmp.txt";
    global::ZeroTable t;
    t.ordinates = {14.134725, 21.022040, 25.010858};
    global::save_zeros(t, path);
    const auto back = global::load_zeros(path);
    REQUIRE(back.count() == 3);
    CHECK(std::abs(back.ordinates[2] - 25.010858) < 1e-9);
    std::remove(path);

    {
        std::FILE* f = std::fopen(path, "w");
        std::fprintf(f, "14.1\n21.0\n# comment\n20.9\n");
        std::fclose(f);
    }
    CHECK_THROWS_AS(global::load_zeros(path), integrity_error);
    std::remove(path);
    {
        std::FILE* f = std::fopen(path, "w");
        std::fprintf(f, "14.1\n-3.0\n");
        std::fclose(f);
    }
    CHECK_THROWS_AS(global::load_zeros(path), integrity_error);
    std::remove(path);
}

TEST_CASE("geometric side against a naive loop oracle") {
    weil::PVContext pv;
    const auto g = LogProfile::gauss(2.0, 0.2);
    const auto primes = global::sieve_primes(1000);
    const auto parts = global::geometric_side(g, primes, pv);
    // naive: loop primes, enumerate powers independently
    double naive = 0.0;
    for (long long p = 2; p <= 1000; ++p) {
        bool is_prime = true;
        for (long long d = 2; d * d <= p; ++d)
            if (p % d == 0) is_prime = false;
        if (!is_prime) continue;
        const double lp = std::log(double(p));
        for (long long v = p; v <= 1000; v *= p) {
            const double u = std::log(double(v));
            naive += lp * (g.eval(u).real() +
                           std::exp(-u) * g.eval(-u).real());
            if (v > 1000 / p) break;
        }
    }
    CHECK(parts.finite_sum == doctest::Approx(naive).epsilon(1e-12));
    CHECK(parts.discriminant == 0.0);
    CHECK(parts.prime_tail_bound < 1e-8);

    const auto zero =
        global::geometric_side(LogProfile::gauss(0, 1, 0.0), primes, pv);
    CHECK(zero.value() == 0.0);
}

TEST_CASE("geometric side flags insufficient cutoffs") {
    weil::PVContext pv;
    const auto primes = global::sieve_primes(1000);
    CHECK_THROWS_AS(
        global::geometric_side(LogProfile::gauss(10.0, 0.2), primes, pv),
        truncation_error);
}

TEST_CASE("explicit formula: wide profile reduces to pole-vs-prime balance") {
    weil::PVContext pv;
    const auto g = LogProfile::gauss(0.5, 1.0);
    const auto primes = global::sieve_primes(20000);
    auto zeros = global::find_zeros(5);
    const auto rep = global::explicit_formula_check(g, zeros, primes, pv, 1e-8);
    CHECK(rep.pass);
    CHECK(std::abs(rep.zero_part) < 1e-20);
    CHECK(rep.residual <= 1e-8);
}

TEST_CASE("explicit formula narrow case with sensitivity mutation") {
    weil::PVContext pv;
    const auto g = LogProfile::gauss(2.0, 0.2);
    const auto primes = global::sieve_primes(10000);
    auto zeros = global::find_zeros(100);
    const auto rep = global::explicit_formula_check(g, zeros, primes, pv, 1e-6);
    CHECK(rep.pass);
    CHECK(rep.residual <= 1e-6);
    CHECK(rep.geom.prime_tail_bound < 1e-8);
    CHECK(rep.zero_tail_bound < 1e-8);

    // deleting the first zero must blow the identity up
    global::ZeroTable mutated = zeros;
    mutated.ordinates.erase(mutated.ordinates.begin());
    const auto bad =
        global::explicit_formula_check(g, mutated, primes, pv, 1e-6);
    CHECK_FALSE(bad.pass);
    CHECK(bad.residual > 10.0 * 1e-6);

    // perturbing one ordinate moves the spectral side predictably
    global::ZeroTable nudged = zeros;
    const double eps = 1e-3;
    nudged.ordinates[0] += eps;
    const auto rep2 =
        global::explicit_formula_check(g, nudged, primes, pv, 1.0);
    const double moved = std::abs(rep2.spectral - rep.spectral);
    // derivative of -2 Re G(1/2 + i gamma) by central difference
    const double h = 1e-5;
    const double d =
        (2.0 * g.laplace(cplx(0.5, zeros.ordinates[0] + h)).real() -
         2.0 * g.laplace(cplx(0.5, zeros.ordinates[0] - h)).real()) /
        (2.0 * h);
    CHECK(moved == doctest::Approx(std::abs(d) * eps).epsilon(0.1));
}

TEST_CASE("explicit formula linearity of residuals") {
    weil::PVContext pv;
    const auto primes = global::sieve_primes(10000);
    auto zeros = global::find_zeros(60);
    const auto g1 = LogProfile::gauss(1.6, 0.25);
    const auto g2 = LogProfile::gauss(2.2, 0.3);
    const auto r1 = global::explicit_formula_check(g1, zeros, primes, pv, 1.0);
    const auto r2 = global::explicit_formula_check(g2, zeros, primes, pv, 1.0);
    // sampled sum profile
    std::vector<double> vals;
    const double lo = -6.0, du = 0.004;
    for (double u = lo; u <= 8.0 + 1e-12; u += du)
        vals.push_back(g1.eval(u).real() + g2.eval(u).real());
    const auto sum = LogProfile::sampled(lo, du, vals);
    const auto rs = global::explicit_formula_check(sum, zeros, primes, pv, 1.0);
    CHECK(rs.residual <= r1.residual + r2.residual + 2e-5);
}

TEST_CASE("poisson residuals and the theta-inversion oracle") {
    for (int k = 0; k <= 4; ++k) {
        const auto f = HermiteGaussian::basis(k);
        for (double x : {0.3, 0.7, 1.0, 1.7, 3.0})
            CHECK(global::poisson_check(f, x) < 1e-12);
    }
    const HermiteGaussian mixed =
        HermiteGaussian::basis(0) + HermiteGaussian::basis(4, 0.3);
    CHECK(global::poisson_check(mixed, 1.7) < 1e-12);

    // classical theta inversion as an independent hand computation:
    // sum e^{-pi (2n)^2} = (1/2) sum e^{-pi (n/2)^2}
    double lhs = 0.0, rhs = 0.0;
    for (int n = -60; n <= 60; ++n) {
        lhs += std::exp(-M_PI * 4.0 * n * n);
        rhs += std::exp(-M_PI * 0.25 * n * n);
    }
    CHECK(std::abs(lhs - 0.5 * rhs) < 1e-14);
    CHECK_THROWS_AS(global::poisson_check(HermiteGaussian::basis(0), 50.0),
                    config_error);
}

TEST_CASE("pnt counts and ratio trend") {
    const auto primes = global::sieve_primes(1000000);
    const auto r = global::pnt_check(1000000, primes);
    CHECK(r.pi_x == 78498);
    CHECK(std::abs(r.ratio - 1.0845) < 5e-4);
    REQUIRE(r.series.size() == 4);
    for (std::size_t i = 1; i < r.series.size(); ++i)
        CHECK(r.series[i].second > r.series[i - 1].second);
    CHECK_THROWS_AS(global::pnt_check(50, primes), config_error);
}

TEST_CASE("smoothed pnt at small scale") {
    const auto f = LogProfile::gauss(0.0, 0.25);
    const auto s = global::smoothed_pnt_check(f, 2000.0);
    CHECK(s.ratio_defined);
    CHECK(std::abs(s.ratio - 1.0) < 0.25);

    const auto z = global::smoothed_pnt_check(LogProfile::gauss(0, 1, 0.0),
                                              2000.0);
    CHECK_FALSE(z.ratio_defined);
    CHECK(std::isnan(z.ratio));
}

TEST_CASE("report serialization is deterministic") {
    weil::PVContext pv;
    const auto g = LogProfile::gauss(1.5, 0.4);
    const auto primes = global::sieve_primes(5000);
    auto zeros = global::find_zeros(10);
    const auto rep = global::explicit_formula_check(g, zeros, primes, pv, 1.0);
    // the reported residual must recompute from the reported parts
    CHECK(rep.residual ==
          doctest::Approx(std::abs(rep.geom.value() - rep.spectral))
              .epsilon(1e-15));
    CHECK(rep.to_json() == rep.to_json());
    const auto rep2 = global::explicit_formula_check(g, zeros, primes, pv, 1.0);
    CHECK(rep.to_json() == rep2.to_json());
    CHECK(rep.to_csv_row() == rep2.to_csv_row());
    // header and row have the same field count
    const auto count_commas = [](const std::string& s) {
        return std::count(s.begin(), s.end(), ',');
    };
    CHECK(count_commas(global::ExplicitFormulaReport::csv_header()) ==
          count_commas(rep.to_csv_row()));
}

TEST_CASE("zeros file rejects junk and trailing content") {
    const char* path = "zeros_junk_tmp.txt";
    {
        std::FILE* f = std::fopen(path, "w");
        std::fprintf(f, "14.1\nnot_a_number\n");
        std::fclose(f);
    }
    CHECK_THROWS_AS(global::load_zeros(path), integrity_error);
    std::remove(path);
    {
        std::FILE* f = std::fopen(path, "w");
        std::fprintf(f, "14.1 garbage\n");
        std::fclose(f);
    }
    CHECK_THROWS_AS(global::load_zeros(path), integrity_error);
    std::remove(path);
}
