#ifndef ADELIC_GLOBAL_VERIFY_HPP
#define ADELIC_GLOBAL_VERIFY_HPP

#include <complex>
#include <string>
#include <vector>

#include "adelic/arch.hpp"
#include "adelic/primes.hpp"
#include "adelic/weil_local.hpp"
#include "adelic/zeros.hpp"

namespace adelic::global {

using cplx = std::complex<double>;

struct GeometricParts {
    double finite_sum = 0;    // sum over prime powers
    double arch_term = 0;     // W_inf
    double discriminant = 0;  // 0 for Q
    double prime_tail_bound = 0;
    double value() const { return finite_sum + arch_term - discriminant; }
};

// W(f) = sum_{p^e <= X} ln p [ g(e ln p) + p^{-e} g(-e ln p) ] + W_inf(g).
GeometricParts geometric_side(const arch::LogProfile& g,
                              const PrimeTable& primes,
                              const weil::PVContext& pv);

struct ExplicitFormulaReport {
    // test function
    std::string g_desc;
    double u0 = 0, sigma = 0;
    // geometric side
    GeometricParts geom;
    // spectral side
    double pole_part = 0, zero_part = 0, zero_tail_bound = 0;
    double spectral = 0;
    // verdict
    double residual = 0;
    double tolerance = 0;
    bool pass = false;
    // truncation info
    long long x_max = 0;
    std::size_t zero_count = 0;

    std::string to_json() const;
    static std::string csv_header();
    std::string to_csv_row() const;
};

ExplicitFormulaReport explicit_formula_check(const arch::LogProfile& g,
                                             const ZeroTable& zeros,
                                             const PrimeTable& primes,
                                             const weil::PVContext& pv,
                                             double tolerance);

// Poisson summation: | sum f(nx) - x^{-1} sum (F f)(n/x) |.
double poisson_check(const arch::HermiteGaussian& f, double x);

struct PntResult {
    long long x = 0;
    long long pi_x = 0;
    double ratio = 0; // pi(x) ln x / x
    std::vector<std::pair<long long, double>> series;
};

PntResult pnt_check(long long X, const PrimeTable& primes);

struct SmoothedPntResult {
    double lhs = 0, rhs = 0, ratio = 0;
    bool ratio_defined = true;
};

// Pi_S(ln|x| (f * l_xi)) vs G(1) xi/ln xi, l_xi = 1/ln on [3/2, xi].
SmoothedPntResult smoothed_pnt_check(const arch::LogProfile& f, double xi);

} // namespace adelic::global

#endif
