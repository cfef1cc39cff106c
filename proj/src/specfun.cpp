#include "adelic/specfun.hpp"

#include <cmath>

#include "adelic/errors.hpp"
#include "adelic/numeric.hpp"

namespace adelic::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846;

const double kLanczos[9] = {
    0.99999999999980993,    676.5203681218851,     -1259.1392167224028,
    771.32342877765313,     -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,   9.9843695780195716e-6, 1.5056327351493116e-7};

cplx log_gamma_core(cplx z) {
    // valid for Re z > 0.5
    z -= 1.0;
    cplx x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + double(i));
    const cplx t = z + 7.5;
    return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t +
           std::log(x);
}

// Bernoulli numbers B_2..B_14.
constexpr double kB[7] = {1.0 / 6,  -1.0 / 30,    1.0 / 42, -1.0 / 30,
                          5.0 / 66, -691.0 / 2730, 7.0 / 6};

} // namespace

cplx log_gamma(cplx z) {
    if (z.real() < 0.5) {
        // reflection; keeps the principal branch consistent for our uses
        // (arguments never sit on the negative real axis).
        return std::log(kPi) - std::log(std::sin(kPi * z)) -
               log_gamma(1.0 - z);
    }
    return log_gamma_core(z);
}

cplx gamma(cplx z) { return std::exp(log_gamma(z)); }

cplx digamma(cplx z) {
    if (z.real() < 0.5) {
        // psi(1-z) - psi(z) = pi cot(pi z)
        return digamma(1.0 - z) - kPi / std::tan(kPi * z);
    }
    cplx shift = 0.0;
    while (std::abs(z) < 12.0) {
        shift -= 1.0 / z;
        z += 1.0;
    }
    const cplx inv = 1.0 / z, inv2 = inv * inv;
    cplx s = std::log(z) - 0.5 * inv;
    cplx p = inv2;
    for (int k = 0; k < 7; ++k) {
        s -= kB[k] / (2.0 * (k + 1)) * p;
        p *= inv2;
    }
    return s + shift;
}

cplx zeta(cplx s) {
    if (std::abs(s - 1.0) < 1e-14) throw pole_error("zeta pole at s = 1");
    if (s.real() < 0.0) {
        // functional equation keeps Euler-Maclaurin in its good region
        const cplx chi = std::pow(2.0, s) * std::pow(kPi, s - 1.0) *
                         std::sin(0.5 * kPi * s) * gamma(1.0 - s);
        return chi * zeta(1.0 - s);
    }
    const int N = std::max<int>(50, int(2.0 * std::abs(s.imag())) + 10);
    KahanSum<cplx> sum;
    for (int n = 1; n < N; ++n)
        sum.add(std::exp(-s * std::log(double(n))));
    const double lnN = std::log(double(N));
    cplx r = sum.value();
    r += std::exp((1.0 - s) * lnN) / (s - 1.0);
    r += 0.5 * std::exp(-s * lnN);
    // Euler-Maclaurin corrections, 6 Bernoulli terms
    cplx poch = s;                       // s (s+1) ... running product
    cplx npow = std::exp(-(s + 1.0) * lnN); // N^{-s-2k+1}
    double fact = 2.0;                   // (2k)!
    for (int k = 1; k <= 6; ++k) {
        r += kB[k - 1] / fact * poch * npow;
        poch *= (s + double(2 * k - 1)) * (s + double(2 * k));
        npow /= double(N) * double(N);
        fact *= double(2 * k + 1) * double(2 * k + 2);
    }
    return r;
}

cplx completed_zeta(cplx s) {
    if (std::abs(s) < 1e-14 || std::abs(s - 1.0) < 1e-14)
        throw pole_error("completed zeta pole at s = 0 or 1");
    return std::exp(-0.5 * s * std::log(kPi) + log_gamma(0.5 * s)) * zeta(s);
}

double rs_theta(double t) {
    const cplx lg = log_gamma(cplx(0.25, 0.5 * t));
    return lg.imag() - 0.5 * t * std::log(kPi);
}

double hardy_z(double t) {
    const double th = rs_theta(t);
    const cplx z = zeta(cplx(0.5, t));
    return (std::exp(cplx(0.0, th)) * z).real();
}

double hardy_z_rs(double t) {
    const double a = std::sqrt(t / (2.0 * kPi));
    const int N = int(a);
    const double p = a - N;
    const double th = rs_theta(t);
    double s = 0.0;
    for (int n = 1; n <= N; ++n)
        s += std::cos(th - t * std::log(double(n))) / std::sqrt(double(n));
    s *= 2.0;
    // leading remainder term; Psi has removable singularities at p=1/4,3/4
    auto psi = [](double q) {
        const double den = std::cos(2.0 * kPi * q);
        const double num = std::cos(2.0 * kPi * (q * q - q - 1.0 / 16.0));
        if (std::abs(den) < 1e-4) {
            const double h = 5e-4;
            const double l = std::cos(2.0 * kPi * ((q - h) * (q - h) - (q - h) - 1.0 / 16.0)) /
                             std::cos(2.0 * kPi * (q - h));
            const double r = std::cos(2.0 * kPi * ((q + h) * (q + h) - (q + h) - 1.0 / 16.0)) /
                             std::cos(2.0 * kPi * (q + h));
            return 0.5 * (l + r);
        }
        return num / den;
    };
    const double corr = ((N - 1) % 2 == 0 ? 1.0 : -1.0) *
                        std::pow(2.0 * kPi / t, 0.25) * psi(p);
    return s + corr;
}

} // namespace adelic::specfun
