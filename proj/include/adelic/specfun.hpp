#ifndef ADELIC_SPECFUN_HPP
#define ADELIC_SPECFUN_HPP

#include <complex>

namespace adelic::specfun {

using cplx = std::complex<double>;

// log Gamma, principal branch (Lanczos g=7).
cplx log_gamma(cplx z);
cplx gamma(cplx z);

// digamma psi0 (recurrence + asymptotic series).
cplx digamma(cplx z);

// Riemann zeta by Euler-Maclaurin; accurate to ~1e-12 for |Im s| <= ~2000.
cplx zeta(cplx s);

// Completed zeta pi^{-s/2} Gamma(s/2) zeta(s); pole_error at s = 0, 1.
cplx completed_zeta(cplx s);

// Riemann-Siegel theta via log_gamma.
double rs_theta(double t);

// Z(t) = e^{i theta(t)} zeta(1/2 + it), evaluated through the
// Euler-Maclaurin zeta. Exact-real up to rounding.
double hardy_z(double t);

// Riemann-Siegel asymptotic main formula with the leading correction term.
// Coarse (error ~ (t/2pi)^{-5/4}); used for scanning, never certification.
double hardy_z_rs(double t);

} // namespace adelic::specfun

#endif
