#ifndef ADELIC_WEIL_LOCAL_HPP
#define ADELIC_WEIL_LOCAL_HPP

#include <complex>
#include <optional>
#include <vector>

#include "adelic/arch.hpp"
#include "adelic/level_function.hpp"
#include "adelic/measures.hpp"

namespace adelic::weil {

using cplx = std::complex<double>;
using measures::PlaceDesc;

// Evaluation context for the archimedean principal value. The digamma
// route's additive constant c is calibrated once against the PV route on
// a fixed reference Gaussian and then frozen.
struct PVContext {
    double quad_tol = 1e-10;
    double xi_floor = 1e-13;   // graded-grid cutoff at the log singularity
    double rotation = 0.392699081698724; // pi/8 contour tilt (gaussian kind)
    std::optional<double> digamma_c;
    arch::LogProfile reference = arch::LogProfile::gauss(0.0, 1.0, 1.0);

    void calibrate();
    double c() const;
};

// <P_p, h> = -int (h - h(0) 1_O) d^x - h(0) ln q/(q-1).
cplx pv_pairing_finite(const PlaceDesc& place, const bs::LevelFunction& h);

// W_p on shell data, indexed by valuation:
//   W_p(f) = ln q ( sum_{e>=1} q^{-e} f[e] + sum_{e>=1} f[-e] ),
// the unit shell contributing 0 by the principal-value normalization
// (evaluated through the pv_pairing identity, not asserted).
cplx weil_local_finite(const PlaceDesc& place, const bs::MultSeq& f);

// W_inf(f) for f(x) = g(ln|x|), three routes:
//  - pv: -int ln|xi| F[x -> f(1-x)](xi) d xi by adaptive quadrature with a
//    dyadically graded grid at xi = 0 (gaussian profiles use an analytic
//    contour tilt for the inner oscillatory transform);
//  - digamma: -(1/2pi) int G(1/2+it) (Re psi0(1/4+it/2) - ln pi + c) dt
//    with the calibrated constant c;
//  - subtracted: -<P,h> via the closed constant <P_inf, 1_{[-1,1]}> =
//    -(gamma + ln 2 pi); cheap, used as the default evaluator.
// The pv route needs the super-polynomial transform decay of a smooth
// profile; sampled (interpolated) profiles usually end in an accuracy
// error there and should use the other two routes.
double weil_local_real_pv(const arch::LogProfile& g, const PVContext& ctx);
double weil_local_real_digamma(const arch::LogProfile& g, const PVContext& ctx);
double weil_local_real_subtracted(const arch::LogProfile& g,
                                  double tol = 1e-11);

// Error terms: E_v sums shells from e >= 2; E_S assembles
// sum_{v not in S} E_v + sum_{v in S} W_v  (ln D_Q = 0).
cplx error_term_Ev(const PlaceDesc& place, const bs::MultSeq& f);

struct ESValue {
    cplx value;
    double tail_bound; // reported bound for the p > P_max truncation
};
ESValue error_term_ES(const arch::LogProfile& g,
                      const std::vector<long long>& s_finite_primes,
                      long long P_max, const PVContext& ctx);

// Sample g at the shells of Q_p^x: f[k] = g(-k ln p), truncated where
// |g| < eps on both sides.
bs::MultSeq pullback_profile(const arch::LogProfile& g, long long p,
                             double eps = 1e-16);

// Adapter for Hermite test data: the even part of h as a function of
// u = ln|x|, sampled for the real-place Weil routes.
arch::LogProfile profile_from_hermite(const arch::HermiteGaussian& h,
                                      double du = 0.005);

} // namespace adelic::weil

#endif
