#include "adelic/weil_local.hpp"

#include <cmath>
#include <numbers>

#include "adelic/numeric.hpp"
#include "adelic/primes.hpp"
#include "adelic/specfun.hpp"

namespace adelic::weil {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEulerGamma = 0.57721566490153286061;

cplx pv_one_O(const PlaceDesc& place) {
    return pv_pairing_finite(place, bs::LevelFunction::xi(place.p, 0));
}

// inner oscillatory transform I_pm(xi) = int_0^inf g(ln y) e^{pm 2 pi i xi y} dy
cplx rotated_halfline(const arch::LogProfile& g, double xi, double phi,
                      double tol) {
    // gaussian kind: tilt the ray to arg y = phi; the phase becomes
    // exponentially damped and the Gaussian picks up a bounded factor.
    const cplx i(0.0, 1.0);
    const cplx dir = std::exp(i * phi);
    const double u0 = g.u0(), sig = g.sigma();
    const cplx amp = g.amplitude();
    auto integrand = [&](double r) -> cplx {
        if (r <= 0.0) return {};
        const cplx lny = std::log(r) + i * phi;
        const cplx z = (lny - u0) / sig;
        return amp * std::exp(-0.5 * z * z + 2.0 * kPi * i * xi * r * dir) * dir;
    };
    const double r_hi = std::exp(u0 + g.support_radius()) + 2.0;
    // envelope e^{-2 pi |xi| sin|phi| r}: integrate to where both factors die
    const double damp = 2.0 * kPi * std::abs(xi) * std::abs(std::sin(phi));
    const double r_cut = damp > 0.0 ? 40.0 / damp : r_hi;
    return quad::integrate(integrand, 0.0, std::min(r_hi, r_cut) + 1.0,
                           {tol, tol});
}

cplx inner_cosine_transform(const arch::LogProfile& g, double xi,
                            const PVContext& ctx) {
    if (g.kind() == arch::LogProfile::Kind::gaussian) {
        if (xi == 0.0) return 2.0 * g.laplace(1.0);
        const cplx ip = rotated_halfline(g, xi, ctx.rotation, ctx.quad_tol);
        const cplx im = rotated_halfline(g, -xi, -ctx.rotation, ctx.quad_tol);
        return ip + im;
    }
    // sampled profiles: direct adaptive quadrature in u
    const double R = g.support_radius();
    const double c = g.center();
    return 2.0 * quad::integrate(
                     [&](double u) {
                         return g.eval(u) * std::exp(u) *
                                std::cos(2.0 * kPi * xi * std::exp(u));
                     },
                     c - R, c + R, {ctx.quad_tol, ctx.quad_tol});
}

} // namespace

void PVContext::calibrate() {
    if (digamma_c) return; // frozen after the first calibration
    const double pv = weil_local_real_pv(reference, *this);
    // digamma base value with c = 0
    PVContext tmp = *this;
    tmp.digamma_c = 0.0;
    const double base = weil_local_real_digamma(reference, tmp);
    const double g0 = reference.eval(0.0).real();
    digamma_c = (base - pv) / g0;
}

double PVContext::c() const {
    if (!digamma_c)
        throw calibration_error("digamma route used before calibration");
    return *digamma_c;
}

cplx pv_pairing_finite(const PlaceDesc& place, const bs::LevelFunction& h) {
    if (!place.is_finite())
        throw wrong_place_error("pv_pairing_finite needs a finite place");
    if (place.p != h.p()) throw wrong_place_error("place/function mismatch");
    const double lq = place.ln_q();
    const cplx h0 = h.value_at_zero();
    KahanSum<cplx> shells;
    for (long long k = -h.m(); k < h.n(); ++k) {
        cplx v = h.shell_average(k);
        if (k >= 0) v -= h0;
        shells.add(v);
    }
    // when n < 0 the function equals h(0) on shells n..-1 but 1_O is 0 there
    for (long long k = h.n(); k < 0; ++k) shells.add(h0);
    return -lq * shells.value() - h0 * lq / (place.q() - 1.0);
}

cplx weil_local_finite(const PlaceDesc& place, const bs::MultSeq& f) {
    if (!place.is_finite())
        throw wrong_place_error("weil_local_finite needs a finite place");
    if (place.p != f.p) throw wrong_place_error("place/sequence mismatch");
    if (f.tail && *f.tail != cplx{} && f.tail_start < 0)
        throw divergence_error("tail reaching |x| >= 1 shells diverges");
    const double q = place.q(), lq = place.ln_q();
    KahanSum<cplx> sum;
    for (const auto& [k, v] : f.coeffs) {
        if (k >= 1)
            sum.add(v * std::pow(q, -double(k)));
        else if (k <= -1)
            sum.add(v);
    }
    cplx r = lq * sum.value();
    if (f.tail && *f.tail != cplx{}) {
        const long long K = std::max<long long>(1, f.tail_start);
        r += lq * *f.tail * std::pow(q, -double(K - 1)) / (q - 1.0);
    }
    // unit shell: the principal-value normalization makes it vanish;
    // evaluate that identity rather than hard-coding the zero
    const cplx unit_coeff = -pv_one_O(place) - lq / (place.q() - 1.0);
    r += unit_coeff * f.at(0);
    return r;
}

double weil_local_real_pv(const arch::LogProfile& g, const PVContext& ctx) {
    auto outer = [&](double xi) -> cplx {
        return std::log(xi) * std::cos(2.0 * kPi * xi) *
               inner_cosine_transform(g, xi, ctx);
    };
    KahanSum<cplx> total;
    // graded dyadic panels across the log singularity
    double hi = 1.0;
    while (hi > ctx.xi_floor) {
        const double lo = 0.5 * hi;
        total.add(quad::integrate(outer, lo, hi, {ctx.quad_tol, ctx.quad_tol}));
        hi = lo;
    }
    // half-unit panels outward. Individual panels cancel under the cos
    // oscillation long before the transform envelope has died, so the stop
    // rule probes |T| itself: the contribution beyond xi is O(|T| ln xi).
    // Sampled profiles are only as smooth as their interpolant, so their
    // transform tail dies polynomially and the direct inner transform
    // costs O(xi * Y) per point; bound the reachable xi by that work and
    // let the accuracy error surface quickly. The subtracted and digamma
    // routes are the sampled-friendly evaluators.
    double a_hard = 2e4;
    if (g.kind() != arch::LogProfile::Kind::gaussian) {
        const double y_hi = std::exp(g.center() + g.support_radius());
        a_hard = std::sqrt(3e5 / std::max(1.0, y_hi));
    }
    int quiet = 0;
    double a = 1.0;
    const double probe_tol = 0.02 * std::max(ctx.quad_tol, 1e-12);
    for (int k = 0; a < a_hard && quiet < 3; ++k, a += 0.5) {
        total.add(
            quad::integrate(outer, a, a + 0.5, {ctx.quad_tol, ctx.quad_tol}));
        if (k % 4 == 3) {
            const double probe =
                std::abs(inner_cosine_transform(g, a + 0.25, ctx)) *
                (std::log(a + 0.5) + 1.0);
            quiet = (probe < probe_tol) ? quiet + 1 : 0;
        }
    }
    if (quiet < 3)
        throw accuracy_error("pv route: transform tail did not settle");
    return -2.0 * total.value().real();
}

double weil_local_real_digamma(const arch::LogProfile& g,
                               const PVContext& ctx) {
    const double c = ctx.c();
    auto density = [&](double t) -> cplx {
        const cplx psi = specfun::digamma(cplx(0.25, 0.5 * t));
        const double w = psi.real() - std::log(kPi) + c;
        return g.laplace(cplx(0.5, t)) * w;
    };
    // G(1/2+it) decays like e^{-sigma^2 t^2/2} for gaussian profiles
    double T = 60.0;
    if (g.kind() == arch::LogProfile::Kind::gaussian)
        T = std::sqrt(2.0 * 42.0) / g.sigma() + 10.0;
    const cplx half = quad::integrate(density, 0.0, T, {1e-12, 1e-12});
    // real g: G(1/2-it) = conj G(1/2+it), psi-weight even in t
    return -(1.0 / (2.0 * kPi)) * 2.0 * half.real();
}

double weil_local_real_subtracted(const arch::LogProfile& g, double tol) {
    // -<P,h> with h(x) = g(ln|1-x|), via
    // <P,h> = -int (h - h(0) 1_{[-1,1]}) d^x - h(0)(gamma + ln 2 pi)
    const double g0 = g.eval(0.0).real();
    auto integrand = [&](double x) -> cplx {
        // fold both signs: d^x = dx/(2|x|)
        const double hp = g.eval(std::log(std::abs(1.0 - x))).real();
        const double hm = g.eval(std::log(1.0 + x)).real();
        const double sub = (x <= 1.0) ? g0 : 0.0;
        return (0.5 * (hp + hm) - sub) / x;
    };
    const double R = std::exp(g.center() + g.support_radius()) + 2.0;
    KahanSum<cplx> s;
    s.add(quad::integrate(integrand, 0.0, 0.5, {tol, tol}));
    s.add(quad::integrate(integrand, 0.5, 2.0, {tol, tol}));
    s.add(quad::integrate(integrand, 2.0, R, {tol, tol}));
    const double pairing = -s.value().real() - g0 * (kEulerGamma + std::log(2.0 * kPi));
    return -pairing;
}

cplx error_term_Ev(const PlaceDesc& place, const bs::MultSeq& f) {
    if (!place.is_finite())
        throw wrong_place_error("error_term_Ev needs a finite place");
    if (f.tail && *f.tail != cplx{} && f.tail_start < 0)
        throw divergence_error("tail reaching |x| >= 1 shells diverges");
    const double q = place.q(), lq = place.ln_q();
    KahanSum<cplx> sum;
    for (const auto& [k, v] : f.coeffs) {
        if (k >= 2)
            sum.add(v * std::pow(q, -double(k)));
        else if (k <= -2)
            sum.add(v);
    }
    cplx r = lq * sum.value();
    if (f.tail && *f.tail != cplx{}) {
        const long long K = std::max<long long>(2, f.tail_start);
        r += lq * *f.tail * std::pow(q, -double(K - 1)) / (q - 1.0);
    }
    return r;
}

ESValue error_term_ES(const arch::LogProfile& g,
                      const std::vector<long long>& s_finite_primes,
                      long long P_max, const PVContext& ctx) {
    const auto table = global::sieve_primes(P_max);
    KahanSum<cplx> acc;
    for (const long long p : table.primes) {
        bool in_s = false;
        for (const long long sp : s_finite_primes) in_s |= (sp == p);
        const auto f = pullback_profile(g, p);
        const PlaceDesc pl = PlaceDesc::finite(p);
        acc.add(in_s ? weil_local_finite(pl, f) : error_term_Ev(pl, f));
    }
    acc.add(weil_local_real_subtracted(g, ctx.quad_tol));
    double sup = std::abs(g.amplitude());
    if (g.kind() == arch::LogProfile::Kind::sampled) {
        sup = 0.0;
        for (double u = g.center() - g.support_radius();
             u <= g.center() + g.support_radius(); u += 0.01)
            sup = std::max(sup, std::abs(g.eval(u)));
    }
    // sum_{p > P} ln p * p^{-2} * sup|f| < 2 sup / P
    return {acc.value(), 2.0 * sup / double(P_max)};
}

arch::LogProfile profile_from_hermite(const arch::HermiteGaussian& h,
                                      double du) {
    // h(e^u) dies double-exponentially upward and approaches h(0) downward;
    // the grid covers [-36, 4] which is ample for degree <= 64
    const double lo = -36.0, hi = 4.0;
    std::vector<double> vals;
    vals.reserve(std::size_t((hi - lo) / du) + 2);
    for (double u = lo; u <= hi + 1e-12; u += du) {
        const double x = std::exp(u);
        vals.push_back(0.5 * (h.eval(x) + h.eval(-x)).real());
    }
    return arch::LogProfile::sampled(lo, du, std::move(vals));
}

bs::MultSeq pullback_profile(const arch::LogProfile& g, long long p,
                             double eps) {
    const double lp = std::log(double(p));
    const double R = g.support_radius(eps), c = g.center();
    const long long k_lo = (long long)std::floor((-c - R) / lp) - 1;
    const long long k_hi = (long long)std::ceil((-c + R) / lp) + 1;
    bs::MultSeq f = bs::MultSeq::zero(p);
    for (long long k = k_lo; k <= k_hi; ++k) {
        const cplx v = g.eval(-double(k) * lp);
        if (std::abs(v) > eps * 1e-2) f.coeffs[k] = v;
    }
    return f;
}

} // namespace adelic::weil
