#include "adelic/fourier_local.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "adelic/numeric.hpp"
#include "adelic/specfun.hpp"

namespace adelic::fourier {

namespace {

// root-of-unity table cache, keyed by (p, m+n)
std::mutex g_cache_mutex;
std::map<std::pair<long long, int>, std::vector<cplx>> g_roots;

const std::vector<cplx>& root_table(long long p, int mn) {
    std::scoped_lock lock(g_cache_mutex);
    auto& tab = g_roots[{p, mn}];
    if (tab.empty()) {
        const long long M = bs::ipow(p, mn);
        tab.resize(M);
        for (long long e = 0; e < M; ++e) {
            const double ang = 2.0 * std::numbers::pi * double(e) / double(M);
            tab[e] = cplx(std::cos(ang), std::sin(ang));
        }
    }
    return tab;
}

} // namespace

bs::LevelFunction fourier_padic(const bs::LevelFunction& f) {
    const long long p = f.p();
    const int m = f.m(), n = f.n();
    const long long M = (long long)f.dim();
    const auto& w = root_table(p, m + n);
    const double scale = std::pow(double(p), double(-n));
    std::vector<cplx> out(M);
    for (long long jp = 0; jp < M; ++jp) {
        KahanSum<cplx> s;
        for (long long j = 0; j < M; ++j)
            s.add(w[(j * jp) % M] * f.coeffs()[j]);
        out[jp] = scale * s.value();
    }
    return bs::LevelFunction(p, n, m, std::move(out));
}

bs::LevelFunction fourier_padic_adjoint(const bs::LevelFunction& f) {
    const bs::LevelFunction g = fourier_padic(f);
    // reflect: value at -x
    const long long M = (long long)g.dim();
    std::vector<cplx> out(M);
    for (long long j = 0; j < M; ++j)
        out[j] = g.coeffs()[j == 0 ? 0 : M - j];
    return bs::LevelFunction(g.p(), g.m(), g.n(), std::move(out));
}

bs::MultSeq j_op_mult(const bs::MultSeq& f) {
    if (!f.finitely_supported())
        throw support_error("J needs finite shell support");
    bs::MultSeq r = bs::MultSeq::zero(f.p);
    for (const auto& [k, v] : f.coeffs) {
        if (v == cplx{}) continue;
        r.coeffs[-k] = std::pow(double(f.p), double(-k)) * v;
    }
    return r;
}

arch::LogProfile j_op_arch(const arch::LogProfile& g) {
    return g.j_involution();
}

cplx equiv_fourier_symbol(const PlaceDesc& place, cplx s) {
    if (place.is_finite()) {
        const double q = place.q();
        const cplx den = 1.0 - std::pow(q, -s);
        if (std::abs(den) < 1e-13)
            throw pole_error("finite-place symbol pole at q^{-s} = 1");
        return (1.0 - std::pow(q, s - 1.0)) / den;
    }
    // poles of Gamma(s/2) at s = 0, -2, -4, ...
    if (std::abs(s.imag()) < 1e-13) {
        const double re = s.real();
        if (re <= 1e-13 && std::abs(re / 2.0 - std::round(re / 2.0)) < 1e-13)
            throw pole_error("real-place symbol pole");
    }
    const double pi = std::numbers::pi;
    return std::exp((0.5 - s) * std::log(pi) + specfun::log_gamma(0.5 * s) -
                    specfun::log_gamma(0.5 * (1.0 - s)));
}

cplx equiv_fourier_symbol_logderiv(const PlaceDesc& place, cplx s) {
    if (place.is_finite()) {
        const double lq = place.ln_q();
        const cplx a = std::pow(place.q(), s - 1.0);
        const cplx b = std::pow(place.q(), -s);
        return -lq * a / (1.0 - a) - lq * b / (1.0 - b);
    }
    return -std::log(std::numbers::pi) +
           0.5 * specfun::digamma(0.5 * s) +
           0.5 * specfun::digamma(0.5 * (1.0 - s));
}

cplx mellin_mult(const PlaceDesc& place, const bs::MultSeq& f, cplx s) {
    if (!place.is_finite() || place.p != f.p)
        throw wrong_place_error("mellin_mult needs the matching finite place");
    const double q = place.q();
    KahanSum<cplx> sum;
    for (const auto& [k, v] : f.coeffs)
        sum.add(v * std::pow(q, -double(k) * s));
    cplx r = place.ln_q() * sum.value();
    if (f.tail && *f.tail != cplx{}) {
        if (s.real() <= 0.0)
            throw divergence_error("mellin tail needs Re s > 0");
        const cplx x = std::pow(q, -s);
        r += place.ln_q() * *f.tail * std::pow(x, double(f.tail_start)) /
             (1.0 - x);
    }
    return r;
}

cplx mellin_level(const bs::LevelFunction& f, cplx s) {
    const PlaceDesc place = PlaceDesc::finite(f.p());
    return mellin_mult(place, f.restrict_to_units_part(), s);
}

} // namespace adelic::fourier
