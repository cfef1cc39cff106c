#include "adelic/spectral.hpp"

#include <cmath>

#include "adelic/numeric.hpp"
#include "adelic/primes.hpp"
#include "adelic/specfun.hpp"

namespace adelic::spectral {

namespace {
constexpr double kPi = 3.14159265358979323846;
} // namespace

EulerValue euler_Lhat(const EulerProductSpec& spec, cplx s) {
    if (s.real() <= 1.0)
        throw divergence_error("Euler product needs Re s > 1");
    if (spec.p_max < 2) throw config_error("P_max must be >= 2");
    const auto table = global::sieve_primes(spec.p_max);
    // chunked log-sum keeps the product associative-stable
    std::vector<long long> ps;
    ps.reserve(table.primes.size());
    for (const long long p : table.primes)
        if (!spec.excluded_primes.count(p)) ps.push_back(p);
    const cplx logsum = parallel_sum(
        ps.size(), 65536,
        [&](std::size_t i) {
            return -std::log(1.0 - std::pow(double(ps[i]), -s));
        },
        ps.size() > (1u << 17));
    const double sigma = s.real();
    const double tail =
        2.0 * std::pow(double(spec.p_max), 1.0 - sigma) / (sigma - 1.0);
    return {std::exp(logsum), tail};
}

cplx completed_zeta(cplx s) { return specfun::completed_zeta(s); }

double functional_eq_residual(cplx s) {
    return std::abs(specfun::completed_zeta(s) -
                    specfun::completed_zeta(1.0 - s));
}

cplx tate_local_integral(const PlaceDesc& place, const bs::LevelFunction& f,
                         cplx s) {
    if (!place.is_finite())
        throw wrong_place_error("level functions live at finite places");
    if (place.p != f.p()) throw wrong_place_error("place/function mismatch");
    const double q = place.q(), lq = place.ln_q();
    KahanSum<cplx> sum;
    for (long long k = -f.m(); k < f.n(); ++k)
        sum.add(f.shell_average(k) * std::pow(q, -double(k) * s));
    cplx r = lq * sum.value();
    const cplx f0 = f.value_at_zero();
    if (f0 != cplx{}) {
        if (s.real() <= 0.0)
            throw divergence_error("Tate integral needs Re s > 0 for nonzero tail");
        r += lq * f0 * std::pow(q, -double(f.n()) * s) /
             (1.0 - std::pow(q, -s));
    }
    return r;
}

cplx tate_local_integral(const PlaceDesc& place, const arch::HermiteGaussian& f,
                         cplx s) {
    if (place.is_finite())
        throw wrong_place_error("Hermite data lives at the real place");
    if (s.real() <= 0.0)
        throw divergence_error("real Tate integral needs Re s > 0");
    // int_{R^x} f |x|^s d^x = int_R F(e^u) e^{su} du, F the even part
    auto integrand = [&](double u) -> cplx {
        const double x = std::exp(u);
        const cplx even = 0.5 * (f.eval(x) + f.eval(-x));
        return even * std::exp(s * u);
    };
    const double lo = -40.0 / std::max(0.05, s.real());
    return quad::integrate(integrand, lo, 4.0, {1e-12, 1e-12});
}

SpectralValue spectral_side(const arch::LogProfile& g,
                            const global::ZeroTable& zeros) {
    SpectralValue out;
    out.pole_part = g.laplace(0.0) + g.laplace(1.0);
    const cplx zero_sum = parallel_sum(
        zeros.ordinates.size(), 4096,
        [&](std::size_t i) {
            return 2.0 * g.laplace(cplx(0.5, zeros.ordinates[i])).real();
        },
        zeros.ordinates.size() > 8192);
    out.zero_part = -zero_sum;
    out.value = out.pole_part + out.zero_part;
    // tail model: 2 int_{T}^inf |G(1/2+i t)| ln(t/2pi)/(2pi) dt
    if (!zeros.ordinates.empty() &&
        g.kind() == arch::LogProfile::Kind::gaussian) {
        const double T = zeros.ordinates.back();
        const double sig = g.sigma();
        const double amp = std::abs(g.amplitude()) * sig *
                           std::sqrt(2.0 * kPi) *
                           std::exp(g.u0() * 0.5 + sig * sig * 0.125);
        auto dens = [&](double t) {
            return amp * std::exp(-0.5 * sig * sig * t * t) *
                   std::log(t / (2.0 * kPi) + 1.0) / (2.0 * kPi);
        };
        double tail = 0.0;
        const double dt = std::min(1.0, 1.0 / sig);
        for (double t = T; t < T + 60.0 / sig; t += dt)
            tail += dens(t + 0.5 * dt) * dt;
        out.zero_tail_bound = 2.0 * tail;
    } else {
        out.zero_tail_bound = 0.0;
    }
    return out;
}

} // namespace adelic::spectral
