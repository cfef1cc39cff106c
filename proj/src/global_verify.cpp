#include "adelic/global_verify.hpp"

#include <cmath>
#include <sstream>

#include "adelic/numeric.hpp"
#include "adelic/spectral.hpp"

namespace adelic::global {

namespace {

std::string fmt(double v) {
    std::ostringstream ss;
    ss.precision(17);
    ss << v;
    return ss.str();
}
} // namespace

GeometricParts geometric_side(const arch::LogProfile& g,
                              const PrimeTable& primes,
                              const weil::PVContext& pv) {
    GeometricParts parts;
    KahanSum<double> finite;
    for (const auto& pp : primes.prime_powers) {
        const double u = double(pp.e) * pp.ln_p;
        const double t1 = g.eval(u).real();
        const double t2 = std::exp(-u) * g.eval(-u).real();
        finite.add(pp.ln_p * (t1 + t2));
    }
    parts.finite_sum = finite.value();
    parts.arch_term = weil::weil_local_real_subtracted(g, pv.quad_tol);
    parts.discriminant = 0.0; // ln D_Q
    // tail: sum_{n > X} ln n |g(ln n)| + (ln n / n)|g(-ln n)|, bounded by
    // integrals against the profile envelope
    const double lx = std::log(double(primes.x_max));
    const double R = g.center() + g.support_radius(1e-18);
    double tail = 0.0;
    const double step = 0.05;
    auto panel_max = [&](double a, double b) {
        return std::max({std::abs(g.eval(a)), std::abs(g.eval(0.5 * (a + b))),
                         std::abs(g.eval(b))});
    };
    if (R > lx) {
        for (double u = lx; u <= R; u += step)
            tail += (u + 1.0 + step) * panel_max(u, u + step) *
                    std::exp(u + step) * step;
    }
    // the |x| < 1 side decays like e^{-u} |g(-u)|; bound it the same way
    const double Rneg = -g.center() + g.support_radius(1e-18);
    if (Rneg > lx) {
        for (double u = lx; u <= Rneg; u += step)
            tail += (u + 1.0 + step) * panel_max(-u - step, -u) * step;
    }
    parts.prime_tail_bound = tail;
    if (tail > 1e-6)
        throw truncation_error(
            "prime-power cutoff too small for this profile; raise X to about " +
            std::to_string((long long)std::ceil(std::exp(R))));
    return parts;
}

std::string ExplicitFormulaReport::to_json() const {
    std::ostringstream ss;
    ss << "{\n"
       << "  \"test_function\": \"" << g_desc << "\",\n"
       << "  \"u0\": " << fmt(u0) << ",\n"
       << "  \"sigma\": " << fmt(sigma) << ",\n"
       << "  \"geometric\": {\n"
       << "    \"finite_sum\": " << fmt(geom.finite_sum) << ",\n"
       << "    \"arch_term\": " << fmt(geom.arch_term) << ",\n"
       << "    \"discriminant_term\": " << fmt(geom.discriminant) << ",\n"
       << "    \"prime_tail_bound\": " << fmt(geom.prime_tail_bound) << ",\n"
       << "    \"value\": " << fmt(geom.value()) << "\n"
       << "  },\n"
       << "  \"spectral\": {\n"
       << "    \"pole_part\": " << fmt(pole_part) << ",\n"
       << "    \"zero_part\": " << fmt(zero_part) << ",\n"
       << "    \"zero_tail_bound\": " << fmt(zero_tail_bound) << ",\n"
       << "    \"value\": " << fmt(spectral) << "\n"
       << "  },\n"
       << "  \"x_max\": " << x_max << ",\n"
       << "  \"zero_count\": " << zero_count << ",\n"
       << "  \"residual\": " << fmt(residual) << ",\n"
       << "  \"tolerance\": " << fmt(tolerance) << ",\n"
       << "  \"pass\": " << (pass ? "true" : "false") << "\n"
       << "}\n";
    return ss.str();
}

std::string ExplicitFormulaReport::csv_header() {
    return "u0,sigma,x_max,zero_count,finite_sum,arch_term,pole_part,"
           "zero_part,geometric,spectral,residual,tolerance,pass";
}

std::string ExplicitFormulaReport::to_csv_row() const {
    std::ostringstream ss;
    ss.precision(17);
    ss << u0 << ',' << sigma << ',' << x_max << ',' << zero_count << ','
       << geom.finite_sum << ',' << geom.arch_term << ',' << pole_part << ','
       << zero_part << ',' << geom.value() << ',' << spectral << ','
       << residual << ',' << tolerance << ',' << (pass ? 1 : 0);
    return ss.str();
}

ExplicitFormulaReport explicit_formula_check(const arch::LogProfile& g,
                                             const ZeroTable& zeros,
                                             const PrimeTable& primes,
                                             const weil::PVContext& pv,
                                             double tolerance) {
    if (tolerance <= 0.0) throw config_error("tolerance must be positive");
    ExplicitFormulaReport rep;
    if (g.kind() == arch::LogProfile::Kind::gaussian) {
        rep.g_desc = "gaussian";
        rep.u0 = g.u0();
        rep.sigma = g.sigma();
    } else {
        rep.g_desc = "sampled";
    }
    rep.geom = geometric_side(g, primes, pv);
    const auto spec = spectral::spectral_side(g, zeros);
    rep.pole_part = spec.pole_part.real();
    rep.zero_part = spec.zero_part.real();
    rep.zero_tail_bound = spec.zero_tail_bound;
    rep.spectral = spec.value.real();
    rep.x_max = primes.x_max;
    rep.zero_count = zeros.count();
    rep.residual = std::abs(rep.geom.value() - rep.spectral);
    rep.tolerance = tolerance;
    if (rep.geom.prime_tail_bound > tolerance / 10.0 ||
        rep.zero_tail_bound > tolerance / 10.0)
        throw truncation_error("truncation tails exceed tolerance/10");
    rep.pass = rep.residual <= tolerance;
    return rep;
}

double poisson_check(const arch::HermiteGaussian& f, double x) {
    if (x < 0.1 || x > 10.0) throw config_error("poisson check wants x in [0.1, 10]");
    const arch::HermiteGaussian fhat = f.fourier();
    auto lattice_sum = [](const arch::HermiteGaussian& h, double scale) {
        KahanSum<cplx> s;
        s.add(h.eval(0.0));
        for (long long n = 1; n < 4000; ++n) {
            const cplx term = h.eval(double(n) * scale) +
                              h.eval(-double(n) * scale);
            s.add(term);
            if (double(n) * scale > 12.0) break; // e^{-pi 144} under 1e-190
        }
        return s.value();
    };
    const cplx lhs = lattice_sum(f, x);
    const cplx rhs = lattice_sum(fhat, 1.0 / x) / x;
    return std::abs(lhs - rhs);
}

PntResult pnt_check(long long X, const PrimeTable& primes) {
    if (X < 100) throw config_error("pnt check wants X >= 100");
    if (primes.x_max < X) throw config_error("prime table too small for X");
    PntResult r;
    r.x = X;
    long long count = 0;
    for (const long long p : primes.primes)
        if (p <= X) ++count;
    r.pi_x = count;
    r.ratio = double(count) * std::log(double(X)) / double(X);
    for (long long x = X; x >= 1000; x /= 10) {
        long long c = 0;
        for (const long long p : primes.primes)
            if (p <= x) ++c;
        r.series.emplace_back(x, double(c) * std::log(double(x)) / double(x));
    }
    return r;
}

SmoothedPntResult smoothed_pnt_check(const arch::LogProfile& f, double xi) {
    if (xi < 1e3) throw config_error("smoothed check wants xi >= 10^3");
    SmoothedPntResult r;
    const double lnxi = std::log(xi);
    const double R = f.support_radius(1e-14);
    // (f * l_xi)(y) = int_{ln 1.5}^{ln xi} f-profile(ln y - w) dw / w
    auto conv = [&](double lny) {
        const double lo = std::max(std::log(1.5), lny - R);
        const double hi = std::min(lnxi, lny + R);
        if (lo >= hi) return 0.0;
        return quad::integrate(
                   [&](double w) { return f.eval(lny - w) / w; }, lo, hi,
                   {1e-10, 1e-10})
            .real();
    };
    const long long p_cut = (long long)std::ceil(xi * std::exp(R)) + 10;
    const auto table = sieve_primes(p_cut);
    KahanSum<double> lhs;
    for (const long long p : table.primes) {
        const double lp = std::log(double(p));
        const double c = conv(lp);
        if (c != 0.0) lhs.add(lp * c);
    }
    r.lhs = lhs.value();
    r.rhs = f.laplace(1.0).real() * xi / lnxi;
    if (r.rhs == 0.0) {
        r.ratio_defined = false;
        r.ratio = std::nan("");
    } else {
        r.ratio = r.lhs / r.rhs;
    }
    return r;
}

} // namespace adelic::global
