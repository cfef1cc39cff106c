#include "adelic/trace_engine.hpp"

#include <cmath>
#include <future>
#include <numbers>
#include <thread>

#include "adelic/fft.hpp"
#include "adelic/fourier_local.hpp"
#include "adelic/numeric.hpp"

namespace adelic::trace {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_profile_fits(const UGrid& grid, const arch::LogProfile& g) {
    const double reach = std::abs(g.center()) + g.support_radius(1e-12);
    if (reach > 0.5 * grid.U)
        throw grid_error("profile mass leaks outside [-U/2, U/2]");
}

// signed FFT bin frequency: t_k = 2 pi k~ / (N du)
double bin_freq(std::size_t k, std::size_t n, double du) {
    const long long ks =
        (k <= n / 2) ? (long long)k : (long long)k - (long long)n;
    return 2.0 * kPi * double(ks) / (double(n) * du);
}

std::vector<cplx> symbol_for(std::size_t n, double du, const PlaceSet& S) {
    std::vector<cplx> sym(n);
    const auto real_place = measures::PlaceDesc::real();
    for (std::size_t k = 0; k < n; ++k) {
        const double t = bin_freq(k, n, du);
        const cplx s(0.5, -t);
        cplx m = fourier::equiv_fourier_symbol(real_place, s);
        if (S.p)
            m *= fourier::equiv_fourier_symbol(
                measures::PlaceDesc::finite(*S.p), s);
        sym[k] = m;
    }
    return sym;
}

// forward fft, multiply bin-wise, inverse fft
void apply_multiplier(std::vector<cplx>& h, const std::vector<cplx>& sym) {
    fft::transform(h, false);
    for (std::size_t k = 0; k < h.size(); ++k) h[k] *= sym[k];
    fft::transform(h, true);
}

} // namespace

UGrid UGrid::make(double U, std::size_t N) {
    if (!fft::is_pow2(N)) throw grid_error("grid size must be a power of two");
    if (U <= 0.0) throw grid_error("grid half-width must be positive");
    return UGrid{U, N};
}

double CutoffPhi::operator()(double u) const {
    if (u <= -a) return 1.0;
    if (u >= a) return 0.0;
    // order-7 smoothstep in x = (a-u)/2a; S(1-x) = 1 - S(x) gives the
    // symmetry phi(u) + phi(-u) = 1
    const double x = (a - u) / (2.0 * a);
    const double x4 = x * x * x * x;
    return x4 * (35.0 - 84.0 * x + 70.0 * x * x - 20.0 * x * x * x);
}

cplx UGridOperator::trace() const {
    KahanSum<cplx> s;
    for (std::size_t i = 0; i < grid.N; ++i) s.add(at(i, i));
    return s.value();
}

std::vector<cplx> UGridOperator::apply(const std::vector<cplx>& v) const {
    if (v.size() != grid.N) throw grid_error("vector size mismatch");
    std::vector<cplx> out(grid.N);
    for (std::size_t i = 0; i < grid.N; ++i) {
        KahanSum<cplx> s;
        for (std::size_t j = 0; j < grid.N; ++j) s.add(at(i, j) * v[j]);
        out[i] = s.value();
    }
    return out;
}

UGridOperator build_convolution_op(const UGrid& grid,
                                   const arch::LogProfile& f) {
    check_profile_fits(grid, f);
    UGridOperator op{grid, std::vector<cplx>(grid.N * grid.N)};
    const double du = grid.du();
    // Toeplitz: precompute f on the difference grid
    std::vector<cplx> diff(2 * grid.N - 1);
    for (std::size_t k = 0; k < diff.size(); ++k) {
        const double tau = (double(k) - double(grid.N - 1)) * du;
        diff[k] = f.eval(tau) * du;
    }
    for (std::size_t i = 0; i < grid.N; ++i)
        for (std::size_t j = 0; j < grid.N; ++j)
            op.at(i, j) = diff[i - j + grid.N - 1];
    return op;
}

std::vector<cplx> f_symbol_on_grid(const UGrid& grid, const PlaceSet& S) {
    return symbol_for(grid.N, grid.du(), S);
}

UGridOperator build_F_op(const UGrid& grid, const PlaceSet& S) {
    if (grid.N > 2048)
        throw capacity_error("dense F realization capped at N = 2048");
    const auto sym = f_symbol_on_grid(grid, S);
    UGridOperator op{grid, std::vector<cplx>(grid.N * grid.N)};
    std::vector<cplx> col(grid.N);
    for (std::size_t j = 0; j < grid.N; ++j) {
        std::fill(col.begin(), col.end(), cplx{});
        col[j] = 1.0;
        apply_multiplier(col, sym);
        for (std::size_t i = 0; i < grid.N; ++i) op.at(i, j) = col[i];
    }
    return op;
}

CommutatorCheck commutator_trace_check(const UGrid& grid,
                                       const arch::LogProfile& f0,
                                       const arch::LogProfile& f1,
                                       const CutoffPhi& phi) {
    check_profile_fits(grid, f0);
    check_profile_fits(grid, f1);
    const std::size_t n = grid.N;
    const double du = grid.du();
    // tr A0 [M_phi, A1] = sum_{i,j} f0(u_i-u_j) f1(u_j-u_i) (phi_j - phi_i) du^2
    // grouped by k = i - j with prefix sums over phi
    std::vector<double> phiv(n), pref(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        phiv[i] = phi(grid.u(i));
        pref[i + 1] = pref[i] + phiv[i];
    }
    auto phi_range = [&](std::size_t a, std::size_t b) { // sum phi over [a,b)
        return pref[b] - pref[a];
    };
    auto lhs_for = [&](const arch::LogProfile& a0, const arch::LogProfile& a1) {
        KahanSum<double> acc;
        for (long long k = -(long long)n + 1; k < (long long)n; ++k) {
            const double tau = double(k) * du;
            const cplx prod = a0.eval(tau) * a1.eval(-tau);
            if (std::abs(prod) < 1e-300) continue;
            // i - j = k, i in [max(0,k), n-1+min(0,k)], j = i - k
            const long long ilo = std::max<long long>(0, k);
            const long long ihi = (long long)n - 1 + std::min<long long>(0, k);
            const double sum_phi_j =
                phi_range(std::size_t(ilo - k), std::size_t(ihi - k) + 1);
            const double sum_phi_i =
                phi_range(std::size_t(ilo), std::size_t(ihi) + 1);
            acc.add((prod * du * du).real() * (sum_phi_j - sum_phi_i));
        }
        return acc.value();
    };
    CommutatorCheck out;
    out.lhs = lhs_for(f0, f1);
    out.swapped_lhs = lhs_for(f1, f0);
    // rhs = -(f0 * d f1)(0) = -int f0(-v) v f1(v) dv
    const double R = std::max(std::abs(f0.center()) + f0.support_radius(),
                              std::abs(f1.center()) + f1.support_radius());
    out.rhs = -quad::integrate(
                   [&](double v) { return f0.eval(-v) * v * f1.eval(v); }, -R,
                   R, {1e-13, 1e-13})
                   .real();
    out.residual = std::abs(out.lhs - out.rhs);
    return out;
}

LocalTraceCheck local_trace_check(const UGrid& grid, const arch::LogProfile& g,
                                  const CutoffPhi& phi, const PlaceSet& S,
                                  const weil::PVContext& pv) {
    check_profile_fits(grid, g);
    if (phi.a > 0.45 * grid.U)
        throw grid_error("cutoff transition too wide for the grid");
    // x2-padded working grid
    const std::size_t P = 2 * grid.N;
    const double du = grid.du();
    const double V = 2.0 * grid.U;
    const auto sym = symbol_for(P, du, S);

    // twisted profile a(u) = e^{u/2} g(u) and b = F f profile
    std::vector<cplx> b(P);
    for (std::size_t j = 0; j < P; ++j) {
        const double u = -V + du * double(j);
        b[j] = std::exp(0.5 * u) * g.eval(u);
    }
    apply_multiplier(b, sym);

    // b as a function of the difference tau in (-V, V): index shift
    auto b_at = [&](long long k) -> cplx { // tau = k du, |k| < P
        // sampled layout: b[j] is at u = -V + j du; u = tau needs
        // j = (tau + V)/du = k + P/2
        const long long j = k + (long long)P / 2;
        if (j < 0 || j >= (long long)P) return {};
        return b[std::size_t(j)];
    };

    std::vector<double> phiv(P);
    for (std::size_t i = 0; i < P; ++i) phiv[i] = phi(-V + du * double(i));

    // diag of [M_phi, lambda(F f)] o F*, row by row
    std::vector<double> diag(P, 0.0);
    auto process_rows = [&](std::size_t lo, std::size_t hi) {
        std::vector<cplx> row(P);
        for (std::size_t i = lo; i < hi; ++i) {
            for (std::size_t j = 0; j < P; ++j)
                row[j] = (phiv[i] - phiv[j]) *
                         b_at((long long)i - (long long)j) * du;
            // apply F* to the second variable: forward fft, multiply by
            // conj(sym(-t)) = sym(t), inverse fft
            apply_multiplier(row, sym);
            diag[i] = row[i].real();
        }
    };
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t nthreads = std::min<std::size_t>(hw, 8);
    std::vector<std::future<void>> fs;
    const std::size_t chunk = (P + nthreads - 1) / nthreads;
    for (std::size_t t = 0; t < nthreads; ++t) {
        const std::size_t lo = t * chunk, hi = std::min(P, lo + chunk);
        if (lo < hi)
            fs.push_back(std::async(std::launch::async, process_rows, lo, hi));
    }
    for (auto& f : fs) f.get();

    LocalTraceCheck out;
    // diag already carries the matrix measure factor: entries of the
    // product operator's matrix are kernel values times du
    KahanSum<double> tr;
    for (std::size_t i = 0; i < P; ++i) tr.add(diag[i]);
    out.operator_trace = tr.value();

    out.w_arch = weil::weil_local_real_subtracted(g, pv.quad_tol);
    if (S.p) {
        const auto f_p = weil::pullback_profile(g, *S.p);
        out.w_finite =
            weil::weil_local_finite(measures::PlaceDesc::finite(*S.p), f_p)
                .real();
    }
    out.weil_sum = out.w_arch + out.w_finite;
    out.tau_route = tau_F_partial_route(grid, S, g).real();
    out.residual = std::abs(out.operator_trace - out.weil_sum);
    out.residual_tau = std::abs(out.tau_route - out.weil_sum);
    return out;
}

cplx tau_F_partial_route(const UGrid& grid, const PlaceSet& S,
                         const arch::LogProfile& g) {
    const std::size_t P = 2 * grid.N;
    const double du = grid.du();
    const double V = 2.0 * grid.U;
    const double dt = 2.0 * kPi / (double(P) * du);
    // a-hat(t) = G(1/2 - it): closed form for gaussians, otherwise one FFT
    // of the twisted samples with the grid-origin phase restored
    std::vector<cplx> ahat_fft;
    if (g.kind() != arch::LogProfile::Kind::gaussian) {
        ahat_fft.resize(P);
        for (std::size_t j = 0; j < P; ++j) {
            const double u = -V + du * double(j);
            ahat_fft[j] = std::exp(0.5 * u) * g.eval(u);
        }
        fft::transform(ahat_fft, false);
    }
    const auto real_place = measures::PlaceDesc::real();
    KahanSum<cplx> acc;
    for (std::size_t k = 0; k < P; ++k) {
        const double t = bin_freq(k, P, du);
        const cplx s(0.5, -t);
        cplx dlog = fourier::equiv_fourier_symbol_logderiv(real_place, s);
        if (S.p)
            dlog += fourier::equiv_fourier_symbol_logderiv(
                measures::PlaceDesc::finite(*S.p), s);
        if (!std::isfinite(dlog.real()) || !std::isfinite(dlog.imag()))
            throw pole_error("symbol log-derivative pole on the grid");
        const cplx ahat =
            ahat_fft.empty()
                ? g.laplace(s)
                : du * std::exp(cplx(0.0, t * V)) * ahat_fft[k];
        acc.add(dlog * ahat);
    }
    return -acc.value() * dt / (2.0 * kPi);
}

} // namespace adelic::trace
