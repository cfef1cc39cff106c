#ifndef ADELIC_NUMERIC_HPP
#define ADELIC_NUMERIC_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <future>
#include <queue>
#include <vector>

#include "adelic/errors.hpp"

namespace adelic {

using cplx = std::complex<double>;

// Compensated (Kahan) accumulator; used wherever long sums must be
// order-stable and reproducible.
template <typename T>
class KahanSum {
    T sum_{};
    T carry_{};

public:
    void add(const T& x) {
        const T y = x - carry_;
        const T t = sum_ + y;
        carry_ = (t - sum_) - y;
        sum_ = t;
    }
    T value() const { return sum_; }
};

namespace quad {

// Gauss-Kronrod 7-15 pair on [-1,1], positive Kronrod abscissae.
inline constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
inline constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
inline constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

template <typename F>
void gk15(const F& f, double a, double b, cplx& kron, double& err) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    cplx fk{}, fg{};
    for (int i = 0; i < 8; ++i) {
        const cplx f1 = f(c - h * kXgk[i]);
        const cplx f2 = (i == 7) ? f1 : f(c + h * kXgk[i]);
        cplx pair = (i == 7) ? f1 : f1 + f2;
        fk += kWgk[i] * pair;
        if (i % 2 == 1) fg += kWg[i / 2] * pair;
    }
    kron = fk * h;
    err = std::abs(fk - fg) * std::abs(h);
}

struct Options {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_intervals = 4000;
    bool throw_on_failure = true;
};

// Globally adaptive Gauss-Kronrod on a finite interval: keep a worklist of
// panels ordered by error estimate, split the worst until the summed error
// estimate meets the tolerance. The interval is seeded with several panels
// so a localized integrand cannot fool the first error estimate.
template <typename F>
cplx integrate(const F& f, double a, double b, const Options& opt = {}) {
    struct Panel {
        double a, b, err;
        cplx val;
        bool operator<(const Panel& o) const { return err < o.err; }
    };
    std::priority_queue<Panel> work;
    auto make = [&](double lo, double hi) {
        Panel p{lo, hi, 0.0, {}};
        gk15(f, lo, hi, p.val, p.err);
        return p;
    };
    cplx total{};
    double toterr = 0.0;
    const int seeds = 8;
    for (int i = 0; i < seeds; ++i) {
        const Panel p =
            make(a + (b - a) * i / double(seeds),
                 a + (b - a) * (i + 1) / double(seeds));
        total += p.val;
        toterr += p.err;
        work.push(p);
    }
    int n = seeds;
    while (true) {
        const double tol =
            std::max(opt.abs_tol, opt.rel_tol * std::abs(total));
        if (toterr <= tol) return total;
        if (n >= opt.max_intervals) break;
        const Panel worst = work.top();
        work.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const Panel l = make(worst.a, mid), r = make(mid, worst.b);
        total += l.val + r.val - worst.val;
        toterr += l.err + r.err - worst.err;
        work.push(l);
        work.push(r);
        ++n;
    }
    if (opt.throw_on_failure)
        throw accuracy_error("adaptive quadrature did not converge");
    return total;
}

} // namespace quad

// Deterministic chunked parallel reduction: chunk boundaries are fixed by
// (n, chunk), each chunk is Kahan-summed, chunks are combined in order.
template <typename F>
cplx parallel_sum(std::size_t n, std::size_t chunk, const F& term,
                  bool parallel = true) {
    if (n == 0) return {};
    const std::size_t nchunks = (n + chunk - 1) / chunk;
    std::vector<cplx> partial(nchunks);
    auto run = [&](std::size_t ci) {
        KahanSum<cplx> s;
        const std::size_t lo = ci * chunk, hi = std::min(n, lo + chunk);
        for (std::size_t i = lo; i < hi; ++i) s.add(term(i));
        partial[ci] = s.value();
    };
    if (parallel && nchunks > 1) {
        std::vector<std::future<void>> fs;
        fs.reserve(nchunks);
        for (std::size_t ci = 0; ci < nchunks; ++ci)
            fs.push_back(std::async(std::launch::async, run, ci));
        for (auto& f : fs) f.get();
    } else {
        for (std::size_t ci = 0; ci < nchunks; ++ci) run(ci);
    }
    KahanSum<cplx> total;
    for (const auto& v : partial) total.add(v);
    return total.value();
}

} // namespace adelic

#endif
