#include "adelic/cyclotomic.hpp"

#include <cmath>
#include <numbers>

namespace adelic::cyc {

namespace {
constexpr long long kMaxOrder = 729;

long long pow_ll(long long p, int e) {
    long long r = 1;
    while (e-- > 0) r *= p;
    return r;
}
} // namespace

CycNum::CycNum(long long p, int t) : p_(p), t_(t) {
    const long long M = pow_ll(p, t);
    if (M > kMaxOrder) throw capacity_error("cyclotomic order capped at 729");
    c_.assign(M, 0);
}

CycNum CycNum::root(long long p, int t, long long exponent, long long scale) {
    CycNum r(p, t);
    const long long M = r.order();
    r.c_[((exponent % M) + M) % M] = scale;
    return r;
}

void CycNum::match_den(CycNum& o) {
    while (den_pow_ < o.den_pow_) {
        for (auto& x : c_) x *= p_;
        ++den_pow_;
    }
    while (o.den_pow_ < den_pow_) {
        for (auto& x : o.c_) x *= o.p_;
        ++o.den_pow_;
    }
}

CycNum& CycNum::operator+=(const CycNum& o) {
    CycNum tmp = o;
    match_den(tmp);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += tmp.c_[i];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
    CycNum tmp = o;
    match_den(tmp);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= tmp.c_[i];
    return *this;
}

void CycNum::rotate_scale(long long exponent, long long scale, int den) {
    const long long M = order();
    const long long e = ((exponent % M) + M) % M;
    std::vector<long long> out(M, 0);
    for (long long i = 0; i < M; ++i)
        if (c_[i] != 0) out[(i + e) % M] = c_[i] * scale;
    c_ = std::move(out);
    den_pow_ += den;
}

void CycNum::accumulate_rotated(const CycNum& o, long long exponent) {
    while (den_pow_ < o.den_pow_) {
        for (auto& x : c_) x *= p_;
        ++den_pow_;
    }
    long long scale = 1;
    for (int i = 0; i < den_pow_ - o.den_pow_; ++i) scale *= p_;
    const long long M = order();
    const long long e = ((exponent % M) + M) % M;
    for (long long i = 0; i < M; ++i)
        if (o.c_[i] != 0) c_[(i + e) % M] += o.c_[i] * scale;
}

CycNum CycNum::times(const CycNum& o) const {
    CycNum r(p_, t_);
    const long long M = order();
    for (long long i = 0; i < M; ++i) {
        if (c_[i] == 0) continue;
        for (long long j = 0; j < M; ++j) {
            if (o.c_[j] == 0) continue;
            r.c_[(i + j) % M] += c_[i] * o.c_[j];
        }
    }
    r.den_pow_ = den_pow_ + o.den_pow_;
    return r;
}

CycNum CycNum::conj() const {
    CycNum r(p_, t_);
    const long long M = order();
    for (long long i = 0; i < M; ++i) r.c_[i == 0 ? 0 : M - i] = c_[i];
    r.den_pow_ = den_pow_;
    return r;
}

std::vector<long long> CycNum::reduced() const {
    // divide by Phi_M(x) = sum_{i<p} x^{i p^{t-1}} over x^M - 1 residues
    std::vector<long long> a = c_;
    const long long M = order();
    if (t_ == 0) return a; // Q(zeta_1) = Q
    const long long step = M / p_;        // p^{t-1}
    const long long deg_phi = step * (p_ - 1);
    for (long long e = M - 1; e >= deg_phi; --e) {
        const long long q = a[e];
        if (q == 0) continue;
        for (long long i = 0; i < p_; ++i) a[e - deg_phi + i * step] -= q;
    }
    a.resize(deg_phi);
    return a;
}

bool CycNum::is_zero() const {
    for (const auto x : reduced())
        if (x != 0) return false;
    return true;
}

bool CycNum::equals(const CycNum& o) const {
    CycNum d = *this;
    d -= o;
    return d.is_zero();
}

std::complex<double> CycNum::to_complex() const {
    const long long M = order();
    std::complex<double> s{};
    for (long long i = 0; i < M; ++i) {
        if (c_[i] == 0) continue;
        const double ang = 2.0 * std::numbers::pi * double(i) / double(M);
        s += double(c_[i]) * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return s / std::pow(double(p_), double(den_pow_));
}

ExactLevelFn ExactLevelFn::from_ints(long long p, int m, int n,
                                     const std::vector<long long>& ints) {
    ExactLevelFn f{p, m, n, {}};
    const long long M = pow_ll(p, m + n);
    if ((long long)ints.size() != M) throw error("wrong coefficient count");
    f.c.reserve(M);
    for (long long v : ints) f.c.push_back(CycNum::root(p, m + n, 0, v));
    return f;
}

ExactLevelFn ExactLevelFn::xi_at_level(long long p, int m, int n, int j) {
    if (j < -m || j > n) throw error("xi does not fit at this level");
    const long long M = pow_ll(p, m + n);
    std::vector<long long> ints(M, 0);
    const long long lead = pow_ll(p, j + m);
    for (long long idx = 0; idx < M; ++idx)
        if (idx % lead == 0) ints[idx] = 1; // v_p(representative) >= j
    return from_ints(p, m, n, ints);
}

ExactLevelFn ExactLevelFn::fourier() const {
    const long long M = dim();
    ExactLevelFn out{p, n, m, {}};
    out.c.reserve(M);
    for (long long jp = 0; jp < M; ++jp) {
        CycNum acc(p, m + n);
        for (long long j = 0; j < M; ++j)
            acc.accumulate_rotated(c[j], (j * jp) % M);
        acc.rotate_scale(0, 1, n); // p^{-n} scaling
        out.c.push_back(acc);
    }
    return out;
}

ExactLevelFn ExactLevelFn::translated(long long k, std::uint64_t unit) const {
    const long long M = dim();
    long long u = (long long)(unit % std::uint64_t(M));
    if (u % p == 0 && M > 1)
        throw precision_error("translation unit divisible by p");
    // inverse of u mod M
    long long uinv = 1;
    for (long long cand = 1; cand < M; ++cand)
        if ((cand * u) % M == 1) {
            uinv = cand;
            break;
        }
    ExactLevelFn out{p, int(m - k), int(n + k), {}};
    out.c.reserve(M);
    for (long long j = 0; j < M; ++j)
        out.c.push_back(c[(M == 1) ? 0 : (uinv * j) % M]);
    return out;
}

ExactLevelFn ExactLevelFn::parity() const {
    const long long M = dim();
    ExactLevelFn out{p, m, n, {}};
    out.c.reserve(M);
    for (long long j = 0; j < M; ++j) out.c.push_back(c[j == 0 ? 0 : M - j]);
    return out;
}

ExactLevelFn ExactLevelFn::operator-(const ExactLevelFn& o) const {
    if (p != o.p || m != o.m || n != o.n)
        throw error("exact difference needs matching levels");
    ExactLevelFn out{p, m, n, {}};
    out.c.reserve(dim());
    for (long long j = 0; j < dim(); ++j) {
        CycNum d = c[j];
        d -= o.c[j];
        out.c.push_back(d);
    }
    return out;
}

bool ExactLevelFn::equals(const ExactLevelFn& o) const {
    if (p != o.p || m != o.m || n != o.n) return false;
    for (long long j = 0; j < dim(); ++j)
        if (!c[j].equals(o.c[j])) return false;
    return true;
}

bool ExactLevelFn::is_zero() const {
    for (const auto& x : c)
        if (!x.is_zero()) return false;
    return true;
}

bool exact_dft_unitary(long long p, int mn) {
    const long long M = pow_ll(p, mn);
    if (M > kMaxOrder) throw capacity_error("cyclotomic order capped at 729");
    for (long long d = 0; d < M; ++d) {
        CycNum s(p, mn);
        for (long long jp = 0; jp < M; ++jp)
            s += CycNum::root(p, mn, (d * jp) % M);
        CycNum expect = CycNum::root(p, mn, 0, d == 0 ? M : 0);
        if (!s.equals(expect)) return false;
    }
    return true;
}

} // namespace adelic::cyc
