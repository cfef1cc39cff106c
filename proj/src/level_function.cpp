#include "adelic/level_function.hpp"

#include <algorithm>
#include <cmath>

namespace adelic::bs {

namespace {
constexpr long long kMaxDim = 1LL << 22;

long long mod_inverse(long long a, long long mod) {
    long long t = 0, newt = 1, r = mod, newr = a % mod;
    while (newr != 0) {
        const long long q = r / newr;
        t -= q * newt;
        std::swap(t, newt);
        r -= q * newr;
        std::swap(r, newr);
    }
    if (r != 1) throw precision_error("unit not invertible at this level");
    return ((t % mod) + mod) % mod;
}
} // namespace

long long ipow(long long p, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) {
        r *= p;
        if (r > kMaxDim) throw capacity_error("level space dimension too large");
    }
    return r;
}

cplx MultSeq::at(long long k) const {
    cplx v{};
    const auto it = coeffs.find(k);
    if (it != coeffs.end()) v += it->second;
    if (tail && k >= tail_start) v += *tail;
    return v;
}

bool MultSeq::finitely_supported() const {
    return !tail || *tail == cplx{};
}

MultSeq MultSeq::shifted(long long k) const {
    MultSeq r{p, {}, tail, tail_start + k};
    for (const auto& [key, v] : coeffs) r.coeffs[key + k] = v;
    return r;
}

MultSeq MultSeq::shell(long long p, long long k, cplx v) {
    MultSeq r{p, {}, {}, 0};
    r.coeffs[k] = v;
    return r;
}

MultSeq operator+(const MultSeq& a, const MultSeq& b) {
    if (a.p != b.p) throw wrong_place_error("mixed primes in MultSeq sum");
    MultSeq r{a.p, a.coeffs, {}, 0};
    for (const auto& [k, v] : b.coeffs) r.coeffs[k] += v;
    // tails add; if the starts differ, the earlier tail is patched in
    // explicitly on the gap so the representation stays exact
    if (a.tail || b.tail) {
        const long long sa = a.tail ? a.tail_start : 0;
        const long long sb = b.tail ? b.tail_start : 0;
        const long long s = std::max(a.tail ? sa : sb, b.tail ? sb : sa);
        if (a.tail)
            for (long long k = sa; k < s; ++k) r.coeffs[k] += *a.tail;
        if (b.tail)
            for (long long k = sb; k < s; ++k) r.coeffs[k] += *b.tail;
        r.tail = (a.tail ? *a.tail : cplx{}) + (b.tail ? *b.tail : cplx{});
        r.tail_start = s;
    }
    return r;
}

MultSeq operator*(cplx s, const MultSeq& a) {
    MultSeq r{a.p, {}, a.tail, a.tail_start};
    for (const auto& [k, v] : a.coeffs) r.coeffs[k] = s * v;
    if (r.tail) r.tail = s * *r.tail;
    return r;
}

LevelFunction::LevelFunction(long long p, int m, int n,
                             std::vector<cplx> coeffs)
    : p_(p), m_(m), n_(n), coeffs_(std::move(coeffs)) {
    if (p < 2) throw error("prime must be >= 2");
    if (m + n < 0) throw error("level requires m + n >= 0");
    if ((long long)coeffs_.size() != ipow(p, m + n))
        throw error("coefficient vector has wrong length for level");
}

LevelFunction LevelFunction::zero(long long p) {
    return LevelFunction(p, 0, 0, {cplx{}});
}

LevelFunction LevelFunction::xi(long long p, int j) {
    const int m = std::max(0, -j), n = std::max(0, j);
    std::vector<cplx> c(ipow(p, m + n), cplx{});
    if (j <= 0) {
        std::fill(c.begin(), c.end(), cplx{1.0});
    } else {
        c[0] = 1.0;
    }
    return LevelFunction(p, m, n, std::move(c));
}

cplx LevelFunction::value_at(long long val, std::uint64_t unit) const {
    if (unit % std::uint64_t(p_) == 0)
        throw precision_error("unit part divisible by p");
    if (val < -m_) return {};
    if (val >= n_) return coeffs_[0];
    const long long M = (long long)coeffs_.size();
    const long long pk = ipow(p_, int(val + m_));
    const long long u = (long long)(unit % std::uint64_t(M / pk));
    return coeffs_[(u * pk) % M];
}

LevelFunction LevelFunction::refined(int m2, int n2) const {
    if (m2 < m_ || n2 < n_) throw error("refinement must not coarsen");
    if (m2 == m_ && n2 == n_) return *this;
    const long long M2 = ipow(p_, m2 + n2);
    const long long shift = ipow(p_, m2 - m_);
    const long long M = (long long)coeffs_.size();
    std::vector<cplx> c(M2, cplx{});
    for (long long j2 = 0; j2 < M2; ++j2) {
        if (j2 % shift != 0) continue; // representative outside p^{-m} Z_p
        c[j2] = coeffs_[(j2 / shift) % M];
    }
    return LevelFunction(p_, m2, n2, std::move(c));
}

LevelFunction LevelFunction::translated(long long k, std::uint64_t unit) const {
    const long long M = (long long)coeffs_.size();
    if (unit % std::uint64_t(p_) == 0)
        throw precision_error("translation unit divisible by p");
    const long long u = (long long)(unit % std::uint64_t(std::max<long long>(M, 1)));
    const long long uinv = (M == 1) ? 0 : mod_inverse(u, M);
    std::vector<cplx> c(M);
    for (long long j = 0; j < M; ++j)
        c[j] = coeffs_[(M == 1) ? 0 : (uinv * j) % M];
    return LevelFunction(p_, int(m_ - k), int(n_ + k), std::move(c));
}

bool LevelFunction::is_unit_invariant(double tol) const {
    const long long M = (long long)coeffs_.size();
    const int levels = m_ + n_;
    for (int v = 0; v < levels; ++v) {
        const long long lead = ipow(p_, v);
        const cplx ref = coeffs_[lead];
        for (long long j = lead; j < M; j += lead) {
            if ((j / lead) % p_ == 0) continue; // higher valuation
            if (std::abs(coeffs_[j] - ref) > tol) return false;
        }
    }
    return true;
}

cplx LevelFunction::shell_average(long long k) const {
    if (k < -m_ || k >= n_) throw error("shell outside level range");
    const long long lead = ipow(p_, int(k + m_));
    const long long M = (long long)coeffs_.size();
    cplx s{};
    long long count = 0;
    for (long long j = lead; j < M; j += lead) {
        if ((j / lead) % p_ == 0) continue;
        s += coeffs_[j];
        ++count;
    }
    return s / double(count);
}

cplx LevelFunction::additive_integral() const {
    cplx s{};
    for (const auto& c : coeffs_) s += c;
    return s * std::pow(double(p_), double(-n_));
}

MultSeq LevelFunction::to_multiplicative() const {
    if (!is_unit_invariant(1e-12))
        throw invariance_error("to_multiplicative requires an O^x-invariant function");
    MultSeq r = MultSeq::zero(p_);
    // peel: shell values s_k, coefficients c_k = s_k - s_{k-1}, with the
    // value near 0 closing the expansion at k = n.
    cplx prev{};
    for (long long k = -m_; k < n_; ++k) {
        const cplx s = shell_average(k);
        if (s != prev) r.coeffs[k] = s - prev;
        prev = s;
    }
    const cplx t = coeffs_[0];
    if (t != prev) r.coeffs[n_] = t - prev;
    return r;
}

MultSeq LevelFunction::restrict_to_units_part() const {
    if (!is_unit_invariant(1e-12))
        throw invariance_error("restriction helper requires O^x-invariance");
    MultSeq r = MultSeq::zero(p_);
    for (long long k = -m_; k < n_; ++k) {
        const cplx s = shell_average(k);
        if (s != cplx{}) r.coeffs[k] = s;
    }
    r.tail = coeffs_[0];
    r.tail_start = n_;
    return r;
}

bool LevelFunction::approx_equal(const LevelFunction& o, double tol) const {
    if (p_ != o.p_) return false;
    const int m2 = std::max(m_, o.m_), n2 = std::max(n_, o.n_);
    const LevelFunction a = refined(m2, n2), b = o.refined(m2, n2);
    for (std::size_t j = 0; j < a.coeffs_.size(); ++j)
        if (std::abs(a.coeffs_[j] - b.coeffs_[j]) > tol) return false;
    return true;
}

namespace {
template <typename Op>
LevelFunction combine(const LevelFunction& a, const LevelFunction& b, Op op) {
    if (a.p() != b.p()) throw wrong_place_error("mixed primes");
    const int m2 = std::max(a.m(), b.m()), n2 = std::max(a.n(), b.n());
    const LevelFunction ra = a.refined(m2, n2), rb = b.refined(m2, n2);
    std::vector<cplx> c(ra.dim());
    for (std::size_t j = 0; j < c.size(); ++j)
        c[j] = op(ra.coeffs()[j], rb.coeffs()[j]);
    return LevelFunction(a.p(), m2, n2, std::move(c));
}
} // namespace

LevelFunction operator+(const LevelFunction& a, const LevelFunction& b) {
    return combine(a, b, [](cplx x, cplx y) { return x + y; });
}
LevelFunction operator-(const LevelFunction& a, const LevelFunction& b) {
    return combine(a, b, [](cplx x, cplx y) { return x - y; });
}
LevelFunction pointwise_mul(const LevelFunction& a, const LevelFunction& b) {
    return combine(a, b, [](cplx x, cplx y) { return x * y; });
}
LevelFunction operator*(cplx s, const LevelFunction& a) {
    std::vector<cplx> c(a.coeffs());
    for (auto& x : c) x *= s;
    return LevelFunction(a.p(), a.m(), a.n(), std::move(c));
}

LevelFunction from_multiplicative(const MultSeq& f) {
    if (!f.finitely_supported())
        throw support_error("lift requires finite support");
    LevelFunction r = LevelFunction::zero(f.p);
    for (const auto& [k, v] : f.coeffs) {
        if (k < -40 || k > 40) throw capacity_error("shell index out of range");
        r = r + v * LevelFunction::xi(f.p, int(k));
    }
    return r;
}

} // namespace adelic::bs
