#ifndef ADELIC_LEVEL_FUNCTION_HPP
#define ADELIC_LEVEL_FUNCTION_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "adelic/errors.hpp"

namespace adelic::bs {

using cplx = std::complex<double>;

// Unramified function on Q_p^x: finitely many explicit shell values
// (indexed by valuation, so shell k is p^k Z_p^x with |x| = p^{-k}),
// plus an optional tail marker: the value taken on every shell
// k >= tail_start. The tail records the behaviour toward 0; functions in
// the additive picture need not vanish there.
struct MultSeq {
    long long p = 2;
    std::map<long long, cplx> coeffs;
    std::optional<cplx> tail;
    long long tail_start = 0;

    cplx at(long long k) const;
    bool finitely_supported() const;
    MultSeq shifted(long long k) const; // translation by varpi^k
    static MultSeq shell(long long p, long long k, cplx v = 1.0);
    static MultSeq zero(long long p) { return MultSeq{p, {}, {}, 0}; }
};

MultSeq operator+(const MultSeq& a, const MultSeq& b);
MultSeq operator*(cplx s, const MultSeq& a);

// Exact finite model of a Schwartz-Bruhat function on Q_p.
//
// Level (m, n): supported in p^{-m} Z_p and constant on cosets of p^n Z_p,
// with m + n >= 0 (m, n may individually be negative). Coefficients are
// indexed by j in [0, p^{m+n}); index j names the coset (j / p^m) + p^n Z_p,
// i.e. j is the little-endian base-p digit string of the representative
// times p^m. This order is fixed so Fourier matrices are reproducible
// bit-for-bit.
class LevelFunction {
public:
    LevelFunction(long long p, int m, int n, std::vector<cplx> coeffs);

    static LevelFunction zero(long long p);
    // xi_j = 1_{p^j Z_p} at level (max(0,-j), max(0,j)).
    static LevelFunction xi(long long p, int j);

    long long p() const { return p_; }
    int m() const { return m_; }
    int n() const { return n_; }
    std::size_t dim() const { return coeffs_.size(); }
    const std::vector<cplx>& coeffs() const { return coeffs_; }

    // Value at x = unit * p^val (unit coprime to p, read mod p^{n-val}),
    // and at x = 0.
    cplx value_at(long long val, std::uint64_t unit) const;
    cplx value_at_zero() const { return coeffs_[0]; }

    LevelFunction refined(int m2, int n2) const;

    // lambda_a f(x) = f(a^{-1} x) for a = unit * p^k. The unit must be
    // given to at least m+n base-p digits.
    LevelFunction translated(long long k, std::uint64_t unit = 1) const;

    bool is_unit_invariant(double tol = 0.0) const;
    cplx shell_average(long long k) const; // -m <= k <= n-1
    cplx additive_integral() const;        // vol(coset of p^n Z_p) = p^{-n}

    // The equivariant isomorphism restricted to O^x-invariants: greedy
    // xi-expansion, xi_j -> shell indicator e_j. Finitely supported output.
    MultSeq to_multiplicative() const;

    // Plain restriction to Q_p^x: shell values with a tail marker at n.
    MultSeq restrict_to_units_part() const;

    bool approx_equal(const LevelFunction& o, double tol = 0.0) const;

    friend LevelFunction operator+(const LevelFunction&, const LevelFunction&);
    friend LevelFunction operator-(const LevelFunction&, const LevelFunction&);
    friend LevelFunction operator*(cplx, const LevelFunction&);
    friend LevelFunction pointwise_mul(const LevelFunction&,
                                       const LevelFunction&);

private:
    long long p_;
    int m_, n_;
    std::vector<cplx> coeffs_;
};

// Lift a finitely supported MultSeq through the isomorphism:
// sum c_k e_k -> sum c_k xi_k.
LevelFunction from_multiplicative(const MultSeq& f);

// p^e with overflow/capacity guard.
long long ipow(long long p, int e);

} // namespace adelic::bs

#endif
