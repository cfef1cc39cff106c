#ifndef ADELIC_CYCLOTOMIC_HPP
#define ADELIC_CYCLOTOMIC_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "adelic/errors.hpp"
#include "adelic/level_function.hpp"

namespace adelic::cyc {

// Exact element of Z[zeta_M][1/p] for a prime power M = p^t, stored on the
// exponent basis zeta^0 .. zeta^{M-1} with a power-of-p denominator.
// Equality and zero tests reduce modulo the cyclotomic polynomial
// Phi_M(x) = sum_{i<p} x^{i p^{t-1}}.
class CycNum {
public:
    CycNum(long long p, int t);
    static CycNum root(long long p, int t, long long exponent,
                       long long scale = 1);

    long long p() const { return p_; }
    int t() const { return t_; }
    long long order() const { return (long long)c_.size(); }
    int den_pow() const { return den_pow_; }

    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }

    // multiply by scale * zeta^exponent / p^den
    void rotate_scale(long long exponent, long long scale, int den);
    // this += zeta^exponent * o, aligning denominators; skips zero coords
    void accumulate_rotated(const CycNum& o, long long exponent);
    CycNum times(const CycNum& o) const;
    CycNum conj() const; // zeta -> zeta^{-1}

    bool is_zero() const;
    bool equals(const CycNum& o) const;
    std::complex<double> to_complex() const;

    // canonical residue mod Phi_M (degree < phi(M)); exposed for tests
    std::vector<long long> reduced() const;

private:
    long long p_;
    int t_;
    std::vector<long long> c_;
    int den_pow_ = 0;
    void match_den(CycNum& o);
};

// Exact level-space model: same coset indexing as bs::LevelFunction, with
// coefficients in Q(zeta_M), M = p^{m+n}. Capacity: M <= 729.
struct ExactLevelFn {
    long long p;
    int m, n;
    std::vector<CycNum> c;

    static ExactLevelFn from_ints(long long p, int m, int n,
                                  const std::vector<long long>& ints);
    static ExactLevelFn xi_at_level(long long p, int m, int n, int j);

    long long dim() const { return (long long)c.size(); }

    // F f at level (n, m): out[j'] = p^{-n} sum_j zeta^{j j'} c[j], exact.
    ExactLevelFn fourier() const;
    ExactLevelFn translated(long long k, std::uint64_t unit = 1) const;
    ExactLevelFn parity() const; // x -> f(-x)
    ExactLevelFn operator-(const ExactLevelFn& o) const;
    bool equals(const ExactLevelFn& o) const;
    bool is_zero() const;
};

// Exact verification that the weighted DFT pair is inverse:
// sum_{j'} zeta^{d j'} equals M delta_{d,0} in Z[zeta_M] for every d.
bool exact_dft_unitary(long long p, int mn);

} // namespace adelic::cyc

#endif
