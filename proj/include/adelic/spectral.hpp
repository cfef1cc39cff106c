#ifndef ADELIC_SPECTRAL_HPP
#define ADELIC_SPECTRAL_HPP

#include <complex>
#include <set>
#include <variant>
#include <vector>

#include "adelic/arch.hpp"
#include "adelic/level_function.hpp"
#include "adelic/measures.hpp"
#include "adelic/zeros.hpp"

namespace adelic::spectral {

using cplx = std::complex<double>;
using measures::PlaceDesc;

// Truncated Euler product over the primes outside S.
struct EulerProductSpec {
    std::set<long long> excluded_primes; // finite places in S
    long long p_max = 1000000;
};

struct EulerValue {
    cplx value;
    double tail_bound; // bound on |log| of the omitted factors
};

// prod_{p not in S, p <= P} (1 - p^{-s})^{-1}; needs Re s > 1.
EulerValue euler_Lhat(const EulerProductSpec& spec, cplx s);

// pi^{-s/2} Gamma(s/2) zeta(s); pole error at 0 and 1.
cplx completed_zeta(cplx s);

// |Lambda(s) - Lambda(1-s)|.
double functional_eq_residual(cplx s);

// Tate integral int f(x) |x|^s d^x at one place; finite-place input is a
// level function (closed shell sums + geometric tail, Re s > 0 when the
// tail is nonzero), real-place input a Hermite expansion (quadrature).
cplx tate_local_integral(const PlaceDesc& place, const bs::LevelFunction& f,
                         cplx s);
cplx tate_local_integral(const PlaceDesc& place, const arch::HermiteGaussian& f,
                         cplx s);

// Quasi-character descriptor with its order in the complete L-function:
// +1 at the poles, -1 at simple zeros. Only the unramified component
// |x|^s is realized; the character slot is the extension point for
// ramified components and currently admits only the trivial character.
struct SpectralTerm {
    enum class Character { trivial };
    Character chi = Character::trivial;
    cplx s;
    int order;
};

struct SpectralValue {
    cplx value;
    double zero_tail_bound; // density-model diagnostic, not a proof
    cplx pole_part;
    cplx zero_part;
};

// G(0) + G(1) - sum over zero ordinates of 2 Re G(1/2 + i gamma);
// duplicate ordinates count with multiplicity.
SpectralValue spectral_side(const arch::LogProfile& g,
                            const global::ZeroTable& zeros);

} // namespace adelic::spectral

#endif
