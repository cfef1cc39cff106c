#ifndef ADELIC_FOURIER_LOCAL_HPP
#define ADELIC_FOURIER_LOCAL_HPP

#include <complex>

#include "adelic/arch.hpp"
#include "adelic/level_function.hpp"
#include "adelic/measures.hpp"

namespace adelic::fourier {

using cplx = std::complex<double>;
using measures::PlaceDesc;

// Additive characters are fixed once for the whole project:
//   psi_p(x) = e^{2 pi i {x}_p},   psi_inf(x) = e^{-2 pi i x},
// so the product over all places is trivial on Q and the differental
// idele is 1 (ln D_Q = 0). With vol(Z_p) = 1 both transforms are unitary.

// F f at level (n, m): (F f)[j'] = p^{-n} sum_j omega^{j j'} f[j],
// omega = e^{2 pi i / p^{m+n}}. Matrices are cached per (p, m+n).
bs::LevelFunction fourier_padic(const bs::LevelFunction& f);

// F* f (x) = F f (-x).
bs::LevelFunction fourier_padic_adjoint(const bs::LevelFunction& f);

// J f(x) = |x|^{-1} f(x^{-1}): on shells, (Jf)[k] = q^k f[-k].
bs::MultSeq j_op_mult(const bs::MultSeq& f);
arch::LogProfile j_op_arch(const arch::LogProfile& g);

// Mellin symbol of the equivariant Fourier transform F = Fourier o J:
//   finite p:  (1 - p^{s-1}) / (1 - p^{-s})
//   real:      pi^{1/2 - s} Gamma(s/2) / Gamma((1-s)/2)
// The closed forms are not assumed anywhere: the test suite re-derives
// them from the exact level-space action of F.
cplx equiv_fourier_symbol(const PlaceDesc& place, cplx s);

// Callable gamma-factor descriptor for one place. |gamma(1/2 + it)| = 1.
struct GammaFactor {
    PlaceDesc place;
    cplx operator()(cplx s) const { return equiv_fourier_symbol(place, s); }
};

// d/ds log of the symbol (used by the tau route in the trace engine).
cplx equiv_fourier_symbol_logderiv(const PlaceDesc& place, cplx s);

// Mellin sum of a shell function: ln q * sum_k f[k] q^{-ks}, with the
// tail toward 0 summed in closed geometric form (needs Re s > 0).
cplx mellin_mult(const PlaceDesc& place, const bs::MultSeq& f, cplx s);

// Restriction Mellin of a level function (shell averages + closed tail).
cplx mellin_level(const bs::LevelFunction& f, cplx s);

} // namespace adelic::fourier

#endif
