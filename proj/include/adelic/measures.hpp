#ifndef ADELIC_MEASURES_HPP
#define ADELIC_MEASURES_HPP

#include <complex>

#include "adelic/arch.hpp"
#include "adelic/errors.hpp"
#include "adelic/level_function.hpp"

namespace adelic::measures {

using cplx = std::complex<double>;

// A place of Q: one finite place per prime, plus the real place.
//
// Measure normalization used throughout the project:
//   multiplicative: int_{1 <= |x| < u} d^x = ln u, so every shell
//     varpi^k O^x at a finite place has volume ln q, and on R^x we take
//     d^x = dx / (2|x|)  --  the factor 1/2 makes the TWO-sided set
//     {1 <= |x| < u} have measure ln u. This 1/2 propagates into every
//     archimedean formula.
//   additive: vol(O) = 1 at finite places, Lebesgue on R.
struct PlaceDesc {
    enum class Kind { finite, real };
    Kind kind = Kind::finite;
    long long p = 0;

    static PlaceDesc finite(long long prime) {
        if (prime < 2) throw config_error("finite place needs a prime");
        return PlaceDesc{Kind::finite, prime};
    }
    static PlaceDesc real() { return PlaceDesc{Kind::real, 0}; }
    bool is_finite() const { return kind == Kind::finite; }
    double q() const { return double(p); }
    double ln_q() const;
};

// Cached measure data for one place.
struct MeasureCtx {
    PlaceDesc place;
    double additive_unit_volume = 1.0; // vol(O) at finite places
    double mult_shell_volume = 0.0;    // ln q at finite places
    explicit MeasureCtx(PlaceDesc pl);
};

enum class Subgroup { units, one_plus_p };

// int f d^x over Q_p^x for a finitely supported shell function:
// ln q * sum_k f[k].
cplx mult_integral_finite(const PlaceDesc& place, const bs::MultSeq& f);

// int_{R^x} g(ln|x|) |x|^s d^x = int_R g(u) e^{su} du.
cplx mult_integral_arch(const arch::LogProfile& g, cplx s);

// units -> ln q ; 1 + P -> ln q / (q - 1).
double vol_subgroup(const PlaceDesc& place, Subgroup which);

} // namespace adelic::measures

#endif
