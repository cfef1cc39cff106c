#include "adelic/measures.hpp"

#include <cmath>

#include "adelic/numeric.hpp"

namespace adelic::measures {

double PlaceDesc::ln_q() const {
    if (!is_finite()) throw wrong_place_error("ln q undefined at the real place");
    return std::log(double(p));
}

MeasureCtx::MeasureCtx(PlaceDesc pl) : place(pl) {
    if (place.is_finite()) mult_shell_volume = place.ln_q();
}

cplx mult_integral_finite(const PlaceDesc& place, const bs::MultSeq& f) {
    if (!place.is_finite())
        throw wrong_place_error("shell integral needs a finite place");
    if (place.p != f.p) throw wrong_place_error("place/sequence prime mismatch");
    if (!f.finitely_supported())
        throw divergence_error("shell integral needs finite support");
    KahanSum<cplx> s;
    for (const auto& [k, v] : f.coeffs) s.add(v);
    return place.ln_q() * s.value();
}

cplx mult_integral_arch(const arch::LogProfile& g, cplx s) {
    return g.laplace(s);
}

double vol_subgroup(const PlaceDesc& place, Subgroup which) {
    if (!place.is_finite())
        throw wrong_place_error("subgroup volumes are finite-place data");
    const double lq = place.ln_q();
    switch (which) {
        case Subgroup::units:
            return lq;
        case Subgroup::one_plus_p:
            return lq / (place.q() - 1.0);
    }
    throw config_error("unknown subgroup");
}

} // namespace adelic::measures
