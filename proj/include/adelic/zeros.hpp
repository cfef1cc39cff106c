#ifndef ADELIC_ZEROS_HPP
#define ADELIC_ZEROS_HPP

#include <string>
#include <vector>

namespace adelic::global {

// Nontrivial zeta zero ordinates, strictly increasing. Source is either a
// loaded file or the built-in finder; computed entries carry a sign-change
// certificate of the Hardy Z-function of width <= 2e-9.
struct ZeroTable {
    std::vector<double> ordinates;
    enum class Source { file, computed } source = Source::computed;
    std::string path;

    std::size_t count() const { return ordinates.size(); }
};

// First `count` ordinates by scanning Z(t) sign changes with a
// density-adapted step, bisection-refined. count <= 10000.
ZeroTable find_zeros(std::size_t count, bool parallel = true);

// ASCII, one positive decimal per line, '#' comments; must be strictly
// increasing (integrity error otherwise).
ZeroTable load_zeros(const std::string& path);
void save_zeros(const ZeroTable& t, const std::string& path);

} // namespace adelic::global

#endif
