#include "adelic/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <sstream>

#include "adelic/errors.hpp"
#include "adelic/specfun.hpp"

namespace adelic::global {

namespace {

constexpr double kPi = 3.14159265358979323846;

double refine_bisect(double lo, double hi, double flo) {
    // bisection to a bracket of width < 1e-10
    for (int it = 0; it < 64 && hi - lo > 1e-10; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = specfun::hardy_z(mid);
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// zero counting via theta: N(T) ~ theta(T)/pi + 1
double expected_count(double T) {
    return specfun::rs_theta(T) / kPi + 1.0;
}

} // namespace

ZeroTable find_zeros(std::size_t count, bool parallel) {
    if (count == 0) return {};
    if (count > 10000) throw capacity_error("zero finder capped at 10^4 zeros");
    ZeroTable t;
    t.source = ZeroTable::Source::computed;
    double lo = 12.0;
    // scan windows sized by the local zero density; windows are evaluated
    // in parallel but consumed strictly in order. A window whose bracket
    // count falls short of the counting function is rescanned finer, which
    // resolves close pairs (Lehmer-type) without a global fine step.
    const double window = 24.0;
    while (t.ordinates.size() < count) {
        const double density_step =
            0.35 * 2.0 * kPi / std::log(std::max(lo, 8.0) / (2.0 * kPi) + 3.0);
        double step = std::min(0.25, density_step);
        std::vector<double> found;
        for (int attempt = 0; attempt < 3; ++attempt) {
            found.clear();
            const std::size_t nsteps = std::size_t(window / step) + 1;
            std::vector<double> vals(nsteps + 1);
            auto eval_range = [&](std::size_t a, std::size_t b) {
                for (std::size_t i = a; i < b; ++i)
                    vals[i] = specfun::hardy_z(lo + double(i) * step);
            };
            if (parallel) {
                const std::size_t half = nsteps / 2;
                auto f1 = std::async(std::launch::async, eval_range, 0, half);
                eval_range(half, nsteps + 1);
                f1.get();
            } else {
                eval_range(0, nsteps + 1);
            }
            for (std::size_t i = 0; i < nsteps; ++i) {
                if ((vals[i] < 0) != (vals[i + 1] < 0)) {
                    const double a = lo + double(i) * step;
                    found.push_back(refine_bisect(a, a + step, vals[i]));
                }
            }
            const double hi_t = lo + double(nsteps) * step;
            const double expect =
                expected_count(hi_t) - (lo > 14.0 ? expected_count(lo) : 0.0);
            if (double(found.size()) >= std::floor(expect - 0.9)) break;
            step /= 8.0; // suspected close pair; rescan finer
        }
        for (const double g : found) {
            if (t.ordinates.size() >= count) break;
            if (t.ordinates.empty() || g > t.ordinates.back())
                t.ordinates.push_back(g);
        }
        lo += window;
        if (lo > 1.2e4) throw integrity_error("zero scan ran away");
    }
    // integrity: compare against the counting function just past the last
    // ordinate (margin below the smallest gap at these heights, so no
    // neighbor can slip into the count)
    const double T = t.ordinates.back() + 0.02;
    const double expect = expected_count(T);
    if (std::abs(expect - double(t.ordinates.size())) > 1.5)
        throw integrity_error("zero count disagrees with the counting function; suspected missed zero");
    return t;
}

ZeroTable load_zeros(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw integrity_error("cannot open zeros file: " + path);
    ZeroTable t;
    t.source = ZeroTable::Source::file;
    t.path = path;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto h = line.find('#');
        if (h != std::string::npos) line.erase(h);
        std::istringstream ss(line);
        double v;
        if (!(ss >> v)) {
            if (line.find_first_not_of(" \t\r\n") != std::string::npos)
                throw integrity_error("zeros file: unparseable line " +
                                      std::to_string(lineno));
            continue;
        }
        std::string rest;
        if (ss >> rest)
            throw integrity_error("zeros file: trailing content at line " +
                                  std::to_string(lineno));
        if (v <= 0.0)
            throw integrity_error("zeros file: nonpositive ordinate at line " +
                                  std::to_string(lineno));
        if (!t.ordinates.empty() && v <= t.ordinates.back())
            throw integrity_error("zeros file: not strictly increasing at line " +
                                  std::to_string(lineno));
        t.ordinates.push_back(v);
    }
    if (t.ordinates.empty()) throw integrity_error("zeros file is empty");
    return t;
}

void save_zeros(const ZeroTable& t, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw integrity_error("cannot write zeros file: " + path);
    out << "# nontrivial zeta zero ordinates\n";
    out.precision(12);
    out << std::fixed;
    for (const double g : t.ordinates) out << g << "\n";
}

} // namespace adelic::global
