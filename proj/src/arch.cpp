#include "adelic/arch.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "adelic/numeric.hpp"

namespace adelic::arch {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr int kMaxHermiteDegree = 64;
} // namespace

LogProfile LogProfile::gauss(double u0, double sigma, cplx amp) {
    if (sigma <= 0.0) throw config_error("gaussian profile needs sigma > 0");
    LogProfile g;
    g.kind_ = Kind::gaussian;
    g.u0_ = u0;
    g.sigma_ = sigma;
    g.amp_ = amp;
    return g;
}

LogProfile LogProfile::sampled(double u_lo, double du,
                               std::vector<double> values) {
    if (du <= 0.0 || values.size() < 4)
        throw config_error("sampled profile needs a uniform grid with >= 4 points");
    LogProfile g;
    g.kind_ = Kind::sampled;
    g.grid_lo_ = u_lo;
    g.grid_du_ = du;
    g.values_ = std::move(values);
    return g;
}

LogProfile LogProfile::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw integrity_error("cannot open profile file: " + path);
    std::vector<double> us, vs;
    std::string line;
    while (std::getline(in, line)) {
        const auto h = line.find('#');
        if (h != std::string::npos) line.erase(h);
        std::istringstream ss(line);
        double u, v;
        if (ss >> u >> v) {
            us.push_back(u);
            vs.push_back(v);
        }
    }
    if (us.size() < 4) throw integrity_error("profile file too short");
    const double du = us[1] - us[0];
    for (std::size_t i = 1; i < us.size(); ++i)
        if (std::abs(us[i] - us[i - 1] - du) > 1e-9 * std::max(1.0, std::abs(du)))
            throw integrity_error("profile grid is not uniform");
    return sampled(us[0], du, std::move(vs));
}

cplx LogProfile::eval(double u) const {
    if (kind_ == Kind::gaussian) {
        const double t = (u - u0_) / sigma_;
        return amp_ * std::exp(-0.5 * t * t);
    }
    const double x = (u - grid_lo_) / grid_du_;
    if (x < 0.0 || x > double(values_.size() - 1)) return {};
    const auto n = values_.size();
    long long i = (long long)std::floor(x);
    if (i < 1) i = 1;
    if (i > (long long)n - 3) i = (long long)n - 3;
    const double t = x - double(i);
    // Catmull-Rom through the four surrounding samples
    const double p0 = values_[i - 1], p1 = values_[i], p2 = values_[i + 1],
                 p3 = values_[i + 2];
    const double v =
        p1 + 0.5 * t * (p2 - p0 +
                        t * (2 * p0 - 5 * p1 + 4 * p2 - p3 +
                             t * (3 * (p1 - p2) + p3 - p0)));
    return v;
}

cplx LogProfile::laplace(cplx s) const {
    if (kind_ == Kind::gaussian) {
        return amp_ * sigma_ * std::sqrt(2.0 * kPi) *
               std::exp(u0_ * s + 0.5 * sigma_ * sigma_ * s * s);
    }
    const double lo = grid_lo_, hi = grid_lo_ + grid_du_ * (values_.size() - 1);
    return quad::integrate(
        [&](double u) { return eval(u) * std::exp(s * u); }, lo, hi,
        {1e-12, 1e-12});
}

double LogProfile::support_radius(double eps) const {
    if (kind_ == Kind::gaussian) {
        const double a = std::abs(amp_);
        if (a == 0.0) return 0.0;
        return sigma_ * std::sqrt(2.0 * std::log(a / eps + 1.0)) + 1.0;
    }
    return 0.5 * grid_du_ * (values_.size() - 1);
}

double LogProfile::center() const {
    return kind_ == Kind::gaussian
               ? u0_
               : grid_lo_ + 0.5 * grid_du_ * (values_.size() - 1);
}

LogProfile LogProfile::scaled(cplx s) const {
    LogProfile g = *this;
    if (g.kind_ == Kind::gaussian) {
        g.amp_ *= s;
        return g;
    }
    if (s.imag() != 0.0) throw config_error("sampled profiles are real-valued");
    for (auto& v : g.values_) v *= s.real();
    return g;
}

LogProfile LogProfile::j_involution() const {
    if (kind_ != Kind::gaussian)
        throw support_error("J closed form only for gaussian profiles");
    // e^{-u} A exp(-(u+u0)^2/(2s^2)) = A e^{u0 + s^2/2} gauss(-u0 - s^2, s)
    const double s2 = sigma_ * sigma_;
    return gauss(-u0_ - s2, sigma_, amp_ * std::exp(u0_ + 0.5 * s2));
}

double hermite_h(int k, double x) {
    if (k < 0 || k > kMaxHermiteDegree)
        throw capacity_error("hermite degree capped at 64");
    // upward recurrence on the dy-orthonormal family, y = sqrt(2 pi) x;
    // the (2 pi)^{1/4} factor renormalizes to the dx measure
    const double y = std::sqrt(2.0 * kPi) * x;
    double prev = std::exp(-0.5 * y * y) * std::pow(kPi, -0.25);
    if (k == 0) return std::pow(2.0 * kPi, 0.25) * prev;
    double curr = std::sqrt(2.0) * y * prev;
    for (int j = 2; j <= k; ++j) {
        const double next =
            std::sqrt(2.0 / j) * y * curr - std::sqrt(double(j - 1) / j) * prev;
        prev = curr;
        curr = next;
    }
    return std::pow(2.0 * kPi, 0.25) * curr;
}

HermiteGaussian::HermiteGaussian(std::vector<cplx> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.push_back(cplx{});
    if (degree() > kMaxHermiteDegree)
        throw capacity_error("hermite degree capped at 64");
}

HermiteGaussian HermiteGaussian::basis(int k, cplx scale) {
    std::vector<cplx> c(k + 1, cplx{});
    c[k] = scale;
    return HermiteGaussian(std::move(c));
}

cplx HermiteGaussian::eval(double x) const {
    cplx s{};
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (c_[k] != cplx{}) s += c_[k] * hermite_h(int(k), x);
    return s;
}

HermiteGaussian HermiteGaussian::fourier() const {
    std::vector<cplx> c(c_);
    const cplx mi(0.0, -1.0);
    cplx f = 1.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] *= f;
        f *= mi;
    }
    return HermiteGaussian(std::move(c));
}

HermiteGaussian operator+(const HermiteGaussian& a, const HermiteGaussian& b) {
    std::vector<cplx> c(std::max(a.c_.size(), b.c_.size()), cplx{});
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
    return HermiteGaussian(std::move(c));
}

HermiteGaussian operator*(cplx s, const HermiteGaussian& a) {
    std::vector<cplx> c(a.c_);
    for (auto& x : c) x *= s;
    return HermiteGaussian(std::move(c));
}

} // namespace adelic::arch
