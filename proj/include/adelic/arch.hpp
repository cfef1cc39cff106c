#ifndef ADELIC_ARCH_HPP
#define ADELIC_ARCH_HPP

#include <complex>
#include <string>
#include <vector>

#include "adelic/errors.hpp"

namespace adelic::arch {

using cplx = std::complex<double>;

// Test function on the idele-class line as a function of u = ln|x|.
// Either an exact Gaussian A exp(-(u-u0)^2 / (2 sigma^2)) or a sampled
// profile on a uniform grid (cubic interpolation, zero outside).
class LogProfile {
public:
    enum class Kind { gaussian, sampled };

    static LogProfile gauss(double u0, double sigma, cplx amp = 1.0);
    static LogProfile sampled(double u_lo, double du,
                              std::vector<double> values);
    // Two-column ASCII (u, value); the grid must be uniform.
    static LogProfile from_file(const std::string& path);
    static LogProfile zero() { return gauss(0.0, 1.0, 0.0); }

    Kind kind() const { return kind_; }
    double u0() const { return u0_; }
    double sigma() const { return sigma_; }
    cplx amplitude() const { return amp_; }

    cplx eval(double u) const;

    // G(s) = int g(u) e^{su} du; closed form for the Gaussian kind.
    cplx laplace(cplx s) const;

    // |g| < eps outside [center-r, center+r]; r for grid sizing.
    double support_radius(double eps = 1e-14) const;
    double center() const;

    LogProfile scaled(cplx s) const;
    // J g (u) = e^{-u} g(-u); Gaussian kind stays Gaussian.
    LogProfile j_involution() const;

private:
    Kind kind_;
    double u0_ = 0.0, sigma_ = 1.0;
    cplx amp_ = 1.0;
    double grid_lo_ = 0.0, grid_du_ = 1.0;
    std::vector<double> values_;
};

// Finite expansion over the L^2(R, dx)-orthonormal Hermite eigenfunctions
// of the Fourier transform (h_0 proportional to e^{-pi x^2}).
class HermiteGaussian {
public:
    explicit HermiteGaussian(std::vector<cplx> coeffs);
    static HermiteGaussian basis(int k, cplx scale = 1.0);

    const std::vector<cplx>& coeffs() const { return c_; }
    int degree() const { return int(c_.size()) - 1; }

    cplx eval(double x) const;
    // F h_k = (-i)^k h_k under the e^{-2 pi i x xi} character.
    HermiteGaussian fourier() const;

    friend HermiteGaussian operator+(const HermiteGaussian&,
                                     const HermiteGaussian&);
    friend HermiteGaussian operator*(cplx, const HermiteGaussian&);

private:
    std::vector<cplx> c_;
};

// Orthonormal Hermite eigenfunction h_k(x).
double hermite_h(int k, double x);

} // namespace adelic::arch

#endif
