#ifndef ADELIC_TRACE_ENGINE_HPP
#define ADELIC_TRACE_ENGINE_HPP

#include <complex>
#include <optional>
#include <vector>

#include "adelic/arch.hpp"
#include "adelic/measures.hpp"
#include "adelic/weil_local.hpp"

namespace adelic::trace {

using cplx = std::complex<double>;

// Discretization of the idele-class line u = ln|x|.
struct UGrid {
    double U = 20.0;
    std::size_t N = 4096;

    static UGrid make(double U, std::size_t N);
    double du() const { return 2.0 * U / double(N); }
    double u(std::size_t i) const { return -U + du() * double(i); }
};

// S = {real} or {real, one finite p}; unramified sector only.
struct PlaceSet {
    std::optional<long long> p;
    static PlaceSet real_only() { return {}; }
    static PlaceSet with_prime(long long p) { return {p}; }
};

// Smoothstep cutoff: phi = 1 for u <= -a, 0 for u >= a, symmetric
// (phi(u) + phi(-u) = 1) by construction; polynomial order 7.
struct CutoffPhi {
    double a = 6.0;
    double operator()(double u) const;
};

// Dense operator on the grid; matrix[i*N+j] is the kernel value times du.
struct UGridOperator {
    UGrid grid;
    std::vector<cplx> mat;

    cplx& at(std::size_t i, std::size_t j) { return mat[i * grid.N + j]; }
    cplx at(std::size_t i, std::size_t j) const { return mat[i * grid.N + j]; }
    cplx trace() const;
    std::vector<cplx> apply(const std::vector<cplx>& v) const;
};

// kernel f(u_i - u_j) du of the integrated regular representation.
UGridOperator build_convolution_op(const UGrid& grid,
                                   const arch::LogProfile& f);

// Equivariant Fourier transform as DFT -> multiply by the product symbol
// gamma_S(1/2 - i t) -> inverse DFT. Dense realization capped at N = 2048.
UGridOperator build_F_op(const UGrid& grid, const PlaceSet& S);

// Symbol values at the FFT bin frequencies of this grid.
std::vector<cplx> f_symbol_on_grid(const UGrid& grid, const PlaceSet& S);

struct CommutatorCheck {
    double lhs = 0, rhs = 0, residual = 0;
    double swapped_lhs = 0; // tr lambda(f1)[M_phi, lambda(f0)]
};

// Numerical check of tr lambda(f0)[M_phi, lambda(f1)] = tau(-f0 * d f1):
// lhs by O(N^2) kernel sums (untwisted picture), rhs by quadrature of
// -int f0(-v) v f1(v) dv.
CommutatorCheck commutator_trace_check(const UGrid& grid,
                                       const arch::LogProfile& f0,
                                       const arch::LogProfile& f1,
                                       const CutoffPhi& phi);

struct LocalTraceCheck {
    double operator_trace = 0;
    double weil_sum = 0;
    double tau_route = 0;
    double residual = 0;     // |operator_trace - weil_sum|
    double residual_tau = 0; // |tau_route - weil_sum|
    double w_arch = 0;
    double w_finite = 0;
};

// Local trace formula on the grid. The |x|^{1/2} twist between S(C_S) and
// S(C_S)_{1/2} is applied internally (the convolution profile used is
// e^{u/2} g(u)); callers pass the untwisted profile g.
//
// lambda(f) T is assembled through the exact operator identity
//   lambda(f) T = -[M_phi, lambda(f)] + [M_phi, lambda(F f)] o F*,
// whose first term has identically vanishing diagonal. The literal
// difference lambda(f) M_phi - lambda(f) F M_phi F* is a 0 * inf form
// under truncation (and collapses to exactly zero in a periodic model,
// where F and lambda(f) commute and trace cyclicity is exact), so it is
// never formed. The commutator kernel is evaluated on a x2-padded grid
// because the F f profile decays only like e^{-|u|/2}.
LocalTraceCheck local_trace_check(const UGrid& grid, const arch::LogProfile& g,
                                  const CutoffPhi& phi, const PlaceSet& S,
                                  const weil::PVContext& pv);

// tau(F d(F* f)) = -(1/2pi) int (d/dt log symbol)(t) G(1/2 - it) dt,
// summed over the padded grid's FFT bin frequencies.
cplx tau_F_partial_route(const UGrid& grid, const PlaceSet& S,
                         const arch::LogProfile& g);

} // namespace adelic::trace

#endif
