#pragma once

#include <cstddef>

namespace netkin {

/// Godunov flux of F(u) = u^2: the extremum of F between the states, with
/// the sonic point at u = 0.
inline double godunov_flux(double uL, double uR) {
    if (uL >= uR) {
        const double a = uL * uL, b = uR * uR;
        return a > b ? a : b;
    }
    if (uL > 0.0) return uL * uL;
    if (uR < 0.0) return uR * uR;
    return 0.0;
}

/// Cell-sweep kernels. The netkin::kernels versions run the loops through
/// OpenMP when the array is large enough to pay for it; netkin::reference
/// holds plain serial loops with identical element arithmetic, kept as the
/// comparison baseline for tests and benchmarks. Both read the old state and
/// write a separate output array, so results are independent of traversal
/// order (parallel and serial outputs are bitwise identical).
namespace kernels {

/// Loop length above which the parallel versions spawn threads.
inline constexpr std::size_t parallel_grain = std::size_t{1} << 15;

/// First-order upwind transport of (f1, f2) with speeds v1 < 0 < v2.
/// nu1 = |v1| dt/dx, nu2 = v2 dt/dx; ghost values supply the upwind
/// neighbors at the ends (f2 at the left end, f1 at the right end).
void transport(const double* f1, const double* f2, double* f1_out, double* f2_out,
               std::size_t n, double ghost_f2_left, double ghost_f1_right, double nu1,
               double nu2);

/// Implicit-Euler relaxation toward the local equilibrium of F(u) = u^2.
/// u = f1 + f2 is invariant under the source, which makes the update exact:
/// f <- (f + r M(u)) / (1 + r) with r = dt/epsilon.
void relax(const double* f1, const double* f2, double* f1_out, double* f2_out, std::size_t n,
           double v1, double v2, double r);

/// Relaxation toward the equilibrium of an arbitrary flux law. The transport
/// part of the solver is flux-agnostic, so swapping F here is all it takes to
/// relax toward a different conservation law; the junction tables remain
/// specific to F(u) = u^2.
template <class Flux>
void relax_flux(const double* f1, const double* f2, double* f1_out, double* f2_out,
                std::size_t n, double v1, double v2, double r, Flux F) {
    const double inv_dv = 1.0 / (v2 - v1);
    const double inv = 1.0 / (1.0 + r);
#pragma omp parallel for schedule(static) if (n >= parallel_grain)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
        const double u = f1[i] + f2[i];
        const double flux = F(u);
        const double m1 = (v2 * u - flux) * inv_dv;
        const double m2 = (flux - v1 * u) * inv_dv;
        f1_out[i] = (f1[i] + r * m1) * inv;
        f2_out[i] = (f2[i] + r * m2) * inv;
    }
}

/// Conservative Godunov sweep for the Burgers equation, lambda = dt/dx.
void godunov_sweep(const double* u, double* u_out, std::size_t n, double ghost_left,
                   double ghost_right, double lambda);

double max_abs(const double* u, std::size_t n);

} // namespace kernels

namespace reference {

void transport(const double* f1, const double* f2, double* f1_out, double* f2_out,
               std::size_t n, double ghost_f2_left, double ghost_f1_right, double nu1,
               double nu2);

void relax(const double* f1, const double* f2, double* f1_out, double* f2_out, std::size_t n,
           double v1, double v2, double r);

void godunov_sweep(const double* u, double* u_out, std::size_t n, double ghost_left,
                   double ghost_right, double lambda);

double max_abs(const double* u, std::size_t n);

} // namespace reference

/// Compensated (Kahan) accumulator; keeps conservation checks meaningful at
/// the 1e-12 level over thousands of cells.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

} // namespace netkin
