#include "netkin/kernels.hpp"

#include <cmath>

#include "netkin/params.hpp"

namespace netkin {

namespace {

inline void transport_cell(const double* f1, const double* f2, double* f1_out, double* f2_out,
                           std::size_t i, std::size_t n, double ghost_f2_left,
                           double ghost_f1_right, double nu1, double nu2) {
    const double f1_up = (i + 1 < n) ? f1[i + 1] : ghost_f1_right;
    const double f2_up = (i > 0) ? f2[i - 1] : ghost_f2_left;
    f1_out[i] = f1[i] + nu1 * (f1_up - f1[i]);
    f2_out[i] = f2[i] - nu2 * (f2[i] - f2_up);
}

inline void relax_cell(const double* f1, const double* f2, double* f1_out, double* f2_out,
                       std::size_t i, double v1, double v2, double r) {
    const double u = f1[i] + f2[i];
    const double flux = u * u;
    const double inv_dv = 1.0 / (v2 - v1);
    const double m1 = (v2 * u - flux) * inv_dv;
    const double m2 = (flux - v1 * u) * inv_dv;
    const double inv = 1.0 / (1.0 + r);
    f1_out[i] = (f1[i] + r * m1) * inv;
    f2_out[i] = (f2[i] + r * m2) * inv;
}

inline void godunov_cell(const double* u, double* u_out, std::size_t i, std::size_t n,
                         double ghost_left, double ghost_right, double lambda) {
    const double uL = (i > 0) ? u[i - 1] : ghost_left;
    const double uR = (i + 1 < n) ? u[i + 1] : ghost_right;
    u_out[i] = u[i] - lambda * (godunov_flux(u[i], uR) - godunov_flux(uL, u[i]));
}

} // namespace

namespace kernels {

void transport(const double* f1, const double* f2, double* f1_out, double* f2_out,
               std::size_t n, double ghost_f2_left, double ghost_f1_right, double nu1,
               double nu2) {
#pragma omp parallel for schedule(static) if (n >= parallel_grain)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
        transport_cell(f1, f2, f1_out, f2_out, static_cast<std::size_t>(i), n, ghost_f2_left,
                       ghost_f1_right, nu1, nu2);
}

void relax(const double* f1, const double* f2, double* f1_out, double* f2_out, std::size_t n,
           double v1, double v2, double r) {
    relax_flux(f1, f2, f1_out, f2_out, n, v1, v2, r, QuadraticFlux{});
}

void godunov_sweep(const double* u, double* u_out, std::size_t n, double ghost_left,
                   double ghost_right, double lambda) {
#pragma omp parallel for schedule(static) if (n >= parallel_grain)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
        godunov_cell(u, u_out, static_cast<std::size_t>(i), n, ghost_left, ghost_right, lambda);
}

double max_abs(const double* u, std::size_t n) {
    double m = 0.0;
#pragma omp parallel for schedule(static) reduction(max : m) if (n >= parallel_grain)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
        const double a = std::fabs(u[i]);
        if (a > m) m = a;
    }
    return m;
}

} // namespace kernels

namespace reference {

void transport(const double* f1, const double* f2, double* f1_out, double* f2_out,
               std::size_t n, double ghost_f2_left, double ghost_f1_right, double nu1,
               double nu2) {
    for (std::size_t i = 0; i < n; ++i)
        transport_cell(f1, f2, f1_out, f2_out, i, n, ghost_f2_left, ghost_f1_right, nu1, nu2);
}

void relax(const double* f1, const double* f2, double* f1_out, double* f2_out, std::size_t n,
           double v1, double v2, double r) {
    for (std::size_t i = 0; i < n; ++i) relax_cell(f1, f2, f1_out, f2_out, i, v1, v2, r);
}

void godunov_sweep(const double* u, double* u_out, std::size_t n, double ghost_left,
                   double ghost_right, double lambda) {
    for (std::size_t i = 0; i < n; ++i)
        godunov_cell(u, u_out, i, n, ghost_left, ghost_right, lambda);
}

double max_abs(const double* u, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::fabs(u[i]));
    return m;
}

} // namespace reference

} // namespace netkin
