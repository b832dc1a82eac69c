#pragma once

#include <utility>

#include "netkin/params.hpp"

namespace netkin {

/// Equilibrium (Maxwellian) of the relaxation source for state u:
/// M1 = (v2 u - F(u)) / (v2 - v1), M2 = (F(u) - v1 u) / (v2 - v1),
/// so that M1 + M2 = u and v1 M1 + v2 M2 = F(u).
template <class Flux = QuadraticFlux>
inline std::pair<double, double> equilibrium(double u, const KineticParams& p, Flux F = {}) {
    const double inv_dv = 1.0 / (p.v2 - p.v1);
    const double flux = F(u);
    return {(p.v2 * u - flux) * inv_dv, (flux - p.v1 * u) * inv_dv};
}

/// Moments (u, uhat) of a kinetic pair.
inline std::pair<double, double> moments(double f1, double f2, const KineticParams& p) {
    return {f1 + f2, p.v1 * f1 + p.v2 * f2};
}

/// Inverse of moments: the kinetic pair realizing (u, uhat).
inline std::pair<double, double> kinetic_from_moments(double u, double uhat,
                                                      const KineticParams& p) {
    const double inv_dv = 1.0 / (p.v2 - p.v1);
    return {(p.v2 * u - uhat) * inv_dv, (uhat - p.v1 * u) * inv_dv};
}

} // namespace netkin
