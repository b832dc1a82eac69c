#pragma once

#include <cmath>

namespace netkin {

/// Kinetic transport speeds and relaxation time of the two-velocity model.
/// v1 < 0 < v2 is required everywhere; the junction conditions additionally
/// need symmetric speeds v2 = -v1.
struct KineticParams {
    double v1 = -2.0;
    double v2 = 2.0;
    double epsilon = 5e-4;

    /// Layer coefficient a = -v1*v2 > 0.
    double layer_a() const { return -v1 * v2; }

    bool speeds_valid() const { return v1 < 0.0 && v2 > 0.0 && epsilon > 0.0; }

    bool symmetric_speeds(double tol = 0.0) const {
        return std::abs(v1 + v2) <= tol * std::max(std::abs(v1), v2);
    }
};

/// Burgers flux F(u) = u^2; the flux the coupling tables are derived for.
struct QuadraticFlux {
    double operator()(double u) const { return u * u; }
    double derivative(double u) const { return 2.0 * u; }
};

} // namespace netkin
