#pragma once

#include <optional>
#include <string>

namespace netkin {

/// Solution branches of the half-space layer ODE  a u' = u^2 - C  on [0, inf)
/// with a > 0, C >= 0.
enum class LayerBranch {
    UnstableFixpoint, ///< u == sqrt(C)
    Tanh,             ///< |u0| < sqrt(C), decays to -sqrt(C)
    Coth,             ///< u0 < -sqrt(C), decays to -sqrt(C)
    ZeroC,            ///< C == 0, u0 <= 0, algebraic decay to 0
    Divergent         ///< u0 > sqrt(C) (or u0 > 0 when C == 0), finite-x blowup
};

std::string to_string(LayerBranch b);

struct LayerSolution {
    double C = 0.0;
    double u0 = 0.0;
    double a = 1.0;
    LayerBranch branch = LayerBranch::ZeroC;
    /// Limit as x -> inf; absent for divergent layers.
    std::optional<double> asymptotic;
    /// Location of the blowup for divergent layers.
    std::optional<double> blowup_x;
    /// Integration constant of the closed form (infinite for the constant
    /// solutions snapped onto a fixpoint).
    double c2 = 0.0;
};

/// Classify the layer with foot value u(0) = u0. Rejects C < 0 and a <= 0.
/// Feet within 1e-12 (relative) of +-sqrt(C) snap to the constant solutions.
LayerSolution classify_layer(double C, double u0, double a);

/// Closed-form layer value at x >= 0; rejects evaluation at or beyond the
/// blowup of a divergent layer.
double eval_layer(const LayerSolution& sol, double x);

/// Analytic derivative of the closed form, for residual checks.
double eval_layer_derivative(const LayerSolution& sol, double x);

/// Flux constant of the ingoing layer at a left boundary: solves
/// f2 = (C - v1 sqrt(C)) / (v2 - v1) with v1 = -v, v2 = v for C > 0.
/// Requires f2_in > 0 and v > 0.
double solve_C_ingoing(double f2_in, double v);

/// Layers at a right boundary obey -a u' = u^2 - C; they are the image of
/// left layers under u -> -u. Value at distance x into the domain of the
/// right layer with foot u0.
double right_layer_value(double C, double u0, double a, double x);

} // namespace netkin
