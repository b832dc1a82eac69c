#include "netkin/layer.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace netkin {

namespace {

constexpr double kSnapTol = 1e-12;

double artanh(double y) { return 0.5 * std::log((1.0 + y) / (1.0 - y)); }
double arcoth(double y) { return 0.5 * std::log((y + 1.0) / (y - 1.0)); }

} // namespace

std::string to_string(LayerBranch b) {
    switch (b) {
        case LayerBranch::UnstableFixpoint: return "unstable-fixpoint";
        case LayerBranch::Tanh: return "tanh-branch";
        case LayerBranch::Coth: return "coth-branch";
        case LayerBranch::ZeroC: return "zero-C-branch";
        case LayerBranch::Divergent: return "divergent";
    }
    return "?";
}

LayerSolution classify_layer(double C, double u0, double a) {
    if (!(a > 0.0)) throw std::invalid_argument("classify_layer: a must be > 0");
    if (C < 0.0) throw std::invalid_argument("classify_layer: C must be >= 0");

    LayerSolution sol;
    sol.C = C;
    sol.u0 = u0;
    sol.a = a;

    if (C == 0.0) {
        if (u0 > 0.0) {
            sol.branch = LayerBranch::Divergent;
            sol.c2 = -a / u0;
            sol.blowup_x = a / u0;
        } else {
            sol.branch = LayerBranch::ZeroC;
            sol.asymptotic = 0.0;
            sol.c2 = u0 == 0.0 ? std::numeric_limits<double>::infinity() : -a / u0;
        }
        return sol;
    }

    const double s = std::sqrt(C);
    const double r = u0 / s;
    if (std::abs(r - 1.0) < kSnapTol) {
        sol.branch = LayerBranch::UnstableFixpoint;
        sol.asymptotic = s;
        sol.c2 = std::numeric_limits<double>::infinity();
    } else if (std::abs(r + 1.0) < kSnapTol) {
        // Constant stable solution, the tanh branch at infinite shift.
        sol.branch = LayerBranch::Tanh;
        sol.asymptotic = -s;
        sol.c2 = std::numeric_limits<double>::infinity();
    } else if (std::abs(r) < 1.0) {
        sol.branch = LayerBranch::Tanh;
        sol.asymptotic = -s;
        sol.c2 = -(a / s) * artanh(r);
    } else if (r < -1.0) {
        sol.branch = LayerBranch::Coth;
        sol.asymptotic = -s;
        sol.c2 = -(a / s) * arcoth(r);
    } else {
        sol.branch = LayerBranch::Divergent;
        sol.c2 = -(a / s) * arcoth(r);
        sol.blowup_x = -sol.c2;
    }
    return sol;
}

double eval_layer(const LayerSolution& sol, double x) {
    if (x < 0.0) throw std::domain_error("eval_layer: x must be >= 0");
    if (sol.branch == LayerBranch::Divergent && x >= *sol.blowup_x)
        throw std::domain_error("eval_layer: x beyond blowup");

    if (!std::isfinite(sol.c2)) {
        // Constant solutions (fixpoints, including the trivial zero layer).
        if (sol.branch == LayerBranch::UnstableFixpoint) return std::sqrt(sol.C);
        if (sol.branch == LayerBranch::Tanh) return -std::sqrt(sol.C);
        return 0.0;
    }

    if (sol.C == 0.0) return -sol.a / (x + sol.c2);

    const double s = std::sqrt(sol.C);
    const double arg = -s * (x + sol.c2) / sol.a;
    if (sol.branch == LayerBranch::Tanh) return s * std::tanh(arg);
    return s / std::tanh(arg); // coth, both convergent and divergent side
}

double eval_layer_derivative(const LayerSolution& sol, double x) {
    if (!std::isfinite(sol.c2)) return 0.0;
    if (sol.C == 0.0) {
        const double d = x + sol.c2;
        return sol.a / (d * d);
    }
    const double s = std::sqrt(sol.C);
    const double arg = -s * (x + sol.c2) / sol.a;
    const double t = std::tanh(arg);
    if (sol.branch == LayerBranch::Tanh) return -(sol.C / sol.a) * (1.0 - t * t);
    return -(sol.C / sol.a) * (1.0 - 1.0 / (t * t));
}

double solve_C_ingoing(double f2_in, double v) {
    if (!(v > 0.0)) throw std::invalid_argument("solve_C_ingoing: v must be > 0");
    if (!(f2_in > 0.0)) throw std::invalid_argument("solve_C_ingoing: f2 must be > 0");
    const double root = 0.5 * (-v + std::sqrt(v * v + 8.0 * v * f2_in));
    return root * root;
}

double right_layer_value(double C, double u0, double a, double x) {
    return -eval_layer(classify_layer(C, -u0, a), x);
}

} // namespace netkin
