#pragma once

#include "confspace/errors.hpp"

namespace confspace {

enum class ArithmeticMode { Float, Exact };

/// Numerical policy shared by all rank/membership decisions.
/// Float mode counts singular values above eps_rank; Exact mode runs
/// rational Gaussian elimination and admits only rational inputs.
struct Tolerance {
    double eps_rank = 1e-9;
    double eps_norm = 1e-9;
    ArithmeticMode mode = ArithmeticMode::Float;

    static Tolerance floats(double eps_rank = 1e-9, double eps_norm = 1e-9) {
        Tolerance t{eps_rank, eps_norm, ArithmeticMode::Float};
        t.check();
        return t;
    }
    static Tolerance exact() { return Tolerance{0.0, 1e-9, ArithmeticMode::Exact}; }

    void check() const {
        if (mode == ArithmeticMode::Float && eps_rank <= 0.0)
            throw InputError("Tolerance: eps_rank must be positive in Float mode");
        if (eps_rank < 0.0 || eps_norm < 0.0)
            throw InputError("Tolerance: thresholds must be nonnegative");
    }
};

} // namespace confspace
