#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

namespace fleetcap {

enum class Relation { LessEqual, GreaterEqual, Equal };

struct Constraint {
    std::vector<double> coeffs;
    Relation relation = Relation::LessEqual;
    double rhs = 0;
};

struct VariableBounds {
    double lower = 0.0;
    std::optional<double> upper;
};

/// A small dense LP: maximize objective . x subject to the constraints and
/// per-variable bounds (default x >= 0).
struct LinearProgram {
    std::vector<double> objective;          // maximized
    std::vector<Constraint> constraints;
    std::vector<VariableBounds> bounds;     // empty = all {0, +inf}
};

enum class LpStatus { Optimal, Infeasible, Unbounded, Breakdown };

struct LpSolution {
    LpStatus status = LpStatus::Breakdown;
    double objective_value = 0;
    std::vector<double> primal;  // one entry per variable
    std::vector<double> dual;    // one entry per constraint, original orientation
};

/// Two-phase primal simplex on a dense tableau. Entering variable by
/// Dantzig's rule with lowest-index tie-breaking; after `stall_threshold`
/// consecutive degenerate pivots the solver switches to Bland's rule, which
/// guarantees termination. Optimal solutions are certified: primal
/// feasibility within feas_tol (scaled) and relative duality gap within
/// gap_tol, otherwise the status is Breakdown rather than a silent wrong
/// answer.
class SimplexSolver {
public:
    struct Config {
        double feas_tol = 1e-9;
        double gap_tol = 1e-8;
        int stall_threshold = 50;
        int max_iterations = 50000;
        std::ostream* trace = nullptr;  // optional tableau iteration dump
    };

    SimplexSolver() = default;
    explicit SimplexSolver(Config config) : config_(config) {}

    LpSolution solve(const LinearProgram& lp) const;

private:
    Config config_;
};

} // namespace fleetcap
