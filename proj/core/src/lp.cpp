#include "fleetcap/lp.hpp"
#include "fleetcap/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>
#include <vector>

namespace fleetcap {

namespace {

constexpr double kPivotTol = 1e-11;

// Working representation: maximize c.x over rows A x (rel) b with x >= 0,
// all rhs made non-negative so every row starts with an identity column
// (slack for <=, artificial for >= and =).
struct Tableau {
    int n_struct = 0;            // structural variables
    int n_cols = 0;              // struct + slack/surplus + artificial
    std::vector<std::vector<double>> rows;
    std::vector<double> rhs;
    std::vector<int> basis;      // basic column per row
    std::vector<int> identity_col;  // initial identity column per row
    std::vector<bool> artificial;   // per column
    std::vector<bool> negated;      // per row: original row was multiplied by -1
};

void pivot(Tableau& t, int prow, int pcol) {
    auto& row = t.rows[prow];
    double p = row[pcol];
    for (double& v : row) v /= p;
    t.rhs[prow] /= p;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        if (static_cast<int>(i) == prow) continue;
        double f = t.rows[i][pcol];
        if (f == 0.0) continue;
        for (int j = 0; j < t.n_cols; ++j) t.rows[i][j] -= f * row[j];
        t.rows[i][pcol] = 0.0;  // kill roundoff in the pivot column
        t.rhs[i] -= f * t.rhs[prow];
    }
    t.basis[prow] = pcol;
}

struct RunResult {
    enum { kOptimal, kUnbounded, kIterLimit } outcome = kOptimal;
};

// Maximize cost.x over the current tableau. `allowed` masks columns that may
// enter the basis.
RunResult run_simplex(Tableau& t, const std::vector<double>& cost,
                      const std::vector<bool>& allowed,
                      const SimplexSolver::Config& cfg) {
    const int m = static_cast<int>(t.rows.size());
    int stall = 0;
    bool bland = false;
    for (int iter = 0; iter < cfg.max_iterations; ++iter) {
        // reduced costs r_j = c_j - sum_i c_basis[i] * T[i][j]
        std::vector<double> basis_cost(m);
        for (int i = 0; i < m; ++i) basis_cost[i] = cost[t.basis[i]];
        int entering = -1;
        double best = 0;
        for (int j = 0; j < t.n_cols; ++j) {
            if (!allowed[j]) continue;
            double z = 0;
            for (int i = 0; i < m; ++i) z += basis_cost[i] * t.rows[i][j];
            double r = cost[j] - z;
            if (r > 1e-10) {
                if (bland) { entering = j; break; }
                if (r > best) { best = r; entering = j; }
            }
        }
        if (entering < 0) return {RunResult::kOptimal};

        int leaving = -1;
        double min_ratio = std::numeric_limits<double>::infinity();
        for (int i = 0; i < m; ++i) {
            double a = t.rows[i][entering];
            if (a > kPivotTol) {
                double ratio = t.rhs[i] / a;
                if (ratio < min_ratio - 1e-12 ||
                    (ratio < min_ratio + 1e-12 && (leaving < 0 || t.basis[i] < t.basis[leaving]))) {
                    min_ratio = ratio;
                    leaving = i;
                }
            }
        }
        if (leaving < 0) return {RunResult::kUnbounded};

        if (min_ratio < 1e-12) {
            if (++stall > cfg.stall_threshold) bland = true;
        } else {
            stall = 0;
        }
        if (cfg.trace) {
            *cfg.trace << "iter " << iter << ": col " << entering << " enters, row "
                       << leaving << " leaves (ratio " << min_ratio << ")\n";
        }
        pivot(t, leaving, entering);
    }
    return {RunResult::kIterLimit};
}

} // namespace

LpSolution SimplexSolver::solve(const LinearProgram& lp) const {
    const int n = static_cast<int>(lp.objective.size());
    const int m = static_cast<int>(lp.constraints.size());
    for (const auto& c : lp.constraints) {
        if (static_cast<int>(c.coeffs.size()) != n) {
            std::ostringstream msg;
            msg << "constraint width " << c.coeffs.size() << " does not match objective width " << n;
            throw DataError(msg.str());
        }
        if (!std::isfinite(c.rhs)) throw DataError("non-finite constraint rhs");
        for (double v : c.coeffs)
            if (std::isnan(v)) throw DataError("NaN constraint coefficient");
    }
    if (!lp.bounds.empty() && static_cast<int>(lp.bounds.size()) != n)
        throw DataError("bounds size does not match variable count");
    for (double v : lp.objective)
        if (!std::isfinite(v)) throw DataError("non-finite objective coefficient");

    // Shift lower bounds to zero (x = lo + x') and turn upper bounds into
    // extra <= rows over the shifted variables.
    std::vector<double> lower(n, 0.0);
    std::vector<Constraint> rows(lp.constraints);
    if (!lp.bounds.empty()) {
        for (int j = 0; j < n; ++j) {
            if (!std::isfinite(lp.bounds[j].lower))
                throw DataError("variable lower bound must be finite");
            lower[j] = lp.bounds[j].lower;
        }
        for (auto& r : rows) {
            double shift = 0;
            for (int j = 0; j < n; ++j) shift += r.coeffs[j] * lower[j];
            r.rhs -= shift;
        }
        for (int j = 0; j < n; ++j) {
            if (lp.bounds[j].upper) {
                Constraint ub;
                ub.coeffs.assign(n, 0.0);
                ub.coeffs[j] = 1.0;
                ub.relation = Relation::LessEqual;
                ub.rhs = *lp.bounds[j].upper - lower[j];
                if (ub.rhs < 0) return {LpStatus::Infeasible, 0, {}, {}};
                rows.push_back(std::move(ub));
            }
        }
    }
    const int m_all = static_cast<int>(rows.size());

    Tableau t;
    t.n_struct = n;
    t.negated.assign(m_all, false);
    std::vector<Relation> rel(m_all);
    for (int i = 0; i < m_all; ++i) {
        rel[i] = rows[i].relation;
        if (rows[i].rhs < 0) {
            for (double& v : rows[i].coeffs) v = -v;
            rows[i].rhs = -rows[i].rhs;
            t.negated[i] = true;
            if (rel[i] == Relation::LessEqual) rel[i] = Relation::GreaterEqual;
            else if (rel[i] == Relation::GreaterEqual) rel[i] = Relation::LessEqual;
        }
    }
    int n_extra = 0;  // slack + surplus
    int n_art = 0;
    for (int i = 0; i < m_all; ++i) {
        if (rel[i] == Relation::LessEqual) n_extra += 1;
        else if (rel[i] == Relation::GreaterEqual) { n_extra += 1; n_art += 1; }
        else n_art += 1;
    }
    t.n_cols = n + n_extra + n_art;
    t.rows.assign(m_all, std::vector<double>(t.n_cols, 0.0));
    t.rhs.resize(m_all);
    t.basis.resize(m_all);
    t.identity_col.resize(m_all);
    t.artificial.assign(t.n_cols, false);

    int extra_at = n;
    int art_at = n + n_extra;
    for (int i = 0; i < m_all; ++i) {
        for (int j = 0; j < n; ++j) t.rows[i][j] = rows[i].coeffs[j];
        t.rhs[i] = rows[i].rhs;
        if (rel[i] == Relation::LessEqual) {
            t.rows[i][extra_at] = 1.0;
            t.basis[i] = extra_at;
            t.identity_col[i] = extra_at;
            ++extra_at;
        } else if (rel[i] == Relation::GreaterEqual) {
            t.rows[i][extra_at] = -1.0;
            ++extra_at;
            t.rows[i][art_at] = 1.0;
            t.artificial[art_at] = true;
            t.basis[i] = art_at;
            t.identity_col[i] = art_at;
            ++art_at;
        } else {
            t.rows[i][art_at] = 1.0;
            t.artificial[art_at] = true;
            t.basis[i] = art_at;
            t.identity_col[i] = art_at;
            ++art_at;
        }
    }

    double rhs_scale = 1.0;
    for (double b : t.rhs) rhs_scale = std::max(rhs_scale, std::abs(b));

    // Phase 1: drive artificials to zero.
    if (n_art > 0) {
        std::vector<double> cost(t.n_cols, 0.0);
        for (int j = 0; j < t.n_cols; ++j)
            if (t.artificial[j]) cost[j] = -1.0;
        std::vector<bool> allowed(t.n_cols, true);
        auto res = run_simplex(t, cost, allowed, config_);
        if (res.outcome == RunResult::kIterLimit) return {LpStatus::Breakdown, 0, {}, {}};
        double art_sum = 0;
        for (int i = 0; i < m_all; ++i)
            if (t.artificial[t.basis[i]]) art_sum += t.rhs[i];
        if (art_sum > config_.feas_tol * rhs_scale) return {LpStatus::Infeasible, 0, {}, {}};
        // Pivot basic artificials (at zero level) out where possible.
        for (int i = 0; i < m_all; ++i) {
            if (!t.artificial[t.basis[i]]) continue;
            for (int j = 0; j < n + n_extra; ++j) {
                if (std::abs(t.rows[i][j]) > 1e-8) {
                    pivot(t, i, j);
                    break;
                }
            }
        }
    }

    // Phase 2.
    std::vector<double> cost(t.n_cols, 0.0);
    for (int j = 0; j < n; ++j) cost[j] = lp.objective[j];
    std::vector<bool> allowed(t.n_cols, true);
    for (int j = 0; j < t.n_cols; ++j)
        if (t.artificial[j]) allowed[j] = false;
    auto res = run_simplex(t, cost, allowed, config_);
    if (res.outcome == RunResult::kUnbounded) return {LpStatus::Unbounded, 0, {}, {}};
    if (res.outcome == RunResult::kIterLimit) return {LpStatus::Breakdown, 0, {}, {}};

    LpSolution sol;
    sol.primal.assign(n, 0.0);
    for (int i = 0; i < m_all; ++i)
        if (t.basis[i] < n) sol.primal[t.basis[i]] = t.rhs[i];
    for (int j = 0; j < n; ++j) sol.primal[j] += lower[j];

    sol.objective_value = 0;
    for (int j = 0; j < n; ++j) sol.objective_value += lp.objective[j] * sol.primal[j];

    // Duals from the identity columns: y_i = sum_k c_basis[k] T[k][id_i].
    std::vector<double> y(m_all, 0.0);
    for (int i = 0; i < m_all; ++i) {
        double v = 0;
        for (int k = 0; k < m_all; ++k) v += cost[t.basis[k]] * t.rows[k][t.identity_col[i]];
        y[i] = v;
    }

    // Certification: primal feasibility on the original program...
    for (int i = 0; i < m; ++i) {
        const auto& c = lp.constraints[i];
        double lhs = 0, scale = 1.0 + std::abs(c.rhs);
        for (int j = 0; j < n; ++j) {
            lhs += c.coeffs[j] * sol.primal[j];
            scale += std::abs(c.coeffs[j] * sol.primal[j]);
        }
        double viol = 0;
        if (c.relation == Relation::LessEqual) viol = lhs - c.rhs;
        else if (c.relation == Relation::GreaterEqual) viol = c.rhs - lhs;
        else viol = std::abs(lhs - c.rhs);
        if (viol > config_.feas_tol * scale) return {LpStatus::Breakdown, 0, {}, {}};
    }
    for (int j = 0; j < n; ++j) {
        double lo = lower[j];
        double hi = lp.bounds.empty() || !lp.bounds[j].upper
                        ? std::numeric_limits<double>::infinity()
                        : *lp.bounds[j].upper;
        double scale = 1.0 + std::abs(sol.primal[j]);
        if (sol.primal[j] < lo - config_.feas_tol * scale ||
            sol.primal[j] > hi + config_.feas_tol * scale)
            return {LpStatus::Breakdown, 0, {}, {}};
    }
    // ...and duality gap on the standardized rows (objective shift from the
    // lower-bound substitution cancels on both sides).
    double dual_obj = 0;
    for (int i = 0; i < m_all; ++i) dual_obj += y[i] * rows[i].rhs;
    double shifted_obj = sol.objective_value;
    for (int j = 0; j < n; ++j) shifted_obj -= lp.objective[j] * lower[j];
    double gap = std::abs(shifted_obj - dual_obj) / std::max(1.0, std::abs(shifted_obj));
    if (gap > config_.gap_tol) return {LpStatus::Breakdown, 0, {}, {}};

    // Report duals for the caller's constraints in their original orientation.
    sol.dual.resize(m);
    for (int i = 0; i < m; ++i) sol.dual[i] = t.negated[i] ? -y[i] : y[i];
    sol.status = LpStatus::Optimal;
    return sol;
}

} // namespace fleetcap
