#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "arith.hpp"
#include "errors.hpp"

namespace homvec {

enum class Sense { minimize, maximize, feasibility };
enum class Relation { le, eq, ge };

struct LpRow {
    std::vector<Rational> coefficients;
    Relation relation;
    Rational rhs;
};

/// Variables are bounded below by `lower_bounds` (all zero when empty) and
/// unbounded above. For feasibility problems the objective only fixes the
/// number of variables.
struct LpProgram {
    Sense sense = Sense::minimize;
    std::vector<Rational> objective;
    std::vector<LpRow> rows;
    std::vector<Rational> lower_bounds;

    std::size_t variable_count() const { return objective.size(); }
};

enum class LpStatus { optimal, infeasible, unbounded };

/// `duals` holds one multiplier per row; for a bounded optimum with zero
/// lower bounds, sum_i rhs_i * duals_i equals `objective`.
struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    Rational objective;
    std::vector<Rational> values;
    std::vector<Rational> duals;
};

namespace detail {

class SimplexTableau {
public:
    SimplexTableau(std::vector<std::vector<Rational>> rows, std::vector<std::size_t> basis, std::size_t columns)
        : a_(std::move(rows)), basis_(std::move(basis)), columns_(columns) {}

    std::size_t row_count() const { return a_.size(); }
    std::size_t basis(std::size_t i) const { return basis_[i]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i][j]; }
    const Rational& rhs(std::size_t i) const { return a_[i][columns_]; }

    /// Reduced-cost row for cost vector c (last entry: minus the objective).
    std::vector<Rational> reduced_costs(const std::vector<Rational>& c) const {
        std::vector<Rational> d(columns_ + 1, Rational(0));
        for (std::size_t j = 0; j < columns_; ++j) d[j] = c[j];
        for (std::size_t i = 0; i < a_.size(); ++i) {
            const Rational& cb = c[basis_[i]];
            if (cb == 0) continue;
            for (std::size_t j = 0; j <= columns_; ++j)
                if (a_[i][j] != 0) d[j] -= cb * a_[i][j];
        }
        return d;
    }

    void pivot(std::size_t r, std::size_t c, std::vector<Rational>& cost) {
        Rational p = a_[r][c];
        for (auto& x : a_[r])
            if (x != 0) x /= p;
        auto eliminate = [&](std::vector<Rational>& row) {
            Rational f = row[c];
            if (f == 0) return;
            for (std::size_t j = 0; j <= columns_; ++j)
                if (a_[r][j] != 0) row[j] -= f * a_[r][j];
        };
        for (std::size_t i = 0; i < a_.size(); ++i)
            if (i != r) eliminate(a_[i]);
        eliminate(cost);
        basis_[r] = c;
    }

    /// Bland's rule: lowest-index improving column, ties in the ratio test
    /// broken by lowest basic index. Returns false when unbounded.
    bool run(std::vector<Rational>& cost, const std::vector<bool>& may_enter) {
        while (true) {
            std::optional<std::size_t> enter;
            for (std::size_t j = 0; j < columns_; ++j)
                if (may_enter[j] && cost[j] < 0) {
                    enter = j;
                    break;
                }
            if (!enter) return true;
            std::optional<std::size_t> leave;
            Rational best;
            for (std::size_t i = 0; i < a_.size(); ++i) {
                if (a_[i][*enter] <= 0) continue;
                Rational ratio = a_[i][columns_] / a_[i][*enter];
                if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (!leave) return false;
            pivot(*leave, *enter, cost);
        }
    }

    void drop_row(std::size_t i) {
        a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
    }

private:
    std::vector<std::vector<Rational>> a_;
    std::vector<std::size_t> basis_;
    std::size_t columns_;
};

inline Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    return s;
}

inline bool row_satisfied(const LpRow& row, const std::vector<Rational>& x) {
    Rational lhs = dot(row.coefficients, x);
    switch (row.relation) {
    case Relation::le: return lhs <= row.rhs;
    case Relation::eq: return lhs == row.rhs;
    case Relation::ge: return lhs >= row.rhs;
    }
    return false;
}

}  // namespace detail

inline void validate_lp(const LpProgram& p) {
    const std::size_t n = p.variable_count();
    for (std::size_t i = 0; i < p.rows.size(); ++i)
        if (p.rows[i].coefficients.size() != n)
            throw ValidationError("LP row " + std::to_string(i) + " has " + std::to_string(p.rows[i].coefficients.size()) +
                                  " coefficients, expected " + std::to_string(n));
    if (!p.lower_bounds.empty() && p.lower_bounds.size() != n) throw ValidationError("LP lower bounds size mismatch");
}

/// Whether x satisfies every row and lower bound exactly.
inline bool lp_feasible_point(const LpProgram& p, const std::vector<Rational>& x) {
    if (x.size() != p.variable_count()) return false;
    for (std::size_t j = 0; j < x.size(); ++j)
        if (x[j] < (p.lower_bounds.empty() ? Rational(0) : p.lower_bounds[j])) return false;
    return std::all_of(p.rows.begin(), p.rows.end(), [&](const LpRow& r) { return detail::row_satisfied(r, x); });
}

/// Two-phase dense tableau simplex in exact arithmetic with Bland's rule.
inline LpSolution solve_lp(const LpProgram& p) {
    validate_lp(p);
    const std::size_t n = p.variable_count();
    const std::size_t m = p.rows.size();
    std::vector<Rational> lower = p.lower_bounds.empty() ? std::vector<Rational>(n, Rational(0)) : p.lower_bounds;

    // x = lower + x', x' >= 0; rows normalised to rhs >= 0.
    std::vector<bool> flipped(m, false);
    std::vector<Relation> rel(m);
    std::vector<std::vector<Rational>> coef(m);
    std::vector<Rational> rhs(m);
    std::size_t slack_cols = 0, art_cols = 0;
    for (std::size_t i = 0; i < m; ++i) {
        coef[i] = p.rows[i].coefficients;
        rhs[i] = p.rows[i].rhs - detail::dot(coef[i], lower);
        rel[i] = p.rows[i].relation;
        if (rhs[i] < 0) {
            flipped[i] = true;
            rhs[i] = -rhs[i];
            for (auto& c : coef[i]) c = -c;
            if (rel[i] == Relation::le) rel[i] = Relation::ge;
            else if (rel[i] == Relation::ge) rel[i] = Relation::le;
        }
        if (rel[i] != Relation::eq) ++slack_cols;
        if (rel[i] != Relation::le) ++art_cols;
    }
    const std::size_t columns = n + slack_cols + art_cols;
    std::vector<std::vector<Rational>> rows(m, std::vector<Rational>(columns + 1, Rational(0)));
    std::vector<std::size_t> basis(m);
    std::vector<std::size_t> identity_col(m);
    std::vector<bool> is_artificial(columns, false);
    std::size_t next_slack = n, next_art = n + slack_cols;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = coef[i][j];
        rows[i][columns] = rhs[i];
        if (rel[i] == Relation::le) {
            rows[i][next_slack] = 1;
            basis[i] = identity_col[i] = next_slack++;
        } else {
            if (rel[i] == Relation::ge) rows[i][next_slack++] = -1;
            rows[i][next_art] = 1;
            is_artificial[next_art] = true;
            basis[i] = identity_col[i] = next_art++;
        }
    }
    detail::SimplexTableau t(std::move(rows), std::move(basis), columns);
    std::vector<std::size_t> row_origin(m);
    for (std::size_t i = 0; i < m; ++i) row_origin[i] = i;

    LpSolution sol;
    if (art_cols > 0) {
        std::vector<Rational> c1(columns, Rational(0));
        for (std::size_t j = 0; j < columns; ++j)
            if (is_artificial[j]) c1[j] = 1;
        auto cost = t.reduced_costs(c1);
        t.run(cost, std::vector<bool>(columns, true));
        if (cost[columns] != 0) {
            sol.status = LpStatus::infeasible;
            return sol;
        }
        // Pivot zero-valued artificials out of the basis; drop redundant rows.
        for (std::size_t i = 0; i < t.row_count();) {
            if (!is_artificial[t.basis(i)]) {
                ++i;
                continue;
            }
            std::optional<std::size_t> col;
            for (std::size_t j = 0; j < columns && !col; ++j)
                if (!is_artificial[j] && t.at(i, j) != 0) col = j;
            if (col) {
                t.pivot(i, *col, cost);
                ++i;
            } else {
                t.drop_row(i);
                row_origin.erase(row_origin.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
    }

    std::vector<Rational> c2(columns, Rational(0));
    if (p.sense != Sense::feasibility)
        for (std::size_t j = 0; j < n; ++j) c2[j] = p.sense == Sense::maximize ? Rational(-p.objective[j]) : p.objective[j];
    auto cost = t.reduced_costs(c2);
    std::vector<bool> may_enter(columns);
    for (std::size_t j = 0; j < columns; ++j) may_enter[j] = !is_artificial[j];
    if (!t.run(cost, may_enter)) {
        sol.status = LpStatus::unbounded;
        return sol;
    }

    std::vector<Rational> shifted(columns, Rational(0));
    for (std::size_t i = 0; i < t.row_count(); ++i) shifted[t.basis(i)] = t.rhs(i);
    sol.values.assign(n, Rational(0));
    for (std::size_t j = 0; j < n; ++j) sol.values[j] = lower[j] + shifted[j];
    sol.status = LpStatus::optimal;
    sol.objective = p.sense == Sense::feasibility ? Rational(0) : detail::dot(p.objective, sol.values);

    sol.duals.assign(m, Rational(0));
    for (std::size_t i : row_origin) {
        Rational y = -cost[identity_col[i]];
        if (flipped[i]) y = -y;
        if (p.sense == Sense::maximize) y = -y;
        sol.duals[i] = y;
    }

    if (!lp_feasible_point(p, sol.values)) throw InvariantError("simplex returned a point violating the constraints");
    return sol;
}

/// Textbook dual of min{c.x : Ax >= b, x >= 0} or max{c.x : Ax <= b, x >= 0}.
inline LpProgram dualize(const LpProgram& p) {
    validate_lp(p);
    bool zero_lower = std::all_of(p.lower_bounds.begin(), p.lower_bounds.end(), [](const Rational& r) { return r == 0; });
    Relation want;
    if (p.sense == Sense::minimize) want = Relation::ge;
    else if (p.sense == Sense::maximize) want = Relation::le;
    else throw ValidationError("feasibility problems have no standard-form dual");
    if (!zero_lower || std::any_of(p.rows.begin(), p.rows.end(), [&](const LpRow& r) { return r.relation != want; }))
        throw ValidationError("dualize needs min/>= or max/<= standard form with zero lower bounds");
    LpProgram d;
    d.sense = p.sense == Sense::minimize ? Sense::maximize : Sense::minimize;
    Relation dual_rel = p.sense == Sense::minimize ? Relation::le : Relation::ge;
    for (const auto& r : p.rows) d.objective.push_back(r.rhs);
    for (std::size_t j = 0; j < p.variable_count(); ++j) {
        LpRow row{{}, dual_rel, p.objective[j]};
        for (const auto& r : p.rows) row.coefficients.push_back(r.coefficients[j]);
        d.rows.push_back(std::move(row));
    }
    return d;
}

/// Debug dump: "min c.x" then one "a.x {<=,=,>=} b" line per row.
inline std::string lp_to_string(const LpProgram& p) {
    auto linear = [](const std::vector<Rational>& c) {
        std::ostringstream out;
        bool first = true;
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (c[j] == 0) continue;
            if (!first) out << " + ";
            out << format_rational(c[j]) << "*x" << j;
            first = false;
        }
        if (first) out << "0";
        return out.str();
    };
    std::ostringstream out;
    out << (p.sense == Sense::minimize ? "min " : p.sense == Sense::maximize ? "max " : "feasible ") << linear(p.objective)
        << '\n';
    for (const auto& r : p.rows)
        out << linear(r.coefficients) << (r.relation == Relation::le ? " <= " : r.relation == Relation::eq ? " = " : " >= ")
            << format_rational(r.rhs) << '\n';
    return out.str();
}

}  // namespace homvec
