#include "lowprev/simplex_lp.hpp"

#include "lowprev/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>

namespace lowprev::lp {

namespace {

// The general program is lowered to standard form
//     maximize c.z   subject to  A z = b,  z >= 0,  b >= 0
// and solved by the two-phase simplex method with Bland's pivoting rule.
// Free variables are split into non-negative pairs, lower bounds are shifted
// out, and upper-only bounds are flipped.  Every outcome is re-verified
// exactly against the original program before it is returned.

struct VarMap {
    enum Kind { Shift, Flip, Split } kind;
    std::size_t col = 0;
    std::size_t col2 = 0;   // Split only
    Rational origin;        // Shift: lower bound; Flip: upper bound
};

struct Standard {
    std::vector<std::vector<Rational>> rows;  // m x cols (real + slack)
    std::vector<Rational> rhs;                // m, non-negative
    std::vector<Rational> cost;               // cols
    Rational offset;                          // constant folded out of the objective
    std::vector<VarMap> vars;
    std::vector<int> row_sign;                // +1 / -1 per original row
    std::size_t cols = 0;
};

Standard lower(const LinearProgram& p, int sense_sign) {
    const std::size_t n = p.variables();
    if (!p.bounds.empty() && p.bounds.size() != n)
        throw MalformedProgram("bounds list does not match the variable count");
    for (const auto& row : p.constraints)
        if (row.coeffs.size() != n) throw MalformedProgram("constraint width mismatch");

    Standard s;
    s.vars.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        Bounds bj = p.bounds.empty() ? Bounds{} : p.bounds[j];
        if (bj.lower && bj.upper)
            throw MalformedProgram("doubly bounded variables are not supported; add the upper bound as a row");
        if (bj.lower) {
            s.vars[j] = {VarMap::Shift, s.cols++, 0, *bj.lower};
        } else if (bj.upper) {
            s.vars[j] = {VarMap::Flip, s.cols++, 0, *bj.upper};
        } else {
            s.vars[j] = {VarMap::Split, s.cols, s.cols + 1, 0};
            s.cols += 2;
        }
    }
    const std::size_t n_vars_cols = s.cols;
    std::size_t n_slack = 0;
    for (const auto& row : p.constraints)
        if (row.rel != Relation::Equal) ++n_slack;
    s.cols += n_slack;

    s.cost.assign(s.cols, Rational(0));
    s.offset = 0;
    for (std::size_t j = 0; j < n; ++j) {
        Rational cj = p.objective[j] * sense_sign;
        const VarMap& vm = s.vars[j];
        switch (vm.kind) {
            case VarMap::Shift:
                s.cost[vm.col] += cj;
                s.offset += cj * vm.origin;
                break;
            case VarMap::Flip:
                s.cost[vm.col] -= cj;
                s.offset += cj * vm.origin;
                break;
            case VarMap::Split:
                s.cost[vm.col] += cj;
                s.cost[vm.col2] -= cj;
                break;
        }
    }

    std::size_t slack_at = n_vars_cols;
    for (const auto& row : p.constraints) {
        std::vector<Rational> r(s.cols, Rational(0));
        Rational rhs = row.rhs;
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& aj = row.coeffs[j];
            if (aj == 0) continue;
            const VarMap& vm = s.vars[j];
            switch (vm.kind) {
                case VarMap::Shift:
                    r[vm.col] += aj;
                    rhs -= aj * vm.origin;
                    break;
                case VarMap::Flip:
                    r[vm.col] -= aj;
                    rhs -= aj * vm.origin;
                    break;
                case VarMap::Split:
                    r[vm.col] += aj;
                    r[vm.col2] -= aj;
                    break;
            }
        }
        if (row.rel == Relation::LessEq) r[slack_at++] = 1;
        if (row.rel == Relation::GreaterEq) r[slack_at++] = -1;
        int sign = rhs < 0 ? -1 : 1;
        if (sign < 0) {
            for (auto& v : r) v = -v;
            rhs = -rhs;
        }
        s.rows.push_back(std::move(r));
        s.rhs.push_back(std::move(rhs));
        s.row_sign.push_back(sign);
    }
    return s;
}

struct CoreOutcome {
    LpStatus status = LpStatus::Infeasible;
    std::vector<Rational> z;       // Optimal: standard-form solution
    std::vector<Rational> y;       // Optimal: duals; Infeasible: Farkas multipliers
    Rational value;                // Optimal: c.z
    std::vector<Rational> origin;  // Unbounded: feasible point
    std::vector<Rational> ray;     // Unbounded: improving direction
};

class Simplex {
public:
    Simplex(const std::vector<std::vector<Rational>>& rows, const std::vector<Rational>& rhs,
            const std::vector<Rational>& cost)
        : m_(rows.size()), n0_(cost.size()), cost_(cost) {
        // Tableau columns: [real + slack | artificials | rhs].
        tab_.assign(m_, std::vector<Rational>(n0_ + m_ + 1, Rational(0)));
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < n0_; ++j) tab_[i][j] = rows[i][j];
            tab_[i][n0_ + i] = 1;
            tab_[i].back() = rhs[i];
            basis_[i] = n0_ + i;
        }
    }

    CoreOutcome run() {
        // Phase 1: maximize minus the sum of artificials.
        std::vector<Rational> phase1(n0_ + m_, Rational(0));
        for (std::size_t i = 0; i < m_; ++i) phase1[n0_ + i] = -1;
        init_objective(phase1);
        iterate(/*allow_artificials=*/true);
        if (value_ < 0) {
            CoreOutcome out;
            out.status = LpStatus::Infeasible;
            out.y = multipliers(phase1);
            return out;
        }

        // Phase 2 on the true objective; artificials may linger basic at zero
        // and are evicted by degenerate pivots before any regular pivot.
        std::vector<Rational> phase2(n0_ + m_, Rational(0));
        for (std::size_t j = 0; j < n0_; ++j) phase2[j] = cost_[j];
        init_objective(phase2);
        std::size_t unbounded_col = 0;
        if (!iterate(/*allow_artificials=*/false, &unbounded_col)) {
            CoreOutcome out;
            out.status = LpStatus::Unbounded;
            out.origin = point();
            out.ray.assign(n0_, Rational(0));
            out.ray[unbounded_col] = 1;
            for (std::size_t i = 0; i < m_; ++i)
                if (basis_[i] < n0_) out.ray[basis_[i]] = -tab_[i][unbounded_col];
            return out;
        }
        CoreOutcome out;
        out.status = LpStatus::Optimal;
        out.z = point();
        out.value = value_;
        out.y = multipliers(phase2);
        return out;
    }

private:
    void init_objective(const std::vector<Rational>& cost) {
        obj_.assign(n0_ + m_, Rational(0));
        value_ = 0;
        for (std::size_t j = 0; j < n0_ + m_; ++j) {
            Rational z = 0;
            for (std::size_t i = 0; i < m_; ++i)
                if (cost[basis_[i]] != 0) z += cost[basis_[i]] * tab_[i][j];
            obj_[j] = cost[j] - z;
        }
        for (std::size_t i = 0; i < m_; ++i) value_ += cost[basis_[i]] * tab_[i].back();
    }

    // Returns false when the objective is unbounded (entering column reported
    // through *unbounded_col).
    bool iterate(bool allow_artificials, std::size_t* unbounded_col = nullptr) {
        const std::size_t limit = allow_artificials ? n0_ + m_ : n0_;
        for (;;) {
            // Bland: smallest improving column index.
            std::size_t enter = limit;
            for (std::size_t j = 0; j < limit; ++j) {
                if (obj_[j] > 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == limit) return true;

            std::size_t leave = m_;
            if (!allow_artificials) {
                // Evict a basic artificial first; it sits at zero, so the
                // pivot is degenerate and feasibility is preserved.
                for (std::size_t i = 0; i < m_; ++i) {
                    if (basis_[i] >= n0_ && tab_[i][enter] != 0) {
                        leave = i;
                        break;
                    }
                }
            }
            if (leave == m_) {
                bool found = false;
                Rational best;
                for (std::size_t i = 0; i < m_; ++i) {
                    if (tab_[i][enter] <= 0) continue;
                    Rational ratio = tab_[i].back() / tab_[i][enter];
                    if (!found || ratio < best ||
                        (ratio == best && basis_[i] < basis_[leave])) {
                        found = true;
                        best = ratio;
                        leave = i;
                    }
                }
                if (!found) {
                    if (unbounded_col) *unbounded_col = enter;
                    return false;
                }
            }
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t row, std::size_t col) {
        Rational inv = Rational(1) / tab_[row][col];
        for (auto& v : tab_[row]) v *= inv;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == row || tab_[i][col] == 0) continue;
            Rational factor = tab_[i][col];
            for (std::size_t j = 0; j <= n0_ + m_; ++j) tab_[i][j] -= factor * tab_[row][j];
        }
        Rational factor = obj_[col];
        if (factor != 0) {
            for (std::size_t j = 0; j < n0_ + m_; ++j) obj_[j] -= factor * tab_[row][j];
            value_ += factor * tab_[row].back();
        }
        basis_[row] = col;
    }

    std::vector<Rational> point() const {
        std::vector<Rational> z(n0_, Rational(0));
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < n0_) z[basis_[i]] = tab_[i].back();
        return z;
    }

    // y = c_B B^{-1}, read off the artificial columns, which carry B^{-1}.
    std::vector<Rational> multipliers(const std::vector<Rational>& cost) const {
        std::vector<Rational> y(m_, Rational(0));
        for (std::size_t i = 0; i < m_; ++i) {
            Rational acc = 0;
            for (std::size_t r = 0; r < m_; ++r)
                if (cost[basis_[r]] != 0) acc += cost[basis_[r]] * tab_[r][n0_ + i];
            y[i] = acc;
        }
        return y;
    }

    std::size_t m_, n0_;
    std::vector<Rational> cost_;
    std::vector<std::vector<Rational>> tab_;
    std::vector<std::size_t> basis_;
    std::vector<Rational> obj_;
    Rational value_;
};

void verify_standard(const Standard& s, const CoreOutcome& out) {
    auto dot_col = [&](const std::vector<Rational>& y, std::size_t j) {
        Rational acc = 0;
        for (std::size_t i = 0; i < s.rows.size(); ++i) acc += y[i] * s.rows[i][j];
        return acc;
    };
    if (out.status == LpStatus::Optimal) {
        Rational dual_value = 0;
        for (std::size_t i = 0; i < s.rhs.size(); ++i) dual_value += out.y[i] * s.rhs[i];
        if (dual_value != out.value)
            throw std::logic_error("lp: strong duality violated");
        for (std::size_t j = 0; j < s.cols; ++j)
            if (dot_col(out.y, j) < s.cost[j])
                throw std::logic_error("lp: dual infeasibility at optimum");
    } else if (out.status == LpStatus::Infeasible) {
        Rational agg = 0;
        for (std::size_t i = 0; i < s.rhs.size(); ++i) agg += out.y[i] * s.rhs[i];
        if (agg >= 0) throw std::logic_error("lp: invalid infeasibility certificate");
        for (std::size_t j = 0; j < s.cols; ++j)
            if (dot_col(out.y, j) < 0)
                throw std::logic_error("lp: invalid infeasibility certificate");
    }
}

std::vector<Rational> map_point(const Standard& s, const std::vector<Rational>& z,
                                bool as_direction) {
    std::vector<Rational> x(s.vars.size());
    for (std::size_t j = 0; j < s.vars.size(); ++j) {
        const VarMap& vm = s.vars[j];
        switch (vm.kind) {
            case VarMap::Shift:
                x[j] = z[vm.col] + (as_direction ? Rational(0) : vm.origin);
                break;
            case VarMap::Flip:
                x[j] = (as_direction ? Rational(0) : vm.origin) - z[vm.col];
                break;
            case VarMap::Split:
                x[j] = z[vm.col] - z[vm.col2];
                break;
        }
    }
    return x;
}

Rational evaluate(const std::vector<Rational>& coeffs, const std::vector<Rational>& x) {
    Rational acc = 0;
    for (std::size_t j = 0; j < coeffs.size(); ++j) acc += coeffs[j] * x[j];
    return acc;
}

void verify_original(const LinearProgram& p, const LpOutcome& out) {
    auto check_feasible = [&](const std::vector<Rational>& x) {
        for (const auto& row : p.constraints) {
            Rational lhs = evaluate(row.coeffs, x);
            bool ok = row.rel == Relation::LessEq    ? lhs <= row.rhs
                      : row.rel == Relation::Equal   ? lhs == row.rhs
                                                     : lhs >= row.rhs;
            if (!ok) throw std::logic_error("lp: witness violates a constraint");
        }
        for (std::size_t j = 0; j < p.bounds.size(); ++j) {
            if (p.bounds[j].lower && x[j] < *p.bounds[j].lower)
                throw std::logic_error("lp: witness violates a lower bound");
            if (p.bounds[j].upper && x[j] > *p.bounds[j].upper)
                throw std::logic_error("lp: witness violates an upper bound");
        }
    };
    if (out.status == LpStatus::Optimal) {
        check_feasible(out.solution);
        if (evaluate(p.objective, out.solution) != out.optimum)
            throw std::logic_error("lp: optimum does not match its witness");
    } else if (out.status == LpStatus::Unbounded) {
        check_feasible(out.ray_origin);
        for (const auto& row : p.constraints) {
            Rational step = evaluate(row.coeffs, out.ray);
            bool ok = row.rel == Relation::LessEq    ? step <= 0
                      : row.rel == Relation::Equal   ? step == 0
                                                     : step >= 0;
            if (!ok) throw std::logic_error("lp: ray leaves the feasible region");
        }
        for (std::size_t j = 0; j < p.bounds.size(); ++j) {
            if (p.bounds[j].lower && out.ray[j] < 0)
                throw std::logic_error("lp: ray drops below a lower bound");
            if (p.bounds[j].upper && out.ray[j] > 0)
                throw std::logic_error("lp: ray climbs above an upper bound");
        }
        Rational gain = evaluate(p.objective, out.ray);
        bool improving = p.sense == Sense::Maximize ? gain > 0 : gain < 0;
        if (!improving) throw std::logic_error("lp: ray does not improve the objective");
    } else {
        // Farkas: u_i >= 0 on <= rows, u_i <= 0 on >= rows; the aggregated row
        // sum_i u_i a_i . x <= sum_i u_i b_i must fail on the whole bound box.
        Rational agg_rhs = 0;
        std::vector<Rational> agg(p.variables(), Rational(0));
        for (std::size_t i = 0; i < p.constraints.size(); ++i) {
            const auto& row = p.constraints[i];
            const Rational& u = out.farkas[i];
            if (row.rel == Relation::LessEq && u < 0)
                throw std::logic_error("lp: certificate sign error on <= row");
            if (row.rel == Relation::GreaterEq && u > 0)
                throw std::logic_error("lp: certificate sign error on >= row");
            if (u == 0) continue;
            agg_rhs += u * row.rhs;
            for (std::size_t j = 0; j < p.variables(); ++j) agg[j] += u * row.coeffs[j];
        }
        Rational box_min = 0;
        for (std::size_t j = 0; j < p.variables(); ++j) {
            Bounds bj = p.bounds.empty() ? Bounds{} : p.bounds[j];
            if (bj.lower) {
                if (agg[j] < 0) throw std::logic_error("lp: certificate unbounded below");
                box_min += agg[j] * *bj.lower;
            } else if (bj.upper) {
                if (agg[j] > 0) throw std::logic_error("lp: certificate unbounded below");
                box_min += agg[j] * *bj.upper;
            } else if (agg[j] != 0) {
                throw std::logic_error("lp: certificate depends on a free variable");
            }
        }
        if (box_min <= agg_rhs)
            throw std::logic_error("lp: certificate fails to refute the system");
    }
}

}  // namespace

void LinearProgram::add_constraint(std::vector<Rational> coeffs, Relation rel, Rational rhs) {
    constraints.push_back({std::move(coeffs), rel, std::move(rhs)});
}

void LinearProgram::set_nonnegative(std::size_t j) {
    if (bounds.empty()) bounds.resize(variables());
    bounds.at(j).lower = Rational(0);
}

LpOutcome solve(const LinearProgram& program) {
    const int sense_sign = program.sense == Sense::Maximize ? 1 : -1;
    Standard s = lower(program, sense_sign);
    CoreOutcome core = Simplex(s.rows, s.rhs, s.cost).run();
    verify_standard(s, core);

    LpOutcome out;
    out.status = core.status;
    const std::size_t m = program.constraints.size();
    if (core.status == LpStatus::Optimal) {
        out.solution = map_point(s, core.z, false);
        out.optimum = (core.value + s.offset) * sense_sign;
        out.duals.resize(m);
        for (std::size_t i = 0; i < m; ++i) out.duals[i] = core.y[i] * s.row_sign[i];
    } else if (core.status == LpStatus::Infeasible) {
        out.farkas.resize(m);
        for (std::size_t i = 0; i < m; ++i) out.farkas[i] = core.y[i] * s.row_sign[i];
    } else {
        out.ray_origin = map_point(s, core.origin, false);
        out.ray = map_point(s, core.ray, true);
    }
    verify_original(program, out);
    return out;
}

LpOutcome feasible(const LinearProgram& program) {
    LinearProgram probe = program;
    probe.objective.assign(program.variables(), Rational(0));
    probe.sense = Sense::Maximize;
    return solve(probe);
}

}  // namespace lowprev::lp
