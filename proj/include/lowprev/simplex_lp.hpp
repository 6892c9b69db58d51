#pragma once

#include "lowprev/rational.hpp"

#include <optional>
#include <vector>

namespace lowprev::lp {

enum class Relation { LessEq, Equal, GreaterEq };
enum class Sense { Maximize, Minimize };

struct Constraint {
    std::vector<Rational> coeffs;
    Relation rel = Relation::LessEq;
    Rational rhs;
};

struct Bounds {
    std::optional<Rational> lower;
    std::optional<Rational> upper;
};

/// A dense linear program over exact rationals.  Variables are free unless
/// bounds are given.  Solved by the simplex method with Bland's pivoting
/// rule, so termination is guaranteed; all arithmetic is exact.
struct LinearProgram {
    Sense sense = Sense::Maximize;
    std::vector<Rational> objective;
    std::vector<Constraint> constraints;
    std::vector<Bounds> bounds;  // empty, or one entry per variable

    std::size_t variables() const { return objective.size(); }
    void add_constraint(std::vector<Rational> coeffs, Relation rel, Rational rhs);
    /// Marks variable j as x_j >= 0.
    void set_nonnegative(std::size_t j);
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpOutcome {
    LpStatus status = LpStatus::Infeasible;
    Rational optimum;                // when Optimal
    std::vector<Rational> solution;  // when Optimal: values of the original variables
    /// When Optimal: one multiplier per constraint row; the strong-duality
    /// identity against these is asserted internally before returning.
    std::vector<Rational> duals;
    /// When Infeasible: one multiplier per constraint row certifying that no
    /// point satisfies all constraints and bounds (Farkas certificate,
    /// verified internally).
    std::vector<Rational> farkas;
    /// When Unbounded: a feasible point and an improving ray.
    std::vector<Rational> ray_origin;
    std::vector<Rational> ray;
};

/// Solve the program exactly.  Throws MalformedProgram on shape errors.
LpOutcome solve(const LinearProgram& program);

/// Feasibility of the constraint system (zero objective).
LpOutcome feasible(const LinearProgram& program);

}  // namespace lowprev::lp
