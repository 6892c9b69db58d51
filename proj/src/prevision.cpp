#include "lowprev/prevision.hpp"

#include "lowprev/errors.hpp"
#include "lowprev/simplex_lp.hpp"

#include <algorithm>
#include <stdexcept>

namespace lowprev {

namespace {

// Feasible masses of the assessment: q >= 0, sum q = 1, q.f_k >= p_k.
lp::LinearProgram mass_polytope(const RawAssessment& a) {
    lp::LinearProgram program;
    program.objective.assign(a.domain, Rational(0));
    program.bounds.resize(a.domain);
    for (std::size_t x = 0; x < a.domain; ++x) program.bounds[x].lower = Rational(0);
    program.add_constraint(std::vector<Rational>(a.domain, Rational(1)), lp::Relation::Equal,
                           Rational(1));
    for (const auto& [values, price] : a.items)
        program.add_constraint(values, lp::Relation::GreaterEq, price);
    return program;
}

void check_item_width(const RawAssessment& a) {
    for (const auto& [values, price] : a.items)
        if (values.size() != a.domain)
            throw ParseError("assessment item does not match the domain size");
}

}  // namespace

AslResult raw_avoids_sure_loss(const RawAssessment& a) {
    check_item_width(a);
    AslResult result;
    lp::LpOutcome outcome = lp::feasible(mass_polytope(a));
    if (outcome.status == lp::LpStatus::Optimal) {
        result.avoids = true;
        result.mass = outcome.solution;
        return result;
    }
    // Farkas multipliers on the >= rows are <= 0; their negations are the
    // sure-loss combination.  Normalize so the largest multiplier is one.
    result.avoids = false;
    result.lambda.resize(a.items.size());
    Rational largest = 0;
    for (std::size_t k = 0; k < a.items.size(); ++k) {
        result.lambda[k] = -outcome.farkas[k + 1];
        largest = std::max(largest, result.lambda[k]);
    }
    if (largest == 0) throw std::logic_error("sure-loss certificate degenerate");
    for (auto& l : result.lambda) l /= largest;
    // sup_x sum_k lambda_k [f_k(x) - p_k] must be negative.
    for (std::size_t x = 0; x < a.domain; ++x) {
        Rational acc = 0;
        for (std::size_t k = 0; k < a.items.size(); ++k)
            acc += result.lambda[k] * (a.items[k].first[x] - a.items[k].second);
        if (acc >= 0) throw std::logic_error("sure-loss certificate invalid");
    }
    return result;
}

Rational raw_natural_extension(const RawAssessment& a, const std::vector<Rational>& f) {
    check_item_width(a);
    if (f.size() != a.domain) throw ParseError("gamble does not match the domain size");
    lp::LinearProgram program = mass_polytope(a);
    program.objective = f;
    program.sense = lp::Sense::Minimize;
    lp::LpOutcome outcome = lp::solve(program);
    if (outcome.status == lp::LpStatus::Infeasible)
        throw SureLoss("the assessment incurs sure loss");
    if (outcome.status != lp::LpStatus::Optimal)
        throw std::logic_error("mass polytope cannot be unbounded");
    return outcome.optimum;
}

Rational raw_natural_extension_primal(const RawAssessment& a, const std::vector<Rational>& f) {
    check_item_width(a);
    if (f.size() != a.domain) throw ParseError("gamble does not match the domain size");
    // Variables: t free, then one lambda_k >= 0 per item.
    lp::LinearProgram program;
    const std::size_t k_items = a.items.size();
    program.objective.assign(1 + k_items, Rational(0));
    program.objective[0] = 1;
    program.sense = lp::Sense::Maximize;
    program.bounds.resize(1 + k_items);
    for (std::size_t k = 0; k < k_items; ++k) program.bounds[1 + k].lower = Rational(0);
    for (std::size_t x = 0; x < a.domain; ++x) {
        std::vector<Rational> row(1 + k_items, Rational(0));
        row[0] = 1;
        for (std::size_t k = 0; k < k_items; ++k)
            row[1 + k] = a.items[k].first[x] - a.items[k].second;
        program.add_constraint(std::move(row), lp::Relation::LessEq, f[x]);
    }
    lp::LpOutcome outcome = lp::solve(program);
    if (outcome.status == lp::LpStatus::Unbounded)
        throw SureLoss("the assessment incurs sure loss");
    if (outcome.status != lp::LpStatus::Optimal)
        throw std::logic_error("price-combination program cannot be infeasible");
    return outcome.optimum;
}

bool raw_is_linear(const RawAssessment& a) {
    for (std::size_t x = 0; x < a.domain; ++x) {
        std::vector<Rational> indicator(a.domain, Rational(0));
        indicator[x] = 1;
        Rational lower = raw_natural_extension(a, indicator);
        for (auto& v : indicator) v = -v;
        Rational upper = -raw_natural_extension(a, indicator);
        if (lower != upper) return false;
    }
    return true;
}

std::vector<Rational> raw_linear_mass(const RawAssessment& a) {
    std::vector<Rational> mass(a.domain);
    for (std::size_t x = 0; x < a.domain; ++x) {
        std::vector<Rational> indicator(a.domain, Rational(0));
        indicator[x] = 1;
        mass[x] = raw_natural_extension(a, indicator);
    }
    return mass;
}

void Assessment::add(Gamble f, Rational lower_price) {
    if (f.space() != space || f.arity() != arity)
        throw ParseError("assessed gamble lives on a different domain");
    items.emplace_back(std::move(f), std::move(lower_price));
}

RawAssessment Assessment::raw() const {
    RawAssessment raw;
    raw.domain = tuple_space_size(space, arity);
    for (const auto& [f, price] : items) raw.items.emplace_back(f.values(), price);
    return raw;
}

CredalSet::CredalSet(Space s, int n, std::vector<std::vector<Rational>> points)
    : space(std::move(s)), arity(n), extreme_points(std::move(points)) {
    std::size_t domain = tuple_space_size(space, arity);
    for (const auto& p : extreme_points) {
        if (p.size() != domain) throw ParseError("mass function does not match the domain");
        Rational sum = 0;
        for (const auto& v : p) {
            if (v < 0) throw ParseError("mass function has a negative weight");
            sum += v;
        }
        if (sum != 1) throw ParseError("mass function does not sum to one");
    }
}

AslResult avoids_sure_loss(const Assessment& a) { return raw_avoids_sure_loss(a.raw()); }

CoherenceResult is_coherent(const Assessment& a) {
    CoherenceResult result;
    RawAssessment raw = a.raw();
    if (!raw_avoids_sure_loss(raw).avoids) {
        result.sure_loss = true;
        return result;
    }
    for (std::size_t k = 0; k < a.items.size(); ++k) {
        Rational extended = raw_natural_extension(raw, a.items[k].first.values());
        if (extended != a.items[k].second) {
            result.violating_item = k;
            result.raised_value = extended;
            return result;
        }
    }
    result.coherent = true;
    return result;
}

Rational natural_extension(const Assessment& a, const Gamble& f) {
    if (f.space() != a.space || f.arity() != a.arity)
        throw ParseError("gamble lives on a different domain");
    return raw_natural_extension(a.raw(), f.values());
}

Rational natural_extension_primal(const Assessment& a, const Gamble& f) {
    if (f.space() != a.space || f.arity() != a.arity)
        throw ParseError("gamble lives on a different domain");
    return raw_natural_extension_primal(a.raw(), f.values());
}

Rational natural_extension_upper(const Assessment& a, const Gamble& f) {
    return -natural_extension(a, -f);
}

Rational envelope_value(const CredalSet& c, const Gamble& f) {
    if (c.extreme_points.empty()) throw EmptySet("credal set has no extreme points");
    if (f.space() != c.space || f.arity() != c.arity)
        throw ParseError("gamble lives on a different domain");
    bool first = true;
    Rational best;
    for (const auto& mass : c.extreme_points) {
        Rational e = 0;
        for (std::size_t x = 0; x < mass.size(); ++x) e += mass[x] * f.at(x);
        if (first || e < best) best = e;
        first = false;
    }
    return best;
}

Rational envelope_upper_value(const CredalSet& c, const Gamble& f) {
    return -envelope_value(c, -f);
}

bool is_linear(const Assessment& a) { return raw_is_linear(a.raw()); }

}  // namespace lowprev
