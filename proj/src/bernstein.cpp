#include "lowprev/bernstein.hpp"

#include "lowprev/errors.hpp"

#include <algorithm>
#include <numeric>

namespace lowprev {

SimplexPoint::SimplexPoint(Space space, std::vector<Rational> theta)
    : space_(std::move(space)), theta_(std::move(theta)) {
    if (theta_.size() != space_.size())
        throw ParseError("simplex point needs one weight per label");
    Rational sum = 0;
    for (const auto& t : theta_) {
        if (t < 0) throw ParseError("simplex point has a negative weight");
        sum += t;
    }
    if (sum != 1) throw ParseError("simplex point does not sum to one");
}

SimplexPoint SimplexPoint::vertex(Space space, int label_index) {
    std::vector<Rational> theta(space.size(), Rational(0));
    theta.at(static_cast<std::size_t>(label_index)) = 1;
    return SimplexPoint(std::move(space), std::move(theta));
}

Rational basis_eval(const CountVector& m, const SimplexPoint& theta) {
    if (m.components() != theta.space().size())
        throw ParseError("count vector does not match the simplex");
    Rational product(atom_size(m));
    for (std::size_t x = 0; x < m.components(); ++x)
        product *= pow_rational(theta.at(static_cast<int>(x)), m.count(static_cast<int>(x)));
    return product;
}

Rational eval(const BernsteinPoly& p, const SimplexPoint& theta) {
    if (p.space() != theta.space()) throw ParseError("polynomial and point spaces differ");
    CountBasis basis(p.space(), p.degree());
    Rational acc = 0;
    for (std::size_t j = 0; j < basis.size(); ++j)
        acc += p.coefficients.at(j) * basis_eval(basis.at(j), theta);
    return acc;
}

BernsteinPoly elevate(const BernsteinPoly& p, int by) {
    if (by < 0) throw ParseError("elevation step must be non-negative");
    if (by == 0) return p;
    return {subsample_extension(p.coefficients, p.degree() + by)};
}

int total_degree(const MonomialForm& p) {
    int degree = 0;
    for (const auto& [exponents, coeff] : p) {
        if (coeff == 0) continue;
        int d = std::accumulate(exponents.begin(), exponents.end(), 0);
        degree = std::max(degree, d);
    }
    return degree;
}

BernsteinPoly decompose(const Space& space, const MonomialForm& p, int degree) {
    CountBasis basis(space, degree);
    std::vector<Rational> collected(basis.size(), Rational(0));
    for (const auto& [exponents, coeff] : p) {
        if (exponents.size() != space.size())
            throw ParseError("monomial exponent vector does not match the space");
        if (coeff == 0) continue;
        int d = 0;
        for (int e : exponents) {
            if (e < 0) throw ParseError("monomial exponents must be non-negative");
            d += e;
        }
        if (d > degree)
            throw DegreeTooLow("target degree " + std::to_string(degree) +
                               " is below a monomial of degree " + std::to_string(d));
        // theta^alpha (sum_x theta_x)^{degree-d} contributes the multinomial
        // weight nu(beta) to the exponent alpha + beta.
        CountBasis pad(space, degree - d);
        for (const auto& beta : pad.vectors()) {
            std::vector<int> target(exponents);
            for (std::size_t x = 0; x < target.size(); ++x)
                target[x] += beta.count(static_cast<int>(x));
            collected[basis.index_of(CountVector(target))] += coeff * Rational(atom_size(beta));
        }
    }
    for (std::size_t j = 0; j < basis.size(); ++j)
        collected[j] /= Rational(atom_size(basis.at(j)));
    return {CountGamble(space, degree, std::move(collected))};
}

Rational eval_monomials(const MonomialForm& p, const SimplexPoint& theta) {
    Rational acc = 0;
    for (const auto& [exponents, coeff] : p) {
        if (exponents.size() != theta.space().size())
            throw ParseError("monomial exponent vector does not match the space");
        Rational term = coeff;
        for (std::size_t x = 0; x < exponents.size(); ++x)
            term *= pow_rational(theta.at(static_cast<int>(x)), exponents[x]);
        acc += term;
    }
    return acc;
}

std::pair<Rational, Rational> enclosure(const BernsteinPoly& p) {
    return {p.coefficients.min(), p.coefficients.max()};
}

std::vector<std::pair<Rational, Rational>> enclosure_sequence(const BernsteinPoly& p,
                                                              int max_degree) {
    if (max_degree < p.degree()) throw ParseError("max degree is below the polynomial degree");
    std::vector<std::pair<Rational, Rational>> intervals;
    BernsteinPoly current = p;
    intervals.push_back(enclosure(current));
    for (int n = p.degree() + 1; n <= max_degree; ++n) {
        current = elevate(current, 1);
        intervals.push_back(enclosure(current));
    }
    return intervals;
}

EnclosureReport enclosure_convergence(const BernsteinPoly& p, int max_degree,
                                      int grid_resolution) {
    if (grid_resolution < 1) throw ParseError("grid resolution must be positive");
    EnclosureReport report;
    report.intervals = enclosure_sequence(p, max_degree);
    CountBasis grid(p.space(), grid_resolution);
    bool first = true;
    for (const auto& m : grid.vectors()) {
        std::vector<Rational> theta(p.space().size());
        for (std::size_t x = 0; x < theta.size(); ++x)
            theta[x] = Rational(m.count(static_cast<int>(x)), grid_resolution);
        Rational v = eval(p, SimplexPoint(p.space(), theta));
        if (first || v < report.grid_min) report.grid_min = v;
        if (first || v > report.grid_max) report.grid_max = v;
        first = false;
    }
    report.gap_min = report.grid_min - report.intervals.back().first;
    report.gap_max = report.intervals.back().second - report.grid_max;
    return report;
}

BernsteinPoly approximant(const Space& space, int degree,
                          const std::function<Rational(const std::vector<Rational>&)>& h) {
    if (degree < 1) throw ParseError("approximant degree must be positive");
    CountBasis basis(space, degree);
    std::vector<Rational> values(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        std::vector<Rational> frequency(space.size());
        for (std::size_t x = 0; x < space.size(); ++x)
            frequency[x] = Rational(basis.at(j).count(static_cast<int>(x)), degree);
        values[j] = h(frequency);
    }
    return {CountGamble(space, degree, std::move(values))};
}

BernsteinPoly approximant(const Space& space, int degree, const MonomialForm& p) {
    return approximant(space, degree, [&](const std::vector<Rational>& frequency) {
        Rational acc = 0;
        for (const auto& [exponents, coeff] : p) {
            Rational term = coeff;
            for (std::size_t x = 0; x < exponents.size(); ++x)
                term *= pow_rational(frequency[x], exponents[x]);
            acc += term;
        }
        return acc;
    });
}

}  // namespace lowprev
