#include "lowprev/representation.hpp"

#include "lowprev/errors.hpp"

#include <algorithm>

namespace lowprev {

Rational count_multinomial_mean(const CountGamble& g, const SimplexPoint& theta) {
    if (g.space() != theta.space()) throw ParseError("count gamble and point spaces differ");
    CountBasis basis(g.space(), g.total());
    Rational acc = 0;
    for (std::size_t j = 0; j < basis.size(); ++j)
        acc += g.at(j) * basis_eval(basis.at(j), theta);
    return acc;
}

Rational multinomial_mean(const Gamble& f, const SimplexPoint& theta) {
    if (f.space() != theta.space()) throw ParseError("gamble and point spaces differ");
    Rational acc = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        Tuple z = tuple_at(f.space(), f.arity(), i);
        Rational weight = 1;
        for (int component : z) weight *= theta.at(component);
        acc += f.at(i) * weight;
    }
    return acc;
}

Rational simplex_mean(const std::vector<Rational>& f_on_labels, const SimplexPoint& theta) {
    if (f_on_labels.size() != theta.space().size())
        throw ParseError("per-label gamble does not match the space");
    Rational acc = 0;
    for (std::size_t x = 0; x < f_on_labels.size(); ++x)
        acc += f_on_labels[x] * theta.at(static_cast<int>(x));
    return acc;
}

RepresentingPrevision::RepresentingPrevision(Space space,
                                             std::variant<Mixture, CountFamily> backing)
    : space_(std::move(space)), backing_(std::move(backing)) {}

RepresentingPrevision RepresentingPrevision::precise(SimplexPoint theta) {
    Space space = theta.space();
    return RepresentingPrevision(std::move(space),
                                 Mixture{{std::move(theta)}, std::vector<Rational>{Rational(1)}});
}

RepresentingPrevision RepresentingPrevision::mixture(std::vector<SimplexPoint> support,
                                                     std::vector<Rational> weights) {
    if (support.empty()) throw EmptySet("mixture needs at least one point");
    if (weights.size() != support.size())
        throw ParseError("mixture needs one weight per point");
    Rational sum = 0;
    for (const auto& w : weights) {
        if (w < 0) throw ParseError("mixture weights must be non-negative");
        sum += w;
    }
    if (sum != 1) throw ParseError("mixture weights must sum to one");
    Space space = support.front().space();
    for (const auto& point : support)
        if (point.space() != space) throw ParseError("mixture points live on different spaces");
    return RepresentingPrevision(std::move(space), Mixture{std::move(support), std::move(weights)});
}

RepresentingPrevision RepresentingPrevision::vacuous_mixture(std::vector<SimplexPoint> support) {
    if (support.empty()) throw EmptySet("mixture needs at least one point");
    Space space = support.front().space();
    for (const auto& point : support)
        if (point.space() != space) throw ParseError("mixture points live on different spaces");
    return RepresentingPrevision(std::move(space), Mixture{std::move(support), std::nullopt});
}

RepresentingPrevision RepresentingPrevision::family(CountFamily levels) {
    Space space = levels.space;
    return RepresentingPrevision(std::move(space), std::move(levels));
}

CountModel RepresentingPrevision::level_model(int n) const {
    if (const auto* mix = std::get_if<Mixture>(&backing_)) {
        CountBasis basis(space_, n);
        std::vector<std::vector<Rational>> points;
        for (const auto& theta : mix->support) {
            std::vector<Rational> mass(basis.size());
            for (std::size_t j = 0; j < basis.size(); ++j)
                mass[j] = basis_eval(basis.at(j), theta);
            points.push_back(std::move(mass));
        }
        if (mix->weights) {
            std::vector<Rational> blended(basis.size(), Rational(0));
            for (std::size_t i = 0; i < points.size(); ++i)
                for (std::size_t j = 0; j < basis.size(); ++j)
                    blended[j] += (*mix->weights)[i] * points[i][j];
            return CountModel::precise(space_, n, std::move(blended));
        }
        return CountModel(CountCredal(space_, n, std::move(points)));
    }
    return std::get<CountFamily>(backing_).level(n);
}

bool RepresentingPrevision::has_level(int n) const {
    if (std::holds_alternative<Mixture>(backing_)) return n >= 1;
    return std::get<CountFamily>(backing_).has_level(n);
}

Rational RepresentingPrevision::value_at_level(const BernsteinPoly& p, int level) const {
    if (p.space() != space_) throw ParseError("polynomial lives on a different space");
    if (level < p.degree())
        throw DegreeTooLow("evaluation level is below the polynomial degree");
    if (!has_level(level))
        throw DegreeUnavailable("no level-" + std::to_string(level) + " model available");
    BernsteinPoly at_level = elevate(p, level - p.degree());
    return level_model(level).lower_value(at_level.coefficients);
}

Rational RepresentingPrevision::value(const BernsteinPoly& p) const {
    int level = std::max(1, p.degree());
    if (!has_level(level)) {
        // A family may only carry higher levels; use the smallest that fits.
        const auto& fam = std::get<CountFamily>(backing_);
        for (const auto& [n, model] : fam.levels) {
            if (n >= p.degree()) {
                level = n;
                break;
            }
        }
    }
    return value_at_level(p, level);
}

Rational RepresentingPrevision::value(const MonomialForm& p) const {
    int degree = std::max(1, total_degree(p));
    return value(decompose(space_, p, degree));
}

Rational RepresentingPrevision::upper_value_at_level(const BernsteinPoly& p, int level) const {
    return -value_at_level({-p.coefficients}, level);
}

Rational frequency_distribution_value(
    const RepresentingPrevision& r,
    const std::function<Rational(const std::vector<Rational>&)>& h, int n) {
    BernsteinPoly grid = approximant(r.space(), n, h);
    return r.level_model(n).lower_value(grid.coefficients);
}

Rational frequency_distribution_value(const RepresentingPrevision& r, const MonomialForm& h,
                                      int n) {
    BernsteinPoly grid = approximant(r.space(), n, h);
    return r.level_model(n).lower_value(grid.coefficients);
}

ConvergenceReport frequency_convergence_report(const RepresentingPrevision& r,
                                               const MonomialForm& h, int n_from, int n_to) {
    if (n_from < 1 || n_to < n_from) throw ParseError("bad level range");
    ConvergenceReport report;
    for (int n = n_from; n <= n_to; ++n)
        report.values.emplace_back(n, frequency_distribution_value(r, h, n));
    report.limit = r.value(h);
    return report;
}

Rational sample_mean_value(const RepresentingPrevision& r,
                           const std::vector<Rational>& f_on_labels,
                           const std::function<Rational(const Rational&)>& h, int n) {
    if (f_on_labels.size() != r.space().size())
        throw ParseError("per-label gamble does not match the space");
    CountBasis basis(r.space(), n);
    std::vector<Rational> values(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        Rational mean = 0;
        for (std::size_t x = 0; x < f_on_labels.size(); ++x)
            mean += f_on_labels[x] * Rational(basis.at(j).count(static_cast<int>(x)), n);
        values[j] = h(mean);
    }
    return r.level_model(n).lower_value(CountGamble(r.space(), n, std::move(values)));
}

MeanSquareReport mean_square_bound_check(const RepresentingPrevision& r,
                                         const std::vector<Rational>& f_on_labels, int n, int p,
                                         std::size_t cap) {
    if (n < 1 || p < 0) throw ParseError("need n >= 1 and p >= 0");
    if (f_on_labels.size() != r.space().size())
        throw ParseError("per-label gamble does not match the space");
    const int total = n + p;
    const Space& space = r.space();

    // Atom means of [S_{n+p}(f) - S_n(f)]^2, accumulated in one pass.
    CountBasis basis(space, total);
    std::vector<Rational> sums(basis.size(), Rational(0));
    std::size_t tuples = tuple_space_size(space, total, cap);
    for (std::size_t i = 0; i < tuples; ++i) {
        Tuple z = tuple_at(space, total, i);
        Rational mean_all = 0, mean_first = 0;
        for (int k = 0; k < total; ++k) {
            const Rational& fx = f_on_labels[static_cast<std::size_t>(z[static_cast<std::size_t>(k)])];
            mean_all += fx;
            if (k < n) mean_first += fx;
        }
        mean_all /= total;
        mean_first /= n;
        Rational gap = mean_all - mean_first;
        sums[basis.index_of(count_vector(space, z))] += gap * gap;
    }
    for (std::size_t j = 0; j < basis.size(); ++j) sums[j] /= Rational(atom_size(basis.at(j)));
    CountGamble profile(space, total, std::move(sums));

    MeanSquareReport report;
    report.upper_value = r.level_model(total).upper_value(profile);
    Rational sup_f2 = 0;
    for (const auto& fx : f_on_labels) sup_f2 = std::max(sup_f2, Rational(fx * fx));
    report.bound = Rational(Int(2 * p), Int(n) * Int(total)) * sup_f2;
    report.pass = report.upper_value <= report.bound;
    return report;
}

std::vector<Rational> binary_moments(const RepresentingPrevision& r, int n_max) {
    if (r.space().size() != 2) throw ParseError("moment sequences need a binary space");
    if (n_max < 0) throw ParseError("n_max must be non-negative");
    std::vector<Rational> moments;
    moments.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int j = 0; j <= n_max; ++j) {
        MonomialForm power{{{0, j}, Rational(1)}};
        int level = std::max(1, j);
        if (!r.has_level(level))
            throw DegreeUnavailable("no level-" + std::to_string(level) + " model available");
        moments.push_back(r.value_at_level(decompose(r.space(), power, level), level));
    }
    return moments;
}

}  // namespace lowprev
