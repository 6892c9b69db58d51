#include "lowprev/extension.hpp"

#include "lowprev/errors.hpp"
#include "lowprev/simplex_lp.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lowprev {

Rational vacuous_exchangeable(const Gamble& f) { return atom_mean_profile(f).min(); }

CountAssessment induced_count_prices(const EneProblem& p) {
    CountAssessment induced(p.space(), p.arity());
    // Identical atom-mean profiles collapse to the supremum of their prices.
    std::map<std::vector<Rational>, Rational> collapsed;
    std::vector<std::vector<Rational>> order;
    for (const auto& [f, price] : p.local.items) {
        CountGamble profile = atom_mean_profile(f);
        auto [it, fresh] = collapsed.emplace(profile.values(), price);
        if (fresh)
            order.push_back(profile.values());
        else
            it->second = std::max(it->second, price);
    }
    for (const auto& key : order)
        induced.add(CountGamble(p.space(), p.arity(), key), collapsed.at(key));
    return induced;
}

EneResult ene_exists(const EneProblem& p) {
    EneResult result{false, {}, induced_count_prices(p)};
    result.certificate = raw_avoids_sure_loss(result.induced.raw());
    result.exists = result.certificate.avoids;
    return result;
}

Rational ene_value(const EneProblem& p, const Gamble& f) {
    if (f.space() != p.space() || f.arity() != p.arity())
        throw ParseError("gamble lives on a different domain");
    CountAssessment induced = induced_count_prices(p);
    try {
        return raw_natural_extension(induced.raw(), atom_mean_profile(f).values());
    } catch (const SureLoss&) {
        throw NoExchangeableDominator("no exchangeable coherent model dominates the assessment");
    }
}

ExtensionProblem::ExtensionProblem(Space s, int n_, int k_, CountModel base_)
    : space(std::move(s)), n(n_), k(k_), base(std::move(base_)) {
    if (n < 1 || k < 0) throw ParseError("need n >= 1 and k >= 0");
    if (base.space() != space) throw ParseError("base lives on a different space");
    if (base.level() != n) throw ParseError("base level does not match n");
}

namespace {

// Exact Gaussian elimination; returns false when the system is singular.
bool solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                  std::vector<Rational>& x) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return false;
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        Rational inv = Rational(1) / a[col][col];
        for (auto& v : a[col]) v *= inv;
        b[col] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational factor = a[r][col];
            for (std::size_t c = 0; c < n; ++c) a[r][c] -= factor * a[col][c];
            b[r] -= factor * b[col];
        }
    }
    x = std::move(b);
    return true;
}

// All vertices of { q >= 0, sum q = 1, q.G_k >= p_k }, by basis enumeration.
std::vector<std::vector<Rational>> polytope_vertices(const RawAssessment& a) {
    const std::size_t d = a.domain;
    const std::size_t pool = d + a.items.size();
    if (d > 12) throw CapExceeded("vertex enumeration limited to 12 dimensions");

    // Rows of the pool: first the non-negativity facets, then the items.
    auto pool_row = [&](std::size_t i) {
        std::vector<Rational> row(d, Rational(0));
        Rational rhs = 0;
        if (i < d) {
            row[i] = 1;
        } else {
            row = a.items[i - d].first;
            rhs = a.items[i - d].second;
        }
        return std::make_pair(row, rhs);
    };

    std::vector<std::vector<Rational>> vertices;
    // Choose d-1 active facets alongside the normalization equality; the
    // descending mask with prev_permutation walks every combination.
    std::vector<bool> mask(pool, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(d - 1), true);
    std::size_t combos = 0;
    do {
        if (++combos > 200000) throw CapExceeded("vertex enumeration too large");
        std::vector<std::vector<Rational>> sys{std::vector<Rational>(d, Rational(1))};
        std::vector<Rational> rhs{Rational(1)};
        for (std::size_t i = 0; i < pool; ++i) {
            if (!mask[i]) continue;
            auto [row, r] = pool_row(i);
            sys.push_back(std::move(row));
            rhs.push_back(std::move(r));
        }
        std::vector<Rational> q;
        if (!solve_square(sys, rhs, q)) continue;
        bool ok = std::all_of(q.begin(), q.end(), [](const Rational& v) { return v >= 0; });
        for (std::size_t k = 0; ok && k < a.items.size(); ++k) {
            Rational e = 0;
            for (std::size_t x = 0; x < d; ++x) e += a.items[k].first[x] * q[x];
            ok = e >= a.items[k].second;
        }
        if (ok && std::find(vertices.begin(), vertices.end(), q) == vertices.end())
            vertices.push_back(std::move(q));
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return vertices;
}

std::vector<std::vector<Rational>> base_extreme_points(const CountModel& base) {
    if (base.is_credal()) return base.credal().extreme_points;
    if (base.is_linear()) return {base.linear_mass()};
    return polytope_vertices(base.assessment().raw());
}

// Feasibility of a level-(n+k) mass whose subsample marginal equals `target`
// (when target is given) or lies in the convex hull of `points` otherwise.
lp::LpOutcome marginal_program(const CountBasis& low, const CountBasis& high,
                               const std::vector<std::vector<Rational>>& points,
                               const std::vector<Rational>* target) {
    const std::size_t dl = low.size(), dh = high.size();
    const std::size_t r = target ? 0 : points.size();
    lp::LinearProgram program;
    program.objective.assign(dh + r, Rational(0));
    program.bounds.resize(dh + r);
    for (auto& b : program.bounds) b.lower = Rational(0);
    for (std::size_t j = 0; j < dl; ++j) {
        std::vector<Rational> row(dh + r, Rational(0));
        for (std::size_t u = 0; u < dh; ++u) row[u] = subsample_weight(low.at(j), high.at(u));
        for (std::size_t i = 0; i < r; ++i) row[dh + i] = -points[i][j];
        program.add_constraint(std::move(row), lp::Relation::Equal,
                               target ? (*target)[j] : Rational(0));
    }
    {
        std::vector<Rational> row(dh + r, Rational(0));
        std::fill(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(dh), Rational(1));
        program.add_constraint(std::move(row), lp::Relation::Equal, Rational(1));
    }
    if (r > 0) {
        std::vector<Rational> row(dh + r, Rational(0));
        std::fill(row.begin() + static_cast<std::ptrdiff_t>(dh), row.end(), Rational(1));
        program.add_constraint(std::move(row), lp::Relation::Equal, Rational(1));
    }
    return lp::feasible(program);
}

}  // namespace

ExtendResult extendable(const ExtensionProblem& p) {
    if (!p.base.avoids_sure_loss().avoids)
        throw SureLoss("the base model admits no dominating mass");
    ExtendResult result;
    CountBasis low(p.space, p.n), high(p.space, p.n + p.k);
    std::vector<std::vector<Rational>> points = base_extreme_points(p.base);
    const bool precise = points.size() == 1;

    lp::LpOutcome outcome = precise ? marginal_program(low, high, points, &points.front())
                                    : marginal_program(low, high, points, nullptr);
    if (outcome.status != lp::LpStatus::Optimal) {
        // The Farkas multipliers of the marginal rows yield a count gamble g
        // with max over compositions of its extension strictly below the
        // base value of g; normalize it to the unit range.
        std::vector<Rational> g(low.size());
        for (std::size_t j = 0; j < low.size(); ++j) g[j] = -outcome.farkas[j];
        Rational lo = *std::min_element(g.begin(), g.end());
        Rational hi = *std::max_element(g.begin(), g.end());
        if (hi == lo) throw std::logic_error("degenerate extendability certificate");
        for (auto& v : g) v = (v - lo) / (hi - lo);
        CountGamble witness(p.space, p.n, std::move(g));
        result.separating = witness;
        result.separating_upper = subsample_extension(witness, p.n + p.k).max();
        result.separating_base = p.base.lower_value(witness);
        if (result.separating_upper >= result.separating_base)
            throw std::logic_error("extendability certificate fails to separate");
        return result;
    }

    result.extendable = true;
    if (precise) {
        outcome.solution.resize(high.size());
        result.witnesses.push_back(std::move(outcome.solution));
        return result;
    }
    // Envelope base: also report whether each extreme point is itself a
    // reachable marginal, and collect the per-point witnesses when so.
    std::vector<std::vector<Rational>> per_point;
    bool reproduces = true;
    for (const auto& q : points) {
        lp::LpOutcome one = marginal_program(low, high, points, &q);
        if (one.status != lp::LpStatus::Optimal) {
            reproduces = false;
            break;
        }
        one.solution.resize(high.size());
        per_point.push_back(std::move(one.solution));
    }
    result.reproduces_envelope = reproduces;
    if (reproduces) {
        result.witnesses = std::move(per_point);
    } else {
        outcome.solution.resize(high.size());
        result.witnesses.push_back(std::move(outcome.solution));
    }
    return result;
}

Rational smallest_extension(const ExtensionProblem& p, const CountGamble& h) {
    if (h.space() != p.space || h.total() != p.n + p.k)
        throw ParseError("count gamble does not live at level n+k");
    ExtendResult check = extendable(p);
    if (!check.extendable)
        throw NotExtendable("the base model does not extend to level n+k");

    CountBasis low(p.space, p.n), high(p.space, p.n + p.k);
    const std::size_t dl = low.size(), dh = high.size();
    lp::LinearProgram program;
    program.sense = lp::Sense::Maximize;

    if (p.base.is_credal() || p.base.is_linear()) {
        std::vector<std::vector<Rational>> points = base_extreme_points(p.base);
        // Variables: g (free, dl) then t (free).  Maximize t with
        // t <= q_i . g for each extreme point and ext(g) <= h pointwise.
        program.objective.assign(dl + 1, Rational(0));
        program.objective[dl] = 1;
        for (const auto& q : points) {
            std::vector<Rational> row(dl + 1, Rational(0));
            for (std::size_t j = 0; j < dl; ++j) row[j] = -q[j];
            row[dl] = 1;
            program.add_constraint(std::move(row), lp::Relation::LessEq, Rational(0));
        }
        for (std::size_t u = 0; u < dh; ++u) {
            std::vector<Rational> row(dl + 1, Rational(0));
            for (std::size_t j = 0; j < dl; ++j) row[j] = subsample_weight(low.at(j), high.at(u));
            program.add_constraint(std::move(row), lp::Relation::LessEq, h.at(u));
        }
    } else {
        // Assessment base with items (G_k, p_k).  The base value of g is
        // itself a linear program; its dual description max beta + lambda.p
        // with beta + sum lambda_k G_k <= g joins the constraint ext(g) <= h
        // into one program (docs/extension_lp.md).
        const auto& items = p.base.assessment().items;
        const std::size_t kk = items.size();
        // Variables: g (free, dl), beta (free), lambda_k >= 0.
        program.objective.assign(dl + 1 + kk, Rational(0));
        program.objective[dl] = 1;
        for (std::size_t k = 0; k < kk; ++k) program.objective[dl + 1 + k] = items[k].second;
        program.bounds.resize(dl + 1 + kk);
        for (std::size_t k = 0; k < kk; ++k) program.bounds[dl + 1 + k].lower = Rational(0);
        for (std::size_t j = 0; j < dl; ++j) {
            std::vector<Rational> row(dl + 1 + kk, Rational(0));
            row[j] = -1;
            row[dl] = 1;
            for (std::size_t k = 0; k < kk; ++k) row[dl + 1 + k] = items[k].first.at(j);
            program.add_constraint(std::move(row), lp::Relation::LessEq, Rational(0));
        }
        for (std::size_t u = 0; u < dh; ++u) {
            std::vector<Rational> row(dl + 1 + kk, Rational(0));
            for (std::size_t j = 0; j < dl; ++j) row[j] = subsample_weight(low.at(j), high.at(u));
            program.add_constraint(std::move(row), lp::Relation::LessEq, h.at(u));
        }
    }

    lp::LpOutcome outcome = lp::solve(program);
    if (outcome.status != lp::LpStatus::Optimal)
        throw NotExtendable("the extension value is unbounded; the base does not extend");
    return outcome.optimum;
}

}  // namespace lowprev
