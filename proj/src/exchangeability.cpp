#include "lowprev/exchangeability.hpp"

#include "lowprev/errors.hpp"

#include <algorithm>
#include <random>

namespace lowprev {

void CountAssessment::add(CountGamble h, Rational lower_price) {
    if (h.space() != space || h.total() != level)
        throw ParseError("assessed count gamble lives on a different level");
    items.emplace_back(std::move(h), std::move(lower_price));
}

RawAssessment CountAssessment::raw() const {
    RawAssessment raw;
    raw.domain = CountBasis(space, level).size();
    for (const auto& [h, price] : items) raw.items.emplace_back(h.values(), price);
    return raw;
}

CountCredal::CountCredal(Space s, int n, std::vector<std::vector<Rational>> points)
    : space(std::move(s)), level(n), extreme_points(std::move(points)) {
    std::size_t domain = CountBasis(space, level).size();
    if (extreme_points.empty()) throw EmptySet("count envelope has no extreme points");
    for (const auto& p : extreme_points) {
        if (p.size() != domain) throw ParseError("count mass does not match the level");
        Rational sum = 0;
        for (const auto& v : p) {
            if (v < 0) throw ParseError("count mass has a negative weight");
            sum += v;
        }
        if (sum != 1) throw ParseError("count mass does not sum to one");
    }
}

CountModel::CountModel(CountAssessment assessment) : rep_(std::move(assessment)) {}
CountModel::CountModel(CountCredal credal) : rep_(std::move(credal)) {}

CountModel CountModel::vacuous(Space space, int level) {
    return CountModel(CountAssessment(std::move(space), level));
}

CountModel CountModel::precise(Space space, int level, std::vector<Rational> mass) {
    return CountModel(CountCredal(std::move(space), level, {std::move(mass)}));
}

const Space& CountModel::space() const {
    return is_credal() ? credal().space : assessment().space;
}

int CountModel::level() const { return is_credal() ? credal().level : assessment().level; }

AslResult CountModel::avoids_sure_loss() const {
    if (is_credal()) {
        // An envelope of proper mass functions always avoids sure loss; any
        // extreme point dominates it.
        AslResult result;
        result.avoids = true;
        result.mass = credal().extreme_points.front();
        return result;
    }
    return raw_avoids_sure_loss(assessment().raw());
}

Rational CountModel::lower_value(const CountGamble& h) const {
    if (h.space() != space() || h.total() != level())
        throw ParseError("count gamble lives on a different level");
    if (is_credal()) {
        bool first = true;
        Rational best;
        for (const auto& mass : credal().extreme_points) {
            Rational e = 0;
            for (std::size_t j = 0; j < mass.size(); ++j) e += mass[j] * h.at(j);
            if (first || e < best) best = e;
            first = false;
        }
        return best;
    }
    return raw_natural_extension(assessment().raw(), h.values());
}

Rational CountModel::upper_value(const CountGamble& h) const { return -lower_value(-h); }

bool CountModel::is_linear() const {
    if (is_credal()) {
        const auto& pts = credal().extreme_points;
        return std::all_of(pts.begin(), pts.end(),
                           [&](const auto& p) { return p == pts.front(); });
    }
    return raw_is_linear(assessment().raw());
}

std::vector<Rational> CountModel::linear_mass() const {
    if (is_credal()) return credal().extreme_points.front();
    return raw_linear_mass(assessment().raw());
}

void CountFamily::set_level(int n, CountModel model) {
    if (model.space() != space) throw ParseError("level model lives on a different space");
    if (model.level() != n) throw ParseError("level model carries a different level index");
    levels.erase(n);
    levels.emplace(n, std::move(model));
}

const CountModel& CountFamily::level(int n) const {
    auto it = levels.find(n);
    if (it == levels.end())
        throw DegreeUnavailable("no level-" + std::to_string(n) + " model in the family");
    return it->second;
}

int CountFamily::max_level() const {
    if (levels.empty()) throw DegreeUnavailable("the family has no levels");
    return levels.rbegin()->first;
}

CountFamily CountFamily::vacuous(Space space, int n_max) {
    CountFamily family(space);
    for (int n = 1; n <= n_max; ++n) family.set_level(n, CountModel::vacuous(space, n));
    return family;
}

bool is_exchangeable_envelope(const CredalSet& c) {
    for (const auto& pi : transposition_generators(c.arity)) {
        for (const auto& mass : c.extreme_points) {
            for (std::size_t i = 0; i < mass.size(); ++i) {
                Tuple x = tuple_at(c.space, c.arity, i);
                if (mass[i] != mass[tuple_index(c.space, apply_permutation(pi, x))]) return false;
            }
        }
    }
    return true;
}

CountCredal induce_count_credal(const CredalSet& c) {
    CountBasis basis(c.space, c.arity);
    std::vector<std::vector<Rational>> points;
    points.reserve(c.extreme_points.size());
    for (const auto& mass : c.extreme_points) {
        std::vector<Rational> q(basis.size(), Rational(0));
        for (std::size_t i = 0; i < mass.size(); ++i) {
            Tuple z = tuple_at(c.space, c.arity, i);
            q[basis.index_of(count_vector(c.space, z))] += mass[i];
        }
        points.push_back(std::move(q));
    }
    return CountCredal(c.space, c.arity, std::move(points));
}

CountAssessment induce_count_assessment(const Assessment& a) {
    CountAssessment induced(a.space, a.arity);
    for (const auto& [f, price] : a.items) induced.add(atom_mean_profile(f), price);
    return induced;
}

Rational reconstruct_lower_prevision(const CountModel& q, const Gamble& f) {
    if (f.space() != q.space() || f.arity() != q.level())
        throw ParseError("gamble does not match the count model level");
    return q.lower_value(atom_mean_profile(f));
}

namespace {

RepresentationReport build_report(const Rational& lf_ms, const Rational& ls_mf,
                                  const Rational& lf, const Rational& ls, const Rational& lc) {
    RepresentationReport report;
    report.lower_f_minus_sym = lf_ms;
    report.lower_sym_minus_f = ls_mf;
    report.lower_f = lf;
    report.lower_sym = ls;
    report.lower_count_route = lc;
    report.holds = lf_ms == 0 && ls_mf == 0 && lf == ls && lf == lc;
    return report;
}

}  // namespace

RepresentationReport verify_finite_representation(const CredalSet& c, const Gamble& f) {
    Gamble sym = symmetrize(f);
    CountModel counts{induce_count_credal(c)};
    return build_report(envelope_value(c, f - sym), envelope_value(c, sym - f),
                        envelope_value(c, f), envelope_value(c, sym),
                        counts.lower_value(atom_mean_profile(f)));
}

RepresentationReport verify_finite_representation(const CountModel& q, const Gamble& f) {
    Gamble sym = symmetrize(f);
    auto lower = [&](const Gamble& g) { return q.lower_value(atom_mean_profile(g)); };
    return build_report(lower(f - sym), lower(sym - f), lower(f), lower(sym),
                        q.lower_value(atom_mean_profile(f)));
}

TimeConsistencyReport check_time_consistency(const CountFamily& family, int n, int k,
                                             int random_probes, std::uint32_t seed) {
    const CountModel& low = family.level(n);
    const CountModel& high = family.level(n + k);
    TimeConsistencyReport report;
    report.complete = low.is_linear() && high.is_linear();

    CountBasis basis(family.space, n);
    std::vector<CountGamble> probes;
    for (const auto& m : basis.vectors())
        probes.push_back(CountGamble::indicator(family.space, n, m));
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(0, 6), den(1, 4);
    for (int r = 0; r < random_probes; ++r) {
        std::vector<Rational> values(basis.size());
        for (auto& v : values) v = Rational(num(rng), den(rng));
        probes.emplace_back(family.space, n, std::move(values));
    }

    for (const auto& h : probes) {
        Rational at_n = low.lower_value(h);
        Rational at_nk = high.lower_value(subsample_extension(h, n + k));
        if (at_n != at_nk) {
            report.consistent = false;
            report.witness = h;
            report.lower_n = at_n;
            report.lower_n_plus = at_nk;
            return report;
        }
    }
    return report;
}

bool assessment_is_exchangeable(const Assessment& a) {
    RawAssessment raw = a.raw();
    if (!raw_avoids_sure_loss(raw).avoids) return false;
    std::size_t domain = tuple_space_size(a.space, a.arity);
    for (const auto& pi : transposition_generators(a.arity)) {
        for (std::size_t i = 0; i < domain; ++i) {
            Gamble f = Gamble::indicator(a.space, a.arity, tuple_at(a.space, a.arity, i));
            for (const Gamble& probe : {f, -f}) {
                Gamble diff = permute_gamble(probe, pi) - probe;
                if (raw_natural_extension(raw, diff.values()) < 0) return false;
            }
        }
    }
    return true;
}

}  // namespace lowprev
