#pragma once

#include "lowprev/counts.hpp"
#include "lowprev/gamble.hpp"
#include "lowprev/prevision.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <variant>
#include <vector>

namespace lowprev {

/// Lower-price assessments on count gambles at one level.
struct CountAssessment {
    Space space;
    int level = 1;
    std::vector<std::pair<CountGamble, Rational>> items;

    CountAssessment(Space s, int n) : space(std::move(s)), level(n) {}
    void add(CountGamble h, Rational lower_price);
    RawAssessment raw() const;
};

/// A finite envelope of mass functions on the count space at one level.
struct CountCredal {
    Space space;
    int level = 1;
    std::vector<std::vector<Rational>> extreme_points;

    CountCredal(Space s, int n, std::vector<std::vector<Rational>> points);
};

/// A belief model for the count vectors at one level, backed either by an
/// assessment (evaluated through natural extension) or by a finite credal
/// envelope (evaluated as the lower envelope).  Finite envelopes of linear
/// previsions are generally not expressible as finite lower-price
/// assessments, which is why both backings exist.
class CountModel {
public:
    CountModel(CountAssessment assessment);  // NOLINT(google-explicit-constructor)
    CountModel(CountCredal credal);          // NOLINT(google-explicit-constructor)

    static CountModel vacuous(Space space, int level);
    static CountModel precise(Space space, int level, std::vector<Rational> mass);

    const Space& space() const;
    int level() const;

    AslResult avoids_sure_loss() const;
    /// Natural-extension (assessment) or envelope (credal) lower value.
    Rational lower_value(const CountGamble& h) const;
    Rational upper_value(const CountGamble& h) const;
    bool is_linear() const;
    /// The unique dominating mass when is_linear().
    std::vector<Rational> linear_mass() const;

    bool is_credal() const { return std::holds_alternative<CountCredal>(rep_); }
    const CountCredal& credal() const { return std::get<CountCredal>(rep_); }
    const CountAssessment& assessment() const { return std::get<CountAssessment>(rep_); }

private:
    std::variant<CountAssessment, CountCredal> rep_;
};

/// Count models for a range of levels of one exchangeable family.
struct CountFamily {
    Space space;
    std::map<int, CountModel> levels;

    explicit CountFamily(Space s) : space(std::move(s)) {}
    void set_level(int n, CountModel model);
    const CountModel& level(int n) const;  // throws DegreeUnavailable
    bool has_level(int n) const { return levels.count(n) != 0; }
    int max_level() const;

    /// Vacuous model at every level 1..n_max.
    static CountFamily vacuous(Space space, int n_max);
};

/// True iff every extreme mass function is invariant under all permutations
/// of the coordinates (checked on the adjacent transpositions, which
/// generate the full group).
bool is_exchangeable_envelope(const CredalSet& c);

/// The count-space image of a tuple-space envelope: each extreme mass maps
/// to its count distribution.
CountCredal induce_count_credal(const CredalSet& c);

/// The count form of an assessment: each gamble is symmetrized and read off
/// atom by atom, keeping its price.
CountAssessment induce_count_assessment(const Assessment& a);

/// Value at f of the exchangeable lower prevision determined by the count
/// model: the model's lower value at the atom-mean profile of f.
Rational reconstruct_lower_prevision(const CountModel& q, const Gamble& f);

/// Exact identities tying a model to its symmetrized gambles.
struct RepresentationReport {
    Rational lower_f_minus_sym;  // E(f - f^)
    Rational lower_sym_minus_f;  // E(f^ - f)
    Rational lower_f;            // E(f)
    Rational lower_sym;          // E(f^)
    Rational lower_count_route;  // count-model value at the atom-mean profile
    bool holds = false;
};

RepresentationReport verify_finite_representation(const CredalSet& c, const Gamble& f);
RepresentationReport verify_finite_representation(const CountModel& q, const Gamble& f);

/// Sound but generally incomplete consistency check between level n and
/// level n+k: the lower value of h at level n must equal the lower value of
/// its subsample extension at level n+k, tested on all level-n count
/// indicators plus seeded random non-negative combinations.  `complete` is
/// set when both levels are linear, where the indicator basis decides.
struct TimeConsistencyReport {
    bool consistent = true;
    bool complete = false;
    std::optional<CountGamble> witness;
    Rational lower_n;       // value at the witness, level n
    Rational lower_n_plus;  // value of its extension, level n+k
};

TimeConsistencyReport check_time_consistency(const CountFamily& family, int n, int k,
                                             int random_probes = 8, std::uint32_t seed = 7);

/// Sound generator-based exchangeability check of an assessment: natural
/// extension of pi f - f must be >= 0 (hence = 0) for the adjacent
/// transpositions and a spanning set of gambles and their negations.
/// Complete for envelopes of linear previsions; conservative otherwise.
bool assessment_is_exchangeable(const Assessment& a);

}  // namespace lowprev
