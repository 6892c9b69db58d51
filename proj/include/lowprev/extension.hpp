#pragma once

#include "lowprev/exchangeability.hpp"
#include "lowprev/gamble.hpp"
#include "lowprev/prevision.hpp"

#include <optional>
#include <vector>

namespace lowprev {

/// Value at f of the smallest exchangeable coherent lower prevision:
/// the minimum of the atom means of f over all compositions.
Rational vacuous_exchangeable(const Gamble& f);

/// Local lower-price assessments to be dominated by an exchangeable
/// coherent lower prevision on the same domain.
struct EneProblem {
    Assessment local;

    explicit EneProblem(Assessment a) : local(std::move(a)) {}
    const Space& space() const { return local.space; }
    int arity() const { return local.arity; }
};

/// The count-space image of the local assessment: atom-mean profiles of the
/// assessed gambles, where gambles with identical profiles collapse to the
/// supremum of their prices.
CountAssessment induced_count_prices(const EneProblem& p);

struct EneResult {
    bool exists = false;
    /// Certificate: a dominating count mass, or the sure-loss multipliers of
    /// the induced count assessment (indexed by its collapsed items).
    AslResult certificate;
    CountAssessment induced;
};

/// Is there any exchangeable coherent lower prevision dominating the local
/// assessment?  Decided as avoiding sure loss of the induced count prices.
EneResult ene_exists(const EneProblem& p);

/// Value at f of the point-wise smallest exchangeable coherent lower
/// prevision dominating the local assessment.  Throws
/// NoExchangeableDominator when none exists.
Rational ene_value(const EneProblem& p, const Gamble& f);

/// Extend a level-n count model to level n+k.
struct ExtensionProblem {
    Space space;
    int n = 1;
    int k = 0;
    CountModel base;

    ExtensionProblem(Space s, int n_, int k_, CountModel base_);
};

struct ExtendResult {
    bool extendable = false;
    /// Level-(n+k) witness masses: for a precise base, one mass whose
    /// subsample marginal reproduces it; for an envelope base, one mass per
    /// extreme point when the envelope is reproduced, otherwise a single
    /// mass whose marginal lies inside the envelope.
    std::vector<std::vector<Rational>> witnesses;
    /// Envelope bases only: whether every extreme point of the base is
    /// itself the marginal of some level-(n+k) mass.  Extendability does not
    /// require this; it is reported because it certifies an extension whose
    /// marginal envelope coincides with the base.
    std::optional<bool> reproduces_envelope;
    /// When not extendable: a level-n count gamble g whose subsample
    /// extension stays everywhere below the base's value of g, plus the two
    /// sides of that strict inequality.
    std::optional<CountGamble> separating;
    Rational separating_upper;  // max over compositions of the extension of g
    Rational separating_base;   // base value of g
};

/// Decide extendability: does some exchangeable coherent model for n+k
/// variables dominate the base prices on the lifted gambles?  For a precise
/// base this is the feasibility of matching the subsample marginal to the
/// base mass; for an envelope base, the feasibility of marginalizing into
/// the envelope (equivalent, by separation, to the universal condition
/// max over compositions of the extension of g >= base value of g).
/// Imprecise assessment bases are converted to their envelope of extreme
/// dominating masses first.  Throws SureLoss when the base itself admits no
/// dominating mass.
ExtendResult extendable(const ExtensionProblem& p);

/// Value at a level-(n+k) count gamble h of the count distribution of the
/// point-wise smallest exchangeable extension:
///   sup { base value of g : subsample extension of g <= h pointwise },
/// solved as a single linear program (see docs/extension_lp.md).
/// Throws NotExtendable when the base does not extend.
Rational smallest_extension(const ExtensionProblem& p, const CountGamble& h);

}  // namespace lowprev
