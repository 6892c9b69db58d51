#pragma once

#include "lowprev/gamble.hpp"
#include "lowprev/rational.hpp"
#include "lowprev/space.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace lowprev {

// Note on continuity: coherent lower previsions are continuous under uniform
// convergence, but on a finite domain every gamble is simple, so the property
// carries no content here and gets no operation.

/// Supremum-buying-price assessments over an anonymous finite domain of
/// `domain` points.  Typed wrappers below adapt tuple and count spaces.
struct RawAssessment {
    std::size_t domain = 0;
    std::vector<std::pair<std::vector<Rational>, Rational>> items;
};

/// Certificate-bearing verdict for avoiding sure loss: either a dominating
/// mass function, or non-negative multipliers lambda with
/// sup_x sum_k lambda_k [f_k(x) - p_k] < 0 (normalized to max lambda = 1).
struct AslResult {
    bool avoids = false;
    std::vector<Rational> mass;
    std::vector<Rational> lambda;
};

AslResult raw_avoids_sure_loss(const RawAssessment& a);

/// Smallest coherent extension value at f, solved as the LP
/// min q.f over masses q with q.f_k >= p_k; throws SureLoss when none exist.
Rational raw_natural_extension(const RawAssessment& a, const std::vector<Rational>& f);

/// The same value from the price-combination side: the LP
/// max t s.t. t + sum_k lambda_k [f_k(x) - p_k] <= f(x), lambda >= 0.
/// Kept as an independent route; equality with the mass form is exact.
Rational raw_natural_extension_primal(const RawAssessment& a, const std::vector<Rational>& f);

bool raw_is_linear(const RawAssessment& a);

/// When raw_is_linear: the unique dominating mass function.
std::vector<Rational> raw_linear_mass(const RawAssessment& a);

/// A finite set of lower-prevision assessments on gambles over X^arity.
struct Assessment {
    Space space;
    int arity = 1;
    std::vector<std::pair<Gamble, Rational>> items;

    Assessment(Space s, int n) : space(std::move(s)), arity(n) {}
    void add(Gamble f, Rational lower_price);
    RawAssessment raw() const;
};

/// A finitely generated credal set: the convex hull of its extreme mass
/// functions on X^arity.
struct CredalSet {
    Space space;
    int arity = 1;
    std::vector<std::vector<Rational>> extreme_points;

    CredalSet(Space s, int n, std::vector<std::vector<Rational>> points);
};

AslResult avoids_sure_loss(const Assessment& a);

struct CoherenceResult {
    bool coherent = false;
    bool sure_loss = false;
    /// When incoherent without sure loss: the first assessed gamble whose
    /// price the other assessments raise, and the raised value.
    std::optional<std::size_t> violating_item;
    Rational raised_value;
};

CoherenceResult is_coherent(const Assessment& a);

Rational natural_extension(const Assessment& a, const Gamble& f);
Rational natural_extension_primal(const Assessment& a, const Gamble& f);

/// Conjugate upper value -E(-f).
Rational natural_extension_upper(const Assessment& a, const Gamble& f);

/// Lower envelope min over the extreme points of the expectation of f.
Rational envelope_value(const CredalSet& c, const Gamble& f);
Rational envelope_upper_value(const CredalSet& c, const Gamble& f);

/// True iff the natural extension is self-conjugate on a spanning set,
/// i.e. the assessment pins down a single linear prevision.
bool is_linear(const Assessment& a);

}  // namespace lowprev
