#pragma once

#include "lowprev/bernstein.hpp"
#include "lowprev/exchangeability.hpp"
#include "lowprev/gamble.hpp"

#include <functional>
#include <optional>
#include <variant>
#include <vector>

namespace lowprev {

/// Expectation of a count gamble under the count-multinomial distribution
/// with parameter theta: sum_m g(m) B_m(theta).
Rational count_multinomial_mean(const CountGamble& g, const SimplexPoint& theta);

/// Expectation of a tuple gamble under n independent draws with common mass
/// theta.  Equals count_multinomial_mean of the atom-mean profile, exactly.
Rational multinomial_mean(const Gamble& f, const SimplexPoint& theta);

/// sum_x f(x) theta_x for a one-variable gamble given per label.
Rational simplex_mean(const std::vector<Rational>& f_on_labels, const SimplexPoint& theta);

/// A coherent lower prevision on simplex polynomials that generates a time
/// consistent exchangeable family.  Backings:
///  - a finite mixture of multinomial models: with weights, the precise
///    mixture sum_i w_i p(theta_i); without weights, the lower envelope
///    min_i p(theta_i) (mixing weights left vacuous);
///  - an explicit count family, evaluated by natural extension at the
///    requested level.  Values are level-independent whenever the family is
///    time consistent; this is not re-checked per call.
class RepresentingPrevision {
public:
    static RepresentingPrevision precise(SimplexPoint theta);
    static RepresentingPrevision mixture(std::vector<SimplexPoint> support,
                                         std::vector<Rational> weights);
    static RepresentingPrevision vacuous_mixture(std::vector<SimplexPoint> support);
    static RepresentingPrevision family(CountFamily levels);

    const Space& space() const { return space_; }

    /// The count model this prevision induces at level n.
    CountModel level_model(int n) const;
    bool has_level(int n) const;

    /// Lower value of the polynomial, evaluated through its Bernstein
    /// coefficients at the stated level (>= the degree).
    Rational value_at_level(const BernsteinPoly& p, int level) const;
    Rational value(const BernsteinPoly& p) const;
    Rational value(const MonomialForm& p) const;
    Rational upper_value_at_level(const BernsteinPoly& p, int level) const;

private:
    struct Mixture {
        std::vector<SimplexPoint> support;
        std::optional<std::vector<Rational>> weights;  // absent: vacuous mixing
    };
    RepresentingPrevision(Space space, std::variant<Mixture, CountFamily> backing);

    Space space_;
    std::variant<Mixture, CountFamily> backing_;
};

/// Lower value at level n of the gamble m -> h(m/n) on the frequency grid.
Rational frequency_distribution_value(const RepresentingPrevision& r, const MonomialForm& h,
                                      int n);
Rational frequency_distribution_value(
    const RepresentingPrevision& r,
    const std::function<Rational(const std::vector<Rational>&)>& h, int n);

struct ConvergenceReport {
    std::vector<std::pair<int, Rational>> values;  // (level, lower value)
    Rational limit;                                // representing value of h
};

/// Frequency-distribution values of a polynomial along a range of levels,
/// together with the representing value they approach.
ConvergenceReport frequency_convergence_report(const RepresentingPrevision& r,
                                               const MonomialForm& h, int n_from, int n_to);

/// Lower value at level n of m -> h(mean of f at frequency m/n).
Rational sample_mean_value(const RepresentingPrevision& r,
                           const std::vector<Rational>& f_on_labels,
                           const std::function<Rational(const Rational&)>& h, int n);

struct MeanSquareReport {
    Rational upper_value;
    Rational bound;  // 2p / (n(n+p)) * sup f^2
    bool pass = false;
};

/// Upper value of the squared gap between the first-(n+p) and first-n sample
/// means of f, against the worst-case bound.
MeanSquareReport mean_square_bound_check(const RepresentingPrevision& r,
                                         const std::vector<Rational>& f_on_labels, int n, int p,
                                         std::size_t cap = kDefaultEnumerationCap);

/// Lower raw moments of the success frequency for a binary space:
/// m_j = value(theta_1^j), j = 0..n_max.
std::vector<Rational> binary_moments(const RepresentingPrevision& r, int n_max);

}  // namespace lowprev
