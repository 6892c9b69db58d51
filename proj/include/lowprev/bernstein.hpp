#pragma once

#include "lowprev/counts.hpp"
#include "lowprev/gamble.hpp"
#include "lowprev/rational.hpp"
#include "lowprev/space.hpp"

#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace lowprev {

/// A point of the X-simplex: one non-negative weight per label, summing to 1.
class SimplexPoint {
public:
    SimplexPoint(Space space, std::vector<Rational> theta);

    const Space& space() const { return space_; }
    const std::vector<Rational>& theta() const { return theta_; }
    const Rational& at(int label_index) const {
        return theta_.at(static_cast<std::size_t>(label_index));
    }

    /// The degenerate point putting all weight on one label.
    static SimplexPoint vertex(Space space, int label_index);

private:
    Space space_;
    std::vector<Rational> theta_;
};

/// A polynomial on the X-simplex held as Bernstein coefficients of an
/// explicit degree; the coefficients are a gamble on the degree-n count
/// space.  All the algebra below (evaluation, elevation, range bounds) is
/// native to this form.
struct BernsteinPoly {
    CountGamble coefficients;

    int degree() const { return coefficients.total(); }
    const Space& space() const { return coefficients.space(); }
};

/// Monomial input form: exponent vector (one entry per label) -> coefficient.
using MonomialForm = std::map<std::vector<int>, Rational>;

/// B_m(theta) = nu(m) prod_x theta_x^{m_x}, with 0^0 = 1.  Non-negative on
/// the simplex and the fixed-degree family sums to one.
Rational basis_eval(const CountVector& m, const SimplexPoint& theta);

Rational eval(const BernsteinPoly& p, const SimplexPoint& theta);

/// Degree elevation: the degree-(n+k) coefficients are subsample means of
/// the degree-n ones, so evaluation is unchanged at every point.
BernsteinPoly elevate(const BernsteinPoly& p, int by);

/// The unique degree-n Bernstein form of a polynomial given in monomial
/// form: each monomial is homogenized with powers of sum_x theta_x and the
/// resulting degree-n terms are collected.  Throws DegreeTooLow when n is
/// below the total degree.
BernsteinPoly decompose(const Space& space, const MonomialForm& p, int degree);

int total_degree(const MonomialForm& p);

/// Direct evaluation of the monomial form (independent of the Bernstein
/// route).
Rational eval_monomials(const MonomialForm& p, const SimplexPoint& theta);

/// [min coefficient, max coefficient]: encloses the exact range of the
/// polynomial over the simplex.
std::pair<Rational, Rational> enclosure(const BernsteinPoly& p);

/// Enclosures at every degree from p's own up to max_degree; the intervals
/// are nested (non-increasing).
std::vector<std::pair<Rational, Rational>> enclosure_sequence(const BernsteinPoly& p,
                                                              int max_degree);

/// The enclosure sequence together with the remaining slack against exact
/// evaluations on the rational grid {m / resolution}.  The true range lies
/// between the sampled extremes and the final enclosure, so the gaps bound
/// how loose the degree-max_degree enclosure still is; they are reported,
/// never asserted against.
struct EnclosureReport {
    std::vector<std::pair<Rational, Rational>> intervals;
    Rational grid_min, grid_max;  // exact values of p on the grid
    Rational gap_min, gap_max;    // grid extreme minus final bound, per side
};

EnclosureReport enclosure_convergence(const BernsteinPoly& p, int max_degree,
                                      int grid_resolution = 8);

/// The degree-n approximant of a function h sampled on the frequency grid
/// {m/n}: coefficients b(m) = h(m/n).
BernsteinPoly approximant(const Space& space, int degree,
                          const std::function<Rational(const std::vector<Rational>&)>& h);

/// Grid values of a monomial-form polynomial: the approximant of p itself.
BernsteinPoly approximant(const Space& space, int degree, const MonomialForm& p);

}  // namespace lowprev
