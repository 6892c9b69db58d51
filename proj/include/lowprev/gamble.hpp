#pragma once

#include "lowprev/counts.hpp"
#include "lowprev/rational.hpp"
#include "lowprev/space.hpp"

#include <vector>

namespace lowprev {

/// A bounded reward function on X^arity, stored densely in tuple order.
class Gamble {
public:
    Gamble(Space space, int arity, std::vector<Rational> values);

    static Gamble constant(Space space, int arity, const Rational& c,
                           std::size_t cap = kDefaultEnumerationCap);
    static Gamble indicator(Space space, int arity, const Tuple& at,
                            std::size_t cap = kDefaultEnumerationCap);

    const Space& space() const { return space_; }
    int arity() const { return arity_; }
    std::size_t size() const { return values_.size(); }
    const std::vector<Rational>& values() const { return values_; }
    const Rational& at(std::size_t index) const { return values_.at(index); }
    const Rational& at(const Tuple& t) const { return values_.at(tuple_index(space_, t)); }
    Rational& at(std::size_t index) { return values_.at(index); }

    Rational min() const;
    Rational max() const;

    Gamble operator+(const Gamble& other) const;
    Gamble operator-(const Gamble& other) const;
    Gamble operator-() const;
    Gamble scaled(const Rational& factor) const;
    Gamble shifted(const Rational& offset) const;
    bool operator==(const Gamble& other) const;

private:
    Space space_;
    int arity_;
    std::vector<Rational> values_;
};

/// A reward function on the count space N_X^total, stored in CountBasis order.
class CountGamble {
public:
    CountGamble(Space space, int total, std::vector<Rational> values);

    static CountGamble constant(Space space, int total, const Rational& c);
    static CountGamble indicator(Space space, int total, const CountVector& at);

    const Space& space() const { return space_; }
    int total() const { return total_; }
    std::size_t size() const { return values_.size(); }
    const std::vector<Rational>& values() const { return values_; }
    const Rational& at(std::size_t index) const { return values_.at(index); }
    Rational& at(std::size_t index) { return values_.at(index); }
    const Rational& at(const CountVector& m) const;

    Rational min() const;
    Rational max() const;

    CountGamble operator+(const CountGamble& other) const;
    CountGamble operator-(const CountGamble& other) const;
    CountGamble operator-() const;
    CountGamble scaled(const Rational& factor) const;
    CountGamble shifted(const Rational& offset) const;
    bool operator==(const CountGamble& other) const;

private:
    Space space_;
    int total_;
    std::vector<Rational> values_;
};

/// (pi f)(x) = f(pi x).
Gamble permute_gamble(const Gamble& f, const Permutation& pi);

/// Expectation of f under uniform sampling without replacement from an urn
/// of composition m, i.e. the mean of f over the invariant atom [m].
Rational atom_mean(const Gamble& f, const CountVector& m);

/// The count gamble m -> atom_mean(f, m), computed in a single pass over X^N.
CountGamble atom_mean_profile(const Gamble& f);

/// The symmetrized gamble: constant on each invariant atom, equal there to
/// the atom mean of f.  Idempotent and linear in f.
Gamble symmetrize(const Gamble& f);

/// Lift a count gamble to the tuple space (h composed with the counting map).
Gamble lift_count_gamble(const CountGamble& h, std::size_t cap = kDefaultEnumerationCap);

/// Expectation of a level-n count gamble under drawing n balls without
/// replacement from an urn of composition mu (mu.total() >= n).
Rational subsample_mean(const CountGamble& g, const CountVector& mu);

/// The profile mu -> subsample_mean(g, mu) over the level-`higher_total`
/// count basis.  Maps the count distribution of n draws into n+k draws; the
/// same kernel performs Bernstein degree elevation.
CountGamble subsample_extension(const CountGamble& g, int higher_total);

/// f*(z_1..z_N) = f(z_1..z_n) for N = target_arity >= n.
Gamble cylindrical_extension(const Gamble& f, int target_arity,
                             std::size_t cap = kDefaultEnumerationCap);

}  // namespace lowprev
