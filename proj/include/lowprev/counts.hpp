#pragma once

#include "lowprev/rational.hpp"
#include "lowprev/space.hpp"

#include <compare>
#include <map>
#include <vector>

namespace lowprev {

/// Per-label occurrence counts of an N-tuple, in space label order.
class CountVector {
public:
    explicit CountVector(std::vector<int> counts);

    const std::vector<int>& counts() const { return counts_; }
    int total() const { return total_; }
    int count(int label_index) const { return counts_.at(static_cast<std::size_t>(label_index)); }
    std::size_t components() const { return counts_.size(); }

    auto operator<=>(const CountVector& other) const { return counts_ <=> other.counts_; }
    bool operator==(const CountVector& other) const { return counts_ == other.counts_; }

private:
    std::vector<int> counts_;
    int total_;
};

/// Number of tuples sharing the count vector m: N! / prod_x m_x!.
Int atom_size(const CountVector& m);

/// Tally of an N-tuple over the space.
CountVector count_vector(const Space& space, const Tuple& t);

/// All tuples whose count vector is m, in lexicographic order.
std::vector<Tuple> invariant_atom(const Space& space, const CountVector& m,
                                  std::size_t cap = kDefaultEnumerationCap);

/// The count vectors of total N over a space, enumerated once in ascending
/// lexicographic order of the components.  This is the index order used for
/// every gamble on the count space.
class CountBasis {
public:
    CountBasis(Space space, int total);

    const Space& space() const { return space_; }
    int total() const { return total_; }
    const std::vector<CountVector>& vectors() const { return vectors_; }
    std::size_t size() const { return vectors_.size(); }
    const CountVector& at(std::size_t index) const { return vectors_.at(index); }
    std::size_t index_of(const CountVector& m) const;

private:
    Space space_;
    int total_;
    std::vector<CountVector> vectors_;
    std::map<std::vector<int>, std::size_t> index_;
};

/// Probability of drawing sub-count m when sampling m.total() balls without
/// replacement from an urn of composition mu: nu(m) nu(mu-m) / nu(mu).
/// Zero unless m <= mu componentwise.  For fixed mu these weights are
/// non-negative and sum to one over the level-m.total() count basis.
Rational subsample_weight(const CountVector& m, const CountVector& mu);

}  // namespace lowprev
