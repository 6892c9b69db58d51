#pragma once

#include "lowprev/errors.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace lowprev {

/// A finite possibility space: an ordered list of distinct category labels.
/// The label order is fixed for the lifetime of the value; it defines the
/// component order of tuples and count vectors everywhere in the library.
class Space {
public:
    explicit Space(std::vector<std::string> labels);

    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t size() const { return labels_.size(); }
    const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }

    /// Index of a label; throws UnknownLabel.
    int index_of(const std::string& label) const;

    bool operator==(const Space& other) const { return labels_ == other.labels_; }
    bool operator!=(const Space& other) const { return !(*this == other); }

private:
    std::vector<std::string> labels_;
};

/// An element of X^N as label indices into the space.
using Tuple = std::vector<int>;

/// A permutation of positions {0, ..., N-1}.
using Permutation = std::vector<int>;

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

/// |X|^arity if it fits under `cap`, otherwise throws CapExceeded.
std::size_t tuple_space_size(const Space& space, int arity, std::size_t cap = kDefaultEnumerationCap);

/// All tuples of X^arity in lexicographic order of the label indices.
std::vector<Tuple> enumerate_tuples(const Space& space, int arity,
                                    std::size_t cap = kDefaultEnumerationCap);

/// Rank of a tuple in the lexicographic enumeration.
std::size_t tuple_index(const Space& space, const Tuple& t);

Tuple tuple_at(const Space& space, int arity, std::size_t index);

void validate_permutation(const Permutation& pi, int arity);

/// (pi x)_k = x_{pi(k)}.
Tuple apply_permutation(const Permutation& pi, const Tuple& x);

/// The adjacent transpositions (0 1), (1 2), ..., which generate the
/// full permutation group of {0, ..., arity-1}.
std::vector<Permutation> transposition_generators(int arity);

}  // namespace lowprev
