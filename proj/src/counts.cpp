#include "lowprev/counts.hpp"

#include "lowprev/errors.hpp"

#include <algorithm>
#include <numeric>

namespace lowprev {

CountVector::CountVector(std::vector<int> counts) : counts_(std::move(counts)) {
    if (counts_.empty()) throw ParseError("count vector needs at least one component");
    total_ = 0;
    for (int c : counts_) {
        if (c < 0) throw ParseError("count vector components must be non-negative");
        total_ += c;
    }
}

Int atom_size(const CountVector& m) {
    Int size = factorial(m.total());
    for (int c : m.counts()) size /= factorial(c);
    return size;
}

CountVector count_vector(const Space& space, const Tuple& t) {
    std::vector<int> counts(space.size(), 0);
    for (int component : t) {
        if (component < 0 || component >= static_cast<int>(space.size()))
            throw UnknownLabel("tuple component out of range");
        ++counts[static_cast<std::size_t>(component)];
    }
    return CountVector(std::move(counts));
}

std::vector<Tuple> invariant_atom(const Space& space, const CountVector& m, std::size_t cap) {
    if (m.components() != space.size())
        throw ParseError("count vector does not match the space");
    if (atom_size(m) > cap)
        throw CapExceeded("invariant atom exceeds enumeration cap");
    Tuple sorted;
    for (std::size_t x = 0; x < m.components(); ++x)
        sorted.insert(sorted.end(), static_cast<std::size_t>(m.count(static_cast<int>(x))),
                      static_cast<int>(x));
    std::vector<Tuple> atom;
    do {
        atom.push_back(sorted);
    } while (std::next_permutation(sorted.begin(), sorted.end()));
    return atom;
}

namespace {

void enumerate_counts(std::size_t component, int remaining, std::vector<int>& current,
                      std::size_t width, std::vector<CountVector>& out) {
    if (component + 1 == width) {
        current[component] = remaining;
        out.emplace_back(current);
        return;
    }
    for (int c = 0; c <= remaining; ++c) {
        current[component] = c;
        enumerate_counts(component + 1, remaining - c, current, width, out);
    }
}

}  // namespace

CountBasis::CountBasis(Space space, int total) : space_(std::move(space)), total_(total) {
    if (total_ < 0) throw ParseError("count level must be non-negative");
    std::vector<int> current(space_.size(), 0);
    enumerate_counts(0, total_, current, space_.size(), vectors_);
    for (std::size_t i = 0; i < vectors_.size(); ++i) index_[vectors_[i].counts()] = i;
}

std::size_t CountBasis::index_of(const CountVector& m) const {
    auto it = index_.find(m.counts());
    if (it == index_.end()) throw ParseError("count vector not in this basis");
    return it->second;
}

Rational subsample_weight(const CountVector& m, const CountVector& mu) {
    if (m.components() != mu.components())
        throw ParseError("count vectors live on different spaces");
    std::vector<int> rest(mu.components());
    for (std::size_t x = 0; x < mu.components(); ++x) {
        int d = mu.count(static_cast<int>(x)) - m.count(static_cast<int>(x));
        if (d < 0) return 0;
        rest[x] = d;
    }
    return Rational(atom_size(m) * atom_size(CountVector(rest)), atom_size(mu));
}

}  // namespace lowprev
