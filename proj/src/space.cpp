#include "lowprev/space.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lowprev {

Space::Space(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw ParseError("a space needs at least one label");
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) throw ParseError("space labels must be distinct");
}

int Space::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw UnknownLabel("unknown label '" + label + "'");
    return static_cast<int>(it - labels_.begin());
}

std::size_t tuple_space_size(const Space& space, int arity, std::size_t cap) {
    if (arity < 0) throw ParseError("arity must be non-negative");
    std::size_t size = 1;
    for (int i = 0; i < arity; ++i) {
        if (size > cap / space.size())
            throw CapExceeded("tuple space exceeds enumeration cap of " + std::to_string(cap));
        size *= space.size();
    }
    return size;
}

std::vector<Tuple> enumerate_tuples(const Space& space, int arity, std::size_t cap) {
    std::size_t total = tuple_space_size(space, arity, cap);
    std::vector<Tuple> out;
    out.reserve(total);
    Tuple t(static_cast<std::size_t>(arity), 0);
    for (std::size_t i = 0; i < total; ++i) {
        out.push_back(t);
        for (int k = arity - 1; k >= 0; --k) {
            if (++t[static_cast<std::size_t>(k)] < static_cast<int>(space.size())) break;
            t[static_cast<std::size_t>(k)] = 0;
        }
    }
    return out;
}

std::size_t tuple_index(const Space& space, const Tuple& t) {
    std::size_t index = 0;
    for (int component : t) {
        if (component < 0 || component >= static_cast<int>(space.size()))
            throw UnknownLabel("tuple component out of range");
        index = index * space.size() + static_cast<std::size_t>(component);
    }
    return index;
}

Tuple tuple_at(const Space& space, int arity, std::size_t index) {
    Tuple t(static_cast<std::size_t>(arity), 0);
    for (int k = arity - 1; k >= 0; --k) {
        t[static_cast<std::size_t>(k)] = static_cast<int>(index % space.size());
        index /= space.size();
    }
    return t;
}

void validate_permutation(const Permutation& pi, int arity) {
    if (static_cast<int>(pi.size()) != arity)
        throw BadPermutation("permutation has wrong length");
    std::vector<bool> hit(pi.size(), false);
    for (int p : pi) {
        if (p < 0 || p >= arity || hit[static_cast<std::size_t>(p)])
            throw BadPermutation("not a bijection of {0..N-1}");
        hit[static_cast<std::size_t>(p)] = true;
    }
}

Tuple apply_permutation(const Permutation& pi, const Tuple& x) {
    Tuple y(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) y[k] = x[static_cast<std::size_t>(pi[k])];
    return y;
}

std::vector<Permutation> transposition_generators(int arity) {
    std::vector<Permutation> gens;
    for (int i = 0; i + 1 < arity; ++i) {
        Permutation pi(static_cast<std::size_t>(arity));
        std::iota(pi.begin(), pi.end(), 0);
        std::swap(pi[static_cast<std::size_t>(i)], pi[static_cast<std::size_t>(i) + 1]);
        gens.push_back(std::move(pi));
    }
    return gens;
}

}  // namespace lowprev
