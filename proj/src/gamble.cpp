#include "lowprev/gamble.hpp"

#include "lowprev/errors.hpp"

#include <algorithm>

namespace lowprev {

namespace {

void require_same_domain(const Space& a, int na, const Space& b, int nb) {
    if (a != b || na != nb) throw ParseError("gambles live on different domains");
}

}  // namespace

Gamble::Gamble(Space space, int arity, std::vector<Rational> values)
    : space_(std::move(space)), arity_(arity), values_(std::move(values)) {
    std::size_t expected = tuple_space_size(space_, arity_);
    if (values_.size() != expected)
        throw ParseError("gamble needs one value per tuple (" + std::to_string(expected) + ")");
}

Gamble Gamble::constant(Space space, int arity, const Rational& c, std::size_t cap) {
    std::size_t n = tuple_space_size(space, arity, cap);
    return Gamble(std::move(space), arity, std::vector<Rational>(n, c));
}

Gamble Gamble::indicator(Space space, int arity, const Tuple& at, std::size_t cap) {
    std::size_t n = tuple_space_size(space, arity, cap);
    std::vector<Rational> values(n, Rational(0));
    values.at(tuple_index(space, at)) = 1;
    return Gamble(std::move(space), arity, std::move(values));
}

Rational Gamble::min() const { return *std::min_element(values_.begin(), values_.end()); }
Rational Gamble::max() const { return *std::max_element(values_.begin(), values_.end()); }

Gamble Gamble::operator+(const Gamble& other) const {
    require_same_domain(space_, arity_, other.space_, other.arity_);
    std::vector<Rational> values(values_);
    for (std::size_t i = 0; i < values.size(); ++i) values[i] += other.values_[i];
    return Gamble(space_, arity_, std::move(values));
}

Gamble Gamble::operator-(const Gamble& other) const { return *this + (-other); }

Gamble Gamble::operator-() const {
    std::vector<Rational> values(values_.size());
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = -values_[i];
    return Gamble(space_, arity_, std::move(values));
}

Gamble Gamble::scaled(const Rational& factor) const {
    std::vector<Rational> values(values_);
    for (auto& v : values) v *= factor;
    return Gamble(space_, arity_, std::move(values));
}

Gamble Gamble::shifted(const Rational& offset) const {
    std::vector<Rational> values(values_);
    for (auto& v : values) v += offset;
    return Gamble(space_, arity_, std::move(values));
}

bool Gamble::operator==(const Gamble& other) const {
    return space_ == other.space_ && arity_ == other.arity_ && values_ == other.values_;
}

CountGamble::CountGamble(Space space, int total, std::vector<Rational> values)
    : space_(std::move(space)), total_(total), values_(std::move(values)) {
    CountBasis basis(space_, total_);
    if (values_.size() != basis.size())
        throw ParseError("count gamble needs one value per count vector (" +
                         std::to_string(basis.size()) + ")");
}

CountGamble CountGamble::constant(Space space, int total, const Rational& c) {
    CountBasis basis(space, total);
    return CountGamble(std::move(space), total, std::vector<Rational>(basis.size(), c));
}

CountGamble CountGamble::indicator(Space space, int total, const CountVector& at) {
    CountBasis basis(space, total);
    std::vector<Rational> values(basis.size(), Rational(0));
    values.at(basis.index_of(at)) = 1;
    return CountGamble(std::move(space), total, std::move(values));
}

const Rational& CountGamble::at(const CountVector& m) const {
    return values_.at(CountBasis(space_, total_).index_of(m));
}

Rational CountGamble::min() const { return *std::min_element(values_.begin(), values_.end()); }
Rational CountGamble::max() const { return *std::max_element(values_.begin(), values_.end()); }

CountGamble CountGamble::operator+(const CountGamble& other) const {
    require_same_domain(space_, total_, other.space_, other.total_);
    std::vector<Rational> values(values_);
    for (std::size_t i = 0; i < values.size(); ++i) values[i] += other.values_[i];
    return CountGamble(space_, total_, std::move(values));
}

CountGamble CountGamble::operator-(const CountGamble& other) const { return *this + (-other); }

CountGamble CountGamble::operator-() const {
    std::vector<Rational> values(values_.size());
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = -values_[i];
    return CountGamble(space_, total_, std::move(values));
}

CountGamble CountGamble::scaled(const Rational& factor) const {
    std::vector<Rational> values(values_);
    for (auto& v : values) v *= factor;
    return CountGamble(space_, total_, std::move(values));
}

CountGamble CountGamble::shifted(const Rational& offset) const {
    std::vector<Rational> values(values_);
    for (auto& v : values) v += offset;
    return CountGamble(space_, total_, std::move(values));
}

bool CountGamble::operator==(const CountGamble& other) const {
    return space_ == other.space_ && total_ == other.total_ && values_ == other.values_;
}

Gamble permute_gamble(const Gamble& f, const Permutation& pi) {
    validate_permutation(pi, f.arity());
    std::vector<Rational> values(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        Tuple x = tuple_at(f.space(), f.arity(), i);
        values[i] = f.at(apply_permutation(pi, x));
    }
    return Gamble(f.space(), f.arity(), std::move(values));
}

Rational atom_mean(const Gamble& f, const CountVector& m) {
    if (m.total() != f.arity() || m.components() != f.space().size())
        throw ParseError("count vector does not match the gamble domain");
    Rational sum = 0;
    for (const Tuple& z : invariant_atom(f.space(), m)) sum += f.at(z);
    return sum / Rational(atom_size(m));
}

CountGamble atom_mean_profile(const Gamble& f) {
    CountBasis basis(f.space(), f.arity());
    std::vector<Rational> sums(basis.size(), Rational(0));
    for (std::size_t i = 0; i < f.size(); ++i) {
        Tuple z = tuple_at(f.space(), f.arity(), i);
        sums[basis.index_of(count_vector(f.space(), z))] += f.at(i);
    }
    for (std::size_t j = 0; j < basis.size(); ++j) sums[j] /= Rational(atom_size(basis.at(j)));
    return CountGamble(f.space(), f.arity(), std::move(sums));
}

Gamble symmetrize(const Gamble& f) { return lift_count_gamble(atom_mean_profile(f)); }

Gamble lift_count_gamble(const CountGamble& h, std::size_t cap) {
    std::size_t n = tuple_space_size(h.space(), h.total(), cap);
    CountBasis basis(h.space(), h.total());
    std::vector<Rational> values(n);
    for (std::size_t i = 0; i < n; ++i) {
        Tuple z = tuple_at(h.space(), h.total(), i);
        values[i] = h.at(basis.index_of(count_vector(h.space(), z)));
    }
    return Gamble(h.space(), h.total(), std::move(values));
}

Rational subsample_mean(const CountGamble& g, const CountVector& mu) {
    if (mu.total() < g.total() || mu.components() != g.space().size())
        throw ParseError("urn composition does not match the count gamble");
    CountBasis basis(g.space(), g.total());
    Rational sum = 0;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        Rational w = subsample_weight(basis.at(j), mu);
        if (w != 0) sum += w * g.at(j);
    }
    return sum;
}

CountGamble subsample_extension(const CountGamble& g, int higher_total) {
    if (higher_total < g.total())
        throw ParseError("target level is below the count gamble level");
    CountBasis target(g.space(), higher_total);
    std::vector<Rational> values(target.size());
    for (std::size_t i = 0; i < target.size(); ++i) values[i] = subsample_mean(g, target.at(i));
    return CountGamble(g.space(), higher_total, std::move(values));
}

Gamble cylindrical_extension(const Gamble& f, int target_arity, std::size_t cap) {
    if (target_arity < f.arity())
        throw ParseError("cylindrical extension cannot shrink the arity");
    std::size_t n = tuple_space_size(f.space(), target_arity, cap);
    std::vector<Rational> values(n);
    for (std::size_t i = 0; i < n; ++i) {
        Tuple z = tuple_at(f.space(), target_arity, i);
        z.resize(static_cast<std::size_t>(f.arity()));
        values[i] = f.at(z);
    }
    return Gamble(f.space(), target_arity, std::move(values));
}

}  // namespace lowprev
