#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lowprev/counts.hpp"
#include "lowprev/errors.hpp"
#include "lowprev/gamble.hpp"
#include "lowprev/space.hpp"
#include "oracles.hpp"

using namespace lowprev;

namespace {

Space binary() { return Space({"0", "1"}); }
Space ternary() { return Space({"a", "b", "c"}); }

Gamble random_gamble(const Space& space, int arity, oracles::RationalGen& gen) {
    std::vector<Rational> values(tuple_space_size(space, arity));
    for (auto& v : values) v = gen.value();
    return Gamble(space, arity, std::move(values));
}

}  // namespace

TEST_CASE("space validation") {
    CHECK_THROWS_AS(Space({}), ParseError);
    CHECK_THROWS_AS(Space({"a", "a"}), ParseError);
    CHECK(binary().index_of("1") == 1);
    CHECK_THROWS_AS(binary().index_of("x"), UnknownLabel);
}

TEST_CASE("tuple enumeration is lexicographic") {
    auto tuples = enumerate_tuples(binary(), 2);
    REQUIRE(tuples.size() == 4);
    CHECK(tuples[0] == Tuple{0, 0});
    CHECK(tuples[1] == Tuple{0, 1});
    CHECK(tuples[2] == Tuple{1, 0});
    CHECK(tuples[3] == Tuple{1, 1});

    auto singleton = enumerate_tuples(Space({"a"}), 3);
    REQUIRE(singleton.size() == 1);
    CHECK(singleton[0] == Tuple{0, 0, 0});

    auto eight = enumerate_tuples(binary(), 3);
    REQUIRE(eight.size() == 8);
    CHECK(eight.front() == Tuple{0, 0, 0});
    CHECK(eight.back() == Tuple{1, 1, 1});

    for (std::size_t i = 0; i < eight.size(); ++i) {
        CHECK(tuple_index(binary(), eight[i]) == i);
        CHECK(tuple_at(binary(), 3, i) == eight[i]);
    }
}

TEST_CASE("enumeration cap") {
    CHECK_THROWS_AS(enumerate_tuples(binary(), 3, 7), CapExceeded);
    CHECK_THROWS_AS(Gamble::constant(binary(), 21, Rational(0)), CapExceeded);
}

TEST_CASE("count vectors") {
    CHECK(count_vector(binary(), {1, 0, 1}) == CountVector({1, 2}));
    CHECK(count_vector(Space({"a"}), {0, 0, 0}) == CountVector({3}));
    CHECK(count_vector(binary(), {0, 1}) == CountVector({1, 1}));
    CHECK_THROWS_AS(count_vector(binary(), {0, 7}), UnknownLabel);
}

TEST_CASE("atom sizes") {
    CHECK(atom_size(CountVector({1, 2})) == 3);
    CHECK(atom_size(CountVector({0, 3})) == 1);
    // Binary N=3: the four atoms have sizes 1, 3, 3, 1.
    CountBasis basis(binary(), 3);
    std::vector<Int> sizes;
    for (const auto& m : basis.vectors()) sizes.push_back(atom_size(m));
    CHECK(sizes == std::vector<Int>{1, 3, 3, 1});
}

TEST_CASE("invariant atoms") {
    auto atom = invariant_atom(binary(), CountVector({1, 2}));
    REQUIRE(atom.size() == 3);
    CHECK(atom[0] == Tuple{0, 1, 1});
    CHECK(atom[1] == Tuple{1, 0, 1});
    CHECK(atom[2] == Tuple{1, 1, 0});

    auto constant = invariant_atom(binary(), CountVector({0, 2}));
    REQUIRE(constant.size() == 1);
    CHECK(constant[0] == Tuple{1, 1});

    // Sizes match atom_size across every atom at N=3 over three labels.
    CountBasis basis(ternary(), 3);
    for (const auto& m : basis.vectors())
        CHECK(Int(invariant_atom(ternary(), m).size()) == atom_size(m));
}

TEST_CASE("count basis covers the tuple space") {
    // sum_m nu(m) = |X|^N.
    for (int n = 1; n <= 4; ++n) {
        Int total = 0;
        CountBasis basis(ternary(), n);
        for (const auto& m : basis.vectors()) total += atom_size(m);
        CHECK(total == Int(pow(Int(3), n)));
    }
}

TEST_CASE("permuted gambles") {
    Gamble f = Gamble::indicator(binary(), 2, {1, 0});
    Gamble swapped = permute_gamble(f, {1, 0});
    CHECK(swapped == Gamble::indicator(binary(), 2, {0, 1}));

    Gamble same = permute_gamble(f, {0, 1});
    CHECK(same == f);

    CHECK_THROWS_AS(permute_gamble(f, {0, 0}), BadPermutation);
    CHECK_THROWS_AS(permute_gamble(f, {0}), BadPermutation);

    // pi(sigma f) = (sigma . pi) f on random gambles.
    oracles::RationalGen gen(11);
    for (int trial = 0; trial < 5; ++trial) {
        Gamble g = random_gamble(binary(), 3, gen);
        Permutation pi{1, 2, 0}, sigma{2, 0, 1};
        Gamble lhs = permute_gamble(permute_gamble(g, sigma), pi);
        Permutation composed(3);
        for (int k = 0; k < 3; ++k) composed[k] = sigma[static_cast<std::size_t>(pi[k])];
        CHECK(lhs == permute_gamble(g, composed));
    }
}

TEST_CASE("atom means") {
    Gamble f = Gamble::indicator(binary(), 3, {1, 0, 1});
    CHECK(atom_mean(f, CountVector({1, 2})) == Rational(1, 3));
    CHECK(atom_mean(Gamble::constant(binary(), 3, Rational(1)), CountVector({2, 1})) == 1);

    // Success-first indicator: two of the three atom tuples start with 1.
    std::vector<Rational> values(8, Rational(0));
    for (std::size_t i = 4; i < 8; ++i) values[i] = 1;
    Gamble first(binary(), 3, values);
    CHECK(atom_mean(first, CountVector({1, 2})) == Rational(2, 3));

    // Profile agrees with the scan oracle everywhere.
    oracles::RationalGen gen(23);
    Gamble g = random_gamble(ternary(), 3, gen);
    CountGamble profile = atom_mean_profile(g);
    CountBasis basis(ternary(), 3);
    for (std::size_t j = 0; j < basis.size(); ++j) {
        CHECK(profile.at(j) == oracles::scan_atom_mean(g, basis.at(j)));
        CHECK(profile.at(j) == atom_mean(g, basis.at(j)));
    }
}

TEST_CASE("atom means are permutation invariant and linear") {
    oracles::RationalGen gen(31);
    Gamble f = random_gamble(binary(), 3, gen);
    Gamble g = random_gamble(binary(), 3, gen);
    for (const auto& pi : oracles::all_permutations(3))
        CHECK(atom_mean_profile(permute_gamble(f, pi)) == atom_mean_profile(f));
    CHECK(atom_mean_profile(f + g) == atom_mean_profile(f) + atom_mean_profile(g));
    CHECK(atom_mean_profile(f.scaled(Rational(3, 2))) ==
          atom_mean_profile(f).scaled(Rational(3, 2)));
}

TEST_CASE("symmetrization") {
    Gamble f = Gamble::indicator(binary(), 3, {1, 0, 1});
    Gamble sym = symmetrize(f);
    Gamble expected = lift_count_gamble(
        CountGamble::indicator(binary(), 3, CountVector({1, 2})).scaled(Rational(1, 3)));
    CHECK(sym == expected);

    CHECK(symmetrize(Gamble::constant(binary(), 3, Rational(5, 7))) ==
          Gamble::constant(binary(), 3, Rational(5, 7)));

    oracles::RationalGen gen(41);
    for (int trial = 0; trial < 4; ++trial) {
        Gamble g = random_gamble(binary(), 3, gen);
        CHECK(symmetrize(g) == oracles::permutation_average(g));
        CHECK(symmetrize(symmetrize(g)) == symmetrize(g));
    }
}

TEST_CASE("subsample weights and means") {
    // Binary n=2 into three draws: the success-count indicator at s=1.
    CountGamble g = CountGamble::indicator(binary(), 2, CountVector({1, 1}));
    CHECK(subsample_mean(g, CountVector({2, 1})) == Rational(2, 3));
    CHECK(subsample_mean(g, CountVector({3, 0})) == 0);
    CHECK(subsample_mean(CountGamble::constant(binary(), 2, Rational(1)), CountVector({1, 2})) ==
          1);

    // Weights are a probability mass over the lower level.
    CountBasis high(ternary(), 5), low(ternary(), 3);
    for (const auto& mu : high.vectors()) {
        Rational total = 0;
        for (const auto& m : low.vectors()) {
            Rational w = subsample_weight(m, mu);
            CHECK(w >= 0);
            total += w;
        }
        CHECK(total == 1);
    }
}

TEST_CASE("cylindrical extension") {
    CHECK(cylindrical_extension(Gamble::constant(binary(), 2, Rational(3)), 4) ==
          Gamble::constant(binary(), 4, Rational(3)));
    Gamble f = Gamble::indicator(binary(), 2, {1, 0});
    CHECK(cylindrical_extension(f, 2) == f);
    CHECK(cylindrical_extension(Gamble::indicator(binary(), 1, {1}), 2) ==
          Gamble::indicator(binary(), 2, {1, 0}) + Gamble::indicator(binary(), 2, {1, 1}));
    CHECK_THROWS_AS(cylindrical_extension(f, 1), ParseError);
}

TEST_CASE("extending atom means commutes with cylindrical extension") {
    // atom_mean(cyl f | mu) = subsample_mean(atom-mean profile of f, mu),
    // exhaustively for small spaces and levels.
    oracles::RationalGen gen(53);
    for (const Space& space : {binary(), ternary()}) {
        for (int n = 1; n <= 3; ++n) {
            Gamble f = random_gamble(space, n, gen);
            CountGamble profile = atom_mean_profile(f);
            for (int target = n; target <= 5; ++target) {
                Gamble lifted = cylindrical_extension(f, target);
                CountGamble direct = atom_mean_profile(lifted);
                CountGamble via_counts = subsample_extension(profile, target);
                CHECK(direct == via_counts);
            }
        }
    }
}
