// Acceptance suite: runs every acceptance criterion at its stated tolerance
// (all equalities are exact rational identities) and prints one line per
// criterion.  Usage: acceptance <cli-binary> <fixture-dir>.

#include "lowprev/bernstein.hpp"
#include "lowprev/exchangeability.hpp"
#include "lowprev/extension.hpp"
#include "lowprev/io.hpp"
#include "lowprev/prevision.hpp"
#include "lowprev/representation.hpp"

#include "oracles.hpp"

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace lowprev;
using nlohmann::json;

namespace {

std::string cli_path, fixture_dir;

Space binary() { return Space({"0", "1"}); }
Space ternary() { return Space({"a", "b", "c"}); }

Gamble random_gamble(const Space& space, int arity, oracles::RationalGen& gen) {
    std::vector<Rational> values(tuple_space_size(space, arity));
    for (auto& v : values) v = gen.value();
    return Gamble(space, arity, std::move(values));
}

std::vector<Rational> random_exchangeable_mass(const Space& space, int arity,
                                               oracles::RationalGen& gen) {
    CountBasis basis(space, arity);
    auto weights = gen.mass(basis.size());
    std::vector<Rational> mass(tuple_space_size(space, arity));
    for (std::size_t i = 0; i < mass.size(); ++i) {
        CountVector m = count_vector(space, tuple_at(space, arity, i));
        mass[i] = weights[basis.index_of(m)] / Rational(atom_size(m));
    }
    return mass;
}

std::vector<Rational> binomial_masses(const Space& space, int n, const Rational& theta) {
    CountBasis basis(space, n);
    std::vector<Rational> mass(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        int s = basis.at(j).count(1);
        mass[j] = Rational(binomial(n, s)) * pow_rational(theta, s) *
                  pow_rational(1 - theta, n - s);
    }
    return mass;
}

MonomialForm random_poly(const Space& space, int max_degree, oracles::RationalGen& gen) {
    MonomialForm form;
    CountBasis exponents(space, max_degree);
    for (int term = 0; term < 3; ++term)
        form[exponents.at(gen.pick(exponents.size())).counts()] += gen.value();
    return form;
}

// --- criterion 1: finite representation -----------------------------------

bool criterion_representation(std::string& detail) {
    oracles::RationalGen gen(1001);
    std::vector<std::pair<Space, int>> grid;
    for (const Space& space : {binary(), ternary()})
        for (int n = 2; n <= 4; ++n) grid.emplace_back(space, n);
    int envelopes = 0;
    while (envelopes < 50) {
        const auto& [space, n] = grid[static_cast<std::size_t>(envelopes) % grid.size()];
        std::size_t points = 1 + gen.pick(3);
        std::vector<std::vector<Rational>> masses;
        for (std::size_t i = 0; i < points; ++i)
            masses.push_back(random_exchangeable_mass(space, n, gen));
        CredalSet envelope(space, n, masses);
        if (!is_exchangeable_envelope(envelope)) {
            detail = "generated envelope is not exchangeable";
            return false;
        }
        CountModel counts{induce_count_credal(envelope)};
        for (int probe = 0; probe < 20; ++probe) {
            Gamble f = random_gamble(space, n, gen);
            Gamble sym = symmetrize(f);
            Rational e_f = envelope_value(envelope, f);
            if (envelope_value(envelope, f - sym) != 0 ||
                envelope_value(envelope, sym - f) != 0 || e_f != envelope_value(envelope, sym) ||
                e_f != counts.lower_value(atom_mean_profile(f))) {
                detail = "identity failed at envelope " + std::to_string(envelopes);
                return false;
            }
        }
        ++envelopes;
    }
    detail = "50 envelopes x 20 gambles, all identities exact";
    return true;
}

// --- criterion 2: natural extension duality --------------------------------

bool criterion_duality(std::string& detail) {
    oracles::RationalGen gen(2002);
    std::vector<std::pair<Space, int>> grid{{binary(), 1}, {binary(), 2}, {ternary(), 1},
                                            {binary(), 3}, {ternary(), 2}, {binary(), 4},
                                            {ternary(), 3}};
    int solved = 0, vertex_checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto& [space, n] = grid[static_cast<std::size_t>(trial) % grid.size()];
        std::size_t domain = tuple_space_size(space, n);
        Assessment a(space, n);
        auto anchor = gen.mass(domain);
        std::size_t items = 1 + gen.pick(5);
        for (std::size_t k = 0; k < items; ++k) {
            Gamble f = random_gamble(space, n, gen);
            Rational level = 0;
            for (std::size_t x = 0; x < domain; ++x) level += anchor[x] * f.at(x);
            a.add(f, level - gen.non_negative(2, 3));
        }
        if (!avoids_sure_loss(a).avoids) {
            detail = "anchored assessment lost";
            return false;
        }
        Gamble f = random_gamble(space, n, gen);
        Rational dual = natural_extension(a, f);
        if (dual != natural_extension_primal(a, f)) {
            detail = "primal and dual routes disagree";
            return false;
        }
        ++solved;
        if (domain <= 4) {
            if (dual != oracles::vertex_natural_extension(a.raw(), f.values())) {
                detail = "vertex oracle disagrees";
                return false;
            }
            ++vertex_checked;
        }
    }
    detail = std::to_string(solved) + " assessments, " + std::to_string(vertex_checked) +
             " vertex-checked, all exact";
    return true;
}

// --- criterion 3: Bernstein algebra ----------------------------------------

bool criterion_bernstein(std::string& detail) {
    oracles::RationalGen gen(3003);
    for (const Space& space : {binary(), ternary()}) {
        for (int degree = 1; degree <= 5; ++degree) {
            // Partition of unity: the constant polynomial decomposes to ones.
            MonomialForm one{{std::vector<int>(space.size(), 0), Rational(1)}};
            if (decompose(space, one, degree).coefficients !=
                CountGamble::constant(space, degree, Rational(1))) {
                detail = "partition of unity failed";
                return false;
            }
            // Decompose/eval roundtrip on random polynomials.
            for (int trial = 0; trial < 3; ++trial) {
                MonomialForm form = random_poly(space, degree, gen);
                BernsteinPoly p = decompose(space, form, degree);
                for (int probe = 0; probe < 4; ++probe) {
                    SimplexPoint theta(space, gen.mass(space.size()));
                    if (eval(p, theta) != eval_monomials(form, theta)) {
                        detail = "decompose/eval roundtrip failed";
                        return false;
                    }
                }
                // Degree elevation leaves evaluation unchanged at 10 points.
                BernsteinPoly lifted = elevate(p, 1 + static_cast<int>(gen.pick(3)));
                for (int probe = 0; probe < 10; ++probe) {
                    SimplexPoint theta(space, gen.mass(space.size()));
                    if (eval(lifted, theta) != eval(p, theta)) {
                        detail = "elevation changed evaluation";
                        return false;
                    }
                }
                // Enclosure nesting along single-step elevations.
                auto seq = enclosure_sequence(p, degree + 3);
                for (std::size_t i = 1; i < seq.size(); ++i) {
                    if (seq[i].first < seq[i - 1].first || seq[i].second > seq[i - 1].second) {
                        detail = "enclosures failed to nest";
                        return false;
                    }
                }
            }
        }
    }
    // theta (1 - theta): strictly decreasing max bounds along degrees
    // 2, 4, 8, 16, within 1/16 of the true maximum 1/4 by degree 16.
    MonomialForm hump{{{0, 1}, Rational(1)}, {{0, 2}, Rational(-1)}};
    BernsteinPoly p = decompose(binary(), hump, 2);
    Rational previous;
    bool first = true;
    Rational final_max;
    for (int degree : {2, 4, 8, 16}) {
        BernsteinPoly q = elevate(p, degree - 2);
        Rational top = enclosure(q).second;
        if (!first && top >= previous) {
            detail = "max-enclosure sequence not strictly decreasing";
            return false;
        }
        previous = top;
        final_max = top;
        first = false;
    }
    if (final_max - Rational(1, 4) > Rational(1, 16)) {
        detail = "degree-16 bound too loose";
        return false;
    }
    detail = "exhaustive through degree 5; degree-16 max bound " + to_string(final_max);
    return true;
}

// --- criterion 4: multinomial identity --------------------------------------

bool criterion_multinomial(std::string& detail) {
    oracles::RationalGen gen(4004);
    long checks = 0;
    for (const Space& space : {binary(), ternary()}) {
        for (int n = 1; n <= 4; ++n) {
            if (space.size() == 3 && n == 4) continue;  // 81 tuples still fine
            std::vector<SimplexPoint> thetas;
            for (int t = 0; t < 5; ++t) thetas.emplace_back(space, gen.mass(space.size()));
            std::size_t domain = tuple_space_size(space, n);
            for (std::size_t i = 0; i < domain; ++i) {
                Gamble f = Gamble::indicator(space, n, tuple_at(space, n, i));
                CountGamble profile = atom_mean_profile(f);
                for (const auto& theta : thetas) {
                    if (multinomial_mean(f, theta) != count_multinomial_mean(profile, theta)) {
                        detail = "identity failed on an indicator";
                        return false;
                    }
                    ++checks;
                }
            }
        }
    }
    // The full ternary N = 4 case on the indicator basis as well.
    {
        Space space = ternary();
        std::vector<SimplexPoint> thetas;
        for (int t = 0; t < 5; ++t) thetas.emplace_back(space, gen.mass(space.size()));
        for (std::size_t i = 0; i < tuple_space_size(space, 4); ++i) {
            Gamble f = Gamble::indicator(space, 4, tuple_at(space, 4, i));
            CountGamble profile = atom_mean_profile(f);
            for (const auto& theta : thetas) {
                if (multinomial_mean(f, theta) != count_multinomial_mean(profile, theta)) {
                    detail = "identity failed on an indicator";
                    return false;
                }
                ++checks;
            }
        }
    }
    detail = std::to_string(checks) + " indicator-basis identities, exact";
    return true;
}

// --- criterion 5: level independence ----------------------------------------

bool criterion_level_independence(std::string& detail) {
    oracles::RationalGen gen(5005);
    std::vector<SimplexPoint> support{
        SimplexPoint(binary(), {Rational(1, 4), Rational(3, 4)}),
        SimplexPoint(binary(), {Rational(5, 6), Rational(1, 6)}),
        SimplexPoint(binary(), {Rational(1, 2), Rational(1, 2)})};
    RepresentingPrevision precise_mix = RepresentingPrevision::mixture(
        support, {Rational(2, 5), Rational(2, 5), Rational(1, 5)});
    RepresentingPrevision vacuous_mix = RepresentingPrevision::vacuous_mixture(support);
    for (int trial = 0; trial < 20; ++trial) {
        MonomialForm form = random_poly(binary(), 3, gen);
        int degree = std::max(1, total_degree(form));
        BernsteinPoly p = decompose(binary(), form, degree);
        int level1 = degree + static_cast<int>(gen.pick(3));
        int level2 = level1 + 1 + static_cast<int>(gen.pick(3));
        for (const auto& r : {precise_mix, vacuous_mix}) {
            if (r.value_at_level(p, level1) != r.value_at_level(p, level2)) {
                detail = "levels " + std::to_string(level1) + " and " + std::to_string(level2) +
                         " disagree";
                return false;
            }
        }
    }
    detail = "20 polynomials x 2 backings, level-independent";
    return true;
}

// --- criterion 6: frequency convergence --------------------------------------

bool criterion_convergence(std::string& detail) {
    RepresentingPrevision coin = RepresentingPrevision::precise(
        SimplexPoint(binary(), {Rational(1, 2), Rational(1, 2)}));
    MonomialForm square{{{0, 2}, Rational(1)}};
    ConvergenceReport report = frequency_convergence_report(coin, square, 1, 16);
    if (report.limit != Rational(1, 4)) {
        detail = "limit is not 1/4";
        return false;
    }
    for (const auto& [n, value] : report.values) {
        if (value != Rational(1, 4) + Rational(1, 4 * n)) {
            detail = "value at n = " + std::to_string(n) + " is not 1/4 + 1/(4n)";
            return false;
        }
    }
    detail = "values equal 1/4 + 1/(4n) for n = 1..16, limit 1/4";
    return true;
}

// --- criterion 7: extendability ----------------------------------------------

bool criterion_extendability(std::string& detail) {
    Space b = binary();
    CountBasis level2(b, 2);
    std::vector<Rational> point(level2.size(), Rational(0));
    point[level2.index_of(CountVector({1, 1}))] = 1;
    ExtensionProblem point_mass(b, 2, 1, CountModel::precise(b, 2, point));
    ExtendResult verdict = extendable(point_mass);
    if (verdict.extendable) {
        detail = "the two-to-three point mass extended";
        return false;
    }
    // Valid dual certificate: the separating gamble's extension tops out
    // strictly below the base value.
    if (!verdict.separating ||
        subsample_extension(*verdict.separating, 3).max() != verdict.separating_upper ||
        verdict.separating_upper >= verdict.separating_base) {
        detail = "invalid separation certificate";
        return false;
    }

    for (int n = 1; n <= 4; ++n) {
        for (int k = 1; k <= 3; ++k) {
            ExtensionProblem problem(b, n, k,
                                     CountModel::precise(b, n, binomial_masses(b, n, Rational(1, 2))));
            if (!extendable(problem).extendable) {
                detail = "binomial base failed to extend";
                return false;
            }
            // The binomial witness is exact: its subsample marginal is the
            // level-n binomial.
            CountBasis low(b, n), high(b, n + k);
            auto witness = binomial_masses(b, n + k, Rational(1, 2));
            auto expected = binomial_masses(b, n, Rational(1, 2));
            for (std::size_t j = 0; j < low.size(); ++j) {
                Rational marginal = 0;
                for (std::size_t u = 0; u < high.size(); ++u)
                    marginal += subsample_weight(low.at(j), high.at(u)) * witness[u];
                if (marginal != expected[j]) {
                    detail = "binomial witness is not exact";
                    return false;
                }
            }
        }
    }
    detail = "point mass refused with certificate; binomial extends for all (n,k) <= (4,3)";
    return true;
}

// --- criterion 8: exchangeable natural extension ------------------------------

bool criterion_ene(std::string& detail) {
    oracles::RationalGen gen(8008);
    int accepted = 0;
    while (accepted < 30) {
        int n = 2 + static_cast<int>(gen.pick(2));
        Space b = binary();
        Assessment local(b, n);
        CountBasis basis(b, n);
        auto anchor = gen.mass(basis.size());
        std::size_t items = 1 + gen.pick(3);
        for (std::size_t k = 0; k < items; ++k) {
            Gamble f = random_gamble(b, n, gen);
            CountGamble profile = atom_mean_profile(f);
            Rational level = 0;
            for (std::size_t j = 0; j < basis.size(); ++j) level += anchor[j] * profile.at(j);
            local.add(f, level - gen.non_negative(1, 3));
        }
        EneProblem problem{local};
        EneResult exists = ene_exists(problem);
        if (!exists.exists) {
            detail = "anchored assessment rejected";
            return false;
        }
        ++accepted;

        // Dominates the assessment.
        for (const auto& [f, price] : local.items) {
            if (ene_value(problem, f) < price) {
                detail = "ene fails to dominate the local assessment";
                return false;
            }
        }
        // Exchangeable: zero on every pi f - f.
        Gamble f = random_gamble(b, n, gen);
        for (const auto& pi : oracles::all_permutations(n)) {
            if (ene_value(problem, permute_gamble(f, pi) - f) != 0) {
                detail = "ene is not exchangeable";
                return false;
            }
        }
        // Dominated by every sampled exchangeable coherent dominator.
        auto dominators = oracles::polytope_vertices(induced_count_prices(problem).raw());
        for (int probe = 0; probe < 3; ++probe) {
            Gamble g = random_gamble(b, n, gen);
            Rational value = ene_value(problem, g);
            CountGamble profile = atom_mean_profile(g);
            for (const auto& q : dominators) {
                Rational expectation = 0;
                for (std::size_t j = 0; j < q.size(); ++j) expectation += q[j] * profile.at(j);
                if (expectation < value) {
                    detail = "a dominating model sits below the ene value";
                    return false;
                }
            }
        }
    }
    detail = "30 assessments: dominance, exchangeability and minimality exact";
    return true;
}

// --- criterion 9: mean-square bound -------------------------------------------

bool criterion_mean_square(std::string& detail) {
    oracles::RationalGen gen(9009);
    int checks = 0;
    for (const Space& space : {binary(), ternary()}) {
        std::vector<RepresentingPrevision> models;
        models.push_back(RepresentingPrevision::family(CountFamily::vacuous(space, 5)));
        models.push_back(RepresentingPrevision::precise(SimplexPoint(space, gen.mass(space.size()))));
        models.push_back(RepresentingPrevision::precise(SimplexPoint(space, gen.mass(space.size()))));
        for (const auto& model : models) {
            for (int trial = 0; trial < 2; ++trial) {
                std::vector<Rational> f(space.size());
                for (auto& v : f) v = gen.value();
                for (int n = 1; n <= 4; ++n) {
                    for (int p = 0; n + p <= 5; ++p) {
                        MeanSquareReport report = mean_square_bound_check(model, f, n, p);
                        if (!report.pass) {
                            detail = "bound violated at n=" + std::to_string(n) +
                                     ", p=" + std::to_string(p);
                            return false;
                        }
                        ++checks;
                    }
                }
            }
        }
    }
    detail = std::to_string(checks) + " (model, f, n, p) cases within the bound";
    return true;
}

// --- criterion 10: CLI ---------------------------------------------------------

struct CliRun {
    int exit_code = -1;
    std::string output;
};

CliRun run_cli(const std::string& args, bool merge_stderr) {
    std::string command = cli_path + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    std::array<char, 512> buffer{};
    CliRun result;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return result;
    while (fgets(buffer.data(), buffer.size(), pipe)) result.output += buffer.data();
    result.exit_code = WEXITSTATUS(pclose(pipe));
    return result;
}

bool criterion_cli(std::string& detail) {
    CliRun asl = run_cli("check-asl " + fixture_dir + "/asl_two_thirds.json --json", false);
    if (asl.exit_code != 1) {
        detail = "check-asl exit code " + std::to_string(asl.exit_code);
        return false;
    }
    json asl_body = json::parse(asl.output, nullptr, false);
    if (asl_body.is_discarded() || asl_body["avoids_sure_loss"] != false ||
        asl_body["certificate"]["lambda"] != json::array({"1", "1"})) {
        detail = "check-asl report mismatch";
        return false;
    }

    CliRun ext = run_cli("extend " + fixture_dir + "/point_mass_n2.json --to 3 --json", false);
    json ext_body = json::parse(ext.output, nullptr, false);
    if (ext.exit_code != 1 || ext_body.is_discarded() || ext_body["extendable"] != false ||
        ext_body["separating_gamble"] != json{{"0:1,1:1", "1"}} ||
        ext_body["separating_upper"] != "2/3") {
        detail = "extend report mismatch";
        return false;
    }

    CliRun vac = run_cli("vacuous " + fixture_dir +
                             "/vacuous_n3.json --gamble "
                             "'{\"default\":\"0\",\"values\":{\"1,0,1\":\"1\"}}' --json",
                         false);
    json vac_body = json::parse(vac.output, nullptr, false);
    if (vac.exit_code != 0 || vac_body.is_discarded() || vac_body["value"] != "0") {
        detail = "vacuous report mismatch";
        return false;
    }
    CliRun vac_human = run_cli("vacuous " + fixture_dir +
                                   "/vacuous_n3.json --gamble "
                                   "'{\"default\":\"0\",\"values\":{\"1,0,1\":\"1\"}}'",
                               false);
    if (vac_human.exit_code != 0 ||
        vac_human.output.find("value: 0 = 0.00000000000000000000") == std::string::npos) {
        detail = "vacuous human rendering mismatch";
        return false;
    }

    // Malformed file: exit 2 and the offending key named.
    std::string bad = fixture_dir + "/acceptance_bad.json";
    {
        std::ofstream out(bad);
        out << R"({"labels":["0","1"],"N":2,"mode":"tuple",
                   "items":[{"gamble":{"default":"0","values":{"1,0":"1/0"}},
                             "price":"0"}]})";
    }
    CliRun malformed = run_cli("check-asl " + bad, true);
    if (malformed.exit_code != 2 ||
        malformed.output.find("items[0].gamble.values.1,0") == std::string::npos) {
        detail = "malformed file handling mismatch";
        return false;
    }
    detail = "three documented invocations bit-exact; malformed file exits 2 naming the key";
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: acceptance <cli-binary> <fixture-dir>\n");
        return 64;
    }
    cli_path = argv[1];
    fixture_dir = argv[2];

    std::vector<std::pair<std::string, std::function<bool(std::string&)>>> criteria{
        {"finite representation identities", criterion_representation},
        {"natural extension duality", criterion_duality},
        {"Bernstein algebra", criterion_bernstein},
        {"multinomial identity", criterion_multinomial},
        {"representing-value level independence", criterion_level_independence},
        {"frequency convergence at 1/2", criterion_convergence},
        {"extendability and its certificates", criterion_extendability},
        {"exchangeable natural extension", criterion_ene},
        {"mean-square gap bound", criterion_mean_square},
        {"command-line reports", criterion_cli},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].second(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::cout << "criterion " << i + 1 << " (" << criteria[i].first
                  << "): " << (ok ? "PASS" : "FAIL") << " — " << detail << "\n";
        if (!ok) ++failures;
    }
    return failures;
}
