// Command-line front end: parse assessment files, run checks and
// extensions, and print exact-rational reports.  Exit codes: 0 for a
// positive verdict or computed value, 1 for a negative verdict, 2 for
// parse/validation errors (the offending key is named), 3 when an
// enumeration cap is exceeded.

#include "lowprev/bernstein.hpp"
#include "lowprev/errors.hpp"
#include "lowprev/exchangeability.hpp"
#include "lowprev/extension.hpp"
#include "lowprev/io.hpp"
#include "lowprev/prevision.hpp"
#include "lowprev/representation.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

using nlohmann::json;
using namespace lowprev;

namespace {

struct Report {
    json body = json::object();
    int exit_code = 0;
};

std::string rational_field(const Rational& v) { return to_string(v); }

json gamble_json(const Space& space, int arity, FileMode mode,
                 const std::vector<Rational>& values) {
    json sparse = json::object();
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] == 0) continue;
        std::string key = mode == FileMode::Tuple
                              ? tuple_key(space, tuple_at(space, arity, i))
                              : count_key(space, CountBasis(space, arity).at(i));
        sparse[key] = rational_field(values[i]);
    }
    return sparse;
}

json mass_json(const Space& space, int arity, FileMode mode, const std::vector<Rational>& mass) {
    return gamble_json(space, arity, mode, mass);
}

std::vector<Rational> parse_gamble_arg(const Space& space, int arity, FileMode mode,
                                       const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("gamble argument is not valid JSON: ") + e.what(),
                         "--gamble");
    }
    return parse_gamble_values(space, arity, mode, j, "--gamble");
}

CountFamily family_from_files(const std::vector<std::string>& paths) {
    if (paths.empty()) throw ParseError("at least one level file is required");
    AssessmentFile first = load_assessment_file(paths.front());
    if (first.mode != FileMode::Count)
        throw ParseError("level files must be count-mode", "mode");
    CountFamily family(first.space);
    for (const auto& path : paths) {
        AssessmentFile file = load_assessment_file(path);
        if (file.mode != FileMode::Count)
            throw ParseError("level files must be count-mode", "mode");
        if (!(file.space == family.space))
            throw ParseError("level files disagree on the space", "labels");
        if (family.has_level(file.arity))
            throw ParseError("two files define level " + std::to_string(file.arity), "N");
        family.set_level(file.arity, CountModel{to_count_assessment(file)});
    }
    return family;
}

// ---- subcommand handlers ------------------------------------------------

Report run_check_asl(const std::string& path) {
    AssessmentFile file = load_assessment_file(path);
    Report report;
    report.body["command"] = "check-asl";
    report.body["file"] = path;
    AslResult verdict = file.mode == FileMode::Tuple
                            ? avoids_sure_loss(to_assessment(file))
                            : raw_avoids_sure_loss(to_count_assessment(file).raw());
    report.body["avoids_sure_loss"] = verdict.avoids;
    if (verdict.avoids) {
        report.body["certificate"] = {
            {"mass", mass_json(file.space, file.arity, file.mode, verdict.mass)}};
    } else {
        json lambda = json::array();
        for (const auto& l : verdict.lambda) lambda.push_back(rational_field(l));
        report.body["certificate"] = {{"lambda", lambda}};
        report.exit_code = 1;
    }
    return report;
}

Report run_check_coherence(const std::string& path) {
    AssessmentFile file = load_assessment_file(path);
    Report report;
    report.body["command"] = "check-coherence";
    report.body["file"] = path;
    CoherenceResult verdict;
    if (file.mode == FileMode::Tuple) {
        verdict = is_coherent(to_assessment(file));
    } else {
        CountAssessment a = to_count_assessment(file);
        RawAssessment raw = a.raw();
        verdict.sure_loss = !raw_avoids_sure_loss(raw).avoids;
        verdict.coherent = false;
        if (!verdict.sure_loss) {
            verdict.coherent = true;
            for (std::size_t k = 0; k < a.items.size(); ++k) {
                Rational e = raw_natural_extension(raw, a.items[k].first.values());
                if (e != a.items[k].second) {
                    verdict.coherent = false;
                    verdict.violating_item = k;
                    verdict.raised_value = e;
                    break;
                }
            }
        }
    }
    report.body["coherent"] = verdict.coherent;
    report.body["sure_loss"] = verdict.sure_loss;
    if (verdict.violating_item) {
        report.body["violating_item"] = *verdict.violating_item;
        report.body["raised_value"] = rational_field(verdict.raised_value);
    }
    if (!verdict.coherent) report.exit_code = 1;
    return report;
}

Report run_natex(const std::string& path, const std::string& gamble_text) {
    AssessmentFile file = load_assessment_file(path);
    Report report;
    report.body["command"] = "natex";
    report.body["file"] = path;
    std::vector<Rational> values =
        parse_gamble_arg(file.space, file.arity, file.mode, gamble_text);
    try {
        Rational value;
        if (file.mode == FileMode::Tuple) {
            value = natural_extension(to_assessment(file), Gamble(file.space, file.arity, values));
        } else {
            value = raw_natural_extension(to_count_assessment(file).raw(), values);
        }
        report.body["value"] = rational_field(value);
    } catch (const SureLoss&) {
        report.body["sure_loss"] = true;
        report.exit_code = 1;
    }
    return report;
}

Report run_ene(const std::string& path, const std::string& gamble_text) {
    AssessmentFile file = load_assessment_file(path);
    Report report;
    report.body["command"] = "ene";
    report.body["file"] = path;
    EneProblem problem{to_assessment(file)};
    std::vector<Rational> values =
        parse_gamble_arg(file.space, file.arity, FileMode::Tuple, gamble_text);
    EneResult exists = ene_exists(problem);
    report.body["exists"] = exists.exists;
    if (exists.exists) {
        Rational value = ene_value(problem, Gamble(file.space, file.arity, values));
        report.body["value"] = rational_field(value);
        report.body["certificate"] = {
            {"mass", mass_json(file.space, file.arity, FileMode::Count,
                               exists.certificate.mass)}};
    } else {
        json lambda = json::array();
        for (const auto& l : exists.certificate.lambda) lambda.push_back(rational_field(l));
        report.body["certificate"] = {{"lambda", lambda}};
        report.exit_code = 1;
    }
    return report;
}

Report run_vacuous(const std::string& path, const std::string& gamble_text) {
    AssessmentFile file = load_assessment_file(path);
    Report report;
    report.body["command"] = "vacuous";
    report.body["file"] = path;
    std::vector<Rational> values =
        parse_gamble_arg(file.space, file.arity, FileMode::Tuple, gamble_text);
    Rational value = vacuous_exchangeable(Gamble(file.space, file.arity, values));
    report.body["value"] = rational_field(value);
    return report;
}

Report run_extend(const std::string& path, int to_level, const std::string& eval_text) {
    AssessmentFile file = load_assessment_file(path);
    if (file.mode != FileMode::Count)
        throw ParseError("extend needs a count-mode file", "mode");
    if (to_level <= file.arity)
        throw ParseError("--to must exceed the file's level N", "--to");
    Report report;
    report.body["command"] = "extend";
    report.body["file"] = path;
    report.body["from"] = file.arity;
    report.body["to"] = to_level;
    ExtensionProblem problem(file.space, file.arity, to_level - file.arity,
                             CountModel{to_count_assessment(file)});
    ExtendResult verdict = extendable(problem);
    report.body["extendable"] = verdict.extendable;
    if (verdict.reproduces_envelope)
        report.body["reproduces_envelope"] = *verdict.reproduces_envelope;
    if (verdict.extendable) {
        json witnesses = json::array();
        for (const auto& w : verdict.witnesses)
            witnesses.push_back(mass_json(file.space, to_level, FileMode::Count, w));
        report.body["witnesses"] = witnesses;
        if (!eval_text.empty()) {
            std::vector<Rational> values =
                parse_gamble_arg(file.space, to_level, FileMode::Count, eval_text);
            Rational value =
                smallest_extension(problem, CountGamble(file.space, to_level, values));
            report.body["value"] = rational_field(value);
        }
    } else {
        report.body["separating_gamble"] =
            gamble_json(file.space, file.arity, FileMode::Count, verdict.separating->values());
        report.body["separating_upper"] = rational_field(verdict.separating_upper);
        report.body["separating_base"] = rational_field(verdict.separating_base);
        report.exit_code = 1;
    }
    return report;
}

Report run_time_consistent(const std::vector<std::string>& paths) {
    CountFamily family = family_from_files(paths);
    Report report;
    report.body["command"] = "time-consistent";
    report.body["files"] = paths;
    json pairs = json::array();
    bool all = true;
    bool all_complete = true;
    std::vector<int> levels;
    for (const auto& [n, model] : family.levels) levels.push_back(n);
    for (std::size_t i = 0; i < levels.size(); ++i) {
        for (std::size_t j = i + 1; j < levels.size(); ++j) {
            int n = levels[i], k = levels[j] - levels[i];
            TimeConsistencyReport r = check_time_consistency(family, n, k);
            json entry{{"n", n}, {"k", k}, {"consistent", r.consistent},
                       {"complete", r.complete}};
            if (!r.consistent && r.witness) {
                entry["witness"] =
                    gamble_json(family.space, n, FileMode::Count, r.witness->values());
                entry["lower_n"] = rational_field(r.lower_n);
                entry["lower_n_plus_k"] = rational_field(r.lower_n_plus);
            }
            pairs.push_back(entry);
            all = all && r.consistent;
            all_complete = all_complete && r.complete;
        }
    }
    report.body["pairs"] = pairs;
    report.body["consistent"] = all;
    // The spanning-plus-random-probe check decides linear levels exactly but
    // is only a sound necessary test for imprecise ones.
    report.body["decision_complete"] = all_complete;
    if (!all) report.exit_code = 1;
    return report;
}

Report run_represent(const std::vector<std::string>& paths, const std::string& poly_text,
                     int degree, int moments) {
    CountFamily family = family_from_files(paths);
    RepresentingPrevision r = RepresentingPrevision::family(std::move(family));
    Report report;
    report.body["command"] = "represent";
    report.body["files"] = paths;
    if (!poly_text.empty()) {
        MonomialForm form = parse_poly(r.space(), poly_text);
        int level = degree > 0 ? degree : std::max(1, total_degree(form));
        Rational value = r.value_at_level(decompose(r.space(), form, level), level);
        report.body["poly"] = poly_text;
        report.body["level"] = level;
        report.body["value"] = rational_field(value);
    }
    if (moments >= 0) {
        json m = json::array();
        for (const auto& v : binary_moments(r, moments)) m.push_back(rational_field(v));
        report.body["moments"] = m;
    }
    return report;
}

Report run_bernstein(const std::string& action, const std::string& labels_text,
                     const std::string& poly_text, const std::string& coeffs_text, int degree,
                     int by, int to, const std::string& theta_text) {
    std::vector<std::string> labels;
    {
        std::string item;
        std::istringstream in(labels_text);
        while (std::getline(in, item, ',')) labels.push_back(item);
    }
    Space space{labels};
    Report report;
    report.body["command"] = "bernstein";
    report.body["action"] = action;

    auto coefficients = [&]() {
        if (coeffs_text.empty()) throw ParseError("--coeffs is required", "--coeffs");
        if (degree < 1) throw ParseError("--degree is required", "--degree");
        json j;
        try {
            j = json::parse(coeffs_text);
        } catch (const json::exception& e) {
            throw ParseError(std::string("coeffs argument is not valid JSON: ") + e.what(),
                             "--coeffs");
        }
        return BernsteinPoly{CountGamble(
            space, degree, parse_gamble_values(space, degree, FileMode::Count, j, "--coeffs"))};
    };
    auto emit_poly = [&](const BernsteinPoly& p) {
        report.body["degree"] = p.degree();
        report.body["coefficients"] =
            gamble_json(space, p.degree(), FileMode::Count, p.coefficients.values());
    };

    if (action == "decompose") {
        if (poly_text.empty()) throw ParseError("--poly is required", "--poly");
        MonomialForm form = parse_poly(space, poly_text);
        int level = degree > 0 ? degree : std::max(1, total_degree(form));
        emit_poly(decompose(space, form, level));
    } else if (action == "eval") {
        if (theta_text.empty()) throw ParseError("--theta is required", "--theta");
        BernsteinPoly p = coefficients();
        Rational value = eval(p, parse_theta(space, theta_text));
        report.body["value"] = rational_field(value);
    } else if (action == "elevate") {
        if (by < 1) throw ParseError("--by must be positive", "--by");
        emit_poly(elevate(coefficients(), by));
    } else if (action == "enclose") {
        BernsteinPoly p = coefficients();
        int stop = to > 0 ? to : p.degree();
        EnclosureReport enclosed = enclosure_convergence(p, stop);
        json intervals = json::array();
        for (const auto& [lo, hi] : enclosed.intervals)
            intervals.push_back({rational_field(lo), rational_field(hi)});
        report.body["intervals"] = intervals;
        report.body["grid_min"] = rational_field(enclosed.grid_min);
        report.body["grid_max"] = rational_field(enclosed.grid_max);
        report.body["gap_min"] = rational_field(enclosed.gap_min);
        report.body["gap_max"] = rational_field(enclosed.gap_max);
    } else {
        throw ParseError("unknown bernstein action '" + action + "'");
    }
    return report;
}

Report run_converge(const std::vector<std::string>& paths, const std::string& poly_text,
                    const std::string& levels_text) {
    CountFamily family = family_from_files(paths);
    RepresentingPrevision r = RepresentingPrevision::family(std::move(family));
    auto dots = levels_text.find("..");
    if (dots == std::string::npos)
        throw ParseError("--levels expects a..b", "--levels");
    int from, to;
    try {
        from = std::stoi(levels_text.substr(0, dots));
        to = std::stoi(levels_text.substr(dots + 2));
    } catch (const std::exception&) {
        throw ParseError("--levels expects a..b", "--levels");
    }
    MonomialForm form = parse_poly(r.space(), poly_text);
    ConvergenceReport convergence = frequency_convergence_report(r, form, from, to);
    Report report;
    report.body["command"] = "converge";
    report.body["files"] = paths;
    report.body["poly"] = poly_text;
    json values = json::array();
    for (const auto& [n, v] : convergence.values)
        values.push_back({{"n", n}, {"value", rational_field(v)}});
    report.body["values"] = values;
    report.body["limit"] = rational_field(convergence.limit);
    return report;
}

Report run_meansq(const std::vector<std::string>& paths, const std::string& f_text, int n,
                  int p) {
    CountFamily family = family_from_files(paths);
    RepresentingPrevision r = RepresentingPrevision::family(std::move(family));
    std::vector<Rational> f = parse_gamble_arg(r.space(), 1, FileMode::Tuple, f_text);
    MeanSquareReport bound = mean_square_bound_check(r, f, n, p);
    Report report;
    report.body["command"] = "meansq";
    report.body["files"] = paths;
    report.body["n"] = n;
    report.body["p"] = p;
    report.body["upper_value"] = rational_field(bound.upper_value);
    report.body["bound"] = rational_field(bound.bound);
    report.body["pass"] = bound.pass;
    if (!bound.pass) report.exit_code = 1;
    return report;
}

bool is_rational_field(const std::string& key) {
    static const char* names[] = {"value",           "raised_value",   "upper_value",
                                  "bound",           "limit",          "separating_upper",
                                  "separating_base", "grid_min",       "grid_max",
                                  "gap_min",         "gap_max"};
    for (const char* name : names)
        if (key == name) return true;
    return false;
}

// Human rendering pairs every rational field with its 20-digit decimal; the
// JSON reports stay exact-rational only.
void render_human(const json& body) {
    for (const auto& [key, value] : body.items()) {
        if (is_rational_field(key) && value.is_string()) {
            std::cout << key << ": " << value.get<std::string>() << " = "
                      << to_decimal(parse_rational(value.get<std::string>())) << "\n";
            continue;
        }
        std::cout << key << ": " << value.dump() << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coherent lower previsions with exchangeability, in exact rationals"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit a machine-readable report");

    std::string file, gamble_text, eval_text, poly_text, coeffs_text, theta_text, labels_text;
    std::string action, levels_text, f_text;
    std::vector<std::string> files;
    int to_level = 0, degree = 0, moments = -1, by = 0, to = 0, n = 1, p = 0;

    auto* check_asl = app.add_subcommand("check-asl", "does the assessment avoid sure loss?");
    check_asl->add_option("file", file)->required();

    auto* check_coherence = app.add_subcommand("check-coherence", "is the assessment coherent?");
    check_coherence->add_option("file", file)->required();

    auto* natex = app.add_subcommand("natex", "natural extension at a gamble");
    natex->add_option("file", file)->required();
    natex->add_option("--gamble", gamble_text)->required();

    auto* ene = app.add_subcommand("ene", "exchangeable natural extension at a gamble");
    ene->add_option("file", file)->required();
    ene->add_option("--gamble", gamble_text)->required();

    auto* vacuous = app.add_subcommand("vacuous", "vacuous exchangeable value at a gamble");
    vacuous->add_option("file", file)->required();
    vacuous->add_option("--gamble", gamble_text)->required();

    auto* extend = app.add_subcommand("extend", "extend a count model to more variables");
    extend->add_option("file", file)->required();
    extend->add_option("--to", to_level)->required();
    extend->add_option("--eval", eval_text);

    auto* timec = app.add_subcommand("time-consistent", "check a family of level files");
    timec->add_option("files", files)->required();

    auto* represent = app.add_subcommand("represent", "representing values on polynomials");
    represent->add_option("files", files)->required();
    represent->add_option("--poly", poly_text);
    represent->add_option("--degree", degree);
    represent->add_option("--moments", moments);

    auto* bernstein = app.add_subcommand("bernstein", "polynomial algebra on the simplex");
    bernstein->add_option("action", action)->required();
    bernstein->add_option("--labels", labels_text)->required();
    bernstein->add_option("--poly", poly_text);
    bernstein->add_option("--coeffs", coeffs_text);
    bernstein->add_option("--degree", degree);
    bernstein->add_option("--by", by);
    bernstein->add_option("--to", to);
    bernstein->add_option("--theta", theta_text);

    auto* converge = app.add_subcommand("converge", "frequency-distribution convergence");
    converge->add_option("files", files)->required();
    converge->add_option("--poly", poly_text)->required();
    converge->add_option("--levels", levels_text)->required();

    auto* meansq = app.add_subcommand("meansq", "mean-square gap bound between sample means");
    meansq->add_option("files", files)->required();
    meansq->add_option("--f", f_text)->required();
    meansq->add_option("--n", n)->required();
    meansq->add_option("--p", p)->required();

    for (auto* sub : {check_asl, check_coherence, natex, ene, vacuous, extend, timec,
                      represent, bernstein, converge, meansq})
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    auto started = std::chrono::steady_clock::now();
    Report report;
    try {
        if (*check_asl) report = run_check_asl(file);
        if (*check_coherence) report = run_check_coherence(file);
        if (*natex) report = run_natex(file, gamble_text);
        if (*ene) report = run_ene(file, gamble_text);
        if (*vacuous) report = run_vacuous(file, gamble_text);
        if (*extend) report = run_extend(file, to_level, eval_text);
        if (*timec) report = run_time_consistent(files);
        if (*represent) report = run_represent(files, poly_text, degree, moments);
        if (*bernstein)
            report = run_bernstein(action, labels_text, poly_text, coeffs_text, degree, by, to,
                                   theta_text);
        if (*converge) report = run_converge(files, poly_text, levels_text);
        if (*meansq) report = run_meansq(files, f_text, n, p);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what();
        if (!e.key.empty()) std::cerr << " (at key: " << e.key << ")";
        std::cerr << "\n";
        return 2;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    report.body["elapsed_ms"] = elapsed;
    if (as_json) {
        std::cout << report.body.dump(2) << "\n";
    } else {
        render_human(report.body);
    }
    return report.exit_code;
}
