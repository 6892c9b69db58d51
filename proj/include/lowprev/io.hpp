#pragma once

#include "lowprev/bernstein.hpp"
#include "lowprev/exchangeability.hpp"
#include "lowprev/prevision.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace lowprev {

enum class FileMode { Tuple, Count };

/// Parsed form of an assessment file: a space, an arity, a mode, and dense
/// (gamble values, lower price) pairs.  Rationals travel as "p/q" strings;
/// gambles are entered sparsely with a default value; tuple keys are
/// comma-joined labels and count keys are comma-joined label:count pairs.
struct AssessmentFile {
    Space space;
    int arity = 1;
    FileMode mode = FileMode::Tuple;
    std::vector<std::pair<std::vector<Rational>, Rational>> items;

    bool operator==(const AssessmentFile& other) const = default;
};

/// Throws ParseError naming the offending key.
AssessmentFile parse_assessment_file(const nlohmann::json& j);
AssessmentFile load_assessment_file(const std::string& path);

/// Canonical serialization; parsing it back yields an identical value.
nlohmann::json serialize_assessment_file(const AssessmentFile& f);

Assessment to_assessment(const AssessmentFile& f);            // Tuple mode
CountAssessment to_count_assessment(const AssessmentFile& f); // Count mode

std::string tuple_key(const Space& space, const Tuple& t);
std::string count_key(const Space& space, const CountVector& m);
Tuple parse_tuple_key(const Space& space, int arity, const std::string& key);
CountVector parse_count_key(const Space& space, int arity, const std::string& key);

/// Dense gamble values from a sparse {"default": ..., "values": {...}}
/// object; `where` prefixes offending keys in errors.
std::vector<Rational> parse_gamble_values(const Space& space, int arity, FileMode mode,
                                          const nlohmann::json& gamble,
                                          const std::string& where);

/// Monomial polynomial syntax: terms "e_1,...,e_d:coef" joined by ';',
/// exponents in label order ("0,2:1;0,1:-1/3").
MonomialForm parse_poly(const Space& space, const std::string& text);

/// Simplex point syntax: comma-joined rationals in label order ("1/2,1/2").
SimplexPoint parse_theta(const Space& space, const std::string& text);

}  // namespace lowprev
