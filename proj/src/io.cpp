#include "lowprev/io.hpp"

#include "lowprev/errors.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace lowprev {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) parts.push_back(item);
    if (!text.empty() && text.back() == sep) parts.push_back("");
    return parts;
}

Rational rational_at(const nlohmann::json& j, const std::string& where) {
    try {
        if (j.is_number_integer()) return Rational(j.get<long long>());
        if (j.is_string()) return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()), where);
    }
    throw ParseError("expected a rational string or integer", where);
}

}  // namespace

std::string tuple_key(const Space& space, const Tuple& t) {
    std::string key;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) key += ",";
        key += space.label(t[i]);
    }
    return key;
}

std::string count_key(const Space& space, const CountVector& m) {
    std::string key;
    bool first = true;
    for (std::size_t x = 0; x < space.size(); ++x) {
        if (m.count(static_cast<int>(x)) == 0) continue;
        if (!first) key += ",";
        key += space.label(static_cast<int>(x)) + ":" +
               std::to_string(m.count(static_cast<int>(x)));
        first = false;
    }
    return key;
}

Tuple parse_tuple_key(const Space& space, int arity, const std::string& key) {
    std::vector<std::string> parts = split(key, ',');
    if (static_cast<int>(parts.size()) != arity)
        throw ParseError("tuple key '" + key + "' needs " + std::to_string(arity) + " labels");
    Tuple t;
    for (const auto& label : parts) {
        try {
            t.push_back(space.index_of(label));
        } catch (const UnknownLabel&) {
            throw ParseError("unknown label '" + label + "' in tuple key '" + key + "'");
        }
    }
    return t;
}

CountVector parse_count_key(const Space& space, int arity, const std::string& key) {
    std::vector<int> counts(space.size(), 0);
    if (!key.empty()) {
        for (const auto& part : split(key, ',')) {
            auto colon = part.find(':');
            if (colon == std::string::npos)
                throw ParseError("count key entry '" + part + "' needs label:count");
            std::string label = part.substr(0, colon);
            std::string count = part.substr(colon + 1);
            int index;
            try {
                index = space.index_of(label);
            } catch (const UnknownLabel&) {
                throw ParseError("unknown label '" + label + "' in count key '" + key + "'");
            }
            try {
                counts.at(static_cast<std::size_t>(index)) = std::stoi(count);
            } catch (const std::exception&) {
                throw ParseError("bad count '" + count + "' in count key '" + key + "'");
            }
        }
    }
    CountVector m{counts};
    if (m.total() != arity)
        throw ParseError("count key '" + key + "' sums to " + std::to_string(m.total()) +
                         ", expected " + std::to_string(arity));
    return m;
}

std::vector<Rational> parse_gamble_values(const Space& space, int arity, FileMode mode,
                                          const nlohmann::json& gamble,
                                          const std::string& where) {
    if (!gamble.is_object()) throw ParseError("expected a gamble object", where);
    Rational fallback = 0;
    if (gamble.contains("default")) fallback = rational_at(gamble["default"], where + ".default");
    std::size_t domain = mode == FileMode::Tuple ? tuple_space_size(space, arity)
                                                 : CountBasis(space, arity).size();
    std::vector<Rational> values(domain, fallback);
    if (gamble.contains("values")) {
        const auto& entries = gamble["values"];
        if (!entries.is_object()) throw ParseError("expected an object", where + ".values");
        for (const auto& [key, value] : entries.items()) {
            std::size_t index;
            try {
                if (mode == FileMode::Tuple) {
                    index = tuple_index(space, parse_tuple_key(space, arity, key));
                } else {
                    index = CountBasis(space, arity).index_of(parse_count_key(space, arity, key));
                }
            } catch (const ParseError& e) {
                throw ParseError(std::string(e.what()), where + ".values." + key);
            }
            values[index] = rational_at(value, where + ".values." + key);
        }
    }
    return values;
}

AssessmentFile parse_assessment_file(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("expected a JSON object", "");
    if (!j.contains("labels") || !j["labels"].is_array() || j["labels"].empty())
        throw ParseError("expected a non-empty array of labels", "labels");
    std::vector<std::string> labels;
    for (const auto& l : j["labels"]) {
        if (!l.is_string()) throw ParseError("labels must be strings", "labels");
        labels.push_back(l.get<std::string>());
    }
    Space space = [&] {
        try {
            return Space(labels);
        } catch (const ParseError& e) {
            throw ParseError(std::string(e.what()), "labels");
        }
    }();

    if (!j.contains("N") || !j["N"].is_number_integer() || j["N"].get<int>() < 1)
        throw ParseError("expected a positive integer", "N");
    int arity = j["N"].get<int>();

    FileMode mode = FileMode::Tuple;
    if (j.contains("mode")) {
        std::string m = j["mode"].is_string() ? j["mode"].get<std::string>() : "";
        if (m == "tuple")
            mode = FileMode::Tuple;
        else if (m == "count")
            mode = FileMode::Count;
        else
            throw ParseError("mode must be \"tuple\" or \"count\"", "mode");
    }

    AssessmentFile file{space, arity, mode, {}};
    if (j.contains("items")) {
        if (!j["items"].is_array()) throw ParseError("expected an array", "items");
        for (std::size_t i = 0; i < j["items"].size(); ++i) {
            const auto& item = j["items"][i];
            std::string where = "items[" + std::to_string(i) + "]";
            if (!item.is_object() || !item.contains("gamble") || !item.contains("price"))
                throw ParseError("item needs \"gamble\" and \"price\"", where);
            std::vector<Rational> values =
                parse_gamble_values(space, arity, mode, item["gamble"], where + ".gamble");
            Rational price = rational_at(item["price"], where + ".price");
            file.items.emplace_back(std::move(values), std::move(price));
        }
    }
    return file;
}

AssessmentFile load_assessment_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
    return parse_assessment_file(j);
}

nlohmann::json serialize_assessment_file(const AssessmentFile& f) {
    nlohmann::json j;
    j["labels"] = f.space.labels();
    j["N"] = f.arity;
    j["mode"] = f.mode == FileMode::Tuple ? "tuple" : "count";
    j["items"] = nlohmann::json::array();
    for (const auto& [values, price] : f.items) {
        // Sparse form around the most frequent value.
        std::map<Rational, std::size_t> tally;
        for (const auto& v : values) ++tally[v];
        Rational fallback = values.front();
        std::size_t best = 0;
        for (const auto& [v, count] : tally) {
            if (count > best) {
                best = count;
                fallback = v;
            }
        }
        nlohmann::json gamble;
        gamble["default"] = to_string(fallback);
        nlohmann::json sparse = nlohmann::json::object();
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (values[i] == fallback) continue;
            std::string key = f.mode == FileMode::Tuple
                                  ? tuple_key(f.space, tuple_at(f.space, f.arity, i))
                                  : count_key(f.space, CountBasis(f.space, f.arity).at(i));
            sparse[key] = to_string(values[i]);
        }
        gamble["values"] = sparse;
        j["items"].push_back({{"gamble", gamble}, {"price", to_string(price)}});
    }
    return j;
}

Assessment to_assessment(const AssessmentFile& f) {
    if (f.mode != FileMode::Tuple)
        throw ParseError("this command needs a tuple-mode file", "mode");
    Assessment a(f.space, f.arity);
    for (const auto& [values, price] : f.items)
        a.add(Gamble(f.space, f.arity, values), price);
    return a;
}

CountAssessment to_count_assessment(const AssessmentFile& f) {
    if (f.mode != FileMode::Count)
        throw ParseError("this command needs a count-mode file", "mode");
    CountAssessment a(f.space, f.arity);
    for (const auto& [values, price] : f.items)
        a.add(CountGamble(f.space, f.arity, values), price);
    return a;
}

MonomialForm parse_poly(const Space& space, const std::string& text) {
    MonomialForm form;
    for (const auto& term : split(text, ';')) {
        if (term.empty()) throw ParseError("empty polynomial term in '" + text + "'");
        auto colon = term.rfind(':');
        if (colon == std::string::npos)
            throw ParseError("polynomial term '" + term + "' needs exponents:coefficient");
        std::vector<std::string> exps = split(term.substr(0, colon), ',');
        if (exps.size() != space.size())
            throw ParseError("term '" + term + "' needs " + std::to_string(space.size()) +
                             " exponents");
        std::vector<int> exponents;
        for (const auto& e : exps) {
            try {
                exponents.push_back(std::stoi(e));
            } catch (const std::exception&) {
                throw ParseError("bad exponent '" + e + "' in term '" + term + "'");
            }
            if (exponents.back() < 0)
                throw ParseError("negative exponent in term '" + term + "'");
        }
        form[exponents] += parse_rational(term.substr(colon + 1));
    }
    return form;
}

SimplexPoint parse_theta(const Space& space, const std::string& text) {
    std::vector<std::string> parts = split(text, ',');
    if (parts.size() != space.size())
        throw ParseError("theta needs " + std::to_string(space.size()) + " components");
    std::vector<Rational> theta;
    for (const auto& p : parts) theta.push_back(parse_rational(p));
    return SimplexPoint(space, std::move(theta));
}

}  // namespace lowprev
