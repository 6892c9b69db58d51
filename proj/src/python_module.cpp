// Python bindings for the main operations.  Rationals cross the boundary as
// canonical "p/q" strings so exactness survives the trip; gambles enter as
// sparse {key: value} dicts using the same keys as the JSON file format.

#include "lowprev/bernstein.hpp"
#include "lowprev/errors.hpp"
#include "lowprev/exchangeability.hpp"
#include "lowprev/extension.hpp"
#include "lowprev/io.hpp"
#include "lowprev/prevision.hpp"
#include "lowprev/representation.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace lowprev;

namespace {

Rational rat(const std::string& text) { return parse_rational(text); }

std::vector<Rational> rats(const std::vector<std::string>& texts) {
    std::vector<Rational> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(rat(t));
    return out;
}

std::vector<std::string> strs(const std::vector<Rational>& values) {
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(to_string(v));
    return out;
}

Gamble make_gamble(const Space& space, int arity, const std::map<std::string, std::string>& sparse,
                   const std::string& fallback) {
    std::vector<Rational> values(tuple_space_size(space, arity), rat(fallback));
    for (const auto& [key, value] : sparse)
        values[tuple_index(space, parse_tuple_key(space, arity, key))] = rat(value);
    return Gamble(space, arity, std::move(values));
}

CountGamble make_count_gamble(const Space& space, int total,
                              const std::map<std::string, std::string>& sparse,
                              const std::string& fallback) {
    CountBasis basis(space, total);
    std::vector<Rational> values(basis.size(), rat(fallback));
    for (const auto& [key, value] : sparse)
        values[basis.index_of(parse_count_key(space, total, key))] = rat(value);
    return CountGamble(space, total, std::move(values));
}

MonomialForm make_poly(const std::map<std::vector<int>, std::string>& terms) {
    MonomialForm form;
    for (const auto& [exponents, coeff] : terms) form[exponents] += rat(coeff);
    return form;
}

SimplexPoint make_theta(const Space& space, const std::vector<std::string>& theta) {
    return SimplexPoint(space, rats(theta));
}

py::dict asl_dict(const AslResult& r) {
    py::dict out;
    out["avoids"] = r.avoids;
    if (r.avoids)
        out["mass"] = strs(r.mass);
    else
        out["lambda"] = strs(r.lambda);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "coherent lower previsions with exchangeability, in exact rational arithmetic";

    py::register_exception<CapExceeded>(m, "CapExceeded");
    py::register_exception<SureLoss>(m, "SureLoss");
    py::register_exception<NotExtendable>(m, "NotExtendable");
    py::register_exception<NoExchangeableDominator>(m, "NoExchangeableDominator");
    py::register_exception<ParseError>(m, "ParseError");
    static py::exception<Error> base_error(m, "LowprevError");

    py::class_<Space>(m, "Space")
        .def(py::init<std::vector<std::string>>(), py::arg("labels"))
        .def_property_readonly("labels", &Space::labels)
        .def("__len__", &Space::size)
        .def("__eq__", [](const Space& a, const Space& b) { return a == b; })
        .def("__repr__", [](const Space& s) {
            std::string out = "Space([";
            for (std::size_t i = 0; i < s.size(); ++i)
                out += (i ? ", '" : "'") + s.label(static_cast<int>(i)) + "'";
            return out + "])";
        });

    py::class_<Gamble>(m, "Gamble")
        .def(py::init(&make_gamble), py::arg("space"), py::arg("arity"), py::arg("values"),
             py::arg("default") = "0")
        .def_property_readonly("arity", &Gamble::arity)
        .def_property_readonly("space", &Gamble::space)
        .def("values", [](const Gamble& f) { return strs(f.values()); })
        .def("min", [](const Gamble& f) { return to_string(f.min()); })
        .def("max", [](const Gamble& f) { return to_string(f.max()); })
        .def("__neg__", [](const Gamble& f) { return -f; })
        .def("__add__", [](const Gamble& a, const Gamble& b) { return a + b; })
        .def("__sub__", [](const Gamble& a, const Gamble& b) { return a - b; });

    py::class_<CountGamble>(m, "CountGamble")
        .def(py::init(&make_count_gamble), py::arg("space"), py::arg("level"), py::arg("values"),
             py::arg("default") = "0")
        .def_property_readonly("level", &CountGamble::total)
        .def("values", [](const CountGamble& h) { return strs(h.values()); })
        .def("__neg__", [](const CountGamble& h) { return -h; })
        .def("__add__", [](const CountGamble& a, const CountGamble& b) { return a + b; })
        .def("__sub__", [](const CountGamble& a, const CountGamble& b) { return a - b; });

    m.def("count_keys", [](const Space& space, int level) {
        std::vector<std::string> keys;
        CountBasis basis(space, level);
        for (const auto& v : basis.vectors()) keys.push_back(count_key(space, v));
        return keys;
    });
    m.def("tuple_keys", [](const Space& space, int arity) {
        std::vector<std::string> keys;
        for (const auto& t : enumerate_tuples(space, arity)) keys.push_back(tuple_key(space, t));
        return keys;
    });

    m.def("permute", [](const Gamble& f, const Permutation& pi) { return permute_gamble(f, pi); });
    m.def("symmetrize", [](const Gamble& f) { return symmetrize(f); });
    m.def("atom_mean", [](const Gamble& f, const std::vector<int>& counts) {
        return to_string(atom_mean(f, CountVector(counts)));
    });
    m.def("atom_mean_profile", [](const Gamble& f) { return atom_mean_profile(f); });
    m.def("subsample_extension", [](const CountGamble& g, int level) {
        return subsample_extension(g, level);
    });
    m.def("cylindrical_extension",
          [](const Gamble& f, int arity) { return cylindrical_extension(f, arity); });

    py::class_<Assessment>(m, "Assessment")
        .def(py::init<Space, int>(), py::arg("space"), py::arg("arity"))
        .def("add",
             [](Assessment& a, const Gamble& f, const std::string& price) {
                 a.add(f, rat(price));
             })
        .def("__len__", [](const Assessment& a) { return a.items.size(); });

    py::class_<CountAssessment>(m, "CountAssessment")
        .def(py::init<Space, int>(), py::arg("space"), py::arg("level"))
        .def("add",
             [](CountAssessment& a, const CountGamble& h, const std::string& price) {
                 a.add(h, rat(price));
             })
        .def("__len__", [](const CountAssessment& a) { return a.items.size(); });

    m.def("avoids_sure_loss", [](const Assessment& a) { return asl_dict(avoids_sure_loss(a)); });
    m.def("is_coherent", [](const Assessment& a) {
        CoherenceResult r = is_coherent(a);
        py::dict out;
        out["coherent"] = r.coherent;
        out["sure_loss"] = r.sure_loss;
        if (r.violating_item) {
            out["violating_item"] = *r.violating_item;
            out["raised_value"] = to_string(r.raised_value);
        }
        return out;
    });
    m.def("natural_extension", [](const Assessment& a, const Gamble& f) {
        return to_string(natural_extension(a, f));
    });
    m.def("natural_extension_upper", [](const Assessment& a, const Gamble& f) {
        return to_string(natural_extension_upper(a, f));
    });
    m.def("is_linear", [](const Assessment& a) { return is_linear(a); });

    py::class_<CredalSet>(m, "CredalSet")
        .def(py::init([](Space space, int arity, const std::vector<std::vector<std::string>>& pts) {
                 std::vector<std::vector<Rational>> points;
                 for (const auto& p : pts) points.push_back(rats(p));
                 return CredalSet(std::move(space), arity, std::move(points));
             }),
             py::arg("space"), py::arg("arity"), py::arg("extreme_points"))
        .def("lower", [](const CredalSet& c, const Gamble& f) {
            return to_string(envelope_value(c, f));
        })
        .def("upper", [](const CredalSet& c, const Gamble& f) {
            return to_string(envelope_upper_value(c, f));
        })
        .def("is_exchangeable", [](const CredalSet& c) { return is_exchangeable_envelope(c); });

    py::class_<CountModel>(m, "CountModel")
        .def(py::init<CountAssessment>())
        .def_static("vacuous", &CountModel::vacuous, py::arg("space"), py::arg("level"))
        .def_static("precise",
                    [](Space space, int level, const std::vector<std::string>& mass) {
                        return CountModel::precise(std::move(space), level, rats(mass));
                    })
        .def_static("envelope",
                    [](Space space, int level, const std::vector<std::vector<std::string>>& pts) {
                        std::vector<std::vector<Rational>> points;
                        for (const auto& p : pts) points.push_back(rats(p));
                        return CountModel(CountCredal(std::move(space), level, std::move(points)));
                    })
        .def_property_readonly("level", &CountModel::level)
        .def("lower",
             [](const CountModel& q, const CountGamble& h) { return to_string(q.lower_value(h)); })
        .def("upper",
             [](const CountModel& q, const CountGamble& h) { return to_string(q.upper_value(h)); })
        .def("is_linear", &CountModel::is_linear);

    m.def("reconstruct", [](const CountModel& q, const Gamble& f) {
        return to_string(reconstruct_lower_prevision(q, f));
    });
    m.def("induce_count_assessment",
          [](const Assessment& a) { return induce_count_assessment(a); });

    py::class_<CountFamily>(m, "CountFamily")
        .def(py::init<Space>(), py::arg("space"))
        .def_static("vacuous", &CountFamily::vacuous, py::arg("space"), py::arg("n_max"))
        .def("set_level", &CountFamily::set_level)
        .def("check_time_consistency", [](const CountFamily& fam, int n, int k) {
            TimeConsistencyReport r = check_time_consistency(fam, n, k);
            py::dict out;
            out["consistent"] = r.consistent;
            out["complete"] = r.complete;
            if (r.witness) {
                out["witness"] = strs(r.witness->values());
                out["lower_n"] = to_string(r.lower_n);
                out["lower_n_plus_k"] = to_string(r.lower_n_plus);
            }
            return out;
        });

    m.def("vacuous_exchangeable",
          [](const Gamble& f) { return to_string(vacuous_exchangeable(f)); });
    m.def("ene_exists", [](const Assessment& a) {
        EneResult r = ene_exists(EneProblem{a});
        py::dict out;
        out["exists"] = r.exists;
        out["certificate"] = asl_dict(r.certificate);
        return out;
    });
    m.def("ene_value", [](const Assessment& a, const Gamble& f) {
        return to_string(ene_value(EneProblem{a}, f));
    });

    m.def("extendable", [](const Space& space, int n, int k, const CountModel& base) {
        ExtendResult r = extendable(ExtensionProblem(space, n, k, base));
        py::dict out;
        out["extendable"] = r.extendable;
        if (r.reproduces_envelope) out["reproduces_envelope"] = *r.reproduces_envelope;
        if (r.extendable) {
            py::list witnesses;
            for (const auto& w : r.witnesses) witnesses.append(strs(w));
            out["witnesses"] = witnesses;
        } else {
            out["separating_gamble"] = strs(r.separating->values());
            out["separating_upper"] = to_string(r.separating_upper);
            out["separating_base"] = to_string(r.separating_base);
        }
        return out;
    });
    m.def("smallest_extension",
          [](const Space& space, int n, int k, const CountModel& base, const CountGamble& h) {
              return to_string(smallest_extension(ExtensionProblem(space, n, k, base), h));
          });

    py::class_<BernsteinPoly>(m, "BernsteinPoly")
        .def_property_readonly("degree", &BernsteinPoly::degree)
        .def("coefficients", [](const BernsteinPoly& p) { return strs(p.coefficients.values()); })
        .def("eval", [](const BernsteinPoly& p, const Space& space,
                        const std::vector<std::string>& theta) {
            return to_string(eval(p, make_theta(space, theta)));
        });
    m.def("decompose",
          [](const Space& space, const std::map<std::vector<int>, std::string>& poly, int degree) {
              return decompose(space, make_poly(poly), degree);
          });
    m.def("elevate", [](const BernsteinPoly& p, int by) { return elevate(p, by); });
    m.def("enclosure", [](const BernsteinPoly& p) {
        auto [lo, hi] = enclosure(p);
        return py::make_tuple(to_string(lo), to_string(hi));
    });
    m.def("basis_eval", [](const Space& space, const std::vector<int>& counts,
                           const std::vector<std::string>& theta) {
        return to_string(basis_eval(CountVector(counts), make_theta(space, theta)));
    });

    m.def("multinomial_mean", [](const Gamble& f, const Space& space,
                                 const std::vector<std::string>& theta) {
        return to_string(multinomial_mean(f, make_theta(space, theta)));
    });
    m.def("count_multinomial_mean", [](const CountGamble& g, const Space& space,
                                       const std::vector<std::string>& theta) {
        return to_string(count_multinomial_mean(g, make_theta(space, theta)));
    });

    py::class_<RepresentingPrevision>(m, "RepresentingPrevision")
        .def_static("precise",
                    [](const Space& space, const std::vector<std::string>& theta) {
                        return RepresentingPrevision::precise(make_theta(space, theta));
                    })
        .def_static("mixture",
                    [](const Space& space, const std::vector<std::vector<std::string>>& support,
                       const std::vector<std::string>& weights) {
                        std::vector<SimplexPoint> points;
                        for (const auto& t : support) points.push_back(make_theta(space, t));
                        return RepresentingPrevision::mixture(std::move(points), rats(weights));
                    })
        .def_static("vacuous_mixture",
                    [](const Space& space, const std::vector<std::vector<std::string>>& support) {
                        std::vector<SimplexPoint> points;
                        for (const auto& t : support) points.push_back(make_theta(space, t));
                        return RepresentingPrevision::vacuous_mixture(std::move(points));
                    })
        .def_static("family", &RepresentingPrevision::family)
        .def("value",
             [](const RepresentingPrevision& r,
                const std::map<std::vector<int>, std::string>& poly) {
                 return to_string(r.value(make_poly(poly)));
             })
        .def("level_model", &RepresentingPrevision::level_model)
        .def("frequency_value",
             [](const RepresentingPrevision& r,
                const std::map<std::vector<int>, std::string>& poly, int n) {
                 return to_string(frequency_distribution_value(r, make_poly(poly), n));
             })
        .def("binary_moments", [](const RepresentingPrevision& r, int n_max) {
            return strs(binary_moments(r, n_max));
        })
        .def("mean_square_check", [](const RepresentingPrevision& r,
                                     const std::vector<std::string>& f, int n, int p) {
            MeanSquareReport report = mean_square_bound_check(r, rats(f), n, p);
            py::dict out;
            out["upper_value"] = to_string(report.upper_value);
            out["bound"] = to_string(report.bound);
            out["pass"] = report.pass;
            return out;
        });

#ifdef LOWPREV_VERSION
    m.attr("__version__") = LOWPREV_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
