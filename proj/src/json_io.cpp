#include "rbs/json_io.hpp"

namespace rbs {

namespace {

std::string coeff_string(const Scalar& c) {
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Scalar coeff_from(const Json& j) {
    if (!j.is_string()) throw ParseError("coefficient must be a string", 0);
    return parse_scalar(j.get<std::string>());
}

std::string field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_string())
        throw ParseError(std::string("missing string field '") + key + "'", 0);
    return j.at(key).get<std::string>();
}

}  // namespace

Json to_json(const Poly& p, const Signature& sig) {
    Json out = Json::array();
    for (const auto& [w, c] : p.sorted_terms())
        out.push_back({{"coeff", coeff_string(c)}, {"word", format(w, sig)}});
    return out;
}

Json to_json(const TensorPoly& t, const Signature& sig) {
    Json out = Json::array();
    for (const auto& [lr, c] : t.sorted_terms())
        out.push_back({{"coeff", coeff_string(c)},
                       {"left", format(lr.first, sig)},
                       {"right", format(lr.second, sig)}});
    return out;
}

Json to_json(const ReductionTrace& trace, const Signature& sig) {
    Json steps = Json::array();
    for (const auto& s : trace.steps)
        steps.push_back({{"word", format(s.matched, sig)},
                         {"coeff", coeff_string(s.coefficient)},
                         {"context", format(s.match.context, sig)},
                         {"redex", format(s.match.redex(), sig)},
                         {"replacement", to_json(s.replacement, sig)}});
    return {{"input", to_json(trace.input, sig)}, {"steps", steps}, {"result", to_json(trace.result, sig)}};
}

Json to_json(const GsbReport& report, const Signature& sig) {
    Json families = Json::array();
    for (const auto& f : report.families) {
        Json failures = Json::array();
        for (const auto& x : f.failures)
            failures.push_back({{"u", format(x.u, sig)},
                                {"v", format(x.v, sig)},
                                {"w", format(x.w, sig)},
                                {"pi", x.pi ? Json(format(*x.pi, sig)) : Json(nullptr)},
                                {"ambiguity", format(x.ambiguity, sig)},
                                {"residual", to_json(x.residual, sig)},
                                {"bound_violated", x.bound_violated}});
        families.push_back(
            {{"family", f.family}, {"instances_checked", f.instances_checked}, {"failures", failures}});
    }
    return {{"check", "gsb"},
            {"bounds", {{"uvw", report.bounds.uvw_degree}, {"pi", report.bounds.pi_degree}}},
            {"passed", report.passed()},
            {"instances_checked", report.instances_checked()},
            {"families", families}};
}

Json to_json(const HopfReport& report) {
    Json suites = Json::array();
    for (const auto& s : report.suites) {
        Json failures = Json::array();
        for (const auto& f : s.failures)
            failures.push_back({{"input", f.input}, {"lhs", f.lhs}, {"rhs", f.rhs}});
        suites.push_back({{"suite", s.suite}, {"checked", s.checked}, {"failures", failures}});
    }
    const SuiteResult* right = report.find("right-antipode");
    Json info = {{"right_antipode", right && right->passed() ? "pass" : "fail"},
                 {"left_antipode_holds", report.left_antipode_holds}};
    if (report.left_antipode_counterexample) {
        const auto& c = *report.left_antipode_counterexample;
        info["left_antipode_counterexample"] = {{"input", c.input}, {"lhs", c.lhs}, {"rhs", c.rhs}};
    }
    return {{"check", "hopf"},
            {"bounds",
             {{"max_degree", report.bounds.max_degree},
              {"random_pairs", report.bounds.random_pairs},
              {"random_degree", report.bounds.random_degree},
              {"seed", report.bounds.seed}}},
            {"passed", report.passed()},
            {"suites", suites},
            {"informational", info}};
}

Poly poly_from_json(const Json& j, const Signature& sig) {
    if (!j.is_array()) throw ParseError("polynomial must be an array", 0);
    Poly out;
    for (const auto& term : j) {
        if (!term.is_object() || !term.contains("coeff")) throw ParseError("missing 'coeff'", 0);
        out.add_term(parse_word(field(term, "word"), sig), coeff_from(term.at("coeff")));
    }
    return out;
}

TensorPoly tensor_from_json(const Json& j, const Signature& sig) {
    if (!j.is_array()) throw ParseError("tensor must be an array", 0);
    TensorPoly out;
    for (const auto& term : j) {
        if (!term.is_object() || !term.contains("coeff")) throw ParseError("missing 'coeff'", 0);
        out.add_term(parse_word(field(term, "left"), sig), parse_word(field(term, "right"), sig),
                     coeff_from(term.at("coeff")));
    }
    return out;
}

}  // namespace rbs
