#include "psi3ut/json_io.hpp"

namespace psi3ut {

Json matrix_json(const UTMatrix& m) {
    Json rows = Json::array();
    for (unsigned i = 0; i < m.size(); ++i) {
        Json row = Json::array();
        for (unsigned j = 0; j < m.size(); ++j) row.push_back(m.at(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return Json{{"size", m.size()}, {"mod2exp", m.mod2exp()}, {"rows", std::move(rows)}};
}

Json rational_matrix_json(const RationalMatrix& m) {
    Json rows = Json::array();
    for (const auto& r : m) {
        Json row = Json::array();
        for (const auto& v : r) row.push_back(rational_to_string(v));
        rows.push_back(std::move(row));
    }
    return Json{{"size", m.size()}, {"rows", std::move(rows)}};
}

Json graded_element_json(const GradedElement& x) {
    Json terms = Json::object();
    for (const auto& [mon, c] : x.terms()) {
        std::string key = "(" + std::to_string(mon.a) + "," + std::to_string(mon.b) + ")";
        terms[key] = rational_to_string(c);
    }
    return terms;
}

Json valuation_reports_json(const std::vector<ValuationReport>& reports) {
    Json arr = Json::array();
    for (const auto& r : reports)
        arr.push_back(Json{{"input", r.input},
                           {"formula_value", r.formula_value},
                           {"oracle_value", r.oracle_value},
                           {"agree", r.agree}});
    return arr;
}

Json end_to_end_json(const EndToEndReport& r) {
    return Json{{"n", r.n},          {"seed", r.seed}, {"mod2exp", r.mod2exp},
                {"A", matrix_json(r.a)}, {"D", matrix_json(r.d)}, {"C", matrix_json(r.c)},
                {"U", matrix_json(r.u)}, {"check", r.check}};
}

Json xn_report_json(const XnReport& r) {
    Json agreement = Json::array();
    for (const auto& e : r.displayed_agreement)
        agreement.push_back(Json{{"s", e.s},
                                 {"t", e.t},
                                 {"row", e.s - 1},
                                 {"col", e.s - 1 + e.t},
                                 {"displayed", e.displayed.get_str()},
                                 {"oracle", e.oracle.get_str()},
                                 {"agree", e.agree}});
    return Json{{"n", r.n},
                {"size", r.size},
                {"mod2exp", r.mod2exp},
                {"vanishing_ok", r.vanishing_ok},
                {"path_matches_brute", r.path_matches_brute},
                {"brute", matrix_json(r.brute)},
                {"formula_path", matrix_json(r.formula_path)},
                {"formula_displayed", matrix_json(r.formula_displayed)},
                {"displayed_formula_agrees", std::move(agreement)}};
}

std::map<std::pair<unsigned, unsigned>, Integer> upper_entries_from_json(const Json& j) {
    std::map<std::pair<unsigned, unsigned>, Integer> out;
    if (!j.contains("entries") || !j["entries"].is_array())
        throw Error("expected an object with an \"entries\" array");
    for (const auto& e : j["entries"]) {
        unsigned i = e.at("i").get<unsigned>();
        unsigned jj = e.at("j").get<unsigned>();
        Integer v(e.at("v").get<std::string>());
        out[{i, jj}] = std::move(v);
    }
    return out;
}

} // namespace psi3ut
