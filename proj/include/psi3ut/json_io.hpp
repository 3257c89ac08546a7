#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "psi3ut/cring.hpp"
#include "psi3ut/pipeline.hpp"
#include "psi3ut/valuations.hpp"

namespace psi3ut {

// Reports are emitted with insertion-ordered keys so identical runs produce
// byte-identical artifacts.
using Json = nlohmann::ordered_json;

// {"size": n, "mod2exp": N, "rows": [["d", ...], ...]} with decimal strings.
Json matrix_json(const UTMatrix& m);

// Rational-entry matrix as rows of "num/den" strings.
Json rational_matrix_json(const RationalMatrix& m);

// Monomial -> rational map, keyed "(a,b)" for U^a W^b.
Json graded_element_json(const GradedElement& x);

Json valuation_reports_json(const std::vector<ValuationReport>& reports);

Json end_to_end_json(const EndToEndReport& r);

Json xn_report_json(const XnReport& r);

// Strict upper entries for build_C from {"entries": [{"i":, "j":, "v": "d"}]},
// 0-based indices.
std::map<std::pair<unsigned, unsigned>, Integer> upper_entries_from_json(const Json& j);

} // namespace psi3ut
