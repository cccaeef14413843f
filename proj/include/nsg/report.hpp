#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "nsg/classify.hpp"
#include "nsg/constructions.hpp"
#include "nsg/herzog.hpp"
#include "nsg/hilbert.hpp"

namespace nsg {

/// Everything the CLI reports for one semigroup; sub-reports agree on the
/// rank by construction (checked in analyze()).
struct AnalysisBundle {
    GotoReport report;
    nlohmann::json ideals;  // K, K^2, hull R[K], conductor c in the ideal schema
    std::optional<SallyFiltration> sally;
    std::optional<HilbertData> hilbert;
    std::optional<HerzogData> herzog;
    ConstructionReport chain;
};

AnalysisBundle analyze(const NumericalSemigroup& H);

nlohmann::json to_json(const NumericalSemigroup& H);
nlohmann::json to_json(const RelativeIdeal& E);
nlohmann::json to_json(const GotoReport& r);
nlohmann::json to_json(const SallyFiltration& s, const std::optional<HilbertData>& h);
nlohmann::json to_json(const HerzogData& h);
nlohmann::json to_json(const ConstructionReport& c);
nlohmann::json to_json(const AnalysisBundle& b);

/// Fixed-width human-readable report.
std::string human_report(const AnalysisBundle& b);

/// "a1,a2,...,ak" -> generators. Throws ParamError on anything else.
std::vector<int> parse_generators(const std::string& text);

/// Runs the fixture table distilled from the worked examples; prints one
/// PASS/FAIL line per fixture, returns the number of failures.
int verify_paper(std::ostream& out);

}  // namespace nsg
