#pragma once

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "cellplus/gdense.hpp"
#include "cellplus/plus.hpp"

namespace cellplus {

// One report value, two renderings. Ordered keys keep golden files and
// round-trips byte-stable.
using ReportJson = nlohmann::ordered_json;

// Indented human-readable certificate table.
std::string render_text(const ReportJson& r);
// Machine form; parse_report(render_machine(r)) == r, losslessly.
std::string render_machine(const ReportJson& r);
ReportJson parse_report(const std::string& text);

std::string kind_token(Error::Kind k);

ReportJson module_json(const ModulePresentation& m);
ReportJson matrix_json(const MatrixR& m); // ring-prefixed literal, reparsable
ReportJson induced_json(const InducedMap& m);
ReportJson hypotheses_json(const HypothesesReport& h);
ReportJson ledger_json(const CellLedger& l, const std::vector<std::string>& gens);
ReportJson plus_json(const PlusResult& y);
ReportJson moore_json(const std::variant<PlusResult, MooreRejection>& v);
ReportJson five_term_json(const FiveTermReport& r);
ReportJson hopf_json(const HopfCertificate& h);
ReportJson gdense_json(const CriterionVerdict& v);

} // namespace cellplus
