#include "cellplus/report.hpp"

namespace cellplus {

namespace {

bool is_scalar_leaf(const ReportJson& j) {
    return j.is_primitive();
}

// numeric/bool vectors stay inline; string lists (transcripts) get one line
// each, as do arrays of objects
bool inline_array(const ReportJson& arr) {
    for (const auto& v : arr)
        if (!v.is_number() && !v.is_boolean()) return false;
    return true;
}

std::string leaf_text(const ReportJson& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

void render_lines(const ReportJson& j, std::string& out, size_t indent) {
    std::string pad(indent, ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            const ReportJson& v = it.value();
            if (is_scalar_leaf(v)) {
                out += pad + it.key() + ": " + leaf_text(v) + "\n";
            } else if (v.is_array() && inline_array(v)) {
                out += pad + it.key() + ": " + v.dump() + "\n";
            } else {
                out += pad + it.key() + ":\n";
                render_lines(v, out, indent + 2);
            }
        }
        return;
    }
    if (j.is_array()) {
        for (const auto& v : j) {
            if (is_scalar_leaf(v)) {
                out += pad + "- " + leaf_text(v) + "\n";
            } else {
                out += pad + "-\n";
                render_lines(v, out, indent + 2);
            }
        }
        return;
    }
    out += pad + leaf_text(j) + "\n";
}

std::string word_text(const Word& w, const std::vector<std::string>& gens) {
    return w.empty() ? "1" : w.str(gens);
}

const char* provenance_token(CellLedger::Provenance p) {
    switch (p) {
    case CellLedger::Provenance::KillKernel: return "kill-kernel";
    case CellLedger::Provenance::NewRelation: return "new-relation";
    case CellLedger::Provenance::SphereWedge: return "sphere-wedge";
    }
    return "?";
}

const char* gate_token(Gate g) {
    switch (g) {
    case Gate::Pid: return "pid";
    case Gate::RelH1Zero: return "relative-h1-zero";
    case Gate::Rejected: return "rejected";
    }
    return "?";
}

} // namespace

std::string render_text(const ReportJson& r) {
    std::string out;
    render_lines(r, out, 0);
    return out;
}

std::string render_machine(const ReportJson& r) { return r.dump(2) + "\n"; }

ReportJson parse_report(const std::string& text) {
    ReportJson r = ReportJson::parse(text, nullptr, false);
    if (r.is_discarded()) fail(Error::Kind::Parse, "report: not valid machine output");
    return r;
}

std::string kind_token(Error::Kind k) {
    switch (k) {
    case Error::Kind::Parse: return "parse";
    case Error::Kind::RingMismatch: return "ring-mismatch";
    case Error::Kind::Invariant: return "invariant";
    case Error::Kind::Domain: return "domain";
    case Error::Kind::Tier: return "tier";
    case Error::Kind::Solve: return "solve";
    case Error::Kind::Certificate: return "certificate";
    case Error::Kind::Input: return "input";
    }
    return "?";
}

ReportJson module_json(const ModulePresentation& m) { return m.str(); }

ReportJson matrix_json(const MatrixR& m) {
    return m.ring().token() + ": " + m.str();
}

ReportJson induced_json(const InducedMap& m) {
    return ReportJson{{"injective", m.injective}, {"surjective", m.surjective}};
}

ReportJson hypotheses_json(const HypothesesReport& h) {
    ReportJson r;
    r["h1"] = {{"source", module_json(h.h1_src)},
               {"target", module_json(h.h1_tgt)},
               {"injective", h.h1.injective}};
    r["h2"] = {{"source", module_json(h.h2_src)},
               {"target", module_json(h.h2_tgt)},
               {"surjective", h.h2.surjective}};
    r["gate"] = gate_token(h.gate);
    r["gate_note"] = h.gate_note;
    r["pass"] = h.pass();
    return r;
}

ReportJson ledger_json(const CellLedger& l, const std::vector<std::string>& gens) {
    ReportJson r;
    r["one_cells"] = l.one_cells;
    ReportJson cells = ReportJson::array();
    for (const auto& tc : l.two_cells)
        cells.push_back({{"attach", word_text(tc.attach, gens)},
                         {"provenance", provenance_token(tc.why)}});
    r["two_cells"] = cells;
    r["three_cells"] = l.three_cell_count();
    if (l.three_cells) r["three_cell_boundaries"] = l.three_cells->str(gens);
    return r;
}

ReportJson plus_json(const PlusResult& y) {
    ReportJson r;
    r["tier"] = y.finite ? "finite" : "aspherical";
    r["certified"] = y.certified();
    r["cells"] = y.cell_counts;
    r["hypotheses"] = hypotheses_json(y.hypotheses);
    r["ledger"] = ledger_json(y.ledger, y.w.base.gens);
    r["certificates"] = {
        {"h0", {{"module", module_json(y.h0_y)}, {"ok", y.h0_ok}}},
        {"h1", {{"space", module_json(y.h1_y)},
                {"group", module_json(y.h1_g)},
                {"ok", y.h1_ok}}},
        {"h2", {{"source", module_json(y.h2_x)},
                {"result", module_json(y.h2_y)},
                {"ok", y.h2_ok}}},
        {"h3", {{"module", module_json(y.h3_y)}, {"ok", y.h3_ok}}},
    };
    return r;
}

ReportJson moore_json(const std::variant<PlusResult, MooreRejection>& v) {
    if (v.index() == 1) {
        return ReportJson{{"verdict", "rejected"},
                          {"h2", module_json(std::get<MooreRejection>(v).h2)}};
    }
    ReportJson r;
    r["verdict"] = "accepted";
    r["result"] = plus_json(std::get<PlusResult>(v));
    return r;
}

ReportJson five_term_json(const FiveTermReport& rep) {
    ReportJson r;
    r["modules"] = {{"h2_pi", module_json(rep.h2_pi)},
                    {"h2_quotient", module_json(rep.h2_quot)},
                    {"middle", module_json(rep.middle)},
                    {"h1_pi", module_json(rep.h1_pi)},
                    {"h1_quotient", module_json(rep.h1_quot)}};
    r["exact"] = {{"at_h2_quotient", rep.exact_at_h2_quot},
                  {"at_middle", rep.exact_at_middle},
                  {"at_h1_pi", rep.exact_at_h1_pi},
                  {"right_surjective", rep.right_surjective}};
    r["maps"] = {{"h1_injective", rep.h1_injective},
                 {"h2_surjective", rep.h2_surjective}};
    return r;
}

ReportJson hopf_json(const HopfCertificate& h) {
    return ReportJson{{"h2_space", module_json(h.h2_space)},
                      {"h2_group", module_json(h.h2_group)},
                      {"cover_generators", h.cover_generators},
                      {"exact_middle", h.exact_middle},
                      {"right_surjective", h.right_surjective},
                      {"ok", h.ok()}};
}

ReportJson gdense_json(const CriterionVerdict& v) {
    if (const auto* w = std::get_if<Witness>(&v))
        return ReportJson{{"verdict", "witness"}, {"b", matrix_json(w->b)}};
    if (const auto* ref = std::get_if<Refuted>(&v))
        return ReportJson{{"verdict", "refuted"}, {"cases", ref->cases}};
    return ReportJson{{"verdict", "unknown"},
                      {"budget", std::get<Unknown>(v).budget}};
}

} // namespace cellplus
