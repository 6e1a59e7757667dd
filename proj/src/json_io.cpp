#include "spinmcg/json_io.hpp"

namespace spinmcg {

using nlohmann::json;

json to_json(const SymplecticMatrix& m) { return m.rows_as_strings(); }

json to_json(const SymplecticMatrixF2& m) { return m.rows(); }

json to_json(const MembershipReport& r) {
    json j{{"member", r.member}, {"image", to_json(r.image)}};
    j["failingClass"] = r.failing_class ? json(r.failing_class->to_string()) : json(nullptr);
    return j;
}

json to_json(const GenerationCertificate& c) {
    json j;
    j["genus"] = c.genus.value();
    j["base"] = json::array();
    for (const auto& b : c.base) j["base"].push_back(b.to_string());
    j["phi2"] = json::array();
    for (const auto& e : c.phi2.entries) j["phi2"].push_back({{"word", e.word}, {"class", e.expected.to_string()}, {"ok", e.ok}});
    j["traces"] = json::object();
    for (const auto& t : c.traces) {
        json steps = json::array();
        for (const auto& s : t.steps) steps.push_back({{"by", s.by.to_string()}, {"after", s.after.to_string()}});
        j["traces"][t.start.to_string()] = steps;
    }
    j["lambdaCount"] = c.lambda_count;
    j["maxTraceLength"] = c.max_trace_length;
    j["conjugationChecks"] = c.conjugation_checks;
    j["conjugationExhaustive"] = c.conjugation_exhaustive;
    j["ok"] = c.ok();
    return j;
}

json to_json(const KnottedSurfaceData& s) {
    json j{{"name", s.name}, {"sigma", s.sigma.get_str()}, {"selfIntersection", s.self_intersection.get_str()},
           {"genus", s.genus.get_str()}};
    if (auto a = s.arf()) j["arf"] = *a;
    return j;
}

namespace genus2 {

json to_json(const CosetGraph& g) {
    json j;
    j["base"] = g.vertices[g.base].to_string();
    j["vertices"] = json::array();
    for (const auto& v : g.vertices) j["vertices"].push_back(v.to_string());
    j["edges"] = json::array();
    for (const auto& e : g.edges)
        j["edges"].push_back({{"from", g.vertices[e.from].to_string()}, {"to", g.vertices[e.to].to_string()}, {"label", "C" + std::to_string(e.label)}});
    return j;
}

json to_json(const std::vector<TableEntry>& table) {
    json rows = json::array();
    for (const auto& e : table)
        rows.push_back({{"row", e.row.empty() ? "1" : e.row.to_string()},
                        {"column", "C" + std::to_string(e.column)},
                        {"computed", e.computed.empty() ? "1" : e.computed.to_string()},
                        {"published", e.published.empty() ? "1" : e.published.to_string()},
                        {"status", e.matrix_equal ? "matrix-verified" : "mismatch"},
                        {"member", e.computed_member}});
    return rows;
}

}  // namespace genus2

}  // namespace spinmcg
