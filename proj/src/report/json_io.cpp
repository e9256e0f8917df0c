#include "gawb/json_io.hpp"

#include "gawb/parse.hpp"

namespace gawb {

namespace {
Json verdict(const std::optional<bool>& v) { return v ? Json(*v) : Json(nullptr); }
}  // namespace

Json to_json(const CocycleClass& c) {
    Json terms = Json::array();
    for (const auto& [ij, coeff] : c.coeffs) terms.push_back({{"i", ij.first}, {"j", ij.second}, {"c", coeff.str()}});
    return {{"terms", terms}};
}

Json to_json(const SplittingType& t) { return {{"type", {t.a1, t.a2}}, {"hirzebruch", t.hirzebruch()}}; }

Json to_json(const DivisorClass& d) { return {{"surface", d.surface.name()}, {"coeffs", {d.c[0], d.c[1]}}}; }

Json to_json(const NormalFormMNP& nf) { return {{"m", nf.m}, {"n", nf.n}, {"p", to_string(nf.p)}}; }

Json to_json(const AffinenessCertificate& c) {
    Json trace = Json::array();
    for (const auto& s : c.trace) {
        Json j;
        j["case"] = s.kind == AffinenessStep::Kind::case1 ? 1 : 2;
        j["m"] = s.m;
        j["n"] = s.n;
        j["p"] = to_string(s.p);
        j["relation"] = s.relation;
        if (s.kind == AffinenessStep::Kind::case1) {
            j["a"] = s.a;
            j["q0"] = to_string(s.q0);
        } else {
            j["b"] = s.b;
            j["substitution"] = s.substitution;
        }
        j["witness"] = {{"numerator", to_string(s.witness.numerator)},
                        {"denominator", to_string(s.witness.denominator)},
                        {"equals", "(" + to_string(s.witness.alt_numerator) + ")/(" + to_string(s.witness.alt_denominator) + ")"},
                        {"k", s.witness.k},
                        {"valid", s.witness.valid()}};
        if (s.kind == AffinenessStep::Kind::case1 && !s.printed_witness.empty())
            j["printed_witness"] = {{"expression", s.printed_witness}, {"valid", s.printed_valid}};
        trace.push_back(std::move(j));
    }
    Json out{{"outcome", to_string(c.outcome)}, {"trace", trace}};
    if (c.outcome == AffinenessCertificate::Outcome::UnitCertificate) out["q0"] = to_string(c.q0);
    out["all_witnesses_valid"] = c.all_witnesses_valid();
    return out;
}

Json to_json(const NilpotencyCertificate& c) {
    Json idx = Json::object();
    for (const auto& [v, k] : c.index) idx[var_name(v)] = k;
    return {{"ring", c.ring}, {"index", idx}};
}

Json to_json(const ActionReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json res = Json::object();
        for (const auto& [g, v] : c.residuals)
            if (!v.empty()) res[g] = v;
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"residuals", res}});
    }
    return {{"checks", checks}, {"symbolic_pass", r.symbolic_pass}, {"oracle_pass", r.oracle_pass}, {"points", r.points}};
}

Json to_json(const BirkhoffSplit& s) {
    Json out = to_json(s.type);
    out["exponents"] = {s.e1, s.e2};
    out["product"] = BirkhoffSplit::product;
    out["Q"] = mat_str(s.Q);
    out["D"] = mat_str(s.D);
    out["P"] = mat_str(s.P);
    out["steps"] = s.steps;
    return out;
}

Json to_json(const H0Result& h) {
    Json basis = Json::array();
    for (const auto& [g1, g2] : h.basis) basis.push_back({to_string(g1), to_string(g2)});
    return {{"j", h.j}, {"dimension", h.dimension}, {"degree_bound", h.degree_bound}, {"basis", basis}};
}

Json to_json(const XmnClassification& c) {
    return {{"verdict", to_string(c.verdict)}, {"d1", c.d1}, {"d2", c.d2}, {"citation", c.citation}};
}

Json to_json(const XfgClassification& c) {
    return {{"m", c.m},
            {"n", c.n},
            {"resultant", c.resultant.str()},
            {"conclusion", c.conclusion},
            {"scroll", c.scroll},
            {"delta_self_intersection", c.delta_self_intersection},
            {"citation", c.citation}};
}

Json to_json(const Report& r, bool timings) {
    Json claims = Json::array();
    for (const auto& c : r.records) {
        Json j{{"id", c.id},
               {"anchor", {{"location", c.anchor.location}, {"quote", c.anchor.quote}}},
               {"invocation", c.invocation},
               {"expected", c.expected},
               {"actual", c.actual},
               {"status", to_string(c.status)},
               {"check", c.check},
               {"symbolic", verdict(c.symbolic)},
               {"oracle", verdict(c.oracle)},
               {"points", c.points},
               {"residuals", c.residuals},
               {"seed", c.seed}};
        if (timings) j["seconds"] = c.seconds;
        claims.push_back(std::move(j));
    }
    return {{"schema", r.schema},
            {"engine", {{"name", "gawb"}, {"version", r.engine_version}}},
            {"seed", r.seed},
            {"summary",
             {{"claims", r.records.size()},
              {"pass", r.count(ClaimStatus::pass)},
              {"discrepancy-documented", r.count(ClaimStatus::discrepancy)},
              {"fail", r.count(ClaimStatus::fail)}}},
            {"claims", claims}};
}

}  // namespace gawb
