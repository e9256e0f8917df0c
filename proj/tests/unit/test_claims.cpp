#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "gawb/claims.hpp"
#include "gawb/error.hpp"
#include "gawb/json_io.hpp"

using namespace gawb;

namespace {

std::string squash(const std::string& s) {
    std::string out;
    bool space = false;
    for (char c : s) {
        if (c == ' ' || c == '\n' || c == '\t' || c == '\r') {
            space = true;
            continue;
        }
        if (space && !out.empty()) out += ' ';
        space = false;
        out += c;
    }
    return out;
}

const ClaimRecord& find(const Report& r, const std::string& id) {
    for (const auto& c : r.records)
        if (c.id == id) return c;
    throw std::runtime_error("missing " + id);
}

}  // namespace

TEST_CASE("registry shape") {
    const auto& reg = claim_registry();
    CHECK(reg.size() >= 20);
    std::set<std::string> ids;
    for (const auto& c : reg) {
        CHECK_MESSAGE(ids.insert(c.id).second, c.id);
        CHECK_FALSE(c.anchor.quote.empty());
        CHECK_FALSE(c.anchor.location.empty());
        CHECK_FALSE(c.invocation.empty());
        CHECK_FALSE(c.expected.empty());
    }
    CHECK(ids.count("theorem-self-intersection-grid"));
    CHECK(ids.count("example-x22-kernel-a"));
}

#ifdef GAWB_SOURCE_TEXT
TEST_CASE("registry quotes are verbatim excerpts") {
    std::ifstream in(GAWB_SOURCE_TEXT);
    REQUIRE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = squash(ss.str());
    for (const auto& c : claim_registry())
        CHECK_MESSAGE(text.find(squash(c.anchor.quote)) != std::string::npos, c.id << ": " << c.anchor.quote);
}
#endif

TEST_CASE("claim statuses") {
    ClaimContext ctx;
    auto r = verify_paper(ctx, {"theorem-self-intersection-grid", "example-x22-kernel-a", "example-x22-unit-ideal",
                                "lemma-h0-normalization", "example-x22-class-display"});
    REQUIRE(r.records.size() == 5);
    // Registry order, not request order.
    CHECK(r.records[0].id == "lemma-h0-normalization");
    CHECK(find(r, "theorem-self-intersection-grid").status == ClaimStatus::pass);
    CHECK(find(r, "example-x22-unit-ideal").status == ClaimStatus::pass);
    CHECK(find(r, "example-x22-class-display").status == ClaimStatus::pass);

    const auto& ka = find(r, "example-x22-kernel-a");
    CHECK(ka.status == ClaimStatus::discrepancy);
    REQUIRE(ka.residuals.size() == 1);
    CHECK(ka.residuals[0].find("-1/6*A^3") != std::string::npos);
    CHECK(ka.symbolic == std::optional<bool>(false));
    CHECK(ka.oracle == std::optional<bool>(false));
    CHECK(ka.points >= 20);

    const auto& h0 = find(r, "lemma-h0-normalization");
    CHECK(h0.status == ClaimStatus::discrepancy);
    CHECK(h0.actual.find("m-n") != std::string::npos);

    CHECK_THROWS_AS(verify_paper(ctx, {"no-such-claim"}), DomainError);
}

TEST_CASE("engine errors are recorded as fail") {
    Claim broken{"broken", {"nowhere", "q"}, "throws", "nothing", [](const ClaimContext&) -> ClaimOutcome {
                     throw DomainError("boom");
                 }};
    auto r = run_claim(broken, ClaimContext{});
    CHECK(r.status == ClaimStatus::fail);
    CHECK(r.actual.find("boom") != std::string::npos);

    Claim split{"split", {"nowhere", "q"}, "verdicts disagree", "nothing", [](const ClaimContext&) {
                    ClaimOutcome o;
                    o.agrees = true;
                    o.symbolic = true;
                    o.oracle = false;
                    return o;
                }};
    CHECK(run_claim(split, ClaimContext{}).status == ClaimStatus::fail);
}

TEST_CASE("reports are deterministic") {
    ClaimContext ctx;
    ctx.seed = 7;
    std::vector<std::string> ids{"example-xmn-descent-grid", "trivialization-grid", "example-x22-delta-w",
                                 "example-x22-cocycle-identity"};
    auto a = to_json(verify_paper(ctx, ids, 1)).dump();
    auto b = to_json(verify_paper(ctx, ids, 4)).dump();
    CHECK(a == b);
    CHECK(a.find("seconds") == std::string::npos);
    CHECK(to_json(verify_paper(ctx, ids, 2), true).dump().find("seconds") != std::string::npos);
    CHECK(claim_seed(7, "a") == claim_seed(7, "a"));
    CHECK(claim_seed(7, "a") != claim_seed(8, "a"));
}

TEST_CASE("JSON shapes") {
    CocycleClass c;
    c.coeffs[{3, 1}] = Rational(1);
    CHECK(to_json(c).dump() == R"({"terms":[{"i":3,"j":1,"c":"1"}]})");
    CHECK(to_json(SplittingType{-1, -3}).dump() == R"({"type":[-1,-3],"hirzebruch":2})");
    auto s = RuledSurface::hirzebruch(2);
    CHECK(to_json(DivisorClass{s, {1, 3}}).dump() == R"({"surface":"F2","coeffs":[1,3]})");
}
