// Acceptance criteria, one line each. Exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>

#include "gawb/cech.hpp"
#include "gawb/claims.hpp"
#include "gawb/error.hpp"
#include "gawb/intersection.hpp"
#include "gawb/p1.hpp"
#include "gawb/parse.hpp"

using namespace gawb;

namespace {

struct Result {
    bool ok = true;
    std::string note;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) note = what;
        ok = ok && cond;
    }
};

const ClaimRecord* find(const Report& r, const std::string& id) {
    for (const auto& c : r.records)
        if (c.id == id) return &c;
    return nullptr;
}

// Every listed claim is present and passed.
void require_pass(Result& res, const Report& r, std::initializer_list<const char*> ids) {
    for (const char* id : ids) {
        const auto* c = find(r, id);
        res.require(c && c->status == ClaimStatus::pass, std::string(id) + " did not pass");
    }
}

Result derivation_suite() {
    Result res;
    ClaimContext ctx;
    auto r = verify_paper(ctx, {"example-xmn-descent-grid", "example-xmn-nilpotency-grid", "example-xmn-exponential-grid",
                                "gm-action-grid", "semidirect-twist-grid"});
    require_pass(res, r, {"example-xmn-descent-grid", "example-xmn-nilpotency-grid", "example-xmn-exponential-grid",
                          "gm-action-grid", "semidirect-twist-grid"});
    for (const auto& c : r.records) res.require(c.symbolic == std::optional<bool>(true), c.id + ": symbolic check");
    return res;
}

Result trivialization_suite() {
    Result res;
    ClaimContext ctx;
    ctx.points = 20;
    auto r = verify_paper(ctx, {"trivialization-grid"});
    require_pass(res, r, {"trivialization-grid"});
    const auto* c = find(r, "trivialization-grid");
    res.require(c && c->oracle == std::optional<bool>(true), "oracle did not concur");
    res.require(c && c->points == 9 * 20, "expected 20 points per case");
    return res;
}

Result splitting_grid() {
    Result res;
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= m; ++n) {
            std::string tag = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
            int d = m + n;
            auto M = extension_matrix(d, m);
            auto s = birkhoff_split(M);
            SplittingType want{-n, -m};
            res.require(birkhoff_valid(M, s), tag + " invalid factorization");
            res.require(s.type == want, tag + " Birkhoff type " + s.type.str());
            res.require(splitting_from_h0(M) == s.type, tag + " h0 scan disagrees");
            res.require(s.type.hirzebruch() == 2 * m - d, tag + " index != 2m-d");
            int below = h0_twist(M, m - 1).dimension;
            res.require(below == m - n, tag + " h0(E(m-1)) = " + std::to_string(below));
        }
    auto r = verify_paper(ClaimContext{}, {"lemma-h0-normalization"});
    const auto* c = find(r, "lemma-h0-normalization");
    res.require(c && c->status == ClaimStatus::discrepancy && c->residuals.size() == 10,
                "h0(E(m-1)) discrepancy not reported for the 10 cases with m > n");
    return res;
}

Result intersection_suite() {
    Result res;
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= m; ++n) {
            std::string tag = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
            res.require(sdm_boundary_class(m, n).self_intersection == m + n, tag + " (C+mF)^2");
            auto s = RuledSurface::scroll(m, n);
            auto D = delta_class(s);
            res.require(intersect(D, D) == m + n, tag + " Delta^2");
        }
    res.require(intersection_self_test(6).ok, "three-way consistency check");
    return res;
}

Result affineness_sweep(long long& cases) {
    Result res;
    AffinenessOptions opt;
    opt.check_printed_witness = false;
    const VarId x = var("x"), y = var("y");
    cases = 0;
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
            std::vector<Monomial> monos;
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < n; ++j)
                    if (i || j) monos.push_back(Monomial::of(x, i) * Monomial::of(y, j));
            std::size_t total = 1;
            for (std::size_t k = 0; k < monos.size(); ++k) total *= 5;
            for (std::size_t code = 0; code < total; ++code) {
                std::vector<Poly::Term> terms;
                std::size_t c = code;
                for (const auto& mo : monos) {
                    int digit = static_cast<int>(c % 5) - 2;
                    c /= 5;
                    if (digit) terms.push_back({mo, Rational(digit)});
                }
                if (terms.empty()) continue;
                Poly p = Poly::from_terms(std::move(terms));
                auto cert = affineness_certificate(NormalFormMNP::make(m, n, p), opt);
                ++cases;
                std::string tag = "m=" + std::to_string(m) + " n=" + std::to_string(n) + " p=" + to_string(p);
                res.require(static_cast<int>(cert.trace.size()) <= p.max_degree(y) + 1, tag + ": too many steps");
                res.require(cert.outcome == AffinenessCertificate::Outcome::UnitCertificate, tag + ": no unit certificate");
                res.require(!cert.q0.constant_term().is_zero(), tag + ": q0(0) = 0");
                res.require(cert.all_witnesses_valid(), tag + ": witness failed membership");
            }
        }
    return res;
}

Result example_suite() {
    Result res;
    const char* five[] = {"example-x22-kernel-a", "example-x22-kernel-b", "example-x22-delta-slice-a",
                          "example-x22-delta-w", "example-x22-unit-ideal", "example-x22-cocycle-identity"};
    std::vector<std::string> ids(std::begin(five), std::end(five));
    ids.push_back("example-x22-class-display");
    ids.push_back("example-x22-class-sentence");
    auto r = verify_paper(ClaimContext{}, ids);
    for (const char* id : five) {
        const auto* c = find(r, id);
        res.require(c != nullptr, std::string(id) + " missing");
        if (!c) continue;
        res.require(c->symbolic.has_value() && c->oracle.has_value(), c->id + ": needs both verdicts");
        res.require(c->symbolic == c->oracle, c->id + ": symbolic and point verdicts disagree");
        res.require(c->points >= 20, c->id + ": fewer than 20 points");
        res.require(c->status == ClaimStatus::pass || (c->status == ClaimStatus::discrepancy && !c->residuals.empty()),
                    c->id + ": neither pass nor a residual");
    }
    const auto* ka = find(r, "example-x22-kernel-a");
    res.require(ka && !ka->residuals.empty() && ka->residuals[0].find("-1/6*A^3") != std::string::npos,
                "delta(a) residual is not -a^3/6");
    const auto* disp = find(r, "example-x22-class-display");
    const auto* sent = find(r, "example-x22-class-sentence");
    res.require(disp && disp->status == ClaimStatus::pass, "class does not match a^-3 b^-1");
    res.require(sent && sent->status == ClaimStatus::discrepancy, "class unexpectedly matches a^-3 b");
    return res;
}

Result classification() {
    Result res;
    res.require(classify_xmn(2, 2, 3, 1).verdict == Verdict::IsomorphicByTheorem, "classify_xmn(2,2,3,1)");
    auto c = classify_xfg(parse_poly("x^2 + y^2"), parse_poly("y^3"));
    res.require(c.m == 2 && c.n == 3 && !c.resultant.is_zero(), "classify_xfg(x^2+y^2, y^3)");
    bool diagnosed = false;
    try {
        classify_xfg(parse_poly("x*y"), parse_poly("x^2"));
    } catch (const DomainError& e) {
        diagnosed = std::string(e.what()).find("common zero") != std::string::npos;
    }
    res.require(diagnosed, "classify_xfg(x*y, x^2) lacks a common-zero diagnosis");
    return res;
}

Result properties_and_registry(const std::string& properties_bin, double& registry_seconds) {
    Result res;
    int rc = std::system((properties_bin + " --cases 200 > /dev/null").c_str());
    res.require(rc == 0, "property suite failed");
    auto t0 = std::chrono::steady_clock::now();
    auto r = verify_paper(ClaimContext{}, {}, 1);
    registry_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    res.require(r.records.size() >= 20, "registry has fewer than 20 claims");
    res.require(r.count(ClaimStatus::fail) == 0, "registry has failing claims");
    res.require(registry_seconds < 180, "full registry took longer than 3 minutes");
    return res;
}

}  // namespace

int main(int argc, char** argv) {
    std::string properties_bin = argc > 1 ? argv[1] : "./gawb_properties";
    bool all = true;
    auto report = [&](int n, const std::string& what, double limit, const std::function<Result()>& fn) {
        auto t0 = std::chrono::steady_clock::now();
        Result r;
        try {
            r = fn();
        } catch (const std::exception& e) {
            r.ok = false;
            r.note = std::string("exception: ") + e.what();
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (limit > 0 && s >= limit) {
            r.ok = false;
            if (r.note.empty()) r.note = "over the time limit";
        }
        all = all && r.ok;
        std::printf("criterion %d: %s  %s (%.2f s%s)%s%s\n", n, r.ok ? "PASS" : "FAIL", what.c_str(), s,
                    limit > 0 ? (", limit " + std::to_string(static_cast<int>(limit)) + " s").c_str() : "",
                    r.note.empty() ? "" : ": ", r.note.c_str());
        std::fflush(stdout);
    };
    report(1, "derivation/action suite, 1 <= m,n <= 3", 10, derivation_suite);
    report(2, "trivialization identities with a 20-point oracle", 0, trivialization_suite);
    report(3, "splitting grid by Birkhoff and h0, 1 <= n <= m <= 5", 5, splitting_grid);
    report(4, "intersection suite and three-way consistency", 0, intersection_suite);
    long long cases = 0;
    report(5, "affineness certificates, coefficients in {-2..2}", 60, [&] {
        auto r = affineness_sweep(cases);
        if (r.ok) r.note = std::to_string(cases) + " cases";
        return r;
    });
    report(6, "X_{2,2} example, symbolic and 20-point verdicts", 0, example_suite);
    report(7, "classification endpoints", 0, classification);
    double reg = 0;
    report(8, "property suites and full registry run", 0, [&] {
        auto r = properties_and_registry(properties_bin, reg);
        if (r.ok) r.note = "registry " + std::to_string(reg).substr(0, 5) + " s";
        return r;
    });
    return all ? 0 : 1;
}
