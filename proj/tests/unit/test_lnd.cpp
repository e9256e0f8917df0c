#include <doctest.h>

#include "gawb/error.hpp"
#include "gawb/lnd.hpp"
#include "gawb/parse.hpp"

using namespace gawb;

namespace {

PresentationPtr xmn(int m, int n, bool invert_x = false) {
    std::string t = "vars: x,y,u,v; ";
    if (invert_x) t += "invert: x; ";
    t += "relations: x^" + std::to_string(m) + "*v - y^" + std::to_string(n) + "*u - 1; order: degrevlex(v,u,x,y)";
    return Presentation::parse(t);
}

Derivation delta(const PresentationPtr& p, int m, int n) {
    return Derivation::parse(p, "der: u -> x^" + std::to_string(m) + "; v -> y^" + std::to_string(n));
}

ActionMap gm_action(const PresentationPtr& p, int m, int n) {
    return scaling_action(p, {{var("x"), 1}, {var("y"), 1}, {var("u"), -n}, {var("v"), -m}}, "lam");
}

}  // namespace

TEST_CASE("apply on X_mn") {
    auto p = xmn(2, 3);
    auto d = delta(p, 2, 3);
    CHECK(d.descends());
    CHECK(d.apply(p->element("u")) == p->element("x^2"));
    CHECK(d.apply(p->element("x^2*v - y^3*u")).is_zero());
    auto p11 = xmn(1, 1);
    auto d11 = delta(p11, 1, 1);
    CHECK(d11.apply(p11->element("u*v")) == p11->element("x*v + u*y"));
}

TEST_CASE("derivation text round trip") {
    auto p = xmn(1, 1);
    auto d = Derivation::parse(p, "u -> x; v -> y");
    auto e = Derivation::parse(p, d.str());
    CHECK(e.str() == d.str());
    CHECK_THROWS_AS(Derivation::parse(p, "der: w -> x"), ParseError);
    CHECK_THROWS_AS(Derivation::parse(p, "der: u x"), ParseError);
}

TEST_CASE("descent") {
    auto p = xmn(1, 1);
    CHECK(descends_to_quotient(delta(p, 1, 1)));
    auto bad = Derivation::parse(p, "der: u -> 1");
    CHECK_FALSE(descends_to_quotient(bad));
    REQUIRE(bad.relation_residuals().size() == 1);
    CHECK(bad.relation_residuals()[0] == p->element("-y"));
    CHECK_THROWS_AS(bad.apply(p->element("u")), DomainError);
    CHECK(descends_to_quotient(Derivation(p, {})));
}

TEST_CASE("nilpotency certificates") {
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
            auto cert = nilpotency_certificate(delta(xmn(m, n), m, n));
            CHECK(cert.ring == "quotient");
            CHECK(cert.index[var("u")] == 2);
            CHECK(cert.index[var("v")] == 2);
            CHECK(cert.index[var("x")] == 1);
            CHECK(cert.index[var("y")] == 1);
        }
    auto q = Presentation::parse("vars: x,y");
    auto euler = Derivation::parse(q, "x -> x");
    CHECK_THROWS_AS(nilpotency_certificate(euler, 10), NotNilpotent);
    try {
        nilpotency_certificate(euler, 7);
    } catch (const NotNilpotent& e) {
        CHECK(e.bound() == 7);
    }
    // Triangular derivation on a polynomial ring: z -> y -> x -> 0.
    auto tri = Derivation::parse(Presentation::parse("vars: x,y,z"), "z -> y; y -> x");
    auto c = nilpotency_certificate(tri);
    CHECK(c.index[var("z")] == 3);
    CHECK(c.index[var("y")] == 2);
    CHECK(c.index[var("x")] == 1);
}

TEST_CASE("nilpotency in the free ring when the derivation does not descend") {
    auto p = xmn(1, 1);
    auto bad = Derivation::parse(p, "der: u -> 1");
    auto c = nilpotency_certificate(bad);
    CHECK(c.ring == "free");
    CHECK(c.index[var("u")] == 2);
    CHECK(c.index[var("v")] == 1);
}

TEST_CASE("exponential on X_mn") {
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
            auto p = xmn(m, n);
            auto a = exponential(delta(p, m, n));
            const auto& e = a.ext;
            std::string xm = "x^" + std::to_string(m), yn = "y^" + std::to_string(n);
            CHECK(a.images[0] == e->element("x"));
            CHECK(a.images[1] == e->element("y"));
            CHECK(a.images[2] == e->element(("u + t*" + xm).c_str()));
            CHECK(a.images[3] == e->element(("v + t*" + yn).c_str()));
        }
    auto p = xmn(2, 2);
    auto a = exponential(delta(p, 2, 2));
    auto id = a.specialize({{var("t"), p->element("0")}}, p);
    for (std::size_t i = 0; i < id.size(); ++i) CHECK(id[i] == p->element(Poly::variable(p->vars()[i])));
    CHECK_THROWS_AS(exponential(Derivation::parse(xmn(1, 1), "u -> 1")), DomainError);
    CHECK_THROWS_AS(exponential(delta(p, 2, 2), "x"), DomainError);
}

TEST_CASE("exponential of a derivation with index three") {
    auto q = Presentation::parse("vars: x,y,z");
    auto a = exponential(Derivation::parse(q, "z -> y; y -> x"), "t");
    CHECK(a.images[2] == a.ext->element("z + t*y + 1/2*t^2*x"));
    auto r = verify_action(a, GroupLaw::additive(), 3, 10);
    CHECK(r.symbolic_pass);
    CHECK(r.oracle_pass);
}

TEST_CASE("slices") {
    auto loc = xmn(2, 1, true);
    auto d = delta(loc, 2, 1);
    CHECK(is_slice(d, loc->element("u*x^-2")));
    auto p = xmn(2, 1);
    CHECK_FALSE(is_slice(delta(p, 2, 1), p->element("u")));
    CHECK_FALSE(is_slice(Derivation(p, {}), p->element("u")));
}

TEST_CASE("kernel membership") {
    auto p = xmn(3, 2);
    auto d = delta(p, 3, 2);
    CHECK(kernel_member(d, p->element("x")));
    CHECK(kernel_member(d, p->element("y")));
    CHECK_FALSE(kernel_member(d, p->element("u")));
    // y^2*u - x^3*v is -1 in the ring.
    CHECK(kernel_member(d, p->element("y^2*u - x^3*v")));
    // kernel elements are fixed by exp(t d)
    auto a = exponential(d);
    CHECK(a.apply(p->element("x^2*y + 1")) == a.ext->element("x^2*y + 1"));
}

TEST_CASE("additive action axioms") {
    auto p = xmn(2, 2);
    auto r = verify_action(exponential(delta(p, 2, 2)), GroupLaw::additive(), 5, 20);
    CHECK(r.symbolic_pass);
    CHECK(r.oracle_pass);
    CHECK(r.points == 20);
    REQUIRE(r.checks.size() == 3);
    CHECK(r.checks[1].name == "composition");
}

TEST_CASE("multiplicative action axioms") {
    auto p = xmn(2, 1);
    auto r = verify_action(gm_action(p, 2, 1), GroupLaw::multiplicative(), 5, 20);
    CHECK(r.symbolic_pass);
    CHECK(r.oracle_pass);

    // Wrong weights break the relation; both verdicts agree.
    auto bad = scaling_action(p, {{var("x"), 1}, {var("y"), 1}, {var("u"), -2}, {var("v"), -2}}, "lam");
    auto rb = verify_action(bad, GroupLaw::multiplicative(), 5, 20);
    CHECK_FALSE(rb.symbolic_pass);
    CHECK_FALSE(rb.oracle_pass);
    CHECK(rb.checks[2].name == "relations");
    CHECK_FALSE(rb.checks[2].pass);
    CHECK(rb.checks[0].pass);
    CHECK(rb.checks[1].pass);
}

TEST_CASE("semidirect action and twist identity") {
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
            auto p = xmn(m, n);
            auto gm = gm_action(p, m, n);
            auto ga = exponential(delta(p, m, n), "t");
            // lam acting after t: the point map p -> lam.(t.p)
            auto theta = compose(gm, ga);
            auto r = verify_action(theta, GroupLaw::semidirect(m + n), 9, 20);
            CHECK(r.symbolic_pass);
            CHECK(r.oracle_pass);

            // Wrong exponent in the law is rejected by both checks.
            auto wrong = verify_action(theta, GroupLaw::semidirect(m + n + 1), 9, 20);
            CHECK_FALSE(wrong.symbolic_pass);
            CHECK_FALSE(wrong.oracle_pass);

            // lam.(t.p) = (lam^-d t).(lam.p)
            auto other = compose(ga, gm);
            auto e = theta.ext;
            std::string d = std::to_string(m + n);
            auto twisted = other.specialize({{var("t"), e->element(("lam^-" + d + "*t").c_str())},
                                             {var("lam"), e->element("lam")}},
                                            e);
            for (std::size_t i = 0; i < twisted.size(); ++i) CHECK(twisted[i] == theta.images[i]);
        }
}

TEST_CASE("same_action") {
    auto p = xmn(1, 2);
    auto a = exponential(delta(p, 1, 2));
    auto b = exponential(delta(p, 1, 2));
    CHECK(same_action(a, b));
    auto c = exponential(Derivation::parse(p, "u -> 2*x; v -> 2*y^2"));
    CHECK_FALSE(same_action(a, c));
}

TEST_CASE("action parameters are validated") {
    auto p = xmn(1, 1);
    auto a = exponential(delta(p, 1, 1));
    CHECK_THROWS_AS(verify_action(a, GroupLaw::semidirect(2)), DomainError);
    CHECK_THROWS_AS(verify_action(a, GroupLaw::multiplicative()), DomainError);
}
