// gawb: command-line front end to the engine.
//
// Exit codes: 0 success, 1 engine error, 2 usage error. Global flags may be
// set through GAWB_* environment variables (GAWB_SEED, GAWB_JOBS, ...).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "gawb/cech.hpp"
#include "gawb/claims.hpp"
#include "gawb/error.hpp"
#include "gawb/intersection.hpp"
#include "gawb/json_io.hpp"
#include "gawb/lnd.hpp"
#include "gawb/p1.hpp"
#include "gawb/parse.hpp"
#include "gawb/quotient.hpp"

using namespace gawb;

namespace {

struct Globals {
    bool json = false;
    std::uint64_t seed = 42;
    unsigned jobs = 1;
    std::size_t groebner_budget = 20000;
    int nilpotency_bound = 64;
    int power_bound = 12;
    bool timings = false;
};

// Thrown for bad input that CLI11 cannot catch itself.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// "@path" reads the text from a file.
std::string text_arg(const std::string& s) { return !s.empty() && s[0] == '@' ? read_file(s.substr(1)) : s; }

void emit(const Globals& g, const Json& j, const std::string& human) {
    if (g.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << human;
}

GroebnerOptions gb(const Globals& g) {
    GroebnerOptions o;
    o.spair_budget = g.groebner_budget;
    return o;
}

RuledSurface parse_surface(const std::string& s) {
    int a = 0, b = 0;
    char tail = 0;
    if (std::sscanf(s.c_str(), "F(%d,%d)%c", &a, &b, &tail) == 2) return RuledSurface::scroll(a, b);
    if (std::sscanf(s.c_str(), "F%d%c", &a, &tail) == 1) return RuledSurface::hirzebruch(a);
    throw UsageError("surface must look like F2 or F(3,1), got '" + s + "'");
}

DivisorClass parse_class(const RuledSurface& s, const std::string& text) {
    long long a = 0, b = 0;
    char tail = 0;
    if (std::sscanf(text.c_str(), "%lld,%lld%c", &a, &b, &tail) != 2)
        throw UsageError("class must be two integers 'a,b', got '" + text + "'");
    return {s, {a, b}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gawb: principal G_a-bundles, locally nilpotent derivations and ruled surfaces"};
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--json", g.json, "JSON output")->envname("GAWB_JSON");
    app.add_option("--seed", g.seed, "seed for sampled points")->envname("GAWB_SEED");
    app.add_option("--jobs", g.jobs, "claims run concurrently")->envname("GAWB_JOBS")->check(CLI::Range(1u, 256u));
    app.add_option("--groebner-budget", g.groebner_budget, "S-pair budget per Groebner basis")
        ->envname("GAWB_GROEBNER_BUDGET");
    app.add_option("--nilpotency-bound", g.nilpotency_bound, "iterations before NotNilpotent")
        ->envname("GAWB_NILPOTENCY_BOUND")
        ->check(CLI::PositiveNumber);
    app.add_option("--power-bound", g.power_bound, "power bound of the smoothness test")
        ->envname("GAWB_POWER_BOUND")
        ->check(CLI::PositiveNumber);
    app.add_flag("--timings", g.timings, "include per-claim wall clock")->envname("GAWB_TIMINGS");

    // eval
    auto* eval = app.add_subcommand("eval", "canonical form of a polynomial, optionally in a presented ring");
    std::string eval_expr, eval_pres;
    eval->add_option("expr", eval_expr, "polynomial")->required();
    eval->add_option("--presentation", eval_pres, "ring, e.g. 'vars: x,y,u,v; relations: x^2*v - y^2*u - 1' (@file)");

    // cocycle
    auto* coc = app.add_subcommand("cocycle", "Cech cocycles on the punctured plane");
    coc->require_subcommand(1);
    std::string coc_g;
    auto* coc_class = coc->add_subcommand("class", "class in H^1");
    coc_class->add_option("g", coc_g, "Laurent polynomial in x, y")->required();
    auto* coc_norm = coc->add_subcommand("normalize", "normal form p x^-m y^-n");
    coc_norm->add_option("g", coc_g, "Laurent polynomial in x, y")->required();
    auto* coc_cob = coc->add_subcommand("coboundary", "split into chart-regular parts");
    coc_cob->add_option("g", coc_g, "Laurent polynomial in x, y")->required();

    // affine-cert
    auto* aff = app.add_subcommand("affine-cert", "affineness certificate for X(m,n,p)");
    int aff_m = 0, aff_n = 0;
    std::string aff_p;
    bool aff_no_printed = false;
    aff->add_option("m", aff_m)->required();
    aff->add_option("n", aff_n)->required();
    aff->add_option("p", aff_p, "polynomial with deg_x p < m, deg_y p < n")->required();
    aff->add_flag("--skip-printed-witness", aff_no_printed, "do not test the printed Case-1 witness");

    // lnd
    auto* lnd = app.add_subcommand("lnd", "locally nilpotent derivations");
    lnd->require_subcommand(1);
    std::string lnd_pres, lnd_der, lnd_elem, lnd_param = "t";
    auto lnd_common = [&](CLI::App* sc) {
        sc->add_option("--presentation", lnd_pres, "ring text (@file)")->required();
        sc->add_option("--derivation", lnd_der, "e.g. 'u -> x^2; v -> y^2' (@file)")->required();
    };
    auto* lnd_check = lnd->add_subcommand("check", "descent and nilpotency");
    lnd_common(lnd_check);
    auto* lnd_exp = lnd->add_subcommand("exp", "exponential exp(t d)");
    lnd_common(lnd_exp);
    lnd_exp->add_option("--param", lnd_param, "parameter name");
    auto* lnd_slice = lnd->add_subcommand("slice", "test d(s) = 1");
    lnd_common(lnd_slice);
    lnd_slice->add_option("--element", lnd_elem, "candidate slice")->required();

    // splitting, h0
    std::string matrix_file;
    auto* split = app.add_subcommand("splitting", "Birkhoff factorization and splitting type");
    split->add_option("--matrix", matrix_file, "file with [[a, b], [c, d]] in u")->required();
    auto* h0 = app.add_subcommand("h0", "global sections of E(j)");
    int h0_j = 0;
    h0->add_option("--matrix", matrix_file, "file with [[a, b], [c, d]] in u")->required();
    h0->add_option("--j", h0_j, "twist")->required();

    // intersect
    auto* inter = app.add_subcommand("intersect", "intersection number on F_k or F(m,n)");
    std::string inter_surface, inter_a, inter_b;
    inter->add_option("surface", inter_surface, "F2 or F(3,1)")->required();
    inter->add_option("a", inter_a, "coefficients 'c0,c1' on (C,F) or (C_u,L)")->required();
    inter->add_option("b", inter_b, "coefficients 'c0,c1'")->required();

    // classify
    auto* cls = app.add_subcommand("classify", "isomorphism criteria");
    cls->require_subcommand(1);
    std::vector<int> mnpq;
    auto* cls_mn = cls->add_subcommand("mn", "X_{m,n} against X_{p,q}");
    cls_mn->add_option("mnpq", mnpq, "m n p q")->required()->expected(4);
    std::string fg_f, fg_g;
    auto* cls_fg = cls->add_subcommand("fg", "X_{f,g} for binary forms f, g");
    cls_fg->add_option("f", fg_f)->required();
    cls_fg->add_option("g", fg_g)->required();

    // verify-paper
    auto* vp = app.add_subcommand("verify-paper", "run the claims registry");
    std::vector<std::string> only;
    bool list = false;
    vp->add_option("--only", only, "claim ids, repeated or comma separated")->delimiter(',');
    vp->add_flag("--list", list, "list claim ids and exit");
    vp->add_option("--seed", g.seed, "seed for sampled points");
    vp->add_option("--jobs", g.jobs, "claims run concurrently")->check(CLI::Range(1u, 256u));
    vp->add_flag("--timings", g.timings, "include per-claim wall clock");
    vp->add_flag("--json", g.json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        auto self = intersection_self_test(6);
        if (!self.ok) {
            std::cerr << "error: intersection self-test failed\n";
            for (const auto& c : self.checks)
                if (!c.pass) std::cerr << "  " << c.name << ": " << c.residual << "\n";
            return 1;
        }

        if (eval->parsed()) {
            if (eval_pres.empty()) {
                Poly p = parse_poly(eval_expr);
                emit(g, Json{{"input", eval_expr}, {"result", to_string(p)}}, to_string(p) + "\n");
            } else {
                auto pres = Presentation::parse(text_arg(eval_pres), gb(g));
                auto e = pres->element(eval_expr);
                emit(g, Json{{"input", eval_expr}, {"ring", pres->str()}, {"result", e.str()}}, e.str() + "\n");
            }
        } else if (coc->parsed()) {
            Poly p = parse_poly(coc_g, {"x", "y"});
            if (coc_class->parsed()) {
                auto c = class_of(p);
                emit(g, to_json(c), c.str() + "\n");
            } else if (coc_norm->parsed()) {
                auto nf = normal_form_mnp(class_of(p));
                emit(g, to_json(nf), nf.str() + "\n");
            } else {
                auto r = is_coboundary(p);
                Json j{{"coboundary", r.coboundary},
                       {"plus", to_string(r.plus)},
                       {"minus", to_string(r.minus)},
                       {"class", to_json(class_of(p))}};
                emit(g, j,
                     std::string(r.coboundary ? "coboundary" : "not a coboundary") + ": g = (" + to_string(r.plus) +
                         ") - (" + to_string(r.minus) + ")" + (r.coboundary ? "" : " + " + to_string(r.class_part)) + "\n");
            }
        } else if (aff->parsed()) {
            auto nf = NormalFormMNP::make(aff_m, aff_n, parse_poly(aff_p, {"x", "y"}));
            AffinenessOptions opt;
            opt.check_printed_witness = !aff_no_printed;
            auto c = affineness_certificate(nf, opt);
            emit(g, to_json(c), c.str() + "\n");
        } else if (lnd->parsed()) {
            auto pres = Presentation::parse(text_arg(lnd_pres), gb(g));
            auto d = Derivation::parse(pres, text_arg(lnd_der));
            if (lnd_check->parsed()) {
                Json j{{"derivation", d.str()}, {"descends", d.descends()}};
                std::string human = "derivation: " + d.str() + "\ndescends: " + (d.descends() ? "yes" : "no") + "\n";
                if (!d.descends()) {
                    Json res = Json::array();
                    for (const auto& r : d.relation_residuals()) res.push_back(r.str());
                    j["relation_residuals"] = res;
                    for (const auto& r : d.relation_residuals()) human += "  d(relation) = " + r.str() + "\n";
                }
                try {
                    auto cert = nilpotency_certificate(d, g.nilpotency_bound);
                    j["nilpotency"] = to_json(cert);
                    human += "nilpotent (" + cert.ring + " ring):";
                    for (const auto& [v, k] : cert.index) human += " " + var_name(v) + ":" + std::to_string(k);
                    human += "\n";
                } catch (const NotNilpotent& e) {
                    j["nilpotency"] = {{"error", e.what()}, {"bound", e.bound()}};
                    human += std::string("not nilpotent: ") + e.what() + "\n";
                }
                emit(g, j, human);
            } else if (lnd_exp->parsed()) {
                auto a = exponential(d, lnd_param, g.nilpotency_bound);
                Json imgs = Json::object();
                for (std::size_t i = 0; i < a.images.size(); ++i) imgs[var_name(pres->vars()[i])] = a.images[i].str();
                emit(g, Json{{"parameter", lnd_param}, {"images", imgs}}, a.str() + "\n");
            } else {
                bool s = is_slice(d, pres->element(lnd_elem));
                emit(g, Json{{"element", lnd_elem}, {"slice", s}}, std::string(s ? "slice" : "not a slice") + "\n");
            }
        } else if (split->parsed()) {
            auto M = parse_matrix(read_file(matrix_file));
            auto s = birkhoff_split(M);
            auto h = splitting_from_h0(M);
            Json j = to_json(s);
            j["valid"] = birkhoff_valid(M, s);
            j["h0_type"] = {h.a1, h.a2};
            j["methods_agree"] = h == s.type;
            emit(g, j,
                 "M = " + mat_str(M) + "\nQ = " + mat_str(s.Q) + "\nD = " + mat_str(s.D) + "\nP = " + mat_str(s.P) +
                     "\nsplitting type " + s.type.str() + " (h0 scan " + h.str() + "), Hirzebruch index " +
                     std::to_string(s.type.hirzebruch()) + "\n");
        } else if (h0->parsed()) {
            auto M = parse_matrix(read_file(matrix_file));
            auto h = h0_twist(M, h0_j);
            std::string human = "h0(E(" + std::to_string(h0_j) + ")) = " + std::to_string(h.dimension) + "\n";
            for (const auto& [g1, g2] : h.basis) human += "  (" + to_string(g1) + ", " + to_string(g2) + ")\n";
            emit(g, to_json(h), human);
        } else if (inter->parsed()) {
            auto s = parse_surface(inter_surface);
            auto a = parse_class(s, inter_a), b = parse_class(s, inter_b);
            long long v = intersect(a, b);
            emit(g, Json{{"a", to_json(a)}, {"b", to_json(b)}, {"value", v}},
                 "(" + a.str() + ").(" + b.str() + ") = " + std::to_string(v) + " on " + s.name() + "\n");
        } else if (cls_mn->parsed()) {
            auto c = classify_xmn(mnpq[0], mnpq[1], mnpq[2], mnpq[3]);
            emit(g, to_json(c), to_string(c.verdict) + ", d = " + std::to_string(c.d1) + " vs " + std::to_string(c.d2) + "\n");
        } else if (cls_fg->parsed()) {
            auto c = classify_xfg(parse_poly(fg_f, {"x", "y"}), parse_poly(fg_g, {"x", "y"}));
            emit(g, to_json(c),
                 c.conclusion + " (resultant " + c.resultant.str() + "), Delta^2 = " +
                     std::to_string(c.delta_self_intersection) + " on " + c.scroll + "\n");
        } else if (vp->parsed()) {
            if (list) {
                Json ids = Json::array();
                std::string human;
                for (const auto& c : claim_registry()) {
                    ids.push_back(c.id);
                    human += c.id + "\n";
                }
                emit(g, ids, human);
                return 0;
            }
            ClaimContext ctx;
            ctx.seed = g.seed;
            ctx.nilpotency_bound = g.nilpotency_bound;
            ctx.power_bound = g.power_bound;
            ctx.groebner = gb(g);
            Report r;
            try {
                r = verify_paper(ctx, only, g.jobs);
            } catch (const DomainError& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 2;
            }
            emit(g, to_json(r, g.timings), report_table(r, g.timings));
            if (r.count(ClaimStatus::fail)) return 1;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
