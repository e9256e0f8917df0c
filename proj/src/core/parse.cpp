#include "gawb/parse.hpp"

#include <algorithm>
#include <cctype>

#include "gawb/error.hpp"

namespace gawb {
namespace {

class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string>* declared) : s_(text), declared_(declared) {}

    Poly run() {
        skip();
        if (pos_ == s_.size()) fail("empty expression");
        Poly p = expr();
        skip();
        if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expr() {
        Poly acc = term();
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Poly term() {
        Poly acc = unary();
        while (accept('*')) acc *= unary();
        return acc;
    }

    Poly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Poly power() {
        std::size_t base_pos = (skip(), pos_);
        Poly base = atom();
        if (!accept('^')) return base;
        skip();
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            neg = s_[pos_] == '-';
            ++pos_;
        }
        skip();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected integer exponent");
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ - start > 6) fail("exponent too large");
        int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
        if (neg) e = -e;
        skip();
        if (pos_ < s_.size() && s_[pos_] == '^') fail("chained '^' needs parentheses");
        if (e < 0 && base.size() != 1) throw ParseError("negative exponent applied to a non-monomial", base_pos);
        return base.pow(e);
    }

    Poly atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string lit(s_.substr(start, pos_ - start));
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                std::size_t dstart = pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
                if (pos_ == dstart) fail("expected denominator");
                std::string den(s_.substr(dstart, pos_ - dstart));
                if (std::all_of(den.begin(), den.end(), [](char d) { return d == '0'; }))
                    throw ParseError("zero denominator", dstart);
                lit += "/" + den;
            }
            expect_operator_follows();
            return Poly(Rational::parse(lit));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            if (declared_ && std::find(declared_->begin(), declared_->end(), name) == declared_->end())
                throw ParseError("undeclared variable '" + name + "'", start);
            expect_operator_follows();
            return Poly::variable(name);
        }
        fail(std::string("unexpected '") + c + "'");
    }

    // Juxtaposition such as "2x" or "x y" is rejected: '*' is mandatory.
    void expect_operator_follows() {
        std::size_t save = pos_;
        skip();
        if (pos_ < s_.size()) {
            char c = s_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_')
                fail("expected operator ('*' is required between factors)");
        }
        pos_ = save;
    }

    std::string_view s_;
    const std::vector<std::string>* declared_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const std::vector<std::string>& declared) {
    return Parser(text, &declared).run();
}

Poly parse_poly(std::string_view text) { return Parser(text, nullptr).run(); }

std::vector<std::string> identifiers_in(std::string_view text) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < text.size();) {
        if (std::isalpha(static_cast<unsigned char>(text[i]))) {
            std::size_t start = i;
            while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
            std::string name(text.substr(start, i - start));
            if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
        } else if (std::isdigit(static_cast<unsigned char>(text[i]))) {
            while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
        } else {
            ++i;
        }
    }
    return out;
}

std::string to_string(const Poly& p, const TermOrder& order) {
    if (p.is_zero()) return "0";
    std::vector<const Poly::Term*> terms;
    for (const auto& t : p.terms()) terms.push_back(&t);
    std::sort(terms.begin(), terms.end(),
              [&](const Poly::Term* a, const Poly::Term* b) { return order.compare(a->mono, b->mono) > 0; });
    std::vector<VarId> layout = order.arrange(p.variables());

    std::string out;
    bool first = true;
    for (const auto* t : terms) {
        Rational c = t->coeff;
        bool negative = c.sign() < 0;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        Rational mag = c.abs();
        std::string factors;
        for (VarId v : layout) {
            int e = t->mono.exponent(v);
            if (e == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += var_name(v);
            if (e != 1) factors += "^" + std::to_string(e);
        }
        if (factors.empty()) {
            out += mag.str();
        } else if (mag.is_one()) {
            out += factors;
        } else {
            out += mag.str() + "*" + factors;
        }
    }
    return out;
}

std::string to_string(const Poly& p) { return to_string(p, TermOrder()); }

}  // namespace gawb
