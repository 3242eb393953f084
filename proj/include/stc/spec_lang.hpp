#pragma once

#include <cctype>
#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "stc/families.hpp"
#include "stc/series.hpp"

namespace stc {

// Grammar (LL(1)):
//   spec    := IDENT [ "(" arglist ")" ]
//   arglist := arg { "," arg }
//   arg     := [IDENT "="] (NUMBER | COMPLEX | spec)
//   COMPLEX := NUMBER ("+"|"-") NUMBER "i"
// Constructors: identity, koebe(alpha), poly(c2,...), starlike(alpha, seed,
// atoms), synth(g=..., mu=..., w=...), cmono(c, m), wpoly(c1,...).

struct SpecArg;

struct SpecNode {
    std::string ctor;
    std::vector<SpecArg> args;  // vector of incomplete type is fine here
    bool operator==(const SpecNode& o) const;
};

using SpecValue = std::variant<double, cplx, SpecNode>;

struct SpecArg {
    std::string name;  // empty for positional
    SpecValue value;
    bool operator==(const SpecArg& o) const { return name == o.name && value == o.value; }
};

inline bool SpecNode::operator==(const SpecNode& o) const { return ctor == o.ctor && args == o.args; }

namespace detail {

class SpecParser {
  public:
    explicit SpecParser(std::string_view text) : text_(text) {}

    SpecNode parse() {
        skip_ws();
        SpecNode n = parse_spec();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError(pos_, "end of input", "trailing characters after spec");
        return n;
    }

  private:
    SpecNode parse_spec() {
        SpecNode n;
        n.ctor = expect_ident();
        skip_ws();
        if (peek() == '(') {
            ++pos_;
            skip_ws();
            if (peek() == ')') throw ParseError(pos_, "argument", "empty argument list");
            n.args.push_back(parse_arg());
            skip_ws();
            while (peek() == ',') {
                ++pos_;
                skip_ws();
                n.args.push_back(parse_arg());
                skip_ws();
            }
            if (peek() != ')') throw ParseError(pos_, "',' or ')'", "unterminated argument list");
            ++pos_;
        }
        return n;
    }

    SpecArg parse_arg() {
        SpecArg a;
        const std::size_t save = pos_;
        if (is_ident_start(peek())) {
            const std::string id = expect_ident();
            skip_ws();
            if (peek() == '=') {
                ++pos_;
                skip_ws();
                a.name = id;
            } else {
                pos_ = save;  // bare constructor, not a named binding
            }
        }
        a.value = parse_value();
        return a;
    }

    SpecValue parse_value() {
        skip_ws();
        const char c = peek();
        if (is_ident_start(c)) return parse_spec();
        if (c == '+' || c == '-' || c == '.' || std::isdigit(static_cast<unsigned char>(c))) {
            const double re = expect_number();
            const std::size_t save = pos_;
            skip_ws();
            const char s = peek();
            if (s == '+' || s == '-') {
                ++pos_;
                skip_ws();
                if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') {
                    const double im = expect_number();
                    if (peek() == 'i') {
                        ++pos_;
                        return cplx{re, s == '-' ? -im : im};
                    }
                }
                pos_ = save;
            }
            return re;
        }
        throw ParseError(pos_, "NUMBER, COMPLEX or spec", "expected a value");
    }

    static bool is_ident_start(char c) {
        return c == '_' || std::isalpha(static_cast<unsigned char>(c));
    }
    static bool is_ident_char(char c) {
        return c == '_' || std::isalnum(static_cast<unsigned char>(c));
    }

    std::string expect_ident() {
        skip_ws();
        if (!is_ident_start(peek())) throw ParseError(pos_, "IDENT", "expected an identifier");
        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    double expect_number() {
        const std::size_t start = pos_;
        if (peek() == '+' || peek() == '-') ++pos_;
        bool digits = false;
        while (std::isdigit(static_cast<unsigned char>(peek()))) { ++pos_; digits = true; }
        if (peek() == '.') {
            ++pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) { ++pos_; digits = true; }
        }
        if (!digits) throw ParseError(start, "NUMBER", "expected a number");
        if (peek() == 'e' || peek() == 'E') {
            const std::size_t esave = pos_;
            ++pos_;
            if (peek() == '+' || peek() == '-') ++pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek()))) {
                pos_ = esave;
            } else {
                while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            }
        }
        return std::stod(std::string(text_.substr(start, pos_ - start)));
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace detail

inline SpecNode parse_spec(std::string_view text) {
    if (text.empty()) throw ParseError(0, "spec", "empty spec string");
    return detail::SpecParser(text).parse();
}

inline std::string print_spec(const SpecNode& node) {
    std::string out = node.ctor;
    if (!node.args.empty()) {
        out += '(';
        for (std::size_t i = 0; i < node.args.size(); ++i) {
            if (i) out += ", ";
            const SpecArg& a = node.args[i];
            if (!a.name.empty()) {
                out += a.name;
                out += '=';
            }
            if (const double* d = std::get_if<double>(&a.value)) {
                out += detail::format_double(*d);
            } else if (const cplx* c = std::get_if<cplx>(&a.value)) {
                out += detail::format_double(c->real());
                out += c->imag() < 0 ? '-' : '+';
                out += detail::format_double(std::abs(c->imag()));
                out += 'i';
            } else {
                out += print_spec(std::get<SpecNode>(a.value));
            }
        }
        out += ')';
    }
    return out;
}

namespace detail {

inline const SpecValue& spec_arg(const SpecNode& n, std::size_t pos, std::string_view name) {
    for (const SpecArg& a : n.args)
        if (!a.name.empty() && a.name == name) return a.value;
    if (pos < n.args.size() && n.args[pos].name.empty()) return n.args[pos].value;
    throw SpecInvalid("spec '" + n.ctor + "': missing argument '" + std::string(name) + "'");
}

inline double spec_real(const SpecNode& n, std::size_t pos, std::string_view name) {
    const SpecValue& v = spec_arg(n, pos, name);
    if (const double* d = std::get_if<double>(&v)) return *d;
    throw SpecInvalid("spec '" + n.ctor + "': argument '" + std::string(name) + "' must be a real number");
}

inline cplx spec_complex(const SpecNode& n, std::size_t pos, std::string_view name) {
    const SpecValue& v = spec_arg(n, pos, name);
    if (const double* d = std::get_if<double>(&v)) return cplx{*d, 0.0};
    if (const cplx* c = std::get_if<cplx>(&v)) return *c;
    throw SpecInvalid("spec '" + n.ctor + "': argument '" + std::string(name) + "' must be a number");
}

inline const SpecNode& spec_node(const SpecNode& n, std::size_t pos, std::string_view name) {
    const SpecValue& v = spec_arg(n, pos, name);
    if (const SpecNode* s = std::get_if<SpecNode>(&v)) return *s;
    throw SpecInvalid("spec '" + n.ctor + "': argument '" + std::string(name) + "' must be a spec");
}

}  // namespace detail

/// Realizes a w-type spec (cmono, wpoly) as a series at the given order.
inline AnalyticSeries realize_wseries(const SpecNode& node, int order = kDefaultOrder) {
    if (node.ctor == "cmono") {
        const cplx c = detail::spec_complex(node, 0, "c");
        const int m = static_cast<int>(std::lround(detail::spec_real(node, 1, "m")));
        return realize_w(WSpec::scaled_monomial(c, m), 1, order);
    }
    if (node.ctor == "wpoly") {
        std::vector<cplx> coeffs;
        for (std::size_t i = 0; i < node.args.size(); ++i) coeffs.push_back(detail::spec_complex(node, i, "c"));
        return realize_w(WSpec::poly(std::move(coeffs)), 1, order);
    }
    throw SpecInvalid("spec '" + node.ctor + "' is not a w-type constructor (expected cmono or wpoly)");
}

/// Realizes a function-type spec (identity, koebe, poly, starlike, synth)
/// as a normalized function at the given order.
inline NormalizedFunction realize_function(const SpecNode& node, int order = kDefaultOrder) {
    if (node.ctor == "identity") {
        if (!node.args.empty()) throw SpecInvalid("identity takes no arguments");
        return identity_function(order);
    }
    if (node.ctor == "koebe") {
        return koebe_alpha(detail::spec_real(node, 0, "alpha"), order);
    }
    if (node.ctor == "poly") {
        // poly(a2, a3, ...) = z + a2 z^2 + a3 z^3 + ...
        std::vector<cplx> c(static_cast<std::size_t>(order) + 1, cplx{});
        c[1] = 1.0;
        for (std::size_t i = 0; i < node.args.size(); ++i) {
            if (i + 2 > static_cast<std::size_t>(order)) break;
            c[i + 2] = detail::spec_complex(node, i, "c");
        }
        return NormalizedFunction::infer(AnalyticSeries(std::move(c)));
    }
    if (node.ctor == "starlike") {
        const double alpha = detail::spec_real(node, 0, "alpha");
        const auto seed = static_cast<std::uint64_t>(detail::spec_real(node, 1, "seed"));
        const int atoms = static_cast<int>(std::lround(detail::spec_real(node, 2, "atoms")));
        return random_starlike(alpha, HerglotzAtoms::random(seed, atoms), order);
    }
    if (node.ctor == "synth") {
        const NormalizedFunction g = realize_function(detail::spec_node(node, 0, "g"), order);
        const double mu = detail::spec_real(node, 1, "mu");
        const AnalyticSeries w = realize_wseries(detail::spec_node(node, 2, "w"), order);
        return synth_from_w(g, mu, w);
    }
    throw SpecInvalid("unknown function constructor '" + node.ctor + "'");
}

}  // namespace stc
