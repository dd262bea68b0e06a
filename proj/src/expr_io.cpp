#include "expr_io.hpp"

#include <sstream>

#include "errors.hpp"

namespace sgc {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json expr_to_json(const Expr& e) {
    ordered_json terms = ordered_json::array();
    for (const auto& [key, c] : e.terms()) {
        ordered_json coeff = ordered_json::array();
        for (const auto& [z, q] : c.terms())
            coeff.push_back({z, q.get_num().get_str(), q.get_den().get_str()});
        ordered_json jets = ordered_json::array();
        for (const auto& [k, exp] : key.jets) jets.push_back({k, exp});
        const char* kind = key.trig.kind == TrigMode::Kind::Unit  ? "unit"
                           : key.trig.kind == TrigMode::Kind::Sin ? "sin"
                                                                  : "cos";
        terms.push_back({{"coeff", coeff},
                         {"jets", jets},
                         {"trig", {{"kind", kind}, {"mode", key.trig.mode}}}});
    }
    return terms;
}

Expr expr_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("expr: expected a term array");
    Expr e;
    for (const auto& term : j) {
        if (!term.is_object() || !term.contains("coeff") || !term.contains("jets") ||
            !term.contains("trig"))
            throw ParseError("expr: malformed term");
        Coupling c;
        for (const auto& entry : term.at("coeff")) {
            if (!entry.is_array() || entry.size() != 3) throw ParseError("expr: malformed coeff");
            int z = entry.at(0).get<int>();
            mpz_class num(entry.at(1).get<std::string>());
            mpz_class den(entry.at(2).get<std::string>());
            if (den == 0) throw ParseError("expr: zero denominator");
            Rat q(num, den);
            q.canonicalize();
            c.add_term(z, q);
        }
        TermKey key;
        for (const auto& entry : term.at("jets")) {
            if (!entry.is_array() || entry.size() != 2) throw ParseError("expr: malformed jets");
            unsigned k = entry.at(0).get<unsigned>();
            unsigned exp = entry.at(1).get<unsigned>();
            if (exp == 0) throw ParseError("expr: zero jet exponent");
            key.jets[k] += exp;
        }
        const auto& trig = term.at("trig");
        std::string kind = trig.at("kind").get<std::string>();
        unsigned mode = trig.at("mode").get<unsigned>();
        if (kind == "unit") {
            if (mode != 0) throw ParseError("expr: unit trig with nonzero mode");
            key.trig = TrigMode::unit();
        } else if (kind == "sin") {
            if (mode == 0) throw ParseError("expr: sin with mode zero");
            key.trig = TrigMode::sin(mode);
        } else if (kind == "cos") {
            if (mode == 0) throw ParseError("expr: cos with mode zero");
            key.trig = TrigMode::cos(mode);
        } else {
            throw ParseError("expr: unknown trig kind '" + kind + "'");
        }
        e.add_term(key, c);
    }
    return e;
}

namespace {

std::string mpz_str(const mpz_class& z) { return z.get_str(); }

// Renders q * a^z for one coupling term, without a leading sign.
// text flavour: 2/a^3, 1/3, 3*a^2/4 ; latex flavour: \frac{2}{a^{3}} ...
std::string coupling_term_text(const Rat& q_in, int z) {
    Rat q = abs(q_in);
    std::ostringstream os;
    std::string num = mpz_str(q.get_num());
    std::string den_part;
    if (z > 0) {
        if (num != "1") den_part = num + "*";
        den_part += z == 1 ? "a" : "a^" + std::to_string(z);
    } else {
        den_part = num;
    }
    os << den_part;
    bool has_den = q.get_den() != 1 || z < 0;
    if (has_den) {
        os << "/";
        std::string d = mpz_str(q.get_den());
        std::string apow = z < 0 ? (z == -1 ? "a" : "a^" + std::to_string(-z)) : "";
        if (q.get_den() != 1 && z < 0)
            os << "(" << d << "*" << apow << ")";
        else if (z < 0)
            os << apow;
        else
            os << d;
    }
    return os.str();
}

std::string coupling_term_latex(const Rat& q_in, int z) {
    Rat q = abs(q_in);
    std::string num = mpz_str(q.get_num());
    std::string den = mpz_str(q.get_den());
    std::string a_num = z > 0 ? (z == 1 ? "a" : "a^{" + std::to_string(z) + "}") : "";
    std::string a_den = z < 0 ? (z == -1 ? "a" : "a^{" + std::to_string(-z) + "}") : "";
    std::string top = num == "1" && !a_num.empty() ? a_num : num + (a_num.empty() ? "" : " " + a_num);
    std::string bottom;
    if (den != "1") bottom = den;
    if (!a_den.empty()) bottom += (bottom.empty() ? "" : " ") + a_den;
    if (bottom.empty()) return top;
    return "\\frac{" + top + "}{" + bottom + "}";
}

std::string jet_text(unsigned k) {
    if (k == 0) return "phi";
    if (k <= 3) return "phi_" + std::string(k, 'x');
    return "phi_{" + std::to_string(k) + "x}";
}

std::string jet_latex(unsigned k) {
    if (k == 0) return "\\varphi";
    if (k <= 3) {
        std::string sub;
        for (unsigned i = 0; i < k; ++i) sub += "\\xi";
        return "\\varphi_{" + sub + "}";
    }
    return "\\varphi_{" + std::to_string(k) + "\\xi}";
}

std::string trig_text(const TrigMode& t) {
    if (t.is_unit()) return "";
    std::string arg = t.mode == 1 ? "a*phi" : std::to_string(t.mode) + "*a*phi";
    return (t.kind == TrigMode::Kind::Sin ? "sin(" : "cos(") + arg + ")";
}

std::string trig_latex(const TrigMode& t) {
    if (t.is_unit()) return "";
    std::string arg = t.mode == 1 ? "a\\varphi" : std::to_string(t.mode) + "a\\varphi";
    return (t.kind == TrigMode::Kind::Sin ? "\\sin(" : "\\cos(") + arg + ")";
}

}  // namespace

std::string expr_to_text(const Expr& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first_term = true;
    for (const auto& [key, c] : e.terms()) {
        std::string factors;
        for (const auto& [k, exp] : key.jets) {
            if (!factors.empty()) factors += "*";
            factors += jet_text(k);
            if (exp > 1) factors += "^" + std::to_string(exp);
        }
        std::string trig = trig_text(key.trig);
        if (!trig.empty()) {
            if (!factors.empty()) factors += "*";
            factors += trig;
        }

        // Single coupling term: fold its sign into the sum; otherwise keep a
        // parenthesized coefficient.
        if (c.terms().size() == 1) {
            const auto& [z, q] = *c.terms().begin();
            bool neg = q < 0;
            if (first_term)
                os << (neg ? "-" : "");
            else
                os << (neg ? " - " : " + ");
            std::string coeff = coupling_term_text(q, z);
            if (factors.empty())
                os << coeff;
            else if (coeff == "1")
                os << factors;
            else if (coeff.find('/') == std::string::npos && coeff.find('*') == std::string::npos)
                os << coeff << "*" << factors;
            else
                os << "(" << coeff << ")*" << factors;
        } else {
            if (!first_term) os << " + ";
            os << "(";
            bool first = true;
            for (const auto& [z, q] : c.terms()) {
                if (!first)
                    os << (q < 0 ? " - " : " + ");
                else if (q < 0)
                    os << "-";
                os << coupling_term_text(q, z);
                first = false;
            }
            os << ")";
            if (!factors.empty()) os << "*" << factors;
        }
        first_term = false;
    }
    return os.str();
}

std::string expr_to_latex(const Expr& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first_term = true;
    for (const auto& [key, c] : e.terms()) {
        std::string factors;
        for (const auto& [k, exp] : key.jets) {
            factors += jet_latex(k);
            if (exp > 1) factors += "^{" + std::to_string(exp) + "}";
        }
        factors += trig_latex(key.trig);

        if (c.terms().size() == 1) {
            const auto& [z, q] = *c.terms().begin();
            bool neg = q < 0;
            if (first_term)
                os << (neg ? "-" : "");
            else
                os << (neg ? " - " : " + ");
            std::string coeff = coupling_term_latex(q, z);
            if (factors.empty())
                os << coeff;
            else if (coeff == "1")
                os << factors;
            else
                os << coeff << " " << factors;
        } else {
            if (!first_term) os << " + ";
            os << "\\left(";
            bool first = true;
            for (const auto& [z, q] : c.terms()) {
                if (!first)
                    os << (q < 0 ? " - " : " + ");
                else if (q < 0)
                    os << "-";
                os << coupling_term_latex(q, z);
                first = false;
            }
            os << "\\right)";
            if (!factors.empty()) os << " " << factors;
        }
        first_term = false;
    }
    return os.str();
}

}  // namespace sgc
