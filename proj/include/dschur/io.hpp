#pragma once

/// Serialization and rendering.  JSON schemas:
///   Poly            {"terms":[{"c":"<decimal>","m":[[kind,index,exp],...]},...]}
///                   with kind one of "a","x","y", terms in canonical order
///   LaurentSeries   {"valuation":v,"order":N,"coeffs":[Poly,...]}
///   FockVector      {"kets":[{"partition":[...],"charge":m,"coeff":Poly},...]}
///   SchurExpansion  {"terms":[{"partition":[...],"coeff":Poly},...]}
/// plus LaTeX and plain-text renderers for the CLI.

#include <sstream>
#include <string>

#include <json.hpp>

#include "expand.hpp"
#include "fock.hpp"
#include "laurent.hpp"
#include "poly.hpp"

namespace dschur {

using json = nlohmann::json;

inline json to_json(const Poly& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        json mono = json::array();
        for (std::size_t i = 0; i < m.factor_count(); ++i) {
            auto [v, e] = m.factor(i);
            const char* kind = v.kind == VarKind::alpha ? "a" : (v.kind == VarKind::x ? "x" : "y");
            mono.push_back(json::array({kind, v.index, e}));
        }
        terms.push_back(json{{"c", c.str()}, {"m", mono}});
    }
    return json{{"terms", terms}};
}

inline Poly poly_from_json(const json& j) {
    Poly p;
    for (const auto& t : j.at("terms")) {
        Monomial m;
        for (const auto& f : t.at("m")) {
            const std::string kind = f.at(0).get<std::string>();
            const int index = f.at(1).get<int>();
            const auto exp = f.at(2).get<std::uint32_t>();
            Var v = kind == "a" ? Var::alpha(index) : (kind == "x" ? Var::x(index) : Var::y(index));
            m = m.times(Monomial::variable(v, exp));
        }
        p += Poly::monomial(m, Int(t.at("c").get<std::string>()));
    }
    return p;
}

inline json to_json(const LaurentSeries& f) {
    json coeffs = json::array();
    for (int k = f.valuation(); k <= f.order(); ++k) coeffs.push_back(to_json(f.coefficient(k)));
    return json{{"valuation", f.valuation()}, {"order", f.order()}, {"coeffs", coeffs}};
}

inline LaurentSeries laurent_from_json(const json& j) {
    const int v = j.at("valuation").get<int>();
    const int order = j.at("order").get<int>();
    std::vector<Poly> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(poly_from_json(c));
    return LaurentSeries::from_coeffs(v, std::move(coeffs), order);
}

inline json to_json(const FockVector& v) {
    json kets = json::array();
    for (const auto& [key, c] : v)
        kets.push_back(json{{"partition", key.partition.parts()},
                            {"charge", key.charge},
                            {"coeff", to_json(c)}});
    return json{{"kets", kets}};
}

inline FockVector fock_from_json(const json& j) {
    FockVector v;
    for (const auto& k : j.at("kets"))
        fock_add(v,
                 KetKey{Partition{k.at("partition").get<std::vector<int>>()},
                        k.at("charge").get<int>()},
                 poly_from_json(k.at("coeff")));
    return v;
}

inline json to_json(const SchurExpansion& e) {
    json terms = json::array();
    for (const auto& [p, c] : e)
        terms.push_back(json{{"partition", p.parts()}, {"coeff", to_json(c)}});
    return json{{"terms", terms}};
}

inline SchurExpansion expansion_from_json(const json& j) {
    SchurExpansion e;
    for (const auto& t : j.at("terms"))
        expansion_add(e, Partition{t.at("partition").get<std::vector<int>>()},
                      poly_from_json(t.at("coeff")));
    return e;
}

// ---------------------------------------------------------------------------
// rendering

enum class RenderStyle { plain, latex };

inline std::string render(Var v, RenderStyle style) {
    std::ostringstream os;
    if (style == RenderStyle::latex) {
        const char* name = v.kind == VarKind::alpha ? "\\alpha" : (v.kind == VarKind::x ? "x" : "y");
        os << name << "_{" << v.index << "}";
    } else {
        const char* name = v.kind == VarKind::alpha ? "a" : (v.kind == VarKind::x ? "x" : "y");
        os << name << "[" << v.index << "]";
    }
    return os.str();
}

inline std::string render(const Monomial& m, RenderStyle style) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.factor_count(); ++i) {
        auto [v, e] = m.factor(i);
        if (i && style == RenderStyle::plain) os << "*";
        if (i && style == RenderStyle::latex) os << " ";
        os << render(v, style);
        if (e > 1) os << (style == RenderStyle::latex ? "^{" : "^") << e
                      << (style == RenderStyle::latex ? "}" : "");
    }
    return os.str();
}

inline std::string render(const Poly& p, RenderStyle style) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Int a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (m.is_one())
            os << a.str();
        else {
            if (a != 1) os << a.str() << (style == RenderStyle::plain ? "*" : " ");
            os << render(m, style);
        }
        first = false;
    }
    return os.str();
}

/// Wrap in parentheses when the polynomial is a sum or a negative leading term.
inline std::string render_factor(const Poly& p, RenderStyle style) {
    const std::string s = render(p, style);
    if (p.term_count() > 1 || s.find('-') != std::string::npos || s.find('+') != std::string::npos)
        return "(" + s + ")";
    return s;
}

inline std::string render(const LaurentSeries& f, RenderStyle style) {
    std::ostringstream os;
    bool first = true;
    for (int k = f.valuation(); k <= f.order(); ++k) {
        const Poly& c = f.coefficient(k);
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        os << render_factor(c, style);
        if (k != 0) {
            os << (style == RenderStyle::latex ? " z^{" : "*z^") << k
               << (style == RenderStyle::latex ? "}" : "");
        }
        first = false;
    }
    if (first) os << "0";
    os << " + O(z^" << (f.order() + 1) << ")";
    return os.str();
}

/// Render a series through its shifted-power basis expansion:
/// sum of c_k (z^-1 | s^s a)^k down to k_min.
inline std::string render_shifted_basis(const LaurentSeries& f, int s, int k_min,
                                        RenderStyle style) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : to_shifted_basis(f, s, k_min)) {
        if (!first) os << " + ";
        os << render_factor(c, style);
        if (style == RenderStyle::latex)
            os << " (z^{-1}|\\sigma^{" << s << "}\\alpha)^{" << k << "}";
        else
            os << "*(z^-1|s^" << s << " a)^" << k;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

inline std::string render_partition(const Partition& p, RenderStyle style) {
    std::ostringstream os;
    if (style == RenderStyle::latex) {
        os << "(";
        for (int i = 1; i <= p.length(); ++i) {
            if (i > 1) os << ",";
            os << p.part(i);
        }
        os << ")";
        return os.str();
    }
    return p.to_string();
}

inline std::string render(const SchurExpansion& e, RenderStyle style) {
    if (e.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : e) {
        if (!first) os << (style == RenderStyle::latex ? " + " : "\n+ ");
        os << render_factor(c, style) << " ";
        if (style == RenderStyle::latex)
            os << "s_{" << render_partition(p, style) << "}";
        else
            os << "s" << p.to_string();
        first = false;
    }
    return os.str();
}

inline std::string render(const FockVector& v, RenderStyle style) {
    if (v.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : v) {
        if (!first) os << (style == RenderStyle::latex ? " + " : "\n+ ");
        os << render_factor(c, style) << " ";
        if (style == RenderStyle::latex)
            os << "\\ket{" << render_partition(key.partition, style) << "}_{" << key.charge << "}";
        else
            os << "|" << key.partition.to_string() << ">_" << key.charge;
        first = false;
    }
    return os.str();
}

}  // namespace dschur
