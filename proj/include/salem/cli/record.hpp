// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdio>
#include <regex>
#include <string>

#include <json.hpp>

#include "salem/forms/lattice.hpp"
#include "salem/tables/extremal.hpp"

namespace salem::record {

using json = nlohmann::ordered_json;

/// Radius as a decimal upper bound with three significant digits.
inline std::string radius_string(const Dyadic& r) {
    if (r.sign() == 0)
        return "0";
    double v = r.upper().to_double();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v * 1.01);
    return buf;
}

/// {"decimal", "radius"}; decimal is null when the ball is too wide for `digits`.
inline json ball(const RealBall& x, int digits) {
    json j;
    auto s = certified_decimal(x, digits);
    j["decimal"] = s ? json(*s) : json(nullptr);
    j["radius"] = radius_string(x.rad);
    return j;
}

inline std::string decimal_or_interval(const RealBall& x, int digits) {
    auto s = certified_decimal(x, digits);
    if (s)
        return *s;
    char buf[80];
    std::snprintf(buf, sizeof buf, "[%.17g, %.17g]", x.lower().to_double(), x.upper().to_double());
    return buf;
}

template <class T>
json poly(const Poly<T>& p) {
    json c = json::array();
    for (const auto& a : p.coeffs())
        c.push_back(elem::str(a));
    return json{{"coefficients", c}, {"display", p.to_string()}};
}

inline json matrix(const QMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            r.push_back(m(i, j).to_string());
        rows.push_back(r);
    }
    return rows;
}

/// Entry of D = B / (m' sqrt(alpha)) written "(num)/(m'*sqrt(alpha))"; "0" for zero.
inline std::string sqrt_entry(const QuadExt& num, const Int& m_prime, const QuadExt& alpha) {
    if (num.is_zero())
        return "0";
    std::string den = m_prime == 1 ? "sqrt(" + alpha.to_string() + ")" : m_prime.get_str() + "*sqrt(" + alpha.to_string() + ")";
    return "(" + num.to_string() + ")/(" + den + ")";
}

struct SqrtEntry {
    QuadExt num;
    Int m_prime = 1;
    QuadExt alpha;
};

/// Inverse of sqrt_entry.
inline SqrtEntry parse_sqrt_entry(const std::string& s, long d = 0) {
    if (s == "0")
        return {QuadExt(0), Int(1), QuadExt(1)};
    static const std::regex re(R"(\((.+)\)/\((?:(\d+)\*)?sqrt\((.+)\)\))");
    std::smatch m;
    if (!std::regex_match(s, m, re))
        throw ParseError("malformed radical entry '" + s + "'");
    SqrtEntry e;
    e.num = QuadExt::parse(m[1]).in_field(d);
    e.m_prime = m[2].matched ? Int(m[2].str()) : Int(1);
    e.alpha = QuadExt::parse(m[3]).in_field(d);
    return e;
}

inline json sqrt_matrix_entries(const SqrtPart& s) {
    json rows = json::array();
    for (std::size_t i = 0; i < s.B.rows(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < s.B.cols(); ++j)
            r.push_back(sqrt_entry(s.B(i, j), s.m_prime, s.alpha));
        rows.push_back(r);
    }
    return rows;
}

inline json witness(const SqrtWitness& w) {
    json e = json::array(), o = json::array();
    for (const auto& c : w.q_even)
        e.push_back(c.to_string());
    for (const auto& c : w.q_odd_scaled)
        o.push_back(c.to_string());
    return json{{"alpha", w.alpha.to_string()},
                {"q", w.q_string()},
                {"q_even", e},
                {"q_odd_over_sqrt_alpha", o},
                {"alpha_integral", w.alpha_integral},
                {"alpha_class_searched", w.alpha_class_searched},
                {"verified", w.check()}};
}

inline json verification(const std::map<std::string, bool>& v) {
    json a = json::array();
    for (const auto& [k, ok] : v)
        a.push_back(json{{"name", k}, {"pass", ok}});
    return a;
}

inline json envelope(const std::string& command, json inputs, json result, json checks = json::array()) {
    json r;
    r["command"] = command;
    r["inputs"] = std::move(inputs);
    r["result"] = std::move(result);
    r["verification"] = std::move(checks);
    return r;
}

} // namespace salem::record
