// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <istream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "salem/numbers/classify.hpp"
#include "salem/tables/parallel.hpp"

namespace salem {

struct SalemEntry {
    long degree = 0;
    /// Position l in lambda_{m,l}: from a "lambda_{m,l}" label, else the rank within its degree
    /// in this dataset. 0 for synthesized entries.
    long index = 0;
    IntPoly poly;
    SalemCertificate cert;
    std::string label;
    long line = 0;            // source line, 0 when synthesized
    bool synthesized = false;
};

struct SalemDataset {
    std::vector<SalemEntry> entries;  // sorted by (degree, lambda)
    std::string source;
    /// Minima are certified complete for degrees <= these bounds (0: nothing claimed).
    long b_complete_degree = 0;
    long c_complete_degree = 0;

    std::optional<std::size_t> find(const IntPoly& p) const {
        for (std::size_t i = 0; i < entries.size(); ++i)
            if (entries[i].poly == p)
                return i;
        return std::nullopt;
    }
    std::optional<std::size_t> find_label(const std::string& label) const {
        for (std::size_t i = 0; i < entries.size(); ++i)
            if (entries[i].label == label)
                return i;
        return std::nullopt;
    }
};

namespace detail {

inline std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline std::optional<long> label_index(const std::string& label, long degree) {
    static const std::regex re(R"(lambda_\{?(\d+),(\d+)\}?)");
    std::smatch m;
    if (std::regex_match(label, m, re) && std::stol(m[1]) == degree)
        return std::stol(m[2]);
    return std::nullopt;
}

inline void sort_and_index(SalemDataset& ds) {
    auto& es = ds.entries;
    std::stable_sort(es.begin(), es.end(), [](const SalemEntry& a, const SalemEntry& b) {
        if (a.degree != b.degree)
            return a.degree < b.degree;
        return a.cert.lambda.mid < b.cert.lambda.mid;
    });
    for (std::size_t i = 1; i < es.size(); ++i) {
        if (es[i].poly == es[i - 1].poly)
            throw ParseError("duplicate polynomial " + es[i].poly.to_string(), es[i].line);
        if (es[i].degree == es[i - 1].degree && es[i].cert.lambda.overlaps(es[i - 1].cert.lambda))
            throw PrecisionExhausted("Salem numbers of degree " + std::to_string(es[i].degree) + " not separated");
    }
    long rank = 0;
    for (std::size_t i = 0; i < es.size(); ++i) {
        rank = (i > 0 && es[i].degree == es[i - 1].degree) ? rank + 1 : 1;
        if (es[i].synthesized)
            continue;
        auto li = label_index(es[i].label, es[i].degree);
        es[i].index = li ? *li : rank;
    }
}

} // namespace detail

/// One polynomial per line: ascending integer coefficients, monic. `#` starts a comment; a
/// comment after the coefficients is the entry's label. Directives: `#! source TEXT`,
/// `#! b-complete-degree M`, `#! c-complete-degree M`. Every entry must classify as Salem.
inline SalemDataset load_dataset(std::istream& in, const PrecisionPolicy& policy = default_precision()) {
    SalemDataset ds;
    struct Raw {
        IntPoly poly;
        std::string label;
        long line;
    };
    std::vector<Raw> raw;
    static const std::regex int_re(R"([+-]?\d+)");
    std::string text;
    long lineno = 0;
    while (std::getline(in, text)) {
        ++lineno;
        std::string body = text, comment;
        if (auto h = text.find('#'); h != std::string::npos) {
            body = text.substr(0, h);
            comment = detail::trim(text.substr(h + 1));
        }
        body = detail::trim(body);
        if (body.empty()) {
            if (comment.rfind("!", 0) == 0) {
                std::istringstream ds_in(comment.substr(1));
                std::string key;
                ds_in >> key;
                std::string rest;
                std::getline(ds_in, rest);
                rest = detail::trim(rest);
                try {
                    if (key == "source")
                        ds.source = rest;
                    else if (key == "b-complete-degree")
                        ds.b_complete_degree = std::stol(rest);
                    else if (key == "c-complete-degree")
                        ds.c_complete_degree = std::stol(rest);
                    else
                        throw ParseError("unknown directive '" + key + "'", lineno);
                } catch (const std::invalid_argument&) {
                    throw ParseError("directive '" + key + "' needs an integer", lineno);
                }
            }
            continue;
        }
        std::istringstream tok(body);
        std::vector<Int> c;
        std::string t;
        while (tok >> t) {
            if (!std::regex_match(t, int_re))
                throw ParseError("not an integer coefficient: '" + t + "'", lineno);
            c.emplace_back(t[0] == '+' ? t.substr(1) : t);
        }
        IntPoly p(c);
        if (p.degree() < 1)
            throw ParseError("constant polynomial", lineno);
        if (!p.is_monic())
            throw ParseError("not monic: " + p.to_string(), lineno);
        raw.push_back({p, comment, lineno});
    }
    auto certs = parallel_map<SalemCertificate>(raw.size(), [&](std::size_t i) { return classify_salem(raw[i].poly, policy); });
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (!certs[i].is_salem())
            throw ParseError("not a Salem polynomial (" + to_string(certs[i].verdict) + ": " + certs[i].reason + "): " +
                                 raw[i].poly.to_string(),
                             raw[i].line);
        SalemEntry e;
        e.degree = raw[i].poly.degree();
        e.poly = raw[i].poly;
        e.cert = certs[i];
        e.label = raw[i].label;
        e.line = raw[i].line;
        ds.entries.push_back(std::move(e));
    }
    detail::sort_and_index(ds);
    return ds;
}

inline SalemDataset load_dataset_string(const std::string& text, const PrecisionPolicy& policy = default_precision()) {
    std::istringstream in(text);
    return load_dataset(in, policy);
}

/// Appends lambda^2 for every entry whose label is lambda_{m,1}, labelled "lambda_{m,1}^2".
inline void add_squared_minima(SalemDataset& ds, const PrecisionPolicy& policy = default_precision()) {
    std::vector<SalemEntry> extra;
    for (const auto& e : ds.entries) {
        if (e.synthesized || e.index != 1 || !detail::label_index(e.label, e.degree))
            continue;
        SalemEntry s;
        s.cert = squared_salem(e.cert, policy);
        s.poly = s.cert.poly;
        s.degree = s.poly.degree();
        s.label = e.label + "^2";
        s.synthesized = true;
        if (!ds.find(s.poly))
            extra.push_back(std::move(s));
    }
    for (auto& s : extra)
        ds.entries.push_back(std::move(s));
    detail::sort_and_index(ds);
}

/// Every Salem polynomial named in the reference tables, plus the squares of the degree minima.
inline const char* embedded_dataset_text() {
    return R"(#! source embedded: smallest Salem numbers of degree 2..10 and named examples
#! b-complete-degree 11
1 -3 1                                     # lambda_{2,1}
1 -1 -1 -1 1                               # lambda_{4,1}
1 -1 -3 -1 1                               # lambda_{4,6}
1 0 -1 -1 -1 0 1                           # lambda_{6,1}
1 0 -1 -2 -1 0 1                           # lambda_{6,4}
1 0 0 -1 -1 -1 0 0 1                       # lambda_{8,1}
1 -4 0 -8 -1 -8 0 -4 1                     # octic over Q(sqrt 6)
1 1 0 -1 -1 -1 -1 -1 0 1 1                 # lambda_{10,1}
1 0 -1 0 -1 -2 0 0 -1 0 0 -2 -1 0 -1 0 1   # lambda_{16,23}
)";
}

inline SalemDataset embedded_dataset(const PrecisionPolicy& policy = default_precision()) {
    SalemDataset ds = load_dataset_string(embedded_dataset_text(), policy);
    add_squared_minima(ds, policy);
    return ds;
}

} // namespace salem
