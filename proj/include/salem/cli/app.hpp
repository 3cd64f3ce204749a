// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "salem/cli/record.hpp"
#include "salem/forms/isotropy.hpp"
#include "salem/numbers/primitive.hpp"

namespace salem::cli {

using record::json;

/// Exit codes. classify: 0 salem, 2 not salem. sqrtable: 0 square-rootable, 2 not, 3 undecided.
enum Exit : int { Ok = 0, Error = 1, Negative = 2, Undecided = 3 };

struct Options {
    bool descending = false;
    int digits = 10;
    std::string format = "text";
};

struct Output {
    json rec;
    std::string text;
    int code = Exit::Ok;
};

/// "Q" -> 0, "Q(sqrt 6)" / "Q(sqrt(6))" / "Q(sqrt6)" -> 6.
inline long parse_field(const std::string& s) {
    static const std::regex re(R"(\s*Q\s*(?:\(\s*sqrt\s*\(?\s*(\d+)\s*\)?\s*\))?\s*)");
    std::smatch m;
    if (!std::regex_match(s, m, re))
        throw ParseError("field must be Q or Q(sqrt D), got '" + s + "'");
    if (!m[1].matched)
        return 0;
    long d = std::stol(m[1]);
    QuadExt::sqrt_d(d);  // validates D
    return d;
}

inline std::string field_name(long d) { return d == 0 ? "Q" : "Q(sqrt " + std::to_string(d) + ")"; }

/// lambda at `bits` accuracy: the largest certified real root.
inline RealBall lambda_ball(const IntPoly& p, long bits, const PrecisionPolicy& policy = default_precision()) {
    IsolationOptions opt;
    opt.target_bits = bits;
    opt.policy = policy;
    RootSet rs = isolate_roots(p, opt);
    std::optional<RealBall> best;
    for (std::size_t i = 0; i < rs.size(); ++i)
        if (rs.certified_real(i) && (!best || rs.real_ball(i).mid > best->mid))
            best = rs.real_ball(i);
    if (!best)
        throw DomainError("no real root");
    return *best;
}

inline long bits_for(int digits) { return static_cast<long>(digits * 3.33) + 24; }

inline json inputs_json(const std::vector<std::string>& coeffs, const Options& o) {
    return json{{"coefficients", coeffs}, {"descending", o.descending}};
}

inline std::string tail_lines(const std::vector<std::pair<std::string, std::string>>& kv) {
    std::size_t w = 0;
    for (const auto& [k, v] : kv)
        w = std::max(w, k.size());
    std::ostringstream os;
    for (const auto& [k, v] : kv)
        os << std::left << std::setw(static_cast<int>(w) + 2) << (k + ":") << v << "\n";
    return os.str();
}

inline Output cmd_classify(const std::vector<std::string>& coeffs, const Options& o) {
    IntPoly p = parse_int_poly(coeffs, o.descending);
    SalemCertificate c = classify_salem(p);
    Output out;
    json res;
    res["polynomial"] = record::poly(p);
    res["verdict"] = to_string(c.verdict);
    res["reason"] = c.reason;
    json fs = json::array();
    for (const auto& f : c.factors)
        fs.push_back(json{{"factor", record::poly(f.factor)}, {"multiplicity", f.multiplicity}});
    res["factors"] = fs;
    std::vector<std::pair<std::string, std::string>> kv{{"polynomial", p.to_string()}, {"verdict", to_string(c.verdict)}};
    if (!c.reason.empty())
        kv.push_back({"reason", c.reason});
    if (c.is_salem()) {
        RealBall lam = o.digits > 25 ? lambda_ball(p, bits_for(o.digits)) : c.lambda;
        RealBall ll = log(lam);
        res["degree"] = c.degree();
        res["lambda"] = record::ball(lam, o.digits);
        res["log_lambda"] = record::ball(ll, o.digits);
        res["trace_polynomial"] = record::poly(trace_polynomial(p));
        kv.push_back({"degree", std::to_string(c.degree())});
        kv.push_back({"lambda", record::decimal_or_interval(lam, o.digits) + " (radius " + record::radius_string(lam.rad) + ")"});
        kv.push_back({"log lambda", record::decimal_or_interval(ll, o.digits) + " (radius " + record::radius_string(ll.rad) + ")"});
        kv.push_back({"trace polynomial", trace_polynomial(p).to_string()});
        if (c.degree() <= 44) {
            PrimitiveResult pr = primitive_salem(c);
            res["primitive"] = json{{"polynomial", record::poly(pr.primitive.poly)}, {"exponent", pr.exponent}, {"k_max", pr.k_max}};
            kv.push_back({"primitive", pr.exponent == 1 ? std::string("yes") : "lambda = mu^" + std::to_string(pr.exponent) + ", mu root of " + pr.primitive.poly.to_string()});
        }
        out.code = Exit::Ok;
    } else {
        for (const auto& f : c.factors)
            kv.push_back({"factor", f.factor.to_string() + (f.multiplicity > 1 ? " ^" + std::to_string(f.multiplicity) : "")});
        out.code = Exit::Negative;
    }
    out.rec = record::envelope("classify", inputs_json(coeffs, o), res);
    out.text = tail_lines(kv);
    return out;
}

inline Output cmd_trace(const std::vector<std::string>& coeffs, bool inverse, const Options& o) {
    IntPoly p = parse_int_poly(coeffs, o.descending);
    Output out;
    json res, inputs = inputs_json(coeffs, o);
    inputs["inverse"] = inverse;
    std::vector<std::pair<std::string, std::string>> kv;
    json checks = json::array();
    if (!inverse) {
        if (!p.is_palindromic() || p.degree() % 2 != 0)
            throw DomainError("trace polynomial needs a palindromic polynomial of even degree");
        IntPoly g = trace_polynomial(p);
        bool round_trip = untrace(g) == p;
        res["trace_polynomial"] = record::poly(g);
        checks.push_back(json{{"name", "untrace(trace(p)) = p"}, {"pass", round_trip}});
        kv = {{"polynomial", p.to_string()}, {"trace polynomial", g.to_string()}, {"round trip", round_trip ? "ok" : "FAILED"}};
        out.code = round_trip ? Exit::Ok : Exit::Error;
    } else {
        IntPoly u = untrace(p);
        TotallyRealCheck tr = salem_from_totally_real(p);
        res["untraced"] = record::poly(u);
        res["salem"] = tr.ok;
        res["reason"] = tr.reason;
        kv = {{"trace polynomial", p.to_string()}, {"untraced", u.to_string()}, {"salem", tr.ok ? "yes" : "no"}};
        if (!tr.reason.empty())
            kv.push_back({"reason", tr.reason});
        out.code = tr.ok ? Exit::Ok : Exit::Negative;
    }
    out.rec = record::envelope("trace", inputs, res, checks);
    out.text = tail_lines(kv);
    return out;
}

/// p over K: integer input that classifies as Salem is reduced to lambda's minimal polynomial over K.
inline QPoly polynomial_over_field(const std::vector<std::string>& coeffs, long d, const Options& o, std::string& note) {
    QPoly q = parse_quad_poly(coeffs, o.descending);
    bool integral = true;
    for (const auto& c : q.coeffs())
        integral = integral && c.is_rational() && is_integer(c.a());
    if (d == 0 || !integral)
        return detail::in_field(q, d);
    IntPoly p = to_int_poly(q);
    SalemCertificate c = classify_salem(p);
    if (!c.is_salem())
        return detail::in_field(q, d);
    QPoly pk = minimal_polynomial_over(c, d);
    note = "minimal polynomial of lambda over " + field_name(d) + ": " + pk.to_string();
    return pk;
}

inline json verdict_json(const SqrtVerdict& v) {
    json ws = json::array();
    for (const auto& w : v.witnesses)
        ws.push_back(record::witness(w));
    json nc{{"degree", v.necessary.degree},
            {"p_at_minus_one", v.necessary.value_at_minus_one.to_string()},
            {"passes", v.necessary.passes},
            {"detail", v.necessary.detail}};
    return json{{"status", to_string(v.status)},
                {"method", v.method},
                {"reason", v.reason},
                {"candidates_examined", v.candidates_examined},
                {"necessary_conditions", nc},
                {"witnesses", ws}};
}

inline int sqrt_exit(SqrtStatus s) {
    switch (s) {
    case SqrtStatus::Sqrtable:
        return Exit::Ok;
    case SqrtStatus::NotSqrtable:
        return Exit::Negative;
    case SqrtStatus::Undecided:
        return Exit::Undecided;
    }
    return Exit::Error;
}

inline SqrtVerdict decide_sqrtable(const QPoly& p, long d) {
    if (p.degree() == 4)
        return degree4_criterion(p, d);
    if (p.degree() == 2) {
        SqrtVerdict v;
        v.method = "degree 2 closed form";
        v.necessary = necessary_conditions(p, d);
        v.witnesses.push_back(degree2_canonical(p, d));
        v.status = SqrtStatus::Sqrtable;
        v.candidates_examined = 1;
        v.reason = "alpha = lambda + 1/lambda + 2";
        return v;
    }
    return sign_enumeration_search(p, d);
}

inline Output cmd_sqrtable(const std::vector<std::string>& coeffs, const std::string& field, bool enumerate, const Options& o) {
    long d = parse_field(field);
    std::string note;
    QPoly p = polynomial_over_field(coeffs, d, o, note);
    SqrtVerdict v = enumerate ? sign_enumeration_search(p, d) : decide_sqrtable(p, d);
    Output out;
    json inputs = inputs_json(coeffs, o);
    inputs["field"] = field_name(d);
    json res = verdict_json(v);
    res["polynomial"] = record::poly(p);
    json checks = json::array();
    for (const auto& w : v.witnesses)
        checks.push_back(json{{"name", "q(x)q(-x) = p(x^2) for alpha = " + w.alpha.to_string()}, {"pass", w.check()}});
    std::vector<std::pair<std::string, std::string>> kv{{"field", field_name(d)}, {"polynomial", p.to_string()}};
    if (!note.empty())
        kv.push_back({"note", note});
    kv.push_back({"p(-1)", v.necessary.value_at_minus_one.to_string() + (v.necessary.passes ? " (necessary condition holds)" : " (necessary condition fails)")});
    kv.push_back({"method", v.method});
    kv.push_back({"candidates", std::to_string(v.candidates_examined)});
    kv.push_back({"verdict", to_string(v.status)});
    kv.push_back({"reason", v.reason});
    for (const auto& w : v.witnesses)
        kv.push_back({"witness", "alpha = " + w.alpha.to_string() + ", q = " + w.q_string()});
    out.rec = record::envelope("sqrtable", inputs, res, checks);
    out.text = tail_lines(kv);
    out.code = sqrt_exit(v.status);
    return out;
}

inline std::string matrix_text(const std::vector<std::vector<std::string>>& m, const std::string& indent = "  ") {
    std::vector<std::size_t> w(m.empty() ? 0 : m[0].size(), 0);
    for (const auto& r : m)
        for (std::size_t j = 0; j < r.size(); ++j)
            w[j] = std::max(w[j], r[j].size());
    std::ostringstream os;
    for (const auto& r : m) {
        os << indent << "[ ";
        for (std::size_t j = 0; j < r.size(); ++j)
            os << std::left << std::setw(static_cast<int>(w[j])) << r[j] << (j + 1 < r.size() ? "  " : " ");
        os << "]\n";
    }
    return os.str();
}

inline std::vector<std::vector<std::string>> sqrt_entries_text(const SqrtPart& s) {
    std::vector<std::vector<std::string>> m(s.B.rows(), std::vector<std::string>(s.B.cols()));
    for (std::size_t i = 0; i < s.B.rows(); ++i)
        for (std::size_t j = 0; j < s.B.cols(); ++j)
            m[i][j] = s.B(i, j).to_string();
    return m;
}

inline json lattice_json(const LatticeData& L) {
    json j;
    j["dimension"] = L.dimension;
    j["field"] = field_name(L.field());
    j["gram"] = record::matrix(L.form.gram);
    j["gram_times_2"] = record::matrix(QuadExt(2) * L.form.gram);
    j["signature"] = json{{"positive", L.form.signature.positive}, {"negative", L.form.signature.negative}, {"zero", L.form.signature.zero}};
    if (L.form.conj_signature)
        j["conjugate_signature"] = json{{"positive", L.form.conj_signature->positive},
                                        {"negative", L.form.conj_signature->negative},
                                        {"zero", L.form.conj_signature->zero}};
    j["admissible"] = L.form.admissible;
    j["companion"] = record::matrix(L.companion);
    if (L.sqrt) {
        const SqrtPart& s = *L.sqrt;
        j["alpha"] = s.alpha.to_string();
        j["m_prime"] = s.m_prime.get_str();
        j["b"] = s.b.to_string();
        j["B"] = record::matrix(s.B);
        j["D"] = record::sqrt_matrix_entries(s);
        j["witness"] = record::witness(s.witness);
    }
    return j;
}

inline std::string lattice_text(const LatticeData& L) {
    std::ostringstream os;
    os << "A (Gram matrix, 2A shown) =\n" << matrix_text((QuadExt(2) * L.form.gram).to_strings());
    os << "signature (" << L.form.signature.positive << "," << L.form.signature.negative << ")";
    if (L.form.conj_signature)
        os << ", conjugate (" << L.form.conj_signature->positive << "," << L.form.conj_signature->negative << ")";
    os << ", admissible: " << (L.form.admissible ? "yes" : "no") << "\n";
    os << "C (companion) =\n" << matrix_text(L.companion.to_strings());
    if (L.sqrt) {
        const SqrtPart& s = *L.sqrt;
        os << "D = B / (" << s.m_prime.get_str() << " * sqrt(" << s.alpha.to_string() << ")), B =\n" << matrix_text(sqrt_entries_text(s));
        os << "b = " << s.m_prime.get_str() << "^2 * alpha = " << s.b.to_string() << "\n";
    }
    os << "checks:\n";
    for (const auto& [k, v] : L.verification)
        os << "  " << (v ? "ok    " : "FAILED") << " " << k << "\n";
    return os.str();
}

inline Output cmd_build(const std::vector<std::string>& coeffs, const std::string& field, long dim, const std::string& mode,
                        const std::string& alpha, const Options& o) {
    long d = parse_field(field);
    IntPoly p = parse_int_poly(coeffs, o.descending);
    SalemCertificate c = classify_salem(p);
    if (!c.is_salem())
        throw DomainError("not a Salem polynomial: " + c.reason);
    if (mode != "length" && mode != "half")
        throw ParseError("mode must be length or half");
    RealizeMode rm = mode == "length" ? RealizeMode::Length : RealizeMode::HalfLength;
    std::optional<SqrtWitness> w;
    if (!alpha.empty()) {
        if (rm != RealizeMode::HalfLength)
            throw ParseError("--alpha only applies to --mode half");
        QuadExt a = QuadExt::parse(alpha).in_field(d);
        QPoly pk = minimal_polynomial_over(c, d);
        SqrtVerdict v = sign_enumeration_search(pk, d);
        for (const auto& x : v.witnesses)
            if (x.alpha == a)
                w = x;
        if (!w)
            throw DomainError("no square-root witness with alpha = " + a.to_string());
    }
    Realization R = realize_salem_as_length(c, d, dim, rm, w);
    const IsometryReport& iso = R.isometry;
    Output out;
    json inputs = inputs_json(coeffs, o);
    inputs["field"] = field_name(d);
    inputs["dim"] = dim;
    inputs["mode"] = mode;
    if (!alpha.empty())
        inputs["alpha"] = alpha;
    json res;
    res["minimal_polynomial_over_field"] = record::poly(R.minpoly);
    res["lattice"] = lattice_json(R.lattice);
    json ij;
    ij["kind"] = to_string(iso.kind);
    ij["deg1"] = iso.deg1;
    ij["deg_inf"] = iso.deg_inf;
    ij["diagonalizable"] = iso.diagonalizable;
    if (iso.translation_length)
        ij["translation_length"] = record::ball(*iso.translation_length, o.digits);
    ij["relation"] = rm == RealizeMode::Length ? "lambda = exp(l)" : "lambda^(1/2) = exp(l)";
    res["isometry"] = ij;
    out.rec = record::envelope("build", inputs, res, record::verification(R.lattice.verification));
    std::ostringstream os;
    os << "field: " << field_name(d) << "\nminimal polynomial over field: " << R.minpoly.to_string() << "\n";
    os << "dimension n = " << dim << " (" << (dim + 1) << "x" << (dim + 1) << " matrices), mode " << mode << "\n";
    os << lattice_text(R.lattice);
    os << "isometry: " << to_string(iso.kind) << ", deg1 = " << iso.deg1 << ", deg_inf = " << iso.deg_inf << "\n";
    if (iso.translation_length)
        os << "translation length: " << record::decimal_or_interval(*iso.translation_length, o.digits) << "  ("
           << (rm == RealizeMode::Length ? "lambda = exp(l)" : "lambda^(1/2) = exp(l)") << ")\n";
    out.text = os.str();
    out.code = R.lattice.ok() ? Exit::Ok : Exit::Error;
    return out;
}

inline Output cmd_tables(const std::string& dataset, long n_max, const std::string& which, bool full_scan, bool no_filter,
                         const Options& o) {
    if (which != "b" && which != "c" && which != "both")
        throw ParseError("--which must be b, c or both");
    if (n_max < 1)
        throw ParseError("--n-max must be >= 1");
    SalemDataset ds;
    if (dataset.empty()) {
        ds = embedded_dataset();
    } else {
        std::ifstream in(dataset);
        if (!in)
            throw salem::Error("cannot open dataset '" + dataset + "'");
        ds = load_dataset(in);
    }
    COptions copt;
    copt.full_scan = full_scan;
    copt.use_filter = !no_filter;
    ExtremalTable t = compute_tables(ds, n_max, which != "c", which != "b", copt);

    Output out;
    json inputs{{"dataset", dataset.empty() ? "embedded" : dataset}, {"n_max", n_max}, {"which", which}};
    json res;
    res["source"] = ds.source;
    res["entries"] = ds.entries.size();
    auto entry_json = [&](std::size_t i) {
        const auto& e = ds.entries[i];
        return json{{"label", e.label}, {"degree", e.degree}, {"index", e.index}, {"polynomial", record::poly(e.poly)}};
    };
    json checks = json::array();
    std::ostringstream os;
    os << "dataset: " << (ds.source.empty() ? dataset : ds.source) << " (" << ds.entries.size() << " entries)\n";
    if (!t.b.empty()) {
        json rows = json::array();
        os << "\n  n  b_n           witness\n";
        for (const auto& r : t.b) {
            json row{{"n", r.n}, {"conditional", r.conditional}};
            os << std::right << std::setw(3) << r.n << "  ";
            if (r.value) {
                row["value"] = record::ball(*r.value, o.digits);
                row["witness"] = entry_json(*r.witness);
                const auto& e = ds.entries[*r.witness];
                os << std::left << std::setw(12) << record::decimal_or_interval(*r.value, o.digits) << "  "
                   << (e.label.empty() ? e.poly.to_string() : e.label) << (r.conditional ? "  (conditional on dataset completeness)" : "");
            } else {
                row["value"] = nullptr;
                os << "-";
            }
            os << "\n";
            rows.push_back(row);
        }
        res["b"] = rows;
    }
    if (!t.c.empty()) {
        json rows = json::array();
        os << "\n  n  c_n           witness\n";
        for (const auto& r : t.c) {
            json row{{"n", r.n}, {"conditional", r.conditional}};
            os << std::right << std::setw(3) << r.n << "  ";
            if (r.value) {
                row["value"] = record::ball(*r.value, o.digits);
                row["witness"] = entry_json(*r.witness);
                row["sqrt_witness"] = record::witness(*r.sqrt_witness);
                checks.push_back(json{{"name", "c_" + std::to_string(r.n) + " witness q(x)q(-x) = p(x^2)"}, {"pass", r.sqrt_witness->check()}});
                const auto& e = ds.entries[*r.witness];
                os << std::left << std::setw(12) << record::decimal_or_interval(*r.value, o.digits) << "  "
                   << (e.label.empty() ? e.poly.to_string() : e.label) << ", alpha = " << r.sqrt_witness->alpha.to_string()
                   << (r.conditional ? "  (conditional on dataset completeness)" : "");
            } else {
                row["value"] = nullptr;
                os << "-";
            }
            os << "\n";
            rows.push_back(row);
        }
        res["c"] = rows;
        json scans = json::array();
        for (const auto& s : t.scans) {
            json sj{{"degree", s.degree}, {"examined", s.verdicts.size()}};
            sj["first_square_rootable"] = s.first ? entry_json(*s.first) : json(nullptr);
            scans.push_back(sj);
        }
        res["scans"] = scans;
    }
    out.rec = record::envelope("tables", inputs, res, checks);
    out.text = os.str();
    return out;
}

inline Output cmd_example_sec10(const Options& o) {
    const IntPoly p{Int(1), Int(-4), Int(0), Int(-8), Int(-1), Int(-8), Int(0), Int(-4), Int(1)};
    Output out;
    std::ostringstream os;
    json res, checks = json::array();
    auto check = [&](const std::string& name, bool ok, bool echo = true) {
        checks.push_back(json{{"name", name}, {"pass", ok}});
        if (echo)
            os << "  " << (ok ? "ok    " : "FAILED") << " " << name << "\n";
        if (!ok)
            out.code = Exit::Error;
    };

    SalemCertificate c = classify_salem(p);
    IntPoly f = trace_polynomial(p);
    os << "p(x) = " << p.to_string() << "\nlambda = " << record::decimal_or_interval(c.lambda, o.digits) << "\n";
    os << "trace polynomial f(x) = " << f.to_string() << "\n";
    res["polynomial"] = record::poly(p);
    res["lambda"] = record::ball(c.lambda, o.digits);
    res["trace_polynomial"] = record::poly(f);
    check("p is a Salem polynomial", c.is_salem());
    check("f = x^4 - 4x^3 - 4x^2 + 4x + 1", f == IntPoly{Int(1), Int(4), Int(-4), Int(-4), Int(1)});

    IntPoly px2 = p.compose_x_squared();
    bool px2_irr = is_irreducible_over_z(px2);
    SqrtDegree sd = sqrt_degree_analysis(c);
    check("p(x^2) irreducible over Z, so lambda^(1/2) has degree 16 and is not Salem", px2_irr && sd.degree == 16 && !sd.sqrt_is_salem);
    // g(x) = f(x^2 - 2) by Horner
    const IntPoly shift{Int(-2), Int(0), Int(1)};
    IntPoly g;
    for (long k = f.degree(); k >= 0; --k)
        g = g * shift + IntPoly::constant(f.coeff(static_cast<std::size_t>(k)));
    os << "g(x) = f(x^2 - 2) = " << g.to_string() << "\n";
    res["g"] = record::poly(g);
    check("g irreducible over Z", is_irreducible_over_z(g));

    json fields = json::array();
    std::vector<long> admit, reject;
    for (long d : {2L, 3L, 6L}) {
        os << "\nK = " << field_name(d) << "\n";
        auto fs = factor_over_quadratic(to_quad_poly(f), d);
        QPoly pk = minimal_polynomial_over(c, d);
        QPoly fk = trace_polynomial(pk);
        std::stable_partition(fs.begin(), fs.end(), [&](const auto& x) { return x.factor == fk; });
        std::string fact;
        for (const auto& x : fs)
            fact += "(" + x.factor.to_string() + ")";
        QuadExt at = pk.eval(QuadExt(-1).in_field(d));
        SqrtVerdict v = decide_sqrtable(pk, d);
        os << "  f = " << fact << "\n  p_K(x) = " << pk.to_string() << "\n  p_K(-1) = " << at.to_string() << "\n  verdict: "
           << to_string(v.status) << " (" << v.reason << ")\n";
        json fj{{"field", field_name(d)}, {"p_K", record::poly(pk)}, {"p_K_at_minus_one", at.to_string()}, {"sqrtable", verdict_json(v)}};
        json fjs = json::array();
        for (const auto& x : fs)
            fjs.push_back(record::poly(x.factor));
        fj["factors_of_f"] = fjs;
        (v.status == SqrtStatus::Sqrtable ? admit : reject).push_back(d);
        if (v.status == SqrtStatus::Sqrtable) {
            json lat = json::array();
            for (const auto& w : v.witnesses) {
                LatticeData L = sqrt_matrix(pk, w);
                os << "\n  alpha = " << w.alpha.to_string() << ", q = " << w.q_string() << "\n";
                std::string t = lattice_text(L);
                std::istringstream ls(t);
                for (std::string line; std::getline(ls, line);)
                    os << "  " << line << "\n";
                lat.push_back(lattice_json(L));
                for (const auto& [k, ok] : L.verification)
                    check(field_name(d) + ", alpha = " + w.alpha.to_string() + ": " + k, ok, false);
            }
            fj["lattices"] = lat;
        }
        fields.push_back(fj);
    }
    res["fields"] = fields;
    auto names = [](const std::vector<long>& ds) {
        json a = json::array();
        for (long d : ds)
            a.push_back(field_name(d));
        return a;
    };
    res["square_rootable_over"] = names(admit);
    res["not_square_rootable_over"] = names(reject);
    auto joined = [](const std::vector<long>& ds) {
        std::string s;
        for (long d : ds)
            s += (s.empty() ? "" : ", ") + field_name(d);
        return s.empty() ? std::string("none") : s;
    };
    os << "\nsquare-rootable over: " << joined(admit) << "\nnot square-rootable over: " << joined(reject) << "\n";
    check("square-rootable exactly over Q(sqrt 6)", admit == std::vector<long>{6} && reject == std::vector<long>{2, 3});
    out.rec = record::envelope("example-sec10", json::object(), res, checks);
    out.text = os.str();
    return out;
}

/// Runs one CLI invocation; args exclude the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Salem numbers, square-rootability, and arithmetic hyperbolic lattices", "salem"};
    app.fallthrough();
    app.require_subcommand(1);
    Options o;
    app.add_flag("--descending", o.descending, "coefficients are given highest degree first");
    app.add_option("--digits", o.digits, "significant digits for decimal output")->check(CLI::Range(1, 200));
    app.add_option("--format", o.format, "text or record")->check(CLI::IsMember({"text", "record"}));

    std::vector<std::string> coeffs;
    std::string field = "Q", mode = "length", dataset, which = "both", alpha;
    long dim = -1, n_max = 10;
    bool inverse = false, full_scan = false, no_filter = false, enumerate = false;

    auto* c_classify = app.add_subcommand("classify", "decide whether a polynomial is a Salem polynomial");
    c_classify->add_option("coeffs", coeffs, "integer coefficients, lowest degree first")->required();
    auto* c_trace = app.add_subcommand("trace", "trace polynomial of a palindromic polynomial");
    c_trace->add_option("coeffs", coeffs)->required();
    c_trace->add_flag("--inverse", inverse, "input is a trace polynomial; untrace it and test for Salem");
    auto* c_sqrt = app.add_subcommand("sqrtable", "square-rootability over Q or Q(sqrt D)");
    c_sqrt->add_option("coeffs", coeffs, "coefficients in Z or Q(sqrt D), e.g. -2-sqrt(6)")->required();
    c_sqrt->add_option("--field", field, "Q or Q(sqrt D)");
    c_sqrt->add_flag("--enumerate", enumerate, "always run the sign enumeration search");
    auto* c_build = app.add_subcommand("build", "construct A, C, D and the hyperbolic isometry");
    c_build->add_option("coeffs", coeffs)->required();
    c_build->add_option("--field", field, "Q or Q(sqrt D)");
    c_build->add_option("--dim", dim, "hyperbolic dimension n")->required();
    c_build->add_option("--mode", mode, "length or half")->check(CLI::IsMember({"length", "half"}));
    c_build->add_option("--alpha", alpha, "choose the square-root witness by alpha");
    auto* c_tables = app.add_subcommand("tables", "b_n and c_n from a Salem dataset");
    c_tables->add_option("--dataset", dataset, "dataset file (default: embedded)");
    c_tables->add_option("--n-max", n_max, "largest n");
    c_tables->add_option("--which", which, "b, c or both")->check(CLI::IsMember({"b", "c", "both"}));
    c_tables->add_flag("--full-scan", full_scan, "test every entry, not only up to the first square-rootable one");
    c_tables->add_flag("--no-filter", no_filter, "skip the p(-1) necessary-condition filter");
    auto* c_example = app.add_subcommand("example-sec10", "worked octic example over Q(sqrt 2), Q(sqrt 3), Q(sqrt 6)");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? Exit::Ok : Exit::Error;
    }

    try {
        Output res;
        if (c_classify->parsed())
            res = cmd_classify(coeffs, o);
        else if (c_trace->parsed())
            res = cmd_trace(coeffs, inverse, o);
        else if (c_sqrt->parsed())
            res = cmd_sqrtable(coeffs, field, enumerate, o);
        else if (c_build->parsed())
            res = cmd_build(coeffs, field, dim, mode, alpha, o);
        else if (c_tables->parsed())
            res = cmd_tables(dataset, n_max, which, full_scan, no_filter, o);
        else if (c_example->parsed())
            res = cmd_example_sec10(o);
        if (o.format == "record")
            out << res.rec.dump(2) << "\n";
        else
            out << res.text;
        return res.code;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return Exit::Error;
    }
}

} // namespace salem::cli
