// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "salem/sqrtable/sqrtable.hpp"
#include "salem/tables/dataset.hpp"

namespace salem {

struct BRow {
    long n = 0;
    std::optional<RealBall> value;        // min log lambda over deg lambda <= n+1
    std::optional<std::size_t> witness;   // dataset entry
    bool conditional = true;              // true unless the dataset is complete through degree n+1
};

struct CRow {
    long n = 0;
    std::optional<RealBall> value;        // min (1/2) log lambda over square-rootable, deg <= n+1
    std::optional<std::size_t> witness;
    std::optional<SqrtWitness> sqrt_witness;
    bool conditional = true;
};

/// Square-rootability over Q of every entry examined for one degree.
struct DegreeScan {
    long degree = 0;
    std::optional<std::size_t> first;     // smallest square-rootable entry of this degree
    std::map<std::size_t, SqrtVerdict> verdicts;
};

struct ExtremalTable {
    std::vector<BRow> b;
    std::vector<CRow> c;
    std::vector<DegreeScan> scans;
};

inline std::vector<BRow> compute_b(const SalemDataset& ds, long n_max) {
    std::vector<BRow> rows;
    for (long n = 1; n <= n_max; ++n) {
        BRow r;
        r.n = n;
        for (std::size_t i = 0; i < ds.entries.size(); ++i) {
            const auto& e = ds.entries[i];
            if (e.degree > n + 1)
                continue;
            if (!r.value || e.cert.log_lambda.mid < r.value->mid) {
                r.value = e.cert.log_lambda;
                r.witness = i;
            }
        }
        r.conditional = n + 1 > ds.b_complete_degree;
        rows.push_back(r);
    }
    return rows;
}

struct COptions {
    /// p(-1) filter before enumeration; only rejects what enumeration would reject.
    bool use_filter = true;
    /// Scan every entry of each degree instead of stopping at the first square-rootable one.
    bool full_scan = false;
    PrecisionPolicy policy = default_precision();
};

/// Square-rootability over Q: closed forms for degree 2 and 4, sign enumeration above.
inline SqrtVerdict sqrtable_over_q(const IntPoly& p, const COptions& opt = {}) {
    QPoly pq = to_quad_poly(p);
    if (p.degree() == 2) {
        SqrtVerdict v;
        v.method = "degree 2 closed form";
        v.necessary = necessary_conditions(pq, 0);
        v.witnesses.push_back(degree2_canonical(pq, 0));
        v.status = SqrtStatus::Sqrtable;
        v.candidates_examined = 1;
        v.reason = "alpha = lambda + 1/lambda + 2";
        return v;
    }
    if (p.degree() == 4)
        return degree4_criterion(pq, 0);
    SignSearchOptions so;
    so.policy = opt.policy;
    so.use_filter = opt.use_filter;
    return sign_enumeration_search(pq, 0, so);
}

inline std::vector<DegreeScan> scan_sqrtable(const SalemDataset& ds, long max_degree, const COptions& opt = {}) {
    std::vector<long> degrees;
    for (const auto& e : ds.entries)
        if (e.degree <= max_degree && (degrees.empty() || degrees.back() != e.degree))
            degrees.push_back(e.degree);
    return parallel_map<DegreeScan>(degrees.size(), [&](std::size_t k) {
        DegreeScan s;
        s.degree = degrees[k];
        for (std::size_t i = 0; i < ds.entries.size(); ++i) {
            if (ds.entries[i].degree != s.degree)
                continue;
            SqrtVerdict v = sqrtable_over_q(ds.entries[i].poly, opt);
            bool ok = v.status == SqrtStatus::Sqrtable;
            s.verdicts.emplace(i, std::move(v));
            if (ok && !s.first)
                s.first = i;
            if (s.first && !opt.full_scan)
                break;
        }
        return s;
    });
}

inline std::vector<CRow> compute_c(const SalemDataset& ds, long n_max, const std::vector<DegreeScan>& scans) {
    std::vector<CRow> rows;
    const RealBall half = RealBall::exact(Dyadic(Int(1), -1), default_precision().start_bits);
    for (long n = 1; n <= n_max; ++n) {
        CRow r;
        r.n = n;
        for (const auto& s : scans) {
            if (s.degree > n + 1 || !s.first)
                continue;
            const auto& e = ds.entries[*s.first];
            RealBall v = e.cert.log_lambda * half;
            if (!r.value || v.mid < r.value->mid) {
                r.value = v;
                r.witness = *s.first;
                r.sqrt_witness = s.verdicts.at(*s.first).preferred();
            }
        }
        r.conditional = n + 1 > ds.c_complete_degree;
        rows.push_back(r);
    }
    return rows;
}

inline std::vector<CRow> compute_c(const SalemDataset& ds, long n_max, const COptions& opt = {}) {
    return compute_c(ds, n_max, scan_sqrtable(ds, n_max + 1, opt));
}

inline ExtremalTable compute_tables(const SalemDataset& ds, long n_max, bool with_b, bool with_c, const COptions& opt = {}) {
    ExtremalTable t;
    if (with_b)
        t.b = compute_b(ds, n_max);
    if (with_c) {
        t.scans = scan_sqrtable(ds, n_max + 1, opt);
        t.c = compute_c(ds, n_max, t.scans);
    }
    return t;
}

} // namespace salem
