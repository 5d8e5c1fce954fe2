/*
 * Copyright 2026 the rdlin authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// One-call analysis: MDS status, branch numbers, and a related-difference
// verdict produced by the cheapest complete method available for the
// matrix's shape, with a verified witness whenever the answer is positive.

#pragma once

#include "rdlin/rd3.hpp"

namespace rdlin {

enum class RdVerdict { Has, None, Unknown };

inline const char* verdict_name(RdVerdict v) {
    switch (v) {
        case RdVerdict::Has: return "has";
        case RdVerdict::None: return "none";
        case RdVerdict::Unknown: return "unknown";
    }
    return "?";
}

struct AnalysisReport {
    bool mds = false;
    std::optional<int> branch_diff, branch_lin;
    RdVerdict rd = RdVerdict::Unknown;
    std::string method;              // decision procedure; empty when unknown
    std::optional<Witness> witness;  // present iff rd == Has
    std::vector<int> conditions;     // filled by the 3x3 characterization
    std::vector<std::string> trace;
};

namespace detail {

inline std::string index_set_str(const IndexSet& s) {
    std::string r = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) r += ",";
        r += std::to_string(s[i]);
    }
    return r + "}";
}

} // namespace detail

inline AnalysisReport analyze(const Mat& m) {
    if (m.rows() != m.cols())
        throw Error(Errc::NonSquare, "analysis needs a square matrix");
    const int n = m.rows();
    const int deg = m.f->degree();
    AnalysisReport rep;

    MdsCertificate cert = mds_certificate(m);
    rep.mds = cert.mds;
    if (cert.mds)
        rep.trace.push_back("mds: yes, all square minors nonsingular");
    else
        rep.trace.push_back("mds: no, singular minor at rows " +
                            detail::index_set_str(cert.rows) + " cols " +
                            detail::index_set_str(cert.cols));

    if (n * deg <= 24) {
        rep.branch_diff = branch_number_differential(m);
        rep.branch_lin = branch_number_linear(m);
        rep.trace.push_back("branch: differential " + std::to_string(*rep.branch_diff) +
                            ", linear " + std::to_string(*rep.branch_lin));
    } else if (cert.mds) {
        rep.branch_diff = n + 1;
        rep.branch_lin = n + 1;
        rep.trace.push_back("branch: " + std::to_string(n + 1) +
                            " for both, from the MDS bound (enumeration over budget)");
    } else {
        rep.trace.push_back("branch: not computed, enumeration over budget");
    }

    auto settle = [&](std::optional<Witness> w, const char* method, const char* route) {
        rep.trace.push_back(route);
        if (w) {
            rep.rd = RdVerdict::Has;
            rep.method = method_name(w->method);
            rep.witness = std::move(w);
        } else {
            rep.rd = RdVerdict::None;
            rep.method = method;
        }
    };

    if (n == 1) {
        settle(search_full(m), "search-full", "route: full search");
        return rep;
    }
    if (!cert.mds) {
        settle(construct_nonmds_witness(m), "thm-non-mds", "route: non-mds construction");
        return rep;
    }
    if (n == 3) {
        rep.trace.push_back("route: 3x3 characterization");
        Rd3Status st = rd_status_3x3(m);
        rep.conditions = st.conditions;
        std::string cl = "conditions:";
        if (st.conditions.empty()) {
            cl += " none";
        } else {
            for (size_t i = 0; i < st.conditions.size(); ++i)
                cl += std::string(i ? "; " : " ") + condition_name(st.conditions[i]);
        }
        rep.trace.push_back(cl);
        rep.rd = st.has_rd ? RdVerdict::Has : RdVerdict::None;
        rep.method = "char-3x3";
        rep.witness = st.witness;
        return rep;
    }
    if (is_circulant(m) && n % 12 != 2 && n % 12 != 10) {
        settle(construct_circulant_witness(m), "circulant", "route: circulant construction");
        return rep;
    }
    if (n % 2 == 1 && is_symmetric(m)) {
        settle(construct_symmetric_odd_witness(m), "thm-symmetric-odd",
               "route: symmetric odd construction");
        return rep;
    }
    if (n <= 6 && deg <= 8) {
        settle(search_bounded(m), "search-bounded", "route: bounded search");
        return rep;
    }
    if (n * deg <= 20) {
        settle(search_full(m), "search-full", "route: full search");
        return rep;
    }
    rep.trace.push_back("route: none applicable within budget");
    rep.rd = RdVerdict::Unknown;
    rep.method = "";
    return rep;
}

} // namespace rdlin
