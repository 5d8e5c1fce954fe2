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

// JSON encodings for every value the command line reads or writes.
//
// Field elements travel as lowercase 0x-prefixed hex strings so files stay
// readable for any field degree.  Emission uses ordered maps, which keeps
// reports byte-stable across runs.

#pragma once

#include <json.hpp>

#include "rdlin/analyze.hpp"
#include "rdlin/enumerate.hpp"

namespace rdlin {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline Error parse_fail(const std::string& msg) { return Error(Errc::ParseError, msg); }

inline Elem elem_of_json(const Field& f, const ordered_json& j) {
    std::uint32_t v;
    if (j.is_string())
        v = parse_hex(j.get<std::string>());
    else if (j.is_number_unsigned())
        v = j.get<std::uint32_t>();
    else
        throw parse_fail("element must be a hex string or unsigned integer");
    if (v >= static_cast<std::uint32_t>(f.size()))
        throw parse_fail("element " + to_hex(v) + " out of range for degree " +
                         std::to_string(f.degree()));
    return static_cast<Elem>(v);
}

inline const ordered_json& member(const ordered_json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw parse_fail(std::string("missing key \"") + key + "\"");
    return j.at(key);
}

} // namespace detail

// Builds the field described by an object's "m" and "modulus" members.
inline FieldPtr field_of_json(const ordered_json& j) {
    const auto& jm = detail::member(j, "m");
    if (!jm.is_number_integer())
        throw detail::parse_fail("\"m\" must be an integer");
    const int m = jm.get<int>();
    const auto& jmod = detail::member(j, "modulus");
    std::uint32_t mod;
    if (jmod.is_string())
        mod = parse_hex(jmod.get<std::string>());
    else if (jmod.is_number_unsigned())
        mod = jmod.get<std::uint32_t>();
    else
        throw detail::parse_fail("\"modulus\" must be a hex string");
    if (m < 2 || m > 16)
        throw detail::parse_fail("degree " + std::to_string(m) + " out of range");
    return field_new(m, mod);
}

inline ordered_json vec_to_json(const Vec& v) {
    ordered_json j;
    j["m"] = v.f->degree();
    j["modulus"] = to_hex(v.f->modulus());
    auto& entries = j["entries"] = ordered_json::array();
    for (int i = 0; i < v.size(); ++i) entries.push_back(to_hex(v[i]));
    return j;
}

inline Vec vec_of_json(const ordered_json& j) {
    FieldPtr f = field_of_json(j);
    const auto& entries = detail::member(j, "entries");
    if (!entries.is_array() || entries.empty())
        throw detail::parse_fail("\"entries\" must be a non-empty array");
    std::vector<Elem> e;
    e.reserve(entries.size());
    for (const auto& x : entries) e.push_back(detail::elem_of_json(*f, x));
    return Vec{std::move(f), std::move(e)};
}

inline ordered_json mat_to_json(const Mat& m) {
    ordered_json j;
    j["m"] = m.f->degree();
    j["modulus"] = to_hex(m.f->modulus());
    auto& rows = j["rows"] = ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int k = 0; k < m.cols(); ++k) row.push_back(to_hex(m.at(i, k)));
        rows.push_back(std::move(row));
    }
    return j;
}

inline Mat mat_of_json(const ordered_json& j) {
    FieldPtr f = field_of_json(j);
    const auto& rows = detail::member(j, "rows");
    if (!rows.is_array() || rows.empty())
        throw detail::parse_fail("\"rows\" must be a non-empty array of arrays");
    std::vector<std::vector<Elem>> r;
    r.reserve(rows.size());
    for (const auto& row : rows) {
        if (!row.is_array() || row.empty() || row.size() != rows.front().size())
            throw detail::parse_fail("matrix rows must be equal-length non-empty arrays");
        std::vector<Elem> out;
        out.reserve(row.size());
        for (const auto& x : row) out.push_back(detail::elem_of_json(*f, x));
        r.push_back(std::move(out));
    }
    return mat_from_rows(std::move(f), r);
}

inline ordered_json witness_to_json(const Witness& w) {
    ordered_json j;
    j["m"] = w.u.f->degree();
    j["modulus"] = to_hex(w.u.f->modulus());
    j["n"] = w.u.size();
    auto& u = j["u"] = ordered_json::array();
    for (int i = 0; i < w.u.size(); ++i) u.push_back(to_hex(w.u[i]));
    auto& v = j["v"] = ordered_json::array();
    for (int i = 0; i < w.v.size(); ++i) v.push_back(to_hex(w.v[i]));
    j["method"] = method_name(w.method);
    return j;
}

inline Witness witness_of_json(const ordered_json& j) {
    FieldPtr f = field_of_json(j);
    const auto& jn = detail::member(j, "n");
    if (!jn.is_number_integer())
        throw detail::parse_fail("\"n\" must be an integer");
    const int n = jn.get<int>();
    auto read_vec = [&](const char* key) {
        const auto& arr = detail::member(j, key);
        if (!arr.is_array() || static_cast<int>(arr.size()) != n)
            throw detail::parse_fail(std::string("\"") + key + "\" must be an array of length n");
        std::vector<Elem> e;
        e.reserve(arr.size());
        for (const auto& x : arr) e.push_back(detail::elem_of_json(*f, x));
        return Vec{f, std::move(e)};
    };
    const auto& jmethod = detail::member(j, "method");
    if (!jmethod.is_string())
        throw detail::parse_fail("\"method\" must be a string");
    Witness w{read_vec("u"), read_vec("v"), WitnessMethod::SearchFull, false};
    w.method = parse_method(jmethod.get<std::string>());
    return w;
}

inline ordered_json verify_to_json(const VerifyResult& r) {
    ordered_json j;
    j["verified"] = r.ok;
    j["reason"] = verify_reason_name(r.reason);
    return j;
}

inline ordered_json report_to_json(const AnalysisReport& r) {
    ordered_json j;
    j["mds"] = r.mds;
    j["branch_diff"] = r.branch_diff ? ordered_json(*r.branch_diff) : ordered_json(nullptr);
    j["branch_lin"] = r.branch_lin ? ordered_json(*r.branch_lin) : ordered_json(nullptr);
    j["rd"] = verdict_name(r.rd);
    j["method"] = r.method;
    j["conditions"] = r.conditions;
    j["witness"] = r.witness ? witness_to_json(*r.witness) : ordered_json(nullptr);
    j["trace"] = r.trace;
    return j;
}

inline ordered_json decomposition_to_json(const RepDecomposition& d) {
    auto diag_entries = [](const Mat& m) {
        ordered_json a = ordered_json::array();
        for (int i = 0; i < m.rows(); ++i) a.push_back(to_hex(m.at(i, i)));
        return a;
    };
    ordered_json j;
    j["D1"] = diag_entries(d.d1);
    auto& rows = j["M1"] = ordered_json::array();
    for (int i = 0; i < d.m1.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int k = 0; k < d.m1.cols(); ++k) row.push_back(to_hex(d.m1.at(i, k)));
        rows.push_back(std::move(row));
    }
    j["D2"] = diag_entries(d.d2);
    if (d.m1.rows() == 3)
        j["abcd"] = {to_hex(d.a), to_hex(d.b), to_hex(d.c), to_hex(d.d)};
    return j;
}

inline ordered_json enum_to_json(const EnumStats& st) {
    ordered_json j;
    j["m"] = st.m;
    j["modulus"] = to_hex(st.modulus);
    j["mds_quadruples"] = st.mds_quadruples;
    j["no_rd_quadruples"] = st.no_rd_quadruples;
    j["total_mds"] = u128_to_string(st.total_mds);
    j["total_no_rd"] = u128_to_string(st.total_no_rd);
    return j;
}

inline std::string enum_to_csv(const EnumStats& st) {
    std::string s = "m,modulus,mds_quadruples,no_rd_quadruples,total_mds,total_no_rd\n";
    s += std::to_string(st.m) + "," + to_hex(st.modulus) + "," +
         std::to_string(st.mds_quadruples) + "," + std::to_string(st.no_rd_quadruples) +
         "," + u128_to_string(st.total_mds) + "," + u128_to_string(st.total_no_rd) + "\n";
    return s;
}

} // namespace rdlin
