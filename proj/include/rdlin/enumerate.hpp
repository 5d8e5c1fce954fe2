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

// Exhaustive census of 3x3 diffusion matrices over a small binary field.
//
// Every 3x3 matrix with no zero entry is diagonally equivalent to exactly
// one representative [[1,1,1],[1,a,b],[1,c,d]], and both MDS-ness and the
// related-difference verdict are invariant under that equivalence.  The
// census therefore scans the (q-1)^4 quadruples (a,b,c,d) and multiplies
// the class counts by (q-1)^5, the number of matrices per class.

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <random>
#include <string>
#include <thread>

#include "rdlin/rd3.hpp"

namespace rdlin {

using u128 = unsigned __int128;

inline std::string u128_to_string(u128 x) {
    if (x == 0) return "0";
    std::string s;
    while (x > 0) {
        s += static_cast<char>('0' + static_cast<int>(x % 10));
        x /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

struct EnumStats {
    int m = 0;
    Elem modulus = 0;
    std::uint64_t mds_quadruples = 0;
    std::uint64_t no_rd_quadruples = 0;
    u128 total_mds = 0;
    u128 total_no_rd = 0;
    double elapsed_seconds = 0.0;
};

// Number of MDS representative quadruples, in closed form.
inline std::uint64_t closed_form_mds_quadruples(int m) {
    if (m < 2 || m > 16) throw Error(Errc::TooLarge, "field degree out of range");
    const std::uint64_t q = 1ull << m;
    return (q - 2) * (q - 3) * (q * q - 9 * q + 21);
}

// Total count of 3x3 MDS matrices: the quadruple count times the (q-1)^5
// matrices per diagonal-equivalence class.  Past degree 14 the exact value
// no longer fits in 128 bits, hence the cap.
inline u128 closed_form_mds(int m) {
    if (m < 2 || m > 14) throw Error(Errc::TooLarge, "field degree out of range");
    const u128 qm1 = (1u << m) - 1;
    return u128(closed_form_mds_quadruples(m)) * qm1 * qm1 * qm1 * qm1 * qm1;
}

enum class QuadClass { NonMds, HasRd, NoRd };

namespace detail {

// Dense product table; fits in eight bits because the census caps m at 8.
inline std::vector<std::uint8_t> dense_mul_table(const Field& f) {
    const int q = f.size();
    std::vector<std::uint8_t> t(static_cast<size_t>(q) * q);
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y)
            t[static_cast<size_t>(x) * q + y] =
                static_cast<std::uint8_t>(f.mul(static_cast<Elem>(x), static_cast<Elem>(y)));
    return t;
}

// Full classification of one representative, used by the spot check.  The
// hot census loop repeats the same tests with the shared minors hoisted.
inline QuadClass quad_class(const std::uint8_t* tbl, unsigned q,
                            unsigned a, unsigned b, unsigned c, unsigned d) {
    const unsigned ad = tbl[a * q + d], bc = tbl[b * q + c];
    const unsigned adbc = ad ^ bc;
    // 2x2 minors of [[1,1,1],[1,a,b],[1,c,d]] and the determinant.
    if (a == 1 || b == 1 || c == 1 || d == 1) return QuadClass::NonMds;
    if (b == a || c == a || d == b || d == c) return QuadClass::NonMds;
    if (adbc == 0 || (adbc ^ a ^ b ^ c ^ d) == 0) return QuadClass::NonMds;
    const bool hit = ((a ^ b ^ c ^ d) == 0) || (a == d) || (b == c) ||
                     (adbc == (a ^ b)) || (adbc == (a ^ c)) ||
                     (adbc == (b ^ d)) || (adbc == (c ^ d)) ||
                     (ad == (a ^ b ^ d)) || (ad == (a ^ c ^ d)) ||
                     (ad == b) || (ad == c) ||
                     (bc == (a ^ b ^ c)) || (bc == (b ^ c ^ d)) ||
                     (bc == a) || (bc == d);
    return hit ? QuadClass::HasRd : QuadClass::NoRd;
}

// Counts the slice of the census with the second-row pivot fixed to `a`.
inline void census_slice(const std::uint8_t* tbl, unsigned q, unsigned a,
                         std::uint64_t& mds_out, std::uint64_t& no_rd_out) {
    std::uint64_t mds = 0, no_rd = 0;
    const std::uint8_t* mula = tbl + a * q;
    for (unsigned b = 2; b < q; ++b) {
        if (b == a) continue;
        const unsigned abx = a ^ b;
        for (unsigned c = 2; c < q; ++c) {
            if (c == a) continue;
            const unsigned acx = a ^ c;
            const unsigned bc = tbl[b * q + c];
            const unsigned s3 = abx ^ c;
            const bool always = (b == c) || (bc == s3) || (bc == a);
            const unsigned d13 = bc ^ b ^ c;
            for (unsigned d = 2; d < q; ++d) {
                if (d == b || d == c) continue;
                const unsigned ad = mula[d];
                const unsigned adbc = ad ^ bc;
                if (adbc == 0 || adbc == (s3 ^ d)) continue;
                ++mds;
                if (always) continue;
                const unsigned add = ad ^ d;
                const bool hit = (d == s3) || (d == a) ||
                                 (adbc == abx) || (adbc == acx) ||
                                 (adbc == (b ^ d)) || (adbc == (c ^ d)) ||
                                 (add == abx) || (add == acx) ||
                                 (ad == b) || (ad == c) ||
                                 (d == d13) || (bc == d);
                no_rd += hit ? 0 : 1;
            }
        }
    }
    mds_out = mds;
    no_rd_out = no_rd;
}

} // namespace detail

// Scans every representative quadruple over F_{2^m}.  `modulus` 0 picks the
// default modulus for the degree; `jobs` 0 uses one worker per core.
inline EnumStats enumerate3(int m, Elem modulus = 0, int jobs = 0) {
    if (m < 3 || m > 8)
        throw Error(Errc::TooLarge, "census supports degrees 3 through 8");
    const auto t0 = std::chrono::steady_clock::now();
    auto f = field_new(m, modulus ? modulus : Field::default_modulus(m));
    const unsigned q = static_cast<unsigned>(f->size());
    const auto tbl = detail::dense_mul_table(*f);

    const int slices = static_cast<int>(q) - 2; // a runs over 2..q-1
    std::vector<std::uint64_t> mds_by_a(slices, 0), no_rd_by_a(slices, 0);
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    if (jobs > slices) jobs = slices;

    std::atomic<int> next{0};
    auto worker = [&] {
        for (;;) {
            const int i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= slices) return;
            detail::census_slice(tbl.data(), q, static_cast<unsigned>(i + 2),
                                 mds_by_a[i], no_rd_by_a[i]);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    EnumStats st;
    st.m = m;
    st.modulus = f->modulus();
    for (int i = 0; i < slices; ++i) {
        st.mds_quadruples += mds_by_a[i];
        st.no_rd_quadruples += no_rd_by_a[i];
    }
    const u128 qm1 = q - 1;
    const u128 scale = qm1 * qm1 * qm1 * qm1 * qm1;
    st.total_mds = u128(st.mds_quadruples) * scale;
    st.total_no_rd = u128(st.no_rd_quadruples) * scale;
    st.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return st;
}

// Draws random quadruples until every verdict class has `samples` members
// (or the attempt budget runs out, since some classes are empty at m = 3)
// and checks the census classifier against the characterization and the
// bounded search on each draw.  Returns the disagreement count.
inline int spot_check(const FieldPtr& f, int samples, std::uint64_t seed) {
    const int m = f->degree();
    if (m < 3 || m > 8)
        throw Error(Errc::TooLarge, "census supports degrees 3 through 8");
    const unsigned q = static_cast<unsigned>(f->size());
    const auto tbl = detail::dense_mul_table(*f);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned> dist(1, q - 1);

    int bad = 0;
    int seen[3] = {0, 0, 0};
    const long budget = 60l * samples;
    for (long i = 0; i < budget; ++i) {
        if (seen[0] >= samples && seen[1] >= samples && seen[2] >= samples) break;
        const unsigned a = dist(rng), b = dist(rng), c = dist(rng), d = dist(rng);
        const QuadClass qc = detail::quad_class(tbl.data(), q, a, b, c, d);
        ++seen[static_cast<int>(qc)];
        const Mat mat = mat_from_rows(
            f, {{1, 1, 1},
                {1, static_cast<Elem>(a), static_cast<Elem>(b)},
                {1, static_cast<Elem>(c), static_cast<Elem>(d)}});
        const bool mds = is_mds(mat);
        bool ok;
        if (qc == QuadClass::NonMds) {
            ok = !mds;
        } else {
            const auto conds = conditions15(*f, static_cast<Elem>(a), static_cast<Elem>(b),
                                            static_cast<Elem>(c), static_cast<Elem>(d));
            const bool want = (qc == QuadClass::HasRd);
            ok = mds && (conds.empty() != want) &&
                 (search_bounded(mat).has_value() == want);
            if (ok && 3 * m <= 20) ok = (search_full(mat).has_value() == want);
        }
        bad += ok ? 0 : 1;
    }
    return bad;
}

} // namespace rdlin
