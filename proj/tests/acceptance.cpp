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

// Release gate: nine checks covering the census, the closed form, the
// worked-example goldens, construction totality, oracle agreement, and the
// invariance suite.  Each check prints exactly one PASS/FAIL line; the
// process exits nonzero if any fail.  Pass --long to also reproduce the
// two census rows that take minutes instead of seconds.

#include <algorithm>
#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <cstring>
#include <random>
#include <sstream>

#include "rdlin/analyze.hpp"
#include "rdlin/enumerate.hpp"

using namespace rdlin;

namespace {

int g_failures = 0;

void report(const std::string& name, bool ok, const std::string& detail) {
    std::printf("%-14s %s  %s\n", name.c_str(), ok ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

struct CensusRow {
    int m;
    std::uint64_t mds, no_rd;
    double limit_seconds;
};

// Census goldens with wall-clock budgets for the four desk-scale rows.
constexpr CensusRow kRows[] = {
    {3, 390, 0, 1.0},
    {4, 24206, 4464, 5.0},
    {5, 658590, 361440, 60.0},
    {6, 13392062, 10298160, 600.0},
};
constexpr CensusRow kLongRows[] = {
    {7, 240234750, 212254560, 3600.0},
    {8, 4064764286ull, 3827268144ull, 14400.0},
};

Vec random_vec(const FieldPtr& f, int n, std::mt19937_64& rng, bool nonzero_entries) {
    std::uniform_int_distribution<int> d(nonzero_entries ? 1 : 0, f->size() - 1);
    std::vector<Elem> e(n);
    for (auto& x : e) x = static_cast<Elem>(d(rng));
    return Vec{f, std::move(e)};
}

Mat random_matrix(const FieldPtr& f, int n, std::mt19937_64& rng, bool nonzero_entries) {
    std::vector<std::vector<Elem>> rows;
    rows.reserve(n);
    for (int i = 0; i < n; ++i) rows.push_back(random_vec(f, n, rng, nonzero_entries).e);
    return mat_from_rows(f, rows);
}

// -------------------------------------------------------------- criterion 1
std::vector<EnumStats> g_census; // kept for criterion 2

void criterion1_census() {
    bool ok = true;
    std::ostringstream detail;
    for (const auto& row : kRows) {
        EnumStats st = enumerate3(row.m);
        g_census.push_back(st);
        const bool counts_ok =
            st.mds_quadruples == row.mds && st.no_rd_quadruples == row.no_rd;
        const bool time_ok = st.elapsed_seconds < row.limit_seconds;
        if (!counts_ok || !time_ok) ok = false;
        detail << "m=" << row.m << " (" << st.mds_quadruples << ","
               << st.no_rd_quadruples << ") in " << st.elapsed_seconds << "s"
               << (counts_ok ? "" : " WRONG-COUNT") << (time_ok ? "" : " OVER-TIME")
               << "; ";
    }
    report("criterion 1", ok, detail.str());
}

// -------------------------------------------------------------- criterion 2
void criterion2_closed_form() {
    bool ok = true;
    std::ostringstream detail;
    for (const auto& st : g_census) {
        if (st.total_mds != closed_form_mds(st.m)) {
            ok = false;
            detail << "census m=" << st.m << " disagrees with the closed form; ";
        }
    }
    const std::uint64_t quads[] = {390,      24206,     658590,
                                   13392062, 240234750, 4064764286ull};
    for (int m = 3; m <= 8; ++m) {
        const u128 qm1 = (1u << m) - 1;
        const u128 expect = u128(quads[m - 3]) * qm1 * qm1 * qm1 * qm1 * qm1;
        if (closed_form_mds(m) != expect ||
            closed_form_mds_quadruples(m) != quads[m - 3]) {
            ok = false;
            detail << "closed form misses the recorded m=" << m << " row; ";
        }
    }
    if (ok) detail << "census m=3..6 and recorded rows m=3..8 all match";
    report("criterion 2", ok, detail.str());
}

// -------------------------------------------------------------- criterion 3
void criterion3_goldens() {
    bool ok = true;
    std::ostringstream detail;

    // Near-MDS circulant with first row (0,1,1,1): the documented pair and
    // the two footnote pairs, over two fields to cover the generic claim.
    for (int md : {4, 8}) {
        auto f = field_default(md);
        Mat m = circulant(vec_from(f, {0, 1, 1, 1}));
        const std::vector<std::pair<std::vector<Elem>, std::vector<Elem>>> pairs = {
            {{1, 0, 0, 0}, {0, 0, 1, 0}},
            {{1, 0, 0, 0}, {0, 1, 1, 1}},
            {{0, 0, 1, 0}, {1, 1, 0, 1}},
        };
        for (size_t i = 0; i < pairs.size(); ++i) {
            Witness w{Vec{f, pairs[i].first}, Vec{f, pairs[i].second},
                      WitnessMethod::SearchFull, false};
            if (!verify_witness(m, w).ok) {
                ok = false;
                detail << "near-mds pair " << i << " fails at m=" << md << "; ";
            }
        }
    }

    // The symmetric 3x3 example: recorded witness plus the b+c condition.
    auto f4 = field_default(4);
    Mat remark = mat_from_rows(f4, {{1, 1, 1}, {1, 2, 4}, {1, 4, 6}});
    Witness rw{vec_from(f4, {0x1, 0xD, 0x0}), vec_from(f4, {0x1, 0x0, 0xD}),
               WitnessMethod::SearchBounded, false};
    if (!verify_witness(remark, rw).ok) {
        ok = false;
        detail << "recorded 3x3 witness fails; ";
    }
    Rd3Status st = rd_status_3x3(remark);
    const bool bc_listed =
        std::find(st.conditions.begin(), st.conditions.end(), 3) != st.conditions.end();
    if (!st.has_rd || !bc_listed ||
        std::string(condition_name(3)) != "b+c = 0") {
        ok = false;
        detail << "3x3 decision misses the b+c condition; ";
    }

    // The avoiding example must come out clean by all three routes.
    Mat avoid = mat_from_rows(f4, {{1, 1, 1}, {1, 2, 4}, {1, 8, 0xC}});
    RepDecomposition dec = decompose(avoid);
    if (!conditions15(*f4, dec.a, dec.b, dec.c, dec.d).empty() ||
        search_bounded(avoid).has_value() || search_full(avoid).has_value()) {
        ok = false;
        detail << "avoiding example is not clean; ";
    }

    if (ok) detail << "documented pairs, 3x3 witness, and the avoiding example all check";
    report("criterion 3", ok, detail.str());
}

// -------------------------------------------------------------- criterion 4
void criterion4_nonmds_totality() {
    bool ok = true;
    std::ostringstream detail;
    int degenerate = 0, failures = 0;

    // Exhaustive: every 3x3 over F_4, all 4^9 of them.
    auto f2 = field_default(2);
    long non_mds = 0;
    std::vector<Elem> cell(9, 0);
    for (;;) {
        Mat m = mat_from_rows(
            f2, {{cell[0], cell[1], cell[2]},
                 {cell[3], cell[4], cell[5]},
                 {cell[6], cell[7], cell[8]}});
        if (!is_mds(m)) {
            ++non_mds;
            try {
                Witness w = construct_nonmds_witness(m);
                if (!verify_witness(m, w).ok) ++failures;
            } catch (const Error& e) {
                if (e.code == Errc::ConstructionDegenerate) ++degenerate;
                else ++failures;
            }
        }
        int i = 8;
        while (i >= 0 && cell[i] == 3) cell[i--] = 0;
        if (i < 0) break;
        ++cell[i];
    }
    detail << non_mds << " exhaustive non-mds 3x3 over F_4";

    // Random larger shapes over two fields.
    std::mt19937_64 rng(0xACCE5501ull);
    int random_cases = 0;
    for (int md : {4, 8}) {
        auto f = field_default(md);
        for (int n = 3; n <= 6; ++n) {
            for (int k = 0; k < 63; ++k) {
                Mat m = random_matrix(f, n, rng, false);
                if (is_mds(m)) {
                    --k;
                    continue;
                }
                ++random_cases;
                try {
                    Witness w = construct_nonmds_witness(m);
                    if (!verify_witness(m, w).ok) ++failures;
                } catch (const Error& e) {
                    if (e.code == Errc::ConstructionDegenerate) ++degenerate;
                    else ++failures;
                }
            }
        }
    }
    detail << " + " << random_cases << " random (n=3..6, m=4/8); "
           << degenerate << " degenerate, " << failures << " unverified";
    if (degenerate != 0 || failures != 0 || random_cases < 500) ok = false;
    report("criterion 4", ok, detail.str());
}

// -------------------------------------------------------------- criterion 5
void criterion5_oracle_equivalence() {
    bool ok = true;
    std::ostringstream detail;
    std::mt19937_64 rng(0xACCE5502ull);
    int disagreements = 0, mds_cases = 0;
    for (int md : {3, 4}) {
        auto f = field_default(md);
        for (int k = 0; k < 2000; ++k) {
            Mat m = random_matrix(f, 3, rng, true);
            Rd3Status st = rd_status_3x3(m);
            const bool full_has = search_full(m).has_value();
            bool agree = st.has_rd == full_has;
            if (st.has_rd &&
                (!st.witness || !verify_witness(m, std::as_const(*st.witness)).ok))
                agree = false;
            if (is_mds(m)) {
                ++mds_cases;
                if (search_bounded(m).has_value() != full_has) agree = false;
            }
            if (!agree) ++disagreements;
        }
    }
    detail << "4000 random 3x3 (" << mds_cases << " mds), " << disagreements
           << " disagreements";
    if (disagreements != 0) ok = false;
    report("criterion 5", ok, detail.str());
}

// -------------------------------------------------------------- criterion 6
void criterion6_circulant_coverage() {
    bool ok = true;
    std::ostringstream detail;
    std::mt19937_64 rng(0xACCE5503ull);
    auto f = field_default(8);
    int built = 0, failures = 0;
    for (int n : {3, 4, 5, 6, 7, 8, 9, 11, 12, 13, 15, 16}) {
        for (int k = 0; k < 20; ++k) {
            Mat m = circulant(random_vec(f, n, rng, true));
            try {
                Witness w = construct_circulant_witness(m);
                if (!verify_witness(m, w).ok) ++failures;
                else ++built;
            } catch (const Error&) {
                ++failures;
            }
        }
    }
    for (int n : {14, 22}) {
        Mat m = circulant(random_vec(f, n, rng, true));
        try {
            construct_circulant_witness(m);
            ++failures;
            detail << "order " << n << " was not excluded; ";
        } catch (const Error& e) {
            if (e.code != Errc::ExcludedOrder) {
                ++failures;
                detail << "order " << n << " raised the wrong error; ";
            }
        }
    }
    detail << built << "/240 verified across orders 3..16 less the excluded class, "
           << failures << " failures";
    if (failures != 0 || built != 240) ok = false;
    report("criterion 6", ok, detail.str());
}

// -------------------------------------------------------------- criterion 7
void criterion7_invariance() {
    bool ok = true;
    std::ostringstream detail;
    std::mt19937_64 rng(0xACCE5504ull);

    // Build a mixed pool of at least 100 verified witnesses with carriers.
    std::vector<std::pair<Mat, Witness>> pool;
    auto f4 = field_default(4);
    auto f8 = field_default(8);
    while (pool.size() < 40) {
        Mat m = random_matrix(f4, 4, rng, false);
        if (is_mds(m)) continue;
        pool.emplace_back(m, construct_nonmds_witness(m));
    }
    while (pool.size() < 80) {
        Mat m = random_matrix(f8, 3, rng, true);
        Rd3Status st = rd_status_3x3(m);
        if (!st.witness) continue;
        pool.emplace_back(m, *st.witness);
    }
    while (pool.size() < 110) {
        Mat m = circulant(random_vec(f8, 5, rng, true));
        pool.emplace_back(m, construct_circulant_witness(m));
    }

    int transformed = 0, failures = 0;
    for (auto& [m, w] : pool) {
        const auto& f = m.f;
        const int n = m.rows();
        Vec d1v = random_vec(f, n, rng, true), d2v = random_vec(f, n, rng, true);
        Mat d1 = diag(d1v), d2 = diag(d2v);
        Witness wd = transform_witness_diag(w, d1, d2);
        if (!verify_witness(mat_mul(mat_mul(d1, m), d2), wd).ok) ++failures;

        std::vector<int> pp(n), qq(n);
        for (int i = 0; i < n; ++i) pp[i] = qq[i] = i;
        std::shuffle(pp.begin(), pp.end(), rng);
        std::shuffle(qq.begin(), qq.end(), rng);
        Mat p = permutation_matrix(f, pp), q = permutation_matrix(f, qq);
        Witness wp = transform_witness_perm(w, p, q);
        if (!verify_witness(mat_mul(mat_mul(p, m), q), wp).ok) ++failures;

        if (determinant(m) != 0) {
            Witness wi = transform_witness_inverse(m, w);
            if (!verify_witness(inverse(m), wi).ok) ++failures;
        }
        ++transformed;
    }

    // Order-two MDS matrices never admit a pair: exhaust all of F_8.
    auto f3 = field_default(3);
    int mds2 = 0, spurious = 0;
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b)
            for (int c = 0; c < 8; ++c)
                for (int d = 0; d < 8; ++d) {
                    Mat m = mat_from_rows(
                        f3, {{static_cast<Elem>(a), static_cast<Elem>(b)},
                             {static_cast<Elem>(c), static_cast<Elem>(d)}});
                    if (!is_mds(m)) continue;
                    ++mds2;
                    if (search_full(m).has_value()) ++spurious;
                }

    detail << transformed << " witnesses through all three transforms, " << failures
           << " failures; " << mds2 << " exhaustive 2x2 mds over F_8, " << spurious
           << " spurious witnesses";
    if (failures != 0 || transformed < 100 || spurious != 0 || mds2 == 0) ok = false;
    report("criterion 7", ok, detail.str());
}

// -------------------------------------------------------------- criterion 8
void criterion8_symmetric_odd() {
    bool ok = true;
    std::ostringstream detail;
    std::mt19937_64 rng(0xACCE5505ull);
    auto f = field_default(8);
    std::uniform_int_distribution<int> d(1, 255);
    int built = 0, failures = 0;
    for (int n : {3, 5, 7}) {
        for (int k = 0; k < 20; ++k) {
            std::vector<Elem> xs(n);
            Elem l;
            Mat m = identity(f, 1);
            for (;;) {
                for (auto& x : xs) x = static_cast<Elem>(d(rng));
                l = static_cast<Elem>(d(rng));
                try {
                    m = cauchy_type2(Vec{f, xs}, l);
                    break;
                } catch (const Error&) {
                    // collision between coordinates; redraw
                }
            }
            try {
                Witness w = construct_symmetric_odd_witness(m);
                if (verify_witness(m, w).ok) ++built;
                else ++failures;
            } catch (const Error&) {
                ++failures;
            }
        }
    }
    detail << built << "/60 verified over orders 3, 5, 7; " << failures << " failures";
    if (failures != 0 || built != 60) ok = false;
    report("criterion 8", ok, detail.str());
}

// -------------------------------------------------------------- criterion 9
void criterion9_modulus_invariance() {
    EnumStats a = enumerate3(4, 0x13);
    EnumStats b = enumerate3(4, 0x19);
    const bool ok = a.mds_quadruples == b.mds_quadruples &&
                    a.no_rd_quadruples == b.no_rd_quadruples;
    std::ostringstream detail;
    detail << "0x13 gives (" << a.mds_quadruples << "," << a.no_rd_quadruples
           << "), 0x19 gives (" << b.mds_quadruples << "," << b.no_rd_quadruples << ")";
    report("criterion 9", ok, detail.str());
}

// ------------------------------------------------------------------- --long
void long_census_rows() {
    for (const auto& row : kLongRows) {
        EnumStats st = enumerate3(row.m);
        const bool ok =
            st.mds_quadruples == row.mds && st.no_rd_quadruples == row.no_rd;
        std::ostringstream detail;
        detail << "(" << st.mds_quadruples << "," << st.no_rd_quadruples << ") in "
               << st.elapsed_seconds << "s, expected (" << row.mds << "," << row.no_rd
               << ")";
        report("table1 m=" + std::to_string(row.m), ok, detail.str());
    }
}

} // namespace

int main(int argc, char** argv) {
    bool run_long = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--long") == 0) run_long = true;

    criterion1_census();
    criterion2_closed_form();
    criterion3_goldens();
    criterion4_nonmds_totality();
    criterion5_oracle_equivalence();
    criterion6_circulant_coverage();
    criterion7_invariance();
    criterion8_symmetric_odd();
    criterion9_modulus_invariance();
    if (run_long) long_census_rows();

    if (g_failures) {
        std::printf("%d check(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all checks passed\n");
    return 0;
}
