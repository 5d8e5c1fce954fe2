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

// Related-difference calculus: the pairing predicates, witness verification,
// invariance transforms, and two brute-force searches (bounded-weight and
// full-range) that serve as ground truth for everything constructive.

#pragma once

#include <optional>

#include "rdlin/linalg.hpp"

namespace rdlin {

// u and v are related when no coordinate sees two distinct nonzero values.
inline bool is_related_differences(const Vec& u, const Vec& v) {
    check_same_field(*u.f, *v.f);
    if (u.size() != v.size())
        throw Error(Errc::DimensionMismatch, "vectors differ in length");
    for (int i = 0; i < u.size(); ++i)
        if (u[i] != 0 && v[i] != 0 && u[i] != v[i]) return false;
    return true;
}

inline bool is_related_differential_pair(const Mat& m, const Vec& u, const Vec& v) {
    if (m.rows() != m.cols())
        throw Error(Errc::NonSquare, "related-differential test needs a square matrix");
    if (u.size() != m.cols() || v.size() != m.cols())
        throw Error(Errc::DimensionMismatch, "vector length differs from matrix order");
    return is_related_differences(u, v) &&
           is_related_differences(mat_vec_mul(m, u), mat_vec_mul(m, v));
}

enum class WitnessMethod {
    SearchFull,
    SearchBounded,
    ThmNonMDS,
    ThmSymmetricOdd,
    CircMod4,
    CircMod3,
    CircOdd,
    Char3x3,
    Transformed,
};

inline const char* method_name(WitnessMethod m) {
    switch (m) {
        case WitnessMethod::SearchFull: return "search-full";
        case WitnessMethod::SearchBounded: return "search-bounded";
        case WitnessMethod::ThmNonMDS: return "thm-non-mds";
        case WitnessMethod::ThmSymmetricOdd: return "thm-symmetric-odd";
        case WitnessMethod::CircMod4: return "circ-mod4";
        case WitnessMethod::CircMod3: return "circ-mod3";
        case WitnessMethod::CircOdd: return "circ-odd";
        case WitnessMethod::Char3x3: return "char-3x3";
        case WitnessMethod::Transformed: return "transformed";
    }
    return "?";
}

inline WitnessMethod parse_method(const std::string& s) {
    for (WitnessMethod m : {WitnessMethod::SearchFull, WitnessMethod::SearchBounded,
                            WitnessMethod::ThmNonMDS, WitnessMethod::ThmSymmetricOdd,
                            WitnessMethod::CircMod4, WitnessMethod::CircMod3,
                            WitnessMethod::CircOdd, WitnessMethod::Char3x3,
                            WitnessMethod::Transformed})
        if (s == method_name(m)) return m;
    throw Error(Errc::ParseError, "unknown witness method '" + s + "'");
}

struct Witness {
    Vec u, v;
    WitnessMethod method = WitnessMethod::SearchFull;
    bool verified = false;
};

// u, v and t = u + v; any two members form a related pair, so a witness can
// be rotated through the triplet freely.
struct RelatedTriplet {
    Vec u, v, t;
};

inline RelatedTriplet related_triplet(const Vec& u, const Vec& v) {
    return RelatedTriplet{u, v, vec_add(u, v)};
}

enum class VerifyReason {
    Ok,
    ZeroVector,
    Trivial,
    InputsNotRelated,
    OutputsNotRelated,
    DimensionMismatch,
};

inline const char* verify_reason_name(VerifyReason r) {
    switch (r) {
        case VerifyReason::Ok: return "ok";
        case VerifyReason::ZeroVector: return "zero-vector";
        case VerifyReason::Trivial: return "trivial";
        case VerifyReason::InputsNotRelated: return "inputs-not-related";
        case VerifyReason::OutputsNotRelated: return "outputs-not-related";
        case VerifyReason::DimensionMismatch: return "dimension-mismatch";
    }
    return "?";
}

struct VerifyResult {
    bool ok = false;
    VerifyReason reason = VerifyReason::DimensionMismatch;
    explicit operator bool() const { return ok; }
};

// Full nontriviality and relatedness re-check; never throws, so it is safe
// on untrusted witness files.
inline VerifyResult verify_witness(const Mat& m, Witness& w) {
    w.verified = false;
    if (m.rows() != m.cols() || w.u.size() != m.cols() || w.v.size() != m.cols() ||
        !m.f->same_as(*w.u.f) || !m.f->same_as(*w.v.f))
        return {false, VerifyReason::DimensionMismatch};
    if (is_zero(w.u) || is_zero(w.v)) return {false, VerifyReason::ZeroVector};
    if (w.u.e == w.v.e) return {false, VerifyReason::Trivial};
    if (!is_related_differences(w.u, w.v)) return {false, VerifyReason::InputsNotRelated};
    if (!is_related_differences(mat_vec_mul(m, w.u), mat_vec_mul(m, w.v)))
        return {false, VerifyReason::OutputsNotRelated};
    w.verified = true;
    return {true, VerifyReason::Ok};
}

inline VerifyResult verify_witness(const Mat& m, const Witness& w) {
    Witness copy = w;
    return verify_witness(m, copy);
}

// Finds a partner for a fixed differential (x, mx): some y with y_i in
// {0, x_i} wherever x_i != 0, y free elsewhere, (My)_i in {0, (mx)_i}
// wherever (mx)_i != 0, and y not in {0, x}. The candidate set is scanned by
// value patterns: one mask picks where y keeps x's value, one picks where My
// keeps mx's value, and the free coordinates come from a linear solve. Every
// solution of such a system is a valid partner, so only nontriviality needs
// checking; at most the two vectors 0 and x are excluded, and a line in a
// positive-dimensional solution space has at least four points over any
// field here (q >= 4), which makes the scan complete.
inline std::optional<Vec> find_related_partner(const Mat& m, const Vec& x, const Vec& mx) {
    const int n = m.cols();
    std::vector<int> supp_x, free_c, supp_mx;
    for (int i = 0; i < n; ++i) (x[i] ? supp_x : free_c).push_back(i);
    for (int i = 0; i < m.rows(); ++i)
        if (mx[i]) supp_mx.push_back(i);

    const Field& F = *m.f;
    Mat a = submatrix(m, supp_mx, free_c);
    std::vector<Vec> null_a = nullspace_basis(a);

    const int ts = static_cast<int>(supp_x.size());
    const int es = static_cast<int>(supp_mx.size());
    Vec y_base = vec_zero(m.f, n);
    for (unsigned long tmask = 0; tmask < (1ul << ts); ++tmask) {
        for (int k = 0; k < ts; ++k)
            y_base[supp_x[static_cast<size_t>(k)]] = (tmask >> k) & 1 ? x[supp_x[static_cast<size_t>(k)]] : 0;
        Vec my_base = mat_vec_mul(m, y_base);
        for (unsigned long emask = 0; emask < (1ul << es); ++emask) {
            Vec rhs = vec_zero(m.f, es);
            for (int k = 0; k < es; ++k) {
                int r = supp_mx[static_cast<size_t>(k)];
                rhs[k] = ((emask >> k) & 1 ? mx[r] : Elem{0}) ^ my_base[r];
            }
            auto part = linear_solve(a, rhs);
            if (!part) continue;
            auto assemble = [&](const Vec& yf) {
                Vec y = y_base;
                for (size_t k = 0; k < free_c.size(); ++k) y[free_c[k]] = yf[static_cast<int>(k)];
                return y;
            };
            auto good = [&](const Vec& y) { return !is_zero(y) && y.e != x.e; };
            if (null_a.empty()) {
                Vec y = assemble(*part);
                if (good(y)) return y;
                continue;
            }
            for (Elem lam = 0; lam < 4; ++lam) {
                Vec yf = *part;
                for (int k = 0; k < yf.size(); ++k)
                    yf[k] ^= F.mul(lam, null_a[0][k]);
                Vec y = assemble(yf);
                if (good(y)) return y;
            }
        }
    }
    return std::nullopt;
}

// Exhaustive related-pair search: one scalar-normalized representative per
// input line, partner scan as above. No structural assumption on M; budget
// (2^m)^n <= 2^20.
inline std::optional<Witness> search_full(const Mat& m) {
    if (m.rows() != m.cols())
        throw Error(Errc::NonSquare, "search needs a square matrix");
    const int n = m.rows();
    if (n * m.f->degree() > 20)
        throw Error(Errc::TooLarge, "full search needs n*m <= 20");
    std::optional<Witness> found;
    detail::for_each_normalized(m.f, n, [&](const Vec& u) {
        Vec mu = mat_vec_mul(m, u);
        if (auto v = find_related_partner(m, u, mu)) {
            Witness w{u, *v, WitnessMethod::SearchFull, false};
            if (verify_witness(m, w).ok) {
                found = std::move(w);
                return false;
            }
        }
        return true;
    });
    return found;
}

// Bounded-weight search for MDS matrices. If an MDS M admits a related pair
// at all, some member x of the triplet satisfies
// wt(x) + wt(Mx) <= n + floor(n/3), so it is enough to enumerate
// differentials under that cap: pick the exact input support S (size s) and
// the exact output zero set Z (size z), read x off the nullspace of M[Z;S],
// and scan partners. MDS keeps that submatrix full-rank, which pins the
// nullspace dimension to s - z.
inline std::optional<Witness> search_bounded(const Mat& m) {
    if (m.rows() != m.cols())
        throw Error(Errc::NonSquare, "search needs a square matrix");
    const int n = m.rows();
    if (n > 6 || m.f->degree() > 8)
        throw Error(Errc::TooLarge, "bounded search budget is n <= 6, m <= 8");
    if (!is_mds(m))
        throw Error(Errc::NotMDS, "the weight cap is proven for MDS matrices only");
    const Field& F = *m.f;
    const int cap = n + n / 3;
    for (int s = 1; s <= n; ++s) {
        IndexSet S = detail::first_subset(s);
        do {
            const int z_lo = std::max(0, s + n - cap);
            for (int z = z_lo; z <= s - 1; ++z) {
                IndexSet Z = detail::first_subset(z);
                do {
                    Mat sub = submatrix(m, Z, S);
                    std::vector<Vec> basis = nullspace_basis(sub);
                    if (basis.empty()) continue;
                    const int d = static_cast<int>(basis.size());
                    std::optional<Witness> found;
                    detail::for_each_normalized(m.f, d, [&](const Vec& lam) {
                        Vec c = vec_zero(m.f, s);
                        for (int k = 0; k < d; ++k)
                            if (lam[k])
                                for (int j = 0; j < s; ++j)
                                    c[j] ^= F.mul(lam[k], basis[static_cast<size_t>(k)][j]);
                        // exact support: smaller supports were already scanned
                        for (int j = 0; j < s; ++j)
                            if (c[j] == 0) return true;
                        Vec x = vec_zero(m.f, n);
                        for (int j = 0; j < s; ++j) x[S[static_cast<size_t>(j)]] = c[j];
                        Vec mx = mat_vec_mul(m, x);
                        // exact zero set: anything larger belongs to a later Z
                        int zc = 0;
                        for (int i = 0; i < n; ++i) zc += mx[i] == 0;
                        if (zc != z) return true;
                        Elem norm = F.inv(x[S[0]]);
                        x = vec_scale(norm, x);
                        mx = vec_scale(norm, mx);
                        if (auto y = find_related_partner(m, x, mx)) {
                            Witness w{x, *y, WitnessMethod::SearchBounded, false};
                            if (verify_witness(m, w).ok) {
                                found = std::move(w);
                                return false;
                            }
                        }
                        return true;
                    });
                    if (found) return found;
                } while (detail::next_subset_colex(Z, n));
            }
        } while (detail::next_subset_colex(S, n));
    }
    return std::nullopt;
}

namespace detail {

inline void check_nonsingular_diag(const Mat& d) {
    if (d.rows() != d.cols())
        throw Error(Errc::SingularDiagonal, "diagonal factor must be square");
    for (int i = 0; i < d.rows(); ++i)
        for (int j = 0; j < d.cols(); ++j) {
            if (i == j && d.at(i, j) == 0)
                throw Error(Errc::SingularDiagonal, "diagonal factor has a zero on the diagonal");
            if (i != j && d.at(i, j) != 0)
                throw Error(Errc::SingularDiagonal, "factor is not diagonal");
        }
}

} // namespace detail

// If (u, v) works for M, then (D2^-1 u, D2^-1 v) works for D1 M D2: scaling
// single coordinates never merges or splits the zero patterns involved.
inline Witness transform_witness_diag(const Witness& w, const Mat& d1, const Mat& d2) {
    detail::check_nonsingular_diag(d1);
    detail::check_nonsingular_diag(d2);
    if (d2.cols() != w.u.size() || d1.rows() != d1.cols())
        throw Error(Errc::DimensionMismatch, "diagonal order differs from witness length");
    const Field& F = *d2.f;
    Witness r{w.u, w.v, WitnessMethod::Transformed, false};
    for (int i = 0; i < r.u.size(); ++i) {
        Elem inv = F.inv(d2.at(i, i));
        r.u[i] = F.mul(inv, w.u[i]);
        r.v[i] = F.mul(inv, w.v[i]);
    }
    return r;
}

// If (u, v) works for M, then (Q^-1 u, Q^-1 v) works for P M Q.
inline Witness transform_witness_perm(const Witness& w, const Mat& p, const Mat& q) {
    perm_of_matrix(p);
    perm_of_matrix(q);
    if (q.cols() != w.u.size())
        throw Error(Errc::DimensionMismatch, "permutation order differs from witness length");
    Mat qi = transpose(q); // permutation inverse
    return Witness{mat_vec_mul(qi, w.u), mat_vec_mul(qi, w.v), WitnessMethod::Transformed, false};
}

// If (u, v) works for M and M is invertible, then (Mu, Mv) works for M^-1.
inline Witness transform_witness_inverse(const Mat& m, const Witness& w) {
    if (m.rows() != m.cols())
        throw Error(Errc::NonSquare, "inverse transform needs a square matrix");
    if (determinant(m) == 0)
        throw Error(Errc::Singular, "matrix is singular; it has no inverse");
    return Witness{mat_vec_mul(m, w.u), mat_vec_mul(m, w.v), WitnessMethod::Transformed, false};
}

} // namespace rdlin
