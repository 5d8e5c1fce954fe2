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

// Exact dense linear algebra over GF(2^m): elimination, minors, MDS and
// branch-number checks, and the structured constructors (circulant,
// left-circulant, Cauchy, Hadamard).

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "rdlin/gf.hpp"

namespace rdlin {

struct Vec {
    FieldPtr f;
    std::vector<Elem> e;

    int size() const { return static_cast<int>(e.size()); }
    Elem operator[](int i) const { return e[static_cast<size_t>(i)]; }
    Elem& operator[](int i) { return e[static_cast<size_t>(i)]; }

    bool operator==(const Vec& o) const {
        return f->same_as(*o.f) && e == o.e;
    }
};

struct Mat {
    FieldPtr f;
    int nr = 0, nc = 0;
    std::vector<Elem> a;

    Mat() = default;
    Mat(FieldPtr fld, int r, int c)
        : f(std::move(fld)), nr(r), nc(c), a(static_cast<size_t>(r) * c, 0) {}

    int rows() const { return nr; }
    int cols() const { return nc; }
    Elem at(int i, int j) const { return a[static_cast<size_t>(i) * nc + j]; }
    Elem& at(int i, int j) { return a[static_cast<size_t>(i) * nc + j]; }

    bool operator==(const Mat& o) const {
        return f->same_as(*o.f) && nr == o.nr && nc == o.nc && a == o.a;
    }
};

// Index sets select rows/columns of a submatrix; entries must be strictly
// increasing and in range.
using IndexSet = std::vector<int>;

inline void check_index_set(const IndexSet& s, int n) {
    int prev = -1;
    for (int i : s) {
        if (i <= prev || i < 0 || i >= n)
            throw Error(Errc::IndexOutOfRange, "index set must be strictly increasing within [0," + std::to_string(n) + ")");
        prev = i;
    }
}

inline IndexSet complement_set(const IndexSet& s, int n) {
    IndexSet r;
    r.reserve(static_cast<size_t>(n) - s.size());
    size_t k = 0;
    for (int i = 0; i < n; ++i) {
        if (k < s.size() && s[k] == i) { ++k; continue; }
        r.push_back(i);
    }
    return r;
}

inline void check_same_field(const Field& a, const Field& b) {
    if (!a.same_as(b))
        throw Error(Errc::DimensionMismatch, "operands belong to different fields");
}

inline Vec vec_zero(FieldPtr f, int n) { return Vec{std::move(f), std::vector<Elem>(static_cast<size_t>(n), 0)}; }

inline Vec vec_from(FieldPtr f, std::vector<Elem> e) { return Vec{std::move(f), std::move(e)}; }

inline bool is_zero(const Vec& v) {
    return std::all_of(v.e.begin(), v.e.end(), [](Elem x) { return x == 0; });
}

inline int weight(const Vec& v) {
    int w = 0;
    for (Elem x : v.e) w += x != 0;
    return w;
}

inline Vec vec_add(const Vec& u, const Vec& v) {
    check_same_field(*u.f, *v.f);
    if (u.size() != v.size())
        throw Error(Errc::DimensionMismatch, "vector lengths differ");
    Vec r = u;
    for (int i = 0; i < r.size(); ++i) r[i] ^= v[i];
    return r;
}

inline Vec vec_scale(Elem c, const Vec& v) {
    Vec r = v;
    for (int i = 0; i < r.size(); ++i) r[i] = v.f->mul(c, v[i]);
    return r;
}

inline Mat mat_from_rows(FieldPtr f, const std::vector<std::vector<Elem>>& rows) {
    if (rows.empty() || rows[0].empty())
        throw Error(Errc::DimensionMismatch, "matrix must be nonempty");
    Mat m(f, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.nr; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != m.nc)
            throw Error(Errc::DimensionMismatch, "ragged rows");
        for (int j = 0; j < m.nc; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    return m;
}

inline Mat identity(FieldPtr f, int n) {
    Mat m(std::move(f), n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

inline Mat transpose(const Mat& m) {
    Mat t(m.f, m.nc, m.nr);
    for (int i = 0; i < m.nr; ++i)
        for (int j = 0; j < m.nc; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

inline Vec mat_vec_mul(const Mat& m, const Vec& x) {
    check_same_field(*m.f, *x.f);
    if (m.nc != x.size())
        throw Error(Errc::DimensionMismatch, "matrix has " + std::to_string(m.nc) + " columns, vector has " + std::to_string(x.size()));
    const Field& F = *m.f;
    Vec r = vec_zero(m.f, m.nr);
    for (int i = 0; i < m.nr; ++i) {
        Elem acc = 0;
        for (int j = 0; j < m.nc; ++j) acc ^= F.mul(m.at(i, j), x[j]);
        r[i] = acc;
    }
    return r;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    check_same_field(*a.f, *b.f);
    if (a.nc != b.nr)
        throw Error(Errc::DimensionMismatch, "inner dimensions differ");
    const Field& F = *a.f;
    Mat r(a.f, a.nr, b.nc);
    for (int i = 0; i < a.nr; ++i)
        for (int k = 0; k < a.nc; ++k) {
            Elem v = a.at(i, k);
            if (!v) continue;
            for (int j = 0; j < b.nc; ++j)
                r.at(i, j) ^= F.mul(v, b.at(k, j));
        }
    return r;
}

inline Mat submatrix(const Mat& m, const IndexSet& I, const IndexSet& J) {
    check_index_set(I, m.nr);
    check_index_set(J, m.nc);
    Mat r(m.f, static_cast<int>(I.size()), static_cast<int>(J.size()));
    for (int i = 0; i < r.nr; ++i)
        for (int j = 0; j < r.nc; ++j)
            r.at(i, j) = m.at(I[static_cast<size_t>(i)], J[static_cast<size_t>(j)]);
    return r;
}

namespace detail {

// Gauss-Jordan on a row-major buffer; returns the pivot columns. Pivoting
// picks the first row with a nonzero entry, so results are deterministic.
inline std::vector<int> rref(const Field& F, std::vector<Elem>& a, int nr, int nc) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < nc && r < nr; ++c) {
        int pr = -1;
        for (int i = r; i < nr; ++i)
            if (a[static_cast<size_t>(i) * nc + c]) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < nc; ++j)
                std::swap(a[static_cast<size_t>(pr) * nc + j], a[static_cast<size_t>(r) * nc + j]);
        Elem piv_inv = F.inv(a[static_cast<size_t>(r) * nc + c]);
        for (int j = c; j < nc; ++j)
            a[static_cast<size_t>(r) * nc + j] = F.mul(piv_inv, a[static_cast<size_t>(r) * nc + j]);
        for (int i = 0; i < nr; ++i) {
            if (i == r) continue;
            Elem v = a[static_cast<size_t>(i) * nc + c];
            if (!v) continue;
            for (int j = c; j < nc; ++j)
                a[static_cast<size_t>(i) * nc + j] ^= F.mul(v, a[static_cast<size_t>(r) * nc + j]);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace detail

inline Elem determinant(const Mat& m) {
    if (m.nr != m.nc)
        throw Error(Errc::NonSquare, "determinant of a " + std::to_string(m.nr) + "x" + std::to_string(m.nc) + " matrix");
    const Field& F = *m.f;
    const int n = m.nr;
    std::vector<Elem> a = m.a;
    Elem det = 1;
    for (int c = 0; c < n; ++c) {
        int pr = -1;
        for (int i = c; i < n; ++i)
            if (a[static_cast<size_t>(i) * n + c]) { pr = i; break; }
        if (pr < 0) return 0;
        if (pr != c)
            for (int j = c; j < n; ++j)
                std::swap(a[static_cast<size_t>(pr) * n + j], a[static_cast<size_t>(c) * n + j]);
        Elem piv = a[static_cast<size_t>(c) * n + c];
        det = F.mul(det, piv);
        Elem piv_inv = F.inv(piv);
        for (int i = c + 1; i < n; ++i) {
            Elem v = a[static_cast<size_t>(i) * n + c];
            if (!v) continue;
            Elem fct = F.mul(v, piv_inv);
            for (int j = c; j < n; ++j)
                a[static_cast<size_t>(i) * n + j] ^= F.mul(fct, a[static_cast<size_t>(c) * n + j]);
        }
    }
    return det;
}

inline int rank(const Mat& m) {
    std::vector<Elem> a = m.a;
    return static_cast<int>(detail::rref(*m.f, a, m.nr, m.nc).size());
}

// Basis of the right nullspace in the usual reduced-echelon form: one basis
// vector per free column (in increasing column order), with that free
// variable set to 1.
inline std::vector<Vec> nullspace_basis(const Mat& m) {
    std::vector<Elem> a = m.a;
    std::vector<int> pivots = detail::rref(*m.f, a, m.nr, m.nc);
    std::vector<char> is_pivot(static_cast<size_t>(m.nc), 0);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = 1;
    std::vector<Vec> basis;
    for (int fcol = 0; fcol < m.nc; ++fcol) {
        if (is_pivot[static_cast<size_t>(fcol)]) continue;
        Vec v = vec_zero(m.f, m.nc);
        v[fcol] = 1;
        for (size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = a[k * m.nc + fcol]; // char 2: -x = x
        basis.push_back(std::move(v));
    }
    return basis;
}

inline std::optional<Vec> solve_homogeneous(const Mat& m) {
    std::vector<Vec> b = nullspace_basis(m);
    if (b.empty()) return std::nullopt;
    return b[0];
}

// Particular solution of M x = b with every free variable set to zero.
inline std::optional<Vec> linear_solve(const Mat& m, const Vec& b) {
    check_same_field(*m.f, *b.f);
    if (b.size() != m.nr)
        throw Error(Errc::DimensionMismatch, "rhs length differs from row count");
    const int nc = m.nc + 1;
    std::vector<Elem> a(static_cast<size_t>(m.nr) * nc);
    for (int i = 0; i < m.nr; ++i) {
        for (int j = 0; j < m.nc; ++j) a[static_cast<size_t>(i) * nc + j] = m.at(i, j);
        a[static_cast<size_t>(i) * nc + m.nc] = b[i];
    }
    std::vector<int> pivots = detail::rref(*m.f, a, m.nr, nc);
    if (!pivots.empty() && pivots.back() == m.nc) return std::nullopt;
    Vec x = vec_zero(m.f, m.nc);
    for (size_t k = 0; k < pivots.size(); ++k)
        x[pivots[k]] = a[k * nc + m.nc];
    return x;
}

inline Mat inverse(const Mat& m) {
    if (m.nr != m.nc)
        throw Error(Errc::NonSquare, "inverse of a non-square matrix");
    const int n = m.nr;
    const int nc = 2 * n;
    std::vector<Elem> a(static_cast<size_t>(n) * nc, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * nc + j] = m.at(i, j);
        a[static_cast<size_t>(i) * nc + n + i] = 1;
    }
    std::vector<int> pivots = detail::rref(*m.f, a, n, nc);
    if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1)
        throw Error(Errc::Singular, "matrix is singular");
    Mat r(m.f, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.at(i, j) = a[static_cast<size_t>(i) * nc + n + j];
    return r;
}

namespace detail {

// k-subsets of [0,n) in lexicographic order; false when exhausted.
inline bool next_subset_lex(IndexSet& s, int n) {
    const int k = static_cast<int>(s.size());
    for (int i = k - 1; i >= 0; --i) {
        if (s[static_cast<size_t>(i)] < n - k + i) {
            ++s[static_cast<size_t>(i)];
            for (int j = i + 1; j < k; ++j) s[static_cast<size_t>(j)] = s[static_cast<size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

// k-subsets in colexicographic order (largest member varies slowest).
inline bool next_subset_colex(IndexSet& s, int n) {
    const int k = static_cast<int>(s.size());
    for (int i = 0; i < k; ++i) {
        int ub = (i + 1 < k) ? s[static_cast<size_t>(i + 1)] : n;
        if (s[static_cast<size_t>(i)] + 1 < ub) {
            ++s[static_cast<size_t>(i)];
            for (int j = 0; j < i; ++j) s[static_cast<size_t>(j)] = j;
            return true;
        }
    }
    return false;
}

inline IndexSet first_subset(int k) {
    IndexSet s(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) s[static_cast<size_t>(i)] = i;
    return s;
}

} // namespace detail

struct MdsCertificate {
    bool mds = false;
    IndexSet rows, cols; // first singular minor when mds is false
};

// A matrix is MDS iff every square submatrix is nonsingular. Minors are
// enumerated in increasing size, index sets in lexicographic order, and the
// scan stops at the first singular one.
inline MdsCertificate mds_certificate(const Mat& m) {
    if (m.nr != m.nc)
        throw Error(Errc::NonSquare, "MDS test needs a square matrix");
    const int n = m.nr;
    for (int r = 1; r <= n; ++r) {
        IndexSet I = detail::first_subset(r);
        do {
            IndexSet J = detail::first_subset(r);
            do {
                if (determinant(submatrix(m, I, J)) == 0)
                    return MdsCertificate{false, I, J};
            } while (detail::next_subset_lex(J, n));
        } while (detail::next_subset_lex(I, n));
    }
    return MdsCertificate{true, {}, {}};
}

inline bool is_mds(const Mat& m) { return mds_certificate(m).mds; }

namespace detail {

// Enumerates nonzero vectors with first nonzero coordinate 1 (one per
// projective class): leading position ascending, then the tail in
// lexicographic order of codes.
template <typename Fn>
inline void for_each_normalized(const FieldPtr& f, int n, Fn&& fn) {
    const int q = f->size();
    for (int p = 0; p < n; ++p) {
        Vec v = vec_zero(f, n);
        v[p] = 1;
        for (;;) {
            if (!fn(v)) return;
            int i = n - 1;
            for (; i > p; --i) {
                if (v[i] + 1 < q) { ++v[i]; break; }
                v[i] = 0;
            }
            if (i == p) break;
        }
    }
}

} // namespace detail

// Differential branch number: min over x != 0 of wt(x) + wt(Mx). Weights are
// invariant under scaling, so one representative per projective class is
// enough.
inline int branch_number_differential(const Mat& m) {
    if (m.nr != m.nc)
        throw Error(Errc::NonSquare, "branch number needs a square matrix");
    const int n = m.nr;
    if (n * m.f->degree() > 24)
        throw Error(Errc::TooLarge, "branch number is exhaustive; need n*m <= 24");
    int best = 2 * n;
    detail::for_each_normalized(m.f, n, [&](const Vec& x) {
        int w = weight(x) + weight(mat_vec_mul(m, x));
        if (w < best) best = w;
        return best > 1; // 1 is the least possible value (zero column)
    });
    return best;
}

// Linear branch number: same minimum with the transpose action x -> x^T M.
inline int branch_number_linear(const Mat& m) {
    if (m.nr != m.nc)
        throw Error(Errc::NonSquare, "branch number needs a square matrix");
    const int n = m.nr;
    if (n * m.f->degree() > 24)
        throw Error(Errc::TooLarge, "branch number is exhaustive; need n*m <= 24");
    const Field& F = *m.f;
    int best = 2 * n;
    detail::for_each_normalized(m.f, n, [&](const Vec& x) {
        int w = weight(x);
        for (int j = 0; j < n; ++j) {
            Elem acc = 0;
            for (int i = 0; i < n; ++i) acc ^= F.mul(x[i], m.at(i, j));
            w += acc != 0;
        }
        if (w < best) best = w;
        return best > 1;
    });
    return best;
}

// --- structured constructors ---------------------------------------------

// circulant(x_1..x_n): row i is the first row rotated right i times.
inline Mat circulant(const Vec& row) {
    const int n = row.size();
    Mat m(row.f, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.at(i, j) = row[((j - i) % n + n) % n];
    return m;
}

// left_circulant(x_1..x_n): row i is the first row rotated left i times;
// always symmetric.
inline Mat left_circulant(const Vec& row) {
    const int n = row.size();
    Mat m(row.f, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.at(i, j) = row[(i + j) % n];
    return m;
}

inline bool is_circulant(const Mat& m) {
    if (m.nr != m.nc) return false;
    const int n = m.nr;
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m.at(i, j) != m.at(0, ((j - i) % n + n) % n)) return false;
    return true;
}

inline bool is_left_circulant(const Mat& m) {
    if (m.nr != m.nc) return false;
    const int n = m.nr;
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m.at(i, j) != m.at(0, (i + j) % n)) return false;
    return true;
}

inline bool is_symmetric(const Mat& m) {
    if (m.nr != m.nc) return false;
    for (int i = 0; i < m.nr; ++i)
        for (int j = i + 1; j < m.nc; ++j)
            if (m.at(i, j) != m.at(j, i)) return false;
    return true;
}

// Row permutation mapping a circulant to the left-circulant with the same
// first row: keep row 0, reverse the order of the rest.
inline std::vector<int> left_circulant_perm(int n) {
    std::vector<int> p(static_cast<size_t>(n));
    p[0] = 0;
    for (int i = 1; i < n; ++i) p[static_cast<size_t>(i)] = n - i;
    return p;
}

// P with row i = e_{perm[i]}, so (P x)_i = x_{perm[i]} and row i of P M is
// row perm[i] of M.
inline Mat permutation_matrix(FieldPtr f, const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int v : perm) {
        if (v < 0 || v >= n || seen[static_cast<size_t>(v)])
            throw Error(Errc::NotPermutation, "not a permutation of [0,n)");
        seen[static_cast<size_t>(v)] = 1;
    }
    Mat m(std::move(f), n, n);
    for (int i = 0; i < n; ++i) m.at(i, perm[static_cast<size_t>(i)]) = 1;
    return m;
}

// Extracts perm from a permutation matrix (throws otherwise).
inline std::vector<int> perm_of_matrix(const Mat& p) {
    if (p.nr != p.nc)
        throw Error(Errc::NotPermutation, "permutation matrix must be square");
    std::vector<int> perm(static_cast<size_t>(p.nr), -1);
    std::vector<char> col_used(static_cast<size_t>(p.nc), 0);
    for (int i = 0; i < p.nr; ++i) {
        for (int j = 0; j < p.nc; ++j) {
            Elem v = p.at(i, j);
            if (v == 0) continue;
            if (v != 1 || perm[static_cast<size_t>(i)] >= 0 || col_used[static_cast<size_t>(j)])
                throw Error(Errc::NotPermutation, "matrix is not a permutation matrix");
            perm[static_cast<size_t>(i)] = j;
            col_used[static_cast<size_t>(j)] = 1;
        }
        if (perm[static_cast<size_t>(i)] < 0)
            throw Error(Errc::NotPermutation, "matrix is not a permutation matrix");
    }
    return perm;
}

inline Mat diag(const Vec& d) {
    Mat m(d.f, d.size(), d.size());
    for (int i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

// cauchy(x, y): entry (i,j) is 1/(x_i + y_j). Requires distinct x_i,
// distinct y_j, and x_i + y_j != 0 everywhere; every output is MDS.
inline Mat cauchy(const Vec& xs, const Vec& ys) {
    check_same_field(*xs.f, *ys.f);
    const int n = xs.size();
    if (ys.size() != n)
        throw Error(Errc::DimensionMismatch, "coordinate lists differ in length");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (xs[i] == xs[j] || ys[i] == ys[j])
                throw Error(Errc::CauchyCollision, "coordinates must be pairwise distinct");
        }
    const Field& F = *xs.f;
    Mat m(xs.f, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Elem s = xs[i] ^ ys[j];
            if (s == 0)
                throw Error(Errc::CauchyCollision, "x_i + y_j vanishes at (" + std::to_string(i) + "," + std::to_string(j) + ")");
            m.at(i, j) = F.inv(s);
        }
    return m;
}

// Symmetric Cauchy variant: y = l + x with l != 0 and l != x_i + x_j.
inline Mat cauchy_type2(const Vec& xs, Elem l) {
    if (l == 0)
        throw Error(Errc::CauchyCollision, "offset l must be nonzero");
    Vec ys = xs;
    for (int i = 0; i < ys.size(); ++i) ys[i] ^= l;
    return cauchy(xs, ys);
}

// hadamard(seed of length 2^k): entry (i,j) is seed[i xor j]; symmetric.
inline Mat hadamard(const Vec& seed) {
    const int n = seed.size();
    if (n <= 0 || (n & (n - 1)) != 0)
        throw Error(Errc::DimensionMismatch, "seed length must be a power of two");
    Mat m(seed.f, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = seed[i ^ j];
    return m;
}

inline std::string to_string(const Vec& v) {
    std::string s = "[";
    for (int i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += to_hex(v[i]);
    }
    return s + "]";
}

inline std::string to_string(const Mat& m) {
    std::string s = "[";
    for (int i = 0; i < m.nr; ++i) {
        if (i) s += "; ";
        for (int j = 0; j < m.nc; ++j) {
            if (j) s += ", ";
            s += to_hex(m.at(i, j));
        }
    }
    return s + "]";
}

} // namespace rdlin
