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

// Constructive witness builders: non-MDS matrices (via a minimal singular
// minor), odd-order symmetric MDS matrices (via an alternating block
// matrix), and circulants of order n with n not congruent to +-2 mod 12
// (via polynomial component splits).

#pragma once

#include "rdlin/rd_core.hpp"

namespace rdlin {

// Coefficients of the representing polynomial of a circulant, read off its
// first column: multiplying by M is multiplication in F[X]/(X^n - 1).
struct CirculantPoly {
    Vec coeffs;
};

inline CirculantPoly circulant_poly(const Mat& m) {
    if (!is_circulant(m))
        throw Error(Errc::NotCirculant, "matrix is not a circulant");
    Vec c = vec_zero(m.f, m.rows());
    for (int i = 0; i < m.rows(); ++i) c[i] = m.at(i, 0);
    return CirculantPoly{std::move(c)};
}

namespace detail {

inline Vec embed_on(const Vec& s, const IndexSet& where, int n) {
    Vec x = vec_zero(s.f, n);
    for (size_t k = 0; k < where.size(); ++k) x[where[k]] = s[static_cast<int>(k)];
    return x;
}

// Witness for a singular matrix straight from a kernel vector: M u = 0
// makes the output side vacuous, so any related nonzero v != u works.
inline Witness singular_kernel_witness(const Mat& m) {
    Vec k = *solve_homogeneous(m);
    const int n = m.cols();
    if (weight(k) >= 2) {
        int j0 = 0;
        while (k[j0] == 0) ++j0;
        Vec v = vec_zero(m.f, n);
        v[j0] = k[j0];
        return Witness{k, v, WitnessMethod::ThmNonMDS, false};
    }
    // weight-1 kernel vector: column j0 of M is zero
    int j0 = 0;
    while (k[j0] == 0) ++j0;
    Vec u = vec_zero(m.f, n);
    u[j0] = 1;
    Vec v = u;
    v[j0 == 0 ? 1 : 0] = 1;
    return Witness{u, v, WitnessMethod::ThmNonMDS, false};
}

} // namespace detail

// A non-MDS matrix always admits a related pair (n >= 2). Take a minimal
// singular r x r minor (I, J); its kernel vector s has full support, and
// u = s embedded on J sends rows I to zero. If the complementary minor
// M[I^c;J^c] is singular too, its kernel embedded on J^c gives v with rows
// I^c zeroed (case 1). Otherwise solve, over rows I^c, for v on J^c and a
// scalar alpha with M v = alpha M u there; the system is underdetermined by
// one unknown and every nonzero solution has alpha != 0 (case 2). Case 2
// yields v = 0 only when M itself is singular, where the kernel shortcut
// applies.
inline Witness construct_nonmds_witness(const Mat& m) {
    if (m.rows() != m.cols())
        throw Error(Errc::NonSquare, "construction needs a square matrix");
    const int n = m.rows();
    if (n < 2)
        throw Error(Errc::DimensionMismatch, "no 1x1 matrix admits a nontrivial pair");
    MdsCertificate cert = mds_certificate(m);
    if (cert.mds)
        throw Error(Errc::IsMDS, "matrix is MDS; this construction needs a singular minor");
    const int r = static_cast<int>(cert.rows.size());
    const Field& F = *m.f;

    Witness w{vec_zero(m.f, n), vec_zero(m.f, n), WitnessMethod::ThmNonMDS, false};
    if (r == n) {
        w = detail::singular_kernel_witness(m);
    } else {
        Vec s = *solve_homogeneous(submatrix(m, cert.rows, cert.cols));
        Vec u = detail::embed_on(s, cert.cols, n);
        IndexSet ic = complement_set(cert.rows, n);
        IndexSet jc = complement_set(cert.cols, n);
        Mat comp = submatrix(m, ic, jc);
        if (determinant(comp) == 0) {
            Vec t = *solve_homogeneous(comp);
            w.u = u;
            w.v = detail::embed_on(t, jc, n);
        } else {
            Vec mu = mat_vec_mul(m, u);
            Mat sys(m.f, n - r, n - r + 1);
            for (int i = 0; i < n - r; ++i) {
                for (int j = 0; j < n - r; ++j)
                    sys.at(i, j) = m.at(ic[static_cast<size_t>(i)], jc[static_cast<size_t>(j)]);
                sys.at(i, n - r) = mu[ic[static_cast<size_t>(i)]];
            }
            Vec ker = *solve_homogeneous(sys);
            Elem alpha = ker[n - r];
            Vec x = vec_zero(m.f, n - r);
            if (alpha != 0) {
                Elem ai = F.inv(alpha);
                for (int j = 0; j < n - r; ++j) x[j] = F.mul(ai, ker[j]);
            }
            w.u = u;
            w.v = detail::embed_on(x, jc, n);
        }
    }
    if (verify_witness(m, w).ok) return w;
    if (determinant(m) == 0) {
        w = detail::singular_kernel_witness(m);
        if (verify_witness(m, w).ok) return w;
    }
    if (n * F.degree() <= 20)
        if (auto fb = search_full(m)) return *fb;
    throw Error(Errc::ConstructionDegenerate, "all construction paths failed");
}

// For symmetric MDS M of odd order n, zero out a half-and-half block
// pattern: rows above the center keep only columns from the center
// rightwards, rows below keep only columns up to the center, and the center
// row drops its center entry. The result is symmetric with a zero diagonal,
// i.e. alternating, and alternating matrices of odd order are singular. A
// kernel vector k splits into u (left half up to the center) and v (center
// to the right end); the defining equations say exactly that Mu and Mv
// vanish or agree in the right places. MDS-ness of M forces every nonzero k
// to give a nontrivial pair.
inline Witness construct_symmetric_odd_witness(const Mat& m) {
    if (m.rows() != m.cols())
        throw Error(Errc::NonSquare, "construction needs a square matrix");
    const int n = m.rows();
    if (n < 3)
        throw Error(Errc::DimensionMismatch, "order must be at least 3");
    if (n % 2 == 0)
        throw Error(Errc::EvenOrder, "order must be odd");
    if (!is_symmetric(m))
        throw Error(Errc::NotSymmetric, "matrix must be symmetric");
    if (!is_mds(m))
        throw Error(Errc::NotMDS, "the theorem needs an MDS matrix");

    const int c = (n - 1) / 2;
    Mat mp(m.f, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i < c)
                mp.at(i, j) = j >= c ? m.at(i, j) : 0;
            else if (i > c)
                mp.at(i, j) = j <= c ? m.at(i, j) : 0;
            else
                mp.at(i, j) = j == c ? 0 : m.at(i, j);
        }

    std::vector<Vec> basis = nullspace_basis(mp); // nonempty: alternating, odd order
    const int d = static_cast<int>(basis.size());
    const Field& F = *m.f;
    std::optional<Witness> found;
    detail::for_each_normalized(m.f, d, [&](const Vec& lam) {
        Vec k = vec_zero(m.f, n);
        for (int t = 0; t < d; ++t)
            if (lam[t])
                for (int j = 0; j < n; ++j)
                    k[j] ^= F.mul(lam[t], basis[static_cast<size_t>(t)][j]);
        Witness w{vec_zero(m.f, n), vec_zero(m.f, n), WitnessMethod::ThmSymmetricOdd, false};
        for (int j = 0; j <= c; ++j) w.u[j] = k[j];
        for (int j = c; j < n; ++j) w.v[j] = k[j];
        if (verify_witness(m, w).ok) {
            found = std::move(w);
            return false;
        }
        return true;
    });
    if (found) return *found;
    if (auto fb = search_full(m)) return *fb;
    throw Error(Errc::ConstructionDegenerate, "all construction paths failed");
}

namespace detail {

// Splits the circulant polynomial by residue classes of the exponent and
// pairs two class sums; disjoint supports plus the square/cross-term
// cancellation in characteristic 2 make the pair related on both sides.
inline std::optional<Witness> circulant_split_witness(const Mat& m, const Vec& a, int modulus,
                                                      std::initializer_list<int> u_classes,
                                                      std::initializer_list<int> v_classes,
                                                      WitnessMethod tag) {
    const int n = a.size();
    Witness w{vec_zero(m.f, n), vec_zero(m.f, n), tag, false};
    for (int k = 0; k < n; ++k) {
        for (int r : u_classes)
            if (k % modulus == r) w.u[k] = a[k];
        for (int r : v_classes)
            if (k % modulus == r) w.v[k] = a[k];
    }
    if (verify_witness(m, w).ok) return w;
    return std::nullopt;
}

} // namespace detail

// Circulants of order n with n odd or n divisible by 3 or 4 always admit a
// related pair; the two residue classes mod 12 left open are refused.
inline Witness construct_circulant_witness(const Mat& m) {
    if (m.rows() != m.cols() || !is_circulant(m))
        throw Error(Errc::NotCirculant, "matrix is not a circulant");
    const int n = m.rows();
    if (n < 2)
        throw Error(Errc::DimensionMismatch, "no 1x1 matrix admits a nontrivial pair");
    if (n % 12 == 2 || n % 12 == 10)
        throw Error(Errc::ExcludedOrder, "orders +-2 mod 12 are not covered");

    if (n % 2 == 1) {
        // a left-circulant is a row-permuted circulant and is symmetric, so
        // the odd-order construction applies; row permutations on the output
        // side never disturb relatedness, so the witness carries back.
        Mat p = permutation_matrix(m.f, left_circulant_perm(n));
        Mat lc = mat_mul(p, m);
        Witness wlc = is_mds(lc) ? construct_symmetric_odd_witness(lc)
                                 : construct_nonmds_witness(lc);
        Witness w = transform_witness_perm(wlc, transpose(p), identity(m.f, n));
        w.method = WitnessMethod::CircOdd;
        if (verify_witness(m, w).ok) return w;
    } else {
        Vec a = circulant_poly(m).coeffs;
        if (n % 4 == 0)
            if (auto w = detail::circulant_split_witness(m, a, 2, {0}, {1}, WitnessMethod::CircMod4))
                return *w;
        if (n % 3 == 0)
            if (auto w = detail::circulant_split_witness(m, a, 3, {0, 1}, {0, 2}, WitnessMethod::CircMod3))
                return *w;
    }
    // a trivial split needs zero coefficients, which already kills MDS-ness
    if (!is_mds(m)) return construct_nonmds_witness(m);
    if (n * m.f->degree() <= 20)
        if (auto fb = search_full(m)) return *fb;
    throw Error(Errc::ConstructionDegenerate, "all construction paths failed");
}

} // namespace rdlin
