#pragma once

// The twelve rank-one pairs with dim z > 1 and K minimal, with their Lie
// brackets, K-actions, Hilbert bases and quotient data.  Formulas are
// templated over the scalar ring so the same code evaluates numerically
// (S = double) and symbolically (S = ExactPoly).
//
// Coordinate frames (all orthonormal for the fixed K-invariant metrics, all
// with rational coordinates):
//   C^n, H^n, O      componentwise, algebra units interleaved
//   K^{2 x n}        row-major entries, units interleaved
//   su_2             (diag(-i,i), [[0,1],[-1,0]], [[0,i],[i,0]]),
//                    metric (1/2) Re tr(z w*)
//   HS^2_0 H^2       (diag(1,-1), E12 q + E21 conj(q) for q = 1,i,j,k),
//                    metric (1/2) Re tr(z w)
//   Im H, Im O       imaginary units, Euclidean
// The su_2 / HS^2_0 metric scale 1/2 is the unique normalization making the
// H-type identity |J_z v| = |z||v| exact on blocks 1-2 and the chosen zeta_0
// a unit vector.

#include <array>
#include <span>
#include <vector>

#include "nilpair/catalog_types.hpp"
#include "nilpair/small_mat.hpp"

namespace nilpair {
namespace table1 {

template <class S>
using CA = CAElement<S>;

template <class S>
S sfrac(long num, long den) {
    if constexpr (std::is_same_v<S, double>)
        return static_cast<double>(num) / static_cast<double>(den);
    else
        return S(GaussianRational::fraction(num, den));
}

template <class S>
CA<S> cx(const S& re, const S& im) {
    CA<S> c(AlgebraTag::C);
    c[0] = re;
    c[1] = im;
    return c;
}

template <class S>
S dot(std::span<const S> a, std::span<const S> b) {
    S acc = a[0] * b[0];
    for (size_t k = 1; k < a.size(); ++k) acc = acc + a[k] * b[k];
    return acc;
}

template <class S>
S norm2(std::span<const S> a) {
    return dot<S>(a, a);
}

// ---- su_2 frame -----------------------------------------------------------

template <class S>
Mat<CA<S>> su2_from(std::span<const S> z) {
    Mat<CA<S>> m(2, 2, CA<S>(AlgebraTag::C));
    m(0, 0) = cx(S(0), -z[0]);
    m(1, 1) = cx(S(0), z[0]);
    m(0, 1) = cx(z[1], z[2]);
    m(1, 0) = cx(-z[1], z[2]);
    return m;
}

/// coordinates of an anti-hermitian traceless 2x2 w in the su_2 frame
template <class S>
std::array<S, 3> su2_coords(const Mat<CA<S>>& w) {
    return {-w(0, 0)[1], w(0, 1)[0], w(0, 1)[1]};
}

// ---- HS^2_0 H^2 frame ------------------------------------------------------

template <class S>
Mat<CA<S>> hs2_from(std::span<const S> z) {
    Mat<CA<S>> m(2, 2, CA<S>(AlgebraTag::H));
    m(0, 0)[0] = z[0];
    m(1, 1)[0] = -z[0];
    for (int s = 0; s < 4; ++s) {
        m(0, 1)[s] = z[1 + s];
        m(1, 0)[s] = (s == 0) ? z[1 + s] : -z[1 + s];
    }
    return m;
}

template <class S>
std::array<S, 5> hs2_coords(const Mat<CA<S>>& w) {
    return {w(0, 0)[0], w(0, 1)[0], w(0, 1)[1], w(0, 1)[2], w(0, 1)[3]};
}

// ---- Im H / Im O ------------------------------------------------------------

template <class S>
CA<S> imh_from(std::span<const S> z) {
    CA<S> q(AlgebraTag::H);
    for (int s = 0; s < 3; ++s) q[1 + s] = z[s];
    return q;
}

template <class S>
CA<S> imo_from(std::span<const S> z) {
    CA<S> q(AlgebraTag::O);
    for (int s = 0; s < 7; ++s) q[1 + s] = z[s];
    return q;
}

// ---------------------------------------------------------------------------
// Brackets and Hilbert bases, one namespace-free set of functions per line.
// ---------------------------------------------------------------------------

// Line 1: K = U_1 x Sp_n, v = C^{2n}, z = C, [v,u] = tv J u.
template <class S>
std::vector<S> l1_bracket(std::span<const S> vc, std::span<const S> uc) {
    auto v = split_coords<S>(vc, AlgebraTag::C);
    auto u = split_coords<S>(uc, AlgebraTag::C);
    int n = static_cast<int>(v.size()) / 2;
    CA<S> acc(AlgebraTag::C);
    for (int k = 0; k < n; ++k)
        acc += ca_mul(v[k], u[n + k]) - ca_mul(v[n + k], u[k]);
    return {acc[0], acc[1]};
}

template <class S>
std::vector<S> l1_hilbert(std::span<const S> v, std::span<const S> z) {
    return {norm2<S>(v), norm2<S>(z)};
}

// Line 2: K = Sp_1 x Sp_n, v = H^n, z = Im H, [v,u] = Im(v* u).
template <class S>
std::vector<S> l2_bracket(std::span<const S> vc, std::span<const S> uc) {
    auto v = split_coords<S>(vc, AlgebraTag::H);
    auto u = split_coords<S>(uc, AlgebraTag::H);
    CA<S> acc(AlgebraTag::H);
    for (size_t k = 0; k < v.size(); ++k) acc += ca_mul(ca_conj(v[k]), u[k]);
    return {acc[1], acc[2], acc[3]};
}

template <class S>
std::vector<S> l2_hilbert(std::span<const S> v, std::span<const S> z) {
    return {norm2<S>(v), norm2<S>(z)};
}

// Line 3: K = Spin_7, v = O, z = Im O, [v,u] = Im(v conj(u)).
template <class S>
std::vector<S> l3_bracket(std::span<const S> vc, std::span<const S> uc) {
    auto v = split_coords<S>(vc, AlgebraTag::O)[0];
    auto u = split_coords<S>(uc, AlgebraTag::O)[0];
    auto p = ca_mul(v, ca_conj(u));
    return {p[1], p[2], p[3], p[4], p[5], p[6], p[7]};
}

template <class S>
std::vector<S> l3_hilbert(std::span<const S> v, std::span<const S> z) {
    return {norm2<S>(v), norm2<S>(z)};
}

// Lines 4, 6, 7: v = 2 x p complex, z = su_2,
// [v,u] = v u* - u v* - (1/2) tr(v u* - u v*).
template <class S>
std::vector<S> l467_bracket(std::span<const S> vc, std::span<const S> uc, int p) {
    auto v = mat_from_coords<S>(vc, 2, p, AlgebraTag::C);
    auto u = mat_from_coords<S>(uc, 2, p, AlgebraTag::C);
    auto w = v * ca_adjoint(u) - u * ca_adjoint(v);
    auto tr = w.trace();
    S half = sfrac<S>(1, 2);
    for (int k = 0; k < 2; ++k) w(k, k) = w(k, k) - half * tr;
    auto c = su2_coords(w);
    return {c[0], c[1], c[2]};
}

// line 4 basis: |v|^2, i v*zv, |z|^2   (v a column, p = 1)
template <class S>
std::vector<S> l4_hilbert(std::span<const S> vc, std::span<const S> zc) {
    auto v = mat_from_coords<S>(vc, 2, 1, AlgebraTag::C);
    auto z = su2_from<S>(zc);
    auto val = (ca_adjoint(v) * (z * v))(0, 0);
    // i * (purely imaginary scalar) = -Im part
    return {norm2<S>(vc), -val[1], norm2<S>(zc)};
}

// lines 6/7 basis: |v|^2, tr((v*v)^2), i tr(v* z v), |z|^2
template <class S>
std::vector<S> l67_hilbert(std::span<const S> vc, std::span<const S> zc, int p) {
    auto v = mat_from_coords<S>(vc, 2, p, AlgebraTag::C);
    auto z = su2_from<S>(zc);
    auto g = ca_adjoint(v) * v;
    auto tr2 = (g * g).trace();
    auto mixed = (ca_adjoint(v) * (z * v)).trace();
    return {norm2<S>(vc), tr2[0], -mixed[1], norm2<S>(zc)};
}

// Line 5: K = Sp_2, v = H^2, z = HS^2_0 H^2,
// [v,u] = v i u* - u i v* - (1/2) tr(...).
template <class S>
std::vector<S> l5_bracket(std::span<const S> vc, std::span<const S> uc) {
    auto v = mat_from_coords<S>(vc, 2, 1, AlgebraTag::H);
    auto u = mat_from_coords<S>(uc, 2, 1, AlgebraTag::H);
    CA<S> qi = CA<S>::basis(AlgebraTag::H, 1);
    Mat<CA<S>> vi = v, ui = u;
    for (int k = 0; k < 2; ++k) {
        vi(k, 0) = ca_mul(v(k, 0), qi);
        ui(k, 0) = ca_mul(u(k, 0), qi);
    }
    auto w = vi * ca_adjoint(u) - ui * ca_adjoint(v);
    auto tr = w.trace();
    S half = sfrac<S>(1, 2);
    for (int k = 0; k < 2; ++k) w(k, k) = w(k, k) - half * tr;
    auto c = hs2_coords(w);
    return {c[0], c[1], c[2], c[3], c[4]};
}

template <class S>
std::vector<S> l5_hilbert(std::span<const S> vc, std::span<const S> zc) {
    auto v = mat_from_coords<S>(vc, 2, 1, AlgebraTag::H);
    auto z = hs2_from<S>(zc);
    auto val = (ca_adjoint(v) * (z * v))(0, 0);
    return {norm2<S>(vc), val[0], norm2<S>(zc)};
}

// Line 8: K = SO_2 x (Sp_1 x Sp_n), v = (v1, v2) in H^n x H^n, z = Im H,
// [v,u] = Im(u1* v1) + Im(u2* v2) with x* y the quaternionic pairing.
template <class S>
CA<S> quat_pairing(std::span<const S> xc, std::span<const S> yc) {
    auto x = split_coords<S>(xc, AlgebraTag::H);
    auto y = split_coords<S>(yc, AlgebraTag::H);
    CA<S> acc(AlgebraTag::H);
    for (size_t k = 0; k < x.size(); ++k) acc += ca_mul(ca_conj(y[k]), x[k]);
    return acc;
}

template <class S>
std::vector<S> l8_bracket(std::span<const S> vc, std::span<const S> uc) {
    size_t h = vc.size() / 2;
    auto q1 = quat_pairing<S>(vc.subspan(0, h), uc.subspan(0, h));
    auto q2 = quat_pairing<S>(vc.subspan(h), uc.subspan(h));
    auto acc = q1 + q2;
    return {acc[1], acc[2], acc[3]};
}

template <class S>
std::vector<S> l8_hilbert(std::span<const S> vc, std::span<const S> zc) {
    size_t h = vc.size() / 2;
    auto v1 = vc.subspan(0, h), v2 = vc.subspan(h);
    S n1 = norm2<S>(v1), n2 = norm2<S>(v2);
    auto q12 = quat_pairing<S>(v1, v2);  // v2* v1
    S f4 = n1 * n1 + sfrac<S>(2, 1) * ca_norm2(q12) + n2 * n2;
    S re = ca_re(q12);
    S f5 = n1 * n2 - re * re;
    auto zq = imh_from<S>(zc);
    S mixed = ca_re(ca_mul(q12 - ca_conj(q12), zq));
    return {norm2<S>(vc), f4, f5, mixed, norm2<S>(zc)};
}

// Line 9: K = SO_2 x Spin_7, v = (v1, v2) in O x O, z = Im O,
// [v,u] = -(Im(v1 conj(u1)) + Im(v2 conj(u2))).
template <class S>
std::vector<S> l9_bracket(std::span<const S> vc, std::span<const S> uc) {
    auto v = split_coords<S>(vc, AlgebraTag::O);
    auto u = split_coords<S>(uc, AlgebraTag::O);
    auto acc = ca_mul(v[0], ca_conj(u[0])) + ca_mul(v[1], ca_conj(u[1]));
    return {-acc[1], -acc[2], -acc[3], -acc[4], -acc[5], -acc[6], -acc[7]};
}

template <class S>
std::vector<S> l9_hilbert(std::span<const S> vc, std::span<const S> zc) {
    auto v = split_coords<S>(vc, AlgebraTag::O);
    S n1 = ca_norm2(v[0]), n2 = ca_norm2(v[1]);
    auto p = ca_mul(v[0], ca_conj(v[1]));  // v1 v2*
    S re = ca_re(p);
    S f = n1 * n2 - re * re;
    auto zo = imo_from<S>(zc);
    S mixed = ca_re(ca_mul(p - ca_conj(p), zo));
    return {norm2<S>(vc), f, mixed, norm2<S>(zc)};
}

// Lines 10, 11: v, z in K^3 (K = R resp. C), [v,u] = v x u in the basis
// ([e2,e3],[e3,e1],[e1,e2]).
template <class S>
std::vector<S> l10_bracket(std::span<const S> v, std::span<const S> u) {
    return {v[1] * u[2] - v[2] * u[1], v[2] * u[0] - v[0] * u[2], v[0] * u[1] - v[1] * u[0]};
}

template <class S>
std::vector<S> l10_hilbert(std::span<const S> v, std::span<const S> z) {
    return {norm2<S>(v), dot<S>(v, z), norm2<S>(z)};
}

template <class S>
std::vector<S> l11_bracket(std::span<const S> vc, std::span<const S> uc) {
    auto v = split_coords<S>(vc, AlgebraTag::C);
    auto u = split_coords<S>(uc, AlgebraTag::C);
    std::vector<S> out;
    for (int k = 0; k < 3; ++k) {
        auto w = ca_mul(v[(k + 1) % 3], u[(k + 2) % 3]) - ca_mul(v[(k + 2) % 3], u[(k + 1) % 3]);
        out.push_back(w[0]);
        out.push_back(w[1]);
    }
    return out;
}

template <class S>
std::vector<S> l11_hilbert(std::span<const S> vc, std::span<const S> zc) {
    auto v = split_coords<S>(vc, AlgebraTag::C);
    auto z = split_coords<S>(zc, AlgebraTag::C);
    CA<S> acc(AlgebraTag::C);
    for (int k = 0; k < 3; ++k) acc += ca_mul(v[k], z[k]);
    return {norm2<S>(vc), acc[0], acc[1], norm2<S>(zc)};
}

// Line 12: K = G_2, v = z = Im O, [v,u] = (1/2)(v u* - u v*).
template <class S>
std::vector<S> l12_bracket(std::span<const S> vc, std::span<const S> uc) {
    CA<S> v(AlgebraTag::O), u(AlgebraTag::O);
    for (int s = 0; s < 7; ++s) {
        v[1 + s] = vc[s];
        u[1 + s] = uc[s];
    }
    auto p = ca_mul(v, ca_conj(u));  // Im part equals (1/2)(v u* - u v*)
    return {p[1], p[2], p[3], p[4], p[5], p[6], p[7]};
}

template <class S>
std::vector<S> l12_hilbert(std::span<const S> v, std::span<const S> z) {
    return {norm2<S>(v), dot<S>(v, z), norm2<S>(z)};
}

// ---------------------------------------------------------------------------
// Numeric action builders.
// ---------------------------------------------------------------------------

using CAd = CAElement<double>;
using MatD = Mat<CAd>;

inline MatD zero_mat(int r, int c, AlgebraTag t) { return MatD(r, c, CAd(t)); }

/// v (rows x cols over the algebra, row-major interleaved) -> A v
inline Eigen::MatrixXd left_action_real(const MatD& a, int cols) {
    int k = dim_of(a(0, 0).tag);
    int rows = a.c;  // v has a.c rows
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(a.r * cols * k, rows * cols * k);
    for (int i = 0; i < a.r; ++i)
        for (int j = 0; j < rows; ++j) {
            Eigen::MatrixXd blk = left_mult_matrix(a(i, j));
            for (int c = 0; c < cols; ++c)
                m.block((i * cols + c) * k, (j * cols + c) * k, k, k) = blk;
        }
    return m;
}

/// v (rows x cols) -> v B
inline Eigen::MatrixXd right_action_real(const MatD& b, int rows) {
    int k = dim_of(b(0, 0).tag);
    int cols = b.r;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rows * b.c * k, rows * cols * k);
    for (int cp = 0; cp < cols; ++cp)
        for (int c = 0; c < b.c; ++c) {
            Eigen::MatrixXd blk = right_mult_matrix(b(cp, c));
            for (int r = 0; r < rows; ++r)
                m.block((r * b.c + c) * k, (r * cols + cp) * k, k, k) = blk;
        }
    return m;
}

/// anti-hermitian matrix basis over R / C / H (the compact classical algebras
/// so_n, u_n / su_n, sp_n)
inline std::vector<MatD> antiherm_basis(int n, AlgebraTag t, bool traceless) {
    std::vector<MatD> out;
    auto unit = [&](int s) { return CAd::basis(t, s); };
    int k = dim_of(t);
    if (t == AlgebraTag::R) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                MatD m = zero_mat(n, n, t);
                m(i, j) = unit(0);
                m(j, i) = -unit(0);
                out.push_back(m);
            }
        return out;
    }
    // diagonal part
    if (t == AlgebraTag::C && !traceless) {
        for (int i = 0; i < n; ++i) {
            MatD m = zero_mat(n, n, t);
            m(i, i) = unit(1);
            out.push_back(m);
        }
    } else if (t == AlgebraTag::C) {
        for (int i = 0; i + 1 < n; ++i) {
            MatD m = zero_mat(n, n, t);
            m(i, i) = unit(1);
            m(i + 1, i + 1) = -unit(1);
            out.push_back(m);
        }
    } else {
        for (int i = 0; i < n; ++i)
            for (int s = 1; s < 4; ++s) {
                MatD m = zero_mat(n, n, t);
                m(i, i) = unit(s);
                out.push_back(m);
            }
    }
    // off-diagonal part
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            for (int s = 0; s < k; ++s) {
                MatD m = zero_mat(n, n, t);
                m(i, j) = unit(s);
                m(j, i) = (s == 0) ? -unit(0) : unit(s);
                out.push_back(m);
            }
        }
    return out;
}

/// sp_n inside u_{2n}: [[P, Q], [-conj(Q), conj(P)]] with P anti-hermitian
/// and Q complex symmetric.
inline std::vector<MatD> sp_complex_basis(int n) {
    std::vector<MatD> out;
    auto embed = [&](const MatD& p, const MatD& q) {
        MatD m = zero_mat(2 * n, 2 * n, AlgebraTag::C);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                m(i, j) = p(i, j);
                m(i, n + j) = q(i, j);
                m(n + i, j) = -ca_conj(q(i, j));
                m(n + i, n + j) = ca_conj(p(i, j));
            }
        return m;
    };
    MatD zq = zero_mat(n, n, AlgebraTag::C);
    for (const auto& p : antiherm_basis(n, AlgebraTag::C, false)) out.push_back(embed(p, zq));
    MatD zp = zero_mat(n, n, AlgebraTag::C);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int s = 0; s < 2; ++s) {
                MatD q = zero_mat(n, n, AlgebraTag::C);
                q(i, j) = CAd::basis(AlgebraTag::C, s);
                q(j, i) = CAd::basis(AlgebraTag::C, s);
                out.push_back(embed(zp, q));
            }
    return out;
}

/// a_z matrix of the conjugation action z -> a z - z a on a coordinate frame
/// given by from/to converters.
template <class FromCoords, class ToCoords>
Eigen::MatrixXd conj_action_real(const MatD& a, int dim_z, FromCoords from, ToCoords to) {
    Eigen::MatrixXd m(dim_z, dim_z);
    for (int l = 0; l < dim_z; ++l) {
        std::vector<double> e(dim_z, 0.0);
        e[l] = 1.0;
        auto zm = from(std::span<const double>(e));
        auto w = a * zm - zm * a;
        auto c = to(w);
        for (int r = 0; r < dim_z; ++r) m(r, l) = c[r];
    }
    return m;
}

}  // namespace table1
}  // namespace nilpair
