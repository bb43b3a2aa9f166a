#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "nilpair/cayley_dickson.hpp"
#include "nilpair/numeric.hpp"

namespace nilpair {

/// Infinitesimal K-action on n = v + z: a pair of skew matrices.
struct ActionElement {
    Eigen::MatrixXd a_v;
    Eigen::MatrixXd a_z;
};

/// Finite K-element: orthogonal on both factors.
struct GroupElement {
    Eigen::MatrixXd g_v;
    Eigen::MatrixXd g_z;
};

using BracketFn = std::function<Eigen::VectorXd(const Eigen::VectorXd&, const Eigen::VectorXd&)>;

/// exp(tA) on both factors.
inline GroupElement exp_action(const ActionElement& a, double t = 1.0) {
    return {expm(t * a.a_v), expm(t * a.a_z)};
}

/// The 21 products L_{e_i} L_{e_j} (i < j) of left multiplications by
/// imaginary octonion units: a basis of spin_7 acting on O = R^8.
inline std::vector<Eigen::MatrixXd> spin7_basis() {
    using CAd = CAElement<double>;
    std::vector<Eigen::MatrixXd> left(8);
    for (int k = 1; k <= 7; ++k) left[k] = left_mult_matrix(CAd::basis(AlgebraTag::O, k));
    std::vector<Eigen::MatrixXd> basis;
    basis.reserve(21);
    for (int i = 1; i <= 7; ++i)
        for (int j = i + 1; j <= 7; ++j) basis.push_back(left[i] * left[j]);
    return basis;
}

/// Basis of g_2 = derivations of O, as 8x8 matrices annihilating 1 and
/// preserving Im O.  Computed as the null space of the derivation constraint
/// D(xy) - (Dx)y - x(Dy) = 0 over the 21 so(7) generators acting on Im O.
inline std::vector<Eigen::MatrixXd> g2_basis() {
    using CAd = CAElement<double>;
    // so(7) generators on coordinates 1..7 inside R^8
    std::vector<Eigen::MatrixXd> so7;
    for (int i = 1; i <= 7; ++i)
        for (int j = i + 1; j <= 7; ++j) {
            Eigen::MatrixXd m = Eigen::MatrixXd::Zero(8, 8);
            m(i, j) = 1.0;
            m(j, i) = -1.0;
            so7.push_back(m);
        }
    // columns: violation of the derivation identity on all basis pairs
    const int rows = 8 * 8 * 8;
    Eigen::MatrixXd sys(rows, static_cast<int>(so7.size()));
    std::vector<std::vector<CAd>> prod(8, std::vector<CAd>(8, CAd(AlgebraTag::O)));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b)
            prod[a][b] = ca_mul(CAd::basis(AlgebraTag::O, a), CAd::basis(AlgebraTag::O, b));
    for (size_t c = 0; c < so7.size(); ++c) {
        const Eigen::MatrixXd& d = so7[c];
        int r = 0;
        for (int a = 0; a < 8; ++a)
            for (int b = 0; b < 8; ++b) {
                // D(e_a e_b) - (D e_a) e_b - e_a (D e_b), coordinates of the result
                Eigen::VectorXd lhs = Eigen::VectorXd::Zero(8);
                for (int k = 0; k < 8; ++k)
                    for (int m = 0; m < 8; ++m) lhs(k) += d(k, m) * prod[a][b][m];
                CAd da(AlgebraTag::O), db(AlgebraTag::O);
                for (int k = 0; k < 8; ++k) {
                    da[k] = d(k, a);
                    db[k] = d(k, b);
                }
                CAd t1 = ca_mul(da, CAd::basis(AlgebraTag::O, b));
                CAd t2 = ca_mul(CAd::basis(AlgebraTag::O, a), db);
                for (int k = 0; k < 8; ++k) sys(r + k, static_cast<int>(c)) = lhs(k) - t1[k] - t2[k];
                r += 8;
            }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(sys, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    double smax = s(0);
    int rank = 0;
    for (int i = 0; i < s.size(); ++i)
        if (s(i) > 1e-8 * smax) ++rank;
    // spectral-gap diagnostic: singular values near the threshold mean the
    // rank decision is ambiguous
    if (rank < s.size() && s(rank - 1) < 1e-4 * smax)
        throw std::runtime_error("g2_basis: ambiguous numeric rank in derivation system");
    int dim = static_cast<int>(so7.size()) - rank;
    std::vector<Eigen::MatrixXd> basis;
    basis.reserve(dim);
    for (int k = 0; k < dim; ++k) {
        Eigen::VectorXd coeff = svd.matrixV().col(static_cast<int>(so7.size()) - dim + k);
        Eigen::MatrixXd d = Eigen::MatrixXd::Zero(8, 8);
        for (size_t c = 0; c < so7.size(); ++c) d += coeff(static_cast<int>(c)) * so7[c];
        basis.push_back(d);
    }
    return basis;
}

struct CenterActionResult {
    Eigen::MatrixXd a_z;
    double residual;
};

/// Solve for the unique a_z with a_z([v,u]) = [a_v v, u] + [v, a_v u] by
/// least squares over all coordinate basis pairs.  The residual certifies
/// bracket equivariance; a large residual means a_v is not an automorphism
/// direction (caller decides, no throw).
inline CenterActionResult solve_center_action(const Eigen::MatrixXd& a_v, const BracketFn& bracket,
                                              int dim_v, int dim_z) {
    const int pairs = dim_v * (dim_v - 1) / 2;
    Eigen::MatrixXd w(dim_z, pairs);       // bracket values [e_i, e_j]
    Eigen::MatrixXd rhs_mat(dim_z, pairs); // [a_v e_i, e_j] + [e_i, a_v e_j]
    int col = 0;
    for (int i = 0; i < dim_v; ++i)
        for (int j = i + 1; j < dim_v; ++j) {
            Eigen::VectorXd ei = Eigen::VectorXd::Unit(dim_v, i);
            Eigen::VectorXd ej = Eigen::VectorXd::Unit(dim_v, j);
            w.col(col) = bracket(ei, ej);
            rhs_mat.col(col) = bracket(a_v * ei, ej) + bracket(ei, a_v * ej);
            ++col;
        }
    // a_z W = R  =>  W^t a_z^t = R^t, solved columnwise by least squares
    Eigen::MatrixXd azt = w.transpose().colPivHouseholderQr().solve(rhs_mat.transpose());
    Eigen::MatrixXd a_z = azt.transpose();
    double num = (a_z * w - rhs_mat).norm();
    double den = 1.0 + rhs_mat.norm();
    return {a_z, num / den};
}

/// Deterministic pseudo-Haar sample: product of exponentials of three random
/// standard-normal combinations of the algebra basis.
inline GroupElement sample_group_element(const std::vector<ActionElement>& basis, Rng& rng) {
    if (basis.empty()) throw std::invalid_argument("sample_group_element: empty basis");
    int dv = static_cast<int>(basis[0].a_v.rows());
    int dz = static_cast<int>(basis[0].a_z.rows());
    GroupElement g{Eigen::MatrixXd::Identity(dv, dv), Eigen::MatrixXd::Identity(dz, dz)};
    for (int rep = 0; rep < 3; ++rep) {
        Eigen::MatrixXd av = Eigen::MatrixXd::Zero(dv, dv);
        Eigen::MatrixXd az = Eigen::MatrixXd::Zero(dz, dz);
        for (const auto& b : basis) {
            double c = rng.normal();
            av += c * b.a_v;
            az += c * b.a_z;
        }
        g.g_v = expm(av) * g.g_v;
        g.g_z = expm(az) * g.g_z;
    }
    return g;
}

}  // namespace nilpair
