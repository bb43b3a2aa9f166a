#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Dense>

#include "nilpair/actions.hpp"
#include "nilpair/cayley_dickson.hpp"
#include "nilpair/numeric.hpp"

using namespace nilpair;

namespace {

// the line-3 bracket [v,u] = Im(v conj(u)) on O, z-coordinates e1..e7
Eigen::VectorXd octonion_bracket(const Eigen::VectorXd& v, const Eigen::VectorXd& u) {
    CAElement<double> cv(AlgebraTag::O), cu(AlgebraTag::O);
    for (int k = 0; k < 8; ++k) {
        cv[k] = v(k);
        cu[k] = u(k);
    }
    auto p = ca_mul(cv, ca_conj(cu));
    Eigen::VectorXd z(7);
    for (int k = 0; k < 7; ++k) z(k) = p[k + 1];
    return z;
}

double span_projection_residual(const std::vector<Eigen::MatrixXd>& basis,
                                const Eigen::MatrixXd& m) {
    int n = static_cast<int>(m.rows());
    Eigen::MatrixXd a(n * n, static_cast<int>(basis.size()));
    Eigen::VectorXd b(n * n);
    for (size_t c = 0; c < basis.size(); ++c)
        a.col(static_cast<int>(c)) = Eigen::Map<const Eigen::VectorXd>(basis[c].data(), n * n);
    b = Eigen::Map<const Eigen::VectorXd>(m.data(), n * n);
    Eigen::VectorXd x = a.colPivHouseholderQr().solve(b);
    return (a * x - b).norm() / (1.0 + b.norm());
}

}  // namespace

TEST_CASE("spin7 basis: 21 skew matrices, independent, closed under bracket") {
    auto basis = spin7_basis();
    REQUIRE(basis.size() == 21);
    for (const auto& m : basis) REQUIRE((m + m.transpose()).norm() <= 1e-12);

    Eigen::MatrixXd flat(64, 21);
    for (size_t c = 0; c < basis.size(); ++c)
        flat.col(static_cast<int>(c)) = Eigen::Map<const Eigen::VectorXd>(basis[c].data(), 64);
    REQUIRE(numeric_rank(flat) == 21);

    Rng rng(5);
    for (int rep = 0; rep < 10; ++rep) {
        int i = rng.index(21), j = rng.index(21);
        Eigen::MatrixXd comm = basis[i] * basis[j] - basis[j] * basis[i];
        REQUIRE(span_projection_residual(basis, comm) <= 1e-10);
    }
}

TEST_CASE("g2 basis: 14 derivations annihilating 1 and preserving Im O") {
    auto basis = g2_basis();
    REQUIRE(basis.size() == 14);
    using CAd = CAElement<double>;
    // defining property on all basis pairs
    for (const auto& d : basis) {
        for (int k = 0; k < 8; ++k) {
            REQUIRE(d(k, 0) == 0.0);  // annihilates 1, exact by construction
            REQUIRE(d(0, k) == 0.0);  // preserves Im O
        }
        double worst = 0.0;
        for (int a = 0; a < 8; ++a)
            for (int b = 0; b < 8; ++b) {
                CAd ea = CAd::basis(AlgebraTag::O, a), eb = CAd::basis(AlgebraTag::O, b);
                CAd da(AlgebraTag::O), db(AlgebraTag::O);
                for (int k = 0; k < 8; ++k) {
                    da[k] = d(k, a);
                    db[k] = d(k, b);
                }
                auto lhs = ca_mul(ea, eb);
                CAd dlhs(AlgebraTag::O);
                for (int k = 0; k < 8; ++k)
                    for (int m = 0; m < 8; ++m) dlhs[k] += d(k, m) * lhs[m];
                auto rhs = ca_mul(da, eb) + ca_mul(ea, db);
                for (int k = 0; k < 8; ++k) worst = std::max(worst, std::abs(dlhs[k] - rhs[k]));
            }
        REQUIRE(worst <= 1e-10);
    }
    // Lie subalgebra: brackets stay in the span
    Rng rng(6);
    for (int rep = 0; rep < 10; ++rep) {
        int i = rng.index(14), j = rng.index(14);
        Eigen::MatrixXd comm = basis[i] * basis[j] - basis[j] * basis[i];
        REQUIRE(span_projection_residual(basis, comm) <= 1e-10);
    }
}

TEST_CASE("matrix exponential: identity, orthogonality, one-parameter group") {
    Eigen::MatrixXd z = Eigen::MatrixXd::Zero(5, 5);
    REQUIRE((expm(z) - Eigen::MatrixXd::Identity(5, 5)).norm() == 0.0);

    Rng rng(8);
    for (int rep = 0; rep < 20; ++rep) {
        int n = 4 + rng.index(6);
        Eigen::MatrixXd a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a(i, j) = rng.normal();
        Eigen::MatrixXd s = a - a.transpose();
        Eigen::MatrixXd g = expm(s);
        REQUIRE((g.transpose() * g - Eigen::MatrixXd::Identity(n, n)).norm() <= 1e-10);
        REQUIRE((expm(s) * expm(-s) - Eigen::MatrixXd::Identity(n, n)).norm() <= 1e-10);
    }

    // 2x2 rotation: closed form
    Eigen::MatrixXd r(2, 2);
    r << 0.0, -1.3, 1.3, 0.0;
    Eigen::MatrixXd e = expm(r);
    REQUIRE(e(0, 0) == Catch::Approx(std::cos(1.3)).epsilon(1e-12));
    REQUIRE(e(1, 0) == Catch::Approx(std::sin(1.3)).epsilon(1e-12));
}

TEST_CASE("exp_action and deterministic sampling") {
    auto s7 = spin7_basis();
    std::vector<ActionElement> basis;
    for (const auto& m : s7) {
        auto res = solve_center_action(m, octonion_bracket, 8, 7);
        REQUIRE(res.residual <= 1e-9);
        basis.push_back({m, res.a_z});
    }
    Rng r1(42), r2(42);
    auto g1 = sample_group_element(basis, r1);
    auto g2 = sample_group_element(basis, r2);
    REQUIRE((g1.g_v - g2.g_v).norm() == 0.0);
    REQUIRE((g1.g_z - g2.g_z).norm() == 0.0);
    REQUIRE((g1.g_v.transpose() * g1.g_v - Eigen::MatrixXd::Identity(8, 8)).norm() <= 1e-10);
    REQUIRE((g1.g_z.transpose() * g1.g_z - Eigen::MatrixXd::Identity(7, 7)).norm() <= 1e-10);
}

TEST_CASE("solve_center_action: zero map, and non-equivariance witnessed") {
    auto res0 = solve_center_action(Eigen::MatrixXd::Zero(8, 8), octonion_bracket, 8, 7);
    REQUIRE(res0.a_z.norm() <= 1e-12);
    REQUIRE(res0.residual <= 1e-12);

    // a generic skew matrix is not in spin7: residual blows past 1e-3
    Rng rng(9);
    Eigen::MatrixXd a(8, 8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) a(i, j) = rng.normal();
    Eigen::MatrixXd skew = a - a.transpose();
    auto res = solve_center_action(skew, octonion_bracket, 8, 7);
    REQUIRE(res.residual > 1e-3);
}

TEST_CASE("gauss-hermite integrates gaussian moments") {
    auto q = gauss_hermite(40);
    double m0 = 0.0, m2 = 0.0, m10 = 0.0;
    for (size_t i = 0; i < q.nodes.size(); ++i) {
        m0 += q.weights[i];
        m2 += q.weights[i] * q.nodes[i] * q.nodes[i];
        m10 += q.weights[i] * std::pow(q.nodes[i], 10);
    }
    REQUIRE(m0 == Catch::Approx(std::sqrt(M_PI)).epsilon(1e-12));
    REQUIRE(m2 == Catch::Approx(0.5 * std::sqrt(M_PI)).epsilon(1e-12));
    // integral x^10 e^{-x^2} = 945/32 sqrt(pi)
    REQUIRE(m10 == Catch::Approx(945.0 / 32.0 * std::sqrt(M_PI)).epsilon(1e-10));

    auto gl = gauss_legendre01(20);
    double s3 = 0.0;
    for (size_t i = 0; i < gl.nodes.size(); ++i) s3 += gl.weights[i] * std::pow(gl.nodes[i], 3);
    REQUIRE(s3 == Catch::Approx(0.25).epsilon(1e-12));
}
