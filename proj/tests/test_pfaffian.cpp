#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Dense>

#include "nilpair/numeric.hpp"
#include "nilpair/pfaffian.hpp"
#include "nilpair/rational.hpp"

using namespace nilpair;

namespace {

SkewMatrix<double> random_skew(int n, Rng& rng) {
    SkewMatrix<double> m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) m.set(i, j, rng.normal());
    return m;
}

Eigen::MatrixXd to_eigen(const SkewMatrix<double>& m) {
    Eigen::MatrixXd e(m.size(), m.size());
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) e(i, j) = m.at(i, j);
    return e;
}

Eigen::MatrixXd random_orthogonal(int n, Rng& rng) {
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = rng.normal();
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
    Eigen::MatrixXd q = qr.householderQ();
    Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int k = 0; k < n; ++k)
        if (r(k, k) < 0) q.col(k) *= -1.0;
    return q;
}

}  // namespace

TEST_CASE("2x2 and block-diagonal Pfaffians") {
    SkewMatrix<GaussianRational> m(2);
    m.set(0, 1, GaussianRational(5));
    REQUIRE(pfaffian(m) == GaussianRational(5));

    SkewMatrix<GaussianRational> b(4);
    b.set(0, 1, GaussianRational(1));
    b.set(2, 3, GaussianRational(1));
    REQUIRE(pfaffian(b) == GaussianRational(1));
}

TEST_CASE("odd dimension is rejected") {
    SkewMatrix<double> m(3);
    REQUIRE_THROWS_AS(pfaffian(m), std::invalid_argument);
}

TEST_CASE("Pf(M)^2 = det(M) for even sizes up to 10") {
    Rng rng(101);
    for (int n : {2, 4, 6, 8, 10}) {
        for (int rep = 0; rep < 20; ++rep) {
            auto m = random_skew(n, rng);
            double pf = pfaffian(m);
            double det = to_eigen(m).determinant();
            REQUIRE(std::abs(pf * pf - det) <= 1e-8 * (1.0 + std::abs(det)));
        }
    }
}

TEST_CASE("Pf(g M g^t) = det(g) Pf(M) for 50 random orthogonal g") {
    Rng rng(103);
    for (int rep = 0; rep < 50; ++rep) {
        int n = 6;
        auto m = random_skew(n, rng);
        Eigen::MatrixXd g = random_orthogonal(n, rng);
        if (rep % 2 == 1) g.col(0) *= -1.0;  // hit both determinant signs
        Eigen::MatrixXd conj = g * to_eigen(m) * g.transpose();
        SkewMatrix<double> mc(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) mc.set(i, j, 0.5 * (conj(i, j) - conj(j, i)));
        double lhs = pfaffian(mc);
        double rhs = g.determinant() * pfaffian(m);
        REQUIRE(std::abs(lhs - rhs) <= 1e-8 * (1.0 + std::abs(rhs)));
    }
}

TEST_CASE("bordered matrix construction and parity gate") {
    SkewMatrix<GaussianRational> z0(2);
    std::vector<GaussianRational> v0(2, GaussianRational(0));
    auto b0 = bordered(z0, v0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) REQUIRE(b0.at(i, j) == GaussianRational(0));

    // n = 2: bordered matrix is 3x3, Pfaffian rejected; n = 3 analogue accepted
    SkewMatrix<GaussianRational> z2(2);
    z2.set(0, 1, GaussianRational(3));
    auto b2 = bordered(z2, {GaussianRational(1), GaussianRational(2)});
    REQUIRE_THROWS_AS(pfaffian(b2), std::invalid_argument);

    SkewMatrix<GaussianRational> z3(3);
    z3.set(0, 1, GaussianRational(1));
    z3.set(0, 2, GaussianRational(2));
    z3.set(1, 2, GaussianRational(4));
    auto b3 = bordered(z3, {GaussianRational(5), GaussianRational(6), GaussianRational(7)});
    // Pf[[0,z01,z02,v0],[.,0,z12,v1],[.,.,0,v2],[.,.,.,0]]
    //  = z01*v2 - z02*v1 + z12*v0
    REQUIRE(pfaffian(b3) == GaussianRational(1 * 7 - 2 * 6 + 4 * 5));

    std::vector<GaussianRational> wrong(4, GaussianRational(0));
    REQUIRE_THROWS_AS(bordered(z3, wrong), std::invalid_argument);
}

TEST_CASE("exact Pfaffian over Gaussian rationals matches square root of det") {
    // 4x4 complex-entry skew: Pf = a01 a23 - a02 a13 + a03 a12
    SkewMatrix<GaussianRational> m(4);
    auto g = [](long re, long im) { return GaussianRational(Rational(re), Rational(im)); };
    m.set(0, 1, g(1, 2));
    m.set(0, 2, g(0, 1));
    m.set(0, 3, g(3, -1));
    m.set(1, 2, g(-2, 1));
    m.set(1, 3, g(1, 1));
    m.set(2, 3, g(0, 5));
    GaussianRational expect = g(1, 2) * g(0, 5) - g(0, 1) * g(1, 1) + g(3, -1) * g(-2, 1);
    REQUIRE(pfaffian(m) == expect);
}
