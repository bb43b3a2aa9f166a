#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace nilpair {

/// Deterministic RNG: mt19937_64 plus an explicit Box--Muller transform, so a
/// seed pins the sampled stream independent of the standard library's
/// distribution internals.
class Rng {
  public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    double uniform() {
        // 53-bit mantissa uniform in [0,1)
        return (gen_() >> 11) * (1.0 / 9007199254740992.0);
    }
    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0, u2 = 0.0;
        do {
            u1 = uniform();
        } while (u1 <= 1e-300);
        u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(2.0 * M_PI * u2);
        have_spare_ = true;
        return r * std::cos(2.0 * M_PI * u2);
    }

    Eigen::VectorXd normal_vector(int n) {
        Eigen::VectorXd v(n);
        for (int i = 0; i < n; ++i) v(i) = normal();
        return v;
    }

    uint64_t raw() { return gen_(); }
    int index(int n) { return static_cast<int>(raw() % static_cast<uint64_t>(n)); }

  private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Matrix exponential, scaling-and-squaring with diagonal Pade approximants,
/// degree chosen by the 1-norm (Higham 2005 constants).
inline Eigen::MatrixXd expm(const Eigen::MatrixXd& a) {
    const int n = static_cast<int>(a.rows());
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
    double nrm = a.cwiseAbs().colwise().sum().maxCoeff();

    auto pade = [&](const Eigen::MatrixXd& m, const std::vector<double>& b) {
        Eigen::MatrixXd m2 = m * m;
        Eigen::MatrixXd u = b[1] * id, v = b[0] * id;
        Eigen::MatrixXd p = id;
        for (size_t k = 2; k < b.size(); k += 2) {
            p = p * m2;
            v += b[k] * p;
            if (k + 1 < b.size()) u += b[k + 1] * p;
        }
        u = m * u;
        return std::pair<Eigen::MatrixXd, Eigen::MatrixXd>(u, v);
    };

    std::vector<double> b;
    double theta13 = 5.371920351148152;
    int squarings = 0;
    Eigen::MatrixXd m = a;
    if (nrm <= 1.495585217958292e-2) {
        b = {120, 60, 12, 1};
    } else if (nrm <= 2.539398330063230e-1) {
        b = {30240, 15120, 3360, 420, 30, 1};
    } else if (nrm <= 9.504178996162932e-1) {
        b = {17297280, 8648640, 1995840, 277200, 25200, 1512, 56, 1};
    } else if (nrm <= 2.097847961257068) {
        b = {17643225600.0, 8821612800.0, 2075673600.0, 302702400.0, 30270240.0,
             2162160.0,     110880.0,     3960.0,       90.0,        1.0};
    } else {
        b = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
             129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
             1323241920.0,        40840800.0,          960960.0,           16380.0,
             182.0,               1.0};
        if (nrm > theta13) {
            squarings = std::max(0, static_cast<int>(std::ceil(std::log2(nrm / theta13))));
            m = a / std::pow(2.0, squarings);
        }
    }
    Eigen::MatrixXd u, v;
    if (b.size() == 14) {
        // degree 13 with the m6-splitting
        Eigen::MatrixXd m2 = m * m, m4 = m2 * m2, m6 = m4 * m2;
        u = m * (m6 * (b[13] * m6 + b[11] * m4 + b[9] * m2) + b[7] * m6 + b[5] * m4 + b[3] * m2 +
                 b[1] * id);
        v = m6 * (b[12] * m6 + b[10] * m4 + b[8] * m2) + b[6] * m6 + b[4] * m4 + b[2] * m2 +
            b[0] * id;
    } else {
        std::tie(u, v) = pade(m, b);
    }
    Eigen::MatrixXd r = (v - u).partialPivLu().solve(v + u);
    for (int k = 0; k < squarings; ++k) r = r * r;
    return r;
}

/// Numeric rank with a relative singular-value threshold.
inline int numeric_rank(const Eigen::MatrixXd& m, double rel_tol = 1e-8) {
    if (m.size() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& s = svd.singularValues();
    if (s.size() == 0 || s(0) == 0.0) return 0;
    int r = 0;
    for (int i = 0; i < s.size(); ++i)
        if (s(i) > rel_tol * s(0)) ++r;
    return r;
}

/// Orthonormal basis of the null space (columns), relative threshold.
inline Eigen::MatrixXd null_space(const Eigen::MatrixXd& m, double rel_tol = 1e-8) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    double smax = s.size() ? s(0) : 0.0;
    int rank = 0;
    for (int i = 0; i < s.size(); ++i)
        if (smax > 0 && s(i) > rel_tol * smax) ++rank;
    return svd.matrixV().rightCols(m.cols() - rank);
}

struct Quadrature {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss--Hermite rule: sum w_i f(x_i) ~ integral f(x) exp(-x^2) dx,
/// by Golub--Welsch on the Jacobi matrix.
inline Quadrature gauss_hermite(int order) {
    if (order < 1) throw std::invalid_argument("gauss_hermite: order must be >= 1");
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(order, order);
    for (int k = 1; k < order; ++k) {
        double b = std::sqrt(k / 2.0);
        j(k - 1, k) = b;
        j(k, k - 1) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(j);
    Quadrature q;
    q.nodes.resize(order);
    q.weights.resize(order);
    const double mu0 = std::sqrt(M_PI);
    for (int i = 0; i < order; ++i) {
        q.nodes[i] = es.eigenvalues()(i);
        double v0 = es.eigenvectors()(0, i);
        q.weights[i] = mu0 * v0 * v0;
    }
    return q;
}

/// Gauss--Legendre rule on [0, 1].
inline Quadrature gauss_legendre01(int order) {
    if (order < 1) throw std::invalid_argument("gauss_legendre01: order must be >= 1");
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(order, order);
    for (int k = 1; k < order; ++k) {
        double b = k / std::sqrt(4.0 * k * k - 1.0);
        j(k - 1, k) = b;
        j(k, k - 1) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(j);
    Quadrature q;
    q.nodes.resize(order);
    q.weights.resize(order);
    for (int i = 0; i < order; ++i) {
        q.nodes[i] = 0.5 * (es.eigenvalues()(i) + 1.0);
        double v0 = es.eigenvectors()(0, i);
        q.weights[i] = v0 * v0;  // mu0 = 2, scaled by the interval map 1/2
    }
    return q;
}

}  // namespace nilpair
