#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "nilpair/actions.hpp"
#include "nilpair/poly.hpp"

namespace nilpair {

/// One Hilbert-basis element: a name for reports and its bi-degree
/// (degree in v, degree in z).  Values come from the case evaluators.
struct HilbertEntry {
    std::string name;
    int deg_v = 0;
    int deg_z = 0;
};

using ExactBracketFn =
    std::function<std::vector<ExactPoly>(std::span<const ExactPoly>, std::span<const ExactPoly>)>;

/// One pair (N, K) as an executable object.  Variable convention for the
/// exact pipeline: polynomial variables 0..dim_v-1 are the v-coordinates,
/// dim_v..dim_v+dim_z-1 the z-coordinates, all with respect to the fixed
/// orthonormal frames recorded in `notes`.
struct CaseDescriptor {
    std::string id;
    std::string family;   // "table1" or "appendix"
    int number = 0;       // line / case number, 1..12
    std::string variant;  // "", "so", "o", "u", "su", "sp", "u1sp", "mod", "u2", "su2"
    int n = 0;            // parameter (0 when not parametrized)
    int dim_v = 0;
    int dim_z = 0;
    int block = 0;  // 1..3 for Table-1 lines, 0 for appendix cases
    int radical_dim = 0;  // block 3 only

    std::vector<HilbertEntry> basis;
    std::vector<ActionElement> generators;
    std::vector<GroupElement> discrete_elements;

    std::function<std::vector<double>(const Eigen::VectorXd&, const Eigen::VectorXd&)> hilbert_num;
    std::function<std::vector<ExactPoly>()> hilbert_exact;  // null when float-only
    BracketFn bracket_num;                                  // null when no bracket is stored
    ExactBracketFn bracket_exact;

    std::string notes;

    int d() const { return static_cast<int>(basis.size()); }
    int dim_n() const { return dim_v + dim_z; }
    bool has_bracket() const { return static_cast<bool>(bracket_num); }
    bool has_exact() const { return static_cast<bool>(hilbert_exact); }

    std::vector<double> eval_hilbert(const Eigen::VectorXd& v, const Eigen::VectorXd& z) const {
        if (v.size() != dim_v || z.size() != dim_z)
            throw std::invalid_argument("eval_hilbert: dimension mismatch for case " + id);
        return hilbert_num(v, z);
    }
};

/// Quotient pair data: ζ0, the v-splitting where applicable, and the Hilbert
/// basis rho' on n' = v + R ζ0 with the declared parent pairing.
struct RhoPrimeEntry {
    std::string name;
    int parent_index;  // index into the parent's basis
    std::function<double(const Eigen::VectorXd&, double)> eval;  // (v, t)
};

struct QuotientDescriptor {
    int line = 0;
    int zeta0_index = 0;  // ζ0 is the unit coordinate vector at this z-index
    int v2_dim = 0;       // dim of the v2-block (block 3) / 0 otherwise
    std::vector<RhoPrimeEntry> rho_v;

    Eigen::VectorXd zeta0(int dim_z) const {
        Eigen::VectorXd z = Eigen::VectorXd::Zero(dim_z);
        z(zeta0_index) = 1.0;
        return z;
    }
};

}  // namespace nilpair
