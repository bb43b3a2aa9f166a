#include <catch2/catch_amalgamated.hpp>

#include "nilpair/cayley_dickson.hpp"
#include "nilpair/poly.hpp"

using namespace nilpair;

TEST_CASE("polynomial ring basics") {
    auto x = ExactPoly::var(0), y = ExactPoly::var(1);
    auto p = x * x - ExactPoly(2) * x * y + y * y;
    auto q = (x - y) * (x - y);
    REQUIRE(p == q);

    auto d = p.derivative(0);
    auto expect = ExactPoly(2) * (x - y);
    REQUIRE(d == expect);

    std::vector<double> pt = {3.0, 1.0};
    REQUIRE(p.eval(pt).real() == Catch::Approx(4.0));
    REQUIRE(p.eval(pt).imag() == 0.0);
}

TEST_CASE("variable substitution and renaming") {
    auto x = ExactPoly::var(0), z0 = ExactPoly::var(2), z1 = ExactPoly::var(3);
    auto p = x * z0 + z1 * z1 + x;
    // kill z1, rename z0 -> slot 1
    auto r = p.map_vars([](int v) { return v == 3; }, [](int v) { return v == 2 ? 1 : v; });
    auto expect = ExactPoly::var(0) * ExactPoly::var(1) + ExactPoly::var(0);
    REQUIRE(r == expect);
}

TEST_CASE("bidegree detection") {
    auto x = ExactPoly::var(0), y = ExactPoly::var(1), z = ExactPoly::var(2);
    auto p = x * x * z + y * y * z;  // bi-homogeneous (2,1) for split at 2
    auto bd = p.bidegree(2);
    REQUIRE(bd.has_value());
    REQUIRE(bd->first == 2);
    REQUIRE(bd->second == 1);
    auto q = x * z + z;
    REQUIRE(!q.bidegree(2).has_value());
}

TEST_CASE("polynomials serve as composition-algebra coefficients") {
    using CAp = CAElement<ExactPoly>;
    // quaternion with polynomial entries: check norm2((x,y,0,0)) = x^2 + y^2
    CAp q(AlgebraTag::H);
    q[0] = ExactPoly::var(0);
    q[1] = ExactPoly::var(1);
    auto n2 = ca_norm2(q);
    auto expect = ExactPoly::var(0) * ExactPoly::var(0) + ExactPoly::var(1) * ExactPoly::var(1);
    REQUIRE(n2 == expect);

    // i * q has coefficients (-y, x, 0, 0)
    auto iq = ca_mul(CAp::basis(AlgebraTag::H, 1), q);
    REQUIRE(iq[0] == -ExactPoly::var(1));
    REQUIRE(iq[1] == ExactPoly::var(0));
}

TEST_CASE("gaussian rational arithmetic") {
    auto i = GaussianRational::i();
    REQUIRE(i * i == GaussianRational(-1));
    REQUIRE(GaussianRational::i_pow(-1) == -i);
    REQUIRE(GaussianRational::i_pow(-2) == GaussianRational(-1));
    auto h = GaussianRational::fraction(1, 2);
    REQUIRE(h + h == GaussianRational(1));
    auto z = GaussianRational(Rational(3), Rational(4));
    REQUIRE(z * z.conj() == GaussianRational(25));
    REQUIRE((z / z) == GaussianRational(1));
}
