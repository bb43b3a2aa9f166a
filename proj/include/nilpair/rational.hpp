#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>

namespace nilpair {

using Rational = mpq_class;

/// Gaussian rational a + b*i with exact rational parts. This is the
/// coefficient field of the exact pipeline; the imaginary unit carries the
/// i^{-|alpha|} twist of the modified symmetrisation.
struct GaussianRational {
    Rational re{0};
    Rational im{0};

    GaussianRational() = default;
    GaussianRational(long v) : re(v) {}
    GaussianRational(const Rational& r) : re(r) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }
    static GaussianRational fraction(long num, long den) {
        Rational q(num, den);
        q.canonicalize();
        return {q, Rational(0)};
    }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    /// i^k for any integer k (k may be negative).
    static GaussianRational i_pow(long k) {
        long m = ((k % 4) + 4) % 4;
        switch (m) {
            case 0: return GaussianRational(1);
            case 1: return i();
            case 2: return GaussianRational(-1);
            default: return {Rational(0), Rational(-1)};
        }
    }

    double re_double() const { return re.get_d(); }
    double im_double() const { return im.get_d(); }

    std::string str() const {
        if (im == 0) return re.get_str();
        if (re == 0) return im.get_str() + "*i";
        std::string s = re.get_str();
        if (im > 0) s += "+";
        return s + im.get_str() + "*i";
    }
    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& g) { return os << g.str(); }
};

inline GaussianRational conj(const GaussianRational& g) { return g.conj(); }
inline bool is_zero(const GaussianRational& g) { return g.is_zero(); }
inline double to_double(const GaussianRational& g) { return g.re_double(); }

// Scalar shims so the templated algebra code works over plain doubles too.
inline double conj(double x) { return x; }
inline bool is_zero(double x) { return x == 0.0; }
inline double to_double(double x) { return x; }

}  // namespace nilpair
