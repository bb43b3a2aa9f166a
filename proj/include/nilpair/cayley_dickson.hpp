#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

#include <Eigen/Dense>

#include "nilpair/rational.hpp"

namespace nilpair {

enum class AlgebraTag : int { R = 1, C = 2, H = 4, O = 8 };

constexpr int dim_of(AlgebraTag t) { return static_cast<int>(t); }

namespace detail {

/// Basis product table of the dimension-8 Cayley--Dickson algebra with the
/// convention (a,b)(c,d) = (ac - conj(d)b, da + b conj(c)).  Products of basis
/// elements are +/- another basis element; the subalgebras spanned by the
/// first 1/2/4 units are R, C, H.
struct CDTable {
    std::array<std::array<int8_t, 8>, 8> idx{};
    std::array<std::array<int8_t, 8>, 8> sgn{};

    CDTable() {
        using Vec = std::array<int, 8>;
        // recursive CD product of integer-coefficient vectors of length n
        auto mul = [](auto&& self, const int* x, const int* y, int* out, int n) -> void {
            if (n == 1) {
                out[0] = x[0] * y[0];
                return;
            }
            int h = n / 2;
            const int *a = x, *b = x + h, *c = y, *d = y + h;
            std::array<int, 8> t1{}, t2{}, cc{}, dc{};
            for (int k = 0; k < h; ++k) {
                cc[k] = (k == 0) ? c[k] : -c[k];  // conj(c)
                dc[k] = (k == 0) ? d[k] : -d[k];  // conj(d)
            }
            // first half: a*c - conj(d)*b
            self(self, a, c, out, h);
            self(self, dc.data(), b, t1.data(), h);
            for (int k = 0; k < h; ++k) out[k] -= t1[k];
            // second half: d*a + b*conj(c)
            self(self, d, a, out + h, h);
            self(self, b, cc.data(), t2.data(), h);
            for (int k = 0; k < h; ++k) out[k + h] += t2[k];
        };
        for (int a = 0; a < 8; ++a) {
            for (int b = 0; b < 8; ++b) {
                Vec x{}, y{}, z{};
                x[a] = 1;
                y[b] = 1;
                mul(mul, x.data(), y.data(), z.data(), 8);
                for (int k = 0; k < 8; ++k) {
                    if (z[k] != 0) {
                        idx[a][b] = static_cast<int8_t>(k);
                        sgn[a][b] = static_cast<int8_t>(z[k]);
                    }
                }
            }
        }
    }
};

inline const CDTable& cd_table() {
    static const CDTable t;
    return t;
}

}  // namespace detail

/// Element of R, C, H or O over a commutative coefficient ring S.  The same
/// formulas evaluate numerically (S = double) and symbolically (S = Poly).
template <class S>
class CAElement {
  public:
    AlgebraTag tag;

    explicit CAElement(AlgebraTag t = AlgebraTag::R) : tag(t) {
        for (auto& c : coeffs_) c = S(0);
    }

    int dim() const { return dim_of(tag); }

    const S& operator[](int k) const { return coeffs_[k]; }
    S& operator[](int k) { return coeffs_[k]; }

    static CAElement unit(AlgebraTag t) {
        CAElement e(t);
        e.coeffs_[0] = S(1);
        return e;
    }
    /// k-th basis element, 0 = 1, k >= 1 imaginary.
    static CAElement basis(AlgebraTag t, int k) {
        CAElement e(t);
        e.coeffs_[k] = S(1);
        return e;
    }

    friend CAElement operator+(const CAElement& x, const CAElement& y) {
        check(x, y);
        CAElement r(x.tag);
        for (int k = 0; k < x.dim(); ++k) r.coeffs_[k] = x.coeffs_[k] + y.coeffs_[k];
        return r;
    }
    friend CAElement operator-(const CAElement& x, const CAElement& y) {
        check(x, y);
        CAElement r(x.tag);
        for (int k = 0; k < x.dim(); ++k) r.coeffs_[k] = x.coeffs_[k] - y.coeffs_[k];
        return r;
    }
    friend CAElement operator-(const CAElement& x) {
        CAElement r(x.tag);
        for (int k = 0; k < x.dim(); ++k) r.coeffs_[k] = -x.coeffs_[k];
        return r;
    }
    friend CAElement operator*(const S& s, const CAElement& x) {
        CAElement r(x.tag);
        for (int k = 0; k < x.dim(); ++k) r.coeffs_[k] = s * x.coeffs_[k];
        return r;
    }
    friend CAElement operator*(const CAElement& x, const CAElement& y) { return ca_mul(x, y); }
    CAElement& operator+=(const CAElement& o) { return *this = *this + o; }
    CAElement& operator-=(const CAElement& o) { return *this = *this - o; }

  private:
    std::array<S, 8> coeffs_;

    static void check(const CAElement& x, const CAElement& y) {
        if (x.tag != y.tag) throw std::invalid_argument("CAElement: mismatched algebra tags");
    }

    template <class T>
    friend CAElement<T> ca_mul(const CAElement<T>&, const CAElement<T>&);
};

template <class S>
CAElement<S> ca_mul(const CAElement<S>& x, const CAElement<S>& y) {
    if (x.tag != y.tag) throw std::invalid_argument("ca_mul: mismatched algebra tags");
    const auto& t = detail::cd_table();
    CAElement<S> r(x.tag);
    int n = x.dim();
    for (int a = 0; a < n; ++a) {
        if (is_zero(x.coeffs_[a])) continue;
        for (int b = 0; b < n; ++b) {
            if (is_zero(y.coeffs_[b])) continue;
            S p = x.coeffs_[a] * y.coeffs_[b];
            if (t.sgn[a][b] < 0)
                r.coeffs_[t.idx[a][b]] = r.coeffs_[t.idx[a][b]] - p;
            else
                r.coeffs_[t.idx[a][b]] = r.coeffs_[t.idx[a][b]] + p;
        }
    }
    return r;
}

template <class S>
CAElement<S> ca_conj(const CAElement<S>& x) {
    CAElement<S> r(x.tag);
    r[0] = x[0];
    for (int k = 1; k < x.dim(); ++k) r[k] = -x[k];
    return r;
}

template <class S>
S ca_re(const CAElement<S>& x) {
    return x[0];
}

template <class S>
CAElement<S> ca_im(const CAElement<S>& x) {
    CAElement<S> r = x;
    r[0] = S(0);
    return r;
}

/// |x|^2; equal to re(x conj(x)) in every Cayley--Dickson algebra up to O.
template <class S>
S ca_norm2(const CAElement<S>& x) {
    S r(0);
    for (int k = 0; k < x.dim(); ++k) r = r + x[k] * x[k];
    return r;
}

/// Real matrix M with M vec(x) = vec(a x).
inline Eigen::MatrixXd left_mult_matrix(const CAElement<double>& a) {
    int n = a.dim();
    Eigen::MatrixXd m(n, n);
    for (int j = 0; j < n; ++j) {
        auto col = ca_mul(a, CAElement<double>::basis(a.tag, j));
        for (int i = 0; i < n; ++i) m(i, j) = col[i];
    }
    return m;
}

/// Real matrix M with M vec(x) = vec(x a).
inline Eigen::MatrixXd right_mult_matrix(const CAElement<double>& a) {
    int n = a.dim();
    Eigen::MatrixXd m(n, n);
    for (int j = 0; j < n; ++j) {
        auto col = ca_mul(CAElement<double>::basis(a.tag, j), a);
        for (int i = 0; i < n; ++i) m(i, j) = col[i];
    }
    return m;
}

}  // namespace nilpair
