#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "nilpair/cayley_dickson.hpp"

namespace nilpair {

/// Dense matrix over an arbitrary ring element type (octonion entries never
/// appear in matrix products; quaternion entries do, so no associativity is
/// assumed beyond what the formulas use).
template <class T>
struct Mat {
    int r = 0, c = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(int rr, int cc, const T& fill) : r(rr), c(cc), a(static_cast<size_t>(rr) * cc, fill) {}

    T& operator()(int i, int j) { return a[static_cast<size_t>(i) * c + j]; }
    const T& operator()(int i, int j) const { return a[static_cast<size_t>(i) * c + j]; }

    friend Mat operator+(const Mat& x, const Mat& y) {
        Mat z = x;
        for (size_t k = 0; k < z.a.size(); ++k) z.a[k] = z.a[k] + y.a[k];
        return z;
    }
    friend Mat operator-(const Mat& x, const Mat& y) {
        Mat z = x;
        for (size_t k = 0; k < z.a.size(); ++k) z.a[k] = z.a[k] - y.a[k];
        return z;
    }
    friend Mat operator*(const Mat& x, const Mat& y) {
        if (x.c != y.r) throw std::invalid_argument("Mat: dimension mismatch");
        Mat z(x.r, y.c, x.a.empty() ? T() : zero_like(x.a[0]));
        for (int i = 0; i < x.r; ++i)
            for (int j = 0; j < y.c; ++j) {
                T acc = x(i, 0) * y(0, j);
                for (int k = 1; k < x.c; ++k) acc = acc + x(i, k) * y(k, j);
                z(i, j) = acc;
            }
        return z;
    }

    T trace() const {
        T acc = (*this)(0, 0);
        for (int i = 1; i < r; ++i) acc = acc + (*this)(i, i);
        return acc;
    }
};

template <class S>
CAElement<S> zero_like(const CAElement<S>& x) {
    return CAElement<S>(x.tag);
}
inline double zero_like(double) { return 0.0; }

template <class S>
Mat<CAElement<S>> ca_adjoint(const Mat<CAElement<S>>& m) {
    Mat<CAElement<S>> t(m.c, m.r, zero_like(m(0, 0)));
    for (int i = 0; i < m.r; ++i)
        for (int j = 0; j < m.c; ++j) t(j, i) = ca_conj(m(i, j));
    return t;
}

template <class S>
Mat<CAElement<S>> ca_transpose(const Mat<CAElement<S>>& m) {
    Mat<CAElement<S>> t(m.c, m.r, zero_like(m(0, 0)));
    for (int i = 0; i < m.r; ++i)
        for (int j = 0; j < m.c; ++j) t(j, i) = m(i, j);
    return t;
}

/// n algebra elements from k*n interleaved real coordinates.
template <class S>
std::vector<CAElement<S>> split_coords(std::span<const S> x, AlgebraTag t) {
    int k = dim_of(t);
    int n = static_cast<int>(x.size()) / k;
    std::vector<CAElement<S>> v(n, CAElement<S>(t));
    for (int j = 0; j < n; ++j)
        for (int s = 0; s < k; ++s) v[j][s] = x[j * k + s];
    return v;
}

/// rows x cols matrix over the algebra from interleaved row-major coordinates.
template <class S>
Mat<CAElement<S>> mat_from_coords(std::span<const S> x, int rows, int cols, AlgebraTag t) {
    int k = dim_of(t);
    Mat<CAElement<S>> m(rows, cols, CAElement<S>(t));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            for (int s = 0; s < k; ++s) m(i, j)[s] = x[(i * cols + j) * k + s];
    return m;
}

}  // namespace nilpair
