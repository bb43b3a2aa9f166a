#pragma once

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "nilpair/rational.hpp"

namespace nilpair {

/// Skew-symmetric matrix over a ring; antisymmetry holds by construction
/// (only the setter below writes entries, mirroring with the sign flipped).
template <class T>
class SkewMatrix {
  public:
    explicit SkewMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, T(0)) {}

    int size() const { return n_; }
    const T& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    void set(int i, int j, const T& v) {
        if (i == j) {
            if (!is_zero(v)) throw std::invalid_argument("SkewMatrix: nonzero diagonal");
            return;
        }
        a_[static_cast<size_t>(i) * n_ + j] = v;
        a_[static_cast<size_t>(j) * n_ + i] = -v;
    }

  private:
    int n_;
    std::vector<T> a_;
};

/// Bordered matrix (z|v) = [[z, v], [-v^t, 0]].
template <class T>
SkewMatrix<T> bordered(const SkewMatrix<T>& z, const std::vector<T>& v) {
    int n = z.size();
    if (static_cast<int>(v.size()) != n)
        throw std::invalid_argument("bordered: dimension mismatch");
    SkewMatrix<T> r(n + 1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) r.set(i, j, z.at(i, j));
    for (int i = 0; i < n; ++i) r.set(i, n, v[i]);
    return r;
}

/// Pfaffian by expansion along the lowest remaining index, sub-Pfaffians
/// memoised by index subset (bitmask); exact over exact rings.
template <class T>
T pfaffian(const SkewMatrix<T>& m) {
    int n = m.size();
    if (n % 2 != 0) throw std::invalid_argument("pfaffian: odd dimension");
    if (n == 0) return T(1);
    if (n > 16) throw std::invalid_argument("pfaffian: dimension too large for subset recursion");

    std::unordered_map<uint32_t, T> memo;
    auto rec = [&](auto&& self, uint32_t mask) -> T {
        if (mask == 0) return T(1);
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        int lo = __builtin_ctz(mask);
        uint32_t rest = mask & ~(1u << lo);
        T acc(0);
        int t = 0;
        for (int j = lo + 1; j < n; ++j) {
            if (!(rest & (1u << j))) continue;
            // sign (-1)^t for the t-th remaining index after lo
            const T& entry = m.at(lo, j);
            if (!is_zero(entry)) {
                T sub = self(self, rest & ~(1u << j));
                T term = entry * sub;
                if (t % 2 == 0)
                    acc = acc + term;
                else
                    acc = acc - term;
            }
            ++t;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    uint32_t full = (n == 32) ? 0xffffffffu : ((1u << n) - 1u);
    return rec(rec, full);
}

}  // namespace nilpair
