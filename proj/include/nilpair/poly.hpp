#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nilpair/rational.hpp"

namespace nilpair {

/// Sparse exponent vector: sorted (variable, exponent) pairs, exponent > 0.
/// Also reused as the derivative multi-index of normal-ordered operators.
struct Mono {
    std::vector<std::pair<uint16_t, uint16_t>> e;

    static Mono one() { return {}; }
    static Mono var(int j, int p = 1) {
        Mono m;
        if (p > 0) m.e.push_back({static_cast<uint16_t>(j), static_cast<uint16_t>(p)});
        return m;
    }

    int exponent(int j) const {
        for (auto& [v, p] : e)
            if (v == j) return p;
        return 0;
    }
    int total_degree() const {
        int d = 0;
        for (auto& [v, p] : e) d += p;
        return d;
    }
    /// degree counting only variables with lo <= v < hi
    int degree_range(int lo, int hi) const {
        int d = 0;
        for (auto& [v, p] : e)
            if (v >= lo && v < hi) d += p;
        return d;
    }
    bool is_one() const { return e.empty(); }

    friend Mono operator*(const Mono& a, const Mono& b) {
        Mono r;
        r.e.reserve(a.e.size() + b.e.size());
        size_t i = 0, j = 0;
        while (i < a.e.size() || j < b.e.size()) {
            if (j == b.e.size() || (i < a.e.size() && a.e[i].first < b.e[j].first))
                r.e.push_back(a.e[i++]);
            else if (i == a.e.size() || b.e[j].first < a.e[i].first)
                r.e.push_back(b.e[j++]);
            else {
                r.e.push_back({a.e[i].first, static_cast<uint16_t>(a.e[i].second + b.e[j].second)});
                ++i, ++j;
            }
        }
        return r;
    }
    friend bool operator<(const Mono& a, const Mono& b) { return a.e < b.e; }
    friend bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }
};

/// Multivariate polynomial with coefficients in C over a global variable
/// universe.  C = GaussianRational gives the exact pipeline; C = double or
/// std::complex<double> the numeric one.
template <class C>
class Poly {
  public:
    std::map<Mono, C> terms;

    Poly() = default;
    Poly(long v) {
        if (v != 0) terms[Mono::one()] = C(v);
    }
    explicit Poly(const C& c) {
        if (!is_zero(c)) terms[Mono::one()] = c;
    }

    static Poly var(int j) {
        Poly p;
        p.terms[Mono::var(j)] = C(1);
        return p;
    }
    static Poly monomial(Mono m, C c) {
        Poly p;
        if (!is_zero(c)) p.terms[std::move(m)] = std::move(c);
        return p;
    }

    bool is_zero_poly() const { return terms.empty(); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r = a;
        for (auto& [m, c] : b.terms) r.add_term(m, c);
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r = a;
        for (auto& [m, c] : b.terms) r.add_term(m, -c);
        return r;
    }
    friend Poly operator-(const Poly& a) {
        Poly r;
        for (auto& [m, c] : a.terms) r.terms[m] = -c;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (auto& [ma, ca] : a.terms)
            for (auto& [mb, cb] : b.terms) r.add_term(ma * mb, ca * cb);
        return r;
    }
    friend Poly operator*(const C& s, const Poly& a) {
        Poly r;
        if (is_zero(s)) return r;
        for (auto& [m, c] : a.terms) r.add_term(m, s * c);
        return r;
    }
    Poly& operator+=(const Poly& o) {
        for (auto& [m, c] : o.terms) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (auto& [m, c] : o.terms) add_term(m, -c);
        return *this;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms == b.terms; }

    void add_term(const Mono& m, const C& c) {
        if (is_zero(c)) return;
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(m, c);
        } else {
            it->second = it->second + c;
            if (is_zero(it->second)) terms.erase(it);
        }
    }

    Poly derivative(int j) const {
        Poly r;
        for (auto& [m, c] : terms) {
            int p = m.exponent(j);
            if (p == 0) continue;
            Mono d;
            for (auto& [v, q] : m.e) {
                if (v == j) {
                    if (q > 1) d.e.push_back({v, static_cast<uint16_t>(q - 1)});
                } else {
                    d.e.push_back({v, q});
                }
            }
            r.add_term(d, C(p) * c);
        }
        return r;
    }

    Poly conj_coeffs() const {
        Poly r;
        for (auto& [m, c] : terms) r.terms[m] = conj(c);
        return r;
    }

    /// substitute x_j = 0 for every j with kill(j) true, and rename the
    /// surviving variables via rename(j).
    Poly map_vars(const std::function<bool(int)>& kill, const std::function<int(int)>& rename) const {
        Poly r;
        for (auto& [m, c] : terms) {
            bool dead = false;
            Mono n;
            for (auto& [v, p] : m.e) {
                if (kill(v)) {
                    dead = true;
                    break;
                }
                n.e.push_back({static_cast<uint16_t>(rename(v)), p});
            }
            if (dead) continue;
            std::sort(n.e.begin(), n.e.end());
            r.add_term(n, c);
        }
        return r;
    }

    std::complex<double> eval(std::span<const double> x) const {
        std::complex<double> acc = 0.0;
        for (auto& [m, c] : terms) {
            double mv = 1.0;
            for (auto& [v, p] : m.e)
                for (int k = 0; k < p; ++k) mv *= x[v];
            acc += coeff_c(c) * mv;
        }
        return acc;
    }

    /// Poly is itself usable as a coefficient-ring scalar (see CAElement).
    int max_var() const {
        int mv = -1;
        for (auto& [m, c] : terms)
            if (!m.e.empty()) mv = std::max(mv, static_cast<int>(m.e.back().first));
        return mv;
    }

    std::optional<std::pair<int, int>> bidegree(int split) const {
        std::optional<std::pair<int, int>> bd;
        for (auto& [m, c] : terms) {
            int a = m.degree_range(0, split);
            int b = m.degree_range(split, 1 << 16);
            if (!bd)
                bd = {a, b};
            else if (bd->first != a || bd->second != b)
                return std::nullopt;
        }
        return bd;
    }

    std::string str(const std::function<std::string(int)>& vname) const {
        if (terms.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [m, c] : terms) {
            if (!first) os << " + ";
            first = false;
            os << "(" << coeff_str(c) << ")";
            for (auto& [v, p] : m.e) {
                os << "*" << vname(v);
                if (p > 1) os << "^" << p;
            }
        }
        return os.str();
    }

  private:
    static std::complex<double> coeff_c(const GaussianRational& g) {
        return {g.re_double(), g.im_double()};
    }
    static std::complex<double> coeff_c(double d) { return d; }
    static std::complex<double> coeff_c(const std::complex<double>& z) { return z; }
    static std::string coeff_str(const GaussianRational& g) { return g.str(); }
    static std::string coeff_str(double d) { return std::to_string(d); }
    static std::string coeff_str(const std::complex<double>& z) {
        return std::to_string(z.real()) + "+" + std::to_string(z.imag()) + "i";
    }
};

using ExactPoly = Poly<GaussianRational>;

template <class C>
bool is_zero(const Poly<C>& p) {
    return p.is_zero_poly();
}

// ExactPoly works as a CAElement coefficient ring; algebra conjugation never
// touches polynomial variables (coordinates are real).
template <class C>
Poly<C> conj(const Poly<C>& p) {
    return p.conj_coeffs();
}

}  // namespace nilpair
