#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qma/element.hpp"
#include "qma/generators.hpp"
#include "qma/mpoly.hpp"
#include "qma/rewrite.hpp"

namespace qma {

/// Polynomial in the commuting coordinates y_{ij}, 1 <= i,j <= n, of the
/// quasi-classical limit. Thin wrapper around MPoly fixing the variable
/// layout (row-major) and the y[i,j] text form.
class CPoly {
   public:
    explicit CPoly(int n) : n_(check_size(n)), poly_(n * n) {}
    CPoly(int n, MPoly poly) : n_(check_size(n)), poly_(std::move(poly)) {
        if (poly_.nvars() != n_ * n_) throw std::invalid_argument("CPoly: variable count mismatch");
    }

    static CPoly zero(int n) { return CPoly(n); }
    static CPoly constant(int n, const Rational& c) { return CPoly(n, MPoly::constant(n * n, c)); }
    static CPoly one(int n) { return constant(n, Rational(1)); }

    static CPoly generator(int n, int i, int j) {
        return CPoly(n, MPoly::variable(n * n, var_index(n, i, j)));
    }

    static int var_index(int n, int i, int j) {
        if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("CPoly: generator index out of range");
        return (i - 1) * n + (j - 1);
    }

    int n() const { return n_; }
    const MPoly& poly() const { return poly_; }
    bool is_zero() const { return poly_.is_zero(); }
    std::size_t term_count() const { return poly_.term_count(); }
    int total_degree() const { return poly_.total_degree(); }

    friend CPoly operator+(const CPoly& a, const CPoly& b) { return CPoly(a.match(b), a.poly_ + b.poly_); }
    friend CPoly operator-(const CPoly& a, const CPoly& b) { return CPoly(a.match(b), a.poly_ - b.poly_); }
    friend CPoly operator*(const CPoly& a, const CPoly& b) { return CPoly(a.match(b), a.poly_ * b.poly_); }
    CPoly operator-() const { return CPoly(n_, -poly_); }
    CPoly scaled(const Rational& c) const { return CPoly(n_, poly_.scaled(c)); }

    CPoly& operator+=(const CPoly& rhs) {
        *this = *this + rhs;
        return *this;
    }
    CPoly& operator-=(const CPoly& rhs) {
        *this = *this - rhs;
        return *this;
    }
    CPoly& operator*=(const CPoly& rhs) {
        *this = *this * rhs;
        return *this;
    }

    CPoly derivative(int i, int j) const { return CPoly(n_, poly_.derivative(var_index(n_, i, j))); }

    friend bool operator==(const CPoly& a, const CPoly& b) { return a.n_ == b.n_ && a.poly_ == b.poly_; }

    std::string to_string() const {
        const int n = n_;
        return poly_.to_string([n](int v) {
            return "y[" + std::to_string(v / n + 1) + "," + std::to_string(v % n + 1) + "]";
        });
    }

   private:
    int check_size(int n) const {
        if (n < 1 || n > kMaxSize) throw std::invalid_argument("CPoly: bad size");
        return n;
    }
    int match(const CPoly& rhs) const {
        if (n_ != rhs.n_) throw std::invalid_argument("CPoly: size mismatch");
        return n_;
    }

    int n_;
    MPoly poly_;
};

/// {y_ij, y_kl} = (theta(i,k) + theta(j,l)) y_il y_kj.
inline CPoly pbracket_gen(int n, int i, int j, int k, int l) {
    const int coeff = theta(i, k) + theta(j, l);
    if (coeff == 0) return CPoly::zero(n);
    return (CPoly::generator(n, i, l) * CPoly::generator(n, k, j)).scaled(Rational(coeff));
}

/// Poisson bracket extended to polynomials as the biderivation
/// {f,g} = sum over variable pairs of df/dy_ij dg/dy_kl {y_ij, y_kl}.
inline CPoly pbracket(const CPoly& f, const CPoly& g) {
    if (f.n() != g.n()) throw std::invalid_argument("pbracket: size mismatch");
    const int n = f.n();
    std::vector<CPoly> df, dg;
    df.reserve(static_cast<std::size_t>(n) * n);
    dg.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            df.push_back(f.derivative(i, j));
            dg.push_back(g.derivative(i, j));
        }
    CPoly acc = CPoly::zero(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const CPoly& fij = df[static_cast<std::size_t>(CPoly::var_index(n, i, j))];
            if (fij.is_zero()) continue;
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l) {
                    if (theta(i, k) + theta(j, l) == 0) continue;
                    const CPoly& gkl = dg[static_cast<std::size_t>(CPoly::var_index(n, k, l))];
                    if (gkl.is_zero()) continue;
                    acc += fij * gkl * pbracket_gen(n, i, j, k, l);
                }
        }
    return acc;
}

/// Tr(Y^k) for the generic matrix Y of commuting coordinates, with the
/// ordinary associative matrix power.
inline CPoly classical_trace_power(int n, int k) {
    if (k < 1) throw std::invalid_argument("classical_trace_power: k must be >= 1");
    std::vector<CPoly> power;  // current power, row-major
    std::vector<CPoly> y;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) y.push_back(CPoly::generator(n, i, j));
    power = y;
    auto idx = [n](int i, int j) { return static_cast<std::size_t>((i - 1) * n + (j - 1)); };
    for (int step = 1; step < k; ++step) {
        std::vector<CPoly> next(static_cast<std::size_t>(n) * n, CPoly::zero(n));
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                CPoly acc = CPoly::zero(n);
                for (int s = 1; s <= n; ++s) acc += power[idx(i, s)] * y[idx(s, j)];
                next[idx(i, j)] = acc;
            }
        power = std::move(next);
    }
    CPoly tr = CPoly::zero(n);
    for (int i = 1; i <= n; ++i) tr += power[idx(i, i)];
    return tr;
}

/// {Tr(Y^k), Tr(Y^m)}; involutivity says this is zero.
inline CPoly involution_residual(int n, int k, int m) {
    return pbracket(classical_trace_power(n, k), classical_trace_power(n, m));
}

/// Reads a specialized element as a commutative polynomial: each normal
/// word x_{i1,j1}...x_{id,jd} maps to y_{i1,j1}...y_{id,jd}.
inline CPoly classical_shadow(const NumericElement& e) {
    const int n = e.n();
    std::unordered_map<MPoly::Expo, Rational> acc;
    for (const auto& [m, c] : e.terms()) {
        MPoly::Expo expo(static_cast<std::size_t>(n) * n, '\0');
        for (auto g : m.generators()) {
            auto v = static_cast<std::size_t>(CPoly::var_index(n, g.row, g.col));
            expo[v] = static_cast<char>(expo[v] + 1);
        }
        acc[expo] += c;
    }
    return CPoly(n, MPoly::from_map(n * n, std::move(acc)));
}

/// First-order shadow at q = 1: monomials map to y's, coefficients to their
/// q-derivative at 1.
inline CPoly derivative_shadow(const AlgebraElement& e) {
    const int n = e.n();
    std::unordered_map<MPoly::Expo, Rational> acc;
    for (const auto& [m, c] : e.terms()) {
        Rational d = c.derivative_at_one();
        if (qma::is_zero(d)) continue;
        MPoly::Expo expo(static_cast<std::size_t>(n) * n, '\0');
        for (auto g : m.generators()) {
            auto v = static_cast<std::size_t>(CPoly::var_index(n, g.row, g.col));
            expo[v] = static_cast<char>(expo[v] + 1);
        }
        acc[expo] += d;
    }
    return CPoly(n, MPoly::from_map(n * n, std::move(acc)));
}

/// Quasi-classical correspondence on generators: the q-derivative at 1 of
/// [x_ij, x_kl], read commutatively, minus {y_ij, y_kl}. Zero for every
/// generator pair.
inline CPoly semiclassical_generator_residual(int n, int i, int j, int k, int l) {
    AlgebraElement comm = commutator(AlgebraElement::generator(n, i, j), AlgebraElement::generator(n, k, l));
    return derivative_shadow(comm) - pbracket_gen(n, i, j, k, l);
}

}  // namespace qma
