#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qma/element.hpp"
#include "qma/rewrite.hpp"

namespace qma {

/// n x n matrix over the algebra. 1-based entry access.
class QMatrix {
   public:
    explicit QMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n, AlgebraElement::zero(n)) {
        if (n < 1 || n > kMaxSize) throw std::invalid_argument("QMatrix: bad size");
    }

    static QMatrix identity(int n) {
        QMatrix m(n);
        for (int i = 1; i <= n; ++i) m.at(i, i) = AlgebraElement::one(n);
        return m;
    }

    /// The generic matrix X with x_{ij} as the (i,j) entry.
    static QMatrix generic(int n) {
        QMatrix m(n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) m.at(i, j) = AlgebraElement::generator(n, i, j);
        return m;
    }

    int n() const { return n_; }

    AlgebraElement& at(int i, int j) {
        check_index(i, j);
        return entries_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
    }
    const AlgebraElement& at(int i, int j) const {
        check_index(i, j);
        return entries_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
    }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

    friend QMatrix operator+(const QMatrix& a, const QMatrix& b) {
        a.require_same_size(b);
        QMatrix out(a.n_);
        for (std::size_t i = 0; i < a.entries_.size(); ++i) out.entries_[i] = a.entries_[i] + b.entries_[i];
        return out;
    }

    friend QMatrix operator-(const QMatrix& a, const QMatrix& b) {
        a.require_same_size(b);
        QMatrix out(a.n_);
        for (std::size_t i = 0; i < a.entries_.size(); ++i) out.entries_[i] = a.entries_[i] - b.entries_[i];
        return out;
    }

    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }

   private:
    void check_index(int i, int j) const {
        if (i < 1 || i > n_ || j < 1 || j > n_) throw std::out_of_range("QMatrix: entry index out of range");
    }
    void require_same_size(const QMatrix& rhs) const {
        if (n_ != rhs.n_) throw std::invalid_argument("QMatrix: size mismatch");
    }

    int n_;
    std::vector<AlgebraElement> entries_;
};

/// q-multiplication: (A*B)_{ij} = sum_k q^{theta(j,k)} a_{ik} b_{kj}.
/// Not associative.
inline QMatrix star(const QMatrix& a, const QMatrix& b) {
    if (a.n() != b.n()) throw std::invalid_argument("star: size mismatch");
    const int n = a.n();
    QMatrix out(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            AlgebraElement sum = AlgebraElement::zero(n);
            for (int k = 1; k <= n; ++k) {
                const AlgebraElement& aik = a.at(i, k);
                const AlgebraElement& bkj = b.at(k, j);
                if (aik.is_zero() || bkj.is_zero()) continue;
                sum += (aik * bkj).scaled(LaurentPoly::q_power(theta(j, k)));
            }
            out.at(i, j) = sum;
        }
    }
    return out;
}

/// Left-nested quantum power: qX^0 = I, qX^k = X * (qX^{k-1}).
/// The nesting matters because the star product is not associative.
inline QMatrix qpower(const QMatrix& x, int k) {
    if (k < 0) throw std::invalid_argument("qpower: negative exponent");
    QMatrix acc = QMatrix::identity(x.n());
    for (int step = 0; step < k; ++step) acc = star(x, acc);
    return acc;
}

/// Sum of the diagonal entries.
inline AlgebraElement trace(const QMatrix& a) {
    AlgebraElement t = AlgebraElement::zero(a.n());
    for (int i = 1; i <= a.n(); ++i) t += a.at(i, i);
    return t;
}

/// Entry-wise A_{ij} * s with the scalar on the right.
inline QMatrix right_scalar_mul(const QMatrix& a, const AlgebraElement& s) {
    if (a.n() != s.n()) throw std::invalid_argument("right_scalar_mul: size mismatch");
    QMatrix out(a.n());
    for (int i = 1; i <= a.n(); ++i)
        for (int j = 1; j <= a.n(); ++j)
            if (!a.at(i, j).is_zero()) out.at(i, j) = a.at(i, j) * s;
    return out;
}

}  // namespace qma
