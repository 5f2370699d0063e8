#pragma once

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qma/laurent.hpp"
#include "qma/monomial.hpp"

namespace qma {

using TermVec = std::vector<std::pair<Monomial, LaurentPoly>>;

/// Element of O(M_q) in PBW canonical form: a sparse combination of normal
/// (non-decreasing) words with nonzero LaurentPoly coefficients, sorted by
/// (degree, lex). Equality of elements is equality of the term maps.
class AlgebraElement {
   public:
    AlgebraElement() = default;
    explicit AlgebraElement(int n) : n_(check_size(n)) {}

    static AlgebraElement zero(int n) { return AlgebraElement(n); }

    static AlgebraElement constant(int n, const LaurentPoly& c) {
        AlgebraElement e(n);
        if (!c.is_zero()) e.terms_.emplace_back(Monomial{}, c);
        return e;
    }

    static AlgebraElement one(int n) { return constant(n, LaurentPoly(1)); }

    static AlgebraElement generator(int n, int i, int j) {
        GeneratorIndex g(i, j);
        if (!g.in_range(n)) throw std::out_of_range("generator index out of range");
        AlgebraElement e(n);
        e.terms_.emplace_back(Monomial(g), LaurentPoly(1));
        return e;
    }

    /// Single-term element; the monomial must be normal.
    static AlgebraElement monomial_term(int n, const Monomial& m, const LaurentPoly& c = LaurentPoly(1)) {
        if (!m.all_in_range(n)) throw std::out_of_range("monomial index out of range");
        if (!m.is_normal()) throw std::invalid_argument("monomial_term: word not in normal form");
        AlgebraElement e(n);
        if (!c.is_zero()) e.terms_.emplace_back(m, c);
        return e;
    }

    /// Adopts a term vector that is already sorted, normal and zero-free.
    static AlgebraElement from_sorted_terms(int n, TermVec terms) {
        AlgebraElement e(n);
        e.terms_ = std::move(terms);
        assert(std::is_sorted(e.terms_.begin(), e.terms_.end(),
                              [](const auto& a, const auto& b) { return a.first < b.first; }));
        return e;
    }

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermVec& terms() const { return terms_; }

    LaurentPoly coeff(const Monomial& m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const auto& t, const Monomial& x) { return t.first < x; });
        if (it != terms_.end() && it->first == m) return it->second;
        return LaurentPoly();
    }

    std::size_t max_degree() const { return terms_.empty() ? 0 : terms_.back().first.degree(); }

    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
        a.require_same_size(b);
        AlgebraElement out(a.n_);
        out.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        while (ia != a.terms_.end() && ib != b.terms_.end()) {
            if (ia->first < ib->first) {
                out.terms_.push_back(*ia++);
            } else if (ib->first < ia->first) {
                out.terms_.push_back(*ib++);
            } else {
                LaurentPoly c = ia->second + ib->second;
                if (!c.is_zero()) out.terms_.emplace_back(ia->first, std::move(c));
                ++ia, ++ib;
            }
        }
        out.terms_.insert(out.terms_.end(), ia, a.terms_.end());
        out.terms_.insert(out.terms_.end(), ib, b.terms_.end());
        return out;
    }

    friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) { return a + (-b); }

    AlgebraElement operator-() const {
        AlgebraElement out = *this;
        for (auto& [m, c] : out.terms_) c = -c;
        return out;
    }

    AlgebraElement& operator+=(const AlgebraElement& rhs) {
        *this = *this + rhs;
        return *this;
    }
    AlgebraElement& operator-=(const AlgebraElement& rhs) {
        *this = *this - rhs;
        return *this;
    }

    /// Coefficient scaling (the coefficient ring is central).
    AlgebraElement scaled(const LaurentPoly& c) const {
        AlgebraElement out(n_);
        if (c.is_zero()) return out;
        out.terms_.reserve(terms_.size());
        for (const auto& [m, p] : terms_) {
            LaurentPoly cp = p * c;
            if (!cp.is_zero()) out.terms_.emplace_back(m, std::move(cp));
        }
        return out;
    }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    /// Canonical text form: `(<LaurentPoly>)*<monomial>` terms joined by
    /// " + ", sorted by (degree, lex); zero prints "0".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + c.to_string() + ")*" + m.to_string();
        }
        return out;
    }

   private:
    static int check_size(int n) {
        if (n < 1 || n > kMaxSize) throw std::invalid_argument("ambient size must be in 1.." + std::to_string(kMaxSize));
        return n;
    }
    void require_same_size(const AlgebraElement& rhs) const {
        if (n_ != rhs.n_) throw std::invalid_argument("ambient size mismatch");
    }

    int n_ = 1;
    TermVec terms_;
};

/// Specialization of an AlgebraElement at a concrete nonzero q: same
/// monomial support, exact rational coefficients.
class NumericElement {
   public:
    NumericElement() = default;
    explicit NumericElement(int n) : n_(n) {}

    static NumericElement from_sorted_terms(int n, std::vector<std::pair<Monomial, Rational>> terms) {
        NumericElement e(n);
        e.terms_ = std::move(terms);
        return e;
    }

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<std::pair<Monomial, Rational>>& terms() const { return terms_; }

    friend bool operator==(const NumericElement& a, const NumericElement& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + c.get_str() + ")*" + m.to_string();
        }
        return out;
    }

   private:
    int n_ = 1;
    std::vector<std::pair<Monomial, Rational>> terms_;
};

namespace detail {

/// Unordered accumulator for sums with many colliding monomials; freeze()
/// sorts once and strips zeros.
class ElementAccumulator {
   public:
    void add(const Monomial& m, const LaurentPoly& c) {
        if (c.is_zero()) return;
        map_[m] += c;
    }

    void add_scaled(const TermVec& terms, const LaurentPoly& scale) {
        if (scale.is_zero()) return;
        for (const auto& [m, c] : terms) map_[m] += c * scale;
    }

    void add_scaled(const AlgebraElement& e, const LaurentPoly& scale) { add_scaled(e.terms(), scale); }

    TermVec freeze_terms() {
        TermVec out;
        out.reserve(map_.size());
        for (auto& [m, c] : map_)
            if (!c.is_zero()) out.emplace_back(m, std::move(c));
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        map_.clear();
        return out;
    }

    AlgebraElement freeze(int n) { return AlgebraElement::from_sorted_terms(n, freeze_terms()); }

   private:
    std::unordered_map<Monomial, LaurentPoly, MonomialHash> map_;
};

}  // namespace detail
}  // namespace qma
