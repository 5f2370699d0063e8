#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qma/rational.hpp"

namespace qma {

/// Commutative polynomial in a fixed number of variables with exact rational
/// coefficients. A monomial is its exponent vector, packed one byte per
/// variable. Terms are sorted by (total degree, then lex with the highest
/// leading exponent first) and zero coefficients are never stored.
class MPoly {
   public:
    using Expo = std::string;  // exponent bytes, length = nvars
    using Term = std::pair<Expo, Rational>;

    MPoly() = default;
    explicit MPoly(int nvars) : nvars_(check_vars(nvars)) {}

    static MPoly zero(int nvars) { return MPoly(nvars); }

    static MPoly constant(int nvars, const Rational& c) {
        MPoly p(nvars);
        if (!qma::is_zero(c)) p.terms_.emplace_back(Expo(static_cast<std::size_t>(nvars), '\0'), c);
        return p;
    }

    static MPoly one(int nvars) { return constant(nvars, Rational(1)); }

    static MPoly variable(int nvars, int index) {
        if (index < 0 || index >= nvars) throw std::out_of_range("MPoly::variable: index out of range");
        MPoly p(nvars);
        Expo e(static_cast<std::size_t>(nvars), '\0');
        e[static_cast<std::size_t>(index)] = 1;
        p.terms_.emplace_back(std::move(e), Rational(1));
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    static int degree_of(const Expo& e) {
        return std::accumulate(e.begin(), e.end(), 0,
                               [](int acc, char c) { return acc + static_cast<unsigned char>(c); });
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, degree_of(e));
        return d;
    }

    /// (degree, then lex, larger exponent vector first). Matches the word
    /// order used on the noncommutative side under the obvious expansion.
    static bool expo_less(const Expo& a, const Expo& b) {
        int da = degree_of(a), db = degree_of(b);
        if (da != db) return da < db;
        return a > b;
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        a.require_same_vars(b);
        MPoly out(a.nvars_);
        out.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        while (ia != a.terms_.end() && ib != b.terms_.end()) {
            if (expo_less(ia->first, ib->first)) {
                out.terms_.push_back(*ia++);
            } else if (expo_less(ib->first, ia->first)) {
                out.terms_.push_back(*ib++);
            } else {
                Rational c = ia->second + ib->second;
                if (!qma::is_zero(c)) out.terms_.emplace_back(ia->first, std::move(c));
                ++ia, ++ib;
            }
        }
        out.terms_.insert(out.terms_.end(), ia, a.terms_.end());
        out.terms_.insert(out.terms_.end(), ib, b.terms_.end());
        return out;
    }

    friend MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

    MPoly operator-() const {
        MPoly out = *this;
        for (auto& [e, c] : out.terms_) c = -c;
        return out;
    }

    MPoly& operator+=(const MPoly& rhs) {
        *this = *this + rhs;
        return *this;
    }
    MPoly& operator-=(const MPoly& rhs) {
        *this = *this - rhs;
        return *this;
    }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        a.require_same_vars(b);
        std::unordered_map<Expo, Rational> acc;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Expo e = ea;
                for (std::size_t i = 0; i < e.size(); ++i)
                    e[i] = static_cast<char>(static_cast<unsigned char>(e[i]) + static_cast<unsigned char>(eb[i]));
                acc[e] += ca * cb;
            }
        }
        return from_map(a.nvars_, std::move(acc));
    }

    MPoly& operator*=(const MPoly& rhs) {
        *this = *this * rhs;
        return *this;
    }

    MPoly scaled(const Rational& c) const {
        MPoly out(nvars_);
        if (qma::is_zero(c)) return out;
        out.terms_.reserve(terms_.size());
        for (const auto& [e, v] : terms_) out.terms_.emplace_back(e, v * c);
        return out;
    }

    MPoly pow(int k) const {
        if (k < 0) throw std::invalid_argument("MPoly::pow: negative exponent");
        MPoly acc = one(nvars_);
        for (int i = 0; i < k; ++i) acc *= *this;
        return acc;
    }

    /// Partial derivative with respect to the given variable.
    MPoly derivative(int index) const {
        if (index < 0 || index >= nvars_) throw std::out_of_range("MPoly::derivative: index out of range");
        MPoly out(nvars_);
        for (const auto& [e, c] : terms_) {
            int exp = static_cast<unsigned char>(e[static_cast<std::size_t>(index)]);
            if (exp == 0) continue;
            Expo d = e;
            d[static_cast<std::size_t>(index)] = static_cast<char>(exp - 1);
            out.terms_.emplace_back(std::move(d), c * exp);
        }
        std::sort(out.terms_.begin(), out.terms_.end(),
                  [](const Term& x, const Term& y) { return expo_less(x.first, y.first); });
        return out;
    }

    /// Substitutes values[i] for variable i under any commutative ring with
    /// 1, multiplication, addition and rational scaling.
    template <class Ring>
    Ring eval(const std::vector<Ring>& values, const Ring& unit) const {
        Ring acc = unit.scaled(Rational(0));
        for (const auto& [e, c] : terms_) {
            Ring term = unit;
            for (std::size_t i = 0; i < e.size(); ++i)
                for (int rep = 0; rep < static_cast<unsigned char>(e[i]); ++rep) term = term * values[i];
            acc = acc + term.scaled(c);
        }
        return acc;
    }

    Rational eval_rational(const std::vector<Rational>& values) const {
        Rational acc(0);
        for (const auto& [e, c] : terms_) {
            Rational term = c;
            for (std::size_t i = 0; i < e.size(); ++i)
                term *= rational_pow(values[i], static_cast<unsigned char>(e[i]));
            acc += term;
        }
        return acc;
    }

    friend bool operator==(const MPoly& a, const MPoly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

    /// Text form with a caller-supplied variable namer: terms joined by
    /// " + ", each `c*<v>^e*...` with exponent 1 left implicit.
    std::string to_string(const std::function<std::string(int)>& var_name) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += c.get_str();
            for (std::size_t i = 0; i < e.size(); ++i) {
                int exp = static_cast<unsigned char>(e[i]);
                if (exp == 0) continue;
                out += "*" + var_name(static_cast<int>(i));
                if (exp > 1) out += "^" + std::to_string(exp);
            }
        }
        return out;
    }

    static MPoly from_map(int nvars, std::unordered_map<Expo, Rational> acc) {
        MPoly out(nvars);
        out.terms_.reserve(acc.size());
        for (auto& [e, c] : acc)
            if (!qma::is_zero(c)) out.terms_.emplace_back(e, std::move(c));
        std::sort(out.terms_.begin(), out.terms_.end(),
                  [](const Term& x, const Term& y) { return expo_less(x.first, y.first); });
        return out;
    }

   private:
    static int check_vars(int nvars) {
        if (nvars < 1) throw std::invalid_argument("MPoly: need at least one variable");
        return nvars;
    }
    void require_same_vars(const MPoly& rhs) const {
        if (nvars_ != rhs.nvars_) throw std::invalid_argument("MPoly: variable count mismatch");
    }

    int nvars_ = 1;
    std::vector<Term> terms_;
};

}  // namespace qma
