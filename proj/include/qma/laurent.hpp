#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qma/rational.hpp"

namespace qma {

/// Laurent polynomial in the deformation parameter q with exact rational
/// coefficients. Terms are kept sorted by ascending exponent and zero
/// coefficients are stripped eagerly, so equality is term-map equality and
/// is_zero() is a size check.
class LaurentPoly {
   public:
    using Term = std::pair<long, Rational>;  // (exponent, coefficient)

    LaurentPoly() = default;
    LaurentPoly(int c) : LaurentPoly(Rational(c)) {}  // NOLINT: implicit by design
    LaurentPoly(const Rational& c) {
        if (!qma::is_zero(c)) terms_.emplace_back(0, c);
    }

    /// c * q^e
    static LaurentPoly q_power(long e, const Rational& c = Rational(1)) {
        LaurentPoly p;
        if (!qma::is_zero(c)) p.terms_.emplace_back(e, c);
        return p;
    }

    /// (-q)^e = (-1)^e * q^e, defined for any integer e.
    static LaurentPoly minus_q_power(long e) {
        return q_power(e, (e % 2 == 0) ? Rational(1) : Rational(-1));
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1; }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    Rational coeff(long e) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                                   [](const Term& t, long x) { return t.first < x; });
        if (it != terms_.end() && it->first == e) return it->second;
        return Rational(0);
    }

    LaurentPoly& operator+=(const LaurentPoly& rhs) {
        *this = *this + rhs;
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& rhs) {
        *this = *this + (-rhs);
        return *this;
    }
    LaurentPoly& operator*=(const LaurentPoly& rhs) {
        *this = *this * rhs;
        return *this;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly out;
        out.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        while (ia != a.terms_.end() && ib != b.terms_.end()) {
            if (ia->first < ib->first) {
                out.terms_.push_back(*ia++);
            } else if (ib->first < ia->first) {
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

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

    LaurentPoly operator-() const {
        LaurentPoly out = *this;
        for (auto& [e, c] : out.terms_) c = -c;
        return out;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly out;
        for (const auto& [ea, ca] : a.terms_) {
            LaurentPoly shifted;
            shifted.terms_.reserve(b.terms_.size());
            for (const auto& [eb, cb] : b.terms_) {
                Rational c = ca * cb;
                if (!qma::is_zero(c)) shifted.terms_.emplace_back(ea + eb, std::move(c));
            }
            out += shifted;
        }
        return out;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    /// Substitute q := value (value != 0 because of negative exponents).
    Rational eval(const Rational& value) const {
        if (qma::is_zero(value)) throw std::domain_error("LaurentPoly::eval at q = 0");
        Rational acc(0);
        for (const auto& [e, c] : terms_) acc += c * rational_pow(value, e);
        return acc;
    }

    /// d/dq evaluated at q = 1; exact: sum of e * coeff(e).
    Rational derivative_at_one() const {
        Rational acc(0);
        for (const auto& [e, c] : terms_) acc += Rational(e) * c;
        return acc;
    }

    /// Text form: `c*q^e` terms joined by " + ", descending exponent, q^1 as
    /// `q`, q^0 omitted. The zero polynomial prints "0".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!out.empty()) out += " + ";
            out += it->second.get_str();
            if (it->first != 0) {
                out += "*q";
                if (it->first != 1) out += "^" + std::to_string(it->first);
            }
        }
        return out;
    }

   private:
    std::vector<Term> terms_;
};

inline LaurentPoly q_power(long e, const Rational& c = Rational(1)) { return LaurentPoly::q_power(e, c); }

}  // namespace qma
