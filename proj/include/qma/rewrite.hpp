#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qma/element.hpp"
#include "qma/generators.hpp"
#include "qma/laurent.hpp"
#include "qma/monomial.hpp"

namespace qma {

/// Result of rewriting one adjacent out-of-order pair hi*lo (lo < hi):
///
///     hi*lo  ->  swap_coeff * lo*hi  (+ corr_coeff * a*b)
///
/// The four cases are all instances of the single defining relation of the
/// algebra; enumerating them keeps the q-exponents straight.
struct PairRewrite {
    LaurentPoly swap_coeff;
    bool has_correction = false;
    GeneratorIndex a, b;        // correction pair, normal order (a <= b)
    LaurentPoly corr_coeff;
};

inline PairRewrite rewrite_pair(GeneratorIndex hi, GeneratorIndex lo) {
    if (!(lo < hi)) throw std::invalid_argument("rewrite_pair: pair not out of order");
    PairRewrite r;
    if (lo.row == hi.row || lo.col == hi.col) {
        // same row or same column: the generators q-commute
        r.swap_coeff = LaurentPoly::q_power(-1);
    } else if (lo.col > hi.col) {
        // rows and columns both "cross": commuting pair
        r.swap_coeff = LaurentPoly(1);
    } else {
        // lo.row < hi.row, lo.col < hi.col: swap plus -(q - q^-1) x_il x_kj
        r.swap_coeff = LaurentPoly(1);
        r.has_correction = true;
        r.a = GeneratorIndex(lo.row, hi.col);
        r.b = GeneratorIndex(hi.row, lo.col);
        r.corr_coeff = LaurentPoly::q_power(-1) - LaurentPoly::q_power(1);
    }
    return r;
}

enum class PairStrategy { leftmost, rightmost };

namespace detail {

struct WordCaches {
    // reduce_word memo: arbitrary word -> normal form terms
    std::unordered_map<std::string, TermVec> reduce;
    // generator-fold memo: packed g+w with w normal -> normal form terms
    std::unordered_map<std::string, TermVec> nf_left;
};

// One cache set per thread; workers never share mutable state.
inline WordCaches& caches() {
    thread_local WordCaches c;
    return c;
}

inline void clear_word_caches() {
    caches().reduce.clear();
    caches().nf_left.clear();
}

inline const TermVec& reduce_word_memo(const Monomial& w);

/// Normal form of g*w for a normal word w. Trivial (already normal) results
/// are not cached. Recursion: rewrite the leading pair, then fold the
/// produced letters back in; each subcall strictly decreases
/// (word length, leading generator) lexicographically.
inline TermVec nf_left_uncached(GeneratorIndex g, const Monomial& w);

inline const TermVec* nf_left_cached(GeneratorIndex g, const Monomial& w, TermVec& scratch) {
    if (w.empty() || g <= w.at(0)) {
        scratch.clear();
        scratch.emplace_back(w.prepend(g), LaurentPoly(1));
        return nullptr;
    }
    auto& cache = caches().nf_left;
    std::string key = w.prepend(g).packed();
    auto it = cache.find(key);
    if (it != cache.end()) return &it->second;
    TermVec computed = nf_left_uncached(g, w);
    auto [ins, ok] = cache.emplace(std::move(key), std::move(computed));
    return &ins->second;
}

/// result += scale * NF(g * w), accumulating into an unordered map.
inline void accumulate_nf_left(GeneratorIndex g, const Monomial& w, const LaurentPoly& scale,
                               ElementAccumulator& acc) {
    TermVec scratch;
    const TermVec* cached = nf_left_cached(g, w, scratch);
    const TermVec& terms = cached ? *cached : scratch;
    acc.add_scaled(terms, scale);
}

inline TermVec gen_mul_left(GeneratorIndex g, const TermVec& e) {
    ElementAccumulator acc;
    for (const auto& [w, c] : e) accumulate_nf_left(g, w, c, acc);
    return acc.freeze_terms();
}

inline TermVec nf_left_uncached(GeneratorIndex g, const Monomial& w) {
    GeneratorIndex lo = w.at(0);
    Monomial tail = w.suffix_from(1);
    PairRewrite r = rewrite_pair(g, lo);

    ElementAccumulator acc;
    {
        TermVec scratch;
        const TermVec* sub = nf_left_cached(g, tail, scratch);
        TermVec folded = gen_mul_left(lo, sub ? *sub : scratch);
        for (auto& [m, c] : folded) acc.add(m, c * r.swap_coeff);
    }
    if (r.has_correction) {
        TermVec scratch;
        const TermVec* sub = nf_left_cached(r.b, tail, scratch);
        TermVec folded = gen_mul_left(r.a, sub ? *sub : scratch);
        for (auto& [m, c] : folded) acc.add(m, c * r.corr_coeff);
    }
    return acc.freeze_terms();
}

inline std::size_t pick_descent(const Monomial& w, PairStrategy s) {
    return s == PairStrategy::leftmost ? w.first_descent() : w.last_descent();
}

inline TermVec reduce_word_strategy_terms(const Monomial& w, PairStrategy strategy) {
    std::size_t pos = pick_descent(w, strategy);
    if (pos == std::string::npos) return TermVec{{w, LaurentPoly(1)}};
    GeneratorIndex hi = w.at(pos), lo = w.at(pos + 1);
    PairRewrite r = rewrite_pair(hi, lo);
    ElementAccumulator acc;
    acc.add_scaled(reduce_word_strategy_terms(w.with_pair(pos, lo, hi), strategy), r.swap_coeff);
    if (r.has_correction)
        acc.add_scaled(reduce_word_strategy_terms(w.with_pair(pos, r.a, r.b), strategy), r.corr_coeff);
    return acc.freeze_terms();
}

inline const TermVec& reduce_word_memo(const Monomial& w) {
    auto& cache = caches().reduce;
    auto it = cache.find(w.packed());
    if (it != cache.end()) return it->second;

    TermVec result;
    std::size_t pos = w.first_descent();
    if (pos == std::string::npos) {
        result.emplace_back(w, LaurentPoly(1));
    } else {
        GeneratorIndex hi = w.at(pos), lo = w.at(pos + 1);
        PairRewrite r = rewrite_pair(hi, lo);
        ElementAccumulator acc;
        acc.add_scaled(reduce_word_memo(w.with_pair(pos, lo, hi)), r.swap_coeff);
        if (r.has_correction)
            acc.add_scaled(reduce_word_memo(w.with_pair(pos, r.a, r.b)), r.corr_coeff);
        result = acc.freeze_terms();
    }
    auto [ins, ok] = cache.emplace(w.packed(), std::move(result));
    return ins->second;
}

}  // namespace detail

/// PBW normal form of an arbitrary word, rewriting the leftmost out-of-order
/// adjacent pair first; reductions are memoized per word.
inline AlgebraElement reduce_word(const Monomial& w, int n) {
    if (!w.all_in_range(n)) throw std::out_of_range("reduce_word: index out of range");
    return AlgebraElement::from_sorted_terms(n, detail::reduce_word_memo(w));
}

inline AlgebraElement reduce_word(const std::vector<GeneratorIndex>& word, int n) {
    return reduce_word(Monomial(word), n);
}

/// Reduction with an explicit pair-selection strategy and no memoization;
/// used to exercise confluence of the rewriting system.
inline AlgebraElement reduce_word_with_strategy(const Monomial& w, int n, PairStrategy strategy) {
    if (!w.all_in_range(n)) throw std::out_of_range("reduce_word: index out of range");
    return AlgebraElement::from_sorted_terms(n, detail::reduce_word_strategy_terms(w, strategy));
}

/// Product in PBW normal form. Bilinear extension of word concatenation:
/// each left monomial is folded letter by letter onto the right operand
/// through the memoized single-generator normal forms.
inline AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.n() != b.n()) throw std::invalid_argument("ambient size mismatch");
    detail::ElementAccumulator acc;
    for (const auto& [u, cu] : a.terms()) {
        TermVec e = b.terms();
        for (std::size_t i = u.degree(); i-- > 0;) e = detail::gen_mul_left(u.at(i), e);
        acc.add_scaled(e, cu);
    }
    return acc.freeze(a.n());
}

inline AlgebraElement& operator*=(AlgebraElement& a, const AlgebraElement& b) {
    a = a * b;
    return a;
}

/// [a, b] = ab - ba.
inline AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) {
    return a * b - b * a;
}

/// Substitute q := value (nonzero) in every coefficient.
inline NumericElement specialize(const AlgebraElement& e, const Rational& value) {
    if (qma::is_zero(value)) throw std::domain_error("specialize at q = 0");
    std::vector<std::pair<Monomial, Rational>> terms;
    terms.reserve(e.term_count());
    for (const auto& [m, c] : e.terms()) {
        Rational v = c.eval(value);
        if (!qma::is_zero(v)) terms.emplace_back(m, std::move(v));
    }
    return NumericElement::from_sorted_terms(e.n(), std::move(terms));
}

}  // namespace qma
