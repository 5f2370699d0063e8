#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qma/combinatorics.hpp"
#include "qma/element.hpp"
#include "qma/qmatrix.hpp"
#include "qma/rewrite.hpp"

namespace qma {
namespace detail {

struct MinorCaches {
    std::map<std::pair<std::pair<IndexSet, IndexSet>, int>, AlgebraElement> minors;
    std::map<std::pair<int, int>, AlgebraElement> sigmas;  // (n, k)
};

inline MinorCaches& minor_caches() {
    thread_local MinorCaches c;
    return c;
}

inline void clear_minor_caches() {
    minor_caches().minors.clear();
    minor_caches().sigmas.clear();
}

/// Quantum minor with the empty minor defined as 1; the public qminor
/// rejects empty sets, but the Laplace machinery needs [{}|{}] = 1.
inline const AlgebraElement& qminor_impl(const IndexSet& rows, const IndexSet& cols, int n) {
    auto& cache = minor_caches().minors;
    auto key = std::make_pair(std::make_pair(rows, cols), n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    const int k = static_cast<int>(rows.size());
    ElementAccumulator acc;
    if (k == 0) {
        acc.add(Monomial{}, LaurentPoly(1));
    } else {
        for_each_permutation(k, [&](const Permutation& pi) {
            std::vector<GeneratorIndex> word;
            word.reserve(k);
            for (int r = 1; r <= k; ++r) word.emplace_back(rows.at(r - 1), cols.at(pi.of(r) - 1));
            acc.add_scaled(reduce_word(Monomial(word), n), LaurentPoly::minus_q_power(inversions(pi)));
        });
    }
    auto [ins, ok] = cache.emplace(std::move(key), acc.freeze(n));
    return ins->second;
}

}  // namespace detail

/// Quantum minor [K|L]: the quantum determinant of the subalgebra on rows K
/// and columns L, expanded as the signed permutation sum with weight
/// (-q)^{l(pi)}.
inline AlgebraElement qminor(const IndexSet& rows, const IndexSet& cols, int n) {
    if (rows.empty() || cols.empty()) throw std::invalid_argument("qminor: empty index sets");
    if (rows.size() != cols.size()) throw std::invalid_argument("qminor: size mismatch");
    if (rows.at(rows.size() - 1) > n || cols.at(cols.size() - 1) > n)
        throw std::out_of_range("qminor: index out of range");
    return detail::qminor_impl(rows, cols, n);
}

/// sigma_k: the sum of all principal k x k quantum minors; zero for k > n.
/// sigma_n is the quantum determinant.
inline AlgebraElement sigma(int k, int n) {
    if (k < 1) throw std::invalid_argument("sigma: k must be >= 1");
    if (k > n) return AlgebraElement::zero(n);
    auto& cache = detail::minor_caches().sigmas;
    auto key = std::make_pair(n, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    AlgebraElement sum = AlgebraElement::zero(n);
    for (const IndexSet& k_set : k_subsets(n, k)) sum += detail::qminor_impl(k_set, k_set, n);
    cache.emplace(std::move(key), sum);
    return sum;
}

/// Residual of the quantum Laplace expansion
///
///   delta_{i,r} [K|L] - sum_{s in L} (-q)^{l(s,L) - l(r,K)} x_{is} [K\r|L\s]
///
/// for i, r in K. Identically zero; failures surface as nonzero terms.
inline AlgebraElement laplace_residual(const IndexSet& rows, const IndexSet& cols, int i, int r, int n) {
    if (rows.size() != cols.size() || rows.size() < 2)
        throw std::invalid_argument("laplace_residual: need |K| = |L| >= 2");
    if (!rows.contains(i) || !rows.contains(r))
        throw std::invalid_argument("laplace_residual: i and r must lie in K");

    detail::ElementAccumulator acc;
    if (i == r) acc.add_scaled(detail::qminor_impl(rows, cols, n), LaurentPoly(1));

    const IndexSet rows_minus_r = rows.without(r);
    for (std::size_t si = 0; si < cols.size(); ++si) {
        const int s = cols.at(si);
        const long exponent = l_count(s, cols) - l_count(r, rows);
        AlgebraElement term = AlgebraElement::generator(n, i, s) * detail::qminor_impl(rows_minus_r, cols.without(s), n);
        acc.add_scaled(term, -LaurentPoly::minus_q_power(exponent));
    }
    return acc.freeze(n);
}

}  // namespace qma
