#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qma/minors.hpp"
#include "qma/mpoly.hpp"
#include "qma/qmatrix.hpp"

namespace qma {
namespace detail {

struct IdentityCaches {
    std::map<std::pair<int, int>, QMatrix> qpowers;       // (n, k) -> qX^k for the generic X
    std::map<std::pair<int, int>, AlgebraElement> traces; // (n, k) -> t_k
};

inline IdentityCaches& identity_caches() {
    thread_local IdentityCaches c;
    return c;
}

inline void clear_identity_caches() {
    identity_caches().qpowers.clear();
    identity_caches().traces.clear();
}

}  // namespace detail

/// qX^k for the generic matrix, memoized per (n, k).
inline const QMatrix& generic_qpower(int n, int k) {
    if (k < 0) throw std::invalid_argument("generic_qpower: negative exponent");
    auto& cache = detail::identity_caches().qpowers;
    auto it = cache.find({n, k});
    if (it != cache.end()) return it->second;
    QMatrix value = (k == 0) ? QMatrix::identity(n) : star(QMatrix::generic(n), generic_qpower(n, k - 1));
    return cache.emplace(std::make_pair(n, k), std::move(value)).first->second;
}

/// t_k = Tr(qX^k), memoized per (n, k).
inline const AlgebraElement& trace_power(int n, int k) {
    if (k < 0) throw std::invalid_argument("trace_power: negative exponent");
    auto& cache = detail::identity_caches().traces;
    auto it = cache.find({n, k});
    if (it != cache.end()) return it->second;
    return cache.emplace(std::make_pair(n, k), trace(generic_qpower(n, k))).first->second;
}

/// Z_0 = I, Z_k = X * Z_{k-1} + (-1)^k I sigma_k. Vanishes from k = n on.
class ZSequence {
   public:
    explicit ZSequence(int n, int upto) : n_(n) {
        if (upto < 0) throw std::invalid_argument("ZSequence: negative bound");
        matrices_.reserve(static_cast<std::size_t>(upto) + 1);
        matrices_.push_back(QMatrix::identity(n));
        const QMatrix x = QMatrix::generic(n);
        for (int k = 1; k <= upto; ++k) {
            QMatrix zk = star(x, matrices_.back());
            if (k <= n) {
                AlgebraElement sk = sigma(k, n);
                if (k % 2 != 0) sk = -sk;
                for (int i = 1; i <= n; ++i) zk.at(i, i) += sk;
            }
            matrices_.push_back(std::move(zk));
        }
    }

    int n() const { return n_; }
    int max_index() const { return static_cast<int>(matrices_.size()) - 1; }
    const QMatrix& z(int k) const { return matrices_.at(static_cast<std::size_t>(k)); }

   private:
    int n_;
    std::vector<QMatrix> matrices_;
};

/// Z_k by the defining recursion.
inline QMatrix z_recursive(int n, int k) {
    if (k < 0) throw std::invalid_argument("z_recursive: negative index");
    return ZSequence(n, k).z(k);
}

/// The closed-form (i,j) entry of Z_k for 0 <= k <= n-1:
///
///   (-1)^k sum over |J| = k+1 with i,j in J of
///          q^{theta(i,j)} (-q)^{l(i,J) - l(j,J)} [J\j | J\i]
///
/// The k = 0 case reproduces the identity matrix (the empty minor is 1).
inline AlgebraElement z_closed_form(int n, int k, int i, int j) {
    if (k < 0 || k > n - 1) throw std::out_of_range("z_closed_form: k out of range");
    if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("z_closed_form: entry out of range");
    detail::ElementAccumulator acc;
    for (const IndexSet& j_set : k_subsets(n, k + 1)) {
        if (!j_set.contains(i) || !j_set.contains(j)) continue;
        LaurentPoly weight = LaurentPoly::q_power(theta(i, j)) *
                             LaurentPoly::minus_q_power(l_count(i, j_set) - l_count(j, j_set));
        if (k % 2 != 0) weight = -weight;
        acc.add_scaled(detail::qminor_impl(j_set.without(j), j_set.without(i), n), weight);
    }
    return acc.freeze(n);
}

/// Z_k as the alternating sum qX^k - qX^{k-1} sigma_1 + ... + (-1)^k I sigma_k,
/// with each sigma multiplied from the right.
inline QMatrix z_via_eq4(int n, int k) {
    if (k < 0) throw std::invalid_argument("z_via_eq4: negative index");
    QMatrix acc(n);
    for (int j = 0; j <= k; ++j) {
        if (j > n && j > 0) continue;  // sigma_j = 0 beyond n
        const QMatrix& power = generic_qpower(n, k - j);
        AlgebraElement sj = (j == 0) ? AlgebraElement::one(n) : sigma(j, n);
        if (j % 2 != 0) sj = -sj;
        acc = acc + right_scalar_mul(power, sj);
    }
    return acc;
}

/// Tr(Z_k) - (-1)^k (n-k) sigma_k, which the trace formula says is zero.
/// For k >= n both summands vanish separately, so the same expression works.
inline AlgebraElement trace_z_residual(int n, int k) {
    if (k < 0) throw std::invalid_argument("trace_z_residual: negative index");
    AlgebraElement residual = trace(z_recursive(n, k));
    if (k < n && k >= 1) {
        AlgebraElement expected = sigma(k, n).scaled(LaurentPoly(Rational(n - k)));
        if (k % 2 != 0) expected = -expected;
        residual -= expected;
    } else if (k == 0) {
        residual -= AlgebraElement::constant(n, LaurentPoly(Rational(n)));
    }
    return residual;
}

/// Newton residual: t_k - t_{k-1} sigma_1 + ... + (-1)^{k-1} t_1 sigma_{k-1}
/// + (-1)^k k sigma_k. Zero for every k >= 1 (sigma_j = 0 for j > n).
inline AlgebraElement newton_residual(int n, int k) {
    if (k < 1) throw std::invalid_argument("newton_residual: k must be >= 1");
    AlgebraElement acc = AlgebraElement::zero(n);
    for (int j = 0; j <= k - 1; ++j) {
        if (j > n) break;  // remaining sigma_j vanish
        AlgebraElement term = (j == 0) ? trace_power(n, k) : trace_power(n, k - j) * sigma(j, n);
        if (j % 2 != 0) term = -term;
        acc += term;
    }
    if (k <= n) {
        AlgebraElement last = sigma(k, n).scaled(LaurentPoly(Rational(k)));
        if (k % 2 != 0) last = -last;
        acc += last;
    }
    return acc;
}

/// [t_k, t_m]; the main theorem asserts this is zero for all k, m.
inline AlgebraElement commutator_residual(int n, int k, int m) {
    if (k < 1 || m < 1) throw std::invalid_argument("commutator_residual: powers must be >= 1");
    return commutator(trace_power(n, k), trace_power(n, m));
}

/// Recovers sigma_1..sigma_upto from the trace powers by solving Newton's
/// formulae: sigma_k = (-1)^{k+1}/k * sum_{j=0}^{k-1} (-1)^j t_{k-j} sigma_j.
/// Exact rational division by k; each entry equals sigma(k, n) term for term.
inline std::vector<AlgebraElement> sigma_from_t(int n, int upto) {
    if (upto < 0 || upto > n) throw std::invalid_argument("sigma_from_t: need 0 <= upto <= n");
    std::vector<AlgebraElement> sigmas;
    sigmas.reserve(static_cast<std::size_t>(upto) + 1);
    sigmas.push_back(AlgebraElement::one(n));  // sigma_0
    for (int k = 1; k <= upto; ++k) {
        AlgebraElement acc = AlgebraElement::zero(n);
        for (int j = 0; j <= k - 1; ++j) {
            AlgebraElement term = trace_power(n, k - j) * sigmas[static_cast<std::size_t>(j)];
            if (j % 2 != 0) term = -term;
            acc += term;
        }
        Rational scale(1, k);
        if (k % 2 == 0) scale = -scale;
        sigmas.push_back(acc.scaled(LaurentPoly(scale)));
    }
    sigmas.erase(sigmas.begin());  // drop sigma_0
    return sigmas;
}

namespace detail {

/// Abstract Newton inversion in Q[T_1..T_n]: sigma-hat polynomials in the
/// trace variables.
inline std::vector<MPoly> abstract_sigmas(int n) {
    std::vector<MPoly> sig;
    sig.reserve(static_cast<std::size_t>(n) + 1);
    sig.push_back(MPoly::one(n));  // sigma_0
    for (int k = 1; k <= n; ++k) {
        MPoly acc = MPoly::zero(n);
        for (int j = 0; j <= k - 1; ++j) {
            MPoly term = MPoly::variable(n, k - j - 1) * sig[static_cast<std::size_t>(j)];
            if (j % 2 != 0) term = -term;
            acc += term;
        }
        Rational scale(1, k);
        if (k % 2 == 0) scale = -scale;
        sig.push_back(acc.scaled(scale));
    }
    return sig;
}

}  // namespace detail

/// For k > n, the polynomial P in Q[T_1..T_n] with t_k = P(t_1, ..., t_n):
/// Newton's recursion with the sigma's eliminated. Variable i-1 stands for
/// t_i; monomials print degree-then-lex with t_1 < t_2 < ... .
inline MPoly t_in_t_basis(int n, int k) {
    if (k <= n) throw std::invalid_argument("t_in_t_basis: need k > n");
    std::vector<MPoly> sig = detail::abstract_sigmas(n);
    std::vector<MPoly> t_hat;  // t_hat[i] represents t_i, index 0 unused
    t_hat.push_back(MPoly::zero(n));
    for (int i = 1; i <= n; ++i) t_hat.push_back(MPoly::variable(n, i - 1));
    for (int i = n + 1; i <= k; ++i) {
        MPoly acc = MPoly::zero(n);
        for (int j = 1; j <= n; ++j) {
            MPoly term = t_hat[static_cast<std::size_t>(i - j)] * sig[static_cast<std::size_t>(j)];
            if (j % 2 == 0) term = -term;
            acc += term;
        }
        t_hat.push_back(std::move(acc));
    }
    return t_hat[static_cast<std::size_t>(k)];
}

/// Evaluates a polynomial in the trace variables inside the algebra,
/// substituting t_i for variable i-1.
inline AlgebraElement eval_at_trace_powers(const MPoly& p, int n) {
    if (p.nvars() != n) throw std::invalid_argument("eval_at_trace_powers: variable count mismatch");
    std::vector<AlgebraElement> values;
    values.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) values.push_back(trace_power(n, i));
    return p.eval(values, AlgebraElement::one(n));
}

inline std::string t_basis_to_string(const MPoly& p) {
    return p.to_string([](int i) { return "t" + std::to_string(i + 1); });
}

}  // namespace qma
