#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qma/exprio.hpp"
#include "qma/identities.hpp"
#include "qma/minors.hpp"
#include "qma/poisson.hpp"
#include "qma/report.hpp"

namespace qma {

inline constexpr const char* kVersion = "0.1.0";

struct RunConfig {
    int n = 2;
    int max_power = 0;  // 0 means n + 2
    std::vector<std::string> checks = {"all"};
    enum class Format { text, json } format = Format::text;
    std::uint64_t seed = 20240801;
    long budget_ms = 0;  // 0 means no cap

    int effective_max_power() const { return max_power > 0 ? max_power : n + 2; }
};

inline const std::vector<std::string>& known_checks() {
    static const std::vector<std::string> names = {
        "relations", "pbw",          "laplace", "lemma1",  "ch",           "trace_z",
        "newton",    "commute",      "sigma_commute",      "t_basis",      "poisson",
        "semiclassical"};
    return names;
}

namespace detail {

class Budget {
   public:
    explicit Budget(long cap_ms)
        : start_(std::chrono::steady_clock::now()), cap_ms_(cap_ms) {}

    bool expired() const {
        if (cap_ms_ <= 0) return false;
        return elapsed_ms() >= cap_ms_;
    }

    long elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
            .count();
    }

   private:
    std::chrono::steady_clock::time_point start_;
    long cap_ms_;
};

class Stopwatch {
   public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
            .count();
    }

   private:
    std::chrono::steady_clock::time_point start_;
};

using Params = std::vector<std::pair<std::string, std::string>>;

inline unsigned long long binomial(int a, int b) {
    if (b < 0 || b > a) return 0;
    unsigned long long r = 1;
    for (int i = 1; i <= b; ++i) r = r * static_cast<unsigned long long>(a - b + i) / static_cast<unsigned long long>(i);
    return r;
}

/// The four rewrite cases of the defining relations, enumerated directly so
/// the check stays independent of the engine's own rewrite table.
inline AlgebraElement expected_pair_product(int n, GeneratorIndex a, GeneratorIndex b) {
    if (a <= b) return AlgebraElement::monomial_term(n, Monomial(a).append(b));
    const Monomial swapped = Monomial(b).append(a);
    if (a.row == b.row || a.col == b.col)
        return AlgebraElement::monomial_term(n, swapped, LaurentPoly::q_power(-1));
    if (b.col > a.col)  // b.row < a.row automatic here
        return AlgebraElement::monomial_term(n, swapped);
    const Monomial corr = Monomial(GeneratorIndex(b.row, a.col)).append(GeneratorIndex(a.row, b.col));
    return AlgebraElement::monomial_term(n, swapped) +
           AlgebraElement::monomial_term(n, corr, LaurentPoly::q_power(-1) - LaurentPoly::q_power(1));
}

inline Monomial random_word(std::mt19937_64& rng, int n, int max_len) {
    std::uniform_int_distribution<int> len_dist(1, max_len);
    std::uniform_int_distribution<int> idx_dist(1, n);
    const int len = len_dist(rng);
    std::vector<GeneratorIndex> gens;
    gens.reserve(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) gens.emplace_back(idx_dist(rng), idx_dist(rng));
    return Monomial(gens);
}

inline CPoly random_cpoly(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> nterms_dist(1, 3);
    std::uniform_int_distribution<int> deg_dist(0, 2);
    std::uniform_int_distribution<int> idx_dist(1, n);
    std::uniform_int_distribution<int> coeff_dist(1, 6);  // maps to -3..3 without 0
    CPoly acc = CPoly::zero(n);
    const int nterms = nterms_dist(rng);
    for (int t = 0; t < nterms; ++t) {
        const int raw = coeff_dist(rng);
        CPoly term = CPoly::constant(n, Rational(raw <= 3 ? raw - 4 : raw - 3));
        const int deg = deg_dist(rng);
        for (int d = 0; d < deg; ++d) term *= CPoly::generator(n, idx_dist(rng), idx_dist(rng));
        acc += term;
    }
    return acc;
}

inline void emit(std::vector<VerificationReport>& out, const std::string& name, Params params,
                 long residual_terms, const Stopwatch& sw) {
    out.push_back(VerificationReport::residual_check(name, std::move(params), residual_terms, sw.ms()));
}

inline bool guard(std::vector<VerificationReport>& out, const Budget& budget, const std::string& name,
                  Params params) {
    if (!budget.expired()) return false;
    out.push_back(VerificationReport::skipped_check(name, std::move(params)));
    return true;
}

// --- check families ---------------------------------------------------

inline void check_relations(const RunConfig& cfg, const Budget& budget, std::vector<VerificationReport>& out) {
    const int n = cfg.n;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l) {
                    GeneratorIndex a(i, j), b(k, l);
                    Params params = {{"a", qma::to_string(a)}, {"b", qma::to_string(b)}};
                    if (guard(out, budget, "relations", params)) continue;
                    Stopwatch sw;
                    AlgebraElement got = reduce_word(Monomial(a).append(b), n);
                    AlgebraElement want = expected_pair_product(n, a, b);
                    emit(out, "relations", std::move(params), static_cast<long>((got - want).term_count()), sw);
                }
}

inline void check_pbw(const RunConfig& cfg, const Budget& budget, std::vector<VerificationReport>& out) {
    const int n = cfg.n;
    // Normal monomial counts: reduce every word of degree d and compare the
    // collected support against the multiset count C(n^2+d-1, d).
    for (int d = 1; d <= 3; ++d) {
        Params params = {{"degree", std::to_string(d)}};
        if (guard(out, budget, "pbw_count", params)) continue;
        Stopwatch sw;
        std::vector<GeneratorIndex> gens;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) gens.emplace_back(i, j);
        std::vector<Monomial> words = {Monomial{}};
        for (int step = 0; step < d; ++step) {
            std::vector<Monomial> next;
            next.reserve(words.size() * gens.size());
            for (const auto& w : words)
                for (auto g : gens) next.push_back(w.append(g));
            words = std::move(next);
        }
        std::set<Monomial> support;
        long defects = 0;
        for (const auto& w : words) {
            AlgebraElement red = reduce_word(w, n);
            for (const auto& [m, c] : red.terms()) {
                if (!m.is_normal() || m.degree() != static_cast<std::size_t>(d)) ++defects;
                support.insert(m);
            }
        }
        const auto expected = binomial(n * n + d - 1, d);
        defects += std::llabs(static_cast<long long>(support.size()) - static_cast<long long>(expected));
        emit(out, "pbw_count", std::move(params), defects, sw);
    }

    // Confluence: identical normal forms under leftmost-first and
    // rightmost-first pair selection, plus the memoized and product routes.
    Params params = {{"words", "200"}, {"max_len", "6"}, {"seed", std::to_string(cfg.seed)}};
    if (guard(out, budget, "pbw_confluence", params)) return;
    Stopwatch sw;
    std::mt19937_64 rng(cfg.seed);
    long mismatches = 0;
    for (int trial = 0; trial < 200; ++trial) {
        Monomial w = random_word(rng, n, 6);
        AlgebraElement left = reduce_word_with_strategy(w, n, PairStrategy::leftmost);
        AlgebraElement right = reduce_word_with_strategy(w, n, PairStrategy::rightmost);
        AlgebraElement memo = reduce_word(w, n);
        AlgebraElement prod = AlgebraElement::one(n);
        for (auto g : w.generators()) prod = prod * AlgebraElement::generator(n, g.row, g.col);
        if (!(left == right)) ++mismatches;
        if (!(left == memo)) ++mismatches;
        if (!(left == prod)) ++mismatches;
    }
    emit(out, "pbw_confluence", std::move(params), mismatches, sw);
}

inline void check_laplace(const RunConfig& cfg, const Budget& budget, std::vector<VerificationReport>& out) {
    const int n = cfg.n;
    for (int size = 2; size <= std::min(n, 3); ++size) {
        for (const IndexSet& rows : k_subsets(n, size)) {
            for (const IndexSet& cols : k_subsets(n, size)) {
                for (int ii = 0; ii < size; ++ii) {
                    for (int ri = 0; ri < size; ++ri) {
                        const int i = rows.at(static_cast<std::size_t>(ii));
                        const int r = rows.at(static_cast<std::size_t>(ri));
                        Params params = {{"K", rows.to_string()},
                                         {"L", cols.to_string()},
                                         {"i", std::to_string(i)},
                                         {"r", std::to_string(r)}};
                        if (guard(out, budget, "laplace", params)) continue;
                        Stopwatch sw;
                        AlgebraElement res = laplace_residual(rows, cols, i, r, n);
                        emit(out, "laplace", std::move(params), static_cast<long>(res.term_count()), sw);
                    }
                }
            }
        }
    }
}

inline void check_lemma1(const RunConfig& cfg, const Budget& budget, std::vector<VerificationReport>& out) {
    const int n = cfg.n;
    const ZSequence zs(n, n - 1);
    for (int k = 0; k <= n - 1; ++k) {
        Params params = {{"k", std::to_string(k)}};
        if (guard(out, budget, "lemma1", params)) continue;
        Stopwatch sw;
        long defects = 0;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                defects += static_cast<long>((zs.z(k).at(i, j) - z_closed_form(n, k, i, j)).term_count());
        emit(out, "lemma1", std::move(params), defects, sw);
    }
}

inline void check_ch(const RunConfig& cfg, const Budget& budget, std::vector<VerificationReport>& out) {
    const int n = cfg.n;
    const int top = cfg.effective_max_power();
    const ZSequence zs(n, top);
    for (int k = 0; k <= top; ++k) {
        Params params = {{"k", std::to_string(k)}, {"part", "eq4"}};
        if (!guard(out, budget, "ch", params)) {
            Stopwatch sw;
            long defects = 0;
            const QMatrix via4 = z_via_eq4(n, k);
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    defects += static_cast<long>((zs.z(k).at(i, j) - via4.at(i, j)).term_count());
            emit(out, "ch", std::move(params), defects, sw);
        }
        if (k >= n) {
            Params vparams = {{"k", std::to_string(k)}, {"part", "vanishing"}};
            if (guard(out, budget, "ch", vparams)) continue;
            Stopwatch sw;
            long defects = 0;
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) defects += static_cast<long>(zs.z(k).at(i, j).term_count());
            emit(out, "ch", std::move(vparams), defects, sw);
        }
    }
}

inline void check_trace_z(const RunConfig& cfg, const Budget& budget, std::vector<VerificationReport>& out) {
    const int n = cfg.n;
    for (int k = 0; k <= cfg.effective_max_power(); ++k) {
        Params params = {{"k", std::to_string(k)}};
        if (guard(out, budget, "trace_z", params)) continue;
        Stopwatch sw;
        emit(out, "trace_z", std::move(params), static_cast<long>(trace_z_residual(n, k).term_count()), sw);
    }
}

inline void check_newton(const RunConfig& cfg, const Budget& budget, std::vector<VerificationReport>& out) {
    const int n = cfg.n;
    for (int k = 1; k <= 2 * n; ++k) {
        Params params = {{"k", std::to_string(k)}, {"part", "residual"}};
        if (guard(out, budget, "newton", params)) continue;
        Stopwatch sw;
        emit(out, "newton", std::move(params), static_cast<long>(newton_residual(n, k).term_count()), sw);
    }
    if (budget.expired()) {
        for (int k = 1; k <= n; ++k)
            out.push_back(VerificationReport::skipped_check(
                "newton", {{"k", std::to_string(k)}, {"part", "recover_sigma"}}));
        return;
    }
    const std::vector<AlgebraElement> recovered = sigma_from_t(n, n);
    for (int k = 1; k <= n; ++k) {
        Params params = {{"k", std::to_string(k)}, {"part", "recover_sigma"}};
        Stopwatch sw;
        AlgebraElement diff = recovered[static_cast<std::size_t>(k - 1)] - sigma(k, n);
        emit(out, "newton", std::move(params), static_cast<long>(diff.term_count()), sw);
    }
}

inline void check_commute(const RunConfig& cfg, const Budget& budget, std::vector<VerificationReport>& out) {
    const int n = cfg.n;
    const int top = cfg.effective_max_power();
    std::map<std::pair<int, int>, AlgebraElement> products;
    auto product = [&](int k, int m) -> const AlgebraElement& {
        auto it = products.find({k, m});
        if (it == products.end())
            it = products.emplace(std::make_pair(k, m), trace_power(n, k) * trace_power(n, m)).first;
        return it->second;
    };
    for (int k = 1; k <= top; ++k) {
        for (int m = 1; m <= top; ++m) {
            Params params = {{"k", std::to_string(k)}, {"m", std::to_string(m)}};
            if (guard(out, budget, "commute", params)) continue;
            Stopwatch sw;
            AlgebraElement res = product(k, m) - product(m, k);
            emit(out, "commute", std::move(params), static_cast<long>(res.term_count()), sw);
        }
    }
}

inline void check_sigma_commute(const RunConfig& cfg, const Budget& budget,
                                std::vector<VerificationReport>& out) {
    const int n = cfg.n;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            Params params = {{"i", std::to_string(i)}, {"j", std::to_string(j)}};
            if (guard(out, budget, "sigma_commute", params)) continue;
            Stopwatch sw;
            AlgebraElement res = commutator(sigma(i, n), sigma(j, n));
            emit(out, "sigma_commute", std::move(params), static_cast<long>(res.term_count()), sw);
        }
    }
}

inline void check_t_basis(const RunConfig& cfg, const Budget& budget, std::vector<VerificationReport>& out) {
    const int n = cfg.n;
    const int top = std::max(cfg.effective_max_power(), n + 1);
    for (int k = n + 1; k <= top; ++k) {
        MPoly poly = t_in_t_basis(n, k);
        Params params = {{"k", std::to_string(k)}, {"poly", t_basis_to_string(poly)}};
        if (guard(out, budget, "t_basis", params)) continue;
        Stopwatch sw;
        AlgebraElement diff = eval_at_trace_powers(poly, n) - trace_power(n, k);
        emit(out, "t_basis", std::move(params), static_cast<long>(diff.term_count()), sw);
    }
}

inline void check_poisson(const RunConfig& cfg, const Budget& budget, std::vector<VerificationReport>& out) {
    const int n = cfg.n;
    for (int k = 1; k <= 4; ++k) {
        for (int m = 1; m <= 4; ++m) {
            Params params = {{"k", std::to_string(k)}, {"m", std::to_string(m)}, {"part", "involution"}};
            if (guard(out, budget, "poisson", params)) continue;
            Stopwatch sw;
            CPoly res = involution_residual(n, k, m);
            emit(out, "poisson", std::move(params), static_cast<long>(res.term_count()), sw);
        }
    }

    std::mt19937_64 rng(cfg.seed);
    const int samples = 100;
    {
        Params params = {{"part", "antisymmetry"}, {"samples", std::to_string(samples)}, {"seed", std::to_string(cfg.seed)}};
        if (!guard(out, budget, "poisson", params)) {
            Stopwatch sw;
            long failures = 0;
            for (int t = 0; t < samples; ++t) {
                CPoly f = random_cpoly(rng, n), g = random_cpoly(rng, n);
                if (!(pbracket(f, g) + pbracket(g, f)).is_zero()) ++failures;
            }
            emit(out, "poisson", std::move(params), failures, sw);
        }
    }
    {
        Params params = {{"part", "leibniz"}, {"samples", std::to_string(samples)}, {"seed", std::to_string(cfg.seed)}};
        if (!guard(out, budget, "poisson", params)) {
            Stopwatch sw;
            long failures = 0;
            for (int t = 0; t < samples; ++t) {
                CPoly f = random_cpoly(rng, n), g = random_cpoly(rng, n), h = random_cpoly(rng, n);
                CPoly lhs = pbracket(f, g * h);
                CPoly rhs = pbracket(f, g) * h + g * pbracket(f, h);
                if (!(lhs - rhs).is_zero()) ++failures;
            }
            emit(out, "poisson", std::move(params), failures, sw);
        }
    }
    {
        Params params = {{"part", "jacobi"}, {"samples", std::to_string(samples)}, {"seed", std::to_string(cfg.seed)}};
        if (!guard(out, budget, "poisson", params)) {
            Stopwatch sw;
            long failures = 0;
            for (int t = 0; t < samples; ++t) {
                CPoly f = random_cpoly(rng, n), g = random_cpoly(rng, n), h = random_cpoly(rng, n);
                CPoly cyc = pbracket(f, pbracket(g, h)) + pbracket(g, pbracket(h, f)) + pbracket(h, pbracket(f, g));
                if (!cyc.is_zero()) ++failures;
            }
            emit(out, "poisson", std::move(params), failures, sw);
        }
    }
}

inline void check_semiclassical(const RunConfig& cfg, const Budget& budget,
                                std::vector<VerificationReport>& out) {
    const int n = cfg.n;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l) {
                    Params params = {{"i", std::to_string(i)},
                                     {"j", std::to_string(j)},
                                     {"k", std::to_string(k)},
                                     {"l", std::to_string(l)}};
                    if (guard(out, budget, "semiclassical", params)) continue;
                    Stopwatch sw;
                    CPoly res = semiclassical_generator_residual(n, i, j, k, l);
                    emit(out, "semiclassical", std::move(params), static_cast<long>(res.term_count()), sw);
                }
}

/// Numeric-aware comparison so k=2 sorts before k=10.
inline bool params_less(const Params& a, const Params& b) {
    const std::size_t len = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < len; ++i) {
        if (a[i].first != b[i].first) return a[i].first < b[i].first;
        const std::string& x = a[i].second;
        const std::string& y = b[i].second;
        const bool xnum = !x.empty() && x.find_first_not_of("0123456789") == std::string::npos;
        const bool ynum = !y.empty() && y.find_first_not_of("0123456789") == std::string::npos;
        if (xnum && ynum) {
            if (std::stol(x) != std::stol(y)) return std::stol(x) < std::stol(y);
        } else if (x != y) {
            return x < y;
        }
    }
    return a.size() < b.size();
}

}  // namespace detail

/// Runs the configured check families and returns the reports sorted by
/// (check, params). Checks hit after the time budget expires are reported
/// as skipped and do not fail the run.
inline std::vector<VerificationReport> run_verify(const RunConfig& cfg) {
    if (cfg.n < 1) throw std::invalid_argument("run_verify: n must be >= 1");
    if (cfg.n > kMaxSize) throw std::invalid_argument("run_verify: n too large");
    if (cfg.max_power < 0 || cfg.effective_max_power() < 1)
        throw std::invalid_argument("run_verify: max_power must be >= 1");

    std::set<std::string> selected;
    for (const auto& name : cfg.checks) {
        if (name == "all") {
            selected.insert(known_checks().begin(), known_checks().end());
        } else if (std::find(known_checks().begin(), known_checks().end(), name) != known_checks().end()) {
            selected.insert(name);
        } else {
            throw std::invalid_argument("run_verify: unknown check '" + name + "'");
        }
    }
    if (selected.empty()) throw std::invalid_argument("run_verify: no checks selected");

    detail::Budget budget(cfg.budget_ms);
    std::vector<VerificationReport> out;
    if (selected.count("relations")) detail::check_relations(cfg, budget, out);
    if (selected.count("pbw")) detail::check_pbw(cfg, budget, out);
    if (selected.count("laplace")) detail::check_laplace(cfg, budget, out);
    if (selected.count("lemma1")) detail::check_lemma1(cfg, budget, out);
    if (selected.count("ch")) detail::check_ch(cfg, budget, out);
    if (selected.count("trace_z")) detail::check_trace_z(cfg, budget, out);
    if (selected.count("newton")) detail::check_newton(cfg, budget, out);
    if (selected.count("commute")) detail::check_commute(cfg, budget, out);
    if (selected.count("sigma_commute")) detail::check_sigma_commute(cfg, budget, out);
    if (selected.count("t_basis")) detail::check_t_basis(cfg, budget, out);
    if (selected.count("poisson")) detail::check_poisson(cfg, budget, out);
    if (selected.count("semiclassical")) detail::check_semiclassical(cfg, budget, out);

    std::stable_sort(out.begin(), out.end(), [](const VerificationReport& a, const VerificationReport& b) {
        if (a.check != b.check) return a.check < b.check;
        return detail::params_less(a.params, b.params);
    });
    return out;
}

inline bool all_passed(const std::vector<VerificationReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
}

inline void render_text(const std::vector<VerificationReport>& reports, std::ostream& os) {
    long pass = 0, fail = 0, skipped = 0;
    for (const auto& r : reports) {
        os << r.status_string() << "  " << r.check;
        if (!r.params.empty()) os << "  " << r.params_string();
        if (r.status != VerificationReport::Status::skipped)
            os << "  residual_terms=" << r.residual_terms << "  millis=" << r.millis;
        os << "\n";
        switch (r.status) {
            case VerificationReport::Status::pass: ++pass; break;
            case VerificationReport::Status::fail: ++fail; break;
            case VerificationReport::Status::skipped: ++skipped; break;
        }
    }
    os << pass << " passed, " << fail << " failed, " << skipped << " skipped\n";
}

inline nlohmann::ordered_json reports_to_json(const RunConfig& cfg,
                                              const std::vector<VerificationReport>& reports) {
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& r : reports) checks.push_back(to_json(r));
    nlohmann::ordered_json config = {
        {"n", cfg.n},
        {"max_power", cfg.effective_max_power()},
        {"checks", cfg.checks},
        {"format", cfg.format == RunConfig::Format::json ? "json" : "text"},
        {"seed", cfg.seed},
        {"budget_ms", cfg.budget_ms},
    };
    return nlohmann::ordered_json{
        {"version", kVersion}, {"n", cfg.n}, {"config", config}, {"checks", checks}};
}

}  // namespace qma
