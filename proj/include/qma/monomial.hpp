#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "qma/generators.hpp"

namespace qma {

/// A word in the generators x_{ij}. Stored as a packed byte string so that
/// lexicographic byte comparison is exactly the row-major word order and
/// short words need no heap allocation. A word is in PBW normal form when
/// the letter sequence is non-decreasing.
class Monomial {
   public:
    Monomial() = default;
    explicit Monomial(GeneratorIndex g) : word_(1, static_cast<char>(g.code())) {}
    explicit Monomial(const std::vector<GeneratorIndex>& gens) {
        word_.reserve(gens.size());
        for (auto g : gens) word_.push_back(static_cast<char>(g.code()));
    }

    static Monomial from_word(std::string packed) {
        Monomial m;
        m.word_ = std::move(packed);
        return m;
    }

    std::size_t degree() const { return word_.size(); }
    bool empty() const { return word_.empty(); }

    GeneratorIndex at(std::size_t i) const {
        return GeneratorIndex::from_code(static_cast<std::uint8_t>(word_[i]));
    }

    std::vector<GeneratorIndex> generators() const {
        std::vector<GeneratorIndex> out;
        out.reserve(word_.size());
        for (char c : word_) out.push_back(GeneratorIndex::from_code(static_cast<std::uint8_t>(c)));
        return out;
    }

    bool is_normal() const {
        for (std::size_t i = 1; i < word_.size(); ++i)
            if (static_cast<std::uint8_t>(word_[i - 1]) > static_cast<std::uint8_t>(word_[i])) return false;
        return true;
    }

    /// Position of the leftmost adjacent out-of-order pair, or npos.
    std::size_t first_descent() const {
        for (std::size_t i = 0; i + 1 < word_.size(); ++i)
            if (static_cast<std::uint8_t>(word_[i]) > static_cast<std::uint8_t>(word_[i + 1])) return i;
        return std::string::npos;
    }

    /// Position of the rightmost adjacent out-of-order pair, or npos.
    std::size_t last_descent() const {
        for (std::size_t i = word_.size(); i-- > 1;)
            if (static_cast<std::uint8_t>(word_[i - 1]) > static_cast<std::uint8_t>(word_[i])) return i - 1;
        return std::string::npos;
    }

    bool all_in_range(int n) const {
        for (char c : word_)
            if (!GeneratorIndex::from_code(static_cast<std::uint8_t>(c)).in_range(n)) return false;
        return true;
    }

    Monomial concat(const Monomial& rhs) const { return from_word(word_ + rhs.word_); }
    Monomial prepend(GeneratorIndex g) const { return from_word(static_cast<char>(g.code()) + word_); }
    Monomial append(GeneratorIndex g) const { return from_word(word_ + static_cast<char>(g.code())); }
    Monomial suffix_from(std::size_t i) const { return from_word(word_.substr(i)); }

    /// Replaces the two letters at [pos, pos+1].
    Monomial with_pair(std::size_t pos, GeneratorIndex a, GeneratorIndex b) const {
        std::string w = word_;
        w[pos] = static_cast<char>(a.code());
        w[pos + 1] = static_cast<char>(b.code());
        return from_word(std::move(w));
    }

    /// Multiplicity of each row index (1-based) among the letters.
    std::array<int, kMaxSize + 1> row_counts() const {
        std::array<int, kMaxSize + 1> cnt{};
        for (char c : word_) cnt[GeneratorIndex::from_code(static_cast<std::uint8_t>(c)).row]++;
        return cnt;
    }
    std::array<int, kMaxSize + 1> col_counts() const {
        std::array<int, kMaxSize + 1> cnt{};
        for (char c : word_) cnt[GeneratorIndex::from_code(static_cast<std::uint8_t>(c)).col]++;
        return cnt;
    }

    const std::string& packed() const { return word_; }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.word_ == b.word_; }

    /// Canonical order: degree, then lexicographic on the letter sequence.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        if (a.word_.size() != b.word_.size()) return a.word_.size() < b.word_.size();
        return a.word_ < b.word_;
    }

    /// `x[i,j]*x[k,l]*...`; the empty word prints as "1".
    std::string to_string(char family = 'x') const {
        if (word_.empty()) return "1";
        std::string out;
        for (std::size_t i = 0; i < word_.size(); ++i) {
            if (i) out += "*";
            out += qma::to_string(at(i), family);
        }
        return out;
    }

   private:
    std::string word_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return std::hash<std::string>{}(m.packed()); }
};

}  // namespace qma
