#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qma {

/// theta(i,j): 1 if i<j, 0 if i=j, -1 if i>j.
inline int theta(int i, int j) { return (i < j) - (j < i); }

/// Largest matrix size the packed generator encoding supports. Far beyond
/// desk scale; the bound comes from 4 bits per index component.
inline constexpr int kMaxSize = 16;

/// One generator x_{row,col} of the quantum matrix algebra, 1-based.
/// The total order is row-major: (i,j) < (k,l) iff i<k, or i=k and j<l.
struct GeneratorIndex {
    std::uint8_t row = 1;
    std::uint8_t col = 1;

    GeneratorIndex() = default;
    GeneratorIndex(int r, int c) : row(static_cast<std::uint8_t>(r)), col(static_cast<std::uint8_t>(c)) {
        if (r < 1 || c < 1 || r > kMaxSize || c > kMaxSize)
            throw std::out_of_range("GeneratorIndex: index out of range");
    }

    /// Packed byte whose unsigned order equals the row-major order.
    std::uint8_t code() const {
        return static_cast<std::uint8_t>((row - 1) << 4 | (col - 1));
    }
    static GeneratorIndex from_code(std::uint8_t c) {
        GeneratorIndex g;
        g.row = static_cast<std::uint8_t>((c >> 4) + 1);
        g.col = static_cast<std::uint8_t>((c & 0x0f) + 1);
        return g;
    }

    bool in_range(int n) const { return row >= 1 && row <= n && col >= 1 && col <= n; }

    friend bool operator==(GeneratorIndex a, GeneratorIndex b) { return a.row == b.row && a.col == b.col; }
    friend bool operator<(GeneratorIndex a, GeneratorIndex b) { return a.code() < b.code(); }
    friend bool operator<=(GeneratorIndex a, GeneratorIndex b) { return a.code() <= b.code(); }
};

inline std::string to_string(GeneratorIndex g, char family = 'x') {
    return std::string(1, family) + "[" + std::to_string(g.row) + "," + std::to_string(g.col) + "]";
}

}  // namespace qma
