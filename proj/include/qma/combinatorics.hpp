#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qma {

/// Strictly increasing set of indices in 1..n.
class IndexSet {
   public:
    IndexSet() = default;
    explicit IndexSet(std::vector<int> elems) : elems_(std::move(elems)) {
        if (!std::is_sorted(elems_.begin(), elems_.end(),
                            [](int a, int b) { return a <= b; }))  // strict: rejects duplicates
            throw std::invalid_argument("IndexSet: elements must be strictly increasing");
        if (!elems_.empty() && elems_.front() < 1) throw std::invalid_argument("IndexSet: elements must be >= 1");
    }

    static IndexSet full(int n) {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 1);
        return IndexSet(std::move(v));
    }

    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    int at(std::size_t i) const { return elems_.at(i); }
    const std::vector<int>& elements() const { return elems_; }

    bool contains(int u) const { return std::binary_search(elems_.begin(), elems_.end(), u); }

    IndexSet without(int u) const {
        std::vector<int> v;
        v.reserve(elems_.size());
        for (int e : elems_)
            if (e != u) v.push_back(e);
        return IndexSet(std::move(v));
    }

    IndexSet with(int u) const {
        std::vector<int> v = elems_;
        v.insert(std::upper_bound(v.begin(), v.end(), u), u);
        return IndexSet(std::move(v));
    }

    friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.elems_ == b.elems_; }
    friend bool operator<(const IndexSet& a, const IndexSet& b) { return a.elems_ < b.elems_; }

    std::string to_string() const {
        std::string out = "{";
        for (std::size_t i = 0; i < elems_.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(elems_[i]);
        }
        return out + "}";
    }

   private:
    std::vector<int> elems_;
};

/// l(u, J): number of elements j in J with u > j.
inline int l_count(int u, const IndexSet& j_set) {
    int c = 0;
    for (int j : j_set.elements())
        if (u > j) ++c;
    return c;
}

/// All k-element subsets of {1..n} in lexicographic order.
inline std::vector<IndexSet> k_subsets(int n, int k) {
    std::vector<IndexSet> out;
    if (k < 0 || k > n) return out;
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 1);
    while (true) {
        out.push_back(IndexSet(pick));
        int i = k - 1;
        while (i >= 0 && pick[i] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++pick[i];
        for (int t = i + 1; t < k; ++t) pick[t] = pick[t - 1] + 1;
    }
    return out;
}

/// Permutation of {1..k} given by its image sequence pi(1), ..., pi(k).
class Permutation {
   public:
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        std::vector<int> sorted = images_;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i)
            if (sorted[i] != static_cast<int>(i) + 1)
                throw std::invalid_argument("Permutation: images must be a bijection on 1..k");
    }

    static Permutation identity(int k) {
        std::vector<int> v(k);
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }

    std::size_t size() const { return images_.size(); }
    int of(int i) const { return images_.at(i - 1); }
    const std::vector<int>& images() const { return images_; }

   private:
    std::vector<int> images_;
};

/// l(pi): number of pairs i < j with pi(i) > pi(j).
inline int inversions(const Permutation& p) {
    int c = 0;
    const auto& v = p.images();
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[i] > v[j]) ++c;
    return c;
}

/// Calls fn for every permutation of {1..k} in lexicographic order.
inline void for_each_permutation(int k, const std::function<void(const Permutation&)>& fn) {
    std::vector<int> v(k);
    std::iota(v.begin(), v.end(), 1);
    do {
        fn(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
}

}  // namespace qma
