#pragma once

#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace hriesz {

// Multi-index alpha in N^n.  Components are nonnegative; alpha - e_j is
// defined only when alpha_j >= 1.  Ordering is lexicographic so that maps
// keyed by MultiIndex iterate deterministically.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
        for (int a : entries_)
            if (a < 0) throw std::invalid_argument("MultiIndex: negative entry");
    }
    MultiIndex(std::initializer_list<int> entries) : MultiIndex(std::vector<int>(entries)) {}

    static MultiIndex zero(int n) { return MultiIndex(std::vector<int>(static_cast<size_t>(n), 0)); }
    // Unit index e_j (axis is 0-based).
    static MultiIndex unit(int n, int axis) {
        MultiIndex m = zero(n);
        m.entries_.at(static_cast<size_t>(axis)) = 1;
        return m;
    }

    int size() const { return static_cast<int>(entries_.size()); }
    int operator[](int j) const { return entries_[static_cast<size_t>(j)]; }
    int order() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

    MultiIndex plus(int axis) const {
        MultiIndex m = *this;
        ++m.entries_.at(static_cast<size_t>(axis));
        return m;
    }
    MultiIndex minus(int axis) const {
        MultiIndex m = *this;
        int& a = m.entries_.at(static_cast<size_t>(axis));
        if (a < 1) throw std::domain_error("MultiIndex: subtraction below zero");
        --a;
        return m;
    }

    const std::vector<int>& entries() const { return entries_; }

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.entries_ == b.entries_; }
    friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return !(a == b); }
    friend bool operator<(const MultiIndex& a, const MultiIndex& b) { return a.entries_ < b.entries_; }

    friend std::ostream& operator<<(std::ostream& os, const MultiIndex& m) {
        os << '(';
        for (int j = 0; j < m.size(); ++j) os << (j ? "," : "") << m[j];
        return os << ')';
    }

private:
    std::vector<int> entries_;
};

// Enumerates {alpha : |alpha| <= K} in lexicographic order.
std::vector<MultiIndex> simplex_indices(int n, int K);

}  // namespace hriesz
