#include "hriesz/multi_index.hpp"

namespace hriesz {

namespace {
void extend(std::vector<int>& prefix, int n, int budget, std::vector<MultiIndex>& out) {
    if (static_cast<int>(prefix.size()) == n) {
        out.emplace_back(prefix);
        return;
    }
    for (int a = 0; a <= budget; ++a) {
        prefix.push_back(a);
        extend(prefix, n, budget - a, out);
        prefix.pop_back();
    }
}
}  // namespace

std::vector<MultiIndex> simplex_indices(int n, int K) {
    if (n < 1) throw std::invalid_argument("simplex_indices: n must be >= 1");
    if (K < 0) return {};
    std::vector<MultiIndex> out;
    std::vector<int> prefix;
    extend(prefix, n, K, out);
    return out;
}

}  // namespace hriesz
