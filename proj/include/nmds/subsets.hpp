#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace nmds {

/// Visits every k-subset of {0, ..., n-1} in lexicographic order. The visitor
/// returns false to stop early; the function returns false iff it was stopped.
template <typename Visitor>
bool for_each_subset(std::size_t n, std::size_t k, Visitor&& visit) {
    if (k > n) return true;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (!visit(static_cast<const std::vector<std::size_t>&>(idx))) return false;
        if (k == 0) return true;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return true;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// Binomial coefficient, saturating at UINT64_MAX.
std::uint64_t binomial(std::size_t n, std::size_t k) noexcept;

}  // namespace nmds
