#include "cyclicpoly/exactcomb.hpp"

#include <stdexcept>

namespace cyclicpoly {

Count binom(std::int64_t n, std::int64_t k) {
    if (n < 0) {
        throw std::domain_error("binom: n must be nonnegative");
    }
    if (k < 0 || k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    // result after step i is C(n - k + i, i), so each division is exact.
    Count result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

std::vector<Count> pascal_row(std::int64_t n) {
    if (n < 0) {
        throw std::domain_error("pascal_row: n must be nonnegative");
    }
    std::vector<Count> row;
    row.reserve(static_cast<std::size_t>(n) + 1);
    row.emplace_back(1);
    for (std::int64_t k = 1; k <= n; ++k) {
        Count next = row.back();
        next *= n - k + 1;
        next /= k;
        row.push_back(std::move(next));
    }
    return row;
}

} // namespace cyclicpoly
