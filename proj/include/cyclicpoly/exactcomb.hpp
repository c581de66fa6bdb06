#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cyclicpoly {

// Exact nonnegative integer count. Every quantity in this library is a Count;
// no fixed-width arithmetic is allowed to alter a result at any magnitude.
using Count = boost::multiprecision::cpp_int;

// C(n, k), exact. Returns 0 for k < 0 or k > n. Computed by the
// multiplicative product formula with running exact division (k factors).
// Requires n >= 0; throws std::domain_error otherwise.
Count binom(std::int64_t n, std::int64_t k);

// The classical Pascal row (C(n,0), C(n,1), ..., C(n,n)), length n + 1.
// Requires n >= 0; throws std::domain_error otherwise.
std::vector<Count> pascal_row(std::int64_t n);

} // namespace cyclicpoly
