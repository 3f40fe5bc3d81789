#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hyperforge {

// First n coefficients of the product of integer power series, computed
// exactly with number-theoretic transforms modulo two 62-bit primes and CRT.
// Throws CoefficientOverflow when the product of the l1 norms could exceed
// the CRT range or a result does not fit in 64 bits.
std::vector<std::int64_t> exact_product(const std::vector<std::vector<std::int64_t>>& factors,
                                        std::size_t n);

// Reference O(n * nnz) product of a dense series with a sparse one.
std::vector<std::int64_t> sparse_product(const std::vector<std::int64_t>& dense,
                                         const std::vector<std::pair<std::size_t, std::int64_t>>& sparse,
                                         std::size_t n);

}  // namespace hyperforge
