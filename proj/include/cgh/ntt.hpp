#pragma once

#include <cstdint>
#include <vector>

namespace cgh {

// Truncated product of a and b modulo m, keeping coefficients below
// `limit`. Uses three-prime number-theoretic transforms with CRT, so any
// m < 2^31 and lengths up to 2^23 are exact. Short inputs use schoolbook
// multiplication.
std::vector<std::uint64_t> multiply_mod(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b, std::uint64_t m,
                                        std::size_t limit);

// Coefficients 0..limit-1 of f^e modulo m.
std::vector<std::uint64_t> power_mod(const std::vector<std::uint64_t>& f, std::uint64_t e, std::uint64_t m, std::size_t limit);

} // namespace cgh
