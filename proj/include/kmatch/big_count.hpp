#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace kmatch {

/// Exact integer used for every edge count and binomial. The type is signed
/// so alternating sums can accumulate directly; public results are never
/// negative.
using BigCount = boost::multiprecision::cpp_int;

/// C(n, k); zero when k < 0 or k > n. Throws ParameterError for n < 0.
BigCount binomial(std::int64_t n, std::int64_t k);

std::string to_string(const BigCount& value);

/// The value as uint64 when it fits.
std::optional<std::uint64_t> to_u64(const BigCount& value);

}  // namespace kmatch
