#include "kmatch/big_count.hpp"

#include <limits>

#include "kmatch/errors.hpp"

namespace kmatch {

BigCount binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw ParameterError("binomial: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigCount acc = 1;
  // acc * (n-k+j) is divisible by j after each step.
  for (std::int64_t j = 1; j <= k; ++j) {
    acc *= n - k + j;
    acc /= j;
  }
  return acc;
}

std::string to_string(const BigCount& value) { return value.str(); }

std::optional<std::uint64_t> to_u64(const BigCount& value) {
  if (value < 0 || value > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return value.convert_to<std::uint64_t>();
}

}  // namespace kmatch
