#include "kmatch/params.hpp"

#include <string>

#include "kmatch/errors.hpp"

namespace kmatch {

void Params::validate() const {
  if (n < 0 || n > 128) throw ParameterError("n must lie in [0, 128]");
  if (k < 1) throw ParameterError("k must be at least 1");
  if (k > r) throw ParameterError("k must not exceed r");
  if (r > n) throw ParameterError("r must not exceed n");
  if (a < 1) throw ParameterError("a must be at least 1");
  if (i < 0) throw ParameterError("i must be nonnegative");
}

void Params::validate_frankl() const {
  validate();
  if (a < 2) throw ParameterError("Frankl families need a >= 2");
  if (static_cast<std::int64_t>(block_size()) * (a - 1) > n) {
    throw ParameterError("(k+2i)(a-1) = " +
                         std::to_string(static_cast<std::int64_t>(block_size()) * (a - 1)) +
                         " exceeds n = " + std::to_string(n));
  }
  if (i > max_block_parameter()) throw ParameterError("i exceeds (floor(n/(a-1)) - k)/2");
}

std::int64_t Params::n0() const {
  return static_cast<std::int64_t>(r) * a - static_cast<std::int64_t>(a - 1) * (k - 1) - 1;
}

int Params::max_block_parameter() const {
  if (a < 2) throw ParameterError("the block parameter range needs a >= 2");
  const int span = n / (a - 1) - k;
  // Floor division; span may be negative.
  return span >= 0 ? span / 2 : -((-span + 1) / 2);
}

}  // namespace kmatch
