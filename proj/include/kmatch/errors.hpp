#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace kmatch {

/// Invalid parameter tuple or construction precondition (CLI exit code 2).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An argument is structurally wrong for the object it refers to, e.g. a
/// matching that names an edge the host hypergraph does not have.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed hypergraph file or report input.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A search or enumeration budget ran out before the answer was certain.
/// `lower_bound` carries the best value proven so far, when there is one.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what,
                         std::optional<std::uint64_t> lower_bound = std::nullopt)
      : std::runtime_error(what), lower_bound_(lower_bound) {}

  [[nodiscard]] std::optional<std::uint64_t> lower_bound() const noexcept { return lower_bound_; }

 private:
  std::optional<std::uint64_t> lower_bound_;
};

}  // namespace kmatch
