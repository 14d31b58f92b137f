#include "kmatch/vertex_set.hpp"

#include "kmatch/errors.hpp"

namespace kmatch {

VertexSet VertexSet::prefix(int count) { return range(0, count); }

VertexSet VertexSet::range(int first, int count) {
  if (first < 0 || count < 0 || first + count > kCapacity) {
    throw ParameterError("vertex range exceeds the 128-vertex capacity");
  }
  VertexSet s;
  for (int v = first; v < first + count; ++v) s.insert(v);
  return s;
}

VertexSet VertexSet::from_vector(const std::vector<int>& vertices) {
  VertexSet s;
  for (int v : vertices) {
    if (v < 0 || v >= kCapacity) throw ParameterError("vertex label outside [0, 128)");
    s.insert(v);
  }
  return s;
}

int VertexSet::max() const {
  if (words_[1] != 0) return 127 - std::countl_zero(words_[1]);
  if (words_[0] != 0) return 63 - std::countl_zero(words_[0]);
  return -1;
}

int VertexSet::min() const {
  if (words_[0] != 0) return std::countr_zero(words_[0]);
  if (words_[1] != 0) return 64 + std::countr_zero(words_[1]);
  return -1;
}

std::vector<int> VertexSet::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](int v) { out.push_back(v); });
  return out;
}

}  // namespace kmatch
