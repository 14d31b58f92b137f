#include "kmatch/shifting.hpp"

#include <stdexcept>
#include <vector>

#include "kmatch/errors.hpp"

namespace kmatch {

Hypergraph shift(const Hypergraph& h, int i, int j, ShiftDirection direction) {
  if (!(0 <= i && i < j && j < h.vertex_count())) {
    throw ArgumentError("shift needs 0 <= i < j < n");
  }
  const int source = direction == ShiftDirection::up ? i : j;
  const int target = direction == ShiftDirection::up ? j : i;
  std::vector<VertexSet> out;
  out.reserve(h.size());
  for (const VertexSet& e : h.edges()) {
    if (e.contains(source) && !e.contains(target)) {
      VertexSet moved = e;
      moved.erase(source);
      moved.insert(target);
      if (!h.contains(moved)) {
        out.push_back(moved);
        continue;
      }
    }
    out.push_back(e);
  }
  return Hypergraph(h.vertex_count(), h.uniformity(), std::move(out));
}

bool is_stable(const Hypergraph& h, ShiftDirection direction) {
  const int n = h.vertex_count();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (shift(h, i, j, direction) != h) return false;
    }
  }
  return true;
}

StabilizeResult stabilize(const Hypergraph& h, ShiftDirection direction) {
  const int n = h.vertex_count();
  const std::uint64_t cap = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(h.uniformity()) * h.size();
  StabilizeResult result{h, 0};
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        Hypergraph next = shift(result.hypergraph, i, j, direction);
        if (next != result.hypergraph) {
          result.hypergraph = std::move(next);
          ++result.effective_shifts;
          changed = true;
          if (result.effective_shifts > cap) {
            throw std::logic_error("stabilize exceeded the n*r*|E| effective-shift cap");
          }
        }
      }
    }
  }
  return result;
}

}  // namespace kmatch
