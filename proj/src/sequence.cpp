#include "grundy/sequence.hpp"

#include <algorithm>
#include <string>

#include "grundy/errors.hpp"

namespace grundy {

namespace {

void require_distinct(const std::vector<Vertex>& items) {
  std::vector<Vertex> sorted = items;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) throw InputError("sequence repeats vertex " + std::to_string(*dup));
}

}  // namespace

VertexSequence::VertexSequence(std::initializer_list<Vertex> items) : items_(items) { require_distinct(items_); }

VertexSequence::VertexSequence(std::vector<Vertex> items) : items_(std::move(items)) { require_distinct(items_); }

std::optional<std::size_t> VertexSequence::order(Vertex v) const {
  auto it = std::find(items_.begin(), items_.end(), v);
  if (it == items_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - items_.begin()) + 1;
}

VertexSequence VertexSequence::reversed() const {
  VertexSequence out;
  out.items_.assign(items_.rbegin(), items_.rend());
  return out;
}

VertexSet VertexSequence::underlying_set() const {
  VertexSet out = items_;
  std::sort(out.begin(), out.end());
  return out;
}

VertexSequence VertexSequence::concat(const VertexSequence& tail) const {
  std::vector<Vertex> joined = items_;
  joined.insert(joined.end(), tail.items_.begin(), tail.items_.end());
  return VertexSequence(std::move(joined));
}

VertexSequence& VertexSequence::append(Vertex v) {
  if (contains(v)) throw InputError("sequence repeats vertex " + std::to_string(v));
  items_.push_back(v);
  return *this;
}

}  // namespace grundy
