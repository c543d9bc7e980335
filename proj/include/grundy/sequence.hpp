#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "grundy/graph.hpp"

namespace grundy {

/// Ordered list of distinct vertices.
class VertexSequence {
 public:
  VertexSequence() = default;
  VertexSequence(std::initializer_list<Vertex> items);
  explicit VertexSequence(std::vector<Vertex> items);

  const std::vector<Vertex>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  Vertex operator[](std::size_t i) const { return items_[i]; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  /// 1-based position of v, if present.
  std::optional<std::size_t> order(Vertex v) const;
  bool contains(Vertex v) const { return order(v).has_value(); }

  VertexSequence reversed() const;
  /// The underlying set, sorted.
  VertexSet underlying_set() const;

  /// Concatenation of vertex-disjoint sequences; throws InputError otherwise.
  VertexSequence concat(const VertexSequence& tail) const;
  VertexSequence& append(Vertex v);

  friend bool operator==(const VertexSequence& a, const VertexSequence& b) { return a.items_ == b.items_; }
  friend bool operator<(const VertexSequence& a, const VertexSequence& b) { return a.items_ < b.items_; }

 private:
  std::vector<Vertex> items_;
};

inline VertexSequence operator+(const VertexSequence& a, const VertexSequence& b) { return a.concat(b); }

}  // namespace grundy
