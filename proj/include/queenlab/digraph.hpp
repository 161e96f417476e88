#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace queenlab {

/// Vertices are identified with their labels, always in [1, n].
using Label = int;

struct Arc {
  Label tail = 0;
  Label head = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

std::string to_string(const Arc& arc);

class LabeledDigraph;

namespace detail {
/// For callers that already hold a sorted, duplicate-free, in-range arc list.
LabeledDigraph from_sorted_unique(int n, std::vector<Arc> arcs);
}  // namespace detail

/// A digraph on the vertex set [1, n], loops allowed, no repeated arcs.
/// Arcs are kept sorted, so two digraphs compare equal iff they have the
/// same order and the same arc set.
class LabeledDigraph {
 public:
  LabeledDigraph() = default;

  int order() const { return order_; }
  std::size_t size() const { return arcs_.size(); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  bool contains(const Arc& arc) const;

  friend bool operator==(const LabeledDigraph&, const LabeledDigraph&) = default;

 private:
  friend LabeledDigraph detail::from_sorted_unique(int n, std::vector<Arc> arcs);

  int order_ = 0;
  std::vector<Arc> arcs_;
};

/// Throws std::invalid_argument on n < 1, an endpoint outside [1, n], or a
/// repeated arc.
LabeledDigraph from_arcs(int n, std::span<const Arc> arcs);
inline LabeledDigraph from_arcs(int n, std::initializer_list<Arc> arcs) {
  return from_arcs(n, std::span<const Arc>(arcs.begin(), arcs.size()));
}

/// Arcs (i, image[i-1]). Throws unless image is a bijection of [1, n].
LabeledDigraph from_permutation(std::span<const Label> image);
inline LabeledDigraph from_permutation(std::initializer_list<Label> image) {
  return from_permutation(std::span<const Label>(image.begin(), image.size()));
}

bool is_one_regular(const LabeledDigraph& d);

/// The permutation f with arcs (i, f(i)); element i-1 holds f(i).
/// Throws std::invalid_argument if d is not 1-regular.
std::vector<Label> as_permutation(const LabeledDigraph& d);

/// Multiset of cycle lengths of a 1-regular digraph, stored in
/// non-increasing order.
class CycleType {
 public:
  CycleType() = default;
  explicit CycleType(std::vector<int> lengths);
  CycleType(std::initializer_list<int> lengths)
      : CycleType(std::vector<int>(lengths)) {}

  const std::vector<int>& lengths() const { return lengths_; }
  int total() const;
  std::size_t count(int length) const;

  friend auto operator<=>(const CycleType&, const CycleType&) = default;

 private:
  std::vector<int> lengths_;
};

/// Multiset union.
CycleType operator+(const CycleType& a, const CycleType& b);

/// "{4,1}" style.
std::string to_string(const CycleType& type);

CycleType cycle_type(const LabeledDigraph& d);

/// Order n1 + n2; the labels of d2 are shifted up by n1.
LabeledDigraph disjoint_union(const LabeledDigraph& d1, const LabeledDigraph& d2);

LabeledDigraph reverse(const LabeledDigraph& d);

/// Rotates the adjacency matrix a quarter turn clockwise: (r, c) -> (c, n+1-r).
LabeledDigraph rotate_quarter(const LabeledDigraph& d);

}  // namespace queenlab
