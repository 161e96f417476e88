#include "queenlab/digraph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace queenlab {

std::string to_string(const Arc& arc) {
  return "(" + std::to_string(arc.tail) + "," + std::to_string(arc.head) + ")";
}

bool LabeledDigraph::contains(const Arc& arc) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), arc);
}

LabeledDigraph detail::from_sorted_unique(int n, std::vector<Arc> arcs) {
  LabeledDigraph d;
  d.order_ = n;
  d.arcs_ = std::move(arcs);
  return d;
}

LabeledDigraph from_arcs(int n, std::span<const Arc> arcs) {
  if (n < 1) {
    throw std::invalid_argument("digraph order must be positive, got " + std::to_string(n));
  }
  std::vector<Arc> sorted(arcs.begin(), arcs.end());
  for (const Arc& a : sorted) {
    if (a.tail < 1 || a.tail > n || a.head < 1 || a.head > n) {
      throw std::invalid_argument("arc " + to_string(a) + " has an endpoint outside [1," +
                                  std::to_string(n) + "]");
    }
  }
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    throw std::invalid_argument("duplicate arc " + to_string(*dup));
  }
  return detail::from_sorted_unique(n, std::move(sorted));
}

LabeledDigraph from_permutation(std::span<const Label> image) {
  const int n = static_cast<int>(image.size());
  if (n < 1) {
    throw std::invalid_argument("permutation must be non-empty");
  }
  std::vector<bool> seen(n + 1, false);
  std::vector<Arc> arcs;
  arcs.reserve(n);
  for (int i = 1; i <= n; ++i) {
    const Label v = image[i - 1];
    if (v < 1 || v > n || seen[v]) {
      throw std::invalid_argument("image is not a bijection of [1," + std::to_string(n) +
                                  "] (position " + std::to_string(i) + ")");
    }
    seen[v] = true;
    arcs.push_back({i, v});
  }
  return detail::from_sorted_unique(n, std::move(arcs));
}

bool is_one_regular(const LabeledDigraph& d) {
  const int n = d.order();
  if (static_cast<int>(d.size()) != n) return false;
  std::vector<int> out(n + 1, 0), in(n + 1, 0);
  for (const Arc& a : d.arcs()) {
    if (++out[a.tail] > 1 || ++in[a.head] > 1) return false;
  }
  return true;
}

std::vector<Label> as_permutation(const LabeledDigraph& d) {
  if (!is_one_regular(d)) {
    throw std::invalid_argument("digraph is not 1-regular");
  }
  // Sorted arcs of a 1-regular digraph have tails 1..n in order.
  std::vector<Label> image;
  image.reserve(d.size());
  for (const Arc& a : d.arcs()) image.push_back(a.head);
  return image;
}

CycleType::CycleType(std::vector<int> lengths) : lengths_(std::move(lengths)) {
  for (int len : lengths_) {
    if (len < 1) throw std::invalid_argument("cycle lengths must be positive");
  }
  std::sort(lengths_.begin(), lengths_.end(), std::greater<>());
}

int CycleType::total() const { return std::accumulate(lengths_.begin(), lengths_.end(), 0); }

std::size_t CycleType::count(int length) const {
  return static_cast<std::size_t>(std::count(lengths_.begin(), lengths_.end(), length));
}

CycleType operator+(const CycleType& a, const CycleType& b) {
  std::vector<int> all = a.lengths();
  all.insert(all.end(), b.lengths().begin(), b.lengths().end());
  return CycleType(std::move(all));
}

std::string to_string(const CycleType& type) {
  std::string s = "{";
  for (std::size_t i = 0; i < type.lengths().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(type.lengths()[i]);
  }
  return s + "}";
}

CycleType cycle_type(const LabeledDigraph& d) {
  const std::vector<Label> f = as_permutation(d);
  const int n = d.order();
  std::vector<bool> visited(n + 1, false);
  std::vector<int> lengths;
  for (int start = 1; start <= n; ++start) {
    if (visited[start]) continue;
    int len = 0;
    for (int v = start; !visited[v]; v = f[v - 1]) {
      visited[v] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return CycleType(std::move(lengths));
}

LabeledDigraph disjoint_union(const LabeledDigraph& d1, const LabeledDigraph& d2) {
  const int shift = d1.order();
  std::vector<Arc> arcs = d1.arcs();
  arcs.reserve(d1.size() + d2.size());
  for (const Arc& a : d2.arcs()) arcs.push_back({a.tail + shift, a.head + shift});
  // Shifted arcs all have tails above every tail of d1, so order is preserved.
  return detail::from_sorted_unique(d1.order() + d2.order(), std::move(arcs));
}

LabeledDigraph reverse(const LabeledDigraph& d) {
  std::vector<Arc> arcs;
  arcs.reserve(d.size());
  for (const Arc& a : d.arcs()) arcs.push_back({a.head, a.tail});
  std::sort(arcs.begin(), arcs.end());
  return detail::from_sorted_unique(d.order(), std::move(arcs));
}

LabeledDigraph rotate_quarter(const LabeledDigraph& d) {
  const int n = d.order();
  std::vector<Arc> arcs;
  arcs.reserve(d.size());
  for (const Arc& a : d.arcs()) arcs.push_back({a.head, n + 1 - a.tail});
  std::sort(arcs.begin(), arcs.end());
  return detail::from_sorted_unique(n, std::move(arcs));
}

}  // namespace queenlab
