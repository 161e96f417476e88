#include "queenlab/constructions.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "queenlab/product.hpp"

namespace queenlab {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) { return ((a % n) + n) % n; }

// Cycle type of C_a (x) C_b: gcd(a,b) cycles of length lcm(a,b).
CycleType cycle_product_type(int a, int b) {
  return CycleType(std::vector<int>(std::gcd(a, b), std::lcm(a, b)));
}

}  // namespace

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::int64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

std::int64_t multiplicative_order(std::int64_t g, std::int64_t p) {
  if (p < 2) throw std::invalid_argument("modulus must be at least 2");
  if (std::gcd(mod(g, p), p) != 1) {
    throw std::invalid_argument(std::to_string(g) + " is not a unit modulo " + std::to_string(p));
  }
  const std::int64_t base = mod(g, p);
  std::int64_t power = base;
  std::int64_t k = 1;
  while (power != 1 % p) {
    power = power * base % p;
    ++k;
  }
  return k;
}

bool is_primitive_root(std::int64_t g, std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  return multiplicative_order(g, p) == p - 1;
}

std::optional<bool> park_criterion(std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if ((p - 1) % 2 == 0) {
    const std::int64_t q = (p - 1) / 2;
    if (q % 2 == 1 && is_prime(q)) return q % 4 == 1;
  }
  if ((p - 1) % 4 == 0 && is_prime((p - 1) / 4)) return true;
  return std::nullopt;
}

LabeledDigraph strong_cycle(int k) {
  if (k < 1) throw std::invalid_argument("cycle length must be positive");
  std::vector<Label> image(k);
  for (int i = 1; i <= k; ++i) image[i - 1] = i % k + 1;
  return from_permutation(image);
}

LabeledDigraph polya_doubling(int p) {
  if (p < 1) throw std::invalid_argument("modulus must be positive");
  std::vector<Arc> arcs;
  arcs.reserve(p);
  for (int x = 0; x < p; ++x) arcs.push_back({x + 1, (2 * x) % p + 1});
  return from_arcs(p, arcs);
}

CycleType doubling_structure(int p) {
  if (p < 3 || !is_prime(p)) {
    throw std::invalid_argument(std::to_string(p) + " is not an odd prime");
  }
  const int d = static_cast<int>(multiplicative_order(2, p));
  std::vector<int> lengths((p - 1) / d, d);
  lengths.push_back(1);
  return CycleType(std::move(lengths));
}

std::uint64_t jacobsthal_number(int i) {
  if (i < 1) throw std::invalid_argument("Jacobsthal index starts at 1");
  if (i > 65) throw std::overflow_error("Jacobsthal number a_" + std::to_string(i) +
                                        " does not fit in 64 bits");
  std::uint64_t prev = 1, cur = 1;  // a_1, a_2
  if (i <= 2) return 1;
  for (int k = 3; k <= i; ++k) {
    const std::uint64_t next = cur + 2 * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::int64_t jacobsthal_residue(int i, std::int64_t n) {
  if (i < 1) throw std::invalid_argument("Jacobsthal index starts at 1");
  if (n < 1) throw std::invalid_argument("modulus must be positive");
  std::int64_t prev = 1 % n, cur = 1 % n;
  for (int k = 3; k <= i; ++k) {
    const std::int64_t next = (cur + 2 * prev) % n;
    prev = cur;
    cur = next;
  }
  return cur;
}

LabeledDigraph jacobsthal_digraph(int n) {
  if (n < 1 || n % 2 == 0) {
    throw std::invalid_argument("Jacobsthal digraph needs an odd positive order, got " +
                                std::to_string(n));
  }
  std::vector<Label> image(n);
  for (int u = 1; u <= n; ++u) {
    const auto r = static_cast<int>(mod(-2LL * u + 2, n));
    image[u - 1] = r == 0 ? n : r;
  }
  return from_permutation(image);
}

CycleType ThetaPartition::predicted_cycle_type() const {
  std::vector<int> lengths;
  for (const auto& [k, members] : classes) {
    const int size = static_cast<int>(members.size());
    if (size % k != 0) {
      throw std::logic_error("class " + std::to_string(k) + " has " + std::to_string(size) +
                             " elements, not a multiple of " + std::to_string(k));
    }
    lengths.insert(lengths.end(), size / k, k);
  }
  return CycleType(std::move(lengths));
}

ThetaPartition theta_partition(int n) {
  if (n < 1 || n % 2 == 0) {
    throw std::invalid_argument("theta partition needs an odd positive n, got " +
                                std::to_string(n));
  }
  std::vector<std::int64_t> a(n + 1);
  for (int i = 1; i <= n; ++i) a[i] = jacobsthal_residue(i, n);
  ThetaPartition theta;
  theta.n = n;
  for (int x = 1; x <= n; ++x) {
    int k = 0;
    for (int i = 1; i <= n && k == 0; ++i) {
      if (mod(3 * a[i] * x - 2 * a[i], n) == 0) k = i;
    }
    if (k == 0) {
      throw std::logic_error("no index i <= " + std::to_string(n) + " classifies x = " +
                             std::to_string(x));
    }
    theta.classes[k].push_back(x);
  }
  return theta;
}

Placement three_cycles_placement(int m) {
  if (m < 3 || m % 3 == 2) {
    throw std::invalid_argument("three-cycle placement needs m >= 3 and m = 0,1 (mod 3), got " +
                                std::to_string(m));
  }
  const int count = m * (m - 1);
  std::vector<int> image(count);
  for (int i = 1; i <= count; ++i) {
    image[i - 1] = (m - 1) * ((i - 1) % m) + (m - 1) - (i - 1) / m;
  }
  return placement_from_permutation(image);
}

Placement polya_composite(const std::vector<Placement>& standard, const std::vector<int>& pi,
                          const Placement& modular_g) {
  if (standard.empty()) throw std::invalid_argument("at least one standard solution required");
  const int m = standard.front().size();
  const int n = modular_g.size();
  if (m <= 3 || n <= 3) throw std::invalid_argument("both board sizes must exceed 3");
  if (std::gcd(n, 6) != 1) {
    throw std::invalid_argument("modular board size " + std::to_string(n) +
                                " is not coprime to 6");
  }
  if (static_cast<int>(pi.size()) != n) {
    throw std::invalid_argument("pi must have " + std::to_string(n) + " entries");
  }

  std::vector<std::vector<int>> f;
  for (const Placement& s : standard) {
    if (s.size() != m) throw std::invalid_argument("standard solutions differ in size");
    const LabeledDigraph d = from_placement(s);
    if (!verify_solution(d, Board::Standard).is_valid()) {
      throw std::invalid_argument("a supplied standard placement is not a solution");
    }
    f.push_back(as_permutation(d));
  }
  const LabeledDigraph gd = from_placement(modular_g);
  if (!verify_solution(gd, Board::Modular).is_valid()) {
    throw std::invalid_argument("the supplied modular placement is not a modular solution");
  }
  const std::vector<int> g = as_permutation(gd);

  std::vector<int> image(static_cast<std::size_t>(m) * n);
  for (int b = 0; b < n; ++b) {
    if (pi[b] < 0 || pi[b] >= static_cast<int>(f.size())) {
      throw std::invalid_argument("pi(" + std::to_string(b) + ") = " + std::to_string(pi[b]) +
                                  " is out of range");
    }
    const std::vector<int>& fb = f[pi[b]];
    for (int a = 0; a < m; ++a) {
      const int column = (fb[a] - 1) * n + (g[b] - 1);
      image[a * n + b] = column + 1;
    }
  }
  return placement_from_permutation(image);
}

namespace {

void check_final_lemma_inputs(int m, int p) {
  if (m < 3 || m % 3 == 2) {
    throw std::invalid_argument("m must satisfy m >= 3 and m = 0,1 (mod 3), got " +
                                std::to_string(m));
  }
  if (p <= 4 || !is_prime(p) || !is_primitive_root(2, p)) {
    throw std::invalid_argument("p must be a prime above 4 with 2 as a primitive root, got " +
                                std::to_string(p));
  }
}

}  // namespace

CycleType final_lemma_structure(int m, int p) {
  check_final_lemma_inputs(m, p);
  // C_3 (x) (C_{p-1} u C_1) = (C_3 (x) C_{p-1}) u (C_3 (x) C_1).
  const CycleType per_copy = cycle_product_type(3, p - 1) + cycle_product_type(3, 1);
  CycleType total;
  for (int c = 0; c < m * (m - 1) / 3; ++c) total = total + per_copy;
  return total;
}

LabeledDigraph final_lemma_digraph(int m, int p) {
  check_final_lemma_inputs(m, p);
  return direct_product(from_placement(three_cycles_placement(m)), polya_doubling(p));
}

}  // namespace queenlab
