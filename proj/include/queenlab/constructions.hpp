#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "queenlab/digraph.hpp"
#include "queenlab/labeling.hpp"

namespace queenlab {

// Number theory helpers. Trial division; intended for inputs below 10^6.

bool is_prime(std::int64_t p);

/// Least k >= 1 with g^k = 1 (mod p). Throws std::invalid_argument when
/// p < 2 or gcd(g, p) != 1.
std::int64_t multiplicative_order(std::int64_t g, std::int64_t p);

/// Throws std::invalid_argument unless p is prime and p does not divide g.
bool is_primitive_root(std::int64_t g, std::int64_t p);

/// Decides whether 2 is a primitive root of the prime p from the shape of p:
/// p = 2q+1 with q an odd prime gives (q = 1 mod 4); p = 4q+1 with q prime
/// gives true. nullopt when p has neither shape.
std::optional<bool> park_criterion(std::int64_t p);

// Oriented cycles and the doubling digraph.

/// Directed cycle 1 -> 2 -> ... -> k -> 1; k = 1 is a loop.
LabeledDigraph strong_cycle(int k);

/// Arc (x+1, (2x mod p)+1) for each residue x. 1-regular for odd p.
LabeledDigraph polya_doubling(int p);

/// Predicted cycle type of polya_doubling(p): one loop and (p-1)/d cycles of
/// length d, d the order of 2 mod p. Throws unless p is an odd prime.
CycleType doubling_structure(int p);

// Jacobsthal digraph.

/// a_1 = a_2 = 1, a_i = a_{i-1} + 2 a_{i-2}. Throws std::overflow_error
/// past i = 65 and std::invalid_argument for i < 1.
std::uint64_t jacobsthal_number(int i);

/// a_i mod n, for any i >= 1.
std::int64_t jacobsthal_residue(int i, std::int64_t n);

/// Arc (u, v) with v = -2u + 2 (mod n), residue 0 written as label n.
/// Throws std::invalid_argument for even or non-positive n.
LabeledDigraph jacobsthal_digraph(int n);

struct ThetaPartition {
  int n = 0;
  /// k -> the x in [1, n] whose least i with 3 a_i x = 2 a_i (mod n) is k.
  std::map<int, std::vector<int>> classes;

  /// (|Theta_k| / k) cycles of length k for each class.
  /// Throws std::logic_error if some |Theta_k| is not divisible by k.
  CycleType predicted_cycle_type() const;
};

ThetaPartition theta_partition(int n);

// Placements built from explicit formulas.

/// m(m-1) queens at (i, f(i)) with
/// f(i) = (m-1)((i-1) mod m) + (m-1) - floor((i-1)/m).
/// Throws unless m >= 3 and m = 0 or 1 (mod 3).
Placement three_cycles_placement(int m);

/// Row an+b (0-based) gets column f_{pi(b)}(a) n + g(b), where the f's are
/// standard m-solutions and g a modular n-solution. pi[b] is a 0-based index
/// into standard. Throws std::invalid_argument on invalid inputs.
Placement polya_composite(const std::vector<Placement>& standard, const std::vector<int>& pi,
                          const Placement& modular_g);

/// Predicted cycle type of (m(m-1)/3) C_3 (x) (C_{p-1} u C_1): per 3-cycle,
/// gcd(p-1,3) cycles of length lcm(p-1,3) and one 3-cycle.
/// Throws unless m >= 3, m = 0,1 (mod 3), p > 4 prime with 2 primitive mod p.
CycleType final_lemma_structure(int m, int p);

/// The concrete product behind final_lemma_structure: the digraph of
/// three_cycles_placement(m) times polya_doubling(p).
LabeledDigraph final_lemma_digraph(int m, int p);

}  // namespace queenlab
