#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "queenlab/digraph.hpp"
#include "queenlab/labeling.hpp"

namespace queenlab {

/// Largest board the bitmask search accepts.
inline constexpr int kMaxEnumerationSize = 32;

/// Receives each solution as its column vector (1-based, one entry per row).
/// Return false to stop the search.
using SolutionVisitor = std::function<bool(const std::vector<int>&)>;

/// Visits every solution exactly once, in lexicographic order of the column
/// vector. Throws std::invalid_argument for n outside [1, kMaxEnumerationSize].
void for_each_solution(int n, Board board, const SolutionVisitor& visit);

/// Column vectors of at most limit solutions, lexicographic.
std::vector<std::vector<int>> solution_permutations(int n, Board board,
                                                    std::optional<std::size_t> limit = {});

std::vector<Placement> enumerate_standard(int n, std::optional<std::size_t> limit = {});
std::vector<Placement> enumerate_modular(int n, std::optional<std::size_t> limit = {});

/// Q(n). The first row's columns are searched concurrently.
std::uint64_t count_standard(int n);
/// M(n).
std::uint64_t count_modular(int n);

/// Cycle types of the digraphs of all standard n-solutions.
std::set<CycleType> achievable_cycle_types(int n);

struct BoundCheckReport {
  int m = 0;
  int n = 0;
  std::string mode;                  // "restricted", "full" or "sampled"
  std::size_t base_count = 0;        // M(m)
  std::size_t family_size = 0;       // members h may choose from
  std::uint64_t generated = 0;       // products built
  std::uint64_t valid = 0;           // of those, modular-valid
  std::uint64_t distinct_inputs = 0; // distinct (base, assignment) pairs
  std::uint64_t distinct_products = 0;
  /// Restricted and full modes: M(m) * family_size^m, the number of products
  /// an exhaustive run realizes. Sampled mode: the claimed M(m) * M(n)^m,
  /// saturated at UINT64_MAX.
  std::uint64_t bound = 0;

  bool all_valid() const { return valid == generated; }
  bool distinct() const { return distinct_products == distinct_inputs; }
};

/// Upper limit on the number of products an exhaustive check will build.
inline constexpr std::uint64_t kMaxBoundCheckProducts = 200000;

/// Every product of a modular m-solution with every assignment into family.
/// Throws std::invalid_argument when the family members are not of order n
/// or the run would exceed kMaxBoundCheckProducts.
BoundCheckReport modular_bound_check(int m, int n, const std::vector<LabeledDigraph>& family);

/// The family is every modular n-solution.
BoundCheckReport modular_bound_check(int m, int n);

/// Random (base, assignment) pairs with assignments into all modular
/// n-solutions.
BoundCheckReport modular_bound_check_sampled(int m, int n, std::size_t samples,
                                             std::uint64_t seed = 1);

}  // namespace queenlab
