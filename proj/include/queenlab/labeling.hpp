#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "queenlab/digraph.hpp"

namespace queenlab {

struct Square {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Square&, const Square&) = default;
};

/// Queens on an n x n board, rows and columns in [1, n]. Rows index arc
/// tails and columns index arc heads. Squares are kept sorted.
class Placement {
 public:
  Placement() = default;
  /// Throws std::invalid_argument on n < 1, a square off the board, or two
  /// queens on one square.
  Placement(int n, std::vector<Square> queens);

  int size() const { return n_; }
  const std::vector<Square>& queens() const { return queens_; }

  friend bool operator==(const Placement&, const Placement&) = default;

 private:
  int n_ = 0;
  std::vector<Square> queens_;
};

/// One queen per row, at column image[row-1].
Placement placement_from_permutation(const std::vector<int>& image);

enum class Condition { Sum, Diff, SumMod, DiffMod, Bijectivity, Regularity };

std::string to_string(Condition c);

struct Failure {
  Condition condition = Condition::Sum;
  /// The colliding pair, when the failure is a collision between two arcs.
  std::optional<std::pair<Arc, Arc>> witness;
  std::string detail;

  friend bool operator==(const Failure&, const Failure&) = default;
};

struct VerificationReport {
  std::vector<Failure> failures;

  bool is_valid() const { return failures.empty(); }
  void append(const VerificationReport& other);
};

std::string to_string(const Failure& f);

/// {u+v} over the arcs, in arc order.
std::vector<int> sum_multiset(const LabeledDigraph& d);
/// {v-u} over the arcs, in arc order.
std::vector<int> diff_multiset(const LabeledDigraph& d);

/// Queen labeling test: arc sums pairwise distinct and arc differences
/// pairwise distinct. One failure per colliding value, witnessed by the
/// lexicographically smallest pair of arcs sharing it.
VerificationReport verify_queen(const LabeledDigraph& d);

/// Same conditions modulo n, residues in [0, n-1].
VerificationReport verify_modular_queen(const LabeledDigraph& d);

enum class Board { Standard, Modular };

/// Board interpretation: the labeling conditions plus exactly one queen per
/// row and per column (regularity) and exactly n queens (bijectivity).
VerificationReport verify_solution(const LabeledDigraph& d, Board board);

Placement to_placement(const LabeledDigraph& d);

/// Throws std::invalid_argument if two queens share a row or a column.
LabeledDigraph from_placement(const Placement& p);

/// Totals of the sum and difference multisets equal n(n+1) and 0.
/// Throws std::invalid_argument if d is not 1-regular.
bool sigma_identity_check(const LabeledDigraph& d);

}  // namespace queenlab
