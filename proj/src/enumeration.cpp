#include "queenlab/enumeration.hpp"

#include <future>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>

#include "queenlab/product.hpp"

namespace queenlab {

namespace {

using Mask = std::uint64_t;

void check_size(int n) {
  if (n < 1 || n > kMaxEnumerationSize) {
    throw std::invalid_argument("board size must be in [1," + std::to_string(kMaxEnumerationSize) +
                                "], got " + std::to_string(n));
  }
}

// Row-by-row backtracking. A square (r, c), 0-based, uses column c, sum
// diagonal r+c and difference diagonal c-r+n-1; on the torus the two
// diagonals are (r+c) mod n and (c-r) mod n.
class Search {
 public:
  Search(int n, Board board) : n_(n), board_(board), columns_(n) {}

  // Returns false if the visitor asked to stop.
  bool run(int row, Mask cols, Mask sums, Mask diffs, const SolutionVisitor& visit) {
    if (row == n_) return visit(columns_);
    for (int c = 0; c < n_; ++c) {
      const Mask col_bit = Mask{1} << c;
      const Mask sum_bit = Mask{1} << sum_index(row, c);
      const Mask diff_bit = Mask{1} << diff_index(row, c);
      if ((cols & col_bit) || (sums & sum_bit) || (diffs & diff_bit)) continue;
      columns_[row] = c + 1;
      if (!run(row + 1, cols | col_bit, sums | sum_bit, diffs | diff_bit, visit)) return false;
    }
    return true;
  }

  std::uint64_t count(int row, Mask cols, Mask sums, Mask diffs) const {
    if (row == n_) return 1;
    std::uint64_t total = 0;
    for (int c = 0; c < n_; ++c) {
      const Mask col_bit = Mask{1} << c;
      const Mask sum_bit = Mask{1} << sum_index(row, c);
      const Mask diff_bit = Mask{1} << diff_index(row, c);
      if ((cols & col_bit) || (sums & sum_bit) || (diffs & diff_bit)) continue;
      total += count(row + 1, cols | col_bit, sums | sum_bit, diffs | diff_bit);
    }
    return total;
  }

  std::uint64_t count_with_first(int c) const {
    return count(1, Mask{1} << c, Mask{1} << sum_index(0, c), Mask{1} << diff_index(0, c));
  }

 private:
  int sum_index(int r, int c) const {
    return board_ == Board::Modular ? (r + c) % n_ : r + c;
  }
  int diff_index(int r, int c) const {
    return board_ == Board::Modular ? (c - r + n_) % n_ : c - r + n_ - 1;
  }

  int n_;
  Board board_;
  std::vector<int> columns_;
};

std::uint64_t count_solutions(int n, Board board) {
  check_size(n);
  const Search search(n, board);
  std::vector<std::future<std::uint64_t>> parts;
  parts.reserve(n);
  for (int c = 0; c < n; ++c) {
    parts.push_back(std::async(std::launch::async, [&search, c] { return search.count_with_first(c); }));
  }
  std::uint64_t total = 0;
  for (auto& part : parts) total += part.get();
  return total;
}

std::vector<Placement> to_placements(const std::vector<std::vector<int>>& perms) {
  std::vector<Placement> out;
  out.reserve(perms.size());
  for (const auto& p : perms) out.push_back(placement_from_permutation(p));
  return out;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int k = 0; k < exp; ++k) r = saturating_mul(r, base);
  return r;
}

std::vector<LabeledDigraph> modular_solutions(int n) {
  std::vector<LabeledDigraph> out;
  for (const auto& p : solution_permutations(n, Board::Modular)) out.push_back(from_permutation(p));
  return out;
}

// Feeds products into the report's tallies.
class BoundTally {
 public:
  explicit BoundTally(BoundCheckReport& report) : report_(report) {}

  void add(std::size_t base_index, const std::vector<std::size_t>& choice,
           const LabeledDigraph& product) {
    ++report_.generated;
    if (verify_modular_queen(product).is_valid()) ++report_.valid;
    std::vector<std::size_t> key = choice;
    key.push_back(base_index);
    inputs_.insert(std::move(key));
    products_.insert(as_permutation(product));
    report_.distinct_inputs = inputs_.size();
    report_.distinct_products = products_.size();
  }

 private:
  BoundCheckReport& report_;
  std::set<std::vector<std::size_t>> inputs_;
  std::set<std::vector<int>> products_;
};

FamilyAssignment make_assignment(const LabeledDigraph& base,
                                 const std::vector<LabeledDigraph>& family,
                                 const std::vector<std::size_t>& choice) {
  std::map<Arc, std::size_t> assign;
  for (std::size_t k = 0; k < base.arcs().size(); ++k) assign.emplace(base.arcs()[k], choice[k]);
  return FamilyAssignment(family, std::move(assign));
}

void check_bound_sizes(int m, int n) {
  if (m < 1 || n < 1 || m > 13 || n > 13) {
    throw std::invalid_argument("bound check sizes must lie in [1,13]");
  }
}

}  // namespace

void for_each_solution(int n, Board board, const SolutionVisitor& visit) {
  check_size(n);
  Search search(n, board);
  search.run(0, 0, 0, 0, visit);
}

std::vector<std::vector<int>> solution_permutations(int n, Board board,
                                                    std::optional<std::size_t> limit) {
  std::vector<std::vector<int>> out;
  if (limit && *limit == 0) {
    check_size(n);
    return out;
  }
  for_each_solution(n, board, [&](const std::vector<int>& cols) {
    out.push_back(cols);
    return !limit || out.size() < *limit;
  });
  return out;
}

std::vector<Placement> enumerate_standard(int n, std::optional<std::size_t> limit) {
  return to_placements(solution_permutations(n, Board::Standard, limit));
}

std::vector<Placement> enumerate_modular(int n, std::optional<std::size_t> limit) {
  return to_placements(solution_permutations(n, Board::Modular, limit));
}

std::uint64_t count_standard(int n) { return count_solutions(n, Board::Standard); }

std::uint64_t count_modular(int n) { return count_solutions(n, Board::Modular); }

std::set<CycleType> achievable_cycle_types(int n) {
  std::set<CycleType> types;
  for_each_solution(n, Board::Standard, [&](const std::vector<int>& cols) {
    types.insert(cycle_type(from_permutation(cols)));
    return true;
  });
  return types;
}

BoundCheckReport modular_bound_check(int m, int n, const std::vector<LabeledDigraph>& family) {
  check_bound_sizes(m, n);
  if (family.empty()) throw std::invalid_argument("family must be non-empty");
  for (const LabeledDigraph& f : family) {
    if (f.order() != n) throw std::invalid_argument("family members must have order " + std::to_string(n));
  }
  const std::vector<LabeledDigraph> bases = modular_solutions(m);

  BoundCheckReport report;
  report.m = m;
  report.n = n;
  report.mode = "restricted";
  report.base_count = bases.size();
  report.family_size = family.size();
  report.bound = saturating_mul(bases.size(), saturating_pow(family.size(), m));
  if (report.bound > kMaxBoundCheckProducts) {
    throw std::invalid_argument("exhaustive check would build " + std::to_string(report.bound) +
                                " products; limit is " + std::to_string(kMaxBoundCheckProducts));
  }

  BoundTally tally(report);
  for (std::size_t b = 0; b < bases.size(); ++b) {
    const LabeledDigraph& base = bases[b];
    // Odometer over family^|E(base)|.
    std::vector<std::size_t> choice(base.size(), 0);
    while (true) {
      tally.add(b, choice, oh_product(base, make_assignment(base, family, choice)));
      std::size_t k = 0;
      while (k < choice.size() && ++choice[k] == family.size()) choice[k++] = 0;
      if (k == choice.size()) break;
    }
  }
  return report;
}

BoundCheckReport modular_bound_check(int m, int n) {
  check_bound_sizes(m, n);
  BoundCheckReport report = modular_bound_check(m, n, modular_solutions(n));
  report.mode = "full";
  return report;
}

BoundCheckReport modular_bound_check_sampled(int m, int n, std::size_t samples,
                                             std::uint64_t seed) {
  check_bound_sizes(m, n);
  const std::vector<LabeledDigraph> bases = modular_solutions(m);
  const std::vector<LabeledDigraph> family = modular_solutions(n);
  BoundCheckReport report;
  report.m = m;
  report.n = n;
  report.mode = "sampled";
  report.base_count = bases.size();
  report.family_size = family.size();
  report.bound = saturating_mul(bases.size(), saturating_pow(family.size(), m));
  if (bases.empty() || family.empty()) return report;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_base(0, bases.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_member(0, family.size() - 1);
  BoundTally tally(report);
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t b = pick_base(rng);
    std::vector<std::size_t> choice(bases[b].size());
    for (auto& c : choice) c = pick_member(rng);
    tally.add(b, choice, oh_product(bases[b], make_assignment(bases[b], family, choice)));
  }
  return report;
}

}  // namespace queenlab
