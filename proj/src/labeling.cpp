#include "queenlab/labeling.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace queenlab {

Placement::Placement(int n, std::vector<Square> queens) : n_(n), queens_(std::move(queens)) {
  if (n < 1) throw std::invalid_argument("board size must be positive");
  for (const Square& q : queens_) {
    if (q.row < 1 || q.row > n || q.col < 1 || q.col > n) {
      throw std::invalid_argument("queen (" + std::to_string(q.row) + "," +
                                  std::to_string(q.col) + ") is off the board");
    }
  }
  std::sort(queens_.begin(), queens_.end());
  if (std::adjacent_find(queens_.begin(), queens_.end()) != queens_.end()) {
    throw std::invalid_argument("two queens on one square");
  }
}

Placement placement_from_permutation(const std::vector<int>& image) {
  std::vector<Square> queens;
  queens.reserve(image.size());
  for (std::size_t i = 0; i < image.size(); ++i) {
    queens.push_back({static_cast<int>(i) + 1, image[i]});
  }
  return Placement(static_cast<int>(image.size()), std::move(queens));
}

std::string to_string(Condition c) {
  switch (c) {
    case Condition::Sum: return "sum";
    case Condition::Diff: return "diff";
    case Condition::SumMod: return "sum-mod";
    case Condition::DiffMod: return "diff-mod";
    case Condition::Bijectivity: return "bijectivity";
    case Condition::Regularity: return "regularity";
  }
  return "unknown";
}

std::string to_string(const Failure& f) {
  std::string s = to_string(f.condition);
  if (f.witness) s += " " + to_string(f.witness->first) + " " + to_string(f.witness->second);
  if (!f.detail.empty()) s += ": " + f.detail;
  return s;
}

void VerificationReport::append(const VerificationReport& other) {
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

std::vector<int> sum_multiset(const LabeledDigraph& d) {
  std::vector<int> out;
  out.reserve(d.size());
  for (const Arc& a : d.arcs()) out.push_back(a.tail + a.head);
  return out;
}

std::vector<int> diff_multiset(const LabeledDigraph& d) {
  std::vector<int> out;
  out.reserve(d.size());
  for (const Arc& a : d.arcs()) out.push_back(a.head - a.tail);
  return out;
}

namespace {

int residue(int value, int n) { return ((value % n) + n) % n; }

// Arcs are visited in sorted order, so the first two arcs recorded for a
// value form the lexicographically smallest colliding pair for that value.
void collect_collisions(const LabeledDigraph& d, const std::vector<int>& values,
                        Condition condition, std::vector<Failure>& out) {
  std::map<int, std::vector<std::size_t>> by_value;
  for (std::size_t k = 0; k < values.size(); ++k) by_value[values[k]].push_back(k);
  for (const auto& [value, idx] : by_value) {
    if (idx.size() < 2) continue;
    const auto& arcs = d.arcs();
    out.push_back({condition, std::make_pair(arcs[idx[0]], arcs[idx[1]]),
                   "value " + std::to_string(value) + " repeated " +
                       std::to_string(idx.size()) + " times"});
  }
}

void sort_by_witness(std::vector<Failure>& failures) {
  std::stable_sort(failures.begin(), failures.end(), [](const Failure& a, const Failure& b) {
    return a.witness < b.witness;
  });
}

VerificationReport verify_labeling(const LabeledDigraph& d, Board board) {
  const int n = d.order();
  std::vector<int> sums = sum_multiset(d);
  std::vector<int> diffs = diff_multiset(d);
  Condition sum_tag = Condition::Sum;
  Condition diff_tag = Condition::Diff;
  if (board == Board::Modular) {
    for (int& s : sums) s = residue(s, n);
    for (int& v : diffs) v = residue(v, n);
    sum_tag = Condition::SumMod;
    diff_tag = Condition::DiffMod;
  }
  std::vector<Failure> sum_failures;
  std::vector<Failure> diff_failures;
  collect_collisions(d, sums, sum_tag, sum_failures);
  collect_collisions(d, diffs, diff_tag, diff_failures);
  sort_by_witness(sum_failures);
  sort_by_witness(diff_failures);
  VerificationReport report;
  report.failures = std::move(sum_failures);
  report.failures.insert(report.failures.end(), diff_failures.begin(), diff_failures.end());
  return report;
}

}  // namespace

VerificationReport verify_queen(const LabeledDigraph& d) {
  return verify_labeling(d, Board::Standard);
}

VerificationReport verify_modular_queen(const LabeledDigraph& d) {
  return verify_labeling(d, Board::Modular);
}

VerificationReport verify_solution(const LabeledDigraph& d, Board board) {
  const int n = d.order();
  VerificationReport report;
  if (static_cast<int>(d.size()) != n) {
    report.failures.push_back({Condition::Bijectivity, std::nullopt,
                               std::to_string(d.size()) + " queens on a board of size " +
                                   std::to_string(n)});
  }
  std::vector<std::optional<Arc>> by_tail(n + 1), by_head(n + 1);
  for (const Arc& a : d.arcs()) {
    if (by_tail[a.tail]) {
      report.failures.push_back(
          {Condition::Regularity, std::make_pair(*by_tail[a.tail], a), "shared row"});
    } else {
      by_tail[a.tail] = a;
    }
    if (by_head[a.head]) {
      report.failures.push_back(
          {Condition::Regularity, std::make_pair(*by_head[a.head], a), "shared column"});
    } else {
      by_head[a.head] = a;
    }
  }
  for (int v = 1; v <= n; ++v) {
    if (!by_tail[v]) {
      report.failures.push_back(
          {Condition::Regularity, std::nullopt, "row " + std::to_string(v) + " is empty"});
    }
    if (!by_head[v]) {
      report.failures.push_back(
          {Condition::Regularity, std::nullopt, "column " + std::to_string(v) + " is empty"});
    }
  }
  report.append(verify_labeling(d, board));
  return report;
}

Placement to_placement(const LabeledDigraph& d) {
  std::vector<Square> queens;
  queens.reserve(d.size());
  for (const Arc& a : d.arcs()) queens.push_back({a.tail, a.head});
  return Placement(d.order(), std::move(queens));
}

LabeledDigraph from_placement(const Placement& p) {
  const int n = p.size();
  std::vector<bool> row(n + 1, false), col(n + 1, false);
  std::vector<Arc> arcs;
  arcs.reserve(p.queens().size());
  for (const Square& q : p.queens()) {
    if (row[q.row]) throw std::invalid_argument("two queens in row " + std::to_string(q.row));
    if (col[q.col]) throw std::invalid_argument("two queens in column " + std::to_string(q.col));
    row[q.row] = col[q.col] = true;
    arcs.push_back({q.row, q.col});
  }
  return detail::from_sorted_unique(n, std::move(arcs));
}

bool sigma_identity_check(const LabeledDigraph& d) {
  if (!is_one_regular(d)) throw std::invalid_argument("digraph is not 1-regular");
  const long long n = d.order();
  const std::vector<int> sums = sum_multiset(d);
  const std::vector<int> diffs = diff_multiset(d);
  const long long sum_total = std::accumulate(sums.begin(), sums.end(), 0LL);
  const long long diff_total = std::accumulate(diffs.begin(), diffs.end(), 0LL);
  return sum_total == n * (n + 1) && diff_total == 0;
}

}  // namespace queenlab
