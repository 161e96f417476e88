#include "queenlab/product.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace queenlab {

FamilyAssignment::FamilyAssignment(std::vector<LabeledDigraph> family,
                                   std::map<Arc, std::size_t> assign)
    : family_(std::move(family)), assign_(std::move(assign)) {
  if (family_.empty()) throw std::invalid_argument("family must be non-empty");
  const int n = family_.front().order();
  for (std::size_t k = 1; k < family_.size(); ++k) {
    if (family_[k].order() != n) {
      throw std::invalid_argument("family member " + std::to_string(k) + " has order " +
                                  std::to_string(family_[k].order()) + ", expected " +
                                  std::to_string(n));
    }
  }
}

FamilyAssignment FamilyAssignment::constant(const LabeledDigraph& base, LabeledDigraph member) {
  std::map<Arc, std::size_t> assign;
  for (const Arc& a : base.arcs()) assign.emplace(a, 0);
  return FamilyAssignment({std::move(member)}, std::move(assign));
}

const LabeledDigraph& FamilyAssignment::member_for(const Arc& arc) const {
  const auto it = assign_.find(arc);
  if (it == assign_.end()) throw std::invalid_argument("arc " + to_string(arc) + " is unassigned");
  if (it->second >= family_.size()) {
    throw std::out_of_range("arc " + to_string(arc) + " is assigned family index " +
                            std::to_string(it->second) + " of " +
                            std::to_string(family_.size()));
  }
  return family_[it->second];
}

void FamilyAssignment::validate_for(const LabeledDigraph& base) const {
  for (const Arc& a : base.arcs()) {
    const auto it = assign_.find(a);
    if (it == assign_.end()) {
      throw std::invalid_argument("arc " + to_string(a) + " has no assigned family member");
    }
    if (it->second >= family_.size()) {
      throw std::invalid_argument("arc " + to_string(a) + " is assigned family index " +
                                  std::to_string(it->second) + " of " +
                                  std::to_string(family_.size()));
    }
  }
  for (const auto& [arc, idx] : assign_) {
    if (!base.contains(arc)) {
      throw std::invalid_argument("assignment names " + to_string(arc) +
                                  ", which is not an arc of the base digraph");
    }
  }
}

LabeledDigraph oh_product(const LabeledDigraph& base, const FamilyAssignment& fa) {
  fa.validate_for(base);
  const int n = fa.member_order();
  std::vector<Arc> arcs;
  for (const Arc& e : base.arcs()) {
    for (const Arc& f : fa.member_for(e).arcs()) {
      arcs.push_back({product_label(e.tail, f.tail, n), product_label(e.head, f.head, n)});
    }
  }
  // Distinct (e, f) pairs give distinct product arcs since the label map is
  // a bijection; only the order needs fixing.
  std::sort(arcs.begin(), arcs.end());
  return detail::from_sorted_unique(base.order() * n, std::move(arcs));
}

LabeledDigraph direct_product(const LabeledDigraph& d1, const LabeledDigraph& d2) {
  return oh_product(d1, FamilyAssignment::constant(d1, d2));
}

namespace {

std::set<int> value_set(const std::vector<int>& values) {
  return std::set<int>(values.begin(), values.end());
}

bool shifted_disjoint(const std::set<int>& lower, const std::set<int>& upper, int n) {
  return std::none_of(lower.begin(), lower.end(),
                      [&](int v) { return upper.count(v - n) != 0; });
}

template <typename ArcValue, typename MemberValues>
VerificationReport check_adjacent_condition(const LabeledDigraph& base,
                                            const FamilyAssignment& fa, Condition tag,
                                            ArcValue arc_value, MemberValues member_values) {
  fa.validate_for(base);
  const int n = fa.member_order();
  std::vector<std::set<int>> member_sets;
  for (const LabeledDigraph& f : fa.family()) member_sets.push_back(value_set(member_values(f)));

  VerificationReport report;
  const auto& arcs = base.arcs();
  for (const Arc& e : arcs) {
    for (const Arc& e2 : arcs) {
      if (arc_value(e) != arc_value(e2) - 1) continue;
      const std::set<int>& lower = member_sets[fa.assignment().at(e)];
      const std::set<int>& upper = member_sets[fa.assignment().at(e2)];
      if (!shifted_disjoint(lower, upper, n)) {
        report.failures.push_back(
            {tag, std::make_pair(e, e2), "shifted member values intersect"});
      }
    }
  }
  return report;
}

}  // namespace

VerificationReport check_sum_condition(const LabeledDigraph& base, const FamilyAssignment& fa) {
  return check_adjacent_condition(
      base, fa, Condition::Sum, [](const Arc& a) { return a.tail + a.head; },
      [](const LabeledDigraph& f) { return sum_multiset(f); });
}

VerificationReport check_diff_condition(const LabeledDigraph& base, const FamilyAssignment& fa) {
  return check_adjacent_condition(
      base, fa, Condition::Diff, [](const Arc& a) { return a.head - a.tail; },
      [](const LabeledDigraph& f) { return diff_multiset(f); });
}

bool check_corollary_sets(const std::vector<LabeledDigraph>& gamma, int n) {
  if (gamma.empty()) return false;
  for (const LabeledDigraph& f : gamma) {
    if (f.order() != n) return false;
  }
  const std::set<int> sums = value_set(sum_multiset(gamma.front()));
  const std::set<int> diffs = value_set(diff_multiset(gamma.front()));
  for (std::size_t k = 1; k < gamma.size(); ++k) {
    if (value_set(sum_multiset(gamma[k])) != sums) return false;
    if (value_set(diff_multiset(gamma[k])) != diffs) return false;
  }
  return shifted_disjoint(sums, sums, n) && shifted_disjoint(diffs, diffs, n);
}

bool ProductReport::hypotheses_hold() const {
  return base.is_valid() && sum_condition.is_valid() && diff_condition.is_valid() &&
         std::all_of(family.begin(), family.end(),
                     [](const VerificationReport& r) { return r.is_valid(); });
}

ProductReport product_preserves_queen(const LabeledDigraph& base, const FamilyAssignment& fa) {
  ProductReport report;
  report.base = verify_queen(base);
  for (const LabeledDigraph& f : fa.family()) report.family.push_back(verify_queen(f));
  report.sum_condition = check_sum_condition(base, fa);
  report.diff_condition = check_diff_condition(base, fa);
  report.result = oh_product(base, fa);
  report.product = verify_queen(report.result);
  return report;
}

ProductReport product_preserves_modular(const LabeledDigraph& base, const FamilyAssignment& fa) {
  ProductReport report;
  report.base = verify_modular_queen(base);
  for (const LabeledDigraph& f : fa.family()) report.family.push_back(verify_modular_queen(f));
  report.result = oh_product(base, fa);
  report.product = verify_modular_queen(report.result);
  return report;
}

}  // namespace queenlab
