#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "queenlab/digraph.hpp"
#include "queenlab/labeling.hpp"

namespace queenlab {

/// A family of labeled digraphs of one common order together with a choice
/// of family member for each arc of a base digraph.
class FamilyAssignment {
 public:
  /// Throws std::invalid_argument if the family is empty or its members
  /// have different orders.
  FamilyAssignment(std::vector<LabeledDigraph> family, std::map<Arc, std::size_t> assign);

  /// Every arc of base mapped to the single member.
  static FamilyAssignment constant(const LabeledDigraph& base, LabeledDigraph member);

  const std::vector<LabeledDigraph>& family() const { return family_; }
  const std::map<Arc, std::size_t>& assignment() const { return assign_; }
  int member_order() const { return family_.front().order(); }

  /// Throws std::out_of_range when an assigned index is outside the family.
  const LabeledDigraph& member_for(const Arc& arc) const;

  /// Throws std::invalid_argument unless every arc of base, and nothing
  /// else, has an assigned member.
  void validate_for(const LabeledDigraph& base) const;

 private:
  std::vector<LabeledDigraph> family_;
  std::map<Arc, std::size_t> assign_;
};

/// Product vertex (a, i) is materialized as the label n(a-1)+i, where n is
/// the family order.
inline Label product_label(Label a, Label i, int n) { return n * (a - 1) + i; }

/// Arc ((a,i),(b,j)) for each arc (a,b) of base and (i,j) of its member.
LabeledDigraph oh_product(const LabeledDigraph& base, const FamilyAssignment& fa);

/// Kronecker product: the oh-product with a constant assignment.
LabeledDigraph direct_product(const LabeledDigraph& d1, const LabeledDigraph& d2);

/// Over ordered arc pairs (e, e') with s(e) = s(e')-1, requires
/// (s(h(e)) - n) and s(h(e')) to be disjoint. Failures carry (e, e').
VerificationReport check_sum_condition(const LabeledDigraph& base, const FamilyAssignment& fa);

/// Same as check_sum_condition with differences.
VerificationReport check_diff_condition(const LabeledDigraph& base, const FamilyAssignment& fa);

/// All members share one sum set I and one difference set J, and both
/// (I-n) and (J-n) are disjoint from I and J respectively.
bool check_corollary_sets(const std::vector<LabeledDigraph>& gamma, int n);

struct ProductReport {
  VerificationReport base;                 // labeling check of the base digraph
  std::vector<VerificationReport> family;  // one per family member
  VerificationReport sum_condition;        // empty for the modular variant
  VerificationReport diff_condition;       // empty for the modular variant
  VerificationReport product;              // re-verification of the product
  LabeledDigraph result;

  bool hypotheses_hold() const;
  bool conclusion_holds() const { return product.is_valid(); }
  /// Hypotheses hold but the conclusion does not.
  bool is_counterexample() const { return hypotheses_hold() && !conclusion_holds(); }
};

/// Checks the queen-product hypotheses (base and members queen-valid, both
/// side conditions) and re-verifies the product as a queen labeling.
ProductReport product_preserves_queen(const LabeledDigraph& base, const FamilyAssignment& fa);

/// Checks that base and members are modular-valid and re-verifies the
/// product as a modular queen labeling. No side conditions are checked, so
/// the conclusion may fail for non-constant assignments.
ProductReport product_preserves_modular(const LabeledDigraph& base, const FamilyAssignment& fa);

}  // namespace queenlab
