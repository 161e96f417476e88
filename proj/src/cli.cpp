#include "queenlab/cli.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "queenlab/constructions.hpp"
#include "queenlab/enumeration.hpp"
#include "queenlab/io.hpp"
#include "queenlab/product.hpp"

namespace queenlab::cli {

namespace {

using io::Json;

// A usage problem discovered after argument parsing (bad parameter
// combination, unknown method).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json arc_json(const Arc& a) { return Json::array({a.tail, a.head}); }

Json failure_json(const Failure& f) {
  Json j{{"condition", to_string(f.condition)}};
  if (f.witness) j["witness"] = Json::array({arc_json(f.witness->first), arc_json(f.witness->second)});
  if (!f.detail.empty()) j["detail"] = f.detail;
  return j;
}

Json report_json(const VerificationReport& r) {
  Json failures = Json::array();
  for (const Failure& f : r.failures) failures.push_back(failure_json(f));
  return Json{{"valid", r.is_valid()}, {"failures", std::move(failures)}};
}

Json int_list(const std::vector<int>& values) {
  Json j = Json::array();
  for (int v : values) j.push_back(v);
  return j;
}

Json cycle_type_json(const CycleType& t) { return int_list(t.lengths()); }

void print_report(std::ostream& os, const std::string& title, const VerificationReport& r) {
  os << title << ": " << (r.is_valid() ? "valid" : "invalid") << "\n";
  for (const Failure& f : r.failures) os << "  " << to_string(f) << "\n";
}

std::string join(const std::vector<int>& values, const char* sep = " ") {
  std::string s;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) s += sep;
    s += std::to_string(values[k]);
  }
  return s;
}

void emit(std::ostream& out, const Json& doc, const std::string& output_path) {
  if (output_path.empty()) {
    out << io::dump(doc);
  } else {
    io::write_file(output_path, doc);
  }
}

LabeledDigraph as_digraph(const io::AnyDocument& doc) {
  if (const auto* d = std::get_if<LabeledDigraph>(&doc)) return *d;
  const Placement& p = std::get<io::PlacementDocument>(doc).placement;
  return detail::from_sorted_unique(p.size(), [&] {
    std::vector<Arc> arcs;
    for (const Square& q : p.queens()) arcs.push_back({q.row, q.col});
    return arcs;
  }());
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
  int n = 0;
  bool modular = false;
  bool count = false;
  std::optional<std::size_t> limit;
};

int do_solve(const SolveArgs& a, bool json, std::ostream& out) {
  const Board board = a.modular ? Board::Modular : Board::Standard;
  if (a.count) {
    const std::uint64_t c = a.modular ? count_modular(a.n) : count_standard(a.n);
    if (json) {
      out << io::dump(Json{{"n", a.n}, {"modular", a.modular}, {"count", c}});
    } else {
      out << c << "\n";
    }
    return kExitOk;
  }
  const auto perms = solution_permutations(a.n, board, a.limit);
  if (json) {
    Json sols = Json::array();
    for (const auto& p : perms) sols.push_back(int_list(p));
    out << io::dump(Json{{"n", a.n}, {"modular", a.modular}, {"solutions", std::move(sols)}});
  } else {
    for (const auto& p : perms) out << join(p) << "\n";
  }
  return kExitOk;
}

// --------------------------------------------------------------- verify

int do_verify(const std::string& input, bool modular_flag, bool json, std::ostream& out) {
  const io::AnyDocument doc = io::any_from_json(io::read_file(input));
  bool modular = modular_flag;
  VerificationReport report;
  std::string kind;
  if (const auto* pd = std::get_if<io::PlacementDocument>(&doc)) {
    modular = modular || pd->modular.value_or(false);
    report = verify_solution(as_digraph(doc), modular ? Board::Modular : Board::Standard);
    kind = "placement";
  } else {
    const auto& d = std::get<LabeledDigraph>(doc);
    report = modular ? verify_modular_queen(d) : verify_queen(d);
    kind = "digraph";
  }
  if (json) {
    Json j{{"kind", kind}, {"modular", modular}};
    j.update(report_json(report));
    out << io::dump(j);
  } else {
    print_report(out, modular ? "modular" : "standard", report);
  }
  return report.is_valid() ? kExitOk : kExitInvalid;
}

// ------------------------------------------------------------ construct

struct ConstructArgs {
  std::string method;
  std::optional<int> n, p, m, k;
  std::vector<int> pi;
  std::string modular_input;
  std::string output;
};

int need(const std::optional<int>& v, const char* flag, const std::string& method) {
  if (!v) throw UsageError("--method " + method + " requires " + flag);
  return *v;
}

int do_construct(const ConstructArgs& a, std::ostream& out) {
  Json doc;
  if (a.method == "doubling") {
    doc = io::digraph_to_json(polya_doubling(need(a.p ? a.p : a.n, "--p", a.method)));
  } else if (a.method == "jacobsthal") {
    doc = io::digraph_to_json(jacobsthal_digraph(need(a.n, "--n", a.method)));
  } else if (a.method == "strong-cycle") {
    doc = io::digraph_to_json(strong_cycle(need(a.k ? a.k : a.n, "--k", a.method)));
  } else if (a.method == "three-cycles") {
    doc = io::placement_to_json({three_cycles_placement(need(a.m, "--m", a.method)), false});
  } else if (a.method == "polya-composite") {
    const int m = need(a.m, "--m", a.method);
    const int n = need(a.n, "--n", a.method);
    std::vector<Placement> standard = enumerate_standard(m);
    Placement g;
    if (!a.modular_input.empty()) {
      g = io::placement_from_json(io::read_file(a.modular_input)).placement;
    } else {
      g = to_placement(polya_doubling(n));
    }
    std::vector<int> pi = a.pi;
    if (pi.empty()) pi.assign(n, 1);
    for (int& v : pi) --v;  // 1-based on the command line
    doc = io::placement_to_json({polya_composite(standard, pi, g), false});
  } else {
    throw UsageError("unknown construction method '" + a.method + "'");
  }
  emit(out, doc, a.output);
  return kExitOk;
}

// -------------------------------------------------------------- product

struct ProductArgs {
  std::string base;
  std::vector<std::string> family;
  std::string assign;
  bool modular = false;
  bool check_conditions = false;
  std::string output;
};

int do_product(const ProductArgs& a, bool json, std::ostream& out, std::ostream& err) {
  const LabeledDigraph base = io::digraph_from_json(io::read_file(a.base));
  std::vector<LabeledDigraph> family;
  for (const auto& f : a.family) family.push_back(io::digraph_from_json(io::read_file(f)));
  FamilyAssignment fa(std::move(family), io::assignment_from_json(io::read_file(a.assign)));
  fa.validate_for(base);

  const ProductReport report =
      a.modular ? product_preserves_modular(base, fa) : product_preserves_queen(base, fa);
  const Json product_doc = io::digraph_to_json(report.result);

  if (json) {
    Json j{{"modular", a.modular}, {"product", product_doc}, {"verification", report_json(report.product)}};
    if (a.check_conditions && !a.modular) {
      j["sum_condition"] = report_json(report.sum_condition);
      j["diff_condition"] = report_json(report.diff_condition);
    }
    j["hypotheses_hold"] = report.hypotheses_hold();
    emit(out, j, a.output);
  } else {
    emit(out, product_doc, a.output);
    if (a.check_conditions && !a.modular) {
      print_report(err, "sum condition", report.sum_condition);
      print_report(err, "diff condition", report.diff_condition);
    }
    if (!report.base.is_valid()) err << "warning: base digraph is not a queen labeling\n";
    for (std::size_t k = 0; k < report.family.size(); ++k) {
      if (!report.family[k].is_valid()) {
        err << "warning: family member " << k << " is not a queen labeling\n";
      }
    }
    print_report(err, a.modular ? "modular product" : "product", report.product);
  }
  return report.product.is_valid() ? kExitOk : kExitInvalid;
}

// -------------------------------------------------------------- analyze

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

int do_analyze(const std::string& input, bool json, std::ostream& out) {
  const LabeledDigraph d = as_digraph(io::any_from_json(io::read_file(input)));
  const std::vector<int> sums = sum_multiset(d);
  const std::vector<int> diffs = diff_multiset(d);
  const long long n = d.order();
  const long long sum_total = std::accumulate(sums.begin(), sums.end(), 0LL);
  const long long diff_total = std::accumulate(diffs.begin(), diffs.end(), 0LL);
  const bool regular = is_one_regular(d);
  const VerificationReport queen = verify_queen(d);
  const VerificationReport modular = verify_modular_queen(d);

  if (json) {
    Json j{{"order", d.order()}, {"arcs", d.size()}, {"one_regular", regular}};
    j["cycle_type"] = regular ? cycle_type_json(cycle_type(d)) : Json(nullptr);
    j["sums"] = int_list(sorted_unique(sums));
    j["diffs"] = int_list(sorted_unique(diffs));
    j["sum_total"] = sum_total;
    j["diff_total"] = diff_total;
    j["expected_sum_total"] = n * (n + 1);
    j["sigma_identities"] = regular ? Json(sigma_identity_check(d)) : Json(nullptr);
    j["queen"] = queen.is_valid();
    j["modular_queen"] = modular.is_valid();
    out << io::dump(j);
    return kExitOk;
  }
  out << "order: " << d.order() << "\n";
  out << "arcs: " << d.size() << "\n";
  out << "one_regular: " << (regular ? "true" : "false") << "\n";
  if (regular) out << "cycle_type: " << to_string(cycle_type(d)) << "\n";
  out << "sums: " << join(sorted_unique(sums)) << "\n";
  out << "diffs: " << join(sorted_unique(diffs)) << "\n";
  out << "sum_total: " << sum_total << " (n(n+1) = " << n * (n + 1) << ")\n";
  out << "diff_total: " << diff_total << "\n";
  if (regular) out << "sigma_identities: " << (sigma_identity_check(d) ? "hold" : "fail") << "\n";
  out << "queen: " << (queen.is_valid() ? "valid" : "invalid") << "\n";
  out << "modular_queen: " << (modular.is_valid() ? "valid" : "invalid") << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- types

int do_types(int n, bool json, std::ostream& out) {
  const std::set<CycleType> types = achievable_cycle_types(n);
  if (json) {
    Json list = Json::array();
    for (const auto& t : types) list.push_back(cycle_type_json(t));
    out << io::dump(Json{{"n", n}, {"cycle_types", std::move(list)}});
  } else {
    for (const auto& t : types) out << to_string(t) << "\n";
  }
  return kExitOk;
}

// --------------------------------------------------------------- render

int do_render(const std::string& input, std::ostream& out) {
  const io::AnyDocument doc = io::any_from_json(io::read_file(input));
  if (const auto* pd = std::get_if<io::PlacementDocument>(&doc)) {
    out << io::render_ascii(pd->placement);
  } else {
    out << io::render_ascii(to_placement(std::get<LabeledDigraph>(doc)));
  }
  return kExitOk;
}

// ---------------------------------------------------------------- bound

struct BoundArgs {
  int m = 0;
  int n = 0;
  std::vector<std::string> family;
  std::optional<std::size_t> samples;
  std::uint64_t seed = 1;
};

int do_bound(const BoundArgs& a, bool json, std::ostream& out) {
  BoundCheckReport r;
  if (a.samples) {
    r = modular_bound_check_sampled(a.m, a.n, *a.samples, a.seed);
  } else if (!a.family.empty()) {
    std::vector<LabeledDigraph> family;
    for (const auto& f : a.family) family.push_back(io::digraph_from_json(io::read_file(f)));
    r = modular_bound_check(a.m, a.n, family);
  } else {
    r = modular_bound_check(a.m, a.n);
  }
  if (json) {
    out << io::dump(Json{{"m", r.m},
                         {"n", r.n},
                         {"mode", r.mode},
                         {"base_count", r.base_count},
                         {"family_size", r.family_size},
                         {"generated", r.generated},
                         {"valid", r.valid},
                         {"distinct", r.distinct()},
                         {"bound", r.bound}});
  } else {
    out << "mode: " << r.mode << "\n"
        << "generated: " << r.generated << "\n"
        << "valid: " << r.valid << "\n"
        << "distinct: " << (r.distinct() ? "true" : "false") << "\n"
        << "bound: " << r.bound << "\n";
  }
  return r.all_valid() && r.distinct() ? kExitOk : kExitInvalid;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Queen labelings of digraphs and (modular) n-queens solutions", "queenlab"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit a single JSON document");
  app.fallthrough();

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Enumerate or count solutions");
  solve_cmd->add_option("--n", solve.n, "Board size")->required()->check(CLI::Range(1, kMaxEnumerationSize));
  solve_cmd->add_flag("--modular", solve.modular, "Toroidal board");
  auto* count_flag = solve_cmd->add_flag("--count", solve.count, "Print the number of solutions");
  solve_cmd->add_option("--limit", solve.limit, "Stop after this many solutions")->excludes(count_flag);

  std::string verify_input;
  bool verify_modular = false;
  auto* verify_cmd = app.add_subcommand("verify", "Verify a digraph or placement document");
  verify_cmd->add_option("--input", verify_input, "Document file")->required();
  verify_cmd->add_flag("--modular", verify_modular, "Check the modular conditions");

  ConstructArgs construct;
  auto* construct_cmd = app.add_subcommand("construct", "Build an explicit solution family member");
  construct_cmd->add_option("--method", construct.method)
      ->required()
      ->check(CLI::IsMember({"doubling", "jacobsthal", "three-cycles", "strong-cycle", "polya-composite"}));
  construct_cmd->add_option("--n", construct.n, "Order (jacobsthal, polya-composite modular size)");
  construct_cmd->add_option("--p", construct.p, "Modulus (doubling)");
  construct_cmd->add_option("--m", construct.m, "Parameter m (three-cycles, polya-composite)");
  construct_cmd->add_option("--k", construct.k, "Cycle length (strong-cycle)");
  construct_cmd->add_option("--pi", construct.pi, "1-based solution index per residue (polya-composite)")
      ->delimiter(',');
  construct_cmd->add_option("--modular-input", construct.modular_input,
                            "Modular solution for polya-composite (default: doubling)");
  construct_cmd->add_option("--output", construct.output, "Write the document here");

  ProductArgs product;
  auto* product_cmd = app.add_subcommand("product", "Build and verify an oh-product");
  product_cmd->add_option("--d", product.base, "Base digraph document")->required();
  product_cmd->add_option("--family", product.family, "Family member documents, in index order")
      ->required();
  product_cmd->add_option("--assign", product.assign, "Assignment document")->required();
  product_cmd->add_flag("--modular", product.modular, "Verify as a modular labeling");
  product_cmd->add_flag("--check-conditions", product.check_conditions, "Report the side conditions");
  product_cmd->add_option("--output", product.output, "Write the result here");

  std::string analyze_input;
  auto* analyze_cmd = app.add_subcommand("analyze", "Cycle type, sums, differences");
  analyze_cmd->add_option("--input", analyze_input)->required();

  int types_n = 0;
  auto* types_cmd = app.add_subcommand("types", "Achievable cycle types of n-queens solutions");
  types_cmd->add_option("--n", types_n)->required()->check(CLI::Range(1, 12));

  std::string render_input;
  auto* render_cmd = app.add_subcommand("render", "Draw a board");
  render_cmd->add_option("--input", render_input)->required();

  BoundArgs bound;
  auto* bound_cmd = app.add_subcommand("bound", "Check the modular counting bound on small sizes");
  bound_cmd->add_option("--m", bound.m)->required();
  bound_cmd->add_option("--n", bound.n)->required();
  bound_cmd->add_option("--family", bound.family, "Restricted family documents");
  auto* samples_opt = bound_cmd->add_option("--samples", bound.samples, "Random assignments to try");
  bound_cmd->add_option("--seed", bound.seed, "Random seed")->needs(samples_opt);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve_cmd->parsed()) return do_solve(solve, json, out);
    if (verify_cmd->parsed()) return do_verify(verify_input, verify_modular, json, out);
    if (construct_cmd->parsed()) return do_construct(construct, out);
    if (product_cmd->parsed()) return do_product(product, json, out, err);
    if (analyze_cmd->parsed()) return do_analyze(analyze_input, json, out);
    if (types_cmd->parsed()) return do_types(types_n, json, out);
    if (render_cmd->parsed()) return do_render(render_input, out);
    if (bound_cmd->parsed()) return do_bound(bound, json, out);
  } catch (const io::DocumentError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace queenlab::cli
