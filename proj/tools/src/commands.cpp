#include "commands.hpp"

#include "report.hpp"

#include <adnil/combinatorics.hpp>
#include <adnil/dyck.hpp>
#include <adnil/enumeration.hpp>
#include <adnil/nilpotence.hpp>
#include <adnil/parallel.hpp>
#include <adnil/qt_catalan.hpp>
#include <adnil/verify.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <ostream>
#include <stdexcept>

namespace adnil::cli {
namespace {

struct Common {
  std::string format = "text";
  int jobs = 0;
  bool allow_large = false;

  BruteOptions brute() const { return {jobs, allow_large}; }
};

Json parts_json(const StaircasePartition& p) { return Json(std::vector<int>(p.parts().begin(), p.parts().end())); }

Json poly_terms(const BiPoly& poly) {
  Json terms = Json::array();
  for (const auto& [key, c] : poly.terms()) terms.push_back({{"q", key.first}, {"t", key.second}, {"coeff", to_string(c)}});
  return terms;
}

Table poly_table(const BiPoly& poly) {
  Table t{{"q", "t", "coeff"}, {}};
  for (const auto& [key, c] : poly.terms())
    t.rows.push_back({std::to_string(key.first), std::to_string(key.second), to_string(c)});
  return t;
}

// ---- classify --------------------------------------------------------------

Report cmd_classify(const std::string& literal, int n) {
  const StaircasePartition p = parse_partition(literal, n);
  Report r{"classify", n};
  r.inputs = {{"partition", p.to_string()}};
  const NilpotenceFilling t = compute_filling(p);
  const int fast = class_fast(p);
  const int slow = t.at(1, 1);
  const TouchSequence ts = touch_sequence(p);
  const IntervalBounds b = interval_bounds(ts);
  r.results["class"] = fast;
  r.results["class_tableau"] = slow;
  r.results["dimension"] = to_string(dimension(p));
  r.results["touch_sequence"] = ts.indices;
  r.results["interval"] = {{"lower", parts_json(b.lower)}, {"upper", parts_json(b.upper)}};
  r.results["filling"] = t.rows();
  r.check("fast_equals_tableau", fast == slow, std::to_string(fast) + " vs " + std::to_string(slow));
  r.check("touch_length_equals_class", ts.length() == fast);
  r.check("inside_interval", p.contains(b.lower) && b.upper.contains(p));
  return r;
}

// ---- count -----------------------------------------------------------------

Report cmd_count(int n, std::optional<int> exact, std::optional<int> at_most, const std::string& method_text,
                 const Common& common) {
  const auto method = parse_count_method(method_text);
  if (!method) throw std::invalid_argument("unknown method '" + method_text + "'");
  if (exact.has_value() == at_most.has_value()) throw std::invalid_argument("give exactly one of --class or --at-most");
  Report r{"count", n};
  r.inputs["selector"] = exact ? "class" : "at_most";
  r.inputs["value"] = exact ? *exact : *at_most;
  r.inputs["method"] = method_text;
  const int v = exact ? *exact : *at_most;
  if (v < 0) throw std::invalid_argument("class bound must be non-negative");
  const BigInt count = exact ? count_exact(n, v, *method, common.brute()) : count_atmost(n, v, *method, common.brute());
  r.results["count"] = to_string(count);
  r.results["method"] = method_text;
  r.results["via"] = exact && *method != CountMethod::sum && *method != CountMethod::brute ? "difference of at-most counts"
                                                                                          : "direct";
  return r;
}

// ---- table -----------------------------------------------------------------

Report cmd_table(int n, const Common& common) {
  const BiPoly tally = qt_catalan_bruteforce(n, common.brute());
  Report r{"table", n};
  Table table{{"dimension", "class", "count"}, {}};
  Json entries = Json::array();
  std::vector<BigInt> by_class(static_cast<std::size_t>(n + 1)), by_dim(static_cast<std::size_t>(n * (n + 1) / 2 + 1));
  std::map<std::pair<int, int>, BigInt> ordered;  // (dimension, class)
  for (const auto& [key, c] : tally.terms()) {
    ordered[{key.second, key.first}] = c;
    by_class[static_cast<std::size_t>(key.first)] += c;
    by_dim[static_cast<std::size_t>(key.second)] += c;
  }
  for (const auto& [key, c] : ordered) {
    entries.push_back({{"dimension", key.first}, {"class", key.second}, {"count", to_string(c)}});
    table.rows.push_back({std::to_string(key.first), std::to_string(key.second), to_string(c)});
  }
  Json class_totals = Json::array(), dim_totals = Json::array();
  for (const BigInt& c : by_class) class_totals.push_back(to_string(c));
  for (const BigInt& c : by_dim) dim_totals.push_back(to_string(c));
  r.results["entries"] = entries;
  r.results["class_totals"] = class_totals;
  r.results["dimension_totals"] = dim_totals;
  r.results["total"] = to_string(tally.at_one());

  bool classes_ok = true;
  for (int k = 0; k <= n; ++k) classes_ok = classes_ok && by_class[static_cast<std::size_t>(k)] == count_exact_class(n, k);
  const UniPoly area = qt_catalan_formula(n).at_q_one();
  bool dims_ok = true;
  for (std::size_t d = 0; d < by_dim.size(); ++d) dims_ok = dims_ok && by_dim[d] == area.coeff(static_cast<int>(d));
  r.check("class_totals_match_formula", classes_ok);
  r.check("dimension_totals_match_formula", dims_ok);
  r.check("total_is_catalan", tally.at_one() == catalan(n + 1), to_string(catalan(n + 1)));
  r.table = std::move(table);
  return r;
}

// ---- dyck ------------------------------------------------------------------

DyckPath parse_path_literal(const std::string& text) {
  if (!text.empty() && text.front() == '[') {
    Json arr;
    try {
      arr = Json::parse(text);
    } catch (const Json::exception& e) {
      throw std::invalid_argument(std::string("bad JSON path: ") + e.what());
    }
    if (!arr.is_array()) throw std::invalid_argument("JSON path must be an array");
    std::string flat;
    for (const Json& s : arr) {
      if (!s.is_string()) throw std::invalid_argument("JSON path entries must be strings");
      flat += s.get<std::string>();
    }
    return DyckPath::parse(flat);
  }
  return DyckPath::parse(text);
}

Report cmd_dyck(const std::optional<std::string>& literal, const std::optional<std::string>& invert, int n) {
  if (literal.has_value() == invert.has_value()) throw std::invalid_argument("give a partition or --invert PATH, not both");
  Report r{"dyck", n};
  if (invert) {
    const DyckPath d = parse_path_literal(*invert);
    r.inputs = {{"invert", d.to_string()}};
    const StaircasePartition p = height_bijection_inverse(d, n);
    r.results["partition"] = p.to_string();
    r.results["class"] = class_fast(p);
    r.results["height"] = height(d);
    r.check("height_is_class_plus_one", height(d) == class_fast(p) + 1);
    r.check("round_trip", height_bijection(p) == d);
    return r;
  }
  const StaircasePartition p = parse_partition(*literal, n);
  r.inputs = {{"partition", p.to_string()}};
  const DyckPath d = height_bijection(p);
  r.results["path"] = d.to_string();
  r.results["height"] = height(d);
  r.results["twice_area"] = twice_area(d);
  r.results["class"] = class_fast(p);
  r.results["rotation_path"] = rotation_path(p).to_string();
  r.check("height_is_class_plus_one", height(d) == class_fast(p) + 1);
  r.check("round_trip", height_bijection_inverse(d, n) == p);
  return r;
}

// ---- qt --------------------------------------------------------------------

Report cmd_qt(int n, bool brute, const Common& common) {
  Report r{"qt", n};
  r.inputs = {{"brute", brute}};
  const BiPoly formula = qt_catalan_formula(n);
  r.results["polynomial"] = formula.to_string();
  r.results["terms"] = poly_terms(formula);
  r.results["at_one"] = to_string(formula.at_one());
  r.table = poly_table(formula);
  if (brute) {
    const BiPoly tally = qt_catalan_bruteforce(n, common.brute());
    r.results["brute_polynomial"] = tally.to_string();
    r.results["brute_terms"] = poly_terms(tally);
    r.check("formula_equals_tally", formula == tally);
  }
  return r;
}

// ---- affine ----------------------------------------------------------------

Report cmd_affine(const std::string& literal, int n) {
  const StaircasePartition p = parse_partition(literal, n);
  Report r{"affine", n};
  r.inputs = {{"partition", p.to_string()}};
  const NilpotenceFilling t = compute_filling(p);
  const AffineWindow w = affine_window(t);
  r.results["window"] = w.values;
  r.results["inversions"] = inversion_levels(p).size();
  bool table_ok = true;
  for (int i = 1; i <= n + 1; ++i)
    for (int j = i + 1; j <= n + 1; ++j)
      table_ok = table_ok && floor_div(w.values[static_cast<std::size_t>(j - 1)] - w.values[static_cast<std::size_t>(i - 1)],
                                       n + 1) == t.at(i, n - j + 2);
  r.check("window_sum", w.sum_ok(), "expected " + std::to_string((n + 2) * (n + 1) / 2));
  r.check("distinct_residues", w.residues_distinct());
  r.check("inversion_table", table_ok);
  return r;
}

// ---- extremal --------------------------------------------------------------

void witness_checks(Report& r, const std::string& label, const StaircasePartition& p, int want_class, long long want_dim) {
  const int k = class_tableau(p);
  r.check(label, k == want_class && p.size() == want_dim,
          p.to_string() + ": class " + std::to_string(k) + ", dim " + std::to_string(p.size()));
}

Report cmd_extremal(int n, std::optional<int> k, std::optional<long long> A, const Common& common) {
  if (k.has_value() == A.has_value()) throw std::invalid_argument("give exactly one of --class or --dim");
  Report r{"extremal", n};
  if (k) {
    r.inputs = {{"class", *k}};
    const BigInt lo = theta_min(n, *k);
    const BigInt hi = theta_max(n, *k);
    r.results["theta_min"] = to_string(lo);
    r.results["theta_max"] = to_string(hi);
    if (*k == 0) {
      r.results["witness_min"] = StaircasePartition::zero(n).to_string();
      r.results["witness_max"] = StaircasePartition::zero(n).to_string();
      return r;
    }
    const ExtremalWitness w = extremal_witness(n, *k);
    r.results["witness_min"] = w.smallest.to_string();
    r.results["witness_max"] = w.largest.to_string();
    witness_checks(r, "witness_min", w.smallest, *k, static_cast<long long>(lo));
    witness_checks(r, "witness_max", w.largest, *k, static_cast<long long>(hi));
    return r;
  }

  r.inputs = {{"dimension", *A}};
  const int lo = Theta_min(n, *A);
  const int hi = Theta_max(n, *A);
  r.results["Theta_min"] = lo;
  r.results["Theta_max"] = hi;
  if (n > brute_force_cap() && !common.allow_large) {
    r.results["witnesses"] = nullptr;
    return r;
  }
  // First ideal in enumeration order realizing each extreme.
  using Found = std::pair<std::optional<StaircasePartition>, std::optional<StaircasePartition>>;
  const Found found = reduce_partitions(
      n, common.jobs, Found{},
      [&](Found& acc, const StaircasePartition& p) {
        if (p.size() != *A || (acc.first && acc.second)) return;
        const int c = class_fast(p);
        if (!acc.first && c == lo) acc.first = p;
        if (!acc.second && c == hi) acc.second = p;
      },
      [](Found& into, Found&& from) {
        if (!into.first) into.first = std::move(from.first);
        if (!into.second) into.second = std::move(from.second);
      });
  r.check("Theta_min_attained", found.first.has_value());
  r.check("Theta_max_attained", found.second.has_value());
  if (found.first) {
    r.results["witness_min"] = found.first->to_string();
    witness_checks(r, "witness_min", *found.first, lo, *A);
  }
  if (found.second) {
    r.results["witness_max"] = found.second->to_string();
    witness_checks(r, "witness_max", *found.second, hi, *A);
  }
  return r;
}

// ---- verify ----------------------------------------------------------------

Report cmd_verify(int n_max, const std::vector<std::string>& only, const std::string& fault, const Common& common,
                  std::ostream& err) {
  VerifyOptions opts;
  opts.n_max = n_max;
  opts.jobs = common.jobs;
  opts.only = only;
  if (!fault.empty()) {
    if (fault != "reflection") throw std::invalid_argument("unknown fault '" + fault + "'");
    opts.reflection_override = [](int n, int h) {
      const BigInt v = count_atmost_reflection(n, h);
      return n >= 3 && h == 2 ? BigInt(v + 1) : v;
    };
  }
  Report r{"verify", n_max};
  r.inputs = {{"n_max", n_max}, {"checks", only}};
  int passed = 0;
  Json counterexample = nullptr;
  for (const CheckResult& c : run_verification(opts)) {
    r.check(c.name, c.pass, c.detail);
    if (c.pass) {
      ++passed;
    } else if (counterexample.is_null() && c.counterexample) {
      const Counterexample& ce = *c.counterexample;
      counterexample = {{"check", c.name}, {"n", ce.n}, {"input", ce.input}, {"expected", ce.expected}, {"got", ce.got}};
      err << "counterexample [" << c.name << "] n=" << ce.n << " input=" << ce.input << " expected=" << ce.expected
          << " got=" << ce.got << '\n';
    }
  }
  r.results["checks_run"] = r.checks.size();
  r.results["passed"] = passed;
  r.results["counterexample"] = counterexample;
  Table table{{"check", "pass", "detail"}, {}};
  for (const ReportCheck& c : r.checks) table.rows.push_back({c.name, c.pass ? "pass" : "fail", c.detail});
  r.table = std::move(table);
  return r;
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  return Format::text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ad-nilpotent ideals of sl(n+1): class of nilpotence, counts, Dyck paths, (q,t)-Catalan"};
  app.name("adnil");
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--jobs", common.jobs, "Worker threads for exhaustive enumeration (0 = all cores)")
        ->check(CLI::NonNegativeNumber);
    sub->add_flag("--allow-large", common.allow_large, "Permit enumeration above the feasibility cap");
  };

  int n = 0;
  std::string partition;
  std::optional<int> opt_class, opt_at_most;
  std::optional<long long> opt_dim;
  std::optional<std::string> opt_partition, opt_invert;
  std::string method = "sum";
  bool brute = false;
  int n_max = 8;
  std::vector<std::string> only;
  std::string fault;

  auto* classify = app.add_subcommand("classify", "Class of nilpotence, filling, touch sequence, interval");
  classify->add_option("partition", partition, "Parts a,b,c,...")->required();
  classify->add_option("--n", n, "Rank")->required()->check(CLI::PositiveNumber);
  add_common(classify);

  auto* count = app.add_subcommand("count", "Number of ideals by class of nilpotence");
  count->add_option("--n", n, "Rank")->required()->check(CLI::PositiveNumber);
  auto* c_class = count->add_option("--class", opt_class, "Exact class k");
  auto* c_most = count->add_option("--at-most", opt_at_most, "Class at most h");
  c_class->excludes(c_most);
  count->add_option("--method", method, "sum|det44|det45|reflection|genfun|contfrac|brute");
  add_common(count);

  auto* table = app.add_subcommand("table", "Tally of ideals by (dimension, class)");
  table->add_option("--n", n, "Rank")->required()->check(CLI::PositiveNumber);
  add_common(table);

  auto* dyck = app.add_subcommand("dyck", "Height bijection to Dyck paths, or its inverse");
  dyck->add_option("partition", opt_partition, "Parts a,b,c,...");
  dyck->add_option("--invert", opt_invert, "Path over U/D or 3/4, or a JSON array of steps");
  dyck->add_option("--n", n, "Rank")->required()->check(CLI::PositiveNumber);
  add_common(dyck);

  auto* qt = app.add_subcommand("qt", "(q,t)-Catalan polynomial");
  qt->add_option("--n", n, "Rank")->required()->check(CLI::PositiveNumber);
  qt->add_flag("--brute", brute, "Also tally by enumeration and compare");
  add_common(qt);

  auto* affine = app.add_subcommand("affine", "Affine permutation window and inversion levels");
  affine->add_option("partition", partition, "Parts a,b,c,...")->required();
  affine->add_option("--n", n, "Rank")->required()->check(CLI::PositiveNumber);
  add_common(affine);

  auto* extremal = app.add_subcommand("extremal", "Extreme dimension at fixed class, or class at fixed dimension");
  extremal->add_option("--n", n, "Rank")->required()->check(CLI::PositiveNumber);
  auto* e_class = extremal->add_option("--class", opt_class, "Class k");
  auto* e_dim = extremal->add_option("--dim", opt_dim, "Dimension A");
  e_class->excludes(e_dim);
  add_common(extremal);

  auto* verify = app.add_subcommand("verify", "Cross-check every identity exhaustively");
  verify->add_option("--n-max", n_max, "Largest rank to check")->check(CLI::Range(1, kVerifyHardCap));
  verify->add_option("--check", only, "Run only the named checks (repeatable)");
  verify->add_option("--inject-fault", fault)->group("");
  add_common(verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  Report report;
  try {
    if (*classify) report = cmd_classify(partition, n);
    else if (*count) report = cmd_count(n, opt_class, opt_at_most, method, common);
    else if (*table) report = cmd_table(n, common);
    else if (*dyck) report = cmd_dyck(opt_partition, opt_invert, n);
    else if (*qt) report = cmd_qt(n, brute, common);
    else if (*affine) report = cmd_affine(partition, n);
    else if (*extremal) report = cmd_extremal(n, opt_class, opt_dim, common);
    else if (*verify) report = cmd_verify(n_max, only, fault, common, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const FeasibilityError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  report.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  render(report, parse_format(common.format), out);
  return report.all_pass() ? 0 : 1;
}

}  // namespace adnil::cli
