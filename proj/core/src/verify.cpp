#include <adnil/combinatorics.hpp>
#include <adnil/dyck.hpp>
#include <adnil/enumeration.hpp>
#include <adnil/nilpotence.hpp>
#include <adnil/parallel.hpp>
#include <adnil/qt_catalan.hpp>
#include <adnil/verify.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>

namespace adnil {
namespace {

using Failure = std::optional<Counterexample>;

Counterexample fail(int n, std::string input, std::string expected, std::string got) {
  return Counterexample{n, std::move(input), std::move(expected), std::move(got)};
}

template <class T>
std::string str(const T& v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

// First failure over all partitions at rank n, in enumeration order.
template <class Fn>
Failure scan(int n, int jobs, Fn fn) {
  return reduce_partitions(
      n, jobs, Failure{},
      [&fn](Failure& acc, const StaircasePartition& p) {
        if (!acc) acc = fn(p);
      },
      [](Failure& into, Failure&& from) {
        if (!into) into = std::move(from);
      });
}

template <class Body>
CheckResult timed(std::string name, Body body) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult r;
  r.name = std::move(name);
  try {
    auto [detail, failure] = body();
    r.detail = std::move(detail);
    r.counterexample = std::move(failure);
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
    r.pass = false;
  }
  if (r.counterexample) r.pass = false;
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

using Outcome = std::pair<std::string, Failure>;

std::string rows_text(const std::vector<std::vector<int>>& rows) {
  std::string s;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    s += i ? " / " : "";
    for (std::size_t j = 0; j < rows[i].size(); ++j) s += (j ? "," : "") + std::to_string(rows[i][j]);
  }
  return s;
}

const std::array<int, 13> kExampleParts{10, 10, 9, 6, 5, 4, 4, 3, 1, 1, 1, 1, 0};
constexpr const char* kExamplePath = "UDUUUDDDUUDUUDDUUUDDUDDDUUDD";
constexpr const char* kExampleStage = "UDUUDDUUDUDUDDUUDD";

}  // namespace

const std::vector<std::string>& verification_checks() {
  static const std::vector<std::string> names{
      "example_class", "fillings_n4", "class_agreement", "decomposition", "count_agreement", "closed_forms",
      "bijection",     "qt_catalan",  "extremal",        "affine",        "monotonicity"};
  return names;
}

CheckResult check_example_class() {
  return timed("example_class", [] {
    const StaircasePartition p = make_partition(kExampleParts, 13);
    const TouchSequence ts = touch_sequence(p);
    Failure f;
    if (class_fast(p) != 3 || class_tableau(p) != 3)
      f = fail(13, p.to_string(), "class 3",
               "fast " + str(class_fast(p)) + ", tableau " + str(class_tableau(p)));
    else if (ts.indices != std::vector<int>{1, 5, 10})
      f = fail(13, p.to_string(), "touch (1,5,10)", "touch " + ts.to_string());
    return Outcome{"class 3, touch " + ts.to_string(), f};
  });
}

CheckResult check_fillings_n4() {
  return timed("fillings_n4", [] {
    struct Case {
      std::vector<int> parts;
      std::vector<std::vector<int>> rows;
    };
    const std::vector<Case> cases{
        {{2, 1, 0, 0}, {{1, 1, 0, 0}, {1, 0, 0}, {0, 0}, {0}}},
        {{3, 3, 2, 1}, {{3, 2, 1, 0}, {3, 2, 1}, {2, 1}, {1}}},
        {{4, 3, 2, 1}, {{4, 3, 2, 1}, {3, 2, 1}, {2, 1}, {1}}},
    };
    for (const Case& c : cases) {
      const StaircasePartition p = make_partition(c.parts, 4);
      const auto got = compute_filling(p).rows();
      if (got != c.rows) return Outcome{"", fail(4, p.to_string(), rows_text(c.rows), rows_text(got))};
    }
    return Outcome{"3 fillings match", std::nullopt};
  });
}

CheckResult check_class_agreement(int n_max, int jobs) {
  return timed("class_agreement", [&] {
    BigInt seen = 0;
    for (int n = 1; n <= n_max; ++n) {
      Failure f = scan(n, jobs, [n](const StaircasePartition& p) -> Failure {
        const int slow = class_tableau(p);
        const int fast = class_fast(p);
        const int touch = touch_sequence(p).length();
        if (slow != fast || fast != touch)
          return fail(n, p.to_string(), "tableau " + str(slow), "fast " + str(fast) + ", touch " + str(touch));
        return std::nullopt;
      });
      if (f) return Outcome{"", f};
      seen += catalan(n + 1);
    }
    return Outcome{to_string(seen) + " partitions", std::nullopt};
  });
}

namespace {

// Partitions q with lower <= q <= upper cell-wise, counted directly.
std::uint64_t box_count(const StaircasePartition& lower, const StaircasePartition& upper) {
  const int n = lower.rank();
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, int i, int prev) -> void {
    if (i > n) {
      ++count;
      return;
    }
    for (int v = lower.part(i); v <= std::min(prev, upper.part(i)); ++v) self(self, i + 1, v);
  };
  rec(rec, 1, n);
  return count;
}

std::uint32_t touch_mask(const TouchSequence& ts) {
  std::uint32_t m = 0;
  for (int i : ts.indices) m |= 1u << (i - 1);
  return m;
}

}  // namespace

CheckResult check_decomposition(int n_max, int jobs) {
  return timed("decomposition", [&] {
    for (int n = 1; n <= n_max; ++n) {
      // Every partition lies in the interval of its own touch sequence.
      using Tally = std::vector<std::uint64_t>;
      struct Acc {
        Tally by_touch;
        Failure failure;
      };
      Acc init{Tally(std::size_t{1} << n, 0), std::nullopt};
      Acc acc = reduce_partitions(
          n, jobs, init,
          [n](Acc& a, const StaircasePartition& p) {
            const TouchSequence ts = touch_sequence(p);
            ++a.by_touch[touch_mask(ts)];
            if (a.failure) return;
            const IntervalBounds b = interval_bounds(ts);
            if (!p.contains(b.lower) || !b.upper.contains(p))
              a.failure = fail(n, p.to_string(), "inside [" + b.lower.to_string() + "] .. [" + b.upper.to_string() + "]",
                               "outside");
            else if (class_fast(p) != ts.length())
              a.failure = fail(n, p.to_string(), "class " + str(ts.length()), "class " + str(class_fast(p)));
          },
          [](Acc& into, Acc&& from) {
            for (std::size_t i = 0; i < into.by_touch.size(); ++i) into.by_touch[i] += from.by_touch[i];
            if (!into.failure) into.failure = std::move(from.failure);
          });
      if (acc.failure) return Outcome{"", acc.failure};

      // Each box holds exactly as many partitions as carry its touch sequence,
      // so the boxes are disjoint and cover everything.
      BigInt total = 0;
      for (const Interval& iv : decomposition(n)) {
        const std::uint64_t in_box = box_count(iv.lower, iv.upper);
        const std::uint64_t tagged = acc.by_touch[touch_mask(iv.touch)];
        if (BigInt(in_box) != iv.size || in_box != tagged)
          return Outcome{"", fail(n, "touch " + iv.touch.to_string(), "size " + to_string(iv.size),
                                  "box " + str(in_box) + ", tagged " + str(tagged))};
        total += iv.size;
      }
      if (total != catalan(n + 1))
        return Outcome{"", fail(n, "all intervals", to_string(catalan(n + 1)), to_string(total))};
    }
    return Outcome{"intervals partition every rank up to " + str(n_max), std::nullopt};
  });
}

CheckResult check_count_agreement(int n_max, int jobs, const std::function<BigInt(int, int)>& reflection_override) {
  return timed("count_agreement", [&] {
    auto reflection = [&](int n, int h) {
      return reflection_override ? reflection_override(n, h) : count_atmost_reflection(n, h);
    };
    if (count_atmost_sum(3, 2) != 13) return Outcome{"", fail(3, "h=2", "13", to_string(count_atmost_sum(3, 2)))};
    int compared = 0;
    for (int n = 1; n <= n_max; ++n) {
      const auto tally = classify_bruteforce(n, {jobs, true});
      BigInt brute = 0;
      for (int h = 0; h <= n; ++h) {
        if (auto it = tally.find(h); it != tally.end()) brute += it->second;
        const BigInt expected = count_atmost_sum(n, h);
        const std::vector<std::pair<const char*, BigInt>> methods{
            {"det44", count_atmost_det(n, h, DetVariant::lower_clip)},
            {"det45", count_atmost_det(n, h, DetVariant::upper_clip)},
            {"reflection", reflection(n, h)},
            {"genfun", series_chebyshev(h, n + 1)[n + 1]},
            {"contfrac", series_contfrac(h, n + 1)[n + 1]},
            {"filtered", count_atmost_sum_filtered(n, h)},
            {"brute", brute},
        };
        const std::string where = "h=" + str(h);
        for (const auto& [name, value] : methods) {
          if (value != expected)
            return Outcome{"", fail(n, where, "sum " + to_string(expected), std::string(name) + " " + to_string(value))};
        }
        const BigInt diff = expected - (h > 0 ? count_atmost_sum(n, h - 1) : BigInt(0));
        if (count_exact_class(n, h) != diff)
          return Outcome{"", fail(n, "k=" + str(h), "difference " + to_string(diff),
                                  "exact " + to_string(count_exact_class(n, h)))};
        ++compared;
      }
    }
    return Outcome{str(compared) + " (n,h) pairs agree across 8 methods", std::nullopt};
  });
}

CheckResult check_closed_forms(int n_max, int jobs) {
  return timed("closed_forms", [&] {
    for (int n = 1; n <= 20; ++n) {
      const CorollaryCounts c = corollary_counts(n);
      const std::array<BigInt, 3> want{c.abelian, c.atmost2, c.atmost3};
      for (int h = 1; h <= 3; ++h) {
        const BigInt got = count_atmost_sum(n, h);
        if (got != want[static_cast<std::size_t>(h - 1)])
          return Outcome{"", fail(n, "h=" + str(h), to_string(want[static_cast<std::size_t>(h - 1)]), to_string(got))};
      }
    }
    for (int n = 1; n <= n_max; ++n) {
      const auto tally = classify_bruteforce(n, {jobs, true});
      const CorollaryCounts c = corollary_counts(n);
      BigInt upto = 0;
      for (int h = 0; h <= 3; ++h) {
        if (auto it = tally.find(h); it != tally.end()) upto += it->second;
        if (h == 0) continue;
        const BigInt& want = h == 1 ? c.abelian : h == 2 ? c.atmost2 : c.atmost3;
        if (upto != want) return Outcome{"", fail(n, "brute h=" + str(h), to_string(want), to_string(upto))};
      }
    }
    for (int n = 1; n <= 15; ++n) {
      BigInt total = 0;
      for (int k = 0; k <= n; ++k) total += count_exact_class(n, k);
      if (total != catalan(n + 1)) return Outcome{"", fail(n, "sum over k", to_string(catalan(n + 1)), to_string(total))};
      if (count_exact_class(n, n) != 1 || count_exact_class(n, n + 1) != 0)
        return Outcome{"", fail(n, "k=n, k=n+1", "1, 0",
                                to_string(count_exact_class(n, n)) + ", " + to_string(count_exact_class(n, n + 1)))};
    }
    return Outcome{"2^n, F_2n, (3^n+1)/2 to n=20; brute to n=" + str(n_max) + "; totals to n=15", std::nullopt};
  });
}

CheckResult check_bijection(int n_max, int jobs) {
  return timed("bijection", [&] {
    const StaircasePartition ex = make_partition(kExampleParts, 13);
    const auto stages = height_bijection_stages(ex);
    if (stages.back().path.to_string() != kExamplePath)
      return Outcome{"", fail(13, ex.to_string(), kExamplePath, stages.back().path.to_string())};
    if (stages.size() < 2 || stages[1].path.to_string() != kExampleStage || stages[1].word != "dldllldl")
      return Outcome{"", fail(13, ex.to_string(), std::string("stage ") + kExampleStage + " via dldllldl",
                              stages.size() < 2 ? "missing" : stages[1].path.to_string() + " via " + stages[1].word)};

    for (int n = 1; n <= n_max; ++n) {
      struct Acc {
        std::vector<std::string> images;
        std::vector<std::string> rotations;
        std::vector<std::uint64_t> by_height;
        Failure failure;
      };
      Acc init{{}, {}, std::vector<std::uint64_t>(static_cast<std::size_t>(n + 2), 0), std::nullopt};
      Acc acc = reduce_partitions(
          n, jobs, init,
          [n](Acc& a, const StaircasePartition& p) {
            const DyckPath d = height_bijection(p);
            a.images.push_back(d.to_string());
            a.rotations.push_back(rotation_path(p).to_string());
            const int h = height(d);
            if (h >= 0 && h <= n + 1) ++a.by_height[static_cast<std::size_t>(h)];
            if (a.failure) return;
            if (d.length() != static_cast<std::size_t>(2 * n + 2))
              a.failure = fail(n, p.to_string(), "length " + str(2 * n + 2), "length " + str(d.length()));
            else if (h != class_fast(p) + 1)
              a.failure = fail(n, p.to_string(), "height " + str(class_fast(p) + 1), "height " + str(h));
            else if (const StaircasePartition back = height_bijection_inverse(d, n); back != p)
              a.failure = fail(n, d.to_string(), p.to_string(), back.to_string());
          },
          [](Acc& into, Acc&& from) {
            into.images.insert(into.images.end(), from.images.begin(), from.images.end());
            into.rotations.insert(into.rotations.end(), from.rotations.begin(), from.rotations.end());
            for (std::size_t i = 0; i < into.by_height.size(); ++i) into.by_height[i] += from.by_height[i];
            if (!into.failure) into.failure = std::move(from.failure);
          });
      if (acc.failure) return Outcome{"", acc.failure};

      std::vector<std::string> all;
      for (const DyckPath& d : enumerate_dyck_paths(n + 1)) all.push_back(d.to_string());
      std::sort(all.begin(), all.end());
      for (auto* images : {&acc.images, &acc.rotations}) {
        std::sort(images->begin(), images->end());
        if (*images != all)
          return Outcome{"", fail(n, images == &acc.images ? "height bijection image" : "rotation image",
                                  str(all.size()) + " distinct Dyck paths",
                                  str(std::set<std::string>(images->begin(), images->end()).size()) + " distinct")};
      }
      for (int k = 0; k <= n; ++k) {
        const BigInt want = count_exact_class(n, k);
        if (BigInt(acc.by_height[static_cast<std::size_t>(k + 1)]) != want)
          return Outcome{"", fail(n, "height " + str(k + 1), to_string(want), str(acc.by_height[static_cast<std::size_t>(k + 1)]))};
      }
    }
    return Outcome{"example path and stage match; bijective to n=" + str(n_max), std::nullopt};
  });
}

CheckResult check_qt_catalan(int n_max, int jobs) {
  return timed("qt_catalan", [&] {
    const BiPoly c2 = qt_catalan_formula(2);
    if (c2.to_string() != "1 + qt + 2qt^2 + q^2t^3") return Outcome{"", fail(2, "C_2", "1 + qt + 2qt^2 + q^2t^3", c2.to_string())};
    for (int n = 1; n <= 15; ++n) {
      const BiPoly c = qt_catalan_formula(n);
      if (c.at_one() != catalan(n + 1)) return Outcome{"", fail(n, "C_n(1,1)", to_string(catalan(n + 1)), to_string(c.at_one()))};
      const UniPoly by_class = c.at_t_one();
      for (int k = 0; k <= n; ++k)
        if (by_class.coeff(k) != count_exact_class(n, k))
          return Outcome{"", fail(n, "q^" + str(k) + " at t=1", to_string(count_exact_class(n, k)), to_string(by_class.coeff(k)))};
    }
    for (int n = 1; n <= n_max; ++n) {
      const BiPoly formula = qt_catalan_formula(n);
      const BiPoly brute = qt_catalan_bruteforce(n, {jobs, true});
      if (formula != brute) return Outcome{"", fail(n, "C_n(q,t)", brute.to_string(), formula.to_string())};

      const long long square = static_cast<long long>(n + 1) * (n + 1);
      Failure f = scan(n, jobs, [n, square](const StaircasePartition& p) -> Failure {
        const long long area = twice_area(rotation_path(p));
        if (area != square - 2LL * p.size()) return fail(n, p.to_string(), str(square - 2LL * p.size()), str(area));
        return std::nullopt;
      });
      if (f) return Outcome{"", f};

      // Area generating function over all Dyck paths equals C_n(1,t).
      std::vector<BigInt> by_area(static_cast<std::size_t>(square / 2 + 1));
      for (const DyckPath& d : enumerate_dyck_paths(n + 1)) ++by_area[static_cast<std::size_t>((square - twice_area(d)) / 2)];
      if (UniPoly(by_area) != formula.at_q_one())
        return Outcome{"", fail(n, "C_n(1,t)", UniPoly(by_area).to_string('t'), formula.at_q_one().to_string('t'))};
    }
    return Outcome{"formula equals tally to n=" + str(n_max) + "; C_n(1,1) to n=15", std::nullopt};
  });
}

CheckResult check_extremal(int n_max, int jobs) {
  return timed("extremal", [&] {
    for (int n = 1; n <= n_max; ++n) {
      const int dims = n * (n + 1) / 2;
      struct Acc {
        std::vector<int> min_dim, max_dim, min_class, max_class;
      };
      Acc init{std::vector<int>(static_cast<std::size_t>(n + 1), dims + 1), std::vector<int>(static_cast<std::size_t>(n + 1), -1),
               std::vector<int>(static_cast<std::size_t>(dims + 1), n + 1), std::vector<int>(static_cast<std::size_t>(dims + 1), -1)};
      const Acc acc = reduce_partitions(
          n, jobs, init,
          [](Acc& a, const StaircasePartition& p) {
            const auto k = static_cast<std::size_t>(class_fast(p));
            const auto d = static_cast<std::size_t>(p.size());
            a.min_dim[k] = std::min(a.min_dim[k], p.size());
            a.max_dim[k] = std::max(a.max_dim[k], p.size());
            a.min_class[d] = std::min(a.min_class[d], static_cast<int>(k));
            a.max_class[d] = std::max(a.max_class[d], static_cast<int>(k));
          },
          [](Acc& into, Acc&& from) {
            for (std::size_t i = 0; i < into.min_dim.size(); ++i) {
              into.min_dim[i] = std::min(into.min_dim[i], from.min_dim[i]);
              into.max_dim[i] = std::max(into.max_dim[i], from.max_dim[i]);
            }
            for (std::size_t i = 0; i < into.min_class.size(); ++i) {
              into.min_class[i] = std::min(into.min_class[i], from.min_class[i]);
              into.max_class[i] = std::max(into.max_class[i], from.max_class[i]);
            }
          });

      const BiPoly qt = qt_catalan_formula(n);
      for (int k = 0; k <= n; ++k) {
        const auto u = static_cast<std::size_t>(k);
        const std::string where = "k=" + str(k);
        if (theta_min(n, k) != acc.min_dim[u] || theta_max(n, k) != acc.max_dim[u])
          return Outcome{"", fail(n, where, str(acc.min_dim[u]) + ".." + str(acc.max_dim[u]),
                                  to_string(theta_min(n, k)) + ".." + to_string(theta_max(n, k)))};
        const UniPoly row = qt.q_coefficient(k);
        for (int d = acc.min_dim[u]; d <= acc.max_dim[u]; ++d)
          if (row.coeff(d).is_zero()) return Outcome{"", fail(n, where + " t^" + str(d), "nonzero", "0")};
        if (row.degree() != acc.max_dim[u]) return Outcome{"", fail(n, where, "degree " + str(acc.max_dim[u]), "degree " + str(row.degree()))};
        if (k == 0) continue;
        const ExtremalWitness w = extremal_witness(n, k);
        for (const auto& [p, want] : {std::pair{&w.smallest, theta_min(n, k)}, std::pair{&w.largest, theta_max(n, k)}}) {
          if (class_tableau(*p) != k || BigInt(p->size()) != want)
            return Outcome{"", fail(n, p->to_string(), "class " + str(k) + ", dim " + to_string(want),
                                    "class " + str(class_tableau(*p)) + ", dim " + str(p->size()))};
        }
      }
      for (int A = 0; A <= dims; ++A) {
        const auto u = static_cast<std::size_t>(A);
        const int lo = Theta_min(n, A);
        const int hi = Theta_max(n, A);
        if (lo != acc.min_class[u] || hi != acc.max_class[u])
          return Outcome{"", fail(n, "A=" + str(A), str(acc.min_class[u]) + ".." + str(acc.max_class[u]), str(lo) + ".." + str(hi))};
      }
    }
    return Outcome{"extrema, witnesses and degree support to n=" + str(n_max), std::nullopt};
  });
}

CheckResult check_affine(int n_max, int jobs) {
  return timed("affine", [&] {
    for (int n = 1; n <= n_max; ++n) {
      Failure f = scan(n, jobs, [n](const StaircasePartition& p) -> Failure {
        const NilpotenceFilling t = compute_filling(p);
        const AffineWindow w = affine_window(t);
        if (!w.sum_ok()) return fail(n, p.to_string(), "window sum " + str((n + 2) * (n + 1) / 2), "different sum");
        if (!w.residues_distinct()) return fail(n, p.to_string(), "distinct residues", "repeated residue");
        for (int i = 1; i <= n + 1; ++i) {
          for (int j = i + 1; j <= n + 1; ++j) {
            const long long lhs = floor_div(w.values[static_cast<std::size_t>(j - 1)] - w.values[static_cast<std::size_t>(i - 1)], n + 1);
            if (lhs != t.at(i, n - j + 2))
              return fail(n, p.to_string() + " (i=" + str(i) + ", j=" + str(j) + ")", str(t.at(i, n - j + 2)), str(lhs));
          }
        }
        long long levels = 0;
        for (const auto& r : t.rows())
          for (int v : r) levels += v;
        if (static_cast<long long>(inversion_levels(p).size()) != levels)
          return fail(n, p.to_string(), str(levels) + " inversions", str(inversion_levels(p).size()));
        return std::nullopt;
      });
      if (f) return Outcome{"", f};
    }
    return Outcome{"window invariants and inversion table to n=" + str(n_max), std::nullopt};
  });
}

CheckResult check_monotonicity(int n_max, int jobs) {
  return timed("monotonicity", [&] {
    for (int n = 1; n <= n_max; ++n) {
      Failure f = scan(n, jobs, [n](const StaircasePartition& p) -> Failure {
        const int k = class_fast(p);
        std::vector<int> parts(p.parts().begin(), p.parts().end());
        for (int i = 1; i <= n; ++i) {
          const int cap = std::min(n - i + 1, i == 1 ? n : p.part(i - 1));
          if (p.part(i) >= cap) continue;
          ++parts[static_cast<std::size_t>(i - 1)];
          const int bigger = class_fast(std::span<const int>(parts));
          --parts[static_cast<std::size_t>(i - 1)];
          if (bigger < k) return fail(n, p.to_string() + " + cell in row " + str(i), ">= " + str(k), str(bigger));
        }
        return std::nullopt;
      });
      if (f) return Outcome{"", f};
    }
    return Outcome{"class is monotone along every cover to n=" + str(n_max), std::nullopt};
  });
}

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  if (options.n_max < 1 || options.n_max > kVerifyHardCap)
    throw std::invalid_argument("n-max must lie in 1.." + std::to_string(kVerifyHardCap));
  const auto& names = verification_checks();
  for (const std::string& want : options.only)
    if (std::find(names.begin(), names.end(), want) == names.end())
      throw std::invalid_argument("unknown check '" + want + "'");

  auto selected = [&](const std::string& name) {
    return options.only.empty() || std::find(options.only.begin(), options.only.end(), name) != options.only.end();
  };
  const int n = options.n_max;
  const int jobs = options.jobs;
  std::vector<CheckResult> out;
  for (const std::string& name : names) {
    if (!selected(name)) continue;
    if (name == "example_class") out.push_back(check_example_class());
    else if (name == "fillings_n4") out.push_back(check_fillings_n4());
    else if (name == "class_agreement") out.push_back(check_class_agreement(n, jobs));
    else if (name == "decomposition") out.push_back(check_decomposition(n, jobs));
    else if (name == "count_agreement") out.push_back(check_count_agreement(n, jobs, options.reflection_override));
    else if (name == "closed_forms") out.push_back(check_closed_forms(n, jobs));
    else if (name == "bijection") out.push_back(check_bijection(n, jobs));
    else if (name == "qt_catalan") out.push_back(check_qt_catalan(n, jobs));
    else if (name == "extremal") out.push_back(check_extremal(n, jobs));
    else if (name == "affine") out.push_back(check_affine(n, jobs));
    else if (name == "monotonicity") out.push_back(check_monotonicity(n, jobs));
  }
  return out;
}

}  // namespace adnil
