#include "svtab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "svtab/biject.hpp"
#include "svtab/closedform.hpp"
#include "svtab/enumerate.hpp"
#include "svtab/error.hpp"
#include "svtab/posets.hpp"
#include "svtab/series.hpp"
#include "svtab/stats.hpp"

namespace svtab {

namespace {

struct Outcome {
  bool pass;
  std::string expected, actual;
};

struct Task {
  std::string suite, name, instance;
  std::function<Outcome()> run;
};

template <class A, class B>
Outcome compare(const A& expected, const B& actual) {
  std::ostringstream e, a;
  e << expected;
  a << actual;
  return {e.str() == a.str(), e.str(), a.str()};
}

Outcome flag(bool ok, std::string what) {
  return {ok, what, ok ? what : "violated"};
}

std::string pad(int n) { return "n=" + std::to_string(n); }

class Plan {
 public:
  Plan(const VerifyOptions& o) : opt(o), desk(o.budget == "desk") {}

  void add(std::string suite, std::string name, std::string instance, std::function<Outcome()> run) {
    tasks.push_back({std::move(suite), std::move(name), std::move(instance), std::move(run)});
  }

  const VerifyOptions& opt;
  bool desk;
  std::vector<Task> tasks;
};

void plan_enumerate(Plan& plan) {
  const std::string s = "enumerate";
  for (int n = 2; n <= (plan.desk ? 12 : 9); ++n) {
    plan.add(s, "two_row_union_catalan", pad(n), [n] { return compare(catalan(n - 1), count_two_row_union(n)); });
  }
  for (int m = 1; m <= (plan.desk ? 10 : 8); ++m) {
    plan.add(s, "avoid321_catalan", "m=" + std::to_string(m), [m] { return compare(catalan(m), count_avoid321(m)); });
  }
  for (int n = 2; n <= 10; ++n) {
    plan.add(s, "motzkin_family_counts", pad(n), [n] {
      std::ostringstream e, a;
      e << catalan(n + 1) << ' ' << catalan(n) << ' ' << catalan(n) << ' ' << catalan(n - 1);
      a << count_paths(PathFamily::motz, n) << ' ' << count_paths(PathFamily::motzE, n) << ' '
        << count_paths(PathFamily::motzT, n) << ' ' << count_paths(PathFamily::motzET, n);
      return Outcome{e.str() == a.str(), e.str(), a.str()};
    });
  }
  for (int n = 0; n <= 8; ++n) {
    for (int i = 0; i <= n; ++i) {
      plan.add(s, "ballotlike_vs_ballot_tableaux", pad(n) + " i=" + std::to_string(i), [n, i] {
        std::ostringstream a;
        a << count_ballotlike(n, i) << ' ' << count_ballot_tableaux(n, i);
        std::ostringstream e;
        e << ballot_count(n, i) << ' ' << ballot_count(n, i);
        return Outcome{e.str() == a.str(), e.str(), a.str()};
      });
    }
  }
}

void plan_biject(Plan& plan) {
  const std::string s = "biject";
  for (int n = 2; n <= (plan.desk ? 10 : 8); ++n) {
    plan.add(s, "alpha_statistics", pad(n), [n] {
      std::uint64_t bad = 0, total = 0;
      std::set<std::vector<int>> images;
      for_each_two_row_union(n, [&](const SetValuedTableau& t) {
        ++total;
        const Permutation pi = alpha(t);
        images.insert(pi.word());
        const int columns = t.shape().outer()[0];
        const bool ok = pi.avoids_321() && alpha_inv(pi) == t && rl_minima(pi) == t.row_entries(0) &&
                        static_cast<int>(inner_valleys(pi).size()) == columns - 1;
        bad += !ok;
      });
      const bool onto = images.size() == total && total == count_avoid321(n - 1);
      return compare(std::string("0 bad, bijective"),
                     std::to_string(bad) + " bad, " + (onto ? "bijective" : "not bijective"));
    });
    plan.add(s, "beta_roundtrip", pad(n), [n] {
      std::uint64_t bad = 0;
      for_each_two_row_union(n, [&](const SetValuedTableau& t) {
        const ColoredPath p = beta(t);
        bad += !(in_family(p, PathFamily::motzET) && p.count(Step::u) + p.count(Step::d) == t.k() &&
                 beta_inv(p) == t);
      });
      return compare(0, bad);
    });
  }
  for (int n = 1; n <= 9; ++n) {
    plan.add(s, "phi_images", pad(n), [n] {
      std::set<ColoredPath> image_t, image_et;
      std::uint64_t bad = 0;
      for_each_path(PathFamily::motzT, n, [&](const ColoredPath& p) {
        const ColoredPath q = phi(p);
        bad += !(phi_inv(q) == p);
        bad += q.count(Step::U) + q.count(Step::u) + 1 != p.count(Step::U) + p.count(Step::u);
        image_t.insert(q);
        if (in_family(p, PathFamily::motzET)) image_et.insert(q);
      });
      const auto motz = gen_paths(PathFamily::motz, n - 1);
      const auto motz_e = gen_paths(PathFamily::motzE, n - 1);
      // motzET(1) is empty while motzE(0) holds the empty path.
      const bool ok = bad == 0 && image_t == std::set<ColoredPath>(motz.begin(), motz.end()) &&
                      (n < 2 || image_et == std::set<ColoredPath>(motz_e.begin(), motz_e.end()));
      return flag(ok, "phi: motzT -> motz and motzET -> motzE, bijective");
    });
  }
  plan.add(s, "compose_decompose", "|lambda|+k<=8, <=3 rows", [] {
    std::uint64_t bad = 0, seen = 0;
    for (int size = 1; size <= 8; ++size) {
      for (const Partition& lambda : partitions_of(size)) {
        if (lambda.length() > 3) continue;
        for (int k = 0; size + k <= 8; ++k) {
          for_each_svsyt(lambda, k, [&](const SetValuedTableau& t) {
            ++seen;
            const TableauTriple tr = decompose(t);
            bad += !(compose(tr) == t && tr.T.is_standard() && static_cast<int>(tr.cuts.size()) == k);
          });
        }
      }
    }
    return compare(std::string("0 of ") + std::to_string(seen), std::to_string(bad) + " of " + std::to_string(seen));
  });
  for (int n = 3; n <= 8; ++n) {
    plan.add(s, "rotate_complement_counts", pad(n), [n] {
      std::uint64_t count = 0, bad = 0;
      for (int b = 0; 2 * b + 1 <= n; ++b) {
        const int k = n - 1 - 2 * b;
        for_each_svsyt(Partition::two_row(b + 1, b), k, [&](const SetValuedTableau& t) {
          ++count;
          const SetValuedTableau r = rotate_complement(t);
          bad += !(rotate_complement(r) == t);
        });
      }
      const Integer expected = catalan(n) - catalan(n - 1);
      return compare(expected, bad ? Integer(-1) : Integer(count));
    });
  }
}

void plan_closedform(Plan& plan) {
  const std::string s = "closedform";
  plan.add(s, "f_recursion_vs_closed_form", "n<=8", [] {
    const auto table = f_table_recursive(8);
    int bad = 0;
    for (int n = 0; n <= 8; ++n) {
      for (int i = 0; i <= n; ++i) bad += table[n][i] != f_count(n, i);
    }
    return compare(0, bad);
  });
  for (int n = 2; n <= 8; ++n) {
    plan.add(s, "ef_row_sums", pad(n), [n] {
      Integer e = 0, f = 0;
      for (int i = 0; i <= n; ++i) {
        e += e_count(n, i);
        f += f_count(n, i);
      }
      const auto sums = row_sums(n);
      return compare(to_string(sums.first) + "," + to_string(sums.second), to_string(e) + "," + to_string(f));
    });
  }
  for (int b = 1; 2 * b <= 12; ++b) {
    for (int k = 0; 2 * b + k <= 12; ++k) {
      if (!plan.desk && 2 * b + k > 9) continue;
      plan.add(s, "act_peaks_enumeration", "b=" + std::to_string(b) + " k=" + std::to_string(k), [b, k] {
        std::ostringstream a;
        a << act_count(b, k) << ' ' << peaks_count(b, k) << ' ' << count_svsyt(Partition::rectangle(2, b), k);
        std::ostringstream e;
        const Integer v = act_count(b, k);
        e << v << ' ' << v << ' ' << v;
        return Outcome{e.str() == a.str(), e.str(), a.str()};
      });
    }
  }
  for (int n = 3; n <= 15; ++n) {
    plan.add(s, "more_shapes_forms", pad(n),
             [n] { return compare(more_shapes_counts(n).first, more_shapes_binomial_form(n)); });
  }
  for (int n = 3; n <= 8; ++n) {
    plan.add(s, "more_shapes_enumeration", pad(n), [n] {
      std::uint64_t first = 0, second = 0;
      for (int b = 0; 2 * b + 1 <= n; ++b) first += count_svsyt(Partition::two_row(b + 1, b), n - 1 - 2 * b);
      for (int b = 1; 2 * b <= n - 1; ++b) {
        second += count_svsyt(SkewShape(Partition::two_row(b + 1, b), Partition({1})), n - 1 - 2 * b);
      }
      const auto counts = more_shapes_counts(n);
      return compare(to_string(counts.first) + "," + to_string(counts.second),
                     std::to_string(first) + "," + std::to_string(second));
    });
  }
  for (int n = 2; n <= 9; ++n) {
    plan.add(s, "kreweras_refinement", pad(n), [n] {
      std::map<std::pair<int, std::vector<int>>, std::uint64_t> tally;
      for_each_two_row_union(n, [&](const SetValuedTableau& t) {
        const DyckType type = dyck_type(t);
        ++tally[{type.m, std::vector<int>(type.mu.begin() + 1, type.mu.end())}];
      });
      int bad = 0;
      std::map<int, Integer> by_m;
      for (const auto& [key, count] : tally) {
        bad += kreweras(n - 1, key.first, key.second) != Integer(count);
        by_m[key.first] += count;
      }
      for (const auto& [m, count] : by_m) bad += narayana(n - 1, m) != count;
      return compare(0, bad);
    });
  }
}

void plan_stats(Plan& plan) {
  const std::string s = "stats";
  for (int n = 1; n <= 9; ++n) {
    plan.add(s, "q_catalan_at_one", pad(n), [n] {
      const auto row = q_narayana_row(n);
      QPoly sum;
      for (const auto& p : row) sum = sum + p;
      const QPoly cat = q_catalan_tilde(n);
      return compare(catalan(n), sum == cat ? cat.eval_at_one() : Integer(-1));
    });
  }
  plan.add(s, "comaj_roundtrip_invariant", "|lambda|+k<=7", [] {
    std::uint64_t bad = 0;
    for (int size = 1; size <= 7; ++size) {
      for (const Partition& lambda : partitions_of(size)) {
        for (int k = 0; size + k <= 7; ++k) {
          for_each_svsyt(lambda, k, [&](const SetValuedTableau& t) {
            bad += comaj_plus_k(compose(decompose(t))) != comaj_plus_k(t);
          });
        }
      }
    }
    return compare(0, bad);
  });
}

void plan_series(Plan& plan) {
  const std::string s = "series";
  const int order = plan.opt.order;
  auto ctx = std::make_shared<SeriesContext>(SeriesContext::build(order));
  const std::string at = "N=" + std::to_string(order);
  plan.add(s, "functional_residuals", at, [ctx] { return flag(functional_residuals(*ctx).all_zero(), "all zero"); });
  plan.add(s, "closed_forms", at, [ctx, order] {
    const bool ok = closed_form_E(order) == ctx->E && closed_form_E1(order) == ctx->E1 &&
                    closed_form_E12(order) == ctx->E12;
    return flag(ok, "closed forms equal fixed-point series");
  });
  plan.add(s, "e12_symmetry", at, [ctx] {
    const TSeries a = ctx->E12.map([](const MultiPoly& c) { return c.swapped(Marker::U, Marker::D); });
    const TSeries b = ctx->E12.map([](const MultiPoly& c) { return c.swapped(Marker::u, Marker::d); });
    return flag(a == ctx->E12 && b == ctx->E12, "invariant under U<->D and u<->d");
  });
  for (int n = 0; n <= std::min(order, 8); ++n) {
    plan.add(s, "marker_level_tallies", pad(n), [ctx, n] {
      int bad = 0;
      for (PathFamily f : {PathFamily::motz, PathFamily::motzE, PathFamily::motzT, PathFamily::motzET}) {
        // E12 has no constant term; the empty path is not counted there.
        if (f == PathFamily::motzET && n == 0) continue;
        bad += !(ctx->get(f)[n] == step_polynomial(f, n));
      }
      return compare(0, bad);
    });
  }
  plan.add(s, "expected_steps_n2", pad(2), [] { return compare(Rational(1), expected_steps(2, Step::U)); });
  for (int n = 3; n <= 12; ++n) {
    plan.add(s, "expected_steps", pad(n), [n] {
      const Rational U = expected_steps(n, Step::U), u = expected_steps(n, Step::u);
      const Rational wantU(n * n + n - 6, 4 * n - 6), wantu(n * n - 4 * n + 6, 4 * n - 6);
      const bool sum_ok = 2 * U + 2 * u == Rational(n);
      return compare(to_string(wantU) + " " + to_string(wantu) + " sum ok",
                     to_string(U) + " " + to_string(u) + (sum_ok ? " sum ok" : " sum off"));
    });
  }
  plan.add(s, "peaks_generating_function", "n<=8", [] {
    const auto table = peaks_genfun_table(8);
    int bad = 0;
    for (int n = 1; n <= 8; ++n) {
      std::vector<Integer> tally(table[n].size() + n, 0);
      for_each_avoid321(n, [&](const Permutation& pi) { tally[inner_peaks(pi).size()] += 1; });
      for (std::size_t k = 0; k < tally.size(); ++k) {
        const Integer want = k < table[n].size() ? table[n][k] : Integer(0);
        bad += want != tally[k];
      }
    }
    return compare(0, bad);
  });
}

void plan_posets(Plan& plan) {
  const std::string s = "posets";
  const int max_k = plan.opt.max_k;
  auto catalog = std::make_shared<std::vector<Poset>>(poset_catalog(plan.opt.max_elements));
  for (std::size_t idx = 0; idx < catalog->size(); ++idx) {
    const Poset& p = (*catalog)[idx];
    for (int k = 0; k <= max_k; ++k) {
      const std::string instance = p.name() + " k=" + std::to_string(k);
      plan.add(s, "sum_identity", instance, [catalog, idx, k] {
        const auto r = sum_identity_check((*catalog)[idx], k);
        return Outcome{r.holds(), r.rhs.to_string(), r.lhs.to_string()};
      });
      plan.add(s, "expected_ddeg", instance, [catalog, idx, k] {
        const auto r = expected_ddeg((*catalog)[idx], k);
        const QPoly l = r.lhs_num * r.rhs_den, rr = r.rhs_num * r.lhs_den;
        return Outcome{r.holds(), rr.to_string(), l.to_string()};
      });
      plan.add(s, "two_routes", instance, [catalog, idx, k] {
        const auto r = sv_linear_extensions_two_ways((*catalog)[idx], k);
        return compare(std::to_string(r.direct.size()) + " equal",
                       std::to_string(r.via_triples.size()) + (r.agree() ? " equal" : " differ"));
      });
      if (p.size() <= 5 && k <= 2) {
        plan.add(s, "multichain_fibers", instance,
                 [catalog, idx, k] { return compare(0, multichain_fiber_mismatches((*catalog)[idx], k)); });
      }
    }
  }
  plan.add(s, "pi_perm_permutation", "n<=8", [] {
    int bad = 0;
    for (int n = 0; n <= 8; ++n) {
      for (std::uint64_t X = 0; X < (std::uint64_t(1) << (n + 1)); ++X) {
        std::vector<bool> hit(n + 1, false);
        for (int t = 0; t <= n; ++t) {
          const int v = pi_perm(X, n, t);
          if (v >= 0 && v <= n) hit[v] = true;
        }
        bad += std::count(hit.begin(), hit.end(), false) != 0;
      }
    }
    return compare(0, bad);
  });
  for (int n = 1; n <= 5; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      for (int k = 0; k <= 2; ++k) {
        plan.add(s, "equidistribution", lambda.to_string() + " k=" + std::to_string(k), [lambda, k] {
          return flag(equidistribution_check(lambda, k).equal(), "tables equal");
        });
      }
    }
  }
}

void run_tasks(std::vector<Task>& tasks, std::vector<CheckResult>& out, int threads) {
  out.assign(tasks.size(), {});
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      CheckResult& r = out[i];
      r.suite = tasks[i].suite;
      r.name = tasks[i].name;
      r.instance = tasks[i].instance;
      const auto start = std::chrono::steady_clock::now();
      try {
        Outcome o = tasks[i].run();
        r.pass = o.pass;
        r.expected = std::move(o.expected);
        r.actual = std::move(o.actual);
      } catch (const std::exception& e) {
        r.pass = false;
        r.actual = std::string("exception: ") + e.what();
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names = {"enumerate", "biject", "closedform", "stats", "series", "posets"};
  return names;
}

int default_threads() {
  if (const char* env = std::getenv("SVTAB_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

bool VerifyReport::passed() const { return failures() == 0; }

int VerifyReport::failures() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.pass; }));
}

Json VerifyReport::to_json() const {
  Json j;
  j["suite"] = options.suite;
  j["budget"] = options.budget;
  j["passed"] = passed();
  j["total"] = checks.size();
  j["failures"] = failures();
  Json list = Json::array();
  for (const CheckResult& c : checks) {
    Json e;
    e["suite"] = c.suite;
    e["name"] = c.name;
    e["instance"] = c.instance;
    e["status"] = c.pass ? "pass" : "fail";
    e["expected"] = c.expected;
    e["actual"] = c.actual;
    e["seconds"] = options.timings ? c.seconds : 0.0;
    list.push_back(std::move(e));
  }
  j["checks"] = std::move(list);
  return j;
}

VerifyReport run_verify(const VerifyOptions& options) {
  const auto& names = verify_suites();
  if (options.suite != "all" && std::find(names.begin(), names.end(), options.suite) == names.end()) {
    throw Error(Errc::InvalidArgument, "unknown suite: " + options.suite);
  }
  if (options.budget != "desk" && options.budget != "quick") {
    throw Error(Errc::InvalidArgument, "unknown budget: " + options.budget);
  }
  if (options.order < 0 || options.max_elements < 0 || options.max_elements > 8 || options.max_k < 0) {
    throw Error(Errc::OutOfRange, "verify parameters out of range");
  }
  Plan plan(options);
  auto wants = [&](const char* s) { return options.suite == "all" || options.suite == s; };
  if (wants("enumerate")) plan_enumerate(plan);
  if (wants("biject")) plan_biject(plan);
  if (wants("closedform")) plan_closedform(plan);
  if (wants("stats")) plan_stats(plan);
  if (wants("series")) plan_series(plan);
  if (wants("posets")) plan_posets(plan);
  VerifyReport report;
  report.options = options;
  run_tasks(plan.tasks, report.checks, options.threads > 0 ? options.threads : default_threads());
  return report;
}

}  // namespace svtab
