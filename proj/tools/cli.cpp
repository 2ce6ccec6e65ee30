#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "svtab/biject.hpp"
#include "svtab/closedform.hpp"
#include "svtab/enumerate.hpp"
#include "svtab/error.hpp"
#include "svtab/json_io.hpp"
#include "svtab/series.hpp"
#include "svtab/stats.hpp"
#include "svtab/verify.hpp"

namespace svtab::cli {

namespace {

struct Config {
  // enumerate / count
  std::string family;
  std::string formula;
  std::string path_family = "motzET";
  std::string shape;
  std::string mu;
  int n = -1, k = 0, i = 0, m = -1, b = -1;
  std::string emit = "json";
  bool oracle = false;
  // table / qtable / series
  std::string name = "ef";
  std::string stat = "catalan";
  std::string which = "E12";
  std::string spec = "all-ones";
  std::string format = "csv";
  int max_n = 8;
  int order = 6;
  // biject
  std::string map;
  std::string input;
  // expect
  std::string step = "U";
  std::string range = "4..12";
  // verify
  VerifyOptions verify;
  std::string report = "json";
  std::string output;
  bool no_timing = false;
};

void need(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::InvalidArgument, what);
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::logic_error&) {
    throw Error(Errc::ParseError, "bad range: " + text);
  }
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  try {
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) out.push_back(std::stoi(item));
    }
  } catch (const std::logic_error&) {
    throw Error(Errc::ParseError, "bad integer list: " + text);
  }
  return out;
}

Step parse_step(const std::string& s) {
  need(s.size() == 1 && std::string("UDud").find(s[0]) != std::string::npos, "step must be one of U, D, u, d");
  switch (s[0]) {
    case 'U': return Step::U;
    case 'D': return Step::D;
    case 'u': return Step::u;
    default: return Step::d;
  }
}

// ---- enumerate / count ----

struct Family {
  std::function<void(const std::function<void(const Json&, const std::string&)>&)> each;
  std::function<std::uint64_t()> count;
};

Family family_from(const Config& c) {
  const std::string& f = c.family;
  auto text = [](auto&& emit) {
    return [emit](const auto& x) { emit(Json(x.to_string()), x.to_string()); };
  };
  if (f == "svsyt" || f == "syt") {
    need(!c.shape.empty(), "--shape is required");
    const Partition shape = Partition::parse(c.shape);
    const int k = f == "syt" ? 0 : c.k;
    need(k >= 0, "--k must be nonnegative");
    return {[shape, k](auto emit) {
              for_each_svsyt(shape, k, [&](const SetValuedTableau& t) { emit(tableau_to_json(t), t.to_string()); });
            },
            [shape, k] { return count_svsyt(shape, k); }};
  }
  if (f == "two-row-union") {
    need(c.n >= 2, "--n must be at least 2");
    const int n = c.n;
    return {[n](auto emit) {
              for_each_two_row_union(n, [&](const SetValuedTableau& t) { emit(tableau_to_json(t), t.to_string()); });
            },
            [n] { return count_two_row_union(n); }};
  }
  if (f == "ballot-tableaux") {
    const int n = c.n, i = c.i;
    need(n >= 0 && i >= 0 && i <= n, "need 0 <= i <= n");
    return {[n, i](auto emit) {
              for_each_ballot_tableau(n, i, [&](const SetValuedTableau& t) { emit(tableau_to_json(t), t.to_string()); });
            },
            [n, i] { return count_ballot_tableaux(n, i); }};
  }
  if (f == "avoid321") {
    const int m = c.m >= 0 ? c.m : c.n;
    need(m >= 1, "--m must be at least 1");
    return {[m, text](auto emit) { for_each_avoid321(m, text(emit)); }, [m] { return count_avoid321(m); }};
  }
  if (f == "path") {
    need(c.n >= 0, "--n is required");
    const PathFamily fam = parse_family(c.path_family);
    const int n = c.n;
    return {[fam, n, text](auto emit) { for_each_path(fam, n, text(emit)); }, [fam, n] { return count_paths(fam, n); }};
  }
  if (f == "ballotlike") {
    const int n = c.n, i = c.i;
    need(n >= 0 && i >= 0 && i <= n, "need 0 <= i <= n");
    return {[n, i, text](auto emit) { for_each_ballotlike(n, i, text(emit)); },
            [n, i] { return count_ballotlike(n, i); }};
  }
  throw Error(Errc::InvalidArgument, "unknown family: " + f);
}

int cmd_enumerate(const Config& c, std::ostream& out) {
  const Family fam = family_from(c);
  if (c.emit == "count") {
    out << fam.count() << '\n';
  } else if (c.emit == "json") {
    Json list = Json::array();
    fam.each([&](const Json& j, const std::string&) { list.push_back(j); });
    out << list.dump() << '\n';
  } else if (c.emit == "text") {
    fam.each([&](const Json&, const std::string& s) { out << s << '\n'; });
  } else {
    throw Error(Errc::InvalidArgument, "unknown --emit: " + c.emit);
  }
  return 0;
}

std::vector<int> strip_zeros(std::vector<int> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

// Two-row tableaux with n+1 entries whose Dyck type has m peaks (and
// multiplicities mu, when given).
Integer dyck_refinement_count(int n, int m, const std::vector<int>* mu) {
  std::uint64_t total = 0;
  const std::vector<int> want = mu ? strip_zeros(*mu) : std::vector<int>{};
  for_each_two_row_union(n + 1, [&](const SetValuedTableau& t) {
    const DyckType type = dyck_type(t);
    if (type.m != m) return;
    total += !mu || strip_zeros(std::vector<int>(type.mu.begin() + 1, type.mu.end())) == want;
  });
  return Integer(total);
}

// Formula value and, when an enumeration route exists, its oracle.
std::pair<Integer, std::function<Integer()>> formula_from(const Config& c) {
  const std::string& f = c.formula;
  const int n = c.n, i = c.i, k = c.k, m = c.m, b = c.b;
  if (f == "catalan") {
    need(n >= 0, "--n is required");
    return {catalan(n), n >= 1 ? std::function<Integer()>([n] { return Integer(count_avoid321(n)); }) : nullptr};
  }
  if (f == "narayana") {
    return {narayana(n, m), [n, m] { return dyck_refinement_count(n, m, nullptr); }};
  }
  if (f == "kreweras") {
    const std::vector<int> mu = parse_ints(c.mu);
    return {kreweras(n, m, mu), [n, m, mu] { return dyck_refinement_count(n, m, &mu); }};
  }
  if (f == "ballot") {
    return {ballot_count(n, i), [n, i] { return Integer(count_ballotlike(n, i)); }};
  }
  if (f == "e") {
    return {e_count(n, i), [n, i] {
              std::uint64_t total = 0;
              for_each_ballotlike(n, i, [&](const ColoredPath& p) { total += p.count(Step::D) == 0; });
              return Integer(total);
            }};
  }
  if (f == "f") return {f_count(n, i), [n, i] { return f_count_recursive(n, i); }};
  if (f == "act" || f == "peaks") {
    need(b >= 1 && k >= 0, "need --b >= 1 and --k >= 0");
    return {f == "act" ? act_count(b, k) : peaks_count(b, k),
            [b, k] { return Integer(count_svsyt(Partition::rectangle(2, b), k)); }};
  }
  if (f == "more-shapes") {
    need(n >= 3, "--n must be at least 3");
    return {more_shapes_counts(n).first, [n] {
              std::uint64_t total = 0;
              for (int bb = 0; 2 * bb + 1 <= n; ++bb) total += count_svsyt(Partition::two_row(bb + 1, bb), n - 1 - 2 * bb);
              return Integer(total);
            }};
  }
  throw Error(Errc::InvalidArgument, "unknown formula: " + f);
}

int cmd_count(const Config& c, std::ostream& out) {
  need(c.family.empty() != c.formula.empty(), "give exactly one of --family or --formula");
  if (!c.family.empty()) {
    out << family_from(c).count() << '\n';
    return 0;
  }
  auto [value, oracle] = formula_from(c);
  if (!c.oracle) {
    out << value << '\n';
    return 0;
  }
  need(static_cast<bool>(oracle), "no oracle for formula " + c.formula);
  const Integer seen = oracle();
  const bool agree = seen == value;
  out << "formula=" << value << " oracle=" << seen << ' ' << (agree ? "agree" : "MISMATCH") << '\n';
  return agree ? 0 : 1;
}

// ---- tables ----

int cmd_table(const Config& c, std::ostream& out) {
  need(c.max_n >= 0 && c.max_n <= 40, "--max-n out of range");
  const bool csv = c.format == "csv";
  need(csv || c.format == "text", "--format must be csv or text");
  if (c.name == "ef") {
    if (csv) out << "n,i,e,f\n";
    for (int n = 0; n <= c.max_n; ++n) {
      for (int i = 0; i <= n; ++i) {
        if (csv) {
          out << n << ',' << i << ',' << e_count(n, i) << ',' << f_count(n, i) << '\n';
        } else {
          out << (i ? " " : "") << e_count(n, i) << ',' << f_count(n, i);
        }
      }
      if (!csv) out << '\n';
    }
    return 0;
  }
  if (c.name == "ef-sums") {
    if (csv) out << "n,sum_e,sum_f\n";
    for (int n = 2; n <= c.max_n; ++n) {
      const auto [e, f] = row_sums(n);
      out << n << (csv ? "," : " ") << e << (csv ? "," : " ") << f << '\n';
    }
    return 0;
  }
  if (c.name == "ballot") {
    if (csv) out << "n,i,count\n";
    for (int n = 0; n <= c.max_n; ++n) {
      for (int i = 0; i <= n; ++i) out << n << ',' << i << ',' << ballot_count(n, i) << '\n';
    }
    return 0;
  }
  throw Error(Errc::InvalidArgument, "unknown table: " + c.name);
}

int cmd_qtable(const Config& c, std::ostream& out) {
  need(c.max_n >= 1 && c.max_n <= 12, "--max-n must be in 1..12");
  const bool csv = c.format == "csv";
  need(csv || c.format == "text", "--format must be csv or text");
  for (int n = 1; n <= c.max_n; ++n) {
    if (c.stat == "catalan") {
      const QPoly p = q_catalan_tilde(n);
      if (csv) {
        out << p.to_csv() << '\n';
      } else {
        out << "n=" << n << ": " << p.to_string() << '\n';
      }
    } else if (c.stat == "narayana") {
      const auto row = q_narayana_row(n);
      for (int m = 1; m < static_cast<int>(row.size()); ++m) {
        if (row[m].is_zero()) continue;
        if (csv) {
          out << row[m].to_csv() << '\n';
        } else {
          out << "n=" << n << " m=" << m << ": " << row[m].to_string() << '\n';
        }
      }
    } else {
      throw Error(Errc::InvalidArgument, "unknown statistic: " + c.stat);
    }
  }
  return 0;
}

// ---- bijections ----

Json triple_to_json(const TableauTriple& tr) {
  Json j;
  j["T"] = tableau_to_json(tr.T);
  j["cuts"] = tr.cuts;
  Json picks = Json::array();
  for (Cell cell : tr.picks) picks.push_back({cell.row + 1, cell.col + 1});
  j["picks"] = picks;
  return j;
}

TableauTriple triple_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("T") || !j.contains("cuts") || !j.contains("picks")) {
    throw Error(Errc::ParseError, "triple needs T, cuts and picks");
  }
  TableauTriple tr{tableau_from_json(j["T"]), {}, {}};
  try {
    tr.cuts = j["cuts"].get<std::vector<int>>();
    for (const auto& p : j["picks"]) {
      const auto rc = p.get<std::vector<int>>();
      if (rc.size() != 2) throw Error(Errc::ParseError, "pick must be [row, col]");
      tr.picks.push_back({rc[0] - 1, rc[1] - 1});
    }
  } catch (const Json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
  return tr;
}

int cmd_biject(const Config& c, std::ostream& out) {
  need(!c.input.empty(), "--input is required");
  const std::string& m = c.map;
  auto emit = [&](const SetValuedTableau& t) { out << tableau_to_json(t).dump() << '\n'; };
  if (m == "alpha") {
    out << alpha(parse_tableau(c.input)).to_string() << '\n';
  } else if (m == "alpha-inv") {
    emit(alpha_inv(Permutation::parse(c.input)));
  } else if (m == "beta") {
    out << beta(parse_tableau(c.input)).to_string() << '\n';
  } else if (m == "beta-inv") {
    emit(beta_inv(ColoredPath::parse(c.input)));
  } else if (m == "phi") {
    out << phi(ColoredPath::parse(c.input)).to_string() << '\n';
  } else if (m == "phi-inv") {
    out << phi_inv(ColoredPath::parse(c.input)).to_string() << '\n';
  } else if (m == "decompose") {
    out << triple_to_json(decompose(parse_tableau(c.input))).dump() << '\n';
  } else if (m == "compose") {
    Json j;
    try {
      j = Json::parse(c.input);
    } catch (const Json::exception& e) {
      throw Error(Errc::ParseError, e.what());
    }
    emit(compose(triple_from_json(j)));
  } else if (m == "rotate") {
    emit(rotate_complement(parse_tableau(c.input)));
  } else {
    throw Error(Errc::InvalidArgument, "unknown map: " + m);
  }
  return 0;
}

// ---- series ----

int cmd_series(const Config& c, std::ostream& out) {
  need(c.order >= 0 && c.order <= 30, "--order must be in 0..30");
  const bool csv = c.format == "csv";
  need(csv || c.format == "text", "--format must be csv or text");
  need(c.spec == "all-ones" || c.spec == "full", "--spec must be all-ones or full");
  const SeriesContext ctx = SeriesContext::build(c.order);
  const TSeries* s = c.which == "E" ? &ctx.E : c.which == "E1" ? &ctx.E1 : c.which == "E2" ? &ctx.E2
                                                : c.which == "E12" ? &ctx.E12 : nullptr;
  need(s != nullptr, "--which must be E, E1, E2 or E12");
  for (int n = 0; n <= c.order; ++n) {
    const MultiPoly& coeff = (*s)[n];
    const std::string value = c.spec == "full" ? coeff.to_string() : to_string(coeff.eval_ones());
    if (csv) {
      out << n << ',' << (c.spec == "full" ? "\"" + value + "\"" : value) << '\n';
    } else {
      out << "[t^" << n << "] " << value << '\n';
    }
  }
  return 0;
}

int cmd_expect(const Config& c, std::ostream& out) {
  const Step step = parse_step(c.step);
  const auto [lo, hi] = parse_range(c.range);
  need(lo >= 2 && lo <= hi && hi <= 40, "--n must lie in 2..40");
  for (int n = lo; n <= hi; ++n) out << n << ',' << to_string(expected_steps(n, step)) << '\n';
  return 0;
}

int cmd_verify(Config c, std::ostream& out, std::ostream& err) {
  c.verify.timings = !c.no_timing;
  const VerifyReport report = run_verify(c.verify);
  std::ostringstream body;
  if (c.report == "json") {
    body << report.to_json().dump(2) << '\n';
  } else if (c.report == "text") {
    for (const CheckResult& r : report.checks) {
      body << (r.pass ? "PASS " : "FAIL ") << r.suite << '/' << r.name << " [" << r.instance << "]";
      if (!r.pass) body << " expected=" << r.expected << " actual=" << r.actual;
      body << '\n';
    }
    body << report.checks.size() - report.failures() << '/' << report.checks.size() << " checks passed\n";
  } else {
    throw Error(Errc::InvalidArgument, "--report must be json or text");
  }
  if (c.output.empty()) {
    out << body.str();
  } else {
    std::ofstream file(c.output);
    if (!file) throw Error(Errc::InvalidArgument, "cannot write " + c.output);
    file << body.str();
  }
  if (!report.passed()) err << report.failures() << " check(s) failed\n";
  return report.passed() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-row set-valued tableaux toolkit", "svtab"};
  app.require_subcommand(1);
  Config c;

  auto* en = app.add_subcommand("enumerate", "List every object of a family");
  en->add_option("--family", c.family, "svsyt, syt, two-row-union, ballot-tableaux, avoid321, path, ballotlike")
      ->required();
  en->add_option("--shape", c.shape, "Partition, e.g. 3,1");
  en->add_option("--k", c.k, "Extra entries");
  en->add_option("--n", c.n);
  en->add_option("--i", c.i);
  en->add_option("--m", c.m);
  en->add_option("--path-family", c.path_family, "motz, motzE, motzT, motzET, ballotlike");
  en->add_option("--emit", c.emit, "json, text or count");

  auto* co = app.add_subcommand("count", "Count a family or evaluate a formula");
  co->add_option("--family", c.family);
  co->add_option("--formula", c.formula, "catalan, narayana, kreweras, ballot, e, f, act, peaks, more-shapes");
  co->add_option("--shape", c.shape);
  co->add_option("--n", c.n);
  co->add_option("--i", c.i);
  co->add_option("--k", c.k);
  co->add_option("--m", c.m);
  co->add_option("--b", c.b);
  co->add_option("--mu", c.mu, "Multiplicities mu_1,mu_2,...");
  co->add_option("--path-family", c.path_family);
  co->add_flag("--oracle", c.oracle, "Also count by enumeration and compare");

  auto* ta = app.add_subcommand("table", "Tables of closed-form counts");
  ta->add_option("--name", c.name, "ef, ef-sums or ballot");
  ta->add_option("--max-n", c.max_n);
  ta->add_option("--format", c.format, "csv or text");

  auto* qt = app.add_subcommand("qtable", "q-Catalan and q-Narayana polynomials");
  qt->add_option("--stat", c.stat, "catalan or narayana");
  qt->add_option("--max-n", c.max_n);
  qt->add_option("--format", c.format, "csv or text");

  auto* bi = app.add_subcommand("biject", "Apply a bijection");
  bi->add_option("--map", c.map, "alpha, alpha-inv, beta, beta-inv, phi, phi-inv, decompose, compose, rotate")
      ->required();
  bi->add_option("--input", c.input, "Tableau JSON, path word or permutation")->required();

  auto* se = app.add_subcommand("series", "Coefficients of the path generating functions");
  se->add_option("--which", c.which, "E, E1, E2 or E12");
  se->add_option("--order", c.order);
  se->add_option("--spec", c.spec, "all-ones or full");
  se->add_option("--format", c.format, "csv or text");

  auto* ex = app.add_subcommand("expect", "Expected step counts over motzET(n)");
  ex->add_option("--step", c.step, "U, D, u or d");
  ex->add_option("--n", c.range, "n or lo..hi");

  auto* ve = app.add_subcommand("verify", "Run the verification suites");
  ve->add_option("--suite", c.verify.suite, "enumerate, biject, closedform, stats, series, posets or all");
  ve->add_option("--budget", c.verify.budget, "desk or quick");
  ve->add_option("--order", c.verify.order);
  ve->add_option("--max-elements", c.verify.max_elements);
  ve->add_option("--max-k", c.verify.max_k);
  ve->add_option("--parallel", c.verify.threads, "Worker threads (default: SVTAB_THREADS or core count)");
  ve->add_option("--report", c.report, "json or text");
  ve->add_option("--output", c.output, "Write the report to a file");
  ve->add_flag("--no-timing", c.no_timing, "Zero the timing fields");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*en) return cmd_enumerate(c, out);
    if (*co) return cmd_count(c, out);
    if (*ta) return cmd_table(c, out);
    if (*qt) return cmd_qtable(c, out);
    if (*bi) return cmd_biject(c, out);
    if (*se) return cmd_series(c, out);
    if (*ex) return cmd_expect(c, out);
    if (*ve) return cmd_verify(c, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace svtab::cli
