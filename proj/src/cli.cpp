#include "qlogic/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>

#include "qlogic/errors.hpp"
#include "qlogic/generators.hpp"
#include "qlogic/oracle.hpp"
#include "qlogic/suite.hpp"

namespace qlogic::cli {

namespace {

using Grid = std::vector<std::vector<std::string>>;

void print_grid(std::ostream& out, const Grid& grid, std::string_view indent = "  ") {
  std::vector<std::size_t> width;
  for (const auto& row : grid) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
  }
  for (const auto& row : grid) {
    std::string line(indent);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) line += "  ";
      line += std::string(width[j] - row[j].size(), ' ') + row[j];
    }
    out << line << "\n";
  }
}

Grid joint_grid(std::string_view title, const JointDistribution& d) {
  Grid grid{{std::string(title)}};
  for (const auto& s : d.column_values) grid[0].push_back(to_string(s));
  for (std::size_t i = 0; i < d.row_values.size(); ++i) {
    grid.push_back({to_string(d.row_values[i])});
    for (const auto& v : d.probability[i]) grid.back().push_back(to_string(v));
  }
  return grid;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }
std::string bool_key(bool b) { return b ? "true" : "false"; }

std::string witness_names(const QuantumLogic& L, const std::vector<ElementId>& witness) {
  std::string s;
  for (ElementId e : witness) s += (s.empty() ? "" : ", ") + L.name(e);
  return s;
}

std::string set_names(const QuantumLogic& L, ElementSet set) {
  return "{" + witness_names(L, members(set)) + "}";
}

std::string describe(const Violation& v) {
  if (v.message.starts_with("(")) return v.message;
  return "(" + std::string(to_string(v.rule)) + ") " + v.message;
}

void report_violation(std::ostream& out, const QuantumLogic& L, const Violation& v) {
  out << "FAIL " << describe(v) << "\n";
  if (!v.witness.empty()) out << "    witness: " << witness_names(L, v.witness) << "\n";
}

// Runs `resolve` on one section and prints its verdict line.
template <class F>
bool verdict(std::ostream& out, const QuantumLogic& L, const std::string& header, F&& resolve) {
  out << header << " ";
  try {
    const std::string detail = resolve();
    out << "ok" << (detail.empty() ? "" : ": " + detail) << "\n";
    return true;
  } catch (const ValidationError& e) {
    report_violation(out, L, e.violation());
  } catch (const Error& e) {
    out << "FAIL " << e.what() << "\n";
  }
  return false;
}

class Differ {
 public:
  explicit Differ(std::ostream& out) : out_(out) {}

  void exact(const std::string& name, const Rational& got, const Rational& expected) {
    record(name, got == expected, to_string(got), to_string(expected));
  }
  void exact(const std::string& name, const Rational& got, std::string_view expected) {
    exact(name, got, parse_rational(expected));
  }
  void approx(const std::string& name, std::optional<double> got, double expected, double tolerance) {
    const bool ok = got && std::abs(*got - expected) <= tolerance;
    record(name, ok, got ? format_float(*got) : "undefined", format_float(expected));
  }
  void flag(const std::string& name, bool got, bool expected) {
    record(name, got == expected, bool_key(got), bool_key(expected));
  }

  int mismatches() const { return mismatches_; }

 private:
  void record(const std::string& name, bool ok, const std::string& got, const std::string& expected) {
    if (ok) {
      out_ << "  ok        " << name << " = " << got << "\n";
    } else {
      ++mismatches_;
      out_ << "  MISMATCH  " << name << ": expected " << expected << ", got " << got << "\n";
    }
  }

  std::ostream& out_;
  int mismatches_ = 0;
};

struct Loaded {
  Logic logic;
  ModelFile model;
};

Loaded load_builtin(std::string_view id) {
  Loaded l{nullptr, parse_model_text(*builtin_fixture(id))};
  l.logic = resolve_logic(l.model);
  return l;
}

SMap smap_named(const Loaded& l, const std::string& name) {
  return resolve_smap(l.logic, *l.model.find_smap(name));
}

DiscreteObservable observable_named(const Loaded& l, const std::string& name) {
  return resolve_observable(l.logic, *l.model.find_observable(name));
}

void diff_joint(Differ& d, const std::string& name, const JointDistribution& j,
                const std::vector<std::vector<std::string_view>>& expected) {
  for (std::size_t r = 0; r < j.row_values.size(); ++r)
    for (std::size_t c = 0; c < j.column_values.size(); ++c)
      d.exact(name + "(" + to_string(j.row_values[r]) + ", " + to_string(j.column_values[c]) + ")",
              j.probability[r][c], expected[r][c]);
}

// Both examples use x: -1 -> a, 1 -> a' and y: 0 -> b, 5 -> b'.
const double kR = -0.4 / std::sqrt(0.96 * 5.25);

int repro_21(std::ostream& out) {
  const Loaded l = load_builtin("2.1");
  const QuantumLogic& L = *l.logic;
  Differ d(out);
  const ConditionalState f = resolve_cond(l.logic, *l.model.find_cond("f"));
  const SMap p = smap_from_conditional(f);

  out << "s-map p_f computed from the conditional state f\n";
  const char* names[] = {"a", "a'", "b", "b'"};
  const std::string_view table[4][4] = {{"0.4", "0", "0.12", "0.28"},
                                        {"0", "0.6", "0.18", "0.42"},
                                        {"0.08", "0.22", "0.3", "0"},
                                        {"0.32", "0.38", "0", "0.7"}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      d.exact(std::string("p(") + names[i] + ", " + names[j] + ")", p(L.at(names[i]), L.at(names[j])),
              table[i][j]);
  d.flag("p_f equals the fixture table", p.table() == smap_named(l, "p").table(), true);
  const ConditionalState back = conditional_from_smap(p);
  d.flag("f_{p_f} equals f", back.system() == f.system() && back.table() == f.table(), true);

  out << "statistics of x and y\n";
  const auto x = observable_named(l, "x"), y = observable_named(l, "y");
  const StatsReport s = compute_stats(p, x, y);
  diff_joint(d, "p_xy", s.joint_xy, {{"0.12", "0.28"}, {"0.18", "0.42"}});
  diff_joint(d, "p_yx", s.joint_yx, {{"0.08", "0.22"}, {"0.32", "0.38"}});
  d.exact("nu(x)", s.mean_x, "0.2");
  d.exact("nu(y)", s.mean_y, "3.5");
  d.exact("p(x,y)", s.moment_xy, "0.7");
  d.exact("p(y,x)", s.moment_yx, "0.3");
  d.exact("c(x,x)", s.covariance.entries[0][0], "0.96");
  d.exact("c(x,y)", s.covariance.entries[0][1], "0");
  d.exact("c(y,x)", s.covariance.entries[1][0], "-0.4");
  d.exact("c(y,y)", s.covariance.entries[1][1], "5.25");
  d.approx("r(x,y)", s.r_xy, 0.0, 0.0);
  d.approx("r(y,x)", s.r_yx, kR, 1e-9);
  d.approx("r(y,x) against the rounded value -0.178", s.r_yx, -0.178, 5e-4);
  d.flag("covariance matrix symmetric", s.covariance.symmetric(), false);
  d.flag("x, y compatible", s.compatible, false);
  d.flag("a independent of b", is_independent_pair(p, L.at("a"), L.at("b")), true);
  d.flag("b independent of a", is_independent_pair(p, L.at("b"), L.at("a")), false);
  return d.mismatches();
}

int repro_22_printed(std::ostream& out) {
  const Loaded l = load_builtin("2.2-printed");
  const QuantumLogic& L = *l.logic;
  Differ d(out);
  out << "this table is expected to fail validation\n";
  std::optional<Violation> violation;
  try {
    smap_named(l, "p");
  } catch (const ValidationError& e) {
    violation = e.violation();
  }
  d.flag("validation fails", violation.has_value(), true);
  if (violation) {
    out << "  reported: " << describe(*violation) << "\n";
    d.flag("rule is s3", violation->rule == Rule::S3, true);
    auto mentions = [&](const char* name) {
      return std::ranges::count(violation->witness, L.at(name)) > 0;
    };
    d.flag("witness names a, b and b'", mentions("a") && mentions("b") && mentions("b'"), true);
  }
  Rational row = 0, diagonal = 0;
  for (const auto& e : l.model.find_smap("p")->entries) {
    if (e.first != "a") continue;
    if (e.second == "b" || e.second == "b'") row += e.value;
    if (e.second == "a") diagonal = e.value;
  }
  d.exact("p(a,b) + p(a,b')", row, "0.46");
  d.exact("p(a,a)", diagonal, "0.4");
  return d.mismatches();
}

int repro_22_corrected(std::ostream& out) {
  const Loaded l = load_builtin("2.2-corrected");
  const QuantumLogic& L = *l.logic;
  Differ d(out);
  const SMap p = smap_named(l, "p");
  bool symmetric = true;
  for (ElementId a : L.elements())
    for (ElementId b : L.elements()) symmetric = symmetric && p(a, b) == p(b, a);
  d.flag("p(s,t) = p(t,s) for all s, t", symmetric, true);

  out << "statistics of x and y\n";
  const StatsReport s = compute_stats(p, observable_named(l, "x"), observable_named(l, "y"));
  diff_joint(d, "p_xy", s.joint_xy, {{"0.08", "0.32"}, {"0.22", "0.38"}});
  diff_joint(d, "p_yx", s.joint_yx, {{"0.08", "0.22"}, {"0.32", "0.38"}});
  d.exact("nu(x)", s.mean_x, "0.2");
  d.exact("nu(y)", s.mean_y, "3.5");
  d.exact("p(x,y)", s.moment_xy, "0.3");
  d.exact("p(y,x)", s.moment_yx, "0.3");
  d.exact("c(x,x)", s.covariance.entries[0][0], "0.96");
  d.exact("c(x,y)", s.covariance.entries[0][1], "-0.4");
  d.exact("c(y,x)", s.covariance.entries[1][0], "-0.4");
  d.exact("c(y,y)", s.covariance.entries[1][1], "5.25");
  d.approx("r(x,y)", s.r_xy, kR, 1e-9);
  d.approx("r(y,x)", s.r_yx, kR, 1e-9);
  d.flag("covariance matrix symmetric", s.covariance.symmetric(), true);
  d.flag("x, y compatible", s.compatible, false);
  return d.mismatches();
}

std::string family_label(const std::string& family, const std::string& params) {
  return family + "(" + params + ")";
}

int parse_int(const std::string& text) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument("expected an integer, got '" + text + "'");
  return value;
}

}  // namespace

std::string format_float(double value) {
  if (value == 0) value = 0;  // no "-0.000000000"
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, 9);
  return ec == std::errc() ? std::string(buf, ptr) : "nan";
}

Logic logic_for_family(const std::string& family, const std::string& params) {
  if (family == "boolean") return gen_boolean(parse_int(params));
  if (family == "mo") return gen_mo(parse_int(params));
  if (family == "hsum") {
    std::vector<int> atoms;
    std::istringstream in(params);
    for (std::string part; std::getline(in, part, ',');) atoms.push_back(parse_int(part));
    return gen_horizontal_sum(atoms);
  }
  throw std::invalid_argument("unknown family '" + family + "' (expected boolean, mo or hsum)");
}

StatsReport compute_stats(const SMap& p, const DiscreteObservable& x, const DiscreteObservable& y) {
  const QuantumLogic& L = *p.logic();
  StatsReport r{joint_distribution(p, x, y),
                joint_distribution(p, y, x),
                mean(p, x),
                mean(p, y),
                first_joint_moment(p, x, y),
                first_joint_moment(p, y, x),
                covariance_matrix(p, x, y),
                std::nullopt,
                std::nullopt,
                observables_compatible(x, y),
                {}};
  if (variance(p, x) > 0 && variance(p, y) > 0) {
    r.r_xy = correlation(p, x, y);
    r.r_yx = correlation(p, y, x);
  }
  auto proper = [&](ElementSet range) {
    std::vector<ElementId> out;
    for (ElementId e : members(range))
      if (e != L.zero() && e != L.one()) out.push_back(e);
    return out;
  };
  auto add = [&](ElementId event, ElementId condition) {
    for (const auto& v : r.independence)
      if (v.event == event && v.condition == condition) return;
    r.independence.push_back({event, condition, is_independent_pair(p, event, condition)});
  };
  for (ElementId e : proper(x.range()))
    for (ElementId g : proper(y.range())) {
      add(e, g);
      add(g, e);
    }
  return r;
}

int cmd_validate(const ModelFile& model, std::ostream& out, std::ostream& err) {
  Logic logic;
  try {
    logic = resolve_logic(model);
  } catch (const LogicError& e) {
    out << "[logic] FAIL " << e.what() << "\n";
    err << "validation failed\n";
    return kFailed;
  }
  const QuantumLogic& L = *logic;
  out << "[logic] ok: " << L.size() << " elements\n";
  bool ok = true;
  for (const auto& s : model.states)
    ok &= verdict(out, L, "[state " + s.name + "]", [&] {
      resolve_state(logic, s);
      return std::string();
    });
  for (const auto& s : model.conds)
    ok &= verdict(out, L, "[cond " + s.name + "]", [&] {
      const ConditionalState f = resolve_cond(logic, s);
      return "conditional system " + set_names(L, f.system().members());
    });
  for (const auto& s : model.smaps)
    ok &= verdict(out, L, "[smap " + s.name + "]", [&] {
      resolve_smap(logic, s);
      return std::string();
    });
  for (const auto& s : model.observables)
    ok &= verdict(out, L, "[observable " + s.name + "]", [&] {
      const DiscreteObservable x = resolve_observable(logic, s);
      return std::to_string(x.outcomes().size()) + " outcomes";
    });
  if (!ok) err << "validation failed\n";
  return ok ? kOk : kFailed;
}

int cmd_derive(const ModelFile& model, std::string_view from, const std::string& name, std::ostream& out,
               std::ostream& err) {
  const Logic logic = resolve_logic(model);
  if (from == "cond") {
    const auto* section = model.find_cond(name);
    if (!section) {
      err << "no [cond " << name << "] section\n";
      return kUsage;
    }
    out << section_text(smap_section("p_" + name, smap_from_conditional(resolve_cond(logic, *section))));
    return kOk;
  }
  const auto* section = model.find_smap(name);
  if (!section) {
    err << "no [smap " << name << "] section\n";
    return kUsage;
  }
  out << section_text(cond_section("f_" + name, conditional_from_smap(resolve_smap(logic, *section))));
  return kOk;
}

int cmd_stats(const ModelFile& model, const std::string& smap, const std::string& xname,
              const std::string& yname, std::ostream& out, std::ostream& err) {
  const Logic logic = resolve_logic(model);
  const QuantumLogic& L = *logic;
  const auto* ps = model.find_smap(smap);
  const auto* xs = model.find_observable(xname);
  const auto* ys = model.find_observable(yname);
  if (!ps || !xs || !ys) {
    err << "missing section: " << (!ps ? "[smap " + smap + "]" : !xs ? "[observable " + xname + "]"
                                                                    : "[observable " + yname + "]")
        << "\n";
    return kUsage;
  }
  const SMap p = resolve_smap(logic, *ps);
  const DiscreteObservable x = resolve_observable(logic, *xs), y = resolve_observable(logic, *ys);
  const StatsReport s = compute_stats(p, x, y);
  const auto& c = s.covariance.entries;
  const std::string xy = xname + "," + yname, yx = yname + "," + xname;

  out << "joint distributions\n";
  print_grid(out, joint_grid("p_{" + xy + "}", s.joint_xy));
  out << "\n";
  print_grid(out, joint_grid("p_{" + yx + "}", s.joint_yx));
  out << "\nmoments\n";
  Grid moments{{"nu(" + xname + ")", to_string(s.mean_x), to_decimal(s.mean_x)},
               {"nu(" + yname + ")", to_string(s.mean_y), to_decimal(s.mean_y)},
               {"p(" + xy + ")", to_string(s.moment_xy), to_decimal(s.moment_xy)},
               {"p(" + yx + ")", to_string(s.moment_yx), to_decimal(s.moment_yx)},
               {"c(" + xy + ")", to_string(c[0][1]), to_decimal(c[0][1])},
               {"c(" + yx + ")", to_string(c[1][0]), to_decimal(c[1][0])},
               {"var(" + xname + ")", to_string(c[0][0]), to_decimal(c[0][0])},
               {"var(" + yname + ")", to_string(c[1][1]), to_decimal(c[1][1])}};
  if (s.r_xy) {
    moments.push_back({"r(" + xy + ")", "", format_float(*s.r_xy)});
    moments.push_back({"r(" + yx + ")", "", format_float(*s.r_yx)});
  } else {
    err << "warning: a variance is zero, correlation omitted\n";
  }
  print_grid(out, moments);
  out << "\ncovariance matrix\n";
  print_grid(out, {{"", xname, yname},
                   {xname, to_string(c[0][0]), to_string(c[0][1])},
                   {yname, to_string(c[1][0]), to_string(c[1][1])}});
  out << "  symmetric: " << yes_no(s.covariance.symmetric()) << "\n";
  out << "  compatible: " << yes_no(s.compatible) << "\n";
  out << "\nindependence, p(s,t) = nu(s) nu(t)\n";
  Grid ind;
  for (const auto& v : s.independence)
    ind.push_back({L.name(v.event), "given", L.name(v.condition), yes_no(v.independent)});
  print_grid(out, ind);

  out << "\n[machine]\n";
  auto table = [&](const std::string& key, const JointDistribution& j) {
    for (std::size_t r = 0; r < j.row_values.size(); ++r)
      for (std::size_t k = 0; k < j.column_values.size(); ++k)
        out << key << "[" << to_string(j.row_values[r]) << "," << to_string(j.column_values[k])
            << "]=" << to_string(j.probability[r][k]) << "\n";
  };
  table("joint_xy", s.joint_xy);
  table("joint_yx", s.joint_yx);
  out << "nu_x=" << to_string(s.mean_x) << "\n"
      << "nu_y=" << to_string(s.mean_y) << "\n"
      << "p_xy=" << to_string(s.moment_xy) << "\n"
      << "p_yx=" << to_string(s.moment_yx) << "\n"
      << "c_xx=" << to_string(c[0][0]) << "\n"
      << "c_xy=" << to_string(c[0][1]) << "\n"
      << "c_yx=" << to_string(c[1][0]) << "\n"
      << "c_yy=" << to_string(c[1][1]) << "\n";
  if (s.r_xy) out << "r_xy=" << format_float(*s.r_xy) << "\n" << "r_yx=" << format_float(*s.r_yx) << "\n";
  out << "cov_symmetric=" << bool_key(s.covariance.symmetric()) << "\n"
      << "compatible=" << bool_key(s.compatible) << "\n";
  for (const auto& v : s.independence)
    out << "independent[" << L.name(v.event) << "|" << L.name(v.condition) << "]=" << bool_key(v.independent)
        << "\n";
  return kOk;
}

int cmd_gen(const std::string& family, const std::string& params, std::uint64_t seed, std::ostream& out,
            std::ostream&) {
  const Logic logic = logic_for_family(family, params);
  const SMap p = random_smap(logic, seed);
  ModelFile model;
  model.logic = logic_section(*logic);
  model.conds.push_back(cond_section("f", conditional_from_smap(p)));
  model.smaps.push_back(smap_section("p", p));
  const auto blocks = horizontal_blocks(*logic);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    std::vector<std::pair<Rational, ElementId>> assignment;
    for (std::size_t k = 0; k < blocks[i].size(); ++k)
      assignment.emplace_back(Rational(static_cast<long>(k + 1)), blocks[i][k]);
    model.observables.push_back(
        observable_section("x" + std::to_string(i + 1), build_observable(logic, std::move(assignment))));
  }
  out << "# " << family_label(family, params) << ", seed " << seed << "\n\n" << to_text(model);
  return kOk;
}

int cmd_check(const std::string& family, const std::string& params, std::size_t trials, std::uint64_t seed,
              std::ostream& out, std::ostream& err) {
  const Logic logic = logic_for_family(family, params);
  const QuantumLogic& L = *logic;
  out << family_label(family, params) << ": " << L.size() << " elements, " << trials << " trials, seed "
      << seed << "\n";
  bool ok = true;

  const SuiteReport report = roundtrip_suite(logic, trials, seed);
  out << "roundtrip suite: " << report.passed << "/" << report.trials << " passed, " << report.checks
      << " checks\n";
  if (report.first_counterexample) out << "  first counterexample: " << *report.first_counterexample << "\n";
  out << "symmetric p(a,b) = p(b,a) in all trials: " << yes_no(report.symmetric_in_all_trials) << "\n";
  ok &= report.ok();

  if (L.size() <= kBruteForceLimit) {
    const auto bad = compatibility_disagreement(L);
    out << "compatibility oracle: ";
    if (bad)
      out << "disagrees on (" << L.name(bad->first) << ", " << L.name(bad->second) << ")\n";
    else
      out << "agrees on all " << L.size() * L.size() << " pairs\n";
    ok &= !bad;
  } else {
    out << "compatibility oracle: skipped above " << kBruteForceLimit << " elements\n";
  }
  if (L.size() <= 16) {
    const auto bad = distributivity_counterexample(L);
    out << "distributivity over compatible families: " << (bad ? *bad : "ok") << "\n";
    ok &= !bad;
  }
  const auto de_morgan = de_morgan_counterexample(L);
  out << "de Morgan laws: " << (de_morgan ? *de_morgan : "ok") << "\n";
  ok &= !de_morgan;
  if (!ok) err << "check failed\n";
  return ok ? kOk : kFailed;
}

int cmd_repro(std::string_view id, std::ostream& out, std::ostream& err) {
  int mismatches;
  out << "repro " << id << "\n";
  if (id == "2.1") mismatches = repro_21(out);
  else if (id == "2.2-printed") mismatches = repro_22_printed(out);
  else if (id == "2.2-corrected") mismatches = repro_22_corrected(out);
  else {
    err << "unknown example '" << id << "' (expected 2.1, 2.2-printed or 2.2-corrected)\n";
    return kUsage;
  }
  if (mismatches > 0) {
    err << mismatches << " mismatch" << (mismatches == 1 ? "" : "es") << "\n";
    return kFailed;
  }
  out << "all values match\n";
  return kOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on finite quantum logics", "qlogic"};
  app.require_subcommand(1);

  std::string file, from, name, smap, x, y, family, params, example;
  std::uint64_t seed = 1;
  std::size_t trials = 100;

  auto* validate = app.add_subcommand("validate", "Validate every section of a model file");
  validate->add_option("file", file)->required();

  auto* derive = app.add_subcommand("derive", "Convert a conditional state to an s-map or back");
  derive->add_option("file", file)->required();
  derive->add_option("--from", from)->required()->check(CLI::IsMember({"cond", "smap"}));
  derive->add_option("--name", name)->required();

  auto* stats = app.add_subcommand("stats", "Joint distributions and moments of two observables");
  stats->add_option("file", file)->required();
  stats->add_option("--smap", smap)->required();
  stats->add_option("--x", x)->required();
  stats->add_option("--y", y)->required();

  auto* gen = app.add_subcommand("gen", "Print a random model (boolean n, mo n or hsum k1,k2,...)");
  gen->add_option("family", family)->required();
  gen->add_option("n", params)->required();
  gen->add_option("--seed", seed);

  auto* check = app.add_subcommand("check", "Run the property suite and oracles on a family");
  check->add_option("family", family)->required();
  check->add_option("n", params)->required();
  check->add_option("--trials", trials);
  check->add_option("--seed", seed);

  auto* repro = app.add_subcommand("repro", "Reproduce a builtin worked example");
  repro->add_option("id", example)->required()->check(CLI::IsMember({"2.1", "2.2-printed", "2.2-corrected"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(parse_model(file), out, err);
    if (derive->parsed()) return cmd_derive(parse_model(file), from, name, out, err);
    if (stats->parsed()) return cmd_stats(parse_model(file), smap, x, y, out, err);
    if (gen->parsed()) return cmd_gen(family, params, seed, out, err);
    if (check->parsed()) return cmd_check(family, params, trials, seed, out, err);
    return cmd_repro(example, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::SizeOutOfRange ? kUsage : kFailed;
  } catch (const ValidationError& e) {
    err << "invalid: " << describe(e.violation()) << "\n";
    return kFailed;
  } catch (const LogicError& e) {
    err << "invalid logic: " << e.what() << "\n";
    return kFailed;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kFailed;
  }
}

}  // namespace qlogic::cli
