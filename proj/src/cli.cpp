#include "pslice/cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pslice/bertini.hpp"
#include "pslice/curves.hpp"
#include "pslice/factortest.hpp"
#include "pslice/oracle.hpp"
#include "pslice/parallel.hpp"

namespace pslice {

namespace {

using Json = nlohmann::ordered_json;

// Ordered key/value document, printed as `key = value` lines or as JSON.
class Report {
 public:
  template <class T>
  void set(const std::string& key, const T& value) {
    for (auto& [k, v] : entries_) {
      if (k == key) {
        v = Json(value);
        return;
      }
    }
    entries_.emplace_back(key, Json(value));
  }

  std::string text() const {
    std::string out;
    for (const auto& [k, v] : entries_) {
      out += k + " = " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
    }
    return out;
  }

  std::string json() const {
    Json doc = Json::object();
    for (const auto& [k, v] : entries_) doc[k] = v;
    return doc.dump(2) + "\n";
  }

 private:
  std::vector<std::pair<std::string, Json>> entries_;
};

// Signals an oracle disagreement; never expected.
struct Mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string field = "2";
  std::string poly;
  std::string poly_file;
  int D = 0;
  int d = 0;
  int n = 0;
  std::uint64_t budget = std::uint64_t{1} << 24;
  std::uint64_t max_tuples = std::uint64_t{1} << 32;
  int threads = 0;
  bool oracle = false;
  std::uint64_t seed = 0;
  std::string output;
  bool json = false;
  std::string alpha;
  int alpha_index = 0;
  int root = 0;
  std::string v, w, z;
  bool no_shift = false;
  bool points = false;
  int dprime = 0;
  int genus = -1;
  std::int64_t q = 0;
  bool non_strict = false;
  std::string log;
};

std::string read_poly(const Options& o) {
  if (!o.poly_file.empty()) {
    std::ifstream in(o.poly_file);
    if (!in) throw Error(ErrorKind::ParseError, "cannot read polynomial file " + o.poly_file);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string s = ss.str();
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    return s;
  }
  if (o.poly.empty()) throw Error(ErrorKind::ParseError, "no polynomial given (use --poly or --poly-file)");
  return o.poly;
}

std::vector<std::int64_t> parse_int_list(const std::string& text, const char* what) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || item.find_first_not_of(" ", used) != std::string::npos) {
      throw Error(ErrorKind::ParseError, std::string("bad integer '") + item + "' in " + what);
    }
    out.push_back(v);
  }
  return out;
}

std::vector<FieldElem> parse_vector(const std::string& text, const FieldCtx& field, std::size_t len, const char* what) {
  std::vector<FieldElem> out;
  if (!text.empty()) {
    for (auto v : parse_int_list(text, what)) out.push_back(field.from_int(v));
  }
  if (out.size() != len) {
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + " has " + std::to_string(out.size()) +
                                                  " entries, expected " + std::to_string(len));
  }
  return out;
}

// --alpha c is an element of the prime field; --alpha a0,a1,...,ae names the
// roots of a0 + a1 T + ... + ae T^e, of which --alpha-index picks one in
// index order inside F_{q^e}. Without --alpha, --root picks a simple root of
// `u` in the order of simple_roots.
FieldElem resolve_alpha(const Options& o, const FieldCtx& base, const UniPoly& u, Report& rep) {
  if (!o.alpha.empty()) {
    const auto coeffs = parse_int_list(o.alpha, "--alpha");
    if (coeffs.size() == 1) {
      rep.set("alpha0.source", "integer");
      return base.from_int(coeffs[0]);
    }
    std::vector<FieldElem> c;
    for (auto v : coeffs) c.push_back(base.from_int(v));
    const UniPoly mp(base, c);
    if (mp.degree() < 1) throw Error(ErrorKind::DomainError, "--alpha polynomial " + mp.to_string('T') + " is constant");
    const FieldCtx& ext = extension_of(base, mp.degree());
    const UniPoly me = mp.map(embedding(base, ext));
    std::vector<FieldElem> roots;
    for (std::uint32_t i = 0; i < ext.q(); ++i) {
      if (me(ext.element(i)).is_zero()) roots.push_back(ext.element(i));
    }
    if (o.alpha_index < 0 || o.alpha_index >= static_cast<int>(roots.size())) {
      throw Error(ErrorKind::DomainError, "--alpha-index " + std::to_string(o.alpha_index) + " but " +
                                              mp.to_string('T') + " has " + std::to_string(roots.size()) +
                                              " roots in F_" + ext.spec());
    }
    rep.set("alpha0.source", "root " + std::to_string(o.alpha_index) + " of " + mp.to_string('T'));
    return roots[o.alpha_index];
  }
  const auto roots = simple_roots(u);
  if (roots.empty()) throw Error(ErrorKind::Squarefull, u.to_string() + " has no simple root");
  if (o.root < 0 || o.root >= static_cast<int>(roots.size())) {
    throw Error(ErrorKind::DomainError, "--root " + std::to_string(o.root) + " but only " +
                                            std::to_string(roots.size()) + " simple root orbits exist");
  }
  rep.set("alpha0.source", "simple root " + std::to_string(o.root) + " of " + u.to_string());
  return roots[o.root].value;
}

std::string join(const std::vector<FieldElem>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ",") + x.to_string();
  return "(" + out + ")";
}

void report_alpha(Report& rep, const FieldElem& a) {
  rep.set("alpha0", a.to_string());
  rep.set("alpha0.field", a.ctx().spec());
  rep.set("alpha0.field_modulus", a.ctx().modulus_string());
}

void report_field(Report& rep, const FieldCtx& f) {
  rep.set("field", f.spec());
  rep.set("field.q", f.q());
  rep.set("field.modulus", f.modulus_string());
}

OracleOptions oracle_options(const Options& o) {
  OracleOptions opts;
  opts.budget = o.budget;
  opts.threads = o.threads;
  return opts;
}

int cmd_irr(const Options& o, Report& rep) {
  const FieldCtx& field = parse_field_spec(o.field);
  report_field(rep, field);
  const BiPoly f = parse_bipoly(read_poly(o), field);
  rep.set("poly.parsed", f.to_string());
  rep.set("poly.degree", f.total_degree());
  Certificate cert{CertKind::Reducible, field.zero(), std::nullopt, std::nullopt, std::nullopt};
  if (o.no_shift) {
    cert = absolute_irreducibility(f);
    rep.set("y_shift", "0");
  } else {
    auto sc = absolute_irreducibility_shifted(f);
    cert = sc.cert;
    rep.set("y_shift", sc.shift.to_string());
  }
  report_alpha(rep, cert.alpha0);
  rep.set("verdict", to_string(cert.kind));
  if (cert.m) rep.set("solvable_degree", *cert.m);
  if (o.oracle) {
    const bool abs = oracle_absolutely_irreducible(f, oracle_options(o));
    rep.set("oracle.abs_irreducible", abs);
    if (abs != (cert.kind == CertKind::AbsolutelyIrreducible)) throw Mismatch("irreducibility verdicts differ");
  }
  return kExitOk;
}

int cmd_linfac(const Options& o, Report& rep) {
  const FieldCtx& field = parse_field_spec(o.field);
  report_field(rep, field);
  const BiPoly f = parse_bipoly(read_poly(o), field);
  rep.set("poly.parsed", f.to_string());
  rep.set("poly.degree", f.total_degree());
  const FieldElem alpha = resolve_alpha(o, field, f.restrict_y0(), rep);
  report_alpha(rep, alpha);
  const Certificate cert = has_linear_factor_through(f, alpha);
  rep.set("verdict", to_string(cert.kind));
  if (cert.witness) rep.set("witness", cert.witness->to_string());
  if (o.oracle) {
    const bool lin = linear_factor_through(f, alpha, alpha.ctx().zero(), oracle_options(o));
    rep.set("oracle.linear_factor_through", lin);
    if (lin != (cert.kind == CertKind::LinearFactorThrough)) throw Mismatch("linear factor verdicts differ");
  }
  return kExitOk;
}

int cmd_smallfac(const Options& o, Report& rep) {
  const FieldCtx& field = parse_field_spec(o.field);
  report_field(rep, field);
  const BiPoly f = parse_bipoly(read_poly(o), field);
  rep.set("poly.parsed", f.to_string());
  rep.set("poly.degree", f.total_degree());
  const int D = o.D > 0 ? o.D : 1;
  rep.set("D", D);
  const FieldElem alpha = resolve_alpha(o, field, f.restrict_y0(), rep);
  report_alpha(rep, alpha);
  const Certificate cert = no_small_factor_certificate(f, alpha, D);
  rep.set("verdict", to_string(cert.kind));
  if (cert.m) rep.set("solvable_degree", *cert.m);
  if (o.oracle) {
    const OracleOptions opts = oracle_options(o);
    const auto smallest = smallest_factor_degree(f, D, opts);
    const bool through = factor_through(f, D, alpha, alpha.ctx().zero(), opts);
    rep.set("oracle.smallest_factor_degree", smallest ? std::to_string(*smallest) : std::string("none"));
    rep.set("oracle.factor_through_point", through);
    if (cert.kind == CertKind::NoSmallFactor && (through || (smallest && *smallest < D))) {
      throw Mismatch("certificate excludes a factor the oracle found");
    }
    if (cert.kind == CertKind::SmallFactorPossible && !smallest) {
      throw Mismatch("solvable system but the oracle finds no factor of degree <= D");
    }
  }
  return kExitOk;
}

MultiPoly read_multi(const Options& o, const FieldCtx& field, int nvars) {
  ParsedPoly p = parse_polynomial(read_poly(o), field, nvars);
  if (p.poly.nvars() < 2) {
    throw Error(ErrorKind::ArityMismatch, "need a polynomial in at least 2 variables (x0..x9), got " +
                                              std::to_string(p.poly.nvars()));
  }
  return std::move(p.poly);
}

int cmd_slice(const Options& o, Report& rep) {
  const FieldCtx& field = parse_field_spec(o.field);
  report_field(rep, field);
  const MultiPoly f = read_multi(o, field, o.n > 0 ? o.n : -1);
  const int n = f.nvars();
  rep.set("poly.parsed", f.to_string());
  rep.set("poly.nvars", n);
  SliceParams p{parse_vector(o.v, field, n, "--v"), parse_vector(o.w, field, n - 1, "--w"),
                parse_vector(o.z, field, n - 1, "--z")};
  rep.set("params", p.to_string());
  const BiPoly s = slice(f, p);
  rep.set("slice", s.to_string());
  rep.set("slice.degree", s.is_zero() ? std::string("-inf") : std::to_string(s.total_degree()));
  return kExitOk;
}

struct LogSink {
  std::ofstream file;
  std::function<void(const std::string&)> fn;
};

void attach_runtime(CensusOptions& copts, const Options& o, std::ostream& err, LogSink& sink) {
  copts.tuple_budget = o.max_tuples;
  copts.oracle.budget = o.budget;
  copts.threads = o.threads;
  copts.with_oracle = o.oracle;
  copts.progress = [&err](std::uint64_t done, std::uint64_t total) {
    err << "progress " << done << "/" << total << "\n";
  };
  if (!o.log.empty()) {
    sink.file.open(o.log);
    if (!sink.file) throw Error(ErrorKind::ParseError, "cannot write log file " + o.log);
    copts.log = [&sink](const std::string& line) { sink.file << line << "\n"; };
  }
}

void report_census(Report& rep, const CensusReport& r) {
  rep.set("census.nvars", r.n);
  rep.set("census.degree", r.d);
  rep.set("census.D", r.D);
  rep.set("census.total", r.total);
  rep.set("census.bad_algorithm", r.bad_algorithm);
  if (r.bad_oracle) rep.set("census.bad_oracle", *r.bad_oracle);
  if (r.bad_oracle) rep.set("census.mismatches", r.mismatches);
  rep.set("census.flagged", r.flagged);
  rep.set("census.degenerate", r.degenerate);
  rep.set("census.bound_coefficient", r.bound_coefficient);
  rep.set("census.bound_value", r.bound_value);
  rep.set("census.bound_vacuous", r.bound_vacuous);
  rep.set("census.bound_respected", r.bound_respected);
}

int finish_census(Report& rep, const CensusReport& r) {
  report_census(rep, r);
  if (r.mismatches > 0) throw Mismatch("algorithm and oracle disagree, first at " + r.first_mismatch.value_or("?"));
  if (!r.bound_respected) throw Mismatch("bad count exceeds the bound");
  return kExitOk;
}

int cmd_census(const Options& o, Report& rep, std::ostream& err) {
  const FieldCtx& field = parse_field_spec(o.field);
  report_field(rep, field);
  const MultiPoly f = read_multi(o, field, o.n > 0 ? o.n : -1);
  rep.set("poly.parsed", f.to_string());
  const int d = f.total_degree();
  const int D = o.D > 0 ? o.D : d - 1;
  CensusOptions copts;
  LogSink sink;
  attach_runtime(copts, o, err, sink);
  return finish_census(rep, census_full(f, D, copts));
}

int cmd_census_z(const Options& o, Report& rep, std::ostream& err) {
  const FieldCtx& field = parse_field_spec(o.field);
  report_field(rep, field);
  const MultiPoly f = read_multi(o, field, o.n > 0 ? o.n : -1);
  const int n = f.nvars();
  rep.set("poly.parsed", f.to_string());
  SliceParams base;
  if (o.v.empty() && o.w.empty()) {
    auto line = find_base_line(f);
    if (!line) throw Error(ErrorKind::Squarefull, "no (v0, w0) gives f(X,0) of full degree with a simple root");
    base = line->params;
    rep.set("base.source", "first suitable line");
  } else {
    base.v = parse_vector(o.v, field, n, "--v");
    base.w = parse_vector(o.w, field, n - 1, "--w");
    base.z.assign(n - 1, field.zero());
    rep.set("base.source", "given");
  }
  rep.set("base.v", join(base.v));
  rep.set("base.w", join(base.w));
  const UniPoly u = slice(f, base).restrict_y0();
  rep.set("base.restriction", u.to_string());
  const FieldElem alpha = resolve_alpha(o, field, u, rep);
  report_alpha(rep, alpha);
  CensusOptions copts;
  LogSink sink;
  attach_runtime(copts, o, err, sink);
  return finish_census(rep, census_z(f, base.v, base.w, alpha, copts));
}

int cmd_curve_scan(const Options& o, Report& rep) {
  const FieldCtx& field = parse_field_spec(o.field);
  report_field(rep, field);
  ParsedPoly parsed = parse_polynomial(read_poly(o), field, 3);
  const PlaneCurve c(parsed.poly);
  rep.set("poly.parsed", c.f().to_string());
  rep.set("curve.degree", c.degree());
  const PointCensus pc = smooth_point_census(c, o.points, o.max_tuples);
  rep.set("points.total", pc.total);
  rep.set("points.smooth", pc.smooth);
  rep.set("points.singular", pc.singular);
  for (std::size_t i = 0; i < pc.points.size(); ++i) {
    rep.set("point." + std::to_string(i), point_string(pc.points[i]) + (pc.point_singular[i] ? " singular" : " smooth"));
  }
  if (o.dprime > 0) {
    const int genus = o.genus >= 0 ? o.genus : max_genus(o.dprime);
    const auto q = static_cast<std::int64_t>(field.q());
    const std::int64_t ns = bound_smooth_points({q, c.degree(), o.dprime, genus});
    rep.set("bound.component_degree", o.dprime);
    rep.set("bound.genus", genus);
    rep.set("bound.smooth_points_on_component", ns);
    rep.set("bound.points_allowing_singular", bound_points_allowing_singular(q, o.dprime, genus));
    rep.set("bound.smooth_count_meets_bound", static_cast<std::int64_t>(pc.smooth) >= ns);
  }
  return kExitOk;
}

int cmd_bounds(const Options& o, Report& rep) {
  if (o.d < 1) throw Error(ErrorKind::DomainError, "--d must be a positive degree");
  const int D = o.D > 0 ? o.D : 1;
  rep.set("d", o.d);
  rep.set("D", D);
  rep.set("bound_not_abs_irreducible", bound_not_abs_irreducible(o.d));
  rep.set("bound_linear_through_point", bound_linear_factor(o.d));
  rep.set("genericity_degree", genericity_degree(o.d));
  if (o.d >= 2) {
    const BoundReport b = bound_report(o.d, D);
    rep.set("lift_order", b.lift_order);
    rep.set("root_minor_degree", b.deg_per_root);
    rep.set("root_minor_degree_sum", per_root_degree_sum(o.d, D));
    rep.set("bound_small_factor", b.small_factor);
  } else {
    rep.set("lift_order", static_cast<std::int64_t>(o.d) * D);
  }
  if (o.q > 0) {
    auto holds = [&](std::int64_t threshold) { return o.non_strict ? o.q >= threshold : o.q > threshold; };
    rep.set("q", o.q);
    rep.set("comparison", o.non_strict ? ">=" : ">");
    rep.set("q_exceeds.not_abs_irreducible", holds(bound_not_abs_irreducible(o.d)));
    rep.set("q_exceeds.linear_through_point", holds(bound_linear_factor(o.d)));
    if (o.d >= 2) rep.set("q_exceeds.small_factor", holds(bound_small_factor(o.d, D)));
    if (o.dprime > 0) {
      const int genus = o.genus >= 0 ? o.genus : max_genus(o.dprime);
      rep.set("bound.component_degree", o.dprime);
      rep.set("bound.genus", genus);
      rep.set("bound.smooth_points_on_component", bound_smooth_points({o.q, o.d, o.dprime, genus}));
      rep.set("bound.points_allowing_singular", bound_points_allowing_singular(o.q, o.dprime, genus));
    }
  }
  return kExitOk;
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotSimple:
    case ErrorKind::NotARoot:
    case ErrorKind::DegreeDrop:
    case ErrorKind::Squarefull:
    case ErrorKind::HasLinearFactor:
    case ErrorKind::NotAbsolutelyIrreducible:
      return kExitPrecondition;
    case ErrorKind::BudgetExceeded:
      return kExitBudget;
    case ErrorKind::Internal:
      return kExitMismatch;
    default:
      return kExitUsage;
  }
}

void echo_config(Report& rep, const std::string& cmd, const Options& o) {
  rep.set("command", cmd);
  rep.set("config.field", o.field);
  if (!o.poly.empty()) rep.set("config.poly", o.poly);
  if (!o.poly_file.empty()) rep.set("config.poly_file", o.poly_file);
  if (o.D > 0) rep.set("config.D", o.D);
  if (o.d > 0) rep.set("config.d", o.d);
  if (o.n > 0) rep.set("config.n", o.n);
  rep.set("config.budget", o.budget);
  rep.set("config.max_tuples", o.max_tuples);
  rep.set("config.oracle", o.oracle);
  rep.set("config.seed", o.seed);
  if (!o.alpha.empty()) rep.set("config.alpha", o.alpha);
  if (!o.alpha.empty()) rep.set("config.alpha_index", o.alpha_index);
  if (o.alpha.empty()) rep.set("config.root", o.root);
  if (!o.v.empty()) rep.set("config.v", o.v);
  if (!o.w.empty()) rep.set("config.w", o.w);
  if (!o.z.empty()) rep.set("config.z", o.z);
  if (o.no_shift) rep.set("config.no_shift", true);
  if (o.dprime > 0) rep.set("config.dprime", o.dprime);
  if (o.genus >= 0) rep.set("config.genus", o.genus);
  if (o.q > 0) rep.set("config.q", o.q);
  if (o.non_strict) rep.set("config.non_strict", true);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Slicing, factorization and point-count experiments over finite fields", "pslice"};
  app.require_subcommand(1);

  auto add_field_poly = [&](CLI::App* sub) {
    sub->add_option("--field", o.field, "Field: p, p^k or q=N")->capture_default_str();
    sub->add_option("--poly", o.poly, "Polynomial, e.g. \"X^2 + X*Y + 1\" or \"x0^2 + x1*x2\"");
    sub->add_option("--poly-file", o.poly_file, "Read the polynomial from a file");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget, "Oracle candidate ceiling")->capture_default_str();
    sub->add_option("--threads", o.threads, "Worker threads (0: available parallelism)");
    sub->add_flag("--oracle", o.oracle, "Cross-check against the brute-force oracle");
    sub->add_option("--seed", o.seed, "Seed (recorded; every mode is exhaustive)");
    sub->add_option("--output", o.output, "Write the report to this file");
    sub->add_flag("--json", o.json, "Emit the report as JSON");
  };
  auto add_alpha = [&](CLI::App* sub) {
    sub->add_option("--alpha", o.alpha, "Root: an integer, or minimal polynomial coefficients a0,a1,...");
    sub->add_option("--alpha-index", o.alpha_index, "Which root of the --alpha polynomial, in index order");
    sub->add_option("--root", o.root, "Which simple root of f(X,0), when --alpha is absent");
  };

  auto* irr = app.add_subcommand("irr", "Absolute irreducibility certificate for a bivariate polynomial");
  add_field_poly(irr);
  add_common(irr);
  irr->add_flag("--no-shift", o.no_shift, "Test on Y = 0 only");

  auto* linfac = app.add_subcommand("linfac", "Linear factor through (alpha0, 0)");
  add_field_poly(linfac);
  add_common(linfac);
  add_alpha(linfac);

  auto* smallfac = app.add_subcommand("smallfac", "Exclude factors of degree <= D");
  add_field_poly(smallfac);
  add_common(smallfac);
  add_alpha(smallfac);
  smallfac->add_option("--D", o.D, "Degree bound")->check(CLI::PositiveNumber);

  auto* slc = app.add_subcommand("slice", "Print one plane slice");
  add_field_poly(slc);
  add_common(slc);
  slc->add_option("--n", o.n, "Number of variables")->check(CLI::PositiveNumber);
  slc->add_option("--v", o.v, "v1,...,vn")->required();
  slc->add_option("--w", o.w, "w2,...,wn")->required();
  slc->add_option("--z", o.z, "z2,...,zn")->required();

  auto* census = app.add_subcommand("census", "Count slices with small factors over all (v, w, z)");
  add_field_poly(census);
  add_common(census);
  census->add_option("--D", o.D, "Degree bound (default d - 1)")->check(CLI::PositiveNumber);
  census->add_option("--n", o.n, "Number of variables")->check(CLI::PositiveNumber);
  census->add_option("--max-tuples", o.max_tuples, "Tuple ceiling")->capture_default_str();
  census->add_option("--log", o.log, "Write one line per tuple to this file");

  auto* censusz = app.add_subcommand("census-z", "Count directions z giving a linear factor through (alpha0, 0)");
  add_field_poly(censusz);
  add_common(censusz);
  add_alpha(censusz);
  censusz->add_option("--n", o.n, "Number of variables")->check(CLI::PositiveNumber);
  censusz->add_option("--v", o.v, "v1,...,vn (default: first suitable line)");
  censusz->add_option("--w", o.w, "w2,...,wn");
  censusz->add_option("--max-tuples", o.max_tuples, "Tuple ceiling")->capture_default_str();
  censusz->add_option("--log", o.log, "Write one line per tuple to this file");

  auto* curve = app.add_subcommand("curve-scan", "Points and smooth points of a plane curve");
  add_field_poly(curve);
  add_common(curve);
  curve->add_flag("--points", o.points, "List every point");
  curve->add_option("--dprime", o.dprime, "Component degree for the bounds")->check(CLI::PositiveNumber);
  curve->add_option("--genus", o.genus, "Component genus (default (d'-1)(d'-2)/2)")->check(CLI::NonNegativeNumber);
  curve->add_option("--max-tuples", o.max_tuples, "Point ceiling")->capture_default_str();

  auto* bounds = app.add_subcommand("bounds", "Closed-form bounds for degree d");
  bounds->add_option("--d", o.d, "Degree")->required()->check(CLI::PositiveNumber);
  bounds->add_option("--D", o.D, "Factor degree bound (default 1)")->check(CLI::PositiveNumber);
  bounds->add_option("--q", o.q, "Field order to compare against the bounds")->check(CLI::PositiveNumber);
  bounds->add_flag("--non-strict", o.non_strict, "Compare with >= instead of >");
  bounds->add_option("--dprime", o.dprime, "Component degree for the curve bounds")->check(CLI::PositiveNumber);
  bounds->add_option("--genus", o.genus, "Component genus")->check(CLI::NonNegativeNumber);
  bounds->add_option("--output", o.output, "Write the report to this file");
  bounds->add_flag("--json", o.json, "Emit the report as JSON");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const CLI::App* sub = app.get_subcommands().front();
  const std::string cmd = sub->get_name();
  Report rep;
  echo_config(rep, cmd, o);
  int code = kExitOk;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (cmd == "irr") code = cmd_irr(o, rep);
    else if (cmd == "linfac") code = cmd_linfac(o, rep);
    else if (cmd == "smallfac") code = cmd_smallfac(o, rep);
    else if (cmd == "slice") code = cmd_slice(o, rep);
    else if (cmd == "census") code = cmd_census(o, rep, err);
    else if (cmd == "census-z") code = cmd_census_z(o, rep, err);
    else if (cmd == "curve-scan") code = cmd_curve_scan(o, rep);
    else code = cmd_bounds(o, rep);
    rep.set("status", "ok");
  } catch (const Error& e) {
    code = exit_code_for(e.kind());
    rep.set("status", "error");
    rep.set("error.kind", to_string(e.kind()));
    rep.set("error.message", e.what());
    err << "error: " << e.what() << "\n";
  } catch (const Mismatch& e) {
    code = kExitMismatch;
    rep.set("status", "mismatch");
    rep.set("error.message", e.what());
    err << "error: oracle mismatch: " << e.what() << "\n";
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  rep.set("runtime.threads", resolve_threads(o.threads));
  rep.set("runtime.wall_time_ms", static_cast<std::int64_t>(ms.count()));

  const std::string doc = o.json ? rep.json() : rep.text();
  if (o.output.empty()) {
    out << doc;
  } else {
    std::ofstream file(o.output);
    if (!file) {
      err << "error: cannot write " << o.output << "\n";
      return kExitUsage;
    }
    file << doc;
  }
  return code;
}

}  // namespace pslice
