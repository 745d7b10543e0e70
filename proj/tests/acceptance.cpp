// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "pslice/bertini.hpp"
#include "pslice/cli.hpp"
#include "pslice/curves.hpp"
#include "pslice/factortest.hpp"
#include "pslice/lift.hpp"
#include "pslice/oracle.hpp"

using namespace pslice;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string run_cli_text(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = run_cli(args, out, err);
  return out.str();
}

std::string report_value(const std::string& report, const std::string& key) {
  std::istringstream in(report);
  std::string line;
  const std::string prefix = key + " = ";
  while (std::getline(in, line)) {
    if (line.rfind(prefix, 0) == 0) return line.substr(prefix.size());
  }
  return "<missing>";
}

std::string strip_runtime(const std::string& report) {
  std::istringstream in(report);
  std::string line, out;
  while (std::getline(in, line)) {
    if (line.rfind("runtime.", 0) != 0) out += line + "\n";
  }
  return out;
}

// Every f over F_p with X^d coefficient 1 and total degree d, passed to visit.
void for_each_monic(const FieldCtx& field, int d, const std::function<void(const BiPoly&)>& visit) {
  std::vector<std::pair<int, int>> slots;
  for (int s = 0; s <= d; ++s) {
    for (int j = 0; j <= s; ++j) {
      if (!(s == d && j == 0)) slots.emplace_back(s - j, j);
    }
  }
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < slots.size(); ++i) count *= field.q();
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    BiPoly f = BiPoly::monomial(field.one(), d, 0);
    std::uint64_t t = idx;
    for (auto [i, j] : slots) {
      f.set_coeff(i, j, field.element(static_cast<std::uint32_t>(t % field.q())));
      t /= field.q();
    }
    visit(f);
  }
}

// f(alpha(Y), Y) by Horner in X over truncated series.
TruncSeries residual(const BiPoly& f, const TruncSeries& alpha) {
  const FieldCtx& field = alpha.ctx();
  const Embedding& emb = embedding(f.ctx(), field);
  TruncSeries acc(field, alpha.order());
  for (int i = f.degree_x(); i >= 0; --i) {
    acc = acc * alpha + TruncSeries::from_poly(f.coeff_x(i).map(emb), alpha.order());
  }
  return acc;
}

struct PopulationStats {
  std::uint64_t polys = 0;
  std::uint64_t roots = 0;
  std::uint64_t linear_mismatches = 0;
  std::uint64_t irr_mismatches = 0;
  std::uint64_t lifts = 0;
  std::uint64_t residual_violations = 0;
  double linear_seconds = 0;
  double irr_seconds = 0;
  std::string first_failure;
};

PopulationStats population_sweep() {
  PopulationStats st;
  for (int p : {2, 3}) {
    const FieldCtx& field = field_create(p, 1);
    for (int d : {2, 3}) {
      for_each_monic(field, d, [&](const BiPoly& f) {
        const auto roots = simple_roots(f.restrict_y0());
        if (roots.empty()) return;
        ++st.polys;
        auto t0 = Clock::now();
        for (const auto& r : roots) {
          ++st.roots;
          const bool alg = has_linear_factor_through(f, r.value).kind == CertKind::LinearFactorThrough;
          const bool orc = linear_factor_through(f, r.value, r.field->zero());
          if (alg != orc) {
            ++st.linear_mismatches;
            if (st.first_failure.empty()) st.first_failure = "linear " + f.to_string() + " at " + r.value.to_string();
          }
        }
        st.linear_seconds += seconds_since(t0);
        t0 = Clock::now();
        const bool irr_orc = oracle_absolutely_irreducible(f);
        for (const auto& r : roots) {
          const bool alg = absolute_irreducibility_at(f, r.value).kind == CertKind::AbsolutelyIrreducible;
          if (alg != irr_orc) {
            ++st.irr_mismatches;
            if (st.first_failure.empty()) st.first_failure = "irr " + f.to_string() + " at " + r.value.to_string();
          }
        }
        const bool first = absolute_irreducibility(f).kind == CertKind::AbsolutelyIrreducible;
        if (first != irr_orc) ++st.irr_mismatches;
        st.irr_seconds += seconds_since(t0);
        // Same lifts as the two tests perform: orders d and d(d-1).
        for (const auto& r : roots) {
          for (int ell : {d, d * (d - 1)}) {
            const LiftedRoot lr = lift_simple_root(f, r.value, ell);
            ++st.lifts;
            if (lr.series.order() != ell + 1 || !residual(f, lr.series).is_zero()) ++st.residual_violations;
          }
        }
      });
    }
  }
  return st;
}

Outcome criterion_bounds() {
  const auto t0 = Clock::now();
  int code = 0;
  const std::string rep = run_cli_text({"bounds", "--d", "7", "--D", "1"}, code);
  const double s = seconds_since(t0);
  const std::string a = report_value(rep, "bound_not_abs_irreducible");
  const std::string b = report_value(rep, "bound_small_factor");
  const std::string c = report_value(rep, "bound_linear_through_point");
  const std::string l = report_value(rep, "lift_order");
  const std::string u = report_value(rep, "genericity_degree");
  const bool ok = code == 0 && a == "896" && b == "224" && c == "18" && l == "7" && u == "98" && s < 1.0;
  return {ok, "not_abs_irreducible=" + a + " small_factor(D=1)=" + b + " linear_through_point=" + c +
                  " lift_order=" + l + " genericity_degree=" + u + " in " + std::to_string(s) + " s"};
}

Outcome criterion_identity() {
  const auto t0 = Clock::now();
  int bad = 0;
  for (int d = 2; d <= 12; ++d) {
    std::int64_t sum = 0;
    for (int j = 0; j < d * (d + 1) / 2; ++j) sum += static_cast<std::int64_t>(d) * (d - 1) - j;
    if (bound_not_abs_irreducible(d) != per_root_degree(d, d - 1) + 2 * d * d) ++bad;
    if (per_root_degree(d, d - 1) != sum) ++bad;
  }
  const double s = seconds_since(t0);
  return {bad == 0 && s < 1.0, std::to_string(bad) + " violations over 2 <= d <= 12"};
}

Outcome census_case(const char* poly, const FieldCtx& field, int D) {
  const auto t0 = Clock::now();
  CensusOptions opts;
  opts.with_oracle = true;
  opts.threads = 1;
  const auto r = census_full(parse_polynomial(poly, field).poly, D, opts);
  const double s = seconds_since(t0);
  const bool ok = r.bad_oracle && *r.bad_oracle == r.bad_algorithm && r.mismatches == 0 && r.bound_respected &&
                  s < 300.0;
  std::ostringstream o;
  o << poly << " over F_" << field.q() << ": total " << r.total << ", bad " << r.bad_algorithm << "/"
    << (r.bad_oracle ? std::to_string(*r.bad_oracle) : "?") << ", bound " << r.bound_value
    << (r.bound_vacuous ? " (vacuous)" : "") << ", " << s << " s";
  return {ok, o.str()};
}

Outcome criterion_census() {
  std::string detail;
  bool ok = true;
  const struct {
    const char* poly;
    int p;
  } cases[] = {{"x0^2 + x1", 2}, {"x0^2 + x1", 3}, {"x0^2 + x1*x2", 3}};
  for (const auto& c : cases) {
    const Outcome o = census_case(c.poly, field_create(c.p, 1), 1);
    ok = ok && o.pass;
    detail += (detail.empty() ? "" : "; ") + o.detail;
  }
  return {ok, detail};
}

Outcome census_z_case(const char* poly, const FieldCtx& field) {
  const auto t0 = Clock::now();
  const MultiPoly f = parse_polynomial(poly, field).poly;
  const auto line = find_base_line(f);
  if (!line) return {false, std::string(poly) + ": no base line"};
  CensusOptions opts;
  opts.with_oracle = true;
  const auto r = census_z(f, line->params.v, line->params.w, line->root.value, opts);
  const double s = seconds_since(t0);
  const bool bound_ok = r.bound_vacuous || r.bad_algorithm <= r.bound_value;
  const bool ok = r.bad_oracle && *r.bad_oracle == r.bad_algorithm && r.mismatches == 0 && bound_ok && s < 300.0;
  std::ostringstream o;
  o << poly << " over F_" << field.q() << ": " << r.bad_algorithm << "/" << r.total << " directions (oracle "
    << (r.bad_oracle ? std::to_string(*r.bad_oracle) : "?") << "), bound " << r.bound_value
    << (r.bound_vacuous ? " (vacuous)" : "");
  return {ok, o.str()};
}

Outcome criterion_census_z() {
  bool ok = true;
  std::string detail;
  const struct {
    const char* poly;
    int p;
  } cases[] = {{"x0^2 + x1^2 + x0*x1 + x1", 2}, {"x0^2 + x1*x2 + x2^2 + x0", 3}, {"x0^2 + x1*x2 + x2^2 + x0", 5}};
  for (const auto& c : cases) {
    const Outcome o = census_z_case(c.poly, field_create(c.p, 1));
    ok = ok && o.pass;
    detail += (detail.empty() ? "" : "; ") + o.detail;
  }
  return {ok, detail};
}

Outcome criterion_curves() {
  const auto t0 = Clock::now();
  const auto conic = smooth_point_census(PlaneCurve(parse_polynomial("x0*x1 - x2^2", field_create(3, 1)).poly));
  const auto tri = smooth_point_census(PlaneCurve(parse_polynomial("x0*x1*x2", field_create(2, 1)).poly));
  const double s = seconds_since(t0);
  const bool conic_ok = conic.smooth == 4 && bound_points_allowing_singular(3, 2, 0) == 4;
  const bool tri_ok = tri.singular == 3 && tri.smooth == 6;
  std::ostringstream o;
  o << "conic smooth " << conic.smooth << " (bound " << bound_points_allowing_singular(3, 2, 0) << "); x0*x1*x2 over F_2: total "
    << tri.total << ", singular " << tri.singular << ", smooth " << tri.smooth << " (expected 6)";
  if (!tri_ok) {
    o << "; P^2(F_2) has 7 points, 6 lie on the three lines and 3 of those are the pairwise intersections, "
         "so only 3 points are smooth";
  }
  return {conic_ok && tri_ok && s < 1.0, o.str()};
}

Outcome criterion_vanish() {
  const auto t0 = Clock::now();
  std::uint64_t forms = 0, vanishing = 0;
  bool witness_ok = true;
  for (int q : {2, 3}) {
    const FieldCtx& field = field_create(q, 1);
    for (int deg = 0; deg <= q; ++deg) {
      std::uint64_t count = 1;
      for (int i = 0; i <= deg; ++i) count *= q;
      for (std::uint64_t idx = 1; idx < count; ++idx) {
        MultiPoly f(field, 2);
        std::uint64_t t = idx;
        for (int i = 0; i <= deg; ++i) {
          f.add_term({static_cast<unsigned>(deg - i), static_cast<unsigned>(i)},
                     field.from_int(static_cast<std::int64_t>(t % q)));
          t /= q;
        }
        ++forms;
        if (check_all_points_vanish(f)) ++vanishing;
      }
    }
    const std::string w = "x0^" + std::to_string(q) + "*x1 - x0*x1^" + std::to_string(q);
    witness_ok = witness_ok && check_all_points_vanish(parse_polynomial(w, field).poly);
  }
  const double s = seconds_since(t0);
  return {vanishing == 0 && witness_ok && s < 60.0,
          std::to_string(vanishing) + " of " + std::to_string(forms) + " nonzero forms of degree <= q vanish; " +
              "x0^q*x1 - x0*x1^q vanishes everywhere: " + (witness_ok ? "yes" : "no")};
}

Outcome criterion_determinism() {
  const std::vector<std::vector<std::string>> runs{
      {"bounds", "--d", "7", "--D", "1"},
      {"irr", "--field", "3", "--poly", "X^2 + Y", "--oracle"},
      {"linfac", "--field", "3", "--poly", "X^2 + X*Y + X + Y", "--alpha", "0", "--oracle"},
      {"smallfac", "--field", "2", "--poly", "X^2 + X + Y", "--alpha", "0", "--D", "1", "--oracle"},
      {"slice", "--field", "2", "--poly", "x0^2 + x1", "--v", "0,0", "--w", "1", "--z", "1"},
      {"census", "--field", "3", "--poly", "x0^2 + x1*x2", "--oracle"},
      {"census-z", "--field", "3", "--poly", "x0^2 + x1*x2 + x2^2 + x0", "--oracle"},
      {"curve-scan", "--field", "3", "--poly", "x0*x1 - x2^2", "--points", "--dprime", "2"},
  };
  int differing = 0;
  std::string first;
  for (const auto& args : runs) {
    std::vector<std::string> reports;
    for (const char* threads : {"1", "1", "4", "4"}) {
      auto a = args;
      if (a[0] != "bounds") a.insert(a.end(), {"--threads", threads});
      for (bool json : {false, true}) {
        auto b = a;
        if (json) b.push_back("--json");
        int code = 0;
        std::string rep = run_cli_text(b, code);
        if (json) {
          // Drop the runtime members, the last two lines before the closing brace.
          std::string kept;
          std::istringstream in(rep);
          std::string line;
          while (std::getline(in, line)) {
            if (line.find("\"runtime.") == std::string::npos) kept += line + "\n";
          }
          rep = kept;
        } else {
          rep = strip_runtime(rep);
        }
        reports.push_back(rep + "exit=" + std::to_string(code));
      }
    }
    for (std::size_t i = 2; i < reports.size(); ++i) {
      if (reports[i] != reports[i % 2]) {
        ++differing;
        if (first.empty()) first = args[0];
      }
    }
  }
  return {differing == 0, std::to_string(runs.size()) + " commands x 2 runs x threads {1,4} x {text,json}: " +
                              std::to_string(differing) + " differing reports" +
                              (first.empty() ? "" : " (first: " + first + ")")};
}

}  // namespace

int main() {
  int failures = 0;
  auto print = [&](int n, const char* name, const Outcome& o) {
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << n << " (" << name << "): " << o.detail << "\n";
    std::cout.flush();
    if (!o.pass) ++failures;
  };
  print(1, "bound reproduction", criterion_bounds());
  print(2, "decomposition identity", criterion_identity());

  const auto t0 = Clock::now();
  const PopulationStats st = population_sweep();
  const double sweep = seconds_since(t0);
  {
    std::ostringstream o;
    o << st.polys << " polynomials, " << st.roots << " simple root orbits, " << st.linear_mismatches
      << " mismatches, " << st.linear_seconds << " s";
    if (!st.first_failure.empty()) o << " (first: " << st.first_failure << ")";
    print(3, "linear factor oracle equivalence", {st.linear_mismatches == 0 && st.linear_seconds < 600, o.str()});
  }
  {
    std::ostringstream o;
    o << st.polys << " polynomials at every simple root, " << st.irr_mismatches << " mismatches, " << st.irr_seconds
      << " s";
    print(4, "irreducibility oracle equivalence", {st.irr_mismatches == 0 && st.irr_seconds < 600, o.str()});
  }
  print(5, "newton residual",
        {st.residual_violations == 0 && st.lifts > 0,
         std::to_string(st.lifts) + " lifts, " + std::to_string(st.residual_violations) + " violations (sweep " +
             std::to_string(sweep) + " s)"});
  print(6, "census soundness", criterion_census());
  print(7, "direction census", criterion_census_z());
  print(8, "curve census", criterion_curves());
  print(9, "forms vanishing on the projective line", criterion_vanish());
  print(10, "determinism", criterion_determinism());
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " failing criteria") << "\n";
  return failures == 0 ? 0 : 1;
}
