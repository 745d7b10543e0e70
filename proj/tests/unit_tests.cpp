#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "pslice/bertini.hpp"
#include "pslice/cli.hpp"
#include "pslice/curves.hpp"
#include "pslice/factortest.hpp"
#include "pslice/lift.hpp"
#include "pslice/oracle.hpp"

using namespace pslice;

namespace {

// Plain integer polynomials mod p, used as an independent reference.
using IntPoly = std::vector<int>;

IntPoly imod(IntPoly a, const IntPoly& m, int p) {
  const int dm = static_cast<int>(m.size()) - 1;
  int inv = 1;
  while (inv * m.back() % p != 1) ++inv;
  for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
    const int c = a[i] * inv % p;
    for (int j = 0; j <= dm; ++j) a[i - dm + j] = ((a[i - dm + j] - c * m[j]) % p + p) % p;
  }
  a.resize(std::min<std::size_t>(a.size(), dm));
  return a;
}

bool int_irreducible(const IntPoly& m, int p) {
  const int deg = static_cast<int>(m.size()) - 1;
  // Try every monic divisor of degree 1..deg/2.
  for (int e = 1; 2 * e <= deg; ++e) {
    int count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    for (int idx = 0; idx < count; ++idx) {
      IntPoly g(e + 1, 0);
      int t = idx;
      for (int i = 0; i < e; ++i) {
        g[i] = t % p;
        t /= p;
      }
      g[e] = 1;
      const IntPoly r = imod(m, g, p);
      bool zero = true;
      for (int c : r) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

std::vector<FieldElem> all_elements(const FieldCtx& f) {
  std::vector<FieldElem> out;
  for (std::uint32_t i = 0; i < f.q(); ++i) out.push_back(f.element(i));
  return out;
}

std::string run(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = run_cli(args, out, err);
  return out.str();
}

std::string strip_runtime(const std::string& report) {
  std::istringstream in(report);
  std::string line, out;
  while (std::getline(in, line)) {
    if (line.rfind("runtime.", 0) != 0) out += line + "\n";
  }
  return out;
}

}  // namespace

TEST_CASE("field moduli are irreducible and smallest") {
  CHECK(field_create(2, 2).modulus_string() == "1,1,1");
  CHECK(field_create(3, 2).modulus_string() == "1,0,1");
  for (auto [p, k] : {std::pair{2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}}) {
    const FieldCtx& f = field_create(p, k);
    IntPoly m(f.modulus().begin(), f.modulus().end());
    CHECK(int_irreducible(m, p));
  }
}

TEST_CASE("field axioms hold exhaustively in small fields") {
  for (const FieldCtx* f : {&field_create(2, 2), &field_create(3, 2), &field_create(2, 3)}) {
    const auto xs = all_elements(*f);
    for (const auto& a : xs) {
      if (!a.is_zero()) CHECK((a * a.inv()).is_one());
      CHECK(a.pow(f->q()) == a);
      for (const auto& b : xs) {
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        for (const auto& c : xs) CHECK(a * (b + c) == a * b + a * c);
      }
    }
  }
}

TEST_CASE("embeddings are homomorphisms and fix the prime field") {
  const FieldCtx& f4 = field_create(2, 2);
  const FieldCtx& f16 = field_create(2, 4);
  const Embedding& e = embedding(f4, f16);
  const FieldElem t = e.generator_image();
  CHECK((t * t + t + f16.one()).is_zero());
  for (const auto& a : all_elements(f4)) {
    for (const auto& b : all_elements(f4)) {
      CHECK(e(a * b) == e(a) * e(b));
      CHECK(e(a + b) == e(a) + e(b));
    }
  }
  CHECK(embedding(field_create(3, 1), field_create(3, 2))(field_create(3, 1).from_int(2)) ==
        field_create(3, 2).from_int(2));
  CHECK_THROWS_AS(field_create(3, 1).one() + field_create(3, 2).one(), Error);
}

TEST_CASE("frobenius orbits") {
  const FieldCtx& f4 = field_create(2, 2);
  CHECK(frobenius_orbit(f4.generator(), field_create(2, 1)).size() == 2);
  for (const auto& a : all_elements(field_create(3, 2))) {
    const auto n = frobenius_orbit(a, field_create(3, 1)).size();
    CHECK((n == 1 || n == 2));
  }
}

TEST_CASE("parsing and evaluation") {
  const FieldCtx& f3 = field_create(3, 1);
  const BiPoly f = parse_bipoly("X^2 + X*Y + X + Y", f3);
  CHECK(f.eval(f3.zero(), f3.zero()).is_zero());
  CHECK(f.eval(f3.from_int(2), f3.zero()).is_zero());
  CHECK(f.eval(f3.one(), f3.one()) == f3.one());
  CHECK_THROWS_AS(parse_bipoly("2X", f3), Error);
  CHECK_THROWS_AS(parse_bipoly("X + x1", f3), Error);
  CHECK(parse_bipoly("(X + 1)^2", f3) == parse_bipoly("X^2 + 2*X + 1", f3));
  CHECK(parse_bipoly("-X + 4", f3) == parse_bipoly("2*X + 1", f3));
}

TEST_CASE("resultant agrees with substitution for a linear divisor") {
  const FieldCtx& f2 = field_create(2, 1);
  CHECK(resultant_x(parse_bipoly("X^2 + Y", f2), parse_bipoly("X + Y", f2)).to_string('Y') == "Y^2 + Y");
  CHECK(resultant_x(parse_bipoly("X + Y", f2), parse_bipoly("X + Y", f2)).is_zero());
  // Res_X(f, X + c(Y)) = f(-c(Y), Y) up to sign; check on every f of degree <= 2 over F_3.
  const FieldCtx& f3 = field_create(3, 1);
  const BiPoly g = parse_bipoly("X + Y + 1", f3);
  for (int idx = 0; idx < 729; ++idx) {
    BiPoly f(f3);
    int t = idx;
    for (int s = 0; s <= 2; ++s) {
      for (int j = 0; j <= s; ++j) {
        f.set_coeff(s - j, j, f3.from_int(t % 3));
        t /= 3;
      }
    }
    if (f.degree_x() < 1) continue;
    const UniPoly r = resultant_x(f, g);
    for (const auto& y : all_elements(f3)) {
      const bool vanish = f.eval(-(y + f3.one()), y).is_zero();
      CHECK(r(y).is_zero() == vanish);
    }
  }
}

TEST_CASE("simple roots") {
  const FieldCtx& f3 = field_create(3, 1);
  auto r = simple_roots(parse_bipoly("X^2 + X", f3).restrict_y0());
  REQUIRE(r.size() == 2);
  CHECK(r[0].value == f3.zero());
  CHECK(r[1].value == f3.from_int(2));
  CHECK(simple_roots(parse_bipoly("X^2", field_create(2, 1)).restrict_y0()).empty());
  r = simple_roots(parse_bipoly("X^2 + 1", f3).restrict_y0());
  REQUIRE(r.size() == 1);
  CHECK(r[0].degree == 2);
  CHECK((r[0].value * r[0].value + r[0].field->one()).is_zero());
}

TEST_CASE("multivariate homogenization round trip and division") {
  const FieldCtx& f3 = field_create(3, 1);
  const MultiPoly c = parse_polynomial("x0*x1 - x2^2", f3).poly;
  const MultiPoly a = dehomogenize(c, 0);
  CHECK(a.to_string() == "2*x1^2 + x0");
  CHECK(homogenize(a, 0, 2) == c);
  const MultiPoly p = parse_polynomial("x0 + x1", f3, 2).poly;
  const MultiPoly q = parse_polynomial("x0 + 2*x1 + 1", f3, 2).poly;
  CHECK(exact_divide(p * q, q) == p);
  CHECK_FALSE(exact_divide(p * q + MultiPoly::constant(f3, 2, f3.one()), q).has_value());
}

TEST_CASE("newton lifting") {
  const FieldCtx& f2 = field_create(2, 1);
  const BiPoly f = parse_bipoly("X^2 + X + Y", f2);
  auto r = lift_simple_root(f, f2.zero(), 3);
  CHECK(r.series.to_string() == "Y + Y^2 + O(Y^4)");
  r = lift_simple_root(f, f2.one(), 3);
  CHECK(r.series.to_string() == "1 + Y + Y^2 + O(Y^4)");
  const FieldCtx& f5 = field_create(5, 1);
  r = lift_simple_root(parse_bipoly("X + Y", f5), f5.zero(), 5);
  CHECK(r.series[1] == f5.from_int(4));
  for (int i = 2; i <= 5; ++i) CHECK(r.series[i].is_zero());
  CHECK_THROWS_AS(lift_simple_root(parse_bipoly("X^2 + Y", f2), f2.zero(), 2), Error);
  CHECK_THROWS_AS(lift_simple_root(parse_bipoly("X^2 + X + 1 + Y", f2), f2.zero(), 2), Error);
}

TEST_CASE("lifted roots annihilate f, checked by independent series arithmetic") {
  // A sample of cubics over F_3 with X^3 coefficient 1, at every rational simple root.
  const FieldCtx& f3 = field_create(3, 1);
  int checked = 0;
  for (int idx = 0; idx < 6561 && checked < 200; idx += 7) {
    BiPoly f(f3);
    int t = idx;
    f.set_coeff(3, 0, f3.one());
    for (auto [i, j] : {std::pair{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}, {0, 2}, {1, 2}}) {
      f.set_coeff(i, j, f3.from_int(t % 3));
      t /= 3;
    }
    for (const auto& root : simple_roots(f.restrict_y0())) {
      if (root.degree != 1) continue;
      const int ell = 6;
      const auto lr = lift_simple_root(f, root.value, ell);
      // acc = sum_i coeff_x(i)(Y) * alpha^i, truncated at Y^{ell+1}, on int vectors.
      std::vector<int> alpha(ell + 1), power(ell + 1, 0), acc(ell + 1, 0);
      for (int k = 0; k <= ell; ++k) alpha[k] = static_cast<int>(lr.series[k].index());
      power[0] = 1;
      for (int i = 0; i <= 3; ++i) {
        const UniPoly c = f.coeff_x(i);
        for (int a = 0; a <= ell; ++a) {
          for (int b = 0; a + b <= ell; ++b) {
            acc[a + b] = (acc[a + b] + static_cast<int>(c.coeff(b).index()) * power[a]) % 3;
          }
        }
        std::vector<int> next(ell + 1, 0);
        for (int a = 0; a <= ell; ++a) {
          for (int b = 0; a + b <= ell; ++b) next[a + b] = (next[a + b] + power[a] * alpha[b]) % 3;
        }
        power = next;
      }
      for (int k = 0; k <= ell; ++k) CHECK(acc[k] == 0);
      ++checked;
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("powers table and linear systems") {
  const FieldCtx& f2 = field_create(2, 1);
  const BiPoly f = parse_bipoly("X^2 + X + Y", f2);
  const auto table = powers_table(lift_simple_root(f, f2.zero(), 2), 1);
  CHECK(table.at(0, 0).is_one());
  CHECK(table.at(1, 0).is_zero());
  CHECK(table.at(1, 1).is_one());
  CHECK(table.at(1, 2).is_one());
  const LinSys sys = build_linear_system(table, 1, 2);
  CHECK(sys.rows() == 3);
  CHECK(sys.columns() == 2);
  CHECK_FALSE(solvable(sys).has_value());

  const FieldCtx& f3 = field_create(3, 1);
  const BiPoly cubic = parse_bipoly("X^3 + Y + 2*X", f3);
  const auto t6 = powers_table(lift_simple_root(cubic, f3.zero(), 6), 2);
  const LinSys s2 = build_linear_system(t6, 2, 3);
  CHECK(s2.rows() == 7);
  CHECK(s2.columns() == 5);
}

TEST_CASE("linear factor certificates") {
  const FieldCtx& f3 = field_create(3, 1);
  const BiPoly g = parse_bipoly("X^2 + X*Y + X + Y", f3);
  auto c = has_linear_factor_through(g, f3.zero());
  CHECK(c.kind == CertKind::LinearFactorThrough);
  CHECK(c.witness->to_string() == "X + Y");
  c = has_linear_factor_through(g, f3.from_int(2));
  CHECK(c.witness->to_string() == "X + 1");
  const FieldCtx& f2 = field_create(2, 1);
  CHECK(has_linear_factor_through(parse_bipoly("X^2 + X + Y", f2), f2.zero()).kind ==
        CertKind::NoLinearFactorThrough);
}

TEST_CASE("absolute irreducibility certificates") {
  const FieldCtx& f3 = field_create(3, 1);
  const auto r = absolute_irreducibility(parse_bipoly("X^2 + X*Y + X + Y", f3));
  CHECK(r.kind == CertKind::Reducible);
  CHECK(*r.m == 1);
  CHECK_THROWS_AS(absolute_irreducibility(parse_bipoly("X^2 + Y^2", f3)), Error);
  // f(X,0) = X^2 is squarefull; after Y -> Y + c the certificate applies.
  const auto s = absolute_irreducibility_shifted(parse_bipoly("X^2 + Y", f3));
  CHECK(s.cert.kind == CertKind::AbsolutelyIrreducible);
  CHECK(!s.shift.is_zero());
  CHECK(oracle_absolutely_irreducible(parse_bipoly("X^2 + Y", f3)));
}

TEST_CASE("small factor certificates") {
  const FieldCtx& f2 = field_create(2, 1);
  const FieldCtx& f3 = field_create(3, 1);
  CHECK(no_small_factor_certificate(parse_bipoly("X^2 + X + Y", f2), f2.zero(), 1).kind == CertKind::NoSmallFactor);
  CHECK(no_small_factor_certificate(parse_bipoly("X^2 + X*Y + X + Y", f3), f3.zero(), 1).kind ==
        CertKind::SmallFactorPossible);
  // D = d - 1 agrees with the irreducibility certificate.
  const BiPoly cubic = parse_bipoly("X^3 + 2*X + Y", f3);
  CHECK(no_small_factor_certificate(cubic, f3.zero(), 2).kind == CertKind::NoSmallFactor);
  CHECK(absolute_irreducibility_at(cubic, f3.zero()).kind == CertKind::AbsolutelyIrreducible);
}

TEST_CASE("oracle factor search") {
  const FieldCtx& f3 = field_create(3, 1);
  auto v = factors_up_to(parse_bipoly("X^2 + 2*Y^2", f3), 1);
  REQUIRE(v.factors.size() == 2);
  std::set<std::string> names;
  for (const auto& f : v.factors) names.insert(f.factor.to_string());
  CHECK(names == std::set<std::string>{"X + Y", "X + 2*Y"});
  v = factors_up_to(parse_bipoly("X^2 + Y^2", f3), 1);
  REQUIRE(v.factors.size() == 1);
  CHECK(v.factors[0].field_degree == 2);
  const FieldCtx& f2 = field_create(2, 1);
  CHECK(factors_up_to(parse_bipoly("X^2 + Y", f2), 1).factors.empty());
  const BiPoly g = parse_bipoly("X^2 + X*Y + X + Y", f3);
  CHECK(linear_factor_through(g, f3.zero(), f3.zero()));
  CHECK_FALSE(linear_factor_through(g, f3.one(), f3.one()));
  OracleOptions tiny;
  tiny.budget = 3;
  CHECK_THROWS_AS(factors_up_to(parse_bipoly("X^3 + Y^2 + X", f3), 2, tiny), Error);
}

TEST_CASE("oracle results do not depend on thread count") {
  const FieldCtx& f3 = field_create(3, 1);
  const BiPoly f = parse_bipoly("X^3 + X*Y^2 + 2*Y^3 + X", f3);
  OracleOptions one, four;
  four.threads = 4;
  const auto a = factors_up_to(f, 2, one);
  const auto b = factors_up_to(f, 2, four);
  REQUIRE(a.factors.size() == b.factors.size());
  for (std::size_t i = 0; i < a.factors.size(); ++i) CHECK(a.factors[i].factor == b.factors[i].factor);
  CHECK(a.candidates == b.candidates);
}

TEST_CASE("slices commute with evaluation") {
  const FieldCtx& f2 = field_create(2, 1);
  const MultiPoly f = parse_polynomial("x0^2 + x1", f2).poly;
  SliceParams p{{f2.zero(), f2.zero()}, {f2.one()}, {f2.one()}};
  CHECK(slice(f, p).to_string() == parse_bipoly("X^2 + X + Y", f2).to_string());
  const FieldCtx& f3 = field_create(3, 1);
  const MultiPoly g = parse_polynomial("x0^2*x1 + x1*x2 + 2*x2^3 + x0", f3).poly;
  const auto xs = all_elements(f3);
  int tuples = 0;
  for (int idx = 0; idx < 2187; idx += 13) {
    int t = idx;
    auto next = [&] {
      const FieldElem e = f3.from_int(t % 3);
      t /= 3;
      return e;
    };
    SliceParams sp;
    for (int i = 0; i < 3; ++i) sp.v.push_back(next());
    for (int i = 0; i < 2; ++i) sp.w.push_back(next());
    for (int i = 0; i < 2; ++i) sp.z.push_back(next());
    const BiPoly s = slice(g, sp);
    CHECK((s.is_zero() || s.total_degree() <= 3));
    for (const auto& x : xs) {
      for (const auto& y : xs) CHECK(s.eval(x, y) == g.evaluate(slice_point(sp, x, y)));
    }
    ++tuples;
  }
  CHECK(tuples > 100);
  CHECK_THROWS_AS(slice(g, SliceParams{{f3.zero()}, {}, {}}), Error);
}

TEST_CASE("closed-form bounds") {
  CHECK(bound_not_abs_irreducible(7) == 896);
  CHECK(bound_not_abs_irreducible(1) == 2);
  CHECK(bound_not_abs_irreducible(2) == 11);
  CHECK(bound_small_factor(7, 1) == 224);
  CHECK(bound_small_factor(2, 1) == 14);
  CHECK(bound_linear_factor(7) == 18);
  CHECK(bound_linear_factor(1) == 0);
  CHECK(bound_linear_factor(2) == 3);
  CHECK_THROWS_AS(bound_small_factor(3, 3), Error);
  for (int d = 2; d <= 12; ++d) {
    for (int D = 1; D < d; ++D) {
      // Sum over monomials of degree <= D of (dD - j), written out independently.
      std::int64_t sum = 0;
      for (int j = 0; j < (D + 1) * (D + 2) / 2; ++j) sum += static_cast<std::int64_t>(d) * D - j;
      CHECK(per_root_degree(d, D) == sum);
      CHECK(bound_small_factor(d, D) == d * sum + 2 * d * d);
    }
    CHECK(bound_not_abs_irreducible(d) == per_root_degree(d, d - 1) + 2 * d * d);
  }
}

TEST_CASE("census on small inputs") {
  const FieldCtx& f2 = field_create(2, 1);
  CensusOptions opts;
  opts.with_oracle = true;
  const auto r = census_full(parse_polynomial("x0^2 + x1", f2).poly, 1, opts);
  CHECK(r.total == 16);
  CHECK(r.bad_oracle == r.bad_algorithm);
  CHECK(r.mismatches == 0);
  CHECK(r.bound_vacuous);
  CHECK_THROWS_AS(census_full(parse_polynomial("x0*x1", f2).poly, 1, opts), Error);
  opts.tuple_budget = 10;
  CHECK_THROWS_AS(census_full(parse_polynomial("x0^2 + x1", f2).poly, 1, opts), Error);
}

TEST_CASE("census is monotone in the degree bound") {
  const FieldCtx& f2 = field_create(2, 1);
  const MultiPoly f = parse_polynomial("x0^3 + x1^2*x2 + x1 + x2 + 1", f2).poly;
  std::vector<std::string> log1, log2;
  CensusOptions opts;
  opts.with_oracle = true;
  opts.log = [&](const std::string& s) { log1.push_back(s); };
  census_full(f, 1, opts);
  opts.log = [&](const std::string& s) { log2.push_back(s); };
  census_full(f, 2, opts);
  REQUIRE(log1.size() == log2.size());
  auto bad = [](const std::string& s) { return s.find(" bad=1") != std::string::npos; };
  for (std::size_t i = 0; i < log1.size(); ++i) {
    if (bad(log1[i])) CHECK(bad(log2[i]));
  }
}

TEST_CASE("census over directions") {
  const FieldCtx& f2 = field_create(2, 1);
  const MultiPoly f = parse_polynomial("x0^2 + x1^2 + x0*x1 + x1", f2).poly;
  auto line = find_base_line(f);
  REQUIRE(line.has_value());
  CensusOptions opts;
  opts.with_oracle = true;
  const auto r = census_z(f, line->params.v, line->params.w, line->root.value, opts);
  CHECK(r.total == 2);
  CHECK(r.bad_oracle == r.bad_algorithm);
  CHECK(r.bad_algorithm <= 3);
  CHECK_THROWS_AS(census_z(parse_polynomial("x0 + x1", f2).poly, line->params.v, line->params.w, f2.zero(), opts),
                  Error);
}

TEST_CASE("plane curve point census") {
  const FieldCtx& f3 = field_create(3, 1);
  const auto conic = smooth_point_census(PlaneCurve(parse_polynomial("x0*x1 - x2^2", f3).poly));
  CHECK(conic.total == 4);
  CHECK(conic.smooth == 4);
  CHECK(conic.singular == 0);
  CHECK(bound_points_allowing_singular(3, 2, 0) == 4);
  const FieldCtx& f2 = field_create(2, 1);
  const auto dbl = smooth_point_census(PlaneCurve(parse_polynomial("x0^2", f2, 3).poly), true);
  CHECK(dbl.total == 3);
  CHECK(dbl.singular == 3);
  // x0*x1*x2 over F_2: independent count of points with a zero coordinate, and
  // of those with two zero coordinates (where every partial vanishes).
  int on = 0, sing = 0;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int c = 0; c < 2; ++c) {
        if (a + b + c == 0) continue;
        if (a * b * c == 0) ++on;
        if (a * b * c == 0 && a * b == 0 && b * c == 0 && a * c == 0) ++sing;
      }
    }
  }
  const auto tri = smooth_point_census(PlaneCurve(parse_polynomial("x0*x1*x2", f2).poly));
  CHECK(tri.total == static_cast<std::uint64_t>(on));
  CHECK(tri.singular == static_cast<std::uint64_t>(sing));
  CHECK(tri.total == tri.smooth + tri.singular);
  CHECK_THROWS_AS(PlaneCurve(parse_polynomial("x0 + x1^2", f2, 3).poly), Error);
}

TEST_CASE("curve bounds") {
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(35) == 5);
  CHECK(isqrt(36) == 6);
  CHECK(isqrt(std::uint64_t{1} << 62) == std::uint64_t{1} << 31);
  CHECK(bound_smooth_points({9, 3, 3, 1}) == 4);
  CHECK(bound_smooth_points({11, 1, 1, 0}) == 12);
  CHECK(bound_points_allowing_singular(4, 3, 1) == 1);
  CHECK(bound_points_allowing_singular(7, 1, 0) == 8);
  CHECK(bound_smooth_points({679, 7, 7, 13}) <= 0);
  CHECK(bound_smooth_points({680, 7, 7, 13}) > 0);
}

TEST_CASE("forms vanishing on the projective line") {
  for (int q : {2, 3}) {
    const FieldCtx& f = field_create(q, 1);
    const std::string s = "x0^" + std::to_string(q) + "*x1 - x0*x1^" + std::to_string(q);
    CHECK(check_all_points_vanish(parse_polynomial(s, f).poly));
    CHECK_FALSE(check_all_points_vanish(parse_polynomial("x0", f, 2).poly));
  }
}

TEST_CASE("cli exit codes and report") {
  int code = 0;
  std::string out = run({"bounds", "--d", "7", "--D", "1"}, code);
  CHECK(code == kExitOk);
  CHECK(out.find("bound_not_abs_irreducible = 896\n") != std::string::npos);
  CHECK(out.find("bound_small_factor = 224\n") != std::string::npos);
  run({"linfac", "--field", "3", "--poly", "X^2 + Y^2"}, code);
  CHECK(code == kExitPrecondition);
  run({"linfac", "--field", "3", "--poly", "X^2 Y"}, code);
  CHECK(code == kExitUsage);
  run({"frobnicate"}, code);
  CHECK(code == kExitUsage);
  run({"census", "--field", "2", "--poly", "x0^2 + x1", "--max-tuples", "4"}, code);
  CHECK(code == kExitBudget);
  out = run({"linfac", "--field", "3", "--poly", "X^2 + X*Y + X + Y", "--alpha", "0", "--oracle"}, code);
  CHECK(code == kExitOk);
  CHECK(out.find("witness = X + Y\n") != std::string::npos);
  out = run({"linfac", "--field", "3", "--poly", "X^2 + Y^2 + X*Y + 1", "--alpha", "1,0,1", "--alpha-index", "0"}, code);
  CHECK(code == kExitOk);
  CHECK(out.find("alpha0.field = 3^2\n") != std::string::npos);
  out = run({"curve-scan", "--field", "3", "--poly", "x0*x1 - x2^2", "--json"}, code);
  CHECK(code == kExitOk);
  CHECK(out.find("\"points.smooth\": 4") != std::string::npos);
}

TEST_CASE("cli reports are reproducible across runs and thread counts") {
  int code = 0;
  const std::vector<std::string> base{"census", "--field", "3", "--poly", "x0^2 + x1", "--oracle"};
  auto with = [&](const char* threads) {
    auto a = base;
    a.insert(a.end(), {"--threads", threads});
    return a;
  };
  const std::string a = strip_runtime(run(with("1"), code));
  CHECK(a == strip_runtime(run(with("1"), code)));
  CHECK(a == strip_runtime(run(with("4"), code)));
}
