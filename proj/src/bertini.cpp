#include "pslice/bertini.hpp"

#include <algorithm>

#include "pslice/factortest.hpp"
#include "pslice/parallel.hpp"

namespace pslice {

std::string SliceParams::to_string() const {
  auto join = [](const std::vector<FieldElem>& xs) {
    std::string s = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i].to_string();
    return s + ")";
  };
  return "v=" + join(v) + " w=" + join(w) + " z=" + join(z);
}

namespace {

void check_params(const MultiPoly& f, const SliceParams& p) {
  const int n = f.nvars();
  if (p.n() != n || static_cast<int>(p.w.size()) != n - 1 || static_cast<int>(p.z.size()) != n - 1) {
    throw Error(ErrorKind::DimensionMismatch, "slice parameters of lengths " + std::to_string(p.v.size()) + "/" +
                                                  std::to_string(p.w.size()) + "/" + std::to_string(p.z.size()) +
                                                  " for " + std::to_string(n) + " variables");
  }
  for (const auto* vec : {&p.v, &p.w, &p.z}) {
    for (const auto& x : *vec) {
      if (x.ctx_ptr() != &f.ctx()) throw Error(ErrorKind::FieldMismatch, "slice parameter outside F_" + f.ctx().spec());
    }
  }
}

// Saturating product, for bound values far beyond any census size.
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

std::uint64_t sat_pow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r = sat_mul(r, base);
  return r;
}

std::int64_t exact_div8(std::int64_t num, const char* what) {
  if (num % 8 != 0) throw Error(ErrorKind::Internal, std::string(what) + " numerator not divisible by 8");
  return num / 8;
}

}  // namespace

BiPoly slice(const MultiPoly& f, const SliceParams& params) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "slice of the zero polynomial");
  check_params(f, params);
  const FieldCtx& field = f.ctx();
  const int n = f.nvars();
  // Image of x_i as a bivariate linear form, and its powers.
  std::vector<unsigned> max_exp(n, 0);
  for (const auto& [e, c] : f.terms()) {
    for (int i = 0; i < n; ++i) max_exp[i] = std::max(max_exp[i], e[i]);
  }
  std::vector<std::vector<BiPoly>> powers(n);
  for (int i = 0; i < n; ++i) {
    BiPoly lin(field);
    if (i == 0) {
      lin.set_coeff(1, 0, field.one());
      lin.set_coeff(0, 0, params.v[0]);
    } else {
      lin.set_coeff(1, 0, params.w[i - 1]);
      lin.set_coeff(0, 1, params.z[i - 1]);
      lin.set_coeff(0, 0, params.v[i]);
    }
    powers[i].push_back(BiPoly::constant(field.one()));
    for (unsigned k = 1; k <= max_exp[i]; ++k) powers[i].push_back(powers[i].back() * lin);
  }
  BiPoly out(field);
  for (const auto& [e, c] : f.terms()) {
    BiPoly t = BiPoly::constant(c);
    for (int i = 0; i < n; ++i) {
      if (e[i]) t = t * powers[i][e[i]];
    }
    out += t;
  }
  return out;
}

std::vector<FieldElem> slice_point(const SliceParams& params, const FieldElem& x, const FieldElem& y) {
  std::vector<FieldElem> pt;
  const FieldCtx& target = x.ctx();
  pt.push_back(x + lift_to(params.v[0], target));
  for (std::size_t i = 1; i < params.v.size(); ++i) {
    pt.push_back(lift_to(params.w[i - 1], target) * x + lift_to(params.z[i - 1], target) * y +
                 lift_to(params.v[i], target));
  }
  return pt;
}

std::int64_t bound_not_abs_irreducible(int d) {
  if (d < 1) throw Error(ErrorKind::DomainError, "degree must be positive, got " + std::to_string(d));
  const std::int64_t x = d;
  return exact_div8(3 * x * x * x * x - 2 * x * x * x + 13 * x * x + 2 * x, "absolute irreducibility bound");
}

std::int64_t per_root_degree(int d, int D) {
  if (D < 1 || D >= d) {
    throw Error(ErrorKind::DomainError, "need 1 <= D < d, got d=" + std::to_string(d) + " D=" + std::to_string(D));
  }
  const std::int64_t x = d, y = D;
  return exact_div8(-y * y * y * y + 4 * y * y * y * x - 6 * y * y * y + 12 * y * y * x - 11 * y * y + 8 * y * x - 6 * y,
                    "per-root degree bound");
}

std::int64_t per_root_degree_sum(int d, int D) {
  if (D < 1 || D >= d) {
    throw Error(ErrorKind::DomainError, "need 1 <= D < d, got d=" + std::to_string(d) + " D=" + std::to_string(D));
  }
  const std::int64_t ell = static_cast<std::int64_t>(d) * D;
  const std::int64_t unknowns = static_cast<std::int64_t>(D + 1) * (D + 2) / 2;
  std::int64_t sum = 0;
  for (std::int64_t j = 0; j < unknowns; ++j) sum += ell - j;
  return sum;
}

std::int64_t bound_small_factor(int d, int D) {
  if (D < 1 || D >= d) {
    throw Error(ErrorKind::DomainError, "need 1 <= D < d, got d=" + std::to_string(d) + " D=" + std::to_string(D));
  }
  const std::int64_t x = d, y = D;
  const std::int64_t inner =
      -y * y * y * y + 4 * y * y * y * x - 6 * y * y * y + 12 * y * y * x - 11 * y * y + 8 * y * x - 6 * y + 16 * x;
  return exact_div8(x * inner, "small factor bound");
}

std::int64_t genericity_degree(int d) { return 2 * static_cast<std::int64_t>(d) * d; }

std::int64_t bound_linear_factor(int d) {
  if (d < 1) throw Error(ErrorKind::DomainError, "degree must be positive, got " + std::to_string(d));
  return 3 * static_cast<std::int64_t>(d) - 3;
}

BoundReport bound_report(int d, int D) {
  BoundReport r;
  r.d = d;
  r.D = D;
  r.lift_order = static_cast<std::int64_t>(d) * D;
  r.deg_genericity = genericity_degree(d);
  r.deg_per_root = per_root_degree(d, D);
  r.small_factor = bound_small_factor(d, D);
  r.not_abs_irreducible = bound_not_abs_irreducible(d);
  r.linear_through_point = bound_linear_factor(d);
  return r;
}

namespace {

// Decodes a tuple index in odometer order (rightmost coordinate fastest).
std::vector<FieldElem> decode_tuple(std::uint64_t index, int len, const FieldCtx& field) {
  std::vector<FieldElem> out(len, field.zero());
  for (int i = len - 1; i >= 0; --i) {
    out[i] = field.element(static_cast<std::uint32_t>(index % field.q()));
    index /= field.q();
  }
  return out;
}

SliceParams params_from(const std::vector<FieldElem>& coords, int n) {
  SliceParams p;
  p.v.assign(coords.begin(), coords.begin() + n);
  p.w.assign(coords.begin() + n, coords.begin() + 2 * n - 1);
  p.z.assign(coords.begin() + 2 * n - 1, coords.end());
  return p;
}

struct Partial {
  std::uint64_t bad_algorithm = 0;
  std::uint64_t bad_oracle = 0;
  std::uint64_t mismatches = 0;
  std::uint64_t flagged = 0;
  std::uint64_t degenerate = 0;
  std::optional<std::string> first_mismatch;
  std::vector<std::string> log;
};

struct Verdict {
  bool bad;
  bool flagged;
  bool degenerate;
};

// Oracle definition of a bad slice.
bool oracle_bad(const BiPoly& s, int d, int D, const OracleOptions& opts) {
  if (s.is_zero() || s.total_degree() < d) return true;
  return smallest_factor_degree(s, std::min(D, d / 2), opts).has_value();
}

Verdict classify(const BiPoly& s, int d, int D, const OracleOptions& opts) {
  if (s.is_zero() || s.total_degree() < d) return {true, false, true};
  const UniPoly u = s.restrict_y0();
  if (u.degree() != d) return {oracle_bad(s, d, D, opts), true, false};
  const auto roots = simple_roots(u);
  if (roots.empty()) return {oracle_bad(s, d, D, opts), true, false};
  if (D == d - 1) {
    // Some factor of a reducible slice passes through (alpha0, 0) for any
    // root alpha0, so the first simple root decides.
    return {absolute_irreducibility_at(s, roots.front().value).kind == CertKind::Reducible, false, false};
  }
  int covered = 0;
  for (const Root& r : roots) {
    if (no_small_factor_certificate(s, r.value, D).kind == CertKind::SmallFactorPossible) {
      // A solvable system gives g of degree <= D sharing a factor with s.
      return {true, false, false};
    }
    covered += r.degree;
  }
  // With f(X,0) squarefree every factor passes through some (root, 0), and
  // Frobenius symmetry lets one root per orbit stand for the whole orbit.
  if (covered == d) return {false, false, false};
  return {oracle_bad(s, d, D, opts), true, false};
}

template <class PerTuple>
std::vector<Partial> run_census(std::uint64_t total, const CensusOptions& opts, PerTuple&& per_tuple) {
  std::uint64_t next_report = opts.progress_every;
  auto done = [&](std::uint64_t completed) {
    if (!opts.progress) return;
    if (completed >= next_report || completed == total) {
      opts.progress(completed, total);
      while (next_report <= completed) next_report += opts.progress_every;
    }
  };
  const std::uint64_t chunk = std::clamp<std::uint64_t>(total / 256, 1, 4096);
  return parallel_chunks<Partial>(
      total, chunk, opts.threads,
      [&](std::uint64_t lo, std::uint64_t hi) {
        Partial part;
        for (std::uint64_t t = lo; t < hi; ++t) per_tuple(t, part);
        return part;
      },
      opts.progress ? std::function<void(std::uint64_t)>(done) : std::function<void(std::uint64_t)>());
}

void merge(CensusReport& rep, std::vector<Partial>& parts, const CensusOptions& opts) {
  std::uint64_t oracle_total = 0;
  for (auto& p : parts) {
    rep.bad_algorithm += p.bad_algorithm;
    oracle_total += p.bad_oracle;
    rep.mismatches += p.mismatches;
    rep.flagged += p.flagged;
    rep.degenerate += p.degenerate;
    if (!rep.first_mismatch && p.first_mismatch) rep.first_mismatch = p.first_mismatch;
    if (opts.log) {
      for (const auto& line : p.log) opts.log(line);
    }
  }
  if (opts.with_oracle) rep.bad_oracle = oracle_total;
  rep.bound_vacuous = rep.bound_value >= rep.total;
  rep.bound_respected = rep.bad_algorithm <= std::min(rep.bound_value, rep.total);
}

}  // namespace

CensusReport census_full(const MultiPoly& f, int D, const CensusOptions& opts) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "census of the zero polynomial");
  const int n = f.nvars();
  const int d = f.total_degree();
  if (n < 2) throw Error(ErrorKind::DimensionMismatch, "plane slices need at least 2 variables, got " + std::to_string(n));
  if (D < 1 || D >= d) {
    throw Error(ErrorKind::DomainError, "need 1 <= D < d, got d=" + std::to_string(d) + " D=" + std::to_string(D));
  }
  const FieldCtx& field = f.ctx();
  const int len = 3 * n - 2;
  const std::uint64_t total = sat_pow(field.q(), len);
  if (total > opts.tuple_budget) {
    throw Error(ErrorKind::BudgetExceeded, "census over q^" + std::to_string(len) + " = " +
                                               (total == UINT64_MAX ? std::string("overflow") : std::to_string(total)) +
                                               " tuples exceeds the budget " + std::to_string(opts.tuple_budget));
  }
  if (opts.certify_input && !oracle_absolutely_irreducible(f, opts.oracle)) {
    throw Error(ErrorKind::NotAbsolutelyIrreducible, f.to_string() + " is not absolutely irreducible");
  }

  OracleOptions oracle = opts.oracle;
  oracle.threads = 1;  // parallelism lives at the tuple level

  CensusReport rep;
  rep.field = &field;
  rep.n = n;
  rep.d = d;
  rep.D = D;
  rep.total = total;
  rep.bound_coefficient = D == d - 1 ? bound_not_abs_irreducible(d) : bound_small_factor(d, D);
  rep.bound_value = sat_mul(static_cast<std::uint64_t>(rep.bound_coefficient), sat_pow(field.q(), 3 * n - 3));

  auto parts = run_census(total, opts, [&](std::uint64_t t, Partial& part) {
    const SliceParams p = params_from(decode_tuple(t, len, field), n);
    const BiPoly s = slice(f, p);
    const Verdict v = classify(s, d, D, oracle);
    part.bad_algorithm += v.bad;
    part.flagged += v.flagged;
    part.degenerate += v.degenerate;
    std::string line;
    if (opts.log) line = p.to_string() + " slice=" + s.to_string() + " bad=" + (v.bad ? "1" : "0");
    if (opts.with_oracle) {
      const bool ob = v.flagged || v.degenerate ? v.bad : oracle_bad(s, d, D, oracle);
      part.bad_oracle += ob;
      if (ob != v.bad) {
        ++part.mismatches;
        if (!part.first_mismatch) part.first_mismatch = p.to_string() + " slice=" + s.to_string();
      }
      if (opts.log) line += std::string(" oracle=") + (ob ? "1" : "0");
    }
    if (opts.log) {
      if (v.flagged) line += " flagged";
      part.log.push_back(std::move(line));
    }
  });
  merge(rep, parts, opts);
  return rep;
}

std::optional<BaseLine> find_base_line(const MultiPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "base line of the zero polynomial");
  const int n = f.nvars();
  if (n < 2) throw Error(ErrorKind::DimensionMismatch, "plane slices need at least 2 variables, got " + std::to_string(n));
  const FieldCtx& field = f.ctx();
  const int d = f.total_degree();
  const int len = 2 * n - 1;
  const std::uint64_t total = sat_pow(field.q(), len);
  for (std::uint64_t t = 0; t < total; ++t) {
    std::vector<FieldElem> coords = decode_tuple(t, len, field);
    coords.resize(3 * n - 2, field.zero());
    const SliceParams p = params_from(coords, n);
    const UniPoly u = slice(f, p).restrict_y0();
    if (u.degree() != d) continue;
    const auto roots = simple_roots(u);
    if (!roots.empty()) return BaseLine{p, roots.front()};
  }
  return std::nullopt;
}

CensusReport census_z(const MultiPoly& f, const std::vector<FieldElem>& v0, const std::vector<FieldElem>& w0,
                      const FieldElem& alpha0, const CensusOptions& opts) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "census of the zero polynomial");
  const int n = f.nvars();
  const int d = f.total_degree();
  const FieldCtx& field = f.ctx();
  if (n < 2) throw Error(ErrorKind::DimensionMismatch, "plane slices need at least 2 variables, got " + std::to_string(n));
  SliceParams base{v0, w0, std::vector<FieldElem>(n - 1, field.zero())};
  check_params(f, base);
  if (d <= 1) throw Error(ErrorKind::HasLinearFactor, f.to_string() + " is linear and is its own linear factor");
  const int len = n - 1;
  const std::uint64_t total = sat_pow(field.q(), len);
  if (total > opts.tuple_budget) {
    throw Error(ErrorKind::BudgetExceeded, "census over " + std::to_string(total) + " tuples exceeds the budget " +
                                               std::to_string(opts.tuple_budget));
  }
  if (opts.certify_input && oracle_has_linear_factor(f, opts.oracle)) {
    throw Error(ErrorKind::HasLinearFactor, f.to_string() + " has a linear factor over the algebraic closure");
  }
  // f_{v0,w0,z}(X, 0) does not depend on z.
  const UniPoly u = slice(f, base).restrict_y0();
  if (u.degree() != d) {
    throw Error(ErrorKind::DegreeDrop, "f_{v0,w0,z}(X,0) = " + u.to_string() + " has degree below " + std::to_string(d));
  }
  if (!is_subfield(field, alpha0.ctx())) {
    throw Error(ErrorKind::IncompatibleTower, "root in F_" + alpha0.ctx().spec() + " is not over F_" + field.spec());
  }
  if (!u(alpha0).is_zero()) throw Error(ErrorKind::NotARoot, alpha0.to_string() + " is not a root of " + u.to_string());
  if (u.derivative()(alpha0).is_zero()) {
    throw Error(ErrorKind::NotSimple, alpha0.to_string() + " is a multiple root of " + u.to_string());
  }

  CensusReport rep;
  rep.field = &field;
  rep.n = n;
  rep.d = d;
  rep.D = 1;
  rep.total = total;
  rep.bound_coefficient = bound_linear_factor(d);
  rep.bound_value = sat_mul(static_cast<std::uint64_t>(rep.bound_coefficient), sat_pow(field.q(), n - 2));

  OracleOptions oracle = opts.oracle;
  oracle.threads = 1;
  const FieldElem zero = alpha0.ctx().zero();
  auto parts = run_census(total, opts, [&](std::uint64_t t, Partial& part) {
    SliceParams p = base;
    p.z = decode_tuple(t, len, field);
    const BiPoly s = slice(f, p);
    const bool bad = has_linear_factor_through(s, alpha0).kind == CertKind::LinearFactorThrough;
    part.bad_algorithm += bad;
    std::string line;
    if (opts.log) line = p.to_string() + " slice=" + s.to_string() + " linear_through=" + (bad ? "1" : "0");
    if (opts.with_oracle) {
      const bool ob = linear_factor_through(s, alpha0, zero, oracle);
      part.bad_oracle += ob;
      if (ob != bad) {
        ++part.mismatches;
        if (!part.first_mismatch) part.first_mismatch = p.to_string() + " slice=" + s.to_string();
      }
      if (opts.log) line += std::string(" oracle=") + (ob ? "1" : "0");
    }
    if (opts.log) part.log.push_back(std::move(line));
  });
  merge(rep, parts, opts);
  return rep;
}

}  // namespace pslice
