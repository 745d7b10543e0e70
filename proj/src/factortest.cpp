#include "pslice/factortest.hpp"

namespace pslice {

const char* to_string(CertKind kind) {
  switch (kind) {
    case CertKind::LinearFactorThrough: return "LinearFactorThrough";
    case CertKind::NoLinearFactorThrough: return "NoLinearFactorThrough";
    case CertKind::AbsolutelyIrreducible: return "AbsolutelyIrreducible";
    case CertKind::Reducible: return "Reducible";
    case CertKind::NoSmallFactor: return "NoSmallFactor";
    case CertKind::SmallFactorPossible: return "SmallFactorPossible";
  }
  return "?";
}

LinSys build_linear_system(const PowersTable& table, int m, int d) {
  if (m < 1) throw Error(ErrorKind::DomainError, "candidate degree must be positive, got " + std::to_string(m));
  const int ell = d * m;
  if (m > table.max_power() || ell > table.ell()) {
    throw Error(ErrorKind::TableTooSmall, "table covers powers <= " + std::to_string(table.max_power()) +
                                              " to order " + std::to_string(table.ell()) + ", need power " +
                                              std::to_string(m) + " to order " + std::to_string(ell));
  }
  LinSys sys;
  sys.m = m;
  sys.ell = ell;
  for (int mu = 0; mu < m; ++mu) {
    for (int eta = 0; eta <= m - mu; ++eta) sys.unknowns.emplace_back(mu, eta);
  }
  sys.matrix.resize(ell + 1);
  for (int r = 0; r <= ell; ++r) {
    sys.constant.push_back(table.at(m, r));
    for (const auto& [mu, eta] : sys.unknowns) sys.matrix[r].push_back(table.at(mu, r - eta));
  }
  return sys;
}

std::optional<std::vector<FieldElem>> solvable(const LinSys& sys) {
  const int rows = sys.rows();
  const int cols = sys.columns();
  if (sys.constant.empty()) return std::vector<FieldElem>{};
  const FieldCtx& field = sys.constant.front().ctx();
  // Augmented matrix [A | -a].
  std::vector<std::vector<FieldElem>> a(rows);
  for (int r = 0; r < rows; ++r) {
    a[r] = sys.matrix[r];
    a[r].push_back(-sys.constant[r]);
  }
  std::vector<int> pivot_col;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r) {
      if (!a[r][c].is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    const FieldElem inv = a[rank][c].inv();
    for (int j = c; j <= cols; ++j) a[rank][j] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a[r][c].is_zero()) continue;
      const FieldElem factor = a[r][c];
      for (int j = c; j <= cols; ++j) a[r][j] -= factor * a[rank][j];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (int r = rank; r < rows; ++r) {
    if (!a[r][cols].is_zero()) return std::nullopt;
  }
  std::vector<FieldElem> u(cols, field.zero());
  for (int r = 0; r < rank; ++r) u[pivot_col[r]] = a[r][cols];
  return u;
}

namespace {

// deg f(X,0) = deg f, and alpha0 a simple root of f(X,0).
void check_hypotheses(const BiPoly& f, const FieldElem& alpha0) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "test applied to the zero polynomial");
  const int d = f.total_degree();
  const UniPoly u = f.restrict_y0();
  if (u.degree() != d) {
    throw Error(ErrorKind::DegreeDrop, "f(X,0) has degree " +
                                           (u.is_zero() ? std::string("-inf") : std::to_string(u.degree())) +
                                           " but f has total degree " + std::to_string(d));
  }
  if (!u(alpha0).is_zero()) throw Error(ErrorKind::NotARoot, alpha0.to_string() + " is not a root of f(X,0)");
  if (u.derivative()(alpha0).is_zero()) {
    throw Error(ErrorKind::NotSimple, alpha0.to_string() + " is a multiple root of f(X,0)");
  }
}

// Smallest m in 1..max_degree whose system is solvable.
std::optional<std::pair<int, std::vector<FieldElem>>> first_solvable(const BiPoly& f, const FieldElem& alpha0,
                                                                     int max_degree) {
  const int d = f.total_degree();
  const LiftedRoot root = lift_simple_root(f, alpha0, d * max_degree);
  const PowersTable table = powers_table(root, max_degree);
  for (int m = 1; m <= max_degree; ++m) {
    if (auto u = solvable(build_linear_system(table, m, d))) return std::make_pair(m, std::move(*u));
  }
  return std::nullopt;
}

}  // namespace

Certificate has_linear_factor_through(const BiPoly& f, const FieldElem& alpha0) {
  check_hypotheses(f, alpha0);
  const FieldCtx& field = alpha0.ctx();
  auto found = first_solvable(f, alpha0, 1);
  if (!found) return {CertKind::NoLinearFactorThrough, alpha0, std::nullopt, std::nullopt, std::nullopt};

  // Unknowns are (0,0), (0,1): g = X + u00 + u01 Y.
  const std::vector<FieldElem>& u = found->second;
  BiPoly g(field);
  g.set_coeff(1, 0, field.one());
  g.set_coeff(0, 0, u[0]);
  g.set_coeff(0, 1, u[1]);
  const BiPoly fe = (&f.ctx() == &field) ? f : f.map(embedding(f.ctx(), field));
  if (!exact_divide(fe, g) || !g.eval(alpha0, field.zero()).is_zero()) {
    throw Error(ErrorKind::Internal, "linear system solution " + g.to_string() + " does not divide f");
  }
  return {CertKind::LinearFactorThrough, alpha0, 1, u, std::move(g)};
}

Certificate absolute_irreducibility_at(const BiPoly& f, const FieldElem& alpha0) {
  check_hypotheses(f, alpha0);
  const int d = f.total_degree();
  if (d <= 1) return {CertKind::AbsolutelyIrreducible, alpha0, std::nullopt, std::nullopt, std::nullopt};
  auto found = first_solvable(f, alpha0, d - 1);
  if (!found) return {CertKind::AbsolutelyIrreducible, alpha0, std::nullopt, std::nullopt, std::nullopt};
  return {CertKind::Reducible, alpha0, found->first, std::move(found->second), std::nullopt};
}

Certificate absolute_irreducibility(const BiPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "test applied to the zero polynomial");
  const UniPoly u = f.restrict_y0();
  if (u.degree() != f.total_degree()) {
    throw Error(ErrorKind::DegreeDrop, "f(X,0) has degree " +
                                           (u.is_zero() ? std::string("-inf") : std::to_string(u.degree())) +
                                           " but f has total degree " + std::to_string(f.total_degree()));
  }
  const auto roots = simple_roots(u);
  if (roots.empty()) throw Error(ErrorKind::Squarefull, "f(X,0) = " + u.to_string() + " has no simple root");
  return absolute_irreducibility_at(f, roots.front().value);
}

BiPoly translate_y(const BiPoly& f, const FieldElem& c) {
  const FieldCtx& field = f.ctx();
  if (c.ctx_ptr() != &field) throw Error(ErrorKind::FieldMismatch, "shift outside F_" + field.spec());
  BiPoly r(field);
  if (f.is_zero()) return r;
  const int d = f.total_degree();
  // Binomial expansion of (Y + c)^j, row by row.
  std::vector<FieldElem> binom{field.one()};
  for (int j = 0; j <= d; ++j) {
    if (j > 0) {
      std::vector<FieldElem> next(j + 1, field.zero());
      for (int t = 0; t < j; ++t) {
        next[t] += binom[t] * c;
        next[t + 1] += binom[t];
      }
      binom = std::move(next);
    }
    for (int i = 0; i + j <= d; ++i) {
      const FieldElem a = f.coeff(i, j);
      if (a.is_zero()) continue;
      for (int t = 0; t <= j; ++t) r.add_to_coeff(i, t, a * binom[t]);
    }
  }
  return r;
}

ShiftedCertificate absolute_irreducibility_shifted(const BiPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "test applied to the zero polynomial");
  const FieldCtx& field = f.ctx();
  for (std::uint32_t i = 0; i < field.q(); ++i) {
    const FieldElem c = field.element(i);
    const BiPoly g = translate_y(f, c);
    const UniPoly u = g.restrict_y0();
    if (u.degree() != g.total_degree()) continue;
    const auto roots = simple_roots(u);
    if (roots.empty()) continue;
    return {absolute_irreducibility_at(g, roots.front().value), c};
  }
  return {absolute_irreducibility(f), field.zero()};
}

Certificate no_small_factor_certificate(const BiPoly& f, const FieldElem& alpha0, int max_degree) {
  check_hypotheses(f, alpha0);
  const int d = f.total_degree();
  if (max_degree < 1 || max_degree >= d) {
    throw Error(ErrorKind::DomainError,
                "degree bound " + std::to_string(max_degree) + " outside 1.." + std::to_string(d - 1));
  }
  auto found = first_solvable(f, alpha0, max_degree);
  if (!found) return {CertKind::NoSmallFactor, alpha0, std::nullopt, std::nullopt, std::nullopt};
  return {CertKind::SmallFactorPossible, alpha0, found->first, std::nullopt, std::nullopt};
}

}  // namespace pslice
