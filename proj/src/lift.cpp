#include "pslice/lift.hpp"

namespace pslice {

TruncSeries substitute_series(const BiPoly& f, const TruncSeries& series) {
  const FieldCtx& field = series.ctx();
  const BiPoly fe = (&f.ctx() == &field) ? f : f.map(embedding(f.ctx(), field));
  const int order = series.order();
  TruncSeries acc(field, order);
  for (int i = fe.degree_x(); i >= 0; --i) {
    acc = acc * series + TruncSeries::from_poly(fe.coeff_x(i), order);
  }
  return acc;
}

LiftedRoot lift_simple_root(const BiPoly& f, const FieldElem& alpha0, int ell) {
  if (ell < 0) throw Error(ErrorKind::DomainError, "negative lifting order " + std::to_string(ell));
  if (!is_subfield(f.ctx(), alpha0.ctx())) {
    throw Error(ErrorKind::IncompatibleTower,
                "root in F_" + alpha0.ctx().spec() + " is not over F_" + f.ctx().spec());
  }
  const FieldCtx& field = alpha0.ctx();
  BiPoly fe = (&f.ctx() == &field) ? f : f.map(embedding(f.ctx(), field));
  const BiPoly fx = fe.partial_x();
  const FieldElem zero = field.zero();
  if (!fe.eval(alpha0, zero).is_zero()) {
    throw Error(ErrorKind::NotARoot, alpha0.to_string() + " is not a root of f(X,0)");
  }
  if (fx.eval(alpha0, zero).is_zero()) {
    throw Error(ErrorKind::NotSimple, "df/dX vanishes at (" + alpha0.to_string() + ", 0)");
  }

  const int target = ell + 1;
  std::vector<FieldElem> coeffs{alpha0};
  int prec = 1;
  while (prec < target) {
    prec = std::min(2 * prec, target);
    TruncSeries alpha(field, prec, coeffs);
    const TruncSeries value = substitute_series(fe, alpha);
    const TruncSeries slope = substitute_series(fx, alpha);
    alpha -= value * slope.inverse();
    coeffs.assign(alpha.coeffs().begin(), alpha.coeffs().end());
  }
  TruncSeries series(field, target, coeffs);
  if (!substitute_series(fe, series).is_zero()) {
    throw Error(ErrorKind::Internal, "Newton iteration left a nonzero residual");
  }
  return {alpha0, std::move(series), std::move(fe), ell};
}

FieldElem PowersTable::at(int mu, int r) const {
  if (mu < 0 || mu > max_power_) throw Error(ErrorKind::TableTooSmall, "power " + std::to_string(mu) + " not tabulated");
  if (r < 0) return rows_[0][0].ctx().zero();
  if (r > ell_) throw Error(ErrorKind::TableTooSmall, "coefficient Y^" + std::to_string(r) + " not tabulated");
  return rows_[mu][r];
}

PowersTable powers_table(const LiftedRoot& root, int max_power) {
  const int d = root.f.total_degree();
  if (max_power < 1 || max_power > d) {
    throw Error(ErrorKind::DomainError,
                "power bound " + std::to_string(max_power) + " outside 1.." + std::to_string(d));
  }
  const int ell = d * max_power;
  if (root.ell < ell) {
    throw Error(ErrorKind::OrderTooSmall, "lifted to order " + std::to_string(root.ell) + " but " +
                                              std::to_string(ell) + " is required");
  }
  const FieldCtx& field = root.series.ctx();
  const TruncSeries alpha = root.series.truncated(ell + 1);
  std::vector<std::vector<FieldElem>> rows;
  TruncSeries power(field, ell + 1);
  power.set(0, field.one());
  for (int mu = 0; mu <= max_power; ++mu) {
    rows.emplace_back(power.coeffs().begin(), power.coeffs().end());
    power = power * alpha;
  }
  return PowersTable(max_power, ell, std::move(rows));
}

}  // namespace pslice
