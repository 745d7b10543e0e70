#pragma once

// Newton lifting of a simple root of f(X, 0) to a power series root of f, and
// the table of coefficients of its powers.

#include <vector>

#include "pslice/poly.hpp"

namespace pslice {

struct LiftedRoot {
  FieldElem alpha0;
  TruncSeries series;  // order ell + 1
  BiPoly f;            // f mapped into the field of alpha0
  int ell;
};

/// f(series, Y) as a series of the same order. f may be defined over a
/// subfield of the series field.
TruncSeries substitute_series(const BiPoly& f, const TruncSeries& series);

/// The unique series alpha with alpha(0) = alpha0 and f(alpha, Y) = 0 mod
/// Y^{ell+1}. Quadratic Newton iteration with precision doubling.
LiftedRoot lift_simple_root(const BiPoly& f, const FieldElem& alpha0, int ell);

class PowersTable {
 public:
  PowersTable(int max_power, int ell, std::vector<std::vector<FieldElem>> rows)
      : max_power_(max_power), ell_(ell), rows_(std::move(rows)) {}

  int max_power() const { return max_power_; }
  int ell() const { return ell_; }
  const FieldCtx& field() const { return rows_.front().front().ctx(); }

  /// Coefficient of Y^r in alpha^mu; zero for r < 0.
  FieldElem at(int mu, int r) const;
  const std::vector<FieldElem>& row(int mu) const { return rows_.at(mu); }

 private:
  int max_power_;
  int ell_;
  std::vector<std::vector<FieldElem>> rows_;
};

/// Rows mu = 0..max_power of the coefficients of alpha^mu up to Y^{d * max_power},
/// where d is the total degree of the lifted polynomial.
PowersTable powers_table(const LiftedRoot& root, int max_power);

}  // namespace pslice
