#pragma once

// Linear-system tests on a lifted root: a linear factor through (alpha0, 0),
// absolute irreducibility, and the exclusion of small-degree factors.

#include <optional>
#include <utility>
#include <vector>

#include "pslice/lift.hpp"

namespace pslice {

/// a_{m,r} + sum_{mu<m} sum_{eta<=m-mu} a_{mu,r-eta} u_{mu,eta} = 0, r = 0..ell.
struct LinSys {
  int m = 0;
  int ell = 0;
  std::vector<std::pair<int, int>> unknowns;     // (mu, eta), mu ascending then eta
  std::vector<std::vector<FieldElem>> matrix;    // (ell + 1) x unknowns
  std::vector<FieldElem> constant;               // a_{m,r}

  int rows() const { return ell + 1; }
  int columns() const { return static_cast<int>(unknowns.size()); }
};

/// The system for candidate degree m with order ell = d * m.
LinSys build_linear_system(const PowersTable& table, int m, int d);

/// A solution u (free unknowns set to zero) when the system is consistent.
std::optional<std::vector<FieldElem>> solvable(const LinSys& sys);

enum class CertKind {
  LinearFactorThrough,
  NoLinearFactorThrough,
  AbsolutelyIrreducible,
  Reducible,
  NoSmallFactor,
  SmallFactorPossible,
};

const char* to_string(CertKind kind);

struct Certificate {
  CertKind kind;
  FieldElem alpha0;
  std::optional<int> m;                          // smallest solvable degree
  std::optional<std::vector<FieldElem>> solution;
  std::optional<BiPoly> witness;                 // X + h0(Y), linear case only
};

/// Decides whether f has a factor X + h0(Y) over the closure vanishing at
/// (alpha0, 0). Requires deg f(X,0) = deg f and alpha0 a simple root of
/// f(X,0). A positive answer carries the divisor, checked by exact division.
Certificate has_linear_factor_through(const BiPoly& f, const FieldElem& alpha0);

/// Absolute irreducibility using the first simple root of f(X,0).
Certificate absolute_irreducibility(const BiPoly& f);
/// Same test at a chosen simple root.
Certificate absolute_irreducibility_at(const BiPoly& f, const FieldElem& alpha0);

/// f(X, Y + c).
BiPoly translate_y(const BiPoly& f, const FieldElem& c);

struct ShiftedCertificate {
  Certificate cert;     // for f(X, Y + shift)
  FieldElem shift;
};

/// Absolute irreducibility of f through the first line Y = c, c in the base
/// field in index order, on which f(X, c) keeps degree d and has a simple
/// root. Translation preserves absolute irreducibility. When no such c exists
/// the error for c = 0 is rethrown.
ShiftedCertificate absolute_irreducibility_shifted(const BiPoly& f);

/// NoSmallFactor when the systems for m = 1..max_degree are all insoluble:
/// then f has no factor of degree <= max_degree through (alpha0, 0) and no
/// factor of degree < max_degree at all. A solvable system yields a polynomial
/// of degree m sharing a factor with f; that factor need not pass through
/// (alpha0, 0), so no witness is attached.
Certificate no_small_factor_certificate(const BiPoly& f, const FieldElem& alpha0, int max_degree);

}  // namespace pslice
