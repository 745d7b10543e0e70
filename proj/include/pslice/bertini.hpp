#pragma once

// Plane slices f(X + v1, w2 X + z2 Y + v2, ..., wn X + zn Y + vn) of an
// n-variate polynomial, closed-form bounds on how many slices can fail to be
// generic, and exhaustive censuses that count the failures.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pslice/oracle.hpp"
#include "pslice/poly.hpp"

namespace pslice {

struct SliceParams {
  std::vector<FieldElem> v;  // v1..vn
  std::vector<FieldElem> w;  // w2..wn
  std::vector<FieldElem> z;  // z2..zn

  int n() const { return static_cast<int>(v.size()); }
  std::string to_string() const;
};

BiPoly slice(const MultiPoly& f, const SliceParams& params);
/// The point of affine n-space that (x, y) parametrizes.
std::vector<FieldElem> slice_point(const SliceParams& params, const FieldElem& x, const FieldElem& y);

// --- bounds -----------------------------------------------------------------

/// Coefficient c with at most c q^{3n-3} slices not absolutely irreducible:
/// (3d^4 - 2d^3 + 13d^2 + 2d) / 8.
std::int64_t bound_not_abs_irreducible(int d);
/// Coefficient c with at most c q^{3n-3} slices having a factor of degree
/// <= D: (d/8)(-D^4 + 4D^3 d - 6D^3 + 12D^2 d - 11D^2 + 8Dd - 6D + 16d).
std::int64_t bound_small_factor(int d, int D);
/// Degree bound for the minor attached to one root, closed form.
std::int64_t per_root_degree(int d, int D);
/// The same bound as the sum over j < (D+1)(D+2)/2 of (dD - j).
std::int64_t per_root_degree_sum(int d, int D);
/// 2d^2.
std::int64_t genericity_degree(int d);
/// 3d - 3: at most (3d-3) q^{n-2} directions z give a linear factor through
/// the marked point.
std::int64_t bound_linear_factor(int d);

struct BoundReport {
  int d = 0;
  int D = 0;
  std::int64_t lift_order = 0;
  std::int64_t deg_genericity = 0;
  std::int64_t deg_per_root = 0;
  std::int64_t small_factor = 0;
  std::int64_t not_abs_irreducible = 0;
  std::int64_t linear_through_point = 0;
};

BoundReport bound_report(int d, int D);

// --- censuses ---------------------------------------------------------------

struct CensusOptions {
  std::uint64_t tuple_budget = std::uint64_t{1} << 32;
  OracleOptions oracle;          // per-slice oracle budget; threads unused
  int threads = 1;
  bool with_oracle = false;
  bool certify_input = true;     // oracle check of the input hypothesis
  std::uint64_t progress_every = std::uint64_t{1} << 20;
  std::function<void(std::uint64_t done, std::uint64_t total)> progress;
  /// Called once per tuple, in odometer order, after the census finishes.
  std::function<void(const std::string& line)> log;
};

struct CensusReport {
  const FieldCtx* field = nullptr;
  int n = 0;
  int d = 0;
  int D = 0;
  std::uint64_t total = 0;
  std::uint64_t bad_algorithm = 0;
  std::optional<std::uint64_t> bad_oracle;
  std::uint64_t mismatches = 0;             // tuples where the two verdicts differ
  std::optional<std::string> first_mismatch;
  std::uint64_t flagged = 0;                // preconditions failed, oracle decided
  std::uint64_t degenerate = 0;             // slice degree below d
  std::int64_t bound_coefficient = 0;
  std::uint64_t bound_value = 0;            // saturating
  bool bound_vacuous = false;
  bool bound_respected = true;              // bad <= min(bound, total)
};

/// Counts tuples (v, w, z) in F_q^{3n-2} whose slice is bad: of degree below
/// d, or with a factor of degree <= D over the closure (D = d - 1: not
/// absolutely irreducible). f must be absolutely irreducible of degree >= 2.
CensusReport census_full(const MultiPoly& f, int D, const CensusOptions& opts = {});

struct BaseLine {
  SliceParams params;  // v0, w0 and z = 0
  Root root;           // first simple root of f_{v0,w0,z}(X, 0)
};

/// First (v0, w0) in odometer order for which f_{v0,w0,z}(X, 0) has degree d
/// and a simple root.
std::optional<BaseLine> find_base_line(const MultiPoly& f);

/// Counts z in F_q^{n-1} for which f_{v0,w0,z} has a linear factor through
/// (alpha0, 0), against the bound (3d-3) q^{n-2}. f must have no linear factor.
CensusReport census_z(const MultiPoly& f, const std::vector<FieldElem>& v0, const std::vector<FieldElem>& w0,
                      const FieldElem& alpha0, const CensusOptions& opts = {});

}  // namespace pslice
