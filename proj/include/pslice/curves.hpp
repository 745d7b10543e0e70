#pragma once

// Projective plane curves over F_q: point and smooth-point counts, and the
// Hasse-Weil style lower bounds for smooth points on a component.

#include <cstdint>
#include <string>
#include <vector>

#include "pslice/poly.hpp"

namespace pslice {

class PlaneCurve {
 public:
  /// f must be a nonzero form in 3 variables.
  explicit PlaneCurve(MultiPoly f);
  const MultiPoly& f() const { return f_; }
  int degree() const { return f_.total_degree(); }

 private:
  MultiPoly f_;
};

struct PointCensus {
  std::uint64_t total = 0;
  std::uint64_t smooth = 0;
  std::uint64_t singular = 0;
  /// Normalized representatives (first nonzero coordinate 1), when requested.
  std::vector<std::vector<FieldElem>> points;
  std::vector<bool> point_singular;
};

/// Enumerates P^2(F_q). A point is on the curve when f vanishes and singular
/// when, in addition, all three partials vanish.
PointCensus smooth_point_census(const PlaneCurve& c, bool keep_points = false,
                                std::uint64_t budget = std::uint64_t{1} << 32);

/// "a:b:c"
std::string point_string(const std::vector<FieldElem>& pt);

struct CurveBoundInputs {
  std::int64_t q;
  int d;        // degree of the ambient curve
  int dprime;   // degree of the component
  int genus;    // geometric genus of its normalization
};

/// floor(sqrt(n)), exact.
std::uint64_t isqrt(std::uint64_t n);

/// q + 1 - g' floor(2 sqrt q) - (d'-1)(d'-2) + 2g' - (d - d')d'.
std::int64_t bound_smooth_points(const CurveBoundInputs& in);
/// q + 1 - g' floor(2 sqrt q) - (d'-1)(d'-2)/2 + g'.
std::int64_t bound_points_allowing_singular(std::int64_t q, int dprime, int genus);

/// Largest possible geometric genus (d'-1)(d'-2)/2.
int max_genus(int dprime);

/// True when the form f in m+1 >= 2 variables vanishes at every point of
/// P^m(F_q).
bool check_all_points_vanish(const MultiPoly& f, std::uint64_t budget = std::uint64_t{1} << 32);

}  // namespace pslice
