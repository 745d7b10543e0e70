#include "pslice/curves.hpp"

namespace pslice {

PlaneCurve::PlaneCurve(MultiPoly f) : f_(std::move(f)) {
  if (f_.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "plane curve defined by the zero form");
  if (f_.nvars() != 3) {
    throw Error(ErrorKind::ArityMismatch, "plane curve needs 3 variables, got " + std::to_string(f_.nvars()));
  }
  if (!f_.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, f_.to_string() + " is not homogeneous");
}

namespace {

// Calls fn on every normalized point of P^m(F_q): points whose first nonzero
// coordinate is 1, by position of that coordinate and then odometer order.
template <class Fn>
void for_each_projective_point(const FieldCtx& field, int m, Fn&& fn) {
  const std::uint32_t q = field.q();
  std::vector<FieldElem> pt(m + 1, field.zero());
  for (int lead = 0; lead <= m; ++lead) {
    for (int i = 0; i < lead; ++i) pt[i] = field.zero();
    pt[lead] = field.one();
    const int free = m - lead;
    std::uint64_t count = 1;
    for (int i = 0; i < free; ++i) count *= q;
    for (std::uint64_t t = 0; t < count; ++t) {
      std::uint64_t x = t;
      for (int i = m; i > lead; --i) {
        pt[i] = field.element(static_cast<std::uint32_t>(x % q));
        x /= q;
      }
      if (!fn(pt)) return;
    }
  }
}

void check_budget(const FieldCtx& field, int m, std::uint64_t budget) {
  std::uint64_t count = 1;
  for (int i = 0; i <= m; ++i) {
    if (count > budget / field.q()) {
      throw Error(ErrorKind::BudgetExceeded, "enumerating P^" + std::to_string(m) + "(F_" + field.spec() +
                                                 ") exceeds the budget " + std::to_string(budget));
    }
    count *= field.q();
  }
}

}  // namespace

PointCensus smooth_point_census(const PlaneCurve& c, bool keep_points, std::uint64_t budget) {
  const MultiPoly& f = c.f();
  const FieldCtx& field = f.ctx();
  check_budget(field, 2, budget);
  const MultiPoly partials[3] = {f.partial(0), f.partial(1), f.partial(2)};
  PointCensus out;
  for_each_projective_point(field, 2, [&](const std::vector<FieldElem>& pt) {
    if (!f.evaluate(pt).is_zero()) return true;
    bool singular = true;
    for (const auto& g : partials) {
      if (!g.evaluate(pt).is_zero()) {
        singular = false;
        break;
      }
    }
    ++out.total;
    ++(singular ? out.singular : out.smooth);
    if (keep_points) {
      out.points.push_back(pt);
      out.point_singular.push_back(singular);
    }
    return true;
  });
  return out;
}

std::string point_string(const std::vector<FieldElem>& pt) {
  std::string s;
  for (std::size_t i = 0; i < pt.size(); ++i) s += (i ? ":" : "") + pt[i].to_string();
  return s;
}

std::uint64_t isqrt(std::uint64_t n) {
  std::uint64_t lo = 0, hi = std::min<std::uint64_t>(n, 4294967295u) + 1;
  // Invariant: lo^2 <= n < hi^2.
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (mid * mid <= n) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

int max_genus(int dprime) {
  if (dprime < 1) throw Error(ErrorKind::DomainError, "component degree must be positive");
  return (dprime - 1) * (dprime - 2) / 2;
}

namespace {

void check_inputs(std::int64_t q, int d, int dprime, int genus) {
  if (q < 2) throw Error(ErrorKind::DomainError, "field order " + std::to_string(q) + " is below 2");
  if (dprime < 1 || dprime > d) {
    throw Error(ErrorKind::DomainError,
                "component degree " + std::to_string(dprime) + " outside 1.." + std::to_string(d));
  }
  if (genus < 0 || genus > max_genus(dprime)) {
    throw Error(ErrorKind::DomainError, "genus " + std::to_string(genus) + " outside 0.." +
                                            std::to_string(max_genus(dprime)) + " for degree " +
                                            std::to_string(dprime));
  }
}

}  // namespace

std::int64_t bound_smooth_points(const CurveBoundInputs& in) {
  check_inputs(in.q, in.d, in.dprime, in.genus);
  const std::int64_t s = static_cast<std::int64_t>(isqrt(4 * static_cast<std::uint64_t>(in.q)));
  const std::int64_t dp = in.dprime, g = in.genus;
  return in.q + 1 - g * s - (dp - 1) * (dp - 2) + 2 * g - (in.d - dp) * dp;
}

std::int64_t bound_points_allowing_singular(std::int64_t q, int dprime, int genus) {
  check_inputs(q, dprime, dprime, genus);
  const std::int64_t dp = dprime, g = genus;
  const std::int64_t arith = (dp - 1) * (dp - 2);
  if (arith % 2 != 0) throw Error(ErrorKind::ParityError, "(d'-1)(d'-2) = " + std::to_string(arith) + " is odd");
  const std::int64_t s = static_cast<std::int64_t>(isqrt(4 * static_cast<std::uint64_t>(q)));
  return q + 1 - g * s - arith / 2 + g;
}

bool check_all_points_vanish(const MultiPoly& f, std::uint64_t budget) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "the zero form vanishes everywhere trivially");
  if (f.nvars() < 2) throw Error(ErrorKind::ArityMismatch, "need at least 2 variables");
  if (!f.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, f.to_string() + " is not homogeneous");
  const int m = f.nvars() - 1;
  check_budget(f.ctx(), m, budget);
  bool all = true;
  for_each_projective_point(f.ctx(), m, [&](const std::vector<FieldElem>& pt) {
    if (!f.evaluate(pt).is_zero()) all = false;
    return all;
  });
  return all;
}

}  // namespace pslice
