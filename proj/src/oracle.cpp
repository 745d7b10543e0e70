#include "pslice/oracle.hpp"

#include <algorithm>

#include "pslice/parallel.hpp"

namespace pslice {

namespace {

// Monomials of total degree <= m in n variables, graded-lex descending
// (x0 > x1 > ...). The first `top` entries have degree exactly m.
struct MonomialList {
  std::vector<Exponents> mons;
  std::size_t top = 0;
};

void compositions(int n, unsigned s, Exponents& cur, int pos, std::vector<Exponents>& out) {
  if (pos == n - 1) {
    cur[pos] = s;
    out.push_back(cur);
    return;
  }
  for (int v = static_cast<int>(s); v >= 0; --v) {
    cur[pos] = static_cast<unsigned>(v);
    compositions(n, s - static_cast<unsigned>(v), cur, pos + 1, out);
  }
}

MonomialList monomials(int n, int m) {
  MonomialList list;
  Exponents cur(n);
  for (int s = m; s >= 0; --s) {
    compositions(n, static_cast<unsigned>(s), cur, 0, list.mons);
    if (s == m) list.top = list.mons.size();
  }
  return list;
}

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

// Search over candidates of degree m with exact field degree e. For leading
// monomial index lead, the candidate has coefficient 1 there, 0 on the
// degree-m monomials before it, and free coefficients on every monomial after.
struct Block {
  int m;
  int e;
  std::size_t lead;
  std::size_t free;
  std::uint64_t count;
};

std::vector<Block> blocks_for(const MonomialList& list, int m, int e, std::uint64_t Q, std::uint64_t cap) {
  std::vector<Block> out;
  for (std::size_t lead = 0; lead < list.top; ++lead) {
    const std::size_t free = list.mons.size() - lead - 1;
    out.push_back({m, e, lead, free, saturating_pow(Q, free, cap)});
  }
  return out;
}

// Coefficient vector for candidate `index` of a block, over ext.
std::vector<FieldElem> decode(const Block& b, std::uint64_t index, const FieldCtx& ext, std::size_t nmons) {
  std::vector<FieldElem> c(nmons, ext.zero());
  c[b.lead] = ext.one();
  for (std::size_t t = nmons; t-- > b.lead + 1;) {
    c[t] = ext.element(static_cast<std::uint32_t>(index % ext.q()));
    index /= ext.q();
  }
  return c;
}

// Keeps a candidate only if e is its exact field degree and its coefficient
// vector is the smallest among its Frobenius conjugates.
bool orbit_representative(const std::vector<FieldElem>& c, const FieldCtx& base, int e) {
  if (e == 1) return true;
  const std::uint64_t q0 = base.q();
  std::vector<FieldElem> conj = c;
  for (int j = 1; j < e; ++j) {
    for (auto& x : conj) x = x.pow(q0);
    if (conj == c) return false;  // defined over a smaller field
    if (std::lexicographical_compare(conj.begin(), conj.end(), c.begin(), c.end())) return false;
  }
  return true;
}

// Generic exhaustive search. Divides(ext, coeffs) decides whether the
// candidate divides f. Returns accepted candidates, in enumeration order, for
// every (m, e) pair in the plan; with first_only, stops after the first
// degree that yields a divisor.
template <class Divides>
std::vector<std::tuple<int, int, std::vector<FieldElem>>> search(const FieldCtx& base, int nvars, int d,
                                                                 int max_degree, bool first_only,
                                                                 const OracleOptions& opts, std::uint64_t& used,
                                                                 Divides&& divides) {
  std::vector<std::tuple<int, int, std::vector<FieldElem>>> found;
  for (int m = 1; m <= max_degree; ++m) {
    const MonomialList list = monomials(nvars, m);
    // Plan and budget-check the whole degree before enumerating it.
    std::vector<Block> plan;
    for (int e = 1; e * m <= d; ++e) {
      const std::uint64_t Q = saturating_pow(base.q(), static_cast<std::size_t>(e), opts.budget);
      if (Q > opts.budget) {
        throw Error(ErrorKind::BudgetExceeded, "extension of degree " + std::to_string(e) + " over F_" + base.spec() +
                                                   " exceeds the candidate budget " + std::to_string(opts.budget));
      }
      for (const auto& b : blocks_for(list, m, e, Q, opts.budget)) {
        used += b.count;
        if (b.count > opts.budget || used > opts.budget) {
          throw Error(ErrorKind::BudgetExceeded, "oracle search for degree " + std::to_string(m) +
                                                     " divisors needs more than " + std::to_string(opts.budget) +
                                                     " candidates");
        }
        plan.push_back(b);
      }
    }
    bool any = false;
    for (const Block& b : plan) {
      const FieldCtx& ext = extension_of(base, b.e);
      const std::uint64_t chunk = std::max<std::uint64_t>(1, b.count / 64 + 1);
      auto parts = parallel_chunks<std::vector<std::vector<FieldElem>>>(
          b.count, chunk, opts.threads, [&](std::uint64_t lo, std::uint64_t hi) {
            std::vector<std::vector<FieldElem>> hits;
            for (std::uint64_t t = lo; t < hi; ++t) {
              auto c = decode(b, t, ext, list.mons.size());
              if (!orbit_representative(c, base, b.e)) continue;
              if (divides(ext, list.mons, c)) hits.push_back(std::move(c));
            }
            return hits;
          });
      for (auto& part : parts) {
        for (auto& c : part) {
          found.emplace_back(m, b.e, std::move(c));
          any = true;
        }
      }
    }
    if (first_only && any) break;
  }
  return found;
}

int effective_degree(const BiPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "oracle applied to the zero polynomial");
  return f.total_degree();
}

BiPoly to_bipoly(const FieldCtx& ext, const std::vector<Exponents>& mons, const std::vector<FieldElem>& c) {
  BiPoly g(ext);
  for (std::size_t t = 0; t < mons.size(); ++t) {
    if (!c[t].is_zero()) g.set_coeff(static_cast<int>(mons[t][0]), static_cast<int>(mons[t][1]), c[t]);
  }
  return g;
}

// f mapped into each extension it is tested over, built on first use.
class BiCache {
 public:
  explicit BiCache(const BiPoly& f) : f_(f) {}
  const BiPoly& over(const FieldCtx& ext) {
    std::lock_guard lock(mu_);
    for (auto& [ctx, g] : maps_) {
      if (ctx == &ext) return g;
    }
    maps_.emplace_back(&ext, &ext == &f_.ctx() ? f_ : f_.map(embedding(f_.ctx(), ext)));
    return maps_.back().second;
  }

 private:
  const BiPoly& f_;
  std::mutex mu_;
  std::vector<std::pair<const FieldCtx*, BiPoly>> maps_;
};

auto bi_divides(BiCache& cache) {
  return [&cache](const FieldCtx& ext, const std::vector<Exponents>& mons, const std::vector<FieldElem>& c) {
    return exact_divide(cache.over(ext), to_bipoly(ext, mons, c)).has_value();
  };
}

}  // namespace

OracleVerdict factors_up_to(const BiPoly& f, int max_degree, const OracleOptions& opts) {
  const int d = effective_degree(f);
  if (max_degree < 1 || max_degree > std::max(d, 1)) {
    throw Error(ErrorKind::DomainError, "degree bound " + std::to_string(max_degree) + " outside 1.." +
                                            std::to_string(std::max(d, 1)));
  }
  OracleVerdict v;
  v.max_degree = max_degree;
  BiCache cache(f);
  auto found = search(f.ctx(), 2, d, max_degree, false, opts, v.candidates, bi_divides(cache));
  for (auto& [m, e, c] : found) {
    const FieldCtx& ext = extension_of(f.ctx(), e);
    v.factors.push_back({to_bipoly(ext, monomials(2, m).mons, c), m, e});
  }
  if (!v.factors.empty()) {
    v.abs_irreducible = false;
  } else if (max_degree >= d / 2) {
    v.abs_irreducible = d >= 1;
  }
  return v;
}

std::optional<int> smallest_factor_degree(const BiPoly& f, int max_degree, const OracleOptions& opts) {
  const int d = effective_degree(f);
  BiCache cache(f);
  std::uint64_t used = 0;
  auto found = search(f.ctx(), 2, d, std::min(max_degree, d - 1), true, opts, used, bi_divides(cache));
  if (found.empty()) return std::nullopt;
  return std::get<0>(found.front());
}

bool oracle_absolutely_irreducible(const BiPoly& f, const OracleOptions& opts) {
  const int d = effective_degree(f);
  if (d < 1) return false;  // units are not irreducible
  return !smallest_factor_degree(f, d / 2, opts).has_value();
}

bool factor_through(const BiPoly& f, int max_degree, const FieldElem& x, const FieldElem& y,
                    const OracleOptions& opts) {
  if (&x.ctx() != &y.ctx()) throw Error(ErrorKind::FieldMismatch, "point coordinates in different fields");
  const int d = effective_degree(f);
  if (d < 1) return false;
  const OracleVerdict v = factors_up_to(f, std::min(max_degree, d), opts);
  const std::uint64_t q0 = f.ctx().q();
  for (const auto& fac : v.factors) {
    const FieldCtx& common = common_extension(fac.factor.ctx(), x.ctx());
    const BiPoly g = fac.factor.map(embedding(fac.factor.ctx(), common));
    // Some conjugate of g vanishes at the point iff g vanishes at some
    // conjugate of the point.
    const FieldElem px = lift_to(x, common), py = lift_to(y, common);
    FieldElem cx = px, cy = py;
    do {
      if (g.eval(cx, cy).is_zero()) return true;
      cx = cx.pow(q0);
      cy = cy.pow(q0);
    } while (cx != px || cy != py);
  }
  return false;
}

bool linear_factor_through(const BiPoly& f, const FieldElem& x, const FieldElem& y, const OracleOptions& opts) {
  return factor_through(f, 1, x, y, opts);
}

std::optional<int> smallest_factor_degree(const MultiPoly& f, int max_degree, const OracleOptions& opts) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "oracle applied to the zero polynomial");
  const int d = f.total_degree();
  std::mutex mu;
  std::vector<std::pair<const FieldCtx*, MultiPoly>> maps;
  auto over = [&](const FieldCtx& ext) -> const MultiPoly& {
    std::lock_guard lock(mu);
    for (auto& [ctx, g] : maps) {
      if (ctx == &ext) return g;
    }
    maps.emplace_back(&ext, &ext == &f.ctx() ? f : f.map(embedding(f.ctx(), ext)));
    return maps.back().second;
  };
  auto divides = [&](const FieldCtx& ext, const std::vector<Exponents>& mons, const std::vector<FieldElem>& c) {
    MultiPoly g(ext, f.nvars());
    for (std::size_t t = 0; t < mons.size(); ++t) g.add_term(mons[t], c[t]);
    return exact_divide(over(ext), g).has_value();
  };
  std::uint64_t used = 0;
  auto found = search(f.ctx(), f.nvars(), d, std::min(max_degree, d - 1), true, opts, used, divides);
  if (found.empty()) return std::nullopt;
  return std::get<0>(found.front());
}

bool oracle_absolutely_irreducible(const MultiPoly& f, const OracleOptions& opts) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "oracle applied to the zero polynomial");
  const int d = f.total_degree();
  if (d < 1) return false;
  return !smallest_factor_degree(f, d / 2, opts).has_value();
}

bool oracle_has_linear_factor(const MultiPoly& f, const OracleOptions& opts) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "oracle applied to the zero polynomial");
  if (f.total_degree() < 1) return false;
  if (f.total_degree() == 1) return true;
  return smallest_factor_degree(f, 1, opts) == 1;
}

}  // namespace pslice
