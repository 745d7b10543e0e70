#include <algorithm>
#include <numeric>

#include "pslice/poly.hpp"

namespace pslice {

namespace {

unsigned exponent_sum(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

// Graded lexicographic order, x0 > x1 > ...
bool grlex_less(const Exponents& a, const Exponents& b) {
  const unsigned sa = exponent_sum(a), sb = exponent_sum(b);
  if (sa != sb) return sa < sb;
  return a < b;
}

}  // namespace

MultiPoly MultiPoly::constant(const FieldCtx& ctx, int nvars, const FieldElem& c) {
  MultiPoly r(ctx, nvars);
  r.add_term(Exponents(nvars, 0), c);
  return r;
}

MultiPoly MultiPoly::variable(const FieldCtx& ctx, int nvars, int index) {
  if (index < 0 || index >= nvars) throw Error(ErrorKind::ArityMismatch, "variable index out of range");
  MultiPoly r(ctx, nvars);
  Exponents e(nvars, 0);
  e[index] = 1;
  r.add_term(e, ctx.one());
  return r;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return kZeroDegree;
  unsigned best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, exponent_sum(e));
  return static_cast<int>(best);
}

FieldElem MultiPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? ctx_->zero() : it->second;
}

void MultiPoly::add_term(const Exponents& e, const FieldElem& c) {
  if (static_cast<int>(e.size()) != nvars_) {
    throw Error(ErrorKind::ArityMismatch, "exponent vector of length " + std::to_string(e.size()) + " for " +
                                              std::to_string(nvars_) + " variables");
  }
  if (c.ctx_ptr() != ctx_) throw Error(ErrorKind::FieldMismatch, "coefficient outside F_" + ctx_->spec());
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FieldElem MultiPoly::evaluate(std::span<const FieldElem> point) const {
  if (static_cast<int>(point.size()) != nvars_) {
    throw Error(ErrorKind::ArityMismatch, "point of length " + std::to_string(point.size()) + " for " +
                                              std::to_string(nvars_) + " variables");
  }
  if (point.empty()) return terms_.empty() ? ctx_->zero() : terms_.begin()->second;
  const FieldCtx& target = point[0].ctx();
  for (const auto& x : point) {
    if (&x.ctx() != &target) throw Error(ErrorKind::FieldMismatch, "evaluation point spans two fields");
  }
  const Embedding* emb = (&target == ctx_) ? nullptr : &embedding(*ctx_, target);
  FieldElem acc = target.zero();
  for (const auto& [e, c] : terms_) {
    FieldElem t = emb ? (*emb)(c) : c;
    for (int v = 0; v < nvars_; ++v) {
      if (e[v]) t *= point[v].pow(e[v]);
    }
    acc += t;
  }
  return acc;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned s = exponent_sum(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return exponent_sum(t.first) == s; });
}

MultiPoly MultiPoly::partial(int var) const {
  if (var < 0 || var >= nvars_) throw Error(ErrorKind::ArityMismatch, "variable index out of range");
  MultiPoly r(*ctx_, nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    --d[var];
    r.add_term(d, ctx_->from_int(e[var]) * c);
  }
  return r;
}

MultiPoly MultiPoly::map(const Embedding& emb) const {
  MultiPoly r(emb.target(), nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, emb(c));
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = constant(*ctx_, nvars_, ctx_->one());
  MultiPoly base = *this;
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (o.ctx_ != ctx_) throw Error(ErrorKind::FieldMismatch, "polynomials over different fields");
  if (o.nvars_ != nvars_) throw Error(ErrorKind::ArityMismatch, "polynomials in different numbers of variables");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly r(*a.ctx_, a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int v = 0; v < a.nvars_; ++v) e[v] = ea[v] + eb[v];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly operator*(const FieldElem& c, const MultiPoly& a) {
  MultiPoly r(*a.ctx_, a.nvars_);
  for (const auto& [e, x] : a.terms_) r.add_term(e, c * x);
  return r;
}

std::string MultiPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Exponents, FieldElem>*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) { return grlex_less(b->first, a->first); });
  std::string out;
  for (const auto* t : order) {
    const auto& [e, c] = *t;
    if (!out.empty()) out += " + ";
    const std::string cs = c.to_string();
    const bool compound = cs.find('+') != std::string::npos;
    const std::string wrapped = compound ? "(" + cs + ")" : cs;
    std::string mono;
    for (int v = 0; v < nvars_; ++v) {
      if (!e[v]) continue;
      if (!mono.empty()) mono += "*";
      mono += v < static_cast<int>(names.size()) ? names[v] : "x" + std::to_string(v);
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
    }
    if (mono.empty()) {
      out += wrapped;
    } else {
      if (!c.is_one()) out += wrapped + "*";
      out += mono;
    }
  }
  return out;
}

MultiPoly dehomogenize(const MultiPoly& f, int var) {
  if (var < 0 || var >= f.nvars()) throw Error(ErrorKind::ArityMismatch, "variable index out of range");
  if (!f.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, f.to_string() + " is not homogeneous");
  MultiPoly r(f.ctx(), f.nvars() - 1);
  for (const auto& [e, c] : f.terms()) {
    Exponents d = e;
    d.erase(d.begin() + var);
    r.add_term(d, c);
  }
  return r;
}

MultiPoly homogenize(const MultiPoly& f, int var, int degree) {
  if (var < 0 || var > f.nvars()) throw Error(ErrorKind::ArityMismatch, "variable index out of range");
  if (!f.is_zero() && f.total_degree() > degree) {
    throw Error(ErrorKind::DomainError, "cannot homogenize degree " + std::to_string(f.total_degree()) +
                                            " polynomial to degree " + std::to_string(degree));
  }
  MultiPoly r(f.ctx(), f.nvars() + 1);
  for (const auto& [e, c] : f.terms()) {
    Exponents d = e;
    d.insert(d.begin() + var, static_cast<unsigned>(degree) - exponent_sum(e));
    r.add_term(d, c);
  }
  return r;
}

std::optional<MultiPoly> exact_divide(const MultiPoly& f, const MultiPoly& g) {
  if (g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
  if (&f.ctx() != &g.ctx() || f.nvars() != g.nvars()) {
    throw Error(ErrorKind::FieldMismatch, "incompatible polynomials in division");
  }
  const int n = f.nvars();
  auto leading = [](const MultiPoly& h) {
    auto it = std::max_element(h.terms().begin(), h.terms().end(),
                               [](const auto& a, const auto& b) { return grlex_less(a.first, b.first); });
    return *it;
  };
  const auto [glead, gcoeff] = leading(g);
  const FieldElem lead_inv = gcoeff.inv();
  MultiPoly quot(f.ctx(), n);
  MultiPoly rem = f;
  Exponents shift(n);
  while (!rem.is_zero()) {
    const auto [e, c] = leading(rem);
    for (int v = 0; v < n; ++v) {
      if (e[v] < glead[v]) return std::nullopt;
      shift[v] = e[v] - glead[v];
    }
    const FieldElem t = c * lead_inv;
    quot.add_term(shift, t);
    Exponents prod(n);
    for (const auto& [ge, gc] : g.terms()) {
      for (int v = 0; v < n; ++v) prod[v] = ge[v] + shift[v];
      rem.add_term(prod, -(t * gc));
    }
  }
  return quot;
}

MultiPoly compose(const MultiPoly& f, std::span<const MultiPoly> images) {
  if (static_cast<int>(images.size()) != f.nvars()) {
    throw Error(ErrorKind::ArityMismatch, "need one image per variable");
  }
  if (images.empty()) return f;
  const FieldCtx& ctx = images[0].ctx();
  const int m = images[0].nvars();
  // Cache powers of each image.
  std::vector<std::vector<MultiPoly>> powers(images.size());
  const int deg = std::max(f.total_degree(), 0);
  for (std::size_t v = 0; v < images.size(); ++v) {
    powers[v].push_back(MultiPoly::constant(ctx, m, ctx.one()));
    for (int e = 1; e <= deg; ++e) powers[v].push_back(powers[v].back() * images[v]);
  }
  const Embedding* emb = (&f.ctx() == &ctx) ? nullptr : &embedding(f.ctx(), ctx);
  MultiPoly r(ctx, m);
  for (const auto& [e, c] : f.terms()) {
    MultiPoly t = MultiPoly::constant(ctx, m, emb ? (*emb)(c) : c);
    for (std::size_t v = 0; v < images.size(); ++v) {
      if (e[v]) t = t * powers[v][e[v]];
    }
    r += t;
  }
  return r;
}

}  // namespace pslice
