#include <algorithm>

#include "pslice/poly.hpp"

namespace pslice {

namespace {

std::string coeff_text(const FieldElem& c, bool constant_term) {
  const std::string s = c.to_string();
  const bool compound = s.find('+') != std::string::npos;
  if (constant_term) return compound ? "(" + s + ")" : s;
  if (c.is_one()) return "";
  return (compound ? "(" + s + ")" : s) + "*";
}

}  // namespace

BiPoly BiPoly::constant(const FieldElem& c) {
  BiPoly r(c.ctx());
  r.set_coeff(0, 0, c);
  return r;
}

BiPoly BiPoly::monomial(const FieldElem& c, int i, int j) {
  BiPoly r(c.ctx());
  r.set_coeff(i, j, c);
  return r;
}

void BiPoly::grow(int degree) {
  if (degree <= deg_ && deg_ != kZeroDegree) return;
  c_.resize(slot(0, degree + 1), ctx_->zero());
  deg_ = degree;
}

void BiPoly::trim() {
  while (deg_ != kZeroDegree) {
    bool empty = true;
    for (int j = 0; j <= deg_; ++j) {
      if (!c_[slot(deg_ - j, j)].is_zero()) {
        empty = false;
        break;
      }
    }
    if (!empty) break;
    --deg_;
    if (deg_ < 0) deg_ = kZeroDegree;
    c_.resize(deg_ == kZeroDegree ? 0 : slot(0, deg_ + 1));
  }
}

FieldElem BiPoly::coeff(int i, int j) const {
  if (i < 0 || j < 0 || deg_ == kZeroDegree || i + j > deg_) return ctx_->zero();
  return c_[slot(i, j)];
}

void BiPoly::set_coeff(int i, int j, const FieldElem& c) {
  if (c.ctx_ptr() != ctx_) throw Error(ErrorKind::FieldMismatch, "coefficient outside F_" + ctx_->spec());
  if (deg_ == kZeroDegree || i + j > deg_) {
    if (c.is_zero()) return;
    grow(i + j);
  }
  c_[slot(i, j)] = c;
  if (c.is_zero() && i + j == deg_) trim();
}

void BiPoly::add_to_coeff(int i, int j, const FieldElem& c) { set_coeff(i, j, coeff(i, j) + c); }

int BiPoly::degree_x() const {
  int best = kZeroDegree;
  for (int s = 0; s <= deg_ && deg_ != kZeroDegree; ++s) {
    for (int j = 0; j <= s; ++j) {
      if (!c_[slot(s - j, j)].is_zero()) best = std::max(best, s - j);
    }
  }
  return best;
}

int BiPoly::degree_y() const {
  int best = kZeroDegree;
  for (int s = 0; s <= deg_ && deg_ != kZeroDegree; ++s) {
    for (int j = 0; j <= s; ++j) {
      if (!c_[slot(s - j, j)].is_zero()) best = std::max(best, j);
    }
  }
  return best;
}

UniPoly BiPoly::restrict_y0() const {
  std::vector<FieldElem> v;
  for (int i = 0; deg_ != kZeroDegree && i <= deg_; ++i) v.push_back(c_[slot(i, 0)]);
  return UniPoly(*ctx_, std::move(v));
}

UniPoly BiPoly::coeff_x(int i) const {
  std::vector<FieldElem> v;
  for (int j = 0; deg_ != kZeroDegree && i + j <= deg_; ++j) v.push_back(c_[slot(i, j)]);
  return UniPoly(*ctx_, std::move(v));
}

BiPoly BiPoly::partial_x() const {
  BiPoly r(*ctx_);
  for (int s = 1; deg_ != kZeroDegree && s <= deg_; ++s) {
    for (int j = 0; j < s; ++j) {
      const int i = s - j;
      const FieldElem c = c_[slot(i, j)];
      if (!c.is_zero()) r.add_to_coeff(i - 1, j, ctx_->from_int(i) * c);
    }
  }
  return r;
}

FieldElem BiPoly::eval(const FieldElem& x, const FieldElem& y) const {
  const FieldCtx& target = x.ctx();
  if (&y.ctx() != &target) throw Error(ErrorKind::FieldMismatch, "evaluation point spans two fields");
  const Embedding* emb = (&target == ctx_) ? nullptr : &embedding(*ctx_, target);
  if (deg_ == kZeroDegree) return target.zero();
  // Horner in X over Horner-in-Y coefficients.
  FieldElem acc = target.zero();
  for (int i = deg_; i >= 0; --i) {
    FieldElem ci = target.zero();
    for (int j = deg_ - i; j >= 0; --j) {
      const FieldElem c = c_[slot(i, j)];
      ci = ci * y + (emb ? (*emb)(c) : c);
    }
    acc = acc * x + ci;
  }
  return acc;
}

BiPoly BiPoly::map(const Embedding& emb) const {
  if (&emb.source() != ctx_) throw Error(ErrorKind::FieldMismatch, "embedding source differs from polynomial field");
  BiPoly r(emb.target());
  r.deg_ = deg_;
  r.c_.reserve(c_.size());
  for (const auto& c : c_) r.c_.push_back(emb(c));
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (o.ctx_ != ctx_) throw Error(ErrorKind::FieldMismatch, "polynomials over different fields");
  if (o.is_zero()) return *this;
  grow(o.deg_);
  for (std::size_t t = 0; t < o.c_.size(); ++t) c_[t] += o.c_[t];
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  if (o.ctx_ != ctx_) throw Error(ErrorKind::FieldMismatch, "polynomials over different fields");
  if (o.is_zero()) return *this;
  grow(o.deg_);
  for (std::size_t t = 0; t < o.c_.size(); ++t) c_[t] -= o.c_[t];
  trim();
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.ctx_ != b.ctx_) throw Error(ErrorKind::FieldMismatch, "polynomials over different fields");
  BiPoly r(*a.ctx_);
  if (a.is_zero() || b.is_zero()) return r;
  r.grow(a.deg_ + b.deg_);
  for (int sa = 0; sa <= a.deg_; ++sa) {
    for (int ja = 0; ja <= sa; ++ja) {
      const FieldElem ca = a.c_[BiPoly::slot(sa - ja, ja)];
      if (ca.is_zero()) continue;
      for (int sb = 0; sb <= b.deg_; ++sb) {
        for (int jb = 0; jb <= sb; ++jb) {
          const FieldElem cb = b.c_[BiPoly::slot(sb - jb, jb)];
          if (cb.is_zero()) continue;
          r.c_[BiPoly::slot(sa - ja + sb - jb, ja + jb)] += ca * cb;
        }
      }
    }
  }
  r.trim();
  return r;
}

BiPoly operator*(const FieldElem& c, const BiPoly& a) {
  BiPoly r = a;
  if (c.ctx_ptr() != a.ctx_) throw Error(ErrorKind::FieldMismatch, "scalar outside polynomial field");
  for (auto& x : r.c_) x *= c;
  r.trim();
  return r;
}

bool operator==(const BiPoly& a, const BiPoly& b) {
  return a.ctx_ == b.ctx_ && a.deg_ == b.deg_ && a.c_ == b.c_;
}

MultiPoly BiPoly::to_multi() const {
  MultiPoly m(*ctx_, 2);
  for (int s = 0; deg_ != kZeroDegree && s <= deg_; ++s) {
    for (int j = 0; j <= s; ++j) {
      const FieldElem c = c_[slot(s - j, j)];
      if (!c.is_zero()) m.add_term({static_cast<unsigned>(s - j), static_cast<unsigned>(j)}, c);
    }
  }
  return m;
}

BiPoly BiPoly::from_multi(const MultiPoly& f) {
  if (f.nvars() != 2) {
    throw Error(ErrorKind::ArityMismatch, "bivariate polynomial needs 2 variables, got " + std::to_string(f.nvars()));
  }
  BiPoly r(f.ctx());
  for (const auto& [e, c] : f.terms()) r.set_coeff(static_cast<int>(e[0]), static_cast<int>(e[1]), c);
  return r;
}

std::string BiPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int s = deg_; s >= 0; --s) {
    for (int j = 0; j <= s; ++j) {
      const int i = s - j;
      const FieldElem c = c_[slot(i, j)];
      if (c.is_zero()) continue;
      if (!out.empty()) out += " + ";
      if (s == 0) {
        out += coeff_text(c, true);
        continue;
      }
      out += coeff_text(c, false);
      std::string mono;
      if (i > 0) mono += i == 1 ? "X" : "X^" + std::to_string(i);
      if (j > 0) {
        if (!mono.empty()) mono += "*";
        mono += j == 1 ? "Y" : "Y^" + std::to_string(j);
      }
      out += mono;
    }
  }
  return out;
}

std::optional<BiPoly> exact_divide(const BiPoly& f, const BiPoly& g) {
  if (g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
  if (&f.ctx() != &g.ctx()) throw Error(ErrorKind::FieldMismatch, "polynomials over different fields");
  const FieldCtx& ctx = f.ctx();
  BiPoly quot(ctx);
  if (f.is_zero()) return quot;
  const int gs = g.total_degree();
  if (f.total_degree() < gs) return std::nullopt;

  // Leading monomial of g in graded-lex order with X > Y.
  int gi = 0, gj = 0;
  for (int j = 0; j <= gs; ++j) {
    if (!g.coeff(gs - j, j).is_zero()) {
      gi = gs - j;
      gj = j;
      break;
    }
  }
  const FieldElem lead_inv = g.coeff(gi, gj).inv();

  // Work on a dense copy of the remainder.
  const int fs = f.total_degree();
  std::vector<FieldElem> r(BiPoly::slot(0, fs + 1), ctx.zero());
  for (int s = 0; s <= fs; ++s) {
    for (int j = 0; j <= s; ++j) r[BiPoly::slot(s - j, j)] = f.coeff(s - j, j);
  }
  // Nonzero terms of g, for the inner update loop.
  std::vector<std::tuple<int, int, FieldElem>> gterms;
  for (int s = 0; s <= gs; ++s) {
    for (int j = 0; j <= s; ++j) {
      const FieldElem c = g.coeff(s - j, j);
      if (!c.is_zero()) gterms.emplace_back(s - j, j, c);
    }
  }

  for (int s = fs; s >= 0; --s) {
    for (int j = 0; j <= s; ++j) {
      const int i = s - j;
      const FieldElem c = r[BiPoly::slot(i, j)];
      if (c.is_zero()) continue;
      if (i < gi || j < gj) return std::nullopt;
      const FieldElem t = c * lead_inv;
      const int di = i - gi, dj = j - gj;
      quot.add_to_coeff(di, dj, t);
      for (const auto& [a, b, gc] : gterms) r[BiPoly::slot(a + di, b + dj)] -= t * gc;
    }
  }
  return quot;
}

namespace {

UniPoly exact_quotient(const UniPoly& a, const UniPoly& b) {
  auto [quot, rem] = divmod(a, b);
  if (!rem.is_zero()) throw Error(ErrorKind::Internal, "inexact division in fraction-free elimination");
  return quot;
}

}  // namespace

UniPoly resultant_x(const BiPoly& f, const BiPoly& g) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "resultant with the zero polynomial");
  if (&f.ctx() != &g.ctx()) throw Error(ErrorKind::FieldMismatch, "polynomials over different fields");
  const FieldCtx& ctx = f.ctx();
  const int m = f.degree_x();
  const int n = g.degree_x();
  const int size = m + n;
  UniPoly one(ctx, {ctx.one()});
  if (size == 0) return one;

  std::vector<std::vector<UniPoly>> mat(size, std::vector<UniPoly>(size, UniPoly(ctx)));
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i <= m; ++i) mat[r][r + (m - i)] = f.coeff_x(i);
  }
  for (int r = 0; r < m; ++r) {
    for (int i = 0; i <= n; ++i) mat[n + r][r + (n - i)] = g.coeff_x(i);
  }

  // Bareiss elimination over the integral domain F[Y].
  bool negate = false;
  UniPoly prev = one;
  for (int k = 0; k + 1 < size; ++k) {
    if (mat[k][k].is_zero()) {
      int pivot = -1;
      for (int r = k + 1; r < size; ++r) {
        if (!mat[r][k].is_zero()) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) return UniPoly(ctx);
      std::swap(mat[k], mat[pivot]);
      negate = !negate;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        mat[i][j] = exact_quotient(mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j], prev);
      }
      mat[i][k] = UniPoly(ctx);
    }
    prev = mat[k][k];
  }
  UniPoly det = mat[size - 1][size - 1];
  return negate ? -det : det;
}

}  // namespace pslice
