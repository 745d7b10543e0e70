#include <algorithm>

#include "pslice/poly.hpp"

namespace pslice {

UniPoly::UniPoly(const FieldCtx& ctx, std::vector<FieldElem> coeffs) : ctx_(&ctx), c_(std::move(coeffs)) {
  for (const auto& c : c_) {
    if (c.ctx_ptr() != ctx_) throw Error(ErrorKind::FieldMismatch, "coefficient outside F_" + ctx.spec());
  }
  trim();
}

UniPoly UniPoly::monomial(const FieldElem& c, int exponent) {
  std::vector<FieldElem> v(exponent + 1, c.ctx().zero());
  v[exponent] = c;
  return UniPoly(c.ctx(), std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldElem UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return ctx_->zero();
  return c_[i];
}

FieldElem UniPoly::lead() const {
  if (c_.empty()) throw Error(ErrorKind::ZeroPolynomial, "leading coefficient of zero polynomial");
  return c_.back();
}

FieldElem UniPoly::operator()(const FieldElem& x) const {
  const FieldCtx& target = x.ctx();
  const Embedding* emb = (&target == ctx_) ? nullptr : &embedding(*ctx_, target);
  FieldElem acc = target.zero();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * x + (emb ? (*emb)(*it) : *it);
  }
  return acc;
}

UniPoly UniPoly::derivative() const {
  std::vector<FieldElem> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(ctx_->from_int(static_cast<std::int64_t>(i)) * c_[i]);
  return UniPoly(*ctx_, std::move(d));
}

UniPoly UniPoly::map(const Embedding& emb) const {
  std::vector<FieldElem> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(emb(c));
  return UniPoly(emb.target(), std::move(v));
}

UniPoly UniPoly::monic() const {
  const FieldElem inv = lead().inv();
  return inv * *this;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.ctx_ != ctx_) throw Error(ErrorKind::FieldMismatch, "polynomials over different fields");
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), ctx_->zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.ctx_ != ctx_) throw Error(ErrorKind::FieldMismatch, "polynomials over different fields");
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), ctx_->zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly r(*ctx_);
  return r -= *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.ctx_ != b.ctx_) throw Error(ErrorKind::FieldMismatch, "polynomials over different fields");
  if (a.is_zero() || b.is_zero()) return UniPoly(*a.ctx_);
  std::vector<FieldElem> r(a.c_.size() + b.c_.size() - 1, a.ctx_->zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(*a.ctx_, std::move(r));
}

UniPoly operator*(const FieldElem& c, const UniPoly& a) {
  std::vector<FieldElem> r;
  r.reserve(a.c_.size());
  for (const auto& x : a.c_) r.push_back(c * x);
  return UniPoly(*a.ctx_, std::move(r));
}

std::string UniPoly::to_string(char var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    const std::string c = c_[i].to_string();
    const bool compound = c.find('+') != std::string::npos;
    if (i == 0) {
      out += compound ? "(" + c + ")" : c;
      continue;
    }
    if (!c_[i].is_one()) out += (compound ? "(" + c + ")" : c) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
  if (&a.ctx() != &b.ctx()) throw Error(ErrorKind::FieldMismatch, "polynomials over different fields");
  const FieldCtx& ctx = a.ctx();
  std::vector<FieldElem> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UniPoly(ctx), a};
  std::vector<FieldElem> quot(a.degree() - db + 1, ctx.zero());
  const FieldElem lead_inv = b.lead().inv();
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i].is_zero()) continue;
    const FieldElem c = rem[i] * lead_inv;
    quot[i - db] = c;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= c * b.coeffs()[j];
  }
  rem.resize(db);
  return {UniPoly(ctx, std::move(quot)), UniPoly(ctx, std::move(rem))};
}

}  // namespace pslice
