#include <algorithm>

#include "pslice/poly.hpp"

namespace pslice {

TruncSeries::TruncSeries(const FieldCtx& ctx, int order) : ctx_(&ctx) {
  if (order < 0) throw Error(ErrorKind::DomainError, "negative series order " + std::to_string(order));
  c_.assign(static_cast<std::size_t>(order), ctx.zero());
}

TruncSeries::TruncSeries(const FieldCtx& ctx, int order, std::span<const FieldElem> coeffs) : TruncSeries(ctx, order) {
  const std::size_t n = std::min(coeffs.size(), c_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs[i].ctx_ptr() != ctx_) throw Error(ErrorKind::FieldMismatch, "coefficient outside F_" + ctx.spec());
    c_[i] = coeffs[i];
  }
}

TruncSeries TruncSeries::from_poly(const UniPoly& u, int order) {
  return TruncSeries(u.ctx(), order, u.coeffs());
}

FieldElem TruncSeries::operator[](int i) const {
  if (i < 0) return ctx_->zero();
  if (i >= order()) {
    throw Error(ErrorKind::OrderTooSmall,
                "coefficient " + std::to_string(i) + " of a series known modulo Y^" + std::to_string(order()));
  }
  return c_[i];
}

void TruncSeries::set(int i, const FieldElem& c) {
  if (i < 0 || i >= order()) throw Error(ErrorKind::OrderTooSmall, "index " + std::to_string(i) + " beyond order");
  if (c.ctx_ptr() != ctx_) throw Error(ErrorKind::FieldMismatch, "coefficient outside F_" + ctx_->spec());
  c_[i] = c;
}

bool TruncSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const FieldElem& c) { return c.is_zero(); });
}

TruncSeries TruncSeries::truncated(int order) const {
  if (order > this->order()) {
    throw Error(ErrorKind::OrderTooSmall, "cannot extend a series known modulo Y^" + std::to_string(this->order()));
  }
  return TruncSeries(*ctx_, order, std::span<const FieldElem>(c_).first(order));
}

TruncSeries TruncSeries::inverse() const {
  if (c_.empty()) return *this;
  if (c_[0].is_zero()) throw Error(ErrorKind::DivisionByZero, "series with zero constant term is not invertible");
  const int n = order();
  TruncSeries r(*ctx_, n);
  const FieldElem inv0 = c_[0].inv();
  r.c_[0] = inv0;
  for (int k = 1; k < n; ++k) {
    FieldElem acc = ctx_->zero();
    for (int j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
    r.c_[k] = -(acc * inv0);
  }
  return r;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  if (o.ctx_ != ctx_) throw Error(ErrorKind::FieldMismatch, "series over different fields");
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  if (o.ctx_ != ctx_) throw Error(ErrorKind::FieldMismatch, "series over different fields");
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  if (a.ctx_ != b.ctx_) throw Error(ErrorKind::FieldMismatch, "series over different fields");
  const int n = std::min(a.order(), b.order());
  TruncSeries r(*a.ctx_, n);
  for (int i = 0; i < n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; i + j < n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

TruncSeries operator*(const FieldElem& c, const TruncSeries& a) {
  if (c.ctx_ptr() != a.ctx_) throw Error(ErrorKind::FieldMismatch, "scalar outside series field");
  TruncSeries r = a;
  for (auto& x : r.c_) x *= c;
  return r;
}

std::string TruncSeries::to_string() const {
  std::string out;
  for (int i = 0; i < order(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    const std::string s = c_[i].to_string();
    const std::string cs = s.find('+') != std::string::npos ? "(" + s + ")" : s;
    if (i == 0) {
      out += cs;
    } else {
      if (!c_[i].is_one()) out += cs + "*";
      out += i == 1 ? "Y" : "Y^" + std::to_string(i);
    }
  }
  if (out.empty()) out = "0";
  return out + " + O(Y^" + std::to_string(order()) + ")";
}

}  // namespace pslice
