#include "pslice/ff.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace pslice {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::DegreeZero: return "DegreeZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::IncompatibleTower: return "IncompatibleTower";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotARoot: return "NotARoot";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::OrderTooSmall: return "OrderTooSmall";
    case ErrorKind::TableTooSmall: return "TableTooSmall";
    case ErrorKind::DegreeDrop: return "DegreeDrop";
    case ErrorKind::Squarefull: return "Squarefull";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NotAbsolutelyIrreducible: return "NotAbsolutelyIrreducible";
    case ErrorKind::HasLinearFactor: return "HasLinearFactor";
    case ErrorKind::ParityError: return "ParityError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

constexpr std::uint64_t kMaxOrder = 1ull << 31;
constexpr std::uint32_t kLogTableLimit = 1u << 20;
constexpr std::uint32_t kAddTableLimit = 1024;
constexpr std::uint32_t kEmbedTableLimit = 1u << 16;

using Coeffs = std::vector<std::uint32_t>;  // polynomial over F_p, constant first

std::uint32_t modinv_p(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - quot * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - quot * new_r);
  }
  if (r != 1) throw Error(ErrorKind::DivisionByZero, "element is not invertible");
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo m (m nonzero), over F_p.
Coeffs poly_rem(Coeffs a, const Coeffs& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = modinv_p(m.back(), p);
  while (a.size() > dm) {
    const std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - c * m[i] % p) % p);
    }
    trim(a);
  }
  return a;
}

Coeffs poly_mul(const Coeffs& a, const Coeffs& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  trim(r);
  return r;
}

Coeffs poly_sub(Coeffs a, const Coeffs& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

// Quotient and remainder of a by b (b nonzero).
std::pair<Coeffs, Coeffs> poly_divmod(Coeffs a, const Coeffs& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = modinv_p(b.back(), p);
  Coeffs quot(a.size() > db ? a.size() - db : 1, 0);
  while (!a.empty() && a.size() > db) {
    const std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    const std::size_t shift = a.size() - 1 - db;
    quot[shift] = static_cast<std::uint32_t>(c);
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - c * b[i] % p) % p);
    }
    trim(a);
  }
  trim(quot);
  return {quot, a};
}

bool is_irreducible_by_trial_division(const Coeffs& f, std::uint32_t p) {
  const int k = static_cast<int>(f.size()) - 1;
  for (int dd = 1; dd <= k / 2; ++dd) {
    std::uint64_t count = 1;
    for (int i = 0; i < dd; ++i) count *= p;
    Coeffs g(dd + 1, 0);
    g[dd] = 1;
    for (std::uint64_t n = 0; n < count; ++n) {
      std::uint64_t rest = n;
      for (int i = 0; i < dd; ++i) {
        g[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// FieldCtx

FieldCtx::FieldCtx(std::uint32_t p, int k, int id) : p_(p), k_(k), id_(id) {
  std::uint64_t q = 1;
  for (int i = 0; i < k; ++i) q *= p;
  q_ = static_cast<std::uint32_t>(q);
  pow_p_.assign(k, 1);
  for (int i = k - 2; i >= 0; --i) pow_p_[i] = pow_p_[i + 1] * p;
  one_ = pow_p_[0];

  if (k == 1) {
    modulus_ = {0, 1};
  } else {
    Coeffs cand(k + 1, 0);
    cand[k] = 1;
    for (std::uint32_t n = 0; n < q_; ++n) {
      // n read in base p with the constant term as the leading digit.
      std::uint32_t rest = n;
      for (int i = k - 1; i >= 0; --i) {
        cand[i] = rest % p;
        rest /= p;
      }
      if (cand[0] == 0) continue;  // divisible by t
      if (is_irreducible_by_trial_division(cand, p)) {
        modulus_ = cand;
        break;
      }
    }
    if (modulus_.empty()) throw Error(ErrorKind::Internal, "no irreducible modulus found");
  }

  if (k > 1 && q_ <= kLogTableLimit) {
    // Multiplicative group tables from a primitive element.
    const auto factors = prime_factors(q_ - 1);
    auto slow_pow = [&](std::uint32_t a, std::uint64_t e) {
      std::uint32_t r = one_;
      while (e) {
        if (e & 1) r = mul_slow(r, a);
        a = mul_slow(a, a);
        e >>= 1;
      }
      return r;
    };
    std::uint32_t prim = 0;
    for (std::uint32_t g = 1; g < q_; ++g) {
      bool ok = true;
      for (auto r : factors) {
        if (slow_pow(g, (q_ - 1) / r) == one_) {
          ok = false;
          break;
        }
      }
      if (ok) {
        prim = g;
        break;
      }
    }
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    std::uint32_t x = one_;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
      exp_[i] = x;
      log_[x] = i;
      x = mul_slow(x, prim);
    }
    neg_.resize(q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
      auto d = digits(a);
      for (auto& c : d) c = (p_ - c) % p_;
      neg_[a] = from_digits(d);
    }
    if (p_ != 2 && q_ <= kAddTableLimit) {
      add_.resize(static_cast<std::size_t>(q_) * q_);
      for (std::uint32_t a = 0; a < q_; ++a) {
        for (std::uint32_t b = 0; b < q_; ++b) {
          add_[static_cast<std::size_t>(a) * q_ + b] = static_cast<std::uint16_t>(add_slow(a, b));
        }
      }
    }
  }
}

FieldCtx::~FieldCtx() = default;

std::string FieldCtx::spec() const { return std::to_string(p_) + "^" + std::to_string(k_); }

std::string FieldCtx::modulus_string() const {
  std::string out;
  for (std::size_t i = 0; i < modulus_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(modulus_[i]);
  }
  return out;
}

std::vector<std::uint32_t> FieldCtx::digits(std::uint32_t index) const {
  std::vector<std::uint32_t> d(k_);
  for (int i = k_ - 1; i >= 0; --i) {
    d[i] = index % p_;
    index /= p_;
  }
  return d;
}

std::uint32_t FieldCtx::from_digits(std::span<const std::uint32_t> coeffs) const {
  std::uint32_t idx = 0;
  for (int i = 0; i < k_; ++i) {
    const std::uint32_t c = i < static_cast<int>(coeffs.size()) ? coeffs[i] % p_ : 0;
    idx += c * pow_p_[i];
  }
  return idx;
}

FieldElem FieldCtx::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {this, static_cast<std::uint32_t>(r) * pow_p_[0]};
}

FieldElem FieldCtx::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (static_cast<int>(coeffs.size()) > k_) {
    // Reduce modulo the modulus first.
    Coeffs c(coeffs.begin(), coeffs.end());
    for (auto& x : c) x %= p_;
    c = poly_rem(c, modulus_, p_);
    return {this, from_digits(c)};
  }
  return {this, from_digits(coeffs)};
}

FieldElem FieldCtx::element(std::uint32_t index) const {
  if (index >= q_) throw Error(ErrorKind::DomainError, "element index out of range");
  return {this, index};
}

FieldElem FieldCtx::generator() const {
  std::vector<std::uint32_t> t = {0, 1};
  return from_coeffs(t);
}

std::uint32_t FieldCtx::add_slow(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t r = 0;
  std::uint32_t w = 1;
  for (int i = 0; i < k_; ++i) {
    r += (a % p_ + b % p_) % p_ * w;
    a /= p_;
    b /= p_;
    w *= p_;
  }
  return r;
}

std::uint32_t FieldCtx::add(std::uint32_t a, std::uint32_t b) const {
  if (p_ == 2) return a ^ b;
  if (k_ == 1) {
    const std::uint64_t s = static_cast<std::uint64_t>(a) + b;
    return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
  }
  if (!add_.empty()) return add_[static_cast<std::size_t>(a) * q_ + b];
  return add_slow(a, b);
}

std::uint32_t FieldCtx::neg(std::uint32_t a) const {
  if (p_ == 2) return a;
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  if (!neg_.empty()) return neg_[a];
  auto d = digits(a);
  for (auto& c : d) c = (p_ - c) % p_;
  return from_digits(d);
}

std::uint32_t FieldCtx::mul_slow(std::uint32_t a, std::uint32_t b) const {
  auto pa = digits(a);
  auto pb = digits(b);
  trim(pa);
  trim(pb);
  auto r = poly_rem(poly_mul(pa, pb, p_), modulus_, p_);
  return from_digits(r);
}

std::uint32_t FieldCtx::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  if (k_ == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  if (!exp_.empty()) {
    std::uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  return mul_slow(a, b);
}

std::uint32_t FieldCtx::inv_euclid(std::uint32_t a) const {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero in F_" + spec());
  if (k_ == 1) return modinv_p(a, p_);
  // Extended Euclid: maintain s_i with s_i * a == r_i (mod modulus).
  Coeffs r0 = modulus_, r1 = digits(a);
  trim(r1);
  Coeffs s0, s1 = {1};
  while (r1.size() > 1) {
    auto [quot, rem] = poly_divmod(r0, r1, p_);
    Coeffs s2 = poly_sub(s0, poly_mul(quot, s1, p_), p_);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant since the modulus is irreducible.
  const std::uint32_t c = modinv_p(r1[0], p_);
  for (auto& x : s1) x = static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * c % p_);
  s1 = poly_rem(s1, modulus_, p_);
  return from_digits(s1);
}

std::uint32_t FieldCtx::inv(std::uint32_t a) const {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero in F_" + spec());
  if (k_ > 1 && !exp_.empty()) {
    const std::uint32_t l = log_[a];
    return exp_[l == 0 ? 0 : q_ - 1 - l];
  }
  return inv_euclid(a);
}

std::uint32_t FieldCtx::pow(std::uint32_t a, std::uint64_t e) const {
  if (e == 0) return one_;
  if (a == 0) return 0;
  if (k_ > 1 && !exp_.empty()) {
    const std::uint64_t l = static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1)) % (q_ - 1);
    return exp_[l];
  }
  std::uint32_t r = one_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

// ---------------------------------------------------------------------------
// FieldElem

bool FieldElem::is_one() const { return v_ == ctx_->one_index(); }

std::vector<std::uint32_t> FieldElem::coeffs() const { return ctx_->digits(v_); }

void FieldElem::check_same(const FieldElem& o) const {
  if (ctx_ != o.ctx_) {
    throw Error(ErrorKind::FieldMismatch,
                "arithmetic between F_" + (ctx_ ? ctx_->spec() : std::string("?")) + " and F_" +
                    (o.ctx_ ? o.ctx_->spec() : std::string("?")));
  }
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  check_same(o);
  v_ = ctx_->add(v_, o.v_);
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  check_same(o);
  v_ = ctx_->sub(v_, o.v_);
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  check_same(o);
  v_ = ctx_->mul(v_, o.v_);
  return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& o) {
  check_same(o);
  v_ = ctx_->mul(v_, ctx_->inv(o.v_));
  return *this;
}

FieldElem FieldElem::operator-() const { return {ctx_, ctx_->neg(v_)}; }

FieldElem FieldElem::inv() const { return {ctx_, ctx_->inv(v_)}; }

FieldElem FieldElem::pow(std::uint64_t e) const { return {ctx_, ctx_->pow(v_, e)}; }

std::string FieldElem::to_string() const {
  if (!ctx_) return "?";
  const auto c = coeffs();
  if (ctx_->k() == 1) return std::to_string(c[0]);
  std::string out;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c[i]);
      continue;
    }
    if (c[i] != 1) out += std::to_string(c[i]) + "*";
    out += 't';
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Registry of interned fields and embeddings

class FieldRegistry {
 public:
  static FieldRegistry& instance() {
    static FieldRegistry r;
    return r;
  }

  const FieldCtx& field(std::uint32_t p, int k) {
    std::lock_guard lock(mu_);
    auto key = std::make_pair(p, k);
    auto it = fields_.find(key);
    if (it != fields_.end()) return *it->second;
    auto ctx = std::unique_ptr<FieldCtx>(new FieldCtx(p, k, static_cast<int>(fields_.size())));
    auto& ref = *ctx;
    fields_.emplace(key, std::move(ctx));
    return ref;
  }

  const Embedding& embed(const FieldCtx& src, const FieldCtx& dst) {
    std::lock_guard lock(mu_);
    auto key = std::make_pair(src.id(), dst.id());
    auto it = embeddings_.find(key);
    if (it != embeddings_.end()) return *it->second;
    const std::uint32_t gen = choose_generator_image(src, dst);
    auto emb = std::unique_ptr<Embedding>(new Embedding(&src, &dst, gen));
    auto& ref = *emb;
    embeddings_.emplace(key, std::move(emb));
    return ref;
  }

 private:
  // Evaluates the representative polynomial of `x` (in src) at `gamma` (in dst).
  static std::uint32_t eval_at(const FieldCtx& src, std::uint32_t x, const FieldCtx& dst,
                               std::uint32_t gamma) {
    const auto c = src.digits(x);
    std::uint32_t acc = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
      acc = dst.add(dst.mul(acc, gamma), dst.from_int(c[i]).index());
    }
    return acc;
  }

  std::uint32_t choose_generator_image(const FieldCtx& src, const FieldCtx& dst) {
    if (&src == &dst) return src.generator().index();
    const int a = src.k();
    std::vector<int> sub_degrees;
    for (int c = 2; c < a; ++c) {
      if (a % c == 0) sub_degrees.push_back(c);
    }
    const auto mod = src.modulus();
    for (std::uint32_t gamma = 0; gamma < dst.q(); ++gamma) {
      std::uint32_t acc = 0;
      for (int i = static_cast<int>(mod.size()) - 1; i >= 0; --i) {
        acc = dst.add(dst.mul(acc, gamma), dst.from_int(mod[i]).index());
      }
      if (acc != 0) continue;
      bool compatible = true;
      for (int c : sub_degrees) {
        const FieldCtx& sub = field(src.p(), c);
        const std::uint32_t in_src = embed(sub, src).generator_image().index();
        const std::uint32_t in_dst = embed(sub, dst).generator_image().index();
        if (eval_at(src, in_src, dst, gamma) != in_dst) {
          compatible = false;
          break;
        }
      }
      if (compatible) return gamma;
    }
    throw Error(ErrorKind::Internal, "no compatible embedding F_" + src.spec() + " -> F_" + dst.spec());
  }

  std::recursive_mutex mu_;
  std::map<std::pair<std::uint32_t, int>, std::unique_ptr<FieldCtx>> fields_;
  std::map<std::pair<int, int>, std::unique_ptr<Embedding>> embeddings_;
};

const FieldCtx& field_create(std::uint32_t p, int k) {
  if (k < 1) throw Error(ErrorKind::DegreeZero, "extension degree must be >= 1, got " + std::to_string(k));
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  std::uint64_t q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxOrder) {
      throw Error(ErrorKind::BudgetExceeded,
                  "field order " + std::to_string(p) + "^" + std::to_string(k) + " is too large");
    }
  }
  return FieldRegistry::instance().field(p, k);
}

const FieldCtx& parse_field_spec(std::string_view spec) {
  auto parse_u64 = [&](std::string_view s) -> std::uint64_t {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw Error(ErrorKind::ParseError, "bad field specification '" + std::string(spec) + "'");
    }
    return v;
  };
  if (spec.starts_with("q=")) {
    std::uint64_t q = parse_u64(spec.substr(2));
    if (q < 2) throw Error(ErrorKind::NotPrime, "field order must be a prime power");
    std::uint64_t p = 2;
    while (q % p != 0) ++p;
    int k = 0;
    while (q % p == 0) {
      q /= p;
      ++k;
    }
    if (q != 1) throw Error(ErrorKind::NotPrime, "field order is not a prime power: '" + std::string(spec) + "'");
    return field_create(static_cast<std::uint32_t>(p), k);
  }
  const auto caret = spec.find('^');
  if (caret == std::string_view::npos) {
    return field_create(static_cast<std::uint32_t>(parse_u64(spec)), 1);
  }
  return field_create(static_cast<std::uint32_t>(parse_u64(spec.substr(0, caret))),
                      static_cast<int>(parse_u64(spec.substr(caret + 1))));
}

const FieldCtx& extension_of(const FieldCtx& base, int e) {
  if (e < 1) throw Error(ErrorKind::DegreeZero, "extension degree must be >= 1");
  return field_create(base.p(), base.k() * e);
}

const FieldCtx& common_extension(const FieldCtx& a, const FieldCtx& b) {
  if (a.p() != b.p()) throw Error(ErrorKind::IncompatibleTower, "different characteristics");
  return field_create(a.p(), std::lcm(a.k(), b.k()));
}

bool is_subfield(const FieldCtx& sub, const FieldCtx& super) {
  return sub.p() == super.p() && super.k() % sub.k() == 0;
}

// ---------------------------------------------------------------------------
// Embedding

Embedding::Embedding(const FieldCtx* src, const FieldCtx* dst, std::uint32_t gen_image)
    : src_(src), dst_(dst), gen_image_(gen_image) {
  if (src_->q() <= kEmbedTableLimit) {
    table_.resize(src_->q());
    for (std::uint32_t x = 0; x < src_->q(); ++x) {
      const auto c = src_->digits(x);
      std::uint32_t acc = 0;
      for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        acc = dst_->add(dst_->mul(acc, gen_image_), dst_->from_int(c[i]).index());
      }
      table_[x] = acc;
    }
  }
}

std::uint32_t Embedding::map_index(std::uint32_t index) const {
  if (!table_.empty()) return table_[index];
  const auto c = src_->digits(index);
  std::uint32_t acc = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    acc = dst_->add(dst_->mul(acc, gen_image_), dst_->from_int(c[i]).index());
  }
  return acc;
}

FieldElem Embedding::operator()(const FieldElem& e) const {
  if (e.ctx_ptr() != src_) {
    throw Error(ErrorKind::FieldMismatch, "element of F_" + e.ctx().spec() + " given to embedding from F_" +
                                              src_->spec());
  }
  return {dst_, map_index(e.index())};
}

const Embedding& embedding(const FieldCtx& source, const FieldCtx& target) {
  if (!is_subfield(source, target)) {
    throw Error(ErrorKind::IncompatibleTower,
                "F_" + source.spec() + " does not embed in F_" + target.spec());
  }
  return FieldRegistry::instance().embed(source, target);
}

FieldElem embed(const FieldElem& e, const Embedding& emb) { return emb(e); }

FieldElem lift_to(const FieldElem& e, const FieldCtx& target) {
  if (e.ctx_ptr() == &target) return e;
  return embedding(e.ctx(), target)(e);
}

std::vector<FieldElem> frobenius_orbit(const FieldElem& e, const FieldCtx& base) {
  if (!is_subfield(base, e.ctx())) {
    throw Error(ErrorKind::IncompatibleTower,
                "F_" + e.ctx().spec() + " is not an extension of F_" + base.spec());
  }
  std::vector<FieldElem> orbit{e};
  FieldElem x = e.pow(base.q());
  while (x != e) {
    orbit.push_back(x);
    x = x.pow(base.q());
  }
  return orbit;
}

int frobenius_period(std::span<const FieldElem> values, const FieldCtx& base) {
  if (values.empty()) return 1;
  const FieldCtx& ctx = values.front().ctx();
  if (!is_subfield(base, ctx)) {
    throw Error(ErrorKind::IncompatibleTower, "F_" + ctx.spec() + " is not an extension of F_" + base.spec());
  }
  const int ext = ctx.k() / base.k();
  std::vector<FieldElem> cur(values.begin(), values.end());
  for (int j = 1; j < ext; ++j) {
    bool fixed = true;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      cur[i] = cur[i].pow(base.q());
      if (cur[i] != values[i]) fixed = false;
    }
    if (fixed && ext % j == 0) return j;
  }
  return ext;
}

}  // namespace pslice
