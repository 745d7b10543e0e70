#pragma once

// Finite fields F_{p^k} with a deterministic modulus, and compatible
// embeddings between them.
//
// Elements are stored as an index into the field: the coefficient vector
// (c_0, ..., c_{k-1}) of the representative polynomial, read as a base-p
// number with c_0 the most significant digit. Integer order on indices is
// therefore the lexicographic order on coefficient vectors with the constant
// term most significant, which is the order used for every deterministic
// choice in the library (moduli, roots, orbit representatives).

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pslice/error.hpp"

namespace pslice {

class FieldCtx;

class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(const FieldCtx* ctx, std::uint32_t index) : ctx_(ctx), v_(index) {}

  const FieldCtx& ctx() const { return *ctx_; }
  const FieldCtx* ctx_ptr() const { return ctx_; }
  std::uint32_t index() const { return v_; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const;

  /// Coordinates over F_p, constant term first.
  std::vector<std::uint32_t> coeffs() const;

  FieldElem inv() const;
  FieldElem pow(std::uint64_t e) const;

  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o);

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
  FieldElem operator-() const;

  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.ctx_ == b.ctx_ && a.v_ == b.v_;
  }
  // Ordering is only meaningful inside one field; it is the lexicographic
  // order on coefficient vectors.
  friend std::strong_ordering operator<=>(const FieldElem& a, const FieldElem& b) {
    return a.v_ <=> b.v_;
  }

  /// Integers for prime fields, a polynomial in `t` otherwise.
  std::string to_string() const;

 private:
  void check_same(const FieldElem& o) const;

  const FieldCtx* ctx_ = nullptr;
  std::uint32_t v_ = 0;
};

class FieldCtx {
 public:
  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;
  ~FieldCtx();

  std::uint32_t p() const { return p_; }
  int k() const { return k_; }
  std::uint32_t q() const { return q_; }
  int id() const { return id_; }

  /// Monic modulus, constant term first, length k + 1.
  std::span<const std::uint32_t> modulus() const { return modulus_; }

  /// "p^k".
  std::string spec() const;
  /// Comma separated modulus coefficients, constant first.
  std::string modulus_string() const;

  FieldElem zero() const { return {this, 0}; }
  FieldElem one() const { return {this, one_}; }
  FieldElem from_int(std::int64_t v) const;
  FieldElem from_coeffs(std::span<const std::uint32_t> coeffs) const;
  FieldElem element(std::uint32_t index) const;
  /// The class of `t` modulo the modulus.
  FieldElem generator() const;

  // Raw index arithmetic; callers are responsible for range.
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t one_index() const { return one_; }

  /// Inverse computed by the extended Euclidean algorithm on the
  /// representative polynomials, independent of the lookup tables.
  std::uint32_t inv_euclid(std::uint32_t a) const;

  std::vector<std::uint32_t> digits(std::uint32_t index) const;
  std::uint32_t from_digits(std::span<const std::uint32_t> coeffs) const;

 private:
  friend class FieldRegistry;
  FieldCtx(std::uint32_t p, int k, int id);

  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t add_slow(std::uint32_t a, std::uint32_t b) const;

  std::uint32_t p_;
  int k_;
  std::uint32_t q_;
  int id_;
  std::uint32_t one_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> pow_p_;  // p^(k-1-i): weight of coefficient i

  // Lookup tables, present for small q.
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint16_t> add_;
};

/// Returns the canonical (interned) field of order p^k whose modulus is the
/// lexicographically smallest monic irreducible polynomial of degree k.
const FieldCtx& field_create(std::uint32_t p, int k);

/// Parses "p", "p^k" or "q=<integer>".
const FieldCtx& parse_field_spec(std::string_view spec);

/// Field of degree e over `base`, i.e. F_{p^{k e}}.
const FieldCtx& extension_of(const FieldCtx& base, int e);

/// Smallest field containing both (degree lcm over F_p).
const FieldCtx& common_extension(const FieldCtx& a, const FieldCtx& b);

/// True when `sub` is (canonically) a subfield of `super`.
bool is_subfield(const FieldCtx& sub, const FieldCtx& super);

class Embedding {
 public:
  const FieldCtx& source() const { return *src_; }
  const FieldCtx& target() const { return *dst_; }
  FieldElem generator_image() const { return {dst_, gen_image_}; }

  FieldElem operator()(const FieldElem& e) const;
  std::uint32_t map_index(std::uint32_t index) const;

 private:
  friend class FieldRegistry;
  Embedding(const FieldCtx* src, const FieldCtx* dst, std::uint32_t gen_image);

  const FieldCtx* src_;
  const FieldCtx* dst_;
  std::uint32_t gen_image_;
  std::vector<std::uint32_t> table_;
};

/// The canonical embedding F_{p^a} -> F_{p^b}: the generator goes to the
/// smallest root of the source modulus in the target that is compatible with
/// the canonical embeddings of every intermediate subfield of the source, so
/// that composites along any tower agree.
const Embedding& embedding(const FieldCtx& source, const FieldCtx& target);

FieldElem embed(const FieldElem& e, const Embedding& emb);

/// Maps `e` into `target` along the canonical embedding (identity when the
/// fields coincide).
FieldElem lift_to(const FieldElem& e, const FieldCtx& target);

/// [e, e^{q0}, e^{q0^2}, ...] up to the first repetition, q0 = |base|.
std::vector<FieldElem> frobenius_orbit(const FieldElem& e, const FieldCtx& base);

/// Smallest j >= 1 with x^{q0^j} = x for every x in `values` (q0 = |base|).
int frobenius_period(std::span<const FieldElem> values, const FieldCtx& base);

bool is_prime(std::uint64_t n);

}  // namespace pslice
