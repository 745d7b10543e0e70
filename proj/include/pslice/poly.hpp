#pragma once

// Polynomials over the fields of ff.hpp: dense univariate, dense triangular
// bivariate, sparse multivariate, and power series truncated in Y.

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pslice/ff.hpp"

namespace pslice {

/// Degree reported for the zero polynomial. Never equal to any real degree.
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

class MultiPoly;

class UniPoly {
 public:
  explicit UniPoly(const FieldCtx& ctx) : ctx_(&ctx) {}
  UniPoly(const FieldCtx& ctx, std::vector<FieldElem> coeffs);

  static UniPoly monomial(const FieldElem& c, int exponent);

  const FieldCtx& ctx() const { return *ctx_; }
  int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  FieldElem coeff(int i) const;
  FieldElem lead() const;
  const std::vector<FieldElem>& coeffs() const { return c_; }

  /// Evaluates at x; x may live in an extension of ctx().
  FieldElem operator()(const FieldElem& x) const;
  UniPoly derivative() const;
  UniPoly map(const Embedding& emb) const;
  UniPoly monic() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const FieldElem& c, const UniPoly& a);
  UniPoly operator-() const;
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

  std::string to_string(char var = 'X') const;

 private:
  void trim();

  const FieldCtx* ctx_;
  std::vector<FieldElem> c_;
};

/// Quotient and remainder; throws ZeroPolynomial on division by zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

/// Bivariate polynomial in X, Y stored as a dense triangle of total degree d.
class BiPoly {
 public:
  explicit BiPoly(const FieldCtx& ctx) : ctx_(&ctx) {}

  static BiPoly constant(const FieldElem& c);
  /// c X^i Y^j
  static BiPoly monomial(const FieldElem& c, int i, int j);

  const FieldCtx& ctx() const { return *ctx_; }
  int total_degree() const { return deg_; }
  bool is_zero() const { return deg_ == kZeroDegree; }
  FieldElem coeff(int i, int j) const;
  void set_coeff(int i, int j, const FieldElem& c);
  void add_to_coeff(int i, int j, const FieldElem& c);

  int degree_x() const;
  int degree_y() const;
  /// f(X, 0)
  UniPoly restrict_y0() const;
  /// Coefficient of X^i as a polynomial in Y.
  UniPoly coeff_x(int i) const;
  BiPoly partial_x() const;
  FieldElem eval(const FieldElem& x, const FieldElem& y) const;
  BiPoly map(const Embedding& emb) const;
  /// Every coefficient, in storage order (by total degree, then Y-degree).
  std::vector<FieldElem> coefficient_vector() const { return c_; }

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const FieldElem& c, const BiPoly& a);
  friend bool operator==(const BiPoly& a, const BiPoly& b);

  MultiPoly to_multi() const;
  static BiPoly from_multi(const MultiPoly& f);

  std::string to_string() const;

  static std::size_t slot(int i, int j) {
    const std::size_t s = static_cast<std::size_t>(i + j);
    return s * (s + 1) / 2 + static_cast<std::size_t>(j);
  }

 private:
  void grow(int degree);
  void trim();

  const FieldCtx* ctx_;
  int deg_ = kZeroDegree;
  std::vector<FieldElem> c_;
};

/// g | f test by division with remainder in graded-lex order (X > Y); a single
/// divisor is a Groebner basis of its ideal, so a nonzero remainder is a proof
/// of non-divisibility. Returns the quotient when it exists.
std::optional<BiPoly> exact_divide(const BiPoly& f, const BiPoly& g);

/// Res_X(f, g) as a polynomial in Y (Sylvester determinant, fraction-free
/// elimination over F[Y]).
UniPoly resultant_x(const BiPoly& f, const BiPoly& g);

using Exponents = std::vector<unsigned>;

class MultiPoly {
 public:
  MultiPoly(const FieldCtx& ctx, int nvars) : ctx_(&ctx), nvars_(nvars) {}

  static MultiPoly constant(const FieldCtx& ctx, int nvars, const FieldElem& c);
  static MultiPoly variable(const FieldCtx& ctx, int nvars, int index);

  const FieldCtx& ctx() const { return *ctx_; }
  int nvars() const { return nvars_; }
  int total_degree() const;
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, FieldElem>& terms() const { return terms_; }
  FieldElem coeff(const Exponents& e) const;
  void add_term(const Exponents& e, const FieldElem& c);

  FieldElem evaluate(std::span<const FieldElem> point) const;
  bool is_homogeneous() const;
  MultiPoly partial(int var) const;
  MultiPoly map(const Embedding& emb) const;
  MultiPoly pow(unsigned e) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const FieldElem& c, const MultiPoly& a);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

  /// Variables print as x0, x1, ... unless names are given.
  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  void check_compatible(const MultiPoly& o) const;

  const FieldCtx* ctx_;
  int nvars_;
  std::map<Exponents, FieldElem> terms_;
};

/// Sets variable `var` to 1 and removes it.
MultiPoly dehomogenize(const MultiPoly& f, int var);
/// Inserts a new variable at position `var` and homogenizes to `degree`.
MultiPoly homogenize(const MultiPoly& f, int var, int degree);

std::optional<MultiPoly> exact_divide(const MultiPoly& f, const MultiPoly& g);

/// Substitutes polynomial images for every variable of f.
MultiPoly compose(const MultiPoly& f, std::span<const MultiPoly> images);

struct Root {
  FieldElem value;
  const FieldCtx* field;  // F_{q^e}, the smallest extension containing the root
  int degree;             // e
};

/// Simple roots of u over extensions F_{q^e}, e <= deg u, one representative
/// (the smallest element) per Frobenius orbit over the base field, ordered by
/// e and then lexicographically. Empty exactly when u is squarefull.
std::vector<Root> simple_roots(const UniPoly& u);

/// Power series in Y with coefficients in one field, known modulo Y^order.
class TruncSeries {
 public:
  TruncSeries(const FieldCtx& ctx, int order);
  TruncSeries(const FieldCtx& ctx, int order, std::span<const FieldElem> coeffs);

  static TruncSeries from_poly(const UniPoly& u, int order);

  const FieldCtx& ctx() const { return *ctx_; }
  int order() const { return static_cast<int>(c_.size()); }
  FieldElem operator[](int i) const;
  void set(int i, const FieldElem& c);
  std::span<const FieldElem> coeffs() const { return c_; }
  bool is_zero() const;

  TruncSeries truncated(int order) const;
  /// Multiplicative inverse; the constant term must be nonzero.
  TruncSeries inverse() const;

  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const FieldElem& c, const TruncSeries& a);
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) = default;

  std::string to_string() const;

 private:
  const FieldCtx* ctx_;
  std::vector<FieldElem> c_;
};

// --- text grammar ----------------------------------------------------------

enum class VarStyle { None, XY, Indexed };

struct ParsedPoly {
  MultiPoly poly;
  VarStyle style;
};

/// Parses `+ - * ^` expressions with nonnegative integer literals, parentheses
/// and variables `X`, `Y` or `x0`..`x9`. Coefficients are reduced into the
/// prime subfield of ctx. For XY style the result has two variables; for
/// indexed style it has `nvars` variables (or one more than the largest index
/// seen when nvars is negative). Throws ParseError with a byte offset.
ParsedPoly parse_polynomial(std::string_view text, const FieldCtx& ctx, int nvars = -1);

BiPoly parse_bipoly(std::string_view text, const FieldCtx& ctx);

}  // namespace pslice
