#pragma once

// Brute-force ground truth: exhaustive search for divisors over extension
// fields by trial division. Shares no code with the lifting tests.

#include <cstdint>
#include <optional>
#include <vector>

#include "pslice/poly.hpp"

namespace pslice {

struct OracleOptions {
  std::uint64_t budget = std::uint64_t{1} << 24;  // candidate ceiling
  int threads = 1;
};

/// One divisor g of f, defined over F_{q^e} and over no smaller field. Its
/// Frobenius conjugates (e of them) divide f as well and are not listed.
struct OracleFactor {
  BiPoly factor;  // over F_{q^e}, graded-lex leading coefficient 1
  int degree;
  int field_degree;
};

struct OracleVerdict {
  int max_degree = 0;
  std::vector<OracleFactor> factors;
  /// Known only when the search covered every degree up to d/2.
  std::optional<bool> abs_irreducible;
  std::uint64_t candidates = 0;
};

/// All divisors of degree 1..max_degree (one per Frobenius orbit), sorted by
/// degree, field degree, then coefficients. A divisor of degree m over a field
/// of degree e with e*m > d cannot be irreducible, so only e <= d/m is searched.
OracleVerdict factors_up_to(const BiPoly& f, int max_degree, const OracleOptions& opts = {});

/// Smallest degree of a nonconstant divisor of f, if it is at most max_degree.
std::optional<int> smallest_factor_degree(const BiPoly& f, int max_degree, const OracleOptions& opts = {});

bool oracle_absolutely_irreducible(const BiPoly& f, const OracleOptions& opts = {});

/// True when a linear divisor of f over some F_{q^e}, e <= d, vanishes at
/// (x, y). The point may lie in any extension of the base field.
bool linear_factor_through(const BiPoly& f, const FieldElem& x, const FieldElem& y, const OracleOptions& opts = {});

/// True when a divisor of f of degree 1..max_degree (over any extension)
/// vanishes at (x, y).
bool factor_through(const BiPoly& f, int max_degree, const FieldElem& x, const FieldElem& y,
                    const OracleOptions& opts = {});

/// n-variate versions used to certify census inputs.
std::optional<int> smallest_factor_degree(const MultiPoly& f, int max_degree, const OracleOptions& opts = {});
bool oracle_absolutely_irreducible(const MultiPoly& f, const OracleOptions& opts = {});
bool oracle_has_linear_factor(const MultiPoly& f, const OracleOptions& opts = {});

}  // namespace pslice
