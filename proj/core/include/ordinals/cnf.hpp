#pragma once

#include <utility>
#include <vector>

#include "ordinals/errors.hpp"
#include "ordinals/nat.hpp"
#include "ordinals/ordering.hpp"

namespace ord {

struct CnfTerm;

/// Cantor Normal Form value below epsilon_0: a finite sum
/// w^e1*c1 + ... + w^ek*ck with e1 > ... > ek (each exponent itself a Cnf)
/// and positive integer coefficients. The empty sum is 0.
///
/// This is the semantic layer: all order types and ranks of expressions are
/// measured in Cnf, independently of the structural orders on elements.
class Cnf {
 public:
  /// Zero.
  Cnf() = default;

  static Cnf from_nat(Nat n);
  static Cnf omega();
  /// w^exponent * coefficient; coefficient must be >= 1.
  static Cnf power(Cnf exponent, Nat coefficient = 1);
  /// Builds from explicit terms, checking the invariants.
  static Cnf from_terms(std::vector<CnfTerm> terms);

  bool is_zero() const { return terms_.empty(); }
  /// True iff the value is a natural number (0 or a single w^0 term).
  bool is_finite() const;
  /// The natural it denotes; only meaningful when is_finite().
  Nat finite_value() const;

  std::size_t term_count() const { return terms_.size(); }
  const CnfTerm& term(std::size_t i) const { return terms_[i]; }
  const Cnf& leading_exponent() const;
  const Nat& leading_coefficient() const;

  /// Splits into (limit part, finite part): the terms with exponent > 0 and
  /// the coefficient of the w^0 term if present.
  std::pair<Cnf, Nat> split_limit_finite() const;

  bool operator==(const Cnf& other) const;
  bool operator!=(const Cnf& other) const { return !(*this == other); }

 private:
  friend Cnf cnf_add(const Cnf&, const Cnf&);
  friend Cnf cnf_mul(const Cnf&, const Cnf&);
  friend Cnf cnf_exp(const Cnf&, const Cnf&);
  friend Cnf cnf_sub(const Cnf&, const Cnf&);
  friend std::pair<Cnf, Cnf> cnf_divmod(const Cnf&, const Cnf&);

  std::vector<CnfTerm> terms_;
};

struct CnfTerm {
  Cnf exponent;
  Nat coefficient;
};

inline Cnf cnf(Nat n) { return Cnf::from_nat(std::move(n)); }
inline Cnf cnf(unsigned long n) { return Cnf::from_nat(Nat(n)); }
inline Cnf cnf(int n) { return Cnf::from_nat(Nat(n)); }

/// Total order on CNF values: term lists compared lexicographically by
/// (exponent, coefficient); a proper prefix is smaller.
Ordering cnf_cmp(const Cnf& x, const Cnf& y);

/// Ordinal addition: terms of x below the leading exponent of y are
/// absorbed; equal leading exponents merge coefficients.
Cnf cnf_add(const Cnf& x, const Cnf& y);

/// Ordinal multiplication, distributing over the right argument's terms.
Cnf cnf_mul(const Cnf& x, const Cnf& y);

/// Ordinal exponentiation for base >= 1; throws Error(ZeroBase) on base 0.
Cnf cnf_exp(const Cnf& x, const Cnf& y);

/// x + 1.
Cnf cnf_succ(const Cnf& x);

/// Left subtraction: the unique g with x + g = y, which is also the greatest
/// g with x + g <= y. Throws Error(Underflow) when x > y.
Cnf cnf_sub(const Cnf& x, const Cnf& y);

/// Division with remainder by x >= 1: returns (q, r) with y = x*q + r and
/// r < x; q is the greatest g with x*g <= y. Throws Error(DivisionByZero).
std::pair<Cnf, Cnf> cnf_divmod(const Cnf& x, const Cnf& y);

/// Greatest g with x^g <= y, for x >= 2 and y >= 1. Search guided by y's
/// leading exponent, then verified against the bracketing
/// x^g <= y < x^(g+1).
Cnf cnf_log(const Cnf& x, const Cnf& y);

/// Binary join.
Cnf cnf_max(const Cnf& x, const Cnf& y);

}  // namespace ord
