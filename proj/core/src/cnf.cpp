#include "ordinals/cnf.hpp"

#include <algorithm>

namespace ord {

Cnf Cnf::from_nat(Nat n) {
  Cnf c;
  if (n > 0) c.terms_.push_back(CnfTerm{Cnf(), std::move(n)});
  return c;
}

Cnf Cnf::omega() { return power(from_nat(Nat(1))); }

Cnf Cnf::power(Cnf exponent, Nat coefficient) {
  if (coefficient < 1) throw Error(ErrorKind::OutOfRange, "coefficient must be >= 1");
  Cnf c;
  c.terms_.push_back(CnfTerm{std::move(exponent), std::move(coefficient)});
  return c;
}

Cnf Cnf::from_terms(std::vector<CnfTerm> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient < 1)
      throw Error(ErrorKind::OutOfRange, "coefficient must be >= 1");
    if (i > 0 && cnf_cmp(terms[i - 1].exponent, terms[i].exponent) != Ordering::Greater)
      throw Error(ErrorKind::NotDecreasing, "term " + std::to_string(i));
  }
  Cnf c;
  c.terms_ = std::move(terms);
  return c;
}

bool Cnf::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

Nat Cnf::finite_value() const {
  return terms_.empty() ? Nat(0) : terms_[0].coefficient;
}

const Cnf& Cnf::leading_exponent() const { return terms_.front().exponent; }
const Nat& Cnf::leading_coefficient() const { return terms_.front().coefficient; }

std::pair<Cnf, Nat> Cnf::split_limit_finite() const {
  Cnf limit;
  Nat finite = 0;
  for (const auto& t : terms_) {
    if (t.exponent.is_zero())
      finite = t.coefficient;
    else
      limit.terms_.push_back(t);
  }
  return {std::move(limit), std::move(finite)};
}

bool Cnf::operator==(const Cnf& other) const {
  return cnf_cmp(*this, other) == Ordering::Equal;
}

Ordering cnf_cmp(const Cnf& x, const Cnf& y) {
  const std::size_t n = std::min(x.term_count(), y.term_count());
  for (std::size_t i = 0; i < n; ++i) {
    Ordering oe = cnf_cmp(x.term(i).exponent, y.term(i).exponent);
    if (oe != Ordering::Equal) return oe;
    Ordering oc = ordering_of(x.term(i).coefficient, y.term(i).coefficient);
    if (oc != Ordering::Equal) return oc;
  }
  return ordering_of(x.term_count(), y.term_count());
}

Cnf cnf_add(const Cnf& x, const Cnf& y) {
  if (y.is_zero()) return x;
  const Cnf& e = y.leading_exponent();
  Cnf result;
  // Keep the terms of x that survive against y's leading exponent.
  for (const auto& t : x.terms_) {
    Ordering o = cnf_cmp(t.exponent, e);
    if (o == Ordering::Greater) {
      result.terms_.push_back(t);
    } else {
      break;  // exponents are decreasing, the rest is absorbed
    }
  }
  std::size_t kept = result.terms_.size();
  bool merged = kept < x.terms_.size() &&
                cnf_cmp(x.terms_[kept].exponent, e) == Ordering::Equal;
  result.terms_.push_back(y.terms_.front());
  if (merged) result.terms_.back().coefficient += x.terms_[kept].coefficient;
  result.terms_.insert(result.terms_.end(), y.terms_.begin() + 1, y.terms_.end());
  return result;
}

Cnf cnf_mul(const Cnf& x, const Cnf& y) {
  if (x.is_zero() || y.is_zero()) return Cnf();
  const Cnf& a1 = x.leading_exponent();
  Cnf result;
  for (const auto& t : y.terms_) {
    if (!t.exponent.is_zero()) {
      result.terms_.push_back(CnfTerm{cnf_add(a1, t.exponent), t.coefficient});
    } else {
      // Finite part n of y: x*n keeps x's tail below a scaled leading term.
      result.terms_.push_back(CnfTerm{a1, x.leading_coefficient() * t.coefficient});
      result.terms_.insert(result.terms_.end(), x.terms_.begin() + 1, x.terms_.end());
    }
  }
  return result;
}

Cnf cnf_succ(const Cnf& x) { return cnf_add(x, Cnf::from_nat(Nat(1))); }

Cnf cnf_max(const Cnf& x, const Cnf& y) {
  return cnf_cmp(x, y) == Ordering::Less ? y : x;
}

namespace {

/// x^n for finite n by square-and-multiply over cnf_mul.
Cnf cnf_pow_finite(const Cnf& x, Nat n) {
  Cnf result = Cnf::from_nat(Nat(1));
  Cnf square = x;
  while (n > 0) {
    if ((n & 1) != 0) result = cnf_mul(result, square);
    n >>= 1;
    if (n > 0) square = cnf_mul(square, square);
  }
  return result;
}

/// Predecessor exponent: the unique g with 1 + g = e, for e >= 1.
Cnf drop_one(const Cnf& e) { return cnf_sub(Cnf::from_nat(Nat(1)), e); }

/// Inverse of drop_one: 1 + m.
Cnf plus_one_left(const Cnf& m) { return cnf_add(Cnf::from_nat(Nat(1)), m); }

/// k^limit for finite k >= 2: w^(sum of w^(e-1)*c over limit's terms).
Cnf finite_base_limit_power(const Cnf& limit) {
  std::vector<CnfTerm> shifted;
  shifted.reserve(limit.term_count());
  for (std::size_t i = 0; i < limit.term_count(); ++i) {
    const CnfTerm& t = limit.term(i);
    shifted.push_back(CnfTerm{drop_one(t.exponent), t.coefficient});
  }
  return Cnf::power(Cnf::from_terms(std::move(shifted)));
}

/// The inverse map on exponents, used to guide cnf_log for finite bases.
Cnf finite_base_limit_log(const Cnf& mu) {
  std::vector<CnfTerm> lifted;
  lifted.reserve(mu.term_count());
  for (std::size_t i = 0; i < mu.term_count(); ++i) {
    const CnfTerm& t = mu.term(i);
    lifted.push_back(CnfTerm{plus_one_left(t.exponent), t.coefficient});
  }
  return Cnf::from_terms(std::move(lifted));
}

}  // namespace

Cnf cnf_exp(const Cnf& x, const Cnf& y) {
  if (x.is_zero()) throw Error(ErrorKind::ZeroBase, "cnf_exp base 0");
  const Cnf one = Cnf::from_nat(Nat(1));
  if (y.is_zero()) return one;
  if (x == one) return one;
  auto [limit, finite] = y.split_limit_finite();
  Cnf limit_power;
  if (limit.is_zero()) {
    limit_power = one;
  } else if (x.is_finite()) {
    limit_power = finite_base_limit_power(limit);
  } else {
    limit_power = Cnf::power(cnf_mul(x.leading_exponent(), limit));
  }
  if (finite == 0) return limit_power;
  return cnf_mul(limit_power, cnf_pow_finite(x, finite));
}

Cnf cnf_sub(const Cnf& x, const Cnf& y) {
  std::size_t i = 0;
  while (i < x.term_count() && i < y.term_count() &&
         cnf_cmp(x.term(i).exponent, y.term(i).exponent) == Ordering::Equal &&
         x.term(i).coefficient == y.term(i).coefficient) {
    ++i;
  }
  if (i == x.term_count()) {
    Cnf rest;
    rest.terms_.assign(y.terms_.begin() + i, y.terms_.end());
    return rest;
  }
  if (i == y.term_count())
    throw Error(ErrorKind::Underflow, "cnf_sub: minuend above target");
  Ordering oe = cnf_cmp(x.term(i).exponent, y.term(i).exponent);
  if (oe == Ordering::Greater ||
      (oe == Ordering::Equal && x.term(i).coefficient > y.term(i).coefficient))
    throw Error(ErrorKind::Underflow, "cnf_sub: minuend above target");
  Cnf rest;
  if (oe == Ordering::Equal) {
    rest.terms_.push_back(
        CnfTerm{y.term(i).exponent, y.term(i).coefficient - x.term(i).coefficient});
    rest.terms_.insert(rest.terms_.end(), y.terms_.begin() + i + 1, y.terms_.end());
  } else {
    rest.terms_.assign(y.terms_.begin() + i, y.terms_.end());
  }
  return rest;
}

std::pair<Cnf, Cnf> cnf_divmod(const Cnf& x, const Cnf& y) {
  if (x.is_zero()) throw Error(ErrorKind::DivisionByZero, "cnf_divmod");
  if (y.is_zero()) return {Cnf(), Cnf()};

  if (x.is_finite()) {
    // y = L + n with L the infinite part: c*L = L, so q = L + n/c.
    const Nat c = x.finite_value();
    Cnf q;
    Nat finite = 0;
    for (const auto& t : y.terms_) {
      if (!t.exponent.is_zero())
        q.terms_.push_back(t);
      else
        finite = t.coefficient;
    }
    Nat qn = finite / c;
    Nat rn = finite % c;
    if (qn > 0) q.terms_.push_back(CnfTerm{Cnf(), qn});
    return {std::move(q), Cnf::from_nat(rn)};
  }

  const Cnf& a1 = x.leading_exponent();
  const Nat& c1 = x.leading_coefficient();
  Cnf x_tail;
  x_tail.terms_.assign(x.terms_.begin() + 1, x.terms_.end());

  Cnf q;
  std::size_t i = 0;
  // Terms of y strictly above x's leading exponent divide exactly.
  while (i < y.term_count() &&
         cnf_cmp(y.term(i).exponent, a1) == Ordering::Greater) {
    q.terms_.push_back(CnfTerm{cnf_sub(a1, y.term(i).exponent), y.term(i).coefficient});
    ++i;
  }
  Cnf y_rest;
  if (i < y.term_count() && cnf_cmp(y.term(i).exponent, a1) == Ordering::Equal) {
    const Nat& d = y.term(i).coefficient;
    y_rest.terms_.assign(y.terms_.begin() + i + 1, y.terms_.end());
    Nat qn = d / c1;
    Nat rem = d % c1;
    if (rem == 0 && cnf_cmp(x_tail, y_rest) == Ordering::Greater) {
      // The last full copy of x overshoots below the pivot; give back one.
      qn -= 1;
      rem = c1;
    }
    if (qn > 0) q.terms_.push_back(CnfTerm{Cnf(), qn});
    Cnf r;
    if (rem > 0) {
      r.terms_.push_back(CnfTerm{a1, rem});
      r.terms_.insert(r.terms_.end(), y_rest.terms_.begin(), y_rest.terms_.end());
    } else {
      r = cnf_sub(x_tail, y_rest);
    }
    return {std::move(q), std::move(r)};
  }
  // No pivot term: everything from i on is the remainder.
  y_rest.terms_.assign(y.terms_.begin() + i, y.terms_.end());
  return {std::move(q), std::move(y_rest)};
}

Cnf cnf_log(const Cnf& x, const Cnf& y) {
  const Cnf one = Cnf::from_nat(Nat(1));
  if (cnf_cmp(x, Cnf::from_nat(Nat(2))) == Ordering::Less)
    throw Error(ErrorKind::OutOfRange, "cnf_log base must be >= 2");
  if (y.is_zero()) throw Error(ErrorKind::OutOfRange, "cnf_log of 0");

  // Limit part of the result, read off y's leading exponent.
  Cnf gamma;
  const Cnf& b1 = y.leading_exponent();
  if (!b1.is_zero()) {
    if (x.is_finite()) {
      gamma = finite_base_limit_log(b1);
    } else {
      gamma = cnf_divmod(x.leading_exponent(), b1).first.split_limit_finite().first;
    }
  }
  // Finite part by repeated multiplication.
  Cnf power = cnf_exp(x, gamma);
  while (true) {
    Cnf next = cnf_mul(power, x);
    if (cnf_cmp(next, y) == Ordering::Greater) break;
    power = std::move(next);
    gamma = cnf_succ(gamma);
  }
  // Mandatory bracketing check; a failure here is a defect, not bad input.
  if (cnf_cmp(cnf_exp(x, gamma), y) == Ordering::Greater ||
      cnf_cmp(y, cnf_exp(x, cnf_succ(gamma))) != Ordering::Less)
    throw std::logic_error("cnf_log: bracketing verification failed");
  return gamma;
}

}  // namespace ord
