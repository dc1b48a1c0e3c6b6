#include "ordinals/approx.hpp"

#include "ordinals/gen.hpp"
#include "ordinals/semantics.hpp"

namespace ord {

namespace {

Cnf apply_kind(OpKind kind, const Cnf& a, const Cnf& g) {
  switch (kind) {
    case OpKind::Add: return cnf_add(a, g);
    case OpKind::Mul: return cnf_mul(a, g);
    case OpKind::Exp: return cnf_exp(a, g);
  }
  return Cnf();
}

}  // namespace

Cnf subtract(const Expr& alpha, const Expr& beta) {
  if (!ord_leq(alpha, beta))
    throw Error(ErrorKind::NotLeq, "subtract requires alpha <= beta");
  return cnf_sub(order_type(alpha), order_type(beta));
}

Cnf divide(const Expr& alpha, const Expr& beta) {
  Cnf a = order_type(alpha);
  Cnf b = order_type(beta);
  // Division by 0: the g <= beta clause binds and the greatest is beta.
  if (a.is_zero()) return b;
  return cnf_divmod(a, b).first;
}

Cnf logarithm(const Expr& alpha, const Expr& beta) {
  Cnf a = order_type(alpha);
  Cnf b = order_type(beta);
  const Cnf one = Cnf::from_nat(Nat(1));
  if (a.is_zero()) throw Error(ErrorKind::ZeroBase, "logarithm base 0");
  if (b.is_zero()) throw Error(ErrorKind::OutOfRange, "logarithm of 0");
  // Base 1: 1^g = 1 <= beta always, so the g <= beta clause binds.
  if (a == one) return b;
  return cnf_log(a, b);
}

bool verify_greatest(OpKind kind, const Expr& alpha, const Expr& beta,
                     const Cnf& gamma) {
  Cnf a = order_type(alpha);
  Cnf b = order_type(beta);
  const Cnf one = Cnf::from_nat(Nat(1));

  const bool degenerate = (kind == OpKind::Mul && a.is_zero()) ||
                          (kind == OpKind::Exp && a == one);
  if (degenerate) return gamma == b;

  if (cnf_cmp(apply_kind(kind, a, gamma), b) == Ordering::Greater) return false;
  if (cnf_cmp(gamma, b) == Ordering::Greater) return false;
  Cnf next = cnf_succ(gamma);
  return cnf_cmp(apply_kind(kind, a, next), b) == Ordering::Greater ||
         cnf_cmp(next, b) == Ordering::Greater;
}

bool check_left_cancellation(OpKind kind, const Expr& alpha, const Expr& beta,
                             const Expr& gamma, std::size_t samples,
                             std::uint64_t seed) {
  Expr tb = fin(Nat(0));
  Expr tg = fin(Nat(0));
  switch (kind) {
    case OpKind::Add:
      tb = sum(alpha, beta);
      tg = sum(alpha, gamma);
      break;
    case OpKind::Mul:
      tb = prod(alpha, beta);
      tg = prod(alpha, gamma);
      break;
    case OpKind::Exp:
      tb = exp(alpha, beta);
      tg = exp(alpha, gamma);
      break;
  }
  if (!ord_leq(tb, tg)) return true;  // nothing to reflect
  if (!ord_leq(beta, gamma)) return false;

  if (kind == OpKind::Add) {
    // The unique simulation must act as inl a -> inl a, inr b -> inr (h b).
    Simulation f(tb, tg);
    Simulation h(beta, gamma);
    Rng rng(seed);
    for (const Element& a : sample_elements(rng, alpha, samples)) {
      if (!(f(Element::left(a)) == Element::left(a))) return false;
    }
    for (const Element& b : sample_elements(rng, beta, samples)) {
      if (!(f(Element::right(b)) == Element::right(h(b)))) return false;
    }
  }
  return true;
}

}  // namespace ord
