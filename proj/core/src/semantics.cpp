#include "ordinals/semantics.hpp"

#include <string>

#include "ordinals/text.hpp"

namespace ord {

Cnf order_type(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Fin: return Cnf::from_nat(e.fin_size());
    case Expr::Kind::Omega: return Cnf::omega();
    case Expr::Kind::Sum: return cnf_add(order_type(e.left()), order_type(e.right()));
    case Expr::Kind::Prod: return cnf_mul(order_type(e.left()), order_type(e.right()));
    case Expr::Kind::Exp: return cnf_exp(order_type(e.base()), order_type(e.exponent()));
  }
  return Cnf();
}

Cnf rank(const Expr& e, const Element& x) {
  switch (e.kind()) {
    case Expr::Kind::Fin:
    case Expr::Kind::Omega:
      return Cnf::from_nat(x.value());
    case Expr::Kind::Sum:
      if (x.kind() == Element::Kind::Left) return rank(e.left(), x.inner());
      return cnf_add(order_type(e.left()), rank(e.right(), x.inner()));
    case Expr::Kind::Prod:
      return cnf_add(cnf_mul(order_type(e.left()), rank(e.right(), x.second())),
                     rank(e.left(), x.first()));
    case Expr::Kind::Exp: {
      Cnf base_type = order_type(e.base());
      Cnf total;
      for (std::size_t i = 0; i < x.entry_count(); ++i) {
        Cnf digit = cnf_mul(cnf_exp(base_type, rank(e.exponent(), x.entry_b(i))),
                            rank(e.base(), x.entry_a(i)));
        total = cnf_add(total, digit);
      }
      return total;
    }
  }
  return Cnf();
}

Cnf rank_raw(const Expr& base, const Expr& exponent, const RawList& raw) {
  for (std::size_t i = 1; i < raw.size(); ++i) {
    if (compare(exponent, raw[i - 1].second, raw[i].second) != Ordering::Greater)
      throw Error(ErrorKind::NotDecreasing, "raw list entry " + std::to_string(i));
  }
  Cnf base_type = order_type(base);
  Cnf total;
  for (const auto& [a, b] : raw) {
    // A least-element first component has rank 0 and the entry vanishes.
    Cnf digit = cnf_mul(cnf_exp(base_type, rank(exponent, b)), rank(base, a));
    total = cnf_add(total, digit);
  }
  return total;
}

Element unrank(const Expr& e, const Cnf& c) {
  switch (e.kind()) {
    case Expr::Kind::Fin:
      if (!c.is_finite() || c.finite_value() >= e.fin_size())
        throw Error(ErrorKind::OutOfRange, "unrank into Fin");
      return Element::nat(c.finite_value());
    case Expr::Kind::Omega:
      if (!c.is_finite()) throw Error(ErrorKind::OutOfRange, "unrank into Omega");
      return Element::nat(c.finite_value());
    case Expr::Kind::Sum: {
      Cnf left_type = order_type(e.left());
      if (cnf_cmp(c, left_type) == Ordering::Less)
        return Element::left(unrank(e.left(), c));
      return Element::right(unrank(e.right(), cnf_sub(left_type, c)));
    }
    case Expr::Kind::Prod: {
      Cnf left_type = order_type(e.left());
      if (left_type.is_zero()) throw Error(ErrorKind::OutOfRange, "unrank into empty product");
      auto [q, r] = cnf_divmod(left_type, c);
      // q positions the dominant second component, r the first.
      return Element::pair(unrank(e.left(), r), unrank(e.right(), q));
    }
    case Expr::Kind::Exp: {
      Cnf base_type = order_type(e.base());
      if (cnf_cmp(c, cnf_exp(base_type, order_type(e.exponent()))) != Ordering::Less)
        throw Error(ErrorKind::OutOfRange, "unrank above the order type");
      std::vector<Element> flat;
      Cnf remaining = c;
      while (!remaining.is_zero()) {
        Cnf g = cnf_log(base_type, remaining);
        auto [digit, rest] = cnf_divmod(cnf_exp(base_type, g), remaining);
        flat.push_back(unrank(e.base(), digit));
        flat.push_back(unrank(e.exponent(), g));
        remaining = std::move(rest);
      }
      return Element::list(std::move(flat));
    }
  }
  throw Error(ErrorKind::ShapeMismatch, "unreachable");
}

std::vector<Element> enumerate(const Expr& e, const Nat& n) {
  Cnf type = order_type(e);
  Nat count = n;
  if (type.is_finite() && type.finite_value() < count) count = type.finite_value();
  std::vector<Element> out;
  for (Nat k = 0; k < count; ++k) out.push_back(unrank(e, Cnf::from_nat(k)));
  return out;
}

bool ord_leq(const Expr& e1, const Expr& e2) {
  return cnf_cmp(order_type(e1), order_type(e2)) != Ordering::Greater;
}

Simulation::Simulation(Expr src, Expr dst)
    : src_(std::move(src)), dst_(std::move(dst)) {
  if (!ord_leq(src_, dst_))
    throw Error(ErrorKind::NotLeq, "no simulation: source exceeds target");
}

Element Simulation::operator()(const Element& x) const {
  return unrank(dst_, rank(src_, x));
}

namespace {

void expect(Report& report, bool condition, const std::string& what) {
  ++report.checks;
  if (!condition) report.failures.push_back(what);
}

}  // namespace

Report check_defining_equations(const std::vector<Expr>& corpus,
                                const Nat& finite_enumeration_cap) {
  Report report;
  const Cnf zero;
  const Cnf one = Cnf::from_nat(Nat(1));

  for (const Expr& b : corpus) {
    Cnf tb = order_type(b);
    if (!tb.is_finite() || tb.finite_value() > finite_enumeration_cap) continue;
    // beta = join over b:beta of (rank(b) + 1), the empty join being 0.
    Cnf join;
    for (const Element& x : enumerate(b, tb.finite_value()))
      join = cnf_max(join, cnf_succ(rank(b, x)));
    expect(report, join == tb,
           "sup-of-successors failed for " + print_expr(b));
  }

  for (std::size_t ia = 0; ia < corpus.size(); ++ia) {
    const Expr& a = corpus[ia];
    Cnf ta = order_type(a);
    expect(report, cnf_add(ta, zero) == ta, "a + 0 = a failed for " + print_expr(a));
    expect(report, cnf_mul(ta, zero) == zero, "a * 0 = 0 failed for " + print_expr(a));
    for (std::size_t ib = 0; ib < corpus.size(); ++ib) {
      const Expr& b = corpus[ib];
      // Third operand for the join clauses, cycled through the corpus.
      const Expr& g = corpus[(ia + ib + 1) % corpus.size()];
      Cnf tb = order_type(b);
      Cnf tg = order_type(g);
      expect(report, cnf_add(ta, cnf_succ(tb)) == cnf_succ(cnf_add(ta, tb)),
             "a + (b+1) = (a+b)+1 failed for " + print_expr(a) + ", " + print_expr(b));
      expect(report, cnf_mul(ta, cnf_succ(tb)) == cnf_add(cnf_mul(ta, tb), ta),
             "a * (b+1) = a*b + a failed for " + print_expr(a) + ", " + print_expr(b));
      expect(report,
             cnf_add(ta, cnf_max(tb, tg)) ==
                 cnf_max(ta, cnf_max(cnf_add(ta, tb), cnf_add(ta, tg))),
             "a + (b v c) failed for " + print_expr(a) + ", " + print_expr(b) +
                 ", " + print_expr(g));
      if (cnf_cmp(ta, one) != Ordering::Less) {
        expect(report,
               cnf_exp(ta, cnf_succ(tb)) == cnf_mul(cnf_exp(ta, tb), ta),
               "a ^ (b+1) = a^b * a failed for " + print_expr(a) + ", " + print_expr(b));
        expect(report,
               cnf_exp(ta, cnf_max(tb, tg)) ==
                   cnf_max(one, cnf_max(cnf_exp(ta, tb), cnf_exp(ta, tg))),
               "a ^ (b v c) failed for " + print_expr(a) + ", " + print_expr(b) +
                   ", " + print_expr(g));
      }
    }
  }
  return report;
}

}  // namespace ord
