#include "ordinals/laws.hpp"

#include <utility>

#include "ordinals/gen.hpp"
#include "ordinals/text.hpp"

namespace ord {

Iso iso_exp_zero(Expr alpha) {
  Expr src = exp(alpha, fin(Nat(0)));
  Expr dst = fin(Nat(1));
  return Iso{
      "exp_zero", src, dst,
      [](const Element&) { return Element::nat(Nat(0)); },
      [](const Element&) { return Element::list({}); },
  };
}

Iso iso_exp_one(Expr alpha) {
  Expr src = exp(alpha, fin(Nat(1)));
  Expr dst = alpha;
  Element least = bot(alpha);
  return Iso{
      "exp_one", src, std::move(dst),
      [least](const Element& x) {
        return x.entry_count() == 0 ? least : x.entry_a(0);
      },
      [least](const Element& y) {
        if (y == least) return Element::list({});
        return Element::list({y, Element::nat(Nat(0))});
      },
  };
}

Iso iso_exp_succ(Expr alpha, Expr beta) {
  Expr src = exp(alpha, sum(beta, fin(Nat(1))));
  Expr dst = prod(exp(alpha, beta), alpha);
  Element least = bot(alpha);
  auto fwd = [least](const Element& x) {
    // The successor point R:0 is the top of beta+1, so it can only sit in
    // front; everything after it lives in beta.
    std::size_t start = 0;
    Element head = least;
    if (x.entry_count() > 0 && x.entry_b(0).kind() == Element::Kind::Right) {
      head = x.entry_a(0);
      start = 1;
    }
    std::vector<Element> flat;
    for (std::size_t i = start; i < x.entry_count(); ++i) {
      flat.push_back(x.entry_a(i));
      flat.push_back(x.entry_b(i).inner());
    }
    return Element::pair(Element::list(std::move(flat)), head);
  };
  auto bwd = [least](const Element& y) {
    const Element& l = y.first();
    std::vector<Element> flat;
    if (y.second() != least) {
      flat.push_back(y.second());
      flat.push_back(Element::right(Element::nat(Nat(0))));
    }
    for (std::size_t i = 0; i < l.entry_count(); ++i) {
      flat.push_back(l.entry_a(i));
      flat.push_back(Element::left(l.entry_b(i)));
    }
    return Element::list(std::move(flat));
  };
  return Iso{"exp_succ", std::move(src), std::move(dst), fwd, bwd};
}

Iso iso_exp_add(Expr alpha, Expr beta, Expr gamma) {
  Expr src = exp(alpha, sum(beta, gamma));
  Expr dst = prod(exp(alpha, beta), exp(alpha, gamma));
  auto fwd = [](const Element& x) {
    // R-entries precede L-entries in a decreasing list over beta+gamma.
    std::vector<Element> left_flat, right_flat;
    for (std::size_t i = 0; i < x.entry_count(); ++i) {
      auto& sink = x.entry_b(i).kind() == Element::Kind::Left ? left_flat : right_flat;
      sink.push_back(x.entry_a(i));
      sink.push_back(x.entry_b(i).inner());
    }
    return Element::pair(Element::list(std::move(left_flat)),
                         Element::list(std::move(right_flat)));
  };
  auto bwd = [](const Element& y) {
    std::vector<Element> flat;
    const Element& l1 = y.first();
    const Element& l2 = y.second();
    for (std::size_t i = 0; i < l2.entry_count(); ++i) {
      flat.push_back(l2.entry_a(i));
      flat.push_back(Element::right(l2.entry_b(i)));
    }
    for (std::size_t i = 0; i < l1.entry_count(); ++i) {
      flat.push_back(l1.entry_a(i));
      flat.push_back(Element::left(l1.entry_b(i)));
    }
    return Element::list(std::move(flat));
  };
  return Iso{"exp_add", std::move(src), std::move(dst), fwd, bwd};
}

Iso iso_exp_mul(Expr alpha, Expr beta, Expr gamma) {
  Expr src = exp(alpha, prod(beta, gamma));
  Expr dst = exp(exp(alpha, beta), gamma);
  auto fwd = [](const Element& x) {
    // Each maximal run with a common gamma-component becomes one entry of
    // the iterated exponential; runs are nonempty, hence positive.
    std::vector<Element> outer;
    std::size_t i = 0;
    while (i < x.entry_count()) {
      const Element& c = x.entry_b(i).second();
      std::vector<Element> inner;
      while (i < x.entry_count() && x.entry_b(i).second() == c) {
        inner.push_back(x.entry_a(i));
        inner.push_back(x.entry_b(i).first());
        ++i;
      }
      outer.push_back(Element::list(std::move(inner)));
      outer.push_back(c);
    }
    return Element::list(std::move(outer));
  };
  auto bwd = [](const Element& y) {
    std::vector<Element> flat;
    for (std::size_t j = 0; j < y.entry_count(); ++j) {
      const Element& inner = y.entry_a(j);
      const Element& c = y.entry_b(j);
      for (std::size_t i = 0; i < inner.entry_count(); ++i) {
        flat.push_back(inner.entry_a(i));
        flat.push_back(Element::pair(inner.entry_b(i), c));
      }
    }
    return Element::list(std::move(flat));
  };
  return Iso{"exp_mul", std::move(src), std::move(dst), fwd, bwd};
}

Iso iso_times_distr(Expr alpha, Expr beta, Expr gamma) {
  Expr src = prod(alpha, sum(beta, gamma));
  Expr dst = sum(prod(alpha, beta), prod(alpha, gamma));
  auto fwd = [](const Element& x) {
    const Element& a = x.first();
    const Element& s = x.second();
    Element moved = Element::pair(a, s.inner());
    return s.kind() == Element::Kind::Left ? Element::left(std::move(moved))
                                           : Element::right(std::move(moved));
  };
  auto bwd = [](const Element& y) {
    const Element& p = y.inner();
    Element side = y.kind() == Element::Kind::Left
                       ? Element::left(p.second())
                       : Element::right(p.second());
    return Element::pair(p.first(), std::move(side));
  };
  return Iso{"times_distr", std::move(src), std::move(dst), fwd, bwd};
}

Iso iso_plus_assoc(Expr alpha, Expr beta, Expr gamma) {
  Expr src = sum(sum(alpha, beta), gamma);
  Expr dst = sum(alpha, sum(beta, gamma));
  auto fwd = [](const Element& x) {
    if (x.kind() == Element::Kind::Right)
      return Element::right(Element::right(x.inner()));
    const Element& i = x.inner();
    if (i.kind() == Element::Kind::Left) return i;
    return Element::right(Element::left(i.inner()));
  };
  auto bwd = [](const Element& y) {
    if (y.kind() == Element::Kind::Left) return Element::left(y);
    const Element& i = y.inner();
    if (i.kind() == Element::Kind::Left) return Element::left(Element::right(i.inner()));
    return Element::right(i.inner());
  };
  return Iso{"plus_assoc", std::move(src), std::move(dst), fwd, bwd};
}

Iso iso_plus_zero(Expr alpha) {
  Expr src = sum(alpha, fin(Nat(0)));
  return Iso{
      "plus_zero", std::move(src), alpha,
      [](const Element& x) { return x.inner(); },
      [](const Element& y) { return Element::left(y); },
  };
}

Iso iso_times_assoc(Expr alpha, Expr beta, Expr gamma) {
  Expr src = prod(prod(alpha, beta), gamma);
  Expr dst = prod(alpha, prod(beta, gamma));
  auto fwd = [](const Element& x) {
    return Element::pair(x.first().first(),
                         Element::pair(x.first().second(), x.second()));
  };
  auto bwd = [](const Element& y) {
    return Element::pair(Element::pair(y.first(), y.second().first()),
                         y.second().second());
  };
  return Iso{"times_assoc", std::move(src), std::move(dst), fwd, bwd};
}

Report check_iso(const Iso& iso, std::size_t sample_count, std::uint64_t seed) {
  Report report;
  auto fail = [&](const std::string& what) { report.failures.push_back(iso.name + ": " + what); };

  ++report.checks;
  if (!(order_type(iso.src) == order_type(iso.dst)))
    fail("order types differ");

  Rng rng(seed);
  Cnf src_type = order_type(iso.src);
  std::vector<Element> xs;
  if (src_type.is_finite() && src_type.finite_value() <= sample_count) {
    xs = enumerate(iso.src, src_type.finite_value());
  } else {
    xs = sample_elements(rng, iso.src, sample_count);
  }

  std::vector<Element> images;
  images.reserve(xs.size());
  for (const Element& x : xs) {
    Element y = iso.fwd(x);
    ++report.checks;
    if (validate_element(iso.dst, y))
      fail("fwd image invalid at " + print_element(x));
    ++report.checks;
    if (!(iso.bwd(y) == x))
      fail("bwd . fwd != id at " + print_element(x));
    ++report.checks;
    if (cnf_cmp(rank(iso.dst, y), rank(iso.src, x)) != Ordering::Equal)
      fail("rank not preserved at " + print_element(x));
    images.push_back(std::move(y));
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      Ordering before = compare(iso.src, xs[i], xs[j]);
      if (before == Ordering::Equal) continue;
      ++report.checks;
      if (compare(iso.dst, images[i], images[j]) != before)
        fail("order not preserved at " + print_element(xs[i]) + " vs " +
             print_element(xs[j]));
    }
  }

  std::vector<Element> ys;
  if (src_type.is_finite() && src_type.finite_value() <= sample_count) {
    ys = enumerate(iso.dst, src_type.finite_value());
  } else {
    ys = sample_elements(rng, iso.dst, sample_count);
  }
  for (const Element& y : ys) {
    ++report.checks;
    if (!(iso.fwd(iso.bwd(y)) == y))
      fail("fwd . bwd != id at " + print_element(y));
  }
  return report;
}

}  // namespace ord
