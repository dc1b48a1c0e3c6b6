#include "ordinals/gen.hpp"

#include <algorithm>
#include <cmath>

#include "ordinals/semantics.hpp"

namespace ord {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound <= 1) return 0;
  // Rejection keeps the draw unbiased and the sequence reproducible.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return v % bound;
}

bool Rng::chance(double p) {
  return static_cast<double>(below(1u << 20)) < p * static_cast<double>(1u << 20);
}

namespace {

std::uint64_t nat_below(Rng& rng, const Nat& bound) {
  static const Nat kCap = Nat(1) << 62;
  Nat b = bound > kCap ? kCap : bound;
  return rng.below(b.convert_to<std::uint64_t>());
}

Expr gen_expr_depth(Rng& rng, unsigned depth, const GenLimits& lim) {
  const std::uint64_t pick = depth == 0 ? rng.below(2) : rng.below(5);
  switch (pick) {
    case 0: return fin(Nat(rng.below(lim.fin_max + 1)));
    case 1: return omega();
    case 2:
      return sum(gen_expr_depth(rng, depth - 1, lim),
                 gen_expr_depth(rng, depth - 1, lim));
    case 3:
      return prod(gen_expr_depth(rng, depth - 1, lim),
                  gen_expr_depth(rng, depth - 1, lim));
    default: {
      Expr base = gen_expr_depth(rng, depth - 1, lim);
      if (is_empty(base)) base = sum(fin(Nat(1)), std::move(base));
      return exp(std::move(base), gen_expr_depth(rng, depth - 1, lim));
    }
  }
}

Cnf gen_cnf_height(Rng& rng, unsigned height, const GenLimits& lim) {
  if (height == 0) return Cnf::from_nat(Nat(rng.below(lim.cnf_coeff + 1)));
  const std::uint64_t want = rng.below(lim.cnf_terms + 1);
  std::vector<Cnf> exponents;
  for (std::uint64_t i = 0; i < want; ++i)
    exponents.push_back(gen_cnf_height(rng, height - 1, lim));
  std::sort(exponents.begin(), exponents.end(), [](const Cnf& a, const Cnf& b) {
    return cnf_cmp(a, b) == Ordering::Greater;
  });
  exponents.erase(std::unique(exponents.begin(), exponents.end()), exponents.end());
  std::vector<CnfTerm> terms;
  terms.reserve(exponents.size());
  for (Cnf& e : exponents)
    terms.push_back(CnfTerm{std::move(e), Nat(1 + rng.below(lim.cnf_coeff))});
  return Cnf::from_terms(std::move(terms));
}

/// Distinct exponent elements in strictly decreasing order, at most `want`.
std::vector<Element> decreasing_chain(Rng& rng, const Expr& exponent,
                                      std::size_t want, const GenLimits& lim) {
  std::vector<Element> candidates;
  for (std::size_t i = 0; i < 2 * want; ++i) {
    if (auto b = gen_element(rng, exponent, lim)) candidates.push_back(std::move(*b));
  }
  std::sort(candidates.begin(), candidates.end(),
            [&](const Element& a, const Element& b) {
              return compare(exponent, a, b) == Ordering::Greater;
            });
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  if (candidates.size() > want)
    candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(want),
                     candidates.end());
  return candidates;
}

}  // namespace

namespace {

/// Overestimate of the largest finite coefficient the order type of e can
/// contain; infinity when nested finite exponentials blow up.
long double coefficient_magnitude(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Fin:
      return e.fin_size().convert_to<long double>();
    case Expr::Kind::Omega:
      return 10.0L;
    case Expr::Kind::Sum:
      return coefficient_magnitude(e.left()) + coefficient_magnitude(e.right());
    case Expr::Kind::Prod:
      return coefficient_magnitude(e.left()) * coefficient_magnitude(e.right());
    case Expr::Kind::Exp:
      return std::pow(std::max(coefficient_magnitude(e.base()), 1.0L),
                      coefficient_magnitude(e.exponent()));
  }
  return 1.0L;
}

}  // namespace

Expr gen_expr(Rng& rng, const GenLimits& limits) {
  // Nested finite exponentials explode (6^(6^(6^6)) has no feasible
  // representation), so candidates whose coefficients could leave desk scale
  // are regenerated.
  while (true) {
    Expr e = gen_expr_depth(rng, limits.expr_depth, limits);
    long double magnitude = coefficient_magnitude(e);
    if (magnitude < 1e60L) return e;
  }
}

Cnf gen_cnf(Rng& rng, const GenLimits& limits) {
  return gen_cnf_height(rng, limits.cnf_height, limits);
}

std::optional<Element> gen_element(Rng& rng, const Expr& e, const GenLimits& lim) {
  switch (e.kind()) {
    case Expr::Kind::Fin:
      if (e.fin_size() == 0) return std::nullopt;
      return Element::nat(Nat(nat_below(rng, e.fin_size())));
    case Expr::Kind::Omega:
      return Element::nat(Nat(rng.below(lim.cnf_coeff + 1)));
    case Expr::Kind::Sum: {
      const bool l = !is_empty(e.left());
      const bool r = !is_empty(e.right());
      if (!l && !r) return std::nullopt;
      if (l && (!r || rng.chance(0.5))) return Element::left(*gen_element(rng, e.left(), lim));
      return Element::right(*gen_element(rng, e.right(), lim));
    }
    case Expr::Kind::Prod: {
      auto first = gen_element(rng, e.left(), lim);
      auto second = gen_element(rng, e.right(), lim);
      if (!first || !second) return std::nullopt;
      return Element::pair(std::move(*first), std::move(*second));
    }
    case Expr::Kind::Exp: {
      const std::size_t want = rng.below(4);
      std::vector<Element> flat;
      for (Element& b : decreasing_chain(rng, e.exponent(), want, lim)) {
        // Positive base component; give up on the entry after a few tries.
        std::optional<Element> a;
        for (int tries = 0; tries < 8; ++tries) {
          a = gen_element(rng, e.base(), lim);
          if (a && is_positive(e.base(), *a)) break;
          a.reset();
        }
        if (!a) continue;
        flat.push_back(std::move(*a));
        flat.push_back(std::move(b));
      }
      return Element::list(std::move(flat));
    }
  }
  return std::nullopt;
}

std::vector<Element> sample_elements(Rng& rng, const Expr& e, std::size_t count,
                                     const GenLimits& limits) {
  std::vector<Element> out;
  if (is_empty(e)) return out;
  Cnf type = order_type(e);
  out.reserve(count);
  while (out.size() < count) {
    if (out.size() % 2 == 0) {
      if (auto x = gen_element(rng, e, limits)) {
        out.push_back(std::move(*x));
        continue;
      }
    }
    Cnf c = gen_cnf(rng, limits);
    if (cnf_cmp(c, type) != Ordering::Less) c = cnf_divmod(type, c).second;
    out.push_back(unrank(e, c));
  }
  return out;
}

RawList gen_raw_list(Rng& rng, const Expr& base, const Expr& exponent,
                     const GenLimits& lim) {
  RawList raw;
  if (is_empty(base)) return raw;
  const std::size_t want = rng.below(4);
  for (Element& b : decreasing_chain(rng, exponent, want, lim)) {
    auto a = gen_element(rng, base, lim);
    if (!a) break;
    raw.emplace_back(std::move(*a), std::move(b));
  }
  return raw;
}

}  // namespace ord
