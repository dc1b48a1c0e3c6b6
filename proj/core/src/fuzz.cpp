#include "ordinals/fuzz.hpp"

#include <vector>

#include "ordinals/semantics.hpp"

namespace ord {

bool order_embedding_disagrees(const Expr& e, const Element& x, const Element& y) {
  return compare(e, x, y) != cnf_cmp(rank(e, x), rank(e, y));
}

namespace {

bool valid(const Expr& e, const Element& x) {
  return !validate_element(e, x).has_value();
}

/// Structurally smaller variants of x, not necessarily valid.
std::vector<Element> shrink_steps(const Expr& e, const Element& x) {
  std::vector<Element> out;
  switch (x.kind()) {
    case Element::Kind::Nat:
      if (x.value() > 0) {
        out.push_back(Element::nat(x.value() / 2));
        out.push_back(Element::nat(x.value() - 1));
      }
      break;
    case Element::Kind::Left:
      for (Element& i : shrink_steps(e.left(), x.inner()))
        out.push_back(Element::left(std::move(i)));
      break;
    case Element::Kind::Right:
      if (!is_empty(e.left())) out.push_back(Element::left(bot(e.left())));
      for (Element& i : shrink_steps(e.right(), x.inner()))
        out.push_back(Element::right(std::move(i)));
      break;
    case Element::Kind::Pair:
      for (Element& f : shrink_steps(e.left(), x.first()))
        out.push_back(Element::pair(std::move(f), x.second()));
      for (Element& s : shrink_steps(e.right(), x.second()))
        out.push_back(Element::pair(x.first(), std::move(s)));
      break;
    case Element::Kind::List: {
      for (std::size_t drop = 0; drop < x.entry_count(); ++drop) {
        std::vector<Element> flat;
        for (std::size_t i = 0; i < x.entry_count(); ++i) {
          if (i == drop) continue;
          flat.push_back(x.entry_a(i));
          flat.push_back(x.entry_b(i));
        }
        out.push_back(Element::list(std::move(flat)));
      }
      for (std::size_t i = 0; i < x.entry_count(); ++i) {
        for (Element& a : shrink_steps(e.base(), x.entry_a(i))) {
          std::vector<Element> flat;
          for (std::size_t j = 0; j < x.entry_count(); ++j) {
            flat.push_back(j == i ? a : x.entry_a(j));
            flat.push_back(x.entry_b(j));
          }
          out.push_back(Element::list(std::move(flat)));
        }
        for (Element& b : shrink_steps(e.exponent(), x.entry_b(i))) {
          std::vector<Element> flat;
          for (std::size_t j = 0; j < x.entry_count(); ++j) {
            flat.push_back(x.entry_a(j));
            flat.push_back(j == i ? b : x.entry_b(j));
          }
          out.push_back(Element::list(std::move(flat)));
        }
      }
      break;
    }
  }
  return out;
}

/// Tries to reproduce the disagreement inside a direct subexpression.
bool descend(Counterexample& cex, const Disagreement& disagrees, Rng& rng) {
  if (cex.e.kind() == Expr::Kind::Fin || cex.e.kind() == Expr::Kind::Omega)
    return false;
  const Expr* children[2] = {&cex.e.left(), &cex.e.right()};
  for (const Expr* child : children) {
    if (is_empty(*child)) continue;
    for (int attempt = 0; attempt < 32; ++attempt) {
      std::vector<Element> pair = sample_elements(rng, *child, 2);
      if (pair.size() < 2) break;
      if (disagrees(*child, pair[0], pair[1])) {
        cex = Counterexample{*child, pair[0], pair[1]};
        return true;
      }
    }
  }
  return false;
}

}  // namespace

Counterexample minimize(Counterexample cex, const Disagreement& disagrees,
                        Rng& rng) {
  while (descend(cex, disagrees, rng)) {
  }
  bool progressed = true;
  int budget = 500;
  while (progressed && budget-- > 0) {
    progressed = false;
    for (Element& candidate : shrink_steps(cex.e, cex.x)) {
      if (valid(cex.e, candidate) && disagrees(cex.e, candidate, cex.y)) {
        cex.x = std::move(candidate);
        progressed = true;
        break;
      }
    }
    for (Element& candidate : shrink_steps(cex.e, cex.y)) {
      if (valid(cex.e, candidate) && disagrees(cex.e, cex.x, candidate)) {
        cex.y = std::move(candidate);
        progressed = true;
        break;
      }
    }
  }
  return cex;
}

FuzzResult fuzz_order_embedding(std::uint64_t seed, std::size_t cases,
                                const GenLimits& limits,
                                const Disagreement& disagrees) {
  Rng rng(seed);
  FuzzResult result;
  for (std::size_t i = 0; i < cases; ++i) {
    ++result.cases;
    Expr e = gen_expr(rng, limits);
    if (is_empty(e)) continue;
    std::vector<Element> pair = sample_elements(rng, e, 2, limits);
    if (pair.size() < 2) continue;
    if (disagrees(e, pair[0], pair[1])) {
      result.failure = minimize(Counterexample{e, pair[0], pair[1]}, disagrees, rng);
      return result;
    }
  }
  return result;
}

}  // namespace ord
