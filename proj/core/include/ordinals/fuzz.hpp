#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "ordinals/element.hpp"
#include "ordinals/expr.hpp"
#include "ordinals/gen.hpp"

namespace ord {

/// A triple on which the structural order and the CNF rank oracle disagree.
struct Counterexample {
  Expr e;
  Element x;
  Element y;
};

/// Returns true when (e, x, y) witnesses a disagreement.
using Disagreement =
    std::function<bool(const Expr&, const Element&, const Element&)>;

/// compare(e,x,y) != cnf_cmp(rank(e,x), rank(e,y)).
bool order_embedding_disagrees(const Expr& e, const Element& x, const Element& y);

/// Greedy shrink of a counterexample: first descends into subexpressions
/// where the disagreement reproduces, then reduces the two elements while
/// they stay valid and disagreeing.
Counterexample minimize(Counterexample cex, const Disagreement& disagrees,
                        Rng& rng);

struct FuzzResult {
  std::size_t cases = 0;
  std::optional<Counterexample> failure;  // already minimized

  bool ok() const { return !failure.has_value(); }
};

/// Differential fuzz loop: random expressions, random element pairs, stop
/// and minimize at the first disagreement. Deterministic for a fixed seed.
FuzzResult fuzz_order_embedding(std::uint64_t seed, std::size_t cases,
                                const GenLimits& limits = {},
                                const Disagreement& disagrees = order_embedding_disagrees);

}  // namespace ord
