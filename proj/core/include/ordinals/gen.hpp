#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "ordinals/cnf.hpp"
#include "ordinals/element.hpp"
#include "ordinals/expr.hpp"

namespace ord {

/// Deterministic source for the fuzz/law/property suites. mt19937_64 has a
/// standard-specified output sequence, and all sampling below reduces it by
/// hand, so a fixed seed reproduces bit-exactly across builds.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  bool chance(double p);

 private:
  std::mt19937_64 engine_;
};

struct GenLimits {
  unsigned expr_depth = 3;
  unsigned fin_max = 6;
  unsigned cnf_height = 3;   // exponent nesting
  unsigned cnf_terms = 4;
  unsigned cnf_coeff = 9;
};

/// Random valid expression (every Exp base nonempty).
Expr gen_expr(Rng& rng, const GenLimits& limits = {});

/// Random CNF value: tower height, term count and coefficients bounded by
/// limits.
Cnf gen_cnf(Rng& rng, const GenLimits& limits = {});

/// Structurally random valid element of e; nullopt when e is empty.
std::optional<Element> gen_element(Rng& rng, const Expr& e,
                                   const GenLimits& limits = {});

/// Mixed sampler: alternates structural generation with unrank at random CNF
/// values reduced below the order type. Returns fewer than count only for
/// the empty ordinal.
std::vector<Element> sample_elements(Rng& rng, const Expr& e,
                                     std::size_t count,
                                     const GenLimits& limits = {});

/// Random raw list over (base, exponent): strictly decreasing in the second
/// component, first components unconstrained (least elements allowed).
RawList gen_raw_list(Rng& rng, const Expr& base, const Expr& exponent,
                     const GenLimits& limits = {});

}  // namespace ord
