// ordcalc: command-line front end for the ordinal arithmetic kernel.
//
// Exit codes: 0 success, 1 verification failure (a counterexample was
// found), 10 usage or parse error.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordinals/approx.hpp"
#include "ordinals/fuzz.hpp"
#include "ordinals/gen.hpp"
#include "ordinals/laws.hpp"
#include "ordinals/semantics.hpp"
#include "ordinals/text.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 10;

using nlohmann::json;

struct Options {
  bool json_output = false;
};

void emit(const Options& opt, const std::string& command,
          const std::vector<std::string>& inputs, const json& result,
          const json& verified, const std::string& text) {
  if (opt.json_output) {
    json line = {{"command", command},
                 {"inputs", inputs},
                 {"result", result},
                 {"verified", verified}};
    std::cout << line.dump() << "\n";
  } else {
    std::cout << text;
  }
}

ord::Expr parse_checked(const std::string& text) {
  ord::Expr e = ord::parse_expr(text);
  if (auto bad = ord::validate_expr(e)) ord::raise(*bad);
  return e;
}

ord::Cnf parse_cnf_arg(const std::string& text) {
  // Canonical CNF output is valid expression syntax, so read it back
  // through the expression grammar and take the order type.
  return ord::order_type(parse_checked(text));
}

int run_otype(const Options& opt, const std::string& arg) {
  std::string out = ord::print_cnf(ord::order_type(parse_checked(arg)));
  emit(opt, "otype", {arg}, out, nullptr, out + "\n");
  return kExitOk;
}

int run_cmp(const Options& opt, const std::string& a, const std::string& b) {
  ord::Ordering o = ord::cnf_cmp(ord::order_type(parse_checked(a)),
                                 ord::order_type(parse_checked(b)));
  std::string out = ord::to_string(o);
  emit(opt, "cmp", {a, b}, out, nullptr, out + "\n");
  return kExitOk;
}

int run_rank(const Options& opt, const std::string& etext, const std::string& xtext) {
  ord::Expr e = parse_checked(etext);
  ord::Element x = ord::parse_element(xtext);
  if (auto bad = ord::validate_element(e, x)) ord::raise(*bad);
  std::string out = ord::print_cnf(ord::rank(e, x));
  emit(opt, "rank", {etext, xtext}, out, nullptr, out + "\n");
  return kExitOk;
}

int run_unrank(const Options& opt, const std::string& etext, const std::string& ctext) {
  ord::Expr e = parse_checked(etext);
  ord::Cnf c = parse_cnf_arg(ctext);
  std::string out = ord::print_element(ord::unrank(e, c));
  emit(opt, "unrank", {etext, ctext}, out, nullptr, out + "\n");
  return kExitOk;
}

int run_enum(const Options& opt, const std::string& etext, std::uint64_t count) {
  ord::Expr e = parse_checked(etext);
  std::vector<ord::Element> elements = ord::enumerate(e, ord::Nat(count));
  json result = json::array();
  std::string text;
  for (const ord::Element& x : elements) {
    std::string line = ord::print_element(x);
    result.push_back(line);
    text += line + "\n";
  }
  emit(opt, "enum", {etext}, result, nullptr, text);
  return kExitOk;
}

int run_approx(const Options& opt, const std::string& name, ord::OpKind kind,
               const std::string& atext, const std::string& btext) {
  ord::Expr a = parse_checked(atext);
  ord::Expr b = parse_checked(btext);
  ord::Cnf g;
  switch (kind) {
    case ord::OpKind::Add: g = ord::subtract(a, b); break;
    case ord::OpKind::Mul: g = ord::divide(a, b); break;
    case ord::OpKind::Exp: g = ord::logarithm(a, b); break;
  }
  bool verified = ord::verify_greatest(kind, a, b, g);
  std::string out = ord::print_cnf(g);
  emit(opt, name, {atext, btext}, out, verified,
       out + "\nverified: " + (verified ? "true" : "false") + "\n");
  return verified ? kExitOk : kExitCounterexample;
}

int run_laws(const Options& opt, unsigned depth, std::uint64_t seed,
             std::size_t count, std::size_t samples) {
  ord::GenLimits limits;
  limits.expr_depth = depth;
  ord::Rng rng(seed);
  std::vector<ord::Expr> corpus;
  while (corpus.size() < count) {
    ord::Expr e = ord::gen_expr(rng, limits);
    if (!ord::validate_expr(e)) corpus.push_back(std::move(e));
  }

  std::vector<ord::Iso> isos;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const ord::Expr& beta = corpus[(i + 1) % corpus.size()];
    const ord::Expr& gamma = corpus[(i + 2) % corpus.size()];
    ord::Expr alpha = corpus[i];
    if (ord::is_empty(alpha)) alpha = ord::sum(ord::fin(ord::Nat(1)), alpha);
    isos.push_back(ord::iso_exp_zero(alpha));
    isos.push_back(ord::iso_exp_one(alpha));
    isos.push_back(ord::iso_exp_succ(alpha, beta));
    isos.push_back(ord::iso_exp_add(alpha, beta, gamma));
    isos.push_back(ord::iso_exp_mul(alpha, beta, gamma));
    isos.push_back(ord::iso_times_distr(corpus[i], beta, gamma));
    isos.push_back(ord::iso_plus_assoc(corpus[i], beta, gamma));
    isos.push_back(ord::iso_plus_zero(corpus[i]));
    isos.push_back(ord::iso_times_assoc(corpus[i], beta, gamma));
  }

  std::size_t checks = 0;
  std::vector<std::string> failures;
  json families = json::array();
  std::string text;
  for (const ord::Iso& iso : isos) {
    ord::Report report = ord::check_iso(iso, samples, seed);
    checks += report.checks;
    families.push_back({{"name", iso.name},
                        {"src", ord::print_expr(iso.src)},
                        {"checks", report.checks},
                        {"failures", report.failures}});
    if (!report.ok()) {
      for (const std::string& f : report.failures)
        failures.push_back(f + " (src " + ord::print_expr(iso.src) + ")");
    }
  }
  text += "laws: " + std::to_string(isos.size()) + " instances, " +
          std::to_string(checks) + " checks, " +
          std::to_string(failures.size()) + " failures\n";
  for (const std::string& f : failures) text += "  " + f + "\n";
  json result = {{"instances", isos.size()},
                 {"checks", checks},
                 {"families", families}};
  emit(opt, "laws", {}, result, failures.empty(), text);
  return failures.empty() ? kExitOk : kExitCounterexample;
}

int run_fuzz(const Options& opt, std::size_t cases, std::uint64_t seed,
             unsigned depth) {
  ord::GenLimits limits;
  limits.expr_depth = depth;
  ord::FuzzResult result = ord::fuzz_order_embedding(seed, cases, limits);
  if (result.ok()) {
    json r = {{"cases", result.cases}, {"counterexample", nullptr}};
    emit(opt, "fuzz", {}, r, true,
         "fuzz: " + std::to_string(result.cases) + " cases, no counterexample\n");
    return kExitOk;
  }
  const ord::Counterexample& cex = *result.failure;
  std::string etext = ord::print_expr(cex.e);
  std::string xtext = ord::print_element(cex.x);
  std::string ytext = ord::print_element(cex.y);
  json r = {{"cases", result.cases},
            {"counterexample", {{"expr", etext}, {"x", xtext}, {"y", ytext}}}};
  emit(opt, "fuzz", {}, r, false,
       "fuzz: counterexample after " + std::to_string(result.cases) +
           " cases\n  expr: " + etext + "\n  x: " + xtext + "\n  y: " + ytext +
           "\n");
  return kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordcalc: constructive ordinal arithmetic below epsilon_0"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json_output, "line-delimited JSON output");

  std::string arg1, arg2;
  std::uint64_t count = 10;
  std::uint64_t seed = 1;
  std::uint64_t cases = 1000;
  unsigned depth = 2;
  std::uint64_t law_count = 12;
  std::uint64_t law_samples = 64;

  CLI::App* otype = app.add_subcommand("otype", "order type of an expression");
  otype->add_option("expr", arg1)->required();

  CLI::App* cmp = app.add_subcommand("cmp", "compare two expressions");
  cmp->add_option("expr1", arg1)->required();
  cmp->add_option("expr2", arg2)->required();

  CLI::App* rankc = app.add_subcommand("rank", "rank of an element");
  rankc->add_option("expr", arg1)->required();
  rankc->add_option("element", arg2)->required();

  CLI::App* unrankc = app.add_subcommand("unrank", "element at a given rank");
  unrankc->add_option("expr", arg1)->required();
  unrankc->add_option("cnf", arg2)->required();

  CLI::App* enumc = app.add_subcommand("enum", "list elements in order");
  enumc->add_option("expr", arg1)->required();
  enumc->add_option("--count", count, "how many elements");

  CLI::App* subc = app.add_subcommand("sub", "greatest g with a+g <= b, g <= b");
  subc->add_option("alpha", arg1)->required();
  subc->add_option("beta", arg2)->required();

  CLI::App* divc = app.add_subcommand("div", "greatest g with a*g <= b, g <= b");
  divc->add_option("alpha", arg1)->required();
  divc->add_option("beta", arg2)->required();

  CLI::App* logc = app.add_subcommand("log", "greatest g with a^g <= b, g <= b");
  logc->add_option("alpha", arg1)->required();
  logc->add_option("beta", arg2)->required();

  CLI::App* lawsc = app.add_subcommand("laws", "run the isomorphism law suite");
  lawsc->add_option("--depth", depth, "expression depth of the corpus");
  lawsc->add_option("--seed", seed, "corpus seed");
  lawsc->add_option("--count", law_count, "corpus size");
  lawsc->add_option("--samples", law_samples, "samples per law instance");

  CLI::App* fuzzc = app.add_subcommand("fuzz", "order-embedding differential test");
  fuzzc->add_option("--cases", cases, "number of cases");
  fuzzc->add_option("--seed", seed, "seed");
  fuzzc->add_option("--depth", depth, "expression depth");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (otype->parsed()) return run_otype(opt, arg1);
    if (cmp->parsed()) return run_cmp(opt, arg1, arg2);
    if (rankc->parsed()) return run_rank(opt, arg1, arg2);
    if (unrankc->parsed()) return run_unrank(opt, arg1, arg2);
    if (enumc->parsed()) return run_enum(opt, arg1, count);
    if (subc->parsed()) return run_approx(opt, "sub", ord::OpKind::Add, arg1, arg2);
    if (divc->parsed()) return run_approx(opt, "div", ord::OpKind::Mul, arg1, arg2);
    if (logc->parsed()) return run_approx(opt, "log", ord::OpKind::Exp, arg1, arg2);
    if (lawsc->parsed()) return run_laws(opt, depth, seed, law_count, law_samples);
    if (fuzzc->parsed()) return run_fuzz(opt, cases, seed, depth);
  } catch (const ord::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitCounterexample;
  }
  return kExitUsage;
}
