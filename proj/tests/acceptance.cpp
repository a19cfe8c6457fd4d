// Acceptance run: one PASS/FAIL line per criterion. Arguments select a
// subset of criteria by number; --verbose prints reproducers.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "idnf/syntax.hpp"
#include "idnf/verify.hpp"

using namespace idnf;

namespace {

bool verbose = false;

struct Outcome {
  bool pass = true;
  std::string summary;
};

const std::vector<Weight>& weights() {
  static const std::vector<Weight> w{Weight(Rational(0)), Weight(Rational(1)),
                                     Weight(Rational(-1)), Weight(Rational(1, 2))};
  return w;
}

const std::vector<VarTable>& tables() {
  static const std::vector<VarTable> t{VarTable({"x"}), VarTable({"x", "y"})};
  return t;
}

TruncationOrder bounded(unsigned n) { return TruncationOrder::bounded(n); }

// The acceptance runs use a smaller budget than the library default so that
// non-terminating rewrites surface quickly; exhaustion counts as failure.
constexpr std::size_t kFuel = 20'000;

VerifyConfig base_config() {
  VerifyConfig cfg;
  cfg.lambdas = weights();
  cfg.tables = tables();
  cfg.seed = 20261015;
  cfg.fuel = Fuel{kFuel};
  return cfg;
}

Outcome judge(const SuiteReport& r, const std::vector<std::string>& checks) {
  Outcome o;
  o.pass = r.passed(checks);
  std::ostringstream s;
  std::size_t n = 0;
  for (const auto& c : checks) {
    auto it = r.failures_by_check.find(c);
    if (it == r.failures_by_check.end()) {
      s << (n++ ? ", " : "") << c << " not exercised";
      o.pass = false;
      continue;
    }
    if (it->second > 0) s << (n++ ? ", " : "") << c << " failed " << it->second;
  }
  std::ostringstream head;
  head << r.checks << " checks";
  for (const auto& [k, v] : r.counts) head << ", " << v << " " << k;
  if (n) head << "; " << s.str();
  o.summary = head.str();
  if (verbose)
    for (const auto& f : r.failures)
      o.summary += "\n    [" + f.check + "] " + f.setting + "\n      " + f.detail;
  return o;
}

// Expected strings are written out from the worked examples.
Outcome golden() {
  Outcome o;
  std::vector<std::string> bad;
  const VarTable xy({"x", "y"});
  const auto expect = [&](const std::string& what, const std::string& got,
                          const std::string& want) {
    if (got != want) bad.push_back(what + ": got \"" + got + "\", want \"" + want + "\"");
  };
  const auto reduce = [&](const std::string& text, const Weight& l, const TruncationOrder& n) {
    return format_tensor(red(parse_expression(text, xy, n), l, n), xy);
  };
  const auto inf = TruncationOrder::unbounded();
  for (const auto& [lam, scaled] : std::vector<std::pair<Rational, std::string>>{
           {0, ""}, {1, "1 (x) x*y"}, {-1, "-1 (x) x*y"}, {Rational(1, 2), "(1/2)*1 (x) x*y"}}) {
    const Weight l(lam);
    // red(P(u)P(v)) = 1⊗u⊗v + 1⊗v⊗u + λ 1⊗uv
    std::string want = "1 (x) x (x) y + 1 (x) y (x) x";
    if (!scaled.empty()) want += (scaled[0] == '-' ? " - " + scaled.substr(1) : " + " + scaled);
    expect("red(P(x)P(y)) at λ=" + to_string(lam), reduce("P(x)*P(y)", l, inf), want);
    // d(x^2) = 2x x' + λ(x')^2
    std::string dsq = "2*x*x'";
    if (lam == 1) dsq += " + (x')^2";
    if (lam == -1) dsq += " - (x')^2";
    if (lam == Rational(1, 2)) dsq += " + (1/2)*(x')^2";
    expect("d(x^2) at λ=" + to_string(lam), reduce("d(x^2)", l, inf), dsq);
    // d(1⊗x) = x and d^2(1⊗x) = x'
    expect("d(1 (x) x)", reduce("d(P(x))", l, inf), "x");
    expect("d^2(1 (x) x)", reduce("d(d(P(x)))", l, inf), "x'");
    // d^(n+1)(x) vanishes in the truncated algebra
    for (unsigned n = 1; n <= 3; ++n) {
      std::string text = "x";
      for (unsigned k = 0; k <= n; ++k) text = "d(" + text + ")";
      expect(text + " at n=" + std::to_string(n), reduce(text, l, bounded(n)), "0");
    }
  }
  expect("red(P(x)P(x))", reduce("P(x)*P(x)", Weight(Rational(1)), inf),
         "2*1 (x) x (x) x + 1 (x) x^2");
  // x'' < x' < x
  const DiffVar x0{0, 0}, x1{0, 1}, x2{0, 2};
  if (!(cmp_diff_var(x2, x1) < 0 && cmp_diff_var(x1, x0) < 0))
    bad.push_back("order chain x'' < x' < x");
  expect("descending print", format_letter(x2) + " < " + format_letter(x1) + " < " + format_letter(x0),
         "x'' < x' < x");
  o.pass = bad.empty();
  o.summary = bad.empty() ? "all worked examples match" : std::to_string(bad.size()) + " mismatches";
  for (const auto& b : bad) o.summary += "\n    " + b;
  return o;
}

Outcome axioms() {
  VerifyConfig cfg = base_config();
  cfg.orders = {bounded(1), bounded(2), TruncationOrder::unbounded()};
  cfg.bounds = SizeBound{3, 3, 2, 2};
  cfg.samples = 40;
  return judge(verify_axioms(cfg), {"sample", "commutativity", "associativity", "leibniz",
                                    "rota-baxter", "section", "integration-by-parts"});
}

Outcome directsum() {
  VerifyConfig cfg = base_config();
  cfg.orders = {bounded(1), bounded(2), bounded(3)};
  cfg.bounds = SizeBound{1, 4, 3, 2};
  return judge(verify_directsum(cfg), {"intersection", "sum", "decompose"});
}

Outcome gsb() {
  VerifyConfig cfg = base_config();
  cfg.orders = {bounded(1), bounded(2), TruncationOrder::unbounded()};
  cfg.bounds = SizeBound{2, 2, 2, 2};
  // Composition residuals that reduce at all do so in under 100 steps.
  cfg.fuel = Fuel{1'000};
  return judge(verify_gsb(cfg), {"generator", "derivation", "multiplication-identity",
                                 "multiplication-certificate", "including", "intersection"});
}

Outcome confluence() {
  VerifyConfig cfg = base_config();
  cfg.orders = {bounded(1), bounded(2)};
  cfg.bounds = SizeBound{4, 3, 2, 2};
  cfg.samples = 625;
  cfg.combinations = 12;
  return judge(verify_confluence(cfg), {"strategy", "idempotent", "irr-output", "independence"});
}

Outcome order() {
  VerifyConfig cfg = base_config();
  cfg.orders = {bounded(1), bounded(2), TruncationOrder::unbounded()};
  cfg.bounds = SizeBound{3, 3, 2, 2};
  cfg.samples = 200;
  return judge(verify_order(cfg), {"weak-monomial-II", "weak-monomial-I"});
}

Outcome filtration() {
  VerifyConfig cfg = base_config();
  cfg.orders = {bounded(1), bounded(2)};
  cfg.bounds = SizeBound{3, 3, 2, 2};
  cfg.samples = 100;
  return judge(verify_filtration(cfg), {"sample", "order-n+1", "order-inf"});
}

struct Criterion {
  int number;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--verbose")
      verbose = true;
    else
      only.insert(std::stoi(a));
  }
  const std::vector<Criterion> criteria{
      {1, "golden examples", 1, golden},
      {2, "quotient axioms", 120, axioms},
      {3, "direct sum A = A_f + d(A)", 60, directsum},
      {4, "Groebner-Shirshov compositions", 300, gsb},
      {5, "normal-form uniqueness and basis", 300, confluence},
      {6, "weak monomial order", 60, order},
      {7, "filtration compatibility", 60, filtration},
  };
  bool all = true;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(c.number)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o = c.run();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) {
      o.pass = false;
      o.summary += "; over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget";
    }
    all = all && o.pass;
    std::cout << "criterion " << c.number << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.name
              << " (" << std::fixed << std::setprecision(2) << secs << " s) " << o.summary
              << std::endl;
  }
  return all ? 0 : 1;
}
