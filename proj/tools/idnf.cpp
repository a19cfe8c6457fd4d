// idnf: normal forms and verification in the free commutative
// integro-differential algebra.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "idnf/syntax.hpp"
#include "idnf/verify.hpp"

using namespace idnf;

namespace {

enum Exit { kOk = 0, kUsage = 1, kVerifyFailed = 2, kFuel = 3 };

struct Session {
  std::string lambda = "0";
  std::string order = "inf";
  std::string vars = "x";
  std::string format = "tensor";
  std::uint64_t seed = 1;
  std::string bounds;
  std::size_t samples = 100;
  bool json = false;

  Weight weight() const { return Weight(parse_rational(lambda)); }

  TruncationOrder truncation() const {
    if (order == "inf") return TruncationOrder::unbounded();
    if (order.empty() || order.find_first_not_of("0123456789") != std::string::npos ||
        order.size() > 6)
      throw ParseError("order must be a natural number or 'inf'");
    return TruncationOrder::bounded(static_cast<unsigned>(std::stoul(order)));
  }

  VarTable table() const {
    std::vector<std::string> names;
    std::size_t pos = 0;
    while (pos <= vars.size()) {
      std::size_t end = vars.find(',', pos);
      if (end == std::string::npos) end = vars.size();
      names.push_back(vars.substr(pos, end - pos));
      pos = end + 1;
    }
    return VarTable(names);
  }

  OutputFormat output() const {
    return format == "operated" ? OutputFormat::Operated : OutputFormat::Tensor;
  }
};

TensorPoly read(const std::string& text, const Session& s) {
  const TruncationOrder n = s.truncation();
  return red(parse_expression(text, s.table(), n), s.weight(), n);
}

NormalElement read_normal(const std::string& text, const Session& s) {
  return normal_form(read(text, s), s.weight(), s.truncation());
}

void print(const TensorPoly& p, const Session& s) {
  std::cout << format_tensor(p, s.table(), s.output()) << "\n";
}

int verify(const std::string& suite, const Session& s) {
  VerifyConfig cfg;
  cfg.lambdas = {s.weight()};
  cfg.orders = {s.truncation()};
  cfg.tables = {s.table()};
  cfg.seed = s.seed;
  cfg.samples = s.samples;
  SizeBound base;
  if (cfg.orders.front().is_bounded()) base.order = cfg.orders.front().value();
  cfg.bounds = parse_bounds(s.bounds, base);

  SuiteReport r;
  if (suite == "axioms") r = verify_axioms(cfg);
  else if (suite == "gsb") r = verify_gsb(cfg);
  else if (suite == "order") r = verify_order(cfg);
  else if (suite == "directsum") r = verify_directsum(cfg);
  else if (suite == "confluence") r = verify_confluence(cfg);
  else if (suite == "filtration") r = verify_filtration(cfg);
  else throw ParseError("unknown suite '" + suite + "'");

  if (s.json) {
    std::cout << r.to_json() << "\n";
  } else {
    std::cout << "suite " << r.suite << ": " << (r.passed() ? "pass" : "FAIL") << " ("
              << r.checks << " checks, " << r.failure_count << " failures)\n";
    for (const auto& [k, v] : r.counts) std::cout << "  " << v << " " << k << "\n";
    for (const auto& [k, v] : r.failures_by_check)
      if (v > 0) std::cout << "  check " << k << ": " << v << " failures\n";
    for (const auto& f : r.failures)
      std::cout << "  reproducer [" << f.check << "] " << f.setting << "\n    " << f.detail << "\n";
  }
  return r.passed() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal forms in the free commutative integro-differential algebra"};
  app.require_subcommand(1);
  app.fallthrough();
  Session s;
  app.add_option("--lambda", s.lambda, "weight, an integer or p/q")->capture_default_str();
  app.add_option("--order", s.order, "truncation order n, or inf")->capture_default_str();
  app.add_option("--vars", s.vars, "variables in descending order, comma separated")
      ->capture_default_str();
  app.add_option("--format", s.format, "output format")
      ->check(CLI::IsMember({"tensor", "operated"}))
      ->capture_default_str();
  app.add_option("--seed", s.seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--bounds", s.bounds, "size bounds, e.g. depth=3,deg=3,order=2");
  app.add_option("--samples", s.samples, "random samples per setting")->capture_default_str();
  app.add_flag("--json", s.json, "machine-readable verification report");

  std::string a, b, suite;
  int code = kOk;
  auto unary = [&](const char* name, const char* help, std::function<void()> body) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("expr", a, "expression")->required();
    cmd->callback(std::move(body));
    return cmd;
  };
  unary("normal-form", "normal form in the quotient", [&] {
    print(read_normal(a, s).value(), s);
  });
  unary("reduce", "reduce a bracketed expression to DRB monomials", [&] { print(read(a, s), s); });
  unary("d", "derivation in the quotient", [&] {
    print(id_d(read_normal(a, s), s.weight(), s.truncation()).value(), s);
  });
  unary("P", "integral operator in the quotient", [&] {
    print(id_P(read_normal(a, s), s.weight(), s.truncation()).value(), s);
  });
  unary("decompose", "split a differential polynomial into functional part plus d(integrand)", [&] {
    DiffPoly p;
    for (const auto& [w, c] : read(a, s)) {
      if (w.depth() != 1) throw ParseError("decompose needs an expression without P");
      p.add(w.front(), c);
    }
    const auto dec = decompose_functional(p, s.weight(), s.truncation());
    std::cout << "functional: " << format_poly(dec.functional, s.table()) << "\n"
              << "integrand: " << format_poly(dec.integrand, s.table()) << "\n";
  });
  auto* mul = app.add_subcommand("mul", "product in the quotient");
  mul->add_option("a", a, "left factor")->required();
  mul->add_option("b", b, "right factor")->required();
  mul->callback([&] {
    print(id_mul(read_normal(a, s), read_normal(b, s), s.weight(), s.truncation()).value(), s);
  });
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("suite", suite, "axioms, gsb, order, directsum, confluence or filtration")
      ->required();
  ver->callback([&] { code = verify(suite, s); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  } catch (const FuelExhausted& e) {
    std::cerr << "idnf: " << e.what() << "\n";
    return kFuel;
  } catch (const Error& e) {
    std::cerr << "idnf: " << e.what() << "\n";
    return kUsage;
  }
  return code;
}
