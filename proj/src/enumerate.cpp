#include "idnf/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace idnf {

SizeBound parse_bounds(std::string_view text, SizeBound base) {
  SizeBound b = base;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view item = text.substr(pos, end - pos);
    pos = end + 1;
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw ParseError("bound '" + std::string(item) + "' lacks '='");
    const std::string key(item.substr(0, eq));
    const std::string val(item.substr(eq + 1));
    if (val.empty() || !std::all_of(val.begin(), val.end(), ::isdigit) || val.size() > 6)
      throw ParseError("bound '" + key + "' needs a natural number");
    const unsigned v = static_cast<unsigned>(std::stoul(val));
    if (key == "depth") {
      if (v < 1) throw ParseError("depth bound must be at least 1");
      b.depth = v;
    } else if (key == "deg" || key == "degree") {
      b.degree = v;
    } else if (key == "order") {
      b.order = v;
    } else if (key == "vars") {
      if (v < 1) throw ParseError("vars bound must be at least 1");
      b.vars = v;
    } else {
      throw ParseError("unknown bound '" + key + "'");
    }
  }
  return b;
}

std::vector<DiffVar> letters(unsigned vars, unsigned max_order) {
  std::vector<DiffVar> out;
  for (std::uint32_t v = 0; v < vars; ++v)
    for (std::uint32_t k = 0; k <= max_order; ++k) out.push_back({v, k});
  return out;
}

std::vector<CommMonomial> monomials(const std::vector<DiffVar>& alphabet, unsigned max_degree,
                                    unsigned min_degree) {
  std::vector<CommMonomial> out;
  std::vector<CommMonomial::Factor> cur;
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i == alphabet.size()) {
      CommMonomial m = CommMonomial::from_factors(cur);
      if (m.degree() >= min_degree) out.push_back(std::move(m));
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      if (e) cur.push_back({alphabet[i], e});
      rec(i + 1, left - e);
      if (e) cur.pop_back();
    }
  };
  rec(0, max_degree);
  std::sort(out.begin(), out.end(), MonomialLess{});
  return out;
}

std::vector<TensorWord> words(const std::vector<DiffVar>& alphabet, unsigned max_depth,
                              unsigned max_degree) {
  std::vector<std::vector<CommMonomial>> by_degree(max_degree + 1);
  for (auto& m : monomials(alphabet, max_degree)) by_degree[m.degree()].push_back(m);
  std::vector<TensorWord> out;
  std::vector<CommMonomial> cur;
  std::function<void(unsigned)> rec = [&](unsigned left) {
    if (!cur.empty()) out.emplace_back(cur);
    if (cur.size() == max_depth) return;
    for (unsigned d = 0; d <= left; ++d)
      for (const auto& m : by_degree[d]) {
        cur.push_back(m);
        rec(left - d);
        cur.pop_back();
      }
  };
  rec(max_degree);
  std::sort(out.begin(), out.end(), WordLess{});
  return out;
}

std::size_t Sampler::index(std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
}

CommMonomial Sampler::monomial(const std::vector<DiffVar>& alphabet, unsigned max_degree) {
  const unsigned deg = static_cast<unsigned>(index(max_degree + 1));
  std::vector<CommMonomial::Factor> f;
  for (unsigned i = 0; i < deg; ++i) f.push_back({alphabet[index(alphabet.size())], 1});
  return CommMonomial::from_factors(std::move(f));
}

TensorWord Sampler::word(const std::vector<DiffVar>& alphabet, unsigned max_depth,
                         unsigned max_degree) {
  const std::size_t depth = 1 + index(max_depth);
  std::vector<CommMonomial> slots(depth);
  const unsigned deg = static_cast<unsigned>(index(max_degree + 1));
  std::vector<std::vector<CommMonomial::Factor>> f(depth);
  for (unsigned i = 0; i < deg; ++i) f[index(depth)].push_back({alphabet[index(alphabet.size())], 1});
  for (std::size_t i = 0; i < depth; ++i) slots[i] = CommMonomial::from_factors(std::move(f[i]));
  return TensorWord(std::move(slots));
}

Rational Sampler::coefficient() {
  static const Rational choices[] = {Rational(1), Rational(-1), Rational(2), Rational(-2),
                                     Rational(1, 2), Rational(-1, 2), Rational(3, 2),
                                     Rational(-3, 2)};
  return choices[index(std::size(choices))];
}

TensorPoly Sampler::poly(const std::vector<DiffVar>& alphabet, unsigned max_depth,
                         unsigned max_degree, unsigned max_terms) {
  TensorPoly p;
  const std::size_t terms = 1 + index(max_terms);
  for (std::size_t i = 0; i < terms; ++i) p.add(word(alphabet, max_depth, max_degree), coefficient());
  return p;
}

}  // namespace idnf
