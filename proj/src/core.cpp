#include "idnf/core.hpp"

#include <algorithm>
#include <set>

namespace idnf {

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw DomainError("variable table is empty");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw DomainError("empty variable name");
    if (!seen.insert(n).second) throw DomainError("duplicate variable '" + n + "'");
  }
}

std::optional<std::size_t> VarTable::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

TruncationOrder TruncationOrder::bounded(unsigned n) {
  if (n < 1) throw DomainError("truncation order must be at least 1");
  TruncationOrder t;
  t.bound_ = n;
  return t;
}

unsigned TruncationOrder::value() const {
  if (!bound_) throw DomainError("truncation order is unbounded");
  return *bound_;
}

// ---------------------------------------------------------------------------
// CommMonomial

CommMonomial CommMonomial::of(DiffVar letter, std::uint32_t multiplicity) {
  CommMonomial m;
  if (multiplicity == 0) return m;
  m.factors_.push_back({letter, multiplicity});
  m.degree_ = multiplicity;
  return m;
}

CommMonomial CommMonomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) {
    return cmp_diff_var(a.letter, b.letter) > 0;
  });
  CommMonomial m;
  for (const auto& f : factors) {
    if (f.multiplicity == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().letter == f.letter)
      m.factors_.back().multiplicity += f.multiplicity;
    else
      m.factors_.push_back(f);
    m.degree_ += f.multiplicity;
  }
  return m;
}

std::uint32_t CommMonomial::multiplicity(DiffVar letter) const {
  for (const auto& f : factors_)
    if (f.letter == letter) return f.multiplicity;
  return 0;
}

std::optional<CommMonomial::Factor> CommMonomial::smallest() const {
  if (factors_.empty()) return std::nullopt;
  return factors_.back();
}

std::uint32_t CommMonomial::max_order() const {
  std::uint32_t m = 0;
  for (const auto& f : factors_) m = std::max(m, f.letter.order);
  return m;
}

std::strong_ordering cmp_monomial(const CommMonomial& u, const CommMonomial& v) {
  if (u.degree() != v.degree()) return u.degree() <=> v.degree();
  auto fu = u.factors();
  auto fv = v.factors();
  std::size_t i = 0, j = 0;
  std::uint32_t ru = fu.empty() ? 0 : fu[0].multiplicity;
  std::uint32_t rv = fv.empty() ? 0 : fv[0].multiplicity;
  while (i < fu.size() && j < fv.size()) {
    auto c = cmp_diff_var(fu[i].letter, fv[j].letter);
    if (c != 0) return c;
    const std::uint32_t common = std::min(ru, rv);
    ru -= common;
    rv -= common;
    if (ru == 0 && ++i < fu.size()) ru = fu[i].multiplicity;
    if (rv == 0 && ++j < fv.size()) rv = fv[j].multiplicity;
  }
  return std::strong_ordering::equal;
}

CommMonomial mono_mul(const CommMonomial& u, const CommMonomial& v) {
  if (u.is_one()) return v;
  if (v.is_one()) return u;
  std::vector<CommMonomial::Factor> all(u.factors().begin(), u.factors().end());
  all.insert(all.end(), v.factors().begin(), v.factors().end());
  return CommMonomial::from_factors(std::move(all));
}

std::optional<CommMonomial> mono_div(const CommMonomial& u, const CommMonomial& v) {
  std::vector<CommMonomial::Factor> rest(u.factors().begin(), u.factors().end());
  for (const auto& f : v.factors()) {
    auto it = std::find_if(rest.begin(), rest.end(),
                           [&](const CommMonomial::Factor& g) { return g.letter == f.letter; });
    if (it == rest.end() || it->multiplicity < f.multiplicity) return std::nullopt;
    it->multiplicity -= f.multiplicity;
  }
  return CommMonomial::from_factors(std::move(rest));
}

DiffPoly poly_mul(const DiffPoly& p, const DiffPoly& q) {
  DiffPoly r;
  for (const auto& [a, ca] : p)
    for (const auto& [b, cb] : q) r.add(mono_mul(a, b), ca * cb);
  return r;
}

// ---------------------------------------------------------------------------
// derivation

namespace {

std::optional<DiffVar> derive_letter(DiffVar a, const TruncationOrder& n) {
  if (!n.admits(std::uint64_t{a.order} + 1)) return std::nullopt;
  return DiffVar{a.var, a.order + 1};
}

// d of the product of `factors`, peeling one copy of the largest letter as
// in d(u1 u2...uk) = d(u1) u2...uk + u1 d(u2...uk) + λ d(u1) d(u2...uk).
DiffPoly derive_factors(std::vector<CommMonomial::Factor> factors, const Weight& lambda,
                        const TruncationOrder& n) {
  while (!factors.empty() && factors.front().multiplicity == 0) factors.erase(factors.begin());
  if (factors.empty()) return {};
  const DiffVar head = factors.front().letter;
  std::vector<CommMonomial::Factor> rest = factors;
  rest.front().multiplicity -= 1;
  const CommMonomial rest_mono = CommMonomial::from_factors(rest);
  const auto d_head = derive_letter(head, n);
  if (rest_mono.is_one()) {
    return d_head ? DiffPoly::of(CommMonomial::of(*d_head)) : DiffPoly{};
  }
  DiffPoly d_rest = derive_factors(std::move(rest), lambda, n);
  DiffPoly out;
  const CommMonomial head_mono = CommMonomial::of(head);
  for (const auto& [m, c] : d_rest) out.add(mono_mul(head_mono, m), c);
  if (d_head) {
    const CommMonomial dh = CommMonomial::of(*d_head);
    out.add(mono_mul(dh, rest_mono), 1);
    if (!lambda.is_zero())
      for (const auto& [m, c] : d_rest) out.add(mono_mul(dh, m), c * lambda.value());
  }
  return out;
}

}  // namespace

DiffPoly derive_monomial(const CommMonomial& u, const Weight& lambda, const TruncationOrder& n) {
  return derive_factors({u.factors().begin(), u.factors().end()}, lambda, n);
}

DiffPoly derive_poly(const DiffPoly& p, const Weight& lambda, const TruncationOrder& n) {
  DiffPoly out;
  for (const auto& [m, c] : p) out.add_scaled(derive_monomial(m, lambda, n), c);
  return out;
}

std::pair<CommMonomial, Rational> leading_term(const DiffPoly& p) {
  if (p.is_zero()) throw DomainError("no leading term");
  auto [m, c] = p.leading();
  return {m, c};
}

bool is_functional(const CommMonomial& u) {
  auto s = u.smallest();
  if (!s) return true;
  return s->letter.order == 0 || s->multiplicity > 1;
}

LeadingDerivative invert_leading_derivative(const CommMonomial& w, const Weight& /*lambda*/,
                                            const TruncationOrder& n) {
  if (is_functional(w)) throw DomainError("not a leading derivative");
  const DiffVar top = w.smallest()->letter;
  if (!n.admits(top.order)) throw DomainError("letter exceeds the truncation order");
  const DiffVar below{top.var, top.order - 1};
  CommMonomial v = mono_mul(*mono_div(w, CommMonomial::of(top)), CommMonomial::of(below));
  // Only the term differentiating one copy of x^(l-1) reaches w.
  Rational alpha(v.multiplicity(below));
  return {std::move(v), std::move(alpha)};
}

FunctionalDecomposition decompose_functional(const DiffPoly& p, const Weight& lambda,
                                             const TruncationOrder& n, Fuel fuel) {
  FunctionalDecomposition out;
  DiffPoly rest = p;
  std::size_t steps = 0;
  while (!rest.is_zero()) {
    fuel.check(++steps, "decompose_functional");
    // Functional monomials above the largest non-functional one are final:
    // every later subtraction only touches smaller monomials.
    auto it = rest.terms().rbegin();
    while (it != rest.terms().rend() && is_functional(it->first)) ++it;
    if (it == rest.terms().rend()) {
      out.functional += rest;
      break;
    }
    const CommMonomial w = it->first;
    const Rational c = it->second;
    const auto inv = invert_leading_derivative(w, lambda, n);
    const Rational scale = c / inv.coefficient;
    out.integrand.add(inv.integrand, scale);
    rest.add_scaled(derive_monomial(inv.integrand, lambda, n), -scale);
    std::vector<CommMonomial> done;
    for (auto jt = rest.terms().rbegin(); jt != rest.terms().rend(); ++jt) {
      if (cmp_monomial(jt->first, w) <= 0) break;
      done.push_back(jt->first);
    }
    for (const auto& m : done) {
      out.functional.add(m, rest.coefficient(m));
      rest.erase(m);
    }
  }
  return out;
}

}  // namespace idnf
