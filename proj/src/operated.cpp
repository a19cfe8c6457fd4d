#include "idnf/operated.hpp"

#include <algorithm>

namespace idnf {

namespace {

const std::vector<BracketedTerm>& no_children() {
  static const std::vector<BracketedTerm> empty;
  return empty;
}

int kind_rank(BracketedTerm::Kind k) { return static_cast<int>(k); }

}  // namespace

BracketedTerm BracketedTerm::var(DiffVar x) {
  BracketedTerm t;
  t.kind_ = Kind::Var;
  t.letter_ = x;
  return t;
}

BracketedTerm BracketedTerm::P(BracketedTerm t) {
  BracketedTerm r;
  r.kind_ = Kind::P;
  r.children_ = std::make_shared<const std::vector<BracketedTerm>>(1, std::move(t));
  return r;
}

BracketedTerm BracketedTerm::D(BracketedTerm t) {
  BracketedTerm r;
  r.kind_ = Kind::D;
  r.children_ = std::make_shared<const std::vector<BracketedTerm>>(1, std::move(t));
  return r;
}

BracketedTerm BracketedTerm::D(BracketedTerm t, std::uint32_t times) {
  for (std::uint32_t i = 0; i < times; ++i) t = D(std::move(t));
  return t;
}

BracketedTerm BracketedTerm::prod(std::vector<BracketedTerm> factors) {
  std::vector<BracketedTerm> flat;
  for (auto& f : factors) {
    if (f.kind_ == Kind::One) continue;
    if (f.kind_ == Kind::Prod) {
      flat.insert(flat.end(), f.children_->begin(), f.children_->end());
    } else {
      flat.push_back(std::move(f));
    }
  }
  if (flat.empty()) return one();
  if (flat.size() == 1) return std::move(flat.front());
  std::sort(flat.begin(), flat.end(), TermLess{});
  BracketedTerm r;
  r.kind_ = Kind::Prod;
  r.children_ = std::make_shared<const std::vector<BracketedTerm>>(std::move(flat));
  return r;
}

BracketedTerm BracketedTerm::prod(BracketedTerm a, BracketedTerm b) {
  std::vector<BracketedTerm> v;
  v.push_back(std::move(a));
  v.push_back(std::move(b));
  return prod(std::move(v));
}

BracketedTerm BracketedTerm::monomial(const CommMonomial& u) {
  std::vector<BracketedTerm> v;
  for (const auto& f : u.factors())
    for (std::uint32_t i = 0; i < f.multiplicity; ++i) v.push_back(var(f.letter));
  return prod(std::move(v));
}

const std::vector<BracketedTerm>& BracketedTerm::children() const {
  return children_ ? *children_ : no_children();
}

std::size_t BracketedTerm::size() const {
  std::size_t s = 1;
  for (const auto& c : children()) s += c.size();
  return s;
}

bool operator==(const BracketedTerm& a, const BracketedTerm& b) { return cmp_term(a, b) == 0; }

std::strong_ordering cmp_term(const BracketedTerm& a, const BracketedTerm& b) {
  if (a.kind() != b.kind()) return kind_rank(a.kind()) <=> kind_rank(b.kind());
  switch (a.kind()) {
    case BracketedTerm::Kind::One:
      return std::strong_ordering::equal;
    case BracketedTerm::Kind::Var:
      return cmp_diff_var(a.letter(), b.letter());
    default:
      break;
  }
  const auto& ca = a.children();
  const auto& cb = b.children();
  if (&ca == &cb) return std::strong_ordering::equal;
  if (ca.size() != cb.size()) return ca.size() <=> cb.size();
  for (std::size_t i = 0; i < ca.size(); ++i) {
    auto c = cmp_term(ca[i], cb[i]);
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

BracketedTerm embed(const TensorWord& w) {
  BracketedTerm inner = BracketedTerm::monomial(w.back());
  for (std::size_t i = w.depth() - 1; i-- > 0;)
    inner = BracketedTerm::prod(BracketedTerm::monomial(w.slot(i)), BracketedTerm::P(inner));
  return inner;
}

TermPoly embed(const TensorPoly& p) {
  TermPoly out;
  for (const auto& [w, c] : p) out.add(embed(w), c);
  return out;
}

namespace {

using Kind = BracketedTerm::Kind;

// Letter x^(k+l) for D^l(x^(k)), when the term has that shape.
std::optional<DiffVar> as_letter(const BracketedTerm& t, const TruncationOrder& n) {
  std::uint32_t l = 0;
  const BracketedTerm* cur = &t;
  while (cur->kind() == Kind::D) {
    ++l;
    cur = &cur->arg();
  }
  if (cur->kind() != Kind::Var) return std::nullopt;
  const DiffVar x = cur->letter();
  if (l > 0 && !n.admits(std::uint64_t{x.order} + l)) return std::nullopt;
  return DiffVar{x.var, x.order + l};
}

}  // namespace

std::optional<TensorWord> as_drb_monomial(const BracketedTerm& t, const TruncationOrder& n) {
  std::vector<CommMonomial::Factor> letters;
  const BracketedTerm* p_child = nullptr;
  auto take = [&](const BracketedTerm& f) -> bool {
    if (f.kind() == Kind::P) {
      if (p_child) return false;
      p_child = &f;
      return true;
    }
    auto x = as_letter(f, n);
    if (!x) return false;
    letters.push_back({*x, 1});
    return true;
  };
  switch (t.kind()) {
    case Kind::One:
      break;
    case Kind::Prod:
      for (const auto& f : t.children())
        if (!take(f)) return std::nullopt;
      break;
    default:
      if (!take(t)) return std::nullopt;
  }
  std::vector<CommMonomial> slots{CommMonomial::from_factors(std::move(letters))};
  if (p_child) {
    auto rest = as_drb_monomial(p_child->arg(), n);
    if (!rest) return std::nullopt;
    slots.insert(slots.end(), rest->slots().begin(), rest->slots().end());
  }
  return TensorWord(std::move(slots));
}

namespace {

class Rewriter {
 public:
  Rewriter(const Weight& lambda, const TruncationOrder& n, Strategy s)
      : lambda_(lambda), n_(n), strategy_(s) {}

  // One rewrite step somewhere in t, or nullopt if t is irreducible.
  std::optional<TermPoly> step(const BracketedTerm& t) const {
    if (strategy_ == Strategy::Outermost) {
      if (auto r = at_root(t)) return r;
      return in_children(t);
    }
    if (auto r = in_children(t)) return r;
    return at_root(t);
  }

 private:
  std::optional<TermPoly> in_children(const BracketedTerm& t) const {
    const auto& ch = t.children();
    for (std::size_t i = 0; i < ch.size(); ++i) {
      auto r = step(ch[i]);
      if (!r) continue;
      TermPoly out;
      for (const auto& [c, coef] : *r) out.add(replace_child(t, i, c), coef);
      return out;
    }
    return std::nullopt;
  }

  static BracketedTerm replace_child(const BracketedTerm& t, std::size_t i, const BracketedTerm& c) {
    switch (t.kind()) {
      case Kind::P:
        return BracketedTerm::P(c);
      case Kind::D:
        return BracketedTerm::D(c);
      default: {
        std::vector<BracketedTerm> ch = t.children();
        ch[i] = c;
        return BracketedTerm::prod(std::move(ch));
      }
    }
  }

  std::optional<TermPoly> at_root(const BracketedTerm& t) const {
    if (t.kind() == Kind::D) return rewrite_D(t.arg());
    if (t.kind() == Kind::Prod) return rewrite_PP(t);
    return std::nullopt;
  }

  std::optional<TermPoly> rewrite_D(const BracketedTerm& u) const {
    TermPoly out;
    switch (u.kind()) {
      case Kind::One:  // R1
        return out;
      case Kind::Var: {  // R3
        const DiffVar x = u.letter();
        if (n_.admits(std::uint64_t{x.order} + 1))
          out.add(BracketedTerm::var({x.var, x.order + 1}), 1);
        return out;
      }
      case Kind::P:  // R4
        out.add(u.arg(), 1);
        return out;
      case Kind::Prod: {  // R2, peeling the first factor
        const auto& ch = u.children();
        const BracketedTerm& a = ch.front();
        const BracketedTerm b = BracketedTerm::prod(std::vector<BracketedTerm>(ch.begin() + 1, ch.end()));
        const BracketedTerm da = BracketedTerm::D(a);
        const BracketedTerm db = BracketedTerm::D(b);
        out.add(BracketedTerm::prod(da, b), 1);
        out.add(BracketedTerm::prod(a, db), 1);
        if (!lambda_.is_zero()) out.add(BracketedTerm::prod(da, db), lambda_.value());
        return out;
      }
      case Kind::D:
        return std::nullopt;
    }
    return std::nullopt;
  }

  // R5 on the first two P factors of a product.
  std::optional<TermPoly> rewrite_PP(const BracketedTerm& t) const {
    const auto& ch = t.children();
    std::vector<std::size_t> ps;
    for (std::size_t i = 0; i < ch.size() && ps.size() < 2; ++i)
      if (ch[i].kind() == Kind::P) ps.push_back(i);
    if (ps.size() < 2) return std::nullopt;
    const BracketedTerm& u = ch[ps[0]].arg();
    const BracketedTerm& v = ch[ps[1]].arg();
    std::vector<BracketedTerm> rest;
    for (std::size_t i = 0; i < ch.size(); ++i)
      if (i != ps[0] && i != ps[1]) rest.push_back(ch[i]);
    auto with_rest = [&](BracketedTerm x) {
      std::vector<BracketedTerm> f = rest;
      f.push_back(std::move(x));
      return BracketedTerm::prod(std::move(f));
    };
    TermPoly out;
    out.add(with_rest(BracketedTerm::P(BracketedTerm::prod(u, BracketedTerm::P(v)))), 1);
    out.add(with_rest(BracketedTerm::P(BracketedTerm::prod(BracketedTerm::P(u), v))), 1);
    if (!lambda_.is_zero())
      out.add(with_rest(BracketedTerm::P(BracketedTerm::prod(u, v))), lambda_.value());
    return out;
  }

  const Weight& lambda_;
  const TruncationOrder& n_;
  Strategy strategy_;
};

// Irreducible terms contain no D and no product with two P factors; such a
// term is exactly the embedding of a tensor word.
std::optional<TensorWord> irreducible_word(const BracketedTerm& t) {
  auto w = as_drb_monomial(t, TruncationOrder::unbounded());
  if (w && embed(*w) == t) return w;
  return std::nullopt;
}

}  // namespace

TensorPoly red(const TermPoly& p, const Weight& lambda, const TruncationOrder& n,
               Strategy strategy, Fuel fuel) {
  Rewriter rw(lambda, n, strategy);
  TermPoly pending = p;
  TensorPoly out;
  std::size_t steps = 0;
  while (!pending.is_zero()) {
    fuel.check(++steps, "red");
    const auto it = std::prev(pending.terms().end());
    const BracketedTerm t = it->first;
    const Rational c = it->second;
    pending.erase(t);
    if (auto r = rw.step(t)) {
      pending.add_scaled(*r, c);
      continue;
    }
    auto w = irreducible_word(t);
    if (!w) throw Error("red: irreducible term is not a DRB monomial");
    out.add(std::move(*w), c);
  }
  return out;
}

TensorPoly red(const BracketedTerm& t, const Weight& lambda, const TruncationOrder& n,
               Strategy strategy, Fuel fuel) {
  return red(TermPoly::of(t), lambda, n, strategy, fuel);
}

}  // namespace idnf
