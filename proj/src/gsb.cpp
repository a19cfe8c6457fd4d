#include "idnf/gsb.hpp"

#include "idnf/integro.hpp"
#include "idnf/syntax.hpp"

namespace idnf {

StarWord::StarWord(TensorWord skeleton, std::size_t slot, std::uint32_t order)
    : skeleton_(std::move(skeleton)), slot_(slot), order_(order) {
  if (slot_ >= skeleton_.depth()) throw DomainError("star slot out of range");
}

BracketedTerm StarWord::fill(const BracketedTerm& filler) const {
  const BracketedTerm star = BracketedTerm::D(filler, order_);
  auto slot_term = [&](std::size_t i) {
    BracketedTerm m = BracketedTerm::monomial(skeleton_.slot(i));
    return i == slot_ ? BracketedTerm::prod(std::move(m), star) : m;
  };
  BracketedTerm inner = slot_term(skeleton_.depth() - 1);
  for (std::size_t i = skeleton_.depth() - 1; i-- > 0;)
    inner = BracketedTerm::prod(slot_term(i), BracketedTerm::P(inner));
  return inner;
}

StarWord StarWord::lifted(const CommMonomial& m) const {
  return StarWord(skeleton_.times_front(m).lifted(), slot_ + 1, order_);
}

std::optional<TensorWord> StarWord::plug(const TensorWord& w) const {
  if (order_ != 0 || slot_ + 1 != skeleton_.depth()) return std::nullopt;
  std::vector<CommMonomial> s(skeleton_.slots().begin(), skeleton_.slots().end());
  s.back() = mono_mul(s.back(), w.front());
  s.insert(s.end(), w.slots().begin() + 1, w.slots().end());
  return TensorWord(std::move(s));
}

TensorPoly substitute(const StarWord& q, const TensorWord& w, const Weight& lambda,
                      const TruncationOrder& n) {
  if (auto direct = q.plug(w)) return TensorPoly::of(std::move(*direct));
  return red(q.fill(embed(w)), lambda, n);
}

TensorPoly substitute(const StarWord& q, const TensorPoly& s, const Weight& lambda,
                      const TruncationOrder& n) {
  TensorPoly out;
  for (const auto& [w, c] : s) out.add_scaled(substitute(q, w, lambda, n), c);
  return out;
}

bool is_normal(const StarWord& q, const TensorWord& w, const TruncationOrder& n) {
  return as_drb_monomial(q.fill(embed(w)), n).has_value();
}

bool is_normal(const StarWord& q, const TensorPoly& s, const TruncationOrder& n) {
  if (s.is_zero()) throw DomainError("normality of a zero substitution");
  return is_normal(q, s.leading().first, n);
}

Classification classify(const StarWord& q) {
  Classification c;
  if (q.order() >= 1) {
    c.type = StarType::I;
    c.form = Classification::Form::Derivative;
    c.order = q.order();
    c.inner = q.without_derivative();
    return c;
  }
  c.type = StarType::II;
  const TensorWord& sk = q.skeleton();
  c.s = sk.front();
  if (q.slot() == 0) {
    c.form = Classification::Form::StarTimes;
    c.t = sk.depth() == 1 ? TensorWord::unit() : sk.tail().lifted();
  } else {
    c.form = Classification::Form::SP;
    c.inner = StarWord(sk.tail(), q.slot() - 1, 0);
  }
  return c;
}

TensorPoly phi_raw(const TensorWord& u, const TensorPoly& v, const Weight& lambda,
                   const TruncationOrder& n) {
  const TensorPoly U = TensorPoly::of(u);
  const TensorPoly dU = apply_d(U, lambda, n);
  const TensorPoly Pv = apply_P(v);
  TensorPoly out = apply_P(shuffle_mul(dU, Pv, lambda));
  out -= shuffle_mul(U, Pv, lambda);
  out += apply_P(shuffle_mul(U, v, lambda));
  if (!lambda.is_zero()) out.add_scaled(apply_P(shuffle_mul(dU, v, lambda)), lambda.value());
  return out;
}

TensorPoly phi_raw(const TensorWord& u, const TensorWord& v, const Weight& lambda,
                   const TruncationOrder& n) {
  return phi_raw(u, TensorPoly::of(v), lambda, n);
}

GsGenerator phi(const TensorWord& u, const TensorWord& v, const Weight& lambda,
                const TruncationOrder& n) {
  if (u.is_P_image() || u == TensorWord::unit()) throw DomainError("generator vanishes");
  TensorPoly raw = phi_raw(u, v, lambda, n);
  if (raw.is_zero()) throw DomainError("generator vanishes");
  const Rational scale = raw.leading().second;
  raw *= Rational(1) / scale;
  return {u, v, std::move(raw), scale};
}

TensorWord leading_of_phi(const TensorWord& u, const TensorWord& v, const Weight& lambda,
                          const TruncationOrder& n) {
  if (u.is_P_image() || u == TensorWord::unit()) throw DomainError("generator vanishes");
  const DiffPoly du0 = derive_monomial(u.front(), lambda, n);
  if (du0.is_zero()) throw DomainError("d(u0) vanishes");
  std::vector<CommMonomial> slots{CommMonomial{}, du0.leading().first};
  if (u.depth() == 1) {
    slots.insert(slots.end(), v.slots().begin(), v.slots().end());
  } else {
    // P(û) ⋄ P(v) = 1 ⊗ (û ш v)
    const TensorPoly sh = shuffle_mul(u.tail().lifted(), v.lifted(), lambda);
    const TensorWord& top = sh.leading().first;
    slots.insert(slots.end(), top.slots().begin() + 1, top.slots().end());
  }
  return TensorWord(std::move(slots));
}

// --- compositions -----------------------------------------------------------

std::string to_string(CompositionKind k) {
  switch (k) {
    case CompositionKind::Multiplication:
      return "multiplication";
    case CompositionKind::Derivation:
      return "derivation";
    case CompositionKind::Intersection:
      return "intersection";
    case CompositionKind::Including:
      return "including";
  }
  return "?";
}

TensorPoly evaluate(const CertificateEntry& e, const Weight& lambda, const TruncationOrder& n) {
  return e.coefficient * substitute(e.context, phi_raw(e.u, e.v, lambda, n), lambda, n);
}

TensorPoly evaluate(const std::vector<CertificateEntry>& c, const Weight& lambda,
                    const TruncationOrder& n) {
  TensorPoly out;
  for (const auto& e : c) out += evaluate(e, lambda, n);
  return out;
}

namespace {

CompositionReport make_report(CompositionKind kind, std::string participants) {
  CompositionReport r;
  r.kind = kind;
  r.participants = std::move(participants);
  return r;
}

std::string describe(const GsGenerator& g) {
  return "phi(" + format_word(g.u) + ", " + format_word(g.v) + ")";
}

void add_entries(std::vector<CertificateEntry>& out, const Rational& c, const StarWord& q,
                 const TensorWord& u, const TensorPoly& vs) {
  for (const auto& [v, cv] : vs) out.push_back({c * cv, q, u, v});
}

// P(φ(u,v) w) as a sum of c q|φ(u, v'), by induction on the depth of w.
void certify_P_times(std::vector<CertificateEntry>& out, const TensorWord& u,
                     const TensorWord& v, const TensorWord& w, const Weight& lambda,
                     const TruncationOrder& n) {
  const StarWord beside(TensorWord({CommMonomial{}, w.front()}), 1, 0);
  if (w.depth() == 1) {
    out.push_back({Rational(1), beside, u, v});
    return;
  }
  // φ w = w1 (P(φ w̃) + φ(u, w̃P(v)) + φ(u, vP(w̃)) + λφ(u, v w̃))
  const TensorWord wt = w.tail();
  std::vector<CertificateEntry> inner;
  certify_P_times(inner, u, v, wt, lambda, n);
  for (auto& e : inner) out.push_back({e.coefficient, e.context.lifted(w.front()), e.u, e.v});
  const TensorPoly V = TensorPoly::of(v);
  const TensorPoly Wt = TensorPoly::of(wt);
  add_entries(out, 1, beside, u, shuffle_mul(Wt, apply_P(V), lambda));
  add_entries(out, 1, beside, u, shuffle_mul(V, apply_P(Wt), lambda));
  if (!lambda.is_zero()) add_entries(out, lambda.value(), beside, u, shuffle_mul(V, Wt, lambda));
}

}  // namespace

CompositionReport check_derivation_composition(const GsGenerator& g, std::uint32_t l,
                                               const Weight& lambda, const TruncationOrder& n) {
  if (l < 1) throw DomainError("derivation composition needs l >= 1");
  CompositionReport r = make_report(CompositionKind::Derivation, describe(g) + " d^" + std::to_string(l));
  TensorPoly p = g.expansion;
  for (std::uint32_t i = 0; i < l; ++i) p = apply_d(p, lambda, n);
  r.residual = std::move(p);
  r.trivial = r.residual.is_zero();
  return r;
}

TensorPoly multiplication_identity_residual(const TensorWord& u, const TensorWord& v,
                                            const TensorWord& w, const Weight& lambda,
                                            const TruncationOrder& n) {
  const TensorPoly f = phi_raw(u, v, lambda, n);
  const TensorPoly V = TensorPoly::of(v);
  const TensorPoly W = TensorPoly::of(w);
  TensorPoly out = shuffle_mul(f, apply_P(W), lambda);
  out -= apply_P(shuffle_mul(f, W, lambda));
  out -= phi_raw(u, shuffle_mul(W, apply_P(V), lambda), lambda, n);
  out -= phi_raw(u, shuffle_mul(V, apply_P(W), lambda), lambda, n);
  if (!lambda.is_zero()) out.add_scaled(phi_raw(u, shuffle_mul(V, W, lambda), lambda, n), -lambda.value());
  return out;
}

CompositionReport check_multiplication_composition(const GsGenerator& g, const TensorWord& w,
                                                   const Weight& lambda,
                                                   const TruncationOrder& n) {
  CompositionReport r = make_report(CompositionKind::Multiplication, describe(g) + " P(" + format_word(w) + ")");
  const TensorPoly f = phi_raw(g.u, g.v, lambda, n);
  const TensorPoly V = TensorPoly::of(g.v);
  const TensorPoly W = TensorPoly::of(w);
  const TensorPoly target = shuffle_mul(f, apply_P(W), lambda);
  const StarWord star = StarWord::hole();
  add_entries(r.certificate, 1, star, g.u, shuffle_mul(W, apply_P(V), lambda));
  add_entries(r.certificate, 1, star, g.u, shuffle_mul(V, apply_P(W), lambda));
  if (!lambda.is_zero())
    add_entries(r.certificate, lambda.value(), star, g.u, shuffle_mul(V, W, lambda));
  certify_P_times(r.certificate, g.u, g.v, w, lambda, n);
  r.residual = target - evaluate(r.certificate, lambda, n);
  if (target.is_zero()) {
    r.trivial = r.residual.is_zero();
    return r;
  }
  const TensorWord bound = target.leading().first;
  r.ambiguity = bound;
  bool bounded = true;
  for (const auto& e : r.certificate) {
    const TensorPoly s = substitute(e.context, phi_raw(e.u, e.v, lambda, n), lambda, n);
    if (!s.is_zero() && cmp_word(s.leading().first, bound) > 0) {
      bounded = false;
      r.note = "certificate term above the ambiguity: " + format_word(s.leading().first);
      break;
    }
  }
  r.trivial = r.residual.is_zero() && bounded;
  return r;
}

std::vector<StarWord> find_occurrences(const TensorWord& haystack, const TensorWord& needle,
                                       const TruncationOrder& n) {
  std::vector<StarWord> out;
  const std::size_t hd = haystack.depth();
  const std::size_t nd = needle.depth();
  if (nd > hd) return out;
  // Type II: the needle's tail is a suffix and its head divides the slot.
  const std::size_t i = hd - nd;
  bool suffix = true;
  for (std::size_t k = 1; k < nd && suffix; ++k) suffix = haystack.slot(i + k) == needle.slot(k);
  if (suffix) {
    if (auto rest = mono_div(haystack.slot(i), needle.front())) {
      std::vector<CommMonomial> sk(haystack.slots().begin(),
                                   haystack.slots().begin() + static_cast<long>(i) + 1);
      sk.back() = *rest;
      out.emplace_back(TensorWord(std::move(sk)), i, 0);
    }
  }
  // Type I: a single-letter needle x^(k) under d^l inside some slot.
  if (nd == 1 && needle.front().is_letter()) {
    const DiffVar x = needle.front().factors().front().letter;
    for (std::size_t i = 0; i < hd; ++i)
      for (const auto& f : haystack.slot(i).factors()) {
        if (f.letter.var != x.var || f.letter.order <= x.order) continue;
        const std::uint32_t l = f.letter.order - x.order;
        if (!n.admits(f.letter.order)) continue;
        std::vector<CommMonomial> sk(haystack.slots().begin(), haystack.slots().end());
        sk[i] = *mono_div(sk[i], CommMonomial::of(f.letter));
        out.emplace_back(TensorWord(std::move(sk)), i, l);
      }
  }
  return out;
}

CompositionReport including_composition(const GsGenerator& f, const GsGenerator& g,
                                        const StarWord& q, const Weight& lambda,
                                        const TruncationOrder& n, Fuel fuel) {
  CompositionReport r = make_report(CompositionKind::Including, describe(f) + " ⊇ " + describe(g));
  const TensorWord w = f.lead();
  r.ambiguity = w;
  r.residual = f.expansion - substitute(q, g.expansion, lambda, n);
  NormalFormTrace trace;
  try {
    const NormalElement nf =
        normal_form(r.residual, lambda, n, NormalStrategy::LeadingFirst, fuel, &trace);
    if (!nf.value().is_zero()) {
      r.note = "residual normal form is " + format_tensor(nf.value());
      return r;
    }
  } catch (const FuelExhausted& e) {
    r.note = e.what();
    return r;
  }
  for (const auto& step : trace.steps) {
    if (cmp_word(step.word, w) >= 0) {
      r.note = "rewrite above the ambiguity: " + format_word(step.word);
      return r;
    }
    r.certificate.push_back(step.entry);
  }
  if (!r.residual.is_zero() && cmp_word(r.residual.leading().first, w) >= 0) {
    r.note = "residual not below the ambiguity";
    return r;
  }
  r.trivial = true;
  return r;
}

std::vector<CompositionReport> find_including_compositions(const GsGenerator& f,
                                                           const GsGenerator& g,
                                                           const Weight& lambda,
                                                           const TruncationOrder& n, Fuel fuel) {
  std::vector<CompositionReport> out;
  const bool same = f.u == g.u && f.v == g.v;
  for (const auto& q : find_occurrences(f.lead(), g.lead(), n)) {
    if (same && q == StarWord::hole()) continue;
    out.push_back(including_composition(f, g, q, lambda, n, fuel));
  }
  return out;
}

std::vector<CompositionReport> find_intersection_compositions(const GsGenerator& f,
                                                              const GsGenerator& g,
                                                              const Weight& lambda,
                                                              const TruncationOrder& n) {
  std::vector<CompositionReport> out;
  const TensorWord& a = f.lead();
  const TensorWord& b = g.lead();
  if (a.depth() != 1 || b.depth() != 1) return out;
  // lcm of the two monomials, when they overlap without either dividing the other
  std::vector<CommMonomial::Factor> lcm;
  bool overlap = false;
  for (const auto& fa : a.front().factors()) {
    const std::uint32_t mb = b.front().multiplicity(fa.letter);
    if (mb > 0) overlap = true;
    lcm.push_back({fa.letter, std::max(fa.multiplicity, mb)});
  }
  for (const auto& fb : b.front().factors())
    if (a.front().multiplicity(fb.letter) == 0) lcm.push_back(fb);
  if (!overlap || mono_div(a.front(), b.front()) || mono_div(b.front(), a.front())) return out;
  const CommMonomial w = CommMonomial::from_factors(std::move(lcm));
  CompositionReport r = make_report(CompositionKind::Intersection, describe(f) + " ∩ " + describe(g));
  r.ambiguity = TensorWord::of(w);
  const TensorWord fa = TensorWord::of(*mono_div(w, a.front()));
  const TensorWord gb = TensorWord::of(*mono_div(w, b.front()));
  r.residual = shuffle_mul(TensorPoly::of(fa), f.expansion, lambda) -
               shuffle_mul(TensorPoly::of(gb), g.expansion, lambda);
  r.trivial = normal_form(r.residual, lambda, n).value().is_zero();
  out.push_back(std::move(r));
  return out;
}

bool irr_member(const TensorWord& w) {
  for (std::size_t i = 1; i + 1 < w.depth(); ++i)
    if (!is_functional(w.slot(i))) return false;
  return true;
}

}  // namespace idnf
