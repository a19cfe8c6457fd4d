#include "idnf/integro.hpp"

namespace idnf {

NormalElement::NormalElement(TensorPoly value) : value_(std::move(value)) {
  for (const auto& [w, c] : value_)
    if (!irr_member(w)) throw DomainError("word has a non-functional interior slot");
}

namespace {

std::optional<std::size_t> bad_slot(const TensorWord& w, NormalStrategy s) {
  if (w.depth() < 3) return std::nullopt;
  if (s == NormalStrategy::LeadingFirst) {
    for (std::size_t i = w.depth() - 1; i-- > 1;)
      if (!is_functional(w.slot(i))) return i;
  } else {
    for (std::size_t i = 1; i + 1 < w.depth(); ++i)
      if (!is_functional(w.slot(i))) return i;
  }
  return std::nullopt;
}

class Reducer {
 public:
  Reducer(const Weight& lambda, const TruncationOrder& n, NormalStrategy s, NormalFormTrace* trace)
      : lambda_(lambda), n_(n), strategy_(s), trace_(trace) {}

  void add(const TensorWord& w, const Rational& c) {
    if (irr_member(w)) {
      done_.add(w, c);
    } else {
      pending_.add(w, c);
    }
  }

  TensorPoly run(const TensorPoly& p, const Fuel& fuel) {
    for (const auto& [w, c] : p) add(w, c);
    std::size_t steps = 0;
    while (!pending_.is_zero()) {
      fuel.check(++steps, "normal_form");
      const auto& entry = strategy_ == NormalStrategy::LeadingFirst ? *pending_.terms().rbegin()
                                                                    : *pending_.terms().begin();
      const TensorWord w = entry.first;
      const Rational c = entry.second;
      rewrite(w, c, *bad_slot(w, strategy_));
    }
    return std::move(done_);
  }

 private:
  // Subtracts (c/α) q|φ(v, tail) where q = [a0, ..., a_{i-1} ⋆] and
  // lead φ(v, tail) = α [1, a_i, tail].
  void rewrite(const TensorWord& w, const Rational& c, std::size_t i) {
    const auto inv = invert_leading_derivative(w.slot(i), lambda_, n_);
    const CommMonomial& v = inv.integrand;
    const Rational k = c / inv.coefficient;
    const auto& s = w.slots();
    const std::vector<CommMonomial> prefix(s.begin(), s.begin() + static_cast<long>(i));
    const std::vector<CommMonomial> tail(s.begin() + static_cast<long>(i) + 1, s.end());
    const DiffPoly dv = derive_monomial(v, lambda_, n_);

    auto word = [&](std::vector<CommMonomial> head, std::size_t tail_from) {
      head.insert(head.end(), tail.begin() + static_cast<long>(tail_from), tail.end());
      return TensorWord(std::move(head));
    };
    // P(d(v)P(tail))
    for (const auto& [m, cm] : dv) {
      auto h = prefix;
      h.push_back(m);
      add(word(std::move(h), 0), -k * cm);
    }
    // -v P(tail)
    {
      auto h = prefix;
      h.back() = mono_mul(h.back(), v);
      add(word(std::move(h), 0), k);
    }
    // P(v tail)
    {
      auto h = prefix;
      h.push_back(mono_mul(v, tail.front()));
      add(word(std::move(h), 1), -k);
    }
    // λ P(d(v) tail)
    if (!lambda_.is_zero()) {
      for (const auto& [m, cm] : dv) {
        auto h = prefix;
        h.push_back(mono_mul(m, tail.front()));
        add(word(std::move(h), 1), -k * cm * lambda_.value());
      }
    }
    if (trace_) {
      StarWord q(TensorWord(prefix), i - 1, 0);
      trace_->steps.push_back({w, {k, std::move(q), TensorWord::of(v), TensorWord(tail)}});
    }
  }

  const Weight& lambda_;
  const TruncationOrder& n_;
  NormalStrategy strategy_;
  NormalFormTrace* trace_;
  TensorPoly pending_;
  TensorPoly done_;
};

}  // namespace

NormalElement normal_form(const TensorPoly& p, const Weight& lambda, const TruncationOrder& n,
                          NormalStrategy strategy, Fuel fuel, NormalFormTrace* trace) {
  Reducer r(lambda, n, strategy, trace);
  return NormalElement(r.run(p, fuel));
}

NormalElement id_mul(const NormalElement& a, const NormalElement& b, const Weight& lambda,
                     const TruncationOrder& n) {
  return normal_form(shuffle_mul(a.value(), b.value(), lambda), lambda, n);
}

NormalElement id_d(const NormalElement& a, const Weight& lambda, const TruncationOrder& n) {
  return normal_form(apply_d(a.value(), lambda, n), lambda, n);
}

NormalElement id_P(const NormalElement& a, const Weight& lambda, const TruncationOrder& n) {
  return normal_form(apply_P(a.value()), lambda, n);
}

bool check_integro_axiom(const NormalElement& a, const NormalElement& b, const Weight& lambda,
                         const TruncationOrder& n) {
  const NormalElement da = id_d(a, lambda, n);
  const NormalElement Pb = id_P(b, lambda, n);
  TensorPoly sum = id_P(id_mul(da, Pb, lambda, n), lambda, n).value();
  sum -= id_mul(a, Pb, lambda, n).value();
  sum += id_P(id_mul(a, b, lambda, n), lambda, n).value();
  if (!lambda.is_zero())
    sum.add_scaled(id_P(id_mul(da, b, lambda, n), lambda, n).value(), lambda.value());
  return sum.is_zero();
}

}  // namespace idnf
