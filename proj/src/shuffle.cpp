#include "idnf/shuffle.hpp"

#include <algorithm>
#include <map>

namespace idnf {

TensorWord::TensorWord(std::vector<CommMonomial> slots) : slots_(std::move(slots)) {
  if (slots_.empty()) throw DomainError("tensor word needs at least one slot");
}

std::uint32_t TensorWord::degree() const {
  std::uint32_t d = 0;
  for (const auto& s : slots_) d += s.degree();
  return d;
}

std::uint32_t TensorWord::max_order() const {
  std::uint32_t m = 0;
  for (const auto& s : slots_) m = std::max(m, s.max_order());
  return m;
}

TensorWord TensorWord::tail() const {
  if (depth() < 2) throw DomainError("depth-one word has no tail");
  return TensorWord(std::vector<CommMonomial>(slots_.begin() + 1, slots_.end()));
}

TensorWord TensorWord::times_front(const CommMonomial& m) const {
  TensorWord w = *this;
  w.slots_[0] = mono_mul(w.slots_[0], m);
  return w;
}

TensorWord TensorWord::lifted() const {
  std::vector<CommMonomial> s;
  s.reserve(slots_.size() + 1);
  s.emplace_back();
  s.insert(s.end(), slots_.begin(), slots_.end());
  return TensorWord(std::move(s));
}

std::strong_ordering cmp_word(const TensorWord& u, const TensorWord& v) {
  if (u.depth() != v.depth()) return u.depth() <=> v.depth();
  for (std::size_t i = 0; i < u.depth(); ++i) {
    auto c = cmp_monomial(u.slot(i), v.slot(i));
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t breadth(const TensorWord& w) {
  return w.front().degree() + (w.depth() > 1 ? 1 : 0);
}

bool admits(const TensorWord& w, const TruncationOrder& n) {
  return n.admits(w.max_order());
}

TensorPoly tensor_of(const std::vector<DiffPoly>& slots) {
  if (slots.empty()) return {};
  std::vector<std::pair<std::vector<CommMonomial>, Rational>> acc{{{}, Rational(1)}};
  for (const auto& p : slots) {
    std::vector<std::pair<std::vector<CommMonomial>, Rational>> next;
    for (const auto& [prefix, c] : acc)
      for (const auto& [m, cm] : p) {
        auto w = prefix;
        w.push_back(m);
        next.emplace_back(std::move(w), c * cm);
      }
    acc = std::move(next);
    if (acc.empty()) return {};
  }
  TensorPoly out;
  for (auto& [w, c] : acc) out.add(TensorWord(std::move(w)), c);
  return out;
}

namespace {

using Seq = std::vector<CommMonomial>;

struct SeqLess {
  bool operator()(const Seq& a, const Seq& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      auto c = cmp_monomial(a[i], b[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }
};

using SeqPoly = std::map<Seq, Rational, SeqLess>;

// Quasi-shuffle of the slot suffixes a[i..] and b[j..], memoized per call.
class QuasiShuffle {
 public:
  QuasiShuffle(const Seq& a, const Seq& b, const Rational& lambda)
      : a_(a), b_(b), lambda_(lambda), memo_((a.size() + 1) * (b.size() + 1)) {}

  const SeqPoly& run(std::size_t i, std::size_t j) {
    auto& slot = memo_[i * (b_.size() + 1) + j];
    if (slot) return *slot;
    SeqPoly out;
    if (i == a_.size()) {
      out.emplace(Seq(b_.begin() + static_cast<long>(j), b_.end()), Rational(1));
    } else if (j == b_.size()) {
      out.emplace(Seq(a_.begin() + static_cast<long>(i), a_.end()), Rational(1));
    } else {
      prepend(out, a_[i], run(i + 1, j), Rational(1));
      prepend(out, b_[j], run(i, j + 1), Rational(1));
      if (sgn(lambda_) != 0) prepend(out, mono_mul(a_[i], b_[j]), run(i + 1, j + 1), lambda_);
    }
    slot = std::move(out);
    return *slot;
  }

 private:
  static void prepend(SeqPoly& out, const CommMonomial& head, const SeqPoly& rest,
                      const Rational& c) {
    for (const auto& [s, cs] : rest) {
      Seq w;
      w.reserve(s.size() + 1);
      w.push_back(head);
      w.insert(w.end(), s.begin(), s.end());
      Rational coef = cs * c;
      auto [it, inserted] = out.try_emplace(std::move(w), coef);
      if (!inserted) {
        it->second += coef;
        if (sgn(it->second) == 0) out.erase(it);
      }
    }
  }

  const Seq& a_;
  const Seq& b_;
  Rational lambda_;
  std::vector<std::optional<SeqPoly>> memo_;
};

}  // namespace

TensorPoly shuffle_mul(const TensorWord& a, const TensorWord& b, const Weight& lambda) {
  const CommMonomial head = mono_mul(a.front(), b.front());
  const Seq ra(a.slots().begin() + 1, a.slots().end());
  const Seq rb(b.slots().begin() + 1, b.slots().end());
  QuasiShuffle q(ra, rb, lambda.value());
  TensorPoly out;
  for (const auto& [s, c] : q.run(0, 0)) {
    Seq w;
    w.reserve(s.size() + 1);
    w.push_back(head);
    w.insert(w.end(), s.begin(), s.end());
    out.add(TensorWord(std::move(w)), c);
  }
  return out;
}

TensorPoly shuffle_mul(const TensorPoly& a, const TensorPoly& b, const Weight& lambda) {
  TensorPoly out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) out.add_scaled(shuffle_mul(wa, wb, lambda), ca * cb);
  return out;
}

TensorPoly apply_P(const TensorPoly& p) {
  TensorPoly out;
  for (const auto& [w, c] : p) out.add(w.lifted(), c);
  return out;
}

TensorPoly apply_d(const TensorWord& w, const Weight& lambda, const TruncationOrder& n) {
  const DiffPoly d0 = derive_monomial(w.front(), lambda, n);
  std::vector<DiffPoly> slots;
  slots.reserve(w.depth());
  slots.push_back(d0);
  for (std::size_t i = 1; i < w.depth(); ++i) slots.push_back(DiffPoly::of(w.slot(i)));
  TensorPoly out = tensor_of(slots);
  if (w.depth() == 1) return out;
  // x0 x1 ⊗ x2 ⊗ ... + λ d(x0) x1 ⊗ x2 ⊗ ...
  std::vector<DiffPoly> merged;
  merged.reserve(w.depth() - 1);
  DiffPoly head = DiffPoly::of(mono_mul(w.slot(0), w.slot(1)));
  if (!lambda.is_zero()) head.add_scaled(poly_mul(d0, DiffPoly::of(w.slot(1))), lambda.value());
  merged.push_back(std::move(head));
  for (std::size_t i = 2; i < w.depth(); ++i) merged.push_back(DiffPoly::of(w.slot(i)));
  out += tensor_of(merged);
  return out;
}

TensorPoly apply_d(const TensorPoly& p, const Weight& lambda, const TruncationOrder& n) {
  TensorPoly out;
  for (const auto& [w, c] : p) out.add_scaled(apply_d(w, lambda, n), c);
  return out;
}

std::pair<TensorWord, Rational> leading_word(const TensorPoly& p) {
  if (p.is_zero()) throw DomainError("no leading word");
  auto [w, c] = p.leading();
  return {w, c};
}

}  // namespace idnf
