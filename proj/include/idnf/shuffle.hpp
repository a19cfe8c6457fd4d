#pragma once

// The free commutative differential Rota-Baxter algebra Ш(k[ΔX]): tensor
// words, the weight-λ mixable shuffle product, P and the extended derivation.

#include <compare>
#include <vector>

#include "idnf/core.hpp"

namespace idnf {

/// DRB monomial u0 ⊗ u1 ⊗ ... ⊗ uk, k >= 0.
class TensorWord {
 public:
  /// The unit word [1].
  TensorWord() : slots_{CommMonomial{}} {}
  explicit TensorWord(std::vector<CommMonomial> slots);
  static TensorWord unit() { return TensorWord(); }
  static TensorWord of(CommMonomial u) { return TensorWord(std::vector<CommMonomial>{std::move(u)}); }

  const std::vector<CommMonomial>& slots() const { return slots_; }
  const CommMonomial& slot(std::size_t i) const { return slots_.at(i); }
  const CommMonomial& front() const { return slots_.front(); }
  const CommMonomial& back() const { return slots_.back(); }
  std::size_t depth() const { return slots_.size(); }
  /// Total degree over all slots.
  std::uint32_t degree() const;
  std::uint32_t max_order() const;
  /// Of the form 1 ⊗ (...), i.e. in the image of P.
  bool is_P_image() const { return depth() > 1 && slots_[0].is_one(); }
  /// [u1, ..., uk]; requires depth >= 2.
  TensorWord tail() const;
  /// [u0 * m, u1, ...]
  TensorWord times_front(const CommMonomial& m) const;
  /// [1, u0, ..., uk]
  TensorWord lifted() const;

  friend bool operator==(const TensorWord&, const TensorWord&) = default;

 private:
  std::vector<CommMonomial> slots_;
};

/// Depth first, then slots left to right under cmp_monomial.
std::strong_ordering cmp_word(const TensorWord& u, const TensorWord& v);

struct WordLess {
  bool operator()(const TensorWord& u, const TensorWord& v) const { return cmp_word(u, v) < 0; }
};

using TensorPoly = LinComb<TensorWord, WordLess>;

/// Number of letter factors of u0, plus one when depth > 1.
std::size_t breadth(const TensorWord& w);

/// True when every letter of w has order admitted by n.
bool admits(const TensorWord& w, const TruncationOrder& n);

/// Expands p0 ⊗ p1 ⊗ ... multilinearly. Empty input gives zero.
TensorPoly tensor_of(const std::vector<DiffPoly>& slots);

TensorPoly shuffle_mul(const TensorWord& a, const TensorWord& b, const Weight& lambda);
TensorPoly shuffle_mul(const TensorPoly& a, const TensorPoly& b, const Weight& lambda);

TensorPoly apply_P(const TensorPoly& p);
TensorPoly apply_d(const TensorWord& w, const Weight& lambda, const TruncationOrder& n);
TensorPoly apply_d(const TensorPoly& p, const Weight& lambda, const TruncationOrder& n);

std::pair<TensorWord, Rational> leading_word(const TensorPoly& p);

}  // namespace idnf
