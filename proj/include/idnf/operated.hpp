#pragma once

// Free commutative operated monoid on ΔX with operators d and P, and the
// reduction map red into Ш(k[ΔX]) realized as a rewriting system.

#include <compare>
#include <memory>
#include <optional>
#include <vector>

#include "idnf/shuffle.hpp"

namespace idnf {

/// Immutable bracketed term. Products are flattened, unit-free and sorted,
/// so structural equality is equality in the operated monoid.
class BracketedTerm {
 public:
  enum class Kind { One, Var, P, D, Prod };

  BracketedTerm() = default;  // One
  static BracketedTerm one() { return {}; }
  static BracketedTerm var(DiffVar x);
  static BracketedTerm P(BracketedTerm t);
  static BracketedTerm D(BracketedTerm t);
  static BracketedTerm D(BracketedTerm t, std::uint32_t times);
  static BracketedTerm prod(std::vector<BracketedTerm> factors);
  static BracketedTerm prod(BracketedTerm a, BracketedTerm b);
  static BracketedTerm monomial(const CommMonomial& u);

  Kind kind() const { return kind_; }
  /// Var only.
  DiffVar letter() const { return letter_; }
  /// P and D: the single argument; Prod: the sorted factors.
  const std::vector<BracketedTerm>& children() const;
  const BracketedTerm& arg() const { return children().front(); }
  std::size_t size() const;

  friend bool operator==(const BracketedTerm& a, const BracketedTerm& b);

 private:
  Kind kind_ = Kind::One;
  DiffVar letter_{};
  std::shared_ptr<const std::vector<BracketedTerm>> children_;
};

std::strong_ordering cmp_term(const BracketedTerm& a, const BracketedTerm& b);

struct TermLess {
  bool operator()(const BracketedTerm& a, const BracketedTerm& b) const {
    return cmp_term(a, b) < 0;
  }
};

using TermPoly = LinComb<BracketedTerm, TermLess>;

/// u0 ⊗ u1 ⊗ ... ↦ u0 P(u1 P(...)).
BracketedTerm embed(const TensorWord& w);
TermPoly embed(const TensorPoly& p);

/// The term as a DRB monomial if it is one, reading D^l(x^(k)) as the
/// letter x^(k+l) when n admits it.
std::optional<TensorWord> as_drb_monomial(const BracketedTerm& t, const TruncationOrder& n);

enum class Strategy { Innermost, Outermost };

/// Rewrites to DRB monomials with
///   D(1) -> 0, D(uv) -> D(u)v + uD(v) + λD(u)D(v), D(x^(k)) -> x^(k+1),
///   D(P(u)) -> u, P(u)P(v) -> P(uP(v)) + P(P(u)v) + λP(uv).
TensorPoly red(const BracketedTerm& t, const Weight& lambda, const TruncationOrder& n,
               Strategy strategy = Strategy::Innermost, Fuel fuel = Fuel::standard());
TensorPoly red(const TermPoly& p, const Weight& lambda, const TruncationOrder& n,
               Strategy strategy = Strategy::Innermost, Fuel fuel = Fuel::standard());

}  // namespace idnf
