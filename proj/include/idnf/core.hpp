#pragma once

// Free commutative differential algebra k[ΔX] of weight λ, optionally
// truncated at derivative order n: letters x^(k), commutative monomials,
// polynomials, the derivation, the monomial orders, and the splitting of
// k[ΔX] into functional monomials plus the image of d.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "idnf/error.hpp"
#include "idnf/lincomb.hpp"
#include "idnf/rational.hpp"

namespace idnf {

/// The weight λ shared by the derivation and the Rota-Baxter operator.
class Weight {
 public:
  Weight() = default;
  explicit Weight(Rational value) : value_(std::move(value)) { value_.canonicalize(); }

  const Rational& value() const { return value_; }
  bool is_zero() const { return sgn(value_) == 0; }

  friend bool operator==(const Weight& a, const Weight& b) { return a.value_ == b.value_; }

 private:
  Rational value_{0};
};

/// Variable names in descending order: names[0] > names[1] > ...
class VarTable {
 public:
  VarTable() : VarTable(std::vector<std::string>{"x"}) {}
  explicit VarTable(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t index) const { return names_.at(index); }
  std::optional<std::size_t> find(std::string_view name) const;
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
};

/// Derivative order bound n (x^(n+1) = 0), or unbounded.
class TruncationOrder {
 public:
  static TruncationOrder unbounded() { return TruncationOrder(); }
  static TruncationOrder bounded(unsigned n);

  bool is_bounded() const { return bound_.has_value(); }
  unsigned value() const;
  /// True when x^(order) is a letter of Δ_n X.
  bool admits(std::uint64_t order) const { return !bound_ || order <= *bound_; }

  friend bool operator==(const TruncationOrder&, const TruncationOrder&) = default;

 private:
  TruncationOrder() = default;
  std::optional<unsigned> bound_;
};

/// The letter x^(order); `var` indexes a VarTable, index 0 being the largest variable.
struct DiffVar {
  std::uint32_t var = 0;
  std::uint32_t order = 0;

  friend bool operator==(const DiffVar&, const DiffVar&) = default;
};

/// (x0,-i0) <= (x1,-i1) lexicographically: x^(2) < x^(1) < x, and a larger
/// variable dominates regardless of order.
inline std::strong_ordering cmp_diff_var(DiffVar a, DiffVar b) {
  if (a.var != b.var) return b.var <=> a.var;
  return b.order <=> a.order;
}

/// Element of the free commutative monoid C(ΔX). Factors are kept in the
/// standard form: descending under cmp_diff_var, positive multiplicities.
class CommMonomial {
 public:
  struct Factor {
    DiffVar letter;
    std::uint32_t multiplicity;
    friend bool operator==(const Factor&, const Factor&) = default;
  };

  CommMonomial() = default;
  static CommMonomial of(DiffVar letter, std::uint32_t multiplicity = 1);
  static CommMonomial from_factors(std::vector<Factor> factors);

  std::span<const Factor> factors() const { return factors_; }
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return factors_.empty(); }
  std::uint32_t multiplicity(DiffVar letter) const;
  /// Smallest letter (last factor of the standard form); nullopt for 1.
  std::optional<Factor> smallest() const;
  std::uint32_t max_order() const;
  /// True if the monomial is a single letter with multiplicity one.
  bool is_letter() const { return degree_ == 1; }

  friend bool operator==(const CommMonomial&, const CommMonomial&) = default;

 private:
  std::vector<Factor> factors_;
  std::uint32_t degree_ = 0;
};

/// Degree first, then the descending-sorted letter words lexicographically.
std::strong_ordering cmp_monomial(const CommMonomial& u, const CommMonomial& v);

struct MonomialLess {
  bool operator()(const CommMonomial& u, const CommMonomial& v) const {
    return cmp_monomial(u, v) < 0;
  }
};

CommMonomial mono_mul(const CommMonomial& u, const CommMonomial& v);
/// u / v when v divides u.
std::optional<CommMonomial> mono_div(const CommMonomial& u, const CommMonomial& v);

using DiffPoly = LinComb<CommMonomial, MonomialLess>;

DiffPoly poly_mul(const DiffPoly& p, const DiffPoly& q);

/// The weight-λ derivation d_X, sending x^(n) to 0 when the order is bounded.
DiffPoly derive_monomial(const CommMonomial& u, const Weight& lambda, const TruncationOrder& n);
DiffPoly derive_poly(const DiffPoly& p, const Weight& lambda, const TruncationOrder& n);

/// Largest monomial under cmp_monomial with its coefficient.
std::pair<CommMonomial, Rational> leading_term(const DiffPoly& p);

/// 1, or smallest letter of order 0, or smallest letter with multiplicity > 1.
bool is_functional(const CommMonomial& u);

/// For a non-functional w: the monomial v with lead(d(v)) = w and the
/// coefficient of w in d(v).
struct LeadingDerivative {
  CommMonomial integrand;
  Rational coefficient;
};
LeadingDerivative invert_leading_derivative(const CommMonomial& w, const Weight& lambda,
                                            const TruncationOrder& n);

/// p = functional + d(integrand), every monomial of `functional` functional.
struct FunctionalDecomposition {
  DiffPoly functional;
  DiffPoly integrand;
};
FunctionalDecomposition decompose_functional(const DiffPoly& p, const Weight& lambda,
                                             const TruncationOrder& n,
                                             Fuel fuel = Fuel::standard());

}  // namespace idnf
