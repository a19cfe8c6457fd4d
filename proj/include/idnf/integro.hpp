#pragma once

// The free commutative integro-differential algebra as Ш(A) modulo the ideal
// generated by S_n, on the basis of words with functional interior slots.

#include <vector>

#include "idnf/gsb.hpp"

namespace idnf {

/// A TensorPoly whose words all satisfy irr_member.
class NormalElement {
 public:
  NormalElement() = default;
  /// Throws DomainError if some word has a non-functional interior slot.
  explicit NormalElement(TensorPoly value);

  const TensorPoly& value() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }

  friend bool operator==(const NormalElement& a, const NormalElement& b) {
    return a.value_ == b.value_;
  }

 private:
  TensorPoly value_;
};

enum class NormalStrategy {
  LeadingFirst,   // largest reducible word, rightmost bad slot
  SmallestFirst,  // smallest reducible word, leftmost bad slot
};

/// One rewrite: `word` was eliminated by subtracting entry = c q|φ(v, tail).
struct NormalFormStep {
  TensorWord word;
  CertificateEntry entry;
};

struct NormalFormTrace {
  std::vector<NormalFormStep> steps;
};

/// Throws FuelExhausted when the rewriting does not terminate within fuel.
NormalElement normal_form(const TensorPoly& p, const Weight& lambda, const TruncationOrder& n,
                          NormalStrategy strategy = NormalStrategy::LeadingFirst,
                          Fuel fuel = Fuel::standard(), NormalFormTrace* trace = nullptr);

NormalElement id_mul(const NormalElement& a, const NormalElement& b, const Weight& lambda,
                     const TruncationOrder& n);
NormalElement id_d(const NormalElement& a, const Weight& lambda, const TruncationOrder& n);
NormalElement id_P(const NormalElement& a, const Weight& lambda, const TruncationOrder& n);

/// P(d(a)P(b)) - aP(b) + P(ab) + λP(d(a)b) vanishes in the quotient.
bool check_integro_axiom(const NormalElement& a, const NormalElement& b, const Weight& lambda,
                         const TruncationOrder& n);

}  // namespace idnf
