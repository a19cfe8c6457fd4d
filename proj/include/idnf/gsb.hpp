#pragma once

// Star words, substitution and normality, the generators φ(u,v), and the
// composition checks for the relation family S_n.

#include <optional>
#include <string>
#include <vector>

#include "idnf/operated.hpp"

namespace idnf {

enum class StarType { I, II };

/// A DRB monomial with one extra factor d^l(⋆) in slot `slot` of `skeleton`.
class StarWord {
 public:
  StarWord(TensorWord skeleton, std::size_t slot, std::uint32_t order = 0);
  /// The bare ⋆.
  static StarWord hole() { return StarWord(TensorWord::unit(), 0, 0); }

  const TensorWord& skeleton() const { return skeleton_; }
  std::size_t slot() const { return slot_; }
  std::uint32_t order() const { return order_; }
  StarType type() const { return order_ >= 1 ? StarType::I : StarType::II; }
  /// Same skeleton and slot with the star order set to zero.
  StarWord without_derivative() const { return StarWord(skeleton_, slot_, 0); }

  /// q with ⋆ replaced by `filler`.
  BracketedTerm fill(const BracketedTerm& filler) const;
  /// [1, m * q0, q1, ...] with the star carried along: the context P(m q).
  StarWord lifted(const CommMonomial& m) const;
  /// q|_w by slot surgery when no rewriting is needed, i.e. for type II
  /// with the star in the last slot.
  std::optional<TensorWord> plug(const TensorWord& w) const;

  friend bool operator==(const StarWord&, const StarWord&) = default;

 private:
  TensorWord skeleton_;
  std::size_t slot_;
  std::uint32_t order_;
};

/// q|_s, extended linearly, reduced to DRB monomials.
TensorPoly substitute(const StarWord& q, const TensorPoly& s, const Weight& lambda,
                      const TruncationOrder& n);
TensorPoly substitute(const StarWord& q, const TensorWord& w, const Weight& lambda,
                      const TruncationOrder& n);

/// q|_{lead(s)} is already a DRB monomial. Throws DomainError for s = 0.
bool is_normal(const StarWord& q, const TensorPoly& s, const TruncationOrder& n);
bool is_normal(const StarWord& q, const TensorWord& w, const TruncationOrder& n);

/// The three shapes of a star word: p|_{d^l(⋆)} with l >= 1; s ⋆ t with t
/// in P(...) or t = 1; s P(p).
struct Classification {
  enum class Form { Derivative, StarTimes, SP };
  StarType type;
  Form form;
  std::uint32_t order = 0;  // Derivative
  CommMonomial s;           // StarTimes, SP: the monomial beside ⋆ or P
  TensorWord t;             // StarTimes: [1] or [1, ...]
  std::optional<StarWord> inner;  // Derivative: p; SP: the star word under P
};
Classification classify(const StarWord& q);

/// P(d(u)P(v)) - uP(v) + P(uv) + λP(d(u)v), linear in v. No precondition on u.
TensorPoly phi_raw(const TensorWord& u, const TensorPoly& v, const Weight& lambda,
                   const TruncationOrder& n);
TensorPoly phi_raw(const TensorWord& u, const TensorWord& v, const Weight& lambda,
                   const TruncationOrder& n);

/// One relation of S_n, stored monic: raw φ(u,v) = scale * expansion.
struct GsGenerator {
  TensorWord u;
  TensorWord v;
  TensorPoly expansion;
  Rational scale;

  const TensorWord& lead() const { return expansion.leading().first; }
};

/// Throws DomainError("generator vanishes") when u is in the image of P or
/// u = [1], where φ(u,v) is identically zero.
GsGenerator phi(const TensorWord& u, const TensorWord& v, const Weight& lambda,
                const TruncationOrder& n);

/// 1 ⊗ lead d(u0) ⊗ lead(û ш v), û ш v the quasi-shuffle of the slot
/// sequences after u0 and of v. Throws DomainError when d(u0) = 0.
TensorWord leading_of_phi(const TensorWord& u, const TensorWord& v, const Weight& lambda,
                          const TruncationOrder& n);

// --- compositions -----------------------------------------------------------

enum class CompositionKind { Multiplication, Derivation, Intersection, Including };
std::string to_string(CompositionKind k);

/// coefficient * q|_{φ(u, v)} with the raw (non-monic) φ.
struct CertificateEntry {
  Rational coefficient;
  StarWord context;
  TensorWord u;
  TensorWord v;
};

TensorPoly evaluate(const CertificateEntry& e, const Weight& lambda, const TruncationOrder& n);
TensorPoly evaluate(const std::vector<CertificateEntry>& c, const Weight& lambda,
                    const TruncationOrder& n);

struct CompositionReport {
  CompositionKind kind = CompositionKind::Including;
  std::string participants;
  std::optional<TensorWord> ambiguity;
  TensorPoly residual;
  bool trivial = false;
  std::vector<CertificateEntry> certificate;
  std::string note;
};

/// d^l of the generator, which must vanish identically.
CompositionReport check_derivation_composition(const GsGenerator& g, std::uint32_t l,
                                               const Weight& lambda, const TruncationOrder& n);

/// φ(u,v)P(w) - [P(φ(u,v)w) + φ(u, wP(v)) + φ(u, vP(w)) + λφ(u, vw)].
TensorPoly multiplication_identity_residual(const TensorWord& u, const TensorWord& v,
                                            const TensorWord& w, const Weight& lambda,
                                            const TruncationOrder& n);

/// Certifies φ(u,v)P(w) ≡ 0 mod [S_n]: the certificate sums to φ(u,v)P(w)
/// and every leading word is at most lead(φ(u,v)P(w)).
CompositionReport check_multiplication_composition(const GsGenerator& g, const TensorWord& w,
                                                   const Weight& lambda,
                                                   const TruncationOrder& n);

/// Star words q with q|_{lead g} = lead f.
std::vector<StarWord> find_occurrences(const TensorWord& haystack, const TensorWord& needle,
                                       const TruncationOrder& n);

CompositionReport including_composition(const GsGenerator& f, const GsGenerator& g,
                                        const StarWord& q, const Weight& lambda,
                                        const TruncationOrder& n, Fuel fuel = Fuel::standard());
std::vector<CompositionReport> find_including_compositions(const GsGenerator& f,
                                                           const GsGenerator& g,
                                                           const Weight& lambda,
                                                           const TruncationOrder& n,
                                                           Fuel fuel = Fuel::standard());
/// Only leading words in C(ΔX) overlap; never the case inside S_n.
std::vector<CompositionReport> find_intersection_compositions(const GsGenerator& f,
                                                              const GsGenerator& g,
                                                              const Weight& lambda,
                                                              const TruncationOrder& n);

/// Every interior slot is functional.
bool irr_member(const TensorWord& w);

}  // namespace idnf
