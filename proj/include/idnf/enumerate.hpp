#pragma once

// Bounded enumeration and seeded random sampling of letters, monomials,
// tensor words and polynomials.

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "idnf/shuffle.hpp"

namespace idnf {

/// Size limits for enumerations: word depth, degree (per monomial, or total
/// over a word), derivative order and number of variables.
struct SizeBound {
  unsigned depth = 3;
  unsigned degree = 3;
  unsigned order = 2;
  unsigned vars = 2;
};

/// "depth=3,deg=3,order=2,vars=2"; unspecified keys keep `base`.
SizeBound parse_bounds(std::string_view text, SizeBound base = {});

/// x_i^(k) for i < vars and k <= max_order, descending.
std::vector<DiffVar> letters(unsigned vars, unsigned max_order);

/// All monomials over `alphabet` with min_degree <= degree <= max_degree, ascending.
std::vector<CommMonomial> monomials(const std::vector<DiffVar>& alphabet, unsigned max_degree,
                                    unsigned min_degree = 0);

/// All words of depth <= max_depth whose total degree is <= max_degree.
std::vector<TensorWord> words(const std::vector<DiffVar>& alphabet, unsigned max_depth,
                              unsigned max_degree);

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::size_t index(std::size_t n);
  /// Degree uniform in [0, max_degree], letters uniform.
  CommMonomial monomial(const std::vector<DiffVar>& alphabet, unsigned max_degree);
  /// Depth uniform in [1, max_depth]; total degree at most max_degree.
  TensorWord word(const std::vector<DiffVar>& alphabet, unsigned max_depth, unsigned max_degree);
  /// Small nonzero rational: ±1, ±2, ±1/2, ±3/2.
  Rational coefficient();
  TensorPoly poly(const std::vector<DiffVar>& alphabet, unsigned max_depth, unsigned max_degree,
                  unsigned max_terms);

 private:
  std::mt19937_64 rng_;
};

}  // namespace idnf
