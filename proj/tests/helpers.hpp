#pragma once

#include <string>

#include "idnf/syntax.hpp"

namespace th {

using namespace idnf;

inline const VarTable& xy() {
  static const VarTable t({"x", "y"});
  return t;
}

inline const VarTable& xyz() {
  static const VarTable t({"x", "y", "z"});
  return t;
}

inline TensorPoly tp(const std::string& text, const VarTable& vars = xyz(),
                     const Weight& lambda = Weight(),
                     const TruncationOrder& n = TruncationOrder::unbounded()) {
  return red(parse_expression(text, vars, TruncationOrder::unbounded()), lambda, n);
}

/// A single word written in tensor syntax, e.g. "1 (x) x' (x) y".
inline TensorWord word(const std::string& text, const VarTable& vars = xyz()) {
  const TensorPoly p = tp(text, vars);
  if (p.size() != 1 || p.leading().second != 1) throw Error("not a single word: " + text);
  return p.leading().first;
}

inline CommMonomial mono(const std::string& text, const VarTable& vars = xyz()) {
  const TensorWord w = word(text, vars);
  if (w.depth() != 1) throw Error("not a monomial: " + text);
  return w.front();
}

inline DiffPoly poly(const std::string& text, const VarTable& vars = xyz()) {
  DiffPoly out;
  for (const auto& [w, c] : tp(text, vars)) {
    if (w.depth() != 1) throw Error("not a polynomial: " + text);
    out.add(w.front(), c);
  }
  return out;
}

inline Weight lam(long p, long q = 1) { return Weight(Rational(p, q)); }

inline std::string show(const TensorPoly& p, const VarTable& vars = xyz()) {
  return format_tensor(p, vars);
}

inline std::string show(const DiffPoly& p, const VarTable& vars = xyz()) {
  return format_poly(p, vars);
}

}  // namespace th
