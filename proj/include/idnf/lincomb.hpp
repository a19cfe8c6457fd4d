#pragma once

#include <map>
#include <utility>

#include "idnf/error.hpp"
#include "idnf/rational.hpp"

namespace idnf {

/// Finite rational linear combination of basis elements, stored sorted
/// ascending under `Order`. Zero coefficients are never stored, so the
/// empty map is the zero element and the leading term is the last entry.
template <class Basis, class Order>
class LinComb {
 public:
  using Terms = std::map<Basis, Rational, Order>;
  using const_iterator = typename Terms::const_iterator;

  LinComb() = default;

  static LinComb of(Basis b, Rational c = 1) {
    LinComb r;
    r.add(std::move(b), c);
    return r;
  }

  const Terms& terms() const { return terms_; }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Basis& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Adds c·b, erasing the entry when the coefficient cancels.
  void add(const Basis& b, const Rational& c) {
    if (is_zero_(c)) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_(it->second)) terms_.erase(it);
    }
  }

  void add(Basis&& b, const Rational& c) {
    if (is_zero_(c)) return;
    auto it = terms_.find(b);
    if (it == terms_.end()) {
      terms_.emplace(std::move(b), c);
    } else {
      it->second += c;
      if (is_zero_(it->second)) terms_.erase(it);
    }
  }

  /// this += c·other
  void add_scaled(const LinComb& other, const Rational& c) {
    if (is_zero_(c)) return;
    for (const auto& [b, coef] : other.terms_) add(b, coef * c);
  }

  void erase(const Basis& b) { terms_.erase(b); }

  /// Largest basis element and its coefficient.
  std::pair<const Basis&, const Rational&> leading() const {
    if (terms_.empty()) throw DomainError("zero element has no leading term");
    const auto& last = *terms_.rbegin();
    return {last.first, last.second};
  }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [b, c] : o.terms_) add(b, -c);
    return *this;
  }
  LinComb& operator*=(const Rational& c) {
    if (is_zero_(c)) {
      terms_.clear();
    } else {
      for (auto& [b, coef] : terms_) coef *= c;
    }
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator-(LinComb a) { return a *= Rational(-1); }
  friend LinComb operator*(const Rational& c, LinComb a) { return a *= c; }
  friend LinComb operator*(LinComb a, const Rational& c) { return a *= c; }

  friend bool operator==(const LinComb& a, const LinComb& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    const Order less{};
    for (; ia != a.terms_.end(); ++ia, ++ib) {
      if (less(ia->first, ib->first) || less(ib->first, ia->first)) return false;
      if (ia->second != ib->second) return false;
    }
    return true;
  }

 private:
  static bool is_zero_(const Rational& c) { return sgn(c) == 0; }

  Terms terms_;
};

}  // namespace idnf
