#include "idnf/syntax.hpp"

#include <cctype>
#include <functional>

namespace idnf {

// --- printing ---------------------------------------------------------------

std::string format_letter(DiffVar x, const VarTable& vars) {
  std::string s = x.var < vars.size() ? vars.name(x.var) : "v" + std::to_string(x.var);
  if (x.order <= 3) return s + std::string(x.order, '\'');
  return s + "^(" + std::to_string(x.order) + ")";
}

std::string format_monomial(const CommMonomial& u, const VarTable& vars) {
  if (u.is_one()) return "1";
  std::string out;
  for (const auto& f : u.factors()) {
    if (!out.empty()) out += "*";
    std::string l = format_letter(f.letter, vars);
    if (f.multiplicity == 1) {
      out += l;
    } else {
      if (f.letter.order > 0) l = "(" + l + ")";
      out += l + "^" + std::to_string(f.multiplicity);
    }
  }
  return out;
}

std::string format_word(const TensorWord& w, const VarTable& vars, OutputFormat f) {
  if (f == OutputFormat::Tensor) {
    std::string out;
    for (std::size_t i = 0; i < w.depth(); ++i) {
      if (i) out += " (x) ";
      out += format_monomial(w.slot(i), vars);
    }
    return out;
  }
  std::string inner = format_monomial(w.back(), vars);
  for (std::size_t i = w.depth() - 1; i-- > 0;) {
    const std::string p = "P(" + inner + ")";
    inner = w.slot(i).is_one() ? p : format_monomial(w.slot(i), vars) + "*" + p;
  }
  return inner;
}

std::string format_term(const BracketedTerm& t, const VarTable& vars) {
  using Kind = BracketedTerm::Kind;
  switch (t.kind()) {
    case Kind::One:
      return "1";
    case Kind::Var:
      return format_letter(t.letter(), vars);
    case Kind::P:
      return "P(" + format_term(t.arg(), vars) + ")";
    case Kind::D:
      return "d(" + format_term(t.arg(), vars) + ")";
    case Kind::Prod: {
      std::string out;
      for (const auto& c : t.children()) {
        if (!out.empty()) out += "*";
        out += format_term(c, vars);
      }
      return out;
    }
  }
  return "?";
}

namespace {

// Appends c*body with sign handling; `first` is the leading term.
void append_term(std::string& out, const Rational& c, const std::string& body, bool first) {
  const bool neg = sgn(c) < 0;
  const Rational a = neg ? Rational(-c) : c;
  if (first) {
    if (neg) out += "-";
  } else {
    out += neg ? " - " : " + ";
  }
  if (a == 1) {
    out += body;
    return;
  }
  const std::string num = a.get_den() == 1 ? a.get_str() : "(" + a.get_str() + ")";
  out += body == "1" ? num : num + "*" + body;
}

template <class Poly, class Fmt>
std::string format_descending(const Poly& p, Fmt fmt) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    append_term(out, it->second, fmt(it->first), first);
    first = false;
  }
  return out;
}

}  // namespace

std::string format_poly(const DiffPoly& p, const VarTable& vars) {
  return format_descending(p, [&](const CommMonomial& u) { return format_monomial(u, vars); });
}

std::string format_tensor(const TensorPoly& p, const VarTable& vars, OutputFormat f) {
  return format_descending(p, [&](const TensorWord& w) { return format_word(w, vars, f); });
}

std::string format_terms(const TermPoly& p, const VarTable& vars) {
  return format_descending(p, [&](const BracketedTerm& t) { return format_term(t, vars); });
}

// --- parsing ----------------------------------------------------------------

namespace {

TermPoly times(const TermPoly& a, const TermPoly& b) {
  TermPoly out;
  for (const auto& [s, cs] : a)
    for (const auto& [t, ct] : b) out.add(BracketedTerm::prod(s, t), cs * ct);
  return out;
}

TermPoly map_terms(const TermPoly& a, const std::function<BracketedTerm(const BracketedTerm&)>& f) {
  TermPoly out;
  for (const auto& [t, c] : a) out.add(f(t), c);
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const VarTable& vars, const TruncationOrder& order)
      : text_(text), vars_(vars), order_(order) {}

  TermPoly parse() {
    TermPoly e = expr();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }

  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(what, line, col);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  // "(x)" where an operator is expected.
  bool accept_tensor() {
    skip_space();
    std::size_t p = pos_;
    if (p >= text_.size() || text_[p] != '(') return false;
    ++p;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    if (p >= text_.size() || text_[p] != 'x') return false;
    ++p;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    if (p >= text_.size() || text_[p] != ')') return false;
    pos_ = p + 1;
    return true;
  }

  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint32_t nat() {
    const std::size_t at = pos_;
    const std::string d = digits();
    if (d.size() > 9) fail_at("number too large", at);
    return static_cast<std::uint32_t>(std::stoul(d));
  }

  TermPoly expr() {
    TermPoly out;
    Rational sign(1);
    if (accept('-')) {
      sign = -1;
    } else {
      accept('+');
    }
    out.add_scaled(tensor(), sign);
    while (true) {
      if (accept('+')) {
        out += tensor();
      } else if (accept('-')) {
        out -= tensor();
      } else {
        break;
      }
    }
    return out;
  }

  TermPoly tensor() {
    std::vector<TermPoly> slots{term()};
    while (accept_tensor()) slots.push_back(term());
    TermPoly inner = slots.back();
    for (std::size_t i = slots.size() - 1; i-- > 0;)
      inner = times(slots[i], map_terms(inner, [](const BracketedTerm& t) {
                      return BracketedTerm::P(t);
                    }));
    return inner;
  }

  TermPoly term() {
    TermPoly out = power();
    while (true) {
      skip_space();
      if (!peek('*')) break;
      ++pos_;
      out = times(out, power());
    }
    return out;
  }

  TermPoly power() {
    TermPoly base = atom();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      const std::uint32_t e = nat();
      TermPoly out = TermPoly::of(BracketedTerm::one());
      for (std::uint32_t i = 0; i < e; ++i) out = times(out, base);
      return out;
    }
    return base;
  }

  TermPoly atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational q(digits());
      if (accept('/')) {
        const std::size_t at = pos_;
        Rational den(digits());
        if (sgn(den) == 0) fail_at("zero denominator", at);
        q /= den;
      }
      q.canonicalize();
      return TermPoly::of(BracketedTerm::one(), q);
    }
    if (c == '(') {
      ++pos_;
      TermPoly e = expr();
      expect(')');
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      if ((name == "d" || name == "P") && peek('(')) {
        ++pos_;
        TermPoly e = expr();
        expect(')');
        return map_terms(e, [&](const BracketedTerm& t) {
          return name == "d" ? BracketedTerm::D(t) : BracketedTerm::P(t);
        });
      }
      const auto idx = vars_.find(name);
      if (!idx) fail_at("unknown variable '" + name + "'", start);
      std::uint32_t order = 0;
      if (pos_ < text_.size() && text_[pos_] == '\'') {
        while (pos_ < text_.size() && text_[pos_] == '\'') {
          ++order;
          ++pos_;
        }
      } else if (text_.substr(pos_, 2) == "^(") {
        pos_ += 2;
        order = nat();
        expect(')');
      }
      if (!order_.admits(order)) fail_at("derivative order exceeds the truncation order", start);
      return TermPoly::of(BracketedTerm::var({static_cast<std::uint32_t>(*idx), order}));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const VarTable& vars_;
  const TruncationOrder& order_;
  std::size_t pos_ = 0;
};

}  // namespace

TermPoly parse_expression(std::string_view text, const VarTable& vars,
                          const TruncationOrder& order) {
  return Parser(text, vars, order).parse();
}

}  // namespace idnf
