#include <doctest.h>

#include "helpers.hpp"
#include "idnf/enumerate.hpp"
#include "oracles.hpp"

using namespace idnf;
using th::show;
using th::word;

namespace {

const TruncationOrder inf = TruncationOrder::unbounded();
const std::vector<Rational> weights{Rational(0), Rational(1), Rational(-1), Rational(1, 2)};

TensorPoly W(const std::string& s) { return TensorPoly::of(word(s)); }

}  // namespace

TEST_CASE("depth and breadth") {
  CHECK(word("x").depth() == 1);
  CHECK(word("1 (x) x (x) y").depth() == 3);
  CHECK(word("1 (x) x").depth() == 2);
  CHECK(breadth(word("x*y")) == 2);
  CHECK(breadth(word("x (x) y")) == 2);
  CHECK(breadth(word("1 (x) y")) == 1);
  CHECK_THROWS_AS(TensorWord(std::vector<CommMonomial>{}), DomainError);
}

TEST_CASE("word order") {
  CHECK(cmp_word(word("1 (x) x"), word("x^2*y^3")) > 0);
  CHECK(cmp_word(word("1 (x) x"), word("1 (x) x'")) > 0);
  CHECK(cmp_word(word("x (x) z"), word("y (x) z")) > 0);
}

TEST_CASE("shuffle examples") {
  const Weight l(Rational(5));
  CHECK(shuffle_mul(word("x"), word("y"), l) == W("x*y"));
  CHECK(show(shuffle_mul(word("1 (x) x"), word("1 (x) y"), l)) ==
        "1 (x) x (x) y + 1 (x) y (x) x + 5*1 (x) x*y");
  CHECK(shuffle_mul(TensorWord::unit(), word("x (x) y'"), l) == W("x (x) y'"));
  CHECK(show(shuffle_mul(word("x (x) y"), word("z (x) x'"), l)) ==
        "x*z (x) x' (x) y + x*z (x) y (x) x' + 5*x*z (x) x'*y");
}

TEST_CASE("shuffle agrees with the surjection oracle") {
  const auto ws = words(letters(2, 1), 4, 2);
  Sampler s(3);
  for (const auto& lambda : weights)
    for (int i = 0; i < 150; ++i) {
      const TensorWord a = ws[s.index(ws.size())];
      const TensorWord b = ws[s.index(ws.size())];
      REQUIRE(shuffle_mul(a, b, Weight(lambda)) == oracle::shuffle(a, b, lambda));
    }
}

TEST_CASE("weight zero shuffle is the classical shuffle") {
  const auto ws = words(letters(2, 0), 4, 3);
  for (std::size_t i = 0; i < ws.size(); i += 7)
    for (std::size_t j = 0; j < ws.size(); j += 5) {
      if (ws[i].depth() + ws[j].depth() > 7) continue;
      REQUIRE(shuffle_mul(ws[i], ws[j], Weight()) == oracle::interleavings(ws[i], ws[j]));
    }
}

TEST_CASE("shuffle is commutative and associative") {
  Sampler s(5);
  const auto al = letters(2, 1);
  for (const auto& lambda : weights) {
    const Weight l(lambda);
    for (int i = 0; i < 40; ++i) {
      const TensorPoly a = s.poly(al, 3, 3, 2), b = s.poly(al, 3, 3, 2), c = s.poly(al, 3, 3, 2);
      REQUIRE(shuffle_mul(a, b, l) == shuffle_mul(b, a, l));
      REQUIRE(shuffle_mul(shuffle_mul(a, b, l), c, l) == shuffle_mul(a, shuffle_mul(b, c, l), l));
    }
  }
}

TEST_CASE("P examples and Rota-Baxter identity") {
  CHECK(apply_P(W("x")) == W("1 (x) x"));
  CHECK(apply_P(W("1 (x) x")) == W("1 (x) 1 (x) x"));
  CHECK(apply_P(TensorPoly{}).is_zero());
  Sampler s(9);
  const auto al = letters(2, 1);
  for (const auto& lambda : weights) {
    const Weight l(lambda);
    for (int i = 0; i < 40; ++i) {
      const TensorPoly a = s.poly(al, 3, 3, 2), b = s.poly(al, 3, 3, 2);
      TensorPoly rhs = apply_P(shuffle_mul(a, apply_P(b), l)) + apply_P(shuffle_mul(apply_P(a), b, l));
      rhs.add_scaled(apply_P(shuffle_mul(a, b, l)), lambda);
      REQUIRE(shuffle_mul(apply_P(a), apply_P(b), l) == rhs);
    }
  }
}

TEST_CASE("d examples") {
  const Weight l(Rational(1));
  const TruncationOrder one = TruncationOrder::bounded(1);
  CHECK(apply_d(W("1 (x) x"), l, inf) == W("x"));
  CHECK(apply_d(apply_d(W("1 (x) x"), l, inf), l, inf) == W("x'"));
  // truncation at order 1 still leaves d^2(1 (x) x) = x'
  CHECK(apply_d(apply_d(W("1 (x) x"), l, one), l, one) == W("x'"));
  CHECK(apply_d(apply_d(W("x"), l, one), l, one).is_zero());
  CHECK(show(apply_d(W("x (x) y (x) z"), Weight(Rational(2)), inf)) ==
        "x' (x) y (x) z + x*y (x) z + 2*x'*y (x) z");
}

TEST_CASE("d is a section of P and a derivation of the shuffle product") {
  Sampler s(13);
  for (const auto& n : {TruncationOrder::bounded(1), TruncationOrder::bounded(2), inf}) {
    const auto al = letters(2, n.is_bounded() ? n.value() : 2);
    for (const auto& lambda : weights) {
      const Weight l(lambda);
      for (int i = 0; i < 30; ++i) {
        const TensorPoly a = s.poly(al, 3, 3, 2), b = s.poly(al, 3, 3, 2);
        REQUIRE(apply_d(apply_P(a), l, n) == a);
        const TensorPoly da = apply_d(a, l, n), db = apply_d(b, l, n);
        TensorPoly rhs = shuffle_mul(da, b, l) + shuffle_mul(a, db, l);
        rhs.add_scaled(shuffle_mul(da, db, l), lambda);
        REQUIRE(apply_d(shuffle_mul(a, b, l), l, n) == rhs);
      }
    }
  }
}

TEST_CASE("leading word") {
  CHECK_THROWS_AS(leading_word(TensorPoly{}), DomainError);
  const TensorPoly p = shuffle_mul(word("1 (x) x"), word("1 (x) y"), Weight(Rational(1)));
  CHECK(leading_word(p).first == word("1 (x) x (x) y"));
  CHECK(leading_word(p).second == 1);
  CHECK(leading_word(Rational(-4) * W("y (x) x")) == std::pair{word("y (x) x"), Rational(-4)});
}

TEST_CASE("tensor of polynomial slots") {
  DiffPoly a = th::poly("x + 2*y"), b = th::poly("z");
  CHECK(show(tensor_of({a, b})) == "x (x) z + 2*y (x) z");
  CHECK(tensor_of({a, DiffPoly{}}).is_zero());
}
