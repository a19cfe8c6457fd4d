#include <doctest.h>

#include "helpers.hpp"
#include "idnf/enumerate.hpp"

using namespace idnf;
using th::show;
using th::word;
using T = BracketedTerm;

namespace {

const TruncationOrder inf = TruncationOrder::unbounded();
const std::vector<Rational> weights{Rational(0), Rational(1), Rational(-1), Rational(1, 2)};

T var(std::uint32_t v, std::uint32_t k = 0) { return T::var({v, k}); }

// Random bracketed term with about `size` nodes.
T random_term(Sampler& s, unsigned vars, unsigned size) {
  if (size <= 1) {
    const std::size_t r = s.index(6);
    if (r == 0) return T::one();
    return var(static_cast<std::uint32_t>(s.index(vars)), static_cast<std::uint32_t>(s.index(2)));
  }
  switch (s.index(3)) {
    case 0:
      return T::P(random_term(s, vars, size - 1));
    case 1:
      return T::D(random_term(s, vars, size - 1));
    default: {
      const unsigned left = 1 + static_cast<unsigned>(s.index(size - 1));
      return T::prod(random_term(s, vars, left), random_term(s, vars, size - left));
    }
  }
}

}  // namespace

TEST_CASE("products are flattened, unit-free and sorted") {
  const T x = var(0), y = var(1);
  CHECK(T::prod(x, y) == T::prod(y, x));
  CHECK(T::prod(T::prod(x, y), x) == T::prod({x, x, y}));
  CHECK(T::prod(T::one(), x) == x);
  CHECK(T::prod(std::vector<T>{}) == T::one());
  CHECK(T::prod({T::P(x), x}).children().front() == x);
}

TEST_CASE("embed") {
  CHECK(embed(word("x")) == var(0));
  CHECK(embed(word("1 (x) x")) == T::P(var(0)));
  CHECK(embed(word("x (x) y (x) z")) == T::prod(var(0), T::P(T::prod(var(1), T::P(var(2))))));
}

TEST_CASE("red examples") {
  const Weight l(Rational(7));
  const T u = T::prod(var(0), var(1, 1)), v = var(2);
  CHECK(show(red(T::prod(T::P(u), T::P(v)), l, inf)) ==
        "1 (x) x*y' (x) z + 1 (x) z (x) x*y' + 7*1 (x) x*y'*z");
  CHECK(red(T::D(T::P(var(0))), l, inf) == TensorPoly::of(word("x")));
  CHECK(show(red(T::D(T::prod(var(0), var(0))), l, inf)) == "2*x*x' + 7*(x')^2");
  for (unsigned n = 1; n <= 3; ++n)
    CHECK(red(T::D(var(0), n + 1), l, TruncationOrder::bounded(n)).is_zero());
  CHECK(red(T::D(T::one()), l, inf).is_zero());
}

TEST_CASE("red inverts embed") {
  for (const auto& w : words(letters(2, 1), 3, 3))
    REQUIRE(red(embed(w), Weight(Rational(1)), inf) == TensorPoly::of(w));
}

TEST_CASE("red is multiplicative and compatible with d and P") {
  Sampler s(21);
  for (const auto& lambda : weights)
    for (const auto& n : {TruncationOrder::bounded(1), TruncationOrder::bounded(2), inf}) {
      const Weight l(lambda);
      for (int i = 0; i < 40; ++i) {
        const T a = random_term(s, 2, 1 + static_cast<unsigned>(s.index(5)));
        const T b = random_term(s, 2, 1 + static_cast<unsigned>(s.index(4)));
        const TensorPoly ra = red(a, l, n), rb = red(b, l, n);
        REQUIRE(red(T::prod(a, b), l, n) == shuffle_mul(ra, rb, l));
        REQUIRE(red(T::P(a), l, n) == apply_P(ra));
        REQUIRE(red(T::D(a), l, n) == apply_d(ra, l, n));
      }
    }
}

TEST_CASE("innermost and outermost rewriting agree") {
  Sampler s(22);
  for (const auto& lambda : weights) {
    const Weight l(lambda);
    for (int i = 0; i < 150; ++i) {
      const T t = random_term(s, 2, 1 + static_cast<unsigned>(s.index(8)));
      REQUIRE(red(t, l, inf, Strategy::Innermost) == red(t, l, inf, Strategy::Outermost));
    }
  }
}

TEST_CASE("red reports fuel exhaustion") {
  const T t = T::prod({T::P(var(0)), T::P(var(1)), T::P(var(0, 1)), T::P(var(1, 1))});
  CHECK_THROWS_AS(red(t, Weight(Rational(1)), inf, Strategy::Innermost, Fuel{5}), FuelExhausted);
}

TEST_CASE("DRB monomial recognition folds derivatives of letters") {
  const TruncationOrder two = TruncationOrder::bounded(2);
  CHECK(as_drb_monomial(T::D(var(0)), two) == word("x'"));
  CHECK_FALSE(as_drb_monomial(T::D(var(0, 2)), two).has_value());
  CHECK_FALSE(as_drb_monomial(T::D(T::prod(var(0), var(0))), inf).has_value());
  CHECK_FALSE(as_drb_monomial(T::prod(T::P(var(0)), T::P(var(0))), inf).has_value());
  CHECK(as_drb_monomial(T::prod(var(1), T::P(T::D(var(0)))), inf) == word("y (x) x'"));
}
