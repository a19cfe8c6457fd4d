#include <doctest.h>

#include "helpers.hpp"
#include "idnf/enumerate.hpp"
#include "idnf/gsb.hpp"
#include "idnf/integro.hpp"

using namespace idnf;
using th::show;
using th::word;
using T = BracketedTerm;

namespace {

const TruncationOrder inf = TruncationOrder::unbounded();
const std::vector<Rational> weights{Rational(0), Rational(1), Rational(-1), Rational(1, 2)};

TensorPoly W(const std::string& s) { return TensorPoly::of(word(s)); }

// ⋆ * m1 in slot `slot` of the given skeleton.
StarWord star(const std::string& skeleton, std::size_t slot, std::uint32_t order = 0) {
  return StarWord(word(skeleton), slot, order);
}

}  // namespace

TEST_CASE("substitution") {
  const Weight l(Rational(3));
  // ⋆ P(x) with s = P(y)
  CHECK(show(substitute(star("1 (x) x", 0), W("1 (x) y"), l, inf)) ==
        "1 (x) x (x) y + 1 (x) y (x) x + 3*1 (x) x*y");
  CHECK(substitute(star("1", 0, 1), W("x"), l, inf) == W("x'"));
  CHECK(substitute(star("1", 0, 1), W("1 (x) x"), l, inf) == W("x"));
  CHECK(substitute(star("y (x) z", 1), W("x (x) x"), l, inf) == W("y (x) x*z (x) x"));
}

TEST_CASE("direct plugging agrees with rewriting") {
  const auto ws = words(letters(2, 1), 3, 2);
  Sampler s(4);
  for (int i = 0; i < 200; ++i) {
    const TensorWord sk = ws[s.index(ws.size())];
    const StarWord q(sk, sk.depth() - 1, 0);
    const TensorWord w = ws[s.index(ws.size())];
    REQUIRE(TensorPoly::of(*q.plug(w)) == red(q.fill(embed(w)), Weight(Rational(1)), inf));
  }
}

TEST_CASE("normality") {
  const TruncationOrder two = TruncationOrder::bounded(2);
  CHECK(is_normal(star("1", 0, 1), W("x"), two));
  CHECK(is_normal(star("1", 0, 1), W("x'"), two));
  CHECK_FALSE(is_normal(star("1", 0, 1), W("x''"), two));
  CHECK_FALSE(is_normal(star("1", 0, 1), W("x^2"), inf));
  CHECK_FALSE(is_normal(star("1 (x) x", 0), W("1 (x) x"), inf));
  CHECK_THROWS_AS(is_normal(star("1", 0), TensorPoly{}, inf), DomainError);
}

TEST_CASE("d^l(⋆) is normal exactly on single letters of order at most n - l") {
  for (unsigned n = 1; n <= 3; ++n) {
    const TruncationOrder tn = TruncationOrder::bounded(n);
    for (std::uint32_t l = 1; l <= n + 1; ++l)
      for (const auto& w : words(letters(2, n), 2, 2)) {
        const bool letter = w.depth() == 1 && w.front().is_letter();
        const bool expect = letter && w.front().max_order() + l <= n;
        CHECK(is_normal(star("1", 0, l), w, tn) == expect);
      }
  }
}

TEST_CASE("classification") {
  auto a = classify(StarWord(TensorWord::of(th::mono("y")), 0, 2));
  CHECK(a.type == StarType::I);
  CHECK(a.order == 2);
  auto b = classify(star("x (x) y", 0));
  CHECK(b.type == StarType::II);
  CHECK(b.form == Classification::Form::StarTimes);
  CHECK(b.s == th::mono("x"));
  CHECK(b.t == word("1 (x) y"));
  auto c = classify(star("x (x) y", 1));
  CHECK(c.form == Classification::Form::SP);
  CHECK(c.s == th::mono("x"));
  CHECK(*c.inner == star("y", 0));
  CHECK(classify(star("x", 0)).t == TensorWord::unit());
}

TEST_CASE("phi expansion and leading word") {
  const Weight l(Rational(2));
  const GsGenerator g = phi(word("x"), TensorWord::unit(), l, inf);
  CHECK(show(g.expansion) == "1 (x) x' (x) 1 - x (x) 1 + 1 (x) x + 2*1 (x) x'");
  CHECK(g.scale == 1);
  CHECK(phi(word("x"), word("y"), l, inf).lead() == word("1 (x) x' (x) y"));
  CHECK(leading_of_phi(word("x"), word("y"), l, inf) == word("1 (x) x' (x) y"));
  CHECK(leading_of_phi(word("x^2"), TensorWord::unit(), l, inf) == word("1 (x) x*x' (x) 1"));
  const GsGenerator sq = phi(word("x^2"), TensorWord::unit(), l, inf);
  CHECK(sq.scale == 2);
  CHECK(sq.lead() == word("1 (x) x*x' (x) 1"));
  // u = x (x) z, v = y: the tails z and y quasi-shuffle, y > z
  CHECK(leading_of_phi(word("x (x) z"), word("y"), l, inf) == word("1 (x) x' (x) y (x) z"));
  CHECK(phi(word("x (x) z"), word("y"), l, inf).lead() == word("1 (x) x' (x) y (x) z"));
  CHECK_THROWS_AS(phi(word("1 (x) x"), word("y"), l, inf), DomainError);
  CHECK_THROWS_AS(phi(TensorWord::unit(), word("y"), l, inf), DomainError);
}

TEST_CASE("leading word of phi matches the predicted form on an enumeration") {
  for (const auto& lambda : weights) {
    const Weight l(lambda);
    const auto ws = words(letters(2, 1), 2, 2);
    for (const auto& u : ws) {
      if (u.is_P_image() || u == TensorWord::unit()) continue;
      for (const auto& v : ws)
        REQUIRE(phi(u, v, l, inf).lead() == leading_of_phi(u, v, l, inf));
    }
  }
}

TEST_CASE("derivation compositions vanish") {
  const Weight l(Rational(1));
  CHECK(check_derivation_composition(phi(word("x"), word("y"), l, inf), 1, l, inf).trivial);
  CHECK(check_derivation_composition(phi(word("x^2"), TensorWord::unit(), l, inf), 1, l, inf).trivial);
  CHECK(check_derivation_composition(phi(word("x (x) y'"), word("1 (x) x"), l, inf), 2, l, inf).trivial);
  CHECK_THROWS_AS(check_derivation_composition(phi(word("x"), word("y"), l, inf), 0, l, inf),
                  DomainError);
}

TEST_CASE("multiplication identity and certificate") {
  for (const auto& lambda : weights) {
    const Weight l(lambda);
    CHECK(multiplication_identity_residual(word("x"), TensorWord::unit(), word("y"), l, inf).is_zero());
    CHECK(multiplication_identity_residual(word("x"), word("y"), word("1 (x) z"), l, inf).is_zero());
    auto r1 = check_multiplication_composition(phi(word("x"), TensorWord::unit(), l, inf), word("y"), l, inf);
    CHECK(r1.trivial);
    auto r2 = check_multiplication_composition(phi(word("x"), word("y"), l, inf), word("1 (x) z"), l, inf);
    CHECK(r2.trivial);
    CHECK(r2.residual.is_zero());
  }
}

TEST_CASE("occurrences") {
  const TensorWord f = word("1 (x) x' (x) 1 (x) y' (x) x");
  const TensorWord g = word("1 (x) y' (x) x");
  auto occ = find_occurrences(f, g, inf);
  REQUIRE(occ.size() == 1);
  CHECK(occ[0] == star("1 (x) x' (x) 1", 2));
  CHECK(find_occurrences(word("1 (x) x' (x) y"), word("1 (x) y' (x) x"), inf).empty());
  // a single letter under d^2
  auto typ1 = find_occurrences(word("y (x) x''*y"), word("x"), inf);
  bool found = false;
  for (const auto& q : typ1) found = found || (q.order() == 2 && q == star("y (x) y", 1, 2));
  CHECK(found);
}

TEST_CASE("including composition inside the v argument reduces to zero") {
  const Weight l(Rational(1));
  const GsGenerator g = phi(word("y"), TensorWord::unit(), l, inf);
  // v = 1 (x) y' (x) 1 = lead g, so lead f contains lead g as a suffix
  const GsGenerator f = phi(word("x"), word("1 (x) y' (x) 1"), l, inf);
  auto reports = find_including_compositions(f, g, l, inf);
  REQUIRE_FALSE(reports.empty());
  for (const auto& r : reports) {
    CHECK_MESSAGE(r.trivial, r.note);
    CHECK(evaluate(r.certificate, l, inf) == r.residual);
  }
}

TEST_CASE("two generators with equal leading words") {
  const Weight l(Rational(1));
  const GsGenerator f = phi(word("x"), word("y*z"), l, inf);
  const GsGenerator g = phi(word("x (x) y"), word("z"), l, inf);
  CHECK(f.lead() != g.lead());
  const GsGenerator h = phi(word("x (x) 1"), word("y*z"), l, inf);
  auto reports = find_including_compositions(f, phi(word("x"), word("y*z"), l, inf), l, inf);
  CHECK(reports.empty());
  for (const auto& r : find_including_compositions(h, f, l, inf)) CHECK_MESSAGE(r.trivial, r.note);
}

TEST_CASE("no intersection compositions among generators") {
  const Weight l(Rational(1));
  const GsGenerator f = phi(word("x"), word("y"), l, inf);
  const GsGenerator g = phi(word("x^2"), word("y"), l, inf);
  CHECK(find_intersection_compositions(f, g, l, inf).empty());
}

TEST_CASE("irreducible words") {
  CHECK(irr_member(word("1 (x) x (x) y^2")));
  CHECK_FALSE(irr_member(word("1 (x) x' (x) y")));
  CHECK(irr_member(word("x'")));
  CHECK(irr_member(word("x' (x) y'")));
}

TEST_CASE("weak monomiality on type II contexts") {
  Sampler s(31);
  const auto al = letters(2, 1);
  const auto ws = words(al, 3, 2);
  const Weight l(Rational(1));
  for (int i = 0; i < 300; ++i) {
    TensorWord u = ws[s.index(ws.size())], v = ws[s.index(ws.size())];
    if (u == v) continue;
    if (cmp_word(u, v) < 0) std::swap(u, v);
    const TensorWord sk = ws[s.index(ws.size())];
    const StarWord q(sk, s.index(sk.depth()), 0);
    const TensorPoly qu = substitute(q, u, l, inf), qv = substitute(q, v, l, inf);
    REQUIRE(cmp_word(qu.leading().first, qv.leading().first) > 0);
  }
}
