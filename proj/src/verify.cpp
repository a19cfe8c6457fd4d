#include "idnf/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "json.hpp"

#include "idnf/linalg.hpp"
#include "idnf/syntax.hpp"

namespace idnf {

namespace {

constexpr std::size_t kMaxRecordedPerCheck = 5;

std::string lambda_text(const Weight& l) { return to_string(l.value()); }

std::string order_text(const TruncationOrder& n) {
  return n.is_bounded() ? std::to_string(n.value()) : "inf";
}

std::string vars_text(const VarTable& t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + t.name(i);
  return out;
}

std::string setting_text(const Weight& l, const TruncationOrder& n, const VarTable& t) {
  return "--lambda " + lambda_text(l) + " --order " + order_text(n) + " --vars " + vars_text(t);
}

unsigned order_cap(const TruncationOrder& n, unsigned bound) {
  return n.is_bounded() ? std::min(n.value(), bound) : bound;
}

std::string star_text(const StarWord& q, const VarTable& t) {
  std::ostringstream s;
  s << "star in slot " << q.slot() << " of " << format_word(q.skeleton(), t);
  if (q.order() > 0) s << " under d^" << q.order();
  return s.str();
}

using Setting = std::function<void(const Weight&, const TruncationOrder&, const VarTable&)>;

void for_each_setting(const VerifyConfig& cfg, const Setting& body) {
  for (const auto& t : cfg.tables)
    for (const auto& n : cfg.orders)
      for (const auto& l : cfg.lambdas) body(l, n, t);
}

// Runs one named check; any library error counts as a failure of that check.
void run(SuiteReport& r, const std::string& check, const std::string& setting,
         const std::function<std::string()>& body) {
  std::string problem;
  try {
    problem = body();
  } catch (const FuelExhausted& e) {
    problem = e.what();
  } catch (const Error& e) {
    problem = std::string("error: ") + e.what();
  }
  if (problem.empty())
    r.pass(check);
  else
    r.fail(check, setting, problem);
}

std::string differ(const std::string& what, const TensorPoly& a, const TensorPoly& b,
                   const VarTable& t) {
  if (a == b) return {};
  return what + ": " + format_tensor(a, t) + " != " + format_tensor(b, t);
}

}  // namespace

void SuiteReport::pass(const std::string& check) {
  ++checks;
  failures_by_check.try_emplace(check, 0);
}

void SuiteReport::fail(const std::string& check, const std::string& setting,
                       const std::string& detail) {
  ++checks;
  ++failure_count;
  ++failures_by_check[check];
  if (failures_by_check[check] <= kMaxRecordedPerCheck) failures.push_back({check, setting, detail});
}

bool SuiteReport::passed(const std::vector<std::string>& names) const {
  for (const auto& n : names) {
    auto it = failures_by_check.find(n);
    if (it != failures_by_check.end() && it->second > 0) return false;
  }
  return true;
}

std::string SuiteReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["passed"] = passed();
  j["checks"] = checks;
  j["failures"] = failure_count;
  j["counts"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : counts) j["counts"][k] = v;
  j["failures_by_check"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : failures_by_check) j["failures_by_check"][k] = v;
  j["reproducers"] = nlohmann::ordered_json::array();
  for (const auto& f : failures)
    j["reproducers"].push_back({{"check", f.check}, {"setting", f.setting}, {"detail", f.detail}});
  return j.dump(2);
}

// ---------------------------------------------------------------------------
// axioms

SuiteReport verify_axioms(const VerifyConfig& cfg) {
  SuiteReport r;
  r.suite = "axioms";
  Sampler rng(cfg.seed);
  for_each_setting(cfg, [&](const Weight& l, const TruncationOrder& n, const VarTable& t) {
    const std::string setting = setting_text(l, n, t);
    const auto alphabet = letters(static_cast<unsigned>(t.size()), order_cap(n, cfg.bounds.order));
    const auto nf = [&](const TensorPoly& p) { return normal_form(p, l, n, NormalStrategy::LeadingFirst, cfg.fuel); };
    const auto mul = [&](const NormalElement& a, const NormalElement& b) {
      return nf(shuffle_mul(a.value(), b.value(), l));
    };
    const auto D = [&](const NormalElement& a) { return nf(apply_d(a.value(), l, n)); };
    const auto P = [&](const NormalElement& a) { return nf(apply_P(a.value())); };
    const auto sample = [&] {
      return rng.poly(alphabet, cfg.bounds.depth, cfg.bounds.degree, 2);
    };
    for (std::size_t k = 0; k < cfg.samples; ++k) {
      const TensorPoly pa = sample(), pb = sample(), pc = sample();
      const std::string repro = setting + " a=\"" + format_tensor(pa, t) + "\" b=\"" +
                                format_tensor(pb, t) + "\" c=\"" + format_tensor(pc, t) + "\"";
      NormalElement a, b, c;
      bool have = false;
      run(r, "sample", repro, [&] {
        a = nf(pa);
        b = nf(pb);
        c = nf(pc);
        have = true;
        return std::string();
      });
      if (!have) continue;
      run(r, "commutativity", repro,
          [&] { return differ("ab vs ba", mul(a, b).value(), mul(b, a).value(), t); });
      run(r, "associativity", repro, [&] {
        return differ("(ab)c vs a(bc)", mul(mul(a, b), c).value(), mul(a, mul(b, c)).value(), t);
      });
      run(r, "leibniz", repro, [&] {
        const NormalElement da = D(a), db = D(b);
        TensorPoly rhs = mul(da, b).value() + mul(a, db).value();
        rhs.add_scaled(mul(da, db).value(), l.value());
        return differ("d(ab)", D(mul(a, b)).value(), rhs, t);
      });
      run(r, "rota-baxter", repro, [&] {
        const NormalElement Pa = P(a), Pb = P(b);
        TensorPoly rhs = P(mul(a, Pb)).value() + P(mul(Pa, b)).value();
        rhs.add_scaled(P(mul(a, b)).value(), l.value());
        return differ("P(a)P(b)", mul(Pa, Pb).value(), rhs, t);
      });
      run(r, "section", repro, [&] { return differ("dP(a)", D(P(a)).value(), a.value(), t); });
      run(r, "integration-by-parts", repro, [&]() -> std::string {
        const NormalElement da = D(a), Pb = P(b);
        TensorPoly lhs = P(mul(da, Pb)).value() - mul(a, Pb).value() + P(mul(a, b)).value();
        lhs.add_scaled(P(mul(da, b)).value(), l.value());
        if (lhs.is_zero()) return {};
        return "P(d(a)P(b)) - aP(b) + P(ab) + λP(d(a)b) = " + format_tensor(lhs, t);
      });
    }
  });
  return r;
}

// ---------------------------------------------------------------------------
// gsb

SuiteReport verify_gsb(const VerifyConfig& cfg) {
  SuiteReport r;
  r.suite = "gsb";
  r.counts["intersection compositions"] = 0;
  r.counts["including compositions"] = 0;
  for_each_setting(cfg, [&](const Weight& l, const TruncationOrder& n, const VarTable& t) {
    const std::string setting = setting_text(l, n, t);
    const auto alphabet = letters(static_cast<unsigned>(t.size()), order_cap(n, cfg.bounds.order));
    const auto ws = words(alphabet, cfg.bounds.depth, cfg.bounds.degree);

    std::vector<GsGenerator> gens;
    const auto degenerate = [&](const GsGenerator& g) {
      return derive_monomial(g.u.front(), l, n).is_zero();
    };
    for (const auto& u : ws) {
      if (u.is_P_image() || u == TensorWord::unit()) continue;
      for (const auto& v : ws) {
        const std::string repro = setting + " u=\"" + format_word(u, t) + "\" v=\"" +
                                  format_word(v, t) + "\"";
        try {
          gens.push_back(phi(u, v, l, n));
          r.pass("generator");
        } catch (const Error& e) {
          r.fail("generator", repro, e.what());
          continue;
        }
        const GsGenerator& g = gens.back();
        run(r, "leading-word", repro, [&]() -> std::string {
          if (derive_monomial(u.front(), l, n).is_zero())
            return "d(u0) vanishes and the leading word is " + format_word(g.lead(), t);
          const TensorWord predicted = leading_of_phi(u, v, l, n);
          if (predicted == g.lead()) return {};
          return "predicted " + format_word(predicted, t) + ", got " + format_word(g.lead(), t);
        });
        for (std::uint32_t k = 1; k <= 2; ++k)
          run(r, "derivation", repro + " l=" + std::to_string(k), [&]() -> std::string {
            const auto rep = check_derivation_composition(g, k, l, n);
            return rep.trivial ? "" : "d^l(φ) = " + format_tensor(rep.residual, t);
          });
      }
    }
    r.counts["generators"] += gens.size();

    // Multiplication compositions φ(u,v)P(w).
    const auto pw = words(alphabet, cfg.product.depth, cfg.product.degree);
    const auto mw = words(alphabet, cfg.multiplier.depth, cfg.multiplier.degree);
    for (const auto& u : pw) {
      if (u.is_P_image() || u == TensorWord::unit()) continue;
      for (const auto& v : pw) {
        const GsGenerator g = phi(u, v, l, n);
        for (const auto& w : mw) {
          const std::string repro = setting + " u=\"" + format_word(u, t) + "\" v=\"" +
                                    format_word(v, t) + "\" w=\"" + format_word(w, t) + "\"";
          ++r.counts["multiplication compositions"];
          run(r, "multiplication-identity", repro, [&] {
            const TensorPoly res = multiplication_identity_residual(u, v, w, l, n);
            return res.is_zero() ? std::string() : "residual " + format_tensor(res, t);
          });
          run(r, "multiplication-certificate", repro, [&] {
            const auto rep = check_multiplication_composition(g, w, l, n);
            return rep.trivial ? std::string() : "certificate rejected: " + rep.note;
          });
        }
      }
    }

    // Including compositions, indexing generators by the tail of their leading word.
    std::map<TensorWord, std::vector<std::size_t>, WordLess> by_tail;
    std::vector<std::size_t> single_slot;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const TensorWord& lw = gens[i].lead();
      if (lw.depth() == 1)
        single_slot.push_back(i);
      else
        by_tail[lw.tail()].push_back(i);
    }
    for (const auto& f : gens) {
      const TensorWord& h = f.lead();
      std::vector<std::size_t> cands = single_slot;
      for (std::size_t i = 0; i + 1 < h.depth(); ++i) {
        std::vector<CommMonomial> suffix(h.slots().begin() + static_cast<long>(i) + 1,
                                         h.slots().end());
        auto it = by_tail.find(TensorWord(std::move(suffix)));
        if (it != by_tail.end()) cands.insert(cands.end(), it->second.begin(), it->second.end());
      }
      for (const std::size_t gi : cands) {
        const GsGenerator& g = gens[gi];
        std::vector<CompositionReport> reps;
        const std::string repro = setting + " f=phi(\"" + format_word(f.u, t) + "\", \"" +
                                  format_word(f.v, t) + "\") g=phi(\"" + format_word(g.u, t) +
                                  "\", \"" + format_word(g.v, t) + "\")";
        try {
          reps = find_including_compositions(f, g, l, n, cfg.fuel);
        } catch (const Error& e) {
          r.fail("including", repro, e.what());
          continue;
        }
        for (const auto& rep : reps) {
          ++r.counts["including compositions"];
          if (rep.trivial) {
            r.pass("including");
          } else {
            r.fail("including", repro, rep.note);
            if (degenerate(f) || degenerate(g)) ++r.counts["including failures with d(u0) = 0"];
            if (rep.note.find("fuel exhausted") != std::string::npos)
              ++r.counts["including failures by fuel exhaustion"];
          }
        }
      }
    }

    // Intersection compositions: only possible between leading words of depth one.
    for (const std::size_t i : single_slot)
      for (const std::size_t j : single_slot) {
        if (i >= j) continue;
        const auto reps = find_intersection_compositions(gens[i], gens[j], l, n);
        r.counts["intersection compositions"] += reps.size();
        for (const auto& rep : reps)
          r.fail("intersection", setting, "intersection composition at " +
                                              format_word(*rep.ambiguity, t));
      }
    r.pass("intersection");
  });
  return r;
}

// ---------------------------------------------------------------------------
// order

SuiteReport verify_order(const VerifyConfig& cfg) {
  SuiteReport r;
  r.suite = "order";
  Sampler rng(cfg.seed);
  for_each_setting(cfg, [&](const Weight& l, const TruncationOrder& n, const VarTable& t) {
    const std::string setting = setting_text(l, n, t);
    const unsigned cap = order_cap(n, cfg.bounds.order);
    const auto alphabet = letters(static_cast<unsigned>(t.size()), cap);
    const auto ws = words(alphabet, cfg.bounds.depth, cfg.bounds.degree);

    // Star words enumerated to the size bound.
    std::vector<StarWord> type2, type1;
    for (const auto& sk : words(alphabet, cfg.bounds.depth, cfg.bounds.degree))
      for (std::size_t i = 0; i < sk.depth(); ++i) {
        type2.emplace_back(sk, i, 0);
        for (unsigned k = 1; k <= cap; ++k) type1.emplace_back(sk, i, k);
      }

    const auto lead = [](const TensorPoly& p) { return p.leading().first; };

    for (std::size_t k = 0; k < cfg.samples; ++k) {
      // Type II: strict preservation.
      {
        const StarWord& q = type2[rng.index(type2.size())];
        TensorWord u = rng.word(alphabet, cfg.bounds.depth, cfg.bounds.degree);
        TensorWord v = rng.word(alphabet, cfg.bounds.depth, cfg.bounds.degree);
        if (u == v) v = TensorWord::of(mono_mul(v.front(), CommMonomial::of(alphabet.back())));
        if (cmp_word(u, v) < 0) std::swap(u, v);
        const std::string repro = setting + " q=" + star_text(q, t) + " u=\"" +
                                  format_word(u, t) + "\" v=\"" + format_word(v, t) + "\"";
        run(r, "weak-monomial-II", repro, [&]() -> std::string {
          const TensorPoly su = substitute(q, u, l, n), sv = substitute(q, v, l, n);
          if (su.is_zero()) return "q|u vanishes";
          if (sv.is_zero() || cmp_word(lead(su), lead(sv)) > 0) return {};
          return "lead q|u = " + format_word(lead(su), t) + " <= lead q|v = " +
                 format_word(lead(sv), t);
        });
      }
      // Type I: u is a letter making q|u normal; v < u arbitrary.
      if (!type1.empty()) {
        const StarWord& q = type1[rng.index(type1.size())];
        std::vector<DiffVar> fits;
        for (const auto& a : alphabet)
          if (n.admits(std::uint64_t{a.order} + q.order())) fits.push_back(a);
        if (!fits.empty()) {
          const TensorWord u = TensorWord::of(CommMonomial::of(fits[rng.index(fits.size())]));
          std::vector<TensorWord> below;
          for (const auto& w : ws)
            if (cmp_word(w, u) < 0) below.push_back(w);
          if (!below.empty()) {
            const TensorWord& v = below[rng.index(below.size())];
            const std::string repro = setting + " q=" + star_text(q, t) + " u=\"" +
                                      format_word(u, t) + "\" v=\"" + format_word(v, t) + "\"";
            run(r, "weak-monomial-I", repro, [&]() -> std::string {
              if (!is_normal(q, u, n)) return "q|u is not normal";
              const TensorPoly su = substitute(q, u, l, n), sv = substitute(q, v, l, n);
              if (su.is_zero()) return "q|u vanishes";
              if (sv.is_zero() || cmp_word(lead(su), lead(sv)) > 0) return {};
              return "lead q|u = " + format_word(lead(su), t) + " <= lead q|v = " +
                     format_word(lead(sv), t);
            });
          }
        }
      }
      // Normal substitutions: lead(q|s) = q|lead(s).
      {
        const bool one = rng.index(2) == 0 && !type1.empty();
        const StarWord& q = one ? type1[rng.index(type1.size())] : type2[rng.index(type2.size())];
        const TensorPoly s = rng.poly(alphabet, cfg.bounds.depth, cfg.bounds.degree, 3);
        if (!s.is_zero() && is_normal(q, s, n)) {
          ++r.counts["normal substitutions"];
          const std::string repro = setting + " q=" + star_text(q, t) + " s=\"" +
                                    format_tensor(s, t) + "\"";
          run(r, "normal-lead", repro, [&]() -> std::string {
            const TensorPoly whole = substitute(q, s, l, n);
            const TensorPoly top = substitute(q, lead(s), l, n);
            if (top.size() != 1) return "q|lead(s) is not a single word";
            if (whole.is_zero() || lead(whole) != lead(top))
              return "lead(q|s) = " + (whole.is_zero() ? std::string("0") : format_word(lead(whole), t)) +
                     ", q|lead(s) = " + format_word(lead(top), t);
            return {};
          });
        }
      }
    }

    // d^l(⋆) is normal for s exactly when lead(s) is a letter of order <= n - l.
    for (unsigned k = 1; k <= cap; ++k) {
      const StarWord q(TensorWord::unit(), 0, k);
      for (const auto& w : ws) {
        const bool expect = w.depth() == 1 && w.front().is_letter() &&
                            n.admits(std::uint64_t{w.front().factors().front().letter.order} + k);
        run(r, "derivative-normal", setting + " l=" + std::to_string(k) + " s=\"" +
                                        format_word(w, t) + "\"",
            [&]() -> std::string {
              return is_normal(q, w, n) == expect ? "" : "is_normal disagrees";
            });
      }
    }

    // The word order is total, antisymmetric and transitive on samples.
    for (std::size_t k = 0; k < cfg.samples; ++k) {
      const TensorWord& a = ws[rng.index(ws.size())];
      const TensorWord& b = ws[rng.index(ws.size())];
      const TensorWord& c = ws[rng.index(ws.size())];
      run(r, "order-total", setting + " a=\"" + format_word(a, t) + "\" b=\"" +
                                format_word(b, t) + "\" c=\"" + format_word(c, t) + "\"",
          [&]() -> std::string {
            const auto ab = cmp_word(a, b), ba = cmp_word(b, a);
            if ((ab == 0) != (a == b)) return "equal under the order but distinct";
            if ((ab < 0) != (ba > 0)) return "not antisymmetric";
            if (ab < 0 && cmp_word(b, c) < 0 && !(cmp_word(a, c) < 0)) return "not transitive";
            return {};
          });
    }
  });
  return r;
}

// ---------------------------------------------------------------------------
// directsum

SuiteReport verify_directsum(const VerifyConfig& cfg) {
  SuiteReport r;
  r.suite = "directsum";
  for_each_setting(cfg, [&](const Weight& l, const TruncationOrder& n, const VarTable& t) {
    const std::string setting = setting_text(l, n, t);
    if (!n.is_bounded()) {
      if (!l.is_zero()) {
        ++r.counts["skipped unbounded settings with nonzero weight"];
        return;
      }
      // Weight zero: d raises the total order by one, so the pieces of fixed
      // degree and total order are finite.
      const unsigned top = cfg.bounds.degree + cfg.bounds.order;
      const auto alphabet = letters(static_cast<unsigned>(t.size()), top);
      const auto weight = [](const CommMonomial& m) {
        unsigned w = 0;
        for (const auto& f : m.factors()) w += f.letter.order * f.multiplicity;
        return w;
      };
      for (unsigned deg = 1; deg <= cfg.bounds.degree; ++deg) {
        const auto all = monomials(alphabet, deg, deg);
        for (unsigned w = 1; w <= top; ++w) {
          std::vector<CommMonomial> piece, below;
          for (const auto& m : all) {
            if (weight(m) == w) piece.push_back(m);
            if (weight(m) + 1 == w) below.push_back(m);
          }
          std::map<CommMonomial, std::size_t, MonomialLess> index;
          for (std::size_t i = 0; i < piece.size(); ++i) index[piece[i]] = i;
          Matrix fm(piece.size()), both(piece.size());
          std::size_t rf = 0;
          for (std::size_t i = 0; i < piece.size(); ++i) {
            if (!is_functional(piece[i])) continue;
            for (std::size_t k = 0; k < piece.size(); ++k) fm[k].push_back(Rational(k == i));
            ++rf;
          }
          Matrix dm(piece.size());
          for (const auto& m : below) {
            std::vector<Rational> col(piece.size(), Rational(0));
            for (const auto& [x, c] : derive_monomial(m, l, n)) col.at(index.at(x)) = c;
            for (std::size_t k = 0; k < piece.size(); ++k) dm[k].push_back(col[k]);
          }
          for (std::size_t k = 0; k < piece.size(); ++k) {
            both[k] = fm[k];
            both[k].insert(both[k].end(), dm[k].begin(), dm[k].end());
          }
          const std::size_t rd = rank(dm), rb = rank(both);
          const std::string at = setting + " degree=" + std::to_string(deg) + " total order=" +
                                 std::to_string(w);
          r.counts["monomials"] += piece.size();
          run(r, "intersection", at, [&]() -> std::string {
            return rb == rf + rd ? "" : "dim(A_f ∩ d(A)) = " + std::to_string(rf + rd - rb);
          });
          run(r, "sum", at, [&]() -> std::string {
            return rb == piece.size() ? "" : "A_f + d(A) misses part of the piece";
          });
        }
      }
      return;
    }
    const auto alphabet = letters(static_cast<unsigned>(t.size()), n.value());
    for (unsigned deg = 0; deg <= cfg.bounds.degree; ++deg) {
      // The derivation preserves degree, so each degree piece is finite and d-stable.
      const auto basis = monomials(alphabet, deg, deg);
      std::map<CommMonomial, std::size_t, MonomialLess> index;
      for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
      const auto column = [&](const DiffPoly& p) {
        std::vector<Rational> col(basis.size(), Rational(0));
        for (const auto& [m, c] : p) col.at(index.at(m)) = c;
        return col;
      };
      std::vector<std::vector<Rational>> fcols, dcols;
      for (const auto& m : basis) {
        if (is_functional(m)) fcols.push_back(column(DiffPoly::of(m)));
        dcols.push_back(column(derive_monomial(m, l, n)));
      }
      const auto as_matrix = [&](const std::vector<std::vector<Rational>>& cols) {
        Matrix a(basis.size(), std::vector<Rational>(cols.size()));
        for (std::size_t j = 0; j < cols.size(); ++j)
          for (std::size_t i = 0; i < basis.size(); ++i) a[i][j] = cols[j][i];
        return a;
      };
      std::vector<std::vector<Rational>> both = fcols;
      both.insert(both.end(), dcols.begin(), dcols.end());
      const std::size_t rf = fcols.size();
      const std::size_t rd = rank(as_matrix(dcols));
      const std::size_t rb = rank(as_matrix(both));
      const std::string piece = setting + " degree=" + std::to_string(deg);
      r.counts["monomials"] += basis.size();
      run(r, "intersection", piece, [&]() -> std::string {
        if (rb == rf + rd) return {};
        return "dim(A_f ∩ d(A)) = " + std::to_string(rf + rd - rb);
      });
      run(r, "sum", piece, [&]() -> std::string {
        if (rb == basis.size()) return {};
        return "A_f + d(A) has dimension " + std::to_string(rb) + " of " +
               std::to_string(basis.size());
      });
      // decompose_functional against the linear-solve oracle: p - f must lie
      // in d(A), and when A_f ∩ d(A) = 0 f is the unique functional part.
      std::vector<std::optional<FunctionalDecomposition>> decs;
      std::vector<std::string> errors(basis.size());
      std::vector<std::vector<Rational>> rests, units;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        try {
          decs.push_back(decompose_functional(DiffPoly::of(basis[i]), l, n, cfg.fuel));
          rests.push_back(column(DiffPoly::of(basis[i]) - decs.back()->functional));
        } catch (const Error& e) {
          decs.emplace_back();
          errors[i] = e.what();
          rests.push_back(column(DiffPoly{}));
        }
        units.push_back(column(DiffPoly::of(basis[i])));
      }
      const auto in_image = solve_all(as_matrix(dcols), rests);
      const bool unique = rb == rf + rd;
      const auto oracle = unique ? solve_all(as_matrix(both), units)
                                 : std::vector<std::optional<std::vector<Rational>>>{};
      for (std::size_t i = 0; i < basis.size(); ++i) {
        const CommMonomial& m = basis[i];
        run(r, "decompose", piece + " p=\"" + format_monomial(m, t) + "\"", [&]() -> std::string {
          if (!decs[i]) return errors[i];
          const auto& dec = *decs[i];
          for (const auto& [f, c] : dec.functional)
            if (!is_functional(f)) return "non-functional " + format_monomial(f, t);
          if (dec.functional + derive_poly(dec.integrand, l, n) != DiffPoly::of(m))
            return "f + d(g) != p";
          if (!in_image[i]) return "p - f is not in d(A)";
          if (unique) {
            if (!oracle[i]) return "oracle finds no decomposition";
            DiffPoly f;
            std::size_t j = 0;
            for (const auto& b : basis)
              if (is_functional(b)) f.add(b, (*oracle[i])[j++]);
            if (f != dec.functional)
              return "oracle functional part " + format_poly(f, t) + " vs " +
                     format_poly(dec.functional, t);
          }
          return {};
        });
      }
    }
  });
  return r;
}

// ---------------------------------------------------------------------------
// confluence

namespace {

BracketedTerm random_term(Sampler& rng, const std::vector<DiffVar>& alphabet, unsigned budget) {
  if (budget <= 1) {
    return rng.index(6) == 0 ? BracketedTerm::one()
                             : BracketedTerm::var(alphabet[rng.index(alphabet.size())]);
  }
  switch (rng.index(4)) {
    case 0: return BracketedTerm::P(random_term(rng, alphabet, budget - 1));
    case 1: return BracketedTerm::D(random_term(rng, alphabet, budget - 1));
    case 2: {
      const unsigned left = 1 + static_cast<unsigned>(rng.index(budget - 1));
      return BracketedTerm::prod(random_term(rng, alphabet, left),
                                 random_term(rng, alphabet, budget - left));
    }
    default: return BracketedTerm::var(alphabet[rng.index(alphabet.size())]);
  }
}

}  // namespace

SuiteReport verify_confluence(const VerifyConfig& cfg) {
  SuiteReport r;
  r.suite = "confluence";
  Sampler rng(cfg.seed);
  for_each_setting(cfg, [&](const Weight& l, const TruncationOrder& n, const VarTable& t) {
    const std::string setting = setting_text(l, n, t);
    const auto alphabet = letters(static_cast<unsigned>(t.size()), order_cap(n, cfg.bounds.order));
    for (std::size_t k = 0; k < cfg.samples; ++k) {
      const TensorPoly p = rng.poly(alphabet, cfg.bounds.depth, cfg.bounds.degree, 3);
      const std::string repro = setting + " p=\"" + format_tensor(p, t) + "\"";
      ++r.counts["inputs"];
      NormalElement a;
      bool have = false;
      run(r, "strategy", repro, [&]() -> std::string {
        a = normal_form(p, l, n, NormalStrategy::LeadingFirst, cfg.fuel);
        have = true;
        const NormalElement b = normal_form(p, l, n, NormalStrategy::SmallestFirst, cfg.fuel);
        return differ("leading-first vs smallest-first", a.value(), b.value(), t);
      });
      if (!have) continue;
      if (!(a.value() == p)) ++r.counts["inputs rewritten"];
      run(r, "idempotent", repro, [&] {
        return differ("nf(nf(p))", normal_form(a.value(), l, n, NormalStrategy::LeadingFirst, cfg.fuel).value(),
                      a.value(), t);
      });
      run(r, "irr-output", repro, [&]() -> std::string {
        for (const auto& [w, c] : a.value())
          if (!irr_member(w)) return "output word " + format_word(w, t) + " is reducible";
        return {};
      });
    }

    // Distinct irreducible words stay independent.
    std::vector<TensorWord> irr;
    for (const auto& w : words(alphabet, cfg.bounds.depth, cfg.bounds.degree))
      if (irr_member(w)) irr.push_back(w);
    const std::size_t combos = cfg.combinations;
    for (std::size_t k = 0; k < combos && !irr.empty(); ++k) {
      TensorPoly c;
      const std::size_t terms = 1 + rng.index(4);
      for (std::size_t j = 0; j < terms; ++j) c.add(irr[rng.index(irr.size())], rng.coefficient());
      if (c.is_zero()) continue;
      run(r, "independence", setting + " c=\"" + format_tensor(c, t) + "\"", [&]() -> std::string {
        const NormalElement e = normal_form(c, l, n, NormalStrategy::LeadingFirst, cfg.fuel);
        if (e.is_zero()) return "combination of irreducible words reduces to 0";
        return differ("nf(c)", e.value(), c, t);
      });
    }

    // red does not depend on the rewriting strategy.
    for (std::size_t k = 0; k < cfg.samples; ++k) {
      const BracketedTerm term = random_term(rng, alphabet, 2 + static_cast<unsigned>(rng.index(6)));
      run(r, "red-strategy", setting + " t=\"" + format_term(term, t) + "\"", [&] {
        return differ("innermost vs outermost", red(term, l, n, Strategy::Innermost, cfg.fuel),
                      red(term, l, n, Strategy::Outermost, cfg.fuel), t);
      });
    }
  });
  return r;
}

// ---------------------------------------------------------------------------
// filtration

SuiteReport verify_filtration(const VerifyConfig& cfg) {
  SuiteReport r;
  r.suite = "filtration";
  Sampler rng(cfg.seed);
  for_each_setting(cfg, [&](const Weight& l, const TruncationOrder& n, const VarTable& t) {
    const std::string setting = setting_text(l, n, t);
    if (!n.is_bounded()) {
      ++r.counts["skipped unbounded settings"];
      return;
    }
    const auto alphabet = letters(static_cast<unsigned>(t.size()), n.value());
    const TruncationOrder next = TruncationOrder::bounded(n.value() + 1);
    for (std::size_t k = 0; k < cfg.samples; ++k) {
      const TensorPoly p = rng.poly(alphabet, cfg.bounds.depth, cfg.bounds.degree, 3);
      const std::string repro = setting + " p=\"" + format_tensor(p, t) + "\"";
      NormalElement base;
      bool have = false;
      run(r, "sample", repro, [&] {
        base = normal_form(p, l, n, NormalStrategy::LeadingFirst, cfg.fuel);
        have = true;
        return std::string();
      });
      if (!have) continue;
      run(r, "order-n+1", repro, [&] {
        return differ("nf at n vs n+1", base.value(),
                      normal_form(p, l, next, NormalStrategy::LeadingFirst, cfg.fuel).value(), t);
      });
      run(r, "order-inf", repro, [&] {
        return differ("nf at n vs inf", base.value(),
                      normal_form(p, l, TruncationOrder::unbounded(), NormalStrategy::LeadingFirst,
                                  cfg.fuel).value(),
                      t);
      });
    }
  });
  return r;
}

}  // namespace idnf
