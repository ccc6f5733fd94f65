// Acceptance gate: one pass/fail line per criterion, exact equality
// throughout, exit code = number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "support.hpp"
#include "symbalg/cover.hpp"
#include "symbalg/forms.hpp"
#include "symbalg/gallery.hpp"
#include "symbalg/matoracle.hpp"
#include "symbalg/valuation.hpp"

using namespace symbalg;
using testsupport::random_element;
using testsupport::random_nonzero_element;

namespace {

struct Checker {
  bool ok = true;
  void require(bool cond) { ok = ok && cond; }
};

CtxPtr rou3() { return make_ctx(3, 1, Variant::RootOfUnity, make_field(7)); }
CtxPtr as3() { return make_ctx(3, 1, Variant::ArtinSchreier, make_field(3)); }

// 1. covering bound p=3, n=2: all 126 size-5 sets cover all 9 targets, and a
//    4-point set with an uncovered target exists.
bool crit1() {
  Checker c;
  auto rep = cover::verify_bound(3, 2);
  c.require(rep.passed && rep.exhaustive && rep.sets_checked == 126 &&
            rep.bound == 4);
  auto sharp = cover::find_sharp(3, 2);
  c.require(sharp.has_value() && sharp->set.size() == 4 &&
            !cover::represent(3, sharp->uncovered, sharp->set).has_value());
  return c.ok;
}

// 2. covering bound p=5, n=2: all 480,700 size-7 sets cover all 25 targets.
bool crit2() {
  auto rep = cover::verify_bound(5, 2);
  return rep.passed && rep.exhaustive && rep.sets_checked == 480700 &&
         rep.bound == 6;
}

// 3. maximal spaces: dims (p^{2m}-1)/(p-1) = 4, 6, 40; Kummer passes to p-1.
bool crit3() {
  Checker c;
  struct Case { std::uint64_t p, ell; unsigned m; size_t dim; };
  for (auto [p, ell, m, dim] : {Case{3, 7, 1, 4}, Case{5, 11, 1, 6}, Case{3, 7, 2, 40}}) {
    auto ctx = make_ctx(p, m, Variant::RootOfUnity, make_field(ell));
    Subspace V = gallery::max_space(ctx);
    c.require(V.gens.size() == dim);
    c.require(rank_of_elements(V.gens) == dim);
    c.require(kummer_check(V, static_cast<unsigned>(p) - 1).passed);
  }
  return c.ok;
}

// 4. the degree-3 space over F_9: Tr(g) = -1, Tr(g^2) = 0, degree-2 power
//    check passes, Kummer fails at t=1.
bool crit4() {
  Checker c;
  auto ctx = make_ctx(3, 1, Variant::ArtinSchreier, make_field(3, 2));
  Subspace V = gallery::example_p3(ctx);
  const Element& g = V.gens.back();
  c.require(trace(g) == CoeffPoly::constant(ctx->base, 2, -Fq::one(ctx->base)));
  c.require(trace(power(g, 2)).is_zero());
  c.require(trace_power_check(V, 2).passed);
  auto rep = kummer_check(V, 2);
  c.require(!rep.passed && rep.degree_checked == 1);
  return c.ok;
}

// 5. refuter: the 5-monomial space yields the 6*alpha certificate; the
//    maximal space plus any independent monomial is refuted; the maximal
//    space alone is within bound.
bool crit5() {
  Checker c;
  auto ctx = rou3();
  std::vector<Element> five;
  for (auto m : std::vector<BasisMono>{{1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}})
    five.push_back(Element::basis(ctx, m));
  auto out = refute_space(Subspace(ctx, five));
  c.require(!out.within_bound && out.cert.has_value());
  if (out.cert) {
    c.require(out.cert->trace_poly ==
              CoeffPoly::monomial(ctx->base, {1, 0}, Fq::from_int(ctx->base, 6)));
    c.require(validate_certificate(out));
  }
  Subspace V = gallery::max_space(ctx);
  for (const auto& m : monomial_basis(*ctx)) {
    Element e = Element::basis(ctx, m);
    if (in_span(V.gens, e)) continue;
    auto gens = V.gens;
    gens.push_back(e);
    auto o = refute_space(Subspace(ctx, gens));
    c.require(!o.within_bound && o.cert.has_value() && validate_certificate(o));
  }
  auto alone = refute_space(V);
  c.require(alone.within_bound && alone.dim == alone.bound);
  return c.ok;
}

// 6. spaces containing 1 that pass the degree-2 power check also pass the
//    full degree-2 Kummer condition (a failure would throw).
bool crit6() {
  Checker c;
  auto ctx = as3();
  std::vector<std::vector<Element>> candidates = {
      {Element::one(ctx), Element::basis(ctx, {0, 1}), Element::basis(ctx, {1, 1})},
      {Element::one(ctx), Element::basis(ctx, {0, 1})},
      {Element::one(ctx), Element::basis(ctx, {1, 1}), Element::basis(ctx, {2, 1})},
      {Element::one(ctx)},
  };
  for (auto& gens : candidates) {
    Subspace V(ctx, gens);
    if (!trace_power_check(V, 2).passed) return false;  // must qualify
    try {
      c.require(identity_implication_check(V).passed);
    } catch (const InternalContradiction&) {
      return false;
    }
  }
  return c.ok;
}

// 7. the 9x9 Gram determinant of Tr(v^2) is a nonzero polynomial in both
//    variants.
bool crit7() {
  Checker c;
  for (const auto& ctx : {rou3(), as3()}) {
    PolyMatrix G = gram_trace_form(ctx);
    c.require(G.rows == 9);
    c.require(!det_fraction_free(G).is_zero());
  }
  return c.ok;
}

// 8. orthonormal split basis for d=3 over F_17: Gram = identity.
bool crit8() {
  auto res = orthonormal_split_basis(3, make_field(17));
  return res.basis.size() == 9 && res.gram_is_identity;
}

// 9. strictly upper triangular 5x5 space: dim 10 > floor(24/3) = 8 with all
//    star-product traces up to degree 4 vanishing.
bool crit9() {
  Checker c;
  auto rep = strict_upper_space(5, 3, make_field(5));
  c.require(rep.dim == 10 && rep.quotient == 8 && rep.exceeds_quotient &&
            rep.traces_vanish);
  c.require(strict_upper_space(5, 4, make_field(5)).traces_vanish);
  return c.ok;
}

// 10. oracle equivalence: 100 random elements per context, algebra trace ==
//     matrix trace and Newton f1, f2 == division-free charpoly coefficients.
bool crit10() {
  Checker c;
  std::mt19937_64 rng(1010);
  for (const auto& ctx : {as3(), rou3(),
                          make_ctx(3, 2, Variant::RootOfUnity, make_field(7))}) {
    std::uniform_int_distribution<std::uint64_t> nz(1, ctx->base->order() - 1);
    std::vector<Fq> pt;
    for (unsigned s = 0; s < ctx->nvars(); ++s)
      pt.push_back(Fq::from_index(ctx->base, nz(rng)));
    MatRep rep = split_symbol(ctx, pt);
    for (int t = 0; t < 100; ++t) {
      Element a = random_element(ctx, rng, 3, 1);
      FqMatrix M = represent_element(rep, a);
      c.require(rep.embed(trace(a).specialize(pt)) == M.trace());
      std::vector<Fq> psums;
      for (unsigned k = 1; k <= 2; ++k)
        psums.push_back(rep.embed(trace(power(a, k)).specialize(pt)));
      auto fk = newton_coeffs(psums, rep.field->ell);
      auto cp = charpoly_division_free(M);
      c.require(fk[0] == cp[0] && fk[1] == cp[1]);
    }
  }
  return c.ok;
}

// 11. property suites, 200+ random cases each, zero failures.
bool crit11() {
  Checker c;
  std::mt19937_64 rng(1111);

  // field axioms in F_7, F_9, F_27
  for (const auto& f : {make_field(7), make_field(3, 2), make_field(3, 3)}) {
    std::uniform_int_distribution<std::uint64_t> d(0, f->order() - 1);
    for (int t = 0; t < 200; ++t) {
      Fq a = Fq::from_index(f, d(rng)), b = Fq::from_index(f, d(rng)),
         e = Fq::from_index(f, d(rng));
      c.require((a + b) * e == a * e + b * e);
      c.require(a * (b * e) == (a * b) * e);
      if (!a.is_zero()) c.require(a * a.inv() == Fq::one(f));
    }
  }

  auto rctx = rou3();
  auto actx = as3();

  // coefficient-ring axioms: distributivity and no zero divisors
  {
    std::uniform_int_distribution<int> exp(-2, 2);
    std::uniform_int_distribution<std::uint64_t> sc(0, rctx->base->order() - 1);
    auto rnd = [&] {
      CoeffPoly p = CoeffPoly::zero(rctx->base, 2);
      for (int t = 0; t < 2; ++t)
        p.add_term({exp(rng), exp(rng)}, Fq::from_index(rctx->base, sc(rng)));
      return p;
    };
    for (int t = 0; t < 200; ++t) {
      CoeffPoly a = rnd(), b = rnd(), e = rnd();
      c.require((a + b) * e == a * e + b * e);
      c.require(a * (b * e) == (a * b) * e);
      if (!a.is_zero() && !b.is_zero()) c.require(!(a * b).is_zero());
    }
  }

  for (const auto& ctx : {rctx, actx}) {
    for (int t = 0; t < 200; ++t) {
      Element a = random_element(ctx, rng), b = random_element(ctx, rng),
              e = random_element(ctx, rng);
      // associativity
      c.require((a * b) * e == a * (b * e));
      // traciality
      c.require(trace(a * b) == trace(b * a));
    }
  }

  // tensor trace multiplicativity on pure tensors (m = 2)
  {
    auto ctx2 = make_ctx(3, 2, Variant::RootOfUnity, make_field(7));
    std::uniform_int_distribution<int> mono(0, 2);
    std::uniform_int_distribution<std::uint64_t> sc(0, 6);
    for (int t = 0; t < 200; ++t) {
      BasisMono m1 = {mono(rng), mono(rng), 0, 0};
      BasisMono m2 = {0, 0, mono(rng), mono(rng)};
      Fq c1 = Fq::from_index(ctx2->base, sc(rng));
      Fq c2 = Fq::from_index(ctx2->base, sc(rng));
      Element a = Element::basis(ctx2, m1).scaled(c1);
      Element b = Element::basis(ctx2, m2).scaled(c2);
      CoeffPoly t1 = trace(Element::basis(rctx, {m1[0], m1[1]}).scaled(c1));
      CoeffPoly t2 = trace(Element::basis(rctx, {m2[2], m2[3]}).scaled(c2));
      // compare scalars: single-factor traces are constants times powers of
      // p^m; Tr_{2}(a (x) b) = Tr_1(a) * Tr_1(b) * p^{m-1} adjustment is
      // avoided by checking the product element directly
      CoeffPoly lhs = trace(a * b);
      // embed the one-factor traces into the two-factor variable ring
      CoeffPoly rhs = CoeffPoly::zero(ctx2->base, 4);
      for (const auto& [e1, s1] : t1.terms())
        for (const auto& [e2, s2] : t2.terms())
          rhs.add_term({e1[0], e1[1], e2[0], e2[1]}, s1 * s2);
      c.require(lhs == rhs);
    }
  }

  // power-vs-star expansion: (u+v)^2 = u^2 + u*v + v^2 with star(u,v;1,1)
  for (const auto& ctx : {rctx, actx}) {
    for (int t = 0; t < 200; ++t) {
      Element u = random_element(ctx, rng), v = random_element(ctx, rng);
      Element lhs = power(u + v, 2);
      Element rhs = power(u, 2) + star({u, v}, {1, 1}) + power(v, 2);
      c.require(lhs == rhs);
    }
  }

  // valuation multiplicativity of leading terms
  for (const auto& ctx : {rctx, actx}) {
    for (int t = 0; t < 200; ++t) {
      Element a = random_nonzero_element(ctx, rng);
      Element b = random_nonzero_element(ctx, rng);
      auto la = leading_term(a), lb = leading_term(b),
           lab = leading_term(a * b);
      ValueVec sum(la.value.size());
      for (size_t s = 0; s < sum.size(); ++s) sum[s] = la.value[s] + lb.value[s];
      c.require(lab.value == sum);
    }
  }
  return c.ok;
}

}  // namespace

int main() {
  struct Crit {
    const char* label;
    std::function<bool()> fn;
  };
  std::vector<Crit> crits = {
      {"1  covering bound p=3 n=2 (exhaustive + sharpness witness)", crit1},
      {"2  covering bound p=5 n=2 (all 480700 sets)", crit2},
      {"3  maximal space dims 4/6/40 with full Kummer pass", crit3},
      {"4  degree-3 F_9 space separates power check from Kummer", crit4},
      {"5  dimension-bound refuter certificates", crit5},
      {"6  identity implication for spaces containing 1", crit6},
      {"7  Gram determinant nonzero in both variants", crit7},
      {"8  orthonormal split basis d=3 over F_17", crit8},
      {"9  strictly upper triangular counterexample d=5 r=3", crit9},
      {"10 matrix oracle equivalence, 300 random elements", crit10},
      {"11 property suites, 200+ cases each", crit11},
  };
  int failures = 0;
  for (const auto& cr : crits) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = cr.fn();
    } catch (const std::exception& e) {
      std::printf("criterion %s: FAIL (exception: %s)\n", cr.label, e.what());
      ++failures;
      continue;
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %s: %s (%.2fs)\n", cr.label, ok ? "PASS" : "FAIL",
                secs);
    if (!ok) ++failures;
  }
  return failures;
}
