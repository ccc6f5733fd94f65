#include "symbalg/charcoeffs.hpp"

#include <random>

#include "symbalg/forms.hpp"
#include "symbalg/multidegree.hpp"

namespace symbalg {

Subspace::Subspace(CtxPtr ctx_, std::vector<Element> gens_)
    : ctx(std::move(ctx_)), gens(std::move(gens_)) {
  if (gens.empty()) throw InvalidInput("subspace needs at least one generator");
  for (const auto& g : gens) {
    if (g.is_zero()) throw InvalidInput("zero generator rejected");
    if (!(*g.ctx() == *ctx)) throw ContextMismatch("generator from a different algebra");
  }
}

namespace {

template <typename R, typename ScaleFn>
std::vector<R> newton_impl(const std::vector<R>& p, std::uint64_t ell, ScaleFn scale_by_inv) {
  std::vector<R> f;
  f.reserve(p.size());
  for (size_t k = 1; k <= p.size(); ++k) {
    if (k % ell == 0)
      throw CharTooSmall("Newton recurrence needs k invertible in the base field");
    R acc = p[k - 1];
    for (size_t i = 1; i < k; ++i) acc = acc + f[i - 1] * p[k - i - 1];
    f.push_back(scale_by_inv(-acc, k));
  }
  return f;
}

}  // namespace

std::vector<CoeffPoly> newton_coeffs(const std::vector<CoeffPoly>& powersums,
                                     std::uint64_t ell) {
  if (powersums.empty()) return {};
  FieldPtr base = powersums.front().base();
  return newton_impl(powersums, ell, [&](const CoeffPoly& v, size_t k) {
    return v.scaled(Fq::from_int(base, static_cast<long long>(k)).inv());
  });
}

std::vector<Fq> newton_coeffs(const std::vector<Fq>& powersums, std::uint64_t ell) {
  if (powersums.empty()) return {};
  FieldPtr base = powersums.front().field();
  return newton_impl(powersums, ell, [&](const Fq& v, size_t k) {
    return v * Fq::from_int(base, static_cast<long long>(k)).inv();
  });
}

namespace {

// Random nonzero F_0-combination of the generators.
Element random_combination(const Subspace& V, std::mt19937_64& rng) {
  const FieldPtr& f = V.ctx->base;
  std::uniform_int_distribution<std::uint64_t> dist(0, f->order() - 1);
  while (true) {
    Element v = Element::zero(V.ctx);
    for (const auto& g : V.gens) v = v + g.scaled(Fq::from_index(f, dist(rng)));
    if (!v.is_zero()) return v;
  }
}

void cross_check(const Subspace& V, unsigned r, unsigned random_checks, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (unsigned i = 0; i < random_checks; ++i) {
    Element v = random_combination(V, rng);
    if (!trace(power(v, r)).is_zero())
      throw InternalContradiction(
          "star-product check passed but Tr(v^r) != 0 for a random combination");
  }
}

}  // namespace

CheckReport trace_power_check(const Subspace& V, unsigned r, unsigned random_checks,
                              std::uint64_t seed, std::size_t term_budget) {
  if (r < 1 || r > V.ctx->p - 1)
    throw InvalidInput("trace_power_check requires 1 <= r <= p-1");
  CheckReport rep;
  rep.degree_checked = r;
  for_each_composition(r, V.gens.size(), [&](const std::vector<unsigned>& deg) {
    CoeffPoly t = trace(star(V.gens, deg, term_budget));
    if (!t.is_zero()) {
      rep.passed = false;
      rep.witness = CheckWitness{deg, t};
      return false;
    }
    return true;
  });
  if (rep.passed && random_checks > 0) cross_check(V, r, random_checks, seed);
  return rep;
}

CheckReport kummer_check(const Subspace& V, unsigned r, unsigned random_checks,
                         std::uint64_t seed, std::size_t term_budget) {
  if (r >= V.ctx->base->ell)
    throw CharTooSmall("kummer_check requires r < base characteristic");
  CheckReport rep;
  rep.degree_checked = r;
  for (unsigned t = 1; t <= r; ++t) {
    CheckReport sub = trace_power_check(V, t, random_checks, seed, term_budget);
    if (!sub.passed) {
      sub.degree_checked = t;
      return sub;
    }
  }
  return rep;
}

CheckReport identity_implication_check(const Subspace& V, std::size_t term_budget) {
  if (V.ctx->variant != Variant::ArtinSchreier)
    throw PreconditionFailed("identity_implication_check applies to the Artin-Schreier variant");
  const unsigned r = static_cast<unsigned>(V.ctx->p) - 1;
  if (!in_span(V.gens, Element::one(V.ctx)))
    throw PreconditionFailed("1 is not in the span of the generators");
  CheckReport hyp = trace_power_check(V, r, 32, 0xC0FFEE, term_budget);
  if (!hyp.passed)
    throw PreconditionFailed("Tr(v^{p-1}) does not vanish on the space");
  CheckReport rep = kummer_check(V, r, 32, 0xC0FFEE, term_budget);
  if (!rep.passed)
    throw InternalContradiction(
        "space containing 1 passed the degree p-1 check but failed the full Kummer check");
  return rep;
}

}  // namespace symbalg
