#include "symbalg/valuation.hpp"

#include "symbalg/cover.hpp"
#include "symbalg/forms.hpp"

namespace symbalg {

ValueVec term_value(const AlgebraCtx& ctx, const BasisMono& mono, const ExpVec& exp) {
  const unsigned n = ctx.nvars();
  ValueVec v(n);
  for (unsigned i = 0; i < n; ++i)
    v[i] = static_cast<long long>(ctx.p) * exp[i] + mono[i];
  return v;
}

bool value_less(const ValueVec& a, const ValueVec& b) {
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

LeadingTerm leading_term(const Element& a) {
  if (a.is_zero()) throw ZeroElement("leading term of zero element");
  const AlgebraCtx& ctx = *a.ctx();
  std::optional<LeadingTerm> best;
  for (const auto& [mono, poly] : a.terms())
    for (const auto& [exp, c] : poly.terms()) {
      ValueVec val = term_value(ctx, mono, exp);
      if (!best || value_less(best->value, val)) best = LeadingTerm{mono, exp, c, val};
    }
  return *best;
}

std::vector<Element> graded_reduce(const std::vector<Element>& gens, std::uint64_t fuel) {
  if (gens.empty()) return {};
  if (rank_of_elements(gens) != gens.size())
    throw DependentInput("generators are linearly dependent over F");
  const CtxPtr& ctx = gens.front().ctx();
  const long long p = static_cast<long long>(ctx->p);
  std::vector<Element> basis = gens;
  std::vector<LeadingTerm> lead;
  lead.reserve(basis.size());
  for (const auto& b : basis) lead.push_back(leading_term(b));
  while (true) {
    // first congruent pair in index order; congruent mod p*Z^{2m} is exactly
    // "same leading basis monomial"
    size_t i = basis.size(), j = basis.size();
    for (size_t a = 0; a < basis.size() && i == basis.size(); ++a)
      for (size_t b = a + 1; b < basis.size(); ++b)
        if (lead[a].mono == lead[b].mono) {
          i = a;
          j = b;
          break;
        }
    if (i == basis.size()) break;
    if (fuel-- == 0) throw FuelExhausted("graded reduction fuel exhausted");
    // cancel the dominant one against the other
    size_t hi = value_less(lead[i].value, lead[j].value) ? j : i;
    size_t lo = hi == i ? j : i;
    ExpVec delta(ctx->nvars());
    for (unsigned s = 0; s < ctx->nvars(); ++s) {
      long long diff = lead[hi].value[s] - lead[lo].value[s];
      // same residue, so the gap is a multiple of p slotwise
      delta[s] = static_cast<int>(diff / p);
    }
    Fq c = lead[hi].scalar * lead[lo].scalar.inv();
    CoeffPoly mu = CoeffPoly::monomial(ctx->base, delta, c);
    basis[hi] = basis[hi] - basis[lo].scaled(mu);
    if (basis[hi].is_zero())
      throw InternalContradiction("independent input reduced to zero");
    LeadingTerm nl = leading_term(basis[hi]);
    if (!value_less(nl.value, lead[hi].value))
      throw InternalContradiction("reduction step did not decrease the leading value");
    lead[hi] = nl;
  }
  return basis;
}

std::vector<BasisMono> residue_set(const std::vector<Element>& reduced) {
  std::vector<BasisMono> S;
  S.reserve(reduced.size());
  for (const auto& e : reduced) S.push_back(leading_term(e).mono);
  return S;
}

RefutationOutcome refute_space(const Subspace& V, std::uint64_t fuel,
                               std::size_t term_budget) {
  const CtxPtr& ctx = V.ctx;
  RefutationOutcome out;
  out.reduced = graded_reduce(V.gens, fuel);
  const unsigned n = ctx->nvars();
  std::uint64_t pn = 1;
  for (unsigned i = 0; i < n; ++i) pn *= ctx->p;
  out.bound = (pn - 1) / (ctx->p - 1);
  out.dim = out.reduced.size();
  if (out.dim <= out.bound) {
    out.within_bound = true;
    return out;
  }
  out.within_bound = false;
  std::vector<BasisMono> S = residue_set(out.reduced);
  BasisMono P(n, 0);
  if (ctx->variant == Variant::ArtinSchreier)
    for (unsigned i = 0; i < ctx->m; ++i) P[2 * i] = static_cast<int>(ctx->p) - 1;
  auto witness = cover::represent(ctx->p, P, S);
  if (!witness)
    throw InternalContradiction("pigeonhole guarantee failed above the bound");
  auto find_index = [&](const cover::Pt& pt) {
    for (size_t i = 0; i < S.size(); ++i)
      if (S[i] == pt) return i;
    throw InternalContradiction("cover witness not among the residues");
  };
  RefutationCertificate cert;
  cert.v_index = find_index(witness->v);
  cert.w_index = find_index(witness->w);
  cert.k = witness->k;
  cert.target = P;
  unsigned k = static_cast<unsigned>(witness->k);
  unsigned rest = static_cast<unsigned>(ctx->p) - 1 - k;
  Element s = star({out.reduced[cert.v_index], out.reduced[cert.w_index]}, {k, rest},
                   term_budget);
  cert.trace_poly = trace(s);
  if (cert.trace_poly.is_zero())
    throw InternalContradiction("refutation star product has zero trace");
  out.cert = std::move(cert);
  return out;
}

bool validate_certificate(const RefutationOutcome& out, std::size_t term_budget) {
  if (!out.cert) return out.within_bound;
  const auto& c = *out.cert;
  const CtxPtr& ctx = out.reduced.front().ctx();
  unsigned k = static_cast<unsigned>(c.k);
  unsigned rest = static_cast<unsigned>(ctx->p) - 1 - k;
  Element s = star({out.reduced[c.v_index], out.reduced[c.w_index]}, {k, rest}, term_budget);
  CoeffPoly t = trace(s);
  return !t.is_zero() && t == c.trace_poly;
}

}  // namespace symbalg
