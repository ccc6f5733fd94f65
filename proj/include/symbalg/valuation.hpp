#pragma once

#include "symbalg/charcoeffs.hpp"

namespace symbalg {

constexpr std::uint64_t kDefaultFuel = 10'000;

/// Composite valuation value of a term: slot 2i carries p*(alpha_i exponent)
/// + d_i, slot 2i+1 carries p*(beta_i exponent) + e_i.  Compared with
/// SigLexLess (beta_m most significant); larger is more dominant.
using ValueVec = std::vector<long long>;

ValueVec term_value(const AlgebraCtx& ctx, const BasisMono& mono, const ExpVec& exp);
bool value_less(const ValueVec& a, const ValueVec& b);

struct LeadingTerm {
  BasisMono mono;
  ExpVec exp;
  Fq scalar;
  ValueVec value;
};

/// The unique dominant term of a nonzero element.
LeadingTerm leading_term(const Element& a);

/// Transform an independent family into a basis of the same span whose
/// leading values are pairwise non-congruent modulo p*Z^{2m} (equivalently,
/// with pairwise distinct leading basis monomials).
std::vector<Element> graded_reduce(const std::vector<Element>& gens,
                                   std::uint64_t fuel = kDefaultFuel);

/// Leading basis monomials of a reduced basis.
std::vector<BasisMono> residue_set(const std::vector<Element>& reduced);

struct RefutationCertificate {
  size_t v_index, w_index;  // positions in the reduced basis
  int k;                    // in [0, p-1]
  BasisMono target;         // residue P selected by the variant
  CoeffPoly trace_poly;     // Tr(v^k * w^{p-1-k}), nonzero
};

struct RefutationOutcome {
  bool within_bound;
  std::uint64_t bound;  // (p^{2m} - 1)/(p - 1)
  size_t dim;
  std::vector<Element> reduced;               // valid in both outcomes
  std::optional<RefutationCertificate> cert;  // present iff !within_bound
};

/// Executable form of the dimension bound: a space whose reduced dimension
/// exceeds (p^{2m}-1)/(p-1) always yields a nonzero-trace star product of
/// two of its elements.  A zero trace there would contradict the bound and
/// raises InternalContradiction.
RefutationOutcome refute_space(const Subspace& V, std::uint64_t fuel = kDefaultFuel,
                               std::size_t term_budget = kDefaultTermBudget);

/// Recompute the certificate's trace from the reduced basis and confirm it
/// matches and is nonzero.
bool validate_certificate(const RefutationOutcome& out,
                          std::size_t term_budget = kDefaultTermBudget);

}  // namespace symbalg
