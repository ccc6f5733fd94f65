#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "symbalg/algebra.hpp"

namespace symbalg {

/// A declared spanning set of algebra elements (zero generators rejected).
struct Subspace {
  CtxPtr ctx;
  std::vector<Element> gens;

  Subspace(CtxPtr ctx_, std::vector<Element> gens_);
};

struct CheckWitness {
  std::vector<unsigned> multidegree;
  CoeffPoly trace_poly;  // nonzero
};

struct CheckReport {
  bool passed = true;
  unsigned degree_checked = 0;
  std::optional<CheckWitness> witness;
};

/// Newton recurrence: f_k = -(p_k + sum_{i<k} f_i p_{k-i}) / k, exact in the
/// coefficient ring; requires every k <= r invertible in characteristic ell.
std::vector<CoeffPoly> newton_coeffs(const std::vector<CoeffPoly>& powersums,
                                     std::uint64_t ell);
std::vector<Fq> newton_coeffs(const std::vector<Fq>& powersums, std::uint64_t ell);

/// Does Tr(v^r) vanish identically on V?  Checked on the spanning set via
/// star products over all multidegrees of total degree r (first failing
/// multidegree, in lexicographic order, is the witness), then cross-checked
/// on random scalar combinations.
CheckReport trace_power_check(const Subspace& V, unsigned r,
                              unsigned random_checks = 32,
                              std::uint64_t seed = 0xC0FFEE,
                              std::size_t term_budget = kDefaultTermBudget);

/// Kummer condition to degree r: trace_power_check for every t in 1..r.
CheckReport kummer_check(const Subspace& V, unsigned r,
                         unsigned random_checks = 32,
                         std::uint64_t seed = 0xC0FFEE,
                         std::size_t term_budget = kDefaultTermBudget);

/// For Artin-Schreier spaces containing 1 with Tr(v^{p-1}) vanishing, the
/// full Kummer condition is guaranteed; a failure here is a bug and raises
/// InternalContradiction.
CheckReport identity_implication_check(const Subspace& V,
                                       std::size_t term_budget = kDefaultTermBudget);

}  // namespace symbalg
