#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "symbalg/errors.hpp"

namespace symbalg {
namespace cover {

/// Point of F_p^n, entries in [0, p-1].
using Pt = std::vector<int>;

constexpr std::uint64_t kDefaultSetBudget = 10'000'000;

/// Witness that k*v + (p-1-k)*w == target (mod p) with v, w in the query set.
struct CoverWitness {
  Pt v, w;
  int k = 0;
};

struct Line {
  Pt base;
  Pt dir;  // canonical: first nonzero coordinate is 1
  std::vector<Pt> points;
};

std::uint64_t line_count(std::uint64_t p, unsigned n);  // (p^n - 1)/(p - 1)

/// All affine lines through P, one per canonical direction.
std::vector<Line> lines_through(std::uint64_t p, const Pt& P);

/// Lexicographically first pair of distinct v, w in S collinear with P,
/// or nullopt.  Guaranteed to succeed when |S| > (p^n - 1)/(p - 1).
std::optional<std::pair<Pt, Pt>> secant_through(std::uint64_t p, const Pt& P,
                                                const std::vector<Pt>& S);

/// Representation Q = k*v + (p-1-k)*w with v, w in S.  Deterministic: first
/// checks Q == (p-1)*v for v in S (canonical w = v, k = p-1), then scans
/// (v, w, k) lexicographically.  nullopt means not covered, which can only
/// happen when |S| <= (p^n - 1)/(p - 1).
std::optional<CoverWitness> represent(std::uint64_t p, const Pt& Q,
                                      const std::vector<Pt>& S);

struct VerifyReport {
  std::uint64_t p;
  unsigned n;
  std::uint64_t bound;        // (p^n - 1)/(p - 1)
  std::uint64_t sets_checked;
  bool exhaustive;
  bool passed;
  bool degenerate_p2;
  std::optional<std::pair<std::vector<Pt>, Pt>> failure;  // set and uncovered target
};

/// Check that every size-(bound+1) subset covers every target.  Exhaustive
/// mode enumerates all subsets (BudgetExceeded if too many); sampled mode
/// draws `samples` uniform subsets with the given seed.
VerifyReport verify_bound(std::uint64_t p, unsigned n,
                          std::optional<std::pair<std::uint64_t, std::uint64_t>>
                              sampled = std::nullopt /* (samples, seed) */,
                          std::uint64_t budget = kDefaultSetBudget);

struct SharpResult {
  std::vector<Pt> set;  // size (p^n - 1)/(p - 1)
  Pt uncovered;
};

/// Search for a set of size exactly (p^n - 1)/(p - 1) leaving some target
/// uncovered; demonstrates empirically that the bound cannot be lowered.
std::optional<SharpResult> find_sharp(std::uint64_t p, unsigned n,
                                      std::uint64_t budget = kDefaultSetBudget);

}  // namespace cover
}  // namespace symbalg
