#pragma once

#include <map>
#include <vector>

#include "symbalg/fieldarith.hpp"

namespace symbalg {

/// Exponent vector of a Laurent monomial in alpha_1,beta_1,...,alpha_m,beta_m
/// (slot order: alpha_i at 2(i-1), beta_i at 2(i-1)+1).  Negative entries are
/// allowed.
using ExpVec = std::vector<int>;

/// Lexicographic order with significance beta_m > alpha_m > ... > alpha_1,
/// i.e. the last slot is compared first.  This is the one term order used
/// everywhere: serialization, leading terms, valuation comparison.
struct SigLexLess {
  bool operator()(const ExpVec& a, const ExpVec& b) const {
    for (size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

/// Sparse Laurent polynomial over Fq in 2m commuting variables; canonical
/// form never stores zero coefficients.  A commutative integral domain.
class CoeffPoly {
 public:
  using TermMap = std::map<ExpVec, Fq, SigLexLess>;

  CoeffPoly() = default;
  CoeffPoly(FieldPtr base, unsigned nvars);

  static CoeffPoly zero(const FieldPtr& base, unsigned nvars);
  static CoeffPoly constant(const FieldPtr& base, unsigned nvars, const Fq& c);
  static CoeffPoly monomial(const FieldPtr& base, ExpVec exp, const Fq& c);

  const FieldPtr& base() const { return base_; }
  unsigned nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  CoeffPoly operator+(const CoeffPoly& o) const;
  CoeffPoly operator-(const CoeffPoly& o) const;
  CoeffPoly operator*(const CoeffPoly& o) const;
  CoeffPoly operator-() const;
  CoeffPoly scaled(const Fq& c) const;
  CoeffPoly shifted(const ExpVec& delta) const;  // multiply by a monomial

  /// Exact division (throws Error if the quotient does not exist in the ring).
  CoeffPoly divide_exact(const CoeffPoly& d) const;

  /// Leading term under SigLexLess (throws ZeroElement on 0).
  std::pair<ExpVec, Fq> leading() const;

  /// Exact evaluation at a point (one Fq per variable).  Slots that appear
  /// with a negative exponent must be nonzero.
  Fq specialize(const std::vector<Fq>& point) const;

  bool operator==(const CoeffPoly& o) const;
  bool operator!=(const CoeffPoly& o) const { return !(*this == o); }

  void add_term(const ExpVec& exp, const Fq& c);  // accumulate, canonicalize

 private:
  void check_same(const CoeffPoly& o) const;

  FieldPtr base_;
  unsigned nvars_ = 0;
  TermMap terms_;
};

}  // namespace symbalg
