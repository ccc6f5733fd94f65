#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "symbalg/errors.hpp"

namespace symbalg {

/// Description of a finite field F_{ell^k}.  For k > 1 the field is
/// F_ell[t]/(modulus) with `modulus` a monic irreducible of degree k,
/// stored low-to-high (length k+1).  Both properties are verified at
/// construction.
struct FieldSpec {
  std::uint64_t ell = 0;
  unsigned k = 1;
  std::vector<std::uint64_t> modulus;  // empty iff k == 1

  std::uint64_t order() const;
  bool operator==(const FieldSpec& o) const;
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

/// Build a validated FieldSpec.  With no modulus given and k > 1, a default
/// modulus is taken from a small table (e.g. F_9 = F_3[t]/(t^2+1), so t is a
/// square root of -1) or found by lexicographic search.
FieldPtr make_field(std::uint64_t ell, unsigned k = 1,
                    std::vector<std::uint64_t> modulus = {});

/// An element of F_{ell^k}: canonical residue, coefficients low-to-high,
/// length exactly k, entries in [0, ell).
class Fq {
 public:
  Fq() = default;  // invalid placeholder; any arithmetic on it throws

  static Fq zero(const FieldPtr& f);
  static Fq one(const FieldPtr& f);
  static Fq from_int(const FieldPtr& f, long long v);  // v mod ell, degree 0
  static Fq from_coeffs(const FieldPtr& f, std::vector<std::uint64_t> c);
  static Fq from_index(const FieldPtr& f, std::uint64_t idx);  // base-ell digits

  bool valid() const { return spec_ != nullptr; }
  const FieldPtr& field() const { return spec_; }
  const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }

  /// Canonical integer encoding sum coeffs[i]*ell^i; total order used for
  /// all deterministic tie-breaks.
  std::uint64_t index() const;

  bool is_zero() const;
  bool is_one() const;

  Fq operator+(const Fq& o) const;
  Fq operator-(const Fq& o) const;
  Fq operator*(const Fq& o) const;
  Fq operator-() const;
  Fq inv() const;  // throws ZeroDenominator on 0
  Fq pow(std::uint64_t e) const;

  bool operator==(const Fq& o) const;
  bool operator!=(const Fq& o) const { return !(*this == o); }

 private:
  Fq(FieldPtr spec, std::vector<std::uint64_t> coeffs);
  void check_same(const Fq& o) const;

  FieldPtr spec_;
  std::vector<std::uint64_t> coeffs_;
};

/// Deterministic primitive p-th root of unity: g^{(q-1)/p} for the smallest
/// candidate g (by index) whose power is not 1.
Fq primitive_pth_root(const FieldPtr& f, std::uint64_t p);

/// Square root with deterministic choice (smaller index of the two);
/// nullopt on non-squares.
std::optional<Fq> sqrt(const Fq& a);

/// p-th root via inverse Frobenius; requires ell == p.
Fq pth_root_frobenius(const Fq& a, std::uint64_t p);

bool is_prime(std::uint64_t n);

}  // namespace symbalg
