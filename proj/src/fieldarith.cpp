#include "symbalg/fieldarith.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace symbalg {
namespace {

using Poly = std::vector<std::uint64_t>;  // over Z/ell, low-to-high

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t ell) {
  // extended Euclid on integers
  std::int64_t t = 0, newt = 1;
  std::int64_t r = static_cast<std::int64_t>(ell), newr = static_cast<std::int64_t>(a % ell);
  while (newr != 0) {
    std::int64_t q = r / newr;
    t = std::exchange(newt, t - q * newt);
    r = std::exchange(newr, r - q * newr);
  }
  if (r != 1) throw ZeroDenominator("not invertible mod ell");
  if (t < 0) t += static_cast<std::int64_t>(ell);
  return static_cast<std::uint64_t>(t);
}

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly padd(const Poly& a, const Poly& b, std::uint64_t ell) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    std::uint64_t v = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
    r[i] = v % ell;
  }
  trim(r);
  return r;
}

Poly psub(const Poly& a, const Poly& b, std::uint64_t ell) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    std::uint64_t av = i < a.size() ? a[i] : 0, bv = i < b.size() ? b[i] : 0;
    r[i] = (av + ell - bv) % ell;
  }
  trim(r);
  return r;
}

Poly pmul(const Poly& a, const Poly& b, std::uint64_t ell) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % ell;
  trim(r);
  return r;
}

// a mod m, m nonzero
Poly pmod2(Poly a, const Poly& m, std::uint64_t ell) {
  std::uint64_t lead_inv = mod_inv(m.back(), ell);
  trim(a);
  while (a.size() >= m.size()) {
    std::uint64_t c = (a.back() * lead_inv) % ell;
    size_t shift = a.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i)
      a[shift + i] = (a[shift + i] + ell - (c * m[i]) % ell) % ell;
    trim(a);
  }
  return a;
}

Poly pmulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t ell) {
  return pmod2(pmul(a, b, ell), m, ell);
}

Poly ppowmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t ell) {
  Poly r = {1};
  base = pmod2(std::move(base), m, ell);
  while (e) {
    if (e & 1) r = pmulmod(r, base, m, ell);
    base = pmulmod(base, base, m, ell);
    e >>= 1;
  }
  return r;
}

Poly pgcd(Poly a, Poly b, std::uint64_t ell) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    a = pmod2(std::move(a), b, ell);
    std::swap(a, b);
  }
  return a;
}

// inverse of a modulo m via extended Euclid over F_ell[t]
Poly pinvmod(Poly a, const Poly& m, std::uint64_t ell) {
  Poly r0 = m, r1 = pmod2(std::move(a), m, ell);
  Poly t0 = {}, t1 = {1};
  if (r1.empty()) throw ZeroDenominator("inverse of zero");
  while (!r1.empty()) {
    // r0 = q*r1 + r2
    Poly q;
    Poly rem = r0;
    std::uint64_t lead_inv = mod_inv(r1.back(), ell);
    if (rem.size() >= r1.size()) q.assign(rem.size() - r1.size() + 1, 0);
    while (rem.size() >= r1.size() && !rem.empty()) {
      std::uint64_t c = (rem.back() * lead_inv) % ell;
      size_t shift = rem.size() - r1.size();
      q[shift] = c;
      for (size_t i = 0; i < r1.size(); ++i)
        rem[shift + i] = (rem[shift + i] + ell - (c * r1[i]) % ell) % ell;
      trim(rem);
    }
    trim(q);
    Poly t2 = psub(t0, pmul(q, t1, ell), ell);
    r0 = std::exchange(r1, rem);
    t0 = std::exchange(t1, t2);
  }
  if (r0.size() != 1) throw ZeroDenominator("not invertible (gcd not constant)");
  std::uint64_t c = mod_inv(r0[0], ell);
  Poly res;
  res.reserve(t0.size());
  for (auto v : t0) res.push_back((v * c) % ell);
  trim(res);
  return res;
}

// f irreducible over F_ell iff x^{ell^deg} == x mod f and
// gcd(x^{ell^{deg/q}} - x, f) == 1 for every prime q | deg.
bool poly_irreducible(const Poly& f, std::uint64_t ell) {
  size_t deg = f.size() - 1;
  if (deg == 0) return false;
  if (deg == 1) return true;
  auto frob_pow = [&](size_t i) {
    // x^{ell^i} mod f
    Poly x = {0, 1};
    Poly r = x;
    for (size_t j = 0; j < i; ++j) r = ppowmod(r, ell, f, ell);
    return r;
  };
  Poly x = {0, 1};
  Poly top = frob_pow(deg);
  if (psub(top, x, ell) != Poly{}) return false;
  for (size_t q = 2; q <= deg; ++q) {
    if (deg % q != 0) continue;
    bool q_prime = true;
    for (size_t d = 2; d * d <= q; ++d)
      if (q % d == 0) q_prime = false;
    if (!q_prime) continue;
    Poly g = pgcd(psub(frob_pow(deg / q), x, ell), f, ell);
    if (g.size() != 1) return false;
  }
  return true;
}

const std::map<std::pair<std::uint64_t, unsigned>, Poly>& default_moduli() {
  static const std::map<std::pair<std::uint64_t, unsigned>, Poly> table = {
      {{2, 2}, {1, 1, 1}},        // t^2+t+1
      {{2, 3}, {1, 1, 0, 1}},     // t^3+t+1
      {{3, 2}, {1, 0, 1}},        // t^2+1, so t = sqrt(-1)
      {{3, 3}, {2, 2, 0, 1}},     // t^3+2t+2 = t^3-t-1
      {{5, 2}, {2, 0, 1}},        // t^2+2
      {{7, 2}, {1, 0, 1}},        // t^2+1
      {{7, 3}, {5, 0, 0, 1}},     // t^3+5 = t^3-2
  };
  return table;
}

Poly find_irreducible(std::uint64_t ell, unsigned k) {
  // lexicographically smallest monic irreducible of degree k
  std::uint64_t count = 1;
  for (unsigned i = 0; i < k; ++i) count *= ell;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly f(k + 1, 0);
    std::uint64_t v = idx;
    for (unsigned i = 0; i < k; ++i) {
      f[i] = v % ell;
      v /= ell;
    }
    f[k] = 1;
    if (poly_irreducible(f, ell)) return f;
  }
  throw NoRoot("no irreducible polynomial found");  // unreachable
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t FieldSpec::order() const {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) q *= ell;
  return q;
}

bool FieldSpec::operator==(const FieldSpec& o) const {
  return ell == o.ell && k == o.k && modulus == o.modulus;
}

FieldPtr make_field(std::uint64_t ell, unsigned k, std::vector<std::uint64_t> modulus) {
  if (!is_prime(ell)) throw InvalidInput("field characteristic must be prime");
  if (k == 0) throw InvalidInput("extension degree must be positive");
  auto spec = std::make_shared<FieldSpec>();
  spec->ell = ell;
  spec->k = k;
  if (k == 1) {
    if (!modulus.empty()) throw InvalidInput("modulus only allowed for k > 1");
  } else {
    if (modulus.empty()) {
      auto it = default_moduli().find({ell, k});
      modulus = (it != default_moduli().end()) ? it->second : find_irreducible(ell, k);
    }
    if (modulus.size() != k + 1 || modulus.back() != 1)
      throw InvalidInput("modulus must be monic of degree k");
    for (auto& c : modulus) c %= ell;
    if (modulus.back() != 1) throw InvalidInput("modulus must be monic of degree k");
    if (!poly_irreducible(modulus, ell)) throw InvalidInput("modulus is reducible");
    spec->modulus = modulus;
  }
  return spec;
}

Fq::Fq(FieldPtr spec, std::vector<std::uint64_t> coeffs)
    : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {
  coeffs_.resize(spec_->k, 0);
  for (auto& c : coeffs_) c %= spec_->ell;
}

void Fq::check_same(const Fq& o) const {
  if (!spec_ || !o.spec_) throw InvalidInput("uninitialized field element");
  if (spec_ != o.spec_ && *spec_ != *o.spec_)
    throw ContextMismatch("field elements from different fields");
}

Fq Fq::zero(const FieldPtr& f) { return Fq(f, {}); }
Fq Fq::one(const FieldPtr& f) { return Fq(f, {1}); }

Fq Fq::from_int(const FieldPtr& f, long long v) {
  long long r = v % static_cast<long long>(f->ell);
  if (r < 0) r += static_cast<long long>(f->ell);
  return Fq(f, {static_cast<std::uint64_t>(r)});
}

Fq Fq::from_coeffs(const FieldPtr& f, std::vector<std::uint64_t> c) {
  if (c.size() > f->k) {
    Poly p(std::move(c));
    for (auto& v : p) v %= f->ell;
    if (f->k == 1) {
      trim(p);
      if (p.size() > 1) throw InvalidInput("coefficient vector too long for prime field");
      return Fq(f, std::move(p));
    }
    p = pmod2(std::move(p), f->modulus, f->ell);
    return Fq(f, std::move(p));
  }
  return Fq(f, std::move(c));
}

Fq Fq::from_index(const FieldPtr& f, std::uint64_t idx) {
  std::vector<std::uint64_t> c(f->k, 0);
  for (unsigned i = 0; i < f->k; ++i) {
    c[i] = idx % f->ell;
    idx /= f->ell;
  }
  if (idx != 0) throw InvalidInput("index exceeds field order");
  return Fq(f, std::move(c));
}

std::uint64_t Fq::index() const {
  std::uint64_t r = 0;
  for (size_t i = coeffs_.size(); i-- > 0;) r = r * spec_->ell + coeffs_[i];
  return r;
}

bool Fq::is_zero() const {
  for (auto c : coeffs_)
    if (c) return false;
  return true;
}

bool Fq::is_one() const {
  if (coeffs_.empty() || coeffs_[0] != 1) return false;
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i]) return false;
  return true;
}

Fq Fq::operator+(const Fq& o) const {
  check_same(o);
  std::vector<std::uint64_t> c(spec_->k);
  for (unsigned i = 0; i < spec_->k; ++i) c[i] = (coeffs_[i] + o.coeffs_[i]) % spec_->ell;
  return Fq(spec_, std::move(c));
}

Fq Fq::operator-(const Fq& o) const {
  check_same(o);
  std::vector<std::uint64_t> c(spec_->k);
  for (unsigned i = 0; i < spec_->k; ++i)
    c[i] = (coeffs_[i] + spec_->ell - o.coeffs_[i]) % spec_->ell;
  return Fq(spec_, std::move(c));
}

Fq Fq::operator-() const {
  if (!spec_) throw InvalidInput("uninitialized field element");
  std::vector<std::uint64_t> c(spec_->k);
  for (unsigned i = 0; i < spec_->k; ++i) c[i] = (spec_->ell - coeffs_[i]) % spec_->ell;
  return Fq(spec_, std::move(c));
}

Fq Fq::operator*(const Fq& o) const {
  check_same(o);
  if (spec_->k == 1) return Fq(spec_, {(coeffs_[0] * o.coeffs_[0]) % spec_->ell});
  Poly p = pmulmod(coeffs_, o.coeffs_, spec_->modulus, spec_->ell);
  return Fq(spec_, std::move(p));
}

Fq Fq::inv() const {
  if (!spec_) throw InvalidInput("uninitialized field element");
  if (is_zero()) throw ZeroDenominator("inverse of zero field element");
  if (spec_->k == 1) return Fq(spec_, {mod_inv(coeffs_[0], spec_->ell)});
  Poly p = pinvmod(coeffs_, spec_->modulus, spec_->ell);
  return Fq(spec_, std::move(p));
}

Fq Fq::pow(std::uint64_t e) const {
  if (!spec_) throw InvalidInput("uninitialized field element");
  Fq r = Fq::one(spec_);
  Fq b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

bool Fq::operator==(const Fq& o) const {
  check_same(o);
  return coeffs_ == o.coeffs_;
}

Fq primitive_pth_root(const FieldPtr& f, std::uint64_t p) {
  if (!is_prime(p)) throw InvalidInput("p must be prime");
  if (p == f->ell) throw InvalidInput("p equals the field characteristic");
  std::uint64_t q = f->order();
  if ((q - 1) % p != 0) throw NoRoot("p does not divide the multiplicative order");
  std::uint64_t e = (q - 1) / p;
  for (std::uint64_t idx = 2; idx < q; ++idx) {
    Fq g = Fq::from_index(f, idx);
    Fq rho = g.pow(e);
    if (!rho.is_one()) return rho;
  }
  throw NoRoot("no primitive p-th root found");  // unreachable for valid inputs
}

std::optional<Fq> sqrt(const Fq& a) {
  const FieldPtr& f = a.field();
  if (a.is_zero()) return a;
  // Exhaustive; fields here are tiny.  Smaller index of the two roots wins.
  std::uint64_t q = f->order();
  for (std::uint64_t idx = 0; idx < q; ++idx) {
    Fq s = Fq::from_index(f, idx);
    if (s * s == a) return s;
  }
  return std::nullopt;
}

Fq pth_root_frobenius(const Fq& a, std::uint64_t p) {
  const FieldPtr& f = a.field();
  if (f->ell != p) throw InvalidInput("pth_root_frobenius requires characteristic p");
  // Frobenius x -> x^p is bijective; its inverse is x -> x^{ell^{k-1}}.
  std::uint64_t e = 1;
  for (unsigned i = 0; i + 1 < f->k; ++i) e *= f->ell;
  return a.pow(e);
}

}  // namespace symbalg
