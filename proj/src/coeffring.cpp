#include "symbalg/coeffring.hpp"

namespace symbalg {

CoeffPoly::CoeffPoly(FieldPtr base, unsigned nvars)
    : base_(std::move(base)), nvars_(nvars) {}

CoeffPoly CoeffPoly::zero(const FieldPtr& base, unsigned nvars) {
  return CoeffPoly(base, nvars);
}

CoeffPoly CoeffPoly::constant(const FieldPtr& base, unsigned nvars, const Fq& c) {
  CoeffPoly p(base, nvars);
  p.add_term(ExpVec(nvars, 0), c);
  return p;
}

CoeffPoly CoeffPoly::monomial(const FieldPtr& base, ExpVec exp, const Fq& c) {
  CoeffPoly p(base, static_cast<unsigned>(exp.size()));
  p.add_term(exp, c);
  return p;
}

void CoeffPoly::check_same(const CoeffPoly& o) const {
  if (!base_ || !o.base_) throw InvalidInput("uninitialized polynomial");
  if (nvars_ != o.nvars_ || (base_ != o.base_ && *base_ != *o.base_))
    throw ContextMismatch("polynomials from different coefficient rings");
}

void CoeffPoly::add_term(const ExpVec& exp, const Fq& c) {
  if (exp.size() != nvars_) throw ContextMismatch("exponent vector length mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exp, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CoeffPoly CoeffPoly::operator+(const CoeffPoly& o) const {
  check_same(o);
  CoeffPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

CoeffPoly CoeffPoly::operator-(const CoeffPoly& o) const {
  check_same(o);
  CoeffPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

CoeffPoly CoeffPoly::operator-() const {
  CoeffPoly r(base_, nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

CoeffPoly CoeffPoly::operator*(const CoeffPoly& o) const {
  check_same(o);
  CoeffPoly r(base_, nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      ExpVec e(nvars_);
      for (unsigned i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

CoeffPoly CoeffPoly::scaled(const Fq& c) const {
  CoeffPoly r(base_, nvars_);
  if (c.is_zero()) return r;
  for (const auto& [e, t] : terms_) {
    Fq v = t * c;
    if (!v.is_zero()) r.terms_.emplace(e, v);
  }
  return r;
}

CoeffPoly CoeffPoly::shifted(const ExpVec& delta) const {
  if (delta.size() != nvars_) throw ContextMismatch("shift vector length mismatch");
  CoeffPoly r(base_, nvars_);
  for (const auto& [e, c] : terms_) {
    ExpVec ne(nvars_);
    for (unsigned i = 0; i < nvars_; ++i) ne[i] = e[i] + delta[i];
    r.terms_.emplace(ne, c);
  }
  return r;
}

std::pair<ExpVec, Fq> CoeffPoly::leading() const {
  if (terms_.empty()) throw ZeroElement("leading term of zero polynomial");
  auto it = terms_.rbegin();
  return {it->first, it->second};
}

CoeffPoly CoeffPoly::divide_exact(const CoeffPoly& d) const {
  check_same(d);
  if (d.is_zero()) throw ZeroDenominator("division by zero polynomial");
  CoeffPoly rem = *this;
  CoeffPoly q(base_, nvars_);
  auto [de, dc] = d.leading();
  Fq dci = dc.inv();
  // Each step produces one term of the quotient; with an exact quotient the
  // loop runs exactly term_count(quotient) times.
  size_t guard = 4 * (term_count() + d.term_count()) + 16;
  while (!rem.is_zero()) {
    if (guard-- == 0) throw Error("inexact polynomial division");
    auto [re, rc] = rem.leading();
    ExpVec qe(nvars_);
    for (unsigned i = 0; i < nvars_; ++i) qe[i] = re[i] - de[i];
    Fq qc = rc * dci;
    CoeffPoly qt = CoeffPoly::monomial(base_, qe, qc);
    q = q + qt;
    rem = rem - qt * d;
  }
  return q;
}

Fq CoeffPoly::specialize(const std::vector<Fq>& point) const {
  if (point.size() != nvars_) throw ContextMismatch("specialization point length mismatch");
  Fq acc = Fq::zero(base_);
  for (const auto& [e, c] : terms_) {
    for (unsigned i = 0; i < nvars_; ++i)
      if (e[i] < 0 && point[i].is_zero())
        throw ZeroDenominator("negative exponent at a zero value");
    Fq v = c;
    for (unsigned i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (point[i].is_zero()) {
        v = Fq::zero(base_);
        break;
      }
      Fq b = e[i] > 0 ? point[i] : point[i].inv();
      v = v * b.pow(static_cast<std::uint64_t>(e[i] > 0 ? e[i] : -e[i]));
    }
    acc = acc + v;
  }
  return acc;
}

bool CoeffPoly::operator==(const CoeffPoly& o) const {
  check_same(o);
  return terms_ == o.terms_;
}

}  // namespace symbalg
