#pragma once

#include "symbalg/charcoeffs.hpp"

namespace symbalg {
namespace gallery {

/// The maximal trace-vanishing space F x_1 + F[x_1] y_1 + F[x_1,y_1] x_2 +
/// ... as a monomial basis; dimension (p^{2m}-1)/(p-1).  Root-of-unity
/// contexts only.
Subspace max_space(const CtxPtr& ctx);

/// The degree-3 Artin-Schreier space F[x]y + F(x^2 - w x) over a base field
/// containing w with w^2 = -1: passes the degree-2 power check but fails the
/// full Kummer condition at degree 1.
Subspace example_p3(const CtxPtr& ctx);

}  // namespace gallery
}  // namespace symbalg
