#pragma once

#include <vector>

#include "galdef/poly.hpp"

namespace galdef {

/// Lift a coprime monic factorization through the nilpotent maximal ideal.
///
/// P is monic over an Artinian local ring R; residual_factors are pairwise
/// coprime monic polynomials over the residue field whose product is the
/// reduction of P. Returns the unique monic factors over R that reduce to the
/// given ones and multiply to P.
std::vector<Poly> hensel_factor(const Poly& P, const std::vector<Poly>& residual_factors);

} // namespace galdef
